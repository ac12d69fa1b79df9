""" Entry point for the "table" subcommand.
"""

from collections import OrderedDict

from septimic.DeltaLedger import DeltaLedger
from septimic.Manifest import Manifest


def main(args):
    """ Print the generator table and, when stored, the delta ledger.
    """
    try:
        manifest = Manifest.load(args.manifest, values=False)
    except (KeyError, OSError, ValueError) as e:
        print('ERROR: {}'.format(e))
        return 1

    if args.invariants:
        keep = {name for name, _ in manifest.invariant_generators()}
        manifest.records = OrderedDict(
            (name, r) for name, r in manifest.records.items() if name in keep)

    print(manifest.table())
    if 'ledger' in manifest.extra:
        print(DeltaLedger.from_dict(manifest.extra['ledger']).table())
    return 0
