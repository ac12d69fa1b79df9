""" Entry point for the "stats" subcommand.
"""

from prettytable import PrettyTable

from septimic.Covariant import kappa_inv
from septimic.forms import x_expand
from septimic.Manifest import Manifest


def main(args):
    """ Print term counts for the named entries.
    """
    pt = PrettyTable()
    pt.field_names = ['name', 'z terms', 'x terms', 'covariant terms', 'ratio x/z']
    pt.align['name'] = 'l'

    try:
        manifest = Manifest.load(args.manifest, values=False)
        for name in args.name:
            value = manifest.load_value(name)
            expanded = x_expand(value, manifest.d)
            covariant = '-' if args.no_covariant else len(kappa_inv(expanded, manifest.d))
            pt.add_row([name, len(value.num), len(expanded), covariant,
                        '{:.1f}'.format(len(expanded) / len(value.num))])
    except (KeyError, OSError, ValueError) as e:
        print('ERROR: {}'.format(e))
        return 1

    print(pt)
    return 0
