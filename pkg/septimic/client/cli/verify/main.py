""" Entry point for the "verify" subcommand.
"""

from septimic.Manifest import Manifest
from septimic.verify import failures, parse_checks, summary_table, verify_manifest


def main(args):
    """ Print a report and return 1 if any check failed.
    """
    try:
        checks = parse_checks(args.checks)
        manifest = Manifest.load(args.manifest)
        results = verify_manifest(manifest, checks, args.max_degree, args.seed)
    except (KeyError, OSError, ValueError) as e:
        print('ERROR: {}'.format(e))
        return 1

    print(summary_table(results))
    bad = failures(results)
    for r in bad:
        print('FAILED {} {}: {}'.format(r.check, r.name, r.detail))
    return 1 if bad else 0
