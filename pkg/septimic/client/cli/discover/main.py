""" Entry point for the "discover" subcommand.
"""

from septimic.DeltaLedger import LedgerError
from septimic.search import complete_system
from septimic.util.cache import open_cache


def main(args):
    """ Run the generator search and persist the results.
    """
    try:
        table, ledger, manifest = complete_system(
            args.d, max_degree=args.max_degree, ledger_degree=args.ledger_degree,
            mode=args.mode, prune=args.prune, check=args.vanishing_check,
            cache=open_cache(args.cache), jobs=args.jobs, seed=args.seed,
            screen_points=args.screen_points, certify_degree=args.certify_degree,
            sem_degree=args.sem_degree, screen_search=args.screen_prime,
            verbose=args.verbose)
    except (KeyError, LedgerError, OSError, ValueError) as e:
        print('ERROR: {}'.format(e))
        return 1

    try:
        path = manifest.persist(args.out)
    except OSError as e:
        print('ERROR: {}'.format(e))
        return 1

    counts = table.counts()
    print('semi-invariant generators by degree: {}'.format(
        ', '.join('{}:{}'.format(i, counts[i]) for i in sorted(counts))))
    print(ledger.table())
    print('{} invariant generators counted; manifest in {}'.format(ledger.total(), path))
    return 0
