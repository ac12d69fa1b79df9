""" Entry point for the "st" subcommand.
"""

from septimic.search import run_recipe
from septimic.util.cache import open_cache


def main(args):
    """ Evaluate a recipe and persist the results.
    """
    try:
        with open(args.recipe, encoding='utf-8') as f:
            script = f.read()
        manifest = run_recipe(script, args.d, args.target, args.vanishing_check,
                              open_cache(args.cache), progress=args.verbose)
        path = manifest.persist(args.out)
    except (KeyError, OSError, ValueError) as e:
        print('ERROR: {}'.format(e))
        return 1

    print(manifest.table())
    print('Wrote {} entries to {}'.format(len(manifest), path))
    return 0
