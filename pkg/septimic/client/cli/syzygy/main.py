""" Entry point for the "syzygy" subcommand.
"""

from septimic.Manifest import Manifest
from septimic.syzygy import EvaluationScreen, compare_printed, parse_relation, syzygy_space


def read_relations(path):
    """ Non-blank, non-comment lines of a relation file.
    """
    with open(path, encoding='utf-8') as f:
        return [line.strip() for line in f if line.strip() and not line.lstrip().startswith('#')]


def report_printed(manifest, path, seed):
    values = {name: manifest.load_value(name) for name in manifest.records}
    failed = 0
    for k, text in enumerate(read_relations(path), 1):
        result = compare_printed(parse_relation(text), values, manifest.d, seed)
        status = 'vanishes' if result['vanishes'] else 'does not vanish'
        print('relation {}: {}'.format(k, status))
        if result['factors'] is not None:
            pairs = zip(result['support'], result['factors'])
            print('  rescaling: {}'.format(', '.join('{} x {}'.format(m, f) for m, f in pairs)))
        elif not result['vanishes']:
            print('  no relation among {} products'.format(len(result['support'])))
        failed += not result['vanishes']
    return failed


def main(args):
    """ Print dim S_N and its relations, or check printed relations.
    """
    if args.degree is None and not args.printed:
        print('ERROR: Specify --degree or --printed.')
        return 1

    failed = 0
    try:
        manifest = Manifest.load(args.manifest)

        if args.printed:
            failed = report_printed(manifest, args.printed, args.seed)
            if args.degree is None:
                return 1 if failed else 0

        generators = manifest.invariant_generators()
        values = {name: manifest.load_value(name) for name, _ in generators}
        screen = EvaluationScreen(values, manifest.d, args.seed)
        record = syzygy_space(generators, values, args.degree, manifest.d, screen,
                              extra_points=args.screen_points,
                              certify_relations=args.certify, progress=args.verbose)
    except (ArithmeticError, KeyError, OSError, ValueError) as e:
        print('ERROR: {}'.format(e))
        return 1

    print('products: {}'.format(len(record.labels)))
    print('dim S_{}: {} ({})'.format(args.degree, record.dim, record.status))
    if record.status == 'certified':
        for k in range(record.dim):
            print(record.relation_text(k))
    return 1 if failed else 0
