from septimic.client.parsergroups import create_manifest_opts
from septimic.verify import CHECKS


def add_subparser(subparsers):
    sp = subparsers.add_parser(
        'verify',
        help='Replay property checks over stored results.',
        description=(
            'Check every stored polynomial: d1 annihilates its x-expansion, '
            'the expansion divides exactly, D and D2 agree, invariants are '
            'fixed by random unimodular matrices and gradings match.'),
        parents=[create_manifest_opts()])

    sp.add_argument(
        '--checks', default=','.join(CHECKS),
        help='Comma separated checks from {}. Default all.'.format(', '.join(CHECKS)))

    sp.add_argument(
        '--max-degree', metavar='N', type=int, dest='max_degree',
        help='Check entries up to degree N. Default limits depend on the check.')
