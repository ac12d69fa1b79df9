from septimic.client.parsergroups import create_manifest_opts


def add_subparser(subparsers):
    sp = subparsers.add_parser(
        'table',
        help='Print the generators stored in a manifest.',
        description='Print name, grading, denominator, term count and construction.',
        parents=[create_manifest_opts()])

    sp.add_argument(
        '--invariants', action='store_true',
        help='Only the invariant generators.')
