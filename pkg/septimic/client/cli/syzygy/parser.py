from septimic.client.parsergroups import create_manifest_opts


def add_subparser(subparsers):
    sp = subparsers.add_parser(
        'syzygy',
        help='Linear relations among products of stored invariants.',
        description=(
            'Compute the syzygy space S_N among the degree-N products of the '
            'invariants in a manifest, or test printed relations against them.'),
        parents=[create_manifest_opts()])

    sp.add_argument(
        '--degree', metavar='N', type=int,
        help='Degree of the products.')

    sp.add_argument(
        '--certify', action='store_true',
        help='Recompute the relations exactly and recombine them to zero.')

    sp.add_argument(
        '--printed', metavar='FILE',
        help='Relations to test, one per line, in the manifest\'s names.')
