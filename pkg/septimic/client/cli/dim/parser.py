from septimic.client.parsergroups import create_form_opts


def add_subparser(subparsers):
    sp = subparsers.add_parser(
        'dim',
        help='Dimensions of the spaces of invariants.',
        description='Print dim I_i by the Cayley-Sylvester formula.',
        parents=[create_form_opts()])

    sp.add_argument(
        '--i', metavar='N', type=int, nargs='+', required=True,
        help='Degrees of the invariants. Several degrees print a table.')

    sp.add_argument(
        '--oracle', action='store_true',
        help='Count with Gaussian binomial coefficients instead of partitions.')
