from septimic.client.parsergroups import create_manifest_opts


def add_subparser(subparsers):
    sp = subparsers.add_parser(
        'stats',
        help='Compare the size of stored polynomials in z and in x.',
        description=(
            'For each entry print the terms of its z-numerator, of its '
            'x-expansion and of the covariant it leads.'),
        parents=[create_manifest_opts()])

    sp.add_argument(
        '--name', metavar='NAME', nargs='+', required=True,
        help='Entries to measure.')

    sp.add_argument(
        '--no-covariant', action='store_true', dest='no_covariant',
        help='Skip the reconstruction of the covariant.')
