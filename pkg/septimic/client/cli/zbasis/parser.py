from septimic.client.parsergroups import create_form_opts


def add_subparser(subparsers):
    sp = subparsers.add_parser(
        'zbasis',
        help='Print the semi-invariants z_2 ... z_d.',
        description='Print Cayley\'s semi-invariants z_2 ... z_d in t and x1 ... xd.',
        parents=[create_form_opts()])

    sp.add_argument(
        '--with-d', action='store_true', dest='with_d',
        help='Also print the derivation D on t, x1 and every z_i.')
