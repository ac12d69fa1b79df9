from septimic.client.parsergroups import create_form_opts, create_output_opts


def add_subparser(subparsers):
    sp = subparsers.add_parser(
        'discover',
        help='Search for a complete system of invariants.',
        description=(
            'Extend the semi-invariant table degree by degree, choose '
            'invariants among semitransvectants of equal order and account '
            'for every degree in the delta ledger.'),
        parents=[create_form_opts(), create_output_opts()])

    sp.add_argument(
        '--max-degree', metavar='N', type=int, dest='max_degree',
        help='Construct invariants up to degree N. Defaults depend on D.')

    sp.add_argument(
        '--ledger-degree', metavar='N', type=int, dest='ledger_degree',
        help='Continue the counting, without construction, up to degree N.')

    sp.add_argument(
        '--sem-degree', metavar='N', type=int, dest='sem_degree',
        help='Build the semi-invariant table up to degree N only.')

    sp.add_argument(
        '--mode', choices=['halves', 'pairs'],
        help='Invariant candidates from degree n/2 pairs, or from all pairs.')

    sp.add_argument(
        '--prune', action='store_true',
        help='Skip candidates [t, f*g]^r that are reducible for small r.')

    sp.add_argument(
        '--screen-prime', action='store_true', dest='screen_prime',
        help='Rank semi-invariant candidates modulo a random prime.')

    sp.add_argument(
        '--certify-degree', metavar='N', type=int, default=22, dest='certify_degree',
        help='Certify syzygies exactly up to degree N. Default 22.')
