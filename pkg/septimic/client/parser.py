""" septimic client command line arguments.
"""

import argparse
import sys

from septimic import __version__
from septimic.client.cli import build_out_subparsers


def print_version():
    class printVersion(argparse.Action):
        def __call__(self, parser, args, values, option_string=None):
            print(__version__)
            sys.exit(0)
    return printVersion


def create_client_parser():
    """ Create parser for client program.

    Returns:
        Reference to the parser. Parse main command line args with
            parser.parse_args().
    """
    parser = argparse.ArgumentParser(
        prog='septimic',
        description=(
            'Semitransvectants and invariants of binary forms. Run '
            '"septimic" with no arguments to perform first-time setup.'))

    parser.add_argument(
        '--config',
        help='Select custom configuration file.')

    parser.add_argument(
        '--cache', metavar='DIR',
        help='Override the cache directory in config. "off" disables caching.')

    parser.add_argument(
        '--jobs', metavar='K', type=int,
        help='Worker processes for candidate evaluation.')

    parser.add_argument(
        '--seed', type=int,
        help='Seed for random evaluation points and matrices.')

    parser.add_argument(
        '--screen-points', metavar='N', type=int, dest='screen_points',
        help='Evaluation points beyond the number of products in a screen.')

    parser.add_argument(
        '--no-check', dest='vanishing_check', action='store_const', const='off',
        help='Skip the x1 vanishing check in semitransvectants.')

    parser.add_argument(
        '-v', '--verbose', action='store_true',
        help='Print progress to stderr.')

    parser.add_argument(
        '--version', nargs=0, help='Print the version of septimic and exit.',
        action=print_version())

    # begin subparsers
    subparsers = parser.add_subparsers(
        metavar='command',
        dest='command',
        description='Each has its own [-h, --help] statement.')

    build_out_subparsers(subparsers)

    return parser
