""" main entry point for septimic client program.
"""

import importlib
import os
import sys

import argcomplete

import septimic.client.parser
from septimic.config import (
    add_config_args, do_first_time_setup, normalize_config_args, user_conf)


def main():

    parser = septimic.client.parser.create_client_parser()
    argcomplete.autocomplete(parser)
    args = parser.parse_args()

    if not os.path.exists(user_conf) and not args.config:
        print('INFO: Running first time setup')
        do_first_time_setup()
        if not args.command:
            print('Setup complete. User config created in {}'.format(
                user_conf))
            print('Run "septimic -h" to see usage help.')
            sys.exit(0)
    elif not args.config:
        args.config = user_conf

    if not args.command:
        parser.print_help()
        sys.exit(1)

    # fill in args with values from config.
    try:
        args = add_config_args(args, args.config)
        args = normalize_config_args(args)
    except (FileNotFoundError, KeyError, ValueError) as e:
        print('ERROR: {}'.format(e))
        sys.exit(1)

    subcommand = importlib.import_module('septimic.client.cli.{}.main'.format(args.command))
    subcommand = getattr(subcommand, 'main')

    try:
        status = subcommand(args)
    except KeyboardInterrupt:
        print('Interrupt caught - closing.')
        sys.exit(1)

    sys.exit(status or 0)


if __name__ == '__main__':
    main()
