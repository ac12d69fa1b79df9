""" Argument groups shared between subcommands.
"""

import argparse


def create_form_opts():
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group(
        'form options',
        'The binary form being studied.')
    group.add_argument(
        '--d', metavar='D', type=int, default=7,
        help='Degree of the binary form, 2 to 7. Default 7.')

    return parser


def create_manifest_opts():
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group(
        'manifest options',
        'Read results stored by "st" or "discover".')
    group.add_argument(
        '--manifest', metavar='M', required=True,
        help='Manifest file, or the directory that holds manifest.yaml.')

    return parser


def create_output_opts():
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group(
        'output options',
        'Where polynomials and the manifest are written.')
    group.add_argument(
        '--out', metavar='DIR', required=True,
        help='Output directory; created if missing.')

    return parser
