from argparse import RawDescriptionHelpFormatter

from septimic.client.parsergroups import create_form_opts, create_output_opts


def add_subparser(subparsers):
    desc = """
    Evaluate a recipe: one named construction per line, such as

        dv_1 = [t,t]^4
        sh_8 = [t,tr_1*dv_1]^7     # ord=0

    Every entry is written to DIR/polys and described in DIR/manifest.yaml.
    A bracket without "^r" needs an "# ord=K" annotation to solve r.
    """.splitlines()
    desc = '\n'.join([x.strip() for x in desc])

    sp = subparsers.add_parser(
        'st',
        help='Evaluate a recipe of semitransvectants.',
        description=desc,
        formatter_class=RawDescriptionHelpFormatter,
        parents=[create_form_opts(), create_output_opts()])

    sp.add_argument(
        '--recipe', metavar='FILE', required=True,
        help='Recipe file.')

    sp.add_argument(
        '--target', metavar='NAME',
        help='Evaluate only the lines NAME depends on.')
