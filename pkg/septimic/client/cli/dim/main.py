""" Entry point for the "dim" subcommand.
"""

from prettytable import PrettyTable

from septimic.dimension import dim_invariants


def main(args):
    """ Print dim I_i for every requested degree.
    """
    try:
        dims = [(i, dim_invariants(args.d, i, args.oracle)) for i in args.i]
    except ValueError as e:
        print('ERROR: {}'.format(e))
        return 1

    if len(dims) == 1:
        print(dims[0][1])
        return 0

    pt = PrettyTable()
    pt.field_names = ['i', 'dim I']
    pt.align['i'] = 'r'
    pt.align['dim I'] = 'r'
    for row in dims:
        pt.add_row(row)
    print(pt)
    return 0
