""" Entry point for the "zbasis" subcommand.
"""

from septimic.derivations import scaled_dz_rules
from septimic.forms import check_form_degree, z_polynomial
from septimic.poly import render


def main(args):
    """ Print z_2 ... z_d and, optionally, D on the mixed generators.
    """
    try:
        d = check_form_degree(args.d)
    except ValueError as e:
        print('ERROR: {}'.format(e))
        return 1

    for i in range(2, d + 1):
        print('z{} = {}'.format(i, render(z_polynomial(i))))

    if args.with_d:
        print()
        rules = scaled_dz_rules(d)
        for name in ['t', 'x1'] + ['z{}'.format(i) for i in range(2, d + 1)]:
            print('D({}) = ({})/t'.format(name, render(rules[name])))
    return 0
