""" Progress messages for long computations.
"""

import sys


def info(message, verbose=True):
    """ Print an informational line to stderr when verbose is set.
    """
    if verbose:
        print('INFO: {}'.format(message), file=sys.stderr)
