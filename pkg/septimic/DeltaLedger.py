""" DeltaLedger class
"""

from prettytable import PrettyTable

from septimic.dimension import dim_invariants, sigma_count


class LedgerError(ValueError):
    """ Raised when the counting no longer adds up.
    """


class DeltaLedger:
    """ Per-degree record of how many new invariant generators appear.

    For every processed degree i the ledger keeps dim I_i, the number
    sigma_i of products of lower generators, the syzygy dimension dim S_i
    and delta_i = dim I_i - (sigma_i - dim S_i).
    """
    def __init__(self, d, deltas=None):
        self.d = d
        self.deltas = dict(deltas or {})
        self.rows = {}

    @classmethod
    def from_dict(cls, doc):
        """ Rebuild a ledger written by to_dict.
        """
        ledger = cls(doc['d'])
        for row in doc.get('degrees', []):
            i = row['degree']
            ledger.deltas[i] = row['delta']
            ledger.rows[i] = {k: row[k] for k in ('dim_i', 'sigma', 'dim_s', 'delta')}
        return ledger

    def account(self, i, dim_s):
        """ Record degree i and return its delta.

        Args:
            i: Degree being processed. Every lower degree must already be
                accounted or preset.
            dim_s: Dimension of the syzygy space among the degree-i
                products.

        Raises:
            LedgerError: delta_i would be negative, or dim_s exceeds
                sigma_i.
        """
        dim_i = dim_invariants(self.d, i)
        sigma = sigma_count(self, i)

        if dim_s < 0 or dim_s > sigma:
            raise LedgerError('Degree {}: {} syzygies among only {} products.'.format(
                i, dim_s, sigma))

        delta = dim_i - (sigma - dim_s)
        if delta < 0:
            raise LedgerError(
                'Degree {}: dim I = {} but the {} products span {}; '
                'the invariants found so far are inconsistent.'.format(
                    i, dim_i, sigma, sigma - dim_s))

        self.deltas[i] = delta
        self.rows[i] = {'dim_i': dim_i, 'sigma': sigma, 'dim_s': dim_s, 'delta': delta}
        return delta

    def total(self):
        """ Running n_d, the number of generators counted so far.
        """
        return sum(self.deltas.values())

    def degrees(self):
        return sorted(self.rows)

    def table(self):
        """ The ledger as a text table.
        """
        pt = PrettyTable()
        pt.field_names = ['degree', 'dim I', 'sigma', 'dim S', 'delta']
        for name in pt.field_names:
            pt.align[name] = 'r'
        for i in self.degrees():
            row = self.rows[i]
            pt.add_row([i, row['dim_i'], row['sigma'], row['dim_s'], row['delta']])
        return str(pt)

    def to_dict(self):
        return {
            'd': self.d,
            'total': self.total(),
            'degrees': [dict(degree=i, **self.rows[i]) for i in self.degrees()],
        }


def delta_account(ledger, i, dim_s):
    """ Compute delta_i, record it in the ledger and return it.
    """
    return ledger.account(i, dim_s)
