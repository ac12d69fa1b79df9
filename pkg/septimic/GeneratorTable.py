""" GeneratorTable class
"""

from collections import OrderedDict, namedtuple

from prettytable import PrettyTable

from septimic.Construction import T
from septimic.forms import check_form_degree, grading_of
from septimic.poly import gen
from septimic.TFraction import TFraction


Entry = namedtuple('Entry', 'name value grading construction')


class GeneratorTable:
    """ Irreducible semi-invariants by degree, plus the invariants among them.

    The leading coefficient t is always present as the single degree-1
    entry.
    """
    def __init__(self, d):
        self.d = check_form_degree(d)
        self.entries = OrderedDict()
        self.add('t', TFraction(gen('t')), T)

    def add(self, name, value, construction):
        """ Register a generator.

        Args:
            name: Unique name.
            value: Nonzero TFraction.
            construction: Expression the value was built from.

        Returns:
            The new Entry.

        Raises:
            ValueError: Duplicate name, zero value or negative order.
        """
        if name in self.entries:
            raise ValueError('Generator "{}" is already defined.'.format(name))
        value = TFraction.of(value)
        if not value:
            raise ValueError('Generator "{}" is zero.'.format(name))

        grading = grading_of(value, self.d)
        if grading.order < 0:
            raise ValueError('Generator "{}" has negative order {}.'.format(name, grading.order))

        entry = Entry(name, value, grading, construction)
        self.entries[name] = entry
        return entry

    def __contains__(self, name):
        return name in self.entries

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries.values())

    def entry(self, name):
        try:
            return self.entries[name]
        except KeyError:
            raise KeyError('Unknown generator "{}".'.format(name))

    def get(self, name):
        return self.entry(name).value

    def construction(self, name):
        return self.entry(name).construction

    def at_degree(self, i):
        return [e for e in self.entries.values() if e.grading.degree == i]

    def degrees(self):
        return sorted({e.grading.degree for e in self.entries.values()})

    def invariants(self):
        """ Entries of order zero.
        """
        return [e for e in self.entries.values() if e.grading.order == 0]

    def counts(self):
        """ Map of degree to number of generators.
        """
        counts = {}
        for e in self.entries.values():
            counts[e.grading.degree] = counts.get(e.grading.degree, 0) + 1
        return counts

    def table(self):
        """ The generators as a text table.
        """
        pt = PrettyTable()
        pt.field_names = ['name', 'degree', 'order', 's', 'terms', 'construction']
        pt.align['name'] = 'l'
        pt.align['construction'] = 'l'
        for e in self.entries.values():
            pt.add_row([e.name, e.grading.degree, e.grading.order, e.value.s,
                        len(e.value.num), e.construction.text()])
        return str(pt)
