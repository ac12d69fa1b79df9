""" Manifest class
"""

import hashlib
import os
from collections import OrderedDict

import yaml
from prettytable import PrettyTable

from septimic.forms import grading_of
from septimic.poly import parse, render
from septimic.recipe import parse_expr
from septimic.TFraction import TFraction


MANIFEST_NAME = 'manifest.yaml'
POLY_DIR = 'polys'

FIELDS = ('name', 'degree', 'weight', 'order', 's', 'terms', 'construction', 'sha256', 'path')


class ManifestError(ValueError):
    """ Raised when stored results disagree with their manifest.
    """


def content_hash(num):
    """ sha256 of the canonical text of a numerator.
    """
    return hashlib.sha256(render(num).encode('utf-8')).hexdigest()


def poly_file_text(num):
    """ Canonical text with one term per line.
    """
    text = render(num)
    return text.replace(' + ', '\n+ ').replace(' - ', '\n- ') + '\n'


class Manifest:
    """ Record of every stored generator with its grading and provenance.

    Args:
        d: Degree of the binary form.
        records: Sequence of per-entry dicts in FIELDS order.
        extra: Additional top-level sections (ledger, syzygies) written
            after the entries.
    """
    def __init__(self, d, records=None, extra=None):
        self.d = d
        self.records = OrderedDict((r['name'], r) for r in (records or []))
        self.extra = OrderedDict(extra or {})
        self.values = {}
        self.root = None

    @classmethod
    def from_table(cls, table, names=None):
        """ Build a manifest from a GeneratorTable, skipping t.
        """
        manifest = cls(table.d)
        for entry in table:
            if entry.name == 't' or (names is not None and entry.name not in names):
                continue
            manifest.add(entry.name, entry.value, entry.construction)
        return manifest

    def add(self, name, value, construction):
        grading = grading_of(value, self.d)
        record = OrderedDict([
            ('name', name),
            ('degree', grading.degree),
            ('weight', grading.weight),
            ('order', grading.order),
            ('s', value.s),
            ('terms', len(value.num)),
            ('construction', construction.text()),
            ('sha256', content_hash(value.num)),
            ('path', '{}/{}.poly'.format(POLY_DIR, name)),
        ])
        self.records[name] = record
        self.values[name] = value
        return record

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records.values())

    def record(self, name):
        try:
            return self.records[name]
        except KeyError:
            raise KeyError('Manifest has no entry "{}".'.format(name))

    def to_dict(self):
        doc = OrderedDict()
        doc['d'] = self.d
        doc['count'] = len(self.records)
        doc['entries'] = [dict((k, r[k]) for k in FIELDS) for r in self.records.values()]
        doc.update(self.extra)
        return doc

    def dumps(self):
        """ The manifest document, byte-identical for identical contents.
        """
        return yaml.safe_dump(_plain(self.to_dict()), sort_keys=False,
                              default_flow_style=False, allow_unicode=True)

    def persist(self, out_dir):
        """ Write every polynomial and the manifest under out_dir.

        Returns:
            Path of the manifest file.
        """
        os.makedirs(os.path.join(out_dir, POLY_DIR), exist_ok=True)
        for name, record in self.records.items():
            value = self.values[name]
            with open(os.path.join(out_dir, record['path']), 'w', encoding='utf-8') as f:
                f.write(poly_file_text(value.num))

        path = os.path.join(out_dir, MANIFEST_NAME)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(self.dumps())
        self.root = out_dir
        return path

    @classmethod
    def load(cls, path, values=True):
        """ Read a manifest and, optionally, every stored polynomial.

        Args:
            path: Manifest file, or the directory holding it.
            values: Also load and verify the polynomials.

        Raises:
            FileNotFoundError: Missing manifest or polynomial file.
            ManifestError: Malformed manifest or a hash mismatch.
        """
        if os.path.isdir(path):
            path = os.path.join(path, MANIFEST_NAME)
        if not os.path.exists(path):
            raise FileNotFoundError('Manifest {} does not exist.'.format(path))

        with open(path, encoding='utf-8') as f:
            doc = yaml.safe_load(f)

        if not isinstance(doc, dict) or 'd' not in doc or 'entries' not in doc:
            raise ManifestError('{} is not a manifest.'.format(path))

        records = []
        for r in doc['entries'] or []:
            missing = [k for k in FIELDS if k not in r]
            if missing:
                raise ManifestError('Entry {} lacks {}.'.format(r.get('name'), ', '.join(missing)))
            records.append(OrderedDict((k, r[k]) for k in FIELDS))

        extra = OrderedDict((k, v) for k, v in doc.items() if k not in ('d', 'count', 'entries'))
        manifest = cls(doc['d'], records, extra)
        manifest.root = os.path.dirname(os.path.abspath(path))

        if values:
            for name in manifest.records:
                manifest.load_value(name)
        return manifest

    def load_value(self, name):
        """ Load one stored polynomial, checking its hash.

        Raises:
            ManifestError: The stored text does not hash to the manifest.
        """
        if name in self.values:
            return self.values[name]

        record = self.record(name)
        path = os.path.join(self.root, record['path'])
        if not os.path.exists(path):
            raise FileNotFoundError('Polynomial file {} does not exist.'.format(path))
        with open(path, encoding='utf-8') as f:
            num = parse(f.read())

        if content_hash(num) != record['sha256']:
            raise ManifestError('Hash mismatch for {} in {}.'.format(name, path))

        value = TFraction(num, record['s'])
        self.values[name] = value
        return value

    def constructions(self):
        """ Map of name to parsed construction expression.
        """
        return OrderedDict((name, parse_expr(r['construction'])) for name, r in self.records.items())

    def invariants(self):
        """ Names of the order-zero entries.
        """
        return [name for name, r in self.records.items() if r['order'] == 0]

    def invariant_generators(self):
        """ (name, degree) of the invariant generators.

        A discovery manifest lists them under "invariants"; otherwise every
        order-zero entry counts, once per distinct stored polynomial.
        """
        names = self.extra.get('invariants') or self.invariants()
        seen = set()
        out = []
        for name in names:
            r = self.record(name)
            key = (r['sha256'], r['s'])
            if key in seen:
                continue
            seen.add(key)
            out.append((name, r['degree']))
        return out

    def table(self):
        """ The entries as a text table.
        """
        pt = PrettyTable()
        pt.field_names = ['name', 'degree', 'weight', 'order', 's', 'terms', 'construction']
        pt.align['name'] = 'l'
        pt.align['construction'] = 'l'
        for r in self.records.values():
            pt.add_row([r[k] for k in pt.field_names])
        return str(pt)


def _plain(obj):
    """ OrderedDicts to dicts so safe_dump accepts them; order is kept.
    """
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj
