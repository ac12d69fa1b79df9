""" Degree-by-degree search for generators.

Semi-invariant generators of degree i+1 are irreducible elements of the
span of the candidates [t, w]^r, w a degree-i product of generators.
Invariant generators of degree n are chosen among semitransvectants of
equal-order semi-invariants, modulo products of lower invariants, while a
DeltaLedger keeps the count honest.
"""

from collections import OrderedDict

from sympy.polys.domains import GF
from tqdm import tqdm

from septimic.Construction import ST, T, Evaluator, Gen, product
from septimic.DeltaLedger import DeltaLedger, LedgerError
from septimic.dimension import dim_invariants, dim_semiinvariants
from septimic.GeneratorTable import GeneratorTable
from septimic.linalg import coefficient_rows, greedy_independent
from septimic.Manifest import Manifest
from septimic.recipe import evaluate_recipe
from septimic.syzygy import EvaluationScreen, syzygy_space
from septimic.util.report import info


MODES = ('halves', 'pairs')

# Largest form degree whose default search builds the whole semi-invariant
# table up to the target degree.
PAIRS_MAX_FORM_DEGREE = 6

DEFAULT_MAX_DEGREE = {2: 2, 3: 4, 4: 6, 5: 18, 6: 15, 7: 26}


def default_namer(n, k):
    return 'c{}_{}'.format(n, k)


def reference(entry):
    """ The expression naming a table entry.
    """
    return T if entry.name == 't' else Gen(entry.name)


def generator_multisets(table, i):
    """ Multisets of table generators with degree sum i.

    Returns:
        List of entry tuples, each sorted by table position.
    """
    entries = [e for e in table if e.grading.degree <= i]
    out = []

    def _walk(start, remaining, acc):
        for idx in range(start, len(entries)):
            e = entries[idx]
            deg = e.grading.degree
            if deg > remaining:
                continue
            acc.append(e)
            if deg == remaining:
                out.append(tuple(acc))
            else:
                _walk(idx, remaining - deg, acc)
            acc.pop()

    _walk(0, i, [])
    return out


def _reducible_for_small_r(factors, r, d):
    """ A genuine product [t, f g]^r is reducible for small r.
    """
    if len(factors) < 2:
        return False
    orders = [e.grading.order for e in factors]
    return r <= min(d, sum(orders) - min(orders))


def candidate_products(table, i, prune=False):
    """ Candidates [t, w]^r for the semi-invariants of degree i+1.

    Args:
        table: GeneratorTable complete through degree i.
        i: Degree of w.
        prune: Skip genuine products that are reducible for small r.

    Returns:
        List of ST expressions sorted by (size, text).
    """
    d = table.d
    out = []
    for factors in generator_multisets(table, i):
        order = sum(e.grading.order for e in factors)
        w = product(*(reference(e) for e in factors))
        for r in range(1, min(d, order) + 1):
            if prune and _reducible_for_small_r(factors, r, d):
                continue
            out.append(ST(T, w, r))
    return sorted(out, key=lambda e: (e.size(), e.text()))


def reducible_products(table, n):
    """ Products of at least two generators with degree sum n.
    """
    return [product(*(reference(e) for e in factors))
            for factors in generator_multisets(table, n) if len(factors) > 1]


def _product_weight(table, expr):
    if isinstance(expr, ST):
        degree = 1 + _product_degree(table, expr.rhs)
        order = table.d + _product_order(table, expr.rhs) - 2 * expr.r
        return (table.d * degree - order) // 2
    return sum(table.entry(name).grading.weight * e for name, e in _factor_names(expr))


def _product_degree(table, expr):
    return sum(table.entry(name).grading.degree * e for name, e in _factor_names(expr))


def _product_order(table, expr):
    return sum(table.entry(name).grading.order * e for name, e in _factor_names(expr))


def _factor_names(expr):
    if expr is T:
        return [('t', 1)]
    if isinstance(expr, Gen):
        return [(expr.name, 1)]
    return [(f.text(), e) for f, e in expr.factors]


def _rows(values, d, screen, count):
    """ Rows for rank computations: exact coefficients or screened values.
    """
    if screen is None:
        rows, _ = coefficient_rows(values, d)
        return rows
    return [screen.fraction_row(v, count) for v in values]


def _domain(screen):
    return None if screen is None else GF(screen.prime)


def _rank(values, d, screen, count):
    if not values:
        return 0
    rows = _rows(values, d, screen, count)
    kwargs = {} if screen is None else {'domain': _domain(screen)}
    return len(greedy_independent(list(enumerate(rows)), **kwargs))


def extend_semiinvariants(table, n, evaluator, prune=False, screen=None, screen_points=32,
                          namer=default_namer, jobs=1, batch=None, verbose=False):
    """ Find the irreducible semi-invariants of degree n and add them.

    Candidates are grouped by weight. In each group the reducible products
    of the same grading form the base, and candidates are scanned in
    batches, keeping those that raise the rank, until the group reaches
    the semi-invariant dimension or runs out of candidates.

    Args:
        table: GeneratorTable complete through degree n-1.
        n: New degree.
        evaluator: Evaluator bound to table.
        prune: Skip genuine products that are reducible for small r.
        screen: EvaluationScreen for modular ranks; exact when None.
        screen_points: Points beyond the target rank when screening.
        namer: Callable (n, k) -> name for the k-th new generator.
        jobs: Worker processes for candidate evaluation.
        batch: Candidates evaluated per round.
        verbose: Report progress.

    Returns:
        List of the new table entries.
    """
    d = table.d
    batch = batch or max(8, 4 * jobs)

    groups = OrderedDict()
    for expr in candidate_products(table, n - 1, prune):
        groups.setdefault(_product_weight(table, expr), ([], []))[0].append(expr)
    for expr in reducible_products(table, n):
        w = _product_weight(table, expr)
        if w in groups:
            groups[w][1].append(expr)

    chosen = []
    for w in sorted(groups):
        candidates, base = groups[w]
        target = dim_semiinvariants(d, n, w)
        count = target + screen_points

        base_values = [v for v in evaluator.evaluate_many(base) if v]
        base_rank = _rank(base_values, d, screen, count)
        kept = []

        pending = tqdm(total=len(candidates), disable=not verbose, leave=False,
                       desc='degree {} weight {}'.format(n, w), unit='st')
        pos = 0
        while pos < len(candidates) and base_rank + len(kept) < target:
            exprs = candidates[pos:pos + batch]
            pos += len(exprs)
            pending.update(len(exprs))

            values = evaluator.evaluate_many(exprs, jobs)
            fresh = [(e, v) for e, v in zip(exprs, values) if v]
            if not fresh:
                continue

            known = base_values + [v for _, v in kept]
            rows = _rows(known + [v for _, v in fresh], d, screen, count)
            kwargs = {} if screen is None else {'domain': _domain(screen)}
            picks = greedy_independent(
                list(enumerate(rows[len(known):])),
                base=list(enumerate(rows[:len(known)])), **kwargs)
            kept.extend(fresh[k] for k in picks)
        pending.close()

        if base_rank + len(kept) < target:
            info('degree {} weight {}: rank {} below dimension {}'.format(
                n, w, base_rank + len(kept), target), verbose)
        chosen.extend(kept)

    new = []
    for k, (expr, value) in enumerate(chosen, 1):
        new.append(table.add(namer(n, k), value, expr))
    info('degree {}: {} new generators'.format(n, len(new)), verbose)
    return new


def invariant_candidates(table, n, mode='halves', max_r=None):
    """ Semitransvectants [u, v]^r of order zero at degree n.

    Order zero forces ord(u) = ord(v) = r. In 'halves' mode u and v have
    degree n/2 and r is at most max_r, by default n/2 - 4. In 'pairs'
    mode u and v have any degrees summing to n and r is unbounded unless
    max_r is given. Pairs with u = v are listed; for odd r they vanish.

    The default window only decides which candidates are tried first.
    complete_system scans it, and when fewer than delta_n independent
    invariants turn up it widens to max_r = d*n, which admits every pair
    of equal order. Every shipped septic invariant of degree 14 through 26
    has its construction inside the window; p_12_3 = [sh_1, sh_1]^6 lies
    outside it and is reached only by the widening.

    Raises:
        ValueError: Unknown mode, or odd n in 'halves' mode.
    """
    if mode not in MODES:
        raise ValueError('Unknown candidate mode "{}".'.format(mode))

    if mode == 'halves':
        if n % 2:
            raise ValueError('Degree {} is odd; halves mode needs an even degree.'.format(n))
        limit = n // 2 - 4 if max_r is None else max_r
        splits = [(n // 2, n // 2)]
    else:
        limit = max_r
        splits = [(l, n - l) for l in range(1, n // 2 + 1)]

    out = []
    for l, k in splits:
        left = table.at_degree(l)
        right = table.at_degree(k)
        for a, u in enumerate(left):
            r = u.grading.order
            if r < 1 or (limit is not None and r > limit):
                continue
            for b, v in enumerate(right):
                if l == k and b < a:
                    continue
                if v.grading.order == r:
                    out.append(ST(reference(u), reference(v), r))
    return sorted(out, key=lambda e: (e.r, e.text()))


def _select_invariants(table, n, evaluator, screen, products, need, mode, count, jobs,
                       batch, verbose):
    """ Up to need candidates independent modulo the product rows.
    """
    domain = GF(screen.prime)
    base = [(k, row) for k, row in enumerate(products)]
    kept = []

    def _scan(exprs):
        pos = 0
        while pos < len(exprs) and len(kept) < need:
            chunk = exprs[pos:pos + batch]
            pos += len(chunk)
            values = evaluator.evaluate_many(chunk, jobs)
            fresh = [(e, v) for e, v in zip(chunk, values) if v]
            rows = [screen.fraction_row(v, count) for _, v in fresh]
            picks = greedy_independent(
                list(enumerate(rows)),
                base=base + [(None, row) for _, _, row in kept], domain=domain)
            for k in picks[:need - len(kept)]:
                kept.append((fresh[k][0], fresh[k][1], rows[k]))

    tried = set()
    stored = [reference(e) for e in table.at_degree(n) if e.grading.order == 0]
    window = invariant_candidates(table, n, mode) if mode == 'pairs' or n % 2 == 0 else []
    for exprs in (stored, window):
        _scan([e for e in exprs if e.text() not in tried])
        tried.update(e.text() for e in exprs)

    if len(kept) < need and mode == 'halves' and n % 2 == 0:
        info('degree {}: widening the candidate window'.format(n), verbose)
        wide = invariant_candidates(table, n, mode, max_r=table.d * n)
        _scan([e for e in wide if e.text() not in tried])
    return kept


def complete_system(d, max_degree=None, ledger_degree=None, mode=None, prune=False,
                    check=True, cache=None, jobs=1, seed=7, screen_points=32,
                    certify_degree=22, sem_degree=None, screen_search=False, verbose=False):
    """ Discover a complete system of invariants of the degree-d form.

    Args:
        d: Degree of the binary form.
        max_degree: Largest degree at which invariants are constructed.
        ledger_degree: Continue the counting, without construction, to
            this degree.
        mode: 'halves' (default for d = 7) or 'pairs'.
        prune: Skip reducible candidates in the semi-invariant search.
        check: x1 vanishing check in every semitransvectant.
        cache: Optional SimpleCache.
        jobs: Worker processes for candidate evaluation.
        seed: Seed of the evaluation points.
        screen_points: Extra evaluation points for every screen.
        certify_degree: Certify syzygies exactly up to this degree.
        sem_degree: Build the semi-invariant table through this degree.
        screen_search: Use modular ranks in the semi-invariant search.
        verbose: Report progress on stderr.

    Returns:
        (GeneratorTable, DeltaLedger, Manifest).

    Raises:
        LedgerError: The candidates cannot supply the generators the
            counting demands, or the counting becomes negative.
    """
    max_degree = max_degree or DEFAULT_MAX_DEGREE[d]
    ledger_degree = max(ledger_degree or max_degree, max_degree)
    mode = mode or ('pairs' if d <= PAIRS_MAX_FORM_DEGREE else 'halves')
    if mode not in MODES:
        raise ValueError('Unknown candidate mode "{}".'.format(mode))
    if sem_degree is None:
        sem_degree = max_degree if mode == 'pairs' else max_degree // 2

    table = GeneratorTable(d)
    evaluator = Evaluator(table, check=check, cache=cache)
    sem_screen = EvaluationScreen({}, d, seed) if screen_search else None
    batch = max(8, 4 * jobs)

    try:
        for n in range(2, sem_degree + 1):
            extend_semiinvariants(table, n, evaluator, prune=prune, screen=sem_screen,
                                  screen_points=screen_points, jobs=jobs, batch=batch,
                                  verbose=verbose)

        values = OrderedDict()
        degrees = OrderedDict()
        screen = EvaluationScreen(values, d, seed)
        ledger = DeltaLedger(d)
        syzygies = []
        unbuilt = []

        for n in range(1, ledger_degree + 1):
            if unbuilt:
                info('degree {}: counting stops, generators of degree {} were not constructed'.format(
                    n, ', '.join(map(str, unbuilt))), verbose)
                break

            record = syzygy_space(list(degrees.items()), values, n, d, screen,
                                  extra_points=screen_points,
                                  certify_relations=n <= certify_degree, progress=verbose)
            dim_i = dim_invariants(d, n)
            need = dim_i - (len(record.labels) - record.dim)

            found = []
            if need > 0 and n <= max_degree:
                count = dim_i + screen_points
                products = [screen.product_row(names, count) for names in record.labels]
                found = _select_invariants(table, n, evaluator, screen, products, need, mode,
                                           count, jobs, batch, verbose)
                if len(found) < need:
                    raise LedgerError('Degree {}: the candidates give {} of {} new invariants.'.format(
                        n, len(found), need))

            delta = ledger.account(n, record.dim)
            if record.labels:
                syzygies.append(record)

            for k, (expr, value, row) in enumerate(found, 1):
                if isinstance(expr, Gen):
                    name = expr.name
                else:
                    name = 'p{}_{}'.format(n, k)
                    table.add(name, value, expr)
                values[name] = value
                degrees[name] = n
                screen.memo[name] = row

            if delta and not found:
                unbuilt.append(n)
                info('degree {}: delta {} (not constructed)'.format(n, delta), verbose)
            elif delta:
                info('degree {}: {} new invariants'.format(n, delta), verbose)
    finally:
        evaluator.close()

    manifest = Manifest.from_table(table)
    manifest.extra['invariants'] = list(values)
    manifest.extra['ledger'] = ledger.to_dict()
    manifest.extra['syzygies'] = [record.to_dict() for record in syzygies]
    return table, ledger, manifest


def run_recipe(script, d=7, target=None, check=True, cache=None, progress=False):
    """ Evaluate a recipe and describe every entry in a Manifest.
    """
    table = evaluate_recipe(script, d, target, check, cache, progress)
    manifest = Manifest.from_table(table)
    manifest.extra['invariants'] = manifest.invariants()
    return manifest
