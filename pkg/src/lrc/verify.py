"""Exhaustive verification of distance, optimality and recoverability claims.

Everything here works on the columns of a parity-check matrix H: a set of
erasures is recoverable exactly when the corresponding columns are linearly
independent, and the minimum distance is the size of the smallest dependent
column set.  Searches enumerate subsets in lexicographic order and stop at
the first failure, so witnesses are reproducible.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
import os

import numpy as np

from . import linalg
from .constructions import Variant, claimed_distance, ers_matrix, rs_matrix, singleton_bound

DEFAULT_WORK_BUDGET = 10 ** 8


class BudgetExceeded(RuntimeError):
    pass


def work_budget():
    """Enumeration guard in basis-extension steps; ``LRC_WORK_BUDGET`` overrides."""
    raw = os.environ.get("LRC_WORK_BUDGET")
    return int(raw) if raw else DEFAULT_WORK_BUDGET


class _Counter:
    __slots__ = ("left",)

    def __init__(self, budget):
        self.left = budget

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded(
                "enumeration exceeded the work budget; raise LRC_WORK_BUDGET to continue")


def _columns(H):
    return [H.column(j) for j in range(H.cols)]


def _first_dependent(field, columns, size, candidates, basis, counter, first=None):
    """Lexicographically first subset of ``candidates`` (at most ``size``
    elements) whose columns together with ``basis`` are dependent.

    ``first`` restricts the first chosen element.  Returns a tuple of
    positions or None.
    """
    chosen = []

    def rec(start, basis):
        if len(chosen) == size:
            return None
        stop = len(candidates) - (size - len(chosen)) + 1
        idx = range(start, stop)
        if not chosen and first is not None:
            idx = [i for i in idx if candidates[i] == first]
        for i in idx:
            counter.tick()
            c = candidates[i]
            b = basis.copy()
            chosen.append(c)
            if not b.try_add(columns[c]):
                return tuple(chosen)
            hit = rec(i + 1, b)
            if hit is not None:
                return hit
            chosen.pop()
        return None

    return rec(0, basis)


def _dependent_worker(args):
    field, columns, size, first, budget = args
    counter = _Counter(budget)
    return _first_dependent(field, columns, size, list(range(len(columns))),
                            linalg.ColumnBasis(field), counter, first)


def find_dependent_subset(H, size, budget=None, jobs=1):
    """First (lexicographic) column subset of at most ``size`` columns that
    is linearly dependent, or None if every such subset is independent."""
    budget = work_budget() if budget is None else budget
    field = H.field
    columns = _columns(H)
    if jobs <= 1 or H.cols < 2:
        return _first_dependent(field, columns, size, list(range(H.cols)),
                                linalg.ColumnBasis(field), _Counter(budget))
    # each worker owns the subsets starting at one column
    tasks = [(field, columns, size, first, budget) for first in range(H.cols)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_dependent_worker, tasks))
    for hit in results:
        if hit is not None:
            return hit
    return None


def min_distance_witness(H, budget=None, jobs=1):
    """(d, support) with ``support`` the lexicographically first dependent
    set of d columns.  Returns (None, None) when all columns are independent
    (the code is {0})."""
    budget = work_budget() if budget is None else budget
    for t in range(1, H.cols + 1):
        hit = find_dependent_subset(H, t, budget, jobs)
        if hit is not None:
            return t, hit
    return None, None


def min_distance(H, budget=None, jobs=1):
    """Minimum distance of the code with parity-check matrix H."""
    return min_distance_witness(H, budget, jobs)[0]


def distance_at_least(H, delta, budget=None, jobs=1):
    """True iff every delta - 1 columns of H are independent."""
    if delta <= 1:
        return True
    return find_dependent_subset(H, delta - 1, budget, jobs) is None


def is_optimal(params, d):
    """Whether distance d meets the Singleton-type bound for these parameters."""
    return d == singleton_bound(params.n, params.ell, params.g)


def min_weight_enumeration(H):
    """Minimum Hamming weight over all nonzero codewords, by listing them.

    Independent reference for :func:`min_distance`; the code's generator
    comes from ``linalg.nullspace`` and all q^k codewords are formed with
    numpy table lookups.
    """
    field = H.field
    basis = linalg.nullspace(H)
    k = len(basis)
    if k == 0:
        return None
    if field.q ** k > 1 << 22:
        raise BudgetExceeded(f"q^k = {field.q}^{k} codewords is too many to list")
    exp = np.array(field.exp_table * 2, dtype=np.int64)
    log = np.array([0 if x is None else x for x in field.log_table], dtype=np.int64)
    scalars = np.arange(field.q, dtype=np.int64)
    words = np.zeros((1, H.cols), dtype=np.int64)
    for g in basis:
        g = np.array(g, dtype=np.int64)
        mult = exp[log[scalars][:, None] + log[g][None, :]]
        mult[(scalars[:, None] == 0) | (g[None, :] == 0)] = 0
        words = (words[None, :, :] ^ mult[:, None, :]).reshape(-1, H.cols)
    # row 0 is the zero word (all-zero coefficients come first)
    return int(np.count_nonzero(words[1:], axis=1).min())


def xor_collapse(H, m, ell, g):
    """Sum local rows t, ell + t, ..., (m - 1) ell + t for each t < ell and
    append the g global rows unchanged."""
    if H.rows != ell * m + g:
        raise ValueError(f"H has {H.rows} rows, expected ell*m + g = {ell * m + g}")
    rows = []
    for t in range(ell):
        acc = [0] * H.cols
        for k in range(m):
            acc = [a ^ b for a, b in zip(acc, H.row(k * ell + t))]
        rows.append(acc)
    rows.extend(H.data[ell * m:])
    return linalg.GfMatrix(H.field, rows, H.cols)


def collapse_target(params):
    """The RS/ERS matrix the collapse of a diagonal construction must equal."""
    r = params.ell + params.g
    mn = params.length
    if params.variant is Variant.DIAG:
        return rs_matrix(mn, r, 0, 0, params.field)
    if params.variant is Variant.DIAG_EXT:
        return ers_matrix(mn, r, 0, params.field)
    raise ValueError("collapse applies to diag and diag-ext constructions only")


# -- PMDS / SD ------------------------------------------------------------------

@dataclass
class RecoverabilityReport:
    kind: str
    holds: bool
    patterns_checked: int
    puncture: tuple = ()
    extra: tuple = ()

    @property
    def witness(self):
        if self.holds:
            return None
        return {"puncture": self.puncture, "extra": self.extra}


def _check_punctures(kind, H, m, n, g, punctures, budget):
    field = H.field
    columns = _columns(H)
    counter = _Counter(work_budget() if budget is None else budget)
    checked = 0
    for punct in punctures:
        basis = linalg.ColumnBasis(field)
        ok = True
        for c in punct:
            counter.tick()
            if not basis.try_add(columns[c]):
                ok = False
                break
        if not ok:
            return RecoverabilityReport(kind, False, checked + 1, tuple(punct), ())
        ps = set(punct)
        rest = [c for c in range(m * n) if c not in ps]
        if g:
            hit = _first_dependent(field, columns, g, rest, basis, counter)
            if hit is not None:
                return RecoverabilityReport(kind, False, checked + 1, tuple(punct), hit)
        checked += 1
    return RecoverabilityReport(kind, True, checked)


def check_pmds(code, budget=None):
    """Every choice of ell erasures per row plus any g further erasures is
    recoverable (partial-MDS / maximally recoverable property)."""
    p = code.params
    m, n, ell, g = p.m, p.n, p.ell, p.g
    per_row = [list(combinations(range(i * n, (i + 1) * n), ell)) for i in range(m)]
    punctures = (sum(choice, ()) for choice in product(*per_row))
    return _check_punctures("PMDS", code.H, m, n, g, punctures, budget)


def check_sd(code, budget=None):
    """Any ell erased columns of the array plus any g further erasures are
    recoverable (sector-disk property)."""
    p = code.params
    m, n, ell, g = p.m, p.n, p.ell, p.g
    punctures = (tuple(sorted(i * n + j for i in range(m) for j in cols))
                 for cols in combinations(range(n), ell))
    return _check_punctures("SD", code.H, m, n, g, punctures, budget)


# -- reports --------------------------------------------------------------------

@dataclass
class VerificationReport:
    params: object
    distance: int = None
    witness: tuple = None
    checked_delta: int = None
    delta_holds: bool = None
    bound: int = None
    optimal: bool = None
    claimed: int = None
    collapse_ok: bool = None
    extras: list = dc_field(default_factory=list)

    @property
    def ok(self):
        """True when every computed check agrees with what the code claims."""
        checks = []
        if self.delta_holds is not None:
            checks.append(self.delta_holds)
        if self.distance is not None and self.claimed is not None:
            checks.append(self.distance == self.claimed)
        if self.collapse_ok is not None:
            checks.append(self.collapse_ok)
        return all(checks)

    def format(self):
        p = self.params
        lines = [
            f"code: m={p.m} n={p.n} ell={p.ell} g={p.g} variant={p.variant.value} "
            f"field={p.field.name} poly={p.field.poly:#x}",
            f"length: {p.length}",
            f"dimension: {p.dimension}",
            f"bound: {self.bound}",
        ]
        if self.distance is not None:
            lines.append(f"distance: {self.distance}")
            if self.witness:
                cells = " ".join(f"{c}({c // p.n}:{c % p.n})" for c in self.witness)
                lines.append(f"min-weight support: {cells}")
        if self.checked_delta is not None:
            lines.append(f"distance >= {self.checked_delta}: {'yes' if self.delta_holds else 'no'}")
        if self.optimal is not None:
            lines.append(f"optimal: {'yes' if self.optimal else 'no'}")
        if self.claimed is not None:
            lines.append(f"claimed distance: {self.claimed}")
        if self.collapse_ok is not None:
            lines.append(f"xor-collapse: {'matches' if self.collapse_ok else 'MISMATCH'}")
        for rep in self.extras:
            line = f"{rep.kind}: {'holds' if rep.holds else 'fails'} ({rep.patterns_checked} punctures)"
            lines.append(line)
            if not rep.holds:
                lines.append(f"{rep.kind} witness: puncture={list(rep.puncture)} extra={list(rep.extra)}")
        return "\n".join(lines) + "\n"


def verify_code(code, delta=None, pmds=False, sd=False, budget=None, jobs=1):
    p = code.params
    rep = VerificationReport(p, bound=singleton_bound(p.n, p.ell, p.g),
                             claimed=claimed_distance(p))
    if delta is not None:
        rep.checked_delta = delta
        rep.delta_holds = distance_at_least(code.H, delta, budget, jobs)
    else:
        rep.distance, rep.witness = min_distance_witness(code.H, budget, jobs)
        if rep.distance is not None:
            rep.optimal = is_optimal(p, rep.distance)
    if p.variant in (Variant.DIAG, Variant.DIAG_EXT) and p.ell + p.g < p.length:
        rep.collapse_ok = xor_collapse(code.H, p.m, p.ell, p.g) == collapse_target(p)
    if pmds:
        rep.extras.append(check_pmds(code, budget))
    if sd:
        rep.extras.append(check_sd(code, budget))
    return rep


__all__ = [
    "BudgetExceeded", "RecoverabilityReport", "VerificationReport", "check_pmds",
    "check_sd", "collapse_target", "distance_at_least", "find_dependent_subset",
    "is_optimal", "min_distance", "min_distance_witness", "min_weight_enumeration",
    "verify_code", "work_budget", "xor_collapse",
]
