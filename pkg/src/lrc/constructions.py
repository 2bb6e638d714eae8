"""Parity-check matrices of optimal (m, n; l, g) LRC codes and their bounds.

Four constructions are provided, named by :class:`Variant`:

``GC``
    ``I_m (x) RS(n, l; 0, 0)`` over ``(1 ... 1) (x) RS(n, g; l, 0)``; optimal
    for ``g <= l + 1``, ``l + g < n`` and ``q > n``.
``GC_EXT``
    The same with extended RS local blocks; works with ``q = n``.
``DIAG``
    Diagonal local blocks ``RS(n, l; 0, k n)`` over ``RS(mn, g; l, 0)``;
    ``d = l + g + 1`` for ``q > mn``.
``DIAG_EXT``
    The diagonal construction closed by an extended RS block; ``q = mn``.

All matrices are reduced modulo ``q - 1`` in the exponent as they are built.
"""

from dataclasses import dataclass
import enum

from .gf import FieldSpec
from .linalg import GfMatrix, hstack, identity, kronecker, ones_row, vstack, zeros


class ParameterError(ValueError):
    pass


class Variant(enum.Enum):
    GC = "gc"
    GC_EXT = "gc-ext"
    DIAG = "diag"
    DIAG_EXT = "diag-ext"

    @classmethod
    def parse(cls, text):
        key = text.strip().lower().replace("_", "-")
        for v in cls:
            if v.value == key:
                return v
        raise ParameterError(
            f"unknown variant {text!r}; expected one of gc, gc-ext, diag, diag-ext")


@dataclass(frozen=True)
class LrcParams:
    m: int
    n: int
    ell: int
    g: int
    field: FieldSpec
    variant: Variant = Variant.GC

    def __post_init__(self):
        if self.m < 1:
            raise ParameterError(f"m must be >= 1, got {self.m}")
        if not 0 <= self.ell < self.n:
            raise ParameterError(f"need 0 <= ell < n, got ell={self.ell}, n={self.n}")
        if self.g < 0:
            raise ParameterError(f"g must be >= 0, got {self.g}")
        if self.dimension < 0:
            raise ParameterError(f"more parities than symbols: k={self.dimension}")

    @property
    def length(self):
        return self.m * self.n

    @property
    def dimension(self):
        return self.m * (self.n - self.ell) - self.g

    @property
    def redundancy(self):
        return self.ell * self.m + self.g

    def label(self):
        return f"({self.m},{self.n};{self.ell},{self.g}) {self.variant.value} over {self.field.name}"


@dataclass(frozen=True)
class CodeParamsReport:
    length: int
    dimension: int
    bound_d: int
    locality: int


def mod_reduce(s, t):
    """The representative of s modulo t in 0..t-1."""
    if t < 1:
        raise ParameterError(f"modulus must be >= 1, got {t}")
    return s % t


def _check_bound_args(n, ell, g):
    if not 0 <= ell < n:
        raise ParameterError(f"need 0 <= ell < n, got ell={ell}, n={n}")
    if g < 0:
        raise ParameterError(f"g must be >= 0, got {g}")


def singleton_bound(n, ell, g):
    """Upper bound on d: l + n * floor(g / (n - l)) + <g>_(n - l) + 1.

    The bound does not depend on the number of rows m.
    """
    _check_bound_args(n, ell, g)
    r = n - ell
    return ell + n * (g // r) + mod_reduce(g, r) + 1


def special_bound(n, ell, g):
    """The bound l + g + 1, valid form of :func:`singleton_bound` when l + g < n."""
    _check_bound_args(n, ell, g)
    if ell + g >= n:
        raise ParameterError(f"special bound needs ell + g < n, got {ell}+{g} >= {n}")
    return ell + g + 1


def report(params):
    return CodeParamsReport(
        length=params.length,
        dimension=params.dimension,
        bound_d=singleton_bound(params.n, params.ell, params.g),
        locality=params.n - params.ell,
    )


def claimed_distance(params):
    """Distance the construction is proven to reach, or None outside its regime.

    The field-size requirement is checked too, so forced builds get None.
    """
    m, n, ell, g, q = params.m, params.n, params.ell, params.g, params.field.q
    if ell + g >= n:
        return None
    v = params.variant
    if v is Variant.GC and not (g <= ell + 1 and q > n):
        return None
    if v is Variant.GC_EXT and not (g <= ell + 1 and q == n):
        return None
    if v is Variant.DIAG and not q > m * n:
        return None
    if v is Variant.DIAG_EXT and not q == m * n:
        return None
    return ell + g + 1


# -- building blocks ----------------------------------------------------------

def rs_matrix(n, r, i, j, field):
    """RS(n, r; i, j): entry (t, c) is alpha^((i + t)(j + c))."""
    if not 1 <= r < n:
        raise ParameterError(f"RS block needs 1 <= r < n, got r={r}, n={n}")
    a = field.alpha_pow
    return GfMatrix(field, [[a((i + t) * (j + c)) for c in range(n)] for t in range(r)])


def ers_matrix(n, r, j, field):
    """ERS(n, r; j): extended RS block, last column is (1, 0, ..., 0)^T."""
    if not 1 <= r < n:
        raise ParameterError(f"ERS block needs 1 <= r < n, got r={r}, n={n}")
    a = field.alpha_pow
    rows = [[1] * n]
    for t in range(1, r):
        rows.append([a(t * (j + c)) for c in range(n - 1)] + [0])
    return GfMatrix(field, rows)


def _require(params, variant, ok, message, force):
    if params.variant is not variant:
        raise ParameterError(f"expected variant {variant.value}, got {params.variant.value}")
    if not ok and not force:
        raise ParameterError(message)


def _local_band(field, m, n, blocks):
    """Block-diagonal local rows from a list of m blocks of width n."""
    rows = []
    for k, block in enumerate(blocks):
        for row in block.data:
            rows.append((0,) * (k * n) + row + (0,) * ((m - k - 1) * n))
    return GfMatrix(field, rows)


def build_gc(params, force=False):
    m, n, ell, g, f = params.m, params.n, params.ell, params.g, params.field
    _require(params, Variant.GC, f.q > n,
             f"variant gc requires q > n; got q={f.q}, n={n}",
             force)
    parts = []
    if ell:
        parts.append(kronecker(identity(m, f), rs_matrix(n, ell, 0, 0, f)))
    if g:
        parts.append(kronecker(ones_row(m, f), rs_matrix(n, g, ell, 0, f)))
    return vstack(*parts) if parts else zeros(0, m * n, f)


def build_gc_ext(params, force=False):
    m, n, ell, g, f = params.m, params.n, params.ell, params.g, params.field
    _require(params, Variant.GC_EXT, f.q == n,
             f"variant gc-ext requires q = n; got q={f.q}, n={n}",
             force)
    parts = []
    if ell:
        parts.append(kronecker(identity(m, f), ers_matrix(n, ell, 0, f)))
    if g:
        tail = hstack(rs_matrix(n - 1, g, ell, 0, f), zeros(g, 1, f))
        parts.append(kronecker(ones_row(m, f), tail))
    return vstack(*parts) if parts else zeros(0, m * n, f)


def build_diag(params, force=False):
    m, n, ell, g, f = params.m, params.n, params.ell, params.g, params.field
    _require(params, Variant.DIAG, f.q > m * n,
             f"variant diag requires q > mn; got q={f.q}, mn={m * n}",
             force)
    parts = []
    if ell:
        parts.append(_local_band(f, m, n, [rs_matrix(n, ell, 0, k * n, f) for k in range(m)]))
    if g:
        parts.append(rs_matrix(m * n, g, ell, 0, f))
    return vstack(*parts) if parts else zeros(0, m * n, f)


def build_diag_ext(params, force=False):
    m, n, ell, g, f = params.m, params.n, params.ell, params.g, params.field
    _require(params, Variant.DIAG_EXT, f.q == m * n,
             f"variant diag-ext requires q = mn; got q={f.q}, mn={m * n}",
             force)
    parts = []
    if ell:
        blocks = [rs_matrix(n, ell, 0, k * n, f) for k in range(m - 1)]
        blocks.append(ers_matrix(n, ell, (m - 1) * n, f))
        parts.append(_local_band(f, m, n, blocks))
    if g:
        parts.append(hstack(rs_matrix(m * n - 1, g, ell, 0, f), zeros(g, 1, f)))
    return vstack(*parts) if parts else zeros(0, m * n, f)


BUILDERS = {
    Variant.GC: build_gc,
    Variant.GC_EXT: build_gc_ext,
    Variant.DIAG: build_diag,
    Variant.DIAG_EXT: build_diag_ext,
}


def build(params, force=False):
    """Parity-check matrix of ``params`` using the builder for its variant."""
    return BUILDERS[params.variant](params, force=force)
