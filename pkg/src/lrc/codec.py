"""Systematic encoding and erasure decoding for the LRC constructions.

Coordinates are row-major over the m x n array: cell (i, j) is i * n + j.
Parity placement follows the usual picture of these codes: the last ``ell``
cells of every row hold local parities, and the ``g`` global parities take
the last non-local cells scanning the array backwards from the bottom right.
"""

from dataclasses import dataclass
import itertools

from . import linalg
from .constructions import build


class CodecError(ValueError):
    pass


class LayoutError(CodecError):
    pass


class UnrecoverableError(CodecError):
    """Erased columns of H are linearly dependent.

    ``witness`` holds coordinates of a dependent subset of the erasures.
    """

    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


@dataclass(frozen=True)
class CodeLayout:
    data_positions: tuple
    local_parity_positions: tuple
    global_parity_positions: tuple

    @property
    def parity_positions(self):
        return tuple(sorted(self.local_parity_positions + self.global_parity_positions))


def global_positions(m, n, ell, g):
    """Coordinates of the g global parities, ascending."""
    cells = [i * n + j for i in reversed(range(m)) for j in reversed(range(n - ell))]
    if g > len(cells):
        raise LayoutError(f"no room for {g} global parities in a {m}x{n} array with ell={ell}")
    return tuple(sorted(cells[:g]))


def make_layout(params, H=None):
    """Data/parity placement for ``params``.

    When ``H`` is given, also checks that the parity columns of H form an
    invertible square submatrix, which is what makes the layout systematic.
    """
    m, n, ell, g = params.m, params.n, params.ell, params.g
    local = tuple(i * n + j for i in range(m) for j in range(n - ell, n))
    glob = global_positions(m, n, ell, g)
    parity = set(local) | set(glob)
    data = tuple(c for c in range(m * n) if c not in parity)
    layout = CodeLayout(data, local, glob)
    if H is not None:
        cols = layout.parity_positions
        if H.rows != len(cols) or linalg.rank(linalg.submatrix_cols(H, cols)) < len(cols):
            raise LayoutError("parity submatrix of H is singular for this layout")
    return layout


@dataclass(frozen=True, init=False)
class ErasurePattern:
    positions: tuple

    def __init__(self, positions, length=None):
        pos = tuple(sorted(positions))
        if len(set(pos)) != len(pos):
            raise CodecError("duplicate erasure positions")
        if pos and (pos[0] < 0 or (length is not None and pos[-1] >= length)):
            raise CodecError(f"erasure position out of range 0..{length - 1}")
        object.__setattr__(self, "positions", pos)

    def __iter__(self):
        return iter(self.positions)

    def __len__(self):
        return len(self.positions)

    @classmethod
    def parse(cls, text, length=None):
        """From a comma-separated coordinate list such as ``3,7,12``."""
        tokens = [t for t in text.replace(" ", "").split(",") if t]
        try:
            return cls((int(t) for t in tokens), length)
        except ValueError:
            raise CodecError(f"bad erasure list {text!r}") from None

    @classmethod
    def parse_rc(cls, text, n, m=None):
        """From ``row:col`` pairs such as ``0:2,1:4``."""
        out = []
        for tok in text.replace(" ", "").split(","):
            if not tok:
                continue
            try:
                r, c = (int(x) for x in tok.split(":"))
            except ValueError:
                raise CodecError(f"bad row:col pair {tok!r}") from None
            if not 0 <= c < n or r < 0 or (m is not None and r >= m):
                raise CodecError(f"cell {tok} outside the array")
            out.append(r * n + c)
        return cls(out, None if m is None else m * n)


class LrcCode:
    """A built LRC code: parameters, parity-check matrix and layout."""

    def __init__(self, params, H=None, force=False):
        if H is None:
            H = build(params, force=force)
        if H.shape != (params.redundancy, params.length):
            raise CodecError(f"H has shape {H.shape}, expected "
                             f"{(params.redundancy, params.length)}")
        self.params = params
        self.H = H
        self.field = params.field
        self.layout = make_layout(params, H)
        parity = self.layout.parity_positions
        p_inv = linalg.inverse(linalg.submatrix_cols(H, parity))
        # parity = P^-1 H_D d  (signs vanish in characteristic 2)
        self._encoder = linalg.matmul(p_inv, linalg.submatrix_cols(H, self.layout.data_positions))
        self._locals = [self._local_block(i) for i in range(params.m)]

    def __repr__(self):
        return f"LrcCode{self.params.label()}"

    @property
    def length(self):
        return self.params.length

    @property
    def dimension(self):
        return self.params.dimension

    def _local_block(self, i):
        ell, n = self.params.ell, self.params.n
        rows = self.H.data[i * ell:(i + 1) * ell]
        return linalg.GfMatrix(self.field, [r[i * n:(i + 1) * n] for r in rows], n)

    def local_block(self, i):
        """The ell x n local check matrix of row i."""
        return self._locals[i]


def encode(code, data):
    """Codeword carrying ``data`` (k symbols) on the data positions."""
    data = list(data)
    if len(data) != code.dimension:
        raise CodecError(f"expected {code.dimension} data symbols, got {len(data)}")
    for a in data:
        code.field.check(a)
    word = [0] * code.length
    for pos, a in zip(code.layout.data_positions, data):
        word[pos] = a
    for pos, a in zip(code.layout.parity_positions, linalg.matvec(code._encoder, data)):
        word[pos] = a
    return word


def extract_data(code, word):
    return [word[p] for p in code.layout.data_positions]


def syndrome(code, word):
    if len(word) != code.length:
        raise CodecError(f"expected {code.length} symbols, got {len(word)}")
    return linalg.matvec(code.H, list(word))


def _solve_erasures(H, word, erased, offset=0):
    """Fill ``erased`` columns of ``word`` so that H @ word = 0.

    Raises UnrecoverableError when the erased columns are dependent;
    the witness is the support of a null vector, shifted by ``offset``.
    """
    erased = list(erased)
    if not erased:
        return list(word)
    es = set(erased)
    known = [c for c in range(len(word)) if c not in es]
    rhs = linalg.matvec(linalg.submatrix_cols(H, known), [word[c] for c in known])
    sub = linalg.submatrix_cols(H, erased)
    if linalg.rank(sub) < len(erased):
        null = linalg.nullspace(sub)[0]
        witness = [erased[i] + offset for i, x in enumerate(null) if x]
        raise UnrecoverableError("unrecoverable: erased columns are linearly dependent",
                                 witness)
    x = linalg.solve(sub, rhs)
    if x is None:
        raise CodecError("received word is not consistent with any codeword")
    out = list(word)
    for c, a in zip(erased, x):
        out[c] = a
    return out


def decode_row_local(code, row_symbols, row, erased):
    """Recover one row from its own ell local parities.

    ``row_symbols`` is just the n symbols of row ``row``; ``erased`` are
    array coordinates inside that row.  Nothing outside the row is read.
    """
    n, ell = code.params.n, code.params.ell
    if len(row_symbols) != n:
        raise CodecError(f"expected a row of {n} symbols, got {len(row_symbols)}")
    base = row * n
    rel = sorted(c - base for c in erased)
    if any(not 0 <= c < n for c in rel):
        raise CodecError(f"erasure outside row {row}")
    if len(rel) > ell:
        raise UnrecoverableError(f"{len(rel)} erasures in row {row} exceed ell={ell}")
    if not rel:
        return list(row_symbols)
    return _solve_erasures(code.local_block(row), row_symbols, rel, offset=base)


def _as_pattern(code, erasures):
    if isinstance(erasures, ErasurePattern):
        pat = erasures
    else:
        pat = ErasurePattern(erasures, code.length)
    if pat.positions and pat.positions[-1] >= code.length:
        raise CodecError("erasure position out of range")
    return pat


def decode(code, received, erasures):
    """Two-phase erasure decoding.

    Rows with at most ell erasures are repaired locally first; whatever
    remains is solved against all rows of H at once.  Erased entries of
    ``received`` are ignored.  Raises :class:`UnrecoverableError`.
    """
    if len(received) != code.length:
        raise CodecError(f"expected {code.length} symbols, got {len(received)}")
    pat = _as_pattern(code, erasures)
    n, ell = code.params.n, code.params.ell
    word = list(received)
    for c in pat:
        word[c] = 0
    by_row = {}
    for c in pat:
        by_row.setdefault(c // n, []).append(c)
    progress = True
    while by_row and progress:
        progress = False
        for row, cols in sorted(by_row.items()):
            if len(cols) <= ell:
                fixed = decode_row_local(code, word[row * n:(row + 1) * n], row, cols)
                word[row * n:(row + 1) * n] = fixed
                del by_row[row]
                progress = True
    remaining = sorted(itertools.chain.from_iterable(by_row.values()))
    return _solve_erasures(code.H, word, remaining)


def decode_generic(code, received, erasures):
    """Single linear solve over the whole of H, no local phase."""
    if len(received) != code.length:
        raise CodecError(f"expected {code.length} symbols, got {len(received)}")
    pat = _as_pattern(code, erasures)
    word = list(received)
    for c in pat:
        word[c] = 0
    return _solve_erasures(code.H, word, pat.positions)


# -- codeword files -------------------------------------------------------------

def format_word(word):
    return " ".join(str(a) for a in word) + "\n"


def parse_word(text, field=None, length=None):
    try:
        word = [int(t) for t in text.split()]
    except ValueError:
        raise CodecError("symbol files hold whitespace-separated integers") from None
    if length is not None and len(word) != length:
        raise CodecError(f"expected {length} symbols, got {len(word)}")
    if field is not None:
        for a in word:
            if not 0 <= a < field.q:
                raise CodecError(f"symbol {a} out of range for {field.name}")
    return word
