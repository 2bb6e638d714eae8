"""Dense matrices over GF(2^w) and the elimination routines built on them."""

from .gf import field_new


class MatrixError(ValueError):
    pass


class GfMatrix:
    """Immutable dense matrix over a :class:`FieldSpec`.

    ``data`` is a tuple of row tuples of field elements (ints).
    """

    __slots__ = ("field", "data", "_cols")

    def __init__(self, field, data, cols=None):
        data = tuple(tuple(row) for row in data)
        if data:
            width = len(data[0])
            if cols is not None and cols != width:
                raise MatrixError(f"rows have {width} entries, expected {cols}")
            cols = width
            q = field.q
            for row in data:
                if len(row) != width:
                    raise MatrixError("ragged rows")
                for a in row:
                    if not isinstance(a, int) or not 0 <= a < q:
                        raise MatrixError(f"{a!r} is not an element of {field.name}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "_cols", cols or 0)

    def __setattr__(self, name, value):
        raise AttributeError("GfMatrix is immutable")

    def __reduce__(self):
        return GfMatrix, (self.field, self.data, self.cols)

    @property
    def rows(self):
        return len(self.data)

    @property
    def cols(self):
        return self._cols

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def __eq__(self, other):
        return (isinstance(other, GfMatrix) and self.field == other.field
                and self.shape == other.shape and self.data == other.data)

    def __hash__(self):
        return hash((self.field, self.shape, self.data))

    def __repr__(self):
        return f"GfMatrix({self.rows}x{self.cols} over {self.field.name})"

    def row(self, i):
        return self.data[i]

    def column(self, j):
        return tuple(row[j] for row in self.data)

    def tolist(self):
        return [list(row) for row in self.data]

    def to_exponents(self):
        """Entries as exponents of alpha, with None standing for zero."""
        log = self.field.log_table
        return [[None if a == 0 else log[a] for a in row] for row in self.data]

    @classmethod
    def from_exponents(cls, field, exps):
        """Build from an exponent grid; None (or '-') is the zero element."""
        def entry(e):
            if e is None or e == "-":
                return 0
            return field.alpha_pow(int(e))
        return cls(field, [[entry(e) for e in row] for row in exps])

    def transpose(self):
        return GfMatrix(self.field, zip(*self.data) if self.data else [[]] * self.cols,
                        self.rows)

    def row_slice(self, start, stop):
        return GfMatrix(self.field, self.data[start:stop], self.cols)

    def __matmul__(self, other):
        if isinstance(other, GfMatrix):
            return matmul(self, other)
        return NotImplemented


def _check_same_field(a, b):
    if a.field != b.field:
        raise MatrixError(f"field mismatch: {a.field.name} vs {b.field.name}")


def identity(m, field):
    return GfMatrix(field, [[int(i == j) for j in range(m)] for i in range(m)])


def ones_row(m, field):
    return GfMatrix(field, [[1] * m])


def zeros(r, c, field):
    return GfMatrix(field, [[0] * c for _ in range(r)], c)


def kronecker(a, b):
    """Kronecker product: block (i, j) of the result is a[i, j] * b."""
    _check_same_field(a, b)
    mul = a.field.mul
    out = []
    for arow in a.data:
        for brow in b.data:
            out.append([mul(x, y) for x in arow for y in brow])
    return GfMatrix(a.field, out)


def hstack(*mats):
    field = mats[0].field
    rows = {m.rows for m in mats}
    if len(rows) > 1:
        raise MatrixError("hstack needs equal row counts")
    for m in mats:
        _check_same_field(mats[0], m)
    nrows = mats[0].rows
    total = sum(m.cols for m in mats)
    parts = [m for m in mats if m.cols]
    return GfMatrix(field, [sum((m.data[i] for m in parts), ()) for i in range(nrows)], total)


def vstack(*mats):
    field = mats[0].field
    for m in mats:
        _check_same_field(mats[0], m)
    if len({m.cols for m in mats}) > 1:
        raise MatrixError("vstack needs equal column counts")
    return GfMatrix(field, [row for m in mats for row in m.data], mats[0].cols)


def submatrix_cols(a, cols):
    for c in cols:
        if not 0 <= c < a.cols:
            raise MatrixError(f"column {c} out of range for {a.cols} columns")
    return GfMatrix(a.field, [[row[c] for c in cols] for row in a.data], len(cols))


def matmul(a, b):
    _check_same_field(a, b)
    if a.cols != b.rows:
        raise MatrixError(f"cannot multiply {a.shape} by {b.shape}")
    bt = b.transpose().data
    return GfMatrix(a.field, [[dot(a.field, row, col) for col in bt] for row in a.data],
                    b.cols)


def dot(field, u, v):
    mul = field.mul
    acc = 0
    for x, y in zip(u, v):
        if x and y:
            acc ^= mul(x, y)
    return acc


def matvec(a, v):
    if len(v) != a.cols:
        raise MatrixError(f"vector of length {len(v)} for {a.cols} columns")
    return [dot(a.field, row, v) for row in a.data]


def _axpy(field, coef, src, dst, start=0):
    """dst[k] ^= coef * src[k] for k >= start, in place."""
    exp2 = field._exp2
    log = field.log_table
    lc = log[coef]
    for k in range(start, len(dst)):
        s = src[k]
        if s:
            dst[k] ^= exp2[lc + log[s]]


def _scale(field, coef, vec):
    mul = field.mul
    return [mul(coef, x) for x in vec]


def row_reduce(field, rows, ncols=None):
    """Reduced row echelon form of ``rows`` (list of lists), in place.

    Pivots are taken as the first nonzero entry scanning columns left to
    right.  Returns the list of pivot columns; ``rows[:len(pivots)]`` then
    holds the nonzero rows of the echelon form.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        if rows[r][c] != 1:
            rows[r] = _scale(field, field.inv(rows[r][c]), rows[r])
        pivot_row = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                _axpy(field, rows[i][c], pivot_row, rows[i], c)
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(a):
    if not a.data:
        return 0
    return len(row_reduce(a.field, a.tolist(), a.cols))


def solve(a, b):
    """One solution x of a @ x = b, or None if the system is inconsistent.

    Free variables are set to zero, so the answer is unique whenever the
    columns of ``a`` are independent.
    """
    if len(b) != a.rows:
        raise MatrixError(f"right-hand side of length {len(b)} for {a.rows} rows")
    field = a.field
    n = a.cols
    aug = [list(row) + [field.check(bi)] for row, bi in zip(a.data, b)]
    pivots = row_reduce(field, aug, n)
    for i in range(len(pivots), len(aug)):
        if aug[i][n]:
            return None
    x = [0] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    return x


def inverse(a):
    if a.rows != a.cols:
        raise MatrixError("only square matrices are invertible")
    n = a.rows
    field = a.field
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a.data)]
    pivots = row_reduce(field, aug, n)
    if len(pivots) < n:
        raise MatrixError("matrix is singular")
    return GfMatrix(field, [row[n:] for row in aug])


def nullspace(a):
    """Basis of {x : a @ x = 0} as a list of vectors."""
    field = a.field
    n = a.cols
    rows = a.tolist()
    pivots = row_reduce(field, rows, n) if rows else []
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = []
    for f in free:
        x = [0] * n
        x[f] = 1
        for i, c in enumerate(pivots):
            # characteristic 2: -r[f] == r[f]
            x[c] = rows[i][f]
        basis.append(x)
    return basis


class ColumnBasis:
    """Incrementally maintained echelon basis for a set of column vectors.

    ``try_add`` reduces a vector against the basis and keeps it if it is
    independent.  ``copy`` is cheap enough for depth-first subset search.
    """

    __slots__ = ("field", "pivots", "vectors")

    def __init__(self, field, pivots=(), vectors=()):
        self.field = field
        self.pivots = list(pivots)
        self.vectors = list(vectors)

    def __len__(self):
        return len(self.vectors)

    def copy(self):
        return ColumnBasis(self.field, self.pivots, self.vectors)

    def reduce(self, vec):
        v = list(vec)
        field = self.field
        for p, b in zip(self.pivots, self.vectors):
            if v[p]:
                _axpy(field, v[p], b, v)
        return v

    def try_add(self, vec):
        v = self.reduce(vec)
        for p, x in enumerate(v):
            if x:
                if x != 1:
                    v = _scale(self.field, self.field.inv(x), v)
                self.pivots.append(p)
                self.vectors.append(tuple(v))
                return True
        return False


# -- text format -------------------------------------------------------------

def format_matrix(a):
    """Exponent-form text: header ``rows cols q``, then '-' or e per entry."""
    lines = [f"{a.rows} {a.cols} {a.field.q}"]
    for row in a.to_exponents():
        lines.append(" ".join("-" if e is None else str(e) for e in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text, field=None):
    """Inverse of :func:`format_matrix`.

    ``field`` defaults to the default field of size q from the header.
    Exponents are taken mod q - 1, so a printed alpha^15 in GF(16) parses.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise MatrixError("empty matrix text")
    try:
        nrows, ncols, q = (int(t) for t in lines[0].split())
    except ValueError:
        raise MatrixError(f"bad header {lines[0]!r}; expected 'rows cols q'") from None
    if field is None:
        w = q.bit_length() - 1
        if q != 1 << w:
            raise MatrixError(f"q={q} is not a power of two")
        field = field_new(w)
    elif field.q != q:
        raise MatrixError(f"header says q={q} but field is {field.name}")
    body = [ln.split() for ln in lines[1:]]
    if len(body) != nrows or any(len(r) != ncols for r in body):
        raise MatrixError(f"body does not match declared shape {nrows}x{ncols}")
    m = GfMatrix.from_exponents(field, body)
    return GfMatrix(field, m.data, ncols)


def parse_exponent_grid(text):
    """Raw exponent grid of a matrix text, without reducing exponents."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    body = [ln.split() for ln in lines[1:] if ln]
    return [[None if t == "-" else int(t) for t in row] for row in body]
