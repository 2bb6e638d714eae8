"""Table-driven arithmetic in binary extension fields GF(2^w), 1 <= w <= 16.

Elements are plain ints in polynomial-basis representation: bit i is the
coefficient of x^i, 0 is the zero element and 1 the identity.  The generator
alpha is the class of x modulo a fixed primitive polynomial.
"""

from functools import lru_cache
import re

# Default primitive polynomials, bit i = coefficient of x^i.
PRIMITIVE_POLYS = {
    1: 0b11,          # x + 1
    2: 0b111,         # x^2 + x + 1
    3: 0b1011,        # x^3 + x + 1
    4: 0b10011,       # x^4 + x + 1
    5: 0b100101,      # x^5 + x^2 + 1
    6: 0b1000011,     # x^6 + x + 1
    7: 0b10000011,    # x^7 + x + 1
    8: 0x11D,         # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,         # x^9 + x^4 + 1
    10: 0x409,        # x^10 + x^3 + 1
    11: 0x805,        # x^11 + x^2 + 1
    12: 0x1053,       # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,       # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,       # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,       # x^15 + x + 1
    16: 0x1100B,      # x^16 + x^12 + x^3 + x + 1
}


class FieldError(ValueError):
    pass


class FieldSpec:
    """GF(2^w) realised as exp/log tables over a primitive polynomial.

    Instances are immutable and hashable by (w, poly); use :func:`field_new`
    to get the shared instance for a given degree.
    """

    __slots__ = ("w", "q", "poly", "exp_table", "log_table", "_exp2")

    def __init__(self, w, poly=None):
        if not isinstance(w, int) or not 1 <= w <= 16:
            raise FieldError(f"extension degree must be in 1..16, got {w!r}")
        if poly is None:
            poly = PRIMITIVE_POLYS[w]
        if poly >> w != 1:
            raise FieldError(f"polynomial {poly:#x} does not have degree {w}")
        q = 1 << w
        exp_table = []
        log_table = [None] * q
        x = 1
        for e in range(q - 1):
            if log_table[x] is not None:
                raise FieldError(f"polynomial {poly:#x} is not primitive for w={w}")
            exp_table.append(x)
            log_table[x] = e
            x <<= 1
            if x & q:
                x ^= poly
        if x != 1:
            raise FieldError(f"polynomial {poly:#x} is not primitive for w={w}")
        set_ = object.__setattr__
        set_(self, "w", w)
        set_(self, "q", q)
        set_(self, "poly", poly)
        set_(self, "exp_table", tuple(exp_table))
        set_(self, "log_table", tuple(log_table))
        # doubled table so that log(a) + log(b) never needs a modulo
        set_(self, "_exp2", tuple(exp_table) * 2)

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    def __reduce__(self):
        return field_new, (self.w, self.poly)

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.w, self.poly) == (other.w, other.poly))

    def __hash__(self):
        return hash((self.w, self.poly))

    def __repr__(self):
        return f"FieldSpec(w={self.w}, poly={self.poly:#x})"

    @property
    def name(self):
        return f"gf2^{self.w}"

    @property
    def order(self):
        """Order of the multiplicative group, q - 1."""
        return self.q - 1

    def check(self, a):
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise FieldError(f"{a!r} is not an element of {self.name}")
        return a

    @staticmethod
    def add(a, b):
        return a ^ b

    sub = add

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        log = self.log_table
        return self._exp2[log[a] + log[b]]

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in " + self.name)
        if a == 0:
            return 0
        log = self.log_table
        return self._exp2[log[a] - log[b] + self.q - 1]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse in " + self.name)
        return self.exp_table[-self.log_table[a] % (self.q - 1)]

    def alpha_pow(self, e):
        """alpha^e; e may be any integer, it is reduced mod q - 1."""
        return self.exp_table[e % (self.q - 1)]

    def log_alpha(self, a):
        """Exponent e in 0..q-2 with alpha^e == a."""
        if a == 0:
            raise FieldError("log of zero is undefined")
        return self.log_table[a]

    def pow(self, a, k):
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if k == 0 else 0
        return self.exp_table[self.log_table[a] * k % (self.q - 1)]


@lru_cache(maxsize=None)
def field_new(w, poly=None):
    """Return the shared :class:`FieldSpec` for GF(2^w)."""
    return FieldSpec(w, poly)


_FIELD_NAME = re.compile(r"^\s*gf\s*(?:2\^|\(2\^)(\d+)\)?\s*$", re.IGNORECASE)


def parse_field(text):
    """Parse a field name such as ``gf2^4`` (``GF(2^4)`` is accepted too)."""
    match = _FIELD_NAME.match(text)
    if not match:
        raise FieldError(f"cannot parse field name {text!r}; expected e.g. gf2^4")
    return field_new(int(match.group(1)))


def poly_mulmod(a, b, poly, w):
    """Carry-less product of a and b reduced mod poly, bit by bit.

    Independent of the tables; used as a reference implementation.
    """
    result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a >> w & 1:
            a ^= poly
    return result
