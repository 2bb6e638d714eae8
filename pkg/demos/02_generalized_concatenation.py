"""
Optimal LRC codes over a small field
====================================

The Kronecker construction uses one RS parity-check block per row for the
local parities and repeats a shifted RS block across rows for the globals.
A field just larger than the row length suffices.
"""

import random

from lrc import LrcCode, LrcParams, Variant, field_new, format_matrix
from lrc.codec import decode, decode_row_local, encode
from lrc.verify import is_optimal, min_distance

params = LrcParams(m=3, n=6, ell=2, g=3, field=field_new(3), variant=Variant.GC)
code = LrcCode(params)

# Exponent form: '-' is zero, e stands for alpha^e.
print(format_matrix(code.H))

d = min_distance(code.H)
print("minimum distance:", d, "optimal:", is_optimal(params, d))

rng = random.Random(0)
data = [rng.randrange(8) for _ in range(code.dimension)]
word = encode(code, data)
print("codeword:", word)

# Any five erasures are recoverable.  Rows with at most two erasures are
# repaired locally, the rest with the global parities.
erased = [6, 7, 8, 9, 10]
received = [0 if i in erased else a for i, a in enumerate(word)]
assert decode(code, received, erased) == word
print("recovered a whole-row burst of 5 erasures")

# A single lost symbol is rebuilt from its own row alone.  The locality, the
# number of symbols a repair needs, is n - ell.
row = word[12:18]
damaged = row[:3] + [0] + row[4:]
assert decode_row_local(code, damaged, 2, [15]) == row
print("locality:", params.n - params.ell)

# The extended-RS variant works with q = n: a (2, 8; 2, 2) code over GF(8).
ext = LrcCode(LrcParams(2, 8, 2, 2, field_new(3), Variant.GC_EXT))
print(format_matrix(ext.H))
print("extended variant distance:", min_distance(ext.H))
