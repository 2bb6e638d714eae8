"""
The diagonal construction and its XOR collapse
==============================================

Each row gets its own slice of a long RS code as local parities.  Summing
the rows of the local band that share a residue modulo ell gives back that
long RS code, which is why the distance is ell + g + 1.
"""

from lrc import LrcCode, LrcParams, Variant, field_new, format_matrix
from lrc.constructions import ers_matrix, rs_matrix
from lrc.verify import min_distance, xor_collapse

f16 = field_new(4)

for ell, g in [(1, 3), (2, 2)]:
    params = LrcParams(3, 5, ell, g, f16, Variant.DIAG)
    code = LrcCode(params)
    print(format_matrix(code.H))
    collapsed = xor_collapse(code.H, 3, ell, g)
    assert collapsed == rs_matrix(15, ell + g, 0, 0, f16)
    print(f"(3,5;{ell},{g}) collapses to RS(15,{ell + g}); d = {min_distance(code.H)}")
    print(format_matrix(collapsed))

# With q = mn, an extended RS block closes the last row.  The (2, 8; 1, 4)
# code over GF(16) reaches d = 6, the best possible.
params = LrcParams(2, 8, 1, 4, f16, Variant.DIAG_EXT)
code = LrcCode(params)
print(format_matrix(code.H))
assert xor_collapse(code.H, 2, 1, 4) == ers_matrix(16, 5, 0, f16)
print("distance:", min_distance(code.H))

# Row 5 column 11 holds alpha^(4*11 mod 15) = alpha^14.
print("entry (5, 11) exponent:", code.H.to_exponents()[5][11])
