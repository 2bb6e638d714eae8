"""
Distance bounds and parity placement
====================================

An (m, n; ell, g) LRC code stores an m x n array: every row carries ell
local parities and g global parities span the whole array.
"""

from lrc import LrcParams, field_new, singleton_bound, report
from lrc.codec import make_layout

# A 6 x 5 array with two local parities per row and eight globals is a
# [30, 10] code.  No code with these parameters can beat d = 15: erasing
# three whole rows loses 15 symbols against only 14 parities.
params = LrcParams(6, 5, 2, 8, field_new(4))
print(report(params))

# With only two globals we are in the ell + g < n regime, where the bound
# simplifies to ell + g + 1.
print("d <=", singleton_bound(5, 2, 2))


def picture(params):
    lay = make_layout(params)
    mark = {p: "L" for p in lay.local_parity_positions}
    mark.update({p: "G" for p in lay.global_parity_positions})
    for i in range(params.m):
        print(" ".join(mark.get(i * params.n + j, "D") for j in range(params.n)))
    print()


# Local parities sit at the end of each row; globals fill the last
# non-local cells from the bottom of the array upwards.
picture(LrcParams(6, 5, 2, 8, field_new(4)))
picture(LrcParams(6, 5, 2, 2, field_new(4)))

# The bound ignores m: it only depends on the row geometry.
for g in range(0, 9):
    print(f"g={g}: d <= {singleton_bound(5, 2, g)}")
