"""
Stronger recoverability: PMDS and sector-disk checks
====================================================

Optimal distance only promises that any ell + g erasures are recoverable.
PMDS asks instead for any ell erasures in every row plus g more anywhere;
SD asks the same when the ell per row are whole columns.
"""

from lrc import LrcCode, LrcParams, Variant, field_new
from lrc.verify import check_pmds, check_sd

cases = [
    LrcParams(2, 4, 1, 1, field_new(4), Variant.DIAG),
    LrcParams(2, 4, 2, 1, field_new(4), Variant.DIAG),
    LrcParams(3, 5, 2, 2, field_new(4), Variant.DIAG),
    LrcParams(3, 6, 2, 3, field_new(3), Variant.GC),
]

for params in cases:
    code = LrcCode(params)
    for rep in (check_pmds(code), check_sd(code)):
        line = f"{params.label():32s} {rep.kind:4s} {'holds' if rep.holds else 'fails'}"
        if not rep.holds:
            line += f"  puncture={rep.puncture} extra={rep.extra}"
        print(line)

# Both constructions are optimal LRCs, yet at these field sizes neither is
# SD.  Each witness is a set of ell*m + g columns of H with a rank deficit.
