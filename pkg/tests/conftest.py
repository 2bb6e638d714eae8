from itertools import combinations
from pathlib import Path

import pytest

from lrc import LrcCode, LrcParams, Variant, field_new
from lrc.linalg import parse_exponent_grid, rank, submatrix_cols

DATA = Path(__file__).parent / "data"

# (m, n, ell, g, w, variant, printed matrix file, distance)
GOLDEN = {
    "gc_3_6_2_3": (3, 6, 2, 3, 3, Variant.GC, "gc_3_6_2_3_gf8.txt", 6),
    "gcext_2_8_2_2": (2, 8, 2, 2, 3, Variant.GC_EXT, "gcext_2_8_2_2_gf8.txt", 5),
    "diag_3_5_1_3": (3, 5, 1, 3, 4, Variant.DIAG, "diag_3_5_1_3_gf16.txt", 5),
    "diag_3_5_2_2": (3, 5, 2, 2, 4, Variant.DIAG, "diag_3_5_2_2_gf16.txt", 5),
    "diagext_2_8_1_4": (2, 8, 1, 4, 4, Variant.DIAG_EXT, "diagext_2_8_1_4_gf16.txt", 6),
}


def golden_params(name):
    m, n, ell, g, w, variant, _, _ = GOLDEN[name]
    return LrcParams(m, n, ell, g, field_new(w), variant)


def printed_grid(filename):
    return parse_exponent_grid((DATA / filename).read_text())


_codes = {}


def golden_code(name):
    if name not in _codes:
        _codes[name] = LrcCode(golden_params(name))
    return _codes[name]


@pytest.fixture(params=sorted(GOLDEN))
def golden_name(request):
    return request.param


def brute_min_distance(H):
    """Smallest t with some t columns of rank < t, via itertools + rank()."""
    for t in range(1, H.cols + 1):
        for cols in combinations(range(H.cols), t):
            if rank(submatrix_cols(H, cols)) < t:
                return t
    return None


# -- acceptance summary ---------------------------------------------------------

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::", 1)[1]
    if report.when == "call" or report.outcome == "failed":
        prev = _acceptance.get(name, "passed")
        _acceptance[name] = "failed" if "failed" in (prev, report.outcome) else report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance, key=lambda s: int(s.split("_")[2])):
        status = "PASS" if _acceptance[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
