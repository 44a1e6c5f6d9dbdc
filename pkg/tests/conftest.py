from pathlib import Path

import pytest

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fx():
    return FIXTURES


def fixture_text(name):
    return (FIXTURES / name).read_text()


def sympy_invariants(M):
    """Nonzero Smith invariants through sympy, used as an independent oracle."""
    import sympy
    from sympy.matrices.normalforms import smith_normal_form
    M = [list(map(int, r)) for r in M]
    if not M or not M[0]:
        return []
    S = smith_normal_form(sympy.Matrix(M), domain=sympy.ZZ)
    return [abs(int(S[i, i])) for i in range(min(S.shape)) if S[i, i] != 0]


def oracle_homology(dims, mats, n):
    """(free rank, torsion) of H_n from dense boundary matrices mats[k]: C_k -> C_{k-1}."""
    out_inv = sympy_invariants(mats[n]) if n in mats else []
    in_inv = sympy_invariants(mats[n + 1]) if n + 1 in mats else []
    free = dims[n] - len(out_inv) - len(in_inv)
    return free, tuple(sorted(d for d in in_inv if d > 1))


ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
