import json
import math
from fractions import Fraction

import pytest

from qgln.verification import ALIASES, SUITES, SuiteReport, default_grid, resolve, run_suite, suite_names
from qgln.verification import classical


def test_registry():
    assert set(ALIASES.values()) <= set(SUITES)
    assert resolve("appendixD") == "root_identities"
    assert resolve("relations") == "relations"
    with pytest.raises(KeyError):
        resolve("nope")
    assert len(suite_names()) == len(SUITES)


def test_default_grid():
    grid = default_grid()
    assert len(grid) == 31
    assert all(max(w) <= 2 and min(w) >= 0 and list(w) == sorted(w, reverse=True) for w in grid)
    assert {len(w) for w in grid} == {2, 3, 4}


def test_root_identities_seed_7():
    rep = run_suite("appendixD", seed=7, count=100)
    assert rep.passed
    assert all(c.tol == 0.0 and c.residual == 0.0 for c in rep.cases)
    assert all("100 random cases" in c.desc for c in rep.cases)


def test_char_identity_vector_rep():
    rep = run_suite("char_identity", hw=(1, 0), q=1.5, which="Atilde")
    assert rep.passed
    assert rep.cases[0].residual < 1e-8


def test_classical_limit_vector_rep():
    rep = run_suite("classical_limit", hw=(1, 0))
    assert rep.passed and all(c.tol == 0.0 for c in rep.cases)


@pytest.mark.parametrize("name", sorted(set(SUITES) - {"root_identities"}))
def test_every_suite_passes_on_a_small_weight(name):
    rep = run_suite(name, hw=(2, 1, 0), q=1.5)
    assert rep.cases and rep.passed, rep.failures()


@pytest.mark.parametrize("q", [0.8, 2.0])
def test_suites_pass_at_other_q(q):
    for name in ("relations", "char_identity", "projectors", "invariant_crosscheck"):
        assert run_suite(name, hw=(1, 1, 0), q=q).passed


def test_report_semantics():
    rep = SuiteReport("demo")
    rep.check("small", 1e-12, 1e-10)
    rep.exact("equal", True)
    assert rep.passed
    rep.check("nan", math.nan, 1.0)
    assert not rep.passed and [c.desc for c in rep.failures()] == ["nan"]
    data = rep.to_json(timing=False)
    assert data["seconds"] is None and data["cases"][2]["residual"] == "nan"
    json.dumps(data)


def test_reports_are_deterministic_without_timing():
    a = run_suite("root_identities", seed=3, count=20).to_json(timing=False)
    b = run_suite("root_identities", seed=3, count=20).to_json(timing=False)
    assert json.dumps(a) == json.dumps(b)


def test_missing_weight_is_rejected():
    with pytest.raises((TypeError, ValueError)):
        run_suite("relations")


# --- classical oracle -----------------------------------------------------


def test_classical_dimensions():
    assert classical.weyl_dim((2, 1, 0)) == 8 == classical.gt_count((2, 1, 0))
    assert classical.pieri_dims((1, 0), +1) == [3, 1]
    assert classical.pieri_dims((1, 0), -1) == [1, 3]
    assert classical.pieri_dims((0, 0), -1) == [0, 2]


def test_classical_vector_rep():
    assert classical.e_squared([(1, 0), (0,)], 1, 1) == 1
    assert classical.f_squared([(1, 0), (1,)], 1, 1) == 1
    assert classical.omegatilde((0, 0), (0,), 1) == 1
    assert classical.omegatilde((0, 0), (0,), 2) == 0


def test_classical_sl2_coefficients():
    # spin-j string: e^2 on weight m is (j - m)(j + m + 1)
    hw = (4, 0)
    for x in range(0, 4):
        j, m = Fraction(2), Fraction(x) - 2
        assert classical.e_squared([hw, (x,)], 1, 1) == (j - m) * (j + m + 1)
