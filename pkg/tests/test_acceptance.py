"""Acceptance suite: every criterion runs at its stated bounds with exact
(zero-tolerance) comparisons and prints one PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
complete.  A shared memo store accelerates the sweeps; results are
independent of it.
"""

import pytest

from jackpoly import verify as sweeps
from jackpoly.recursion import RecursionCache


@pytest.fixture(scope="module")
def cache():
    return RecursionCache()


def _report(criterion: str, verdicts) -> None:
    verdicts = verdicts if isinstance(verdicts, list) else [verdicts]
    ok = all(v.passed for v in verdicts)
    cases = sum(v.cases for v in verdicts)
    print(f"{'PASS' if ok else 'FAIL'} {criterion} (cases={cases})")
    for v in verdicts:
        assert v.passed, f"{criterion}: counterexample {v.counterexample}"


def test_criterion_01_engine_equivalence(cache):
    # recursion vs tableau sum, every composition with n <= 4, degree <= 5
    v = sweeps.engine_equivalence(4, 5, cache)
    _report("criterion-1 engine-equivalence", v)


def test_criterion_02_eigenfunctions(cache):
    # all operators on E, n <= 3, degree <= 5
    v = sweeps.eigenfunctions(3, 5, cache)
    _report("criterion-2 eigenfunction-property", v)


def test_criterion_03_coefficient_identities(cache):
    # square-free coefficient d!: non-symmetric up to degree 4 (length
    # capped at 4, so n = length + degree <= 8), symmetric up to degree 5
    v = sweeps.coeff_identities(4, 5, length_cap=4, cache=cache)
    _report("criterion-3 coefficient-identities", v)


def test_criterion_04_positivity(cache):
    # augmented monomial coefficients of J for |lam| <= 6 in 6 variables,
    # and the partially-symmetric expansion of F for n <= 4, |lam| <= 5
    v1 = sweeps.j_positivity(6, 6, cache)
    v2 = sweeps.f_positivity(4, 5, cache)
    _report("criterion-4 positivity", [v1, v2])


def test_criterion_05_symmetrization_routes(cache):
    # restriction route, full-orbit route and the tableau sum agree,
    # partitions of degree <= 4, n <= 6 (restriction runs at n = 2*length)
    v = sweeps.sym_routes(6, 4, cache)
    _report("criterion-5 symmetrization-routes", v)


def test_criterion_06_orthogonality(cache):
    # pairing against all smaller monomials at alpha in {1, 1/2}, n <= 3,
    # degree <= 4; includes the from-definition construction agreement
    v = sweeps.orthogonality(3, 4, (1, 2), cache)
    _report("criterion-6 orthogonality", v)


def test_criterion_07_specializations(cache):
    # alpha = 1 against the Schur oracle, alpha = 0 against elementary
    # products, partitions of degree <= 5, n <= 5
    v = sweeps.specializations(5, 5, cache)
    _report("criterion-7 specializations", v)


def test_criterion_08_operator_algebra():
    # graded Hecke relations and the cycling intertwinings on every
    # monomial of degree <= 4 for n up to 3
    v = sweeps.hecke(3, 4)
    _report("criterion-8 operator-algebra", v)


def test_criterion_09_stability_and_symmetry(cache):
    # restriction of E at a trailing zero and invariance at equal parts,
    # n <= 4, degree <= 4
    v = sweeps.stability_symmetry(4, 4, cache)
    _report("criterion-9 stability-symmetry", v)


def test_criterion_10_tableau_sum_recurrences():
    # both raw tableau-sum identities for every applicable shape and index,
    # n <= 3, degree <= 4
    v = sweeps.l2l3(3, 4)
    _report("criterion-10 tableau-recurrences", v)
