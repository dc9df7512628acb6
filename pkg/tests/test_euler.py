from __future__ import annotations

import random
from fractions import Fraction

import pytest

from qfmass.arith import NQR, QR, LocalSquareClass, factor, gamma_factor, legendre
from qfmass.euler import (
    RationalFunction,
    a_coeff,
    b_coeff,
    closed_form,
    closed_form_report,
    decomposition_check,
    genus_partition,
    normalized_mass_sum,
    sign_tuple_identity,
)


def nonresidue(p: int) -> int:
    return min(r for r in range(2, p) if legendre(r, p) == -1)


# ---------------------------------------------------------------------------
# rational functions


def test_rational_function_normalization():
    rf = RationalFunction.make((2, 4), (2, 2))
    assert rf.den[0] == 1
    assert rf.series(3) == [Fraction(1), Fraction(1), Fraction(-1)]


def test_rational_function_series_matches_convolution():
    rng = random.Random(13)
    for _ in range(100):
        def small_rf():
            num = [Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(3)]
            den = [Fraction(1)] + [
                Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(2)
            ]
            return RationalFunction.make(num, den)

        f, g = small_rf(), small_rf()
        prod = (f * g).series(20)
        sf, sg = f.series(20), g.series(20)
        conv = [sum(sf[i] * sg[k - i] for i in range(k + 1)) for k in range(20)]
        assert prod == conv


def test_rational_function_ring_ops():
    f = RationalFunction.make((1,), (1, -1))  # 1/(1-X)
    g = RationalFunction.make((1,), (1, 1))  # 1/(1+X)
    s = (f + g).series(6)
    assert s == [2, 0, 2, 0, 2, 0]
    d = (f - g).series(6)
    assert d == [0, 2, 0, 2, 0, 2]


# ---------------------------------------------------------------------------
# normalized mass sums and coefficients


def test_normalized_mass_sum_unimodular_odd():
    for p in (3, 5, 7):
        for u in (QR, NQR):
            S_p = LocalSquareClass(p, 0, u)
            assert normalized_mass_sum(p, S_p, 1) == 1
            assert normalized_mass_sum(p, S_p, -1) == 0


def test_normalized_mass_sum_nu_one_odd():
    for p in (3, 5):
        for u in (QR, NQR):
            S_p = LocalSquareClass(p, 1, u)
            want = Fraction(1, 2 * p) * gamma_factor(1 if u == QR else nonresidue(p), p)
            assert normalized_mass_sum(p, S_p, 1) == want
            assert normalized_mass_sum(p, S_p, -1) == want


def test_coefficient_examples():
    for p in (3, 5, 7):
        for u in (1, nonresidue(p)):
            assert a_coeff(p, u, 1) == gamma_factor(u, p) / p
            assert b_coeff(p, u, 1) == 0
    assert a_coeff(2, 3, 0) == 1
    assert b_coeff(2, 3, 0) == -1
    assert a_coeff(2, 7, 0) == 1 and b_coeff(2, 7, 0) == -1
    assert a_coeff(2, 1, 0) == 0 and b_coeff(2, 1, 0) == 0
    for u in (1, 3, 5, 7):
        assert a_coeff(2, u, 1) == 0 and b_coeff(2, u, 1) == 0


def test_coefficient_positivity_and_b_padding():
    for p in (2, 3, 5):
        units = (1, 3, 5, 7) if p == 2 else (1, nonresidue(p))
        for u in units:
            for nu in range(9):
                a = a_coeff(p, u, nu)
                b = b_coeff(p, u, nu)
                assert a >= 0
                assert a >= abs(b)
                if nu % 2 and p != 2:
                    assert b == 0


def test_b_vanishing_criterion_globally():
    """The product of b-coefficients over the support of S vanishes unless
    every valuation is even and the 2-adic unit is 3 mod 4; over the
    integers that combination is impossible, so the product is always 0
    for realizable determinants."""
    for S in range(1, 401):
        prod = Fraction(1)
        facs = dict(factor(S))
        nu2 = facs.pop(2, 0)
        unit2 = (S >> nu2) % 8
        prod *= b_coeff(2, unit2, nu2)
        for p, e in facs.items():
            strip = S // p**e
            prod *= b_coeff(p, strip, e)
        if prod != 0:
            assert all(e % 2 == 0 for e in dict(factor(S)).values())
            assert unit2 % 4 == 3
        if S % 4 in (0, 3):  # realizable
            assert prod == 0, S


# ---------------------------------------------------------------------------
# closed forms


def test_odd_closed_forms_match_pipeline_exactly():
    for p in (3, 5, 7, 11, 13):
        for u in (1, nonresidue(p)):
            for which in ("A", "B"):
                rep = closed_form_report(p, u, which, 11)
                assert rep["table_matches"], (p, u, which)
                assert rep["printed_matches"], (p, u, which)


def test_odd_closed_form_shape():
    # constant term 1, and the A-series has the geometric tail q^-nu gamma
    for p in (3, 5):
        rf = closed_form(p, 1, "A")
        s = rf.series(6)
        assert s[0] == 1
        for nu in range(1, 6):
            assert s[nu] == gamma_factor(1, p) / p**nu


def test_two_adic_table_variant_matches_pipeline():
    for u in (1, 3, 5, 7):
        for which in ("A", "B"):
            rep = closed_form_report(2, u, which, 11)
            assert rep["table_matches"], (u, which)


def test_two_adic_printed_discrepancies_documented():
    # u = 1 (mod 4): printed A has constant term 1, the table has no genus
    rep = closed_form_report(2, 1, "A", 8)
    assert not rep["printed_matches"]
    assert 0 in rep["printed_mismatch_at"]
    # u = 3 (mod 4): printed B denominator has q^3 where the sums give q^2
    rep = closed_form_report(2, 3, "B", 8)
    assert not rep["printed_matches"]
    assert rep["printed_mismatch_at"] and min(rep["printed_mismatch_at"]) >= 2
    # B vanishes identically for u = 1 (mod 4) in both variants
    assert closed_form(2, 1, "B", "as-printed").series(8) == [0] * 8
    assert closed_form(2, 5, "B", "table").series(8) == [0] * 8


def test_closed_form_argument_validation():
    with pytest.raises(ValueError):
        closed_form(3, 1, "C")
    with pytest.raises(ValueError):
        closed_form(3, 1, "A", "other")


# ---------------------------------------------------------------------------
# decomposition identity


def test_decomposition_single_class():
    res = decomposition_check(3)
    assert res["equal"]
    assert res["lhs"] == Fraction(2, 9) == Fraction(1, 2) * a_coeff(2, 3, 0) * a_coeff(3, 3, 1)


def test_decomposition_unrealizable():
    for S in (9, 45, 2, 6, 25):
        res = decomposition_check(S)
        assert res["equal"] and res["lhs"] == 0 and res["rhs"] == 0


def test_decomposition_with_constraints():
    res = decomposition_check(23, {23: 1})
    assert res["equal"] and res["lhs"] == Fraction(12, 529)
    res = decomposition_check(23, {23: -1})
    assert res["equal"] and res["lhs"] == 0
    res = decomposition_check(3, {2: -1})
    assert res["equal"] and res["lhs"] == Fraction(2, 9)
    res = decomposition_check(3, {2: 1})
    assert res["equal"] and res["lhs"] == 0
    # constraint at a prime away from the support
    res = decomposition_check(3, {5: -1})
    assert res["equal"] and res["lhs"] == 0
    res = decomposition_check(3, {5: 1})
    assert res["equal"] and res["lhs"] == Fraction(2, 9)


def test_decomposition_sweep_with_random_constraints():
    rng = random.Random(101)
    for S in range(1, 201):
        assert decomposition_check(S)["equal"], S
    for _ in range(50):
        S = rng.randint(1, 300)
        pool = sorted({2} | {p for p, _ in factor(S)} | {3, 5, 7})
        primes = rng.sample(pool, rng.randint(1, min(3, len(pool))))
        cons = {p: rng.choice((1, -1)) for p in primes}
        assert decomposition_check(S, cons)["equal"], (S, cons)


def test_genus_partition_labels_consistent():
    for S in (23, 36, 48, 75):
        for rec in genus_partition(S):
            prod = 1
            for p, lbl in rec["labels"].items():
                prod *= lbl
            assert prod == (-1 if S % 2 else 1)


# ---------------------------------------------------------------------------
# sign-tuple identity


def test_sign_tuple_identity():
    for t in (1, 2, 3, 4):
        for c in (1, -1):
            assert sign_tuple_identity(t, c)


def test_sign_tuple_identity_small_cases_symbolic():
    # |T| = 2, c = -1: (X1+Y1)(X2-Y2) + (X1-Y1)(X2+Y2) = 2(X1X2 - Y1Y2)
    rng = random.Random(4)
    for _ in range(20):
        x1, x2, y1, y2 = (Fraction(rng.randint(-9, 9)) for _ in range(4))
        lhs = (x1 + y1) * (x2 - y2) + (x1 - y1) * (x2 + y2)
        assert lhs == 2 * (x1 * x2 - y1 * y2)


def test_sign_tuple_identity_validation():
    with pytest.raises(ValueError):
        sign_tuple_identity(5, 1)
    with pytest.raises(ValueError):
        sign_tuple_identity(2, 0)
