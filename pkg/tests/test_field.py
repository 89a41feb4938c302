"""Field backends: parsing, arithmetic, and nonzero-root extraction."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from evoalg import (
    FieldScalar,
    FieldSpec,
    IdenticallyZeroPolynomial,
    InversionOfZero,
    LowDegreePoly,
    MalformedScalar,
    MixedFieldSpecs,
    ZeroDenominator,
    nonzero_roots,
    scalar_parse,
)
from support import F2, F3, F5, Q, R9, bisect_root


def test_spec_validation():
    with pytest.raises(ValueError):
        FieldSpec.prime_field(6)
    with pytest.raises(ValueError):
        FieldSpec.prime_field(1)
    with pytest.raises(ValueError):
        FieldSpec.approx_reals(0.0)
    with pytest.raises(ValueError):
        FieldSpec("weird")
    assert FieldSpec.prime_field(7).p == 7
    assert FieldSpec.approx_reals(1e-6).tol == 1e-6


def test_parse_reduces_rationals():
    x = scalar_parse("-2/4", Q)
    assert x.value == Fraction(-1, 2)
    assert x.render() == "-1/2"


def test_parse_normalizes_residues():
    assert scalar_parse("7", F5).value == 2
    assert scalar_parse("-1", F5).value == 4
    assert scalar_parse("3/2", F5).value == (3 * pow(2, -1, 5)) % 5


def test_parse_zero_denominator():
    with pytest.raises(ZeroDenominator):
        scalar_parse("1/0", Q)
    with pytest.raises(ZeroDenominator):
        scalar_parse("1/5", F5)


def test_parse_rejects_decimal_over_exact_fields():
    with pytest.raises(MalformedScalar):
        scalar_parse("1.5", Q)
    with pytest.raises(MalformedScalar):
        scalar_parse("1e3", F5)


def test_parse_real_syntax():
    assert scalar_parse("1.5", R9).value == 1.5
    assert scalar_parse("-2e-3", R9).value == -0.002
    assert scalar_parse(".5", R9).value == 0.5
    with pytest.raises(MalformedScalar):
        scalar_parse("1/2", R9)
    with pytest.raises(MalformedScalar):
        scalar_parse("abc", R9)


@pytest.mark.parametrize("spec", [Q, F5])
def test_render_roundtrip_exact(spec):
    rng = random.Random(7)
    for _ in range(50):
        if spec is Q:
            x = FieldScalar(spec, Fraction(rng.randint(-40, 40), rng.randint(1, 12)))
        else:
            x = spec.from_int(rng.randrange(5))
        assert scalar_parse(x.render(), spec) == x


def test_render_roundtrip_reals():
    rng = random.Random(8)
    for _ in range(50):
        x = FieldScalar(R9, rng.uniform(-100, 100))
        assert scalar_parse(x.render(), R9).value == x.value


def test_exact_inverses():
    for k in range(1, 5):
        x = F5.from_int(k)
        assert (x * x.inv()).is_one()
    assert scalar_parse("2", F5).inv().value == 3
    rng = random.Random(3)
    for _ in range(50):
        x = FieldScalar(Q, Fraction(rng.randint(1, 60), rng.randint(1, 60)))
        assert (x * x.inv()).is_one()
        assert ((-x) * (-x).inv()).is_one()


def test_rational_addition():
    a = scalar_parse("1/2", Q)
    b = scalar_parse("1/3", Q)
    assert (a + b).value == Fraction(5, 6)


def test_inversion_of_zero():
    with pytest.raises(InversionOfZero):
        Q.zero().inv()
    with pytest.raises(InversionOfZero):
        FieldScalar(R9, 1e-12).inv()  # zero within tolerance


def test_mixed_specs_rejected():
    with pytest.raises(MixedFieldSpecs):
        Q.one() + F5.one()


def test_real_equality_uses_tolerance():
    assert FieldScalar(R9, 1.0) == FieldScalar(R9, 1.0 + 1e-12)
    assert FieldScalar(R9, 1.0) != FieldScalar(R9, 1.0 + 1e-6)


def test_scalar_pow():
    x = scalar_parse("2/3", Q)
    assert (x ** 3).value == Fraction(8, 27)
    assert (F5.from_int(2) ** 4).value == 1
    assert (x ** -1).value == Fraction(3, 2)


def _poly(spec, c3, c2, c1, c0):
    return LowDegreePoly.from_values(spec, c3, c2, c1, c0)


def test_cubic_without_rational_roots():
    poly = _poly(Q, 1, 0, -1, -1)  # x^3 - x - 1
    assert nonzero_roots(poly) == []


def test_degenerate_quadratic_over_q():
    poly = _poly(Q, 0, -1, 1, 0)  # x - x^2
    roots = nonzero_roots(poly)
    assert [r.value for r in roots] == [1]


def test_cubic_over_f5_matches_independent_horner():
    poly = _poly(F5, 1, 0, -1, -1)
    roots = {r.value for r in nonzero_roots(poly)}
    expected = set()
    for x in range(1, 5):
        if (pow(x, 3, 5) - x - 1) % 5 == 0:
            expected.add(x)
    assert roots == expected == {2}


def test_fp_roots_agree_with_horner_at_random():
    rng = random.Random(99)
    for p, spec in ((2, F2), (3, F3), (5, F5)):
        for _ in range(40):
            coeffs = [rng.randrange(p) for _ in range(4)]
            poly = _poly(spec, *coeffs)
            if poly.is_zero():
                continue
            got = {r.value for r in nonzero_roots(poly)}
            want = set()
            for x in range(1, p):
                acc = 0
                for c in coeffs:
                    acc = (acc * x + c) % p
                if acc == 0:
                    want.add(x)
            assert got == want


def test_real_cubic_single_root():
    # Independent oracle: bisection on x^3 - x - 1 over [1, 2].
    expected = bisect_root(lambda x: x ** 3 - x - 1.0, 1.0, 2.0)
    poly = _poly(R9, 1, 0, -1, -1)
    roots = nonzero_roots(poly)
    assert len(roots) == 1
    lam = roots[0].value
    assert abs(lam - expected) <= 1e-9
    assert abs(lam ** 3 - lam - 1.0) <= 1e-9


def test_real_cubic_three_roots():
    # (x-1)(x-2)(x+3) = x^3 - 7x + 6
    poly = _poly(R9, 1, 0, -7, 6)
    roots = [r.value for r in nonzero_roots(poly)]
    assert len(roots) == 3
    for got, want in zip(roots, [-3.0, 1.0, 2.0]):
        assert abs(got - want) <= 1e-9


def test_real_cubic_excludes_zero_root():
    # x^3 - x^2 = x^2 (x - 1): only the nonzero root 1 is reported.
    poly = _poly(R9, 1, -1, 0, 0)
    roots = [r.value for r in nonzero_roots(poly)]
    assert len(roots) == 1
    assert abs(roots[0] - 1.0) <= 1e-9


def test_real_double_root():
    # (x-2)^2 = x^2 - 4x + 4, reported once (roots form a set).
    poly = _poly(R9, 0, 1, -4, 4)
    roots = [r.value for r in nonzero_roots(poly)]
    assert len(roots) == 1
    assert abs(roots[0] - 2.0) <= 1e-6


def test_real_cubic_double_root():
    # (x-1)^2 (x+2) = x^3 - 3x + 2
    poly = _poly(R9, 1, 0, -3, 2)
    roots = [r.value for r in nonzero_roots(poly)]
    assert len(roots) == 2
    assert abs(roots[0] + 2.0) <= 1e-7
    assert abs(roots[1] - 1.0) <= 1e-7


def test_real_residual_bound_holds():
    rng = random.Random(4242)
    for _ in range(200):
        coeffs = [rng.uniform(-5, 5) for _ in range(4)]
        poly = _poly(R9, *coeffs)
        scale = max(abs(c) for c in coeffs)
        for r in nonzero_roots(poly):
            val = poly.evaluate(r).value
            assert abs(val) <= 1e-9 * scale
            assert abs(r.value) > 1e-9


def test_rational_roots_found_exactly():
    # (2x - 1)(x + 3)(3x - 2) = 6x^3 + 11x^2 - 19x + 6... verify via expansion:
    # (2x-1)(x+3) = 2x^2 + 5x - 3; times (3x-2): 6x^3 + 15x^2 - 9x - 4x^2 - 10x + 6
    #             = 6x^3 + 11x^2 - 19x + 6
    poly = _poly(Q, 6, 11, -19, 6)
    roots = sorted(r.value for r in nonzero_roots(poly))
    assert roots == [Fraction(-3), Fraction(1, 2), Fraction(2, 3)]


def test_rational_roots_with_fraction_coefficients():
    # x^3/2 - x/2 = (x)(x-1)(x+1)/2: nonzero roots are +-1.
    poly = LowDegreePoly(
        scalar_parse("1/2", Q), Q.zero(), scalar_parse("-1/2", Q), Q.zero()
    )
    roots = sorted(r.value for r in nonzero_roots(poly))
    assert roots == [Fraction(-1), Fraction(1)]


def test_identically_zero_polynomial_signalled():
    with pytest.raises(IdenticallyZeroPolynomial):
        nonzero_roots(_poly(Q, 0, 0, 0, 0))
    with pytest.raises(IdenticallyZeroPolynomial):
        nonzero_roots(_poly(R9, 0.0, 0.0, 0.0, 0.0))


def test_roots_never_contain_zero():
    rng = random.Random(11)
    for spec in (Q, F3, F5):
        for _ in range(60):
            coeffs = [rng.randint(-4, 4) for _ in range(4)]
            poly = _poly(spec, *coeffs)
            if poly.is_zero():
                continue
            for r in nonzero_roots(poly):
                assert not r.is_zero()
                assert poly.evaluate(r).is_zero()


def test_poly_render():
    assert _poly(Q, 1, 0, -1, -1).render() == "x^3 - x - 1"
    assert _poly(Q, 0, -1, 1, 0).render() == "-x^2 + x"
    assert _poly(Q, 0, 0, 0, 5).render() == "5"
    assert _poly(F5, 1, 0, 4, 2).render() == "x^3 + 4*x + 2"


def test_nonfinite_parse_rejected():
    with pytest.raises(MalformedScalar):
        scalar_parse("1e999", R9)
