"""Base-ring arithmetic against independent reimplementations.

Polynomial products are cross-checked by plain convolution on dense
coefficient lists, quotient reduction by long division, and xgcd by
its defining identities.
"""

import pytest
from hypothesis import given, settings, strategies as st

from adic_smith.rings import (
    GF,
    QQ,
    IntegerRing,
    ModRing,
    PolyRing,
    QuotientRing,
    ring_from_json,
)

from conftest import poly_from_coeffs

ZZ = IntegerRing()
F2X = PolyRing(GF(2), "x")
QX = PolyRing(QQ, "x")


ints = st.integers(min_value=-10**6, max_value=10**6)
coeff_lists = st.lists(st.integers(min_value=-4, max_value=4), max_size=6)


@given(ints, ints)
def test_integer_xgcd_identity(a, b):
    g, u, v = ZZ.xgcd(a, b)
    assert u * a + v * b == g
    if a or b:
        assert g > 0 and a % g == 0 and b % g == 0
    else:
        assert g == 0


@given(ints, st.integers(min_value=-10**6, max_value=10**6).filter(bool))
def test_integer_divmod_is_euclidean(a, b):
    q, r = ZZ.divmod_(a, b)
    assert q * b + r == a
    assert ZZ.euclid_size(r) < ZZ.euclid_size(b) or r == 0


@given(st.integers(2, 60), ints, ints)
def test_mod_ring_matches_int_arithmetic(n, a, b):
    R = ModRing(n)
    x, y = R.from_int(a), R.from_int(b)
    assert R.add(x, y) == (a + b) % n
    assert R.mul(x, y) == (a * b) % n
    assert R.sub(x, y) == (a - b) % n
    assert R.neg(x) == (-a) % n


def _convolve(field, xs, ys):
    out = [field.zero] * (len(xs) + len(ys) - 1 or 1)
    for i, a in enumerate(xs):
        for j, b in enumerate(ys):
            out[i + j] = field.add(out[i + j], field.mul(a, b))
    return out


@pytest.mark.parametrize("ring", [F2X, QX], ids=["F2[x]", "Q[x]"])
@given(coeff_lists, coeff_lists)
@settings(max_examples=60)
def test_poly_mul_matches_convolution(ring, xs, ys):
    a = poly_from_coeffs(ring, xs)
    b = poly_from_coeffs(ring, ys)
    field = ring.field
    dense = _convolve(field, [field.from_int(c) for c in xs], [field.from_int(c) for c in ys])
    assert ring.mul(a, b) == ring.coerce_payload(tuple(dense))


@given(coeff_lists, coeff_lists.filter(lambda c: any(x % 2 for x in c)))
@settings(max_examples=60)
def test_poly_divmod_is_euclidean_over_f2(xs, ys):
    a = poly_from_coeffs(F2X, xs)
    b = poly_from_coeffs(F2X, ys)
    q, r = F2X.divmod_(a, b)
    assert F2X.add(F2X.mul(q, b), r) == a
    assert r == F2X.zero or F2X.euclid_size(r) < F2X.euclid_size(b)


@given(coeff_lists, coeff_lists)
@settings(max_examples=60)
def test_poly_xgcd_identity(xs, ys):
    a = poly_from_coeffs(QX, xs)
    b = poly_from_coeffs(QX, ys)
    g, u, v = QX.xgcd(a, b)
    assert QX.add(QX.mul(u, a), QX.mul(v, b)) == g
    if a != QX.zero:
        q, r = QX.divmod_(a, g)
        assert r == QX.zero


def test_stretch_is_substitution():
    # x^2 + x under x -> x^4 becomes x^8 + x^4
    p = poly_from_coeffs(F2X, [0, 1, 1])
    s = F2X.stretch(p, 4)
    assert s == poly_from_coeffs(F2X, [0, 0, 0, 0, 1, 0, 0, 0, 1])


def test_quotient_ring_reduction():
    R = QuotientRing(F2X, poly_from_coeffs(F2X, [0, 0, 1]))  # F2[x]/(x^2)
    x = R.coerce_payload(F2X.gen)
    assert R.mul(x, x) == R.zero
    assert R.add(R.one, R.one) == R.zero
    with pytest.raises(ValueError):
        QuotientRing(R, x)  # no towers of quotients


def test_quotient_ring_mod27():
    R = ModRing(27)
    assert R.mul(R.from_int(9), R.from_int(3)) == 0
    assert R.is_unit(R.from_int(2))
    assert not R.is_unit(R.from_int(3))
    assert R.mul(R.from_int(2), R.unit_inverse(R.from_int(2))) == R.one


@pytest.mark.parametrize("ring", [ZZ, ModRing(12), F2X, QX], ids=["ZZ", "Z12", "F2[x]", "Q[x]"])
def test_format_parse_round_trip(ring, rng):
    for _ in range(50):
        if ring is ZZ:
            a = rng.randint(-50, 50)
        elif isinstance(ring, ModRing):
            a = ring.from_int(rng.randint(0, 40))
        else:
            a = poly_from_coeffs(ring, [rng.randint(-3, 3) for _ in range(rng.randint(0, 5))])
        assert ring.parse(ring.format_elem(a)) == a


def test_ring_json_round_trip():
    specs = [
        {"kind": "integers"},
        {"kind": "mod", "n": 8},
        {"kind": "poly", "coeff": {"fp": 2}, "var": "x"},
        {"kind": "poly", "coeff": "rationals", "var": "y"},
        {"kind": "quotient", "base": {"kind": "poly", "coeff": {"fp": 2}, "var": "x"}, "modulus": "x^4"},
    ]
    for spec in specs:
        ring = ring_from_json(spec)
        assert ring_from_json(ring.to_json()) == ring


def test_ring_json_rejects_unknown_kind():
    with pytest.raises(ValueError):
        ring_from_json({"kind": "padic"})
    with pytest.raises(ValueError):
        ring_from_json("not a dict")


def test_gf_rejects_composites():
    with pytest.raises(ValueError):
        GF(9)
    assert GF(7).inv(3) == 5  # 3*5 = 15 = 1 mod 7
