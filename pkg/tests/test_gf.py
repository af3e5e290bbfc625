"""Finite-field construction: irreducibility and arithmetic axioms."""

import sympy
from sympy.abc import x as sym_x

from wordstream.gf import GF2Field, GField, find_irreducible, is_irreducible, make_field
from wordstream.rng import Rng


def _sympy_irreducible(lower, p, e):
    coeffs = list(lower) + [1]  # our convention: lower coeffs of a monic poly
    poly = sum(int(c) * sym_x ** i for i, c in enumerate(coeffs))
    return sympy.Poly(poly, sym_x, modulus=p).is_irreducible


def test_irreducibility_matches_sympy_exhaustive_small():
    for p in (2, 3):
        for e in (2, 3, 4):
            for idx in range(p ** e):
                lower = tuple((idx // p ** i) % p for i in range(e))
                assert is_irreducible(lower, p, e) == _sympy_irreducible(lower, p, e), \
                    (p, e, lower)


def test_irreducibility_matches_sympy_sampled():
    rng = Rng(77)
    for p, e, count in ((2, 8, 120), (2, 13, 120), (3, 6, 80), (5, 4, 80)):
        for _ in range(count):
            lower = tuple(rng.randrange(0, p - 1) for _ in range(e))
            assert is_irreducible(lower, p, e) == _sympy_irreducible(lower, p, e), \
                (p, e, lower)


def test_find_irreducible_is_deterministic_and_valid():
    # First candidate in index order; these values are frozen so that
    # machine configurations stay stable across releases.
    assert find_irreducible(2, 8) == (1, 1, 0, 1, 1, 0, 0, 0)
    assert find_irreducible(3, 4) == (2, 1, 0, 0)
    assert find_irreducible(5, 3) == (1, 1, 0)
    for p, e in ((2, 8), (2, 22), (3, 4), (5, 3), (7, 2)):
        lower = find_irreducible(p, e)
        assert len(lower) == e
        assert _sympy_irreducible(lower, p, e)


def test_field_axioms_sampled():
    rng = Rng(13)
    for p, e in ((2, 6), (3, 3), (5, 2), (7, 2)):
        field = make_field(p, e)
        size = p ** e
        elems = [rng.randrange(0, size - 1) for _ in range(12)]
        # element index 1 encodes the constant polynomial 1, index 0 encodes 0
        for a in elems:
            assert field.mul(a, 1) == a
            assert field.add(a, 0) == a
            assert field.add(a, field.neg(a)) == 0
            if a != 0:
                assert field.mul(a, field.inv(a)) == 1
        for a, b in zip(elems, elems[1:]):
            assert field.mul(a, b) == field.mul(b, a)
            c = elems[0]
            lhs = field.mul(a, field.add(b, c))
            rhs = field.add(field.mul(a, b), field.mul(a, c))
            assert lhs == rhs


def test_gf2_bitmask_mul_matches_generic():
    # make_field(2, e) returns the bitmask specialization; its mul must
    # agree with the generic digit-vector arithmetic on the same modulus.
    fast = make_field(2, 10)
    assert isinstance(fast, GF2Field)
    slow = GField(2, 10)
    assert fast.modulus_lower == slow.modulus_lower
    rng = Rng(99)
    for _ in range(300):
        a = rng.bits(10)
        b = rng.bits(10)
        assert fast.mul(a, b) == slow.mul(a, b)
        assert fast.add(a, b) == slow.add(a, b)


def test_pow_and_frobenius():
    for p, e in ((2, 8), (3, 3)):
        field = make_field(p, e)
        size = p ** e
        rng = Rng(55)
        for _ in range(20):
            a = rng.randrange(1, size - 1)
            # Lagrange: the multiplicative group has order size - 1
            assert field.pow(a, size - 1) == 1
            assert field.pow(a, size) == a
