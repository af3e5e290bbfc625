"""Finite fields F_{p^e} with deterministic modulus choice.

Field elements are integer indices in [0, p^e): the base-p digits of the
index, little-endian, are the coefficients of the residue polynomial.  This
makes elements directly usable in packed state encodings.

The irreducible modulus is not random: monic polynomials x^e + g are tried
with g running through the same index enumeration (index 0, 1, 2, ...) and
the first irreducible one wins, so every run of every process agrees on the
field tables.
"""

from __future__ import annotations

from .errors import ConstructionError

# ---------------------------------------------------------------------------
# dense univariate arithmetic over F_p (little-endian coefficient lists)


def _trim(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _polymul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _trim(out)


def _polymod(a: list[int], f: list[int], p: int) -> list[int]:
    # f monic
    a = list(a)
    deg_f = len(f) - 1
    while len(a) - 1 >= deg_f and a:
        coef = a[-1]
        shift = len(a) - 1 - deg_f
        if coef:
            for i, cf in enumerate(f):
                a[shift + i] = (a[shift + i] - coef * cf) % p
        a.pop()
        _trim(a)
    return a


def _polypow_x(exp: int, f: list[int], p: int) -> list[int]:
    """x^exp mod f."""
    result = [1]
    base = _polymod([0, 1], f, p)
    while exp:
        if exp & 1:
            result = _polymod(_polymul(result, base, p), f, p)
        base = _polymod(_polymul(base, base, p), f, p)
        exp >>= 1
    return result


def _polygcd(a: list[int], b: list[int], p: int) -> list[int]:
    # trim before the truthiness test: an all-zero list is the zero poly
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        # make b monic for a clean remainder step
        inv_lead = pow(b[-1], p - 2, p)
        b_monic = [(c * inv_lead) % p for c in b]
        a, b = b, _trim(_polymod(a, b_monic, p))
    return a


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# mod-2 polynomials as bitmasks (bit i = coefficient of x^i); squaring a
# polynomial over F_2 just spreads its exponents by two

def _gf2_square(a: int) -> int:
    out = 0
    while a:
        low = a & -a
        out |= 1 << (2 * (low.bit_length() - 1))
        a ^= low
    return out


def _gf2_mod(a: int, f: int) -> int:
    df = f.bit_length()
    top = a.bit_length()
    while top >= df:
        a ^= f << (top - df)
        top = a.bit_length()
    return a


def _gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _gf2_mod(a, b)
    return a


def _gf2_x_frob(f: int, rounds: int) -> int:
    """x^(2^rounds) mod f."""
    cur = _gf2_mod(2, f)
    for _ in range(rounds):
        cur = _gf2_mod(_gf2_square(cur), f)
    return cur


def _is_irreducible_gf2(lower: tuple[int, ...], e: int) -> bool:
    f = (1 << e) | sum(bit << i for i, bit in enumerate(lower))
    if _gf2_x_frob(f, e) != 2:
        return False
    for q in _prime_factors(e):
        if _gf2_gcd(_gf2_x_frob(f, e // q) ^ 2, f) != 1:
            return False
    return True


def is_irreducible(lower: tuple[int, ...], p: int, e: int) -> bool:
    """Test x^e + lower (little-endian lower coefficients) over F_p."""
    if e == 1:
        return True
    if p == 2:
        return _is_irreducible_gf2(lower, e)
    f = list(lower) + [1]
    # x^(p^e) == x mod f, and gcd(x^(p^(e/q)) - x, f) == 1 for prime q | e
    xq = _polypow_x(p ** e, f, p)
    if _trim(list(xq)) != [0, 1]:
        return False
    for q in _prime_factors(e):
        g = list(_polypow_x(p ** (e // q), f, p))
        while len(g) < 2:
            g.append(0)
        g[1] = (g[1] - 1) % p
        if len(_polygcd(g, f, p)) - 1 != 0:
            return False
    return True


def find_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lower coefficients of the first irreducible monic x^e + g."""
    if e < 1:
        raise ConstructionError("field extension degree must be >= 1")
    for index in range(p ** min(e, 24)):
        lower = _digits(index, p, e)
        if is_irreducible(lower, p, e) and (e == 1 or any(lower)):
            # any(lower) rules out x^e itself, reducible for e > 1
            return lower
    raise ConstructionError("no irreducible polynomial found for p=%d e=%d" % (p, e))


def _digits(value: int, p: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return tuple(out)


def _undigits(digits, p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


# ---------------------------------------------------------------------------


class GField:
    """Arithmetic in F_{p^e} on integer element indices."""

    def __init__(self, p: int, e: int):
        self.p = p
        self.e = e
        self.order = p ** e
        self.modulus_lower = find_irreducible(p, e)

    def add(self, a: int, b: int) -> int:
        da, db = _digits(a, self.p, self.e), _digits(b, self.p, self.e)
        return _undigits([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def neg(self, a: int) -> int:
        return _undigits([(-x) % self.p for x in _digits(a, self.p, self.e)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scale(self, a: int, k: int) -> int:
        """a times the integer scalar k (k reduced mod p)."""
        k %= self.p
        return _undigits([(x * k) % self.p for x in _digits(a, self.p, self.e)], self.p)

    def mul(self, a: int, b: int) -> int:
        prod = _polymul(list(_digits(a, self.p, self.e)),
                        list(_digits(b, self.p, self.e)), self.p)
        f = list(self.modulus_lower) + [1]
        return _undigits(_polymod(prod, f, self.p) + [0] * self.e, self.p)

    def pow(self, a: int, k: int) -> int:
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self.pow(a, self.order - 2)

    def from_int(self, value: int) -> int:
        """Image of an integer under Z -> F_p -> F_{p^e}."""
        return value % self.p


class GF2Field(GField):
    """F_{2^e} specialization: elements are bitmasks, ops are int bit tricks."""

    def __init__(self, e: int):
        super().__init__(2, e)
        self.modulus_mask = (1 << e) | sum(bit << i for i, bit in enumerate(self.modulus_lower))

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def neg(self, a: int) -> int:
        return a

    def sub(self, a: int, b: int) -> int:
        return a ^ b

    def scale(self, a: int, k: int) -> int:
        return a if k & 1 else 0

    def mul(self, a: int, b: int) -> int:
        if a.bit_count() > b.bit_count():
            a, b = b, a
        prod = 0
        while a:
            low = a & -a
            prod ^= b << (low.bit_length() - 1)
            a ^= low
        e, f = self.e, self.modulus_mask
        top = prod.bit_length()
        while top > e:
            prod ^= f << (top - 1 - e)
            top = prod.bit_length()
        return prod


def make_field(p: int, e: int) -> GField:
    return GF2Field(e) if p == 2 else GField(p, e)
