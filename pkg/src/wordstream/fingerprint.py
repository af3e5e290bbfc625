"""Matrix-product fingerprints for linear and unitriangular groups.

A fingerprint machine tracks the product of scaled generator matrices,
evaluated at random points and reduced modulo a random prime (or into a
fixed finite field when the generators live in prime characteristic).
Equal words always collide; unequal words collide with probability
bounded by the recipe's epsilon_bound.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import ConstructionError
from .exact.matrixgrp import MatrixGroupPoly, MatrixGroupQ, mat_inv
from .gf import make_field
from .poly import Poly
from .primes import sample_prime
from .streaming import Recipe, StreamAutomaton, as_rng, pack_fields
from .words import Alphabet, Letter


def _lcm_denominator(matrices) -> int:
    lcm = 1
    for mat in matrices:
        for row in mat:
            for v in row:
                if isinstance(v, Fraction):
                    lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    return lcm


def _pmat_mul(a, b, char: int):
    r = len(a)
    out = []
    for i in range(r):
        row = []
        for j in range(r):
            acc = a[i][0] * b[0][j]
            for k in range(1, r):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc.reduce_mod(char) if char else acc)
        out.append(tuple(row))
    return tuple(out)


class LinearFingerprintSpec:
    """Scaled generators over Z[x1..xm]: each letter maps to t*M(letter).

    Storing t*M instead of M keeps every entry polynomial; the machine
    divides the scale back out after evaluation.  Scaled matrices for a
    letter and its inverse must multiply to t^2 * Id, which is verified
    at construction.
    """

    def __init__(self, alphabet: Alphabet, scaled: Mapping[Letter, tuple],
                 t: Poly, c: int, char: int = 0):
        if c < 1:
            raise ConstructionError("error exponent c must be >= 1")
        if char < 0:
            raise ConstructionError("characteristic must be 0 or a prime")
        if t.is_zero() or (char and t.reduce_mod(char).is_zero()):
            raise ConstructionError("scale polynomial t must be nonzero")
        self.alphabet = alphabet
        self.t = t
        self.c = c
        self.char = char
        self.m = t.nvars
        mats = dict(scaled)
        dims = {len(mat) for mat in mats.values()}
        if len(dims) != 1:
            raise ConstructionError("all generator matrices must share one dimension")
        self.r = dims.pop()
        for letter in alphabet.letters:
            if letter not in mats:
                raise ConstructionError("no scaled matrix for letter %s" % letter)
            mat = mats[letter]
            for row in mat:
                if len(row) != self.r:
                    raise ConstructionError("matrix for %s is not square" % letter)
                for entry in row:
                    if entry.nvars != self.m:
                        raise ConstructionError("entry arity differs from t")
        self.scaled = {letter: tuple(tuple(row) for row in mats[letter])
                       for letter in alphabet.letters}
        degrees = [t.degree()]
        for mat in self.scaled.values():
            degrees.extend(entry.degree() for row in mat for entry in row)
        self.d = max(degrees)
        self._check_inverses()

    def _check_inverses(self) -> None:
        tsq = self.t * self.t
        if self.char:
            tsq = tsq.reduce_mod(self.char)
        zero = Poly.const(self.m, 0)
        for name in self.alphabet.names:
            g = self.alphabet.letter(name)
            prod = _pmat_mul(self.scaled[g], self.scaled[self.alphabet.inverse(g)],
                             self.char)
            for i in range(self.r):
                for j in range(self.r):
                    want = tsq if i == j else zero
                    if prod[i][j] != want:
                        raise ConstructionError(
                            "scaled matrices for %r are not inverse up to t^2" % name)

    @classmethod
    def from_rational_matrices(cls, mats: Mapping[str, object], c: int
                               ) -> "LinearFingerprintSpec":
        """Exact-rational generators; inverses and the common scale are derived."""
        named = {}
        for name, rows in mats.items():
            mat = tuple(tuple(Fraction(v) for v in row) for row in rows)
            for row in mat:
                if len(row) != len(mat):
                    raise ConstructionError("matrix for %r is not square" % name)
            named[name] = mat
        inverses = {}
        self_inverse = []
        for name, mat in named.items():
            inv = mat_inv(mat)
            if inv is None:
                raise ConstructionError("generator %r is singular" % name)
            inv = tuple(tuple(Fraction(v) for v in row) for row in inv)
            inverses[name] = inv
            if inv == mat:
                self_inverse.append(name)
        alphabet = Alphabet(tuple(named), self_inverse=self_inverse)
        lcm = _lcm_denominator(list(named.values()) + list(inverses.values()))
        scaled = {}
        for name in named:
            g = alphabet.letter(name)
            scaled[g] = _scale_rational(named[name], lcm)
            if name not in alphabet.self_inverse:
                scaled[alphabet.inverse(g)] = _scale_rational(inverses[name], lcm)
        return cls(alphabet, scaled, Poly.const(0, lcm), c)

    @classmethod
    def from_matrix_group(cls, group, c: int) -> "LinearFingerprintSpec":
        """Reuse an exact matrix oracle's generators (and derived inverses)."""
        if isinstance(group, MatrixGroupQ):
            mats = [group.gen(letter) for letter in group.alphabet.letters]
            lcm = _lcm_denominator(mats)
            scaled = {letter: _scale_rational(group.gen(letter), lcm)
                      for letter in group.alphabet.letters}
            return cls(group.alphabet, scaled, Poly.const(0, lcm), c)
        if isinstance(group, MatrixGroupPoly):
            elements = {letter: group.gen(letter)
                        for letter in group.alphabet.letters}
            kmax = max(k for _, k in elements.values())
            tpow = [Poly.const(group.nvars, 1)]
            for _ in range(kmax):
                nxt = tpow[-1] * group.t
                tpow.append(nxt.reduce_mod(group.char) if group.char else nxt)
            scaled = {}
            for letter, (rows, k) in elements.items():
                lift = tpow[kmax - k]
                mat = tuple(
                    tuple((entry * lift).reduce_mod(group.char) if group.char
                          else entry * lift for entry in row)
                    for row in rows)
                scaled[letter] = mat
            return cls(group.alphabet, scaled, tpow[kmax], c, char=group.char)
        raise ConstructionError(
            "expected a rational or polynomial matrix group, got %r" % type(group))


def _scale_rational(mat, lcm: int):
    out = []
    for row in mat:
        cells = []
        for v in row:
            scaled = Fraction(v) * lcm
            if scaled.denominator != 1:
                raise ConstructionError("scale %d does not clear denominator %s"
                                        % (lcm, v))
            cells.append(Poly.const(0, int(scaled)))
        out.append(tuple(cells))
    return tuple(out)


class LinearFingerprintRecipe(Recipe):
    """Fingerprint family over Z (random prime) or a fixed prime field.

    Characteristic zero: the modulus is a uniform prime from [N, 2N] with
    N = max(64, ceil(n^(c+1) * ln(n+2))), evaluation points are uniform in
    [1, 2d(n+1)^(c+1)]^m, and the false-accept bound is 1/n^c.  Prime
    characteristic p: the machine works in F_{p^e} for the least e with
    p^e >= 2d(n+1)^(c+1); with no variables the product is exact and the
    error bound is zero.
    """

    def __init__(self, spec: LinearFingerprintSpec):
        self.spec = spec
        self.alphabet = spec.alphabet

    def describe(self) -> str:
        s = self.spec
        return "fingerprint(r=%d, m=%d, c=%d, char=%d)" % (s.r, s.m, s.c, s.char)

    def _prime_interval(self, n: int) -> tuple[int, int]:
        lo = max(64, math.ceil(n ** (self.spec.c + 1) * math.log(n + 2)))
        return lo, 2 * lo

    def _point_bound(self, n: int) -> int:
        return max(2 * self.spec.d * (n + 1) ** (self.spec.c + 1), 1)

    def _field_degree(self, n: int) -> int:
        bound = 2 * self.spec.d * (n + 1) ** (self.spec.c + 1)
        e = 1
        while self.spec.char ** e < bound:
            e += 1
        return e

    def epsilon_bound(self, n: int) -> float:
        if self.spec.char and self.spec.m == 0:
            return 0.0
        return 1.0 / n ** self.spec.c

    def state_bits(self, n: int) -> int:
        s = self.spec
        if s.char:
            width = (s.char ** self._field_degree(n) - 1).bit_length()
            flag = 1 if s.m else 0
        else:
            width = (2 * self._prime_interval(n)[0]).bit_length()
            flag = 1
        return s.r * s.r * width + flag

    def config_bits(self, n: int) -> int:
        s = self.spec
        point = s.m * (self._point_bound(n) - 1).bit_length()
        if s.char:
            return point
        return (2 * self._prime_interval(n)[0]).bit_length() + point

    def build(self, n: int, seed) -> StreamAutomaton:
        rng = as_rng(seed)
        if self.spec.char:
            return _PrimeCharMachine(self, n, rng)
        return _CharZeroMachine(self, n, rng)


def _closed_power(mat, k: int, p: int):
    """k-th power of a 2x2 triangular matrix with equal diagonal, else None.

    [[u, v], [0, u]]^k = [[u^k, k u^(k-1) v], [0, u^k]] and the transpose
    case mirrors it; this keeps huge exponents cheap for the matrices that
    dominate long power blocks.
    """
    if len(mat) != 2 or mat[0][0] != mat[1][1]:
        return None
    u = mat[0][0]
    uk = pow(u, k, p)
    side = k % p * pow(u, k - 1, p) % p
    if mat[1][0] == 0:
        return ((uk, side * mat[0][1] % p), (0, uk))
    if mat[0][1] == 0:
        return ((uk, 0), (side * mat[1][0] % p, uk))
    return None


def _mat_mul_mod(a, b, p: int):
    r = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(r)) % p for j in range(r))
        for i in range(r))


def _mat_pow_mod(mat, k: int, p: int):
    r = len(mat)
    result = tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r))
    base = mat
    while k:
        if k & 1:
            result = _mat_mul_mod(result, base, p)
        k >>= 1
        if k:
            base = _mat_mul_mod(base, base, p)
    return result


class _CharZeroMachine(StreamAutomaton):
    def __init__(self, recipe: LinearFingerprintRecipe, n: int, rng):
        spec = recipe.spec
        super().__init__(spec.alphabet, n)
        self.spec = spec
        lo, hi = recipe._prime_interval(n)
        self.p = sample_prime(lo, hi, rng.child("prime"))
        self._modulus_bits = hi.bit_length()
        bound = recipe._point_bound(n)
        self._point_bits = (bound - 1).bit_length()
        ev = rng.child("eval")
        point = tuple(ev.randrange(1, bound) for _ in range(spec.m))
        self.point = point
        tv = spec.t.evaluate(point, self.p)
        self.degenerate = tv == 0
        if self.degenerate:
            self.B = None
            self._step = {}
        else:
            tinv = pow(tv, self.p - 2, self.p)
            init = pow(tv, n + 1, self.p)
            self.B = tuple(tuple(init if i == j else 0 for j in range(spec.r))
                           for i in range(spec.r))
            self._step = {
                letter: tuple(
                    tuple(entry.evaluate(point, self.p) * tinv % self.p
                          for entry in row)
                    for row in mat)
                for letter, mat in spec.scaled.items()}
        self._seal()

    def _apply(self, letter: Letter) -> None:
        if self.degenerate:
            return
        self.B = _mat_mul_mod(self.B, self._step[letter], self.p)

    def _apply_power(self, letter: Letter, k: int) -> None:
        if self.degenerate:
            return
        step = self._step[letter]
        power = _closed_power(step, k, self.p)
        if power is None:
            power = _mat_pow_mod(step, k, self.p)
        self.B = _mat_mul_mod(self.B, power, self.p)

    def _snap(self):
        return self.B

    def _restore(self, snap) -> None:
        self.B = snap

    def state_index(self) -> int:
        w = self.p.bit_length()
        if self.degenerate:
            fields = [(0, w)] * (self.spec.r ** 2) + [(1, 1)]
        else:
            fields = [(v, w) for row in self.B for v in row] + [(0, 1)]
        return pack_fields(fields)

    def layout(self) -> tuple:
        w = self.p.bit_length()
        r = self.spec.r
        cells = tuple(("B[%d][%d]" % (i, j), w) for i in range(r) for j in range(r))
        return cells + (("degenerate", 1),)

    def config_layout(self) -> tuple:
        prime = (("p", self._modulus_bits),)
        return prime + tuple(("s[%d]" % i, self._point_bits)
                             for i in range(self.spec.m))


class _PrimeCharMachine(StreamAutomaton):
    def __init__(self, recipe: LinearFingerprintRecipe, n: int, rng):
        spec = recipe.spec
        super().__init__(spec.alphabet, n)
        self.spec = spec
        e = recipe._field_degree(n)
        self.field = make_field(spec.char, e)
        self.size = spec.char ** e
        bound = recipe._point_bound(n)
        self._point_bits = (bound - 1).bit_length()
        # Evaluation points are the first field elements in enumeration
        # order, so a uniform index below the point bound is always valid.
        ev = rng.child("eval")
        point = tuple(ev.randrange(0, min(bound, self.size) - 1)
                      for _ in range(spec.m))
        self.point = point
        tv = self._eval(spec.t)
        self.degenerate = tv == 0
        if self.degenerate:
            self.B = None
            self._step = {}
        else:
            tinv = self.field.inv(tv)
            init = self.field.pow(tv, n + 1)
            self.B = tuple(tuple(init if i == j else 0 for j in range(spec.r))
                           for i in range(spec.r))
            self._step = {
                letter: tuple(
                    tuple(self.field.mul(tinv, self._eval(entry)) for entry in row)
                    for row in mat)
                for letter, mat in spec.scaled.items()}
        self._seal()

    def _eval(self, poly: Poly) -> int:
        f = self.field
        acc = 0
        for exps, coef in poly.terms.items():
            term = f.from_int(coef)
            for value, e in zip(self.point, exps):
                if e:
                    term = f.mul(term, f.pow(value, e))
            acc = f.add(acc, term)
        return acc

    def _mat_mul(self, a, b):
        f = self.field
        r = self.spec.r
        out = []
        for i in range(r):
            row = []
            for j in range(r):
                acc = f.mul(a[i][0], b[0][j])
                for k in range(1, r):
                    acc = f.add(acc, f.mul(a[i][k], b[k][j]))
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    def _apply(self, letter: Letter) -> None:
        if self.degenerate:
            return
        self.B = self._mat_mul(self.B, self._step[letter])

    def _apply_power(self, letter: Letter, k: int) -> None:
        if self.degenerate:
            return
        r = self.spec.r
        result = tuple(tuple(1 if i == j else 0 for j in range(r))
                       for i in range(r))
        base = self._step[letter]
        while k:
            if k & 1:
                result = self._mat_mul(result, base)
            k >>= 1
            if k:
                base = self._mat_mul(base, base)
        self.B = self._mat_mul(self.B, result)

    def _snap(self):
        return self.B

    def _restore(self, snap) -> None:
        self.B = snap

    def state_index(self) -> int:
        w = (self.size - 1).bit_length()
        flag = (((1 if self.degenerate else 0), 1),) if self.spec.m else ()
        if self.degenerate:
            cells = [(0, w)] * (self.spec.r ** 2)
        else:
            cells = [(v, w) for row in self.B for v in row]
        return pack_fields(cells + list(flag))

    def layout(self) -> tuple:
        w = (self.size - 1).bit_length()
        r = self.spec.r
        cells = tuple(("B[%d][%d]" % (i, j), w) for i in range(r) for j in range(r))
        if self.spec.m:
            return cells + (("degenerate", 1),)
        return cells

    def config_layout(self) -> tuple:
        return tuple(("s[%d]" % i, self._point_bits) for i in range(self.spec.m))


class NilpotentFingerprintSpec:
    """Integer unitriangular generators tracked modulo a polylog-size prime."""

    def __init__(self, gens: Mapping[str, object], c: int = 2):
        if c < 1:
            raise ConstructionError("error exponent c must be >= 1")
        self.c = c
        named = {}
        for name, rows in gens.items():
            mat = tuple(tuple(int(v) for v in row) for row in rows)
            d = len(mat)
            for i, row in enumerate(mat):
                if len(row) != d:
                    raise ConstructionError("matrix for %r is not square" % name)
                for j, v in enumerate(row):
                    if i == j and v != 1:
                        raise ConstructionError("matrix for %r is not unitriangular" % name)
                    if i > j and v != 0:
                        raise ConstructionError("matrix for %r is not unitriangular" % name)
            named[name] = mat
        dims = {len(m) for m in named.values()}
        if len(dims) != 1:
            raise ConstructionError("all generator matrices must share one dimension")
        self.d = dims.pop()
        self.gens = named
        inverses = {}
        self_inverse = []
        for name, mat in named.items():
            inv = mat_inv(mat)
            inv = tuple(tuple(int(v) for v in row) for row in inv)
            inverses[name] = inv
            if inv == mat:
                self_inverse.append(name)
        self.alphabet = Alphabet(tuple(named), self_inverse=self_inverse)
        self.mats = {}
        for name in named:
            g = self.alphabet.letter(name)
            self.mats[g] = named[name]
            if name not in self.alphabet.self_inverse:
                self.mats[self.alphabet.inverse(g)] = inverses[name]


class NilpotentFingerprintRecipe(Recipe):
    """Unitriangular product modulo a prime of polylog(n) bits.

    The entries of a product of n unitriangular d x d integer matrices
    stay below (n * max_entry)^d up to constants, so a random prime from
    [N, 2N] with N = max(64, ceil((log2 n)^(c+1) * log2(log2 n))) gives a
    false-accept probability at most 1/(log2 n)^c.  Needs n >= 4.
    """

    def __init__(self, spec: NilpotentFingerprintSpec):
        self.spec = spec
        self.alphabet = spec.alphabet

    def describe(self) -> str:
        return "nilpotent-fingerprint(d=%d, c=%d)" % (self.spec.d, self.spec.c)

    def _prime_interval(self, n: int) -> tuple[int, int]:
        if n < 4:
            raise ConstructionError("nilpotent fingerprint needs n >= 4")
        lg = math.log2(n)
        lo = max(64, math.ceil(lg ** (self.spec.c + 1) * math.log2(lg)))
        return lo, 2 * lo

    def epsilon_bound(self, n: int) -> float:
        if n < 4:
            raise ConstructionError("nilpotent fingerprint needs n >= 4")
        return 1.0 / math.log2(n) ** self.spec.c

    def state_bits(self, n: int) -> int:
        width = (2 * self._prime_interval(n)[0]).bit_length()
        d = self.spec.d
        return d * (d - 1) // 2 * width

    def config_bits(self, n: int) -> int:
        return (2 * self._prime_interval(n)[0]).bit_length()

    def build(self, n: int, seed) -> StreamAutomaton:
        return _NilpotentMachine(self, n, as_rng(seed))


class _NilpotentMachine(StreamAutomaton):
    def __init__(self, recipe: NilpotentFingerprintRecipe, n: int, rng):
        spec = recipe.spec
        super().__init__(spec.alphabet, n)
        self.spec = spec
        lo, hi = recipe._prime_interval(n)
        self.p = sample_prime(lo, hi, rng.child("prime"))
        self._modulus_bits = hi.bit_length()
        d = spec.d
        self.B = tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))
        self._step = {
            letter: tuple(tuple(v % self.p for v in row) for row in mat)
            for letter, mat in spec.mats.items()}
        self._seal()

    def _apply(self, letter: Letter) -> None:
        self.B = _mat_mul_mod(self.B, self._step[letter], self.p)

    def _apply_power(self, letter: Letter, k: int) -> None:
        step = self._step[letter]
        power = _closed_power(step, k, self.p)
        if power is None:
            power = _mat_pow_mod(step, k, self.p)
        self.B = _mat_mul_mod(self.B, power, self.p)

    def _snap(self):
        return self.B

    def _restore(self, snap) -> None:
        self.B = snap

    def state_index(self) -> int:
        w = self.p.bit_length()
        d = self.spec.d
        fields = [(self.B[i][j], w) for i in range(d) for j in range(i + 1, d)]
        return pack_fields(fields)

    def layout(self) -> tuple:
        w = self.p.bit_length()
        d = self.spec.d
        return tuple(("B[%d][%d]" % (i, j), w)
                     for i in range(d) for j in range(i + 1, d))

    def config_layout(self) -> tuple:
        return (("p", self._modulus_bits),)


class ZCounterRecipe(Recipe):
    """The integers tracked as a single residue modulo a random prime.

    The rank-1 unitriangular fingerprint [[1,1],[0,1]]^k is determined by
    its top-right entry k mod p, so packing the whole matrix would
    advertise four residues of state where one carries all information;
    compositions size themselves by 2^state_bits, so the width matters.
    The prime interval and the advertised 1/n^c bound mirror the matrix
    fingerprint.  Since any net count within the length bound stays below
    the prime, the machine never actually errs; the advertised bound is
    deliberately slack to keep composed bounds in their published form.
    """

    def __init__(self, name: str = "a", c: int = 4):
        if c < 1:
            raise ConstructionError("error exponent c must be >= 1")
        self.c = c
        self.name = name
        self.alphabet = Alphabet((name,))

    def describe(self) -> str:
        return "counter(c=%d)" % self.c

    def _prime_interval(self, n: int) -> tuple[int, int]:
        lo = max(64, math.ceil(n ** (self.c + 1) * math.log(n + 2)))
        return lo, 2 * lo

    def epsilon_bound(self, n: int) -> float:
        return 1.0 / n ** self.c

    def state_bits(self, n: int) -> int:
        return (2 * self._prime_interval(n)[0]).bit_length()

    def config_bits(self, n: int) -> int:
        return (2 * self._prime_interval(n)[0]).bit_length()

    def build(self, n: int, seed) -> StreamAutomaton:
        return _ZCounterMachine(self, n, as_rng(seed))


class _ZCounterMachine(StreamAutomaton):
    def __init__(self, recipe: ZCounterRecipe, n: int, rng):
        super().__init__(recipe.alphabet, n)
        lo, hi = recipe._prime_interval(n)
        self.p = sample_prime(lo, hi, rng.child("prime"))
        self._modulus_bits = hi.bit_length()
        self._width = (2 * lo).bit_length()
        self.z = 0
        self._seal()

    def _apply(self, letter: Letter) -> None:
        self.z = (self.z - 1 if letter.inv else self.z + 1) % self.p

    def _apply_power(self, letter: Letter, k: int) -> None:
        self.z = (self.z - k if letter.inv else self.z + k) % self.p

    def _snap(self):
        return self.z

    def _restore(self, snap) -> None:
        self.z = snap

    def state_index(self) -> int:
        return self.z

    def layout(self) -> tuple:
        return (("z", self._width),)

    def config_layout(self) -> tuple:
        return (("p", self._modulus_bits),)


def sanov_fingerprint(c: int = 1) -> LinearFingerprintRecipe:
    """Rank-2 free group as [[1,2],[0,1]] and [[1,0],[2,1]]."""
    spec = LinearFingerprintSpec.from_rational_matrices(
        {"a": ((1, 2), (0, 1)), "b": ((1, 0), (2, 1))}, c)
    return LinearFingerprintRecipe(spec)


def line_fingerprint(c: int = 4, name: str = "a") -> ZCounterRecipe:
    """The integers, one residue of state instead of a packed matrix."""
    return ZCounterRecipe(name, c)


def _mat2_mul(x, y):
    return ((x[0][0] * y[0][0] + x[0][1] * y[1][0],
             x[0][0] * y[0][1] + x[0][1] * y[1][1]),
            (x[1][0] * y[0][0] + x[1][1] * y[1][0],
             x[1][0] * y[0][1] + x[1][1] * y[1][1]))


def free_fingerprint(names: Sequence[str], c: int = 1) -> LinearFingerprintRecipe:
    """Free group of rank len(names) inside SL2(Z).

    Rank 2 uses the classic pair [[1,2],[0,1]], [[1,0],[2,1]]; higher
    ranks map the i-th generator to A^i B A^-i, which stay free because
    they generate a finite-index subgroup of the rank-2 copy.
    """
    names = tuple(names)
    if not names:
        raise ConstructionError("free fingerprint needs at least one name")
    a = ((1, 2), (0, 1))
    b = ((1, 0), (2, 1))
    if len(names) == 1:
        gens = {names[0]: b}
    elif len(names) == 2:
        gens = {names[0]: a, names[1]: b}
    else:
        a_inv = ((1, -2), (0, 1))
        gens = {}
        left = ((1, 0), (0, 1))
        right = ((1, 0), (0, 1))
        for name in names:
            gens[name] = _mat2_mul(left, _mat2_mul(b, right))
            left = _mat2_mul(left, a)
            right = _mat2_mul(a_inv, right)
    spec = LinearFingerprintSpec.from_rational_matrices(gens, c)
    return LinearFingerprintRecipe(spec)
