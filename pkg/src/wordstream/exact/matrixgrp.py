"""Exact matrix group oracles.

Two flavors:

* MatrixGroupQ: entries are rationals, multiplication and inversion are exact
  via Fraction arithmetic.  Element: tuple of row tuples, entries normalized
  to int when the denominator is 1.

* MatrixGroupPoly: entries are polynomials over Z (or over F_p when char is
  set), with a common scaling polynomial t.  An element is a pair (P, k)
  standing for P / t^k, kept in lowest terms, so equal group elements have
  equal data.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import ConstructionError
from ..poly import Poly
from ..words import Alphabet, Word
from .base import ExactGroup


def _norm_entry(v):
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return int(v)
        return v
    if isinstance(v, int):
        return v
    raise ConstructionError("matrix entries must be int or Fraction, got %r" % (v,))


def _norm_matrix(rows):
    r = len(rows)
    for row in rows:
        if len(row) != r:
            raise ConstructionError("matrix must be square")
    return tuple(tuple(_norm_entry(v) for v in row) for row in rows)


def identity_matrix(r: int):
    return tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r))


def mat_mul(a, b):
    r = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(r)) for j in range(r))
        for i in range(r)
    )


def mat_inv(mat):
    """Exact inverse via Gauss-Jordan over Fraction; None if singular."""
    r = len(mat)
    work = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(r)]
            for i, row in enumerate(mat)]
    for col in range(r):
        pivot = next((i for i in range(col, r) if work[i][col] != 0), None)
        if pivot is None:
            return None
        work[col], work[pivot] = work[pivot], work[col]
        pv = work[col][col]
        work[col] = [v / pv for v in work[col]]
        for i in range(r):
            if i != col and work[i][col] != 0:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[col])]
    return tuple(tuple(_norm_entry(v) for v in row[r:]) for row in work)


def is_unitriangular(mat) -> bool:
    r = len(mat)
    for i in range(r):
        for j in range(r):
            v = mat[i][j]
            if i == j and v != 1:
                return False
            if i > j and v != 0:
                return False
            if not isinstance(v, int):
                return False
    return True


class MatrixGroupQ(ExactGroup):
    kind = "matrix"

    def __init__(self, gens: dict, names=None, relator_words=()):
        names = tuple(names) if names is not None else tuple(gens)
        mats = {name: _norm_matrix(gens[name]) for name in names}
        dims = {len(m) for m in mats.values()}
        if len(dims) != 1:
            raise ConstructionError("generators must share one dimension")
        self.dim = dims.pop()
        invs = {}
        for name, m in mats.items():
            mi = mat_inv(m)
            if mi is None:
                raise ConstructionError("generator %r is singular" % name)
            invs[name] = mi
        self_inverse = tuple(n for n in names if mats[n] == invs[n])
        super().__init__(Alphabet(names, self_inverse=self_inverse))
        self._inv_table = invs
        self._set_gens(mats)
        self._relators = tuple(self.alphabet.parse_word(w) for w in relator_words)
        for rel in self._relators:
            if not self.is_identity_word(rel):
                raise ConstructionError("relator %r does not hold"
                                        % self.alphabet.format_word(rel))

    @property
    def identity(self):
        return identity_matrix(self.dim)

    def mul(self, x, y):
        return mat_mul(x, y)

    def inv(self, x):
        for name, m in self._gens.items():
            if m == x:
                base = self._inv_table.get(name[0])
                if base is not None and not name[1]:
                    return base
        out = mat_inv(x)
        if out is None:
            raise ConstructionError("element is singular")
        return out

    def relators(self) -> tuple[Word, ...]:
        return self._relators


class UTMatrixGroup(MatrixGroupQ):
    """Integer unitriangular matrices; rejects generators outside UT_d(Z)."""

    kind = "unitriangular"

    def __init__(self, gens: dict, names=None, relator_words=()):
        for name, rows in gens.items():
            if not is_unitriangular(_norm_matrix(rows)):
                raise ConstructionError("generator %r is not integer unitriangular"
                                        % name)
        super().__init__(gens, names=names, relator_words=relator_words)


# -- polynomial-entry matrices ------------------------------------------------


def _poly_identity(r: int, nvars: int, scale: Poly):
    zero = Poly.const(nvars, 0)
    return tuple(tuple(scale if i == j else zero for j in range(r)) for i in range(r))


def _poly_mat_mul(a, b, red):
    r = len(a)
    out = []
    for i in range(r):
        row = []
        for j in range(r):
            acc = a[i][0] * b[0][j]
            for k in range(1, r):
                acc = acc + a[i][k] * b[k][j]
            row.append(red(acc))
        out.append(tuple(row))
    return tuple(out)


def _poly_det(mat, red):
    r = len(mat)
    if r == 1:
        return mat[0][0]
    acc = None
    for j in range(r):
        minor = tuple(row[:j] + row[j + 1:] for row in mat[1:])
        term = mat[0][j] * _poly_det(minor, red)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return red(acc)


def _poly_adjugate(mat, red):
    r = len(mat)
    if r == 1:
        return ((Poly.const(mat[0][0].nvars, 1),),)
    cof = []
    for i in range(r):
        row = []
        for j in range(r):
            minor = tuple(
                tuple(v for jj, v in enumerate(rw) if jj != j)
                for ii, rw in enumerate(mat) if ii != i
            )
            m = _poly_det(minor, red)
            if (i + j) % 2:
                m = -m
            row.append(red(m))
        cof.append(row)
    return tuple(tuple(cof[j][i] for j in range(r)) for i in range(r))


class MatrixGroupPoly(ExactGroup):
    """Group of matrices P / t^k with polynomial entries, compared exactly.

    char = 0 works over Z[x1..xm]; char = p reduces coefficients mod p.
    """

    kind = "matrix_poly"
    data_orderable = False

    def __init__(self, gens: dict, t: Poly, nvars: int, char: int = 0,
                 names=None, explicit_inverses=None, relator_words=()):
        names = tuple(names) if names is not None else tuple(gens)
        self.nvars = nvars
        self.char = char
        t = self._red(t)
        if t.is_zero():
            raise ConstructionError("scaling polynomial is zero")
        self.t = t
        self.dim = None
        mats = {}
        for name in names:
            rows = tuple(tuple(self._red(p) for p in row) for row in gens[name])
            if self.dim is None:
                self.dim = len(rows)
            if len(rows) != self.dim or any(len(r) != self.dim for r in rows):
                raise ConstructionError("generators must share one square dimension")
            mats[name] = self._normalize((rows, 1))
        self._explicit_inv = {}
        if explicit_inverses:
            for name, (rows, k) in explicit_inverses.items():
                rows = tuple(tuple(self._red(p) for p in row) for row in rows)
                self._explicit_inv[name] = self._normalize((rows, k))
        self_inverse = []
        for n in names:
            gi = self._explicit_inv.get(n)
            if gi is None:
                gi = self._try_inv(mats[n])
            if gi == mats[n]:
                self_inverse.append(n)
        super().__init__(Alphabet(names, self_inverse=tuple(self_inverse)))
        self._base_names = {mats[name]: name for name in names}
        self._set_gens(mats)
        ident = self.identity
        for name in names:
            g = mats[name]
            gi = self._gens.get((name, True), g)
            if self.mul(g, gi) != ident:
                raise ConstructionError("inverse of %r is wrong" % name)
        self._relators = tuple(self.alphabet.parse_word(w) for w in relator_words)
        for rel in self._relators:
            if not self.is_identity_word(rel):
                raise ConstructionError("relator %r does not hold"
                                        % self.alphabet.format_word(rel))

    def _red(self, p: Poly) -> Poly:
        if self.char:
            return p.reduce_mod(self.char)
        return p

    def _normalize(self, elem):
        rows, k = elem
        t = self.t
        if t.is_const():
            # Constant scale: fold t^-k into the entries when possible.
            c = t.const_value()
            if abs(c) == 1:
                s = c ** (k % 2) if c == -1 else 1
                return (tuple(tuple(self._red(p * s) for p in row) for row in rows), 0)
            if self.char:
                s = pow(c % self.char, (self.char - 2) * k, self.char)
                return (tuple(tuple(self._red(p * s) for p in row) for row in rows), 0)
        while k > 0:
            divided = []
            ok = True
            for row in rows:
                new_row = []
                for p in row:
                    q = p.divide_exact(t, mod=self.char)
                    if q is None:
                        ok = False
                        break
                    new_row.append(q)
                if not ok:
                    break
                divided.append(tuple(new_row))
            if not ok:
                break
            rows = tuple(divided)
            k -= 1
        return (rows, k)

    @property
    def identity(self):
        return (_poly_identity(self.dim, self.nvars, Poly.const(self.nvars, 1)), 0)

    def mul(self, x, y):
        (px, kx), (py, ky) = x, y
        return self._normalize((_poly_mat_mul(px, py, self._red), kx + ky))

    def _try_inv(self, elem):
        rows, k = elem
        det = _poly_det(rows, self._red)
        if det.is_zero():
            return None
        adj = _poly_adjugate(rows, self._red)
        # The inverse value is adj * t^k / det.  Search the smallest extra
        # power j with t^(k+j) * adj divisible by det; the quotient is then
        # a valid numerator at denominator t^j.
        tk = Poly.const(self.nvars, 1)
        for _ in range(k):
            tk = self._red(tk * self.t)
        num = tuple(tuple(self._red(p * tk) for p in row) for row in adj)
        for j in range(self.dim * (k + 1) + 5):
            out = []
            ok = True
            for row in num:
                new_row = []
                for p in row:
                    q = p.divide_exact(det, mod=self.char)
                    if q is None:
                        ok = False
                        break
                    new_row.append(q)
                if not ok:
                    break
                out.append(tuple(new_row))
            if ok:
                return self._normalize((tuple(out), j))
            num = tuple(tuple(self._red(p * self.t) for p in row) for row in num)
        return None

    def inv(self, x):
        name = self._base_names.get(x)
        if name is not None:
            if name in self._explicit_inv:
                return self._explicit_inv[name]
            if name in self.alphabet.self_inverse:
                return x
            got = self._gens.get((name, True))
            if got is not None:
                return got
        out = self._try_inv(x)
        if out is None:
            raise ConstructionError(
                "element has no inverse over the polynomial ring; "
                "provide explicit inverses")
        return out

    def key_data(self, x):
        rows, k = x
        return (tuple(tuple(p.key() for p in row) for row in rows), k)

    def relators(self) -> tuple[Word, ...]:
        return self._relators


# -- stock generator matrices --------------------------------------------------


def sanov_gens():
    """Free generators of a rank-2 free subgroup of SL_2(Z)."""
    return {"a": ((1, 2), (0, 1)), "b": ((1, 0), (2, 1))}


def sl2_gens():
    return {"S": ((0, -1), (1, 0)), "T": ((1, 1), (0, 1))}


SL2_RELATORS = ("S S S S", "S T S T S T S T S T S T")


def heisenberg_gens():
    return {
        "x": ((1, 1, 0), (0, 1, 0), (0, 0, 1)),
        "y": ((1, 0, 0), (0, 1, 1), (0, 0, 1)),
        "z": ((1, 0, 1), (0, 1, 0), (0, 0, 1)),
    }


HEISENBERG_RELATORS = ("x y x- y- z-", "x z x- z-", "y z y- z-")


def dinf_gens():
    """Infinite dihedral group: translation r and reflection s."""
    return {"r": ((1, 1), (0, 1)), "s": ((-1, 0), (0, 1))}


DINF_RELATORS = ("s r s r",)
