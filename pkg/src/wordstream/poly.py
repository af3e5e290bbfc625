"""Sparse multivariate polynomials with integer coefficients.

A polynomial in m variables is a dict {exponent tuple: coefficient} wrapped
in a small immutable class.  Only what the package needs is implemented:
ring arithmetic, evaluation (plain or modular), total degree, and exact
division (for denominator normalization and derived inverses).
"""

from __future__ import annotations

from typing import Mapping, Sequence


class Poly:
    """Immutable sparse polynomial over Z in a fixed number of variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, int]):
        self.nvars = nvars
        clean = {}
        for exps, coef in terms.items():
            if coef:
                if len(exps) != nvars:
                    raise ValueError("exponent arity %d != nvars %d" % (len(exps), nvars))
                clean[tuple(exps)] = coef
        self.terms = clean

    @classmethod
    def const(cls, nvars: int, value: int) -> "Poly":
        return cls(nvars, {(0,) * nvars: value} if value else {})

    @classmethod
    def var(cls, nvars: int, index: int) -> "Poly":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return all(not any(e) for e in self.terms)

    def const_value(self) -> int:
        if not self.terms:
            return 0
        [(exps, coef)] = self.terms.items()
        if any(exps):
            raise ValueError("not a constant polynomial")
        return coef

    def degree(self) -> int:
        """Total degree; zero polynomial has degree 0 by convention here."""
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for exps, coef in other.terms.items():
            out[exps] = out.get(exps, 0) + coef
        return Poly(self.nvars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, point: Sequence[int], mod: int | None = None) -> int:
        if len(point) != self.nvars:
            raise ValueError("point arity %d != nvars %d" % (len(point), self.nvars))
        total = 0
        for exps, coef in self.terms.items():
            term = coef
            for value, e in zip(point, exps):
                if e:
                    term *= pow(value, e, mod) if mod else value ** e
            total += term
        return total % mod if mod is not None else total

    def _lead(self) -> tuple[tuple, int]:
        """Leading term under graded-lex order."""
        exps = max(self.terms, key=lambda e: (sum(e), e))
        return exps, self.terms[exps]

    def reduce_mod(self, p: int) -> "Poly":
        """Coefficients reduced into [0, p)."""
        return Poly(self.nvars, {e: c % p for e, c in self.terms.items()})

    def divide_exact(self, divisor: "Poly", mod: int = 0) -> "Poly | None":
        """Quotient self/divisor when the division is exact, else None.

        With mod set to a prime the division runs over F_p and both
        operands are reduced first.
        """
        remainder = self.reduce_mod(mod) if mod else self
        divisor = divisor.reduce_mod(mod) if mod else divisor
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        quotient: dict = {}
        dlead_e, dlead_c = divisor._lead()
        dlead_inv = pow(dlead_c, mod - 2, mod) if mod else 0
        while not remainder.is_zero():
            rlead_e, rlead_c = remainder._lead()
            diff = tuple(a - b for a, b in zip(rlead_e, dlead_e))
            if any(d < 0 for d in diff):
                return None
            if mod:
                coef = rlead_c * dlead_inv % mod
            else:
                if rlead_c % dlead_c:
                    return None
                coef = rlead_c // dlead_c
            quotient[diff] = quotient.get(diff, 0) + coef
            remainder = remainder - Poly(self.nvars, {diff: coef}) * divisor
            if mod:
                remainder = remainder.reduce_mod(mod)
        return Poly(self.nvars, quotient)

    def key(self):
        """Canonical hashable data for this polynomial."""
        return tuple(sorted((e, c) for e, c in self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coef in sorted(self.terms.items()):
            mono = "*".join("x%d^%d" % (i, e) for i, e in enumerate(exps) if e)
            parts.append(str(coef) + ("*" + mono if mono else ""))
        return " + ".join(parts)


def max_degree(polys) -> int:
    return max((p.degree() for p in polys), default=0)
