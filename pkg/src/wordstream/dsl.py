"""Group expressions: a small language naming decidable groups.

Grammar (whitespace and # comments are free):

    expr := NAME | NAME '(' arg (',' arg)* ')'
    arg  := expr | INT | STRING

Constructors:

    Z            the integers (one generator)
    Z(m)         free abelian of rank m
    Zmod(m)      cyclic of order m
    free(r)      free group of rank r
    heisenberg   integer Heisenberg group
    grigorchuk   first Grigorchuk group (oracle only, no streaming recipe)
    dihedral_inf infinite dihedral group
    matrix(F)    matrix group from file F; optional second arg: error exponent c
    UT(d, F)     unitriangular d x d integer group from file F; optional c
    finite(F)    finite group from a multiplication-table file F
    dp(G, ...)   direct product, at least two factors
    fp(G, H)     free product, exactly two factors
    wr(F1..Fk, G)  wreath product: abelian lamp factors over cursor G;
                 each Fi is Z, Z(m), or Zmod(q) with q a prime power
    ext(F, G)    finite extension described by file F with subgroup machine G
    regen(F, G)  same group as G regenerated by the image words in file F

elaborate() turns an expression into an (oracle, recipe) pair.  Flexible
constructors (Z, Zmod, free) draw generator names from a..z; constructors
with fixed names (heisenberg, dihedral_inf, grigorchuk, file-based groups)
keep theirs, and a name collision is an error rather than a rename.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Union

from .combinators import (ChangeGeneratorsRecipe, DirectProductRecipe,
                          FiniteExtensionRecipe, FreeProductRecipe,
                          WreathAbelianRecipe)
from .errors import DslError
from .exact.abelian import CyclicGroup, FreeAbelianGroup
from .exact.free import FreeGroup
from .exact.free_product import FreeProductGroup
from .exact.grigorchuk import GrigorchukGroup
from .exact.matrixgrp import (HEISENBERG_RELATORS, MatrixGroupPoly,
                              MatrixGroupQ, UTMatrixGroup, heisenberg_gens)
from .exact.product import DirectProductGroup
from .exact.regen import RegeneratedGroup
from .exact.wreath import WreathGroup
from .fingerprint import (LinearFingerprintRecipe, LinearFingerprintSpec,
                          NilpotentFingerprintRecipe, NilpotentFingerprintSpec,
                          free_fingerprint, line_fingerprint)
from .formats import (parse_extension_file, parse_finite_file,
                      parse_matrix_file, parse_regen_file)
from .library import dihedral_inf_pair
from .recipes import AbelianTrackerRecipe, FiniteTableRecipe
from .words import Alphabet

CONSTRUCTORS = ("Z", "Zmod", "free", "heisenberg", "grigorchuk",
                "dihedral_inf", "matrix", "UT", "finite",
                "dp", "fp", "wr", "ext", "regen")


@dataclass(frozen=True)
class GroupExpr:
    """One node of a parsed group expression.

    args holds GroupExpr, int, and str values.  Source positions are
    carried for error reporting but ignored by equality.
    """

    name: str
    args: tuple = ()
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


# -- tokenizer -----------------------------------------------------------------

_NAME_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_NAME_BODY = _NAME_START | set("0123456789")
_DIGITS = set("0123456789")


@dataclass(frozen=True)
class _Token:
    kind: str
    value: object
    line: int
    col: int


def _tokenize(text: str) -> list:
    out = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch in "(),":
            kind = {"(": "lparen", ")": "rparen", ",": "comma"}[ch]
            out.append(_Token(kind, ch, line, start_col))
            i += 1
            col += 1
            continue
        if ch in _DIGITS:
            j = i
            while j < len(text) and text[j] in _DIGITS:
                j += 1
            out.append(_Token("int", int(text[i:j]), line, start_col))
            col += j - i
            i = j
            continue
        if ch in _NAME_START:
            j = i
            while j < len(text) and text[j] in _NAME_BODY:
                j += 1
            out.append(_Token("name", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch == '"':
            j = i + 1
            buf = []
            while j < len(text):
                c = text[j]
                if c == "\\":
                    if j + 1 >= len(text) or text[j + 1] not in '\\"':
                        raise DslError("bad escape in string", line, start_col)
                    buf.append(text[j + 1])
                    j += 2
                    continue
                if c == '"':
                    break
                if c == "\n":
                    raise DslError("unterminated string", line, start_col)
                buf.append(c)
                j += 1
            else:
                raise DslError("unterminated string", line, start_col)
            out.append(_Token("string", "".join(buf), line, start_col))
            col += j + 1 - i
            i = j + 1
            continue
        raise DslError("unexpected character %r" % ch, line, start_col)
    out.append(_Token("end", None, line, col))
    return out


# -- parser --------------------------------------------------------------------

def _is_prime_power(m: int) -> bool:
    if m < 2:
        return False
    p = m
    q = 2
    while q * q <= m:
        if m % q == 0:
            p = q
            break
        q += 1
    while m % p == 0:
        m //= p
    return m == 1


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.next()
        if tok.kind != kind:
            raise DslError("expected %s, found %s" % (kind, _show(tok)),
                           tok.line, tok.col)
        return tok

    def parse_expr(self) -> GroupExpr:
        tok = self.next()
        if tok.kind != "name":
            raise DslError("expected a constructor name, found %s" % _show(tok),
                           tok.line, tok.col)
        if tok.value not in CONSTRUCTORS:
            raise DslError("unknown constructor %r (expected one of %s)"
                           % (tok.value, ", ".join(CONSTRUCTORS)),
                           tok.line, tok.col)
        args = []
        arg_toks = []
        if self.peek().kind == "lparen":
            self.next()
            if self.peek().kind == "rparen":
                self.next()
            else:
                while True:
                    arg_toks.append(self.peek())
                    args.append(self.parse_arg())
                    nxt = self.next()
                    if nxt.kind == "rparen":
                        break
                    if nxt.kind != "comma":
                        raise DslError("expected ',' or ')', found %s"
                                       % _show(nxt), nxt.line, nxt.col)
        expr = GroupExpr(tok.value, tuple(args), tok.line, tok.col)
        _validate_node(expr, arg_toks)
        return expr

    def parse_arg(self):
        tok = self.peek()
        if tok.kind == "int":
            return self.next().value
        if tok.kind == "string":
            return self.next().value
        return self.parse_expr()


def _show(tok: _Token) -> str:
    if tok.kind == "end":
        return "end of input"
    return repr(tok.value)


def _bad(expr: GroupExpr, message: str, tok: Optional[_Token] = None):
    if tok is not None:
        raise DslError(message, tok.line, tok.col)
    raise DslError(message, expr.line, expr.col)


def _validate_node(expr: GroupExpr, toks) -> None:
    name, args = expr.name, expr.args

    def tok(i):
        return toks[i] if i < len(toks) else None

    if name == "Z":
        if len(args) > 1 or (args and not isinstance(args[0], int)):
            _bad(expr, "Z takes an optional integer rank")
        if args and args[0] < 1:
            _bad(expr, "rank must be >= 1", tok(0))
    elif name == "Zmod":
        if len(args) != 1 or not isinstance(args[0], int):
            _bad(expr, "Zmod takes one integer modulus")
        if args[0] < 2:
            _bad(expr, "modulus must be >= 2", tok(0))
    elif name == "free":
        if len(args) != 1 or not isinstance(args[0], int):
            _bad(expr, "free takes one integer rank")
        if args[0] < 1:
            _bad(expr, "rank must be >= 1", tok(0))
    elif name in ("heisenberg", "grigorchuk", "dihedral_inf"):
        if args:
            _bad(expr, "%s takes no arguments" % name)
    elif name == "matrix":
        ok = (len(args) in (1, 2) and isinstance(args[0], str)
              and (len(args) == 1 or isinstance(args[1], int)))
        if not ok:
            _bad(expr, 'matrix takes a file name and an optional exponent c')
        if len(args) == 2 and args[1] < 1:
            _bad(expr, "exponent c must be >= 1", tok(1))
    elif name == "UT":
        ok = (len(args) in (2, 3) and isinstance(args[0], int)
              and isinstance(args[1], str)
              and (len(args) == 2 or isinstance(args[2], int)))
        if not ok:
            _bad(expr, 'UT takes a dimension, a file name, and an optional c')
        if args[0] < 2:
            _bad(expr, "dimension must be >= 2", tok(0))
        if len(args) == 3 and args[2] < 1:
            _bad(expr, "exponent c must be >= 1", tok(2))
    elif name == "finite":
        if len(args) != 1 or not isinstance(args[0], str):
            _bad(expr, "finite takes one file name")
    elif name == "dp":
        if len(args) < 2 or not all(isinstance(a, GroupExpr) for a in args):
            _bad(expr, "dp takes at least two group expressions")
    elif name == "fp":
        if len(args) != 2 or not all(isinstance(a, GroupExpr) for a in args):
            _bad(expr, "fp takes exactly two group expressions")
    elif name == "wr":
        if len(args) < 2 or not all(isinstance(a, GroupExpr) for a in args):
            _bad(expr, "wr takes lamp factors and one cursor expression")
        for i, factor in enumerate(args[:-1]):
            if factor.name == "Z":
                continue
            if factor.name == "Zmod":
                if not _is_prime_power(factor.args[0]):
                    raise DslError(
                        "wreath lamp factor Zmod(%d) is not a prime power"
                        % factor.args[0], factor.line, factor.col)
                continue
            raise DslError(
                "wreath lamp factors must be Z, Z(m), or Zmod(prime power); "
                "got %r" % factor.name, factor.line, factor.col)
    elif name == "ext":
        ok = (len(args) == 2 and isinstance(args[0], str)
              and isinstance(args[1], GroupExpr))
        if not ok:
            _bad(expr, "ext takes a file name and a subgroup expression")
    elif name == "regen":
        ok = (len(args) == 2 and isinstance(args[0], str)
              and isinstance(args[1], GroupExpr))
        if not ok:
            _bad(expr, "regen takes a file name and a group expression")


def parse_group_spec(text: str) -> GroupExpr:
    """Parse one group expression; trailing input is an error."""
    parser = _Parser(_tokenize(text))
    expr = parser.parse_expr()
    tail = parser.peek()
    if tail.kind != "end":
        raise DslError("unexpected trailing input %s" % _show(tail),
                       tail.line, tail.col)
    return expr


def to_text(expr: GroupExpr) -> str:
    """Canonical source form; parse_group_spec(to_text(e)) == e."""
    if not expr.args:
        return expr.name
    parts = []
    for arg in expr.args:
        if isinstance(arg, GroupExpr):
            parts.append(to_text(arg))
        elif isinstance(arg, int):
            parts.append(str(arg))
        else:
            quoted = arg.replace("\\", "\\\\").replace('"', '\\"')
            parts.append('"%s"' % quoted)
    return "%s(%s)" % (expr.name, ", ".join(parts))


# -- random expressions (for round-trip exercising) -----------------------------

def random_expr(rng, max_depth: int = 4) -> GroupExpr:
    """A random valid expression; file arguments name files that need not exist."""
    leaves = ("Z", "Zrank", "Zmod", "free", "heisenberg", "grigorchuk",
              "dihedral_inf", "matrix", "UT", "finite")
    inner = ("dp", "fp", "wr", "ext", "regen")
    kind = rng.choice(leaves if max_depth <= 0 else leaves + inner * 2)
    if kind == "Z":
        return GroupExpr("Z")
    if kind == "Zrank":
        return GroupExpr("Z", (rng.randrange(1, 4),))
    if kind == "Zmod":
        return GroupExpr("Zmod", (rng.randrange(2, 30),))
    if kind == "free":
        return GroupExpr("free", (rng.randrange(1, 4),))
    if kind in ("heisenberg", "grigorchuk", "dihedral_inf"):
        return GroupExpr(kind)
    if kind == "matrix":
        args = ("m%d.mat" % rng.randrange(0, 9),)
        if rng.randrange(0, 1):
            args += (rng.randrange(1, 6),)
        return GroupExpr("matrix", args)
    if kind == "UT":
        return GroupExpr("UT", (rng.randrange(2, 5), "u.mat"))
    if kind == "finite":
        return GroupExpr("finite", ("g%d.tab" % rng.randrange(0, 9),))
    if kind == "dp":
        count = rng.randrange(2, 3)
        return GroupExpr("dp", tuple(random_expr(rng, max_depth - 1)
                                     for _ in range(count)))
    if kind == "fp":
        return GroupExpr("fp", (random_expr(rng, max_depth - 1),
                                random_expr(rng, max_depth - 1)))
    if kind == "wr":
        factors = []
        for _ in range(rng.randrange(1, 2)):
            which = rng.randrange(0, 2)
            if which == 0:
                factors.append(GroupExpr("Z"))
            elif which == 1:
                factors.append(GroupExpr("Z", (rng.randrange(1, 3),)))
            else:
                factors.append(GroupExpr("Zmod",
                                         (rng.choice((2, 3, 4, 5, 8, 9, 27)),)))
        return GroupExpr("wr", tuple(factors)
                         + (random_expr(rng, max_depth - 1),))
    if kind == "ext":
        return GroupExpr("ext", ("e.ext", random_expr(rng, max_depth - 1)))
    return GroupExpr("regen", ("r.map", random_expr(rng, max_depth - 1)))


# -- elaboration ----------------------------------------------------------------

@dataclass
class ElabConfig:
    """Knobs for turning an expression into machines.

    c: error exponent override for every fingerprint (None = contextual
    default: 6 inside free-product factors, 4 elsewhere, 2 for nilpotent).
    d: wreath lamp error exponent.  eps_prime: failure budget of the
    prime-power lamp kernel.  c_f2: exponent of the free-product switch
    fingerprint.  base_dir: directory file arguments resolve against.
    """

    c: Optional[int] = None
    d: int = 2
    eps_prime: float = 0.05
    c_f2: int = 1
    base_dir: str = "."


_POOL = "abcdefghijklmnopqrstuvwxyz"
_CURSOR_PREFERRED = ("t", "u", "v", "w", "s")


class _Names:
    def __init__(self):
        self.used = set()

    def reserve(self, names, expr: GroupExpr) -> None:
        for name in names:
            if name in self.used:
                raise DslError("generator name %r is already in use; "
                               "fixed-name groups cannot be renamed" % name,
                               expr.line, expr.col)
            self.used.add(name)

    def take(self, prefer=()) -> str:
        for name in tuple(prefer) + tuple(_POOL):
            if name not in self.used:
                self.used.add(name)
                return name
        i = 0
        while "g%d" % i in self.used:
            i += 1
        self.used.add("g%d" % i)
        return "g%d" % i


@dataclass
class _Ctx:
    config: ElabConfig
    names: _Names
    base_dir: str
    fp_ctx: bool = False
    cursor: bool = False
    forced: Optional[list] = None


def _take_name(ctx: _Ctx, expr: GroupExpr) -> str:
    if ctx.forced is not None:
        if not ctx.forced:
            raise DslError("inner expression needs more generators than "
                           "the surrounding file provides", expr.line, expr.col)
        return ctx.forced.pop(0)
    return ctx.names.take(_CURSOR_PREFERRED if ctx.cursor else ())


def _linear_c(ctx: _Ctx, explicit: Optional[int] = None) -> int:
    if explicit is not None:
        return explicit
    if ctx.config.c is not None:
        return ctx.config.c
    return 6 if ctx.fp_ctx else 4


def _nilpotent_c(ctx: _Ctx, explicit: Optional[int] = None) -> int:
    if explicit is not None:
        return explicit
    if ctx.config.c is not None:
        return ctx.config.c
    return 2


def _read_file(ctx: _Ctx, filename: str, expr: GroupExpr) -> str:
    return _read_path(os.path.join(ctx.base_dir, filename), expr)


def _read_path(path: str, expr: GroupExpr) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DslError("cannot read %s: %s" % (path, exc), expr.line, expr.col)


def _fractions_from_file(data) -> dict:
    denom = data.denom.const_value()
    out = {}
    for name, rows in data.gens.items():
        out[name] = tuple(tuple(Fraction(p.const_value(), denom) for p in row)
                          for row in rows)
    return out


def elaborate(expr: Union[GroupExpr, str], config: Optional[ElabConfig] = None):
    """Build the (oracle, recipe) pair for an expression.

    recipe is None when some part of the expression has no streaming
    machine (currently only grigorchuk); the oracle always exists.
    """
    if isinstance(expr, str):
        expr = parse_group_spec(expr)
    config = config or ElabConfig()
    ctx = _Ctx(config=config, names=_Names(), base_dir=config.base_dir)
    return _elab(expr, ctx)


def _elab(expr: GroupExpr, ctx: _Ctx):
    handler = _HANDLERS[expr.name]
    return handler(expr, ctx)


def _elab_z(expr: GroupExpr, ctx: _Ctx):
    rank = expr.args[0] if expr.args else 1
    names = [_take_name(ctx, expr) for _ in range(rank)]
    oracle = FreeAbelianGroup(names)
    c = _linear_c(ctx)
    parts = [line_fingerprint(c, name) for name in names]
    recipe = parts[0] if rank == 1 else DirectProductRecipe(*parts)
    return oracle, recipe


def _elab_zmod(expr: GroupExpr, ctx: _Ctx):
    name = _take_name(ctx, expr)
    modulus = expr.args[0]
    return (CyclicGroup(modulus, name),
            AbelianTrackerRecipe((modulus,), (name,)))


def _elab_free(expr: GroupExpr, ctx: _Ctx):
    names = [_take_name(ctx, expr) for _ in range(expr.args[0])]
    return FreeGroup(names), free_fingerprint(names, _linear_c(ctx))


def _elab_heisenberg(expr: GroupExpr, ctx: _Ctx):
    ctx.names.reserve(("x", "y", "z"), expr)
    oracle = UTMatrixGroup(heisenberg_gens(), relator_words=HEISENBERG_RELATORS)
    spec = NilpotentFingerprintSpec(heisenberg_gens(), c=_nilpotent_c(ctx))
    return oracle, NilpotentFingerprintRecipe(spec)


def _elab_grigorchuk(expr: GroupExpr, ctx: _Ctx):
    ctx.names.reserve(("a", "b", "c", "d"), expr)
    return GrigorchukGroup(), None


def _elab_dihedral(expr: GroupExpr, ctx: _Ctx):
    ctx.names.reserve(("r", "s"), expr)
    return dihedral_inf_pair(c=_linear_c(ctx))


def _elab_matrix(expr: GroupExpr, ctx: _Ctx):
    data = parse_matrix_file(_read_file(ctx, expr.args[0], expr))
    ctx.names.reserve(data.names, expr)
    explicit_c = expr.args[1] if len(expr.args) == 2 else None
    if data.nvars == 0 and data.char == 0:
        oracle = MatrixGroupQ(_fractions_from_file(data), names=data.names)
    else:
        oracle = MatrixGroupPoly(data.gens, t=data.denom, nvars=data.nvars,
                                 char=data.char, names=data.names,
                                 explicit_inverses=data.inverses)
    spec = LinearFingerprintSpec.from_matrix_group(
        oracle, _linear_c(ctx, explicit_c))
    return oracle, LinearFingerprintRecipe(spec)


def _elab_ut(expr: GroupExpr, ctx: _Ctx):
    dim, filename = expr.args[0], expr.args[1]
    data = parse_matrix_file(_read_file(ctx, filename, expr))
    if data.nvars != 0 or data.char != 0 or not data.denom.is_const() \
            or data.denom.const_value() != 1:
        raise DslError("UT expects plain integer matrices "
                       "(no variables, characteristic 0, denominator 1)",
                       expr.line, expr.col)
    if data.dim != dim:
        raise DslError("file %s holds %d x %d matrices, expected %d"
                       % (filename, data.dim, data.dim, dim),
                       expr.line, expr.col)
    gens = data.integer_gens()
    ctx.names.reserve(data.names, expr)
    oracle = UTMatrixGroup(gens, names=data.names)
    explicit_c = expr.args[2] if len(expr.args) == 3 else None
    spec = NilpotentFingerprintSpec(gens, c=_nilpotent_c(ctx, explicit_c))
    return oracle, NilpotentFingerprintRecipe(spec)


def _elab_finite(expr: GroupExpr, ctx: _Ctx):
    group = parse_finite_file(_read_file(ctx, expr.args[0], expr))
    ctx.names.reserve(group.alphabet.names, expr)
    return group, FiniteTableRecipe(group)


def _elab_dp(expr: GroupExpr, ctx: _Ctx):
    pairs = [_elab(a, ctx) for a in expr.args]
    oracle = DirectProductGroup(*[o for o, _ in pairs])
    recipes = [r for _, r in pairs]
    recipe = DirectProductRecipe(*recipes) if all(r is not None for r in recipes) \
        else None
    return oracle, recipe


def _elab_fp(expr: GroupExpr, ctx: _Ctx):
    sub = replace(ctx, fp_ctx=True)
    lo, lr = _elab(expr.args[0], sub)
    ro, rr = _elab(expr.args[1], sub)
    oracle = FreeProductGroup(lo, ro)
    recipe = FreeProductRecipe(lr, rr, c_f2=ctx.config.c_f2) \
        if lr is not None and rr is not None else None
    return oracle, recipe


def _elab_wr(expr: GroupExpr, ctx: _Ctx):
    moduli = []
    for factor in expr.args[:-1]:
        if factor.name == "Z":
            moduli.extend([0] * (factor.args[0] if factor.args else 1))
        else:
            moduli.append(factor.args[0])
    # Forced names run in alphabet order (lamps first); otherwise the cursor
    # goes first so fixed cursor names never collide with pool lamp names.
    if ctx.forced is not None:
        names = [_take_name(ctx, expr) for _ in moduli]
        cursor_oracle, cursor_recipe = _elab(expr.args[-1],
                                             replace(ctx, cursor=True))
    else:
        cursor_oracle, cursor_recipe = _elab(expr.args[-1],
                                             replace(ctx, cursor=True))
        names = [_take_name(ctx, expr) for _ in moduli]
    lamp_groups = [FreeAbelianGroup((name,)) if m == 0 else CyclicGroup(m, name)
                   for m, name in zip(moduli, names)]
    lamp = lamp_groups[0] if len(lamp_groups) == 1 \
        else DirectProductGroup(*lamp_groups)
    oracle = WreathGroup(lamp, cursor_oracle)
    recipe = None
    if cursor_recipe is not None:
        recipe = WreathAbelianRecipe(cursor_recipe, moduli, names,
                                     d=ctx.config.d,
                                     eps_prime=ctx.config.eps_prime)
    return oracle, recipe


def _elab_ext(expr: GroupExpr, ctx: _Ctx):
    filename = expr.args[0]
    path = os.path.join(ctx.base_dir, filename)
    ext, oracle_text = parse_extension_file(_read_path(path, expr))
    ctx.names.reserve(ext.outer.names, expr)
    # The file names its own oracle so correctness is checked against an
    # independent construction, not against the coset data being verified.
    try:
        oracle_expr = parse_group_spec(oracle_text)
    except DslError as exc:
        raise DslError("in %s oracle expression: %s" % (filename, exc),
                       expr.line, expr.col)
    sub_ctx = _Ctx(config=ctx.config, names=_Names(),
                   base_dir=os.path.dirname(path) or ".",
                   forced=list(ext.outer.names))
    oracle, _ = _elab(oracle_expr, sub_ctx)
    if oracle.alphabet != ext.outer:
        raise DslError(
            "oracle alphabet %r (self-inverse %s) does not match the outer "
            "alphabet %r (self-inverse %s) of %s"
            % (oracle.alphabet.names, sorted(oracle.alphabet.self_inverse),
               ext.outer.names, sorted(ext.outer.self_inverse), filename),
            expr.line, expr.col)
    ext.verify(oracle)
    _, inner_recipe = _elab(expr.args[1],
                            replace(ctx, forced=list(ext.subgroup.names)))
    recipe = FiniteExtensionRecipe(inner_recipe, ext) \
        if inner_recipe is not None else None
    return oracle, recipe


def _elab_regen(expr: GroupExpr, ctx: _Ctx):
    inner_oracle, inner_recipe = _elab(expr.args[1], ctx)
    new_names, self_inv, images = parse_regen_file(
        _read_file(ctx, expr.args[0], expr))
    ctx.names.reserve(new_names, expr)
    parsed = {name: inner_oracle.alphabet.parse_word(images[name])
              for name in new_names}
    if inner_recipe is not None:
        recipe = ChangeGeneratorsRecipe(inner_recipe, images,
                                        self_inverse=self_inv or None)
        alphabet = recipe.alphabet
    else:
        recipe = None
        inv = inner_oracle.alphabet.inverse_word
        claimed = self_inv or tuple(n for n, w in parsed.items() if inv(w) == w)
        alphabet = Alphabet(new_names, self_inverse=claimed)
    oracle = RegeneratedGroup(inner_oracle, alphabet, parsed)
    return oracle, recipe


_HANDLERS = {
    "Z": _elab_z,
    "Zmod": _elab_zmod,
    "free": _elab_free,
    "heisenberg": _elab_heisenberg,
    "grigorchuk": _elab_grigorchuk,
    "dihedral_inf": _elab_dihedral,
    "matrix": _elab_matrix,
    "UT": _elab_ut,
    "finite": _elab_finite,
    "dp": _elab_dp,
    "fp": _elab_fp,
    "wr": _elab_wr,
    "ext": _elab_ext,
    "regen": _elab_regen,
}
