"""Text file formats: word lists, generator matrices, finite group
tables, extension data, and generator-image maps.

All formats are line-oriented; blank lines inside word lists denote the
empty word, and lines starting with '#' are comments everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .combinators import ExtensionData
from .errors import FormatError
from .exact.finite import FiniteGroup
from .poly import Poly
from .words import Alphabet, Letter, Word


def _content_lines(text: str) -> list[tuple[int, str]]:
    """(1-based line number, stripped text) for non-comment lines."""
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        out.append((i, line))
    return out


# -- word files ---------------------------------------------------------------


def parse_word_file(text: str, alphabet: Alphabet) -> list[Word]:
    """One word per line, letters whitespace-separated, inverse = trailing -.

    A blank line is the empty word.
    """
    words = []
    for lineno, line in _content_lines(text):
        try:
            words.append(alphabet.parse_word(line))
        except Exception as exc:
            raise FormatError("line %d: %s" % (lineno, exc))
    return words


def format_word_file(words: Sequence[Word], alphabet: Alphabet) -> str:
    return "".join(alphabet.format_word(w) + "\n" for w in words)


# -- matrix files -------------------------------------------------------------


@dataclass(frozen=True)
class MatrixFileData:
    """Parsed matrix-generator file.

    Entries are integer polynomials; the denominator scales every
    generator, so the group element behind a block is rows/denom.
    """

    dim: int
    nvars: int
    char: int
    denom: Poly
    names: tuple[str, ...]
    gens: Mapping[str, tuple]
    inverses: Mapping[str, tuple]

    def integer_gens(self) -> dict:
        """Generators as plain int matrices; needs vars 0, denom 1, char 0."""
        if self.nvars or self.char or not _is_one(self.denom):
            raise FormatError("file is not over plain integers")
        return {
            name: tuple(tuple(p.const_value() for p in row) for row in rows)
            for name, rows in self.gens.items()
        }


def _is_one(p: Poly) -> bool:
    return p.is_const() and p.const_value() == 1


def _parse_poly(token: str, nvars: int, lineno: int) -> Poly:
    """Sparse monomial sum: coef or coef:e1,...,em, terms joined by +."""
    total = Poly.const(nvars, 0)
    for part in token.split("+"):
        part = part.strip()
        if not part:
            raise FormatError("line %d: empty term in %r" % (lineno, token))
        if ":" in part:
            coef_s, exps_s = part.split(":", 1)
            try:
                coef = int(coef_s)
                exps = tuple(int(e) for e in exps_s.split(","))
            except ValueError:
                raise FormatError("line %d: bad monomial %r" % (lineno, part))
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise FormatError("line %d: monomial %r needs %d exponents"
                                  % (lineno, part, nvars))
            total = total + Poly(nvars, {exps: coef})
        else:
            try:
                total = total + Poly.const(nvars, int(part))
            except ValueError:
                raise FormatError("line %d: bad integer entry %r" % (lineno, part))
    return total


def parse_matrix_file(text: str) -> MatrixFileData:
    """Header `dim r; vars m; denom <poly>[; char p]`, then gen/inv blocks.

    Each `gen NAME` is followed by dim rows of entries; an optional
    `inv [scale]` block right after supplies an explicit inverse whose
    entries are divided by denom^scale.
    """
    lines = _content_lines(text)
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise FormatError("empty matrix file")
    head_no, head = lines[0]
    fields = {}
    for piece in head.split(";"):
        piece = piece.strip()
        if not piece:
            continue
        parts = piece.split(None, 1)
        if len(parts) != 2:
            raise FormatError("line %d: bad header field %r" % (head_no, piece))
        fields[parts[0]] = parts[1]
    for key in ("dim", "vars"):
        if key not in fields:
            raise FormatError("line %d: header needs %r" % (head_no, key))
    try:
        dim = int(fields["dim"])
        nvars = int(fields["vars"])
        char = int(fields.get("char", "0"))
    except ValueError:
        raise FormatError("line %d: dim/vars/char must be integers" % head_no)
    if dim < 1 or nvars < 0 or char < 0:
        raise FormatError("line %d: dim/vars/char out of range" % head_no)
    denom = _parse_poly(fields.get("denom", "1"), nvars, head_no)

    names: list[str] = []
    gens: dict = {}
    inverses: dict = {}
    i = 1

    def read_rows(start: int, what: str):
        if start + dim > len(lines):
            raise FormatError("%s block is missing rows" % what)
        rows = []
        for j in range(dim):
            no, ln = lines[start + j]
            entries = ln.split()
            if len(entries) != dim:
                raise FormatError("line %d: expected %d entries" % (no, dim))
            rows.append(tuple(_parse_poly(e, nvars, no) for e in entries))
        return tuple(rows), start + dim

    while i < len(lines):
        no, ln = lines[i]
        parts = ln.split()
        if parts[0] == "gen":
            if len(parts) != 2:
                raise FormatError("line %d: gen needs exactly one name" % no)
            name = parts[1]
            if name in gens:
                raise FormatError("line %d: duplicate generator %r" % (no, name))
            rows, i = read_rows(i + 1, "gen %s" % name)
            names.append(name)
            gens[name] = rows
        elif parts[0] == "inv":
            if not names:
                raise FormatError("line %d: inv block before any gen" % no)
            if len(parts) > 2:
                raise FormatError("line %d: inv takes one optional scale" % no)
            try:
                scale = int(parts[1]) if len(parts) == 2 else 1
            except ValueError:
                raise FormatError("line %d: bad inv scale %r" % (no, parts[1]))
            rows, i = read_rows(i + 1, "inv of %s" % names[-1])
            inverses[names[-1]] = (rows, scale)
        else:
            raise FormatError("line %d: expected 'gen NAME' or 'inv'" % no)
    if not names:
        raise FormatError("matrix file declares no generators")
    return MatrixFileData(dim=dim, nvars=nvars, char=char, denom=denom,
                          names=tuple(names), gens=gens, inverses=inverses)


# -- finite group tables ------------------------------------------------------


def parse_finite_file(text: str) -> FiniteGroup:
    """Line 1: element names (identity first); optional `gens ...` line;
    then one row of element names per element."""
    lines = [(no, ln) for no, ln in _content_lines(text) if ln]
    if not lines:
        raise FormatError("empty finite group file")
    no, ln = lines[0]
    names = tuple(ln.split())
    size = len(names)
    index = {name: i for i, name in enumerate(names)}
    if len(index) != size:
        raise FormatError("line %d: duplicate element names" % no)
    body = lines[1:]
    gen_names = None
    if body and body[0][1].split()[0] == "gens":
        gen_names = tuple(body[0][1].split()[1:])
        if not gen_names:
            raise FormatError("line %d: gens line is empty" % body[0][0])
        body = body[1:]
    if len(body) != size:
        raise FormatError("expected %d table rows, found %d" % (size, len(body)))
    table = []
    for no, ln in body:
        row = ln.split()
        if len(row) != size:
            raise FormatError("line %d: expected %d entries" % (no, size))
        for name in row:
            if name not in index:
                raise FormatError("line %d: unknown element %r" % (no, name))
        table.append(tuple(index[name] for name in row))
    try:
        return FiniteGroup(names, tuple(table), gen_names=gen_names)
    except Exception as exc:
        raise FormatError("invalid group table: %s" % exc)


# -- extension data files -----------------------------------------------------


def parse_extension_file(text: str) -> tuple[ExtensionData, str]:
    """Coset reps and rewriting tables for a finite-index subgroup.

    Lines: `outer NAMES`, optional `self-inverse NAMES`, `subgroup NAMES`,
    `oracle EXPR`, `rep I : WORD`, `conj LETTER I : WORD`, and
    `mult LETTER I -> J : WORD`.  Returns the verified-shape data plus the
    oracle expression text (elaborated and checked by the caller).
    """
    outer_names = None
    self_inverse: tuple[str, ...] = ()
    sub_names = None
    oracle_expr = None
    reps: dict[int, str] = {}
    conj_rows: list[tuple[int, str, int, str]] = []
    mult_rows: list[tuple[int, str, int, int, str]] = []

    for no, ln in _content_lines(text):
        if not ln:
            continue
        parts = ln.split(None, 1)
        key, rest = parts[0], (parts[1] if len(parts) > 1 else "")
        if key == "outer":
            outer_names = tuple(rest.split())
        elif key == "self-inverse":
            self_inverse = tuple(rest.split())
        elif key == "subgroup":
            sub_names = tuple(rest.split())
        elif key == "oracle":
            oracle_expr = rest.strip()
        elif key == "rep":
            head, _, word = rest.partition(":")
            try:
                idx = int(head)
            except ValueError:
                raise FormatError("line %d: rep needs an index" % no)
            reps[idx] = word.strip()
        elif key == "conj":
            head, sep, word = rest.partition(":")
            bits = head.split()
            if not sep or len(bits) != 2:
                raise FormatError("line %d: conj LETTER I : WORD" % no)
            try:
                coset = int(bits[1])
            except ValueError:
                raise FormatError("line %d: bad coset index %r" % (no, bits[1]))
            conj_rows.append((no, bits[0], coset, word.strip()))
        elif key == "mult":
            head, sep, word = rest.partition(":")
            if not sep or "->" not in head:
                raise FormatError("line %d: mult LETTER I -> J : WORD" % no)
            left, arrow = head.split("->")
            bits = left.split()
            if len(bits) != 2:
                raise FormatError("line %d: mult LETTER I -> J : WORD" % no)
            try:
                coset = int(bits[1])
                target = int(arrow)
            except ValueError:
                raise FormatError("line %d: bad coset indices" % no)
            mult_rows.append((no, bits[0], coset, target, word.strip()))
        else:
            raise FormatError("line %d: unknown directive %r" % (no, key))

    if outer_names is None or sub_names is None:
        raise FormatError("extension file needs outer and subgroup lines")
    if oracle_expr is None:
        raise FormatError("extension file needs an oracle line")
    if sorted(reps) != list(range(len(reps))) or not reps:
        raise FormatError("rep indices must be 0..k-1")
    outer = Alphabet(outer_names, self_inverse=tuple(
        n for n in self_inverse if n in outer_names))
    sub_self = tuple(n for n in self_inverse if n in sub_names)
    subgroup = Alphabet(sub_names, self_inverse=sub_self)

    def parse_letter(token: str, no: int) -> Letter:
        try:
            word = outer.parse_word(token)
        except Exception as exc:
            raise FormatError("line %d: %s" % (no, exc))
        if len(word) != 1:
            raise FormatError("line %d: expected a single letter, got %r"
                              % (no, token))
        return word[0]

    def parse_outer_word(token: str, no: int) -> Word:
        try:
            return outer.parse_word(token)
        except Exception as exc:
            raise FormatError("line %d: %s" % (no, exc))

    rep_words = tuple(parse_outer_word(reps[i], 0) for i in range(len(reps)))
    conj = {}
    for no, tok, coset, word in conj_rows:
        conj[(parse_letter(tok, no), coset)] = parse_outer_word(word, no)
    mult = {}
    for no, tok, coset, target, word in mult_rows:
        mult[(parse_letter(tok, no), coset)] = (parse_outer_word(word, no), target)
    try:
        ext = ExtensionData(outer, subgroup, rep_words, conj, mult)
    except Exception as exc:
        raise FormatError("invalid extension data: %s" % exc)
    return ext, oracle_expr


# -- generator image maps -----------------------------------------------------


def parse_regen_file(text: str):
    """`new NAMES`, optional `self-inverse NAMES`, then `NAME : WORD` images.

    Image words are over the inner recipe's alphabet and stay unparsed
    here; the generator-change recipe owns that alphabet.
    """
    new_names = None
    self_inverse: tuple[str, ...] = ()
    images: dict[str, str] = {}
    for no, ln in _content_lines(text):
        if not ln:
            continue
        parts = ln.split(None, 1)
        key, rest = parts[0], (parts[1] if len(parts) > 1 else "")
        if key == "new":
            new_names = tuple(rest.split())
        elif key == "self-inverse":
            self_inverse = tuple(rest.split())
        elif ":" in ln:
            name, _, word = ln.partition(":")
            name = name.strip()
            if name in images:
                raise FormatError("line %d: duplicate image for %r" % (no, name))
            images[name] = word.strip()
        else:
            raise FormatError("line %d: expected `NAME : WORD`" % no)
    if new_names is None:
        raise FormatError("image map needs a `new NAMES` line")
    missing = [n for n in new_names if n not in images]
    if missing:
        raise FormatError("no image for %s" % ", ".join(missing))
    extra = [n for n in images if n not in new_names]
    if extra:
        raise FormatError("image for undeclared name %s" % ", ".join(extra))
    return new_names, self_inverse, images
