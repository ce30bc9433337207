"""Parsing and printing for terms, combinations, permutations and files.

Grammars (byte-exact, whitespace-insensitive between tokens):

    term     :=  INT  |  "id"  |  NAME "(" [term {"," term}] ")"
    lincomb  :=  ["-"] sterm {("+" | "-") sterm}
    sterm    :=  [RATIONAL "*"] term
    RATIONAL :=  INT ["/" INT]
    perm     :=  "[" INT {"," INT} "]"  |  cycles like "(1 2 3)(4 5)"
    permcomb :=  same shape as lincomb with perm atoms

Leaf integers must form a bijection onto 1..n; in planar mode they must
additionally read 1..n left to right. The operad unit prints as ``id``
(a bare ``1`` is accepted on input; it cannot be printed back because it
would collide with a leaf label).

Presentation files (extension ``.opd``) are JSON objects with fields
{name, mode, generators: [{name, arity}], relations: [string]}, where a
relation string is a lincomb optionally prefixed by ``label:``.
Representation files (extension ``.rep``) list ``dim = N`` and entries
``g[i; j1, ..., jn] = rational`` (missing entries are zero).

Every parser either returns a value or raises ``ParseError`` carrying a
byte-offset ``SourceSpan``; no input crashes them.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .endomorphism import MultilinearMap, from_entries
from .free_operad import LEAF, LinComb, Signature, Term, from_nested, nested
from .permutations import Permutation
from .quotient import Presentation, make_presentation
from .representations import Representation, make_representation
from .symmetrized import PermCombination


@dataclass(frozen=True)
class SourceSpan:
    """Byte offsets [start, end) into the parsed text."""

    start: int
    end: int

    def __post_init__(self):
        if self.start > self.end:
            raise ValueError("span start after end")


class ParseError(ValueError):
    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{message} (at bytes {span.start}..{span.end})")
        self.message = message
        self.span = span


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                    r"|(?P<punct>[(),*+\-\[\]/:]))")


class _Tokens:
    def __init__(self, src: str):
        self.src = src
        self.toks: list[tuple[str, str, int, int]] = []
        pos = 0
        while pos < len(src):
            m = _TOKEN.match(src, pos)
            if m is None or m.end() == pos:
                stripped = src[pos:].lstrip()
                if not stripped:
                    break
                at = len(src) - len(stripped)
                raise ParseError(f"unexpected character {stripped[0]!r}",
                                 SourceSpan(at, at + 1))
            kind = m.lastgroup
            self.toks.append((kind, m.group(kind), m.start(kind), m.end(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self):
        t = self.peek()
        if t is None:
            at = len(self.src)
            raise ParseError("unexpected end of input", SourceSpan(at, at))
        self.i += 1
        return t

    def expect_punct(self, ch: str):
        t = self.next()
        if t[0] != "punct" or t[1] != ch:
            raise ParseError(f"expected {ch!r}, found {t[1]!r}",
                             SourceSpan(t[2], t[3]))
        return t

    def at_punct(self, ch: str) -> bool:
        t = self.peek()
        return t is not None and t[0] == "punct" and t[1] == ch

    def done(self):
        t = self.peek()
        if t is not None:
            raise ParseError(f"trailing input starting with {t[1]!r}",
                             SourceSpan(t[2], t[3]))


# -- terms ---------------------------------------------------------------

def parse_term(src: str, sig: Signature) -> Term:
    toks = _Tokens(src)
    term = _parse_term(toks, sig)
    toks.done()
    return term


def _parse_term(toks: _Tokens, sig: Signature) -> Term:
    start_tok = toks.peek()
    start = start_tok[2] if start_tok else 0
    node, labels = _parse_node(toks, sig)
    return _finish_term(toks, sig, node, labels, start)


def _end_of(toks: _Tokens) -> int:
    if toks.i > 0:
        return toks.toks[toks.i - 1][3]
    return 0


def _parse_node(toks: _Tokens, sig: Signature):
    """Recursive descent; returns (nested node, label list)."""
    t = toks.next()
    kind, text, s, e = t
    if kind == "int":
        return LEAF, [int(text)]
    if kind != "name":
        raise ParseError(f"expected a leaf label or generator, found {text!r}",
                         SourceSpan(s, e))
    if text == "id" and not toks.at_punct("("):
        return LEAF, [1]
    try:
        arity = sig.arity_of(text)
    except KeyError:
        raise ParseError(f"unknown generator {text!r}", SourceSpan(s, e)) from None
    toks.expect_punct("(")
    kids = []
    labels: list[int] = []
    if not toks.at_punct(")"):
        while True:
            node, sub = _parse_node(toks, sig)
            kids.append(node)
            labels.extend(sub)
            if toks.at_punct(","):
                toks.next()
                continue
            break
    close = toks.expect_punct(")")
    if len(kids) != arity:
        raise ParseError(
            f"generator {text} has arity {arity} but {len(kids)} arguments",
            SourceSpan(s, close[3]))
    return (text, tuple(kids)), labels


def print_term(t: Term) -> str:
    if t.is_trivial():
        return "id"
    labels = iter(t.labels)

    def walk(node) -> str:
        if node is LEAF:
            return str(next(labels))
        name, kids = node
        return name + "(" + ",".join(walk(k) for k in kids) + ")"

    return walk(nested(t))


# -- linear combinations ---------------------------------------------------

def parse_lincomb(src: str, sig: Signature) -> LinComb:
    toks = _Tokens(src)
    pairs = []
    sign = Fraction(1)
    if toks.at_punct("-"):
        toks.next()
        sign = Fraction(-1)
    while True:
        coeff, term = _parse_sterm(toks, sig)
        pairs.append((term, sign * coeff))
        t = toks.peek()
        if t is not None and t[0] == "punct" and t[1] in "+-":
            toks.next()
            sign = Fraction(1) if t[1] == "+" else Fraction(-1)
            continue
        break
    toks.done()
    arities = {t.arity for t, _ in pairs}
    if len(arities) != 1:
        raise ParseError(f"mixed arities {sorted(arities)} in one combination",
                         SourceSpan(0, len(src)))
    return LinComb(arities.pop(), pairs)


def _parse_sterm(toks: _Tokens, sig: Signature):
    t = toks.peek()
    if t is None:
        at = len(toks.src)
        raise ParseError("expected a term", SourceSpan(at, at))
    if t[0] == "int":
        # lookahead: INT "/" or INT "*" means a coefficient, else a leaf
        save = toks.i
        coeff = _parse_rational(toks)
        if toks.at_punct("*"):
            toks.next()
            node, labels = _parse_node(toks, sig)
            return coeff, _finish_term(toks, sig, node, labels, t[2])
        toks.i = save
    node, labels = _parse_node(toks, sig)
    return Fraction(1), _finish_term(toks, sig, node, labels, t[2])


def _finish_term(toks: _Tokens, sig: Signature, node, labels, start: int) -> Term:
    n = len(labels)
    span = SourceSpan(start, _end_of(toks))
    if sorted(labels) != list(range(1, n + 1)):
        raise ParseError(
            f"leaf labels {list(labels)} must be a bijection onto 1..{n}", span)
    if sig.mode == "planar" and list(labels) != list(range(1, n + 1)):
        raise ParseError(
            f"planar mode requires leaf labels in increasing order, got {list(labels)}",
            span)
    return from_nested(node, labels)


def _parse_rational(toks: _Tokens) -> Fraction:
    t = toks.next()
    if t[0] != "int":
        raise ParseError(f"expected a number, found {t[1]!r}",
                         SourceSpan(t[2], t[3]))
    num = int(t[1])
    if toks.at_punct("/"):
        toks.next()
        d = toks.next()
        if d[0] != "int":
            raise ParseError(f"expected a denominator, found {d[1]!r}",
                             SourceSpan(d[2], d[3]))
        den = int(d[1])
        if den == 0:
            raise ParseError("zero denominator", SourceSpan(d[2], d[3]))
        return Fraction(num, den)
    return Fraction(num)


def print_lincomb(x: LinComb) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for k, (t, c) in enumerate(x.terms):
        mag = abs(c)
        body = print_term(t) if mag == 1 else f"{mag}*{print_term(t)}"
        if k == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


# -- permutations -----------------------------------------------------------

def parse_permutation(src: str) -> Permutation:
    toks = _Tokens(src)
    p = _parse_perm(toks)
    toks.done()
    return p


def _parse_perm(toks: _Tokens) -> Permutation:
    t = toks.peek()
    if t is None:
        at = len(toks.src)
        raise ParseError("expected a permutation", SourceSpan(at, at))
    if t[0] == "punct" and t[1] == "[":
        toks.next()
        word = [_parse_int(toks)]
        while toks.at_punct(","):
            toks.next()
            word.append(_parse_int(toks))
        toks.expect_punct("]")
        try:
            return Permutation(word)
        except ValueError as exc:
            raise ParseError(str(exc), SourceSpan(t[2], _end_of(toks))) from None
    if t[0] == "punct" and t[1] == "(":
        cycles = []
        while toks.at_punct("("):
            toks.next()
            cyc = [_parse_int(toks)]
            while toks.peek() is not None and toks.peek()[0] == "int":
                cyc.append(_parse_int(toks))
            toks.expect_punct(")")
            cycles.append(cyc)
        n = max(max(c) for c in cycles)
        word = list(range(1, n + 1))
        for cyc in cycles:
            if len(set(cyc)) != len(cyc):
                raise ParseError(f"repeated element in cycle {cyc}",
                                 SourceSpan(t[2], _end_of(toks)))
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if word[a - 1] != a:
                    raise ParseError("cycles are not disjoint",
                                     SourceSpan(t[2], _end_of(toks)))
                word[a - 1] = b
        return Permutation(word)
    raise ParseError(f"expected '[' or '(', found {t[1]!r}",
                     SourceSpan(t[2], t[3]))


def _parse_int(toks: _Tokens) -> int:
    t = toks.next()
    if t[0] != "int":
        raise ParseError(f"expected an integer, found {t[1]!r}",
                         SourceSpan(t[2], t[3]))
    return int(t[1])


def print_permutation(p: Permutation) -> str:
    return repr(p)


def parse_perm_combination(src: str) -> PermCombination:
    toks = _Tokens(src)
    pairs = []
    sign = Fraction(1)
    if toks.at_punct("-"):
        toks.next()
        sign = Fraction(-1)
    while True:
        t = toks.peek()
        if t is not None and t[0] == "int":
            coeff = _parse_rational(toks)
            toks.expect_punct("*")
        else:
            coeff = Fraction(1)
        p = _parse_perm(toks)
        pairs.append((p, sign * coeff))
        t = toks.peek()
        if t is not None and t[0] == "punct" and t[1] in "+-":
            toks.next()
            sign = Fraction(1) if t[1] == "+" else Fraction(-1)
            continue
        break
    toks.done()
    degrees = {p.degree for p, _ in pairs}
    if len(degrees) != 1:
        raise ParseError(f"mixed degrees {sorted(degrees)} in one combination",
                         SourceSpan(0, len(src)))
    return PermCombination(degrees.pop(), pairs)


def print_perm_combination(x: PermCombination) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for k, (p, c) in enumerate(x.terms):
        mag = abs(c)
        body = repr(p) if mag == 1 else f"{mag}*{p!r}"
        if k == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


# -- presentation files ------------------------------------------------------

_RELATION_LABEL = re.compile(r"^\s*([A-Za-z_][A-Za-z_0-9]*)\s*:\s*(.*)$", re.S)


def load_presentation(src: str) -> Presentation:
    """Parse a presentation file (JSON text, usually from a .opd file)."""
    try:
        doc = json.loads(src)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc.msg}",
                         SourceSpan(exc.pos, exc.pos)) from None
    if not isinstance(doc, dict):
        raise ParseError("presentation file must be a JSON object",
                         SourceSpan(0, len(src)))
    for field in ("name", "mode", "generators", "relations"):
        if field not in doc:
            raise ParseError(f"missing field {field!r}", SourceSpan(0, len(src)))
    name = doc["name"]
    mode = doc["mode"]
    gens = []
    for k, g in enumerate(doc["generators"]):
        if (not isinstance(g, dict) or "name" not in g or "arity" not in g):
            raise ParseError(f"generators[{k}] must be {{name, arity}}",
                             SourceSpan(0, len(src)))
        gens.append((str(g["name"]), int(g["arity"])))
    try:
        sig = Signature(tuple(gens), mode=str(mode))
    except ValueError as exc:
        raise ParseError(str(exc), SourceSpan(0, len(src))) from None
    relations = []
    labels = []
    for k, rel_src in enumerate(doc["relations"]):
        if not isinstance(rel_src, str):
            raise ParseError(f"relations[{k}] must be a string",
                             SourceSpan(0, len(src)))
        m = _RELATION_LABEL.match(rel_src)
        if m:
            label, body = m.group(1), m.group(2)
        else:
            label, body = f"r{k + 1}", rel_src
        try:
            relations.append(parse_lincomb(body, sig))
        except ParseError as exc:
            raise ParseError(f"relations[{k}] ({label}): {exc.message}",
                             exc.span) from None
        labels.append(label)
    try:
        return make_presentation(str(name), sig, relations, labels)
    except ValueError as exc:
        raise ParseError(str(exc), SourceSpan(0, len(src))) from None


def dump_presentation(p: Presentation) -> str:
    doc = {
        "name": p.name,
        "mode": p.mode,
        "generators": [{"name": g, "arity": k}
                       for g, k in p.signature.generators],
        "relations": [f"{label}: {print_lincomb(rel)}"
                      for label, rel in zip(p.relation_names, p.relations)],
    }
    return json.dumps(doc, indent=2) + "\n"


# -- representation files ------------------------------------------------------

_REP_DIM = re.compile(r"^\s*dim\s*=\s*(\d+)\s*$")
_REP_ENTRY = re.compile(
    r"^\s*([A-Za-z_][A-Za-z_0-9]*)\s*\[\s*(\d+)\s*(?:;\s*([0-9,\s]*))?\]\s*=\s*"
    r"(-?\d+)\s*(?:/\s*(\d+))?\s*$")


def load_rep_file(src: str, p: Presentation) -> Representation:
    """Parse a representation file: a dim line plus coefficient entries."""
    dim: int | None = None
    entries: dict[str, dict[tuple, Fraction]] = {g: {} for g in p.signature.names()}
    offset = 0
    for line in src.splitlines(keepends=True):
        stripped = line.strip()
        span = SourceSpan(offset, offset + len(line.rstrip("\n")))
        offset += len(line)
        if not stripped or stripped.startswith("#"):
            continue
        m = _REP_DIM.match(line)
        if m:
            if dim is not None:
                raise ParseError("duplicate dim line", span)
            dim = int(m.group(1))
            continue
        m = _REP_ENTRY.match(line)
        if m is None:
            raise ParseError(f"cannot parse entry {stripped!r}", span)
        gname, out_idx, in_idxs, num, den = m.groups()
        if gname not in entries:
            raise ParseError(f"unknown generator {gname!r}", span)
        if dim is None:
            raise ParseError("dim must come before entries", span)
        js = tuple(int(s) for s in in_idxs.split(",")) if in_idxs and in_idxs.strip() else ()
        arity = p.signature.arity_of(gname)
        if len(js) != arity:
            raise ParseError(
                f"generator {gname} has arity {arity}, entry lists {len(js)} inputs",
                span)
        key = (int(out_idx),) + js
        for ix in key:
            if not 1 <= ix <= dim:
                raise ParseError(f"index {ix} outside 1..{dim}", span)
        value = Fraction(int(num), int(den)) if den else Fraction(int(num))
        entries[gname][key] = value
    if dim is None:
        raise ParseError("missing dim line", SourceSpan(0, len(src)))
    images: dict[str, MultilinearMap] = {}
    for gname, arity in p.signature.generators:
        images[gname] = from_entries(dim, arity, entries[gname])
    return make_representation(p, dim, images)


def dump_rep_file(r: Representation) -> str:
    lines = [f"dim = {r.dim}"]
    for gname, _ in r.presentation.signature.generators:
        img = r.image_of(gname)
        d, n = img.dim, img.arity
        import itertools as _it
        for i in range(1, d + 1):
            for js in _it.product(range(1, d + 1), repeat=n):
                c = img.entry(i, js)
                if c:
                    inside = f"{i};" + ",".join(str(j) for j in js) if js else str(i)
                    lines.append(f"{gname}[{inside}] = {c}")
    return "\n".join(lines) + "\n"
