"""Plain-text formats for ideals, complexes, pairs and graphs.

    ring x1..x5; ideal x1*x2, x2^3*x3;
    complex on 5: {1,2},{2,3},{3,4},{4,5},{5,1};
    big: complex on 3: {1,2},{3};  small: complex on 3: {1};
    graph on 5: 1-2, 2-3, 3-4, 4-5, 5-1;

Whitespace and '#' comments are ignored.  Errors carry the line and column of
the offending token.
"""

from __future__ import annotations

import re
import warnings

from ._bits import mask_of
from .errors import ParseError
from .graphs import Graph
from .ring import MonomialIdeal, RingContext
from .simplicial import RelativePair, SimplicialComplex

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<range>\.\.)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<int>\d+)
  | (?P<sym>[,;*^:{}\-()])
""", re.VERBOSE)


class _Tok:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind, self.text, self.line, self.col = kind, text, line, col

    def __repr__(self):
        return f"{self.kind}:{self.text!r}@{self.line}:{self.col}"


def _tokenize(text):
    out = []
    pos, line, lstart = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - lstart + 1)
        kind = m.lastgroup
        if kind != "ws":
            out.append(_Tok(kind, m.group(), line, pos - lstart + 1))
        chunk = m.group()
        nl = chunk.count("\n")
        if nl:
            line += nl
            lstart = pos + chunk.rfind("\n") + 1
        pos = m.end()
    out.append(_Tok("eof", "", line, pos - lstart + 1))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self):
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.cur
        return ParseError(msg, tok.line, tok.col)

    def take(self, text=None, kind=None):
        tok = self.cur
        if (text is not None and tok.text != text) or (kind is not None and tok.kind != kind):
            want = repr(text) if text is not None else kind
            got = repr(tok.text) if tok.kind != "eof" else "end of input"
            raise self.error(f"expected {want}, found {got}")
        self.i += 1
        return tok

    def peek(self, text):
        return self.cur.text == text

    def accept(self, text):
        if self.peek(text):
            self.i += 1
            return True
        return False

    def integer(self):
        return int(self.take(kind="int").text)

    # -- ideals
    def ring_decl(self):
        self.take("ring")
        names = []
        while True:
            first = self.take(kind="name")
            if self.accept(".."):
                last = self.take(kind="name")
                m1 = re.fullmatch(r"([A-Za-z_]+)(\d+)", first.text)
                m2 = re.fullmatch(r"([A-Za-z_]+)(\d+)", last.text)
                if not (m1 and m2 and m1.group(1) == m2.group(1)):
                    raise self.error("range ends must share a prefix, e.g. x1..x5", first)
                lo, hi = int(m1.group(2)), int(m2.group(2))
                if hi < lo:
                    raise self.error("empty variable range", last)
                names.extend(f"{m1.group(1)}{k}" for k in range(lo, hi + 1))
            else:
                names.append(first.text)
            if not self.accept(","):
                break
        self.take(";")
        try:
            return RingContext(tuple(names))
        except ValueError as exc:
            raise self.error(str(exc)) from None

    def monomial(self, ring, names_seen):
        factors = []
        while True:
            tok = self.cur
            if tok.kind == "int":
                val = self.integer()
                if val != 1:
                    raise self.error("only the constant 1 may appear in a monomial", tok)
                var, power = None, 0
            else:
                var = self.take(kind="name")
                power = 1
            if self.accept("^"):
                power = self.integer()
            factors.append((var, power))
            if not self.accept("*"):
                break
        names_seen.extend(v for v, _p in factors if v is not None)
        return factors

    def ideal_body(self, ring):
        self.take("ideal")
        if self.cur.kind == "int" and self.cur.text == "0":
            self.i += 1
            self.take(";")
            return [], True
        mons = []
        seen = []
        while True:
            mons.append(self.monomial(ring, seen))
            if not self.accept(","):
                break
        self.take(";")
        return mons, False


def _infer_ring(tokens):
    best = 0
    prefix = None
    for tok in tokens:
        m = re.fullmatch(r"([A-Za-z_]+)(\d+)", tok.text)
        if not m:
            raise ParseError(f"cannot infer a ring from variable {tok.text!r}; declare it with 'ring'",
                             tok.line, tok.col)
        if prefix not in (None, m.group(1)):
            raise ParseError("mixed variable prefixes; declare the ring", tok.line, tok.col)
        prefix = m.group(1)
        best = max(best, int(m.group(2)))
    return RingContext.standard(max(best, 1), prefix or "x")


def parse_ideal(text, ring=None):
    p = _Parser(text)
    if p.peek("ring"):
        ring = p.ring_decl()
    mons, zero = p.ideal_body(ring)
    p.take(kind="eof")
    var_toks = [v for m in mons for v, _e in m if v is not None]
    if ring is None:
        ring = _infer_ring(var_toks) if var_toks else RingContext.standard(1)
    index = {name: k for k, name in enumerate(ring.names)}
    gens = []
    for m in mons:
        e = [0] * ring.n
        for var, power in m:
            if var is None:
                continue
            if var.text not in index:
                raise ParseError(f"undeclared variable {var.text!r}", var.line, var.col)
            e[index[var.text]] += power
        gens.append(tuple(e))
    if zero:
        return MonomialIdeal.zero(ring)
    if any(not any(g) for g in gens):
        warnings.warn("a generator equals 1; the ideal is the unit ideal", RuntimeWarning, stacklevel=2)
    return MonomialIdeal(ring, gens)


def _complex_block(p):
    p.take("complex")
    p.take("on")
    n = p.integer()
    p.take(":")
    facets = []
    while p.peek("{"):
        start = p.take("{")
        face = []
        while not p.peek("}"):
            tok = p.cur
            v = p.integer()
            if not 1 <= v <= n:
                raise p.error(f"vertex {v} outside [1..{n}]", tok)
            face.append(v)
            if not p.accept(","):
                break
        p.take("}")
        if len(set(face)) != len(face):
            raise p.error("repeated vertex in a face", start)
        facets.append(mask_of(face))
        if not p.accept(","):
            break
    p.take(";")
    return SimplicialComplex(n, facets)


def parse_complex(text):
    p = _Parser(text)
    D = _complex_block(p)
    p.take(kind="eof")
    return D


def parse_pair(text):
    p = _Parser(text)
    p.take("big")
    p.take(":")
    big = _complex_block(p)
    p.take("small")
    p.take(":")
    small = _complex_block(p)
    p.take(kind="eof")
    try:
        return RelativePair(big, small)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_graph(text):
    p = _Parser(text)
    p.take("graph")
    p.take("on")
    n = p.integer()
    p.take(":")
    edges = []
    while p.cur.kind == "int":
        tok = p.cur
        u = p.integer()
        p.take("-")
        v = p.integer()
        if u == v:
            raise p.error(f"loop edge {u}-{v}", tok)
        for w in (u, v):
            if not 1 <= w <= n:
                raise p.error(f"vertex {w} outside [1..{n}]", tok)
        edges.append((u, v))
        if not p.accept(","):
            break
    p.take(";")
    p.take(kind="eof")
    return Graph(n, edges)


def parse_input(text):
    """Dispatch on the leading keyword."""
    toks = _tokenize(text)
    head = toks[0].text
    if head in ("ring", "ideal"):
        return parse_ideal(text)
    if head == "complex":
        return parse_complex(text)
    if head == "big":
        return parse_pair(text)
    if head == "graph":
        return parse_graph(text)
    raise ParseError(f"unknown input kind {head!r}", toks[0].line, toks[0].col)


# ---------------------------------------------------------------- formatting

def format_ideal(I):
    names = I.ring.names
    head = f"ring {', '.join(names)};"
    if I.is_zero():
        return head + " ideal 0;"
    return head + " ideal " + ", ".join(I.ring.format_monomial(g) for g in I.gens) + ";"


def format_complex(D):
    body = ",".join("{" + ",".join(map(str, f)) + "}" for f in D.facet_sets())
    return f"complex on {D.n}: {body};"


def format_graph(G):
    return f"graph on {G.n}: " + ", ".join(f"{u}-{v}" for u, v in G.edges) + ";"
