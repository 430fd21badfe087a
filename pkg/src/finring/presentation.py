"""Finitely presented algebras over Z_{p^k}, built down to operation tables.

A presentation is a base (F2, F3, Z4, Z8, Z9), noncommuting generators, and
polynomial relations.  The two-sided ideal the relations generate is truncated
at word degree D and canonicalized (Howell form over the word module); when
the quotient size agrees at D and D+1 and every degree-(D+1) word rewrites
into lower degree, the quotient is the finite ring and we emit its tables on
the surviving coset basis.  Correctness is enforced after the fact: the table
must pass the full axiom scan, every relation must evaluate to zero in the
built ring, and any declared expected order must match.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce as _fold
from typing import Optional

import numpy as np

from .errors import InternalCheckError, PresentationError
from .howell import howell, prime_power, span_size
from .table import MAX_ORDER, RingTable, verify_axioms

BASES = {"F2": 2, "F3": 3, "Z4": 4, "Z8": 8, "Z9": 9}
D_MAX = 10


@dataclass(frozen=True)
class Presentation:
    base: str
    gens: tuple
    relations: tuple  # each relation: tuple of (word, coeff), word = gen index tuple
    expected_order: Optional[int] = None
    text: str = ""

    @property
    def q(self):
        return BASES[self.base]

    def max_degree(self):
        degs = [len(w) for rel in self.relations for (w, _) in rel]
        return max(degs, default=0)


# -- DSL parser ---------------------------------------------------------------


class _Tok:
    __slots__ = ("kind", "val", "pos")

    def __init__(self, kind, val, pos):
        self.kind, self.val, self.pos = kind, val, pos


def _tokenize(text, start):
    toks = []
    i = start
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(_Tok("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            toks.append(_Tok("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*^(),":
            toks.append(_Tok(ch, ch, i))
            i += 1
            continue
        raise PresentationError(f"unexpected character {ch!r} at position {i}")
    toks.append(_Tok("end", None, len(text)))
    return toks


def _split_gens(name, pos, gens):
    """Greedy longest-prefix split of an alphabetic run into generator names."""
    out = []
    i = 0
    by_len = sorted(gens, key=len, reverse=True)
    while i < len(name):
        for g in by_len:
            if name.startswith(g, i):
                out.append(gens.index(g))
                i += len(g)
                break
        else:
            raise PresentationError(f"unknown generator in {name!r} at position {pos + i}")
    return tuple(out)


def _padd(a, b, q):
    out = dict(a)
    for w, c in b.items():
        v = (out.get(w, 0) + c) % q
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def _pscale(a, s, q):
    out = {}
    for w, c in a.items():
        v = c * s % q
        if v:
            out[w] = v
    return out


def _pmul(a, b, q):
    out = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = w1 + w2
            v = (out.get(w, 0) + c1 * c2) % q
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    return out


def _split_name_tokens(toks, gens):
    """Expand each alphabetic run into one token per generator, so that
    exponents bind to the last letter: vu^2 means v*(u^2), not (v*u)^2."""
    out = []
    for t in toks:
        if t.kind != "name":
            out.append(t)
            continue
        word = _split_gens(t.val, t.pos, gens)
        off = 0
        for gi in word:
            out.append(_Tok("gen", gi, t.pos + off))
            off += len(gens[gi])
    return out


class _RelParser:
    def __init__(self, toks, gens, q):
        self.toks = toks
        self.i = 0
        self.gens = gens
        self.q = q

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        t = self.toks[self.i]
        if kind and t.kind != kind:
            raise PresentationError(f"expected {kind!r}, got {t.kind!r} at position {t.pos}")
        self.i += 1
        return t

    def expr(self):
        t = self.peek()
        neg = False
        if t.kind == "-":
            self.take()
            neg = True
        acc = self.term()
        if neg:
            acc = _pscale(acc, -1, self.q)
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            rhs = self.term()
            if op == "-":
                rhs = _pscale(rhs, -1, self.q)
            acc = _padd(acc, rhs, self.q)
        return acc

    def term(self):
        acc = self.factor()
        while True:
            k = self.peek().kind
            if k == "*":
                self.take()
                acc = _pmul(acc, self.factor(), self.q)
            elif k in ("int", "gen", "("):  # juxtaposition
                acc = _pmul(acc, self.factor(), self.q)
            else:
                return acc

    def factor(self):
        base = self.atom()
        if self.peek().kind == "^":
            self.take()
            e = self.take("int").val
            out = {(): 1 % self.q}
            for _ in range(e):
                out = _pmul(out, base, self.q)
            return out
        return base

    def atom(self):
        t = self.peek()
        if t.kind == "int":
            self.take()
            c = t.val % self.q
            return {(): c} if c else {}
        if t.kind == "gen":
            self.take()
            return {(t.val,): 1}
        if t.kind == "(":
            self.take()
            out = self.expr()
            self.take(")")
            return out
        raise PresentationError(f"expected value, got {t.kind!r} at position {t.pos}")


def parse_presentation(text: str, expected_order: Optional[int] = None) -> Presentation:
    """Parse `base<gens>/(rel, rel, ...)` into a Presentation."""
    lt = text.find("<")
    if lt < 0:
        raise PresentationError("missing '<' after base name")
    base = text[:lt].strip()
    if base not in BASES:
        raise PresentationError(f"unknown base {base!r}; supported: {', '.join(sorted(BASES))}")
    gt = text.find(">", lt)
    if gt < 0:
        raise PresentationError("missing '>' after generator list")
    gens = tuple(g.strip() for g in text[lt + 1 : gt].split(","))
    if not gens or any(not g.isalpha() for g in gens):
        raise PresentationError(f"generator names must be alphabetic, got {gens}")
    if len(set(gens)) != len(gens):
        raise PresentationError(f"duplicate generator names in {gens}")
    rest = text[gt + 1 :].strip()
    slash = text.find("/", gt)
    if slash < 0 or not rest.startswith("/"):
        raise PresentationError("missing '/' before relation list")

    toks = _split_name_tokens(_tokenize(text, slash + 1), gens)
    q = BASES[base]
    pp = _RelParser(toks, gens, q)
    pp.take("(")
    rels = []
    if pp.peek().kind != ")":
        while True:
            poly = pp.expr()
            if poly:
                rels.append(tuple(sorted(poly.items())))
            k = pp.take().kind
            if k == ")":
                break
            if k != ",":
                raise PresentationError(f"expected ',' or ')' at position {pp.toks[pp.i-1].pos}")
    else:
        pp.take(")")
    if pp.peek().kind != "end":
        t = pp.peek()
        raise PresentationError(f"trailing input at position {t.pos}")
    return Presentation(base, gens, tuple(rels), expected_order, text.strip())


# -- word bookkeeping ---------------------------------------------------------


def _ncols(g: int, D: int) -> int:
    return sum(g**d for d in range(D + 1))


def _asc_index(w, g: int) -> int:
    off = _ncols(g, len(w) - 1) if w else 0
    v = 0
    for c in w:
        v = v * g + c
    return off + v


def _asc_word(i: int, g: int):
    d = 0
    while i >= g**d:
        i -= g**d
        d += 1
    out = []
    for _ in range(d):
        out.append(i % g)
        i //= g
    return tuple(reversed(out))


@dataclass
class ModuleMatrix:
    """Rows over the degree-<=degree word module; columns in descending
    deg-lex order so Howell pivots rewrite large words into smaller ones."""

    rows: np.ndarray
    q: int
    degree: int
    ngens: int
    pivots: Optional[list] = None

    @property
    def ncols(self):
        return _ncols(self.ngens, self.degree)

    def col_of(self, w) -> int:
        return self.ncols - 1 - _asc_index(w, self.ngens)

    def word_at(self, col: int):
        return _asc_word(self.ncols - 1 - col, self.ngens)

    def quotient_size(self) -> int:
        if self.pivots is None:
            raise InternalCheckError("quotient_size requires canonical form")
        p, _ = prime_power(self.q)
        return span_size(self.pivots, self.ncols, self.q, p)


def howell_form(M: ModuleMatrix) -> ModuleMatrix:
    H, piv = howell(M.rows.reshape(-1, M.ncols), M.q)
    return ModuleMatrix(H, M.q, M.degree, M.ngens, piv)


def bounded_ideal_span(P: Presentation, D: int) -> ModuleMatrix:
    """Canonical span of {w1 * rel * w2 : total degree <= D}."""
    g = len(P.gens)
    q = P.q
    nc = _ncols(g, D)
    H = np.zeros((0, nc), dtype=np.int64)
    piv: list = []
    block = []

    def flush():
        nonlocal H, piv, block
        if block:
            H, piv = howell(np.vstack([H, np.array(block, dtype=np.int64)]), q)
            block = []

    for rel in P.relations:
        dr = max(len(w) for (w, _) in rel)
        if dr > D:
            raise PresentationError(f"degree bound {D} below relation degree {dr}")
        for la in range(D - dr + 1):
            for ia in range(g**la):
                w1 = _asc_word(_ncols(g, la - 1) + ia if la else 0, g)
                for lb in range(D - dr - la + 1):
                    for ib in range(g**lb):
                        w2 = _asc_word(_ncols(g, lb - 1) + ib if lb else 0, g)
                        row = np.zeros(nc, dtype=np.int64)
                        for w, c in rel:
                            col = nc - 1 - _asc_index(w1 + w + w2, g)
                            row[col] = (row[col] + c) % q
                        if row.any():
                            block.append(row)
                        if len(block) >= 2048:
                            flush()
    flush()
    if not len(H):
        H, piv = howell(np.zeros((0, nc), dtype=np.int64), q)
    return ModuleMatrix(H, q, D, g, piv)


def _closed(M: ModuleMatrix) -> bool:
    """True when every top-degree word column has a unit pivot (rewrites down)."""
    top = M.ngens ** M.degree
    pv = dict(M.pivots)
    return all(pv.get(c) == 0 for c in range(top))


def _harvest(M: ModuleMatrix, d: int) -> ModuleMatrix:
    """Rows supported entirely on words of degree <= d, over that column block.

    With columns in descending deg-lex order the low-degree words form a
    trailing coordinate block, and a Howell form spans every trailing-block
    submodule of its row space, so this is the full visible intersection.
    Needed when a relation rewrites a word into one of higher degree (for
    example v^2 -> u^3): reducing v^k then transits through words of degree
    k+1, and the top-degree block of a single bounded span never closes even
    though the lower blocks are complete."""
    if d >= M.degree:
        return M
    ncd = _ncols(M.ngens, d)
    off = M.ncols - ncd
    keep = [i for i, (c, _) in enumerate(M.pivots) if c >= off]
    if keep:
        rows = M.rows[np.array(keep)][:, off:]
    else:
        rows = np.zeros((0, ncd), dtype=np.int64)
    H, piv = howell(rows, M.q)
    return ModuleMatrix(H, M.q, d, M.ngens, piv)


@dataclass
class PresentationBuild:
    presentation: Presentation
    degree: int
    basis_words: tuple
    ranges: tuple
    matrix: ModuleMatrix


def build_ring(P: Presentation, min_degree: Optional[int] = None) -> RingTable:
    """Stabilize the truncated quotient and emit its verified RingTable.

    Searches (working degree E, basis degree D) pairs: the span is computed
    at degree E, the candidate basis harvested at D.  A candidate is accepted
    only after the emitted table passes exhaustive axiom checks and every
    relation evaluates to zero through the table's own arithmetic; that pair
    of facts forces the table to be the universal quotient (it is a quotient
    of the presented algebra and vice versa), so acceptance is sound no
    matter which candidate fired first."""
    g = len(P.gens)
    spans = {}

    def span(E):
        if E not in spans:
            spans[E] = bounded_ideal_span(P, E)
        return spans[E]

    reldeg = max(1, P.max_degree())
    dfloor = 1 if min_degree is None else max(1, min_degree)
    estart = max(reldeg, dfloor + 1)
    if estart > D_MAX:
        raise PresentationError(f"relation degree {reldeg} beyond engine bound {D_MAX}")
    rejects: list = []
    for E in range(estart, D_MAX + 1):
        HE = span(E)
        for D in range(dfloor, E):
            B = _harvest(HE, D + 1)
            if not _closed(B):
                continue
            if _harvest(HE, D).quotient_size() != B.quotient_size():
                continue
            R, why = _emit(P, D, B)
            if R is not None:
                return R
            rejects.append(f"candidate D={D} E={E}: {why}")
    detail = ("; " + "; ".join(rejects[-2:])) if rejects else ""
    raise PresentationError(
        f"possibly infinite ring: quotient size not stabilized by degree {D_MAX}{detail}"
    )


def _emit(P: Presentation, D: int, B: ModuleMatrix):
    """Construct and verify the table for one stabilization candidate.

    Returns (ring, None) on success, (None, reason) when the candidate is
    rejected by the verification suite and the search should continue."""
    q = P.q
    p, k = prime_power(q)
    g = len(P.gens)
    n = B.quotient_size()
    if n > MAX_ORDER:
        return None, f"order {n} exceeds limit {MAX_ORDER}"

    # surviving coset basis: free columns plus torsion (non-unit) pivots
    pv = dict(B.pivots)
    s_cols = [c for c in range(B.ncols) if pv.get(c, 1) != 0]
    s_cols.sort(key=lambda c: _asc_index(B.word_at(c), g))  # ascending deg-lex
    basis_words = tuple(B.word_at(c) for c in s_cols)
    ranges = tuple(p ** pv[c] if c in pv else q for c in s_cols)
    strides = [1]
    for r in ranges:
        strides.append(strides[-1] * r)
    if strides[-1] != n:
        raise InternalCheckError("coset basis ranges do not multiply to quotient size")

    col_to_s = {c: i for i, c in enumerate(s_cols)}
    s = len(s_cols)
    Hrows = B.rows

    # torsion pivot rows restricted to basis coordinates, in pivot order
    vrows = []
    for i, (c, v) in enumerate(B.pivots):
        if v == 0:
            continue
        row = Hrows[i]
        outside = np.ones(B.ncols, dtype=bool)
        outside[s_cols] = False
        if row[outside].any():
            raise InternalCheckError("torsion pivot row leaks outside coset basis")
        vrows.append((col_to_s[c], p**v, row[s_cols].copy()))

    def sreduce(X):
        # X: (..., s) int64; normalize torsion coordinates into their box
        X = X % q
        for si, pval, row in vrows:
            t = X[..., si] // pval
            X = (X - t[..., None] * row) % q
        return X

    pivots = B.pivots

    def full_reduce(vec):
        vec = vec % q
        for i, (c, v) in enumerate(pivots):
            t = int(vec[c]) // (p**v)
            if t:
                vec = (vec - t * Hrows[i]) % q
        return vec

    memo = {}

    def reduce_word(w):
        if w in memo:
            return memo[w]
        if len(w) <= D + 1:
            e = np.zeros(B.ncols, dtype=np.int64)
            e[B.col_of(w)] = 1
            red = full_reduce(e)
            mask = np.zeros(B.ncols, dtype=bool)
            mask[s_cols] = True
            if red[~mask].any():
                raise InternalCheckError("reduced word leaks outside coset basis")
            out = red[s_cols]
        else:
            head, tail = w[: D + 1], w[D + 1 :]
            hv = reduce_word(head)
            out = np.zeros(s, dtype=np.int64)
            for a in np.flatnonzero(hv):
                out = out + int(hv[a]) * reduce_word(basis_words[a] + tail)
            out = sreduce(out)
        memo[w] = out
        return out

    T = np.zeros((s, s, s), dtype=np.int64)
    for a in range(s):
        for b in range(s):
            T[a, b] = reduce_word(basis_words[a] + basis_words[b])

    V = np.zeros((n, s), dtype=np.int64)
    idx = np.arange(n)
    for i in range(s):
        V[:, i] = (idx // strides[i]) % ranges[i]

    def encode(X):
        out = np.zeros(X.shape[:-1], dtype=np.int64)
        for i in range(s):
            out += X[..., i] * strides[i]
        return out

    mul = encode(sreduce(np.einsum("xa,yb,abw->xyw", V, V, T)))
    add = encode(sreduce(V[:, None, :] + V[None, :, :]))

    one_vec = reduce_word(())
    one = int(encode(one_vec[None, :])[0])
    labels = [_label(V[x], basis_words, P.gens) for x in range(n)]
    R = RingTable(
        n,
        labels,
        add.astype(np.int16),
        mul.astype(np.int16),
        0,
        one,
        provenance=P.text or repr(P.relations),
    )
    report = verify_axioms(R)
    if not report.passed:
        return None, f"table fails axioms: {report.violations[:2]}"

    gen_elts = [int(encode(reduce_word((i,))[None, :])[0]) for i in range(g)]
    for rel in P.relations:
        acc = R.zero
        for w, c in rel:
            t = R.one
            for gi in w:
                t = int(R.mul[t, gen_elts[gi]])
            acc = int(R.add[acc, R.smul(c, t)])
        if acc != R.zero:
            return None, f"relation {rel} is nonzero in the candidate table"

    if P.expected_order is not None and n != P.expected_order:
        raise PresentationError(f"built order {n} != declared expected order {P.expected_order}")

    R._cache["presentation_build"] = PresentationBuild(P, D, basis_words, ranges, B)
    R._cache["generator_elements"] = gen_elts
    return R, None


def _label(vec, basis_words, gens) -> str:
    parts = []
    for c, w in zip(vec, basis_words):
        if not c:
            continue
        word = "".join(gens[i] for i in w) if w else ""
        if not word:
            parts.append(str(int(c)))
        elif c == 1:
            parts.append(word)
        else:
            parts.append(f"{int(c)}{word}")
    return "+".join(parts) if parts else "0"


def build_from_text(text: str, expected_order: Optional[int] = None) -> RingTable:
    return build_ring(parse_presentation(text, expected_order))
