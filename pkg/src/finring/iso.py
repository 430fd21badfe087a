"""Isomorphism testing for ring tables.

Two-stage: a cheap invariant fingerprint rejects almost every non-isomorphic
pair, then a backtracking search over generator images settles the rest.  The
search replays a spanning trace (the op sequence that discovers each element
from the generators), so each candidate costs O(n) before the final vectorized
table check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InternalCheckError
from .properties import jacobson_radical
from .table import RingTable, additive_type

DEFAULT_NODE_BUDGET = 10_000_000


def _nilpotency_index(R: RingTable) -> np.ndarray:
    """Per element: least k with x^k = 0, or 0 when x is not nilpotent."""
    n = R.order
    base = np.arange(n, dtype=np.int16)
    cur = base.copy()
    out = np.zeros(n, dtype=np.int64)
    for k in range(1, n + 1):
        hit = (cur == R.zero) & (out == 0)
        out[hit] = k
        cur = R.mul[cur, base]
    return out


def element_invariants(R: RingTable) -> np.ndarray:
    """(n, 9) matrix of per-element isomorphism invariants.

    Columns: additive order, unit flag, nilpotency index, central flag,
    |xR|, |Rx|, row zero count, column zero count, idempotent flag.
    The one-sided sizes |xR| and |Rx| separate a ring from its opposite
    even when every two-sided count agrees.
    """

    def build():
        n = R.order
        cols = np.empty((n, 9), dtype=np.int64)
        cols[:, 0] = R.additive_order
        cols[:, 1] = R.unit_mask
        cols[:, 2] = _nilpotency_index(R)
        cols[:, 3] = R.central_mask
        for x in range(n):
            cols[x, 4] = len(np.unique(R.mul[x]))
            cols[x, 5] = len(np.unique(R.mul[:, x]))
        zero = R.mul == R.zero
        cols[:, 6] = zero.sum(axis=1)
        cols[:, 7] = zero.sum(axis=0)
        diag = R.mul[np.arange(n), np.arange(n)]
        cols[:, 8] = diag == np.arange(n)
        return cols

    return R.cached("element_invariants", build)


def fingerprint(R: RingTable) -> tuple:
    """Hashable isomorphism invariant; unequal fingerprints mean unequal rings."""

    def build():
        inv = element_invariants(R)
        classes = {}
        for row in inv:
            key = tuple(int(v) for v in row)
            classes[key] = classes.get(key, 0) + 1
        return (
            ("order", R.order),
            ("characteristic", R.characteristic),
            ("additive", additive_type(R)),
            ("commutative", bool((R.mul == R.mul.T).all())),
            ("center_size", int(R.central_mask.sum())),
            ("jacobson_size", len(jacobson_radical(R))),
            ("element_classes", tuple(sorted(classes.items()))),
        )

    return R.cached("fingerprint", build)


def _class_ids(R: RingTable) -> dict:
    inv = element_invariants(R)
    out = {}
    for x in range(R.order):
        out.setdefault(tuple(int(v) for v in inv[x]), []).append(x)
    return out


def _spanning_trace(R: RingTable):
    """Greedy unital generating set plus the op log that rebuilds the ring.

    Returns (gens, segments) where segments[k] is the list of ops unlocked by
    generator k (segment 0 needs no generators).  Each op is (kind, i, j) with
    kind 0=add 1=mul over trace positions; every op yields a NEW element, so a
    replay of all segments enumerates the whole ring.
    """
    classes = _class_ids(R)
    class_size = {x: len(v) for v in classes.values() for x in v}

    trace = [R.zero, R.one] if R.one != R.zero else [R.zero]
    pos = set(trace)
    gens = []
    segments = []

    def close(seg):
        tables = (R.add, R.mul)
        k = 0
        while k < len(trace):
            x = trace[k]
            for j in range(k + 1):
                y = trace[j]
                for kind in (0, 1):
                    t = tables[kind]
                    for a, b, i2, j2 in ((x, y, k, j), (y, x, j, k)):
                        v = int(t[a, b])
                        if v not in pos:
                            pos.add(v)
                            seg.append((kind, i2, j2))
                            trace.append(v)
            k += 1

    seg0 = []
    close(seg0)
    segments.append(seg0)
    while len(trace) < R.order:
        rest = [x for x in range(R.order) if x not in pos]
        g = min(rest, key=lambda x: (class_size[x], x))
        gens.append(g)
        pos.add(g)
        trace.append(g)
        seg = []
        close(seg)
        segments.append(seg)
    return gens, segments


@dataclass
class IsoResult:
    """isomorphic: True / False / None (search budget exhausted)."""

    isomorphic: Optional[bool]
    mapping: Optional[list]
    reason: str

    def __bool__(self):
        return self.isomorphic is True


def _verify_iso(R: RingTable, S: RingTable, phi: np.ndarray) -> None:
    if len(np.unique(phi)) != R.order:
        raise InternalCheckError("candidate isomorphism is not a bijection")
    if not np.array_equal(S.add[np.ix_(phi, phi)], phi[R.add]):
        raise InternalCheckError("candidate isomorphism breaks addition")
    if not np.array_equal(S.mul[np.ix_(phi, phi)], phi[R.mul]):
        raise InternalCheckError("candidate isomorphism breaks multiplication")


def is_isomorphic(R: RingTable, S: RingTable, node_budget: int = DEFAULT_NODE_BUDGET) -> IsoResult:
    """Decide R ~= S; may return inconclusive if node_budget is exhausted."""
    fa, fb = fingerprint(R), fingerprint(S)
    for (ka, va), (_, vb) in zip(fa, fb):
        if va != vb:
            return IsoResult(False, None, f"fingerprint:{ka}")

    gens, segments = _spanning_trace(R)
    inv_R = element_invariants(R)
    classes_S = _class_ids(S)
    cand = [classes_S[tuple(int(v) for v in inv_R[g])] for g in gens]

    tables = (S.add, S.mul)
    n = R.order
    budget = [node_budget]
    trace_elems = _trace_order(R, gens, segments)

    prefix = [S.zero, S.one] if R.one != R.zero else [S.zero]

    def replay(phi, used, seg):
        added = 0
        for kind, i, j in seg:
            budget[0] -= 1
            if budget[0] < 0:
                return -1
            v = int(tables[kind][phi[i], phi[j]])
            if v in used:
                for _ in range(added):
                    used.discard(phi.pop())
                return 0
            phi.append(v)
            used.add(v)
            added += 1
        return 1

    def undo(phi, used, count):
        for _ in range(count):
            used.discard(phi.pop())

    def full_check(phi):
        # replay only covers the spanning ops; the rest of both tables is a
        # real constraint, so a full-depth candidate is still just a candidate
        mapping = np.empty(n, dtype=np.int64)
        mapping[trace_elems] = phi
        if not np.array_equal(S.add[np.ix_(mapping, mapping)], mapping[R.add]):
            return None
        if not np.array_equal(S.mul[np.ix_(mapping, mapping)], mapping[R.mul]):
            return None
        return mapping

    def dfs(depth, phi, used):
        if depth == len(gens):
            return full_check(phi)
        for img in cand[depth]:
            if img in used:
                continue
            phi.append(img)
            used.add(img)
            mark = len(phi)
            st = replay(phi, used, segments[depth + 1])
            if st == -1:
                return "budget"
            if st == 1:
                got = dfs(depth + 1, phi, used)
                if got is not None:
                    return got
            undo(phi, used, len(phi) - mark)
            used.discard(phi.pop())
        return None

    phi0 = list(prefix)
    used0 = set(phi0)
    if len(used0) != len(phi0):
        return IsoResult(False, None, "search")
    st = replay(phi0, used0, segments[0])
    if st != 1:
        return IsoResult(False, None, "search")
    out = dfs(0, phi0, used0) if gens else full_check(phi0)
    if isinstance(out, str):
        return IsoResult(None, None, "budget")
    if out is None:
        return IsoResult(False, None, "search")
    _verify_iso(R, S, out)
    return IsoResult(True, [int(v) for v in out], "search")


def _trace_order(R: RingTable, gens, segments):
    """Element discovery order matching _spanning_trace's positions."""
    trace = [R.zero, R.one] if R.one != R.zero else [R.zero]
    tables = (R.add, R.mul)
    for depth, seg in enumerate(segments):
        if depth > 0:
            trace.append(gens[depth - 1])
        for kind, i, j in seg:
            trace.append(int(tables[kind][trace[i], trace[j]]))
    return trace
