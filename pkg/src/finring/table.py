"""Dense operation-table representation of finite unital rings.

Elements of a ring of order n are the indices 0..n-1.  Both operations are
stored as full n x n lookup tables, so every structural question reduces to
array indexing.  Tables are immutable once constructed; all derived data is
memoised on the instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    AxiomViolationError,
    InternalCheckError,
    NotAnIdealError,
    TableStructureError,
)

# Exhaustive O(n^3) law scans refuse anything larger than this.
MAX_ORDER = 1024

# Cap on entries per temporary block in the chunked triple scans (~16M int16).
_BLOCK_ENTRIES = 1 << 24

_DTYPE = np.int16


def _as_table(arr, n: int, name: str) -> np.ndarray:
    t = np.asarray(arr)
    if t.ndim == 1 and t.size == n * n:
        t = t.reshape(n, n)
    if t.shape != (n, n):
        raise TableStructureError(f"{name} table has shape {t.shape}, expected ({n}, {n})")
    if not np.issubdtype(t.dtype, np.integer):
        raise TableStructureError(f"{name} table must be integer, got dtype {t.dtype}")
    if t.size and (t.min() < 0 or t.max() >= n):
        bad = np.argwhere((t < 0) | (t >= n))[0]
        raise TableStructureError(
            f"{name} table entry at {tuple(bad)} is {t[tuple(bad)]}, outside 0..{n - 1}"
        )
    t = np.ascontiguousarray(t, dtype=_DTYPE)
    t.setflags(write=False)
    return t


class RingTable:
    """A finite unital ring given by dense addition and multiplication tables.

    Construction validates structure only (shapes, index ranges, labels).
    Ring laws are checked by :func:`verify_axioms`; every constructor in this
    package runs that check before handing a table to callers.
    """

    __slots__ = ("order", "labels", "add", "mul", "zero", "one", "provenance", "_cache")

    def __init__(self, order, labels, add, mul, zero, one, provenance=""):
        order = int(order)
        if order < 1:
            raise TableStructureError(f"order must be positive, got {order}")
        if order > MAX_ORDER:
            raise TableStructureError(f"order {order} exceeds the supported cap {MAX_ORDER}")
        labels = tuple(str(lb) for lb in labels)
        if len(labels) != order:
            raise TableStructureError(f"got {len(labels)} labels for order {order}")
        for lb in labels:
            if not lb or any(ch.isspace() for ch in lb):
                raise TableStructureError(f"label {lb!r} is empty or contains whitespace")
        zero = int(zero)
        one = int(one)
        if not (0 <= zero < order and 0 <= one < order):
            raise TableStructureError(f"zero={zero} or one={one} outside 0..{order - 1}")
        self.order = order
        self.labels = labels
        self.add = _as_table(add, order, "add")
        self.mul = _as_table(mul, order, "mul")
        self.zero = zero
        self.one = one
        self.provenance = str(provenance)
        self._cache = {}

    # -- basics ------------------------------------------------------------

    def elements(self) -> range:
        return range(self.order)

    def label(self, x: int) -> str:
        return self.labels[x]

    def cached(self, key: str, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def neg(self) -> np.ndarray:
        """neg[x] is the additive inverse of x."""

        def build():
            rows, cols = np.nonzero(self.add == self.zero)
            out = np.empty(self.order, dtype=_DTYPE)
            out[rows] = cols
            out.setflags(write=False)
            return out

        return self.cached("neg", build)

    @property
    def additive_order(self) -> np.ndarray:
        """additive_order[x] is the least k >= 1 with k*x = 0."""

        def build():
            n = self.order
            out = np.zeros(n, dtype=np.int64)
            cur = np.arange(n, dtype=_DTYPE)
            ids = np.arange(n, dtype=_DTYPE)
            k = 1
            while True:
                hit = (cur == self.zero) & (out == 0)
                out[hit] = k
                if (out > 0).all():
                    break
                cur = self.add[cur, ids]
                k += 1
                if k > n:
                    raise InternalCheckError("additive order exceeded ring order")
            out.setflags(write=False)
            return out

        return self.cached("additive_order", build)

    @property
    def characteristic(self) -> int:
        return int(self.additive_order[self.one])

    @property
    def unit_mask(self) -> np.ndarray:
        """Boolean mask of two-sided units."""

        def build():
            two_sided = (self.mul == self.one) & (self.mul.T == self.one)
            m = two_sided.any(axis=1)
            m.setflags(write=False)
            return m

        return self.cached("unit_mask", build)

    @property
    def inverse(self) -> np.ndarray:
        """inverse[x] is the two-sided inverse of x, or -1 when x is not a unit."""

        def build():
            two_sided = (self.mul == self.one) & (self.mul.T == self.one)
            out = np.where(two_sided.any(axis=1), two_sided.argmax(axis=1), -1)
            out.setflags(write=False)
            return out

        return self.cached("inverse", build)

    @property
    def central_mask(self) -> np.ndarray:
        def build():
            m = (self.mul == self.mul.T).all(axis=1)
            m.setflags(write=False)
            return m

        return self.cached("central_mask", build)

    def pow(self, x: int, k: int) -> int:
        """x**k for k >= 1 (k = 0 gives the unity)."""
        if k == 0:
            return self.one
        acc = x
        for _ in range(k - 1):
            acc = int(self.mul[acc, x])
        return acc

    def smul(self, k: int, x: int) -> int:
        """Integer multiple k*x in the additive group."""
        k %= int(self.additive_order[x])
        acc = self.zero
        for _ in range(k):
            acc = int(self.add[acc, x])
        return acc

    def table_equal(self, other: "RingTable", labels: bool = True) -> bool:
        """Entry-for-entry equality of the two tables (provenance ignored)."""
        if self.order != other.order or self.zero != other.zero or self.one != other.one:
            return False
        if labels and self.labels != other.labels:
            return False
        return np.array_equal(self.add, other.add) and np.array_equal(self.mul, other.mul)

    def __repr__(self):
        src = f", {self.provenance}" if self.provenance else ""
        return f"<RingTable order={self.order}{src}>"


@dataclass(frozen=True)
class ElementSet:
    """An explicit subset of a ring's elements."""

    ring: RingTable
    members: frozenset

    @classmethod
    def from_iterable(cls, ring: RingTable, it: Iterable[int]) -> "ElementSet":
        return cls(ring, frozenset(int(x) for x in it))

    def __contains__(self, x) -> bool:
        return int(x) in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    @property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.ring.order, dtype=bool)
        m[list(self.members)] = True
        return m

    def indices(self) -> np.ndarray:
        return np.array(sorted(self.members), dtype=np.int64)

    def is_additive_subgroup(self) -> bool:
        R = self.ring
        if R.zero not in self.members:
            return False
        idx = self.indices()
        sums = R.add[np.ix_(idx, idx)]
        return bool(self.mask[sums].all())

    def is_ideal(self) -> bool:
        """Two-sided ideal test: additive subgroup absorbing R on both sides."""
        if not self.is_additive_subgroup():
            return False
        R = self.ring
        idx = self.indices()
        m = self.mask
        return bool(m[R.mul[:, idx]].all() and m[R.mul[idx, :]].all())

    def labels(self) -> list:
        return [self.ring.labels[x] for x in sorted(self.members)]


@dataclass
class AxiomReport:
    """Outcome of an exhaustive ring-law scan."""

    passed: bool
    violations: list = field(default_factory=list)  # [(law, witness tuple)]

    def law_names(self) -> list:
        return [law for law, _ in self.violations]


def _first_bad_triple(lhs: np.ndarray, rhs: np.ndarray, offset: int):
    bad = np.argwhere(lhs != rhs)
    if len(bad) == 0:
        return None
    a, b, c = bad[0]
    return (int(a) + offset, int(b), int(c))


def _scan_triples(n: int, make_lhs, make_rhs):
    """Chunked comparison of two (n,n,n) arrays given by block builders."""
    block = max(1, _BLOCK_ENTRIES // (n * n))
    for a0 in range(0, n, block):
        a1 = min(n, a0 + block)
        w = _first_bad_triple(make_lhs(a0, a1), make_rhs(a0, a1), a0)
        if w is not None:
            return w
    return None


def verify_axioms(R: RingTable) -> AxiomReport:
    """Exhaustively check every ring law on R, witnessing the first violation per law.

    Covers: additive abelian group laws, both associativities, both
    distributive laws, two-sided unity, and zero annihilation.  Cost is
    O(n^3) per three-variable law, chunked to bound memory.
    """
    n = R.order
    add, mul = R.add, R.mul
    ids = np.arange(n, dtype=_DTYPE)
    violations = []

    def report(law, witness):
        violations.append((law, witness))

    # two-variable laws first
    bad = np.argwhere(add != add.T)
    if len(bad):
        report("add_commutative", (int(bad[0][0]), int(bad[0][1])))
    if not np.array_equal(add[R.zero], ids):
        report("add_identity", (int(np.argwhere(add[R.zero] != ids)[0][0]),))
    no_inv = ~(add == R.zero).any(axis=1)
    if no_inv.any():
        report("add_inverse", (int(np.argmax(no_inv)),))
    if not (np.array_equal(mul[R.one], ids) and np.array_equal(mul[:, R.one], ids)):
        bad_l = np.argwhere(mul[R.one] != ids)
        bad_r = np.argwhere(mul[:, R.one] != ids)
        x = bad_l[0][0] if len(bad_l) else bad_r[0][0]
        report("unity", (int(x),))
    if not ((mul[R.zero] == R.zero).all() and (mul[:, R.zero] == R.zero).all()):
        bad_l = np.argwhere(mul[R.zero] != R.zero)
        bad_r = np.argwhere(mul[:, R.zero] != R.zero)
        x = bad_l[0][0] if len(bad_l) else bad_r[0][0]
        report("zero_annihilation", (int(x),))

    # three-variable laws, chunked over the first index
    w = _scan_triples(n, lambda a0, a1: add[add[a0:a1], :], lambda a0, a1: add[a0:a1][:, add])
    if w is not None:
        report("add_associative", w)
    w = _scan_triples(n, lambda a0, a1: mul[mul[a0:a1], :], lambda a0, a1: mul[a0:a1][:, mul])
    if w is not None:
        report("mul_associative", w)
    w = _scan_triples(
        n,
        lambda a0, a1: mul[a0:a1][:, add],
        lambda a0, a1: add[mul[a0:a1, :, None], mul[a0:a1, None, :]],
    )
    if w is not None:
        report("left_distributive", w)
    # rhs[a,b,c] = add[mul[a,c], mul[b,c]]
    w = _scan_triples(
        n,
        lambda a0, a1: mul[add[a0:a1], :],
        lambda a0, a1: add[mul[a0:a1, None, :], mul[None, :, :]],
    )
    if w is not None:
        report("right_distributive", w)

    return AxiomReport(passed=not violations, violations=violations)


def checked(R: RingTable) -> RingTable:
    """Run verify_axioms and raise AxiomViolationError on failure."""
    rep = verify_axioms(R)
    if not rep.passed:
        raise AxiomViolationError(rep)
    return R


# -- element scans ----------------------------------------------------------


def units(R: RingTable) -> ElementSet:
    """All elements with a two-sided multiplicative inverse."""
    return ElementSet.from_iterable(R, np.flatnonzero(R.unit_mask))


def idempotents(R: RingTable) -> ElementSet:
    """All x with x*x = x."""
    n = R.order
    diag = R.mul[np.arange(n), np.arange(n)]
    return ElementSet.from_iterable(R, np.flatnonzero(diag == np.arange(n)))


def central_idempotents(R: RingTable) -> ElementSet:
    n = R.order
    diag = R.mul[np.arange(n), np.arange(n)]
    m = (diag == np.arange(n)) & R.central_mask
    return ElementSet.from_iterable(R, np.flatnonzero(m))


# -- derived rings ----------------------------------------------------------


def opposite(R: RingTable) -> RingTable:
    """Same elements and addition, multiplication reversed."""
    src = R.provenance or "ring"
    return RingTable(
        R.order, R.labels, R.add, R.mul.T.copy(), R.zero, R.one, provenance=f"op({src})"
    )


def direct_sum(A: RingTable, B: RingTable) -> RingTable:
    """Componentwise product ring on pairs (a, b), packed as a*|B| + b."""
    na, nb = A.order, B.order
    if na * nb > MAX_ORDER:
        raise TableStructureError(f"direct sum order {na * nb} exceeds cap {MAX_ORDER}")
    add = (A.add[:, None, :, None].astype(np.int64) * nb + B.add[None, :, None, :]).reshape(
        na * nb, na * nb
    )
    mul = (A.mul[:, None, :, None].astype(np.int64) * nb + B.mul[None, :, None, :]).reshape(
        na * nb, na * nb
    )
    labels = [f"({la},{lb})" for la in A.labels for lb in B.labels]
    pa = A.provenance or "A"
    pb = B.provenance or "B"
    return checked(
        RingTable(
            na * nb,
            labels,
            add,
            mul,
            A.zero * nb + B.zero,
            A.one * nb + B.one,
            provenance=f"sum({pa},{pb})",
        )
    )


# -- ideals and quotients ----------------------------------------------------


def ideal_generated(R: RingTable, seeds: Iterable[int]) -> ElementSet:
    """Smallest two-sided ideal of R containing the seed elements."""
    n = R.order
    mask = np.zeros(n, dtype=bool)
    mask[R.zero] = True
    for s in seeds:
        mask[int(s)] = True
    while True:
        cur = np.flatnonzero(mask)
        new = mask.copy()
        new[R.add[np.ix_(cur, cur)].ravel()] = True
        new[R.mul[:, cur].ravel()] = True
        new[R.mul[cur, :].ravel()] = True
        if (new == mask).all():
            break
        mask = new
    return ElementSet.from_iterable(R, np.flatnonzero(mask))


def right_annihilator(R: RingTable, a: int) -> ElementSet:
    """{t : x*t = 0 for every x in the right ideal aR}.  Always a two-sided ideal."""
    aR = np.unique(R.mul[int(a), :])
    ann = np.flatnonzero((R.mul[np.ix_(aR, np.arange(R.order))] == R.zero).all(axis=0))
    out = ElementSet.from_iterable(R, ann)
    if not out.is_ideal():
        raise InternalCheckError(f"right annihilator of element {a} is not a two-sided ideal")
    return out


def quotient(R: RingTable, ideal: ElementSet) -> RingTable:
    """Quotient ring R/I with cosets named by their least element."""
    if ideal.ring is not R:
        raise NotAnIdealError("ideal belongs to a different ring instance")
    if not ideal.is_ideal():
        raise NotAnIdealError("quotient requires a two-sided ideal")
    idx = ideal.indices()
    rep = R.add[:, idx].min(axis=1).astype(np.int64)
    reps = np.unique(rep)
    pos = np.full(R.order, -1, dtype=np.int64)
    pos[reps] = np.arange(len(reps))
    q_add = pos[rep[R.add[np.ix_(reps, reps)]]]
    q_mul = pos[rep[R.mul[np.ix_(reps, reps)]]]
    labels = [R.labels[r] for r in reps]
    Q = RingTable(
        len(reps),
        labels,
        q_add,
        q_mul,
        int(pos[rep[R.zero]]),
        int(pos[rep[R.one]]),
        provenance=f"quotient({R.provenance or 'ring'}, |I|={len(ideal)})",
    )
    rep_check = verify_axioms(Q)
    if not rep_check.passed:
        raise InternalCheckError(f"quotient table fails {rep_check.violations[0][0]}")
    Q._cache["projection"] = pos[rep]  # element -> coset index, used by peirce
    return Q


def projection_map(R: RingTable, Q: RingTable, ideal: ElementSet) -> np.ndarray:
    """Element map of the canonical surjection R -> R/I used by quotient()."""
    if "projection" in Q._cache:
        return Q._cache["projection"]
    idx = ideal.indices()
    rep = R.add[:, idx].min(axis=1).astype(np.int64)
    reps = np.unique(rep)
    pos = np.full(R.order, -1, dtype=np.int64)
    pos[reps] = np.arange(len(reps))
    return pos[rep]


# -- additive structure -------------------------------------------------------


def additive_type(R: RingTable) -> tuple:
    """Elementary-divisor profile of (R, +): sorted tuple of prime powers.

    Recovered from element order counts: for each prime p, the number of
    elements killed by p^k determines the partition of the p-part.
    """
    orders = np.asarray(R.additive_order)
    n = R.order
    out = []
    m = n
    p = 2
    primes = []
    while m > 1:
        if m % p == 0:
            primes.append(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    for p in primes:
        # conjugate partition from counts of elements of order dividing p^k
        prev = 0
        conj = []
        k = 1
        while True:
            c = int(np.count_nonzero((p**k) % orders == 0))
            a = round(np.log(c) / np.log(p))
            if a == prev:
                break
            conj.append(a - prev)
            prev = a
            k += 1
        # conj[k-1] = number of parts >= k; convert to parts
        parts = []
        for i, cnt in enumerate(conj):
            nxt = conj[i + 1] if i + 1 < len(conj) else 0
            parts.extend([i + 1] * (cnt - nxt))
        out.extend(p**e for e in parts)
    return tuple(sorted(out))
