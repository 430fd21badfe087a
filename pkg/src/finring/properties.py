"""Radicals and taxonomy predicates.

Every predicate is an exhaustive scan over the operation tables with early
exit; the *_witness functions return the first violating tuple or None, and
the is_* wrappers just test for None.  Radical computations are memoised on
the ring instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import InternalCheckError
from .table import (
    ElementSet,
    RingTable,
    additive_type,
    ideal_generated,
    idempotents,
    quotient,
    right_annihilator,
    units,
)

_BLOCK_ENTRIES = 1 << 24

# is_ps_i builds |R| quotient rings; above this order it reports None (skipped)
PS_I_DEFAULT_CAP = 64


def _additive_closure(R: RingTable, mask: np.ndarray) -> np.ndarray:
    mask = mask.copy()
    while True:
        cur = np.flatnonzero(mask)
        new = mask.copy()
        new[R.add[np.ix_(cur, cur)].ravel()] = True
        if (new == mask).all():
            return mask
        mask = new


def nilpotent_set(R: RingTable) -> ElementSet:
    """All x with x^k = 0 for some k (k never exceeds the ring order)."""

    def build():
        n = R.order
        base = np.arange(n, dtype=np.int16)
        cur = base.copy()
        for _ in range(n):
            cur = R.mul[cur, base]
        return ElementSet.from_iterable(R, np.flatnonzero(cur == R.zero))

    return R.cached("nilpotent_set", build)


def jacobson_radical(R: RingTable) -> ElementSet:
    """{x : 1 - r*x is a unit for every r}; checked to be a nil two-sided ideal."""

    def build():
        vals = R.add[R.one, R.neg[R.mul]]  # vals[r, x] = 1 - r*x
        mask = R.unit_mask[vals].all(axis=0)
        out = ElementSet.from_iterable(R, np.flatnonzero(mask))
        nil = nilpotent_set(R)
        if not out.members <= nil.members:
            raise InternalCheckError("jacobson radical contains a non-nilpotent element")
        if not out.is_ideal():
            raise InternalCheckError("jacobson radical is not a two-sided ideal")
        return out

    return R.cached("jacobson_radical", build)


def upper_nilradical(R: RingTable) -> ElementSet:
    """Sum of all nil two-sided ideals, accumulated over nil principal ideals."""

    def build():
        nil = nilpotent_set(R).mask
        acc = np.zeros(R.order, dtype=bool)
        acc[R.zero] = True
        for x in np.flatnonzero(nil):
            if acc[x]:
                continue
            I = ideal_generated(R, [int(x)])
            if not nil[I.indices()].all():
                continue
            acc |= I.mask
            acc = _additive_closure(R, acc)
        out = ElementSet.from_iterable(R, np.flatnonzero(acc))
        if not nil[out.indices()].all() or not out.is_ideal():
            raise InternalCheckError("upper nilradical accumulation broke ideal/nil state")
        return out

    return R.cached("upper_nilradical", build)


def lower_nilradical(R: RingTable) -> ElementSet:
    """Prime radical via the ascending chain I' = ideal({x : xRx inside I})."""

    def build():
        n = R.order
        # sandwich[x, r] = (x*r)*x, fixed across iterations
        sandwich = R.mul[R.mul, np.arange(n, dtype=np.int16)[:, None]]
        mask = np.zeros(n, dtype=bool)
        mask[R.zero] = True
        while True:
            cand = mask[sandwich].all(axis=1)
            new = ideal_generated(R, np.flatnonzero(cand)).mask
            if (new == mask).all():
                break
            mask = new
        return ElementSet.from_iterable(R, np.flatnonzero(mask))

    return R.cached("lower_nilradical", build)


# -- witness scans ------------------------------------------------------------


def commutative_witness(R: RingTable):
    bad = np.argwhere(R.mul != R.mul.T)
    return (int(bad[0][0]), int(bad[0][1])) if len(bad) else None


def reduced_witness(R: RingTable):
    """Nonzero x with x*x = 0, if any."""
    n = R.order
    diag = R.mul[np.arange(n), np.arange(n)]
    hits = np.flatnonzero((diag == R.zero) & (np.arange(n) != R.zero))
    return (int(hits[0]),) if len(hits) else None


def symmetric_witness(R: RingTable):
    """(a, b, c) with abc = 0 but bac != 0."""
    n, mul, z = R.order, R.mul, R.zero
    block = max(1, _BLOCK_ENTRIES // (n * n))
    for a0 in range(0, n, block):
        a1 = min(n, a0 + block)
        abc = mul[mul[a0:a1], :]
        bac = mul[mul.T[a0:a1], :]
        viol = (abc == z) & (bac != z)
        if viol.any():
            a, b, c = np.argwhere(viol)[0]
            return (int(a) + a0, int(b), int(c))
    return None


def reversible_witness(R: RingTable):
    """(a, b) with ab = 0 but ba != 0."""
    P = R.mul == R.zero
    viol = P & ~P.T
    if viol.any():
        a, b = np.argwhere(viol)[0]
        return (int(a), int(b))
    return None


def semicommutative_witness(R: RingTable):
    """(a, r, b) with ab = 0 but arb != 0."""
    mul, z = R.mul, R.zero
    pairs = np.argwhere(mul == z)
    block = max(1, _BLOCK_ENTRIES // max(1, R.order))
    for p0 in range(0, len(pairs), block):
        chunk = pairs[p0 : p0 + block]
        ar = mul[chunk[:, 0], :]  # (m, n)
        arb = mul[ar, chunk[:, 1][:, None]]
        viol = arb != z
        if viol.any():
            i, r = np.argwhere(viol)[0]
            return (int(chunk[i, 0]), int(r), int(chunk[i, 1]))
    return None


def _zero_row_products(R: RingTable) -> np.ndarray:
    """Q[a, b] true iff a*r*b = 0 for every r."""
    n, mul, z = R.order, R.mul, R.zero
    Q = np.empty((n, n), dtype=bool)
    block = max(1, _BLOCK_ENTRIES // (n * n))
    for a0 in range(0, n, block):
        a1 = min(n, a0 + block)
        arb = mul[mul[a0:a1], :]  # [a, r, b]
        Q[a0:a1] = (arb == z).all(axis=1)
    return Q


def reflexive_witness(R: RingTable):
    """(a, b, r) with aRb = 0 but b*r*a != 0."""
    Q = R.cached("zero_row_products", lambda: _zero_row_products(R))
    viol = Q & ~Q.T
    if not viol.any():
        return None
    a, b = np.argwhere(viol)[0]
    bra = R.mul[R.mul[b, :], a]
    r = int(np.flatnonzero(bra != R.zero)[0])
    return (int(a), int(b), r)


def right_duo_witness(R: RingTable):
    """(a, b) with b*a outside aR."""
    n, mul = R.order, R.mul
    rows = np.arange(n)[:, None]
    in_aR = np.zeros((n, n), dtype=bool)
    in_aR[rows, mul] = True
    ok = in_aR[rows, mul.T]  # [a, b]: is b*a in aR
    if ok.all():
        return None
    a, b = np.argwhere(~ok)[0]
    return (int(a), int(b))


def left_duo_witness(R: RingTable):
    """(a, b) with a*b outside Ra."""
    n, mul = R.order, R.mul
    rows = np.arange(n)[:, None]
    in_Ra = np.zeros((n, n), dtype=bool)
    in_Ra[rows, mul.T] = True
    ok = in_Ra[rows, mul]  # [a, b]: is a*b in Ra
    if ok.all():
        return None
    a, b = np.argwhere(~ok)[0]
    return (int(a), int(b))


def abelian_witness(R: RingTable):
    """(e, r) with e idempotent and er != re."""
    for e in idempotents(R):
        if not R.central_mask[e]:
            r = int(np.flatnonzero(R.mul[e, :] != R.mul[:, e])[0])
            return (int(e), r)
    return None


def ni_witness(R: RingTable):
    """Violation of N(R) being a two-sided ideal."""
    nil = nilpotent_set(R)
    m = nil.mask
    idx = nil.indices()
    sums = R.add[np.ix_(idx, idx)]
    bad = np.argwhere(~m[sums])
    if len(bad):
        i, j = bad[0]
        return ("sum", int(idx[i]), int(idx[j]))
    left = np.argwhere(~m[R.mul[:, idx]])
    if len(left):
        r, i = left[0]
        return ("lmul", int(r), int(idx[i]))
    right = np.argwhere(~m[R.mul[idx, :]])
    if len(right):
        i, r = right[0]
        return ("rmul", int(idx[i]), int(r))
    return None


def two_primal_witness(R: RingTable):
    """Nilpotent element outside the prime radical, if any."""
    diff = nilpotent_set(R).members - lower_nilradical(R).members
    return (min(diff),) if diff else None


def local_witness(R: RingTable):
    """(x, y) nonunits with x + y a unit; None when nonunits form an ideal."""
    nonunit = ~R.unit_mask
    idx = np.flatnonzero(nonunit)
    sums = R.add[np.ix_(idx, idx)]
    bad = np.argwhere(R.unit_mask[sums])
    if len(bad):
        i, j = bad[0]
        return (int(idx[i]), int(idx[j]))
    return None


def is_commutative(R):
    return commutative_witness(R) is None


def is_reduced(R):
    return reduced_witness(R) is None


def is_symmetric(R):
    return symmetric_witness(R) is None


def is_reversible(R):
    return reversible_witness(R) is None


def is_semicommutative(R):
    return semicommutative_witness(R) is None


def is_reflexive(R):
    return reflexive_witness(R) is None


def is_right_duo(R):
    return right_duo_witness(R) is None


def is_left_duo(R):
    return left_duo_witness(R) is None


def is_duo(R):
    return is_right_duo(R) and is_left_duo(R)


def is_abelian(R):
    return abelian_witness(R) is None


def is_ni(R):
    return ni_witness(R) is None


def is_two_primal(R):
    return two_primal_witness(R) is None


def is_local(R):
    return local_witness(R) is None


def is_ps_i(R: RingTable, cap: int = PS_I_DEFAULT_CAP) -> Optional[bool]:
    """For every a, R / r-ann(aR) must be 2-primal.

    Builds |R| quotients, so orders above `cap` return None (skipped) rather
    than silently passing; raise the cap to force evaluation.
    """
    if R.order > cap:
        return None
    for a in range(R.order):
        Q = quotient(R, right_annihilator(R, a))
        if not is_two_primal(Q):
            return False
    return True


@dataclass
class PropertyProfile:
    """Full predicate evaluation of one ring, with witnesses for the failures."""

    order: int
    characteristic: int
    additive: tuple
    commutative: bool
    reduced: bool
    symmetric: bool
    reversible: bool
    semicommutative: bool
    reflexive: bool
    right_duo: bool
    left_duo: bool
    duo: bool
    abelian: bool
    ni: bool
    two_primal: bool
    ps_i: Optional[bool]
    local: bool
    unit_count: int
    idempotent_count: int
    nilpotent_size: int
    jacobson_size: int
    witnesses: dict = field(default_factory=dict)

    BOOL_KEYS = (
        "commutative",
        "reduced",
        "symmetric",
        "reversible",
        "semicommutative",
        "reflexive",
        "right_duo",
        "left_duo",
        "duo",
        "abelian",
        "ni",
        "two_primal",
        "ps_i",
        "local",
    )

    def as_kv(self) -> list:
        out = [
            f"order={self.order}",
            f"characteristic={self.characteristic}",
            f"additive={'x'.join(str(d) for d in self.additive)}",
        ]
        for k in self.BOOL_KEYS:
            v = getattr(self, k)
            out.append(f"{k}={'skipped' if v is None else str(bool(v)).lower()}")
        out += [
            f"unit_count={self.unit_count}",
            f"idempotent_count={self.idempotent_count}",
            f"nilpotent_size={self.nilpotent_size}",
            f"jacobson_size={self.jacobson_size}",
        ]
        return out

    def as_text(self) -> str:
        lines = self.as_kv()
        wit = [f"  witness {k}: {v}" for k, v in sorted(self.witnesses.items())]
        return "\n".join(lines + wit)


def _check_profile_invariants(p: PropertyProfile) -> None:
    """Implication lattice that finite rings must satisfy; failure means a bug."""
    rules = [
        ("reduced", "commutative"),
        ("commutative", "duo"),
        ("commutative", "symmetric"),
        ("symmetric", "reversible"),
        ("duo", "semicommutative"),
        ("reversible", "semicommutative"),
        ("semicommutative", "abelian"),
        ("abelian", "ni"),
    ]
    for pre, post in rules:
        if getattr(p, pre) and not getattr(p, post):
            raise InternalCheckError(f"profile violates {pre} => {post}")
    if p.reversible != (p.semicommutative and p.reflexive):
        raise InternalCheckError("profile violates reversible <=> semicommutative & reflexive")
    if p.right_duo != p.left_duo:
        raise InternalCheckError("profile violates right_duo <=> left_duo")
    if p.ni != p.two_primal:
        raise InternalCheckError("profile violates ni <=> two_primal")
    if p.ps_i is not None and p.ps_i != p.ni:
        raise InternalCheckError("profile violates ps_i <=> ni")


def profile(R: RingTable, ps_i_cap: int = PS_I_DEFAULT_CAP) -> PropertyProfile:
    """Evaluate every predicate on R and cross-check the implication lattice."""
    wit = {}

    def run(name, fn):
        w = fn(R)
        if w is not None:
            wit[name] = w
        return w is None

    commutative = run("commutative", commutative_witness)
    reduced = run("reduced", reduced_witness)
    symmetric = run("symmetric", symmetric_witness)
    reversible = run("reversible", reversible_witness)
    semicommutative = run("semicommutative", semicommutative_witness)
    reflexive = run("reflexive", reflexive_witness)
    right_duo = run("right_duo", right_duo_witness)
    left_duo = run("left_duo", left_duo_witness)
    abelian = run("abelian", abelian_witness)
    ni = run("ni", ni_witness)
    two_primal = run("two_primal", two_primal_witness)
    local = run("local", local_witness)
    ps = is_ps_i(R, cap=ps_i_cap)

    p = PropertyProfile(
        order=R.order,
        characteristic=R.characteristic,
        additive=additive_type(R),
        commutative=commutative,
        reduced=reduced,
        symmetric=symmetric,
        reversible=reversible,
        semicommutative=semicommutative,
        reflexive=reflexive,
        right_duo=right_duo,
        left_duo=left_duo,
        duo=right_duo and left_duo,
        abelian=abelian,
        ni=ni,
        two_primal=two_primal,
        ps_i=ps,
        local=local,
        unit_count=len(units(R)),
        idempotent_count=len(idempotents(R)),
        nilpotent_size=len(nilpotent_set(R)),
        jacobson_size=len(jacobson_radical(R)),
        witnesses=wit,
    )
    _check_profile_invariants(p)
    return p
