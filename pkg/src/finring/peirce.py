"""Peirce-style decomposition of a finite unital ring.

Lift the primitive central idempotents of R/J(R) to an orthogonal family
e_1..e_m with sum 1, split R into corner rings R_i = e_i R e_i and glue
modules M_ij = e_i R e_j, and evaluate the structural laws that connect the
decomposition to the taxonomy predicates (abelian, NI, reflexive).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InternalCheckError
from .properties import (
    is_abelian,
    is_local,
    is_ni,
    is_reflexive,
    jacobson_radical,
)
from .table import (
    ElementSet,
    RingTable,
    central_idempotents,
    idempotents,
    projection_map,
    quotient,
    verify_axioms,
)


def _subring_table(R: RingTable, elements, unit, tag) -> RingTable:
    """Build the RingTable of a subset closed under both operations."""
    idx = np.array(sorted(elements), dtype=np.int64)
    pos = np.full(R.order, -1, dtype=np.int64)
    pos[idx] = np.arange(len(idx))
    add = pos[R.add[np.ix_(idx, idx)]]
    mul = pos[R.mul[np.ix_(idx, idx)]]
    if (add < 0).any() or (mul < 0).any():
        raise InternalCheckError(f"{tag}: subset is not closed under ring operations")
    sub = RingTable(
        len(idx),
        [R.labels[i] for i in idx],
        add.astype(np.int16),
        mul.astype(np.int16),
        int(pos[R.zero]),
        int(pos[unit]),
        provenance=f"{tag}[{R.provenance}]",
    )
    report = verify_axioms(sub)
    if not report.passed:
        raise InternalCheckError(f"{tag}: corner table fails axioms: {report.violations[:2]}")
    return sub


def _corner(R: RingTable, e: int, f: int):
    """Element set e*R*f."""
    vals = R.mul[R.mul[e, :], f]
    return sorted(set(int(v) for v in vals))


def _additive_span(R: RingTable, parts):
    cur = {R.zero}
    for part in parts:
        cur = {int(R.add[a, b]) for a in cur for b in part}
    return cur


@dataclass
class Decomposition:
    ring: RingTable
    idems: tuple  # orthogonal idempotents summing to 1, by quotient block
    components: tuple  # corner rings e_i R e_i as RingTables
    component_elements: tuple  # their element sets inside the parent
    modules: dict  # (i, j) -> sorted element list of e_i R e_j, i != j
    s_elements: ElementSet  # internal direct sum of the corners
    m_elements: ElementSet  # internal direct sum of the off-diagonal modules
    all_components_local: bool
    m_nonzero: bool
    m_square_zero: bool

    def module_sizes(self):
        return {ij: len(v) for ij, v in sorted(self.modules.items())}

    def summary(self) -> str:
        comp = ", ".join(f"R{i+1}: order {c.order}" for i, c in enumerate(self.components))
        mods = ", ".join(f"|M{i+1}{j+1}|={len(v)}" for (i, j), v in sorted(self.modules.items()))
        lines = [
            f"blocks m={len(self.idems)}",
            f"components: {comp}",
            f"modules: {mods if mods else '(none)'}",
            f"all components local: {self.all_components_local}",
            f"glue nonzero: {self.m_nonzero}",
            f"glue squares to zero: {self.m_square_zero}",
        ]
        return "\n".join(lines)


def peirce(R: RingTable) -> Decomposition:
    """Decompose R along lifted primitive central idempotents of R/J."""
    J = jacobson_radical(R)
    Q = quotient(R, J)
    proj = projection_map(R, Q, J)

    cents = sorted(central_idempotents(Q).members - {Q.zero})
    prim = []
    for e in cents:
        parts = [f for f in cents if f != e and Q.mul[f, e] == f]
        if not parts:
            prim.append(e)
    prim.sort()

    idems_R = idempotents(R).indices()
    chosen = []
    for eq in prim:
        found = None
        for cand in idems_R:
            if proj[cand] != eq:
                continue
            if all(
                R.mul[cand, f] == R.zero and R.mul[f, cand] == R.zero for f in chosen
            ):
                found = int(cand)
                break
        if found is None:
            raise InternalCheckError("idempotent lift failed for a central block")
        chosen.append(found)

    total = R.zero
    for e in chosen:
        total = int(R.add[total, e])
    if total != R.one:
        raise InternalCheckError("lifted idempotents do not sum to 1")

    m = len(chosen)
    comp_sets = [tuple(_corner(R, e, e)) for e in chosen]
    components = tuple(
        _subring_table(R, comp_sets[i], chosen[i], f"corner{i+1}") for i in range(m)
    )
    modules = {}
    for i in range(m):
        for j in range(m):
            if i != j:
                modules[(i, j)] = _corner(R, chosen[i], chosen[j])

    s_set = _additive_span(R, comp_sets)
    m_set = _additive_span(R, list(modules.values())) if modules else {R.zero}

    size_s = 1
    for cs in comp_sets:
        size_s *= len(cs)
    if len(s_set) != size_s:
        raise InternalCheckError("corner sum is not an internal direct sum")
    size_m = 1
    for v in modules.values():
        size_m *= len(v)
    if len(m_set) != size_m:
        raise InternalCheckError("module sum is not an internal direct sum")
    if len(s_set) * len(m_set) != R.order:
        raise InternalCheckError("decomposition sizes do not reconstruct the ring order")

    m_es = ElementSet.from_iterable(R, sorted(m_set))
    if not m_es.members <= J.members:
        raise InternalCheckError("glue module is not inside the radical")

    # each corner must be primary: corner/J(corner) has only trivial central idempotents
    for i, C in enumerate(components):
        CQ = quotient(C, jacobson_radical(C))
        if len(central_idempotents(CQ)) != (2 if CQ.order > 1 else 1):
            raise InternalCheckError(f"corner {i+1} is not primary")

    midx = np.array(sorted(m_set), dtype=np.int64)
    msq = bool((R.mul[np.ix_(midx, midx)] == R.zero).all())

    dec = Decomposition(
        ring=R,
        idems=tuple(chosen),
        components=components,
        component_elements=tuple(comp_sets),
        modules=modules,
        s_elements=ElementSet.from_iterable(R, sorted(s_set)),
        m_elements=m_es,
        all_components_local=all(is_local(C) for C in components),
        m_nonzero=len(m_set) > 1,
        m_square_zero=msq,
    )
    if msq:
        _verify_split_model(dec)
    return dec


def m_square_zero(D: Decomposition) -> bool:
    return D.m_square_zero


def _verify_split_model(D: Decomposition) -> None:
    """With M^2 = 0 every product must follow (s1+u1)(s2+u2) = s1s2 + (s1u2 + u1s2).

    Exercises the uniqueness of the S (+) M additive splitting on all pairs.
    """
    R = D.ring
    n = R.order
    s_of = np.full(n, -1, dtype=np.int64)
    u_of = np.full(n, -1, dtype=np.int64)
    for s in D.s_elements.indices():
        for u in D.m_elements.indices():
            r = int(R.add[s, u])
            if s_of[r] != -1:
                raise InternalCheckError("S+M splitting is not unique")
            s_of[r] = s
            u_of[r] = u
    if (s_of < 0).any():
        raise InternalCheckError("S+M splitting does not cover the ring")
    sa, ua = s_of, u_of
    lhs = R.mul
    rhs = R.add[
        R.mul[sa[:, None], sa[None, :]],
        R.add[R.mul[sa[:, None], ua[None, :]], R.mul[ua[:, None], sa[None, :]]],
    ]
    if not np.array_equal(lhs, rhs):
        bad = np.argwhere(lhs != rhs)[0]
        raise InternalCheckError(f"split multiplication model fails at pair {tuple(bad)}")


@dataclass
class CheckResult:
    name: str
    predicted: Optional[bool]
    actual: bool
    agree: bool
    note: str = ""


@dataclass
class DecompositionReport:
    ring: RingTable
    decomposition: Decomposition
    checks: tuple

    @property
    def overall_pass(self) -> bool:
        return all(c.agree for c in self.checks)

    def as_text(self) -> str:
        out = [self.decomposition.summary()]
        for c in self.checks:
            status = "agree" if c.agree else "MISMATCH"
            pred = "n/a" if c.predicted is None else str(c.predicted).lower()
            out.append(f"{c.name}: predicted={pred} actual={str(c.actual).lower()} [{status}]{c.note}")
        return "\n".join(out)


def decomposition_report(R: RingTable) -> DecompositionReport:
    """Cross-check the decomposition flags against the scan-based predicates."""
    D = peirce(R)
    checks = []

    pred = (not D.m_nonzero) and D.all_components_local
    act = is_abelian(R)
    checks.append(
        CheckResult("abelian iff no glue and local corners", pred, act, pred == act)
    )

    pred = D.all_components_local
    act = is_ni(R)
    checks.append(CheckResult("NI iff all corners local", pred, act, pred == act))

    applicable = D.m_nonzero and D.m_square_zero
    act = is_reflexive(R)
    if applicable:
        checks.append(
            CheckResult("square-zero glue forces nonreflexive", False, act, act is False)
        )
    else:
        checks.append(
            CheckResult(
                "square-zero glue forces nonreflexive",
                None,
                act,
                True,
                note=" (vacuous: no square-zero glue)",
            )
        )
    return DecompositionReport(R, D, tuple(checks))
