"""Named ring catalogue and the full verification runner.

Each entry records a construction recipe, the expected order, and the property
values the ring is known to have.  Only known values are asserted; everything
else the profile computes is reported as informative.  verify_corpus builds
every entry, checks the expectations, and runs the cross-cutting invariant
suites (radical agreement, the implication lattice, opposite-ring symmetry,
the local cube-zero criterion, structure-split consistency) plus the
small-order enumeration cross-checks.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .construct import (
    column_bimodule,
    cyclic,
    formal_triangular,
    galois,
    matrix_ring,
)
from .peirce import peirce
from .enumeration import enumerate_unital
from .errors import FinringError
from .expr import parse_ring_expr
from .iso import is_isomorphic
from .properties import (
    PropertyProfile,
    is_left_duo,
    is_reflexive,
    is_reversible,
    is_right_duo,
    is_semicommutative,
    jacobson_radical,
    lower_nilradical,
    profile,
    upper_nilradical,
)
from .table import RingTable, opposite


def _tri128() -> RingTable:
    """Triangular ring glueing 2x2 matrices over F2 to F2 by the column module."""
    A, B, spec = column_bimodule(galois(2), 2)
    return formal_triangular(A, B, spec)


def _tri128_op() -> RingTable:
    return opposite(_tri128())


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    recipe: str
    order: int
    expects: dict
    note: str = ""
    builder: Optional[Callable[[], RingTable]] = None
    basis_span: Optional[tuple] = None  # words that must additively span the ring

    def build(self) -> RingTable:
        if self.builder is not None:
            return self.builder()
        return parse_ring_expr(self.recipe)


def corpus() -> list:
    """Every catalogued ring, sorted by name."""
    E = CorpusEntry
    entries = [
        E("Z2", "Zn(2)", 2,
          dict(commutative=True, reduced=True),
          "prime field, the smallest reduced ring"),
        E("Z3", "Zn(3)", 3,
          dict(commutative=True, reduced=True),
          "prime field of odd characteristic"),
        E("Z4", "Zn(4)", 4,
          dict(commutative=True, reduced=False, local=True),
          "smallest nonreduced chain ring"),
        E("F2x", "F2<x>/(x^2)", 4,
          dict(commutative=True, reduced=False, local=True),
          "dual numbers over F2, the other indecomposable nonreduced order-4 ring"),
        E("F4", "GF(2,2)", 4,
          dict(commutative=True, reduced=True, local=True),
          "four-element field"),
        E("F2F2", "sum(Zn(2),Zn(2))", 4,
          dict(commutative=True, reduced=True, local=False),
          "split order-4 ring, completes the order-4 classification"),
        E("U2F2", "U(2,GF(2))", 8,
          dict(ni=True, abelian=False, reflexive=False),
          "upper triangular 2x2 over F2; the unique smallest noncommutative ring, "
          "NI but not abelian and not reflexive"),
        E("M2F2", "M(2,GF(2))", 16,
          dict(reflexive=True, ni=False),
          "full 2x2 matrices over F2; the smallest ring whose nilpotents do not "
          "form an ideal, yet reflexive"),
        E("SkewF4x2", "SkewF4x2()", 16,
          dict(commutative=False, semicommutative=True, right_duo=True,
               left_duo=True, reflexive=True, symmetric=True, local=True),
          "skew dual numbers over F4 twisted by squaring; the smallest "
          "noncommutative ring that is symmetric, and the smallest that is duo"),
        E("S16F2a", "F2<u,v>/(u^3,v^3,vu,u^2-uv,v^2-uv)", 16,
          dict(commutative=False, semicommutative=True, right_duo=True,
               left_duo=True, reflexive=False, local=True),
          "characteristic-2 local ring; smallest duo ring that is not reflexive"),
        E("S16Z4a", "Z4<u,v>/(u^3,v^3,vu,u^2-uv,v^2-uv,2-uv,2u,2v)", 16,
          dict(commutative=False, semicommutative=True, right_duo=True,
               left_duo=True, reflexive=False, local=True),
          "characteristic-4 twin of S16F2a with the same one-sided structure"),
        E("S16F2b", "F2<u,v>/(u^3,v^2,vu,u^2-uv)", 16,
          dict(commutative=False, semicommutative=True, right_duo=False,
               left_duo=False, reflexive=False, local=True),
          "smallest semicommutative ring that is neither duo nor reflexive"),
        E("S16Z4b", "Z4<u,v>/(u^3,v^2,vu,u^2-uv,2-uv,2u,2v)", 16,
          dict(commutative=False, semicommutative=True, right_duo=False,
               left_duo=False, reflexive=False, local=True),
          "characteristic-4 twin of S16F2b"),
        E("L32a", "F2<u,v>/(u^4,uv,vu-u^3,v^2)", 32,
          dict(commutative=False, semicommutative=True, local=True),
          "order-32 local ring whose radical cubes are nonzero, case 1 of 7"),
        E("L32b", "F2<u,v>/(u^4,uv,vu-u^3,v^2-u^3)", 32,
          dict(commutative=False, semicommutative=True, local=True),
          "order-32 local ring, case 2: the square of the second generator "
          "lands on the cube of the first"),
        E("L32c", "Z4<u,v>/(u^4,uv,vu-u^3,v^2,u^3-2)", 32,
          dict(commutative=False, semicommutative=True, local=True),
          "order-32 local ring of characteristic 4, case 3"),
        E("L32d", "Z4<u,v>/(u^4,uv,vu-u^3,v^2-u^3,u^3-2)", 32,
          dict(commutative=False, semicommutative=True, local=True),
          "order-32 local ring of characteristic 4, case 4"),
        E("L32e", "Z4<u,v>/(u^4,uv,vu-u^3,v^2,u^2-2)", 32,
          dict(commutative=False, semicommutative=True, local=True),
          "order-32 local ring of characteristic 4, case 5"),
        E("L32f", "Z4<u,v>/(u^4,uv,vu-u^3,v^2-u^3,u^2-2)", 32,
          dict(commutative=False, semicommutative=True, local=True),
          "order-32 local ring of characteristic 4, case 6"),
        E("L32g", "Z4<u,v>/(u^4,uv,vu-u^3,v^2,u^2-2-2u)", 32,
          dict(commutative=False, semicommutative=True, local=True),
          "order-32 local ring of characteristic 4, case 7"),
        E("Sym32", "F2<u,v>/(u^3,v^2,u^2+uv+vu,uvu)", 32,
          dict(commutative=False, symmetric=True, reversible=True,
               right_duo=False, left_duo=False, local=True),
          "smallest symmetric ring that is not duo",
          basis_span=((), ("u",), ("v",), ("u", "v"), ("v", "u"))),
        E("Abel64", "F2<u,v>/(u^2,v^2,uvu-vuv)", 64,
          dict(abelian=True, semicommutative=False, reflexive=False, local=True),
          "smallest ring that is abelian but not semicommutative; also the "
          "smallest nonsemicommutative ring of any kind"),
        E("Reflexive64", "Reflexive64()", 64,
          dict(commutative=False, ni=True, abelian=False, reflexive=True),
          "smallest reflexive ring that is not abelian"),
        E("Tri128", "tri(M(2,GF(2)),GF(2),columns)", 128,
          dict(ni=False, reflexive=False),
          "formal triangular glue of 2x2 matrices over F2 and F2 along the "
          "column bimodule; indecomposable, neither NI nor reflexive",
          builder=_tri128),
        E("Tri128op", "op(tri(M(2,GF(2)),GF(2),columns))", 128,
          dict(ni=False, reflexive=False),
          "opposite of Tri128; not isomorphic to it",
          builder=_tri128_op),
        E("M2F2_U2F2", "sum(M(2,GF(2)),U(2,GF(2)))", 128,
          dict(ni=False, reflexive=False),
          "the decomposable order-128 ring that is neither NI nor reflexive"),
        E("F2Q8", "GA(GF(2),Q8)", 256,
          dict(reversible=True, symmetric=False, right_duo=True, left_duo=True),
          "group algebra of the quaternion group over F2; smallest reversible "
          "nonsymmetric ring, and it is duo"),
        E("Rev256", "F2<u,v>/(u^3,v^3,u^2+v^2+vu,vu^2+uvu+vuv,u^2vu)", 256,
          dict(reversible=True, symmetric=False, right_duo=False,
               left_duo=False, local=True),
          "smallest reversible nonsymmetric ring that is not duo. The first "
          "four relations alone present an order-512 algebra; that algebra has "
          "a unique minimal two-sided ideal, spanned by u^2vu, and the fifth "
          "relation kills it, giving the order-256 quotient with the stated "
          "properties (the 512-element ring itself is not reversible)"),
        E("M2F2_F2", "sum(M(2,GF(2)),Zn(2))", 32,
          dict(ni=False),
          "matrix-by-field sum: the non-NI component spoils NI for the sum"),
        E("M2F2_Z4", "sum(M(2,GF(2)),Zn(4))", 64,
          dict(ni=False),
          "matrix-by-chain-ring sum, non-NI of order 64"),
        E("M2F2_F4", "sum(M(2,GF(2)),GF(2,2))", 64,
          dict(ni=False),
          "matrix-by-field sum, non-NI of order 64"),
        E("U2F2_U2F2", "sum(U(2,GF(2)),U(2,GF(2)))", 64,
          dict(ni=True, abelian=False),
          "sum of two NI rings stays NI"),
    ]
    entries.sort(key=lambda e: e.name)
    return entries


@dataclass
class EntryResult:
    name: str
    order_expected: int
    order_actual: int = -1
    failures: list = field(default_factory=list)
    checked: list = field(default_factory=list)
    informative: dict = field(default_factory=dict)
    error: str = ""
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures and not self.error


@dataclass
class SuiteResult:
    name: str
    violations: list = field(default_factory=list)
    checked: int = 0
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass
class VerificationReport:
    entries: list
    suites: list
    seconds: float

    @property
    def overall_pass(self) -> bool:
        return all(e.passed for e in self.entries) and all(s.passed for s in self.suites)

    def as_kv(self) -> str:
        lines = []
        for e in self.entries:
            lines.append(f"entry.{e.name}.pass={str(e.passed).lower()}")
            lines.append(f"entry.{e.name}.order={e.order_actual}")
            for kv in e.checked:
                lines.append(f"entry.{e.name}.{kv}")
        for s in self.suites:
            key = s.name.replace(" ", "_")
            lines.append(f"suite.{key}.pass={str(s.passed).lower()}")
            lines.append(f"suite.{key}.checked={s.checked}")
        lines.append(f"overall.pass={str(self.overall_pass).lower()}")
        return "\n".join(lines)

    def as_text(self) -> str:
        out = []
        for e in self.entries:
            mark = "PASS" if e.passed else "FAIL"
            out.append(f"[{mark}] {e.name:12} order {e.order_actual:4} ({e.seconds:.2f}s)")
            if e.error:
                out.append(f"         error: {e.error}")
            for f in e.failures:
                out.append(f"         {f}")
            if e.informative:
                info = " ".join(f"{k}={v}" for k, v in sorted(e.informative.items()))
                out.append(f"         informative: {info}")
        for s in self.suites:
            mark = "PASS" if s.passed else "FAIL"
            extra = f" ({s.note})" if s.note else ""
            out.append(f"[{mark}] suite {s.name}: {s.checked} checks{extra}")
            for v in s.violations[:10]:
                out.append(f"         {v}")
        out.append(f"overall: {'PASS' if self.overall_pass else 'FAIL'} in {self.seconds:.1f}s")
        return "\n".join(out)


def _check_entry(entry: CorpusEntry, ps_i_cap: int) -> tuple:
    t0 = time.time()
    res = EntryResult(entry.name, entry.order)
    try:
        R = entry.build()
    except FinringError as exc:
        res.error = f"build failed: {exc}"
        res.seconds = time.time() - t0
        return res, None
    res.order_actual = R.order
    if R.order != entry.order:
        res.failures.append(f"order: expected {entry.order}, built {R.order}")
    prof = profile(R, ps_i_cap=ps_i_cap)
    for key, want in sorted(entry.expects.items()):
        got = getattr(prof, key)
        res.checked.append(f"{key}={str(got).lower()} expected={str(want).lower()}")
        if got != want:
            res.failures.append(f"{key}: expected {want}, got {got}")
    for key in PropertyProfile.BOOL_KEYS:
        if key not in entry.expects:
            res.informative[key] = getattr(prof, key)
    if entry.basis_span is not None:
        err = _check_basis_span(R, entry.basis_span)
        if err:
            res.failures.append(err)
        else:
            res.checked.append("basis_span=true expected=true")
    res.seconds = time.time() - t0
    return res, (R, prof)


def _check_basis_span(R: RingTable, words: tuple) -> str:
    gens = R._cache.get("generator_elements")
    build = R._cache.get("presentation_build")
    if gens is None or build is None:
        return "basis_span: ring was not built from a presentation"
    if len(build.basis_words) != len(words):
        return (f"basis_span: build has {len(build.basis_words)} basis words, "
                f"expected {len(words)}")
    name_to_elt = dict(zip(build.presentation.gens, gens))
    elts = []
    for w in words:
        e = R.one
        for nm in w:
            e = int(R.mul[e, name_to_elt[nm]])
        elts.append(e)
    span = {R.zero}
    for e in elts:
        grow = set(span)
        x = e
        while x not in grow:
            grow |= {int(R.add[x, s]) for s in span}
            x = int(R.add[x, e])
        span = grow
    if len(span) != R.order:
        return f"basis_span: claimed words span {len(span)} of {R.order} elements"
    return ""


def _suite_radicals(built: list) -> SuiteResult:
    s = SuiteResult("radicals agree")
    for name, R, prof in built:
        j = jacobson_radical(R)
        up = upper_nilradical(R)
        lo = lower_nilradical(R)
        s.checked += 1
        if not (j == up and up == lo):
            s.violations.append(
                f"{name}: radical sizes jacobson={len(j)} upper={len(up)} lower={len(lo)}"
            )
    return s


_IMPLICATIONS = (
    ("reversible iff semicommutative and reflexive",
     lambda p: p.reversible == (p.semicommutative and p.reflexive)),
    ("semicommutative implies abelian", lambda p: (not p.semicommutative) or p.abelian),
    ("reduced implies commutative", lambda p: (not p.reduced) or p.commutative),
    ("right duo iff left duo", lambda p: p.right_duo == p.left_duo),
    ("ni iff two_primal", lambda p: p.ni == p.two_primal),
    ("duo implies semicommutative",
     lambda p: (not (p.right_duo and p.left_duo)) or p.semicommutative),
    ("symmetric implies reversible", lambda p: (not p.symmetric) or p.reversible),
    ("ps_i iff ni when evaluated",
     lambda p: p.ps_i is None or p.ps_i == p.ni),
)


def _suite_implications(built: list) -> SuiteResult:
    s = SuiteResult("implication lattice")
    for name, R, prof in built:
        for label, ok in _IMPLICATIONS:
            s.checked += 1
            if not ok(prof):
                s.violations.append(f"{name}: {label}")
    return s


def _suite_opposite(built: list) -> SuiteResult:
    s = SuiteResult("opposite symmetry")
    for name, R, prof in built:
        Rop = opposite(R)
        pairs = (
            ("right_duo vs left_duo of opposite", prof.right_duo, is_left_duo(Rop)),
            ("reflexive invariance", prof.reflexive, is_reflexive(Rop)),
            ("reversible invariance", prof.reversible, is_reversible(Rop)),
            ("semicommutative invariance", prof.semicommutative, is_semicommutative(Rop)),
        )
        for label, a, b in pairs:
            s.checked += 1
            if a != b:
                s.violations.append(f"{name}: {label} ({a} vs {b})")
    return s


def _suite_local_cube(built: list) -> SuiteResult:
    """Local ring with prime-field residue and J^3 = 0 must be semicommutative."""
    s = SuiteResult("local cube-zero semicommutative")
    for name, R, prof in built:
        if not prof.local:
            continue
        j = jacobson_radical(R)
        if R.order // len(j) not in (2, 3, 5, 7, 11, 13):
            continue
        sq = {int(R.mul[a, b]) for a in j.indices() for b in j.indices()}
        cube = {int(R.mul[a, b]) for a in sq for b in j.indices()}
        if cube != {R.zero}:
            continue
        s.checked += 1
        if not prof.semicommutative:
            s.violations.append(f"{name}: local, prime residue, cube-zero radical, "
                                f"but not semicommutative")
    return s


def _suite_split(built: list) -> SuiteResult:
    """Structure-split consistency on every decomposable profile."""
    s = SuiteResult("structure split")
    for name, R, prof in built:
        D = peirce(R)
        j = jacobson_radical(R)
        jset = set(int(x) for x in j.indices())
        mset = set(int(x) for x in D.m_elements.indices())
        checks = (
            ("abelian iff trivial glue and local components",
             prof.abelian == (len(D.m_elements) == 1 and D.all_components_local)),
            ("ni iff local components", prof.ni == D.all_components_local),
            ("square-zero glue forces nonreflexive",
             not (len(D.m_elements) > 1 and D.m_square_zero) or not prof.reflexive),
            ("glue inside radical", mset <= jset),
        )
        for label, ok in checks:
            s.checked += 1
            if not ok:
                s.violations.append(f"{name}: {label}")
    return s


def _suite_enumeration(deep: bool, seed=None, jobs: int = 1) -> SuiteResult:
    s = SuiteResult("enumeration counts", note="deep" if deep else "small orders")
    expected = {2: 1, 3: 1, 4: 4, 5: 1, 7: 1, 8: 11, 9: 4}
    for order, want in sorted(expected.items()):
        rings = enumerate_unital(order, seed=seed, jobs=jobs)
        s.checked += 1
        if len(rings) != want:
            s.violations.append(f"order {order}: {len(rings)} classes, expected {want}")
    rings8 = enumerate_unital(8)
    noncomm = [R for R in rings8 if profile(R, ps_i_cap=0).commutative is False]
    s.checked += 1
    if len(noncomm) != 1:
        s.violations.append(f"order 8: {len(noncomm)} noncommutative classes, expected 1")
    else:
        from .construct import upper_triangular

        u2 = upper_triangular(galois(2), 2)
        s.checked += 1
        if not is_isomorphic(noncomm[0], u2):
            s.violations.append("order 8: the noncommutative class is not the "
                                "triangular matrix ring")
    if deep:
        rings16 = enumerate_unital(16, deep=True, seed=seed, jobs=jobs)
        profs = [profile(R, ps_i_cap=0) for R in rings16]
        noncomm16 = sum(1 for p in profs if not p.commutative)
        nonni = [R for R, p in zip(rings16, profs) if not p.ni]
        for label, got, want in (
            ("order 16 classes", len(rings16), 50),
            ("order 16 noncommutative", noncomm16, 13),
            ("order 16 non-NI", len(nonni), 1),
        ):
            s.checked += 1
            if got != want:
                s.violations.append(f"{label}: {got}, expected {want}")
        if len(nonni) == 1:
            s.checked += 1
            if not is_isomorphic(nonni[0], matrix_ring(galois(2), 2)):
                s.violations.append("order 16: the non-NI class is not the full "
                                    "matrix ring")
    return s


def verify_corpus(deep: bool = False, ps_i_cap: int = 64, seed=None,
                  jobs: int = 1) -> VerificationReport:
    """Build and check every entry, then run the cross-cutting suites."""
    t0 = time.time()
    results = []
    built = []
    for entry in corpus():
        res, payload = _check_entry(entry, ps_i_cap)
        results.append(res)
        if payload is not None:
            built.append((entry.name, payload[0], payload[1]))
    suites = [
        _suite_radicals(built),
        _suite_implications(built),
        _suite_opposite(built),
        _suite_local_cube(built),
        _suite_split(built),
        _suite_enumeration(deep, seed=seed, jobs=jobs),
    ]
    return VerificationReport(results, suites, time.time() - t0)
