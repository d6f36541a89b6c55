"""Named ring-theoretic checks over a declared corpus.

Each check exercises one statement elementwise across the corpus and yields a
pass/fail verdict with a replayable counterexample on failure. Two checks
(Q_SYMMETRY, Q_CORNER) probe open questions: they report observed agreement
statistics and can never fail.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .core import FiniteRing, RingLabError, OrderCapError
from . import construct as ct
from . import structure as st
from . import deciders as dc

CHECK_IDS = (
    "P_OSNOVE",
    "P_PRVA",
    "P_NILIDEAL",
    "P_RADIKAL",
    "L_MOCNA",
    "P_PIREG",
    "P_ABEL",
    "P_BOUNDED",
    "C_PI",
    "P_KOTI",
    "P_CENTER",
    "P_UNQ1",
    "P_UNQ2",
    "Q_SYMMETRY",
    "Q_CORNER",
    "P_EXPIREG",
)

DEFAULT_CORPUS: Tuple[ct.RingSpec, ...] = (
    ct.Zn(2),
    ct.Zn(3),
    ct.Zn(4),
    ct.Zn(6),
    ct.Zn(8),
    ct.Zn(12),
    ct.product((ct.Zn(2), ct.Zn(2))),
    ct.product((ct.Zn(2), ct.Zn(4))),
    ct.TrivialExt(ct.Zn(2)),
    ct.PolyMod(ct.Zn(2), 2),
    ct.PolyMod(ct.Zn(4), 2),
    ct.Triangular(2, ct.Zn(2)),
    ct.Triangular(2, ct.Zn(4)),
    ct.Matrix(2, ct.Zn(2)),
    ct.Matrix(2, ct.Zn(3)),
    ct.Matrix(2, ct.Zn(4)),
    ct.IdealRing(ct.Zn(4), (2,)),
)

# checks that quantify over pairs of elements with nested searches stay on
# small members only
PAIR_SCAN_LIMIT = 64


@dataclass
class PropositionCheck:
    """Outcome of one named check over a corpus.

    status is "pass", "fail", or "experiment"; a fail carries
    (spec string, element indices) sufficient to replay the failure.
    """

    id: str
    corpus: List[str]
    status: str
    detail: str
    counterexample: Optional[Tuple[str, Tuple[int, ...]]] = None


def _build_corpus(specs: Sequence[ct.RingSpec]):
    built: List[Tuple[ct.RingSpec, FiniteRing]] = []
    failures: List[str] = []
    for spec in specs:
        try:
            built.append((spec, ct.build_cached(spec)))
        except RingLabError as exc:
            failures.append(f"{spec}: {exc}")
    return built, failures


def canonical_nil_ideal(spec: ct.RingSpec,
                        ring: FiniteRing) -> Optional[st.Ideal]:
    """The nil ideal a construction carries by design: the strictly upper
    triangular part, the extension part of a trivial extension, or the
    multiples of x in a truncated polynomial ring. None for other kinds."""
    rad = ring.meta.get("radices")
    if isinstance(spec, ct.Triangular):
        pos = ring.meta["positions"]
        members = [m for m in range(ring.order)
                   if all(d == 0
                          for d, (i, j) in zip(ct.unpack_digits(rad, m), pos)
                          if i == j)]
    elif isinstance(spec, (ct.TrivialExt, ct.PolyMod)):
        members = [m for m in range(ring.order)
                   if ct.unpack_digits(rad, m)[0] == 0]
    else:
        return None
    return st.make_ideal(ring, members)


# ---------------------------------------------------------------------------
# individual checks: each returns (status, detail, counterexample)


def _check_osnove(built):
    """Weakly nil clean elements admit exchange witnesses (unital members)."""
    elements = 0
    rings = 0
    for spec, ring in built:
        if not ring.unital:
            continue
        rings += 1
        for a in range(ring.order):
            if dc.wncl_witness(ring, a) is None:
                continue
            w = dc.exchange_witness(ring, a)
            if w is None or not dc.check_exchange(ring, a, w):
                return ("fail", f"no exchange witness for element {a} of {spec}",
                        (str(spec), (a,)))
            elements += 1
    return ("pass", f"{elements} elements across {rings} unital rings", None)


def _check_prva(built):
    """Primal and alternate witnesses exist for the same elements."""
    elements = 0
    rings = 0
    for spec, ring in built:
        if not ring.unital:
            continue
        rings += 1
        for a in range(ring.order):
            w = dc.wncl_witness(ring, a)
            alt = dc.wncl_witness_alt(ring, a)
            if (w is None) != (alt is None):
                return ("fail",
                        f"form mismatch at element {a} of {spec}: "
                        f"primal={'present' if w else 'absent'}, "
                        f"alternate={'present' if alt else 'absent'}",
                        (str(spec), (a,)))
            if w is not None and not (dc.check_wncl(ring, a, w)
                                      and dc.check_wncl(ring, a, alt)):
                return ("fail", f"witness failed re-validation at {a} of {spec}",
                        (str(spec), (a,)))
            elements += 1
    return ("pass", f"{elements} elements across {rings} unital rings", None)


def _check_nilideal(built):
    """With a nil ideal I: R weakly nil clean iff R/I is; quotient witnesses
    lift and re-validate, element witnesses project, and the two idempotent
    lifting paths agree on every liftable element."""
    lifted = 0
    members = []
    for spec, ring in built:
        ideal = canonical_nil_ideal(spec, ring)
        if ideal is None:
            continue
        members.append(str(spec))
        if not st.is_nil_ideal(ring, ideal):
            return ("fail", f"canonical ideal of {spec} is not nil",
                    (str(spec), ()))
        qring, proj = ct.quotient(ring, ideal)
        if dc.ring_weakly_nil_clean(ring) != dc.ring_weakly_nil_clean(qring):
            return ("fail", f"verdict differs between {spec} and its quotient",
                    (str(spec), ()))
        for a in range(ring.order):
            qw = dc.wncl_witness(qring, proj[a])
            if qw is None:
                return ("fail", f"coset of {a} has no witness in {spec}/I",
                        (str(spec), (a,)))
            lw = dc.lift_wncl_witness(ring, ideal, a, qw)
            if not dc.check_wncl(ring, a, lw):
                return ("fail", f"lifted witness invalid at {a} of {spec}",
                        (str(spec), (a,)))
            w = dc.wncl_witness(ring, a)
            pw = dc.WnclWitness(proj[w.e], proj[w.q], proj[w.x], "primal")
            if not dc.check_wncl(qring, proj[a], pw):
                return ("fail", f"projected witness invalid at {a} of {spec}",
                        (str(spec), (a,)))
            lifted += 1
        mem = set(ideal.members)
        for x in range(ring.order):
            if ring.sub(ring.mul(x, x), x) in mem:
                escan = dc.lift_idempotent(ring, ideal, x, "scan")
                enewt = dc.lift_idempotent(ring, ideal, x, "newton")
                if escan != enewt:
                    return ("fail",
                            f"lift paths disagree at {x} of {spec}: "
                            f"scan={escan}, newton={enewt}",
                            (str(spec), (x,)))
    return ("pass",
            f"{lifted} cosets lifted on {', '.join(members)}; "
            "lift paths agree on all liftable elements", None)


def _check_radikal(built):
    """J(R) is nil, R/J(R) is weakly nil clean, and J(R/J(R)) vanishes."""
    rings = 0
    for spec, ring in built:
        jac = st.jacobson_radical(ring)
        if not st.is_nil_ideal(ring, jac):
            return ("fail", f"radical of {spec} is not nil", (str(spec), ()))
        qring, _ = ct.quotient(ring, jac)
        if not dc.ring_weakly_nil_clean(qring):
            return ("fail", f"{spec} modulo its radical is not weakly nil clean",
                    (str(spec), ()))
        if st.jacobson_radical(qring).members != (qring.zero,):
            return ("fail", f"radical of {spec}/J is nonzero", (str(spec), ()))
        rings += 1
    return ("pass", f"radical verified on {rings} rings", None)


def _check_mocna(built):
    """Corner decompositions compose: for every a and idempotent e realized
    as e = c*a, a witness for faf in the corner fRf composes to a valid
    witness for a. Small members only (nested scans)."""
    triples = 0
    rings = 0
    for spec, ring in built:
        if not ring.unital or ring.order > PAIR_SCAN_LIMIT:
            continue
        rings += 1
        for a in range(ring.order):
            for e in st.idempotents(ring):
                c = next((c for c in range(ring.order)
                          if ring.mul(c, a) == e), None)
                if c is None:
                    continue
                f = ring.sub(ring.one, e)
                key = ("corner", f)
                if key not in ring.cache:
                    ring.cache[key] = ct.corner_ring(ring, f)
                corner = ring.cache[key]
                faf = ring.mul(ring.mul(f, a), f)
                if corner is ring:
                    cw = dc.wncl_witness(corner, faf)
                else:
                    index = {m: i for i, m in enumerate(corner.members)}
                    local = dc.wncl_witness(corner, index[faf])
                    cw = dc.corner_to_parent(corner, local) if local else None
                if cw is None:
                    return ("fail", f"no corner witness at a={a}, e={e} of {spec}",
                            (str(spec), (a, e)))
                try:
                    w = dc.wncl_from_corner(ring, a, e, c, cw)
                except RingLabError as exc:
                    return ("fail", f"composition failed at a={a}, e={e} of "
                            f"{spec}: {exc}", (str(spec), (a, e)))
                if not dc.check_wncl(ring, a, w):
                    return ("fail", f"composed witness invalid at a={a}, e={e} "
                            f"of {spec}", (str(spec), (a, e)))
                triples += 1
    return ("pass", f"{triples} (a, e) pairs across {rings} rings", None)


def _check_pireg(built):
    """The constructive route through pi-regularity reproduces the brute
    verdict on every element of every unital member."""
    elements = 0
    rings = 0
    for spec, ring in built:
        if not ring.unital:
            continue
        rings += 1
        for a in range(ring.order):
            pw = dc.pi_regular_witness(ring, a)
            if pw is None:
                return ("fail", f"no pi-regular witness at {a} of {spec}",
                        (str(spec), (a,)))
            try:
                w = dc.wncl_from_pi_regular(ring, a, pw)
            except RingLabError as exc:
                return ("fail", f"construction failed at {a} of {spec}: {exc}",
                        (str(spec), (a,)))
            if not dc.check_wncl(ring, a, w):
                return ("fail", f"constructed witness invalid at {a} of {spec}",
                        (str(spec), (a,)))
            elements += 1
    return ("pass", f"{elements} elements across {rings} unital rings", None)


def _check_abel(built):
    """On abelian members the weakly nil clean and strongly pi-regular
    verdicts coincide (computed independently, then compared)."""
    rings = 0
    for spec, ring in built:
        if not st.is_abelian(ring):
            continue
        rings += 1
        if dc.ring_weakly_nil_clean(ring) != dc.ring_strongly_pi_regular(ring):
            return ("fail", f"verdicts differ on abelian ring {spec}",
                    (str(spec), ()))
    return ("pass", f"{rings} abelian rings agree", None)


def _check_bounded(built):
    """Bounded nilpotency index plus weakly nil clean forces strong
    pi-regularity."""
    rings = 0
    for spec, ring in built:
        if st.bounded_index(ring) is None:
            return ("fail", f"unbounded nilpotency index on {spec}",
                    (str(spec), ()))
        if dc.ring_weakly_nil_clean(ring) and not dc.ring_strongly_pi_regular(ring):
            return ("fail", f"{spec} weakly nil clean but not strongly "
                    "pi-regular", (str(spec), ()))
        rings += 1
    return ("pass", f"index bounded on {rings} rings, implication holds", None)


def _check_cpi(built):
    """Six-way agreement: weakly nil clean / pi-regular / strongly
    pi-regular for R and for M_2(R). Members whose matrix ring exceeds the
    build cap are skipped and named."""
    agreed = 0
    skipped = []
    for spec, ring in built:
        try:
            mat = ct.build_cached(ct.Matrix(2, spec))
        except OrderCapError:
            skipped.append(str(spec))
            continue
        verdicts = (
            dc.ring_weakly_nil_clean(ring),
            dc.ring_pi_regular(ring),
            dc.ring_strongly_pi_regular(ring),
            dc.ring_weakly_nil_clean(mat),
            dc.ring_pi_regular(mat),
            dc.ring_strongly_pi_regular(mat),
        )
        if len(set(verdicts)) != 1:
            return ("fail", f"verdicts disagree on {spec}: {verdicts}",
                    (str(spec), ()))
        agreed += 1
    detail = f"six verdicts agree on {agreed} rings"
    if skipped:
        detail += f"; matrix ring over cap for: {', '.join(skipped)}"
    return ("pass", detail, None)


def _check_koti(built):
    """Alternate witnesses for diag(a, 0) in M_2 extract to valid base-ring
    witnesses over small abelian unital members."""
    elements = 0
    members = []
    for spec, ring in built:
        if not ring.unital or ring.order > 6 or not st.is_abelian(ring):
            continue
        members.append(str(spec))
        mat = ct.build_cached(ct.Matrix(2, spec))
        radices = mat.meta["radices"]
        for a in range(ring.order):
            digits = [ring.zero] * 4
            digits[0] = a
            amat = ct.pack_digits(radices, digits)
            mw = dc.wncl_witness_alt(mat, amat)
            if mw is None:
                return ("fail", f"no matrix witness for diag({a},0) over {spec}",
                        (str(spec), (a,)))
            try:
                bw = dc.extract_from_matrix(ring, 2, a, mw)
            except RingLabError as exc:
                return ("fail", f"extraction failed at {a} of {spec}: {exc}",
                        (str(spec), (a,)))
            if not dc.check_wncl(ring, a, bw):
                return ("fail", f"extracted witness invalid at {a} of {spec}",
                        (str(spec), (a,)))
            elements += 1
    return ("pass", f"{elements} elements on {', '.join(members)}", None)


def _check_center(built):
    """Central elements restrict to valid witnesses in the center ring, with
    a central idempotent."""
    elements = 0
    rings = 0
    for spec, ring in built:
        if not ring.unital:
            continue
        rings += 1
        cring = dc.center_ring(ring)
        index_of = cring.cache["parent_index"]
        for a in st.center(ring):
            w = dc.wncl_witness(ring, a)
            if w is None:
                return ("fail", f"no witness for central element {a} of {spec}",
                        (str(spec), (a,)))
            try:
                cw = dc.center_witness(ring, a, w)
            except RingLabError as exc:
                return ("fail", f"center extraction failed at {a} of {spec}: "
                        f"{exc}", (str(spec), (a,)))
            if not dc.check_wncl(cring, index_of[a], cw):
                return ("fail", f"center witness invalid at {a} of {spec}",
                        (str(spec), (a,)))
            e_parent = cring.members[cw.e]
            if any(ring.mul(e_parent, r) != ring.mul(r, e_parent)
                   for r in range(ring.order)):
                return ("fail", f"extracted idempotent not central at {a} of "
                        f"{spec}", (str(spec), (a,)))
            elements += 1
    return ("pass", f"{elements} central elements across {rings} rings", None)


def _check_unq1(built):
    """Unique witness idempotents exactly on abelian members (unital)."""
    rings = 0
    for spec, ring in built:
        if not ring.unital:
            continue
        rings += 1
        if dc.ring_unique_idempotent(ring) != st.is_abelian(ring):
            return ("fail", f"uniqueness/abelian mismatch on {spec}",
                    (str(spec), ()))
    return ("pass", f"verdicts equal on {rings} unital rings", None)


def _check_unq2(built):
    """Unique witness nilpotents exactly on strongly regular members
    (unital)."""
    rings = 0
    for spec, ring in built:
        if not ring.unital:
            continue
        rings += 1
        if dc.ring_unique_nilpotent(ring) != dc.ring_strongly_regular(ring):
            return ("fail", f"uniqueness/strong-regularity mismatch on {spec}",
                    (str(spec), ()))
    return ("pass", f"verdicts equal on {rings} unital rings", None)


def _check_symmetry(built):
    """Experiment: elementwise witness presence in R versus opposite(R)."""
    total = 0
    agree = 0
    for spec, ring in built:
        opp = ring.cache.setdefault("opposite", ct.opposite(ring))
        for a in range(ring.order):
            total += 1
            if (dc.wncl_witness(ring, a) is None) == (dc.wncl_witness(opp, a) is None):
                agree += 1
    pct = 100.0 * agree / total if total else 100.0
    return ("experiment",
            f"opposite-ring agreement {agree}/{total} elements ({pct:.1f}%)",
            None)


def _check_qcorner(built):
    """Experiment: are corners eRe of weakly nil clean rings weakly nil
    clean? Observed per idempotent across unital members."""
    corners = 0
    wncl = 0
    for spec, ring in built:
        if not ring.unital:
            continue
        for e in st.idempotents(ring):
            key = ("corner", e)
            if key not in ring.cache:
                ring.cache[key] = ct.corner_ring(ring, e)
            corner = ring.cache[key]
            corners += 1
            if dc.ring_weakly_nil_clean(corner):
                wncl += 1
    pct = 100.0 * wncl / corners if corners else 100.0
    return ("experiment",
            f"corner rings weakly nil clean {wncl}/{corners} ({pct:.1f}%)",
            None)


def _check_expireg(built):
    """A pi-regular ideal with pi-regular quotient forces weakly nil clean;
    verified over all distinct principal ideals of small members."""
    ideals = 0
    rings = 0
    for spec, ring in built:
        if ring.order > PAIR_SCAN_LIMIT:
            continue
        rings += 1
        seen = set()
        for x in range(ring.order):
            ideal = st.ideal_generated(ring, (x,))
            if ideal.members in seen:
                continue
            seen.add(ideal.members)
            sub = ct.ideal_subring(ring, ideal.members)
            ideal_pireg = all(dc.pi_regular_witness(sub, b) is not None
                              for b in range(sub.order))
            qring, _ = ct.quotient(ring, ideal)
            quot_pireg = all(dc.pi_regular_witness(qring, b) is not None
                             for b in range(qring.order))
            if ideal_pireg and quot_pireg:
                if not dc.ring_weakly_nil_clean(ring):
                    return ("fail", f"hypotheses hold for ideal of {x} in "
                            f"{spec} but ring is not weakly nil clean",
                            (str(spec), (x,)))
                ideals += 1
    return ("pass", f"{ideals} principal ideals across {rings} rings", None)


_CHECKS: Dict[str, Callable] = {
    "P_OSNOVE": _check_osnove,
    "P_PRVA": _check_prva,
    "P_NILIDEAL": _check_nilideal,
    "P_RADIKAL": _check_radikal,
    "L_MOCNA": _check_mocna,
    "P_PIREG": _check_pireg,
    "P_ABEL": _check_abel,
    "P_BOUNDED": _check_bounded,
    "C_PI": _check_cpi,
    "P_KOTI": _check_koti,
    "P_CENTER": _check_center,
    "P_UNQ1": _check_unq1,
    "P_UNQ2": _check_unq2,
    "Q_SYMMETRY": _check_symmetry,
    "Q_CORNER": _check_qcorner,
    "P_EXPIREG": _check_expireg,
}


def run_check(check_id: str,
              corpus: Optional[Sequence[ct.RingSpec]] = None) -> PropositionCheck:
    """Execute one named check; unknown ids raise ValueError. Corpus members
    that fail to build are reported in the detail line and skipped."""
    if check_id not in _CHECKS:
        raise ValueError(f"unknown check id {check_id!r}")
    specs = tuple(DEFAULT_CORPUS if corpus is None else corpus)
    built, failures = _build_corpus(specs)
    status, detail, cx = _CHECKS[check_id](built)
    if failures:
        detail += "; build failures: " + "; ".join(failures)
    return PropositionCheck(
        id=check_id,
        corpus=[str(s) for s in specs],
        status=status,
        detail=detail,
        counterexample=cx,
    )


def run_all(corpus: Optional[Sequence[ct.RingSpec]] = None,
            ids: Optional[Sequence[str]] = None) -> List[PropositionCheck]:
    """Run the named checks (all by default) in declared order."""
    chosen = CHECK_IDS if ids is None else tuple(ids)
    return [run_check(cid, corpus) for cid in chosen]


# ---------------------------------------------------------------------------
# census


@dataclass
class CensusRow:
    spec: str
    report: Optional[dc.ClassificationReport]
    error: Optional[str] = None


def census(specs: Sequence[ct.RingSpec],
           with_timings: bool = False) -> List[CensusRow]:
    """One classification per spec, in input order; build errors become
    error rows instead of aborting the run."""
    rows: List[CensusRow] = []
    for spec in specs:
        try:
            ring = ct.build_cached(spec)
            rows.append(CensusRow(str(spec), dc.classify(ring, with_timings)))
        except RingLabError as exc:
            rows.append(CensusRow(str(spec), None, str(exc)))
    return rows
