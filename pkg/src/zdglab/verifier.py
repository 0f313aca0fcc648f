"""Catalogue-wide verification of the complementation classification for
ideal-based zero-divisor graphs.

Each check encodes one universally quantified statement about a pair
(ring R, proper ideal I): the cardinality identity |V(Gamma_I(R))| =
|I| * |V(Gamma(R/I))|, the behaviour of complementation under the
quotient map, the K^2 classification for nonzero non-radical ideals, the
orthogonality and annihilator lifting facts for radical ideals, and the
five-way equivalence with von Neumann regularity of R/I. A check's
applicability mirrors the statement's hypotheses; pairs where the
hypotheses fail are counted as tested but not applicable, never as passes.

Failures carry full witnesses (vertex indices, the separating alpha) so a
counterexample can be replayed in isolation.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
import json

import numpy as np

from .errors import (
    CapExceededError,
    CatalogueError,
    ImproperIdealError,
    InvalidElementError,
    SpecParseError,
    ZdglabError,
)
from .graphs import SimpleGraph, gamma, gamma_ideal
from .ideals import (
    DEFAULT_IDEAL_ENUMERATION_CAP,
    Ideal,
    all_ideals,
    generate_ideal,
    is_prime,
    quotient_ring,
    radical,
)
from .rings import (
    DEFAULT_MAX_ORDER,
    FiniteRing,
    is_von_neumann_regular,
    total_quotient_ring,
    zero_divisors,
)
from .specs import build_ring, parse_ring_spec

TOOL_VERSION = "0.1.0"
ORDERING_KEY = "(ring_spec, ideal_members)"

QUOTIENT_VNR_NOTE = (
    "Total quotient rings are realized as the quotient itself: in a finite "
    "commutative ring every non-zero-divisor is a unit, so the localization "
    "at the regular elements changes nothing. The quotient_vnr flag is von "
    "Neumann regularity computed directly on R/I."
)


@dataclass(frozen=True)
class CatalogueEntry:
    """One catalogue row: a ring spec plus an optional tuple of generator
    tuples restricting which ideals are analyzed (None = every proper ideal)."""

    spec: str
    ideal_filters: tuple[tuple[int, ...], ...] | None = None


@dataclass(frozen=True)
class PropertyVerdict:
    """Per-(ring, ideal) record of the graph-side and ring-side predicates."""

    ring_spec: str
    ideal_members: tuple[int, ...]
    ideal_is_radical: bool
    ideal_is_prime: bool
    quotient_vertex_count: int
    gi_vertex_count: int
    gi_complemented: bool
    gi_uniquely_complemented: bool
    quotient_graph_complemented: bool
    quotient_graph_uniquely_complemented: bool
    quotient_vnr: bool
    quotient_z_count: int

    def to_dict(self) -> dict:
        d = {
            "ring_spec": self.ring_spec,
            "ideal_members": list(self.ideal_members),
            "ideal_is_radical": self.ideal_is_radical,
            "ideal_is_prime": self.ideal_is_prime,
            "quotient_vertex_count": self.quotient_vertex_count,
            "gi_vertex_count": self.gi_vertex_count,
            "gi_complemented": self.gi_complemented,
            "gi_uniquely_complemented": self.gi_uniquely_complemented,
            "quotient_graph_complemented": self.quotient_graph_complemented,
            "quotient_graph_uniquely_complemented": self.quotient_graph_uniquely_complemented,
            "quotient_vnr": self.quotient_vnr,
            "quotient_z_count": self.quotient_z_count,
        }
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "PropertyVerdict":
        kwargs = dict(d)
        kwargs["ideal_members"] = tuple(kwargs["ideal_members"])
        return cls(**kwargs)


class PairAnalysis:
    """Everything the checks need about one (ring, proper ideal) pair."""

    __slots__ = ("ring", "ideal", "quotient", "coset_map", "gi", "gq", "radical_members", "verdict")

    def __init__(self, ring: FiniteRing, ideal: Ideal, *, _corrupt_graph: bool = False):
        self.ring = ring
        self.ideal = ideal
        self.quotient, self.coset_map = quotient_ring(ring, ideal)
        total_quotient_ring(self.quotient)  # guard: regular elements are units
        gi = gamma_ideal(ring, ideal)
        if _corrupt_graph and gi.vertex_count:
            gi = _drop_top_vertex(gi)
        self.gi = gi
        self.gq = gamma(self.quotient)
        self.radical_members = radical(ideal).members
        self.verdict = PropertyVerdict(
            ring_spec=ring.spec,
            ideal_members=ideal.sorted_members(),
            ideal_is_radical=self.radical_members == ideal.members,
            ideal_is_prime=is_prime(ideal),
            quotient_vertex_count=self.gq.vertex_count,
            gi_vertex_count=self.gi.vertex_count,
            gi_complemented=self.gi.is_complemented(),
            gi_uniquely_complemented=self.gi.is_uniquely_complemented(),
            quotient_graph_complemented=self.gq.is_complemented(),
            quotient_graph_uniquely_complemented=self.gq.is_uniquely_complemented(),
            quotient_vnr=is_von_neumann_regular(self.quotient),
            quotient_z_count=len(zero_divisors(self.quotient)),
        )


def analyze_pair(ring: FiniteRing, ideal: Ideal, *, _corrupt_graph: bool = False) -> PairAnalysis:
    """Build the quotient, both graphs, and the full PropertyVerdict."""
    return PairAnalysis(ring, ideal, _corrupt_graph=_corrupt_graph)


def _drop_top_vertex(graph: SimpleGraph) -> SimpleGraph:
    # fault-injection hook: deterministically corrupt adjacency data
    keep = graph.vertices[:-1]
    kept = set(keep)
    edges = [(a, b) for a, b in graph.edge_list() if a in kept and b in kept]
    return SimpleGraph(keep, {v: graph.labels[v] for v in keep}, edges, name=graph.name)


# --- checks -----------------------------------------------------------------
# Each check maps a PairAnalysis to (applicable, failure-payload-or-None).


def check_cardinality(a: PairAnalysis):
    """|V(Gamma_I(R))| = |I| * |V(Gamma(R/I))| for every proper ideal."""
    expected = len(a.ideal.members) * a.verdict.quotient_vertex_count
    if a.verdict.gi_vertex_count != expected:
        return True, {
            "gi_vertex_count": a.verdict.gi_vertex_count,
            "ideal_size": len(a.ideal.members),
            "quotient_vertex_count": a.verdict.quotient_vertex_count,
        }
    return True, None


def check_nonradical_not_complemented(a: PairAnalysis):
    """Nonzero non-radical I with at least two quotient vertices forces
    Gamma_I(R) non-complemented."""
    applicable = (
        not a.verdict.ideal_is_radical
        and not a.ideal.is_zero
        and a.verdict.quotient_vertex_count >= 2
    )
    if not applicable:
        return False, None
    if a.verdict.gi_complemented:
        witness = min(a.radical_members - a.ideal.members)
        return True, {"gi_complemented": True, "radical_excess_element": int(witness)}
    return True, None


def check_k1_inflation(a: PairAnalysis):
    """A one-vertex quotient graph inflates to the complete graph on |I| vertices."""
    if a.verdict.quotient_vertex_count != 1:
        return False, None
    complete, nverts = a.gi.is_complete()
    if not (complete and nverts == len(a.ideal.members)):
        return True, {"complete": complete, "gi_vertex_count": nverts, "ideal_size": len(a.ideal.members)}
    return True, None


def check_nonradical_k2(a: PairAnalysis):
    """For nonzero non-radical I, Gamma_I(R) is complemented exactly when it
    is K^2. Zero ideals sit outside the statement: the plain zero-divisor
    graph of a non-reduced ring can be complemented without being K^2."""
    applicable = not a.verdict.ideal_is_radical and not a.ideal.is_zero
    if not applicable:
        return False, None
    complete, nverts = a.gi.is_complete()
    is_k2 = complete and nverts == 2
    if a.verdict.gi_complemented != is_k2:
        return True, {"gi_complemented": a.verdict.gi_complemented, "complete": complete, "gi_vertex_count": nverts}
    return True, None


def check_complemented_transfer(a: PairAnalysis):
    """For nonzero non-prime I: Gamma_I(R) complemented with >= 2 quotient
    vertices holds exactly when Gamma(R/I) is complemented and I is radical."""
    applicable = not a.ideal.is_zero and not a.verdict.ideal_is_prime
    if not applicable:
        return False, None
    left = a.verdict.gi_complemented and a.verdict.quotient_vertex_count >= 2
    right = a.verdict.quotient_graph_complemented and a.verdict.ideal_is_radical
    if left != right:
        return True, {
            "gi_complemented": a.verdict.gi_complemented,
            "quotient_vertex_count": a.verdict.quotient_vertex_count,
            "quotient_graph_complemented": a.verdict.quotient_graph_complemented,
            "ideal_is_radical": a.verdict.ideal_is_radical,
        }
    return True, None


def check_classification_cases(a: PairAnalysis):
    """For nonzero non-prime I, Gamma_I(R) is complemented exactly when one
    of two mutually exclusive cases holds: (1) |Z(R/I)| = 2 and |I| = 2;
    (2) Gamma(R/I) complemented and I radical."""
    applicable = not a.ideal.is_zero and not a.verdict.ideal_is_prime
    if not applicable:
        return False, None
    case1 = a.verdict.quotient_z_count == 2 and len(a.ideal.members) == 2
    case2 = a.verdict.quotient_graph_complemented and a.verdict.ideal_is_radical
    if case1 and case2:
        return True, {"case1": True, "case2": True, "reason": "cases not mutually exclusive"}
    if a.verdict.gi_complemented != (case1 or case2):
        return True, {"gi_complemented": a.verdict.gi_complemented, "case1": case1, "case2": case2}
    return True, None


def check_orthogonality_lifting(a: PairAnalysis):
    """For radical non-prime I: x and y are orthogonal in Gamma_I(R) exactly
    when their cosets are orthogonal in Gamma(R/I); orthogonal vertices
    never share a coset."""
    applicable = a.verdict.ideal_is_radical and not a.verdict.ideal_is_prime
    if not applicable:
        return False, None
    cmap = a.coset_map
    orth_gi = {v: frozenset(a.gi.complements(v)) for v in a.gi.vertices}
    orth_gq = {v: frozenset(a.gq.complements(v)) for v in a.gq.vertices}
    for x, y in itertools.combinations(a.gi.vertices, 2):
        lhs = y in orth_gi[x]
        cx, cy = int(cmap[x]), int(cmap[y])
        if cx == cy:
            if lhs:
                return True, {"x": x, "y": y, "reason": "orthogonal pair inside one coset"}
            continue
        rhs = cy in orth_gq[cx]
        if lhs != rhs:
            return True, {"x": x, "y": y, "gi_orthogonal": lhs, "quotient_orthogonal": rhs}
    return True, None


def check_annihilator_agreement(a: PairAnalysis):
    """For radical I with Gamma(R/I) uniquely complemented: two complements
    y, z of the same vertex satisfy alpha*y in I iff alpha*z in I for every
    alpha outside I."""
    applicable = a.verdict.ideal_is_radical and a.verdict.quotient_graph_uniquely_complemented
    if not applicable:
        return False, None
    ring = a.ring
    in_i = np.zeros(ring.order, dtype=bool)
    in_i[list(a.ideal.members)] = True
    outside = ~in_i
    ann_cache: dict[int, frozenset[int]] = {}

    def ann_mod_ideal(v: int) -> frozenset[int]:
        if v not in ann_cache:
            mask = in_i[ring.mul_table[v]] & outside
            ann_cache[v] = frozenset(np.flatnonzero(mask).tolist())
        return ann_cache[v]

    for x in a.gi.vertices:
        comp = a.gi.complements(x)
        if len(comp) < 2:
            continue
        base = ann_mod_ideal(comp[0])
        for z in comp[1:]:
            other = ann_mod_ideal(z)
            if other != base:
                alpha = min(base ^ other)
                return True, {"x": x, "y": comp[0], "z": z, "alpha": int(alpha)}
    return True, None


def check_complemented_iff_uc(a: PairAnalysis):
    """Gamma_I(R) is complemented exactly when it is uniquely complemented,
    for every radical or nonzero ideal. Zero non-radical ideals sit outside
    the statement: the plain zero-divisor graph of a non-reduced ring can be
    complemented without being uniquely complemented."""
    applicable = a.verdict.ideal_is_radical or not a.ideal.is_zero
    if not applicable:
        return False, None
    if a.verdict.gi_complemented != a.verdict.gi_uniquely_complemented:
        return True, {
            "gi_complemented": a.verdict.gi_complemented,
            "gi_uniquely_complemented": a.verdict.gi_uniquely_complemented,
        }
    return True, None


def check_radical_equivalences(a: PairAnalysis):
    """For radical I the five flags agree: Gamma_I(R) complemented / uniquely
    complemented, Gamma(R/I) complemented / uniquely complemented, and R/I
    von Neumann regular."""
    if not a.verdict.ideal_is_radical:
        return False, None
    flags = {
        "gi_complemented": a.verdict.gi_complemented,
        "gi_uniquely_complemented": a.verdict.gi_uniquely_complemented,
        "quotient_graph_complemented": a.verdict.quotient_graph_complemented,
        "quotient_graph_uniquely_complemented": a.verdict.quotient_graph_uniquely_complemented,
        "quotient_vnr": a.verdict.quotient_vnr,
    }
    if len(set(flags.values())) != 1:
        return True, dict(flags)
    return True, None


CHECKS: tuple[tuple[str, object], ...] = (
    ("cardinality_identity", check_cardinality),
    ("nonradical_not_complemented", check_nonradical_not_complemented),
    ("k1_quotient_inflation", check_k1_inflation),
    ("nonradical_complemented_iff_k2", check_nonradical_k2),
    ("complemented_transfer", check_complemented_transfer),
    ("classification_cases", check_classification_cases),
    ("orthogonality_lifting", check_orthogonality_lifting),
    ("annihilator_agreement", check_annihilator_agreement),
    ("complemented_iff_uniquely_complemented", check_complemented_iff_uc),
    ("radical_equivalence_chain", check_radical_equivalences),
)

CHECK_NAMES: tuple[str, ...] = tuple(name for name, _ in CHECKS)


@dataclass
class CheckResult:
    """Aggregated outcome of one check over a catalogue."""

    check_name: str
    pairs_tested: int
    pairs_applicable: int
    failures: list[dict]

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "pairs_tested": self.pairs_tested,
            "pairs_applicable": self.pairs_applicable,
            "failures": self.failures,
        }


@dataclass
class VerificationReport:
    """Catalogue-wide results, deterministically ordered."""

    catalogue: dict
    checks: list[CheckResult]
    verdicts: list[PropertyVerdict]
    failures_total: int
    tool_version: str = TOOL_VERSION
    ordering_key: str = ORDERING_KEY

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.check_name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> str:
        obj = {
            "catalogue": self.catalogue,
            "checks": [c.to_dict() for c in self.checks],
            "verdicts": [v.to_dict() for v in self.verdicts],
            "failures_total": self.failures_total,
            "tool_version": self.tool_version,
            "ordering_key": self.ordering_key,
        }
        return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def default_catalogue() -> list[CatalogueEntry]:
    """The stock catalogue: Z_n for 2 <= n <= 100, Z_m x Z_n for
    2 <= m, n <= 8, and every monic polynomial quotient over p in {2, 3, 5}
    of degree <= 3 with at most 128 elements -- each with all proper ideals."""
    entries = [CatalogueEntry(f"Zn:{n}") for n in range(2, 101)]
    entries += [CatalogueEntry(f"prod(Zn:{m},Zn:{n})") for m in range(2, 9) for n in range(2, 9)]
    for p in (2, 3, 5):
        for degree in (1, 2, 3):
            if p**degree > 128:
                continue
            for low in itertools.product(range(p), repeat=degree):
                coeffs = ",".join(str(c) for c in (*low, 1))
                entries.append(CatalogueEntry(f"polyq:{p}:{coeffs}"))
    return entries


def parse_catalogue_text(text: str) -> list[CatalogueEntry]:
    """Parse a catalogue file: one ring spec per line, optionally followed
    by bracketed generator lists restricting the ideals, e.g.::

        # comment
        Zn:8 [4] [2,4]
        prod(Zn:2,Zn:3)

    Without brackets every proper ideal of the ring is analyzed; ``[]``
    denotes the zero ideal.
    """
    entries: list[CatalogueEntry] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        bracket = line.find("[")
        spec_text = line if bracket < 0 else line[:bracket]
        try:
            spec = parse_ring_spec(spec_text.strip())
        except SpecParseError as e:
            raise CatalogueError(f"line {lineno}: {e}") from e
        filters: list[tuple[int, ...]] | None = None
        if bracket >= 0:
            filters = []
            rest = line[bracket:]
            while rest:
                rest = rest.lstrip()
                if not rest:
                    break
                if not rest.startswith("["):
                    raise CatalogueError(f"line {lineno}: expected '[' in ideal filter list")
                end = rest.find("]")
                if end < 0:
                    raise CatalogueError(f"line {lineno}: unterminated ideal filter")
                inner = rest[1:end].strip()
                if inner:
                    try:
                        gens = tuple(int(tok.strip()) for tok in inner.split(","))
                    except ValueError as e:
                        raise CatalogueError(f"line {lineno}: bad generator list {inner!r}") from e
                else:
                    gens = ()
                filters.append(gens)
                rest = rest[end + 1 :]
            filters = list(dict.fromkeys(filters))
        entries.append(
            CatalogueEntry(spec.canonical, tuple(filters) if filters is not None else None)
        )
    return entries


def evaluate_entry(
    entry: CatalogueEntry,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    ideal_cap: int = DEFAULT_IDEAL_ENUMERATION_CAP,
    inject_fault: bool = False,
) -> dict:
    """Analyze every requested proper ideal of one catalogue ring.

    Cap overruns and bad filters skip the entry (recorded, not fatal).
    """
    try:
        ring = build_ring(entry.spec, max_order=max_order)
        if entry.ideal_filters is None:
            ideals = [i for i in all_ideals(ring, max_order=ideal_cap) if i.is_proper]
        else:
            ideals = []
            for gens in entry.ideal_filters:
                ideal = generate_ideal(ring, gens)
                if not ideal.is_proper:
                    raise ImproperIdealError(f"filter {list(gens)} generates the whole ring")
                ideals.append(ideal)
            ideals.sort(key=lambda i: i.sorted_members())
    except (CapExceededError, SpecParseError, InvalidElementError, ImproperIdealError) as e:
        return {"spec": entry.spec, "skipped": str(e), "pairs": []}
    pairs = []
    for ideal in ideals:
        analysis = analyze_pair(ring, ideal, _corrupt_graph=inject_fault)
        outcome = {}
        for name, fn in CHECKS:
            applicable, failure = fn(analysis)
            outcome[name] = {"applicable": bool(applicable), "failure": failure}
        pairs.append({"verdict": analysis.verdict.to_dict(), "checks": outcome})
    return {"spec": ring.spec, "skipped": None, "pairs": pairs}


def _evaluate_star(args) -> dict:
    entry, max_order, ideal_cap, inject_fault = args
    return evaluate_entry(entry, max_order=max_order, ideal_cap=ideal_cap, inject_fault=inject_fault)


def run_catalogue(
    entries,
    *,
    description: str = "default",
    max_order: int = DEFAULT_MAX_ORDER,
    ideal_cap: int = DEFAULT_IDEAL_ENUMERATION_CAP,
    jobs: int = 1,
    inject_fault: bool = False,
    progress=None,
) -> VerificationReport:
    """Evaluate every check on every (ring, proper ideal) pair of a catalogue.

    Entries may be CatalogueEntry objects or plain spec strings. Results are
    merged in (ring_spec, ideal_members) order, so the report is byte-stable
    for any parallelism degree.
    """
    entries = [e if isinstance(e, CatalogueEntry) else CatalogueEntry(str(e)) for e in entries]
    if jobs is None or jobs < 1:
        jobs = os.cpu_count() or 1
    results: list[dict] = []
    if jobs > 1 and len(entries) > 1:
        args = [(e, max_order, ideal_cap, inject_fault) for e in entries]
        with ProcessPoolExecutor(max_workers=min(jobs, len(entries))) as pool:
            for i, res in enumerate(pool.map(_evaluate_star, args)):
                results.append(res)
                if progress is not None:
                    progress(f"[{i + 1}/{len(entries)}] {res['spec']}: {len(res['pairs'])} pairs")
    else:
        for i, entry in enumerate(entries):
            res = evaluate_entry(entry, max_order=max_order, ideal_cap=ideal_cap, inject_fault=inject_fault)
            results.append(res)
            if progress is not None:
                progress(f"[{i + 1}/{len(entries)}] {res['spec']}: {len(res['pairs'])} pairs")

    skipped = sorted(
        ({"spec": r["spec"], "reason": r["skipped"]} for r in results if r["skipped"]),
        key=lambda s: (s["spec"], s["reason"]),
    )
    pair_records = [p for r in results for p in r["pairs"]]
    pair_records.sort(key=lambda p: (p["verdict"]["ring_spec"], tuple(p["verdict"]["ideal_members"])))

    verdicts = [PropertyVerdict.from_dict(p["verdict"]) for p in pair_records]
    checks: list[CheckResult] = []
    for name in CHECK_NAMES:
        applicable = 0
        failures: list[dict] = []
        for p in pair_records:
            outcome = p["checks"][name]
            if outcome["applicable"]:
                applicable += 1
            if outcome["failure"] is not None:
                failures.append(
                    {
                        "ring_spec": p["verdict"]["ring_spec"],
                        "ideal_members": list(p["verdict"]["ideal_members"]),
                        "witness": outcome["failure"],
                    }
                )
        checks.append(CheckResult(name, len(pair_records), applicable, failures))

    failures_total = sum(len(c.failures) for c in checks)
    catalogue = {
        "description": description,
        "entries": len(entries),
        "pairs": len(pair_records),
        "skipped": skipped,
        "quotient_vnr_note": QUOTIENT_VNR_NOTE,
    }
    return VerificationReport(
        catalogue=catalogue,
        checks=checks,
        verdicts=verdicts,
        failures_total=failures_total,
    )
