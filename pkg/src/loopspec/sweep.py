"""Exhaustive and randomized theorem fuzzing over small loop-digraphs.

Enumeration walks every adjacency bit pattern (diagonal bits are loops),
so each labeled graph is visited exactly once in a deterministic order.
No isomorphism reduction is attempted: the properties under test are
isomorphism-invariant, so duplicates cost time, not correctness.  The
equality census deduplicates after the fact by a sorted-degree plus
characteristic-polynomial signature.

A failed check is a counterexample to a published statement; the sweep
stops, serializes the witness graph, and the report carries it.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence

from . import bounds, decomposition, spectral
from .decomposition import ImplicationStatus
from .errors import CounterexampleError, SizeLimit
from .formats import from_json_dict, to_json_dict
from .graphs import Digraph, complement, degrees
from .linalg import (adjacency, char_poly_exact, charpoly_product,
                     linear_subdigraph_charpoly, matching_distance)
from .spectral import GraphFacts
from .tolerances import SPECTRUM_MATCH_TOL, TRACE_TOL

MAX_EXHAUSTIVE_ORDER = 5


@dataclass(frozen=True)
class CheckOutcome:
    status: str                      # "pass" | "fail" | "na"
    detail: Optional[str] = None
    certificates: tuple[bounds.BoundCertificate, ...] = ()


def digraph_from_bits(n: int, mask: int) -> Digraph:
    """Bit k of ``mask`` is entry (k // n, k % n); diagonal bits are loops."""
    arcs = []
    loops = []
    for k in range(n * n):
        if mask >> k & 1:
            i, j = divmod(k, n)
            if i == j:
                loops.append(i)
            else:
                arcs.append((i, j))
    return Digraph(n, frozenset(arcs), frozenset(loops))


def iterate_all(n: int) -> Iterator[Digraph]:
    """Every loop-digraph on n labeled vertices, in bit-pattern order."""
    if n > MAX_EXHAUSTIVE_ORDER:
        raise SizeLimit(f"exhaustive enumeration capped at n = {MAX_EXHAUSTIVE_ORDER}")
    for mask in range(1 << (n * n)):
        yield digraph_from_bits(n, mask)


def random_digraph(n: int, arc_prob: float, loop_prob: float, seed: int) -> Digraph:
    """Independent Bernoulli arcs and loops; reproducible from the seed."""
    if not (0.0 <= arc_prob <= 1.0 and 0.0 <= loop_prob <= 1.0):
        raise ValueError("probabilities must lie in [0, 1]")
    rng = random.Random(seed)
    arcs = []
    loops = []
    for u in range(n):
        for v in range(n):
            if u == v:
                if rng.random() < loop_prob:
                    loops.append(u)
            elif rng.random() < arc_prob:
                arcs.append((u, v))
    return Digraph(n, frozenset(arcs), frozenset(loops))


# ---------------------------------------------------------------------------
# Individual theorem checks

def _cert_outcome(*certs: bounds.BoundCertificate, extra_fail: str | None = None) -> CheckOutcome:
    bad = [c for c in certs if not c.holds]
    if bad or extra_fail:
        detail = extra_fail or "; ".join(
            f"{c.bound_id}: lhs={c.lhs!r} rhs={c.rhs!r}" for c in bad)
        return CheckOutcome("fail", detail, tuple(certs))
    return CheckOutcome("pass", None, tuple(certs))


def check_mcclelland(facts: GraphFacts) -> CheckOutcome:
    return _cert_outcome(bounds.mcclelland(facts))


def check_rho_lower(facts: GraphFacts) -> CheckOutcome:
    return _cert_outcome(bounds.rho_lower(facts))


def check_energy_lower_c2(facts: GraphFacts) -> CheckOutcome:
    return _cert_outcome(bounds.energy_lower_c2(facts))


def check_rho_upper(facts: GraphFacts) -> CheckOutcome:
    if facts.n < 2:
        return CheckOutcome("na", "needs n >= 2")
    return _cert_outcome(bounds.rho_upper(facts))


def check_component_gap(facts: GraphFacts) -> CheckOutcome:
    return _cert_outcome(bounds.component_gap(facts))


def check_complement_rho_sum(facts: GraphFacts) -> CheckOutcome:
    return _cert_outcome(*bounds.complement_rho_sum(facts))


def check_complement_energy_sum(facts: GraphFacts) -> CheckOutcome:
    return _cert_outcome(bounds.complement_energy_sum(facts))


def check_power_sums(facts: GraphFacts) -> CheckOutcome:
    return _cert_outcome(*bounds.power_sum_bounds(facts))


def check_trace_identities(facts: GraphFacts) -> CheckOutcome:
    report = spectral.trace_identities(facts)
    if report.sum_ok and report.sumsq_ok and report.re_im_ok:
        return CheckOutcome("pass")
    return CheckOutcome("fail", f"trace identities off: {report}")


def check_charpoly_invariance(facts: GraphFacts) -> CheckOutcome:
    """Pruning non-cycle arcs and splitting into strong components both
    preserve the exact characteristic polynomial."""
    own = facts.charpoly
    pruned = char_poly_exact(adjacency(facts.pruned))
    if own != pruned:
        return CheckOutcome("fail", f"pruned charpoly differs: {own} vs {pruned}")
    product = charpoly_product(f.charpoly for f in facts.component_facts)
    if own != product:
        return CheckOutcome("fail", f"component product differs: {own} vs {product}")
    return CheckOutcome("pass")


def check_zero_energy(facts: GraphFacts) -> CheckOutcome:
    spectral.zero_energy_check(facts)
    return CheckOutcome("pass")


def check_complement_involution(facts: GraphFacts) -> CheckOutcome:
    """Complement is an involution below sigma = n; a fully looped graph
    maps through a loopless complement back to its loopless projection."""
    twice = complement(complement(facts.d))
    expected = facts.d if facts.sigma < facts.n else facts.d.loopless()
    if twice != expected:
        return CheckOutcome("fail", "double complement mismatch")
    return CheckOutcome("pass")


def _implication_outcome(record) -> CheckOutcome:
    if not record.implication_ok:
        return CheckOutcome("fail", json.dumps(record.to_json_dict()))
    if record.status is not ImplicationStatus.APPLIED:
        return CheckOutcome("na", record.status.value)
    return CheckOutcome("pass")


def check_sufficient_condition(facts: GraphFacts) -> CheckOutcome:
    return _implication_outcome(decomposition.sufficient_condition(facts))


def check_necessary_condition(facts: GraphFacts) -> CheckOutcome:
    return _implication_outcome(decomposition.necessary_condition(facts))


def check_ab_remark(facts: GraphFacts) -> CheckOutcome:
    if decomposition.ab_remark_check(facts):
        return CheckOutcome("pass")
    return CheckOutcome("fail", "A-set expression below B-set expression")


def check_regular_complement_spectrum(facts: GraphFacts) -> CheckOutcome:
    if facts.regularity is None:
        return CheckOutcome("na", "not regular")
    mapped = spectral.complement_spectrum_regular(facts)
    direct = facts.complement_facts.spectrum
    dist = matching_distance(mapped, direct)
    if dist > SPECTRUM_MATCH_TOL:
        return CheckOutcome("fail", f"complement spectrum map off by {dist:.3e}")
    return CheckOutcome("pass")


def check_regular_energy_sum(facts: GraphFacts) -> CheckOutcome:
    if facts.regularity is None:
        return CheckOutcome("na", "not regular")
    closed = spectral.regular_energy_sum(facts)
    direct = facts.energy_value() + facts.complement_facts.energy_value()
    if abs(closed - direct) > 1e-7 * max(1.0, abs(direct)):
        return CheckOutcome("fail", f"closed form {closed} vs direct {direct}")
    return CheckOutcome("pass")


def check_oracle_roots(facts: GraphFacts) -> CheckOutcome:
    dist = matching_distance(facts.spectrum, facts.verified_spectrum)
    if dist > SPECTRUM_MATCH_TOL:
        return CheckOutcome("fail", f"QR vs charpoly roots off by {dist:.3e}")
    return CheckOutcome("pass")


def check_oracle_charpoly(facts: GraphFacts) -> CheckOutcome:
    if facts.n > 8:
        return CheckOutcome("na", "cycle-cover enumeration capped at n = 8")
    combinatorial = linear_subdigraph_charpoly(facts.d)
    if combinatorial != facts.charpoly:
        return CheckOutcome(
            "fail", f"{facts.charpoly} vs cycle covers {combinatorial}")
    return CheckOutcome("pass")


def check_perron(facts: GraphFacts) -> CheckOutcome:
    spectral.spectral_radius(facts)
    return CheckOutcome("pass")


def check_energy_positive_part(facts: GraphFacts) -> CheckOutcome:
    direct = facts.energy_value()
    doubled = spectral.energy_positive_part(facts)
    if abs(direct - doubled) > TRACE_TOL * facts.n:
        return CheckOutcome("fail", f"energy {direct} vs positive part {doubled}")
    return CheckOutcome("pass")


def check_loop_shift(facts: GraphFacts) -> CheckOutcome:
    """With a loop at every vertex the energy matches the loopless graph
    (the no-loop half of the statement is vacuous)."""
    if facts.sigma != facts.n:
        return CheckOutcome("na", "needs sigma = n")
    bare = GraphFacts(facts.d.loopless(), with_residuals=facts.with_residuals)
    if abs(facts.energy_value() - bare.energy_value()) > TRACE_TOL * facts.n:
        return CheckOutcome("fail", "full-loop energy differs from loopless energy")
    return CheckOutcome("pass")


THEOREM_CHECKS: dict[str, Callable[[GraphFacts], CheckOutcome]] = {
    "mcclelland": check_mcclelland,
    "rho_lower": check_rho_lower,
    "energy_lower_c2": check_energy_lower_c2,
    "rho_upper": check_rho_upper,
    "component_gap": check_component_gap,
    "complement_rho_sum": check_complement_rho_sum,
    "complement_energy_sum": check_complement_energy_sum,
    "power_sums": check_power_sums,
    "trace_identities": check_trace_identities,
    "charpoly_invariance": check_charpoly_invariance,
    "zero_energy": check_zero_energy,
    "complement_involution": check_complement_involution,
    "sufficient_condition": check_sufficient_condition,
    "necessary_condition": check_necessary_condition,
    "ab_remark": check_ab_remark,
    "regular_complement_spectrum": check_regular_complement_spectrum,
    "regular_energy_sum": check_regular_energy_sum,
    "oracle_roots": check_oracle_roots,
    "oracle_charpoly": check_oracle_charpoly,
    "perron": check_perron,
    "energy_positive_part": check_energy_positive_part,
    "loop_shift": check_loop_shift,
}


def resolve_theorems(names: Sequence[str] | str) -> list[str]:
    if isinstance(names, str):
        names = [names]
    if len(names) == 1 and names[0] == "all":
        return list(THEOREM_CHECKS)
    unknown = [name for name in names if name not in THEOREM_CHECKS]
    if unknown:
        raise ValueError(f"unknown theorems: {', '.join(unknown)}; "
                         f"known: {', '.join(THEOREM_CHECKS)}")
    return list(names)


# ---------------------------------------------------------------------------
# Sweep driver

def _census_signature(facts: GraphFacts) -> str:
    """Sorted (out, in, loop) degree triples plus the exact charpoly.

    Relabelings share a signature; distinct structures essentially never
    collide at these orders.
    """
    prof = degrees(facts.d)
    triples = sorted(zip(prof.out_deg, prof.in_deg,
                         (v in facts.d.loops for v in range(facts.n))))
    return json.dumps({"degrees": [[o, i, int(l)] for o, i, l in triples],
                       "charpoly": list(facts.charpoly.coeffs)})


@dataclass
class _Tally:
    passed: int = 0
    failed: int = 0
    na: int = 0


@dataclass
class SweepReport:
    n: int
    mode: str
    theorems: list[str]
    graphs_checked: int
    checks: dict[str, _Tally]
    equality_census: dict[str, list[dict]]
    counterexamples: list[dict]
    census_findings: list[dict]
    params: dict
    wall_time: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "theorems": self.theorems,
            "graphs_checked": self.graphs_checked,
            "checks": {
                name: {"pass": t.passed, "fail": t.failed, "na": t.na}
                for name, t in self.checks.items()
            },
            "equality_census": self.equality_census,
            "counterexamples": self.counterexamples,
            "census_findings": self.census_findings,
            "params": self.params,
            "wall_time": self.wall_time,
        }

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.census_findings


def _new_report(n: int, mode: str, theorems: list[str], params: dict) -> SweepReport:
    return SweepReport(
        n=n, mode=mode, theorems=theorems, graphs_checked=0,
        checks={name: _Tally() for name in theorems},
        equality_census={}, counterexamples=[], census_findings=[],
        params=params)


def census_findings(report: SweepReport) -> list[dict]:
    """Compare the equality census against the published equality
    characterizations.

    A McClelland-equality graph outside the family list, or a rho-lower
    equality graph whose pruned form is not a symmetric regular
    symmetrization, is a finding: a concrete gap in a published equality
    characterization.  (The n = 4 sweep does produce one: the directed
    triangle together with a looped isolated vertex attains the McClelland
    bound yet is none of the published families.)
    """
    findings: list[dict] = []
    for entry in report.equality_census.get("mcclelland", ()):
        d = from_json_dict(entry["graph"])
        if bounds.mcclelland_equality_family(GraphFacts(d)) is None:
            findings.append({
                "bound_id": "mcclelland",
                "graph": entry["graph"],
                "reason": "equality attained outside the published family list",
            })
    for entry in report.equality_census.get("rho_lower", ()):
        d = from_json_dict(entry["graph"])
        if not bounds.rho_lower_equality_structure(GraphFacts(d)):
            findings.append({
                "bound_id": "rho_lower",
                "graph": entry["graph"],
                "reason": "equality without the symmetric bidegree structure",
            })
    return findings


def _check_graph(report: SweepReport, d: Digraph, theorems: list[str],
                 census_seen: dict[str, set[str]]) -> bool:
    """Run the selected checks; returns False when a counterexample stops
    the sweep."""
    facts = GraphFacts(d, with_residuals=False)
    report.graphs_checked += 1
    for name in theorems:
        try:
            outcome = THEOREM_CHECKS[name](facts)
        except CounterexampleError as exc:
            outcome = CheckOutcome("fail", str(exc))
        tally = report.checks[name]
        if outcome.status == "pass":
            tally.passed += 1
        elif outcome.status == "na":
            tally.na += 1
        else:
            tally.failed += 1
            report.counterexamples.append({
                "check": name,
                "graph": to_json_dict(d),
                "detail": outcome.detail,
            })
            return False
        for cert in outcome.certificates:
            if cert.equality:
                sig = _census_signature(facts)
                seen = census_seen.setdefault(cert.bound_id, set())
                if sig not in seen:
                    seen.add(sig)
                    report.equality_census.setdefault(cert.bound_id, []).append({
                        "graph": to_json_dict(d),
                        "signature": sig,
                        "witness": cert.witness,
                    })
    return True


def _merge_reports(into: SweepReport, part: SweepReport,
                   census_seen: dict[str, set[str]]) -> None:
    into.graphs_checked += part.graphs_checked
    for name, tally in part.checks.items():
        target = into.checks[name]
        target.passed += tally.passed
        target.failed += tally.failed
        target.na += tally.na
    into.counterexamples.extend(part.counterexamples)
    for bound_id, entries in part.equality_census.items():
        seen = census_seen.setdefault(bound_id, set())
        for entry in entries:
            if entry["signature"] not in seen:
                seen.add(entry["signature"])
                into.equality_census.setdefault(bound_id, []).append(entry)


def _run_mask_range(args: tuple) -> SweepReport:
    n, start, stop, theorems = args
    report = _new_report(n, "exhaustive", theorems, {})
    census_seen: dict[str, set[str]] = {}
    for mask in range(start, stop):
        if not _check_graph(report, digraph_from_bits(n, mask), theorems,
                            census_seen):
            break
    return report


def sweep(n: int,
          theorems: Sequence[str] | str = "all",
          *,
          exhaustive: bool = True,
          samples: int | None = None,
          seed: int = 0,
          arc_prob: float = 0.5,
          loop_prob: float = 0.5,
          jobs: int = 1) -> SweepReport:
    """Run the selected theorem checks over many graphs.

    Exhaustive mode visits all 2**(n*n) labeled graphs (n <= 5; n = 5 takes
    minutes).  Sampled mode draws ``samples`` seeded random graphs instead.
    The sweep stops at the first counterexample and serializes the witness
    in the report.
    """
    selected = resolve_theorems(theorems)
    start_time = time.perf_counter()
    if exhaustive and samples is None:
        if n > MAX_EXHAUSTIVE_ORDER:
            raise SizeLimit(f"exhaustive sweep capped at n = {MAX_EXHAUSTIVE_ORDER}")
        params = {"exhaustive": True}
        report = _new_report(n, "exhaustive", selected, params)
        census_seen: dict[str, set[str]] = {}
        total = 1 << (n * n)
        if jobs > 1:
            chunk = -(-total // jobs)
            ranges = [(n, lo, min(lo + chunk, total), selected)
                      for lo in range(0, total, chunk)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for part in pool.map(_run_mask_range, ranges):
                    _merge_reports(report, part, census_seen)
        else:
            for mask in range(total):
                if not _check_graph(report, digraph_from_bits(n, mask),
                                    selected, census_seen):
                    break
    else:
        if samples is None:
            raise ValueError("sampled mode needs a sample count")
        params = {"exhaustive": False, "samples": samples, "seed": seed,
                  "arc_prob": arc_prob, "loop_prob": loop_prob}
        report = _new_report(n, "random", selected, params)
        census_seen = {}
        for i in range(samples):
            d = random_digraph(n, arc_prob, loop_prob, seed + i)
            if not _check_graph(report, d, selected, census_seen):
                break
    report.census_findings = census_findings(report)
    report.wall_time = time.perf_counter() - start_time
    return report
