"""Executable claims about SIP, SSIP and POEC groups, run over a catalog.

Each claim ``C1`` .. ``C23`` is a function of one catalog group (``C2`` takes
pairs). A claim either does not apply (no result), holds, fails with a
witness, or is skipped as ``not_applicable`` when an oracle it needs is over
budget. ``C23`` is an open conjecture: its failures are reported but never
make a run red.
"""

from __future__ import annotations

import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import cached_property
from importlib import resources
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Any, Callable, Iterable, Iterator

import numpy as np

from .backends import Semidirect as SemidirectBackend
from .constructions import dihedral, direct_product, realize
from .core import FiniteGroup
from .dsl import format_spec, parse_group_expr
from .errors import BudgetExceeded, GroupLabError, InvalidAction, ParseError, TooLarge
from .lattice import (
    DEFAULT_LATTICE_BUDGET,
    SubgroupLattice,
    all_subgroups,
    is_supersolvable,
    maximal_s_members,
    sip_by_definition,
    ssip_by_definition,
)
from .numtheory import factorize, is_almost_square_free, is_prime, is_square_free
from .properties import PropertyReport, classify, is_poec, is_sip, poec_witness
from .structure import (
    Subgroup,
    center,
    commutator_subgroup,
    generated_subgroup,
    is_isomorphic,
    is_normal,
    is_simple,
    join,
    quotient_map,
    subgroup_as_group,
    sylow,
)

log = logging.getLogger(__name__)

HOLDS, FAILS, NOT_APPLICABLE = "holds", "fails", "not_applicable"
OPEN_CLAIMS = frozenset({"C23"})
ALL_CLAIMS = tuple(f"C{i}" for i in range(1, 24))
PRODUCT_BUDGET = 1024
# the POEC group with GAP id (32,2); its Klein quotient is D4
GROUP_32_2 = parse_group_expr("sd(C4 x C2, C4, [[1,0],[1,1]])")

CLAIM_STATEMENTS = {
    "C1": "subgroups of POEC groups are POEC",
    "C2": "direct products of POEC groups are POEC",
    "C3": "POEC is not quotient-closed: the (32,2) group has a Klein normal subgroup with quotient D4",
    "C4": "a POEC group modulo a normal Sylow subgroup is POEC",
    "C5": "non-abelian POEC groups do not have square-free order",
    "C6": "POEC groups of almost square-free order are supersolvable",
    "C7": "POEC groups are solvable when 8 does not divide the order or at most two primes divide it squared",
    "C8": "a nilpotent group is POEC iff all its Sylow subgroups are",
    "C9": "POEC groups with [G:P[G]] a prime power have non-trivial center",
    "C10": "in a POEC group whose smallest prime p divides the order once, G_p is central",
    "C11": "G is SIP iff P[G] is proper",
    "C12": "SIP groups are not simple",
    "C13": "maximal members of the intersecting collection are maximal subgroups",
    "C14": "a nilpotent group is SIP iff some Sylow subgroup is SIP",
    "C15": "an abelian group is SIP iff it is not elementary abelian",
    "C16": "G is SSIP iff [G:P[G]] is prime",
    "C17": "a cyclic group is SSIP iff its order is p1^2 p2 ... pk",
    "C18": "SSIP groups are never perfect",
    "C19": "POEC and SSIP groups are metabelian with non-trivial center and split over an abelian normal Hall subgroup",
    "C20": "perfect groups of desk-scale order are not POEC",
    "C21": "POEC groups with a cyclic Sylow subgroup are not perfect",
    "C22": "SIP groups with abelian P[G] are POEC",
    "C23": "open: POEC groups have non-trivial center",
}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: str
    expected: dict[str, Any] = field(default_factory=dict)
    provenance: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        missing = set(self.expected) - set(self.provenance)
        if missing:
            raise ValueError(f"{self.name}: expected fields without provenance: {sorted(missing)}")


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    group: str
    verdict: str
    witness: Any = None
    note: str = ""

    def __post_init__(self):
        if self.verdict == FAILS and self.witness is None:
            raise ValueError(f"{self.claim_id} on {self.group}: a failure needs a witness")

    def to_json(self) -> dict[str, Any]:
        return asdict(self)


def claim_number(claim_id: str) -> int:
    return int(claim_id.lstrip("COI") or 0)


def sort_key(r: ClaimResult):
    return (claim_number(r.claim_id), r.claim_id, r.group)


# catalog I/O


def default_catalog_path() -> Path:
    return Path(str(resources.files("grouplab") / "data" / "catalog.jsonl"))


def load_catalog(path: str | Path | None = None) -> list[CatalogEntry]:
    path = Path(path) if path else default_catalog_path()
    entries = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                raw = json.loads(line)
                parse_group_expr(raw["spec"])
                entries.append(
                    CatalogEntry(raw["name"], raw["spec"], raw.get("expected", {}), raw.get("provenance", {}))
                )
            except (json.JSONDecodeError, KeyError, ValueError, ParseError) as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from exc
    return entries


def report_fields(report: PropertyReport) -> dict[str, Any]:
    """Flat view of a report, keyed like catalog ``expected`` fields."""
    out = {"order": report.order, "center_order": report.center_order}
    out.update(report.flags)
    out["pg_order"] = report.prime_structure.pg.order
    out["index_pg"] = report.prime_structure.index_pg
    return out


def check_expected(entry: CatalogEntry, report: PropertyReport) -> list[str]:
    """Mismatches between an entry's expected fields and a fresh report."""
    actual = report_fields(report)
    problems = []
    for key, want in entry.expected.items():
        if key not in actual:
            problems.append(f"{entry.name}: unknown expected field {key!r}")
        elif actual[key] != want:
            problems.append(f"{entry.name}: {key} expected {want!r}, got {actual[key]!r}")
    return problems


# per-group context


class GroupContext:
    """Lazily computed facts about one catalog group, shared by all claims."""

    def __init__(self, name: str, G: FiniteGroup, lattice_budget: int = DEFAULT_LATTICE_BUDGET, spec=None):
        self.name = name
        self.G = G
        self.spec = spec
        self.lattice_budget = lattice_budget

    @cached_property
    def report(self) -> PropertyReport:
        return classify(self.G, self.name)

    @property
    def flags(self) -> dict[str, bool]:
        return self.report.flags

    @cached_property
    def lattice(self) -> SubgroupLattice | None:
        try:
            return all_subgroups(self.G, budget=self.lattice_budget)
        except BudgetExceeded:
            return None

    @cached_property
    def sylows(self) -> dict[int, Subgroup]:
        return {p: sylow(self.G, p) for p in self.report.prime_structure.primes}

    @cached_property
    def center(self) -> Subgroup:
        return center(self.G)

    def is_cyclic_subgroup(self, H: Subgroup) -> bool:
        return any(self.G.orders[h] == H.order for h in H.members)


ClaimFn = Callable[[GroupContext], "ClaimResult | None"]
CLAIMS: dict[str, ClaimFn] = {}


def claim(claim_id: str):
    def deco(fn: ClaimFn) -> ClaimFn:
        CLAIMS[claim_id] = fn
        return fn
    return deco


def _result(cid: str, ctx: GroupContext, ok: bool, witness=None, note: str = "") -> ClaimResult:
    return ClaimResult(cid, ctx.name, HOLDS if ok else FAILS, None if ok else witness, note)


def _skip(cid: str, ctx: GroupContext, why: str) -> ClaimResult:
    return ClaimResult(cid, ctx.name, NOT_APPLICABLE, None, why)


def _lattice_or_skip(cid, ctx):
    if ctx.lattice is None:
        return None, _skip(cid, ctx, f"lattice over budget ({ctx.G.order} > {ctx.lattice_budget})")
    return ctx.lattice, None


def _nontrivial(ctx) -> bool:
    return ctx.G.order > 1


@claim("C1")
def _c1(ctx):
    if not ctx.flags["poec"]:
        return None
    lat, skip = _lattice_or_skip("C1", ctx)
    if skip:
        return skip
    for H in lat.subgroups:
        sub = subgroup_as_group(ctx.G, H)
        pair = poec_witness(sub)
        if pair is not None:
            return _result("C1", ctx, False, {"subgroup_order": H.order, "pair": [H.members[i] for i in pair]})
    return _result("C1", ctx, True, note=f"{len(lat.subgroups)} subgroups checked")


@claim("C3")
def _c3(ctx):
    if ctx.spec != GROUP_32_2:
        return None
    G = ctx.G
    if not ctx.flags["poec"]:
        return _result("C3", ctx, False, {"reason": "group is not POEC", "pair": list(ctx.report.poec_witness)})
    d4 = dihedral(4)
    involutions = [int(x) for x in np.flatnonzero(G.orders == 2)]
    tried = set()
    for i, a in enumerate(involutions):
        for b in involutions[i + 1:]:
            if G.mul(a, b) != G.mul(b, a):
                continue
            N = generated_subgroup(G, [a, b])
            if N.order != 4 or N.members in tried:
                continue
            tried.add(N.members)
            if not is_normal(G, N):
                continue
            q = quotient_map(G, N)
            pair = poec_witness(q.group)
            if pair is None:
                continue
            if is_isomorphic(q.group, d4):
                return _result("C3", ctx, True, note=f"N = {list(N.members)}, quotient pair {list(pair)}")
    return _result("C3", ctx, False, {"reason": "no Klein normal subgroup with non-POEC D4 quotient"})


@claim("C4")
def _c4(ctx):
    if not ctx.flags["poec"] or not _nontrivial(ctx):
        return None
    normal = [p for p, S in ctx.sylows.items() if is_normal(ctx.G, S)]
    if not normal:
        return None
    for p in normal:
        Q = quotient_map(ctx.G, ctx.sylows[p]).group
        pair = poec_witness(Q)
        if pair is not None:
            return _result("C4", ctx, False, {"prime": p, "quotient_pair": list(pair)})
    return _result("C4", ctx, True, note=f"normal Sylow primes {normal}")


@claim("C5")
def _c5(ctx):
    if not (ctx.flags["poec"] and not ctx.flags["abelian"]):
        return None
    return _result("C5", ctx, not is_square_free(ctx.G.order), {"order": ctx.G.order})


@claim("C6")
def _c6(ctx):
    if not ctx.flags["poec"] or not is_almost_square_free(ctx.G.order):
        return None
    lat, skip = _lattice_or_skip("C6", ctx)
    if skip:
        return skip
    ok = is_supersolvable(lat)
    bad = [lat.subgroups[i].order for i in lat.maximal if not is_prime(ctx.G.order // lat.subgroups[i].order)]
    return _result("C6", ctx, ok, {"maximal_subgroup_orders_of_nonprime_index": bad})


@claim("C7")
def _c7(ctx):
    if not ctx.flags["poec"]:
        return None
    n = ctx.G.order
    squared = sum(1 for a in factorize(n).values() if a >= 2) if n > 1 else 0
    if n % 8 == 0 and squared > 2:
        return None
    return _result("C7", ctx, ctx.flags["solvable"], {"order": n, "derived_orders": ctx.report.derived_orders})


def _sylow_groups(ctx):
    return {p: subgroup_as_group(ctx.G, S) for p, S in ctx.sylows.items()}


@claim("C8")
def _c8(ctx):
    if not ctx.flags["nilpotent"] or not _nontrivial(ctx):
        return None
    sylow_poec = {p: is_poec(S) for p, S in _sylow_groups(ctx).items()}
    ok = ctx.flags["poec"] == all(sylow_poec.values())
    return _result("C8", ctx, ok, {"poec": ctx.flags["poec"], "sylow_poec": sylow_poec})


@claim("C9")
def _c9(ctx):
    if not ctx.flags["poec"] or not _nontrivial(ctx):
        return None
    index = ctx.report.prime_structure.index_pg
    if index != 1 and len(factorize(index)) != 1:
        return None
    return _result("C9", ctx, ctx.report.center_order > 1, {"index_pg": index, "center_order": ctx.report.center_order})


@claim("C10")
def _c10(ctx):
    if not ctx.flags["poec"] or not _nontrivial(ctx):
        return None
    fac = factorize(ctx.G.order)
    p1 = min(fac)
    if fac[p1] != 1:
        return None
    gp = ctx.report.prime_structure.gp[p1]
    ok = gp.issubset(ctx.center)
    return _result("C10", ctx, ok, {"prime": p1, "gp_order": gp.order, "center_order": ctx.center.order})


@claim("C11")
def _c11(ctx):
    if not _nontrivial(ctx):
        return None
    lat, skip = _lattice_or_skip("C11", ctx)
    if skip:
        return skip
    oracle, crit = sip_by_definition(lat), ctx.flags["sip"]
    return _result("C11", ctx, oracle == crit, {"oracle": oracle, "criterion": crit})


@claim("C12")
def _c12(ctx):
    if not ctx.flags["sip"]:
        return None
    simple = is_simple(ctx.G)
    return _result("C12", ctx, not simple, {"simple": simple})


@claim("C13")
def _c13(ctx):
    if not ctx.flags["sip"]:
        return None
    lat, skip = _lattice_or_skip("C13", ctx)
    if skip:
        return skip
    bad = [lat.subgroups[i].order for i in maximal_s_members(lat) if i not in lat.maximal]
    return _result("C13", ctx, not bad, {"non_maximal_orders": bad})


@claim("C14")
def _c14(ctx):
    if not ctx.flags["nilpotent"] or not _nontrivial(ctx):
        return None
    sylow_sip = {p: is_sip(S) for p, S in _sylow_groups(ctx).items()}
    ok = ctx.flags["sip"] == any(sylow_sip.values())
    return _result("C14", ctx, ok, {"sip": ctx.flags["sip"], "sylow_sip": sylow_sip})


@claim("C15")
def _c15(ctx):
    if not ctx.flags["abelian"] or not _nontrivial(ctx):
        return None
    ok = ctx.flags["sip"] == (not ctx.flags["elementary_abelian"])
    return _result("C15", ctx, ok, {"sip": ctx.flags["sip"], "elementary_abelian": ctx.flags["elementary_abelian"]})


@claim("C16")
def _c16(ctx):
    if not _nontrivial(ctx):
        return None
    lat, skip = _lattice_or_skip("C16", ctx)
    if skip:
        return skip
    oracle = ssip_by_definition(lat)
    crit = is_prime(ctx.report.prime_structure.index_pg)
    return _result(
        "C16", ctx, oracle == crit,
        {"oracle": oracle, "index_pg": ctx.report.prime_structure.index_pg, "s_count": len(lat.s_collection)},
        note=f"index {ctx.report.prime_structure.index_pg}, {len(lat.s_collection)} intersecting subgroups",
    )


@claim("C17")
def _c17(ctx):
    G = ctx.G
    if not _nontrivial(ctx) or G.orders.max() != G.order:
        return None
    exps = sorted(factorize(G.order).values())
    shape = exps[-1] == 2 and all(a == 1 for a in exps[:-1])
    return _result("C17", ctx, ctx.flags["ssip"] == shape, {"order": G.order, "ssip": ctx.flags["ssip"]})


@claim("C18")
def _c18(ctx):
    if not ctx.flags["ssip"]:
        return None
    return _result("C18", ctx, not ctx.flags["perfect"], {"perfect": True})


@claim("C19")
def _c19(ctx):
    if not (ctx.flags["poec"] and ctx.flags["ssip"]):
        return None
    G, ps = ctx.G, ctx.report.prime_structure
    p = ps.index_pg
    witness: dict[str, Any] = {"index_pg": p}
    problems = []
    if not ctx.flags["metabelian"]:
        problems.append("not metabelian")
    if ctx.report.center_order == 1:
        problems.append("trivial center")
    H = generated_subgroup(G, [])
    for q in ps.primes:
        if q != p:
            H = join(G, H, ps.gp[q])
    S = ctx.sylows[p]
    witness.update(hall_order=H.order, sylow_order=S.order)
    if not is_normal(G, H):
        problems.append("H not normal")
    if math.gcd(H.order, G.order // H.order) != 1:
        problems.append("H not Hall")
    if not _commutes(G, H):
        problems.append("H not abelian")
    if (H.mask & S.mask).sum() != 1:
        problems.append("H meets S_p non-trivially")
    if join(G, H, S).order != G.order:
        problems.append("H S_p != G")
    witness["problems"] = problems
    return _result("C19", ctx, not problems, witness)


def _commutes(G: FiniteGroup, H: Subgroup) -> bool:
    gens = H.generators
    return all(G.mul(a, b) == G.mul(b, a) for a in gens for b in gens)


@claim("C20")
def _c20(ctx):
    if not ctx.flags["perfect"] or not _nontrivial(ctx):
        return None
    n = ctx.G.order
    note = ""
    if ctx.flags["poec"]:
        # a perfect POEC group must satisfy every divisibility constraint
        fac = factorize(n)
        odd_cubes = [p for p, a in fac.items() if p > 2 and a >= 3]
        note = f"perfect POEC: 8 | n {n % 8 == 0}, odd primes cubed {odd_cubes}"
    return _result("C20", ctx, not ctx.flags["poec"], {"order": n, "note": note})


@claim("C21")
def _c21(ctx):
    if not ctx.flags["poec"] or not _nontrivial(ctx):
        return None
    cyclic = [p for p, S in ctx.sylows.items() if ctx.is_cyclic_subgroup(S)]
    if not cyclic:
        return None
    return _result("C21", ctx, not ctx.flags["perfect"], {"cyclic_sylow_primes": cyclic})


@claim("C22")
def _c22(ctx):
    if not ctx.flags["sip"]:
        return None
    pg = ctx.report.prime_structure.pg
    if not _commutes(ctx.G, pg):
        return None
    return _result("C22", ctx, ctx.flags["poec"], {"pair": list(ctx.report.poec_witness or [])})


@claim("C23")
def _c23(ctx):
    if not ctx.flags["poec"] or not _nontrivial(ctx):
        return None
    return _result("C23", ctx, ctx.report.center_order > 1, {"center_order": ctx.report.center_order})


# C2 works on pairs and is handled separately
def check_product_pair(a: tuple[str, str], b: tuple[str, str], budget: int = PRODUCT_BUDGET) -> ClaimResult | None:
    """C2 for one pair of POEC catalog groups ``(name, spec)``."""
    name = f"{a[0]} * {b[0]}"
    try:
        G, H = realize(a[1]), realize(b[1])
    except BudgetExceeded:
        return None
    if G.order * H.order > budget:
        return None
    P = direct_product(G, H)
    pair = poec_witness(P)
    if pair is None:
        return ClaimResult("C2", name, HOLDS, None, f"order {P.order}")
    return ClaimResult("C2", name, FAILS, {"pair": list(pair)})


def run_entry(entry: CatalogEntry, claims: Iterable[str] = ALL_CLAIMS, lattice_budget: int = DEFAULT_LATTICE_BUDGET, element_budget: int | None = None) -> list[ClaimResult]:
    """All per-group claims for one catalog entry."""
    claims = [c for c in claims if c in CLAIMS]
    try:
        spec = parse_group_expr(entry.spec)
        G = realize(spec, element_budget)
    except BudgetExceeded as exc:
        return [ClaimResult(c, entry.name, NOT_APPLICABLE, None, str(exc)) for c in claims]
    except GroupLabError as exc:
        return [ClaimResult(c, entry.name, FAILS, {"construction_error": str(exc)}) for c in claims]
    ctx = GroupContext(entry.name, G, lattice_budget, spec)
    out = []
    for cid in claims:
        try:
            r = CLAIMS[cid](ctx)
        except (BudgetExceeded, TooLarge) as exc:
            r = _skip(cid, ctx, str(exc))
        if r is not None:
            out.append(r)
    return out


def _run_entry_args(args):
    return run_entry(*args)


def _run_pair_args(args):
    return check_product_pair(*args)


def run_claims(
    catalog: list[CatalogEntry],
    claims: Iterable[str] | None = None,
    parallelism: int = 1,
    lattice_budget: int = DEFAULT_LATTICE_BUDGET,
    element_budget: int | None = None,
) -> list[ClaimResult]:
    """Run the selected claims over the catalog; results sorted by (claim, group)."""
    wanted = tuple(claims) if claims else ALL_CLAIMS
    unknown = set(wanted) - set(ALL_CLAIMS)
    if unknown:
        raise ValueError(f"unknown claims: {sorted(unknown)}")
    tasks = [(e, wanted, lattice_budget, element_budget) for e in catalog]
    results: list[ClaimResult] = []

    pair_tasks = []
    if "C2" in wanted:
        poec = _poec_entries(catalog, element_budget)
        pair_tasks = [(a, b) for a, b in combinations_with_replacement(poec, 2)]

    if parallelism > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            for batch in pool.map(_run_entry_args, tasks):
                results.extend(batch)
            results.extend(r for r in pool.map(_run_pair_args, pair_tasks) if r is not None)
    else:
        for t in tasks:
            results.extend(_run_entry_args(t))
        results.extend(r for r in map(_run_pair_args, pair_tasks) if r is not None)
    return sorted(results, key=sort_key)


def _poec_entries(catalog, element_budget) -> list[tuple[str, str]]:
    out = []
    for e in catalog:
        try:
            G = realize(e.spec, element_budget)
        except GroupLabError:
            continue
        if G.order <= PRODUCT_BUDGET // 2 and is_poec(G):
            out.append((e.name, e.spec))
    return out


def blocking_failures(results: Iterable[ClaimResult]) -> list[ClaimResult]:
    return [r for r in results if r.verdict == FAILS and r.claim_id not in OPEN_CLAIMS]


def open_conjecture_counterexamples(results: Iterable[ClaimResult]) -> list[ClaimResult]:
    return [r for r in results if r.verdict == FAILS and r.claim_id in OPEN_CLAIMS]


# counterexample scan


def _metacyclic_params(bound: int) -> Iterator[tuple[int, int, int]]:
    for n in range(2, bound // 2 + 1):
        for k in range(2, bound // n + 1):
            for r in range(1, n):
                if math.gcd(r, n) == 1 and pow(r, k, n) == 1:
                    yield n, k, r


def metacyclic_family(bound: int) -> Iterator[tuple[str, str]]:
    """sd(C_n, C_k, [[r]]) for every r with r^k = 1 mod n and n*k <= bound."""
    for n, k, r in _metacyclic_params(bound):
        yield "metacyclic", f"sd(C{n}, C{k}, [[{r}]])"


def prime_metacyclic_family(bound: int) -> Iterator[tuple[str, str]]:
    """sd(C_p, C_q, [[r]]) for primes p, q with pq <= bound."""
    for n, k, r in _metacyclic_params(bound):
        if is_prime(n) and is_prime(k):
            yield "prime_metacyclic", f"sd(C{n}, C{k}, [[{r}]])"


def quaternion_family(bound: int) -> Iterator[tuple[str, str]]:
    """Q8 through Q128, or further when ``bound`` is larger."""
    n = 8
    while n <= max(bound, 128):
        yield "quaternion", f"Q{n}"
        n *= 2


def dihedral_family(bound: int) -> Iterator[tuple[str, str]]:
    """D3 through D20 whatever the bound; they are cheap."""
    for n in range(3, 21):
        yield "dihedral", f"D{n}"


def rank2_family(bound: int) -> Iterator[tuple[str, str]]:
    """sd(C_a x C_b, C_k, M) over small a, b, k and all 2x2 matrices M."""
    for a in (2, 3, 4):
        for b in (2, 3, 4):
            if b > a and a * b > 4:
                continue
            for k in (2, 3, 4, 6, 9):
                if a * b * k > bound:
                    continue
                top = max(a, b)
                for m in np.ndindex(top, top, top, top):
                    matrix = ((m[0], m[1]), (m[2], m[3]))
                    try:
                        SemidirectBackend((a, b), k, matrix)
                    except InvalidAction:
                        continue
                    yield "rank2", f"sd(C{a} x C{b}, C{k}, [[{m[0]},{m[1]}],[{m[2]},{m[3]}]])"


SCAN_FAMILIES: dict[str, Callable[[int], Iterator[tuple[str, str]]]] = {
    "prime_metacyclic": prime_metacyclic_family,
    "metacyclic": metacyclic_family,
    "quaternion": quaternion_family,
    "dihedral": dihedral_family,
    "rank2": rank2_family,
}


@dataclass
class ScanObservation:
    family: str
    spec: str
    order: int
    poec: bool
    abelian: bool
    center_order: int
    perfect: bool


def _observe(args) -> ScanObservation | None:
    family, spec, budget = args
    try:
        G = realize(spec, budget)
    except GroupLabError:
        return None
    return ScanObservation(
        family, spec, G.order, is_poec(G), G.is_abelian, center(G).order,
        False if G.order == 1 else _is_perfect(G),
    )


def _is_perfect(G: FiniteGroup) -> bool:
    return commutator_subgroup(G).order == G.order


def counterexample_scan(
    bound: int = 100,
    families: Iterable[str] | None = None,
    parallelism: int = 1,
    element_budget: int | None = None,
) -> tuple[list[ClaimResult], list[ScanObservation], list[dict[str, Any]]]:
    """Sweep parameterized families for counterexamples to two open conjectures.

    Flags every POEC group with trivial center (claim ``C23``) and every
    perfect POEC group with a prime p such that p^3 does not divide the
    order (``OI2``). Returns the flagged results, every
    observation, and a per-family survey table.
    """
    names = list(families) if families else list(SCAN_FAMILIES)
    seen: set[str] = set()
    jobs = []
    for fam in names:
        for family, spec in SCAN_FAMILIES[fam](bound):
            key = format_spec(parse_group_expr(spec))
            if (family, key) in seen:
                continue
            seen.add((family, key))
            jobs.append((family, spec, element_budget))

    if parallelism > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            observations = [o for o in pool.map(_observe, jobs, chunksize=16) if o is not None]
    else:
        observations = [o for o in map(_observe, jobs) if o is not None]

    results = []
    for o in observations:
        if o.poec and o.order > 1:
            ok = o.center_order > 1
            results.append(ClaimResult("C23", o.spec, HOLDS if ok else FAILS, None if ok else {"center_order": o.center_order}))
        if o.poec and o.perfect and o.order > 1:
            short = [p for p, a in factorize(o.order).items() if a < 3]
            results.append(ClaimResult("OI2", o.spec, FAILS if short else HOLDS, {"primes_below_cube": short} if short else None))

    survey = []
    for fam in names:
        rows = [o for o in observations if o.family == fam]
        survey.append({
            "family": fam,
            "groups": len(rows),
            "poec": sum(o.poec for o in rows),
            "nonabelian_poec": sum(o.poec and not o.abelian for o in rows),
            "poec_trivial_center": sum(o.poec and o.center_order == 1 and o.order > 1 for o in rows),
            "perfect": sum(o.perfect for o in rows),
        })
    return sorted(results, key=sort_key), observations, survey
