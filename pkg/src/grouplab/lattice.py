"""Brute-force subgroup lattices.

This module decides SIP and SSIP straight from their definitions, without
touching P[G], so it can serve as ground truth for :mod:`grouplab.properties`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .core import FiniteGroup
from .errors import BudgetExceeded
from .numtheory import divisors, is_prime, is_prime_power
from .structure import Subgroup, _close, _from_mask, generated_subgroup

DEFAULT_LATTICE_BUDGET = 512
MAX_SUBGROUPS = 100_000


@dataclass(frozen=True, eq=False)
class SubgroupLattice:
    parent: FiniteGroup
    subgroups: tuple[Subgroup, ...]
    maximal: frozenset[int]
    s_collection: frozenset[int]

    def __len__(self):
        return len(self.subgroups)

    def orders(self) -> list[int]:
        return [H.order for H in self.subgroups]

    @property
    def s_members(self) -> list[Subgroup]:
        return [self.subgroups[i] for i in sorted(self.s_collection)]

    def index_of(self, H: Subgroup) -> int:
        for i, K in enumerate(self.subgroups):
            if K.members == H.members:
                return i
        raise KeyError("subgroup not in lattice")


def cyclic_subgroups(G: FiniteGroup) -> list[Subgroup]:
    seen: dict[tuple[int, ...], Subgroup] = {}
    for g in range(G.order):
        H = generated_subgroup(G, [g])
        seen.setdefault(H.members, H)
    return list(seen.values())


def _enumerate(G: FiniteGroup, max_subgroups: int) -> list[Subgroup]:
    """All subgroups: cyclic ones, then joins with cyclic ones to a fixpoint.

    Every subgroup is generated by its cyclic subgroups, so closing under
    joins with single cyclic subgroups reaches every pairwise join.
    """
    cyclics = cyclic_subgroups(G)
    found: dict[int, Subgroup] = {H.bits: H for H in cyclics}
    # elements are products of commuting prime-power-order powers of themselves,
    # so prime-power cyclic subgroups already generate every subgroup
    builders = [C for C in cyclics if is_prime_power(C.order)]
    queue = list(found.values())
    while queue:
        H = queue.pop()
        for C in builders:
            if C.bits & H.bits == C.bits:
                continue
            g = C.generators[0]
            gens = list(H.generators) + [g]
            mask = _close(G, gens, H.mask.copy())
            J = _from_mask(G, mask, gens)
            if J.bits not in found:
                found[J.bits] = J
                queue.append(J)
                if len(found) > max_subgroups:
                    raise BudgetExceeded(f"more than {max_subgroups} subgroups")
    return sorted(found.values(), key=lambda H: (H.order, H.members))


def compute_s_collection(subgroups: list[Subgroup] | tuple[Subgroup, ...], order: int) -> frozenset[int]:
    """Indices of proper subgroups meeting every non-trivial subgroup non-trivially."""
    nontrivial = [X.bits for X in subgroups if X.order > 1]
    out = []
    for i, H in enumerate(subgroups):
        if H.order == order:
            continue
        hb = H.bits
        # bit 0 is the identity
        if all((hb & xb) != 1 for xb in nontrivial):
            out.append(i)
    return frozenset(out)


def _maximal(subgroups, order: int) -> frozenset[int]:
    proper = [(i, H) for i, H in enumerate(subgroups) if H.order < order]
    out = []
    for i, H in proper:
        if not any(K.order > H.order and H.issubset(K) for _, K in proper):
            out.append(i)
    return frozenset(out)


def all_subgroups(
    G: FiniteGroup, budget: int = DEFAULT_LATTICE_BUDGET, max_subgroups: int = MAX_SUBGROUPS
) -> SubgroupLattice:
    """Full subgroup lattice of ``G``, ordered by (order, member ids)."""
    if G.order > budget:
        raise BudgetExceeded(f"lattice of a group of order {G.order} exceeds budget {budget}")
    subgroups = tuple(_enumerate(G, max_subgroups))
    return SubgroupLattice(
        G, subgroups, _maximal(subgroups, G.order), compute_s_collection(subgroups, G.order)
    )


def s_collection(lattice: SubgroupLattice) -> tuple[frozenset[int], Subgroup | None]:
    """The collection and its minimum (intersection of all members), if non-empty."""
    idx = lattice.s_collection
    if not idx:
        return idx, None
    bits = -1
    for i in idx:
        bits &= lattice.subgroups[i].bits
    for H in lattice.subgroups:
        if H.bits == bits:
            return idx, H
    raise AssertionError("intersection of subgroups missing from lattice")


def sip_by_definition(lattice: SubgroupLattice) -> bool:
    return bool(lattice.s_collection)


def ssip_by_definition(lattice: SubgroupLattice) -> bool:
    return len(lattice.s_collection) == 1


def maximal_subgroups(lattice: SubgroupLattice) -> frozenset[int]:
    return lattice.maximal


def is_supersolvable(lattice: SubgroupLattice) -> bool:
    """Every maximal subgroup has prime index (Huppert)."""
    n = lattice.parent.order
    return all(is_prime(n // lattice.subgroups[i].order) for i in lattice.maximal)


def is_lagrangian(lattice: SubgroupLattice) -> bool:
    present = {H.order for H in lattice.subgroups}
    return all(d in present for d in divisors(lattice.parent.order))


def maximal_s_members(lattice: SubgroupLattice) -> list[int]:
    idx = sorted(lattice.s_collection)
    subs = lattice.subgroups
    return [
        i for i in idx
        if not any(j != i and subs[i].issubset(subs[j]) and subs[j].order > subs[i].order for j in idx)
    ]


def lattice_json(lattice: SubgroupLattice, name: str | None = None) -> dict[str, Any]:
    G = lattice.parent
    _, minimum = s_collection(lattice)
    return {
        "group": name or G.describe(),
        "order": G.order,
        "subgroup_count": len(lattice.subgroups),
        "s_count": len(lattice.s_collection),
        "s_minimum_order": minimum.order if minimum is not None else None,
        "sip": sip_by_definition(lattice),
        "ssip": ssip_by_definition(lattice),
        "supersolvable": is_supersolvable(lattice),
        "lagrangian": is_lagrangian(lattice),
        "subgroups": [
            {
                "index": i,
                "order": H.order,
                "generators": list(H.generators),
                "maximal": i in lattice.maximal,
                "in_s": i in lattice.s_collection,
            }
            for i, H in enumerate(lattice.subgroups)
        ],
    }
