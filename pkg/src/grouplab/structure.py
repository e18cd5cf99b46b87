"""Subgroup machinery on top of :class:`~grouplab.core.FiniteGroup`.

Subgroups are stored as sorted member ids plus a generator witness. All
closures are right-multiplication breadth-first searches from the identity,
so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .backends import CayleyTable
from .core import FiniteGroup, enumerate_elements, order_profile
from .errors import NotNormal, PrimeDoesNotDivide, TooLarge, TrivialGroup
from .numtheory import factorize, p_part

ISOMORPHISM_CAP = 256


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]
    generators: tuple[int, ...]

    def __post_init__(self):
        if not self.members or self.members[0] != 0:
            raise ValueError("a subgroup must contain the identity")
        # Lagrange
        assert self.parent.order % len(self.members) == 0, (len(self.members), self.parent.order)

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask[x])

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"<Subgroup order={self.order} of {self.parent!r}>"

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[list(self.members)] = True
        return m

    @cached_property
    def bits(self) -> int:
        """Members as a Python int bitset (bit i set iff id i is a member)."""
        packed = np.packbits(self.mask, bitorder="little")
        return int.from_bytes(packed.tobytes(), "little")

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def issubset(self, other: "Subgroup") -> bool:
        return self.bits & other.bits == self.bits


@dataclass(frozen=True)
class SeriesReport:
    kind: str
    terms: tuple[Subgroup, ...]
    terminated: bool

    @property
    def orders(self) -> list[int]:
        return [t.order for t in self.terms]


def _close(G: FiniteGroup, gens: Sequence[int], mask: np.ndarray) -> np.ndarray:
    """Extend ``mask`` (containing the identity) to the subgroup it generates with ``gens``."""
    frontier = np.flatnonzero(mask)
    gens = np.asarray(list(gens), dtype=np.int64)
    if G.table is not None:
        while frontier.size and gens.size:
            prod = G.table[frontier[:, None], gens[None, :]].ravel()
            new = np.unique(prod[~mask[prod]])
            mask[new] = True
            frontier = new
        return mask
    while frontier.size and gens.size:
        found = []
        for g in gens:
            prod = G.mul_vec(frontier, int(g))
            new = np.unique(prod[~mask[prod]])
            if new.size:
                mask[new] = True
                found.append(new)
        frontier = np.concatenate(found) if found else np.empty(0, dtype=np.int64)
    return mask


def _from_mask(G: FiniteGroup, mask: np.ndarray, generators: Sequence[int]) -> Subgroup:
    members = tuple(int(i) for i in np.flatnonzero(mask))
    return Subgroup(G, members, tuple(generators))


def generated_subgroup(G: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``seed``.

    The generator witness keeps only the seed elements that enlarged the
    closure, in seed order.
    """
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    gens: list[int] = []
    for s in seed:
        s = int(s)
        if mask[s]:
            continue
        gens.append(s)
        mask = _close(G, gens, mask)
    return _from_mask(G, mask, gens)


def subgroup_from_members(G: FiniteGroup, members: Iterable[int]) -> Subgroup:
    """Wrap a known-closed member set, picking high-order generators first."""
    ids = np.fromiter(members, dtype=np.int64)
    order = np.argsort(-G.orders[ids], kind="stable")
    H = generated_subgroup(G, ids[order])
    if H.order != len(set(ids.tolist())):
        raise ValueError("member set is not closed under multiplication")
    return H


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,), ())


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)), tuple(G.generators))


def join(G: FiniteGroup, A: Subgroup, B: Subgroup) -> Subgroup:
    mask = A.mask.copy()
    gens = list(A.generators)
    for b in B.generators:
        if not mask[b]:
            gens.append(b)
            mask = _close(G, gens, mask)
    return _from_mask(G, mask, gens)


def intersection(G: FiniteGroup, A: Subgroup, B: Subgroup) -> Subgroup:
    return subgroup_from_members(G, np.flatnonzero(A.mask & B.mask))


# centralizers and center


def centralizer(G: FiniteGroup, S: Iterable[int]) -> Subgroup:
    """Elements commuting with every element of ``S``."""
    S = generated_subgroup(G, S).generators
    if G.table is not None:
        mask = np.ones(G.order, dtype=bool)
        for s in S:
            mask &= G.table[:, s] == G.table[s, :]
    else:
        mask = np.array(
            [all(G.mul(g, s) == G.mul(s, g) for s in S) for g in range(G.order)], dtype=bool
        )
    return subgroup_from_members(G, np.flatnonzero(mask))


def center(G: FiniteGroup) -> Subgroup:
    return centralizer(G, G.generators)


# normality


def normal_closure(G: FiniteGroup, S: Iterable[int], within: Subgroup | None = None) -> Subgroup:
    """Least subgroup containing ``S`` and normalized by ``within`` (default ``G``)."""
    conjugators = within.generators if within is not None else G.generators
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    gens: list[int] = []
    pending = [int(s) for s in S]
    while pending:
        s = pending.pop()
        if mask[s]:
            continue
        gens.append(s)
        mask = _close(G, gens, mask)
        for n in gens:
            for g in conjugators:
                c = G.conj(g, n)
                if not mask[c]:
                    pending.append(c)
    return _from_mask(G, mask, gens)


def is_normal(G: FiniteGroup, H: Subgroup, within: Subgroup | None = None) -> bool:
    conjugators = within.generators if within is not None else G.generators
    return all(H.mask[G.conj(g, h)] for g in conjugators for h in H.generators)


# commutators and series


def commutator_subgroup(G: FiniteGroup, H: Subgroup | None = None) -> Subgroup:
    """Derived subgroup [H, H] of ``H`` (default: all of ``G``)."""
    H = H if H is not None else whole_group(G)
    gens = list(H.generators)
    if not gens:
        return trivial_subgroup(G)
    comms = [G.commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(G, comms, within=H)


def commutator_with_group(G: FiniteGroup, N: Subgroup) -> Subgroup:
    """[N, G] for a normal subgroup N."""
    comms = [G.commutator(a, g) for a in N.generators for g in G.generators]
    return normal_closure(G, comms)


def derived_series(G: FiniteGroup) -> SeriesReport:
    terms = [whole_group(G)]
    while True:
        nxt = commutator_subgroup(G, terms[-1])
        if nxt.order == terms[-1].order:
            break
        terms.append(nxt)
    return SeriesReport("derived", tuple(terms), terms[-1].is_trivial())


def lower_central_series(G: FiniteGroup) -> SeriesReport:
    terms = [whole_group(G)]
    while True:
        nxt = commutator_with_group(G, terms[-1])
        if nxt.order == terms[-1].order:
            break
        terms.append(nxt)
    return SeriesReport("lower_central", tuple(terms), terms[-1].is_trivial())


# quotients


@dataclass(frozen=True)
class Quotient:
    group: FiniteGroup
    # projection[x] = id in ``group`` of the coset x N
    projection: np.ndarray
    representatives: tuple[int, ...]


def quotient_map(G: FiniteGroup, N: Subgroup) -> Quotient:
    """G/N on coset representatives (least member id of each coset)."""
    if not is_normal(G, N):
        raise NotNormal(f"subgroup of order {N.order} is not normal")
    label = np.full(G.order, -1, dtype=np.int64)
    reps: list[int] = []
    n_members = np.array(N.members, dtype=np.int64)
    for x in range(G.order):
        if label[x] >= 0:
            continue
        # left coset xN; x is its least id since we scan in id order
        if G.table is not None:
            coset = G.table[x, n_members]
        else:
            coset = np.array([G.mul(x, n) for n in N.members])
        label[coset] = len(reps)
        reps.append(x)
    m = len(reps)
    reps_arr = np.array(reps, dtype=np.int64)
    if G.table is not None:
        table = label[G.table[np.ix_(reps_arr, reps_arr)]]
    else:
        table = np.array([[label[G.mul(a, b)] for b in reps] for a in reps], dtype=np.int64)
    gens = []
    for g in G.generators:
        c = int(label[g])
        if c != 0 and c not in gens:
            gens.append(c)
    backend = CayleyTable(table, tuple(gens), labels=tuple(reps))
    name = f"{G.name}/N{N.order}" if G.name else None
    Q = enumerate_elements(backend, budget=max(m, 1), name=name)
    projection = np.array([Q.index(int(c)) for c in label], dtype=np.int64)
    return Quotient(Q, projection, tuple(reps))


def quotient(G: FiniteGroup, N: Subgroup) -> FiniteGroup:
    return quotient_map(G, N).group


def subgroup_as_group(G: FiniteGroup, H: Subgroup, name: str | None = None) -> FiniteGroup:
    """Standalone copy of ``H``; element i of the copy is ``H.members[i]``."""
    members = np.array(H.members, dtype=np.int64)
    local = np.full(G.order, -1, dtype=np.int64)
    local[members] = np.arange(len(members))
    if G.table is not None:
        table = local[G.table[np.ix_(members, members)]]
    else:
        table = np.array([[local[G.mul(a, b)] for b in H.members] for a in H.members])
    gens = tuple(int(local[g]) for g in H.generators)
    return enumerate_elements(CayleyTable(table, gens, labels=H.members), budget=len(members), name=name)


# Sylow subgroups


def sylow(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown greedily from the trivial subgroup.

    Each step adjoins a p-element that normalizes the current p-subgroup P and
    lies outside it, so P<x> stays a p-group. While P is not Sylow, p divides
    [N(P):P] and such an element exists, so the loop ends at full p-part.
    """
    if G.order % p:
        raise PrimeDoesNotDivide(f"{p} does not divide |G| = {G.order}")
    target = p_part(G.order, p)
    orders = G.orders
    p_elements = [int(x) for x in range(1, G.order) if p_part(int(orders[x]), p) == orders[x]]
    P = trivial_subgroup(G)
    while P.order < target:
        for x in p_elements:
            if P.mask[x]:
                continue
            if all(P.mask[G.conj(x, a)] for a in P.generators):
                mask = _close(G, list(P.generators) + [x], P.mask.copy())
                P = _from_mask(G, mask, list(P.generators) + [x])
                break
        else:  # pragma: no cover - contradicts Sylow's theorem
            raise AssertionError(f"greedy Sylow stalled at order {P.order} < {target}")
    assert P.order == target
    return P


def is_simple(G: FiniteGroup) -> bool:
    if G.order == 1:
        raise TrivialGroup("simplicity is undefined for the trivial group")
    for g in range(1, G.order):
        if normal_closure(G, [g]).order != G.order:
            return False
    return True


# isomorphism


def _small_generating_set(G: FiniteGroup) -> list[int]:
    ids = np.argsort(-G.orders, kind="stable")
    return list(generated_subgroup(G, ids).generators)


def _invariants(G: FiniteGroup):
    return (G.order, order_profile(G), center(G).order, G.is_abelian)


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> dict[int, int] | None:
    """An isomorphism G -> H as a dict on ids, or None.

    Backtracks over images of a small generating set of G, checking after each
    choice that the partial map is a well-defined injective homomorphism on the
    subgroup generated so far.
    """
    if max(G.order, H.order) > ISOMORPHISM_CAP:
        raise TooLarge(f"isomorphism test is capped at order {ISOMORPHISM_CAP}")
    if _invariants(G) != _invariants(H):
        return None
    if G.order == 1:
        return {0: 0}
    gens = _small_generating_set(G)
    zg, zh = center(G).mask, center(H).mask
    candidates = [
        [h for h in range(1, H.order) if H.orders[h] == G.orders[g] and zh[h] == zg[g]]
        for g in gens
    ]

    def extend(images: list[int]) -> dict[int, int] | None:
        k = len(images)
        phi = {0: 0}
        used = {0}
        queue = [0]
        for x in queue:
            for g, h in zip(gens[:k], images):
                y, img = G.mul(x, g), H.mul(phi[x], h)
                if y in phi:
                    if phi[y] != img:
                        return None
                elif img in used:
                    return None
                else:
                    phi[y] = img
                    used.add(img)
                    queue.append(y)
        return phi

    def search(images: list[int]) -> dict[int, int] | None:
        phi = extend(images)
        if phi is None:
            return None
        if len(images) == len(gens):
            return phi if len(phi) == G.order else None
        for h in candidates[len(images)]:
            found = search(images + [h])
            if found is not None:
                return found
        return None

    return search([])


def is_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None


def primes_of(G: FiniteGroup) -> list[int]:
    return sorted(factorize(G.order)) if G.order > 1 else []
