"""Prime-order structure of a group and the SIP / SSIP / POEC deciders.

Everything here works from the subgroup P[G] generated by the elements of
prime order and its pieces G_p (generated by the elements of order p):

* SIP   <=> P[G] is proper,
* SSIP  <=> [G : P[G]] is prime,
* POEC  <=> the prime-order elements commute pairwise.

The subgroup-lattice definitions these shortcuts replace are implemented
independently in :mod:`grouplab.lattice`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .core import FiniteGroup
from .errors import GroupLabError, TrivialGroup
from .numtheory import factorize, is_prime, is_square_free
from .structure import (
    Subgroup,
    center,
    derived_series,
    generated_subgroup,
    is_normal,
    lower_central_series,
)


class InconsistentReport(GroupLabError):
    """Computed flags violate a containment that must always hold."""


@dataclass(frozen=True, eq=False)
class PrimeStructure:
    primes: tuple[int, ...]
    gp: dict[int, Subgroup]
    pg: Subgroup
    index_pg: int
    sqf_elements: tuple[int, ...]

    def summary(self) -> dict[str, Any]:
        return {
            "primes": list(self.primes),
            "gp_orders": {str(p): self.gp[p].order for p in self.primes},
            "pg_order": self.pg.order,
            "index_pg": self.index_pg,
            "sqf_count": len(self.sqf_elements),
        }


def prime_order_elements(G: FiniteGroup, p: int | None = None) -> np.ndarray:
    orders = G.orders
    if p is not None:
        return np.flatnonzero(orders == p)
    primes = [q for q in factorize(G.order)] if G.order > 1 else []
    return np.flatnonzero(np.isin(orders, primes))


def prime_structure(G: FiniteGroup) -> PrimeStructure:
    primes = tuple(sorted(factorize(G.order))) if G.order > 1 else ()
    gp = {p: generated_subgroup(G, prime_order_elements(G, p)) for p in primes}
    pg = generated_subgroup(G, prime_order_elements(G))
    # both are characteristic
    assert is_normal(G, pg) and all(is_normal(G, H) for H in gp.values())
    assert all(H.issubset(pg) for H in gp.values())
    sqf = tuple(int(x) for x in range(G.order) if is_square_free(int(G.orders[x])))
    return PrimeStructure(primes, gp, pg, G.order // pg.order, sqf)


def _first_noncommuting(G: FiniteGroup, ids: np.ndarray) -> tuple[int, int] | None:
    ids = np.asarray(ids, dtype=np.int64)
    if G.table is not None:
        sub = G.table[np.ix_(ids, ids)]
        bad = np.argwhere(sub != sub.T)
        if bad.size:
            i, j = bad[0]
            return int(ids[i]), int(ids[j])
        return None
    for i, x in enumerate(ids):
        for y in ids[i + 1:]:
            if G.mul(int(x), int(y)) != G.mul(int(y), int(x)):
                return int(x), int(y)
    return None


def poec_witness(G: FiniteGroup) -> tuple[int, int] | None:
    """A pair of non-commuting prime-order elements, or None if G is POEC.

    Same-prime pairs are scanned before cross-prime pairs.
    """
    primes = sorted(factorize(G.order)) if G.order > 1 else []
    for p in primes:
        found = _first_noncommuting(G, prime_order_elements(G, p))
        if found:
            return found
    return _first_noncommuting(G, prime_order_elements(G))


def is_poec(G: FiniteGroup) -> bool:
    return poec_witness(G) is None


def is_poec_via_sqf(G: FiniteGroup) -> bool:
    """POEC through the square-free-order criterion.

    True iff the elements of square-free order form a subgroup and commute
    pairwise. Shares no code with :func:`is_poec`.
    """
    orders = G.orders
    sqf = np.array([x for x in range(G.order) if is_square_free(int(orders[x]))], dtype=np.int64)
    inside = np.zeros(G.order, dtype=bool)
    inside[sqf] = True
    if G.table is not None:
        sub = G.table[np.ix_(sqf, sqf)]
        return bool(inside[sub].all() and (sub == sub.T).all())
    for x in sqf:
        for y in sqf:
            xy = G.mul(int(x), int(y))
            if not inside[xy] or xy != G.mul(int(y), int(x)):
                return False
    return True


def _pg_order(G: FiniteGroup) -> int:
    return generated_subgroup(G, prime_order_elements(G)).order


def is_sip(G: FiniteGroup) -> bool:
    if G.order == 1:
        raise TrivialGroup("SIP is not defined for the trivial group")
    return _pg_order(G) < G.order


def is_ssip(G: FiniteGroup) -> bool:
    if G.order == 1:
        raise TrivialGroup("SSIP is not defined for the trivial group")
    return is_prime(G.order // _pg_order(G))


def is_elementary_abelian(G: FiniteGroup) -> bool:
    if G.order == 1 or not G.is_abelian:
        return False
    return len(set(int(o) for o in G.orders[1:])) == 1 and is_prime(int(G.orders[1]))


FLAG_NAMES = (
    "abelian",
    "elementary_abelian",
    "poec",
    "sip",
    "ssip",
    "perfect",
    "solvable",
    "nilpotent",
    "metabelian",
)


@dataclass(eq=False)
class PropertyReport:
    group_name: str
    order: int
    factorization: dict[int, int]
    flags: dict[str, bool]
    prime_structure: PrimeStructure
    center_order: int
    poec_witness: tuple[int, int] | None = None
    derived_orders: list[int] = field(default_factory=list)
    lower_central_orders: list[int] = field(default_factory=list)

    def __getattr__(self, name):
        flags = self.__dict__.get("flags")
        if flags is not None and name in flags:
            return flags[name]
        raise AttributeError(name)

    def to_json(self) -> dict[str, Any]:
        return {
            "group_name": self.group_name,
            "order": self.order,
            "factorization": {str(p): a for p, a in sorted(self.factorization.items())},
            "flags": {k: bool(self.flags[k]) for k in FLAG_NAMES},
            "prime_structure": self.prime_structure.summary(),
            "center_order": self.center_order,
            "poec_witness": list(self.poec_witness) if self.poec_witness else None,
            "derived_orders": self.derived_orders,
            "lower_central_orders": self.lower_central_orders,
        }


def _check_report(r: PropertyReport) -> None:
    f = r.flags
    problems = []
    if f["ssip"] and not f["sip"]:
        problems.append("ssip without sip")
    if f["poec"] and not f["abelian"] and not f["sip"]:
        problems.append("non-abelian poec without sip")
    if r.order > 1 and f["perfect"] and f["solvable"]:
        problems.append("perfect and solvable")
    if f["nilpotent"] and not f["solvable"]:
        problems.append("nilpotent but not solvable")
    if problems:
        raise InconsistentReport(f"{r.group_name}: " + ", ".join(problems))


def classify(G: FiniteGroup, name: str | None = None) -> PropertyReport:
    """Every flag of ``G`` in one report, checked for internal consistency."""
    name = name or G.describe()
    abelian = G.is_abelian
    ds = derived_series(G)
    lcs = lower_central_series(G)
    ps = prime_structure(G)
    trivial = G.order == 1
    witness = poec_witness(G)
    flags = {
        "abelian": abelian,
        "elementary_abelian": is_elementary_abelian(G),
        "poec": witness is None,
        "sip": not trivial and ps.pg.order < G.order,
        "ssip": not trivial and is_prime(ps.index_pg),
        "perfect": ds.terms[-1].order == G.order,
        "solvable": ds.terminated,
        "nilpotent": lcs.terminated,
        "metabelian": ds.terminated and len(ds.terms) <= 3,
    }
    report = PropertyReport(
        group_name=name,
        order=G.order,
        factorization=dict(factorize(G.order)) if G.order > 1 else {},
        flags=flags,
        prime_structure=ps,
        center_order=center(G).order,
        poec_witness=witness,
        derived_orders=ds.orders,
        lower_central_orders=lcs.orders,
    )
    _check_report(report)
    return report
