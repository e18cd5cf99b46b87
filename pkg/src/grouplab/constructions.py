"""Named group families and the realization of parsed group expressions."""

from __future__ import annotations

from .backends import (
    Abelian,
    DirectProduct,
    Dicyclic,
    Heisenberg,
    MatrixModP,
    Permutation,
    Semidirect as SemidirectBackend,
)
from .core import FiniteGroup, enumerate_elements
from .dsl import GroupSpec, Named, Product, Semidirect, cyclic_factors, format_spec, parse_group_expr
from .numtheory import primitive_root


def cyclic(n: int, budget: int | None = None) -> FiniteGroup:
    return enumerate_elements(Abelian((n,)), budget, name=f"C{n}")


def elementary_abelian(p: int, k: int, budget: int | None = None) -> FiniteGroup:
    return enumerate_elements(Abelian((p,) * k), budget, name=f"E({p},{k})")


def dihedral(n: int, budget: int | None = None) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    rotation = tuple((i + 1) % n for i in range(n))
    reflection = tuple((-i) % n for i in range(n))
    return enumerate_elements(Permutation(n, (rotation, reflection)), budget, name=f"D{n}")


def quaternion(order: int, budget: int | None = None) -> FiniteGroup:
    """Generalized quaternion group of the given 2-power order."""
    return enumerate_elements(Dicyclic(order // 4), budget, name=f"Q{order}")


def symmetric(n: int, budget: int | None = None) -> FiniteGroup:
    gens: list[tuple[int, ...]] = []
    if n >= 2:
        swap = (1, 0) + tuple(range(2, n))
        cycle = tuple((i + 1) % n for i in range(n))
        gens = [swap] if n == 2 else [swap, cycle]
    return enumerate_elements(Permutation(n, tuple(gens)), budget, name=f"S{n}")


def alternating(n: int, budget: int | None = None) -> FiniteGroup:
    gens = []
    for i in range(2, n):
        g = list(range(n))
        g[0], g[1], g[i] = 1, i, 0  # the 3-cycle 0 -> 1 -> i -> 0
        gens.append(tuple(g))
    return enumerate_elements(Permutation(n, tuple(gens)), budget, name=f"A{n}")


def heisenberg(p: int, budget: int | None = None) -> FiniteGroup:
    return enumerate_elements(Heisenberg(p), budget, name=f"Heis({p})")


def special_linear2(p: int, budget: int | None = None) -> FiniteGroup:
    gens = ((1, 1, 0, 1), (1, 0, 1, 1))
    return enumerate_elements(MatrixModP(p, 2, gens, special=True, whole=True), budget, name=f"SL2({p})")


def general_linear2(p: int, budget: int | None = None) -> FiniteGroup:
    g = primitive_root(p)
    gens = ((1, 1, 0, 1), (1, 0, 1, 1), (g, 0, 0, 1))
    return enumerate_elements(MatrixModP(p, 2, gens, whole=True), budget, name=f"GL2({p})")


def direct_product(G: FiniteGroup, H: FiniteGroup, budget: int | None = None) -> FiniteGroup:
    name = None
    if G.name and H.name:
        name = f"{G.name} x {H.name}"
    return enumerate_elements(DirectProduct(G, H), budget, name=name)


def semidirect(
    moduli: tuple[int, ...], k: int, matrix, budget: int | None = None, name: str | None = None
) -> FiniteGroup:
    backend = SemidirectBackend(tuple(moduli), k, tuple(tuple(r) for r in matrix))
    return enumerate_elements(backend, budget, name=name)


_NAMED = {
    "C": cyclic,
    "D": dihedral,
    "Q": quaternion,
    "S": symmetric,
    "A": alternating,
    "E": elementary_abelian,
    "Heis": heisenberg,
    "SL2": special_linear2,
    "GL2": general_linear2,
}


def realize(spec: GroupSpec | str, budget: int | None = None) -> FiniteGroup:
    """Build the concrete group for a parsed (or textual) group expression."""
    if isinstance(spec, str):
        spec = parse_group_expr(spec)
    if isinstance(spec, Named):
        G = _NAMED[spec.family](*spec.params, budget=budget)
    elif isinstance(spec, Product):
        G = direct_product(realize(spec.left, budget), realize(spec.right, budget), budget)
    elif isinstance(spec, Semidirect):
        moduli = cyclic_factors(spec.normal)
        if moduli is None or not (isinstance(spec.acting, Named) and spec.acting.family == "C"):
            raise ValueError("semidirect needs a cyclic-product normal part and a cyclic acting part")
        G = semidirect(moduli, spec.acting.params[0], spec.matrix, budget)
    else:
        raise TypeError(f"not a group spec: {spec!r}")
    G.name = format_spec(spec)
    return G
