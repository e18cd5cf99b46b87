"""Concrete realizations of finite groups.

A backend knows how to multiply canonical keys (hashable tuples or ints) and
which keys generate the group. Everything else (ids, tables, orders) lives in
:class:`grouplab.core.FiniteGroup`, which enumerates a backend once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Hashable, Sequence

import numpy as np

from .errors import InvalidAction, InvalidBackend

if TYPE_CHECKING:
    from .core import FiniteGroup

Key = Hashable

# Exhaustive CayleyTable axiom checks stop here.
CAYLEY_VALIDATION_LIMIT = 256


class Backend:
    """Interface every backend implements."""

    def identity(self) -> Key:
        raise NotImplementedError

    def generators(self) -> list[Key]:
        raise NotImplementedError

    def mul(self, a: Key, b: Key) -> Key:
        raise NotImplementedError

    def projected_order(self) -> int | None:
        """Order known in advance, if any (used for budget checks)."""
        return None

    def describe(self) -> str:
        return type(self).__name__


def _perm_mul(a: tuple, b: tuple) -> tuple:
    # apply a, then b
    return tuple(b[i] for i in a)


@dataclass(frozen=True)
class Permutation(Backend):
    degree: int
    gens: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        target = list(range(self.degree))
        for g in self.gens:
            if len(g) != self.degree or sorted(g) != target:
                raise InvalidBackend(f"{g} is not a permutation of {self.degree} points")

    def identity(self):
        return tuple(range(self.degree))

    def generators(self):
        return list(self.gens)

    def mul(self, a, b):
        return _perm_mul(a, b)

    def describe(self):
        return f"Permutation(degree={self.degree}, {len(self.gens)} generators)"


def _mat_mul(a: tuple, b: tuple, n: int, p: int) -> tuple:
    return tuple(
        sum(a[i * n + k] * b[k * n + j] for k in range(n)) % p
        for i in range(n)
        for j in range(n)
    )


def _det2(m: tuple, p: int) -> int:
    return (m[0] * m[3] - m[1] * m[2]) % p


@dataclass(frozen=True)
class MatrixModP(Backend):
    """Invertible ``dim x dim`` matrices over Z/p, stored row-major.

    Set ``whole`` when the generators are known to generate all of GL (or SL
    with ``special``); the closure is then checked against the known order.
    """

    p: int
    dim: int
    gens: tuple[tuple[int, ...], ...]
    special: bool = False
    whole: bool = False

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.dim * self.dim:
                raise InvalidBackend(f"matrix {g} has wrong size for dim {self.dim}")
            if self.dim == 2:
                det = _det2(g, self.p)
                if det == 0 or (self.special and det != 1):
                    raise InvalidBackend(f"matrix {g} has determinant {det} mod {self.p}")

    def identity(self):
        return tuple(int(i == j) for i in range(self.dim) for j in range(self.dim))

    def generators(self):
        return list(self.gens)

    def mul(self, a, b):
        return _mat_mul(a, b, self.dim, self.p)

    def projected_order(self):
        if self.dim != 2 or not self.whole:
            return None
        gl = (self.p**2 - 1) * (self.p**2 - self.p)
        return gl // (self.p - 1) if self.special else gl

    def describe(self):
        kind = "SL" if self.special else "GL"
        return f"MatrixModP({kind}({self.dim},{self.p}))"


@dataclass(frozen=True)
class Abelian(Backend):
    """Z/n1 x ... x Z/nr with componentwise addition."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        if any(n < 1 for n in self.moduli):
            raise InvalidBackend(f"bad moduli {self.moduli}")

    def identity(self):
        return (0,) * len(self.moduli)

    def generators(self):
        r = len(self.moduli)
        return [tuple(int(i == j) for j in range(r)) for i, n in enumerate(self.moduli) if n > 1]

    def mul(self, a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, self.moduli))

    def projected_order(self):
        return int(np.prod(self.moduli, dtype=object))

    def describe(self):
        return "Abelian(" + " x ".join(f"Z{n}" for n in self.moduli) + ")"


@dataclass(frozen=True)
class Dicyclic(Backend):
    """Dic_m of order 4m as pairs (i, e) standing for a^i b^e."""

    m: int

    def __post_init__(self):
        if self.m < 1:
            raise InvalidBackend("dicyclic parameter must be positive")

    def identity(self):
        return (0, 0)

    def generators(self):
        return [(1, 0), (0, 1)]

    def mul(self, a, b):
        n = 2 * self.m
        (i, e), (j, f) = a, b
        if e == 0:
            return ((i + j) % n, f)
        if f == 0:
            return ((i - j) % n, 1)
        return ((i - j + self.m) % n, 0)

    def projected_order(self):
        return 4 * self.m

    def describe(self):
        return f"Dicyclic(m={self.m})"


@dataclass(frozen=True)
class Heisenberg(Backend):
    """Upper unitriangular 3x3 matrices over Z/p as triples (x, y, z)."""

    p: int

    def identity(self):
        return (0, 0, 0)

    def generators(self):
        return [(1, 0, 0), (0, 1, 0)]

    def mul(self, a, b):
        p = self.p
        return ((a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2] + a[0] * b[1]) % p)

    def projected_order(self):
        return self.p**3

    def describe(self):
        return f"Heisenberg(p={self.p})"


@dataclass(frozen=True, eq=False)
class DirectProduct(Backend):
    """Keys are pairs of ids into the two factor groups."""

    left: "FiniteGroup"
    right: "FiniteGroup"

    def identity(self):
        return (0, 0)

    def generators(self):
        return [(g, 0) for g in self.left.generators] + [(0, h) for h in self.right.generators]

    def mul(self, a, b):
        return (self.left.mul(a[0], b[0]), self.right.mul(a[1], b[1]))

    def projected_order(self):
        return self.left.order * self.right.order

    def describe(self):
        return f"DirectProduct({self.left.describe()}, {self.right.describe()})"


def _mat_pow(m: np.ndarray, k: int, moduli: np.ndarray) -> np.ndarray:
    r = m.shape[0]
    out = np.eye(r, dtype=np.int64)
    for _ in range(k):
        out = (m @ out) % moduli[:, None]
    return out


@dataclass(frozen=True, eq=False)
class Semidirect(Backend):
    """(Z/n1 x ... x Z/nr) ⋊ Z/k where the generator of Z/k acts by ``matrix``.

    The action sends an exponent vector v to ``matrix @ v``: column j holds the
    exponents of the image of the j-th normal generator. Keys are
    ``(h_1, ..., h_r, t)``.
    """

    moduli: tuple[int, ...]
    k: int
    matrix: tuple[tuple[int, ...], ...]
    _powers: list = field(default_factory=list, init=False, repr=False)

    def __post_init__(self):
        r = len(self.moduli)
        if self.k < 1:
            raise InvalidAction("acting cyclic group must have order >= 1")
        if len(self.matrix) != r or any(len(row) != r for row in self.matrix):
            raise InvalidAction(f"action matrix must be {r}x{r} for normal part {self.moduli}")
        mod = np.array(self.moduli, dtype=np.int64)
        m = np.array(self.matrix, dtype=np.int64).reshape(r, r) % mod[:, None]
        _check_automorphism(m, mod)
        order = automorphism_order(m, mod)
        if self.k % order:
            raise InvalidAction(
                f"action has order {order}, which does not divide {self.k}"
            )
        powers = [_mat_pow(m, t, mod) for t in range(order)]
        # powers[t % order] gives phi^t
        self._powers.extend(powers)

    def _act(self, t: int, h: tuple) -> tuple:
        m = self._powers[t % len(self._powers)]
        return tuple(
            int(sum(int(m[i, j]) * h[j] for j in range(len(h))) % n)
            for i, n in enumerate(self.moduli)
        )

    def identity(self):
        return (0,) * (len(self.moduli) + 1)

    def generators(self):
        r = len(self.moduli)
        gens = [tuple(int(i == j) for j in range(r)) + (0,) for i, n in enumerate(self.moduli) if n > 1]
        if self.k > 1:
            gens.append((0,) * r + (1,))
        return gens

    def mul(self, a, b):
        h1, t1 = a[:-1], a[-1]
        h2, t2 = b[:-1], b[-1]
        img = self._act(t1, h2)
        h = tuple((x + y) % n for x, y, n in zip(h1, img, self.moduli))
        return h + ((t1 + t2) % self.k,)

    def act(self, t: int, h: tuple) -> tuple:
        """phi^t(h) for a normal-part exponent vector h."""
        return self._act(t, h)

    def projected_order(self):
        return int(np.prod(self.moduli, dtype=object)) * self.k

    def describe(self):
        normal = " x ".join(f"Z{n}" for n in self.moduli)
        return f"Semidirect(({normal}) x| Z{self.k}, {self.matrix})"


def _all_vectors(mod: np.ndarray) -> np.ndarray:
    grids = np.meshgrid(*[np.arange(int(n)) for n in mod], indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)


def _encode(vecs: np.ndarray, mod: np.ndarray) -> np.ndarray:
    code = np.zeros(len(vecs), dtype=np.int64)
    for i, n in enumerate(mod):
        code = code * int(n) + vecs[:, i]
    return code


def _check_automorphism(m: np.ndarray, mod: np.ndarray) -> None:
    """Exhaustive homomorphism and bijectivity check over the normal part."""
    vecs = _all_vectors(mod)
    images = (vecs @ m.T) % mod
    codes = _encode(images, mod)
    if len(np.unique(codes)) != len(vecs):
        raise InvalidAction("action matrix is not bijective on the normal part")
    for v in vecs:
        sums = (vecs + v) % mod
        lhs = (sums @ m.T) % mod
        rhs = (images + (m @ v)) % mod
        if not np.array_equal(lhs, rhs):
            raise InvalidAction("action matrix is not a homomorphism of the normal part")


def automorphism_order(m: np.ndarray, mod: np.ndarray) -> int:
    r = m.shape[0]
    ident = np.eye(r, dtype=np.int64) % mod[:, None]
    cur = m.copy()
    k = 1
    while not np.array_equal(cur, ident):
        cur = (m @ cur) % mod[:, None]
        k += 1
    return k


@dataclass(frozen=True, eq=False)
class CayleyTable(Backend):
    """Group given by an explicit multiplication table on ``0..order-1``.

    ``gens`` may be omitted, in which case every element is a generator.
    """

    table: np.ndarray
    gens: tuple[int, ...] | None = None
    labels: Sequence | None = None

    def __post_init__(self):
        t = np.asarray(self.table)
        n = t.shape[0]
        if t.shape != (n, n) or n == 0:
            raise InvalidBackend("Cayley table must be square and non-empty")
        if t.min() < 0 or t.max() >= n:
            raise InvalidBackend("Cayley table entries out of range")
        ident = np.arange(n)
        rows = [e for e in range(n) if np.array_equal(t[e], ident) and np.array_equal(t[:, e], ident)]
        if not rows:
            raise InvalidBackend("Cayley table has no identity")
        object.__setattr__(self, "_identity", rows[0])
        if n <= CAYLEY_VALIDATION_LIMIT:
            if not (t == rows[0]).any(axis=1).all():
                raise InvalidBackend("Cayley table lacks inverses")
            for a in range(n):
                # (ab)c against a(bc) for all b, c
                if not np.array_equal(t[t[a]], t[a][t]):
                    raise InvalidBackend("Cayley table is not associative")

    @property
    def order(self) -> int:
        return int(np.asarray(self.table).shape[0])

    def identity(self):
        return self._identity

    def generators(self):
        if self.gens is None:
            return list(range(self.order))
        return list(self.gens)

    def mul(self, a, b):
        return int(self.table[a, b])

    def projected_order(self):
        return self.order

    def describe(self):
        return f"CayleyTable(order={self.order})"

