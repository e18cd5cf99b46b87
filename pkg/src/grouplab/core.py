"""Dense-id finite groups built by closing a backend's generators."""

from __future__ import annotations

import os
from collections import Counter
from functools import cached_property
from typing import Hashable, Iterable

import numpy as np

from .backends import Backend
from .errors import BudgetExceeded, InvalidBackend
from .numtheory import lcm_all

DEFAULT_ELEMENT_BUDGET = 2_000_000
TABLE_LIMIT = 4096
BUDGET_ENV = "GROUPLAB_BUDGET"


def default_element_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
        if value < 1:
            raise ValueError(f"{BUDGET_ENV} must be positive")
        return value
    return DEFAULT_ELEMENT_BUDGET


class FiniteGroup:
    """A finite group whose elements are the ids ``0..order-1``.

    Id 0 is the identity. Ids follow breadth-first discovery order from the
    identity, right-multiplying by the backend generators in declaration order.
    Groups of order at most ``TABLE_LIMIT`` carry a full Cayley table; larger
    groups multiply through the backend.

    Instances are never mutated after construction; the cached properties only
    memoize deterministic values.
    """

    def __init__(
        self,
        backend: Backend,
        keys: list[Hashable],
        index: dict[Hashable, int],
        generators: tuple[int, ...],
        right: np.ndarray,
        parent: np.ndarray,
        via: np.ndarray,
        name: str | None = None,
    ):
        self.backend = backend
        self.keys = keys
        self._index = index
        self.generators = generators
        # right[i, x] = x * (i-th backend generator)
        self._right = right
        self._parent = parent
        self._via = via
        self.name = name
        self.order = len(keys)
        self.table: np.ndarray | None = self._build_table() if self.order <= TABLE_LIMIT else None
        self._inv_cache: dict[int, int] = {}

    def __repr__(self):
        label = self.name or self.backend.describe()
        return f"<FiniteGroup {label} order={self.order}>"

    def __len__(self):
        return self.order

    def describe(self) -> str:
        return self.name or self.backend.describe()

    def _build_table(self) -> np.ndarray:
        n = self.order
        dtype = np.int16 if n < 2**15 else np.int32
        # cols[y] is column y of the table: cols[y][x] = x * y
        cols = np.empty((n, n), dtype=dtype)
        cols[0] = np.arange(n, dtype=dtype)
        for y in range(1, n):
            cols[y] = self._right[self._via[y]][cols[self._parent[y]]]
        return np.ascontiguousarray(cols.T)

    def index(self, key: Hashable) -> int:
        return self._index[key]

    def contains_key(self, key: Hashable) -> bool:
        return key in self._index

    def mul(self, x: int, y: int) -> int:
        if self.table is not None:
            return int(self.table[x, y])
        return self._index[self.backend.mul(self.keys[x], self.keys[y])]

    def mul_vec(self, xs: np.ndarray, y: int) -> np.ndarray:
        """Right-multiply every id in ``xs`` by ``y``."""
        xs = np.asarray(xs, dtype=np.int64)
        if self.table is not None:
            return self.table[xs, y].astype(np.int64)
        return np.array([self.mul(int(x), y) for x in xs], dtype=np.int64)

    def inv(self, x: int) -> int:
        if self.table is not None:
            return int(self._table_inverses[x])
        if x not in self._inv_cache:
            prev, cur = 0, x
            while cur != 0:
                prev, cur = cur, self.mul(cur, x)
            self._inv_cache[x] = prev
        return self._inv_cache[x]

    @cached_property
    def _table_inverses(self) -> np.ndarray:
        # the identity id 0 is the row minimum and occurs exactly once per row
        return self.table.argmin(axis=1)

    def conj(self, g: int, x: int) -> int:
        """g x g^-1"""
        return self.mul(self.mul(g, x), self.inv(g))

    def commutator(self, x: int, y: int) -> int:
        """x^-1 y^-1 x y"""
        return self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))

    def power(self, x: int, k: int) -> int:
        out = 0
        for _ in range(k):
            out = self.mul(out, x)
        return out

    @cached_property
    def orders(self) -> np.ndarray:
        n = self.order
        out = np.zeros(n, dtype=np.int64)
        if self.table is not None:
            ids = np.arange(n)
            cur = ids.copy()
            k = 1
            while True:
                hit = (cur == 0) & (out == 0)
                out[hit] = k
                if (out > 0).all():
                    break
                cur = self.table[cur, ids]
                k += 1
            return out
        for x in range(n):
            cur, k = x, 1
            while cur != 0:
                cur = self.mul(cur, x)
                k += 1
            out[x] = k
        return out

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)

    def elements(self) -> range:
        return range(self.order)


def enumerate_elements(
    backend: Backend, budget: int | None = None, name: str | None = None
) -> FiniteGroup:
    """Close the backend's generators into a :class:`FiniteGroup`.

    Raises :class:`BudgetExceeded` as soon as the closure passes ``budget``.
    """
    if budget is None:
        budget = default_element_budget()
    projected = backend.projected_order()
    if projected is not None and projected > budget:
        raise BudgetExceeded(f"{backend.describe()} has order {projected} > budget {budget}")

    ident = backend.identity()
    gen_keys = backend.generators()
    keys: list[Hashable] = [ident]
    index: dict[Hashable, int] = {ident: 0}
    parent = [0]
    via = [0]
    right: list[list[int]] = [[] for _ in gen_keys]
    x = 0
    while x < len(keys):
        kx = keys[x]
        for gi, g in enumerate(gen_keys):
            ky = backend.mul(kx, g)
            y = index.get(ky)
            if y is None:
                y = len(keys)
                if y >= budget:
                    raise BudgetExceeded(
                        f"closure of {backend.describe()} exceeded {budget} elements"
                    )
                index[ky] = y
                keys.append(ky)
                parent.append(x)
                via.append(gi)
            right[gi].append(y)
        x += 1

    if projected is not None and projected != len(keys):
        raise InvalidBackend(
            f"{backend.describe()} closed to {len(keys)} elements, expected {projected}"
        )

    gen_ids: list[int] = []
    for g in gen_keys:
        i = index[g]
        if i != 0 and i not in gen_ids:
            gen_ids.append(i)

    n = len(keys)
    dtype = np.int32 if n < 2**31 else np.int64
    right_arr = np.array(right, dtype=dtype).reshape(len(gen_keys), n) if gen_keys else np.zeros((0, n), dtype=dtype)
    return FiniteGroup(
        backend,
        keys,
        index,
        tuple(gen_ids),
        right_arr,
        np.array(parent, dtype=np.int64),
        np.array(via, dtype=np.int64),
        name=name,
    )


def element_order(G: FiniteGroup, x: int) -> int:
    return int(G.orders[x])


def order_profile(G: FiniteGroup) -> dict[int, int]:
    """Map element order -> number of elements of that order."""
    return dict(sorted(Counter(int(o) for o in G.orders).items()))


def exponent(G: FiniteGroup) -> int:
    return lcm_all(order_profile(G))


def ids_to_mask(ids: Iterable[int], n: int) -> np.ndarray:
    mask = np.zeros(n, dtype=bool)
    mask[np.fromiter(ids, dtype=np.int64)] = True
    return mask
