from functools import lru_cache

import numpy as np
import pytest

from grouplab.backends import automorphism_order
from grouplab.constructions import realize
from grouplab.harness import load_catalog


@lru_cache(maxsize=None)
def group(expr: str):
    return realize(expr)


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


def random_semidirect_specs(count: int, max_order: int = 400, seed: int = 20240611) -> list[str]:
    """Seeded random sd(...) expressions of order at most ``max_order``.

    Half act on a cyclic group by a unit, half on Z_p x Z_p by an invertible
    matrix; the acting cyclic order is a multiple of the automorphism order.
    """
    rng = np.random.default_rng(seed)
    out: list[str] = []
    seen = set()
    while len(out) < count:
        if rng.random() < 0.5:
            n = int(rng.integers(3, 60))
            a = int(rng.integers(2, n))
            if np.gcd(a, n) != 1:
                continue
            m = automorphism_order(np.array([[a]]), np.array([n]))
            k = m * int(rng.integers(1, 4))
            if n * k > max_order:
                continue
            expr = f"sd(C{n}, C{k}, [[{a}]])"
        else:
            p = int(rng.choice([2, 3, 5]))
            mat = rng.integers(0, p, size=(2, 2))
            if round(np.linalg.det(mat)) % p == 0:
                continue
            m = automorphism_order(mat, np.array([p, p]))
            k = m * int(rng.integers(1, 3))
            if p * p * k > max_order:
                continue
            rows = ", ".join("[" + ", ".join(str(int(v)) for v in row) + "]" for row in mat)
            expr = f"sd(C{p} x C{p}, C{k}, [{rows}])"
        if expr not in seen:
            seen.add(expr)
            out.append(expr)
    return out


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.LINES:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.LINES:
            terminalreporter.write_line(line)
