"""Brute-force reference computations, independent of the package under test.

Everything here works on frozensets of ints and enumerates subsets through
bitmasks, never through the package's closure or face code.
"""

from __future__ import annotations

import random
from math import comb


def nonempty_subsets(vertices) -> set[frozenset[int]]:
    vs = sorted(vertices)
    out = set()
    for mask in range(1, 1 << len(vs)):
        out.add(frozenset(v for bit, v in enumerate(vs) if mask >> bit & 1))
    return out


def closure(family) -> set[frozenset[int]]:
    """Union of all non-empty subsets of all members."""
    out: set[frozenset[int]] = set()
    for s in family:
        out |= nonempty_subsets(s)
    return out


def is_closed(family) -> bool:
    fam = {frozenset(s) for s in family}
    return closure(fam) == fam


def proper_face_members(family) -> set[frozenset[int]]:
    """Members that are a proper subset of another member, by pairwise scan."""
    fam = [frozenset(s) for s in family]
    return {t for t in fam if any(t < s for s in fam)}


def maximal_members(family) -> set[frozenset[int]]:
    fam = [frozenset(s) for s in family]
    return {t for t in fam if not any(t < s for s in fam)}


def f_vector(family) -> tuple[int, ...]:
    fam = [frozenset(s) for s in family]
    if not fam:
        return ()
    top = max(len(s) for s in fam)
    return tuple(sum(1 for s in fam if len(s) == k) for k in range(1, top + 1))


def full_f_vector(n: int) -> tuple[int, ...]:
    return tuple(comb(n, k) for k in range(1, n + 1))


def random_family(rng: random.Random, max_vertices: int = 10, max_card: int = 6, max_size: int = 8):
    n = rng.randint(1, max_vertices)
    family = []
    for _ in range(rng.randint(1, max_size)):
        k = rng.randint(1, min(max_card, n))
        family.append(tuple(sorted(rng.sample(range(n), k))))
    return family


def random_closed_family(rng: random.Random, **kw) -> set[frozenset[int]]:
    return closure(random_family(rng, **kw))
