"""Independent h0 oracle: interpolation at six random rational points.

A class (a; b1..b6) with bi >= 0 counts plane curves of degree a with a
point of multiplicity >= bi at each of six general points, so h0 is

    (a+1)(a+2)/2  -  rank(vanishing conditions)

with one row per partial derivative of order < bi per point.  The rank is
computed exactly (fraction-free elimination over the integers, no floating
point); negative bi are first clamped to 0 (forced fixed exceptional
components do not change h0) and a < 0 gives 0 outright.

Points are drawn from a small integer grid, checked exactly for degeneracy
(no three collinear, no conic through all six) and resampled on failure.
Ranks at special points can only drop, dropping the section count's
reliability upward, so the oracle reruns with two further seeds and keeps
the minimum section count.  This module never feeds the cohomology engine;
it exists to contradict it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import DegeneratePoints
from .lattice import DivisorClass

try:  # plain Python ints work too, gmpy2 just speeds the big minors up
    from gmpy2 import mpz
except ImportError:  # pragma: no cover
    mpz = int

COORD_MAX = 99  # grid height; well under the 10^4 cap, keeps minors small


def exact_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    rows = [[mpz(x) for x in row] for row in rows if any(row)]
    rank = 0
    prev = mpz(1)
    while rows and rows[0]:
        piv_idx = next((i for i, r in enumerate(rows) if r[0]), None)
        if piv_idx is None:
            rows = [r[1:] for r in rows]
            continue
        pivot_row = rows.pop(piv_idx)
        piv = pivot_row[0]
        rank += 1
        nxt = []
        for r in rows:
            f = r[0]
            nr = [(piv * r[j] - f * pivot_row[j]) // prev for j in range(1, len(r))]
            if any(nr):
                nxt.append(nr)
        rows = nxt
        prev = piv
    return rank


@dataclass(frozen=True)
class PointConfig:
    seed: int
    points: tuple[tuple[int, int], ...]


def _general_position(pts) -> bool:
    for (x1, y1), (x2, y2), (x3, y3) in combinations(pts, 3):
        if (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1) == 0:
            return False
    conic = [[x * x, x * y, y * y, x, y, 1] for x, y in pts]
    return exact_rank(conic) == 6


@lru_cache(maxsize=None)
def point_config(seed: int) -> PointConfig:
    """Six exact points in general position, deterministic per seed."""
    rng = random.Random(seed)
    for _ in range(10):
        pts = tuple((rng.randint(1, COORD_MAX), rng.randint(1, COORD_MAX)) for _ in range(6))
        if len(set(pts)) == 6 and _general_position(pts):
            return PointConfig(seed=seed, points=pts)
    raise DegeneratePoints(f"no general-position sample after 10 tries (seed {seed})")


def _monomials(a: int) -> list[tuple[int, int]]:
    return [(u, s - u) for s in range(a + 1) for u in range(s, -1, -1)]


def _condition_rows(a: int, mults, cfg: PointConfig):
    mons = _monomials(a)
    rows = []
    for (x, y), m in zip(cfg.points, mults):
        if m <= 0:
            continue
        xp = [1] * (a + 1)
        yp = [1] * (a + 1)
        for i in range(1, a + 1):
            xp[i] = xp[i - 1] * x
            yp[i] = yp[i - 1] * y
        for j in range(m):
            for k in range(m - j):
                rows.append(
                    [
                        math.perm(u, j) * math.perm(v, k) * xp[u - j] * yp[v - k]
                        if u >= j and v >= k
                        else 0
                        for u, v in mons
                    ]
                )
    return rows


@lru_cache(maxsize=100_000)
def _h0_at(d: DivisorClass, seed: int) -> int:
    cfg = point_config(seed)
    mults = [max(x, 0) for x in d.b]
    n = (d.a + 1) * (d.a + 2) // 2
    return n - exact_rank(_condition_rows(d.a, mults, cfg))


def h0_interpolation(d: DivisorClass, seed: int = 0) -> int:
    """h0 of the class by exact interpolation, minimized over three seeds."""
    if d.a < 0:
        return 0
    if all(x <= 0 for x in d.b):
        return (d.a + 1) * (d.a + 2) // 2
    clamped = DivisorClass(d.a, tuple(max(x, 0) for x in d.b))
    return min(_h0_at(clamped, s) for s in (seed, seed + 1, seed + 2))
