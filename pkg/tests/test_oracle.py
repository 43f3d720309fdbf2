"""Interpolation oracle: exact rank, point configurations, h0 agreement."""

import random

import sympy

from cubiccurves.cohomology import h0
from cubiccurves.lattice import DivisorClass, K
from cubiccurves.oracle import (
    COORD_MAX,
    PointConfig,
    _general_position,
    exact_rank,
    h0_interpolation,
    point_config,
)

D = DivisorClass.of


def test_exact_rank_against_sympy():
    rng = random.Random(42)
    for trial in range(120):
        n = rng.randint(1, 8)
        m = rng.randint(1, 10)
        rows = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)]
        if trial % 3 == 0 and n >= 2:
            # force rank deficiency: make a row a combination of two others
            i, j = rng.sample(range(n), 2)
            rows[i] = [2 * a - 3 * b for a, b in zip(rows[j], rows[(j + 1) % n])]
        assert exact_rank(rows) == sympy.Matrix(rows).rank()


def test_exact_rank_edge_cases():
    assert exact_rank([]) == 0
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank([[0, 0, 3]]) == 1
    assert exact_rank([[1, 2], [2, 4], [3, 6]]) == 1


def test_point_config_deterministic():
    assert point_config(0) is point_config(0)
    assert PointConfig(0, point_config(0).points) == point_config(0)
    assert point_config(0).points != point_config(1).points
    for x, y in point_config(0).points:
        assert 1 <= x <= COORD_MAX and 1 <= y <= COORD_MAX


def test_general_position_rejects_collinear():
    pts = ((1, 1), (2, 2), (3, 3), (5, 17), (11, 40), (23, 91))
    assert not _general_position(pts)


def test_general_position_rejects_coconic():
    # six points on the parabola y = x^2, no three collinear
    pts = tuple((x, x * x) for x in range(1, 7))
    assert not _general_position(pts)


def test_general_position_accepts_sampled():
    for seed in range(5):
        assert _general_position(point_config(seed).points)


def test_h0_closed_forms():
    assert h0_interpolation(D(0, 0, 0, 0, 0, 0, 0)) == 1
    assert h0_interpolation(D(4, 0, 0, 0, 0, 0, 0)) == 15
    assert h0_interpolation(D(-2, 1, 1, 0, 0, 0, 0)) == 0
    assert h0_interpolation(D(2, -1, -3, 0, 0, 0, 0)) == 6  # clamps to plain conics


def test_h0_spot_values():
    assert h0_interpolation(-K) == 4
    assert h0_interpolation(D(1, 1, 1, 0, 0, 0, 0)) == 1
    assert h0_interpolation(D(5, 4, 3, 0, 0, 0, 0)) == 6  # superabundant
    assert h0_interpolation(D(12, 4, 4, 4, 4, 2, 2)) == 45


def test_oracle_engine_agreement_small():
    rng = random.Random(777)
    for _ in range(150):
        c = D(rng.randint(-2, 7), *(rng.randint(-2, 4) for _ in range(6)))
        for seed in (0, 3):
            assert h0_interpolation(c, seed) == h0(c), (c, seed)
