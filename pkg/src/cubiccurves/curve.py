"""Numerical invariants of curve classes and their normality profile.

A class C cuts out curves of degree d = -K.C and arithmetic genus
g = 1 + (C.C + K.C)/2 in P^3.  The linear system |C| contains a smooth
connected member exactly when the standard form has a > b1 and b6 >= 0.
The n-normality defect of such a curve is h1 of the ideal sheaf twisted by
n, which lives on the surface as h1(S, -(C + nK)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import cohomology, h0
from .errors import NonPositiveDegree, NotSmoothMember
from .lattice import K, DivisorClass, reduce_to_standard


def invariants(c: DivisorClass) -> tuple[int, int]:
    """(degree, genus) = (-K.C, 1 + (C.C + K.C)/2)."""
    d = -K.dot(c)
    t = c.square + K.dot(c)
    assert t % 2 == 0
    return d, 1 + t // 2


def hodge_genus_bound(d: int) -> int:
    """Largest genus of a smooth member of degree d: 1 + (d-3)d/2."""
    if d <= 0:
        raise NonPositiveDegree(f"degree must be positive, got {d}")
    return 1 + (d - 3) * d // 2


def has_smooth_member(c: DivisorClass) -> bool:
    """True when |C| contains a smooth connected curve (standard a > b1, b6 >= 0)."""
    s = reduce_to_standard(c).standard
    return s.a > s.b[0] and s.b[5] >= 0


def require_smooth_member(c: DivisorClass) -> DivisorClass:
    """Standard form of c, or NotSmoothMember."""
    red = reduce_to_standard(c)
    s = red.standard
    if not (s.a > s.b[0] and s.b[5] >= 0):
        raise NotSmoothMember(f"{c} has no smooth connected member (standard form {s})")
    return s


def abnormality(c: DivisorClass, n: int) -> int:
    """n-normality defect h1(ideal sheaf twisted by n) = h1(S, -(C + nK))."""
    return cohomology(-(c + n * K)).h1


@dataclass(frozen=True, slots=True)
class CurveReport:
    cls: DivisorClass
    degree: int
    genus: int
    smooth_member: bool
    abnormality: dict[int, int]
    s_invariant: int


def normality_profile(c: DivisorClass) -> CurveReport:
    """Degree, genus and the n-normality defects for n = 1, 2, 3.

    s_invariant is the least n with h0(twisted ideal sheaf) > 0; it is at
    most 3 because the cubic itself always contains the curve.
    """
    std = require_smooth_member(c)
    d, g = invariants(std)
    assert 0 <= g <= hodge_genus_bound(d)
    defects = {n: abnormality(std, n) for n in (1, 2, 3)}
    # Monotone once C+nK is effective with positive square: n-normal implies
    # m-normal for m < n.
    for n in (2, 3):
        ln = std + n * K
        if defects[n] == 0 and ln.square > 0 and h0(ln) > 0:
            assert all(defects[m] == 0 for m in range(1, n))
    s = 3
    for n in (1, 2):
        if h0(-(std + n * K)) > 0:
            s = n
            break
    return CurveReport(
        cls=std,
        degree=d,
        genus=g,
        smooth_member=True,
        abnormality=defects,
        s_invariant=s,
    )
