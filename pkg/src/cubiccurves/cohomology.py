"""Cohomology of divisor classes on the cubic surface.

h0 is computed by fixed-component reduction: while some line pairs
negatively with D, that line is a fixed component and can be subtracted
without changing h0; the loop stops at a nef class N (where h0 = chi(N),
since h1 = h2 = 0 for nef classes on a del Pezzo surface), at 0, or at a
class of non-positive anticanonical degree (not effective, h0 = 0).  h2 is
h0(K - D) by Serre duality and h1 closes the Euler characteristic.

The engine never consults the interpolation oracle; the oracle module
validates h0 independently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotEffective
from .lattice import K, ZERO, DivisorClass, degree, lines27

_LINES = lines27()


def euler_char(d: DivisorClass) -> int:
    """Riemann-Roch: chi(D) = D.(D - K)/2 + 1 (always an integer)."""
    t = d.dot(d - K)
    assert t % 2 == 0
    return t // 2 + 1


def is_nef(d: DivisorClass) -> bool:
    """Nef on the cubic surface amounts to D.l >= 0 against all 27 lines."""
    return all(d.dot(line) >= 0 for line in _LINES)


def _terminal_nef(d: DivisorClass) -> DivisorClass | None:
    """Strip fixed lines until nef; None when the class is not effective.

    Subtracts, per pass, every line l with D.l < 0 taken -D.l times.  Each
    atomic subtraction happens while the running class still pairs
    negatively with l, so h0 is preserved throughout, and -K.D drops by at
    least 1 per pass, which bounds the loop.
    """
    cur = d
    while True:
        if cur == ZERO:
            return cur
        if degree(cur) <= 0:
            return None
        mu = [cur.dot(line) for line in _LINES]
        if all(m >= 0 for m in mu):
            return cur
        a, b = cur.a, list(cur.b)
        for m, line in zip(mu, _LINES):
            if m < 0:
                a += m * line.a
                for i in range(6):
                    b[i] += m * line.b[i]
        cur = DivisorClass(a, tuple(b))


def is_effective(d: DivisorClass) -> bool:
    return _terminal_nef(d) is not None


def h0(d: DivisorClass) -> int:
    nef = _terminal_nef(d)
    return 0 if nef is None else euler_char(nef)


@dataclass(frozen=True, slots=True)
class CohomologyTriple:
    h0: int
    h1: int
    h2: int
    chi: int


def cohomology(d: DivisorClass) -> CohomologyTriple:
    """The full triple; h2(D) = h0(K - D), h1 = h0 + h2 - chi (always >= 0)."""
    n0 = h0(d)
    n2 = h0(K - d)
    chi = euler_char(d)
    n1 = n0 + n2 - chi
    assert n1 >= 0, f"negative h1 for {d}"
    return CohomologyTriple(h0=n0, h1=n1, h2=n2, chi=chi)


@dataclass(frozen=True, slots=True)
class ZariskiDecomposition:
    """D = nef_part + sum(mult * line) with the fixed lines pairwise disjoint."""

    nef_part: DivisorClass
    fixed: tuple[tuple[DivisorClass, int], ...]


def fixed_part(d: DivisorClass) -> ZariskiDecomposition:
    """Zariski decomposition of an effective class.

    The fixed lines are exactly those with D.l < 0, with multiplicity -D.l;
    for an effective class one pass suffices, the lines are pairwise
    disjoint, and the nef part meets each of them in 0.
    """
    if not is_effective(d):
        raise NotEffective(f"{d} is not an effective class")
    fixed = tuple((line, -d.dot(line)) for line in _LINES if d.dot(line) < 0)
    nef_part = d
    for line, mult in fixed:
        nef_part = nef_part - mult * line
    assert len(fixed) <= 6
    assert all(l1.dot(l2) == 0 for i, (l1, _) in enumerate(fixed) for (l2, _) in fixed[i + 1:])
    assert is_nef(nef_part)
    assert all(nef_part.dot(line) == 0 for line, _ in fixed)
    return ZariskiDecomposition(nef_part=nef_part, fixed=fixed)


def adjoint_fixed_part(d: DivisorClass, n: int) -> ZariskiDecomposition:
    """Fixed part of D + nK: lines with D.l < n, at multiplicity n - D.l."""
    target = d + n * K
    if not is_effective(target):
        raise NotEffective(f"adjoint class {target} (n={n}) is not effective")
    return fixed_part(target)
