"""Obstruction verdicts and Hilbert-scheme dimensions for curves on the cubic.

Everything is driven by the adjoint class L = C + 3K and its cohomology on
the surface: h1(S,-L) is the cubic-normality defect of C and h2(S,-L) =
h0(S, C+4K) is the part of the normal-bundle H^1 coming from the surface.
When both are nonzero, a line pairing negatively with L can certify that
the Hilbert scheme is singular at [C]: multiplicity 1 always does, and
multiplicity 2 or 3 does when an explicit restriction map is surjective.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import cohomology, h0, is_effective, is_nef
from .curve import abnormality, invariants, require_smooth_member
from .errors import DegreeTooSmall, DprimeNotNef, InvalidK, NotALine
from .lattice import K, DivisorClass, lines27


def restriction_surjective(delta: DivisorClass, e: DivisorClass) -> bool:
    """Is H0(S, Delta) -> H0(E, Delta|E) onto, for a line E?

    E is a P^1, so the target has dimension Delta.E + 1 (or 0 when the
    degree is negative), and the kernel of the restriction is H0(S, Delta-E).
    """
    if e.square != -1 or K.dot(e) != -1:
        raise NotALine(f"{e} is not a line class")
    deg = delta.dot(e)
    target = deg + 1 if deg >= 0 else 0
    return h0(delta) - h0(delta - e) == target


@dataclass(frozen=True, slots=True)
class ObstructionVerdict:
    kind: str  # "Unobstructed" | "Obstructed" | "Undetermined"
    vanishing: tuple[str, ...] = ()
    witness_line: DivisorClass | None = None
    m: int | None = None
    rule: str | None = None  # "m=1" | "rho-surjective"
    reason: str | None = None
    witnesses: tuple[tuple[DivisorClass, int, str], ...] = ()


def classify(c: DivisorClass) -> ObstructionVerdict:
    """Unobstructed / Obstructed / Undetermined at [C] in the Hilbert scheme.

    Scans the 27 lines in enumeration order; the first line that certifies
    an obstruction is reported as the witness, all of them are kept as
    diagnostics.  A line with m = -L.E in {2,3} certifies only when the
    restriction of Delta = L + K - 2mE to E is surjective; if no line
    certifies, the verdict is Undetermined (never guessed).
    """
    std = require_smooth_member(c)
    L = std + 3 * K
    triple = cohomology(-L)
    vanishing = tuple(name for name, v in (("h1", triple.h1), ("h2", triple.h2)) if v == 0)
    if vanishing:
        return ObstructionVerdict(kind="Unobstructed", vanishing=vanishing)
    # With h1 and h2 both nonzero, L+K is effective and L is not nef.
    assert is_effective(L + K) and not is_nef(L)
    witnesses: list[tuple[DivisorClass, int, str]] = []
    for e in lines27():
        m = -L.dot(e)
        if m <= 0:
            continue
        assert m <= 3, f"fixed multiplicity {m} > 3 for smooth member {std}"
        if m == 1:
            witnesses.append((e, m, "m=1"))
        else:
            delta = L + K - (2 * m) * e
            if restriction_surjective(delta, e):
                witnesses.append((e, m, "rho-surjective"))
    if witnesses:
        e, m, rule = witnesses[0]
        return ObstructionVerdict(
            kind="Obstructed", witness_line=e, m=m, rule=rule, witnesses=tuple(witnesses)
        )
    return ObstructionVerdict(
        kind="Undetermined",
        reason="every line with -L.E > 0 has m in {2,3} and a non-surjective restriction",
    )


def h1_normal(c: DivisorClass) -> int:
    """h1 of the normal bundle of a smooth member: h0(S, C + 4K)."""
    std = require_smooth_member(c)
    return h0(std + 4 * K)


def h0_normal(c: DivisorClass) -> int:
    """h0 of the normal bundle: 4d + h1(normal bundle)."""
    std = require_smooth_member(c)
    d, g = invariants(std)
    val = 4 * d + h1_normal(std)
    if d > 9:
        assert val == d + g + 18 + abnormality(std, 3)
    return val


def flag_dim(c: DivisorClass) -> int:
    """Dimension of the incidence family {(curve, cubic)}: d + g + 18."""
    std = require_smooth_member(c)
    d, g = invariants(std)
    return d + g + 18


@dataclass(frozen=True, slots=True)
class HilbertDimResult:
    kind: str  # "exact" | "interval"
    method: str  # "smooth-point" | "theorem-1.1" | "prop-4.5" | "theorem-4.3"
    value: int | None = None
    lo: int | None = None
    hi: int | None = None


def _exact(value: int, method: str, d: int) -> HilbertDimResult:
    assert value >= 4 * d
    return HilbertDimResult(kind="exact", method=method, value=value)


def _interval(lo: int, hi: int, method: str) -> HilbertDimResult:
    assert lo <= hi
    return HilbertDimResult(kind="interval", method=method, lo=lo, hi=hi)


def hilbert_dim(c: DivisorClass) -> HilbertDimResult:
    """Local dimension of the Hilbert scheme of space curves at [C] (d > 9).

    Branches, in order: a vanishing h1(S,-L) or h2(S,-L) makes [C] a smooth
    point of dimension 4d + h2; an obstructed curve with g >= 3d-18 that is
    linearly and quadratically normal has dimension d+g+18; an obstructed
    curve with h2 = 1 has dimension d+g+17+h1; otherwise only the interval
    [d+g+18+h1-h2, d+g+18+h1] survives, with the top end dropped by 1 when
    the curve is known to be obstructed.
    """
    std = require_smooth_member(c)
    d, g = invariants(std)
    if d <= 9:
        raise DegreeTooSmall(f"dimension rules require degree > 9, got d={d}")
    h1l = abnormality(std, 3)
    h2l = h0(std + 4 * K)
    if h1l == 0 or h2l == 0:
        return _exact(4 * d + h2l, "smooth-point", d)
    lo = d + g + 18 + h1l - h2l
    hi = d + g + 18 + h1l
    verdict = classify(std)
    if verdict.kind == "Obstructed":
        if g >= 3 * d - 18 and abnormality(std, 1) == 0 and abnormality(std, 2) == 0:
            if h2l == 1:
                # both exact rules fire; they must agree
                assert d + g + 18 == d + g + 17 + h1l
            return _exact(d + g + 18, "theorem-1.1", d)
        if h2l == 1:
            return _exact(d + g + 17 + h1l, "prop-4.5", d)
        return _interval(lo, hi - 1, "theorem-4.3")
    return _interval(lo, hi, "theorem-4.3")


@dataclass(frozen=True, slots=True)
class KleppeVerdict:
    kind: str  # "NotApplicable" | "ProvenTheorem1" | "KnownRange" | "Open"
    failed_hypothesis: str | None = None
    dim: int | None = None
    range_tag: str | None = None


def kleppe_verdict(c: DivisorClass) -> KleppeVerdict:
    """Status of the maximal-family question for the class.

    Hypotheses checked in order: d > 9, g >= 3d-18, linear normality and a
    nonzero cubic-normality defect.  A quadratically normal class is settled
    (dimension d+g+18); otherwise the (d,g) region may fall in one of the
    two previously known ranges, else the question is open here.
    """
    std = require_smooth_member(c)
    d, g = invariants(std)
    if d <= 9:
        return KleppeVerdict(kind="NotApplicable", failed_hypothesis="d<=9")
    if g < 3 * d - 18:
        return KleppeVerdict(kind="NotApplicable", failed_hypothesis="g<3d-18")
    if abnormality(std, 1) != 0:
        return KleppeVerdict(kind="NotApplicable", failed_hypothesis="not-linearly-normal")
    if abnormality(std, 3) == 0:
        return KleppeVerdict(kind="NotApplicable", failed_hypothesis="h1_ic3=0")
    if abnormality(std, 2) == 0:
        return KleppeVerdict(kind="ProvenTheorem1", dim=d + g + 18)
    if 14 <= d <= 17 and 8 * (g + 1) > d * d - 4:
        return KleppeVerdict(kind="KnownRange", range_tag="d14-17")
    if d >= 18 and 8 * (g - 7) > (d - 2) ** 2:
        return KleppeVerdict(kind="KnownRange", range_tag="d18+")
    return KleppeVerdict(kind="Open")


def gen_obstructed(k: int, dprime: tuple[int, int, int, int, int, int] = (0, 0, 0, 0, 0, 0)) -> DivisorClass:
    """An obstructed class (14-k+a; b1+4,...,b5+4, k) from k in 0..2 and a
    nef seed (a; b1..b5) on the blow-down along e6.

    The seed must satisfy a >= b1+b2+b3 and b1 >= ... >= b5 >= 0; the result
    meets e6 in k and always classifies as Obstructed.
    """
    if not 0 <= k <= 2:
        raise InvalidK(f"k must be 0, 1 or 2, got {k}")
    a, *b = (int(x) for x in dprime)
    if len(b) != 5:
        raise DprimeNotNef(f"seed needs six entries (a;b1..b5), got {dprime}")
    if not all(b[i] >= b[i + 1] for i in range(4)) or b[4] < 0 or a < b[0] + b[1] + b[2]:
        raise DprimeNotNef(f"seed ({a};{','.join(map(str, b))}) fails b1>=...>=b5>=0, a>=b1+b2+b3")
    out = DivisorClass(14 - k + a, tuple(x + 4 for x in b) + (k,))
    e6 = lines27()[5]
    assert out.dot(e6) == k
    assert classify(out).kind == "Obstructed"
    return out
