"""Built-in regression table of published worked examples.

Each check recomputes a quoted value with the engine and compares.  One
check is permanently FLAGGED: for the degree-2(lam+14) family the source
prints an obstruction-space dimension of 2*lam+5, while the engine (and
the interpolation oracle) derive 2*lam+6; the row reports the discrepancy
instead of failing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import (
    adjoint_fixed_part,
    cohomology,
    euler_char,
    fixed_part,
    h0,
    is_effective,
    is_nef,
)
from .curve import abnormality, has_smooth_member, invariants, normality_profile
from .census import enumerate_families
from .lattice import K, DivisorClass, canonical, conics27, is_standard, lines27
from .obstruction import (
    classify,
    gen_obstructed,
    h0_normal,
    h1_normal,
    hilbert_dim,
    kleppe_verdict,
)
from .oracle import h0_interpolation

D = DivisorClass.of

D16G29 = D(12, 4, 4, 4, 4, 2, 2)  # d=16 g=29
MUMFORD = D(12, 4, 4, 4, 4, 4, 2)  # d=14 g=24
ABN5 = D(12, 5, 5, 2, 2, 2, 2)  # d=18 g=31, abnormality 5


def _ex_triple_deg3(lam: int) -> DivisorClass:
    return D(lam + 14, 2, 2, 2, 2, 2, 2)


def _ex_even_deg(lam: int) -> DivisorClass:
    return D(lam + 17, lam + 8, 7, 2, 2, 2, 2)


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: str  # "PASS" | "FAIL" | "FLAGGED"
    detail: str


def _eq(check_id: str, got, want) -> CheckResult:
    ok = got == want
    return CheckResult(check_id, "PASS" if ok else "FAIL", f"got {got}, expected {want}")


def _check_canonical():
    k = canonical()
    ok = k == D(-3, -1, -1, -1, -1, -1, -1) and k.square == 3
    ok = ok and all((-k).dot(line) == 1 for line in lines27())
    return CheckResult("canonical-class", "PASS" if ok else "FAIL", f"K={k}, K.K={k.square}")


def _check_lines():
    ls = lines27()
    ok = len(ls) == 27 and all(l.square == -1 and K.dot(l) == -1 for l in ls)
    return CheckResult("line-classes", "PASS" if ok else "FAIL", "27 classes with (l.l, K.l) = (-1,-1)")


def _check_conics():
    qs = conics27()
    ok = len(qs) == 27 and all(q.square == 0 and K.dot(q) == -2 for q in qs)
    ok = ok and all((-K - q) in lines27() for q in qs)
    return CheckResult("conic-classes", "PASS" if ok else "FAIL", "27 classes, residual -K-q is a line")


def _check_chi_even_family():
    c = _ex_even_deg(0)
    return _eq("chi-minus-adjoint-28-67", euler_char(-(c + 3 * K)), 1)


def _check_fixed_part_kleppe():
    z = fixed_part(D16G29 + 3 * K)
    e5, e6 = lines27()[4], lines27()[5]
    got = (z.fixed, z.nef_part)
    want = (((e5, 1), (e6, 1)), D(3, 1, 1, 1, 1, 0, 0))
    return _eq("fixed-part-16-29", got, want)


def _check_fixed_part_five_lines():
    z = fixed_part(D(3, 2, 2, -1, -1, -1, -1))
    got = (len(z.fixed), all(m == 1 for _, m in z.fixed), z.nef_part)
    return _eq("fixed-part-18-31", got, (5, True, D(2, 1, 1, 0, 0, 0, 0)))


def _check_abnormality_triple_family():
    bad = [lam for lam in range(9) if abnormality(_ex_triple_deg3(lam), 3) != 6]
    return _eq("cubic-defect-deg-3lam30", bad, [])


def _check_abnormality_even_family():
    bad = [lam for lam in range(9) if abnormality(_ex_even_deg(lam), 3) != 5]
    return _eq("cubic-defect-deg-2lam28", bad, [])


def _check_obstruction_space_even_family():
    # The engine derives h0(C+4K) = 2*lam+6; the source prints 2*lam+5.
    got = [h0(_ex_even_deg(lam) + 4 * K) for lam in range(9)]
    want = [2 * lam + 6 for lam in range(9)]
    if got != want:
        return CheckResult("obstruction-space-deg-2lam28", "FAIL", f"engine gave {got}, derived value is {want}")
    return CheckResult(
        "obstruction-space-deg-2lam28",
        "FLAGGED",
        "reference prints 2*lam+5, engine derives 2*lam+6 (oracle agrees)",
    )


def _check_normal_bundle_triple_family():
    bad = [
        lam
        for lam in range(9)
        if h1_normal(_ex_triple_deg3(lam)) != (lam + 4) * (lam + 3) // 2
    ]
    return _eq("normal-bundle-h1-deg-3lam30", bad, [])


def _check_normality_kleppe():
    rep = normality_profile(D16G29)
    got = (rep.degree, rep.genus, rep.abnormality, rep.s_invariant)
    return _eq("normality-16-29", got, (16, 29, {1: 0, 2: 0, 3: 2}, 3))


def _check_adjoint_abn5():
    z = adjoint_fixed_part(ABN5, 3)
    lm12 = lines27()[6]
    got = (len(z.fixed), all(m == 1 for _, m in z.fixed), any(l == lm12 for l, _ in z.fixed), abnormality(ABN5, 3))
    return _eq("adjoint-fixed-part-18-31", got, (5, True, True, 5))


def _check_classify_kleppe():
    v = classify(D16G29)
    got = (v.kind, v.witness_line, v.m, v.rule)
    return _eq("classify-16-29", got, ("Obstructed", lines27()[4], 1, "m=1"))


def _check_classify_mumford():
    c = gen_obstructed(2)
    v = classify(c)
    got = (c, invariants(c), v.kind, v.m, v.rule)
    return _eq("classify-14-24", got, (MUMFORD, (14, 24), "Obstructed", 1, "m=1"))


def _check_hilbert_kleppe():
    r = hilbert_dim(D16G29)
    got = (r.kind, r.value, r.method, h0_normal(D16G29), h1_normal(D16G29))
    return _eq("hilbert-dim-16-29", got, ("exact", 64, "prop-4.5", 65, 1))


def _check_hilbert_triple_lam0():
    c = _ex_triple_deg3(0)
    r = hilbert_dim(c)
    got = (invariants(c), r.kind, r.value, r.method)
    return _eq("hilbert-dim-30-72", got, ((30, 72), "exact", 120, "theorem-1.1"))


def _check_hilbert_mumford():
    r = hilbert_dim(MUMFORD)
    got = (r.kind, r.value, r.method, h0_normal(MUMFORD))
    return _eq("hilbert-dim-14-24", got, ("exact", 56, "theorem-1.1", 57))


def _check_kleppe_verdicts():
    v1 = kleppe_verdict(_ex_triple_deg3(0))
    v2 = kleppe_verdict(D16G29)
    got = (v1.kind, v1.dim, v2.kind, v2.failed_hypothesis)
    return _eq("maximality-verdicts", got, ("ProvenTheorem1", 120, "NotApplicable", "g<3d-18"))


def _check_census_rows():
    got = (
        D16G29 in enumerate_families(16, 29),
        MUMFORD in enumerate_families(14, 24),
        _ex_triple_deg3(0) in enumerate_families(30, 72),
        _ex_even_deg(0) in enumerate_families(28, 67),
    )
    return _eq("census-membership", got, (True, True, True, True))


def _check_oracle_small():
    got = (
        h0_interpolation(-K, seed=0),
        h0_interpolation(D(1, 1, 1, 0, 0, 0, 0), seed=0),
        h0_interpolation(D16G29 + 4 * K, seed=0),
    )
    return _eq("oracle-spot-values", got, (4, 1, 1))


def _check_misc_engine_facts():
    c = _ex_triple_deg3(0)
    got = (
        is_standard(D16G29),
        has_smooth_member(D16G29),
        invariants(D16G29),
        is_nef(D16G29 + 3 * K),
        is_effective(D(0, 0, 0, 0, 0, -2, -2)),
        cohomology(-(c + 3 * K)).h1,
        h0(D16G29 + 4 * K),
    )
    return _eq("engine-spot-values", got, (True, True, (16, 29), False, True, 6, 1))


ALL_CHECKS = (
    _check_canonical,
    _check_lines,
    _check_conics,
    _check_misc_engine_facts,
    _check_chi_even_family,
    _check_fixed_part_kleppe,
    _check_fixed_part_five_lines,
    _check_adjoint_abn5,
    _check_abnormality_triple_family,
    _check_abnormality_even_family,
    _check_obstruction_space_even_family,
    _check_normal_bundle_triple_family,
    _check_normality_kleppe,
    _check_classify_kleppe,
    _check_classify_mumford,
    _check_hilbert_kleppe,
    _check_hilbert_triple_lam0,
    _check_hilbert_mumford,
    _check_kleppe_verdicts,
    _check_census_rows,
    _check_oracle_small,
)


def run_checks() -> tuple[CheckResult, ...]:
    return tuple(fn() for fn in ALL_CHECKS)
