"""Structure of the transform's range: bases, Gram reports, spectra.

Three views of the same operator family live here.  Index-set bases
describe the spaces P_n(C(A^2_ell)) and their finite-dimensional
complements; the psi-Gram computations expose the orthogonality
selection rule <psi_{m,n}, psi_{j,k}> = 0 unless m - j = n - k; and a
truncated matrix of the transform against the normalized basis yields
singular values for compactness experiments.

The R-basis index sets are determined by a single threshold: the span
of {P_n C H_{j,ell}: j} is spanned by H_{m,n} for m >= max(0,
n - ell - 1).  The threshold decreases as ell grows, so the computed
index sets satisfy R^ell_n within R^{ell+1}_n; inclusion checks are
reported from the index sets themselves, which are exact, rather than
asserted from expectations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._ddouble import dd_mul, dd_mul_scalar
from .gaussian_quadrature import (
    PolarGrid,
    build_polar_grid,
    default_polar_grid,
    integrate_radial_weighted,
    polar_separable_quadrature,
)
from .ito_hermite import HermiteIndex, c_mn, hermite_radial_profile
from .poly_bergman import CoefficientSequence, projection_coefficient_closed
from .special_fn import factorial, kummer_terminating

__all__ = [
    "GramReport",
    "RangeBasisSpec",
    "e_ell_indices",
    "pn_cauchy_on_coeffs",
    "psi_gram",
    "r_range_inclusions",
    "range_basis_indices",
    "truncated_operator_svd",
]

_JACOBI_TOL = 1e-12
_RADIAL_CHECK_TOL = 1e-8

VARIANT_R = "R"
VARIANT_R_TILDE = "R-tilde"


@dataclass(frozen=True)
class RangeBasisSpec:
    """Which range space: variant "R" (projected image of level ell
    under the transform, inside level n) or "R-tilde" (its orthogonal
    complement's finite-dimensional counterpart)."""

    variant: str
    ell: int
    n: int

    def __post_init__(self) -> None:
        if self.variant not in (VARIANT_R, VARIANT_R_TILDE):
            raise ValueError(
                f"RangeBasisSpec variant must be '{VARIANT_R}' or '{VARIANT_R_TILDE}', "
                f"got {self.variant!r}"
            )
        if self.ell < 0:
            raise ValueError(f"RangeBasisSpec requires ell >= 0, got {self.ell}")
        if self.n < 0:
            raise ValueError(f"RangeBasisSpec requires n >= 0, got {self.n}")


def range_basis_indices(spec: RangeBasisSpec, count: int = 8) -> list[HermiteIndex]:
    """Basis index list for the requested range space.

    Variant "R": the first ``count`` indices (n+j-ell-1, n) over
    j >= max(0, ell+1-n), i.e. H_{m,n} for m >= max(0, n-ell-1).
    Variant "R-tilde": exactly the n+ell indices (k, n), k < n+ell
    (``count`` is ignored; the space is finite dimensional), empty
    when n = ell = 0.
    """
    if count < 1:
        raise ValueError(f"range_basis_indices requires count >= 1, got {count}")
    ell, n = spec.ell, spec.n
    if spec.variant == VARIANT_R_TILDE:
        return [HermiteIndex(k, n) for k in range(n + ell)]
    j0 = max(0, ell + 1 - n)
    return [HermiteIndex(n + j - ell - 1, n) for j in range(j0, j0 + count)]


def r_range_inclusions(n: int, max_ell: int) -> list[tuple[int, bool, bool]]:
    """Computed index-set inclusions between consecutive R-spaces.

    For each ell < max_ell returns (ell, forward, backward) where
    forward means the ell index set is contained in the ell+1 set and
    backward the reverse.  Containment of these tail sets is exact:
    {m >= a} is a subset of {m >= b} iff a >= b, with thresholds
    a = max(0, n-ell-1).
    """
    if max_ell < 1:
        raise ValueError(f"r_range_inclusions requires max_ell >= 1, got {max_ell}")
    out = []
    for ell in range(max_ell):
        a = max(0, n - ell - 1)
        b = max(0, n - ell - 2)
        out.append((ell, a >= b, b >= a))
    return out


def pn_cauchy_on_coeffs(seq: CoefficientSequence, n: int) -> CoefficientSequence:
    """Coefficient action of P_n after the transform on a level-ell sequence.

    Each input coefficient alpha_j lands on the single target index
    n+j-ell-1 scaled by the closed projection coefficient; indices
    with n+j-ell-1 < 0 drop out.  The output support lies inside
    range_basis_indices("R", ell, n) by construction.
    """
    if n < 0:
        raise ValueError(f"pn_cauchy_on_coeffs requires n >= 0, got n={n}")
    ell = seq.n
    out_len = max(0, n + len(seq.coeffs) - 1 - ell)
    out = [0j] * out_len
    for j, alpha in enumerate(seq.coeffs):
        coefficient, target = projection_coefficient_closed(n, j, ell)
        if target is not None:
            out[target.m] = coefficient * alpha
    return CoefficientSequence(n=n, coeffs=tuple(out))


def _psi_profile(idx: HermiteIndex, grid: PolarGrid):
    """Double-double radial profile of psi_{m,n} = -e^{-t} H_{m-1,n} on the grid."""
    h, l, freq = hermite_radial_profile(HermiteIndex(idx.m - 1, idx.n), grid.radial_t)
    damp = np.exp(-grid.radial_t)
    h, l = dd_mul(h, l, damp, np.zeros_like(damp))
    return dd_mul_scalar(h, l, -1.0) + (freq,)


def _psi_pair_radial(a: HermiteIndex, b: HermiteIndex, grid: PolarGrid) -> float:
    """Radial route to <psi_a, psi_b> for polynomial pairs (m, j >= 1).

    pi c_{m-1,n} c_{j-1,k} * integral of t^{(d_a+d_b)/2} F_a F_b e^{-3t} dt,
    with F the terminating confluent factors; an independent check on
    the grid value (series evaluation against recurrence evaluation).
    """
    m, n = a.m, a.n
    j, k = b.m, b.n
    da, db = abs(m - 1 - n), abs(j - 1 - k)
    pa, pb = min(m - 1, n), min(j - 1, k)

    def h(t):
        return (
            t ** (0.5 * (da + db))
            * kummer_terminating(pa, da + 1, t)
            * kummer_terminating(pb, db + 1, t)
        )

    radial = integrate_radial_weighted(h, 3.0, build_polar_grid(grid.n_radial, grid.n_theta, 3.0))
    return math.pi * c_mn(m - 1, n) * c_mn(j - 1, k) * radial


@dataclass(frozen=True)
class GramReport:
    """Gram matrix of psi functions with its selection-rule verdict.

    expected_zero_mask flags pairs with m - j != n - k; max_violation
    is the largest magnitude over those entries and passed reflects
    max_violation < tolerance.  radial_check_max_rel records the worst
    relative deviation of pattern-nonzero polynomial entries from the
    independent radial route.
    """

    index_pairs: tuple = field(compare=False)
    values: np.ndarray = field(compare=False)
    expected_zero_mask: np.ndarray = field(compare=False)
    max_violation: float
    tolerance: float
    passed: bool
    radial_check_max_rel: float

    def __post_init__(self) -> None:
        if (self.max_violation < self.tolerance) != self.passed:
            raise ValueError("GramReport passed flag contradicts max_violation")


def psi_gram(
    indices, grid: PolarGrid | None = None, tolerance: float = 1e-9
) -> GramReport:
    """Gram matrix <psi_a, psi_b> over the ambient Gaussian space.

    Pairs with both first indices >= 1 integrate two polynomial
    factors against the effective weight e^{-3|z|^2} on a beta = 3
    grid (the two Gaussian envelopes join the ambient weight); pairs
    involving the extended m = 0 function keep the full integrand on
    the beta = 1 grid, whose decay is only 1/|z| times Gaussian.
    Every entry reduces to a real radial profile times one angular
    frequency, so the selection rule m - j = n - k is resolved
    exactly.  Polynomial entries expected nonzero are re-derived
    through the radial confluent-series route and the worst relative
    gap is reported.
    """
    if grid is None:
        grid = default_polar_grid(1.0)
    if grid.beta != 1.0:
        raise ValueError(f"psi_gram requires a grid with beta=1, got beta={grid.beta}")
    idx = [i if isinstance(i, HermiteIndex) else HermiteIndex(*i) for i in indices]
    for i in idx:
        if i.m < 0:
            raise ValueError(f"psi_gram requires indices with m >= 0, got {i}")
    grid3 = build_polar_grid(grid.n_radial, grid.n_theta, 3.0)
    poly_profiles = {}
    psi_profiles = {}
    for i in idx:
        if i.m >= 1:
            poly_profiles[i] = hermite_radial_profile(
                HermiteIndex(i.m - 1, i.n), grid3.radial_t
            )
        psi_profiles[i] = _psi_profile(i, grid)

    size = len(idx)
    values = np.empty((size, size), dtype=complex)
    mask = np.empty((size, size), dtype=bool)
    radial_worst = 0.0
    for r, a in enumerate(idx):
        for s, b in enumerate(idx):
            mask[r, s] = (a.m - b.m) != (a.n - b.n)
            if a.m >= 1 and b.m >= 1:
                ah, al, fa = poly_profiles[a]
                bh, bl, fb = poly_profiles[b]
                rh, rl = dd_mul(ah, al, bh, bl)
                values[r, s] = polar_separable_quadrature(rh, rl, fa - fb, grid3)
                if not mask[r, s]:
                    expected = _psi_pair_radial(a, b, grid)
                    gap = abs(values[r, s] - expected) / (1.0 + abs(expected))
                    radial_worst = max(radial_worst, gap)
            else:
                ah, al, fa = psi_profiles[a]
                bh, bl, fb = psi_profiles[b]
                rh, rl = dd_mul(ah, al, bh, bl)
                values[r, s] = polar_separable_quadrature(rh, rl, fa - fb, grid)

    violation = float(np.max(np.abs(values[mask]))) if mask.any() else 0.0
    values.flags.writeable = False
    mask.flags.writeable = False
    return GramReport(
        index_pairs=tuple((a, b) for a in idx for b in idx),
        values=values,
        expected_zero_mask=mask,
        max_violation=violation,
        tolerance=float(tolerance),
        passed=violation < tolerance,
        radial_check_max_rel=radial_worst,
    )


def e_ell_indices(ell: int, count: int) -> list[HermiteIndex]:
    """Indices of the psi family spanning the ell-th angular block.

    ell >= 0 gives (i, i+ell); ell < 0 gives (i+|ell|, i); i < count.
    Distinct blocks are mutually orthogonal by the selection rule.
    """
    if count < 1:
        raise ValueError(f"e_ell_indices requires count >= 1, got {count}")
    if ell >= 0:
        return [HermiteIndex(i, i + ell) for i in range(count)]
    return [HermiteIndex(i - ell, i) for i in range(count)]


def _psi_basis_entry(psi_idx: HermiteIndex, basis_idx: HermiteIndex, grid1: PolarGrid, grid2: PolarGrid) -> float:
    """<psi_{j,k}, H_{m,n}> by the separable rule.

    For j >= 1 the polynomial factors pair with the psi envelope into
    an effective e^{-2|z|^2} weight (beta = 2 grid, exact rule); j = 0
    keeps the extended profile on the beta = 1 grid.
    """
    j, k = psi_idx.m, psi_idx.n
    if j >= 1:
        ah, al, fa = hermite_radial_profile(HermiteIndex(j - 1, k), grid2.radial_t)
        bh, bl, fb = hermite_radial_profile(basis_idx, grid2.radial_t)
        rh, rl = dd_mul(ah, al, bh, bl)
        rh, rl = dd_mul_scalar(rh, rl, -1.0)
        return complex(polar_separable_quadrature(rh, rl, fa - fb, grid2)).real
    ah, al, fa = _psi_profile(psi_idx, grid1)
    bh, bl, fb = hermite_radial_profile(basis_idx, grid1.radial_t)
    rh, rl = dd_mul(ah, al, bh, bl)
    return complex(polar_separable_quadrature(rh, rl, fa - fb, grid1)).real


def _jacobi_singular_values(a: np.ndarray) -> list[float]:
    """Singular values by one-sided Jacobi rotations, descending.

    Columns are rotated pairwise until every implicit Gram
    off-diagonal entry is below _JACOBI_TOL relative to its diagonal
    pair; sweeps visit pairs in a fixed order, so the result is
    deterministic.
    """
    a = a.copy()
    cols = a.shape[1]
    for _ in range(60):
        rotated = False
        for p in range(cols - 1):
            for q in range(p + 1, cols):
                app = float(a[:, p] @ a[:, p])
                aqq = float(a[:, q] @ a[:, q])
                apq = float(a[:, p] @ a[:, q])
                if abs(apq) <= _JACOBI_TOL * math.sqrt(app * aqq) or apq == 0.0:
                    continue
                rotated = True
                tau = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                col_p = a[:, p].copy()
                a[:, p] = c * col_p - s * a[:, q]
                a[:, q] = s * col_p + c * a[:, q]
        if not rotated:
            break
    sv = sorted((float(np.linalg.norm(a[:, p])) for p in range(cols)), reverse=True)
    return sv


def truncated_operator_svd(max_total_degree: int) -> list[float]:
    """Singular values of the transform cut to total degree <= D.

    Builds the real matrix of <C H_{j,k}, H_{m,n}> / (pi sqrt(m! n!
    j! k!)) over the basis {(m, n): m+n <= D} ordered by (m+n, m),
    then runs the one-sided Jacobi reduction.  Values come out
    descending; growing D extends the matrix, so leading values are
    nondecreasing in D.
    """
    if not 0 <= max_total_degree <= 12:
        raise ValueError(
            f"truncated_operator_svd requires 0 <= max_total_degree <= 12, "
            f"got {max_total_degree}"
        )
    basis = sorted(
        (
            HermiteIndex(m, n)
            for m in range(max_total_degree + 1)
            for n in range(max_total_degree + 1 - m)
        ),
        key=lambda i: (i.m + i.n, i.m),
    )
    grid1 = default_polar_grid(1.0)
    grid2 = default_polar_grid(2.0)
    size = len(basis)
    matrix = np.empty((size, size))
    for r, row in enumerate(basis):
        row_norm = math.pi * math.sqrt(factorial(row.m) * factorial(row.n))
        for s, col in enumerate(basis):
            col_norm = math.sqrt(factorial(col.m) * factorial(col.n))
            matrix[r, s] = _psi_basis_entry(col, row, grid1, grid2) / (row_norm * col_norm)
    return _jacobi_singular_values(matrix)
