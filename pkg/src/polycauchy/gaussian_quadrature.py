"""Quadrature grids for Gaussian-weighted integrals over the plane.

Plane integrals of the form

.. math::

    \\int_{\\mathbb{C}} g(z)\\, e^{-\\beta |z|^2}\\, dx\\,dy
    = \\tfrac{1}{2} \\int_0^\\infty \\int_0^{2\\pi}
      g(\\sqrt{t}\\, e^{i\\theta})\\, e^{-\\beta t} \\, d\\theta\\, dt

are discretised by Gauss-Laguerre nodes in the squared radius t paired
with a uniform trapezoid rule in the angle.  The trapezoid rule
integrates e^{i p theta} exactly to zero for 0 < |p| < N_theta, which is
what makes index selection rules hold to machine precision on these
grids.

Laguerre nodes are found by Newton iteration on the three-term
recurrence with the classical empirical initial guesses, first in
plain doubles to relative tolerance 1e-15, then polished by two more
Newton steps in double-double arithmetic so the stored node is the
correctly rounded root and the weight 1/(x L_n'(x)^2) is accurate to
a final rounding.  The recurrence is evaluated with power-of-two
rescaling so large node counts neither overflow nor lose the ratio
L_n/L_n' needed by Newton; weights whose magnitude defeats the
double-double path fall back to log space.  Beyond roughly N_r = 186
the smallest true weights drop below the double precision range and
underflow to zero; nodes stay accurate.

Angular phase tables are built with exact reflection symmetry:
table[j + N/2] = -table[j] holds bit-for-bit (quadrant symmetry too
when 4 | N).  Summing e^{i p theta_j} over such a table cancels in
pairs, so the trapezoid rule annihilates off-pattern frequencies to
an exact floating-point zero, not merely to rounding level.

A second grid family handles the Cauchy kernel: recentred polar
coordinates xi = z + rho e^{i theta} absorb the 1/(z - xi) singularity
into the Jacobian, leaving the smooth integrand

    -(1/pi) f(z + rho e^{i theta}) e^{-|z + rho e^{i theta}|^2} e^{-i theta}

integrated by Gauss-Legendre in rho over [0, R] and the trapezoid rule
in theta.  R = |z| + radius_pad puts the Gaussian tail below 1e-60 for
the default pad of 12.

All reductions run angle-innermost, ascending node index, with Kahan
compensation, so repeated runs produce identical bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ._ddouble import dd_add, dd_div, dd_div_scalar, dd_mul, dd_mul_scalar, dd_weighted_sum
from .special_fn import kahan_sum

__all__ = [
    "PolarGrid",
    "SingularGrid",
    "angular_phase_sum",
    "build_polar_grid",
    "build_singular_grid",
    "cauchy_singular_quadrature",
    "gauss_laguerre_nodes",
    "inner_product_gaussian",
    "integrate_radial_weighted",
    "plane_quadrature",
    "polar_separable_quadrature",
]

MAX_RADIAL_NODES = 200
DEFAULT_RADIAL_NODES = 64
DEFAULT_ANGULAR_NODES = 128
DEFAULT_SINGULAR_RADIAL = 96
DEFAULT_SINGULAR_ANGULAR = 256
DEFAULT_RADIUS_PAD = 12.0

_NEWTON_TOL = 1e-15
_RESCALE_EXP = 500  # power-of-two renormalisation threshold, exact in binary


def _scaled_laguerre(n: int, x: float) -> tuple[float, float, float]:
    """L_n(x) and L_n'(x) up to a common scale 2^e; returns (p, dp, e*ln2).

    The recurrence is renormalised by exact powers of two whenever the
    iterates grow past 2^500, so the Newton ratio p/dp is always formed
    from well-scaled numbers.
    """
    if n == 0:
        return 1.0, 0.0, 0.0
    pm = 1.0
    p = 1.0 - x
    log_scale = 0.0
    for k in range(1, n):
        pm, p = p, ((2 * k + 1 - x) * p - k * pm) / (k + 1)
        if max(abs(p), abs(pm)) > 2.0**_RESCALE_EXP:
            p = math.ldexp(p, -_RESCALE_EXP)
            pm = math.ldexp(pm, -_RESCALE_EXP)
            log_scale += _RESCALE_EXP * math.log(2.0)
    dp = n * (p - pm) / x
    return p, dp, log_scale


def _scaled_laguerre_dd(n: int, zh: float, zl: float):
    """Double-double L_n and L_n' at the dd point (zh, zl).

    Same power-of-two renormalisation as the double version; returns
    (ph, pl, dph, dpl, log_scale) with the true values equal to the dd
    pairs times e^{log_scale}.
    """
    pmh, pml = 1.0, 0.0
    ph, pl = dd_add(1.0, 0.0, -zh, -zl)
    log_scale = 0.0
    for k in range(1, n):
        ah, al = dd_add(float(2 * k + 1), 0.0, -zh, -zl)
        th, tl = dd_mul(ah, al, ph, pl)
        sh, sl = dd_add(th, tl, *dd_mul_scalar(pmh, pml, -float(k)))
        nh, nl = dd_div_scalar(sh, sl, float(k + 1))
        pmh, pml, ph, pl = ph, pl, nh, nl
        if max(abs(ph), abs(pmh)) > 2.0**_RESCALE_EXP:
            ph = math.ldexp(ph, -_RESCALE_EXP)
            pl = math.ldexp(pl, -_RESCALE_EXP)
            pmh = math.ldexp(pmh, -_RESCALE_EXP)
            pml = math.ldexp(pml, -_RESCALE_EXP)
            log_scale += _RESCALE_EXP * math.log(2.0)
    dh, dl = dd_add(ph, pl, -pmh, -pml)
    dh, dl = dd_mul_scalar(dh, dl, float(n))
    dph, dpl = dd_div(dh, dl, zh, zl)
    return ph, pl, dph, dpl, log_scale


def gauss_laguerre_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for the weight e^{-x} on [0, inf), ascending.

    Newton iteration on the recurrence with the classical spacing-based
    initial guesses, finished by two double-double Newton steps so each
    stored node is the correctly rounded root.  Weights come from
    w = 1/(x L_n'(x)^2) in double-double; entries too large for that
    path are formed in log space and entries below the double-precision
    floor underflow to 0.
    """
    if n < 1:
        raise ValueError(f"gauss_laguerre_nodes requires n >= 1, got {n}")
    x = np.empty(n)
    w = np.empty(n)
    z = 0.0
    for i in range(n):
        if i == 0:
            z = 3.0 / (1.0 + 2.4 * n)
        elif i == 1:
            z += 15.0 / (1.0 + 2.5 * n)
        else:
            ai = i - 1.0
            z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - x[i - 2])
        for _ in range(100):
            p, dp, _ = _scaled_laguerre(n, z)
            step = p / dp
            z -= step
            if abs(step) <= _NEWTON_TOL * max(abs(z), 1.0):
                break
        zh, zl = z, 0.0
        for _ in range(2):
            ph, pl, dph, dpl, _ = _scaled_laguerre_dd(n, zh, zl)
            sh, sl = dd_div(ph, pl, dph, dpl)
            zh, zl = dd_add(zh, zl, -sh, -sl)
        x[i] = zh
        _, _, dph, dpl, log_scale = _scaled_laguerre_dd(n, zh, zl)
        if log_scale == 0.0 and abs(dph) < 1e140:
            dh, dl = dd_mul(dph, dpl, dph, dpl)
            dh, dl = dd_mul(dh, dl, zh, zl)
            wh, _ = dd_div(1.0, 0.0, dh, dl)
            w[i] = wh
        else:
            log_w = -math.log(zh) - 2.0 * (math.log(abs(dph)) + log_scale)
            w[i] = math.exp(log_w) if log_w > -745.0 else 0.0
    return x, w


def _phase_table(n: int) -> np.ndarray:
    """Unit phases e^{2 pi i j / n}, j = 0..n-1, with exact symmetry.

    For even n the table satisfies table[j + n/2] == -table[j]
    bit-for-bit, and for 4 | n additionally table[j + n/4] == i*table[j]
    up to real/imaginary swap; axis entries are exact (1, i, -1, -i).
    The exact antisymmetry is what lets angular sums of off-pattern
    frequencies cancel to a true zero.
    """
    table = np.empty(n, dtype=complex)
    if n % 4 == 0:
        q = n // 4
        table[0] = 1.0
        table[q] = 1j
        table[2 * q] = -1.0
        table[3 * q] = -1j
        for j in range(1, q):
            theta = 2.0 * math.pi * j / n
            c, s = math.cos(theta), math.sin(theta)
            table[j] = complex(c, s)
            table[2 * q - j] = complex(-c, s)
            table[2 * q + j] = complex(-c, -s)
            table[4 * q - j] = complex(c, -s)
    elif n % 2 == 0:
        h = n // 2
        table[0] = 1.0
        table[h] = -1.0
        for j in range(1, h):
            theta = 2.0 * math.pi * j / n
            table[j] = complex(math.cos(theta), math.sin(theta))
            table[h + j] = -table[j]
    else:
        table[0] = 1.0
        for j in range(1, n):
            theta = 2.0 * math.pi * j / n
            table[j] = complex(math.cos(theta), math.sin(theta))
    return table


@dataclass(frozen=True)
class PolarGrid:
    """Tensor grid for integrals against e^{-beta |z|^2} dx dy.

    radial_t, radial_w: Gauss-Laguerre nodes/weights in t = |z|^2,
    already rescaled for the weight e^{-beta t}.  phase holds the
    angular unit phases with exact half-turn antisymmetry for even
    n_theta.  Immutable after construction; arrays are read-only.
    """

    beta: float
    radial_t: np.ndarray
    radial_w: np.ndarray
    n_theta: int
    points: np.ndarray = field(init=False, repr=False, compare=False)
    phase: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.beta <= 0:
            raise ValueError(f"PolarGrid requires beta > 0, got {self.beta}")
        if self.n_theta < 4:
            raise ValueError(f"PolarGrid requires n_theta >= 4, got {self.n_theta}")
        if np.any(self.radial_t < 0) or np.any(self.radial_w < 0):
            raise ValueError("PolarGrid nodes and weights must be nonnegative")
        phase = _phase_table(self.n_theta)
        pts = np.sqrt(self.radial_t)[:, None] * phase[None, :]
        for arr in (self.radial_t, self.radial_w, pts, phase):
            arr.flags.writeable = False
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "phase", phase)

    @property
    def n_radial(self) -> int:
        return self.radial_t.size


def build_polar_grid(
    n_radial: int = DEFAULT_RADIAL_NODES,
    n_theta: int = DEFAULT_ANGULAR_NODES,
    beta: float = 1.0,
) -> PolarGrid:
    """Build a PolarGrid for the weight e^{-beta |z|^2}.

    n_radial is capped at 200; node accuracy is not guaranteed beyond
    that, and trailing weights underflow well before it.
    """
    if not 1 <= n_radial <= MAX_RADIAL_NODES:
        raise ValueError(
            f"build_polar_grid requires 1 <= n_radial <= {MAX_RADIAL_NODES}, got {n_radial}"
        )
    if beta <= 0:
        raise ValueError(f"build_polar_grid requires beta > 0, got {beta}")
    x, w = _standard_laguerre_cached(n_radial)
    return PolarGrid(
        beta=float(beta),
        radial_t=x / beta,
        radial_w=w / beta,
        n_theta=int(n_theta),
    )


@lru_cache(maxsize=32)
def _standard_laguerre_cached(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = gauss_laguerre_nodes(n)
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


@lru_cache(maxsize=16)
def default_polar_grid(beta: float = 1.0) -> PolarGrid:
    return build_polar_grid(DEFAULT_RADIAL_NODES, DEFAULT_ANGULAR_NODES, beta)


@dataclass(frozen=True)
class SingularGrid:
    """Recentred polar grid absorbing the Cauchy singularity at ``center``."""

    center: complex
    radius: float
    radial_rho: np.ndarray
    radial_w: np.ndarray
    n_theta: int
    points: np.ndarray = field(init=False, repr=False, compare=False)
    phase: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.radius <= 0:
            raise ValueError(f"SingularGrid requires radius > 0, got {self.radius}")
        if self.n_theta < 4:
            raise ValueError(f"SingularGrid requires n_theta >= 4, got {self.n_theta}")
        phase = _phase_table(self.n_theta)
        pts = self.center + self.radial_rho[:, None] * phase[None, :]
        for arr in (self.radial_rho, self.radial_w, pts, phase):
            arr.flags.writeable = False
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "phase", phase)


def build_singular_grid(
    center: complex,
    n_radial: int = DEFAULT_SINGULAR_RADIAL,
    n_theta: int = DEFAULT_SINGULAR_ANGULAR,
    radius_pad: float = DEFAULT_RADIUS_PAD,
) -> SingularGrid:
    """Gauss-Legendre-in-rho grid on [0, |center| + radius_pad]."""
    if n_radial < 1:
        raise ValueError(f"build_singular_grid requires n_radial >= 1, got {n_radial}")
    if radius_pad <= 0:
        raise ValueError(f"build_singular_grid requires radius_pad > 0, got {radius_pad}")
    center = complex(center)
    radius = abs(center) + radius_pad
    x, w = np.polynomial.legendre.leggauss(n_radial)
    rho = 0.5 * radius * (x + 1.0)
    rho_w = 0.5 * radius * w
    return SingularGrid(
        center=center,
        radius=radius,
        radial_rho=rho,
        radial_w=rho_w,
        n_theta=int(n_theta),
    )


def _reduce_polar(values: np.ndarray, radial_w: np.ndarray):
    """Angle-innermost compensated reduction of per-node values.

    values has shape (n_radial, n_theta).  The angular sum runs over
    ascending theta index with a vector Kahan accumulator, then the
    weighted radial sum runs over ascending node index, also
    compensated.
    """
    acc = np.zeros(values.shape[0], dtype=values.dtype)
    comp = np.zeros_like(acc)
    for j in range(values.shape[1]):
        y = values[:, j] - comp
        s = acc + y
        comp = (s - acc) - y
        acc = s
    return kahan_sum(acc * radial_w)


def plane_quadrature(values: np.ndarray, grid: PolarGrid) -> complex:
    """Integrate precomputed point values against e^{-beta |z|^2} dx dy.

    ``values[i, j]`` is the non-weight part of the integrand at
    ``grid.points[i, j]``.
    """
    values = np.asarray(values)
    if values.shape != grid.points.shape:
        raise ValueError(
            f"plane_quadrature values shape {values.shape} does not match grid {grid.points.shape}"
        )
    return complex(_reduce_polar(values, grid.radial_w)) * (np.pi / grid.n_theta)


def angular_phase_sum(frequency: int, grid: PolarGrid) -> complex:
    """Sum of e^{i p theta_j} over the grid's angular nodes.

    Computed from the phase table by stride reduction: while the
    frequency and the current subgrid size are both even the sum
    equals twice the sum over the half-size subgrid, and once the
    frequency is odd the nodes pair up as j, j + N/2 whose table
    entries are exact negatives.  On an even-N grid the result is
    therefore the exact integer N for p = 0 (mod N) and an exact 0.0
    for every other frequency; odd N falls back to a compensated sum.
    """
    table = grid.phase
    n_full = grid.n_theta
    p = int(frequency) % n_full
    if p == 0:
        return complex(n_full)
    m, step, scale = n_full, p, 1
    while step % 2 == 0 and m % 2 == 0:
        step //= 2
        m //= 2
        scale *= 2
    if m % 2 == 0:
        half = m // 2
        stride = n_full // m
        acc = 0j
        for j in range(half):
            a = stride * ((step * j) % m)
            b = stride * ((step * (j + half)) % m)
            acc += table[a] + table[b]
        return scale * acc
    stride = n_full // m
    return scale * complex(
        kahan_sum(table[stride * ((step * j) % m)] for j in range(m))
    )


def polar_separable_quadrature(
    radial_hi: np.ndarray,
    radial_lo: np.ndarray,
    frequency: int,
    grid: PolarGrid,
) -> complex:
    """Grid quadrature of a separable integrand R(|z|^2) e^{i p theta}.

    Applies the same tensor rule as :func:`plane_quadrature` to an
    integrand given in factored form: the angular factor reduces to
    :func:`angular_phase_sum` (an exact zero for off-pattern
    frequencies on even grids) and the radial factor, supplied as a
    double-double pair evaluated at ``grid.radial_t``, is contracted
    with the weights through error-free products.  This path avoids
    re-deriving t = |z|^2 from the rounded grid points, which is what
    limits the generic path to a few units in the last place times the
    integrand's radial log-derivative.
    """
    radial_hi = np.asarray(radial_hi, dtype=float)
    radial_lo = np.asarray(radial_lo, dtype=float)
    if radial_hi.shape != grid.radial_t.shape or radial_lo.shape != grid.radial_t.shape:
        raise ValueError(
            f"radial profile shape {radial_hi.shape}/{radial_lo.shape} does not match "
            f"grid nodes {grid.radial_t.shape}"
        )
    a = angular_phase_sum(frequency, grid)
    if a == 0:
        return 0j
    s = dd_weighted_sum(radial_hi, radial_lo, grid.radial_w)
    return complex(a) * (np.pi / grid.n_theta) * s


def inner_product_gaussian(f, g, grid: PolarGrid | None = None) -> complex:
    """<f, g> = integral of f(z) conj(g(z)) e^{-|z|^2} dx dy.

    The grid must carry beta = 1, the weight of the ambient space.
    ``f`` and ``g`` are evaluated on the full point array and may return
    scalars (constants broadcast).
    """
    if grid is None:
        grid = default_polar_grid(1.0)
    if grid.beta != 1.0:
        raise ValueError(
            f"inner_product_gaussian requires a grid with beta=1, got beta={grid.beta}"
        )
    fv = np.broadcast_to(np.asarray(f(grid.points), dtype=complex), grid.points.shape)
    gv = np.broadcast_to(np.asarray(g(grid.points), dtype=complex), grid.points.shape)
    return plane_quadrature(fv * gv.conjugate(), grid)


def integrate_radial_weighted(h, beta: float, grid: PolarGrid | None = None) -> float:
    """Integrate h(t) e^{-beta t} over [0, inf).

    The grid supplies the resolution; its nodes are rescaled to the
    requested beta when the two differ.
    """
    if beta <= 0:
        raise ValueError(f"integrate_radial_weighted requires beta > 0, got {beta}")
    if grid is None:
        grid = default_polar_grid(float(beta))
    scale = grid.beta / beta
    t = grid.radial_t * scale
    w = grid.radial_w * scale
    hv = np.broadcast_to(np.asarray(h(t), dtype=float), t.shape)
    return float(kahan_sum(hv * w))


def cauchy_singular_quadrature(f, z: complex, grid: SingularGrid | None = None) -> complex:
    """Weighted Cauchy transform of f at z by the recentred polar rule.

    Evaluates -(1/pi) integral of f(xi) e^{-|xi|^2} / (z - xi) over the
    plane with xi = z + rho e^{i theta}, where the Jacobian cancels the
    pole.  ``f`` must accept complex ndarray input.
    """
    z = complex(z)
    if grid is None:
        grid = build_singular_grid(z)
    elif grid.center != z:
        raise ValueError(
            f"singular grid was built for center {grid.center}, not {z}; rebuild the grid"
        )
    pts = grid.points
    fv = np.broadcast_to(np.asarray(f(pts), dtype=complex), pts.shape)
    gauss = np.exp(-(pts * pts.conjugate()).real)
    values = fv * gauss * grid.phase.conjugate()[None, :]
    return complex(_reduce_polar(values, grid.radial_w)) * (-2.0 / grid.n_theta)
