"""Weighted finite-interval Hilbert transform on the semicircle space.

For the semicircle probability measure mu on [-2, 2] the transform

    (H f)(x) = 2 p.v. integral f(y) / (x - y) dmu(y)

maps the monic second-kind polynomial Phi_n to the monic first-kind
polynomial T_{n+1}; on coefficient series this is an exact relabeling
(the spectral path).  The quadrature path evaluates the principal value
directly by singularity subtraction, using the closed-form moment
p.v. integral dmu(y)/(x - y) = x/2 on the interior.  The momentum
operator of the semicircle space is i times this transform, which the
module exposes together with the kinetic (half-square) action, the
Schroedinger-weight realization, Bessel trigonometric sums with their
principal-value integral forms, and pointwise closed forms for the
translation group on the two lowest levels.

The pointwise closed forms are the amplitude-series-verified versions:
assembling the Bessel trigonometric sums introduces a boundary term
-J_{k+1}(2t) Phi_1(x) that exactly cancels the low-order Bessel term a
naive rearrangement would keep; both forms here were validated to
machine precision against the matrix-exponential oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import acos, cos, pi, sin

import numpy as np

from .exceptions import ConvergenceError, DomainError, SingularNodeError
from .orthopoly import phi_all, quadrature_rule, t_cheb
from .report import CheckReport
from .specfun import bessel_j, bessel_tail_index

_EDGE_MARGIN = 1e-6
_KAPTEYN_TERM_CAP = 400


@dataclass(frozen=True)
class ChebSeries:
    """Function on [-2, 2] as coefficients over the monic second-kind basis."""

    coeffs: np.ndarray

    @staticmethod
    def from_coeffs(coeffs) -> "ChebSeries":
        return ChebSeries(np.asarray(coeffs, dtype=complex))

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def norm_sq(self) -> float:
        """Squared L2(mu) norm: the basis is orthonormal."""
        return float(np.sum(np.abs(self.coeffs) ** 2))

    def evaluate(self, x):
        vals = phi_all(self.degree, x)
        return np.tensordot(self.coeffs, vals, axes=(0, 0))


@dataclass(frozen=True)
class TChebSeries:
    """Coefficients over the monic first-kind basis T_0, T_1, ..."""

    coeffs: np.ndarray


def hilbert_mu_spectral(f: ChebSeries) -> TChebSeries:
    """Spectral transform: sum c_n Phi_n maps to sum c_n T_{n+1} exactly."""
    out = np.zeros(f.coeffs.size + 1, dtype=complex)
    out[1:] = f.coeffs
    return TChebSeries(out)


def t_to_phi(series: TChebSeries) -> ChebSeries:
    """Re-expand a first-kind series over the second-kind basis.

    Uses T_0 = 2 Phi_0 and T_j = Phi_j - Phi_{j-2} (j >= 1, Phi_{-1} = 0).
    """
    d = series.coeffs
    out = np.zeros(d.size, dtype=complex)
    out[0] += 2.0 * d[0]
    for j in range(1, d.size):
        out[j] += d[j]
        if j >= 2:
            out[j - 2] -= d[j]
    return ChebSeries(out)


def hilbert_mu_pv(f, x: float, m: int = 2048) -> float:
    """Principal-value quadrature of the transform at an interior point.

    Singularity subtraction: with the interior moment
    p.v. integral dmu(y)/(x - y) = x/2,

        (H f)(x) = 2 integral (f(y) - f(x))/(x - y) dmu(y) + f(x) x.

    f must be evaluable on arrays over [-2, 2].

    Raises:
        SingularNodeError: if x collides with a quadrature node
            (perturb the evaluation point or change m).
    """
    if not -2.0 < x < 2.0:
        raise DomainError(f"evaluation point must be interior, got {x}")
    nodes, weights = quadrature_rule(m)
    dist = x - nodes
    if np.min(np.abs(dist)) < 1e-12:
        raise SingularNodeError(f"x={x} coincides with a quadrature node for m={m}")
    fx = np.asarray(f(np.array([x]))).ravel()[0]
    vals = np.asarray(f(nodes))
    return float(2.0 * np.sum(weights * (vals - fx) / dist) + fx * x)


def momentum_apply(f: ChebSeries) -> ChebSeries:
    """Momentum action i (H f) re-expanded over the second-kind basis.

    On coefficients this is out_k = i (c_{k-1} - c_{k+1}), identical to
    the tridiagonal matrix i (raising - lowering).
    """
    return ChebSeries(1j * t_to_phi(hilbert_mu_spectral(f)).coeffs)


def kinetic_apply(f: ChebSeries) -> ChebSeries:
    """Half-square of the momentum: (1/2) P^2 f = -(1/2) H(H f)."""
    once = momentum_apply(f)
    twice = momentum_apply(once)
    return ChebSeries(0.5 * twice.coeffs)


def rho_weight(x):
    """Schroedinger weight (2 pi)^(-1/2) (4 - x^2)^(1/4), zero off [-2, 2].

    Its square is the semicircle probability density.
    """
    arr = np.asarray(x, dtype=float)
    inside = np.abs(arr) <= 2.0
    vals = np.where(inside, (np.clip(4.0 - arr**2, 0.0, None)) ** 0.25 / np.sqrt(2.0 * np.pi), 0.0)
    return vals if vals.shape else float(vals)


def schrodinger_commutator_check(n: int, m: int = 2048, eval_points: int = 25) -> CheckReport:
    """Coordinate/momentum commutator on weighted basis functions.

    In the weighted representation the momentum is i rho H rho^{-1} and
    Q is multiplication by x, so applied to Phi_n rho the commutator
    divided by i is rho(x) (x (H Phi_n)(x) - (H y Phi_n)(x)); this
    equals 2 rho for n = 0 and vanishes for n >= 1 (the full commutator
    is the rank-one operator 2i rho <rho, .>).  Both transforms are
    evaluated by principal-value quadrature on an interior grid.
    """
    if n < 0:
        raise DomainError("level must be >= 0")
    xs, _ = quadrature_rule(eval_points)
    nodes, _ = quadrature_rule(m)
    resid = 0.0
    for x in xs:
        if np.min(np.abs(x - nodes)) < 1e-9:
            x += 1e-7  # nudge off a shared node of the two cosine grids
        hn = hilbert_mu_pv(lambda y: phi_all(n, y)[n], x, m)
        hxn = hilbert_mu_pv(lambda y: np.asarray(y) * phi_all(n, y)[n], x, m)
        got = rho_weight(x) * (x * hn - hxn)
        want = 2.0 * rho_weight(x) if n == 0 else 0.0
        resid = max(resid, abs(got - want))
    return CheckReport(f"[Q,P]/i on weighted level {n}", resid, 1e-8)


# ---------------------------------------------------------------------------
# principal-value integrals over the angle variable

@lru_cache(maxsize=8)
def _gl_nodes(order: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def pv_integral_angle(g, theta: float, panels: int = 24, order: int = 16) -> float:
    """p.v. integral of g(phi) / (cos(theta) - cos(phi)) over [0, pi].

    Subtracts g(theta) (the subtracted kernel integrates to zero in the
    principal-value sense) and integrates the now-removable integrand by
    composite Gauss-Legendre panels split at the singular angle.
    """
    if not 0.0 < theta < pi:
        raise DomainError(f"theta must be interior to (0, pi), got {theta}")
    xg, wg = _gl_nodes(order)
    g_theta = g(np.array([theta]))[0]
    half = max(2, panels // 2)
    edges = np.concatenate([np.linspace(0.0, theta, half + 1)[:-1], np.linspace(theta, pi, half + 1)])
    total = 0.0
    cos_theta = cos(theta)
    for a, b in zip(edges[:-1], edges[1:]):
        xs = 0.5 * (b - a) * xg + 0.5 * (a + b)
        ws = 0.5 * (b - a) * wg
        total += float(np.sum(ws * (g(xs) - g_theta) / (cos_theta - np.cos(xs))))
    return total


def _bessel_values(n_max: int, x: float) -> np.ndarray:
    return np.array([bessel_j(n, x).value for n in range(n_max + 1)], dtype=float)


def kapteyn_sum_sin(t: float, theta: float, tol: float = 1e-12) -> float:
    """Alternating Bessel sine sum  sum_{m>=1} (-1)^m J_m(2t) sin(m theta)."""
    return _kapteyn_series(t, theta, tol, np.sin)


def kapteyn_sum_cos(t: float, theta: float, tol: float = 1e-12) -> float:
    """Alternating Bessel cosine sum  sum_{m>=1} (-1)^m J_m(2t) cos(m theta)."""
    return _kapteyn_series(t, theta, tol, np.cos)


def _kapteyn_series(t: float, theta: float, tol: float, trig) -> float:
    if not 0.0 < theta < pi:
        raise DomainError(f"theta must be in (0, pi), got {theta}")
    if abs(t) > 8.0:
        raise DomainError(f"|t| <= 8 required, got {t}")
    n_max = bessel_tail_index(t, tol)
    if n_max > _KAPTEYN_TERM_CAP:
        raise ConvergenceError(f"tail index {n_max} exceeds the cap {_KAPTEYN_TERM_CAP}")
    jv = _bessel_values(n_max, 2.0 * t)
    ms = np.arange(1, n_max + 1)
    return float(np.sum(((-1.0) ** ms) * jv[1:] * trig(ms * theta)))


def kapteyn_integral_sin(t: float, theta: float) -> float:
    """Principal-value integral form of the alternating Bessel sine sum.

        -sin(2t sin theta)/2
        - (sin theta / 2 pi) p.v. int_0^pi cos(2t sin phi)/(cos theta - cos phi) dphi
    """
    if not 0.0 < theta < pi:
        raise DomainError(f"theta must be in (0, pi), got {theta}")
    integral = pv_integral_angle(lambda p: np.cos(2.0 * t * np.sin(p)), theta)
    return -sin(2.0 * t * sin(theta)) / 2.0 - sin(theta) / (2.0 * pi) * integral


def kapteyn_integral_cos(t: float, theta: float) -> float:
    """Principal-value integral form of the alternating Bessel cosine sum.

        (cos(2t sin theta) - J_0(2t))/2
        - (1/2 pi) p.v. int_0^pi sin(2t sin phi) sin(phi)/(cos theta - cos phi) dphi
    """
    if not 0.0 < theta < pi:
        raise DomainError(f"theta must be in (0, pi), got {theta}")
    integral = pv_integral_angle(lambda p: np.sin(2.0 * t * np.sin(p)) * np.sin(p), theta)
    return (cos(2.0 * t * sin(theta)) - bessel_j(0, 2.0 * t).value) / 2.0 - integral / (2.0 * pi)


def kapteyn_checks(t: float, theta: float, tol: float = 1e-6) -> list[CheckReport]:
    """Series vs principal-value agreement for both trigonometric sums."""
    return [
        CheckReport(
            f"Bessel sine sum vs PV integral (t={t}, theta={theta:.4f})",
            abs(kapteyn_sum_sin(t, theta) - kapteyn_integral_sin(t, theta)),
            tol,
        ),
        CheckReport(
            f"Bessel cosine sum vs PV integral (t={t}, theta={theta:.4f})",
            abs(kapteyn_sum_cos(t, theta) - kapteyn_integral_cos(t, theta)),
            tol,
        ),
    ]


def _interior_theta(x: float) -> float:
    if abs(x) > 2.0 - _EDGE_MARGIN:
        raise DomainError(f"|x| <= 2 - {_EDGE_MARGIN} required, got {x}")
    return acos(x / 2.0)


def evolved_vacuum_closed_form(t: float, x: float) -> complex:
    """Translation group applied to the vacuum, evaluated pointwise.

    With theta = arccos(x/2):

        J_0(2t) - x sin(2t sin theta)/(2 sin theta)
                - (x/2 pi) p.v. int_0^pi cos(2t sin phi)/(cos theta - cos phi) dphi

    Equals the amplitude series sum_l (-1)^l (l+1) J_{l+1}(2t)/t Phi_l(x);
    the value is real for real t.
    """
    theta = _interior_theta(x)
    if t == 0.0:
        return 1.0 + 0j
    integral = pv_integral_angle(lambda p: np.cos(2.0 * t * np.sin(p)), theta)
    val = (
        bessel_j(0, 2.0 * t).value
        - x * sin(2.0 * t * sin(theta)) / (2.0 * sin(theta))
        - x / (2.0 * pi) * integral
    )
    return complex(val)


def evolved_phi1_closed_form(t: float, x: float) -> complex:
    """Translation group applied to the first excited level, pointwise.

    With theta = arccos(x/2):

        2 J_1(2t) + x cos(2t sin theta)
                  - (x/pi) p.v. int_0^pi sin(2t sin phi) sin(phi)/(cos theta - cos phi) dphi
    """
    theta = _interior_theta(x)
    if t == 0.0:
        return complex(x)
    integral = pv_integral_angle(lambda p: np.sin(2.0 * t * np.sin(p)) * np.sin(p), theta)
    val = 2.0 * bessel_j(1, 2.0 * t).value + x * cos(2.0 * t * sin(theta)) - x / pi * integral
    return complex(val)


def spectral_identity_table(n_max: int, x: float) -> list[tuple[int, float, float]]:
    """Rows (n, (H Phi_n)(x) by PV quadrature, T_{n+1}(x)) for display."""
    rows = []
    for n in range(n_max + 1):
        pv = hilbert_mu_pv(lambda y, n=n: phi_all(n, y)[n], x)
        rows.append((n, pv, t_cheb(n + 1, x)))
    return rows
