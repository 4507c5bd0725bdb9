"""Independent ground-truth engines for the closed-form evolutions.

The matrix exponential here is a deliberately plain scaling-and-squaring
Taylor evaluation with an explicit remainder bound
||B||^(k+1)/(k+1)! e^(||B||); it shares no code with the Bessel or
hypergeometric coefficient paths it is used to check.  Also provides
quadrature reference integrals against the semicircle measure and
re-exports the exhaustive sign-word enumeration backend.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, exp, log2

import numpy as np

from .combinatorics import brute_force_theta, sign_word_distribution  # noqa: F401  (shared oracle backend)
from .exceptions import ConvergenceError, DimensionError, DomainError
from .fock import FockOperator, FockVector, build_momentum, build_position
from .orthopoly import quadrature_rule
from .specfun import bessel_tail_index

_MAX_DIM = 512
_MAX_TAYLOR_TERMS = 64


@dataclass(frozen=True)
class ExpmResult:
    """e^(zA) v together with a certified bound on the truncation residual."""

    vector: np.ndarray
    dim: int
    series_terms: int
    residual_bound: float


def _norm2_upper(mat: np.ndarray) -> float:
    """Cheap upper bound for the spectral norm: sqrt(norm1 * norm_inf)."""
    n1 = float(np.max(np.sum(np.abs(mat), axis=0)))
    ninf = float(np.max(np.sum(np.abs(mat), axis=1)))
    return float(np.sqrt(n1 * ninf))


def _taylor_expm(mat: np.ndarray, tol: float) -> tuple[np.ndarray, int, float]:
    """Taylor sum of e^mat for small-norm mat, with remainder bound."""
    n = mat.shape[0]
    nrm = _norm2_upper(mat)
    total = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    lead = 1.0  # ||mat||^(k+1)/(k+1)!
    for k in range(1, _MAX_TAYLOR_TERMS + 1):
        term = term @ mat / k
        total += term
        lead = lead * nrm / k
        bound = lead * nrm / (k + 1) * exp(nrm)
        if bound <= tol:
            return total, k, bound
    raise ConvergenceError(f"Taylor tolerance {tol} unreachable at {_MAX_TAYLOR_TERMS} terms")


def expm_matrix(op: FockOperator | np.ndarray, z: complex, tol: float = 1e-13) -> tuple[np.ndarray, int, float]:
    """e^(z A) as a dense matrix, by scaling and squaring with a Taylor core.

    Returns (matrix, taylor_terms, residual_bound); the bound covers the
    Taylor truncation amplified through the squarings (operator norm,
    with e^(||B|| 2^j) growth factors; for skew-Hermitian arguments the
    intermediate exponentials have norm 1 and the bound is tight).
    """
    mat = op.entries if isinstance(op, FockOperator) else np.asarray(op, dtype=complex)
    if mat.shape[0] != mat.shape[1]:
        raise DimensionError("matrix must be square")
    if mat.shape[0] > _MAX_DIM:
        raise DimensionError(f"dimension {mat.shape[0]} exceeds the dense cap {_MAX_DIM}")
    za = z * mat
    nrm = _norm2_upper(za)
    if not np.isfinite(nrm):
        raise DomainError("non-finite scaled operator norm")
    squarings = max(0, ceil(log2(nrm / 0.5))) if nrm > 0.5 else 0
    b = za / (2**squarings)
    skew = _norm2_upper(za + za.conj().T) <= 1e-12 * max(1.0, nrm)
    # error through j squarings: E_{j+1} <= 2 ||T_j|| E_j + E_j^2
    inner_tol = tol / (2.0 ** (squarings + 1)) / max(1.0, exp(0.0 if skew else min(nrm, 50.0)))
    result, terms, err = _taylor_expm(b, inner_tol)
    bnorm = _norm2_upper(b)
    for j in range(squarings):
        growth = 1.0 if skew else exp(min(bnorm * 2**j, 50.0))
        err = 2.0 * growth * err + err * err
        result = result @ result
    return result, terms, err


def expm_apply(op: FockOperator, z: complex, v: FockVector, tol: float = 1e-12) -> ExpmResult:
    """Apply e^(z A) to a vector with a certified residual bound.

    For skew-Hermitian z A the result norm is asserted to match the
    input norm to 1e-12 (relative).
    """
    if v.dim != op.dim:
        raise DimensionError(f"operator dim {op.dim} vs vector dim {v.dim}")
    mat, terms, err = expm_matrix(op, z, tol)
    out = mat @ v.coeffs
    za = z * op.entries
    vnorm = float(np.linalg.norm(v.coeffs))
    if _norm2_upper(za + za.conj().T) <= 1e-12 * max(1.0, _norm2_upper(za)):
        defect = abs(float(np.linalg.norm(out)) - vnorm)
        if defect > 1e-12 * max(1.0, vnorm) + err:
            raise ConvergenceError(f"norm preservation violated by {defect:.3e}")
    return ExpmResult(vector=out, dim=op.dim, series_terms=terms, residual_bound=err * vnorm)


def _generator(kind: str, dim: int) -> FockOperator:
    if kind == "P":
        return build_momentum(dim)
    if kind == "X":
        return build_position(dim)
    if kind == "P2":
        p = build_momentum(dim)
        return p @ p
    raise DomainError(f"unknown generator kind {kind!r}")


def truncation_level(t: float, k: int, tol: float, generator: str = "P") -> int:
    """Truncation dimension adequate for evolving basis level k to accuracy tol.

    Doubling procedure: starting from a tail-bound-informed dimension,
    compare the evolution computed at N and 2N and accept once they
    agree below tol (the generator is banded, so amplitude reaches level
    N only at series order ~N and the comparison certifies the tail).
    For t = 0 the evolution is the identity and k + 2 suffices.
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    if k < 0:
        raise DomainError("source level must be >= 0")
    if t == 0.0:
        return k + 2
    n = max(k + 2, 8, k + bessel_tail_index(t, tol) // 2)
    while 2 * n <= _MAX_DIM:
        small = expm_apply(_generator(generator, n), 1j * t, FockVector.basis(k, n), tol / 10).vector
        big = expm_apply(_generator(generator, 2 * n), 1j * t, FockVector.basis(k, 2 * n), tol / 10).vector
        defect = float(np.linalg.norm(big[:n] - small)) + float(np.linalg.norm(big[n:]))
        if defect < tol:
            return 2 * n
        n *= 2
    raise ConvergenceError(f"no adequate truncation below {_MAX_DIM} for t={t}, k={k}")


def semicircle_expectation(f, m: int = 256) -> float:
    """Reference integral of f against the semicircle probability measure."""
    nodes, weights = quadrature_rule(m)
    return float(np.sum(weights * np.asarray(f(nodes))))


def char_function_quadrature(t: float, m: int = 256) -> complex:
    """Characteristic function of the semicircle law by Gauss quadrature."""
    nodes, weights = quadrature_rule(m)
    return complex(np.sum(weights * np.exp(1j * t * nodes)))
