"""Truncated one-mode Fock space with constant Jacobi sequence.

The basis vectors e_0, ..., e_{N-1} stand for the monic orthonormal
polynomials of the standard semicircle law.  The lowering operator a
maps e_n -> e_{n-1} (e_0 -> 0) and is exact on the truncated space; the
raising operator maps e_n -> e_{n+1} and must send the top vector to 0,
so operator identities involving it hold only on the interior block
(row/column indices < N-1).  Algebraic identity checks run in exact
integer arithmetic (object-dtype matrices of Python ints); evolutions
use complex floating matrices.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionError, DomainError, TruncationError
from .report import CheckReport


class Boundary(enum.Enum):
    EXACT_INTERIOR = "exact_interior"  # truncation introduces no defect
    TRUNCATED = "truncated"            # top row/column carries a defect


@dataclass(frozen=True)
class FockVector:
    """Coefficient vector over the monic basis, truncation dimension N."""

    coeffs: np.ndarray
    dim: int

    @staticmethod
    def from_coeffs(coeffs) -> "FockVector":
        arr = np.asarray(coeffs, dtype=complex)
        if arr.ndim != 1 or arr.size < 1:
            raise DimensionError("coefficient vector must be 1-d and non-empty")
        return FockVector(coeffs=arr, dim=arr.size)

    @staticmethod
    def basis(n: int, dim: int) -> "FockVector":
        if not 0 <= n < dim:
            raise DimensionError(f"basis index {n} outside dimension {dim}")
        arr = np.zeros(dim, dtype=complex)
        arr[n] = 1.0
        return FockVector(coeffs=arr, dim=dim)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))


@dataclass(frozen=True)
class FockOperator:
    """Dense N x N complex matrix acting on FockVector coefficients."""

    entries: np.ndarray
    dim: int
    boundary: Boundary

    @staticmethod
    def from_matrix(entries, boundary: Boundary = Boundary.TRUNCATED) -> "FockOperator":
        arr = np.asarray(entries, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DimensionError("operator matrix must be square")
        return FockOperator(entries=arr, dim=arr.shape[0], boundary=boundary)

    def adjoint(self) -> "FockOperator":
        return FockOperator(self.entries.conj().T.copy(), self.dim, self.boundary)

    def apply(self, v: FockVector) -> FockVector:
        if v.dim != self.dim:
            raise DimensionError(f"operator dim {self.dim} vs vector dim {v.dim}")
        return FockVector(self.entries @ v.coeffs, self.dim)

    def interior_block(self) -> np.ndarray:
        """Entries with both indices < N-1, where identities are exact."""
        return self.entries[: self.dim - 1, : self.dim - 1]

    def _combine(self, other: "FockOperator") -> Boundary:
        if self.boundary is Boundary.TRUNCATED or other.boundary is Boundary.TRUNCATED:
            return Boundary.TRUNCATED
        return Boundary.EXACT_INTERIOR

    def __matmul__(self, other: "FockOperator") -> "FockOperator":
        if other.dim != self.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return FockOperator(self.entries @ other.entries, self.dim, self._combine(other))

    def __add__(self, other: "FockOperator") -> "FockOperator":
        if other.dim != self.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return FockOperator(self.entries + other.entries, self.dim, self._combine(other))

    def __sub__(self, other: "FockOperator") -> "FockOperator":
        if other.dim != self.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return FockOperator(self.entries - other.entries, self.dim, self._combine(other))

    def __mul__(self, scalar: complex) -> "FockOperator":
        return FockOperator(self.entries * scalar, self.dim, self.boundary)

    __rmul__ = __mul__


def _require_dim(n: int, minimum: int = 2) -> None:
    if n < minimum:
        raise DimensionError(f"dimension must be >= {minimum}, got {n}")


def build_annihilation(dim: int) -> FockOperator:
    """Lowering operator: e_n -> e_{n-1}, e_0 -> 0.  Exact under truncation."""
    _require_dim(dim)
    a = np.zeros((dim, dim), dtype=complex)
    for n in range(1, dim):
        a[n - 1, n] = 1.0
    return FockOperator(a, dim, Boundary.EXACT_INTERIOR)


def build_creation(dim: int) -> FockOperator:
    """Raising operator: e_n -> e_{n+1}, with the top vector sent to 0."""
    _require_dim(dim)
    ap = np.zeros((dim, dim), dtype=complex)
    for n in range(dim - 1):
        ap[n + 1, n] = 1.0
    return FockOperator(ap, dim, Boundary.TRUNCATED)


def build_number_function(dim: int, f) -> FockOperator:
    """Diagonal operator diag(f(0), ..., f(N-1)) for a scalar function f."""
    _require_dim(dim, minimum=1)
    diag = np.array([complex(f(n)) for n in range(dim)])
    return FockOperator(np.diag(diag), dim, Boundary.EXACT_INTERIOR)


def vacuum_projection(dim: int) -> FockOperator:
    """Rank-one projection onto the vacuum basis vector."""
    return build_number_function(dim, lambda n: 1.0 if n == 0 else 0.0)


def build_position(dim: int) -> FockOperator:
    """Position operator: raising plus lowering (zero diagonal, Hermitian)."""
    a = build_annihilation(dim)
    return FockOperator(a.entries + a.entries.T, dim, Boundary.TRUNCATED)


def build_momentum(dim: int) -> FockOperator:
    """Momentum operator i (raising - lowering); Hermitian on the truncation."""
    a = build_annihilation(dim)
    return FockOperator(1j * (a.entries.T - a.entries), dim, Boundary.TRUNCATED)


def commutator(op_a: FockOperator, op_b: FockOperator) -> FockOperator:
    """A B - B A."""
    return op_a @ op_b - op_b @ op_a


# ---------------------------------------------------------------------------
# exact-integer arithmetic backend for algebraic identity checks

def _int_shift_matrices(dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Lowering/raising matrices over Python ints (no wraparound possible)."""
    a = np.zeros((dim, dim), dtype=object)
    ap = np.zeros((dim, dim), dtype=object)
    for n in range(1, dim):
        a[n - 1, n] = 1
        ap[n, n - 1] = 1
    return a, ap


def _int_eye(dim: int) -> np.ndarray:
    out = np.zeros((dim, dim), dtype=object)
    for i in range(dim):
        out[i, i] = 1
    return out


def _int_unit(dim: int, i: int, j: int) -> np.ndarray:
    out = np.zeros((dim, dim), dtype=object)
    out[i, j] = 1
    return out


def multiplication_table_checks(dim: int) -> list[CheckReport]:
    """Exact interior-block identities of the lowering/raising pair.

    On indices < N-1:  a a+ = 1,  a+ a = 1 - P0,  [a, a+] = P0, and
    [X, P] = 2i P0 (checked through the integer matrix i^-1 [X, P]/2).
    """
    _require_dim(dim, minimum=3)
    a, ap = _int_shift_matrices(dim)
    eye = _int_eye(dim)
    p0 = _int_unit(dim, 0, 0)
    cut = dim - 1

    def defect(mat) -> float:
        return float(max(abs(int(v)) for v in mat[:cut, :cut].ravel()))

    reports = [
        CheckReport("a a+ = 1 (interior)", defect(a @ ap - eye), 0.0),
        CheckReport("a+ a = 1 - P0", defect(ap @ a - (eye - p0)), 0.0),
        CheckReport("[a, a+] = P0 (interior)", defect((a @ ap - ap @ a) - p0), 0.0),
    ]
    # [X, P] = 2i P0 reduces to the integer identity [X, a+ - a] = 2 P0
    x = a + ap
    s = ap - a
    reports.append(CheckReport("[X, P] = 2i P0 (interior)", defect(x @ s - s @ x - 2 * p0), 0.0))
    # function-of-level shifts: F a+ = a+ F' and a F = F' a with F' the
    # shifted diagonal, checked for F = level numbers
    f_diag = np.zeros((dim, dim), dtype=object)
    f_shift = np.zeros((dim, dim), dtype=object)
    for i in range(dim):
        for j in range(dim):
            f_diag[i, j] = 0
            f_shift[i, j] = 0
        f_diag[i, i] = i
        f_shift[i, i] = i + 1
    reports.append(CheckReport("F a+ = a+ F(.+1) (interior)", defect(f_diag @ ap - ap @ f_shift), 0.0))
    reports.append(CheckReport("a F = F(.+1) a (interior)", defect(a @ f_diag - f_shift @ a), 0.0))
    return reports


def vacuum_moment(n: int, which: str, dim: int) -> int:
    """Exact vacuum moment <e_0, A^n e_0> for A the position or momentum.

    Vanishes for odd n and equals the Catalan number C_{n/2} otherwise;
    requires dim > 2n so the truncation boundary is never touched.
    """
    if n < 0:
        raise DomainError("moment order must be >= 0")
    if which not in ("X", "P"):
        raise DomainError(f"which must be 'X' or 'P', got {which!r}")
    if dim <= 2 * n:
        raise TruncationError(f"dimension {dim} too small for moment order {n}; need dim > {2 * n}")
    a, ap = _int_shift_matrices(dim)
    mat = (a + ap) if which == "X" else (ap - a)
    vec = np.zeros(dim, dtype=object)
    vec[0] = 1
    for _ in range(n):
        vec = mat @ vec
    value = int(vec[0])
    if which == "P" and n % 2 == 0:
        # P^n = i^n (a+ - a)^n; for even n = 2m the phase is (-1)^m
        value *= (-1) ** (n // 2)
    return value


def lie_bracket_checks(dim: int, m_max: int, n_max: int) -> list[CheckReport]:
    """Exact bracket relations of the raising/lowering pair with rank-one tails.

    Checks, in integer arithmetic on the interior block:

        [a, P0 a^m]       = -P0 a^(m+1)
        [a^(+m) P0, a+]   = -a^(+(m+1)) P0
        [a^(+m) P0, P0 a^n] = e_m e_n^*  -  delta_{mn} P0

    The diagonal correction -delta_{mn} P0 in the third relation is
    forced by direct matrix multiplication: both products are rank one
    and their difference picks up the vacuum projection exactly when
    m = n.
    """
    if m_max + n_max + 2 > dim:
        raise DimensionError("need m_max + n_max + 2 <= dim")
    a, ap = _int_shift_matrices(dim)
    p0 = _int_unit(dim, 0, 0)
    cut = dim - 1

    def defect(mat) -> float:
        return float(max(abs(int(v)) for v in mat[:cut, :cut].ravel()))

    def power(mat, k):
        out = _int_eye(dim)
        for _ in range(k):
            out = out @ mat
        return out

    reports: list[CheckReport] = []
    for m in range(m_max + 1):
        am = power(a, m)
        lhs = a @ (p0 @ am) - (p0 @ am) @ a
        reports.append(CheckReport(f"[a, P0 a^{m}] = -P0 a^{m + 1}", defect(lhs + p0 @ power(a, m + 1)), 0.0))
        apm = power(ap, m)
        lhs2 = (apm @ p0) @ ap - ap @ (apm @ p0)
        reports.append(
            CheckReport(f"[a+^{m} P0, a+] = -a+^{m + 1} P0", defect(lhs2 + power(ap, m + 1) @ p0), 0.0)
        )
    for m in range(m_max + 1):
        apm = power(ap, m)
        for n in range(n_max + 1):
            an = power(a, n)
            t1 = apm @ p0
            t2 = p0 @ an
            lhs3 = t1 @ t2 - t2 @ t1
            expected = _int_unit(dim, m, n)
            if m == n:
                expected = expected - p0
            reports.append(
                CheckReport(
                    f"[a+^{m} P0, P0 a^{n}] = e{m} e{n}* {'- P0' if m == n else ''}",
                    defect(lhs3 - expected),
                    0.0,
                )
            )
    return reports


def coherent_kernel(u: complex, v: complex) -> complex:
    """Overlap of two coherent vectors: the geometric-series kernel 1/(1 - conj(u) v)."""
    if abs(u) >= 1.0 or abs(v) >= 1.0:
        raise DomainError("coherent parameters must satisfy |u| < 1, |v| < 1")
    return 1.0 / (1.0 - complex(u).conjugate() * complex(v))


def coherent_kernel_truncated(u: complex, v: complex, dim: int) -> tuple[complex, float]:
    """Partial geometric sum over the first dim levels plus a tail bound."""
    if abs(u) >= 1.0 or abs(v) >= 1.0:
        raise DomainError("coherent parameters must satisfy |u| < 1, |v| < 1")
    q = complex(u).conjugate() * complex(v)
    total = 0j
    term = 1.0 + 0j
    for _ in range(dim):
        total += term
        term *= q
    tail = abs(q) ** dim / (1.0 - abs(q))
    return total, tail


def harmonic_char(t: float, p_xi: float, omega1: float) -> complex:
    """Two-point characteristic function of the quadratic-well generator.

    The generator is diagonal with value omega1 on the vacuum and
    2*omega1 on every excited level, so any unit vector with vacuum
    weight p_xi yields p_xi e^{i t omega1} + (1 - p_xi) e^{2 i t omega1}.
    """
    if not 0.0 <= p_xi <= 1.0:
        raise DomainError(f"vacuum weight must be in [0, 1], got {p_xi}")
    if omega1 <= 0:
        raise DomainError("omega1 must be positive")
    return p_xi * cmath.exp(1j * t * omega1) + (1.0 - p_xi) * cmath.exp(2j * t * omega1)


def harmonic_char_from_state(t: float, xi: FockVector, omega1: float) -> complex:
    """Same quantity by explicit diagonal exponentiation of a state vector."""
    if omega1 <= 0:
        raise DomainError("omega1 must be positive")
    levels = np.arange(xi.dim)
    eigenvalues = np.where(levels == 0, omega1, 2.0 * omega1)
    phases = np.exp(1j * t * eigenvalues)
    return complex(np.vdot(xi.coeffs, phases * xi.coeffs))
