"""Truncated two-mode Fock-space numerics.

Basis layout, fixed for all golden files: a two-mode occupation (n1, n2)
with 0 <= n1, n2 <= n_max maps to the flat index

    index(n1, n2) = n1 * (n_max + 1) + n2

so mode-1 is the slow (row-major outer) axis. This matches the Kronecker
convention used throughout: a1 = kron(a, I), a2 = kron(I, a).

Unitaries are built from eigendecompositions of Hermitian generators, so
they are exactly unitary in floating point (no series truncation):

* the polarizer exp{i theta (a1†a2 + a2†a1)} conserves total photon
  number and is assembled block-per-sector, which also makes the
  between-sector entries exact zeros;
* displacements exp{z a† - conj(z) a} use a dense eigh per mode.

Truncation is the only approximation. Displacements with |z| beyond
n_max/10 leak noticeable weight past the cutoff and trigger a
TruncationLeakageWarning.
"""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "DISPLACEMENT_GUARD_RATIO",
    "UNDEFINED_PHASE_CUTOFF",
    "METHOD_FOCK_ORACLE",
    "METHOD_COHERENT_CLOSED_FORM",
    "METHOD_PHASE_SPACE_PAIRING",
    "METHOD_PRINTED_CLOSED_FORM",
    "TruncationLeakageWarning",
    "TruncationDim",
    "PhaseResult",
    "phase_result",
    "principal_phase",
    "mode_annihilation",
    "polarizer_generator",
    "polarizer_unitary",
    "single_mode_displacement",
    "displacement_operator",
    "displaced_fock_state",
    "coherent_state",
    "DensityOperator",
    "evolve",
    "triple_product_trace",
]

# Phases of invariants with modulus below this cutoff are reported as
# undefined (None) instead of numerical noise.
UNDEFINED_PHASE_CUTOFF = 1e-12

# Largest displacement magnitude considered safe at truncation n_max is
# DISPLACEMENT_GUARD_RATIO * n_max; beyond it a warning is emitted.
DISPLACEMENT_GUARD_RATIO = 0.1

METHOD_FOCK_ORACLE = "fock_oracle"
METHOD_COHERENT_CLOSED_FORM = "coherent_closed_form"
METHOD_PHASE_SPACE_PAIRING = "phase_space_pairing"
METHOD_PRINTED_CLOSED_FORM = "printed_closed_form"


class TruncationLeakageWarning(UserWarning):
    """A displacement is large enough to leak weight past the cutoff."""


@dataclass(frozen=True)
class TruncationDim:
    """Per-mode Fock cutoff n_max; the two-mode space has (n_max+1)^2 states."""

    n_max: int

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")

    @property
    def states_per_mode(self) -> int:
        return self.n_max + 1

    @property
    def dim(self) -> int:
        return (self.n_max + 1) ** 2

    def index(self, n1: int, n2: int) -> int:
        """Flat index of |n1, n2>."""
        m = self.states_per_mode
        if not (0 <= n1 < m and 0 <= n2 < m):
            raise ValueError(f"occupation ({n1}, {n2}) outside cutoff {self.n_max}")
        return n1 * m + n2


@dataclass(frozen=True)
class PhaseResult:
    """A Bargmann invariant and its phase.

    phase is the principal argument of invariant in (-pi, pi], or None when
    the modulus is below UNDEFINED_PHASE_CUTOFF and the phase carries no
    information. method names the computation route.
    """

    invariant: complex
    phase: float | None
    method: str

    @property
    def defined(self) -> bool:
        return self.phase is not None


def principal_phase(angle: float) -> float:
    """Wrap an angle to the principal branch (-pi, pi]."""
    wrapped = math.remainder(angle, math.tau)
    if wrapped == -math.pi:
        return math.pi
    return wrapped


def phase_result(invariant: complex, method: str, phase: float | None = None) -> PhaseResult:
    """Package an invariant, flagging near-zero modulus as undefined.

    An explicitly supplied phase (already principal) overrides the arg of
    the invariant; closed forms use this to keep exact arithmetic exact.
    """
    invariant = complex(invariant)
    if abs(invariant) < UNDEFINED_PHASE_CUTOFF:
        return PhaseResult(invariant=invariant, phase=None, method=method)
    if phase is None:
        phase = cmath.phase(invariant)
        if phase == -math.pi:
            phase = math.pi
    return PhaseResult(invariant=invariant, phase=phase, method=method)


@lru_cache(maxsize=32)
def _single_mode_ladder(n_max: int) -> np.ndarray:
    a = np.diag(np.sqrt(np.arange(1.0, n_max + 1)), k=1).astype(complex)
    a.flags.writeable = False
    return a


def mode_annihilation(mode: int, dim: TruncationDim) -> np.ndarray:
    """Truncated annihilation operator for mode 1 or 2 on the joint space."""
    if mode not in (1, 2):
        raise ValueError(f"mode must be 1 or 2, got {mode}")
    a = _single_mode_ladder(dim.n_max)
    eye = np.eye(dim.states_per_mode)
    return np.kron(a, eye) if mode == 1 else np.kron(eye, a)


def polarizer_generator() -> np.ndarray:
    """Mode-coupling matrix of the polarizer generator, ((0, 1), (1, 0)).

    The generator itself is a1†a2 + a2†a1; this is its coefficient matrix
    in the quadratic form sum_jk G[j,k] aj†ak.
    """
    return np.array([[0.0, 1.0], [1.0, 0.0]])


@lru_cache(maxsize=128)
def _polarizer_sectors(n_max: int) -> tuple:
    """Eigendecompositions of the generator restricted to each N-sector.

    Sector N has basis |n1, N-n1> for n1 in [max(0, N-n_max), min(N, n_max)].
    The restricted generator is real symmetric tridiagonal with
    <n1+1, n2-1| a1†a2 |n1, n2> = sqrt((n1+1) n2).
    """
    m = n_max + 1
    sectors = []
    for total in range(2 * n_max + 1):
        lo = max(0, total - n_max)
        hi = min(total, n_max)
        occ1 = np.arange(lo, hi + 1)
        indices = occ1 * m + (total - occ1)
        size = len(occ1)
        gen = np.zeros((size, size))
        for row in range(size - 1):
            n1 = occ1[row]
            gen[row, row + 1] = gen[row + 1, row] = math.sqrt((n1 + 1) * (total - n1))
        vals, vecs = np.linalg.eigh(gen)
        indices.flags.writeable = False
        vals.flags.writeable = False
        vecs.flags.writeable = False
        sectors.append((indices, vals, vecs))
    return tuple(sectors)


@lru_cache(maxsize=256)
def _polarizer_unitary_cached(theta: float, n_max: int) -> np.ndarray:
    dim = (n_max + 1) ** 2
    u = np.zeros((dim, dim), dtype=complex)
    for indices, vals, vecs in _polarizer_sectors(n_max):
        block = (vecs * np.exp(1j * theta * vals)) @ vecs.T
        u[np.ix_(indices, indices)] = block
    u.flags.writeable = False
    return u


def polarizer_unitary(theta: float, dim: TruncationDim) -> np.ndarray:
    """exp{i theta (a1†a2 + a2†a1)} on the truncated joint space.

    Exactly unitary and exactly block diagonal over total photon number.
    """
    return _polarizer_unitary_cached(float(theta), dim.n_max)


def _displacement_guard(z: complex, n_max: int):
    if abs(z) > DISPLACEMENT_GUARD_RATIO * n_max:
        warnings.warn(
            f"displacement |z|={abs(z):.3g} exceeds the guard "
            f"{DISPLACEMENT_GUARD_RATIO * n_max:.3g} at n_max={n_max}; "
            "truncation leakage may be significant",
            TruncationLeakageWarning,
            stacklevel=3,
        )


@lru_cache(maxsize=512)
def _single_mode_displacement_cached(z: complex, n_max: int) -> np.ndarray:
    a = _single_mode_ladder(n_max)
    # exp(x) with x = z a† - conj(z) a: diagonalize the Hermitian i x.
    herm = 1j * (z * a.conj().T - np.conjugate(z) * a)
    vals, vecs = np.linalg.eigh(herm)
    d = (vecs * np.exp(-1j * vals)) @ vecs.conj().T
    d.flags.writeable = False
    return d


def single_mode_displacement(z: complex, n_max: int) -> np.ndarray:
    """Truncated single-mode displacement exp{z a† - conj(z) a}."""
    _displacement_guard(z, n_max)
    return _single_mode_displacement_cached(complex(z), n_max)


def displacement_operator(z1: complex, z2: complex, dim: TruncationDim) -> np.ndarray:
    """Two-mode displacement D(z1) on mode 1 times D(z2) on mode 2."""
    d1 = single_mode_displacement(z1, dim.n_max)
    d2 = single_mode_displacement(z2, dim.n_max)
    return np.kron(d1, d2)


def displaced_fock_state(
    z1: complex, n1: int, z2: complex, n2: int, dim: TruncationDim
) -> np.ndarray:
    """State vector D(z1, z2)|n1, n2> on the truncated joint space."""
    if not (0 <= n1 <= dim.n_max and 0 <= n2 <= dim.n_max):
        raise ValueError(f"occupation ({n1}, {n2}) outside cutoff {dim.n_max}")
    col1 = single_mode_displacement(z1, dim.n_max)[:, n1]
    col2 = single_mode_displacement(z2, dim.n_max)[:, n2]
    return np.kron(col1, col2)


def coherent_state(z1: complex, z2: complex, dim: TruncationDim) -> np.ndarray:
    """Two-mode coherent state vector |z1, z2> = D(z1, z2)|0, 0>."""
    return displaced_fock_state(z1, 0, z2, 0, dim)


@dataclass(frozen=True)
class DensityOperator:
    """Density matrix on the truncated joint space, with its cutoff."""

    matrix: np.ndarray
    dim: TruncationDim

    @classmethod
    def from_state_vector(cls, vec: np.ndarray, dim: TruncationDim) -> "DensityOperator":
        vec = np.asarray(vec, dtype=complex)
        if vec.shape != (dim.dim,):
            raise ValueError(f"vector shape {vec.shape} does not match dim {dim.dim}")
        return cls(matrix=np.outer(vec, vec.conj()), dim=dim)

    @classmethod
    def displaced_fock(
        cls, z1: complex, n1: int, z2: complex, n2: int, dim: TruncationDim
    ) -> "DensityOperator":
        return cls.from_state_vector(displaced_fock_state(z1, n1, z2, n2, dim), dim)

    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    def purity(self) -> float:
        return float(np.einsum("ij,ji->", self.matrix, self.matrix).real)

    def validate(
        self,
        *,
        herm_tol: float = 1e-10,
        trace_tol: float = 1e-8,
        purity_tol: float | None = 1e-8,
    ):
        """Check hermiticity, trace and (optionally) purity; raise on failure.

        The trace of a truncated pure state sits in [1 - leakage, 1]; the
        tolerance bounds the acceptable leakage below 1 and only float
        roundoff is allowed above.
        """
        m = self.matrix
        herm = float(np.max(np.abs(m - m.conj().T)))
        if herm > herm_tol:
            raise ValueError(f"not hermitian: max |rho - rho†| = {herm:.3e}")
        tr = float(np.trace(m).real)
        if not (1.0 - trace_tol <= tr <= 1.0 + 1e-12):
            raise ValueError(f"trace {tr!r} outside [1 - {trace_tol:.1e}, 1]")
        if purity_tol is not None:
            sq = m @ m
            dev = float(np.max(np.abs(sq - m)))
            if dev > purity_tol:
                raise ValueError(f"not pure: max |rho^2 - rho| = {dev:.3e}")


def evolve(rho: DensityOperator, u: np.ndarray, *, unitarity_tol: float = 1e-10) -> DensityOperator:
    """Heisenberg-convention update rho -> u† rho u.

    With u = polarizer_unitary(theta), coherent labels transform by the
    matching label map (see coherent.polarizer_label_map).
    """
    n = rho.dim.dim
    if u.shape != (n, n):
        raise ValueError(f"unitary shape {u.shape} does not match dim {n}")
    defect = float(np.max(np.abs(u.conj().T @ u - np.eye(n))))
    if defect > unitarity_tol:
        raise ValueError(f"matrix is not unitary: max |u†u - 1| = {defect:.3e}")
    return DensityOperator(matrix=u.conj().T @ rho.matrix @ u, dim=rho.dim)


def triple_product_trace(
    r1: DensityOperator, r2: DensityOperator, r3: DensityOperator
) -> PhaseResult:
    """Bargmann invariant Tr(rho1 rho2 rho3) and its phase.

    Cyclic in its arguments; swapping any two conjugates the invariant.
    """
    if not (r1.dim == r2.dim == r3.dim):
        raise ValueError("density operators live on different truncations")
    inv = complex(np.einsum("ij,jk,ki->", r1.matrix, r2.matrix, r3.matrix, optimize=True))
    return phase_result(inv, METHOD_FOCK_ORACLE)
