"""Independent oracles for the test suite.

Everything here is computed by routes the library does not use: explicit
Fock amplitude series, closed-form overlap tables for displaced zero- and
one-photon states, the shoelace area formula, and plain finite
differences. Library results are compared against these, never against
other library results.
"""
from __future__ import annotations

import cmath
import math

import numpy as np


def transmission_matrix(theta: float) -> np.ndarray:
    """Intensity-coupling matrix of a polarizer rotated by theta:
    ((cos^2, cos sin), (sin cos, sin^2)). Its off-diagonal derivative at
    theta = 0 pins the mode-coupling generator used by the library."""
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c * c, c * s], [s * c, s * s]])


def coherent_amplitudes(z: complex, n_max: int) -> np.ndarray:
    """Fock amplitudes e^{-|z|^2/2} z^n / sqrt(n!) up to the cutoff."""
    out = np.zeros(n_max + 1, dtype=complex)
    amp = cmath.exp(-0.5 * abs(z) ** 2)
    for n in range(n_max + 1):
        out[n] = amp
        amp = amp * z / math.sqrt(n + 1)
    return out


def two_mode_coherent_vector(z1: complex, z2: complex, n_max: int) -> np.ndarray:
    """Joint amplitudes with mode 1 on the slow axis."""
    return np.kron(coherent_amplitudes(z1, n_max), coherent_amplitudes(z2, n_max))


def overlap_series(a: tuple, b: tuple, n_max: int) -> complex:
    """<a|b> summed over the truncated joint Fock basis."""
    va = two_mode_coherent_vector(a[0], a[1], n_max)
    vb = two_mode_coherent_vector(b[0], b[1], n_max)
    return complex(np.vdot(va, vb))


def displacement_phase(alpha: complex, beta: complex) -> complex:
    """D(alpha) D(beta) = displacement_phase * D(alpha + beta)."""
    return cmath.exp(-1j * (np.conjugate(alpha) * beta).imag)


def displaced_number_overlap(m: int, beta: complex, n: int) -> complex:
    """<m|D(beta)|n> for m, n in {0, 1}, closed form (Laguerre family)."""
    gauss = cmath.exp(-0.5 * abs(beta) ** 2)
    if (m, n) == (0, 0):
        return gauss
    if (m, n) == (1, 0):
        return beta * gauss
    if (m, n) == (0, 1):
        return -np.conjugate(beta) * gauss
    if (m, n) == (1, 1):
        return (1.0 - abs(beta) ** 2) * gauss
    raise ValueError("oracle table covers occupations 0 and 1 only")


def displaced_fock_overlap(m: int, alpha: complex, n: int, beta: complex) -> complex:
    """<D(alpha) m | D(beta) n> = e^{i Im(conj(alpha) beta)} <m|D(beta - alpha)|n>."""
    return cmath.exp(1j * (np.conjugate(alpha) * beta).imag) * displaced_number_overlap(
        m, beta - alpha, n
    )


def triple_invariant_independent(occupations, centers) -> complex:
    """Exact Tr(rho_a rho_b rho_c) for three displaced number states.

    occupations: three (n1, n2) pairs, entries in {0, 1}.
    centers: three (z1, z2) complex pairs.
    The trace of a product of pure states is the cyclic product of
    overlaps, and both factorize over the modes.
    """
    total = 1.0 + 0.0j
    for mode in range(2):
        for i, j in ((0, 1), (1, 2), (2, 0)):
            total *= displaced_fock_overlap(
                occupations[i][mode], centers[i][mode], occupations[j][mode], centers[j][mode]
            )
    return total


def shoelace_signed_area(p1, p2, p3) -> float:
    """Signed area of a triangle from (x, y) pairs."""
    (x1, y1), (x2, y2), (x3, y3) = p1, p2, p3
    return 0.5 * (x1 * (y2 - y3) + x2 * (y3 - y1) + x3 * (y1 - y2))


def central_difference(f, x: float, order: int, step: float = 1e-5) -> float:
    """Central finite difference of a scalar function, order 1 or 2."""
    if order == 1:
        return (f(x + step) - f(x - step)) / (2.0 * step)
    if order == 2:
        return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step)
    raise ValueError("order must be 1 or 2")


def number_operator_matrix(n_max: int) -> np.ndarray:
    return np.diag(np.arange(float(n_max + 1)))


def single_mode_annihilation_reference(n_max: int) -> np.ndarray:
    """Ladder matrix written out elementwise, <n-1|a|n> = sqrt(n)."""
    a = np.zeros((n_max + 1, n_max + 1), dtype=complex)
    for n in range(1, n_max + 1):
        a[n - 1, n] = math.sqrt(n)
    return a
