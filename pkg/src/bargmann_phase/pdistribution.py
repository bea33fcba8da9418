"""Diagonal coherent-state (P) representations of low Fock states.

A state rho is written rho = integral P(z1, z2) |z1, z2><z1, z2| d^2z1 d^2z2
with z = q + ip per mode. For Fock states the weight P is a finite sum of
derivatives of delta functions times a divergent Gaussian envelope
exp{+|z - center|^2}; the envelope is attached per term and recentres
under displacement, so a displaced state's P is the rigidly translated P.

Normalization convention, fixed here and used consistently by the pairing
and by the phase-space invariant engine: the flat measure constants are
absorbed into the term coefficients, so that

    pair(P, f) = integral P(x) f(x) dx        (absorbed measure)

reproduces matrix elements directly: pair(P, f_mn) = <m|rho|n> with
f_mn(z) = <m|z><z|n>, and pair(P, 1) = Tr rho = 1. Under this convention
the per-mode factors are

    |0>:  delta(q - q0) delta(p - p0)
    |1>:  (1/4) [ d^2/dq^2 + d^2/dp^2 ] applied to the deltas

against the recentred envelope. Second derivatives paired with f pick up
envelope curvature: the effective weights at the center are f for order
0, f' for order 1, and f'' + 2 f for order 2.

Two-mode states are tensor products of the per-mode factors. Occupations
above 1 are outside the supported family.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .polyexp import PolyExpFunction, SparsePoly

__all__ = [
    "PhaseSpacePoint",
    "DeltaDerivativeTerm",
    "QuasiProbability",
    "mehta_p_function",
    "pair",
    "fock_element_function",
    "gaussian_smear_function",
    "constant_function",
    "reconstruct_density_element",
]

@dataclass(frozen=True)
class PhaseSpacePoint:
    """Point (q, p) in a single mode's phase plane; z = q + ip."""

    q: float
    p: float

    def __post_init__(self):
        if not (math.isfinite(self.q) and math.isfinite(self.p)):
            raise ValueError("phase-space coordinates must be finite")

    @classmethod
    def from_complex(cls, z: complex) -> "PhaseSpacePoint":
        return cls(q=z.real, p=z.imag)

    def to_complex(self) -> complex:
        return complex(self.q, self.p)

    def shifted(self, dq: float, dp: float) -> "PhaseSpacePoint":
        return PhaseSpacePoint(self.q + dq, self.p + dp)


ORIGIN = PhaseSpacePoint(0.0, 0.0)


@dataclass(frozen=True)
class DeltaDerivativeTerm:
    """coeff * envelope * product of delta derivatives at a common center.

    orders = (dq1, dp1, dq2, dp2) are the delta derivative orders per axis,
    each in {0, 1, 2}. The envelope (when the owning QuasiProbability has
    it enabled) is exp{+(x - center)^2} per axis, centred with the deltas.
    """

    coeff: complex
    center1: PhaseSpacePoint
    center2: PhaseSpacePoint
    orders: tuple[int, int, int, int]

    def __post_init__(self):
        if len(self.orders) != 4 or any(o not in (0, 1, 2) for o in self.orders):
            raise ValueError(f"orders must be four values in 0..2, got {self.orders}")
        if not np.isfinite(self.coeff) or self.coeff == 0:
            raise ValueError(f"term coefficient must be finite and nonzero, got {self.coeff}")

    @property
    def centers(self) -> tuple[float, float, float, float]:
        return (self.center1.q, self.center1.p, self.center2.q, self.center2.p)

    def shifted(self, d1: PhaseSpacePoint, d2: PhaseSpacePoint) -> "DeltaDerivativeTerm":
        return DeltaDerivativeTerm(
            coeff=self.coeff,
            center1=self.center1.shifted(d1.q, d1.p),
            center2=self.center2.shifted(d2.q, d2.p),
            orders=self.orders,
        )


@dataclass(frozen=True)
class QuasiProbability:
    """Finite delta-derivative representation of a P distribution."""

    terms: tuple[DeltaDerivativeTerm, ...]
    envelope: bool = True

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a QuasiProbability needs at least one term")

    def shifted(self, d1: PhaseSpacePoint, d2: PhaseSpacePoint) -> "QuasiProbability":
        """Rigid translation by a displacement (d1 on mode 1, d2 on mode 2)."""
        return QuasiProbability(
            terms=tuple(t.shifted(d1, d2) for t in self.terms), envelope=self.envelope
        )

    def scaled(self, factor: complex) -> "QuasiProbability":
        return QuasiProbability(
            terms=tuple(
                DeltaDerivativeTerm(t.coeff * factor, t.center1, t.center2, t.orders)
                for t in self.terms
            ),
            envelope=self.envelope,
        )

    def combined(self, other: "QuasiProbability") -> "QuasiProbability":
        """Formal sum; pairing is linear over it."""
        if self.envelope != other.envelope:
            raise ValueError("cannot combine representations with different envelopes")
        return QuasiProbability(terms=self.terms + other.terms, envelope=self.envelope)


# Per-mode delta-derivative factors, coefficients in the absorbed-measure
# convention: list of (coefficient, (dq, dp)).
_MODE_FACTORS = {
    0: ((1.0, (0, 0)),),
    1: ((0.25, (2, 0)), (0.25, (0, 2))),
}


def mehta_p_function(
    occupation: tuple[int, int],
    shift: tuple[PhaseSpacePoint, PhaseSpacePoint] = (ORIGIN, ORIGIN),
) -> QuasiProbability:
    """P representation of a (displaced) two-mode Fock state |n1, n2>.

    Supported occupations are {0, 1} per mode. The shift places the state
    at phase-space centers (c1, c2), matching the displaced Fock state
    D(c1, c2)|n1, n2> with c = q + ip.
    """
    n1, n2 = occupation
    if n1 not in _MODE_FACTORS or n2 not in _MODE_FACTORS:
        raise ValueError(f"unsupported occupation {occupation}; modes must be 0 or 1")
    c1, c2 = shift
    terms = []
    for (w1, o1), (w2, o2) in itertools.product(_MODE_FACTORS[n1], _MODE_FACTORS[n2]):
        terms.append(
            DeltaDerivativeTerm(
                coeff=w1 * w2,
                center1=c1,
                center2=c2,
                orders=(o1[0], o1[1], o2[0], o2[1]),
            )
        )
    return QuasiProbability(terms=tuple(terms))


# Envelope Leibniz weights at the term center: pairing a delta derivative
# of the given order against envelope * f contracts to these (f-order,
# weight) pairs. g(t) = e^{t^2} has g(0)=1, g'(0)=0, g''(0)=2.
_ENVELOPE_CONTRACTION = {
    0: ((0, 1.0),),
    1: ((1, 1.0),),
    2: ((2, 1.0), (0, 2.0)),
}
_BARE_CONTRACTION = {o: ((o, 1.0),) for o in (0, 1, 2)}


def pair(p: QuasiProbability, f) -> complex:
    """Distributional pairing integral P(x) f(x) dx in the absorbed measure.

    f must expose partial(orders, point). Each delta derivative of order o
    contributes (-1)^o times the o-th derivative of (envelope * f) at the
    term center; the envelope contraction reduces that to derivatives of f
    alone via the weights above.
    """
    contraction = _ENVELOPE_CONTRACTION if p.envelope else _BARE_CONTRACTION
    total = 0.0 + 0.0j
    for term in p.terms:
        sign = -1.0 if sum(term.orders) % 2 else 1.0
        point = term.centers
        acc = 0.0 + 0.0j
        for parts in itertools.product(*(contraction[o] for o in term.orders)):
            weight = 1.0
            for _, w in parts:
                weight *= w
            f_orders = tuple(k for k, _ in parts)
            acc += weight * f.partial(f_orders, point)
        total += term.coeff * sign * acc
    return complex(total)


def constant_function(value: complex = 1.0) -> PolyExpFunction:
    return PolyExpFunction.gaussian_exponent(4, poly=SparsePoly.constant(4, value))


def fock_element_function(bra: tuple[int, int], ket: tuple[int, int]) -> PolyExpFunction:
    """f(x) = <bra|z><z|ket> as a function of (q1, p1, q2, p2).

    Per mode, <m|z><z|n> = e^{-|z|^2} z^m conj(z)^n / sqrt(m! n!).
    Pairing the P of rho against this yields <bra|rho|ket> directly.
    """
    poly = SparsePoly.constant(4)
    for mode, (m, n) in enumerate(zip(bra, ket)):
        if m < 0 or n < 0:
            raise ValueError("occupations must be nonnegative")
        vq, vp = 2 * mode, 2 * mode + 1
        z_plus = SparsePoly.linear(4, [1.0 if v == vq else (1j if v == vp else 0.0) for v in range(4)])
        z_minus = SparsePoly.linear(4, [1.0 if v == vq else (-1j if v == vp else 0.0) for v in range(4)])
        for _ in range(m):
            poly = poly * z_plus
        for _ in range(n):
            poly = poly * z_minus
        poly = poly.scaled(1.0 / math.sqrt(math.factorial(m) * math.factorial(n)))
    quad = -2.0 * np.eye(4)
    return PolyExpFunction.gaussian_exponent(4, quad=quad, poly=poly)


def gaussian_smear_function(
    sigma: float,
    center: tuple[float, float, float, float] = (0.0, 0.0, 0.0, 0.0),
    modes: tuple[int, ...] = (1, 2),
) -> PolyExpFunction:
    """Normalized-height Gaussian exp{-(x - c)^2 / (2 sigma^2)} on the
    selected modes' phase planes, constant in the other variables.

    With modes=(1,) this is the mode-1 marginal smear used as the
    nonclassicality witness; its pairing against a single-photon P is
    1 - 1/(2 sigma^2), strictly negative for sigma < 1/sqrt(2).
    """
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    quad = np.zeros((4, 4), dtype=complex)
    lin = np.zeros(4, dtype=complex)
    const = 0.0 + 0.0j
    for mode in modes:
        if mode not in (1, 2):
            raise ValueError("modes are numbered 1 and 2")
        for v in (2 * (mode - 1), 2 * (mode - 1) + 1):
            quad[v, v] = -1.0 / sigma**2
            lin[v] = center[v] / sigma**2
            const += -center[v] ** 2 / (2.0 * sigma**2)
    return PolyExpFunction.gaussian_exponent(4, quad=quad, lin=lin, const=const)


def reconstruct_density_element(
    p: QuasiProbability, bra: tuple[int, int], ket: tuple[int, int]
) -> complex:
    """<bra|rho|ket> recovered from the P representation alone."""
    return pair(p, fock_element_function(bra, ket))
