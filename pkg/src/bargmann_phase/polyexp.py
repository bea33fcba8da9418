"""Exact partial derivatives of functions poly(x) * exp(quadratic(x)).

Delta-derivative pairings need mixed partials of test functions at a
point, to machine precision. Every test function used here is a sparse
polynomial times the exponential of an inhomogeneous quadratic, a family
closed under differentiation, so derivatives are computed symbolically:

    d/dx_v [ p(x) e^{Q(x)} ] = [ d p/dx_v + p * dQ/dx_v ] e^{Q(x)}

with dQ/dx_v linear. A finite-difference fallback is provided for
validating the symbolic route and for pairing against black-box
functions.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

__all__ = ["SparsePoly", "PolyExpFunction", "NumericalFunction"]


class SparsePoly:
    """Sparse multivariate polynomial, exponent tuple -> complex coefficient."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: dict | None = None):
        self.nvars = nvars
        self.coeffs = {}
        if coeffs:
            for expo, c in coeffs.items():
                if c != 0:
                    self.coeffs[tuple(expo)] = complex(c)

    @classmethod
    def constant(cls, nvars: int, value: complex = 1.0) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def linear(cls, nvars: int, weights, const: complex = 0.0) -> "SparsePoly":
        """sum_v weights[v] x_v + const."""
        poly = cls(nvars)
        for v, w in enumerate(weights):
            if w != 0:
                expo = [0] * nvars
                expo[v] = 1
                poly.coeffs[tuple(expo)] = complex(w)
        if const != 0:
            poly.coeffs[(0,) * nvars] = complex(const)
        return poly

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = SparsePoly(self.nvars, self.coeffs)
        for expo, c in other.coeffs.items():
            new = out.coeffs.get(expo, 0.0) + c
            if new == 0:
                out.coeffs.pop(expo, None)
            else:
                out.coeffs[expo] = new
        return out

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        out = SparsePoly(self.nvars)
        acc = out.coeffs
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                new = acc.get(expo, 0.0) + c1 * c2
                if new == 0:
                    acc.pop(expo, None)
                else:
                    acc[expo] = new
        return out

    def scaled(self, factor: complex) -> "SparsePoly":
        if factor == 0:
            return SparsePoly(self.nvars)
        return SparsePoly(self.nvars, {e: c * factor for e, c in self.coeffs.items()})

    def derivative(self, var: int) -> "SparsePoly":
        out = SparsePoly(self.nvars)
        for expo, c in self.coeffs.items():
            k = expo[var]
            if k:
                lowered = list(expo)
                lowered[var] = k - 1
                out.coeffs[tuple(lowered)] = c * k
        return out

    def evaluate(self, point) -> complex:
        total = 0.0 + 0.0j
        for expo, c in self.coeffs.items():
            term = c
            for v, k in enumerate(expo):
                if k:
                    term *= point[v] ** k
            total += term
        return total


@dataclass(frozen=True)
class PolyExpFunction:
    """f(x) = poly(x) * exp{ x·H·x / 2 + b·x + c } over nvars real variables."""

    poly: SparsePoly
    quad: np.ndarray
    lin: np.ndarray
    const: complex = 0.0

    @classmethod
    def gaussian_exponent(cls, nvars: int, quad=None, lin=None, const: complex = 0.0,
                          poly: SparsePoly | None = None) -> "PolyExpFunction":
        quad = np.zeros((nvars, nvars), dtype=complex) if quad is None else np.asarray(quad, dtype=complex)
        lin = np.zeros(nvars, dtype=complex) if lin is None else np.asarray(lin, dtype=complex)
        if quad.shape != (nvars, nvars) or not np.allclose(quad, quad.T):
            raise ValueError("quad must be a symmetric nvars x nvars matrix")
        poly = SparsePoly.constant(nvars) if poly is None else poly
        return cls(poly=poly, quad=quad, lin=lin, const=complex(const))

    @property
    def nvars(self) -> int:
        return self.poly.nvars

    def exponent_at(self, point) -> complex:
        x = np.asarray(point, dtype=float)
        return complex(0.5 * x @ self.quad @ x + self.lin @ x + self.const)

    def value(self, point) -> complex:
        return self.poly.evaluate(point) * cmath.exp(self.exponent_at(point))

    def partial(self, orders, point) -> complex:
        """Mixed partial d^{orders} f evaluated at point, exactly."""
        if len(orders) != self.nvars:
            raise ValueError("orders length must match variable count")
        poly = self.poly
        for v, order in enumerate(orders):
            for _ in range(order):
                grad_q = SparsePoly.linear(self.nvars, self.quad[v], self.lin[v])
                poly = poly.derivative(v) + poly * grad_q
        return poly.evaluate(point) * cmath.exp(self.exponent_at(point))

    def translated(self, offset) -> "PolyExpFunction":
        """f(x + offset) as a new PolyExpFunction (used by covariance tests)."""
        d = np.asarray(offset, dtype=float)
        # exponent: Q(x+d) = x H x/2 + (b + H d) x + Q(d)
        new_lin = self.lin + self.quad @ d
        new_const = self.const + complex(0.5 * d @ self.quad @ d + self.lin @ d)
        # polynomial: substitute x -> x + d via per-variable binomial expansion
        poly = SparsePoly(self.nvars)
        from math import comb

        for expo, c in self.poly.coeffs.items():
            expanded = SparsePoly.constant(self.nvars, c)
            for v, k in enumerate(expo):
                if k == 0:
                    continue
                shifted = SparsePoly(self.nvars)
                for j in range(k + 1):
                    e = [0] * self.nvars
                    e[v] = j
                    shifted.coeffs[tuple(e)] = comb(k, j) * d[v] ** (k - j)
                expanded = expanded * shifted
            poly = poly + expanded
        return PolyExpFunction(poly=poly, quad=self.quad, lin=new_lin, const=new_const)


_EPS = 2.22e-16


@dataclass
class NumericalFunction:
    """Central finite differences on a black-box function of nvars reals.

    Validation fallback only. The base step (default 1e-5) balances
    truncation against cancellation for first and second derivatives of
    order-one functions; for higher total orders the product stencil
    widens the step to eps^{1/(order+2)}, the usual balance point.
    """

    func: object
    nvars: int
    step: float = 1e-5

    def value(self, point) -> complex:
        return complex(self.func(tuple(point)))

    def partial(self, orders, point) -> complex:
        if len(orders) != self.nvars:
            raise ValueError("orders length must match variable count")
        point = tuple(float(x) for x in point)
        total = sum(orders)
        if total == 0:
            return self.value(point)
        h = self.step if total <= 2 else max(self.step, _EPS ** (1.0 / (total + 2)))
        stencils = []
        for o in orders:
            if o == 0:
                stencils.append(((0.0, 1.0),))
            elif o == 1:
                stencils.append(((h, 0.5 / h), (-h, -0.5 / h)))
            elif o == 2:
                stencils.append(((h, 1.0 / (h * h)), (0.0, -2.0 / (h * h)), (-h, 1.0 / (h * h))))
            else:
                raise ValueError("finite differences support orders 0..2 per variable")
        import itertools

        total_val = 0.0 + 0.0j
        for combo in itertools.product(*stencils):
            moved = tuple(p + c[0] for p, c in zip(point, combo))
            weight = 1.0
            for _, w in combo:
                weight *= w
            total_val += weight * complex(self.func(moved))
        return total_val
