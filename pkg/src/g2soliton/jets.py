"""Truncated Taylor jets: exact-through-order derivatives of analytic profiles.

A Jet stores series coefficients c[n] = f^(n)(x0)/n! around one point, so the
pointwise transformation identities can be evaluated from genuinely analytic
derivatives (no finite differencing).  Jets of the Jacobi triple are grown
from the coupled first-order system sn' = cn dn, cn' = -sn dn,
dn' = -k^2 sn cn, which needs only the point values to seed it.
"""

from __future__ import annotations

import cmath
import math

from .elliptic import SingularDenominator, sncndn

_RECIPROCAL_FLOOR = 1e-12


class Jet:
    """Truncated power series around a point; index n holds f^(n)/n!."""

    __slots__ = ("coef",)

    def __init__(self, coef):
        self.coef = tuple(complex(c) for c in coef)
        if not self.coef:
            raise ValueError("a jet needs at least the value coefficient")

    @property
    def order(self) -> int:
        return len(self.coef) - 1

    def value(self, n: int = 0) -> complex:
        """The n-th derivative at the expansion point."""
        if n > self.order:
            raise ValueError(f"jet of order {self.order} cannot give derivative {n}")
        return self.coef[n] * math.factorial(n)

    @classmethod
    def constant(cls, value, order: int) -> "Jet":
        return cls((complex(value),) + (0j,) * order)

    @classmethod
    def variable(cls, x0, order: int) -> "Jet":
        if order == 0:
            return cls((complex(x0),))
        return cls((complex(x0), 1 + 0j) + (0j,) * (order - 1))

    def _wrap(self, other):
        if isinstance(other, Jet):
            return other
        if isinstance(other, (int, float, complex)):
            return Jet.constant(other, self.order)
        return None

    def __add__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return Jet(tuple(self.coef[i] + other.coef[i] for i in range(n + 1)))

    __radd__ = __add__

    def __neg__(self):
        return Jet(tuple(-c for c in self.coef))

    def __sub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return Jet(tuple(c * other for c in self.coef))
        if not isinstance(other, Jet):
            return NotImplemented
        n = min(self.order, other.order)
        out = []
        for m in range(n + 1):
            out.append(sum(self.coef[i] * other.coef[m - i] for i in range(m + 1)))
        return Jet(out)

    __rmul__ = __mul__

    def reciprocal(self) -> "Jet":
        if abs(self.coef[0]) < _RECIPROCAL_FLOOR:
            raise SingularDenominator("jet value too close to zero to invert")
        inv0 = 1 / self.coef[0]
        out = [inv0]
        for m in range(1, self.order + 1):
            acc = sum(self.coef[i] * out[m - i] for i in range(1, m + 1))
            out.append(-inv0 * acc)
        return Jet(out)

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex)):
            return self * (1 / other)
        if not isinstance(other, Jet):
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = Jet.constant(1, self.order)
        for _ in range(n):
            result = result * self
        return result

    def deriv(self, times: int = 1) -> "Jet":
        """Jet of f', one order shorter."""
        jet = self
        for _ in range(times):
            if jet.order == 0:
                raise ValueError("jet too short to differentiate")
            jet = Jet(tuple((i + 1) * jet.coef[i + 1] for i in range(jet.order)))
        return jet

    def __repr__(self):
        return f"Jet({self.coef})"


def sn_jet_triple(x0, k, order: int, scale=1.0, shift=0.0):
    """Jets of sn, cn, dn of (scale*x + shift) around x = x0."""
    z0 = complex(scale) * complex(x0) + complex(shift)
    s0, c0, d0 = sncndn(z0, k)
    k2 = complex(k) ** 2
    sc = complex(scale)
    s, c, d = [s0], [c0], [d0]
    for n in range(order):
        conv_cd = sum(c[i] * d[n - i] for i in range(n + 1))
        conv_sd = sum(s[i] * d[n - i] for i in range(n + 1))
        conv_sc = sum(s[i] * c[n - i] for i in range(n + 1))
        s.append(sc * conv_cd / (n + 1))
        c.append(-sc * conv_sd / (n + 1))
        d.append(-k2 * sc * conv_sc / (n + 1))
    return Jet(s), Jet(c), Jet(d)


def sn_jet(x0, k, order: int, scale=1.0, shift=0.0) -> Jet:
    return sn_jet_triple(x0, k, order, scale=scale, shift=shift)[0]


def trig_jet(x0, order: int, terms) -> Jet:
    """Jet of sum(amp * sin(omega*x + phase)) around x0; terms may be complex."""
    coef = []
    for n in range(order + 1):
        total = 0j
        for amp, omega, phase in terms:
            total += (
                complex(amp)
                * complex(omega) ** n
                * cmath.sin(complex(omega) * complex(x0) + complex(phase) + n * math.pi / 2)
            )
        coef.append(total / math.factorial(n))
    return Jet(coef)
