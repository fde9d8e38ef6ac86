"""Exact arithmetic in the coordinate ring of a genus-two hyperelliptic curve.

The curve is y_i^2 = f(x_i) = l6*x_i^6 + ... + l1*x_i + l0 for two independent
points (x1, y1), (x2, y2).  Polynomials live in the quotient ring
Q[x1, x2, y1, y2] / (y1^2 - f(x1), y2^2 - f(x2)), kept in y-reduced canonical
form (every y exponent is 0 or 1).  `Fld` elements are quotients of such
polynomials whose denominator is free of y1, y2; equality-to-zero of a
numerator term map is therefore an exact decision procedure for identities
between hyperelliptic functions.

Coefficients are exact rationals (gmpy2.mpq when available, else
fractions.Fraction).  Numeric probing is done with mpmath at a configurable
precision (PROBE_DIGITS environment variable, default 30 digits).
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from typing import Mapping, NamedTuple

import mpmath as mp

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is an ordinary dependency
    from fractions import Fraction as Rat

_RAT_TYPE = type(Rat(0))

DEFAULT_PROBE_DIGITS = 30


class CurveRingError(Exception):
    pass


class DivisionByZero(CurveRingError, ZeroDivisionError):
    """Division by a field element that reduces to zero."""


class PoleAtPoint(CurveRingError):
    """The denominator of a field element vanishes at the probe point."""


class OffCurve(CurveRingError):
    """Exact evaluation was requested where f(x_i) is not a rational square."""


def probe_digits() -> int:
    """Working precision (decimal digits) for numeric probes."""
    try:
        return max(15, int(os.environ.get("PROBE_DIGITS", DEFAULT_PROBE_DIGITS)))
    except ValueError:
        return DEFAULT_PROBE_DIGITS


def _to_rat(value) -> Rat:
    if isinstance(value, _RAT_TYPE):
        return value
    if isinstance(value, int):
        return Rat(value)
    if isinstance(value, str):
        return Rat(value)
    # fractions.Fraction or anything exposing integer numerator/denominator
    num = getattr(value, "numerator", None)
    den = getattr(value, "denominator", None)
    if num is not None and den is not None:
        return Rat(int(num), int(den))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_to_mp(r) -> mp.mpf:
    """Exact rational -> mpmath float at the current working precision."""
    return mp.mpf(int(r.numerator)) / mp.mpf(int(r.denominator))


def rat_sqrt(r):
    """Exact square root of a nonnegative rational, or None if not a square."""
    if r < 0:
        return None
    num, den = int(r.numerator), int(r.denominator)
    sn, sd = math.isqrt(num), math.isqrt(den)
    if sn * sn != num or sd * sd != den:
        return None
    return Rat(sn, sd)


@dataclass(frozen=True)
class CurveParams:
    """The seven rational coefficients l0..l6 of the sextic f(x)."""

    lambdas: tuple

    def __post_init__(self):
        lams = tuple(_to_rat(v) for v in self.lambdas)
        if len(lams) != 7:
            raise ValueError("expected exactly 7 coefficients l0..l6")
        if all(v == 0 for v in lams):
            raise ValueError("f(x) must not be identically zero")
        object.__setattr__(self, "lambdas", lams)

    @classmethod
    def from_text(cls, text: str) -> "CurveParams":
        """Parse `lambda = [l0,l1,l2,l3,l4,l5,l6]`; entries are `p/q` or ints.

        A bare comma-separated list (with or without brackets) is accepted too.
        """
        body = text.strip()
        m = re.match(r"^\s*lambda\s*=\s*(.*)$", body)
        if m:
            body = m.group(1).strip()
        body = body.strip("[]")
        entries = [e.strip() for e in body.split(",") if e.strip()]
        if len(entries) != 7:
            raise ValueError(f"expected 7 lambda entries, got {len(entries)}")
        return cls(tuple(Rat(e) for e in entries))

    @property
    def weierstrass_usable(self) -> bool:
        return self.lambdas[5] != 0

    @property
    def jacobi_usable(self) -> bool:
        return self.lambdas[1] != 0

    def dual(self) -> "CurveParams":
        """Coefficient reversal l_j <-> l_{6-j} (the x -> 1/x involution)."""
        return CurveParams(tuple(reversed(self.lambdas)))

    def f_value(self, x) -> Rat:
        """f(x) for an exact rational x (Horner)."""
        x = _to_rat(x)
        acc = Rat(0)
        for c in reversed(self.lambdas):
            acc = acc * x + c
        return acc

    def f_value_mp(self, x):
        acc = mp.mpf(0)
        for c in reversed(self.lambdas):
            acc = acc * x + rat_to_mp(c)
        return acc

    def as_strings(self) -> list[str]:
        return [str(v) for v in self.lambdas]

    def __str__(self) -> str:
        return "lambda = [" + ",".join(self.as_strings()) + "]"


class Mono(NamedTuple):
    """Monomial exponents x1^ex1 * x2^ex2 * y1^ey1 * y2^ey2 (ey in {0,1})."""

    ex1: int
    ex2: int
    ey1: int
    ey2: int

    @property
    def total_degree(self) -> int:
        return self.ex1 + self.ex2 + self.ey1 + self.ey2


def _order_key(m) -> tuple:
    # graded lexicographic, x1 > x2 > y1 > y2
    return (m[0] + m[1] + m[2] + m[3], m[0], m[1], m[2])


def _reduce_terms(params: CurveParams, items) -> dict:
    """Substitute y_i^2 -> f(x_i) until every y exponent is 0 or 1."""
    lams = params.lambdas
    out: dict = {}
    stack = list(items)
    while stack:
        mono, coef = stack.pop()
        if coef == 0:
            continue
        e1, e2, a1, a2 = mono
        if a1 >= 2:
            for j in range(7):
                if lams[j] != 0:
                    stack.append(((e1 + j, e2, a1 - 2, a2), coef * lams[j]))
        elif a2 >= 2:
            for j in range(7):
                if lams[j] != 0:
                    stack.append(((e1, e2 + j, a1, a2 - 2), coef * lams[j]))
        else:
            prev = out.get(mono)
            if prev is None:
                out[mono] = coef
            else:
                s = prev + coef
                if s == 0:
                    del out[mono]
                else:
                    out[mono] = s
    return out


class Poly:
    """Sparse y-reduced polynomial over the curve's coefficient field.

    Immutable by convention: operations return new instances and never touch
    `terms` after construction, so values are safe to share across workers.
    """

    __slots__ = ("params", "terms")

    def __init__(self, params: CurveParams, terms: Mapping | None = None, *, _clean: bool = False):
        self.params = params
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = dict(terms)
        else:
            self.terms = _reduce_terms(params, [(tuple(m), _to_rat(c)) for m, c in terms.items()])

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, params) -> "Poly":
        return cls(params, {}, _clean=True)

    @classmethod
    def const(cls, params, value) -> "Poly":
        v = _to_rat(value)
        return cls(params, {(0, 0, 0, 0): v} if v != 0 else {}, _clean=True)

    @classmethod
    def variable(cls, params, name: str) -> "Poly":
        idx = {"x1": 0, "x2": 1, "y1": 2, "y2": 3}[name]
        mono = tuple(1 if i == idx else 0 for i in range(4))
        return cls(params, {mono: Rat(1)}, _clean=True)

    @classmethod
    def f_of(cls, params, which: int) -> "Poly":
        """The sextic f(x1) (which=1) or f(x2) (which=2) as a polynomial."""
        terms = {}
        for j, lam in enumerate(params.lambdas):
            if lam != 0:
                terms[(j, 0, 0, 0) if which == 1 else (0, j, 0, 0)] = lam
        return cls(params, terms, _clean=True)

    @classmethod
    def fprime_of(cls, params, which: int) -> "Poly":
        """d f / d x evaluated in x1 or x2."""
        terms = {}
        for j, lam in enumerate(params.lambdas):
            if j >= 1 and lam != 0:
                terms[(j - 1, 0, 0, 0) if which == 1 else (0, j - 1, 0, 0)] = j * lam
        return cls(params, terms, _clean=True)

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0, 0, 0) in self.terms)

    def constant_value(self) -> Rat:
        if self.is_zero():
            return Rat(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms[(0, 0, 0, 0)]

    def has_y(self) -> bool:
        return any(m[2] or m[3] for m in self.terms)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def leading(self) -> tuple:
        """(monomial, coefficient) under graded lex with x1 > x2 > y1 > y2."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=_order_key)
        return m, self.terms[m]

    def _same_ring(self, other: "Poly") -> None:
        if self.params is not other.params and self.params.lambdas != other.params.lambdas:
            raise ValueError("polynomials live over different curves")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.params.lambdas == other.params.lambdas and self.terms == other.terms

    def __hash__(self):
        return hash((self.params.lambdas, frozenset(self.terms.items())))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, _RAT_TYPE)):
            other = Poly.const(self.params, other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._same_ring(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            prev = out.get(m)
            if prev is None:
                out[m] = c
            else:
                s = prev + c
                if s == 0:
                    del out[m]
                else:
                    out[m] = s
        return Poly(self.params, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.params, {m: -c for m, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        if isinstance(other, (int, _RAT_TYPE)):
            other = Poly.const(self.params, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, _RAT_TYPE)):
            c = _to_rat(other)
            if c == 0:
                return Poly.zero(self.params)
            return Poly(self.params, {m: v * c for m, v in self.terms.items()}, _clean=True)
        if not isinstance(other, Poly):
            return NotImplemented
        self._same_ring(other)
        raw: dict = {}
        needs_reduce = False
        for (a1, a2, b1, b2), c1 in self.terms.items():
            for (d1, d2, e1, e2), c2 in other.terms.items():
                key = (a1 + d1, a2 + d2, b1 + e1, b2 + e2)
                if key[2] > 1 or key[3] > 1:
                    needs_reduce = True
                prev = raw.get(key)
                if prev is None:
                    raw[key] = c1 * c2
                else:
                    raw[key] = prev + c1 * c2
        if needs_reduce:
            return Poly(self.params, _reduce_terms(self.params, raw.items()), _clean=True)
        return Poly(self.params, {m: c for m, c in raw.items() if c != 0}, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = Poly.const(self.params, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus and substitutions ----------------------------------------

    def partial(self, var: int) -> "Poly":
        """Formal partial derivative treating x1,x2,y1,y2 as independent (var 0..3)."""
        out = {}
        for m, c in self.terms.items():
            e = m[var]
            if e == 0:
                continue
            key = tuple(v - 1 if i == var else v for i, v in enumerate(m))
            out[key] = c * e
        return Poly(self.params, out, _clean=True)

    def swap_points(self) -> "Poly":
        """Simultaneous exchange x1<->x2, y1<->y2."""
        return Poly(
            self.params,
            {(m[1], m[0], m[3], m[2]): c for m, c in self.terms.items()},
            _clean=True,
        )

    def content(self) -> Rat:
        """Positive rational c with self/c integer-coefficient and primitive."""
        if not self.terms:
            return Rat(1)
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = math.gcd(num_gcd, abs(int(c.numerator)))
            d = int(c.denominator)
            den_lcm = den_lcm // math.gcd(den_lcm, d) * d
        return Rat(num_gcd, den_lcm)

    def common_monomial(self) -> tuple:
        """Componentwise minimum exponent vector over all terms."""
        if not self.terms:
            return (0, 0, 0, 0)
        mins = [None] * 4
        for m in self.terms:
            for i in range(4):
                if mins[i] is None or m[i] < mins[i]:
                    mins[i] = m[i]
        return tuple(mins)

    def shift_down(self, mono: tuple) -> "Poly":
        """Divide by a monomial known to divide every term."""
        if mono == (0, 0, 0, 0):
            return self
        out = {}
        for m, c in self.terms.items():
            key = tuple(m[i] - mono[i] for i in range(4))
            if any(v < 0 for v in key):
                raise ValueError("monomial does not divide all terms")
            out[key] = c
        return Poly(self.params, out, _clean=True)

    def try_divide(self, divisor: "Poly"):
        """Exact division by a y-free polynomial; None if it does not divide.

        y-free divisors act sector-wise on the free module basis
        {1, y1, y2, y1*y2}, so ordinary multivariate division applies.
        """
        self._same_ring(divisor)
        if divisor.is_zero():
            raise DivisionByZero("division by zero polynomial")
        if divisor.has_y():
            raise ValueError("divisor must be free of y1, y2")
        if self.is_zero():
            return self
        lead_m, lead_c = divisor.leading()
        rem = dict(self.terms)
        quo: dict = {}
        div_items = list(divisor.terms.items())
        while rem:
            m = max(rem, key=_order_key)
            c = rem[m]
            q0 = m[0] - lead_m[0]
            q1 = m[1] - lead_m[1]
            if q0 < 0 or q1 < 0:
                return None
            qm = (q0, q1, m[2], m[3])
            qc = c / lead_c
            quo[qm] = qc
            for dm, dc in div_items:
                key = (qm[0] + dm[0], qm[1] + dm[1], qm[2], qm[3])
                prev = rem.get(key)
                val = (prev if prev is not None else Rat(0)) - qc * dc
                if val == 0:
                    rem.pop(key, None)
                else:
                    rem[key] = val
        return Poly(self.params, quo, _clean=True)

    # -- evaluation ---------------------------------------------------------

    def eval_exact(self, x1, x2, y1, y2) -> Rat:
        x1, x2, y1, y2 = (_to_rat(v) for v in (x1, x2, y1, y2))
        total = Rat(0)
        for (e1, e2, a1, a2), c in self.terms.items():
            total += c * x1**e1 * x2**e2 * y1**a1 * y2**a2
        return total

    def eval_mp(self, x1, x2, y1, y2):
        total = mp.mpc(0)
        for (e1, e2, a1, a2), c in self.terms.items():
            total += rat_to_mp(c) * x1**e1 * x2**e2 * y1**a1 * y2**a2
        return total

    def eval_mp_scale(self, x1, x2, y1, y2):
        """Sum of term magnitudes, for relative-error scaling of probes."""
        total = mp.mpf(0)
        for (e1, e2, a1, a2), c in self.terms.items():
            total += abs(rat_to_mp(c) * x1**e1 * x2**e2 * y1**a1 * y2**a2)
        return total

    # -- display -------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_order_key, reverse=True):
            c = self.terms[m]
            factors = []
            for name, e in zip(("x1", "x2", "y1", "y2"), m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(f"{c}")
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def reduce_y(params: CurveParams, raw_terms: Mapping) -> Poly:
    """Reduce arbitrary y-exponents modulo y_i^2 = f(x_i)."""
    return Poly(params, raw_terms)


def _x1_minus_x2(params) -> Poly:
    return Poly(params, {(1, 0, 0, 0): Rat(1), (0, 1, 0, 0): Rat(-1)}, _clean=True)


class Fld:
    """Element of the curve's function field: Poly / y-free Poly, normalized.

    Normal form: denominator is integer-primitive with positive leading
    coefficient; numerator and denominator share no common monomial, no
    common rational content, and no common power of (x1 - x2).  Equality of
    a/b and c/d holds iff a*d - c*b reduces to the zero polynomial.
    """

    __slots__ = ("num", "den", "_struct")

    def __init__(self, num: Poly, den: Poly | None = None):
        params = num.params
        if den is None:
            den = Poly.const(params, 1)
        if den.has_y():
            num, den = _clear_y_denominator(num, den)
        if den.is_zero():
            raise DivisionByZero("denominator reduces to zero")
        if num.is_zero():
            self.num = Poly.zero(params)
            self.den = Poly.const(params, 1)
            self._struct = (Rat(1), 0, 0, 0)
            return
        # common monomial in x1, x2 (denominator carries no y)
        gn = num.common_monomial()
        gd = den.common_monomial()
        g = (min(gn[0], gd[0]), min(gn[1], gd[1]), 0, 0)
        if g != (0, 0, 0, 0):
            num = num.shift_down(g)
            den = den.shift_down(g)
        # cancel shared powers of (x1 - x2); keeps flow derivatives compact
        binom = _x1_minus_x2(params)
        while True:
            qd = den.try_divide(binom)
            if qd is None:
                break
            qn = num.try_divide(binom)
            if qn is None:
                break
            num, den = qn, qd
        # scale so den is integer-primitive with positive leading coefficient
        c = den.content()
        _, lead = den.leading()
        if lead < 0:
            c = -c
        if c != 1:
            inv = 1 / c
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den
        self._struct = _den_structure(den)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_poly(cls, p: Poly) -> "Fld":
        return cls(p)

    @classmethod
    def const(cls, params, value) -> "Fld":
        return cls(Poly.const(params, value))

    @classmethod
    def variable(cls, params, name: str) -> "Fld":
        return cls(Poly.variable(params, name))

    @property
    def params(self) -> CurveParams:
        return self.num.params

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, _RAT_TYPE)):
            other = Fld.const(self.params, other)
        if not isinstance(other, Fld):
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        raise TypeError("Fld is unhashable; compare with == or is_zero()")

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, (int, _RAT_TYPE)):
            return Fld.const(self.params, other)
        if isinstance(other, Poly):
            return Fld(other)
        if isinstance(other, Fld):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        sa, sb = self._struct, other._struct
        if sa is not None and sb is not None:
            num, den = _add_structured(self, other, sa, sb)
            return Fld(num, den)
        return Fld(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Fld(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, _RAT_TYPE)):
            if other == 0:
                return Fld.const(self.params, 0)
            return Fld(self.num * other, self.den)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Fld(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "Fld":
        if self.is_zero():
            raise DivisionByZero("inverse of zero field element")
        return Fld(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise ValueError("integer powers only")
        if n < 0:
            return self.inverse() ** (-n)
        return Fld(self.num**n, self.den**n)

    def swap_points(self) -> "Fld":
        return Fld(self.num.swap_points(), self.den.swap_points())

    # -- evaluation ----------------------------------------------------------

    def eval_mp(self, x1, x2, y1, y2):
        dv = self.den.eval_mp(x1, x2, y1, y2)
        scale = self.den.eval_mp_scale(x1, x2, y1, y2)
        if abs(dv) <= mp.mpf(10) ** (-(mp.mp.dps - 5)) * (scale + 1):
            raise PoleAtPoint("denominator vanishes at the probe point")
        return self.num.eval_mp(x1, x2, y1, y2) / dv

    def eval_exact(self, x1, x2, y1, y2) -> Rat:
        dv = self.den.eval_exact(x1, x2, y1, y2)
        if dv == 0:
            raise PoleAtPoint("denominator vanishes at the probe point")
        return self.num.eval_exact(x1, x2, y1, y2) / dv

    def __str__(self) -> str:
        if self.den.is_constant() and self.den.constant_value() == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


def _clear_y_denominator(num: Poly, den: Poly) -> tuple:
    """Rationalize a denominator containing y via conjugation.

    d = A + B*y1 -> multiply by (A - B*y1): denominator A^2 - B^2 f(x1).
    At most one pass per y variable is needed since conjugation preserves
    y-parity of the other variable.
    """
    params = num.params
    for var, which in ((2, 1), (3, 2)):
        if not any(m[var] for m in den.terms):
            continue
        a_terms = {m: c for m, c in den.terms.items() if m[var] == 0}
        b_terms = {
            tuple(v - 1 if i == var else v for i, v in enumerate(m)): c
            for m, c in den.terms.items()
            if m[var] == 1
        }
        a = Poly(params, a_terms, _clean=True)
        b = Poly(params, b_terms, _clean=True)
        yv = Poly.variable(params, "y1" if which == 1 else "y2")
        conj = a - b * yv
        num = num * conj
        den = a * a - b * b * Poly.f_of(params, which)
    if den.has_y():  # pragma: no cover - conjugation always clears both
        raise CurveRingError("failed to rationalize denominator")
    return num, den


def _den_structure(den: Poly):
    """Recognize den == c * x1^a * x2^b * (x1-x2)^k; None otherwise."""
    mono = den.common_monomial()
    rest = den.shift_down(mono)
    k = 0
    binom = _x1_minus_x2(den.params)
    while not rest.is_constant():
        q = rest.try_divide(binom)
        if q is None:
            return None
        rest = q
        k += 1
    return (rest.constant_value(), mono[0], mono[1], k)


def _structured_den(params, c, a, b, k) -> Poly:
    p = Poly(params, {(a, b, 0, 0): c}, _clean=True)
    if k:
        p = p * _x1_minus_x2(params) ** k
    return p


def _add_structured(f1: Fld, f2: Fld, s1, s2) -> tuple:
    """Add via the structured lcm of denominators c*x1^a*x2^b*(x1-x2)^k."""
    c1, a1, b1, k1 = s1
    c2, a2, b2, k2 = s2
    a, b, k = max(a1, a2), max(b1, b2), max(k1, k2)
    params = f1.params
    cof1 = _structured_den(params, 1 / c1, a - a1, b - b1, k - k1)
    cof2 = _structured_den(params, 1 / c2, a - a2, b - b2, k - k2)
    num = f1.num * cof1 + f2.num * cof2
    den = _structured_den(params, Rat(1), a, b, k)
    return num, den


# -- named operation wrappers -------------------------------------------------


def fld_arith(a: Fld, b: Fld, op: str) -> Fld:
    """Field arithmetic dispatch: op in {'+', '-', '*', '/'}."""
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        if b.is_zero():
            raise DivisionByZero("division by zero field element")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def is_zero(a: Fld) -> bool:
    return a.is_zero()


def eval_probe(a: Fld, x1, x2, y_signs=(1, 1), mode: str = "float", dps: int | None = None):
    """Evaluate `a` at a curve point above (x1, x2) with chosen branch signs.

    mode='float': y_i = sign * sqrt(f(x_i)) as complex mpmath values at
    `dps` digits (default: PROBE_DIGITS env or 30).  mode='exact' demands
    f(x_i) be squares of rationals and returns an exact Rat.
    """
    params = a.params
    s1 = 1 if y_signs[0] >= 0 else -1
    s2 = 1 if y_signs[1] >= 0 else -1
    if mode == "exact":
        x1r, x2r = _to_rat(x1), _to_rat(x2)
        if x1r == x2r:
            raise ValueError("probe points must satisfy x1 != x2")
        r1 = rat_sqrt(params.f_value(x1r))
        r2 = rat_sqrt(params.f_value(x2r))
        if r1 is None or r2 is None:
            raise OffCurve("f(x_i) is not a rational square; use float mode")
        return a.eval_exact(x1r, x2r, s1 * r1, s2 * r2)
    if mode != "float":
        raise ValueError("mode must be 'float' or 'exact'")
    with mp.workdps(dps or probe_digits()):
        x1m, x2m = mp.mpmathify(x1), mp.mpmathify(x2)
        if x1m == x2m:
            raise ValueError("probe points must satisfy x1 != x2")
        y1 = s1 * mp.sqrt(mp.mpc(params.f_value_mp(x1m)))
        y2 = s2 * mp.sqrt(mp.mpc(params.f_value_mp(x2m)))
        return a.eval_mp(x1m, x2m, y1, y2)


def random_probe_point(params: CurveParams, rng, dps: int | None = None):
    """A random admissible float-mode curve point (x1, x2, y1, y2)."""
    with mp.workdps(dps or probe_digits()):
        while True:
            x1 = mp.mpf(rng.randint(20, 400)) / 100
            x2 = mp.mpf(rng.randint(20, 400)) / 100
            if abs(x1 - x2) < mp.mpf("0.05"):
                continue
            y1 = mp.sqrt(mp.mpc(params.f_value_mp(x1)))
            y2 = mp.sqrt(mp.mpc(params.f_value_mp(x2)))
            if abs(y1) < mp.mpf("1e-6") or abs(y2) < mp.mpf("1e-6"):
                continue
            if rng.random() < 0.5:
                y1 = -y1
            if rng.random() < 0.5:
                y2 = -y2
            return x1, x2, y1, y2
