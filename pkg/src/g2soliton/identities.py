"""Genus-two hyperelliptic function identities as exact zero tests.

The symmetric two-point functions of the curve come in three families:

* the Weierstrass-type triple  p22 = (l5/4)(x1+x2),  p21 = -(l5/4)x1x2,
  q = (F - 2 y1 y2) / (4 (x1-x2)^2)  with F the symmetric pairing polynomial;
* the r-family (r22, r21, r11), which absorbs the sextic top coefficient so
  that both integrability relations close for every curve;
* the Jacobi-type triple (hp11, hp21, hq) obtained from the Weierstrass one
  by the dual involution x -> 1/x with reversed coefficients.

Every catalogued identity is a rational-function combination of these
functions and their flow derivatives that must reduce to the exact zero
field element.  Each identity is stored once as a builder over an abstract
context, which gives two independent evaluation routes: exact reduction in
the function field, and high-precision numeric evaluation at random curve
points (the Schwartz-Zippel style probe used both as a development oracle
and to certify nonzero witnesses).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

import mpmath as mp

from .curvering import (
    CurveParams,
    CurveRingError,
    Fld,
    Poly,
    Rat,
    probe_digits,
    random_probe_point,
    rat_to_mp,
    _x1_minus_x2,
)
from .flows import flow_derivative


class MissingConstraint(CurveRingError):
    """An identity was requested on a curve violating its lambda constraints."""


# -- constraint vocabulary ----------------------------------------------------

_CONSTRAINT_CHECKS = {
    "l0=0": lambda p: p.lambdas[0] == 0,
    "l6=0": lambda p: p.lambdas[6] == 0,
    "l5!=0": lambda p: p.lambdas[5] != 0,
    "l1!=0": lambda p: p.lambdas[1] != 0,
    "l5=4": lambda p: p.lambdas[5] == 4,
    "l1=4": lambda p: p.lambdas[1] == 4,
}


def violated_constraints(params: CurveParams, constraints) -> list[str]:
    return [c for c in sorted(constraints) if not _CONSTRAINT_CHECKS[c](params)]


@dataclass(frozen=True)
class IdentityId:
    """Catalog tag plus the lambda constraints the identity needs."""

    tag: str
    required_constraints: frozenset

    def runnable_on(self, params: CurveParams) -> bool:
        return not violated_constraints(params, self.required_constraints)


# -- the function families ----------------------------------------------------


def symmetric_pairing(params: CurveParams) -> Poly:
    """F(x1,x2): the polarized form of f whose square section is (y1 y2)^2."""
    l = params.lambdas
    terms = {
        (3, 3, 0, 0): 2 * l[6],
        (3, 2, 0, 0): l[5],
        (2, 3, 0, 0): l[5],
        (2, 2, 0, 0): 2 * l[4],
        (2, 1, 0, 0): l[3],
        (1, 2, 0, 0): l[3],
        (1, 1, 0, 0): 2 * l[2],
        (1, 0, 0, 0): l[1],
        (0, 1, 0, 0): l[1],
        (0, 0, 0, 0): 2 * l[0],
    }
    return Poly(params, {m: c for m, c in terms.items() if c != 0}, _clean=True)


class G2Functions:
    """The exact function families over one curve, with memoized derivatives.

    The Weierstrass triple is populated only when l5 != 0 and the Jacobi
    triple only when l1 != 0; accessing an absent family raises
    MissingConstraint.  The derivative table memoizes lazily under
    single-assignment semantics (entries are pure values, recomputation is
    harmless), and curve sweeps parallelize across processes, one instance
    per worker.
    """

    def __init__(self, params: CurveParams):
        self.params = params
        l = params.lambdas
        x1 = Poly.variable(params, "x1")
        x2 = Poly.variable(params, "x2")
        y1y2 = Poly(params, {(0, 0, 1, 1): Rat(1)}, _clean=True)
        binom2 = _x1_minus_x2(params) ** 2
        self.f_poly = symmetric_pairing(params)

        quarter5 = l[5] / 4
        self.q = Fld(self.f_poly - 2 * y1y2, 4 * binom2)
        if params.weierstrass_usable:
            self.p22 = Fld((x1 + x2) * quarter5)
            self.p21 = Fld(x1 * x2 * (-quarter5))
        else:
            self.p22 = None
            self.p21 = None

        half6 = l[6] / 2
        self.r22 = Fld((x1 + x2) * quarter5 + (x1 * x1 + x1 * x2 + x2 * x2) * half6)
        self.r21 = Fld(x1 * x2 * (-quarter5) + (x1 * x1 * x2 + x1 * x2 * x2) * (-half6))
        self.r11 = self.q + Fld((x1 * x2) ** 2 * half6)

        quarter1 = l[1] / 4
        if params.jacobi_usable:
            self.hp11 = Fld((x1 + x2) * quarter1, x1 * x2)
            self.hp21 = Fld(Poly.const(params, -quarter1), x1 * x2)
        else:
            self.hp11 = None
            self.hp21 = None
        self.hq = Fld(self.f_poly - 2 * y1y2, 4 * x1 * x2 * binom2)

        self._derivs: dict = {}

    _FAMILY_GUARDS = {
        "p22": "l5!=0",
        "p21": "l5!=0",
        "hp11": "l1!=0",
        "hp21": "l1!=0",
    }

    def base(self, name: str) -> Fld:
        value = getattr(self, name)
        if value is None:
            guard = self._FAMILY_GUARDS.get(name, "?")
            raise MissingConstraint(f"{name} requires {guard} (curve {self.params})")
        return value

    def deriv(self, name: str, dirs: str = "") -> Fld:
        """Flow derivative of a named base function; dirs like '1', '22', '12'.

        Directions commute, so the key is order-normalized.
        """
        dirs = "".join(sorted(dirs))
        key = (name, dirs)
        cached = self._derivs.get(key)
        if cached is not None:
            return cached
        if not dirs:
            value = self.base(name)
        else:
            inner = self.deriv(name, dirs[:-1])
            value = flow_derivative(inner, int(dirs[-1]))
        self._derivs[key] = value
        return value


def build_functions(params: CurveParams, require: tuple = ()) -> G2Functions:
    """Construct all families; `require` may list 'weierstrass'/'jacobi'."""
    if "weierstrass" in require and not params.weierstrass_usable:
        raise MissingConstraint(f"Weierstrass triple needs l5 != 0 on {params}")
    if "jacobi" in require and not params.jacobi_usable:
        raise MissingConstraint(f"Jacobi triple needs l1 != 0 on {params}")
    return G2Functions(params)


# -- dual-route contexts --------------------------------------------------------


class ExactContext:
    """Builder context producing exact Fld residuals."""

    def __init__(self, fns: G2Functions):
        self._fns = fns
        for i, v in enumerate(fns.params.lambdas):
            setattr(self, f"l{i}", v)
        self.one = Fld.const(fns.params, 1)

    def __getattr__(self, name):
        # base function names fall through to the family table
        return self._fns.base(name)

    def d(self, name: str, dirs: str) -> Fld:
        return self._fns.deriv(name, dirs)

    def y1y2(self):
        return Fld(Poly(self._fns.params, {(0, 0, 1, 1): Rat(1)}, _clean=True))

    def sep_sq(self):
        return Fld(_x1_minus_x2(self._fns.params) ** 2)

    def f_sym(self):
        return Fld(self._fns.f_poly)


class NumericContext:
    """Builder context evaluating residual expressions at one probe point.

    Independent of exact reduction: every sum/product in the identity is
    carried out in mpmath arithmetic rather than in the polynomial ring.
    """

    def __init__(self, fns: G2Functions, point):
        self._fns = fns
        self._point = point
        self._cache: dict = {}
        for i, v in enumerate(fns.params.lambdas):
            setattr(self, f"l{i}", rat_to_mp(v))
        self.one = mp.mpf(1)

    def __getattr__(self, name):
        return self.d(name, "")

    def d(self, name: str, dirs: str):
        key = (name, "".join(sorted(dirs)))
        if key not in self._cache:
            self._cache[key] = self._fns.deriv(name, dirs).eval_mp(*self._point)
        return self._cache[key]

    def y1y2(self):
        return self._point[2] * self._point[3]

    def sep_sq(self):
        return (self._point[0] - self._point[1]) ** 2

    def f_sym(self):
        return self._fns.f_poly.eval_mp(*self._point)


# -- identity builders ---------------------------------------------------------


def _det2(a, b, c, d):
    return a * d - b * c


def _det3(m):
    return (
        m[0][0] * _det2(m[1][1], m[1][2], m[2][1], m[2][2])
        - m[0][1] * _det2(m[1][0], m[1][2], m[2][0], m[2][2])
        + m[0][2] * _det2(m[1][0], m[1][1], m[2][0], m[2][1])
    )


def _det4(m):
    """Exact cofactor expansion along the first row; no pivoting."""
    total = None
    for j in range(4):
        if m[0][j] == 0:
            continue
        minor = [[m[r][c] for c in range(4) if c != j] for r in range(1, 4)]
        term = m[0][j] * _det3(minor)
        if j % 2 == 1:
            term = -term
        total = term if total is None else total + term
    return total


def _kummer_quartic(c):
    """The 4x4 symmetric-kernel determinant in X=p22, Y=p21, Z=q."""
    X, Y, Z = c.p22, c.p21, c.q
    m = [
        [-c.l0, c.l1 / 2, 2 * Z, -2 * Y],
        [c.l1 / 2, -c.l2 - 4 * Z, c.l3 / 2 + 2 * Y, 2 * X],
        [2 * Z, c.l3 / 2 + 2 * Y, -c.l4 - 4 * X, c.l5 / 2],
        [-2 * Y, 2 * X, c.l5 / 2, 0 * c.one],
    ]
    return _det4(m)


def _kummer_correction(c):
    # the Y^2 term carries l0*l5^2: derived by expanding
    # (F/2 - 2(x1-x2)^2 Z)^2 = f(x1) f(x2) in symmetric coordinates and
    # subtracting the quartic kernel determinant; confirmed by exact sweeps
    X, Y, Z = c.p22, c.p21, c.q
    inner = (
        -c.l0 * c.l5**2 * Y**2
        - 8 * c.l0 * c.l5 * X**2 * Y
        + 4 * c.l1 * c.l5 * X * Y**2
        + 16
        * (
            -c.l0 * X**4
            + c.l1 * X**3 * Y
            - c.l2 * X**2 * Y**2
            + c.l3 * X * Y**3
            - c.l4 * Y**4
            + c.l5 * Y**3 * Z
        )
    )
    return 4 * c.l6 / c.l5**2 * inner


# Entries of the projective type-II transformation; rows act on
# (p22, p21, p11, 1) and the last row is the common denominator.
_GII_MATRIX = (
    (0, 0, 1, 0),
    (0, 0, 0, -1),
    (1, 0, 0, 0),
    (0, -1, 0, 0),
)


def _gii_components(c):
    vec = (c.p22, c.p21, c.q, c.one)
    rows = []
    for coeffs in _GII_MATRIX:
        acc = None
        for w, entry in zip(coeffs, vec):
            if w == 0:
                continue
            term = entry if w == 1 else (-entry if w == -1 else w * entry)
            acc = term if acc is None else acc + term
        rows.append(acc if acc is not None else 0 * c.one)
    num_a, num_b, num_c, den = rows
    return (
        c.hq - num_a / den,
        c.hp21 - num_b / den,
        c.hp11 - num_c / den,
    )


def _halfperiod_components(c):
    # with l6=0 the q function plays the role of p11, and with l0=0 the
    # hatted q plays the role of hp22; the shift then maps triple to triple
    return (
        c.hq + c.l5 / 4 * (c.q / c.p21),
        c.hp21 - c.l1 * c.l5 / 16 * (c.one / c.p21),
        c.hp11 + c.l1 / 4 * (c.p22 / c.p21),
    )


_BUILDERS = {}
_IDENTITY_IDS: dict = {}
_DESCRIPTIONS: dict = {}


def _identity(tag, constraints, description):
    def register(fn):
        _BUILDERS[tag] = fn
        _IDENTITY_IDS[tag] = IdentityId(tag, frozenset(constraints))
        _DESCRIPTIONS[tag] = description
        return fn

    return register


@_identity("W1", {"l5!=0"}, "fourth u2-derivative closure for p22")
def _w1(c):
    return (
        c.d("p22", "22")
        - 32 * c.l6 / c.l5**2 * c.p22**3
        - 12 * c.l6 / c.l5 * c.p22 * c.p21
        - 6 * c.p22**2
        - c.l4 * c.p22
        - c.l5 * c.p21
        - c.l3 * c.l5 / 8
    )


@_identity("W2", {"l5!=0"}, "mixed (u2^3 u1) closure for p22")
def _w2(c):
    return (
        c.d("p22", "12")
        - 32 * c.l6 / c.l5**2 * c.p22**2 * c.p21
        - 4 * c.l6 / c.l5 * c.p21**2
        - 6 * c.p22 * c.p21
        - c.l4 * c.p21
        + c.l5 / 2 * c.q
    )


@_identity("W3", {"l5!=0"}, "mixed (u2^2 u1^2) closure for p22")
def _w3(c):
    return (
        c.d("p22", "11")
        - 32 * c.l6 / c.l5**2 * c.p22 * c.p21**2
        - 2 * c.p22 * c.q
        - 4 * c.p21**2
        - c.l3 / 2 * c.p21
    )


@_identity("W4", {"l5!=0"}, "mixed (u2 u1^3) closure for p21")
def _w4(c):
    return (
        c.d("p21", "11")
        - 32 * c.l6 / c.l5**2 * c.p21**3
        - 6 * c.p21 * c.q
        + c.l1 / 2 * c.p22
        - c.l2 * c.p21
        + c.l0 * c.l5 / 4
    )


@_identity("W5", {"l5!=0"}, "u1^2 closure for q")
def _w5(c):
    return (
        c.d("q", "11")
        - 32 * c.l6 / c.l5**2 * c.p21**2 * c.q
        + 16 * c.l0 * c.l6 / c.l5**2 * c.p22**2
        - 8 * c.l1 * c.l6 / c.l5**2 * c.p22 * c.p21
        - 6 * c.q**2
        + 3 * c.l0 * c.p22
        - (c.l1 - 2 * c.l0 * c.l6 / c.l5) * c.p21
        - c.l2 * c.q
        + c.l0 * c.l4 / 2
        - c.l1 * c.l3 / 8
    )


@_identity("W6", {"l5!=0"}, "mixed u2 u1 closure for q")
def _w6(c):
    return (
        c.d("q", "12")
        - 32 * c.l6 / c.l5**2 * c.p22 * c.p21 * c.q
        + 4 * c.l1 * c.l6 / c.l5**2 * c.p22**2
        - 8 * c.l2 * c.l6 / c.l5**2 * c.p22 * c.p21
        + 4 * c.l3 * c.l6 / c.l5**2 * c.p21**2
        - 6 * c.p21 * c.q
        + (2 * c.l0 * c.l6 / c.l5 + c.l1 / 2) * c.p22
        - c.l2 * c.p21
        + c.l0 * c.l5 / 4
    )


@_identity("W7", {"l5!=0"}, "u2^2 closure for q")
def _w7(c):
    return (
        c.d("q", "22")
        - 32 * c.l6 / c.l5**2 * c.p22**2 * c.q
        + (16 * c.l4 * c.l6 / c.l5**2 - 4) * c.p21**2
        - 8 * c.l3 * c.l6 / c.l5**2 * c.p22 * c.p21
        - 2 * c.p22 * c.q
        - 20 * c.l6 / c.l5 * c.p21 * c.q
        + c.l1 * c.l6 / c.l5 * c.p22
        + (-2 * c.l2 * c.l6 / c.l5 - c.l3 / 2) * c.p21
        + c.l0 * c.l6 / 2
    )


@_identity("INT-R", set(), "both integrability relations of the r-family")
def _int_r(c):
    return (
        c.d("r22", "1") - c.d("r21", "2"),
        c.d("r21", "1") - c.d("r11", "2"),
    )


@_identity("INT-W", {"l5!=0"}, "first integrability relation of the Weierstrass triple")
def _int_w(c):
    return c.d("p22", "1") - c.d("p21", "2")


@_identity("INT-W2", {"l5!=0", "l6=0"}, "second integrability relation; closes only for l6=0")
def _int_w2(c):
    return c.d("p21", "1") - c.d("q", "2")


@_identity("Y1Y2", set(), "defining relation between q, the pairing F and y1*y2")
def _y1y2(c):
    return 4 * c.sep_sq() * c.q + 2 * c.y1y2() - c.f_sym()


@_identity("WS1", {"l5!=0", "l6=0"}, "quintic-curve u2^4 closure for p22")
def _ws1(c):
    return c.d("p22", "22") - 6 * c.p22**2 - c.l4 * c.p22 - c.l5 * c.p21 - c.l3 * c.l5 / 8


@_identity("WS2", {"l5!=0", "l6=0"}, "quintic-curve mixed closure with q as p11")
def _ws2(c):
    return c.d("p22", "12") - 6 * c.p22 * c.p21 - c.l4 * c.p21 + c.l5 / 2 * c.q


@_identity("WS3", {"l5!=0", "l6=0"}, "quintic-curve (u2 u1)^2 closure")
def _ws3(c):
    return c.d("p22", "11") - 2 * c.p22 * c.q - 4 * c.p21**2 - c.l3 / 2 * c.p21


@_identity("WS4", {"l5!=0", "l6=0", "l0=0"}, "quintic-curve u1^3 u2 closure")
def _ws4(c):
    return c.d("p21", "11") - 6 * c.p21 * c.q + c.l1 / 2 * c.p22 - c.l2 * c.p21


@_identity("WS5", {"l5!=0", "l6=0", "l0=0"}, "quintic-curve u1^4 closure")
def _ws5(c):
    return c.d("q", "11") - 6 * c.q**2 - c.l1 * c.p21 - c.l2 * c.q - c.l1 * c.l3 / 8


@_identity("J1", {"l1!=0"}, "dual-triple u2^3 u1 closure")
def _j1(c):
    return (
        c.d("hp21", "22")
        - 6 * c.hp21 * c.hq
        - c.l4 * c.hp21
        + c.l5 / 2 * c.hp11
        - 32 * c.l0 / c.l1**2 * c.hp21**3
        + c.l1 * c.l6 / 4
    )


@_identity("J2", {"l1!=0"}, "dual-triple u2^2 u1^2 closure")
def _j2(c):
    return (
        c.d("hp11", "22")
        - 2 * c.hp11 * c.hq
        - 4 * c.hp21**2
        - c.l3 / 2 * c.hp21
        - 32 * c.l0 / c.l1**2 * c.hp21**2 * c.hp11
    )


@_identity("J3", {"l1!=0"}, "dual-triple u2 u1^3 closure")
def _j3(c):
    return (
        c.d("hp11", "12")
        - 6 * c.hp21 * c.hp11
        + c.l1 / 2 * c.hq
        - c.l2 * c.hp21
        - 4 * c.l0 / c.l1 * c.hp21**2
        - 32 * c.l0 / c.l1**2 * c.hp21 * c.hp11**2
    )


@_identity("J4", {"l1!=0"}, "dual-triple u1^4 closure")
def _j4(c):
    return (
        c.d("hp11", "11")
        - 6 * c.hp11**2
        - c.l1 * c.hp21
        - c.l2 * c.hp11
        - 12 * c.l0 / c.l1 * c.hp21 * c.hp11
        - 32 * c.l0 / c.l1**2 * c.hp11**3
        - c.l1 * c.l3 / 8
    )


@_identity("J5", {"l1!=0"}, "dual-triple u1^2 closure for hq")
def _j5(c):
    return (
        c.d("hq", "11")
        - 2 * c.hp11 * c.hq
        - (4 - 16 * c.l0 * c.l2 / c.l1**2) * c.hp21**2
        + c.l0 * c.l5 / c.l1 * c.hp11
        - (c.l3 / 2 + 2 * c.l0 * c.l4 / c.l1) * c.hp21
        - 20 * c.l0 / c.l1 * c.hp21 * c.hq
        - 8 * c.l0 * c.l3 / c.l1**2 * c.hp21 * c.hp11
        - 32 * c.l0 / c.l1**2 * c.hp11**2 * c.hq
        + c.l0 * c.l6 / 2
    )


@_identity("J6", {"l1!=0"}, "dual-triple mixed u2 u1 closure for hq")
def _j6(c):
    return (
        c.d("hq", "12")
        - 6 * c.hp21 * c.hq
        - c.l4 * c.hp21
        + (c.l5 / 2 + 2 * c.l0 * c.l6 / c.l1) * c.hp11
        + 4 * c.l0 * c.l3 / c.l1**2 * c.hp21**2
        - 8 * c.l0 * c.l4 / c.l1**2 * c.hp21 * c.hp11
        + 4 * c.l0 * c.l5 / c.l1**2 * c.hp11**2
        - 32 * c.l0 / c.l1**2 * c.hp21 * c.hp11 * c.hq
        + c.l1 * c.l6 / 4
    )


@_identity("J7", {"l1!=0"}, "dual-triple u2^2 closure for hq")
def _j7(c):
    return (
        c.d("hq", "22")
        - 6 * c.hq**2
        - c.l4 * c.hq
        + 3 * c.l6 * c.hp11
        - (c.l5 - 2 * c.l0 * c.l6 / c.l1) * c.hp21
        - 8 * c.l0 * c.l5 / c.l1**2 * c.hp21 * c.hp11
        + 16 * c.l0 * c.l6 / c.l1**2 * c.hp11**2
        - 32 * c.l0 / c.l1**2 * c.hp21**2 * c.hq
        + (c.l2 * c.l6 / 2 - c.l3 * c.l5 / 8)
    )


@_identity("INT-J", {"l1!=0"}, "second integrability relation of the dual triple")
def _int_j(c):
    return c.d("hp21", "1") - c.d("hp11", "2")


@_identity("INT-J2", {"l1!=0", "l0=0"}, "first dual integrability relation; closes only for l0=0")
def _int_j2(c):
    return c.d("hq", "1") - c.d("hp21", "2")


@_identity("JS1", {"l1!=0", "l0=0", "l6=0"}, "dual triple satisfies the quintic u2^4 closure")
def _js1(c):
    return c.d("hq", "22") - 6 * c.hq**2 - c.l4 * c.hq - c.l5 * c.hp21 - c.l3 * c.l5 / 8


@_identity("JS2", {"l1!=0", "l0=0", "l6=0"}, "dual triple, mixed u2^3 u1 closure")
def _js2(c):
    return c.d("hq", "12") - 6 * c.hq * c.hp21 - c.l4 * c.hp21 + c.l5 / 2 * c.hp11


@_identity("JS3", {"l1!=0", "l0=0", "l6=0"}, "dual triple, (u2 u1)^2 closure")
def _js3(c):
    return c.d("hq", "11") - 2 * c.hq * c.hp11 - 4 * c.hp21**2 - c.l3 / 2 * c.hp21


@_identity("JS4", {"l1!=0", "l0=0", "l6=0"}, "dual triple, u1^3 u2 closure")
def _js4(c):
    return c.d("hp21", "11") - 6 * c.hp21 * c.hp11 + c.l1 / 2 * c.hq - c.l2 * c.hp21


@_identity("JS5", {"l1!=0", "l0=0", "l6=0"}, "dual triple, u1^4 closure")
def _js5(c):
    return c.d("hp11", "11") - 6 * c.hp11**2 - c.l1 * c.hp21 - c.l2 * c.hp11 - c.l1 * c.l3 / 8


@_identity("KUM1", {"l5!=0", "l6=0"}, "quartic kernel determinant (quintic curves)")
def _kum1(c):
    return _kummer_quartic(c)


@_identity("KUM2", {"l5!=0"}, "generalized quartic relation (sextic curves)")
def _kum2(c):
    return _kummer_quartic(c) + _kummer_correction(c)


@_identity(
    "HP",
    {"l0=0", "l6=0", "l5!=0", "l1!=0"},
    "half-period shift sending the Weierstrass triple to the dual triple",
)
def _hp(c):
    return _halfperiod_components(c)


@_identity(
    "GII",
    {"l0=0", "l6=0", "l5=4", "l1=4"},
    "projective type-II transformation realizes the half-period shift",
)
def _gii(c):
    return _gii_components(c)


def identity_ids() -> dict:
    return dict(_IDENTITY_IDS)


def identity_description(tag: str) -> str:
    return _DESCRIPTIONS[tag]


IDENTITY_SETS = {
    "weierstrass": ["W1", "W2", "W3", "W4", "W5", "W6", "W7"],
    "jacobi": ["J1", "J2", "J3", "J4", "J5", "J6", "J7"],
    "weierstrass-special": ["WS1", "WS2", "WS3", "WS4", "WS5", "INT-W2"],
    "jacobi-special": ["JS1", "JS2", "JS3", "JS4", "JS5", "INT-J2"],
    "kummer": ["KUM2", "KUM1"],
    "integrability": ["INT-R", "INT-W", "INT-J", "Y1Y2"],
    "half-period": ["HP"],
    "gii": ["GII"],
}
IDENTITY_SETS["all"] = list(_BUILDERS)


def _as_tuple(value):
    return value if isinstance(value, tuple) else (value,)


def residuals(tag_or_id, fns: G2Functions) -> tuple:
    """All residual components of one identity, as exact field elements."""
    tag = tag_or_id.tag if isinstance(tag_or_id, IdentityId) else tag_or_id
    ident = _IDENTITY_IDS[tag]
    bad = violated_constraints(fns.params, ident.required_constraints)
    if bad:
        raise MissingConstraint(f"{tag} needs {', '.join(bad)} on curve {fns.params}")
    return _as_tuple(_BUILDERS[tag](ExactContext(fns)))


def residual(tag_or_id, fns: G2Functions) -> Fld:
    """Single-component residual accessor (most identities)."""
    comps = residuals(tag_or_id, fns)
    if len(comps) != 1:
        raise ValueError("identity has several components; use residuals()")
    return comps[0]


def residuals_unchecked(tag: str, fns: G2Functions) -> tuple:
    """Assemble residuals without the constraint guard (for witness studies)."""
    return _as_tuple(_BUILDERS[tag](ExactContext(fns)))


def probe_identity(tag: str, fns: G2Functions, point) -> tuple:
    """Numeric values of the residual components at one probe point.

    Every sum and product is evaluated in mpmath arithmetic; the only shared
    machinery with the exact route is the symbolic flow-derivative table.
    """
    return _as_tuple(_BUILDERS[tag](NumericContext(fns, point)))


def halfperiod_check(fns: G2Functions) -> tuple:
    """Three exact residuals of the half-period transformation."""
    return residuals("HP", fns)


# -- verification driver --------------------------------------------------------


@dataclass
class IdentityResult:
    tag: str
    status: str  # "zero" | "nonzero" | "skipped"
    millis: float = 0.0
    witness_point: list | None = None
    witness_value: str | None = None
    reason: str | None = None

    def to_json(self, curve: CurveParams) -> dict:
        return {
            "curve": curve.as_strings(),
            "identity": self.tag,
            "status": self.status,
            "witness_point": self.witness_point,
            "millis": round(self.millis, 3),
            "reason": self.reason,
        }


@dataclass
class VerifyReport:
    curve: CurveParams
    results: list = field(default_factory=list)

    @property
    def n_zero(self) -> int:
        return sum(r.status == "zero" for r in self.results)

    @property
    def has_nonzero(self) -> bool:
        return any(r.status == "nonzero" for r in self.results)

    @property
    def has_skipped(self) -> bool:
        return any(r.status == "skipped" for r in self.results)

    def to_json_entries(self) -> list:
        return [r.to_json(self.curve) for r in self.results]

    def table(self) -> str:
        lines = [f"curve {self.curve}"]
        for r in self.results:
            extra = ""
            if r.status == "nonzero" and r.witness_point:
                extra = f"  witness x=({r.witness_point[0]:.4g},{r.witness_point[1]:.4g}) |res|={r.witness_value}"
            elif r.status == "skipped":
                extra = f"  ({r.reason})"
            lines.append(f"  {r.tag:<8} {r.status:<8} {r.millis:9.2f} ms{extra}")
        return "\n".join(lines)


def find_witness(comps, fns: G2Functions, seed: int = 0, tries: int = 25):
    """A probe point where some residual component is numerically nonzero."""
    rng = random.Random(seed)
    with mp.workdps(probe_digits()):
        for _ in range(tries):
            point = random_probe_point(fns.params, rng)
            for comp in comps:
                if comp.is_zero():
                    continue
                try:
                    num_val = comp.num.eval_mp(*point)
                    scale = comp.num.eval_mp_scale(*point)
                    den_val = comp.den.eval_mp(*point)
                except CurveRingError:
                    continue
                if abs(den_val) == 0 or not mp.isfinite(num_val):
                    continue
                rel = abs(num_val) / (scale + 1)
                if rel > mp.mpf(10) ** (-(mp.mp.dps // 2)):
                    value = abs(num_val / den_val)
                    return (
                        [float(point[0]), float(point[1]), complex(point[2]), complex(point[3])],
                        mp.nstr(value, 6),
                    )
    return None, None


def verify_identity(tag: str, fns: G2Functions, witness_seed: int = 0) -> IdentityResult:
    ident = _IDENTITY_IDS[tag]
    bad = violated_constraints(fns.params, ident.required_constraints)
    if bad:
        return IdentityResult(tag, "skipped", reason=" and ".join(bad) + " required")
    start = time.perf_counter()
    comps = residuals(tag, fns)
    millis = (time.perf_counter() - start) * 1000
    if all(comp.is_zero() for comp in comps):
        return IdentityResult(tag, "zero", millis=millis)
    point, value = find_witness(comps, fns, seed=witness_seed)
    wp = None
    if point is not None:
        wp = [point[0], point[1], [point[2].real, point[2].imag], [point[3].real, point[3].imag]]
    return IdentityResult(tag, "nonzero", millis=millis, witness_point=wp, witness_value=value)


def verify_all(params: CurveParams, tags=None, witness_seed: int = 0) -> VerifyReport:
    """Reduce every requested identity on one curve; failures are data."""
    if tags is None:
        tags = IDENTITY_SETS["all"]
    fns = G2Functions(params)
    report = VerifyReport(params)
    for tag in tags:
        report.results.append(verify_identity(tag, fns, witness_seed=witness_seed))
    return report


# -- the dual involution ---------------------------------------------------------


def dual_transform_poly(p: Poly, target: CurveParams) -> Fld:
    """Image of a polynomial under x_i -> 1/x_i, y_i -> y_i/x_i^3.

    `target` must be the coefficient-reversed curve; the involution maps the
    quotient relation of one curve onto the other.
    """
    if target.lambdas != p.params.dual().lambdas:
        raise ValueError("target curve must have reversed coefficients")
    d1 = max((m[0] + 3 * m[2] for m in p.terms), default=0)
    d2 = max((m[1] + 3 * m[3] for m in p.terms), default=0)
    num_terms = {}
    for (e1, e2, a1, a2), coef in p.terms.items():
        num_terms[(d1 - e1 - 3 * a1, d2 - e2 - 3 * a2, a1, a2)] = coef
    num = Poly(target, num_terms, _clean=True)
    den = Poly(target, {(d1, d2, 0, 0): Rat(1)}, _clean=True)
    return Fld(num, den)


def dual_transform(a: Fld) -> Fld:
    """Image of a function-field element under the dual involution."""
    target = a.params.dual()
    return dual_transform_poly(a.num, target) / dual_transform_poly(a.den, target)
