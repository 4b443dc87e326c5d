"""Laurent polynomials over cyclotomic fields, and K-cyclotomic polynomials.

A :class:`LaurentPoly` is a finite sum ``sum c_e * x^e`` with ``c_e``
cyclotomic and ``e`` an integer (possibly negative).  Serialization lists
terms by decreasing exponent, joined with `` + `` / `` - ``; composite
cyclotomic coefficients are parenthesized, e.g. ``(1+2*E(3,1))*x^2 - 3``.

:func:`k_cyclotomic_factors` returns the irreducible factors over a given
field K of the d-th (rational) cyclotomic polynomial, computed by grouping
the primitive d-th roots of unity into Galois orbits over K.

:class:`FracExpMonomial` is a boundary type for quantities of the form
``c * x^(p/q)`` (Frobenius eigenvalues, monomial Schur ratios); it prints
fractional exponents as ``x^(p/q)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Union

from .cyclotomic import Cyclo, CycloField, zeta

__all__ = [
    "LaurentPoly",
    "FracExpMonomial",
    "KCycloPoly",
    "k_cyclotomic_factors",
    "parse_poly",
]

Scalar = Union[Cyclo, int, Fraction]


def _coerce(c: Scalar) -> Cyclo:
    return c if isinstance(c, Cyclo) else Cyclo.rational(c)


class LaurentPoly:
    """Immutable Laurent polynomial with exact cyclotomic coefficients."""

    __slots__ = ("coeffs", "_hash")

    coeffs: tuple[tuple[int, Cyclo], ...]  # sorted by exponent, no zeros

    def __init__(self, coeffs: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]]):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, Cyclo] = {}
        for e, c in items:
            c = _coerce(c)
            if e in acc:
                c = acc[e] + c
            acc[e] = c
        object.__setattr__(
            self, "coeffs",
            tuple(sorted((e, c) for e, c in acc.items() if not c.is_zero())))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ---------------------------------------------------
    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly({})

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def x(e: int = 1) -> "LaurentPoly":
        return LaurentPoly({e: 1})

    @staticmethod
    def constant(c: Scalar) -> "LaurentPoly":
        return LaurentPoly({0: c})

    @staticmethod
    def monomial(c: Scalar, e: int) -> "LaurentPoly":
        return LaurentPoly({e: c})

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def valuation(self) -> int:
        if not self.coeffs:
            raise ValueError("valuation of zero")
        return self.coeffs[0][0]

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of zero")
        return self.coeffs[-1][0]

    def leading_coeff(self) -> Cyclo:
        return self.coeffs[-1][1]

    def trailing_coeff(self) -> Cyclo:
        return self.coeffs[0][1]

    def coeff(self, e: int) -> Cyclo:
        for ee, c in self.coeffs:
            if ee == e:
                return c
        return Cyclo.rational(0)

    def is_polynomial(self) -> bool:
        return not self.coeffs or self.coeffs[0][0] >= 0

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        other = _poly(other)
        return LaurentPoly(list(self.coeffs) + list(other.coeffs))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly([(e, -c) for e, c in self.coeffs])

    def __sub__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        return self + (-_poly(other))

    def __rsub__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        return _poly(other) + (-self)

    def __mul__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        other = _poly(other)
        acc: dict[int, Cyclo] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                e = e1 + e2
                p = c1 * c2
                acc[e] = acc[e] + p if e in acc else p
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            e, c = self.coeffs[0]
            return LaurentPoly({-e: c.inverse()}) ** (-k)
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            if k > 1:
                base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x^k."""
        return LaurentPoly([(e + k, c) for e, c in self.coeffs])

    def divmod_poly(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Division with remainder after normalizing both to valuation 0."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        va = 0 if self.is_zero() else min(0, self.valuation())
        vb = min(0, other.valuation())
        a = self.shift(-va)
        b = other.shift(-vb)
        num = dict(a.coeffs)
        deg_b, lead_b = b.coeffs[-1]
        inv_lead = lead_b.inverse()
        quo: dict[int, Cyclo] = {}
        while num:
            deg_n = max(num)
            if deg_n < deg_b:
                break
            f = num[deg_n] * inv_lead
            quo[deg_n - deg_b] = f
            for e, c in b.coeffs:
                e2 = e + deg_n - deg_b
                v = num.get(e2, Cyclo.rational(0)) - f * c
                if v.is_zero():
                    num.pop(e2, None)
                else:
                    num[e2] = v
        return LaurentPoly(quo).shift(va - vb), LaurentPoly(num).shift(va)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        # Laurent-ring divisibility ignores valuations: strip them first.
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        va, vb = self.valuation(), other.valuation()
        q, r = self.shift(-va).divmod_poly(other.shift(-vb))
        if not r.is_zero():
            raise ArithmeticError("non-exact polynomial division")
        return q.shift(va - vb)

    def __truediv__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        other = _poly(other)
        if other.is_monomial():
            e, c = other.coeffs[0]
            inv = c.inverse()
            return LaurentPoly([(ee - e, cc * inv) for ee, cc in self.coeffs])
        return self.exact_div(other)

    def divides(self, other: "LaurentPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        if other.is_zero():
            return True
        return other.shift(-other.valuation()).divmod_poly(
            self.shift(-self.valuation()))[1].is_zero()

    # -- transforms ---------------------------------------------------------
    def evaluate(self, v: Scalar) -> Cyclo:
        v = _coerce(v)
        acc = Cyclo.rational(0)
        for e, c in self.coeffs:
            acc = acc + c * (v ** e)
        return acc

    def conjugate(self) -> "LaurentPoly":
        """Complex-conjugate the coefficients."""
        return LaurentPoly([(e, c.conjugate()) for e, c in self.coeffs])

    def vee(self) -> "LaurentPoly":
        """The involution P -> conj(P)(1/x)."""
        return LaurentPoly([(-e, c.conjugate()) for e, c in self.coeffs])

    def scale_x(self, s: Scalar) -> "LaurentPoly":
        """Substitute x -> s*x."""
        s = _coerce(s)
        return LaurentPoly([(e, c * s ** e) for e, c in self.coeffs])

    def inflate(self, k: int) -> "LaurentPoly":
        """Substitute x -> x^k (k > 0)."""
        if k <= 0:
            raise ValueError("inflation exponent must be positive")
        return LaurentPoly([(e * k, c) for e, c in self.coeffs])

    def deflate(self, k: int) -> "LaurentPoly":
        """Substitute x^k -> x; all exponents must be divisible by k."""
        if any(e % k for e, _ in self.coeffs):
            raise ValueError("polynomial is not k-deflatable")
        return LaurentPoly([(e // k, c) for e, c in self.coeffs])

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly([(e - 1, c * e) for e, c in self.coeffs if e])

    def reduce_mod(self, phi: "LaurentPoly") -> "LaurentPoly":
        """Image in K[x]/(phi) for a polynomial phi with phi(0) != 0."""
        if not phi.is_polynomial() or phi.valuation() > 0:
            raise ValueError("modulus must be a polynomial with nonzero constant term")
        val = 0 if self.is_zero() or self.valuation() >= 0 else self.valuation()
        rem = self.shift(-val).divmod_poly(phi)[1]
        if val:
            # multiply by the inverse of x modulo phi, -val times
            a0 = phi.trailing_coeff()
            xinv = (phi - LaurentPoly.constant(a0)).shift(-1) * LaurentPoly.constant(
                -a0.inverse())
            for _ in range(-val):
                rem = (rem * xinv).divmod_poly(phi)[1]
        return rem

    # -- comparison / hashing ------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Cyclo)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash(self.coeffs)
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- serialization ---------------------------------------------------------
    def serialize(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for e, c in reversed(self.coeffs):
            sign, core = _term_str(c, e)
            if not parts:
                parts.append(core if sign > 0 else "-" + core)
            else:
                parts.append((" + " if sign > 0 else " - ") + core)
        return "".join(parts)

    @staticmethod
    def parse(text: str) -> "LaurentPoly":
        return parse_poly(text)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.serialize()})"


def _poly(v: "LaurentPoly | Scalar") -> LaurentPoly:
    if isinstance(v, LaurentPoly):
        return v
    return LaurentPoly.constant(v)


_BARE_RATIONAL = re.compile(r"-?\d+(?:/\d+)?")


def _term_str(c: Cyclo, e: int) -> tuple[int, str]:
    """(sign, unsigned term string) for c*x^e."""
    ser = c.serialize()
    sign = 1
    if _BARE_RATIONAL.fullmatch(ser):
        if ser.startswith("-"):
            sign, ser = -1, ser[1:]
        coeff_core = ser
        omit = coeff_core == "1"
    else:
        coeff_core = f"({ser})"
        omit = False
    if e == 0:
        return sign, coeff_core if not omit else "1"
    xpart = "x" if e == 1 else f"x^{e}"
    return sign, xpart if omit else f"{coeff_core}*{xpart}"


_TERM_SPLIT = re.compile(r"(?<![(^+\-*/ ])\s*([+-])\s*")


def parse_poly(text: str) -> LaurentPoly:
    """Parse the term-list grammar emitted by :meth:`LaurentPoly.serialize`."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial literal")
    if text == "0":
        return LaurentPoly.zero()
    # split into signed terms at top-level +/-
    terms: list[tuple[int, str]] = []
    depth = 0
    cur = []
    sign = 1
    i = 0
    if text[0] == "-":
        sign = -1
        i = 1
    elif text[0] == "+":
        i = 1
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and cur and cur[-1] not in "(^+-*/eE,":
            terms.append((sign, "".join(cur).strip()))
            cur = []
            sign = 1 if ch == "+" else -1
        else:
            cur.append(ch)
        i += 1
    terms.append((sign, "".join(cur).strip()))
    acc: list[tuple[int, Cyclo]] = []
    for sg, term in terms:
        e, c = _parse_term(term)
        acc.append((e, c * sg))
    return LaurentPoly(acc)


_X_RE = re.compile(r"x(?:\^(-?\d+))?$")


def _parse_term(term: str) -> tuple[int, Cyclo]:
    term = term.strip()
    m = _X_RE.search(term)
    if m and (m.start() == 0 or term[m.start() - 1] in "*) "):
        e = int(m.group(1)) if m.group(1) else 1
        head = term[: m.start()].rstrip()
        if head.endswith("*"):
            head = head[:-1].rstrip()
        if not head:
            return e, Cyclo.rational(1)
        return e, _parse_coeff(head)
    return 0, _parse_coeff(term)


def _parse_coeff(text: str) -> Cyclo:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    return Cyclo.parse(text)


# -- fractional-exponent monomials ----------------------------------------------


@dataclass(frozen=True)
class FracExpMonomial:
    """A monomial ``coeff * x^exp`` with rational exponent."""

    coeff: Cyclo
    exp: Fraction = Fraction(0)

    @staticmethod
    def of(c: Scalar, e: "Fraction | int" = 0) -> "FracExpMonomial":
        return FracExpMonomial(_coerce(c), Fraction(e))

    def __mul__(self, other: "FracExpMonomial") -> "FracExpMonomial":
        return FracExpMonomial(self.coeff * other.coeff, self.exp + other.exp)

    def __truediv__(self, other: "FracExpMonomial") -> "FracExpMonomial":
        return FracExpMonomial(self.coeff / other.coeff, self.exp - other.exp)

    def __pow__(self, k: int) -> "FracExpMonomial":
        return FracExpMonomial(self.coeff ** k, self.exp * k)

    def vee(self) -> "FracExpMonomial":
        return FracExpMonomial(self.coeff.conjugate(), -self.exp)

    def is_root_of_unity(self) -> bool:
        return self.exp == 0 and self.coeff.root_of_unity_order() is not None

    def serialize(self) -> str:
        ser = self.coeff.serialize()
        if not _BARE_RATIONAL.fullmatch(ser):
            ser = f"({ser})"
        if self.exp == 0:
            return ser
        if self.exp.denominator == 1:
            xpart = "x" if self.exp == 1 else f"x^{self.exp}"
        else:
            xpart = f"x^({self.exp})"
        return xpart if ser == "1" else f"{ser}*{xpart}"

    @staticmethod
    def parse(text: str) -> "FracExpMonomial":
        text = text.strip()
        m = re.search(r"x(?:\^\(?(-?\d+(?:/\d+)?)\)?)?$", text)
        if m and (m.start() == 0 or text[m.start() - 1] in "*) "):
            exp = Fraction(m.group(1)) if m.group(1) else Fraction(1)
            head = text[: m.start()].rstrip()
            if head.endswith("*"):
                head = head[:-1].rstrip()
            coeff = _parse_coeff(head) if head else Cyclo.rational(1)
            return FracExpMonomial(coeff, exp)
        return FracExpMonomial(_parse_coeff(text), Fraction(0))

    def __repr__(self) -> str:
        return f"FracExpMonomial({self.serialize()})"


# -- K-cyclotomic polynomials ----------------------------------------------------


@dataclass(frozen=True)
class KCycloPoly:
    """An irreducible factor over K of the d-th cyclotomic polynomial."""

    poly: LaurentPoly
    root_order: int
    field: CycloField
    root_exponents: frozenset[int]  # exponents k of the roots zeta_d^k
    label: str = ""

    def serialize(self) -> str:
        return self.poly.serialize()

    def __repr__(self) -> str:
        mark = self.label or f"Phi_{self.root_order}"
        return f"KCycloPoly({mark}: {self.poly.serialize()})"


def k_cyclotomic_factors(d: int, field: CycloField) -> list[KCycloPoly]:
    """Irreducible factors of Phi_d over the field, in canonical order.

    Roots are grouped into orbits under Gal(Qbar/K) acting on primitive
    d-th roots of unity; factors are ordered by their smallest root
    exponent.
    """
    n = field.conductor
    lcm = d * n // gcd(d, n)
    galois = field.galois_orbit_exponents(lcm)
    prim = [k for k in range(1, d + 1) if gcd(k, d) == 1] if d > 1 else [0]
    remaining = set(prim)
    orbits: list[list[int]] = []
    while remaining:
        k0 = min(remaining)
        orbit = sorted({(k0 * g) % d for g in galois})
        remaining -= set(orbit)
        orbits.append(orbit)
    out = []
    for orbit in orbits:
        poly = LaurentPoly.one()
        for k in orbit:
            poly = poly * (LaurentPoly.x() - LaurentPoly.constant(zeta(d, k)))
        for _, c in poly.coeffs:
            if not field.contains(c):  # pragma: no cover - sanity
                raise ArithmeticError("factor coefficients escaped the field")
        out.append(KCycloPoly(poly, d, field, frozenset(orbit)))
    return out
