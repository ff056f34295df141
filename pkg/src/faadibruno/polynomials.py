"""Exact rational univariate polynomials: the fully concrete second oracle.

With f, g, phi taken to be polynomials, every derivative exists and both sides
of the expansion theorem are honest polynomials in t that can be compared
coefficient by coefficient with zero tolerance.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import lcm
from typing import Iterable, Union

from .diffalg import DiffPolynomial, formula_expansion
from .partitions import DEFAULT_WEIGHT_CAP

Coeffs = Iterable[Union[Fraction, int, str]]


class RationalPolynomial:
    """Univariate polynomial with exact rational coefficients (index = degree).

    Canonical form never stores a trailing zero; the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Coeffs = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def from_string(cls, text: str) -> "RationalPolynomial":
        """Parse a comma-separated coefficient list, lowest degree first ("1,0,2/3")."""
        text = text.strip()
        if not text:
            return cls()
        return cls(Fraction(tok.strip()) for tok in text.split(","))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def to_strings(self) -> list[str]:
        return [str(c) for c in self._coeffs]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"RationalPolynomial([{', '.join(self.to_strings())}])"

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(out)

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial([-c for c in self._coeffs])

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + (-other)

    def _int_form(self) -> tuple[list[int], int]:
        # common-denominator view for integer convolution
        den = lcm(*(c.denominator for c in self._coeffs)) if self._coeffs else 1
        return [int(c * den) for c in self._coeffs], den

    def __mul__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return RationalPolynomial()
        a, da = self._int_form()
        b, db = other._int_form()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        den = da * db
        return RationalPolynomial(Fraction(v, den) for v in out)

    def scale(self, factor: Union[Fraction, int]) -> "RationalPolynomial":
        factor = Fraction(factor)
        return RationalPolynomial(c * factor for c in self._coeffs)

    def __pow__(self, exponent: int) -> "RationalPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not defined here")
        result = RationalPolynomial([1])
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def compose(self, inner: "RationalPolynomial") -> "RationalPolynomial":
        """self(inner(t)), by Horner evaluation in the polynomial ring."""
        result = RationalPolynomial()
        for c in reversed(self._coeffs):
            result = result * inner + RationalPolynomial([c])
        return result

    def derivative(self, order: int = 1) -> "RationalPolynomial":
        if order < 0:
            raise ValueError("derivative order must be non-negative")
        p = self
        for _ in range(order):
            p = RationalPolynomial(i * c for i, c in enumerate(p._coeffs) if i)
        return p


def poly_add(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    return p + q


def poly_mul(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    return p * q


def poly_compose(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    return p.compose(q)


def poly_derivative(p: RationalPolynomial, order: int = 1) -> RationalPolynomial:
    return p.derivative(order)


class FormulaInstantiator:
    """Evaluates expansion monomials on concrete polynomials, caching the pieces.

    Fixed to one triple (f, g, phi) and one shift s; a single instance should
    serve every monomial of every expansion compared against that instance.
    """

    def __init__(
        self,
        f: RationalPolynomial,
        g: RationalPolynomial,
        phi: RationalPolynomial,
        s: int,
    ):
        self.f = f
        self.g = g
        self.phi = phi
        self.phi_s = phi.derivative(s)
        self._f_comp: dict[int, RationalPolynomial] = {}
        self._g_comp: dict[int, RationalPolynomial] = {}
        self._phi_pow: dict[tuple[int, int], RationalPolynomial] = {}

    def _f_at(self, a: int) -> RationalPolynomial:
        if a not in self._f_comp:
            self._f_comp[a] = self.f.derivative(a).compose(self.phi)
        return self._f_comp[a]

    def _g_at(self, b: int) -> RationalPolynomial:
        if b not in self._g_comp:
            self._g_comp[b] = self.g.derivative(b).compose(self.phi_s)
        return self._g_comp[b]

    def _phi_factor(self, i: int, e: int) -> RationalPolynomial:
        key = (i, e)
        if key not in self._phi_pow:
            self._phi_pow[key] = self.phi.derivative(i) ** e
        return self._phi_pow[key]

    def expansion_value(self, expansion: DiffPolynomial) -> RationalPolynomial:
        total = RationalPolynomial()
        for mono, coeff in expansion:
            if mono.z:
                raise ValueError("psi symbols cannot be instantiated here")
            a = mono.f_order if mono.f_order is not None else 0
            b = mono.g_order if mono.g_order is not None else 0
            # a polynomial's high derivatives vanish: skip dead monomials early
            if a > self.f.degree or b > self.g.degree:
                continue
            value = self._f_at(a)
            if value.is_zero():
                continue
            gb = self._g_at(b)
            if gb.is_zero():
                continue
            value = value * gb
            dead = False
            for i, e in mono.y:
                factor = self._phi_factor(i, e)
                if factor.is_zero():
                    dead = True
                    break
                value = value * factor
            if dead:
                continue
            total = total + value.scale(coeff)
        return total


def check_main_theorem(
    f: RationalPolynomial,
    g: RationalPolynomial,
    phi: RationalPolynomial,
    n: int,
    s: int,
    cap: int = DEFAULT_WEIGHT_CAP,
) -> dict:
    """Compare the n-th derivative of (f o phi) * (g o phi^(s)) with the expansion.

    Returns a JSON-ready report; on disagreement it includes the
    coefficient-wise difference.
    """
    if n < 0 or s < 0:
        raise ValueError("n and s must be non-negative")
    inst = FormulaInstantiator(f, g, phi, s)
    lhs = (f.compose(phi) * g.compose(inst.phi_s)).derivative(n)
    rhs = inst.expansion_value(formula_expansion(n, s, cap=cap))
    report = {
        "n": n,
        "s": s,
        "f": f.to_strings(),
        "g": g.to_strings(),
        "phi": phi.to_strings(),
        "equal": lhs == rhs,
        "lhs": lhs.to_strings(),
        "rhs": rhs.to_strings(),
    }
    if lhs != rhs:
        report["difference"] = (lhs - rhs).to_strings()
    return report


def random_polynomial(
    rng: random.Random, max_degree: int = 5, max_height: int = 10
) -> RationalPolynomial:
    """Random polynomial of degree <= max_degree; |numerator|, denominator <= max_height."""
    degree = rng.randint(0, max_degree)
    return RationalPolynomial(
        Fraction(rng.randint(-max_height, max_height), rng.randint(1, max_height))
        for _ in range(degree + 1)
    )


def run_random_checks(
    trials: int,
    max_n: int,
    max_s: int,
    seed: int,
    cap: int = DEFAULT_WEIGHT_CAP,
    max_degree: int = 5,
    max_height: int = 10,
) -> dict:
    """Seeded random triples (f, g, phi), each checked for every n <= max_n, s <= max_s."""
    rng = random.Random(seed)
    expansions = {
        (n, s): formula_expansion(n, s, cap=cap)
        for s in range(max_s + 1)
        for n in range(max_n + 1)
    }
    instances = 0
    failures = 0
    first_failure = None
    for trial in range(trials):
        f = random_polynomial(rng, max_degree, max_height)
        g = random_polynomial(rng, max_degree, max_height)
        phi = random_polynomial(rng, max_degree, max_height)
        for s in range(max_s + 1):
            inst = FormulaInstantiator(f, g, phi, s)
            lhs = f.compose(phi) * g.compose(inst.phi_s)
            for n in range(max_n + 1):
                rhs = inst.expansion_value(expansions[(n, s)])
                instances += 1
                if lhs != rhs:
                    failures += 1
                    if first_failure is None:
                        first_failure = {
                            "trial": trial,
                            "n": n,
                            "s": s,
                            "f": f.to_strings(),
                            "g": g.to_strings(),
                            "phi": phi.to_strings(),
                        }
                lhs = lhs.derivative()
    return {
        "trials": trials,
        "max_n": max_n,
        "max_s": max_s,
        "seed": seed,
        "instances": instances,
        "failures": failures,
        "passed": failures == 0,
        "first_failure": first_failure,
    }
