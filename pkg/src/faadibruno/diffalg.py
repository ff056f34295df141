"""Formal derivative algebra: the symbolic oracle for the expansion formulas.

Monomials live in the polynomial ring generated by

    F_a  (the a-th derivative of f, taken at the inner function),
    G_b  (the b-th derivative of g, taken at its own inner function),
    Y_i  (the i-th derivative of the inner function phi),
    Z_i  (the i-th derivative of an auxiliary inner function psi),

with arbitrary-precision integer coefficients.  Repeatedly applying the
derivation below to F_0 * G_0 produces the n-th derivative of
(f o phi) * (g o psi) literally, which is the ground truth that every closed
formula in this package is compared against.

Expansion monomials always carry exactly one F factor and one G factor.  For
generic algebra (products, the Leibniz-rule property) a monomial may omit
either factor; `f_order is None` means "no F factor at all", which is not the
same as order zero.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator, NamedTuple, Union

from .coefficients import c_coeff, faa_di_bruno_coeff
from .partitions import (
    DEFAULT_WEIGHT_CAP,
    CapExceeded,
    enumerate_constrained,
    enumerate_partitions,
)

# sparse exponent map: ((index, exponent), ...) ascending by index, exponents >= 1
ExponentMap = tuple[tuple[int, int], ...]


class DiffMonomial(NamedTuple):
    f_order: Union[int, None]
    g_order: Union[int, None]
    y: ExponentMap
    z: ExponentMap


def _canon(exps: dict[int, int]) -> ExponentMap:
    return tuple(sorted((i, e) for i, e in exps.items() if e))


def _bump(exps: ExponentMap, index: int, delta: int) -> ExponentMap:
    d = dict(exps)
    d[index] = d.get(index, 0) + delta
    return _canon(d)


def monomial(
    f_order: Union[int, None] = None,
    g_order: Union[int, None] = None,
    y: Union[dict, Iterable[tuple[int, int]]] = (),
    z: Union[dict, Iterable[tuple[int, int]]] = (),
) -> DiffMonomial:
    """Validated monomial constructor; y and z map derivative order to exponent."""
    for order in (f_order, g_order):
        if order is not None and order < 0:
            raise ValueError("derivative orders must be non-negative")
    ymap = dict(y) if not isinstance(y, dict) else y
    zmap = dict(z) if not isinstance(z, dict) else z
    for family in (ymap, zmap):
        for i, e in family.items():
            if i < 1 or e < 0:
                raise ValueError("exponent maps need indices >= 1 and exponents >= 0")
    return DiffMonomial(f_order, g_order, _canon(ymap), _canon(zmap))


def _sort_key(mono: DiffMonomial):
    f = -1 if mono.f_order is None else mono.f_order
    g = -1 if mono.g_order is None else mono.g_order
    return (f, g, mono.y, mono.z)


class DiffPolynomial:
    """Sparse integer-coefficient polynomial over :class:`DiffMonomial` keys."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[dict, Iterable[tuple[DiffMonomial, int]]] = ()):
        data = terms.items() if isinstance(terms, dict) else terms
        acc: dict[DiffMonomial, int] = {}
        for mono, coeff in data:
            if coeff:
                acc[mono] = acc.get(mono, 0) + coeff
                if not acc[mono]:
                    del acc[mono]
        self._terms = acc

    @classmethod
    def zero(cls) -> "DiffPolynomial":
        return cls()

    @classmethod
    def term(cls, mono: DiffMonomial, coeff: int = 1) -> "DiffPolynomial":
        return cls({mono: coeff})

    def terms(self) -> list[tuple[DiffMonomial, int]]:
        """Terms in canonical order: descending (f_order, g_order, y, z)."""
        return sorted(self._terms.items(), key=lambda t: _sort_key(t[0]), reverse=True)

    def coefficient(self, mono: DiffMonomial) -> int:
        return self._terms.get(mono, 0)

    def __iter__(self) -> Iterator[tuple[DiffMonomial, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "DiffPolynomial") -> "DiffPolynomial":
        acc = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc[mono] = acc.get(mono, 0) + coeff
            if not acc[mono]:
                del acc[mono]
        out = DiffPolynomial.zero()
        out._terms = acc
        return out

    def __sub__(self, other: "DiffPolynomial") -> "DiffPolynomial":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "DiffPolynomial":
        if not isinstance(scalar, int):
            return NotImplemented
        return DiffPolynomial({m: scalar * c for m, c in self._terms.items()})

    def __mul__(self, other: "DiffPolynomial") -> "DiffPolynomial":
        """Product, defined as long as no monomial pair would carry two F (or two G) factors.

        Expansion polynomials each hold one F and one G per monomial, so their
        products are rejected; multiplying by Y/Z-only polynomials is always fine.
        """
        if isinstance(other, int):
            return other * self
        if not isinstance(other, DiffPolynomial):
            return NotImplemented
        acc: dict[DiffMonomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                if m1.f_order is not None and m2.f_order is not None:
                    raise ValueError("product would carry two f factors in one monomial")
                if m1.g_order is not None and m2.g_order is not None:
                    raise ValueError("product would carry two g factors in one monomial")
                f = m1.f_order if m1.f_order is not None else m2.f_order
                g = m1.g_order if m1.g_order is not None else m2.g_order
                y = dict(m1.y)
                for i, e in m2.y:
                    y[i] = y.get(i, 0) + e
                z = dict(m1.z)
                for i, e in m2.z:
                    z[i] = z.get(i, 0) + e
                mono = DiffMonomial(f, g, _canon(y), _canon(z))
                acc[mono] = acc.get(mono, 0) + c1 * c2
                if not acc[mono]:
                    del acc[mono]
        out = DiffPolynomial.zero()
        out._terms = acc
        return out

    def __repr__(self) -> str:
        return f"DiffPolynomial({self.pretty()})"

    # -- rendering ----------------------------------------------------------

    def to_json_list(self) -> list[dict]:
        out = []
        for mono, coeff in self.terms():
            out.append(
                {
                    "f": mono.f_order,
                    "g": mono.g_order,
                    "y": {str(i): e for i, e in mono.y},
                    "z": {str(i): e for i, e in mono.z},
                    "coeff": str(coeff),
                }
            )
        return out

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_pretty_term(mono, coeff) for mono, coeff in self.terms())

    def latex(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_latex_term(mono, coeff) for mono, coeff in self.terms())


def _order_marks(base: str, order: int) -> str:
    if order <= 3:
        return base + "'" * order
    return f"{base}^({order})"


def _pretty_term(mono: DiffMonomial, coeff: int) -> str:
    factors = []
    if mono.f_order is not None:
        factors.append(_order_marks("f", mono.f_order))
    if mono.g_order is not None:
        factors.append(_order_marks("g", mono.g_order))
    for i, e in mono.y:
        sym = _order_marks("φ", i)
        factors.append(sym if e == 1 else f"{sym}^{e}")
    for i, e in mono.z:
        sym = _order_marks("ψ", i)
        factors.append(sym if e == 1 else f"{sym}^{e}")
    body = "·".join(factors) if factors else "1"
    if coeff == 1:
        return body
    return f"{coeff}·{body}"


def _latex_term(mono: DiffMonomial, coeff: int) -> str:
    factors = []
    if mono.f_order is not None:
        factors.append("f" if mono.f_order == 0 else f"f^{{({mono.f_order})}}")
    if mono.g_order is not None:
        factors.append("g" if mono.g_order == 0 else f"g^{{({mono.g_order})}}")
    for sym, exps in ((r"\varphi", mono.y), (r"\psi", mono.z)):
        for i, e in exps:
            piece = f"{sym}^{{({i})}}"
            factors.append(piece if e == 1 else f"\\big({piece}\\big)^{{{e}}}")
    body = r"\,".join(factors) if factors else "1"
    if coeff == 1:
        return body
    return f"{coeff}\\," + body


# -- the derivation -------------------------------------------------------

MODES = ("composed", "independent", "constant_g")


def derive(poly: DiffPolynomial, mode: str = "composed", s: int = 0) -> DiffPolynomial:
    """Apply the derivation once, linearly and by the Leibniz rule.

    Rules common to every mode:  F_a -> F_{a+1} Y_1  and  Y_i -> Y_{i+1}.
    The G rule picks the mode:

    * ``composed``: g rides on the s-th derivative of phi, so
      G_b -> G_{b+1} Y_{s+1}; Z symbols must not appear.
    * ``independent``: g rides on an unrelated function psi, so
      G_b -> G_{b+1} Z_1 and Z_i -> Z_{i+1}.
    * ``constant_g``: g is never differentiated (classical chain rule).
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "composed" and s < 0:
        raise ValueError("s must be non-negative")
    acc: dict[DiffMonomial, int] = {}

    def add(mono: DiffMonomial, coeff: int) -> None:
        acc[mono] = acc.get(mono, 0) + coeff
        if not acc[mono]:
            del acc[mono]

    for mono, coeff in poly:
        f, g, y, z = mono
        if mode == "composed" and z:
            raise ValueError("z symbols cannot appear in composed mode")
        if f is not None:
            add(DiffMonomial(f + 1, g, _bump(y, 1, +1), z), coeff)
        if g is not None:
            if mode == "composed":
                add(DiffMonomial(f, g + 1, _bump(y, s + 1, +1), z), coeff)
            elif mode == "independent":
                add(DiffMonomial(f, g + 1, y, _bump(z, 1, +1)), coeff)
        for i, e in y:
            add(DiffMonomial(f, g, _bump(_bump(y, i, -1), i + 1, +1), z), coeff * e)
        for i, e in z:
            add(DiffMonomial(f, g, y, _bump(_bump(z, i, -1), i + 1, +1)), coeff * e)
    return DiffPolynomial(acc)


_SEED = DiffMonomial(0, 0, (), ())


def _check_cap(max_weight: int, cap: int, what: str) -> None:
    if max_weight > cap:
        raise CapExceeded(f"{what} reaches weight {max_weight} > cap {cap}")


def nth_derivative_expansion(n: int, s: int, cap: int = DEFAULT_WEIGHT_CAP) -> DiffPolynomial:
    """n-fold derivation of F_0 G_0 in composed mode: the ground-truth oracle."""
    if n < 0 or s < 0:
        raise ValueError("n and s must be non-negative")
    _check_cap(n * (1 + s), cap, f"oracle expansion (n={n}, s={s})")
    poly = DiffPolynomial.term(_SEED)
    for _ in range(n):
        poly = derive(poly, "composed", s)
    return poly


def formula_expansion(n: int, s: int, cap: int = DEFAULT_WEIGHT_CAP) -> DiffPolynomial:
    """The closed-formula expansion: sum of C(lam, r, s) F_{len-r} G_r prod Y_i^m_i."""
    if n < 0 or s < 0:
        raise ValueError("n and s must be non-negative")
    _check_cap(n * (1 + s), cap, f"formula expansion (n={n}, s={s})")
    acc: dict[DiffMonomial, int] = {}
    for r in range(n + 1):
        for lam in enumerate_constrained(n, r, s, cap=cap):
            mono = DiffMonomial(lam.length - r, r, lam.items(), ())
            acc[mono] = acc.get(mono, 0) + c_coeff(lam, r, s)
    return DiffPolynomial(acc)


def faa_expansion(n: int, cap: int = DEFAULT_WEIGHT_CAP) -> DiffPolynomial:
    """The classical chain-rule expansion of the n-th derivative of f o phi.

    G stays untouched at order 0; equals the constant_g oracle.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    _check_cap(n, cap, f"chain-rule expansion (n={n})")
    acc: dict[DiffMonomial, int] = {}
    for lam in enumerate_partitions(n, cap=cap):
        mono = DiffMonomial(lam.length, 0, lam.items(), ())
        acc[mono] = faa_di_bruno_coeff(lam)
    return DiffPolynomial(acc)


def leibniz_product_expansion(n: int, cap: int = DEFAULT_WEIGHT_CAP) -> DiffPolynomial:
    """Closed form of the n-th derivative of (f o phi) * (g o psi), psi unrelated.

    For each partition rho of n, the chain-rule coefficient of rho is split
    over all ways of routing a sub-partition mu of rho to the psi side, with
    multiplicity prod_i binom(m_i(rho), m_i(mu)).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    _check_cap(n, cap, f"product-rule expansion (n={n})")
    acc: dict[DiffMonomial, int] = {}
    for rho in enumerate_partitions(n, cap=cap):
        base = faa_di_bruno_coeff(rho)
        items = rho.items()
        choices = [range(m + 1) for _, m in items]
        for sub in _cartesian(choices):
            mult = 1
            r = 0
            y: dict[int, int] = {}
            z: dict[int, int] = {}
            for (i, m), chosen in zip(items, sub):
                mult *= comb(m, chosen)
                r += chosen
                if m - chosen:
                    y[i] = m - chosen
                if chosen:
                    z[i] = chosen
            mono = DiffMonomial(rho.length - r, r, _canon(y), _canon(z))
            acc[mono] = acc.get(mono, 0) + base * mult
    return DiffPolynomial(acc)


def _cartesian(ranges: list[range]) -> Iterator[tuple[int, ...]]:
    if not ranges:
        yield ()
        return
    for head in ranges[0]:
        for tail in _cartesian(ranges[1:]):
            yield (head,) + tail


def substitute_psi(poly: DiffPolynomial, s: int) -> DiffPolynomial:
    """Identify psi with the s-th derivative of phi: Z_i -> Y_{i+s}, merging terms."""
    if s < 0:
        raise ValueError("s must be non-negative")
    acc: dict[DiffMonomial, int] = {}
    for mono, coeff in poly:
        if mono.z:
            y = dict(mono.y)
            for i, e in mono.z:
                y[i + s] = y.get(i + s, 0) + e
            mono = DiffMonomial(mono.f_order, mono.g_order, _canon(y), ())
        acc[mono] = acc.get(mono, 0) + coeff
        if not acc[mono]:
            del acc[mono]
    return DiffPolynomial(acc)
