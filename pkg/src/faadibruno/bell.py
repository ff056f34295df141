"""Bell-type polynomials in formal variables y_i, and the Stirling-type numbers they induce.

Every object here is anchored to its defining sum over partitions (with the
coefficients from :mod:`faadibruno.coefficients`); the identities relating
the objects are exercised by the test suite and the `verify` subcommand, never
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Union

from .coefficients import c_coeff, faa_di_bruno_coeff
from .partitions import DEFAULT_WEIGHT_CAP, enumerate_constrained, enumerate_partitions

# sparse exponent map: ((index, exponent), ...) ascending by index, exponents >= 1
Exps = tuple[tuple[int, int], ...]


def _canon(exps: dict[int, int]) -> Exps:
    return tuple(sorted((i, e) for i, e in exps.items() if e))


def term_degree(exps: Exps) -> int:
    return sum(e for _, e in exps)


def term_weighted_degree(exps: Exps) -> int:
    return sum(i * e for i, e in exps)


class YPolynomial:
    """Sparse integer polynomial in the variables y_1, y_2, ..."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[dict, Iterable[tuple[Exps, int]]] = ()):
        data = terms.items() if isinstance(terms, dict) else terms
        acc: dict[Exps, int] = {}
        for exps, coeff in data:
            if coeff:
                acc[exps] = acc.get(exps, 0) + coeff
                if not acc[exps]:
                    del acc[exps]
        self._terms = acc

    @classmethod
    def zero(cls) -> "YPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "YPolynomial":
        return cls({(): 1})

    @classmethod
    def variable(cls, index: int, exponent: int = 1) -> "YPolynomial":
        if index < 1 or exponent < 1:
            raise ValueError("need index >= 1 and exponent >= 1")
        return cls({((index, exponent),): 1})

    def terms(self) -> list[tuple[Exps, int]]:
        """Terms ordered by ascending weighted degree, then exponent tuples."""
        return sorted(self._terms.items(), key=lambda t: (term_weighted_degree(t[0]), t[0]))

    def coefficient(self, exps: Exps) -> int:
        return self._terms.get(tuple(sorted(exps)), 0)

    def __iter__(self) -> Iterator[tuple[Exps, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, YPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "YPolynomial") -> "YPolynomial":
        acc = dict(self._terms)
        for exps, coeff in other._terms.items():
            acc[exps] = acc.get(exps, 0) + coeff
            if not acc[exps]:
                del acc[exps]
        out = YPolynomial.zero()
        out._terms = acc
        return out

    def __sub__(self, other: "YPolynomial") -> "YPolynomial":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "YPolynomial":
        if not isinstance(scalar, int):
            return NotImplemented
        return YPolynomial({exps: scalar * c for exps, c in self._terms.items()})

    def __mul__(self, other: Union["YPolynomial", int]) -> "YPolynomial":
        if isinstance(other, int):
            return other * self
        if not isinstance(other, YPolynomial):
            return NotImplemented
        acc: dict[Exps, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                merged = dict(e1)
                for i, e in e2:
                    merged[i] = merged.get(i, 0) + e
                key = _canon(merged)
                acc[key] = acc.get(key, 0) + c1 * c2
                if not acc[key]:
                    del acc[key]
        out = YPolynomial.zero()
        out._terms = acc
        return out

    def shift_vars(self, s: int) -> "YPolynomial":
        """Substitute y_i -> y_{i+s} in every term."""
        if s < 0:
            raise ValueError("s must be non-negative")
        return YPolynomial(
            {tuple((i + s, e) for i, e in exps): c for exps, c in self._terms.items()}
        )

    def substitute_geometric(self) -> dict[tuple[int, int], int]:
        """Coefficients after y_i -> c^i x, keyed by (power of c, power of x)."""
        out: dict[tuple[int, int], int] = {}
        for exps, coeff in self._terms.items():
            key = (term_weighted_degree(exps), term_degree(exps))
            out[key] = out.get(key, 0) + coeff
            if not out[key]:
                del out[key]
        return out

    def __repr__(self) -> str:
        return f"YPolynomial({self.pretty()})"

    def to_json_list(self) -> list[dict]:
        return [
            {"y": {str(i): e for i, e in exps}, "coeff": str(coeff)}
            for exps, coeff in self.terms()
        ]

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        rendered = []
        for exps, coeff in self.terms():
            factors = [f"y{i}" if e == 1 else f"y{i}^{e}" for i, e in exps]
            body = "·".join(factors) if factors else "1"
            rendered.append(body if coeff == 1 else f"{coeff}·{body}")
        return " + ".join(rendered)

    def latex(self) -> str:
        if not self._terms:
            return "0"
        rendered = []
        for exps, coeff in self.terms():
            factors = [f"y_{{{i}}}" if e == 1 else f"y_{{{i}}}^{{{e}}}" for i, e in exps]
            body = " ".join(factors) if factors else "1"
            rendered.append(body if coeff == 1 else f"{coeff}\\, " + body)
        return " + ".join(rendered)


@lru_cache(maxsize=None)
def partial_bell(n: int, k: int) -> YPolynomial:
    """Classical partial Bell polynomial: chain-rule coefficients of partitions of n with k parts.

    Zero outside 0 <= k <= n (except the constant 1 at n = k = 0).
    """
    if n < 0 or k < 0 or k > n:
        return YPolynomial.zero()
    terms = {}
    for lam in enumerate_partitions(n):
        if lam.length == k:
            terms[lam.items()] = faa_di_bruno_coeff(lam)
    return YPolynomial(terms)


def complete_bell(n: int) -> YPolynomial:
    total = YPolynomial.zero()
    for k in range(n + 1):
        total = total + partial_bell(n, k)
    return total


def modified_partial_bell(
    n: int, k: int, r: int, s: int, cap: int = DEFAULT_WEIGHT_CAP
) -> YPolynomial:
    """Sum of C(lam, r, s) * prod y_i^m_i over lam of weight n + r*s and length k
    with at least r parts greater than s.

    Vanishes whenever 0 <= r <= k <= n fails; every surviving term has degree k
    and weighted degree n + r*s.
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    if n < 0 or k < 0 or r < 0 or k > n or r > k:
        return YPolynomial.zero()
    terms = {}
    for lam in enumerate_constrained(n, r, s, cap=cap):
        if lam.length == k:
            terms[lam.items()] = c_coeff(lam, r, s)
    return YPolynomial(terms)


def modified_complete_bell(n: int, s: int, cap: int = DEFAULT_WEIGHT_CAP) -> YPolynomial:
    total = YPolynomial.zero()
    for r in range(n + 1):
        for k in range(r, n + 1):
            total = total + modified_partial_bell(n, k, r, s, cap=cap)
    return total


def product_form_partial(
    n: int, k: int, r: int, s: int, cap: int = DEFAULT_WEIGHT_CAP
) -> YPolynomial:
    """Binomial convolution of two classical Bell polynomials, the second with
    its variables shifted up by s.  Contract: equals modified_partial_bell(n, k, r, s).
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    if n < 0 or k < 0 or r < 0:
        return YPolynomial.zero()
    total = YPolynomial.zero()
    for p in range(r, n - k + r + 1):
        left = partial_bell(n - p, k - r)
        if not left:
            continue
        right = partial_bell(p, r).shift_vars(s)
        if not right:
            continue
        total = total + comb(n, p) * (left * right)
    return total


def product_form_complete(n: int, s: int, cap: int = DEFAULT_WEIGHT_CAP) -> YPolynomial:
    """Binomial convolution of complete Bell polynomials; equals modified_complete_bell."""
    total = YPolynomial.zero()
    for p in range(n + 1):
        total = total + comb(n, p) * (complete_bell(n - p) * complete_bell(p).shift_vars(s))
    return total


# -- Stirling numbers -------------------------------------------------------


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind, via S(n+1, k+1) = sum_l binom(n, l) S(n-l, k)."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    if k == 0:
        return 0
    return sum(comb(n - 1, l) * stirling2(n - 1 - l, k - 1) for l in range(n))


@lru_cache(maxsize=None)
def modified_stirling(n: int, k: int, r: int) -> int:
    """Image of modified_partial_bell under y_i -> c^i x, read off at c^(n+rs) x^k.

    The value does not depend on s (a verified property, not an assumption);
    it is evaluated here at s = 0, where it is the plain coefficient sum
    over partitions of n with k parts.
    """
    if n < 0 or k < 0 or r < 0 or k > n or r > k:
        return 0
    total = 0
    for lam in enumerate_partitions(n):
        if lam.length == k:
            total += c_coeff(lam, r, 0)
    return total


def stirling_convolution(n: int, k: int, r: int) -> int:
    """Binomially weighted convolution sum_p binom(n, p) S(n-p, k-r) S(p, r).

    Contract: equals modified_stirling(n, k, r).  (The superficially natural
    variant without the binomial weight is false; the verification report
    records its counterexample.)
    """
    if n < 0 or k < 0 or r < 0:
        return 0
    return sum(
        comb(n, p) * stirling2(n - p, k - r) * stirling2(p, r)
        for p in range(r, n - k + r + 1)
    )


def touchard(n: int) -> tuple[int, ...]:
    """Coefficient sequence (S(n, 0), ..., S(n, n)) of the n-th Touchard polynomial."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(stirling2(n, k) for k in range(n + 1))


@dataclass(frozen=True)
class StirlingTable:
    """Modified Stirling numbers for all 0 <= r <= k <= n <= n_max."""

    n_max: int
    entries: tuple[tuple[int, int, int, int], ...]  # (n, k, r, value)

    @classmethod
    def build(cls, n_max: int) -> "StirlingTable":
        if n_max < 0:
            raise ValueError("n_max must be non-negative")
        entries = []
        for n in range(n_max + 1):
            for k in range(n + 1):
                for r in range(k + 1):
                    entries.append((n, k, r, modified_stirling(n, k, r)))
        return cls(n_max=n_max, entries=tuple(entries))

    def to_csv(self) -> str:
        return "\n".join(f"{n},{k},{r},{v}" for n, k, r, v in self.entries)

    def to_json_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "entries": [
                {"n": n, "k": k, "r": r, "value": str(v)} for n, k, r, v in self.entries
            ],
        }

    def to_latex(self) -> str:
        rows = [rf"{n} & {k} & {r} & {v} \\" for n, k, r, v in self.entries]
        return "\n".join(
            [r"\begin{tabular}{rrrr}", r"$n$ & $k$ & $r$ & $\widetilde{S}$ \\ \hline", *rows, r"\end{tabular}"]
        )

    def pretty(self) -> str:
        return "\n".join(f"S~({n},{k},{r}) = {v}" for n, k, r, v in self.entries)
