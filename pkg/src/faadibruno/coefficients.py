"""Exact partition-indexed coefficients of the higher-order product-chain rule.

The central object is the integer

    C(lam, r, s) = n! * e_r(pochhammer(truncate_above(lam, s), s)) / prod_i (i!)^m_i m_i!

with n = weight(lam) - r*s.  It is computed two independent ways: by the
closed formula above, and by a recurrence over partition modifications.  The
closed formula is the production path; the recurrence is the cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import (
    DEFAULT_WEIGHT_CAP,
    CapExceeded,
    Partition,
    enumerate_constrained,
)
from .symfunc import elementary_moments


class IntegralityError(ArithmeticError):
    """A coefficient reduced to a non-integer; this indicates an implementation bug."""


class CrossCheckError(ArithmeticError):
    """Closed-form and recurrence evaluations disagree."""


@lru_cache(maxsize=None)
def _fact(n: int) -> int:
    return factorial(n)


def _denominator(lam: Partition) -> int:
    d = 1
    for i, m in lam.items():
        d *= _fact(i) ** m * _fact(m)
    return d


def faa_di_bruno_coeff(lam: Partition) -> int:
    """weight! / prod_i (i!)^m_i m_i!  (the number of set partitions of type lam)."""
    num = _fact(lam.weight)
    den = _denominator(lam)
    q, rem = divmod(num, den)
    if rem:  # cannot happen: the quotient counts set partitions
        raise IntegralityError(f"classical coefficient of {lam!r} is not integral")
    return q


def c_coeff(lam: Partition, r: int, s: int) -> int:
    """The generalized coefficient C(lam, r, s), asserted integral.

    Zero when fewer than r parts of lam exceed s (the elementary symmetric
    factor vanishes).  weight(lam) must be at least r*s so that the implied
    derivative order n = weight - r*s is non-negative.
    """
    if r < 0 or s < 0:
        raise ValueError("r and s must be non-negative")
    n = lam.weight - r * s
    if n < 0:
        raise ValueError(f"weight {lam.weight} is smaller than r*s = {r * s}")
    if lam.length_above(s) < r:
        return 0
    trunc = lam.truncate_above(s)
    e_r = elementary_moments(trunc.pochhammer(s), r)[r]
    value = Fraction(_fact(n) * e_r, _denominator(lam))
    if value.denominator != 1:
        raise IntegralityError(f"C({lam!r}, r={r}, s={s}) reduced to {value}, not an integer")
    return value.numerator


class RecurrenceEvaluator:
    """Memoized recurrence evaluation of C(., ., s) for a fixed shift s.

    One evaluator should be shared across many queries with the same s: the
    recurrence revisits sub-partitions exponentially often otherwise.  The memo
    is keyed on (partition, r) and only ever stores final values, so concurrent
    readers inserting identical entries are harmless.
    """

    def __init__(self, s: int):
        if s < 0:
            raise ValueError("s must be non-negative")
        self.s = s
        self._memo: dict[tuple[Partition, int], int] = {}

    def value(self, lam: Partition, r: int) -> int:
        if r < 0:
            raise ValueError("r must be non-negative")
        if lam.weight == 0:
            return 1 if r == 0 else 0
        key = (lam, r)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        s = self.s
        total = 0
        for j, _m in lam.items():
            total += (lam.multiplicity(j - 1) + 1) * self.value(lam.decrement_part(j), r)
        if r >= 1 and lam.multiplicity(s + 1) >= 1:
            total += self.value(lam.remove_part(s + 1), r - 1)
        self._memo[key] = total
        return total


def c_coeff_by_recurrence(lam: Partition, r: int, s: int) -> int:
    """C(lam, r, s) by the modification recurrence alone (no elementary moments)."""
    if r < 0 or s < 0:
        raise ValueError("r and s must be non-negative")
    if lam.weight - r * s < 0:
        raise ValueError(f"weight {lam.weight} is smaller than r*s = {r * s}")
    return RecurrenceEvaluator(s).value(lam, r)


@dataclass(frozen=True)
class CoefficientTable:
    """All coefficients for a fixed derivative order n and shift s.

    Entries cover exactly the pairs (r, lam) with 0 <= r <= n, lam a partition
    of n + r*s, and at least r parts of lam greater than s; ordering is
    ascending r, then the partition enumeration order.
    """

    n: int
    s: int
    entries: tuple[tuple[int, Partition, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "entries": [
                {"r": r, "parts": list(lam.parts), "coeff": str(c)}
                for r, lam, c in self.entries
            ],
        }

    def to_csv(self) -> str:
        lines = []
        for r, lam, c in self.entries:
            lines.append(f"{r},{' '.join(str(a) for a in lam.parts)},{c}")
        return "\n".join(lines)

    def to_latex(self) -> str:
        rows = [
            rf"{r} & ({', '.join(str(a) for a in lam.parts)}) & {c} \\"
            for r, lam, c in self.entries
        ]
        return "\n".join(
            [rf"\begin{{tabular}}{{rll}}", r"$r$ & $\lambda$ & $C$ \\ \hline", *rows, r"\end{tabular}"]
        )

    def pretty(self) -> str:
        lines = [f"n={self.n} s={self.s}"]
        for r, lam, c in self.entries:
            parts = "+".join(str(a) for a in lam.parts) or "0"
            lines.append(f"  r={r}  {parts:<18} {c}")
        return "\n".join(lines)


def coefficient_table(
    n: int, s: int, verify: bool = False, cap: int = DEFAULT_WEIGHT_CAP
) -> CoefficientTable:
    """Build the full table for (n, s); optionally cross-check every entry.

    In verify mode each closed-form value is recomputed through the
    recurrence (one shared evaluator) and any disagreement raises
    :class:`CrossCheckError`.
    """
    if n < 0 or s < 0:
        raise ValueError("n and s must be non-negative")
    if n + n * s > cap:
        raise CapExceeded(f"table (n={n}, s={s}) reaches weight {n + n * s} > cap {cap}")
    evaluator = RecurrenceEvaluator(s) if verify else None
    entries: list[tuple[int, Partition, int]] = []
    for r in range(n + 1):
        for lam in enumerate_constrained(n, r, s, cap=cap):
            c = c_coeff(lam, r, s)
            if evaluator is not None:
                again = evaluator.value(lam, r)
                if again != c:
                    raise CrossCheckError(
                        f"C({lam!r}, r={r}, s={s}): closed form {c} != recurrence {again}"
                    )
            entries.append((r, lam, c))
    return CoefficientTable(n=n, s=s, entries=tuple(entries))
