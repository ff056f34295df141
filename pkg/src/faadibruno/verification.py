"""Executable identity suites behind the `verify` subcommand.

Each suite re-derives one identity from scratch at the requested bounds and
reports instance/failure counts plus the first counterexample found.  Two
suites are marked informational: they evaluate superficially natural variants
of true identities (one missing a binomial weight, one missing an index
shift) that are genuinely false, and exist to document the counterexamples.
Informational failures never affect the exit status.
"""

from __future__ import annotations

import random
from itertools import combinations_with_replacement
from math import comb, factorial

from . import bell, diffalg, polynomials, symfunc
from .coefficients import (
    IntegralityError,
    RecurrenceEvaluator,
    c_coeff,
    coefficient_table,
    faa_di_bruno_coeff,
)
from .partitions import (
    DEFAULT_WEIGHT_CAP,
    Multiset,
    Partition,
    enumerate_partitions,
)


def partition_count_dp(n_max: int) -> list[int]:
    # Euler generating-function style DP, independent of the enumerator
    counts = [0] * (n_max + 1)
    counts[0] = 1
    for part in range(1, n_max + 1):
        for total in range(part, n_max + 1):
            counts[total] += counts[total - part]
    return counts


def _all_partitions_upto(n_max: int) -> list[Partition]:
    out: list[Partition] = []
    for n in range(n_max + 1):
        out.extend(enumerate_partitions(n))
    return out


def _multisets(card_max: int, entry_max: int):
    for card in range(card_max + 1):
        for combo in combinations_with_replacement(range(1, entry_max + 1), card):
            yield Multiset(combo)


# ---------------------------------------------------------------------------
# suite implementations: each returns (instances, failures, counterexample)
# ---------------------------------------------------------------------------


def _suite_partition_counts(max_n: int, max_s: int, rng, trials: int, cap: int):
    bound = min(2 * max_n, 30)
    dp = partition_count_dp(bound)
    instances = failures = 0
    witness = None
    for n in range(bound + 1):
        seen = list(enumerate_partitions(n))
        instances += 1
        ok = (
            len(seen) == dp[n]
            and len(set(seen)) == len(seen)
            and all(lam.weight == n for lam in seen)
        )
        if not ok:
            failures += 1
            witness = witness or {"n": n, "enumerated": len(seen), "expected": dp[n]}
    return instances, failures, witness


def _suite_partition_modifications(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for lam in _all_partitions_upto(max_n):
        for j, _m in lam.items():
            removed = lam.remove_part(j)
            lowered = lam.decrement_part(j)
            instances += 1
            ok = (
                removed.weight == lam.weight - j
                and removed.length == lam.length - 1
                and all(
                    removed.multiplicity(i) == lam.multiplicity(i) - (1 if i == j else 0)
                    for i in range(1, lam.weight + 2)
                )
                and lowered.weight == lam.weight - 1
                and lowered.length == lam.length - (1 if j == 1 else 0)
                and all(
                    lowered.multiplicity(i)
                    == lam.multiplicity(i)
                    + (1 if (i == j - 1 and i >= 1) else 0)
                    - (1 if i == j else 0)
                    for i in range(1, lam.weight + 2)
                )
            )
            if j == 1:
                ok = ok and lowered == removed
            if not ok:
                failures += 1
                witness = witness or {"partition": list(lam.parts), "j": j}
    return instances, failures, witness


def _suite_union_shift(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    pool = _all_partitions_upto(max_n)
    for mu in pool:
        for nu in pool:
            if mu.weight + nu.weight > max_n:
                continue
            both = mu.union(nu)
            instances += 1
            ok = (
                both.weight == mu.weight + nu.weight
                and both.length == mu.length + nu.length
                and all(
                    both.multiplicity(i) == mu.multiplicity(i) + nu.multiplicity(i)
                    for i in range(1, max_n + 2)
                )
            )
            if not ok:
                failures += 1
                witness = witness or {"mu": list(mu.parts), "nu": list(nu.parts)}
    for mu in pool:
        for s in range(max_s + 1):
            shifted = mu.shift_up(s)
            instances += 1
            ok = (
                shifted.length == mu.length
                and shifted.weight == mu.weight + s * mu.length
                and all(
                    shifted.multiplicity(i + s) == mu.multiplicity(i)
                    for i in range(1, max_n + 2)
                )
                and all(shifted.multiplicity(i) == 0 for i in range(1, s + 1))
            )
            if not ok:
                failures += 1
                witness = witness or {"mu": list(mu.parts), "s": s}
    return instances, failures, witness


def _suite_truncation_fixed_points(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for lam in _all_partitions_upto(max_n):
        for s in range(max_s + 1):
            instances += 1
            fixed = lam.truncate_above(s) == lam
            expected = all(i > s for i, _ in lam.items())
            ok = fixed == expected
            shifted = lam.shift_up(s)
            ok = ok and shifted.truncate_above(s) == shifted
            if expected:
                # shift-down inverts shift-up exactly on truncation-fixed partitions
                down = Partition([a - s for a in lam.parts])
                ok = ok and down.shift_up(s) == lam
            if not ok:
                failures += 1
                witness = witness or {"partition": list(lam.parts), "s": s}
    return instances, failures, witness


def _suite_newton_residual(max_n: int, max_s: int, rng, trials: int, cap: int):
    card_max = min(max_n, 6)
    entry_max = 8
    instances = failures = 0
    witness = None
    for b in _multisets(card_max, entry_max):
        for r in range(1, card_max + 1):
            instances += 1
            if symfunc.newton_residual(b, r) != 0:
                failures += 1
                witness = witness or {"multiset": list(b.elements), "r": r}
    return instances, failures, witness


def _suite_subtract_transform(max_n: int, max_s: int, rng, trials: int, cap: int):
    card_max = min(max_n, 6)
    entry_max = 8
    instances = failures = 0
    witness = None
    for b in _multisets(card_max, entry_max):
        if not len(b):
            continue
        r_max = len(b)
        for value in sorted(set(b.elements)):
            instances += 1
            omitted = symfunc.subtract_transform(b, value, value, r_max)
            direct = symfunc.elementary_moments(b.remove_one(value), r_max)
            general_ok = True
            for c in (0, 1, value // 2):
                replaced = Multiset(list(b.remove_one(value)) + [value - c])
                if symfunc.subtract_transform(b, value, c, r_max) != symfunc.elementary_moments(
                    replaced, r_max
                ):
                    general_ok = False
            if omitted != direct or not general_ok:
                failures += 1
                witness = witness or {"multiset": list(b.elements), "value": value}
    return instances, failures, witness


def _suite_subpartition_sum(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for eta in _all_partitions_upto(max_n):
        for s in range(max_s + 1):
            if s >= 1 and any(i <= s for i, _ in eta.items()):
                continue
            vector = symfunc.elementary_moments(eta.pochhammer(s), eta.length + 1)
            for r in range(eta.length + 2):
                instances += 1
                if symfunc.elementary_by_subpartitions(eta, s, r) != vector[r]:
                    failures += 1
                    witness = witness or {"eta": list(eta.parts), "s": s, "r": r}
    return instances, failures, witness


def _shifted_subpartition_sum(lam: Partition, s: int, r: int) -> int:
    # sum over mu of length r with m_i(mu) <= m_{i+s}(lam), written with the
    # factorial-ratio weights of the shifted indexing
    items = [(i, m) for i, m in lam.items() if i > s]

    def descend(idx: int, remaining: int) -> int:
        if remaining == 0:
            return 1
        if idx == len(items):
            return 0
        i, m = items[idx]
        weight = factorial(i) // factorial(i - s)
        total = 0
        for chosen in range(min(m, remaining) + 1):
            total += comb(m, chosen) * weight**chosen * descend(idx + 1, remaining - chosen)
        return total

    return descend(0, r)


def _suite_shifted_subpartition_sum(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for lam in _all_partitions_upto(max_n):
        for s in range(max_s + 1):
            trunc = lam.truncate_above(s)
            vector = symfunc.elementary_moments(trunc.pochhammer(s), trunc.length + 1)
            for r in range(trunc.length + 2):
                instances += 1
                if _shifted_subpartition_sum(lam, s, r) != vector[r]:
                    failures += 1
                    witness = witness or {"lam": list(lam.parts), "s": s, "r": r}
    return instances, failures, witness


def _suite_binomial_specialization(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for lam in _all_partitions_upto(max_n):
        base = faa_di_bruno_coeff(lam)
        for r in range(lam.length + 1):
            instances += 1
            if c_coeff(lam, r, 0) != comb(lam.length, r) * base:
                failures += 1
                witness = witness or {"lam": list(lam.parts), "r": r}
    return instances, failures, witness


def _suite_r0_reduction(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for lam in _all_partitions_upto(max_n):
        base = faa_di_bruno_coeff(lam)
        for s in range(max_s + 1):
            instances += 1
            if c_coeff(lam, 0, s) != base:
                failures += 1
                witness = witness or {"lam": list(lam.parts), "s": s}
    return instances, failures, witness


def _suite_integrality(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for s in range(max_s + 1):
        for n in range(max_n + 1):
            try:
                table = coefficient_table(n, s, cap=cap)
            except IntegralityError as exc:
                failures += 1
                witness = witness or {"n": n, "s": s, "error": str(exc)}
                continue
            for r, lam, c in table.entries:
                instances += 1
                if not (isinstance(c, int) and c > 0):
                    failures += 1
                    witness = witness or {"n": n, "s": s, "r": r, "lam": list(lam.parts)}
    return instances, failures, witness


def _suite_recurrence(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for s in range(max_s + 1):
        evaluator = RecurrenceEvaluator(s)
        for n in range(max_n + 1):
            for r, lam, c in coefficient_table(n, s, cap=cap).entries:
                instances += 1
                if evaluator.value(lam, r) != c:
                    failures += 1
                    witness = witness or {"n": n, "s": s, "r": r, "lam": list(lam.parts)}
    return instances, failures, witness


def _suite_oracle_vs_formula(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for s in range(max_s + 1):
        chain = diffalg.DiffPolynomial.term(diffalg.DiffMonomial(0, 0, (), ()))
        for n in range(max_n + 1):
            instances += 1
            if diffalg.formula_expansion(n, s, cap=cap) != chain:
                failures += 1
                witness = witness or {"n": n, "s": s}
            if n < max_n:
                chain = diffalg.derive(chain, "composed", s)
    return instances, failures, witness


def _suite_chain_rule(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    chain = diffalg.DiffPolynomial.term(diffalg.DiffMonomial(0, 0, (), ()))
    for n in range(max_n + 1):
        instances += 1
        if diffalg.faa_expansion(n, cap=cap) != chain:
            failures += 1
            witness = witness or {"n": n}
        if n < max_n:
            chain = diffalg.derive(chain, "constant_g")
    return instances, failures, witness


def _suite_product_rule(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    chain = diffalg.DiffPolynomial.term(diffalg.DiffMonomial(0, 0, (), ()))
    for n in range(max_n + 1):
        instances += 1
        if diffalg.leibniz_product_expansion(n, cap=cap) != chain:
            failures += 1
            witness = witness or {"n": n}
        if n < max_n:
            chain = diffalg.derive(chain, "independent")
    return instances, failures, witness


def _suite_psi_bridge(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for s in range(max_s + 1):
        chain = diffalg.DiffPolynomial.term(diffalg.DiffMonomial(0, 0, (), ()))
        for n in range(max_n + 1):
            instances += 1
            bridged = diffalg.substitute_psi(diffalg.leibniz_product_expansion(n, cap=cap), s)
            if bridged != chain:
                failures += 1
                witness = witness or {"n": n, "s": s}
            if n < max_n:
                chain = diffalg.derive(chain, "composed", s)
    return instances, failures, witness


def _suite_weighted_degree_law(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for s in range(max_s + 1):
        for n in range(max_n + 1):
            for mono, _c in diffalg.formula_expansion(n, s, cap=cap):
                instances += 1
                y_weight = sum(i * e for i, e in mono.y)
                y_degree = sum(e for _, e in mono.y)
                ok = (
                    mono.f_order is not None
                    and mono.g_order is not None
                    and mono.f_order >= 0
                    and y_weight == n + mono.g_order * s
                    and y_degree == mono.f_order + mono.g_order
                )
                if not ok:
                    failures += 1
                    witness = witness or {"n": n, "s": s, "monomial": repr(mono)}
    return instances, failures, witness


def _random_variable_poly(rng: random.Random) -> diffalg.DiffPolynomial:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        y = {rng.randint(1, 3): rng.randint(1, 2) for _ in range(rng.randint(0, 2))}
        z = {rng.randint(1, 2): rng.randint(1, 2) for _ in range(rng.randint(0, 1))}
        mono = diffalg.monomial(None, None, y, z)
        terms[mono] = terms.get(mono, 0) + rng.randint(-3, 3)
    return diffalg.DiffPolynomial(terms)


def _suite_leibniz_property(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for _ in range(max(trials, 10)):
        p = _random_variable_poly(rng)
        q = _random_variable_poly(rng)
        instances += 1
        lhs = diffalg.derive(p * q, "independent")
        rhs = diffalg.derive(p, "independent") * q + p * diffalg.derive(q, "independent")
        if lhs != rhs:
            failures += 1
            witness = witness or {"p": p.pretty(), "q": q.pretty()}
    # mixed case: one factor carrying the f and g symbols
    seed_poly = diffalg.nth_derivative_expansion(min(max_n, 2), 0, cap=cap)
    for _ in range(5):
        q = _random_variable_poly(rng)
        q = diffalg.DiffPolynomial({m: c for m, c in q if not m.z})
        instances += 1
        lhs = diffalg.derive(seed_poly * q, "composed", 0)
        rhs = (
            diffalg.derive(seed_poly, "composed", 0) * q
            + seed_poly * diffalg.derive(q, "composed", 0)
        )
        if lhs != rhs:
            failures += 1
            witness = witness or {"q": q.pretty()}
    return instances, failures, witness


def _suite_random_polynomials(max_n: int, max_s: int, rng, trials: int, cap: int):
    report = polynomials.run_random_checks(
        trials=trials,
        max_n=min(max_n, 6),
        max_s=min(max_s, 2),
        seed=rng.randint(0, 2**31),
        cap=cap,
    )
    return report["instances"], report["failures"], report["first_failure"]


def _suite_bell_product_form(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for s in range(max_s + 1):
        for n in range(max_n + 1):
            for k in range(n + 1):
                for r in range(k + 1):
                    instances += 1
                    direct = bell.modified_partial_bell(n, k, r, s, cap=cap)
                    convolved = bell.product_form_partial(n, k, r, s, cap=cap)
                    if direct != convolved:
                        failures += 1
                        witness = witness or {"n": n, "k": k, "r": r, "s": s}
            instances += 1
            if bell.modified_complete_bell(n, s, cap=cap) != bell.product_form_complete(
                n, s, cap=cap
            ):
                failures += 1
                witness = witness or {"n": n, "s": s, "case": "complete"}
    return instances, failures, witness


def _suite_bell_homogeneity(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for s in range(max_s + 1):
        for n in range(max_n + 1):
            for k in range(n + 1):
                for r in range(k + 1):
                    poly = bell.modified_partial_bell(n, k, r, s, cap=cap)
                    for exps, _c in poly:
                        instances += 1
                        ok = (
                            bell.term_degree(exps) == k
                            and bell.term_weighted_degree(exps) == n + r * s
                            and not any(n + 1 - k < i <= s for i, _ in exps)
                        )
                        if not ok:
                            failures += 1
                            witness = witness or {"n": n, "k": k, "r": r, "s": s}
    return instances, failures, witness


def _suite_bell_recurrence(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for s in range(max_s + 1):
        for n in range(max_n):
            for k in range(n + 1):
                for r in range(k + 2):
                    instances += 1
                    lhs = bell.modified_partial_bell(n + 1, k + 1, r, s, cap=cap)
                    rhs = bell.YPolynomial.zero()
                    for l in range(n - k + 1):
                        rhs = rhs + comb(n, l) * (
                            bell.YPolynomial.variable(l + 1)
                            * bell.modified_partial_bell(n - l, k, r, s, cap=cap)
                        )
                        if r >= 1:
                            rhs = rhs + comb(n, l) * (
                                bell.YPolynomial.variable(l + s + 1)
                                * bell.modified_partial_bell(n - l, k, r - 1, s, cap=cap)
                            )
                    if lhs != rhs:
                        failures += 1
                        witness = witness or {"n": n, "k": k, "r": r, "s": s}
    return instances, failures, witness


def _suite_stirling_s_independent(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for n in range(max_n + 1):
        for k in range(n + 1):
            for r in range(k + 1):
                expected = bell.modified_stirling(n, k, r)
                for s in range(max_s + 1):
                    instances += 1
                    image = bell.modified_partial_bell(n, k, r, s, cap=cap).substitute_geometric()
                    wanted = {(n + r * s, k): expected} if expected else {}
                    if image != wanted:
                        failures += 1
                        witness = witness or {"n": n, "k": k, "r": r, "s": s}
    return instances, failures, witness


def _suite_stirling_base_row(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for n in range(max_n + 1):
        for k in range(n + 1):
            instances += 1
            if bell.modified_stirling(n, k, 0) != bell.stirling2(n, k):
                failures += 1
                witness = witness or {"n": n, "k": k}
    return instances, failures, witness


def _suite_stirling_convolution(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for n in range(max_n + 1):
        for k in range(n + 1):
            for r in range(k + 1):
                instances += 1
                if bell.stirling_convolution(n, k, r) != bell.modified_stirling(n, k, r):
                    failures += 1
                    witness = witness or {"n": n, "k": k, "r": r}
    return instances, failures, witness


def _suite_stirling_convolution_unweighted(max_n: int, max_s: int, rng, trials: int, cap: int):
    # deliberately checks the variant WITHOUT the binomial weight; it is false
    instances = failures = 0
    witness = None
    for n in range(max_n + 1):
        for k in range(n + 1):
            for r in range(k + 1):
                instances += 1
                unweighted = sum(
                    bell.stirling2(n - p, k - r) * bell.stirling2(p, r)
                    for p in range(r, n - k + r + 1)
                )
                definitional = bell.modified_stirling(n, k, r)
                if unweighted != definitional:
                    failures += 1
                    witness = witness or {
                        "n": n,
                        "k": k,
                        "r": r,
                        "unweighted_value": unweighted,
                        "definition_value": definitional,
                    }
    return instances, failures, witness


def _suite_stirling_row_sum(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for n in range(max_n + 1):
        for k in range(n + 1):
            instances += 1
            row = sum(bell.modified_stirling(n, k, r) for r in range(k + 1))
            if row != 2**k * bell.stirling2(n, k):
                failures += 1
                witness = witness or {"n": n, "k": k}
    return instances, failures, witness


def _suite_stirling_recurrence(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for n in range(max_n):
        for k in range(n + 1):
            for r in range(k + 2):
                instances += 1
                lhs = bell.modified_stirling(n + 1, k + 1, r)
                rhs = sum(
                    comb(n, l)
                    * (bell.modified_stirling(n - l, k, r) + bell.modified_stirling(n - l, k, r - 1))
                    for l in range(n - k + 1)
                )
                if lhs != rhs:
                    failures += 1
                    witness = witness or {"n": n, "k": k, "r": r}
    return instances, failures, witness


def _suite_stirling_recurrence_unshifted(max_n: int, max_s: int, rng, trials: int, cap: int):
    # deliberately checks the variant whose summand ignores l; it is false
    instances = failures = 0
    witness = None
    for n in range(max_n):
        for k in range(n + 1):
            for r in range(k + 2):
                instances += 1
                lhs = bell.modified_stirling(n + 1, k + 1, r)
                rhs = sum(
                    comb(n, l)
                    * (bell.modified_stirling(n, k, r) + bell.modified_stirling(n, k, r - 1))
                    for l in range(n - k + 1)
                )
                if lhs != rhs:
                    failures += 1
                    witness = witness or {
                        "n": n,
                        "k": k,
                        "r": r,
                        "unshifted_value": rhs,
                        "definition_value": lhs,
                    }
    return instances, failures, witness


def _expand_touchard_sum(n: int) -> dict[tuple[int, int], int]:
    # T_n(x + y) expanded into monomials x^i y^j
    out: dict[tuple[int, int], int] = {}
    for k, coeff in enumerate(bell.touchard(n)):
        for i in range(k + 1):
            key = (i, k - i)
            out[key] = out.get(key, 0) + coeff * comb(k, i)
            if not out[key]:
                del out[key]
    return out


def _suite_touchard_binomial_type(max_n: int, max_s: int, rng, trials: int, cap: int):
    instances = failures = 0
    witness = None
    for n in range(max_n + 1):
        instances += 1
        convolved: dict[tuple[int, int], int] = {}
        for p in range(n + 1):
            left = bell.touchard(n - p)
            right = bell.touchard(p)
            for i, ci in enumerate(left):
                for j, cj in enumerate(right):
                    key = (i, j)
                    convolved[key] = convolved.get(key, 0) + comb(n, p) * ci * cj
                    if not convolved[key]:
                        del convolved[key]
        if convolved != _expand_touchard_sum(n):
            failures += 1
            witness = witness or {"n": n}
    return instances, failures, witness


# ---------------------------------------------------------------------------
# the registry and the runner
# ---------------------------------------------------------------------------

SUITES = (
    (
        "partition_count_matches_dp",
        "enumeration of partitions of n agrees with the generating-function count, "
        "with no duplicates and correct weights",
        _suite_partition_counts,
        False,
    ),
    (
        "partition_modification_parameters",
        "removing or decrementing a part changes weight, length, and multiplicities "
        "by the expected deltas",
        _suite_partition_modifications,
        False,
    ),
    (
        "partition_union_shift_parameters",
        "union adds multiplicities pointwise; shifting all parts up by s preserves "
        "length and adds s*length to the weight",
        _suite_union_shift,
        False,
    ),
    (
        "truncation_shift_fixed_points",
        "a partition is fixed by truncation above s exactly when it has no part <= s, "
        "and shifting up by s always lands on such a fixed point, invertibly",
        _suite_truncation_fixed_points,
        False,
    ),
    (
        "newton_identity_residual_zero",
        "the alternating power-sum / elementary-function convolution equals r * e_r",
        _suite_newton_residual,
        False,
    ),
    (
        "elementary_subtract_transform",
        "the elementary vector after replacing one element b by b - c matches the "
        "series correction computed from the original vector",
        _suite_subtract_transform,
        False,
    ),
    (
        "elementary_subpartition_sum",
        "e_r of the falling-factorial image equals the binomial-weighted sum over "
        "sub-partitions of length r",
        _suite_subpartition_sum,
        False,
    ),
    (
        "elementary_shifted_subpartition_sum",
        "the same sub-partition sum rewritten over shifted-down partitions "
        "reproduces e_r of the truncated falling-factorial image",
        _suite_shifted_subpartition_sum,
        False,
    ),
    (
        "binomial_specialization_s0",
        "at s = 0 the generalized coefficient factors as binom(length, r) times the "
        "classical chain-rule coefficient",
        _suite_binomial_specialization,
        False,
    ),
    (
        "coefficient_r0_reduction",
        "at r = 0 the generalized coefficient equals the classical chain-rule "
        "coefficient for every shift s",
        _suite_r0_reduction,
        False,
    ),
    (
        "coefficient_integrality",
        "every table coefficient reduces to a positive integer",
        _suite_integrality,
        False,
    ),
    (
        "coefficient_recurrence_matches_closed_form",
        "the modification recurrence reproduces the closed-form coefficient on every "
        "table entry (r = 0 slice included)",
        _suite_recurrence,
        False,
    ),
    (
        "derivative_oracle_matches_formula",
        "the n-fold symbolic derivative of F0*G0 equals the assembled closed-formula "
        "expansion, exactly, term by term",
        _suite_oracle_vs_formula,
        False,
    ),
    (
        "classic_chain_rule_expansion",
        "with g held constant the expansion degenerates to the classical chain-rule "
        "formula",
        _suite_chain_rule,
        False,
    ),
    (
        "product_rule_expansion",
        "the closed form for the n-th derivative of (f o phi)*(g o psi) with "
        "independent psi matches the symbolic oracle",
        _suite_product_rule,
        False,
    ),
    (
        "psi_substitution_bridge",
        "substituting psi = phi^(s) into the independent-product expansion recovers "
        "the composed expansion",
        _suite_psi_bridge,
        False,
    ),
    (
        "expansion_weighted_degree_law",
        "every expansion monomial satisfies the weighted-degree and order-count laws",
        _suite_weighted_degree_law,
        False,
    ),
    (
        "derivation_leibniz_rule",
        "the derivation satisfies D(P*Q) = D(P)*Q + P*D(Q) on products it can form",
        _suite_leibniz_property,
        False,
    ),
    (
        "random_polynomial_instances",
        "seeded random rational polynomial triples give exact equality of both sides "
        "for all checked (n, s)",
        _suite_random_polynomials,
        False,
    ),
    (
        "bell_product_form",
        "the modified Bell polynomials equal the binomial convolution of classical "
        "Bell polynomials with shifted variables (partial and complete forms)",
        _suite_bell_product_form,
        False,
    ),
    (
        "bell_homogeneity",
        "every term of a modified partial Bell polynomial has degree k, weighted "
        "degree n + r*s, and avoids the excluded variable window",
        _suite_bell_homogeneity,
        False,
    ),
    (
        "bell_recurrence_in_variables",
        "the two-sum recurrence in the y variables produces the next modified "
        "partial Bell polynomial",
        _suite_bell_recurrence,
        False,
    ),
    (
        "modified_stirling_s_independent",
        "the geometric substitution collapses every modified partial Bell polynomial "
        "to the same number regardless of s",
        _suite_stirling_s_independent,
        False,
    ),
    (
        "modified_stirling_base_row",
        "at r = 0 the modified Stirling numbers are the classical Stirling numbers "
        "of the second kind",
        _suite_stirling_base_row,
        False,
    ),
    (
        "stirling_convolution_corrected",
        "the binomially weighted Stirling convolution equals the definitional "
        "modified Stirling number",
        _suite_stirling_convolution,
        False,
    ),
    (
        "stirling_convolution_unweighted",
        "counterexample record: the convolution without the binomial weight does NOT "
        "equal the definitional value",
        _suite_stirling_convolution_unweighted,
        True,
    ),
    (
        "stirling_row_sum_doubling",
        "summing the modified Stirling numbers over r doubles k times the classical "
        "value: sum_r = 2^k S(n, k)",
        _suite_stirling_row_sum,
        False,
    ),
    (
        "stirling_recurrence_corrected",
        "the index-shifted two-term recurrence produces the next modified Stirling "
        "number",
        _suite_stirling_recurrence,
        False,
    ),
    (
        "stirling_recurrence_unshifted",
        "counterexample record: the recurrence variant whose summand ignores the "
        "summation index does NOT hold",
        _suite_stirling_recurrence_unshifted,
        True,
    ),
    (
        "touchard_binomial_type",
        "the binomial convolution of Touchard polynomials in x and y equals the "
        "Touchard polynomial of x + y",
        _suite_touchard_binomial_type,
        False,
    ),
)


def run_all(
    max_n: int,
    max_s: int,
    seed: int = 0,
    trials: int = 20,
    cap: int = DEFAULT_WEIGHT_CAP,
) -> dict:
    """Run every identity suite at the given bounds and assemble the report."""
    if max_n < 0 or max_s < 0:
        raise ValueError("bounds must be non-negative")
    results = []
    all_passed = True
    for key, statement, runner, informational in SUITES:
        rng = random.Random(f"{seed}:{key}")
        instances, failures, witness = runner(max_n, max_s, rng, trials, cap)
        passed = failures == 0
        if not informational and not passed:
            all_passed = False
        results.append(
            {
                "key": key,
                "statement": statement,
                "instances": instances,
                "failures": failures,
                "passed": passed,
                "informational": informational,
                "counterexample": witness,
            }
        )
    return {
        "config": {
            "max_n": max_n,
            "max_s": max_s,
            "seed": seed,
            "trials": trials,
            "cap": cap,
        },
        "identities": results,
        "passed": all_passed,
    }
