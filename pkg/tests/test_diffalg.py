import random

import pytest

from faadibruno.diffalg import (
    DiffMonomial,
    DiffPolynomial,
    derive,
    faa_expansion,
    formula_expansion,
    leibniz_product_expansion,
    monomial,
    nth_derivative_expansion,
    substitute_psi,
)
from faadibruno.partitions import CapExceeded


SEED = DiffMonomial(0, 0, (), ())


def poly(*terms):
    return DiffPolynomial({m: c for m, c in terms})


def test_single_derive_composed():
    start = DiffPolynomial.term(SEED)
    assert derive(start, "composed", 1) == poly(
        (monomial(1, 0, {1: 1}), 1),
        (monomial(0, 1, {2: 1}), 1),
    )


def test_single_derive_independent():
    start = DiffPolynomial.term(SEED)
    assert derive(start, "independent") == poly(
        (monomial(1, 0, {1: 1}), 1),
        (monomial(0, 1, {}, {1: 1}), 1),
    )


def test_derive_three_factor_leibniz_step():
    start = DiffPolynomial.term(monomial(1, 0, {1: 1}))
    assert derive(start, "composed", 1) == poly(
        (monomial(2, 0, {1: 2}), 1),
        (monomial(1, 0, {2: 1}), 1),
        (monomial(1, 1, {1: 1, 2: 1}), 1),
    )


def test_composed_mode_rejects_z():
    bad = DiffPolynomial.term(monomial(0, 0, {}, {1: 1}))
    with pytest.raises(ValueError):
        derive(bad, "composed", 1)
    with pytest.raises(ValueError):
        derive(bad, "no-such-mode")


def test_nth_derivative_examples():
    assert nth_derivative_expansion(0, 3) == DiffPolynomial.term(SEED)
    assert nth_derivative_expansion(2, 1) == poly(
        (monomial(2, 0, {1: 2}), 1),
        (monomial(1, 0, {2: 1}), 1),
        (monomial(1, 1, {1: 1, 2: 1}), 2),
        (monomial(0, 2, {2: 2}), 1),
        (monomial(0, 1, {3: 1}), 1),
    )


def test_formula_expansion_examples():
    assert formula_expansion(0, 0) == DiffPolynomial.term(SEED)
    assert formula_expansion(1, 1) == poly(
        (monomial(1, 0, {1: 1}), 1),
        (monomial(0, 1, {2: 1}), 1),
    )
    assert formula_expansion(2, 1) == nth_derivative_expansion(2, 1)


def test_oracle_equality_small_grid():
    for s in range(4):
        chain = DiffPolynomial.term(SEED)
        for n in range(7):
            assert formula_expansion(n, s) == chain
            chain = derive(chain, "composed", s)


def test_faa_expansion_classical_values():
    assert faa_expansion(1) == poly((monomial(1, 0, {1: 1}), 1))
    assert faa_expansion(3) == poly(
        (monomial(3, 0, {1: 3}), 1),
        (monomial(2, 0, {1: 1, 2: 1}), 3),
        (monomial(1, 0, {3: 1}), 1),
    )
    assert faa_expansion(4).coefficient(monomial(2, 0, {2: 2})) == 3


def test_faa_matches_constant_g_oracle():
    chain = DiffPolynomial.term(SEED)
    for n in range(11):
        assert faa_expansion(n) == chain
        chain = derive(chain, "constant_g")


def test_leibniz_product_examples():
    assert leibniz_product_expansion(1) == poly(
        (monomial(1, 0, {1: 1}), 1),
        (monomial(0, 1, {}, {1: 1}), 1),
    )
    assert leibniz_product_expansion(2) == poly(
        (monomial(2, 0, {1: 2}), 1),
        (monomial(1, 0, {2: 1}), 1),
        (monomial(1, 1, {1: 1}, {1: 1}), 2),
        (monomial(0, 2, {}, {1: 2}), 1),
        (monomial(0, 1, {}, {2: 1}), 1),
    )
    assert leibniz_product_expansion(3).coefficient(monomial(1, 1, {1: 1}, {})) == 0
    assert leibniz_product_expansion(3).coefficient(monomial(1, 2, {1: 1}, {1: 2})) == 3


def test_leibniz_matches_independent_oracle():
    chain = DiffPolynomial.term(SEED)
    for n in range(8):
        assert leibniz_product_expansion(n) == chain
        chain = derive(chain, "independent")


def test_substitute_psi():
    z1 = DiffPolynomial.term(monomial(0, 0, {}, {1: 1}))
    assert substitute_psi(z1, 1) == DiffPolynomial.term(monomial(0, 0, {2: 1}))
    assert substitute_psi(z1, 0) == DiffPolynomial.term(monomial(0, 0, {1: 1}))
    assert substitute_psi(leibniz_product_expansion(2), 1) == nth_derivative_expansion(2, 1)


def test_substitution_bridge_grid():
    for s in range(4):
        for n in range(6):
            bridged = substitute_psi(leibniz_product_expansion(n), s)
            assert bridged == nth_derivative_expansion(n, s)


def test_weighted_degree_law():
    for s in range(4):
        for n in range(7):
            for mono, coeff in formula_expansion(n, s):
                assert coeff > 0
                assert mono.f_order is not None and mono.f_order >= 0
                assert mono.g_order is not None and mono.g_order >= 0
                assert sum(i * e for i, e in mono.y) == n + mono.g_order * s
                assert sum(e for _, e in mono.y) == mono.f_order + mono.g_order
                assert not mono.z


def random_variable_poly(rng):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        y = {rng.randint(1, 3): rng.randint(1, 2) for _ in range(rng.randint(0, 2))}
        z = {rng.randint(1, 2): rng.randint(1, 2) for _ in range(rng.randint(0, 1))}
        mono = monomial(None, None, y, z)
        terms[mono] = terms.get(mono, 0) + rng.randint(-3, 3)
    return DiffPolynomial(terms)


def test_derivation_is_a_derivation_on_variable_subalgebra():
    rng = random.Random(7)
    for _ in range(60):
        p = random_variable_poly(rng)
        q = random_variable_poly(rng)
        lhs = derive(p * q, "independent")
        rhs = derive(p, "independent") * q + p * derive(q, "independent")
        assert lhs == rhs


def test_derivation_leibniz_with_carried_symbols():
    rng = random.Random(11)
    carried = nth_derivative_expansion(2, 1)
    for _ in range(20):
        q = random_variable_poly(rng)
        q = DiffPolynomial({m: c for m, c in q if not m.z})
        lhs = derive(carried * q, "composed", 1)
        rhs = derive(carried, "composed", 1) * q + carried * derive(q, "composed", 1)
        assert lhs == rhs


def test_product_rejects_double_symbols():
    p = DiffPolynomial.term(SEED)
    with pytest.raises(ValueError):
        p * p


def test_cap_enforced():
    with pytest.raises(CapExceeded):
        nth_derivative_expansion(20, 4)
    with pytest.raises(CapExceeded):
        formula_expansion(20, 4)
    with pytest.raises(CapExceeded):
        faa_expansion(100)


def test_pretty_and_json_rendering():
    expansion = formula_expansion(1, 1)
    assert expansion.pretty() == "f'·g·φ' + f·g'·φ''"
    data = expansion.to_json_list()
    assert data == [
        {"f": 1, "g": 0, "y": {"1": 1}, "z": {}, "coeff": "1"},
        {"f": 0, "g": 1, "y": {"2": 1}, "z": {}, "coeff": "1"},
    ]
    assert DiffPolynomial.zero().pretty() == "0"
    # orders past 3 switch from prime marks to superscripts
    high = DiffPolynomial.term(monomial(4, 0, {5: 2}))
    assert high.pretty() == "f^(4)·g·φ^(5)^2"


def test_canonical_term_order_is_stable():
    expansion = nth_derivative_expansion(3, 1)
    keys = [mono for mono, _c in expansion.terms()]
    assert keys == sorted(
        keys,
        key=lambda m: (m.f_order, m.g_order, m.y, m.z),
        reverse=True,
    )
