import pytest
from hypothesis import given

from arithmonoid.arith import IDENTITY, ZERO, dagger, dagger_generator, generator, normal_form
from arithmonoid.config import set_config
from arithmonoid.numtheory import DomainError
from arithmonoid.oracle import (
    FinitePartialInjection,
    InvariantViolation,
    agree_on_core,
    chain_margin,
    check_chain,
    from_arith,
    is_monotone,
    max_modulus,
    oracle_compose,
    oracle_dagger,
    oracle_empty,
    oracle_identity,
    pointwise_apply,
)
from tests.strategies import arith_elements, normal_forms


class TestFinitePartialInjection:
    def test_rejects_non_injective_graphs(self):
        with pytest.raises(DomainError):
            FinitePartialInjection(5, {1: 2, 3: 2})

    def test_rejects_domain_points_outside_the_window(self):
        with pytest.raises(DomainError):
            FinitePartialInjection(5, {6: 1})

    def test_images_may_leave_the_window(self):
        assert FinitePartialInjection(5, {1: 6}).graph == {1: 6}

    def test_call_and_len(self):
        f = FinitePartialInjection(5, {2: 1})
        assert f(2) == 1
        assert f(3) is None
        assert len(f) == 1


class TestFromArith:
    def test_examples(self):
        assert from_arith(IDENTITY, 3).graph == {0: 0, 1: 1, 2: 2, 3: 3}
        assert from_arith(ZERO, 3) == oracle_empty(3)
        assert from_arith(generator(2, 0), 5).graph == {0: 0, 2: 1, 4: 2}

    def test_images_are_kept_beyond_the_window(self):
        assert from_arith(dagger_generator(2, 0), 5).graph == {0: 0, 1: 2, 2: 4, 3: 6, 4: 8, 5: 10}
        assert list(from_arith(dagger_generator(3, 1), 5).graph) == [0, 1, 2, 3, 4, 5]

    def test_default_window_comes_from_config(self):
        set_config({"window": 10})
        assert from_arith(IDENTITY).window == 10

    @given(arith_elements())
    def test_graphs_are_monotone(self, e):
        assert is_monotone(from_arith(e, 500))

    @given(arith_elements())
    def test_dagger_commutes_with_from_arith(self, e):
        window = 500
        inside = {y: x for y, x in from_arith(dagger(e), window).graph.items() if x <= window}
        assert oracle_dagger(from_arith(e, window)).graph == inside


class TestOracleCompose:
    def test_identity_and_empty(self):
        f = from_arith(normal_form(3, 1, 2, 0), 50)
        assert oracle_compose(oracle_identity(50), f) == f
        assert oracle_compose(f, oracle_identity(50)) == f
        assert oracle_compose(f, oracle_empty(50)) == oracle_empty(50)

    def test_generator_after_its_dagger_is_identity_on_the_core(self):
        window = 60
        f = oracle_compose(from_arith(generator(3, 1), window), from_arith(dagger_generator(3, 1), window))
        assert agree_on_core(f, oracle_identity(window), 2 * window // 3 + 1)

    def test_window_mismatch(self):
        with pytest.raises(DomainError):
            oracle_compose(oracle_identity(3), oracle_identity(4))

    def test_dagger_examples(self):
        assert oracle_dagger(oracle_identity(4)) == oracle_identity(4)
        assert oracle_dagger(oracle_empty(4)) == oracle_empty(4)
        assert oracle_dagger(FinitePartialInjection(4, {2: 1})).graph == {1: 2}

    def test_compose_drops_intermediates_beyond_the_window(self):
        g = from_arith(dagger_generator(2, 0), 5)
        assert oracle_compose(oracle_identity(5), g).graph == {0: 0, 1: 2, 2: 4}
        assert oracle_dagger(g).graph == {0: 0, 2: 1, 4: 2}


class TestAgreeOnCore:
    def test_examples(self):
        f = from_arith(normal_form(3, 1, 2, 0), 50)
        assert agree_on_core(f, f, 10)
        assert not agree_on_core(oracle_identity(50), oracle_empty(50), 10)

    def test_margin_must_be_below_the_window(self):
        with pytest.raises(DomainError):
            agree_on_core(oracle_identity(5), oracle_identity(5), 5)

    def test_points_beyond_the_core_are_ignored(self):
        truncated = FinitePartialInjection(10, {n: n for n in range(8)})
        assert agree_on_core(truncated, oracle_identity(10), 3)
        assert not agree_on_core(truncated, oracle_identity(10), 2)


class TestChecks:
    def test_max_modulus(self):
        assert max_modulus([]) == 1
        assert max_modulus([ZERO, normal_form(5, 0, 12, 3)]) == 12

    def test_margin_covers_expanding_inner_factors(self):
        factors = [generator(30, 0), dagger_generator(30, 0)]
        margin = chain_margin(factors, 2000)
        assert margin >= 2000 - 2000 // 30
        assert check_chain(factors, 2000).ok

    def test_margin_is_at_least_twice_the_largest_modulus(self):
        assert chain_margin([generator(25, 3), generator(4, 1)], 2000) >= 50

    def test_window_must_be_positive(self):
        with pytest.raises(DomainError, match="positive"):
            check_chain([generator(2, 0)], 0)

    def test_pointwise_apply(self):
        factors = [dagger_generator(3, 1), generator(2, 0)]
        assert pointwise_apply(factors, 4) == 7
        assert pointwise_apply(factors, 5) is None

    def test_wrong_symbolic_result_is_reported(self):
        factors = [generator(2, 0), generator(3, 0)]
        report = check_chain(factors, 200, symbolic=generator(6, 1), raise_on_failure=False)
        assert not report.ok
        assert report.pointwise_mismatches
        with pytest.raises(InvariantViolation):
            check_chain(factors, 200, symbolic=generator(6, 1))

    @given(normal_forms(), normal_forms())
    def test_compose_agrees_with_both_oracles(self, f, g):
        report = check_chain([f, g], 2000)
        assert report.core_agrees
        assert report.pointwise_mismatches == []
