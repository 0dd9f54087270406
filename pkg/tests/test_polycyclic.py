from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arithmonoid.arith import IDENTITY, ZERO, apply, compose, dagger, generator, normal_form, partial_identity
from arithmonoid.numtheory import CongruenceClass, DomainError
from arithmonoid.polycyclic import (
    KBN_IDENTITY,
    POLY_ZERO,
    KBNPair,
    PolyPair,
    Word,
    k_residue,
    kbn,
    kbn_cancel,
    kbn_compose,
    kbn_star,
    mu,
    mu_inverse,
    num,
    poly_compose,
    poly_compose_arith,
    poly_dagger,
    poly_generator,
    poly_identity,
    poly_pair,
    theta,
    theta_inverse,
)
from tests.strategies import poly_elements, poly_pairs, words

alphabets = st.integers(min_value=2, max_value=7)


def all_words(k, max_length):
    for length in range(max_length + 1):
        for digits in product(range(k), repeat=length):
            yield Word(k, digits)


class TestWord:
    def test_parse_and_print(self):
        assert Word.parse(2, "0110").digits == (0, 1, 1, 0)
        assert Word.parse(12, "3[11]0").digits == (3, 11, 0)
        assert str(Word(12, (3, 11, 0))) == "3[11]0"
        assert Word.parse(3, "ε") == Word(3)
        assert Word.parse(3, "") == Word(3)
        assert str(Word(3)) == "ε"

    def test_digit_out_of_alphabet(self):
        with pytest.raises(DomainError):
            Word.parse(2, "012")

    def test_alphabet_too_small(self):
        with pytest.raises(DomainError):
            Word(1)

    def test_num(self):
        assert num(Word(2)) == 0
        assert num(Word.parse(2, "01")) == 1
        assert num(Word.parse(10, "305")) == 305

    @given(alphabets.flatmap(lambda k: words(k, 12)))
    def test_num_is_bounded(self, w):
        assert num(w) < w.k ** len(w)


class TestPolyCompose:
    def test_examples(self):
        e = poly_pair(2, "1", "0")
        assert poly_compose(poly_identity(2), e) == e
        assert poly_compose(poly_pair(2, "", "01"), e) == poly_pair(2, "", "00")
        assert poly_compose(poly_pair(2, "", "0"), poly_pair(2, "1", "")) == POLY_ZERO

    def test_alphabet_mismatch(self):
        with pytest.raises(DomainError):
            poly_compose(poly_identity(2), poly_identity(3))

    def test_zero_is_absorbing(self):
        assert poly_compose(POLY_ZERO, poly_identity(2)) == POLY_ZERO
        assert poly_pair(2, "1", "0") * POLY_ZERO == POLY_ZERO

    def test_printing(self):
        assert str(poly_pair(2, "1", "01")) == '("1","01")'
        assert str(poly_identity(2)) == '("ε","ε")'

    @pytest.mark.parametrize("k", range(2, 8))
    def test_generator_relations(self, k):
        for x in range(k):
            for y in range(k):
                product_ = poly_compose(poly_generator(k, x), poly_dagger(poly_generator(k, y)))
                assert product_ == (poly_identity(k) if x == y else POLY_ZERO)

    @given(alphabets.flatmap(lambda k: st.tuples(poly_elements(k), poly_elements(k), poly_elements(k))))
    def test_associative(self, triple):
        x, y, z = triple
        assert poly_compose(poly_compose(x, y), z) == poly_compose(x, poly_compose(y, z))

    @given(alphabets.flatmap(lambda k: st.tuples(words(k), words(k))))
    def test_idempotents_commute(self, pair):
        w, v = pair
        e, f = PolyPair(w, w), PolyPair(v, v)
        assert poly_compose(e, e) == e
        assert poly_compose(e, f) == poly_compose(f, e)
        assert poly_compose(e, POLY_ZERO) == poly_compose(POLY_ZERO, e)

    @given(alphabets.flatmap(poly_elements))
    def test_inverse_axioms(self, e):
        assert poly_dagger(poly_dagger(e)) == e
        assert poly_compose(poly_compose(e, poly_dagger(e)), e) == e


class TestTheta:
    def test_examples(self):
        assert theta(2, poly_identity(2)) == IDENTITY
        assert theta(2, POLY_ZERO) == ZERO
        assert theta(2, poly_pair(2, "", "01")) == generator(4, 1)
        e1, e2 = poly_pair(2, "", "01"), poly_pair(2, "1", "0")
        assert theta(2, poly_compose(e1, e2)) == compose(theta(2, e1), theta(2, e2))

    @given(alphabets.flatmap(lambda k: st.tuples(st.just(k), poly_elements(k), poly_elements(k))))
    def test_homomorphism(self, args):
        k, e1, e2 = args
        assert theta(k, poly_compose(e1, e2)) == compose(theta(k, e1), theta(k, e2))
        assert theta(k, poly_dagger(e1)) == dagger(theta(k, e1))

    @given(alphabets.flatmap(lambda k: st.tuples(st.just(k), poly_elements(k), poly_elements(k))))
    def test_injective(self, args):
        k, e1, e2 = args
        assert (theta(k, e1) == theta(k, e2)) == (e1 == e2)

    @given(alphabets.flatmap(lambda k: st.tuples(st.just(k), poly_elements(k))))
    def test_theta_inverse(self, args):
        k, e = args
        assert theta_inverse(k, theta(k, e)) == e

    def test_theta_inverse_outside_the_image(self):
        with pytest.raises(DomainError):
            theta_inverse(2, generator(3, 0))

    @pytest.mark.parametrize("k", range(2, 8))
    def test_generator_idempotents_are_proper(self, k):
        for x in range(k):
            image = theta(k, poly_generator(k, x))
            idem = compose(dagger(image), image)
            assert idem == partial_identity(CongruenceClass(k, x))
            assert idem != IDENTITY

    @pytest.mark.parametrize("k", range(2, 8))
    def test_strong_embedding(self, k):
        images = [theta(k, poly_generator(k, b)) for b in range(k)]
        idempotents = [compose(dagger(image), image) for image in images]
        assert all(e != IDENTITY for e in idempotents)
        for n in range(1001):
            assert any(apply(e, n) is not None for e in idempotents)


class TestKBN:
    def test_factory(self):
        assert kbn(2, 0, 0) == KBN_IDENTITY
        assert kbn(2, 2, 3) == KBNPair(2, 2, 3)
        with pytest.raises(DomainError):
            kbn(2, 2, 4)
        with pytest.raises(DomainError):
            kbn(2, 0, 1)

    def test_compose_examples(self):
        assert kbn_compose(2, KBN_IDENTITY, kbn(2, 1, 1)) == kbn(2, 1, 1)
        assert kbn_compose(2, kbn(2, 1, 0), kbn(2, 1, 1)) == kbn(2, 2, 1)
        assert kbn_compose(10, kbn(10, 1, 3), kbn(10, 2, 5)) == kbn(10, 3, 305)

    def test_mu_examples(self):
        assert mu(Word(2)) == KBN_IDENTITY
        assert mu(Word.parse(2, "01")) == kbn(2, 2, 1)

    @pytest.mark.parametrize("k", [2, 3])
    def test_mu_is_a_homomorphism_exhaustively(self, k):
        words_ = list(all_words(k, 6))
        codes = {w: mu(w) for w in words_}
        for w in words_:
            for v in words_:
                assert mu(w + v) == kbn_compose(k, codes[w], codes[v]), (w, v)

    @pytest.mark.parametrize("k", [2, 3])
    def test_mu_round_trip(self, k):
        for w in all_words(k, 12):
            assert mu_inverse(k, mu(w)) == w

    def test_residue_examples(self):
        assert k_residue(2, kbn(2, 2, 3), KBN_IDENTITY)
        assert k_residue(2, kbn(2, 2, 3), kbn(2, 1, 1))
        assert not k_residue(2, kbn(2, 2, 3), kbn(2, 1, 0))

    def test_cancel_examples(self):
        assert kbn_cancel(2, kbn(2, 2, 3), kbn(2, 2, 3)) == KBN_IDENTITY
        assert kbn_cancel(2, kbn(2, 2, 3), kbn(2, 1, 1)) == kbn(2, 1, 1)
        assert kbn_cancel(10, kbn(10, 3, 305), kbn(10, 2, 5)) == kbn(10, 1, 3)

    def test_cancel_rejects_non_residues(self):
        with pytest.raises(DomainError):
            kbn_cancel(2, kbn(2, 2, 3), kbn(2, 1, 0))

    @given(alphabets.flatmap(lambda k: st.tuples(st.just(k), words(k), words(k))))
    def test_cancel_round_trip(self, args):
        k, r, v = args
        big = kbn_compose(k, mu(r), mu(v))
        assert k_residue(k, big, mu(v))
        assert kbn_cancel(k, big, mu(v)) == mu(r)
        assert kbn_compose(k, kbn_cancel(k, big, mu(v)), mu(v)) == big

    @given(alphabets.flatmap(lambda k: st.tuples(st.just(k), poly_pairs(k), poly_pairs(k))))
    def test_star_matches_poly_compose(self, args):
        k, e1, e2 = args
        star = kbn_star(k, (mu(e1.up), mu(e1.down)), (mu(e2.up), mu(e2.down)))
        expected = poly_compose(e1, e2)
        if expected == POLY_ZERO:
            assert star is None
        else:
            assert star == (mu(expected.up), mu(expected.down))


class TestResidueComposition:
    def test_examples(self):
        assert poly_compose_arith(2, IDENTITY, IDENTITY) == IDENTITY
        e = theta(2, poly_pair(2, "1", "0"))
        assert poly_compose_arith(2, IDENTITY, e) == e
        lhs = theta(2, poly_pair(2, "", "01"))
        assert poly_compose_arith(2, lhs, e) == compose(lhs, e) == generator(4, 0)

    def test_mismatched_residues_give_zero(self):
        lhs, rhs = theta(2, poly_pair(2, "", "00")), theta(2, poly_pair(2, "1", ""))
        assert poly_compose_arith(2, lhs, rhs) == ZERO
        assert compose(lhs, rhs) == ZERO

    def test_shape_violation(self):
        with pytest.raises(DomainError):
            poly_compose_arith(2, normal_form(3, 0, 1, 0), IDENTITY)

    @given(alphabets.flatmap(lambda k: st.tuples(st.just(k), poly_elements(k), poly_elements(k))))
    def test_agrees_with_compose(self, args):
        k, e1, e2 = args
        lhs, rhs = theta(k, e1), theta(k, e2)
        assert poly_compose_arith(k, lhs, rhs) == compose(lhs, rhs)
