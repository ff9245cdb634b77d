import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monoidcats.cat_c import check_morphism, compose, enumerate_hom, functor_c_mor, identity
from monoidcats.errors import MalformedElement, SortMismatch
from monoidcats.msets import (
    Atom,
    SortedMapping,
    SortedSet,
    Tagged,
    all_sorted_mappings,
    alpha_iso,
    beta_iso,
    card,
    compose_mappings,
    coproduct_mor,
    coproduct_obj,
    element_key,
    essential_surjectivity_witness,
    identity_mapping,
    inverse_mapping,
    is_bijective,
    pr_iso,
    sorted_set_to_word,
    supp,
    untag,
    vs_full_inverse,
    vs_mor,
    vs_obj,
)
from monoidcats.verify import random_letter_map, random_mapping_pair, random_sorted_mapping, random_sorted_set
from monoidcats.words import Alphabet, LetterMap, map_word, parse_word

from strategies import composable_pair, morphisms

XY = Alphabet("xy")


def atoms(*ns):
    return {Atom(n) for n in ns}


@pytest.fixture
def merge(abc):
    return LetterMap.from_dict(abc, XY, {"a": "x", "b": "x", "c": "y"})


def test_vs_obj_and_card(abc, word_a):
    X = vs_obj(word_a)
    assert X == SortedSet(abc, {"a": atoms(0, 4, 5, 7), "b": atoms(1, 2, 3, 8), "c": atoms(6)})
    assert card(X) == 9
    assert supp(X) == {"a", "b", "c"}
    empty = vs_obj(parse_word(abc, ""))
    assert card(empty) == 0 and supp(empty) == frozenset()
    only_b = SortedSet(abc, {"b": atoms(0, 1)})
    assert (card(only_b), supp(only_b)) == (2, {"b"})


def test_coproduct_obj_example(word_a, merge):
    Y = coproduct_obj(merge, vs_obj(word_a))
    assert len(Y.part("x")) == 8 and len(Y.part("y")) == 1
    assert Tagged(Atom(1), "b") in Y.part("x")


def test_pr_example_and_errors(abc):
    X = SortedSet(abc, {"a": atoms(0)})
    pr = pr_iso(X)
    assert pr("a", Tagged(Atom(0), "a")) == Atom(0)
    assert is_bijective(pr)
    with pytest.raises(MalformedElement):
        untag(Atom(0), "a")
    with pytest.raises(MalformedElement):
        untag(Tagged(Atom(0), "b"), "a")


def test_alpha_example(abc, merge):
    g = LetterMap.from_dict(XY, Alphabet("z"), {"x": "z", "y": "z"})
    X = SortedSet(abc, {"a": atoms(0), "c": atoms(3)})
    alpha = alpha_iso(merge, g, X)
    assert alpha("z", Tagged(Atom(0), "a")) == Tagged(Tagged(Atom(0), "a"), "x")
    assert is_bijective(alpha)
    for c, src, dst in zip(alpha.dom.alphabet.letters, alpha.dom.parts, alpha.cod.parts):
        assert len(src) == len(dst)


def test_sorted_mapping_validation(abc):
    X = SortedSet(abc, {"a": atoms(0)})
    Y = SortedSet(abc, {"a": atoms(1)})
    with pytest.raises(SortMismatch):
        SortedMapping(X, Y, {"a": {Atom(0): Atom(0)}})
    with pytest.raises(SortMismatch):
        SortedMapping(X, Y, {})
    h = SortedMapping(X, Y, {"a": {Atom(0): Atom(1)}})
    assert compose_mappings(inverse_mapping(h), h) == identity_mapping(X)
    with pytest.raises(SortMismatch):
        compose_mappings(h, h)


def test_vs_full_inverse_examples(abc):
    a, b = parse_word(abc, "ab"), parse_word(abc, "aab")
    h = SortedMapping(vs_obj(a), vs_obj(b), {"a": {Atom(0): Atom(1)}, "b": {Atom(1): Atom(2)}})
    phi = vs_full_inverse(a, b, h)
    assert phi.map == (1, 2)
    check_morphism(a, b, phi.map)
    assert vs_full_inverse(a, a, identity_mapping(vs_obj(a))) == identity(a)
    with pytest.raises(SortMismatch):
        vs_full_inverse(b, a, h)


def test_sorted_set_to_word(abc):
    X = SortedSet(abc, {"a": {Atom(7), Tagged(Atom(0), "q")}, "c": atoms(2)})
    assert str(sorted_set_to_word(X)) == "aac"
    assert str(sorted_set_to_word(SortedSet(abc))) == "λ"
    iso = essential_surjectivity_witness(X)
    assert is_bijective(iso) and iso.cod == vs_obj(sorted_set_to_word(X))


def test_beta_example(abc, word_a, merge):
    beta = beta_iso(merge, word_a)
    assert beta.cod == vs_obj(map_word(merge, word_a))
    assert set(beta.component("x").values()) == atoms(0, 1, 2, 3, 4, 5, 7, 8)
    assert set(beta.component("y").values()) == atoms(6)
    assert is_bijective(beta)
    ident = LetterMap.identity(abc)
    assert beta_iso(ident, word_a) == pr_iso(vs_obj(word_a))


def test_element_order_is_total():
    es = [Tagged(Atom(1), "b"), Atom(3), Tagged(Tagged(Atom(0), "a"), "a"), Atom(0)]
    assert sorted(es, key=element_key)[:2] == [Atom(0), Atom(3)]


@given(composable_pair())
def test_positions_functor(pair):
    f, g = pair
    assert vs_mor(identity(f.dom)) == identity_mapping(vs_obj(f.dom))
    assert vs_mor(compose(g, f)) == compose_mappings(vs_mor(g), vs_mor(f))


@given(morphisms(max_len=4))
def test_positions_faithful_round_trip(phi):
    assert vs_full_inverse(phi.dom, phi.cod, vs_mor(phi)) == phi


@given(st.integers(0, 2**32))
def test_coproduct_preserves_composition(seed):
    rng = random.Random(seed)
    A = Alphabet("abc")
    f = random_letter_map(rng, A)
    X = random_sorted_set(rng, A)
    Y = random_sorted_set(rng, A, nonempty=True)
    Z = random_sorted_set(rng, A, nonempty=True)
    h = random_sorted_mapping(rng, X, Y)
    k = random_sorted_mapping(rng, Y, Z)
    assert coproduct_mor(f, compose_mappings(k, h)) == compose_mappings(coproduct_mor(f, k), coproduct_mor(f, h))
    assert coproduct_mor(f, identity_mapping(X)) == identity_mapping(coproduct_obj(f, X))


@given(st.integers(0, 2**32))
def test_pr_and_alpha_naturality(seed):
    rng = random.Random(seed)
    A = Alphabet("abc")
    h = random_mapping_pair(rng, A)
    ident = LetterMap.identity(A)
    assert compose_mappings(h, pr_iso(h.dom)) == compose_mappings(pr_iso(h.cod), coproduct_mor(ident, h))
    f = random_letter_map(rng, A)
    g = random_letter_map(rng, f.target, "uvw")
    left = compose_mappings(coproduct_mor(g, coproduct_mor(f, h)), alpha_iso(f, g, h.dom))
    right = compose_mappings(alpha_iso(f, g, h.cod), coproduct_mor(f.then(g), h))
    assert left == right
    assert is_bijective(pr_iso(h.dom)) and is_bijective(alpha_iso(f, g, h.dom))


@given(morphisms(max_len=5), st.integers(0, 2**32))
def test_beta_naturality(phi, seed):
    f = random_letter_map(random.Random(seed), phi.dom.alphabet)
    left = compose_mappings(vs_mor(functor_c_mor(f, phi)), beta_iso(f, phi.dom))
    right = compose_mappings(beta_iso(f, phi.cod), coproduct_mor(f, vs_mor(phi)))
    assert left == right


def test_full_on_small_homs():
    A = Alphabet("ab")
    a, b = parse_word(A, "aab"), parse_word(A, "abb")
    images = {vs_mor(phi) for phi in enumerate_hom(a, b)}
    assert images == set(all_sorted_mappings(vs_obj(a), vs_obj(b)))
