import pytest
from hypothesis import given
from hypothesis import strategies as st

from monoidcats.cat_c import (
    check_morphism,
    compose,
    default_cap,
    enumerate_hom,
    find_isomorphic_distinct,
    from_permutation,
    functor_c_mor,
    functor_c_obj,
    hom_cardinality,
    identity,
    inverse,
    is_iso,
)
from monoidcats.errors import (
    AlphabetMismatch,
    CapExceeded,
    DomainError,
    IndexOutOfRange,
    LengthMismatch,
    NotAMorphism,
    NotComposable,
)
from monoidcats.perm import canonical_perm
from monoidcats.words import Alphabet, LetterMap, all_words, parse_word

from strategies import composable_pair, morphisms


def test_check_morphism(abc, word_a, word_b):
    s = canonical_perm(word_a, word_b)
    phi = check_morphism(word_a, word_b, s.map)
    assert phi.map == s.map
    assert check_morphism(word_a, word_a, range(9)) == identity(word_a)
    with pytest.raises(NotAMorphism) as exc:
        check_morphism(parse_word(abc, "a"), parse_word(abc, "b"), [0])
    assert exc.value.index == 0
    with pytest.raises(LengthMismatch):
        check_morphism(word_a, word_b, [0])
    with pytest.raises(IndexOutOfRange):
        check_morphism(parse_word(abc, "a"), parse_word(abc, "a"), [3])
    with pytest.raises(AlphabetMismatch):
        check_morphism(word_a, parse_word(Alphabet("ab"), "a"), [0] * 9)


def test_sigma_round_trip_is_identity(word_a, word_b):
    there = from_permutation(word_a, word_b, canonical_perm(word_a, word_b))
    back = from_permutation(word_b, word_a, canonical_perm(word_b, word_a))
    assert compose(back, there) == identity(word_a)
    assert is_iso(there)
    assert inverse(there) == back


def test_compose_requires_matching_words(abc):
    f = identity(parse_word(abc, "ab"))
    g = identity(parse_word(abc, "ba"))
    with pytest.raises(NotComposable):
        compose(g, f)


def test_hom_cardinality_examples(abc, word_a, word_b):
    assert hom_cardinality(word_a, word_b) == 65536
    lam = parse_word(abc, "")
    assert hom_cardinality(lam, lam) == 1
    assert hom_cardinality(parse_word(abc, "a"), parse_word(abc, "b")) == 0


def test_enumerate_hom_examples(abc):
    maps = [m.map for m in enumerate_hom(parse_word(abc, "ab"), parse_word(abc, "aab"))]
    assert maps == [(0, 2), (1, 2)]
    assert len(list(enumerate_hom(parse_word(abc, ""), parse_word(abc, "b")))) == 1
    assert list(enumerate_hom(parse_word(abc, "a"), parse_word(abc, "b"))) == []


def test_enumerate_hom_respects_cap(word_a, word_b, monkeypatch):
    with pytest.raises(CapExceeded):
        list(enumerate_hom(word_a, word_b, cap=1000))
    monkeypatch.setenv("MONOIDCATS_CAP", "5")
    assert default_cap() == 5
    with pytest.raises(CapExceeded):
        next(enumerate_hom(word_a, word_b))


def test_enumeration_matches_product_formula():
    A = Alphabet("abc")
    ws = all_words(A, 3)
    for a in ws:
        for b in ws:
            maps = [m.map for m in enumerate_hom(a, b)]
            assert len(maps) == len(set(maps)) == hom_cardinality(a, b)
            assert maps == sorted(maps)


def test_is_iso(abc, word_a):
    assert is_iso(identity(word_a))
    assert not is_iso(check_morphism(parse_word(abc, "a"), parse_word(abc, "aa"), [0]))
    with pytest.raises(DomainError):
        inverse(check_morphism(parse_word(abc, "a"), parse_word(abc, "aa"), [0]))


def test_relabel_functor(abc, word_a):
    f = LetterMap.from_dict(abc, Alphabet("xy"), {"a": "x", "b": "x", "c": "y"})
    assert str(functor_c_obj(f, word_a)) == "xxxxxxyxx"
    phi = identity(word_a)
    image = functor_c_mor(f, phi)
    assert image == identity(functor_c_obj(f, word_a))


def test_not_skeletal():
    A = Alphabet("ab")
    found = find_isomorphic_distinct(all_words(A, 2))
    assert found is not None
    a, b, phi = found
    assert (str(a), str(b)) == ("ab", "ba")
    assert is_iso(phi)


@given(composable_pair())
def test_category_laws(pair):
    f, g = pair
    gf = compose(g, f)
    check_morphism(gf.dom, gf.cod, gf.map)
    assert compose(identity(f.cod), f) == f == compose(f, identity(f.dom))


@given(composable_pair(), st.data())
def test_associativity(pair, data):
    g, h = pair
    f = data.draw(morphisms(cod=g.dom))
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)


@given(composable_pair())
def test_relabel_preserves_composition(pair):
    f, g = pair
    A = f.dom.alphabet
    lm = LetterMap(A, Alphabet("x"), (0,) * len(A))
    assert functor_c_mor(lm, compose(g, f)) == compose(functor_c_mor(lm, g), functor_c_mor(lm, f))
