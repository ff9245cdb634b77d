import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monoidcats.cat_c import check_morphism, compose, enumerate_hom, functor_c_mor, hom_cardinality, identity
from monoidcats.errors import CapExceeded, IndexOutOfRange, MalformedElement, NotComposable, NotEquivalentEndpoints, SortMismatch
from monoidcats.msets import (
    Atom,
    SortedMapping,
    SortedSet,
    Tagged,
    all_sorted_mappings,
    compose_mappings,
    coproduct_mor,
    identity_mapping,
    is_bijective,
)
from monoidcats.perm import canonical_perm
from monoidcats.quotient_q import (
    QObject,
    export_truncation,
    fiber_family,
    fiber_map,
    functor_q,
    gamma_iso,
    matrix_related,
    q_compose,
    q_full_inverse,
    q_hom,
    q_identity,
    q_morphism,
    q_object,
    q_skeletal_check,
    q_to_msets_mor,
    q_to_msets_obj,
    q_truncation,
    transport,
)
from monoidcats.riguet import FiniteCategory, check_riguet_axioms, quotient
from monoidcats.verify import random_letter_map
from monoidcats.words import Alphabet, LetterMap, Word, all_words, parse_word

from strategies import composable_pair, equivalent_pair, morphisms


@pytest.fixture
def merge(abc):
    return LetterMap.from_dict(abc, Alphabet("xy"), {"a": "x", "b": "x", "c": "y"})


def test_matrix_related_examples(word_a, word_b):
    s = check_morphism(word_a, word_b, canonical_perm(word_a, word_b).map)
    assert matrix_related(s, s)
    canon = q_object(word_a).canonical
    moved = transport(s, canon, canon)
    assert str(canon) == "aaaabbbbc"
    assert matrix_related(s, moved)
    other = check_morphism(word_a, word_b, [0, 1, 3, 6, 2, 5, 4, 7, 1])
    assert not matrix_related(s, other)
    with pytest.raises(NotEquivalentEndpoints):
        matrix_related(s, identity(parse_word(word_a.alphabet, "ab")))


def test_normal_forms(word_a, word_b):
    o = q_object(word_a)
    assert str(o.canonical) == "aaaabbbbc"
    assert o == q_object(word_b)
    assert q_morphism(identity(word_a)).rep == identity(o.canonical)
    s = check_morphism(word_a, word_b, canonical_perm(word_a, word_b).map)
    assert q_morphism(s).rep == identity(o.canonical)


def test_q_compose_checks_endpoints(abc):
    f = q_identity(q_object(parse_word(abc, "ab")))
    g = q_identity(q_object(parse_word(abc, "c")))
    with pytest.raises(NotComposable):
        q_compose(g, f)


@given(composable_pair())
def test_class_composition_well_defined(pair):
    f, g = pair
    assert q_compose(q_morphism(g), q_morphism(f)) == q_morphism(compose(g, f))
    qf = q_morphism(f)
    assert q_compose(q_identity(qf.cod), qf) == qf == q_compose(qf, q_identity(qf.dom))


@given(morphisms(max_len=5), st.randoms(use_true_random=False))
def test_normal_form_decides_relatedness(phi, rnd):
    a2 = list(phi.dom.entries)
    b2 = list(phi.cod.entries)
    rnd.shuffle(a2)
    rnd.shuffle(b2)
    a2, b2 = Word(phi.dom.alphabet, tuple(a2)), Word(phi.dom.alphabet, tuple(b2))
    if hom_cardinality(a2, b2) > 500:
        return
    for psi in enumerate_hom(a2, b2):
        assert matrix_related(phi, psi) == (q_morphism(phi).rep == q_morphism(psi).rep)
        assert matrix_related(phi, psi) == (fiber_family(phi) == fiber_family(psi))


def test_associativity_on_small_homs():
    A = Alphabet("ab")
    objs = [q_object(w) for w in all_words(A, 2) if w.entries == tuple(sorted(w.entries))]
    for x in objs:
        for y in objs:
            for z in objs:
                for w in objs:
                    for f in q_hom(x, y):
                        for g in q_hom(y, z):
                            gf = q_compose(g, f)
                            for h in q_hom(z, w):
                                assert q_compose(h, gf) == q_compose(q_compose(h, g), f)


def test_export_truncation_shapes():
    C, phi = export_truncation(Alphabet("ab"), 2)
    assert C.objects == ("λ", "a", "b", "aa", "ab", "ba", "bb")
    assert sorted(map(sorted, phi.blocks)) == sorted([["λ"], ["a"], ["b"], ["aa"], ["ab", "ba"], ["bb"]])
    assert check_riguet_axioms(C, phi).all_passed
    C1, phi1 = export_truncation(Alphabet("a"), 3)
    assert all(len(b) == 1 for b in phi1.blocks)
    assert check_riguet_axioms(C1, phi1).all_passed


def test_export_truncation_caps():
    with pytest.raises(CapExceeded):
        export_truncation(Alphabet("ab"), 4)
    with pytest.raises(CapExceeded):
        export_truncation(Alphabet("abcd"), 1)
    with pytest.raises(CapExceeded):
        export_truncation(Alphabet("ab"), 2, cap=10)
    C, _ = export_truncation(Alphabet("ab"), 4, max_length=4)
    assert len(C.objects) == 31


def test_larger_truncations_pass():
    for letters, n in (("ab", 3), ("abc", 2)):
        C, phi = export_truncation(Alphabet(letters), n)
        assert check_riguet_axioms(C, phi).all_passed


def test_skeletality():
    A = Alphabet("ab")
    assert q_skeletal_check(q_truncation(A, 2))
    C, phi = export_truncation(A, 2)
    assert not q_skeletal_check(C)
    assert q_skeletal_check(quotient(C, phi).category)
    single = FiniteCategory(["p"], {("p", "p"): ["1"]}, {("1", "1"): "1"}, {"p": "1"})
    assert q_skeletal_check(single)


def test_quotient_truncation_matches_direct_construction():
    A = Alphabet("ab")
    C, phi = export_truncation(A, 2)
    Q = quotient(C, phi).category
    direct = q_truncation(A, 2)
    assert [o.strip("[]") for o in Q.objects] == list(direct.objects)
    for x in direct.objects:
        for y in direct.objects:
            assert len(Q.hom(f"[{x}]", f"[{y}]")) == len(direct.hom(x, y))


def test_functor_q_objects(word_a, merge):
    assert str(functor_q(merge, q_object(word_a)).canonical) == "xxxxxxxxy"
    ident = LetterMap.identity(word_a.alphabet)
    assert functor_q(ident, q_object(word_a)) == q_object(word_a)
    with pytest.raises(TypeError):
        functor_q(merge, word_a)


def test_fiber_map_examples(word_a, word_b):
    assert fiber_map(identity(word_a), "b") == (0, 1, 2, 3)
    s = check_morphism(word_a, word_b, canonical_perm(word_a, word_b).map)
    assert fiber_map(s, "a") == (0, 1, 2, 3)
    abc = word_a.alphabet
    phi = check_morphism(parse_word(abc, "a"), parse_word(abc, "ab"), [0])
    assert fiber_map(phi, "b") == ()


@given(composable_pair())
def test_fiber_maps_compose(pair):
    f, g = pair
    for ff, fg, fgf in zip(fiber_family(f), fiber_family(g), fiber_family(compose(g, f))):
        assert tuple(fg[k] for k in ff) == fgf


def test_to_sorted_sets(word_a):
    X = q_to_msets_obj(q_object(word_a))
    assert X == SortedSet(word_a.alphabet, {"a": {Atom(j) for j in range(4)}, "b": {Atom(j) for j in range(4)}, "c": {Atom(0)}})
    assert q_to_msets_obj(q_object(parse_word(word_a.alphabet, ""))) == SortedSet(word_a.alphabet)


@given(composable_pair())
def test_to_sorted_sets_functor(pair):
    f, g = pair
    qf, qg = q_morphism(f), q_morphism(g)
    assert q_to_msets_mor(q_compose(qg, qf)) == compose_mappings(q_to_msets_mor(qg), q_to_msets_mor(qf))
    assert q_to_msets_mor(q_identity(qf.dom)) == identity_mapping(q_to_msets_obj(qf.dom))


def test_q_full_inverse_examples(abc):
    o1, o2 = q_object(parse_word(abc, "ab")), q_object(parse_word(abc, "aab"))
    h = SortedMapping(q_to_msets_obj(o1), q_to_msets_obj(o2), {"a": {Atom(0): Atom(1)}, "b": {Atom(0): Atom(0)}})
    m = q_full_inverse(o1, o2, h)
    assert m.rep.map == (1, 2)
    check_morphism(m.rep.dom, m.rep.cod, m.rep.map)
    assert q_full_inverse(o1, o1, identity_mapping(q_to_msets_obj(o1))) == q_identity(o1)
    with pytest.raises(SortMismatch):
        q_full_inverse(o2, o1, h)


def test_q_full_inverse_rejects_out_of_range(abc):
    o1 = q_object(parse_word(abc, "a"))
    X = q_to_msets_obj(o1)
    Y = SortedSet(abc, {"a": {Atom(5)}})
    h = SortedMapping(X, Y, {"a": {Atom(0): Atom(5)}})
    with pytest.raises(SortMismatch):
        q_full_inverse(o1, o1, h)


def test_gamma_example(word_a, merge):
    o = q_object(word_a)
    g = gamma_iso(merge, o, representative=word_a)
    assert g("x", Tagged(Atom(0), "a")) == Atom(0)
    assert g("x", Tagged(Atom(0), "b")) == Atom(1)
    assert g("x", Tagged(Atom(2), "a")) == Atom(5)
    assert g("y", Tagged(Atom(0), "c")) == Atom(0)
    assert is_bijective(g)
    assert is_bijective(gamma_iso(merge, o))
    with pytest.raises(NotEquivalentEndpoints):
        gamma_iso(merge, o, representative=parse_word(word_a.alphabet, "ab"))


def test_gamma_single_letter_is_tag_stripping():
    A = Alphabet("a")
    o = q_object(parse_word(A, "aaa"))
    g = gamma_iso(LetterMap.identity(A), o)
    assert all(g("a", e) == e.inner for e in g.dom.part("a"))


@given(morphisms(max_len=5), st.integers(0, 2**32))
def test_gamma_naturality(phi, seed):
    f = random_letter_map(random.Random(seed), phi.dom.alphabet)
    m = q_morphism(phi)
    left = compose_mappings(q_to_msets_mor(functor_q(f, m)), gamma_iso(f, m.dom))
    right = compose_mappings(gamma_iso(f, m.cod), coproduct_mor(f, q_to_msets_mor(m)))
    assert left == right


@given(composable_pair(), st.integers(0, 2**32))
def test_relabelling_is_a_functor_for_each_map(pair, seed):
    f, g = pair
    lm = random_letter_map(random.Random(seed), f.dom.alphabet)
    qf, qg = q_morphism(f), q_morphism(g)
    assert functor_q(lm, q_compose(qg, qf)) == q_compose(functor_q(lm, qg), functor_q(lm, qf))
    assert functor_q(lm, q_identity(qf.dom)) == q_identity(functor_q(lm, qf.dom))
    assert functor_q(LetterMap.identity(f.dom.alphabet), qf) == qf


@given(morphisms(max_len=6), st.permutations(range(4)))
def test_projection_square_for_injective_maps(phi, images):
    A = phi.dom.alphabet
    f = LetterMap(A, Alphabet("wxyz"), tuple(images[: len(A)]))
    assert functor_q(f, q_morphism(phi)) == q_morphism(functor_c_mor(f, phi))
    assert functor_q(f, q_object(phi.dom)) == q_object(functor_c_mor(f, phi).dom)


def test_merging_letters_splits_a_class():
    # id_ab and the swap ab -> ba are related, but become unrelated once a and b are merged,
    # so no assignment on classes can commute with projection for this letter map
    A = Alphabet("ab")
    ab, ba = parse_word(A, "ab"), parse_word(A, "ba")
    ident = identity(ab)
    swap = check_morphism(ab, ba, [1, 0])
    assert matrix_related(ident, swap)
    assert q_morphism(ident) == q_morphism(swap)
    merge = LetterMap.from_dict(A, Alphabet("x"), {"a": "x", "b": "x"})
    assert q_morphism(functor_c_mor(merge, ident)) != q_morphism(functor_c_mor(merge, swap))


def test_relabelling_is_not_strictly_functorial_in_the_map():
    A = Alphabet("ab")
    f = LetterMap.from_dict(A, Alphabet("xy"), {"a": "y", "b": "x"})
    g = LetterMap.from_dict(Alphabet("xy"), Alphabet("z"), {"x": "z", "y": "z"})
    found = None
    for phi in enumerate_hom(parse_word(A, "ab"), parse_word(A, "abb")):
        qm = q_morphism(phi)
        if functor_q(f.then(g), qm) != functor_q(g, functor_q(f, qm)):
            found = phi
            break
    assert found is not None
    ident = LetterMap.identity(A)
    assert functor_q(ident.then(ident), q_morphism(found)) == functor_q(ident, functor_q(ident, q_morphism(found)))


def test_equivalence_legs_on_small_homs():
    A = Alphabet("ab")
    canon = [w for w in all_words(A, 3) if w.entries == tuple(sorted(w.entries))]
    for a in canon:
        for b in canon:
            o1, o2 = q_object(a), q_object(b)
            images = {q_to_msets_mor(m) for m in q_hom(o1, o2)}
            assert len(images) == hom_cardinality(a, b)
            for h in all_sorted_mappings(q_to_msets_obj(o1), q_to_msets_obj(o2)):
                assert q_to_msets_mor(q_full_inverse(o1, o2, h)) == h
