import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoidcats import _pykernels, kernels

BACKENDS = kernels.available_backends()

entries = st.lists(st.integers(0, 3), max_size=10)


def naive_occ(w):
    return tuple(w[:i].count(x) for i, x in enumerate(w))


def test_backend_selected():
    assert kernels.BACKEND in BACKENDS


def test_cython_backend_built():
    # the compiled core is part of the build; a missing one means the extension silently failed
    assert "cython" in BACKENDS


@given(entries)
def test_counts_and_ranks(w):
    for impl in BACKENDS.values():
        assert impl.letter_counts(w, 4) == tuple(w.count(x) for x in range(4))
        assert impl.occ_ranks(w, 4) == naive_occ(w)
        assert impl.letter_positions(w, 4) == tuple(
            tuple(i for i, e in enumerate(w) if e == x) for x in range(4)
        )


@given(entries, st.randoms(use_true_random=False))
def test_canonical_perm_agrees(w, rnd):
    v = list(w)
    rnd.shuffle(v)
    results = {name: impl.canonical_perm(w, v, 4) for name, impl in BACKENDS.items()}
    s = results["python"]
    assert all(r == s for r in results.values())
    assert [v[k] for k in s] == w


def test_canonical_perm_rejects_inequivalent(backend):
    assert backend.canonical_perm([0, 1], [0, 0], 2) is None
    assert backend.canonical_perm([0], [0, 0], 2) is None


@given(st.permutations(list(range(7))), st.permutations(list(range(7))))
def test_compose_invert(s, t):
    for impl in BACKENDS.values():
        assert impl.compose(s, t) == tuple(s[t[i]] for i in range(7))
        inv = impl.invert(s)
        assert impl.compose(s, inv) == tuple(range(7))
        assert impl.is_permutation(s)


def test_is_permutation_rejects(backend):
    assert not backend.is_permutation([0, 0])
    assert not backend.is_permutation([1, 2])
    assert not backend.is_permutation([-1, 0])
    assert backend.is_permutation([])


@given(st.lists(st.integers(0, 2), max_size=4), st.lists(st.integers(0, 2), min_size=1, max_size=4))
@settings(max_examples=60)
def test_hom_maps_match_brute_force(a, b):
    expected = [
        m for m in itertools.product(range(len(b)), repeat=len(a)) if all(b[m[i]] == a[i] for i in range(len(a)))
    ]
    for impl in BACKENDS.values():
        assert list(impl.hom_maps(a, b, 3)) == expected


@given(st.lists(st.integers(0, 2), max_size=6), st.lists(st.integers(0, 2), min_size=1, max_size=6), st.randoms(use_true_random=False))
def test_fiber_maps_and_violations(a, b, rnd):
    where = [[i for i, e in enumerate(b) if e == x] for x in range(3)]
    a = [x for x in a if where[x]]
    phi = [rnd.choice(where[x]) for x in a]
    outs = {name: (impl.fiber_maps(a, b, phi, 3), impl.first_violation(a, b, phi)) for name, impl in BACKENDS.items()}
    assert len(set(outs.values())) == 1
    fibers, bad = outs["python"]
    assert bad == -1
    ranks = naive_occ(b)
    for x in range(3):
        assert fibers[x] == tuple(ranks[phi[i]] for i in range(len(a)) if a[i] == x)


def test_first_violation_index(backend):
    assert backend.first_violation([0, 1, 1], [0, 1], [0, 0, 1]) == 1


def test_transport(backend):
    assert backend.transport([2, 0], [1, 0], [2, 1, 0]) == _pykernels.transport([2, 0], [1, 0], [2, 1, 0])
    assert backend.transport([2, 0], [1, 0], [2, 1, 0]) == (2, 0)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_empty_inputs(name):
    impl = BACKENDS[name]
    assert impl.letter_counts([], 2) == (0, 0)
    assert impl.canonical_perm([], [], 2) == ()
    assert list(impl.hom_maps([], [0], 1)) == [()]
    assert list(impl.hom_maps([0], [], 1)) == []
