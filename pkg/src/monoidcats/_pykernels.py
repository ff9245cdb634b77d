"""Pure-Python integer kernels.

Words are tuples of letter indices in ``range(nletters)``; index maps are
tuples of ints. The compiled module ``_ckernels`` exposes the same functions
with the same signatures and must return identical values.
"""

from itertools import product


def letter_counts(entries, nletters):
    counts = [0] * nletters
    for x in entries:
        counts[x] += 1
    return tuple(counts)


def occ_ranks(entries, nletters):
    """Rank of every position among the positions carrying the same letter."""
    seen = [0] * nletters
    out = []
    for x in entries:
        out.append(seen[x])
        seen[x] += 1
    return tuple(out)


def letter_positions(entries, nletters):
    """Ascending positions of each letter, indexed by letter."""
    buckets = [[] for _ in range(nletters)]
    for i, x in enumerate(entries):
        buckets[x].append(i)
    return tuple(tuple(b) for b in buckets)


def canonical_perm(u, v, nletters):
    """``i -> pos_{v,u(i)}(occ_u(i))``, or ``None`` when ``u`` and ``v`` are not equivalent."""
    if len(u) != len(v):
        return None
    positions = letter_positions(v, nletters)
    seen = [0] * nletters
    out = []
    for x in u:
        j = seen[x]
        bucket = positions[x]
        if j >= len(bucket):
            return None
        out.append(bucket[j])
        seen[x] = j + 1
    for x in range(nletters):
        if seen[x] != len(positions[x]):
            return None
    return tuple(out)


def compose(outer, inner):
    """The index map ``i -> outer[inner[i]]``."""
    return tuple(outer[k] for k in inner)


def transport(phi, sigma_dom, sigma_cod):
    """``sigma_cod o phi o sigma_dom``."""
    return tuple(sigma_cod[phi[k]] for k in sigma_dom)


def invert(perm):
    out = [0] * len(perm)
    for i, p in enumerate(perm):
        out[p] = i
    return tuple(out)


def is_permutation(seq):
    n = len(seq)
    seen = [False] * n
    for p in seq:
        if not 0 <= p < n or seen[p]:
            return False
        seen[p] = True
    return True


def first_violation(dom, cod, phi):
    """First ``i`` with ``dom[i] != cod[phi[i]]``, or -1.

    Callers guarantee ``len(phi) == len(dom)`` and ``0 <= phi[i] < len(cod)``.
    """
    for i, x in enumerate(dom):
        if cod[phi[i]] != x:
            return i
    return -1


def hom_maps(dom, cod, nletters):
    """All index maps ``phi`` with ``dom == cod o phi``, lexicographically."""
    positions = letter_positions(cod, nletters)
    return [tuple(m) for m in product(*(positions[x] for x in dom))]


def fiber_maps(dom, cod, phi, nletters):
    """Per letter, ``j -> occ_cod(phi(pos_{dom,x}(j)))``."""
    occ = occ_ranks(cod, nletters)
    buckets = [[] for _ in range(nletters)]
    for i, x in enumerate(dom):
        buckets[x].append(occ[phi[i]])
    return tuple(tuple(b) for b in buckets)
