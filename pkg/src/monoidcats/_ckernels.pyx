# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels; drop-in twin of ``_pykernels``."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free


cdef long* _to_c(seq, Py_ssize_t n) except NULL:
    cdef long* buf = <long*> PyMem_Malloc((n + 1) * sizeof(long))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = seq[i]
    return buf


cdef tuple _from_c(long* buf, Py_ssize_t n):
    cdef Py_ssize_t i
    out = [None] * n
    for i in range(n):
        out[i] = buf[i]
    return tuple(out)


def letter_counts(entries, long nletters):
    cdef Py_ssize_t n = len(entries), i
    cdef long* w = _to_c(entries, n)
    cdef long* counts = <long*> PyMem_Malloc((nletters + 1) * sizeof(long))
    try:
        for i in range(nletters):
            counts[i] = 0
        for i in range(n):
            counts[w[i]] += 1
        return _from_c(counts, nletters)
    finally:
        PyMem_Free(w)
        PyMem_Free(counts)


def occ_ranks(entries, long nletters):
    cdef Py_ssize_t n = len(entries), i
    cdef long* w = _to_c(entries, n)
    cdef long* seen = <long*> PyMem_Malloc((nletters + 1) * sizeof(long))
    cdef long* out = <long*> PyMem_Malloc((n + 1) * sizeof(long))
    try:
        for i in range(nletters):
            seen[i] = 0
        for i in range(n):
            out[i] = seen[w[i]]
            seen[w[i]] += 1
        return _from_c(out, n)
    finally:
        PyMem_Free(w)
        PyMem_Free(seen)
        PyMem_Free(out)


def letter_positions(entries, long nletters):
    buckets = [[] for _ in range(nletters)]
    cdef Py_ssize_t n = len(entries), i
    cdef long* w = _to_c(entries, n)
    try:
        for i in range(n):
            buckets[w[i]].append(i)
    finally:
        PyMem_Free(w)
    return tuple(tuple(b) for b in buckets)


cdef long* _positions_flat(long* w, Py_ssize_t n, long nletters, long* start):
    # start[x] .. start[x+1] delimits the ascending positions of letter x
    cdef long* flat = <long*> PyMem_Malloc((n + 1) * sizeof(long))
    cdef long* fill = <long*> PyMem_Malloc((nletters + 1) * sizeof(long))
    cdef Py_ssize_t i
    cdef long x
    for x in range(nletters + 1):
        start[x] = 0
    for i in range(n):
        start[w[i] + 1] += 1
    for x in range(nletters):
        start[x + 1] += start[x]
        fill[x] = start[x]
    for i in range(n):
        flat[fill[w[i]]] = i
        fill[w[i]] += 1
    PyMem_Free(fill)
    return flat


def canonical_perm(u, v, long nletters):
    cdef Py_ssize_t n = len(u), i
    if len(v) != n:
        return None
    cdef long* uc = _to_c(u, n)
    cdef long* vc = _to_c(v, n)
    cdef long* start = <long*> PyMem_Malloc((nletters + 2) * sizeof(long))
    cdef long* seen = <long*> PyMem_Malloc((nletters + 1) * sizeof(long))
    cdef long* out = <long*> PyMem_Malloc((n + 1) * sizeof(long))
    cdef long* flat = _positions_flat(vc, n, nletters, start)
    cdef long x, j
    try:
        for x in range(nletters):
            seen[x] = 0
        for i in range(n):
            x = uc[i]
            j = start[x] + seen[x]
            if j >= start[x + 1]:
                return None
            out[i] = flat[j]
            seen[x] += 1
        for x in range(nletters):
            if start[x] + seen[x] != start[x + 1]:
                return None
        return _from_c(out, n)
    finally:
        PyMem_Free(uc)
        PyMem_Free(vc)
        PyMem_Free(start)
        PyMem_Free(seen)
        PyMem_Free(out)
        PyMem_Free(flat)


def compose(outer, inner):
    cdef Py_ssize_t n = len(inner), m = len(outer), i
    cdef long* o = _to_c(outer, m)
    cdef long* s = _to_c(inner, n)
    try:
        for i in range(n):
            s[i] = o[s[i]]
        return _from_c(s, n)
    finally:
        PyMem_Free(o)
        PyMem_Free(s)


def transport(phi, sigma_dom, sigma_cod):
    cdef Py_ssize_t n = len(sigma_dom), i
    cdef long* p = _to_c(phi, len(phi))
    cdef long* sd = _to_c(sigma_dom, n)
    cdef long* sc = _to_c(sigma_cod, len(sigma_cod))
    try:
        for i in range(n):
            sd[i] = sc[p[sd[i]]]
        return _from_c(sd, n)
    finally:
        PyMem_Free(p)
        PyMem_Free(sd)
        PyMem_Free(sc)


def invert(perm):
    cdef Py_ssize_t n = len(perm), i
    cdef long* p = _to_c(perm, n)
    cdef long* out = <long*> PyMem_Malloc((n + 1) * sizeof(long))
    try:
        for i in range(n):
            out[p[i]] = i
        return _from_c(out, n)
    finally:
        PyMem_Free(p)
        PyMem_Free(out)


def is_permutation(seq):
    cdef Py_ssize_t n = len(seq), i
    cdef long* p = _to_c(seq, n)
    cdef char* seen = <char*> PyMem_Malloc(n + 1)
    try:
        for i in range(n):
            seen[i] = 0
        for i in range(n):
            if p[i] < 0 or p[i] >= n or seen[p[i]]:
                return False
            seen[p[i]] = 1
        return True
    finally:
        PyMem_Free(p)
        PyMem_Free(seen)


def first_violation(dom, cod, phi):
    cdef Py_ssize_t n = len(dom), i
    cdef long* d = _to_c(dom, n)
    cdef long* c = _to_c(cod, len(cod))
    cdef long* p = _to_c(phi, n)
    try:
        for i in range(n):
            if c[p[i]] != d[i]:
                return i
        return -1
    finally:
        PyMem_Free(d)
        PyMem_Free(c)
        PyMem_Free(p)


def hom_maps(dom, cod, long nletters):
    cdef Py_ssize_t n = len(dom), m = len(cod), i, k
    cdef long* d = _to_c(dom, n)
    cdef long* c = _to_c(cod, m)
    cdef long* start = <long*> PyMem_Malloc((nletters + 2) * sizeof(long))
    cdef long* flat = _positions_flat(c, m, nletters, start)
    cdef long* digit = <long*> PyMem_Malloc((n + 1) * sizeof(long))
    cdef long* cur = <long*> PyMem_Malloc((n + 1) * sizeof(long))
    out = []
    try:
        for i in range(n):
            if start[d[i]] == start[d[i] + 1]:
                return out
            digit[i] = start[d[i]]
            cur[i] = flat[digit[i]]
        while True:
            out.append(_from_c(cur, n))
            # odometer increment, rightmost digit fastest
            k = n - 1
            while k >= 0:
                digit[k] += 1
                if digit[k] < start[d[k] + 1]:
                    cur[k] = flat[digit[k]]
                    break
                digit[k] = start[d[k]]
                cur[k] = flat[digit[k]]
                k -= 1
            if k < 0:
                return out
    finally:
        PyMem_Free(d)
        PyMem_Free(c)
        PyMem_Free(start)
        PyMem_Free(flat)
        PyMem_Free(digit)
        PyMem_Free(cur)


def fiber_maps(dom, cod, phi, long nletters):
    cdef Py_ssize_t n = len(dom), m = len(cod), i
    cdef long* d = _to_c(dom, n)
    cdef long* c = _to_c(cod, m)
    cdef long* p = _to_c(phi, n)
    cdef long* seen = <long*> PyMem_Malloc((nletters + 1) * sizeof(long))
    cdef long* occ = <long*> PyMem_Malloc((m + 1) * sizeof(long))
    buckets = [[] for _ in range(nletters)]
    try:
        for i in range(nletters):
            seen[i] = 0
        for i in range(m):
            occ[i] = seen[c[i]]
            seen[c[i]] += 1
        for i in range(n):
            buckets[d[i]].append(occ[p[i]])
        return tuple(tuple(b) for b in buckets)
    finally:
        PyMem_Free(d)
        PyMem_Free(c)
        PyMem_Free(p)
        PyMem_Free(seen)
        PyMem_Free(occ)
