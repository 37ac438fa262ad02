# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled canonicalization kernels.

Same interface and results as ``piwgen.kernels._pure``; the staged
minimizer keeps its branch bookkeeping in Python sets of byte strings
while all row transforms, comparisons and sorts run on C arrays.

Matrices up to 32 rows/columns with entries fitting a C int are
handled here; anything larger is delegated to the pure implementation.
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize

from . import _pure

BACKEND = "c"

cdef enum:
    CAP = 32
    CAP1 = 33
    CAPSQ = 1024


# ---------------------------------------------------------------------------
# small C helpers

cdef inline void _sort_ints(int* a, int n) noexcept nogil:
    cdef int i, j, key
    for i in range(1, n):
        key = a[i]
        j = i - 1
        while j >= 0 and a[j] > key:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = key


cdef inline int _row_cmp(const int* a, const int* b, int n) noexcept nogil:
    cdef int j
    for j in range(n):
        if a[j] != b[j]:
            return -1 if a[j] < b[j] else 1
    return 0


cdef bint _load(mat, int* buf, int* pm, int* pn) except -1:
    """Read a tuple-of-row-tuples into a row-major buffer.

    Returns False when the matrix exceeds the compiled capacity (the
    caller then falls back to the pure kernels).
    """
    cdef int m = len(mat)
    if m == 0 or len(mat[0]) == 0:
        raise ValueError("matrix dimensions must be positive")
    cdef int n = len(mat[0])
    if m > CAP or n > CAP:
        return False
    cdef int i, j
    for i in range(m):
        row = mat[i]
        for j in range(n):
            buf[i * n + j] = row[j]
    pm[0] = m
    pn[0] = n
    return True


cdef tuple _emit(const int* buf, int m, int n):
    cdef int i, j
    return tuple(
        tuple(buf[i * n + j] for j in range(n)) for i in range(m)
    )


# ---------------------------------------------------------------------------
# row_min / ord_neg

def row_min(v):
    """Minimal form of a single row: non-positive entries, ascending."""
    cdef int n = len(v)
    cdef int buf[CAP]
    cdef int j, e
    if n > CAP:
        return _pure.row_min(v)
    for j in range(n):
        e = v[j]
        buf[j] = -e if e > 0 else e
    _sort_ints(buf, n)
    return tuple(buf[j] for j in range(n))


cdef void _ord_neg_c(const int* mat, int m, int n, int* out) noexcept nogil:
    # columns into col-major scratch, negate positive-leading, stable sort
    cdef int cols[CAPSQ]
    cdef int order[CAP]
    cdef int i, j, t, lead, key
    for j in range(n):
        lead = 0
        for i in range(m):
            if mat[i * n + j] != 0:
                lead = mat[i * n + j]
                break
        if lead > 0:
            for i in range(m):
                cols[j * m + i] = -mat[i * n + j]
        else:
            for i in range(m):
                cols[j * m + i] = mat[i * n + j]
    for j in range(n):
        order[j] = j
    for j in range(1, n):
        key = order[j]
        t = j - 1
        while t >= 0 and _row_cmp(&cols[order[t] * m], &cols[key * m], m) > 0:
            order[t + 1] = order[t]
            t -= 1
        order[t + 1] = key
    for t in range(n):
        for i in range(m):
            out[i * n + t] = cols[order[t] * m + i]


def ord_neg(mat):
    """Negate positive-leading columns, then sort columns ascending."""
    cdef int buf[CAPSQ]
    cdef int out[CAPSQ]
    cdef int m, n
    if not _load(mat, buf, &m, &n):
        return _pure.ord_neg(mat)
    _ord_neg_c(buf, m, n, out)
    return _emit(out, m, n)


# ---------------------------------------------------------------------------
# exhaustive scan

def minclass_scan(mat):
    """Reference minimizer: exhaust all 2^m·m! row monomials."""
    cdef int base[CAPSQ]
    cdef int rows[CAPSQ]
    cdef int cand[CAPSQ]
    cdef int best[CAPSQ]
    cdef int perm[CAP]
    cdef int m, n, i, j, t, bits, tmp
    cdef bint have_best = False
    if not _load(mat, base, &m, &n):
        return _pure.minclass_scan(mat)
    for i in range(m):
        perm[i] = i
    with nogil:
        while True:
            for bits in range(1 << m):
                for i in range(m):
                    if bits >> (m - 1 - i) & 1:
                        for j in range(n):
                            rows[i * n + j] = -base[perm[i] * n + j]
                    else:
                        for j in range(n):
                            rows[i * n + j] = base[perm[i] * n + j]
                _ord_neg_c(rows, m, n, cand)
                if not have_best or _row_cmp(cand, best, m * n) < 0:
                    for t in range(m * n):
                        best[t] = cand[t]
                    have_best = True
            # next permutation in lexicographic order
            i = m - 2
            while i >= 0 and perm[i] >= perm[i + 1]:
                i -= 1
            if i < 0:
                break
            j = m - 1
            while perm[j] <= perm[i]:
                j -= 1
            tmp = perm[i]; perm[i] = perm[j]; perm[j] = tmp
            i += 1
            j = m - 1
            while i < j:
                tmp = perm[i]; perm[i] = perm[j]; perm[j] = tmp
                i += 1
                j -= 1
    return _emit(best, m, n)


# ---------------------------------------------------------------------------
# staged prefix-growing minimizer

cdef int _groups_of(const int* prefix, int depth, int n,
                    int* gstart, bint* gzero) noexcept nogil:
    """Runs of equal columns of the depth×n prefix; returns group count.

    gstart has ngroups+1 entries (fence-post); gzero flags all-zero runs.
    """
    cdef int ngroups = 0
    cdef int j, i
    cdef bint differs, zero
    gstart[0] = 0
    for j in range(1, n + 1):
        differs = True
        if j < n:
            differs = False
            for i in range(depth):
                if prefix[i * n + j] != prefix[i * n + gstart[ngroups]]:
                    differs = True
                    break
        if differs:
            zero = True
            for i in range(depth):
                if prefix[i * n + gstart[ngroups]] != 0:
                    zero = False
                    break
            gzero[ngroups] = zero
            ngroups += 1
            gstart[ngroups] = j
    return ngroups


cdef void _best_ext_c(const int* gstart, const bint* gzero, int ngroups,
                      const int* u, bint negate, int* out) noexcept nogil:
    cdef int g, j, a, b, e
    for g in range(ngroups):
        a = gstart[g]
        b = gstart[g + 1]
        if gzero[g]:
            for j in range(a, b):
                e = u[j]
                out[j] = -e if e > 0 else e
        elif negate:
            for j in range(a, b):
                out[j] = -u[j]
        else:
            for j in range(a, b):
                out[j] = u[j]
        _sort_ints(&out[a], b - a)


cdef void _ext_frame_c(const int* gstart, const bint* gzero, int ngroups,
                       const int* w, int n, int* sigma, int* order) noexcept nogil:
    """Frame (signs by source, source order) realizing _best_ext_c for w.

    Insertion sort with strict comparisons keeps equal transformed
    values in index order, matching the pure implementation's
    (value, index) tie-break.
    """
    cdef int g, j, a, b, t, key, keyj
    for j in range(n):
        sigma[j] = 1
        order[j] = j
    for g in range(ngroups):
        a = gstart[g]
        b = gstart[g + 1]
        if gzero[g]:
            for j in range(a, b):
                if w[j] > 0:
                    sigma[j] = -1
        for j in range(a + 1, b):
            keyj = order[j]
            key = sigma[keyj] * w[keyj]
            t = j - 1
            while t >= a and sigma[order[t]] * w[order[t]] > key:
                order[t + 1] = order[t]
                t -= 1
            order[t + 1] = keyj
    return


cdef void _sorted_insert(int* dst, int* ndst, const int* row, int n) noexcept nogil:
    """Insert row into the row-lex-sorted block list dst (ndst rows)."""
    cdef int lo = 0
    cdef int i, j
    while lo < ndst[0] and _row_cmp(&dst[lo * n], row, n) <= 0:
        lo += 1
    for i in range(ndst[0], lo, -1):
        for j in range(n):
            dst[i * n + j] = dst[(i - 1) * n + j]
    for j in range(n):
        dst[lo * n + j] = row[j]
    ndst[0] += 1


cdef bytes _transformed_state(const int* rows, int count, int n, int skip,
                              const int* sigma, const int* order):
    """All rows but `skip`, rewritten by the frame, sorted, as bytes."""
    cdef int buf[CAPSQ]
    cdef int tr[CAP]
    cdef int nout = 0
    cdef int r, t
    for r in range(count):
        if r == skip:
            continue
        for t in range(n):
            tr[t] = sigma[order[t]] * rows[r * n + order[t]]
        _sorted_insert(buf, &nout, tr, n)
    return PyBytes_FromStringAndSize(<const char*> buf, nout * n * sizeof(int))


cdef set _stage_one_c(const int* base, int m, int n, int* best_out):
    """Minimal first row plus branch states; writes the row to best_out."""
    cdef int rm[CAPSQ]
    cdef int w[CAP]
    cdef int sigma[CAP]
    cdef int order[CAP]
    cdef int gstart[2]
    cdef bint gzero[1]
    cdef int i, j, e, sign
    cdef bint have = False
    for i in range(m):
        for j in range(n):
            e = base[i * n + j]
            rm[i * n + j] = -e if e > 0 else e
        _sort_ints(&rm[i * n], n)
        if not have or _row_cmp(&rm[i * n], best_out, n) < 0:
            for j in range(n):
                best_out[j] = rm[i * n + j]
            have = True
    # one whole-row group with empty prefix: negation and permutation free
    gstart[0] = 0
    gstart[1] = n
    gzero[0] = True
    states = set()
    for i in range(m):
        if _row_cmp(&rm[i * n], best_out, n) != 0:
            continue
        for sign in range(2):
            for j in range(n):
                w[j] = base[i * n + j] if sign == 0 else -base[i * n + j]
            _ext_frame_c(gstart, gzero, 1, w, n, sigma, order)
            states.add(_transformed_state(base, m, n, i, sigma, order))
    return states


cdef _staged(mat, bint test_only):
    """Shared walk for canonical_form (test_only=False) and is_minimal."""
    cdef int base[CAPSQ]
    cdef int prefix[CAPSQ]
    cdef int cand[CAP]
    cdef int best[CAP]
    cdef int w[CAP]
    cdef int sigma[CAP]
    cdef int order[CAP]
    cdef int gstart[CAP1]
    cdef bint gzero[CAP]
    cdef int m, n, j, depth, ngroups, rem, r, sign
    cdef bint have
    cdef const int* st_ptr
    if not _load(mat, base, &m, &n):
        if test_only:
            return _pure.is_minimal(mat)
        return _pure.canonical_form(mat)

    states = _stage_one_c(base, m, n, prefix)
    if test_only and _row_cmp(prefix, base, n) != 0:
        return False

    for depth in range(1, m):
        ngroups = _groups_of(prefix, depth, n, gstart, gzero)
        have = False
        winners = []
        for st in states:
            st_ptr = <const int*> PyBytes_AS_STRING(<bytes> st)
            rem = len(<bytes> st) // (n * sizeof(int))
            for r in range(rem):
                # duplicate rows sit adjacently in the sorted state
                if r > 0 and _row_cmp(&st_ptr[r * n], &st_ptr[(r - 1) * n], n) == 0:
                    continue
                for sign in range(2):
                    _best_ext_c(gstart, gzero, ngroups, &st_ptr[r * n],
                                sign == 1, cand)
                    if not have or _row_cmp(cand, best, n) < 0:
                        if test_only and _row_cmp(cand, &base[depth * n], n) < 0:
                            return False
                        for j in range(n):
                            best[j] = cand[j]
                        have = True
                        winners = [(st, r, sign)]
                    elif _row_cmp(cand, best, n) == 0:
                        winners.append((st, r, sign))
        if test_only and _row_cmp(best, &base[depth * n], n) != 0:
            return False
        new_states = set()
        for st, r, sign in winners:
            st_ptr = <const int*> PyBytes_AS_STRING(<bytes> st)
            rem = len(<bytes> st) // (n * sizeof(int))
            for j in range(n):
                w[j] = st_ptr[r * n + j] if sign == 0 else -st_ptr[r * n + j]
            _ext_frame_c(gstart, gzero, ngroups, w, n, sigma, order)
            new_states.add(_transformed_state(st_ptr, rem, n, r, sigma, order))
        states = new_states
        for j in range(n):
            prefix[depth * n + j] = best[j]

    if test_only:
        return True
    return _emit(prefix, m, n)


def canonical_form(mat):
    """The row-lex-minimal member of the Hadamard class of mat."""
    return _staged(mat, False)


def is_minimal(mat):
    """True iff mat equals the minimal member of its Hadamard class."""
    return _staged(mat, True)
