# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled column reduction over Z (int64 with overflow detection) or F_p.

Same contract as _pykernels.reduce_columns. Raises OverflowError when an
int64 entry would overflow; the caller then reruns the pure-Python version.
"""
from libc.stdlib cimport malloc, free, realloc
from libc.stdint cimport int64_t

cdef extern from *:
    bint mul_overflow "__builtin_mul_overflow"(int64_t a, int64_t b, int64_t *res) nogil
    bint sub_overflow "__builtin_sub_overflow"(int64_t a, int64_t b, int64_t *res) nogil
    bint add_overflow "__builtin_add_overflow"(int64_t a, int64_t b, int64_t *res) nogil


cdef struct Col:
    Py_ssize_t n
    Py_ssize_t cap
    int64_t *rows
    int64_t *vals


cdef int col_init(Col *c, Py_ssize_t cap) except -1:
    if cap < 4:
        cap = 4
    c.n = 0
    c.cap = cap
    c.rows = <int64_t *> malloc(cap * sizeof(int64_t))
    c.vals = <int64_t *> malloc(cap * sizeof(int64_t))
    if c.rows == NULL or c.vals == NULL:
        raise MemoryError()
    return 0


cdef void col_free(Col *c):
    free(c.rows)
    free(c.vals)
    c.rows = NULL
    c.vals = NULL
    c.n = 0


cdef inline int64_t modp(int64_t x, int64_t p) nogil:
    x = x % p
    if x < 0:
        x += p
    return x


cdef int64_t unit_quotient(int64_t x, int64_t u, int64_t p) except? -1:
    """x / u for a unit u (+-1 over Z)."""
    cdef int64_t res
    if p == 0:
        if mul_overflow(x, u, &res):
            raise OverflowError("int64 overflow in column reduction")
        return res
    return modp(x * <int64_t> pow(u, -1, p), p)


cdef int axpy(Col *dst, Col *src, int64_t q, int64_t p, Col *tmp) except -1:
    """dst -= q * src; both sorted by row. Result swapped into dst."""
    cdef Py_ssize_t i = 0, j = 0, k = 0
    cdef Py_ssize_t need = dst.n + src.n
    cdef int64_t prod, x
    if tmp.cap < need:
        tmp.rows = <int64_t *> realloc(tmp.rows, need * sizeof(int64_t))
        tmp.vals = <int64_t *> realloc(tmp.vals, need * sizeof(int64_t))
        if tmp.rows == NULL or tmp.vals == NULL:
            raise MemoryError()
        tmp.cap = need
    while i < dst.n or j < src.n:
        if j >= src.n or (i < dst.n and dst.rows[i] < src.rows[j]):
            tmp.rows[k] = dst.rows[i]
            tmp.vals[k] = dst.vals[i]
            k += 1
            i += 1
            continue
        if p:
            prod = modp(q * src.vals[j], p)
        elif mul_overflow(q, src.vals[j], &prod):
            raise OverflowError("int64 overflow in column reduction")
        if i >= dst.n or src.rows[j] < dst.rows[i]:
            x = 0
            if p:
                x = modp(-prod, p)
            elif sub_overflow(0, prod, &x):
                raise OverflowError("int64 overflow in column reduction")
            if x != 0:
                tmp.rows[k] = src.rows[j]
                tmp.vals[k] = x
                k += 1
            j += 1
        else:
            if p:
                x = modp(dst.vals[i] - prod, p)
            elif sub_overflow(dst.vals[i], prod, &x):
                raise OverflowError("int64 overflow in column reduction")
            if x != 0:
                tmp.rows[k] = dst.rows[i]
                tmp.vals[k] = x
                k += 1
            i += 1
            j += 1
    # swap buffers
    cdef int64_t *r = dst.rows
    cdef int64_t *v = dst.vals
    cdef Py_ssize_t c = dst.cap
    dst.rows = tmp.rows
    dst.vals = tmp.vals
    dst.cap = tmp.cap
    dst.n = k
    tmp.rows = r
    tmp.vals = v
    tmp.cap = c
    tmp.n = 0
    return 0


def reduce_columns(columns, Py_ssize_t nrows, int64_t modulus=0):
    cdef Py_ssize_t ncols = len(columns)
    cdef Col *cols = <Col *> malloc((ncols + 1) * sizeof(Col))
    cdef Py_ssize_t *pivot_of = <Py_ssize_t *> malloc((nrows + 1) * sizeof(Py_ssize_t))
    cdef char *is_residual = <char *> malloc(ncols + 1)
    cdef Col tmp
    cdef Py_ssize_t a, k, idx, npiv = 0, low_idx
    cdef int64_t low, q, v, p = modulus
    cdef Col *c
    cdef Col *piv
    if not 0 <= modulus < 2 ** 31:
        free(cols); free(pivot_of); free(is_residual)
        raise ValueError("modulus must be 0 or a prime below 2**31")
    if cols == NULL or pivot_of == NULL or is_residual == NULL:
        free(cols); free(pivot_of); free(is_residual)
        raise MemoryError()
    for a in range(nrows):
        pivot_of[a] = -1
    col_init(&tmp, 16)
    cdef Py_ssize_t built = 0
    try:
        for a in range(ncols):
            entries = sorted(columns[a])
            col_init(&cols[a], len(entries))
            built += 1
            is_residual[a] = 0
            c = &cols[a]
            for r, val in entries:
                if r < 0 or r >= nrows:
                    raise IndexError(f"row {r} out of range")
                v = val % p if p else val
                if c.n and c.rows[c.n - 1] == r:
                    if p:
                        c.vals[c.n - 1] = modp(c.vals[c.n - 1] + v, p)
                    elif add_overflow(c.vals[c.n - 1], v, &c.vals[c.n - 1]):
                        raise OverflowError("int64 overflow in column reduction")
                    if c.vals[c.n - 1] == 0:
                        c.n -= 1
                elif v != 0:
                    c.rows[c.n] = r
                    c.vals[c.n] = v
                    c.n += 1
            while c.n:
                low = c.rows[c.n - 1]
                idx = pivot_of[low]
                if idx < 0:
                    break
                piv = &cols[idx]
                q = unit_quotient(c.vals[c.n - 1], piv.vals[piv.n - 1], p)
                axpy(c, piv, q, p, &tmp)
            if c.n == 0:
                continue
            v = c.vals[c.n - 1]
            if p or v == 1 or v == -1:
                pivot_of[c.rows[c.n - 1]] = a
                npiv += 1
            else:
                is_residual[a] = 1
        residual = []
        for a in range(ncols):
            if not is_residual[a]:
                continue
            c = &cols[a]
            while True:
                low_idx = -1
                for k in range(c.n - 1, -1, -1):
                    if pivot_of[c.rows[k]] >= 0:
                        low_idx = k
                        break
                if low_idx < 0:
                    break
                piv = &cols[pivot_of[c.rows[low_idx]]]
                q = unit_quotient(c.vals[low_idx], piv.vals[piv.n - 1], p)
                axpy(c, piv, q, p, &tmp)
            residual.append({c.rows[k]: c.vals[k] for k in range(c.n)})
        return npiv, residual
    finally:
        for a in range(built):
            col_free(&cols[a])
        col_free(&tmp)
        free(cols)
        free(pivot_of)
        free(is_residual)


cdef inline int64_t iabs(int64_t x) nogil:
    return -x if x < 0 else x


cdef int _primitive(int64_t *a, Py_ssize_t k, Py_ssize_t n) except -1:
    """Same algorithm as _pykernels.is_primitive on a row-major k x n buffer."""
    cdef Py_ssize_t t, i, j, pi, pj, c
    cdef int64_t best, x, p, q, tmp
    cdef bint dirty
    for t in range(k):
        while True:
            best = 0
            pi = -1
            pj = -1
            for i in range(t, k):
                for j in range(t, n):
                    x = iabs(a[i * n + j])
                    if x and (best == 0 or x < best):
                        best = x
                        pi = i
                        pj = j
            if pi < 0:
                return 0
            if pi != t:
                for j in range(n):
                    tmp = a[t * n + j]; a[t * n + j] = a[pi * n + j]; a[pi * n + j] = tmp
            if pj != t:
                for i in range(k):
                    tmp = a[i * n + t]; a[i * n + t] = a[i * n + pj]; a[i * n + pj] = tmp
            p = a[t * n + t]
            if p == 1 or p == -1:
                break
            dirty = False
            for j in range(t + 1, n):
                q = a[t * n + j] / p
                if q:
                    for i in range(t, k):
                        if mul_overflow(q, a[i * n + t], &tmp) or sub_overflow(a[i * n + j], tmp, &a[i * n + j]):
                            raise OverflowError()
                if a[t * n + j]:
                    dirty = True
            for i in range(t + 1, k):
                q = a[i * n + t] / p
                if q:
                    for j in range(t, n):
                        if mul_overflow(q, a[t * n + j], &tmp) or sub_overflow(a[i * n + j], tmp, &a[i * n + j]):
                            raise OverflowError()
                if a[i * n + t]:
                    dirty = True
            if not dirty:
                for i in range(t + 1, k):
                    for j in range(t + 1, n):
                        if a[i * n + j] % p:
                            for c in range(t, n):
                                if add_overflow(a[t * n + c], a[i * n + c], &a[t * n + c]):
                                    raise OverflowError()
                            dirty = True
                            break
                    if dirty:
                        break
                if not dirty:
                    return 0
        p = a[t * n + t]
        for i in range(t + 1, k):
            q = a[i * n + t] * p
            if q:
                for j in range(t, n):
                    if mul_overflow(q, a[t * n + j], &tmp) or sub_overflow(a[i * n + j], tmp, &a[i * n + j]):
                        raise OverflowError()
        for j in range(t + 1, n):
            a[t * n + j] = 0
    return 1


def is_primitive(rows, Py_ssize_t ncols):
    cdef Py_ssize_t k = len(rows), i, j
    if k > ncols:
        return False
    if k == 0:
        return True
    cdef int64_t *a = <int64_t *> malloc(k * ncols * sizeof(int64_t))
    if a == NULL:
        raise MemoryError()
    try:
        for i in range(k):
            row = rows[i]
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j in range(ncols):
                a[i * ncols + j] = row[j]
        return bool(_primitive(a, k, ncols))
    finally:
        free(a)
