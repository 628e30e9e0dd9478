# cython: language_level=3
"""Compiled kernels for exact integer linear algebra and dense integer polynomials.

Same API and semantics as the pure-Python module ``pure``; entries stay
arbitrary-precision Python ints, the speedup comes from C-level loop and
list handling.
"""

from math import gcd

from cpython.list cimport PyList_GET_ITEM, PyList_GET_SIZE


def mat_mul_int(list a, list b):
    cdef Py_ssize_t n = PyList_GET_SIZE(a)
    cdef Py_ssize_t inner = PyList_GET_SIZE(b)
    cdef Py_ssize_t m = PyList_GET_SIZE(<list>PyList_GET_ITEM(b, 0))
    cdef Py_ssize_t i, j, k
    cdef list bt = []
    cdef list ai, bj, row, out
    for j in range(m):
        bj = [(<list>PyList_GET_ITEM(b, k))[j] for k in range(inner)]
        bt.append(bj)
    out = []
    for i in range(n):
        ai = <list>PyList_GET_ITEM(a, i)
        row = []
        for j in range(m):
            bj = <list>PyList_GET_ITEM(bt, j)
            acc = 0
            for k in range(inner):
                acc = acc + (<object>PyList_GET_ITEM(ai, k)) * (<object>PyList_GET_ITEM(bj, k))
            row.append(acc)
        out.append(row)
    return out


def det_int(list rows):
    """Determinant by fraction-free Bareiss elimination (exact divisions)."""
    cdef Py_ssize_t n = PyList_GET_SIZE(rows)
    if n == 1:
        return (<list>PyList_GET_ITEM(rows, 0))[0]
    cdef list m = [list(r) for r in rows]
    cdef int sign = 1
    cdef Py_ssize_t i, j, k
    cdef list ri, rk
    prev = 1
    for k in range(n - 1):
        if (<list>PyList_GET_ITEM(m, k))[k] == 0:
            for i in range(k + 1, n):
                if (<list>PyList_GET_ITEM(m, i))[k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        rk = <list>PyList_GET_ITEM(m, k)
        pivot = rk[k]
        for i in range(k + 1, n):
            ri = <list>PyList_GET_ITEM(m, i)
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * (<object>PyList_GET_ITEM(ri, j))
                         - f * (<object>PyList_GET_ITEM(rk, j))) // prev
            ri[k] = 0
        prev = pivot
    if sign == 1:
        return (<list>PyList_GET_ITEM(m, n - 1))[n - 1]
    return -(<list>PyList_GET_ITEM(m, n - 1))[n - 1]


def charpoly_int(list rows):
    """Monic characteristic polynomial of an integer matrix, descending coefficients.

    Faddeev-LeVerrier recurrence; every division is exact over the integers.
    """
    cdef Py_ssize_t n = PyList_GET_SIZE(rows)
    cdef list coeffs = [1]
    cdef list b = [list(r) for r in rows]
    cdef Py_ssize_t i, k
    cdef list bi
    c = 0
    for i in range(n):
        c = c - (<list>PyList_GET_ITEM(b, i))[i]
    coeffs.append(c)
    for k in range(2, n + 1):
        for i in range(n):
            bi = <list>PyList_GET_ITEM(b, i)
            bi[i] = bi[i] + c
        b = mat_mul_int(rows, b)
        t = 0
        for i in range(n):
            t = t + (<list>PyList_GET_ITEM(b, i))[i]
        c, r = divmod(-t, k)
        if r:
            raise ArithmeticError("Faddeev-LeVerrier division was not exact")
        coeffs.append(c)
    return coeffs


def minor_dets_int(list rows, row_subsets, col_subsets):
    """Matrix of minor determinants det(rows[I, J]) for I, J in the given subset lists."""
    cdef list out = []
    cdef list picked, out_row, minor
    for subset_i in row_subsets:
        picked = [rows[i] for i in subset_i]
        out_row = []
        for subset_j in col_subsets:
            minor = [[r[j] for j in subset_j] for r in picked]
            out_row.append(det_int(minor))
        out.append(out_row)
    return out


def poly_mul_int(list a, list b):
    cdef Py_ssize_t la = PyList_GET_SIZE(a)
    cdef Py_ssize_t lb = PyList_GET_SIZE(b)
    if la == 0 or lb == 0:
        return []
    cdef list out = [0] * (la + lb - 1)
    cdef Py_ssize_t i, j
    for i in range(la):
        ai = <object>PyList_GET_ITEM(a, i)
        if ai:
            for j in range(lb):
                out[i + j] = (<object>PyList_GET_ITEM(out, i + j)) \
                    + ai * (<object>PyList_GET_ITEM(b, j))
    while out and out[len(out) - 1] == 0:
        out.pop()
    return out


def poly_scale_sub_int(c, list a, list q, list b):
    """c*a - q*b for integer polynomials a, b (ascending), scalar c, polynomial q."""
    cdef list qb = poly_mul_int(q, b)
    cdef Py_ssize_t la = PyList_GET_SIZE(a)
    cdef Py_ssize_t lq = PyList_GET_SIZE(qb)
    cdef Py_ssize_t n = la if la > lq else lq
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(la):
        out[i] = c * (<object>PyList_GET_ITEM(a, i))
    for i in range(lq):
        out[i] = (<object>PyList_GET_ITEM(out, i)) - (<object>PyList_GET_ITEM(qb, i))
    while out and out[len(out) - 1] == 0:
        out.pop()
    return out


def row_combine_int(list row, list prow, c, list q):
    """Unimodular row update: entrywise c*row[j] - q*prow[j] over Z[t]."""
    cdef Py_ssize_t n = PyList_GET_SIZE(row)
    cdef Py_ssize_t j
    return [
        poly_scale_sub_int(c, <list>PyList_GET_ITEM(row, j), q,
                           <list>PyList_GET_ITEM(prow, j))
        for j in range(n)
    ]


def row_content_int(list row):
    """gcd of all coefficients appearing in a row of integer polynomials."""
    g = 0
    for p in row:
        for coef in p:
            if coef:
                g = gcd(g, coef)
                if g == 1:
                    return 1
    return g


def row_divide_int(list row, g):
    return [[coef // g for coef in p] for p in row]
