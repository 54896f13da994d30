# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the pure-Python kernels; same signatures, same results."""

import numpy as np
cimport cython


def associativity_violations(comp, Py_ssize_t max_count=64):
    cdef int[:, ::1] c = np.ascontiguousarray(comp, dtype=np.intc)
    cdef Py_ssize_t m = c.shape[0]
    cdef Py_ssize_t f, g, h
    cdef int gf, hg, left, right
    found = []
    for f in range(m):
        for g in range(m):
            gf = c[g, f]
            if gf < 0:
                continue
            for h in range(m):
                hg = c[h, g]
                if hg < 0:
                    continue
                left = c[h, gf]
                right = c[hg, f]
                if left < 0 or right < 0:
                    continue
                if left != right:
                    found.append((h, g, f))
                    if len(found) >= max_count:
                        return found
    return found


cdef bint _associative(int* t, int n) nogil:
    cdef int x, y, z, xy
    for x in range(n):
        for y in range(n):
            xy = t[x * n + y]
            for z in range(n):
                if t[xy * n + z] != t[x * n + t[y * n + z]]:
                    return False
    return True


def is_associative_operation(table, int n):
    if n == 0:
        return True
    cdef int[::1] t = np.ascontiguousarray(table, dtype=np.intc)
    return bool(_associative(&t[0], n))


def count_associative_operations(int n):
    if n == 0:
        return 1
    cdef Py_ssize_t size = n * n
    cdef int[::1] t = np.zeros(size, dtype=np.intc)
    cdef long long count = 0
    cdef Py_ssize_t i
    with nogil:
        while True:
            if _associative(&t[0], n):
                count += 1
            # odometer, last cell fastest to match itertools.product order
            i = size - 1
            while i >= 0:
                t[i] += 1
                if t[i] < n:
                    break
                t[i] = 0
                i -= 1
            if i < 0:
                break
    return count
