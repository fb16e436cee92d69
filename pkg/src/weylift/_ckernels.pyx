# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled matrix product over Z[zeta_N] with int64 accumulators.

Same layout and contract as ``_kernels_py.matmul``.  Callers guarantee
that no intermediate value can leave the int64 range.
"""

from libc.stdlib cimport malloc, free


def matmul(int n, int d, tuple a, tuple b, tuple red):
    cdef Py_ssize_t size = n * n * d
    cdef int span = 2 * d - 1
    cdef long long *A = <long long *> malloc(size * sizeof(long long))
    cdef long long *B = <long long *> malloc(size * sizeof(long long))
    cdef long long *C = <long long *> malloc(size * sizeof(long long))
    cdef long long *R = <long long *> malloc((d * d + 1) * sizeof(long long))
    cdef long long *acc = <long long *> malloc(span * sizeof(long long))
    cdef Py_ssize_t t
    cdef int i, j, m, p, q, k
    cdef long long x, c
    if A == NULL or B == NULL or C == NULL or R == NULL or acc == NULL:
        free(A); free(B); free(C); free(R); free(acc)
        raise MemoryError()
    try:
        for t in range(size):
            A[t] = a[t]
            B[t] = b[t]
        for t in range(len(red)):
            R[t] = red[t]
        for i in range(n):
            for j in range(n):
                for k in range(span):
                    acc[k] = 0
                for m in range(n):
                    for p in range(d):
                        x = A[(i * n + m) * d + p]
                        if x != 0:
                            for q in range(d):
                                acc[p + q] += x * B[(m * n + j) * d + q]
                for p in range(d):
                    C[(i * n + j) * d + p] = acc[p]
                for k in range(d, span):
                    c = acc[k]
                    if c != 0:
                        for p in range(d):
                            C[(i * n + j) * d + p] += c * R[(k - d) * d + p]
        return tuple([C[t] for t in range(size)])
    finally:
        free(A); free(B); free(C); free(R); free(acc)
