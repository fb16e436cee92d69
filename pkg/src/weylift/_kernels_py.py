"""Pure-Python reference for the compiled matrix kernel.

Matrices are flat tuples of integer numerators laid out as
((row * n) + col) * d + k, where k indexes the power basis of Q(zeta_N).
``red`` holds the reduced coefficients of z^d, ..., z^(2d-2), flattened.
"""


def matmul(n, d, a, b, red):
    out = [0] * (n * n * d)
    if d == 1:
        for i in range(n):
            arow = a[i * n:(i + 1) * n]
            for j in range(n):
                s = 0
                for m in range(n):
                    x = arow[m]
                    if x:
                        s += x * b[m * n + j]
                out[i * n + j] = s
        return tuple(out)
    span = 2 * d - 1
    for i in range(n):
        for j in range(n):
            acc = [0] * span
            for m in range(n):
                ab = (i * n + m) * d
                bb = (m * n + j) * d
                for p in range(d):
                    x = a[ab + p]
                    if x:
                        for q in range(d):
                            y = b[bb + q]
                            if y:
                                acc[p + q] += x * y
            base = (i * n + j) * d
            for p in range(d):
                out[base + p] = acc[p]
            for k in range(d, span):
                c = acc[k]
                if c:
                    rb = (k - d) * d
                    for p in range(d):
                        out[base + p] += c * red[rb + p]
    return tuple(out)
