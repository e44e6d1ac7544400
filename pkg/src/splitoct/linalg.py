"""Exact linear algebra over a scalar field (GF(p) or the rationals).

Matrices are lists of row lists.  Pivoting is always "first nonzero in
column order", so every routine is deterministic.
"""

__all__ = ["echelon", "rank", "inverse", "det", "solve", "in_span", "matmul", "matvec"]


def echelon(rows, field):
    """Row echelon form (not reduced). Returns (rows, pivot_columns)."""
    m = [list(r) for r in rows]
    zero = field.zero
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if m[i][c] != zero:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = field.inv(m[r][c])
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != zero:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r] + m[r:], pivots


def rank(rows, field):
    if not rows:
        return 0
    _, pivots = echelon(rows, field)
    return len(pivots)


def det(rows, field):
    m = [list(r) for r in rows]
    n = len(m)
    zero = field.zero
    d = field.one
    for c in range(n):
        pr = None
        for i in range(c, n):
            if m[i][c] != zero:
                pr = i
                break
        if pr is None:
            return zero
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            d = -d
        d = d * m[c][c]
        inv = field.inv(m[c][c])
        for i in range(c + 1, n):
            if m[i][c] != zero:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return d


def inverse(rows, field):
    """Inverse via Gauss-Jordan; returns None for a singular matrix."""
    n = len(rows)
    zero, one = field.zero, field.one
    aug = [list(rows[i]) + [one if j == i else zero for j in range(n)]
           for i in range(n)]
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, n):
            if aug[i][c] != zero:
                pr = i
                break
        if pr is None:
            return None
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = field.inv(aug[r][c])
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != zero:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        r += 1
    return [row[n:] for row in aug]


def solve(a_rows, b, field):
    """One exact solution of A x = b, or None if inconsistent.

    Free variables are set to zero, so the solution is deterministic.
    """
    nrows = len(a_rows)
    ncols = len(a_rows[0]) if nrows else 0
    zero = field.zero
    aug = [list(a_rows[i]) + [b[i]] for i in range(nrows)]
    m, pivots = echelon(aug, field)
    # a pivot in the last column means the system is inconsistent
    if ncols in pivots:
        return None
    x = [zero] * ncols
    for r, c in enumerate(pivots):
        acc = m[r][ncols]
        for c2 in range(c + 1, ncols):
            if m[r][c2] != zero:
                acc = acc - m[r][c2] * x[c2]
        x[c] = acc
    return x


def in_span(vectors, target, field):
    """Coefficients expressing target in the span of vectors, or None."""
    if not vectors:
        return None if any(t != field.zero for t in target) else []
    cols = [[v[i] for v in vectors] for i in range(len(target))]
    return solve(cols, list(target), field)


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [[_dot(a[i], [b[t][j] for t in range(k)]) for j in range(m)]
            for i in range(n)]


def matvec(a, x):
    return [_dot(row, x) for row in a]


def _dot(row, col):
    it = iter(zip(row, col))
    a, b = next(it)
    acc = a * b
    for a, b in it:
        acc = acc + a * b
    return acc
