"""Exact linear algebra over Q and Z on lists of lists.

Matrices are row-major ``list[list]``; nothing here touches floats.
"""

from __future__ import annotations

from fractions import Fraction


def shape(A):
    return len(A), (len(A[0]) if A else 0)


def transpose(A):
    return [list(col) for col in zip(*A)]


def matmul(A, B):
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def _rref(A):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    M = [[Fraction(x) for x in row] for row in A]
    rows, cols = shape(M)
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M, pivots


def rank(A) -> int:
    if not A or not A[0]:
        return 0
    return len(_rref(A)[1])


def det(A) -> Fraction:
    """Determinant of a square matrix by fraction-exact elimination."""
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            d = -d
        d *= M[c][c]
        for i in range(c + 1, n):
            f = M[i][c] / M[c][c]
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return d


def solve(A, b):
    """Unique solution of the square system A x = b, or None if singular."""
    n = len(A)
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    M, pivots = _rref(aug)
    if pivots != list(range(n)):
        return None
    return [M[i][n] for i in range(n)]


def nullspace(A, ncols: int | None = None):
    """Basis (list of vectors) of the rational null space of A."""
    cols = ncols if ncols is not None else shape(A)[1]
    if not A:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    M, pivots = _rref(A)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -M[r][f]
        basis.append(v)
    return basis


def _xgcd(a: int, b: int):
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def integer_kernel_basis(A):
    """Z-basis of {m in Z^d : A m = 0} for an integer matrix A (n x d).

    Column reduction A V = [H | 0] with V unimodular; the trailing columns of
    V span the kernel lattice, which is therefore saturated.  Returned as a
    list of column vectors in row Hermite normal form (canonical).
    """
    rows, d = shape(A)
    M = [list(map(int, row)) for row in A]
    V = [[int(i == j) for j in range(d)] for i in range(d)]

    def colop(j, k, a, b, c, e):
        # (col_j, col_k) <- (a col_j + b col_k, c col_j + e col_k)
        for T in (M, V):
            for row in T:
                x, y = row[j], row[k]
                row[j], row[k] = a * x + b * y, c * x + e * y

    piv = 0
    for r in range(rows):
        if piv >= d:
            break
        for k in range(piv + 1, d):
            x, y = M[r][piv], M[r][k]
            if y == 0:
                continue
            g, s, t = _xgcd(x, y)
            colop(piv, k, s, t, -y // g, x // g)
        if M[r][piv] != 0:
            piv += 1
    kernel = [[V[i][j] for i in range(d)] for j in range(piv, d)]
    return hermite_normal_form(kernel)


def hermite_normal_form(rows):
    """Row-style Hermite normal form of an integer matrix (zero rows dropped).

    Pivots are positive and entries above each pivot lie in [0, pivot).
    """
    M = [list(map(int, r)) for r in rows]
    if not M:
        return []
    nrows, ncols = shape(M)
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        for i in range(r + 1, nrows):
            if M[i][c] == 0:
                continue
            g, s, t = _xgcd(M[r][c], M[i][c])
            a, b = M[r][c] // g, M[i][c] // g
            top = [s * x + t * y for x, y in zip(M[r], M[i])]
            bot = [-b * x + a * y for x, y in zip(M[r], M[i])]
            M[r], M[i] = top, bot
        if M[r][c] == 0:
            continue
        if M[r][c] < 0:
            M[r] = [-x for x in M[r]]
        for i in range(r):
            q = M[i][c] // M[r][c]
            if q:
                M[i] = [x - q * y for x, y in zip(M[i], M[r])]
        r += 1
    return [row for row in M if any(row)]


def smith_normal_form(A):
    """Diagonal of the Smith normal form (the elementary divisors, incl. zeros).

    Returns the list of min(n, m) diagonal entries d_1 | d_2 | ... >= 0.
    """
    M = [list(map(int, row)) for row in A]
    nrows, ncols = shape(M)
    diag = []
    t = 0
    while t < min(nrows, ncols):
        entries = [(abs(M[i][j]), i, j) for i in range(t, nrows)
                   for j in range(t, ncols) if M[i][j] != 0]
        if not entries:
            break
        _, i, j = min(entries)
        M[t], M[i] = M[i], M[t]
        for row in M:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            for i in range(t + 1, nrows):
                if M[i][t]:
                    q = M[i][t] // M[t][t]
                    M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                    if M[i][t]:
                        M[t], M[i] = M[i], M[t]
                        done = False
            for j in range(t + 1, ncols):
                if M[t][j]:
                    q = M[t][j] // M[t][t]
                    for row in M:
                        row[j] -= q * row[t]
                    if M[t][j]:
                        for row in M:
                            row[t], row[j] = row[j], row[t]
                        done = False
            if not done:
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols)
                        if M[i][j] % M[t][t]), None)
            if bad is None:
                break
            M[t] = [a + b for a, b in zip(M[t], M[bad[0]])]
        diag.append(abs(M[t][t]))
        t += 1
    diag.extend([0] * (min(nrows, ncols) - len(diag)))
    return diag
