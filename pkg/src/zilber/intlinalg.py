"""Exact integer linear algebra: Smith normal form, kernels, spans, subquotients.

All matrices are lists of lists of Python ints (row-major).  Everything here
is exact; there is no floating point anywhere in this package.
"""

from __future__ import annotations


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def dims(M):
    return len(M), (len(M[0]) if M else 0)


def mat_copy(M):
    return [row[:] for row in M]


def mat_neg(M):
    return [[-x for x in row] for row in M]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(k, M):
    return [[k * x for x in row] for row in M]


def shape_ok(M, r, c):
    """Shape check tolerating the ambiguity of 0-row / 0-column matrices."""
    if r == 0:
        return M == [] or (len(M) == 0)
    if len(M) != r:
        return False
    return all(len(row) == c for row in M)


def mat_mul(A, B):
    ra, ca = dims(A)
    rb, cb = dims(B)
    if ra == 0:
        return []
    if ca != rb:
        if ca == 0 and rb == 0:
            return zeros(ra, cb)
        if cb == 0:
            return [[] for _ in range(ra)]
        raise ValueError(f"dimension mismatch in mat_mul: {ra}x{ca} times {rb}x{cb}")
    out = zeros(ra, cb)
    for i in range(ra):
        Ai = A[i]
        Oi = out[i]
        for k in range(ca):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(cb):
                    Oi[j] += a * Bk[j]
    return out


def mat_mul_shaped(A, ashape, B, bshape):
    """Product with explicit shapes, so 0-row/0-column matrices are handled
    unambiguously."""
    ra, ca = ashape
    rb, cb = bshape
    if ca != rb:
        raise ValueError("dimension mismatch in mat_mul_shaped")
    out = zeros(ra, cb)
    for i in range(ra):
        Ai = A[i]
        Oi = out[i]
        for k in range(ca):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(cb):
                    Oi[j] += a * Bk[j]
    return out


def mat_vec(M, v):
    return [sum(a * b for a, b in zip(row, v)) for row in M]


def transpose(M):
    r, c = dims(M)
    return [[M[i][j] for i in range(r)] for j in range(c)]


def mat_eq(A, B):
    return dims(A) == dims(B) and all(ra == rb for ra, rb in zip(A, B))


def is_zero(M):
    return all(all(x == 0 for x in row) for row in M)


def hstack(*mats):
    """Concatenate matrices horizontally.  All must have the same row count."""
    mats = [M for M in mats if dims(M)[1] > 0 or dims(M)[0] > 0]
    if not mats:
        return []
    rows = len(mats[0])
    return [sum((M[i] for M in mats), []) for i in range(rows)]


def vstack(*mats):
    out = []
    for M in mats:
        out.extend(mat_copy(M))
    return out


def columns(M):
    r, c = dims(M)
    return [[M[i][j] for i in range(r)] for j in range(c)]


def from_columns(cols, rows=None):
    """Build a matrix whose columns are the given vectors."""
    if not cols:
        return [[] for _ in range(rows)] if rows else []
    r = len(cols[0])
    return [[col[i] for col in cols] for i in range(r)]


def kron(A, B):
    """Kronecker product: (A ⊗ B)[i*rb+k][j*cb+l] = A[i][j]*B[k][l]."""
    ra, ca = dims(A)
    rb, cb = dims(B)
    out = zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            a = A[i][j]
            if a:
                for k in range(rb):
                    for l in range(cb):
                        out[i * rb + k][j * cb + l] = a * B[k][l]
    return out


def _smith_with_inverses(M):
    """Return (U, S, V, Uinv, Vinv) with U*M*V = S in Smith normal form.

    Pivots are chosen with minimal absolute value to bound entry growth;
    diagonal entries are nonnegative and form a divisibility chain.
    """
    S = mat_copy(M)
    r, c = dims(S)
    U, Uinv = identity(r), identity(r)
    V, Vinv = identity(c), identity(c)

    def row_swap(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]

    def col_swap(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def row_add(i, j, k):
        # row_i += k * row_j ; Uinv column j -= k * column i
        S[i] = [a + k * b for a, b in zip(S[i], S[j])]
        U[i] = [a + k * b for a, b in zip(U[i], U[j])]
        for row in Uinv:
            row[j] -= k * row[i]

    def col_add(i, j, k):
        # col_i += k * col_j ; Vinv row j -= k * row i
        for row in S:
            row[i] += k * row[j]
        for row in V:
            row[i] += k * row[j]
        Vinv[j] = [a - k * b for a, b in zip(Vinv[j], Vinv[i])]

    def row_negate(i):
        S[i] = [-a for a in S[i]]
        U[i] = [-a for a in U[i]]
        for row in Uinv:
            row[i] = -row[i]

    def min_pivot(t):
        pivot = None
        best = None
        for i in range(t, r):
            for j in range(t, c):
                a = S[i][j]
                if a != 0 and (best is None or abs(a) < best):
                    best = abs(a)
                    pivot = (i, j)
                    if best == 1:
                        return pivot
        return pivot

    n = min(r, c)
    for t in range(n):
        while True:
            # re-pick a pivot of minimal absolute value every round: the
            # pivot magnitude never increases, so entries stay bounded and
            # each dirty round strictly shrinks it, forcing termination
            pivot = min_pivot(t)
            if pivot is None:
                break
            if pivot != (t, t):
                row_swap(t, pivot[0])
                col_swap(t, pivot[1])
            d = S[t][t]
            dirty = False
            for i in range(t + 1, r):
                if S[i][t]:
                    row_add(i, t, -(S[i][t] // d))
                    if S[i][t]:
                        dirty = True
            for j in range(t + 1, c):
                if S[t][j]:
                    col_add(j, t, -(S[t][j] // d))
                    if S[t][j]:
                        dirty = True
            if dirty:
                continue
            # row and column t are clear; a unit pivot divides everything
            if d == 1 or d == -1:
                break
            # enforce that d divides the trailing block (adding the
            # offending row makes the next round produce a remainder
            # smaller than |d|)
            bad = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if S[i][j] % d:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if S[t][t] < 0:
            row_negate(t)
        if S[t][t] == 0:
            break

    return U, S, V, Uinv, Vinv


def smith_normal_form(M):
    """Smith normal form of an integer matrix.

    Returns (U, S, V) with U*M*V = S, U and V unimodular, S diagonal with
    nonnegative entries d_1 | d_2 | ... .
    """
    U, S, V, _, _ = _smith_with_inverses(M)
    return U, S, V


def snf_diagonal(M):
    U, S, V = smith_normal_form(M)
    n = min(dims(S))
    return [S[i][i] for i in range(n)]


def rank(M):
    return sum(1 for d in snf_diagonal(M) if d != 0)


def kernel_basis(M, ncols=None):
    """Basis (as columns) of the integer kernel of M; the kernel is saturated,
    so this is a genuine ℤ-basis.

    ncols disambiguates the column count when M has no rows (the empty
    list), in which case the kernel is all of ℤ^ncols."""
    r, c = dims(M)
    if r == 0 and ncols is not None:
        c = ncols
    if c == 0:
        return []
    if r == 0:
        return [[1 if i == j else 0 for i in range(c)] for j in range(c)]
    U, S, V, _, _ = _smith_with_inverses(M)
    n = min(r, c)
    ker_cols = [j for j in range(c) if j >= n or S[j][j] == 0]
    return [[V[i][j] for i in range(c)] for j in ker_cols]


def image_basis(M):
    """Basis (as column vectors) of the column span of M."""
    r, c = dims(M)
    U, S, V, Uinv, _ = _smith_with_inverses(M)
    n = min(r, c)
    cols = []
    for j in range(n):
        d = S[j][j]
        if d:
            cols.append([Uinv[i][j] * d for i in range(r)])
    return cols


def solve(M, b):
    """One integer solution x of M x = b, or None if none exists."""
    X = solve_matrix(M, from_columns([b], rows=len(M)))
    if X is None:
        return None
    return [row[0] for row in X]


def solve_matrix(M, B):
    """Integer solution X of M X = B (B given columnwise), or None."""
    r, c = dims(M)
    rb, cb = dims(B)
    if rb != r:
        raise ValueError("row count mismatch in solve_matrix")
    U, S, V, _, _ = _smith_with_inverses(M)
    C = mat_mul(U, B)
    n = min(r, c)
    Y = zeros(c, cb)
    for j in range(cb):
        for i in range(r):
            d = S[i][i] if i < n else 0
            ci = C[i][j]
            if d == 0:
                if ci != 0:
                    return None
            else:
                if ci % d:
                    return None
                if i < c:
                    Y[i][j] = ci // d
    return mat_mul(V, Y)


def in_span(gens, v):
    """Is v in the column span of gens (over ℤ)?"""
    return solve(gens, v) is not None


def span_contains(A, B):
    """Is every column of B in the integer column span of A?"""
    rb, cb = dims(B)
    if cb == 0:
        return True
    return solve_matrix(A, B) is not None


def spans_equal(A, B):
    return span_contains(A, B) and span_contains(B, A)


def inverse_unimodular(M):
    """Exact inverse of a unimodular integer matrix."""
    n, c = dims(M)
    if n != c:
        raise ValueError("not square")
    X = solve_matrix(M, identity(n))
    if X is None:
        raise ValueError("matrix is not unimodular")
    if not mat_eq(mat_mul(M, X), identity(n)):
        raise ValueError("matrix is not unimodular")
    return X


class Subquotient:
    """A subquotient Z/B of ℤ^n, with generator lifts and coordinates.

    Z and B are given by integer generator columns; B must be contained in
    the span of Z.  The quotient is put in invariant-factor form: it is
    ⊕_i ℤ/orders[i] with the convention order 0 = ℤ, and ``lifts`` holds an
    ambient representative for each cyclic summand generator.
    """

    def __init__(self, ambient_dim, z_gens, b_gens):
        self.ambient_dim = ambient_dim
        z_gens = _normalize_gens(z_gens, ambient_dim)
        b_gens = _normalize_gens(b_gens, ambient_dim)
        zb = image_basis(z_gens) if dims(z_gens)[1] else []
        self._zbasis = from_columns(zb, rows=ambient_dim) if zb else [[] for _ in range(ambient_dim)]
        r = len(zb)
        self._zrank = r
        if dims(b_gens)[1]:
            R = solve_matrix(self._zbasis, b_gens) if r else None
            if r == 0:
                if not is_zero(b_gens):
                    raise ValueError("B is not contained in Z")
                R = zeros(0, dims(b_gens)[1])
            if R is None:
                raise ValueError("B is not contained in Z")
        else:
            R = zeros(r, 0)
        U, S, V, Uinv, _ = _smith_with_inverses(R)
        n = min(dims(S)) if R else 0
        diag = [S[i][i] for i in range(n)] + [0] * (r - n)
        kept = [i for i in range(r) if diag[i] != 1]
        self.orders = [diag[i] for i in kept]
        self._U = U
        self._kept = kept
        # ambient lift of generator i: zbasis * (Uinv column i)
        self.lifts = []
        for i in kept:
            col = [Uinv[j][i] for j in range(r)]
            self.lifts.append(mat_vec(self._zbasis, col) if r else [0] * ambient_dim)
        self.free_rank = sum(1 for o in self.orders if o == 0)
        self.torsion = [o for o in self.orders if o >= 2]

    @property
    def ngens(self):
        return len(self.orders)

    def invariants(self):
        return self.free_rank, tuple(self.torsion)

    def contains(self, v):
        return self._zrank > 0 and solve(self._zbasis, v) is not None or \
            (self._zrank == 0 and all(x == 0 for x in v))

    def coords(self, v):
        """Coordinates of the class of v on the cyclic generators (reduced
        mod torsion orders).  Raises ValueError if v is not in Z."""
        if self._zrank == 0:
            if any(x != 0 for x in v):
                raise ValueError("vector not in the subgroup Z")
            return []
        c = solve(self._zbasis, v)
        if c is None:
            raise ValueError("vector not in the subgroup Z")
        y = mat_vec(self._U, c)
        out = []
        for pos, i in enumerate(self._kept):
            o = self.orders[pos]
            out.append(y[i] % o if o else y[i])
        return out

    def is_zero_class(self, v):
        return all(x == 0 for x in self.coords(v))

    def reduce(self, coords):
        return [c % o if o else c for c, o in zip(coords, self.orders)]


def _normalize_gens(gens, ambient_dim):
    """Accept a matrix or a list of column vectors; return a matrix with
    ambient_dim rows."""
    if not gens:
        return [[] for _ in range(ambient_dim)]
    if isinstance(gens[0], list) and len(gens) == ambient_dim and \
            (not gens[0] or isinstance(gens[0][0], int)):
        return gens
    raise ValueError("generators must be given as an ambient_dim-row matrix")
