"""Exact linear algebra over Z/m for composite m.

Systems A x = b are solved by diagonalising A with unimodular integer row
and column operations (Smith-style reduction carried out modulo m), which
stays valid over Z/m because elementary integer matrices are invertible
over every ring.  Gaussian elimination alone would be wrong here: m is
composite in general, so pivots need not be units.
"""

from __future__ import annotations

from math import gcd


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def diagonalize(matrix, m: int, track_inverses: bool = True):
    """Bring ``matrix`` to diagonal form D = U A V over Z/m.

    Returns (D, U, V, U_inv, V_inv) as lists of lists (the inverses are None
    unless requested).  All entries are reduced into [0, m).  The diagonal
    entries need not divide one another; a diagonal form is all the solvers
    below require.
    """
    a = [[x % m for x in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = _identity(rows)
    v = _identity(cols)
    u_inv = _identity(rows) if track_inverses else None
    v_inv = _identity(cols) if track_inverses else None

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        if u_inv is not None:
            for r in u_inv:
                r[i], r[j] = r[j], r[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        if v_inv is not None:
            v_inv[i], v_inv[j] = v_inv[j], v_inv[i]

    def row_sub(i, k, q):
        # row_i -= q * row_k
        a[i] = [(x - q * y) % m for x, y in zip(a[i], a[k])]
        u[i] = [(x - q * y) % m for x, y in zip(u[i], u[k])]
        if u_inv is not None:
            for r in u_inv:
                r[k] = (r[k] + q * r[i]) % m

    def col_sub(j, k, q):
        # col_j -= q * col_k
        for r in a:
            r[j] = (r[j] - q * r[k]) % m
        for r in v:
            r[j] = (r[j] - q * r[k]) % m
        if v_inv is not None:
            v_inv[k] = [(x + q * y) % m for x, y in zip(v_inv[k], v_inv[j])]

    def find_pivot(k):
        # a unit pivot clears its row and column in a single pass, and the
        # systems built here are mostly 0/1, so try for a 1 first
        best = None
        for i in range(k, rows):
            row = a[i]
            for j in range(k, cols):
                x = row[j]
                if not x:
                    continue
                if x == 1:
                    return (i, j)
                if best is None or x < a[best[0]][best[1]]:
                    best = (i, j)
        return best

    for k in range(min(rows, cols)):
        while True:
            piv = find_pivot(k)
            if piv is None:
                break
            if piv[0] != k:
                row_swap(k, piv[0])
            if piv[1] != k:
                col_swap(k, piv[1])
            p = a[k][k]
            dirty = False
            for i in range(k + 1, rows):
                if a[i][k]:
                    row_sub(i, k, a[i][k] // p)
                    if a[i][k]:
                        dirty = True
            for j in range(k + 1, cols):
                if a[k][j]:
                    col_sub(j, k, a[k][j] // p)
                    if a[k][j]:
                        dirty = True
            if not dirty:
                break
        # pivot settled; outer entries in row/col k are zero
    return a, u, v, u_inv, v_inv


class SolutionSet:
    """All solutions of A x = b over Z/m: x0 + span of kernel generators."""

    def __init__(self, m, ncols, x0, kernel, v, y0, col_steps):
        self.m = m
        self.ncols = ncols
        self.x0 = tuple(x0)
        self.kernel = tuple(tuple(g) for g in kernel)
        self._v = v
        self._y0 = y0
        self._col_steps = col_steps  # per column: (step, count) for y-space freedom

    def count(self) -> int:
        n = 1
        for _, c in self._col_steps:
            n *= c
        return n

    def enumerate(self, cap: int = 100000):
        """Yield every solution exactly once (product form in y-space)."""
        if self.count() > cap:
            raise ValueError(f"solution set of size {self.count()} exceeds cap {cap}")
        m, v = self.m, self._v
        idx = [0] * len(self._col_steps)
        while True:
            y = [
                (y0 + step * t) % m
                for (y0, (step, _), t) in zip(self._y0, self._col_steps, idx)
            ]
            yield tuple(
                sum(v[i][j] * y[j] for j in range(len(y))) % m
                for i in range(self.ncols)
            )
            for pos in range(len(idx)):
                idx[pos] += 1
                if idx[pos] < self._col_steps[pos][1]:
                    break
                idx[pos] = 0
            else:
                return


def solve(matrix, rhs, m: int, ncols: int | None = None) -> SolutionSet | None:
    """Solve A x = b over Z/m; None when infeasible.

    ``ncols`` is needed when the system has no equations.
    """
    if m < 1:
        raise ValueError("modulus must be positive")
    rows = len(matrix)
    if ncols is None:
        if not rows:
            raise ValueError("empty system needs explicit ncols")
        ncols = len(matrix[0])
    if m == 1:
        x0 = [0] * ncols
        kernel = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
        # mod 1 everything collapses; represent the full space
        return SolutionSet(1, ncols, x0, kernel, _identity(ncols), [0] * ncols,
                           [(1, 1)] * ncols)
    # drop zero and duplicate equations up front (zero row, nonzero rhs is
    # an immediate contradiction)
    filtered, frhs = [], []
    seen = set()
    for row, bi in zip(matrix, rhs):
        key = tuple(x % m for x in row)
        if not any(key):
            if bi % m:
                return None
            continue
        full = key + (bi % m,)
        if full in seen:
            continue
        seen.add(full)
        filtered.append(list(key))
        frhs.append(bi % m)
    matrix, rhs = filtered, frhs
    rows = len(matrix)
    if not rows:
        v = _identity(ncols)
        kernel = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
        return SolutionSet(m, ncols, [0] * ncols, kernel, v, [0] * ncols,
                           [(1, m)] * ncols)

    d, u, v, _, _ = diagonalize(matrix, m, track_inverses=False)
    b = [x % m for x in rhs]
    c = [sum(u[i][j] * b[j] for j in range(rows)) % m for i in range(rows)]

    y0 = [0] * ncols
    col_steps = []
    for j in range(ncols):
        dj = d[j][j] if j < rows else 0
        cj = c[j] if j < rows else 0
        g = gcd(dj, m)
        if j < rows:
            if cj % g:
                return None
            mg = m // g
            if mg == 1:
                y0[j] = 0
            else:
                y0[j] = (cj // g) * pow(dj // g, -1, mg) % mg
        step = m // g
        count = g
        if j >= rows:
            step, count = 1, m
        col_steps.append((step, count))
    # consistency of equations beyond the column range
    for i in range(ncols, rows):
        if c[i] % m:
            return None

    x0 = [sum(v[i][j] * y0[j] for j in range(ncols)) % m for i in range(ncols)]
    kernel = []
    for j, (step, count) in enumerate(col_steps):
        if count == 1:
            continue
        gen = [(v[i][j] * step) % m for i in range(ncols)]
        if any(gen):
            kernel.append(gen)
    return SolutionSet(m, ncols, x0, kernel, v, y0, col_steps)


def kernel_generators(matrix, m: int, ncols: int | None = None):
    sol = solve(matrix, [0] * len(matrix), m, ncols=ncols)
    assert sol is not None
    return list(sol.kernel)


def span_members(gens, m: int, ncols: int, cap: int = 100000):
    """Enumerate the submodule of (Z/m)^ncols spanned by ``gens``, no duplicates."""
    if not gens:
        yield (0,) * ncols
        return
    # columns of A are the generators; col span(A) = U^{-1} col span(D)
    a = [[g[i] for g in gens] for i in range(ncols)]
    d, _, _, u_inv, _ = diagonalize(a, m)
    steps = []
    for i in range(min(ncols, len(gens))):
        g = gcd(d[i][i], m)
        steps.append((d[i][i], m // g))  # d*t for t in range(m//g): distinct multiples
    total = 1
    for _, c in steps:
        total *= c
    if total > cap:
        raise ValueError(f"span of size {total} exceeds cap {cap}")
    idx = [0] * len(steps)
    while True:
        y = [(d_ii * t) % m for (d_ii, _), t in zip(steps, idx)]
        y += [0] * (ncols - len(y))
        yield tuple(
            sum(u_inv[i][j] * y[j] for j in range(ncols)) % m for i in range(ncols)
        )
        for pos in range(len(idx)):
            idx[pos] += 1
            if idx[pos] < steps[pos][1]:
                break
            idx[pos] = 0
        else:
            return


def lexmin_coset(x0, gens, m: int) -> tuple[int, ...]:
    """Lexicographically least element of x0 + span(gens) in (Z/m)^n.

    Greedy column sweep: at column j the reachable values form
    x[j] + d*Z/m for d = gcd(m, generators at j), because the generators
    are re-closed against each processed column before moving on.
    """
    n = len(x0)
    x = [v % m for v in x0]
    work = [list(g) for g in gens if any(v % m for v in g)]
    for j in range(n):
        d = m
        for g in work:
            d = gcd(d, g[j] % m)
        if d == m:
            continue  # no freedom at this coordinate
        # combination vec with vec[j] == d
        vec = [0] * n
        cur = m
        for g in work:
            gg, s, t = ext_gcd(cur, g[j] % m)
            vec = [(s * a + t * b) % m for a, b in zip(vec, g)]
            cur = gg
            if cur == d:
                break
        assert vec[j] % m == d
        r = x[j] % d
        q = (x[j] - r) // d
        x = [(a - q * b) % m for a, b in zip(x, vec)]
        new_work = []
        for g in work:
            q = (g[j] % m) // d
            ng = [(a - q * b) % m for a, b in zip(g, vec)]
            if any(ng):
                new_work.append(ng)
        ann = [(m // d) * b % m for b in vec]
        if any(ann):
            new_work.append(ann)
        work = new_work
    return tuple(x)
