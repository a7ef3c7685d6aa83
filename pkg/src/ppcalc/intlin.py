"""Exact integer matrix algebra.

Hermite and Smith normal forms, linear system solving over Z and modulo
per-row moduli, and arithmetic on integer lattices represented by their
row spans.  Everything runs on plain Python ints, so there is no overflow
and no floating point anywhere.

Matrices are lists of lists of ints, row major.  Lattices are given by a
list of generating rows; `hnf` turns any generating set into the unique
canonical basis (positive pivots, entries above a pivot reduced into
[0, pivot)), which makes lattice equality a list comparison.
"""

from __future__ import annotations


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and g == s*a + t*b."""
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


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> list[list[int]]:
    return [[0] * cols for _ in range(rows)]


def transpose(mat: list[list[int]], width: int | None = None) -> list[list[int]]:
    if not mat:
        return [[] for _ in range(width)] if width else []
    return [list(col) for col in zip(*mat)]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    if not a:
        return []
    cols_b = len(b[0]) if b else 0
    bt = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] or [0] * cols_b
            for row in a]


def mat_vec(mat: list[list[int]], vec: list[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, vec)) for row in mat]


def vec_mat(vec: list[int], mat: list[list[int]]) -> list[int]:
    if not mat:
        return []
    out = [0] * len(mat[0])
    for coeff, row in zip(vec, mat):
        if coeff:
            for j, entry in enumerate(row):
                out[j] += coeff * entry
    return out


def hnf(rows: list[list[int]], width: int) -> list[list[int]]:
    """Canonical row-style Hermite normal form of the span of `rows`.

    Returns the unique basis with strictly increasing pivot columns,
    positive pivots, and entries above each pivot reduced mod the pivot.
    Zero rows are dropped; the zero lattice yields [].
    """
    work = [list(r) for r in rows if any(r)]
    basis: list[list[int]] = []
    k = 0
    for j in range(width):
        pivot_row = None
        for i in range(k, len(work)):
            if work[i][j]:
                if pivot_row is None:
                    pivot_row = i
                else:
                    a, b = work[pivot_row][j], work[i][j]
                    g, s, t = xgcd(a, b)
                    u, v = a // g, b // g
                    rp, ri = work[pivot_row], work[i]
                    for c in range(j, width):
                        rp[c], ri[c] = s * rp[c] + t * ri[c], u * ri[c] - v * rp[c]
        if pivot_row is None:
            continue
        work[k], work[pivot_row] = work[pivot_row], work[k]
        if work[k][j] < 0:
            work[k] = [-x for x in work[k]]
        piv = work[k][j]
        for i in range(k):
            q = work[i][j] // piv
            if q:
                work[i] = [x - q * y for x, y in zip(work[i], work[k])]
        k += 1
    del work[k:]
    basis = [row for row in work if any(row)]
    return basis


class SnfResult:
    """Diagonalization U * M * V = D with d_1 | d_2 | ... and transforms.

    `vinv` is the exact inverse of `v`; it is maintained during the
    reduction so callers can convert coordinates in both directions.
    """

    __slots__ = ("diag", "u", "v", "vinv", "rank", "rows", "cols")

    def __init__(self, diag, u, v, vinv, rank, rows, cols):
        self.diag = diag
        self.u = u
        self.v = v
        self.vinv = vinv
        self.rank = rank
        self.rows = rows
        self.cols = cols


def snf(mat: list[list[int]]) -> SnfResult:
    """Smith normal form with full transform tracking."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    a = [list(r) for r in mat]
    u = identity(m)
    v = identity(n)
    vinv = identity(n)

    def row_combine(i1, i2, col):
        p, q = a[i1][col], a[i2][col]
        if p and q % p == 0:
            f = q // p
            a[i2] = [x - f * y for x, y in zip(a[i2], a[i1])]
            u[i2] = [x - f * y for x, y in zip(u[i2], u[i1])]
            return
        g, s, t = xgcd(p, q)
        x, y = p // g, q // g
        r1, r2 = a[i1], a[i2]
        for c in range(n):
            r1[c], r2[c] = s * r1[c] + t * r2[c], x * r2[c] - y * r1[c]
        u1, u2 = u[i1], u[i2]
        for c in range(m):
            u1[c], u2[c] = s * u1[c] + t * u2[c], x * u2[c] - y * u1[c]

    def col_combine(j1, j2, row):
        p, q = a[row][j1], a[row][j2]
        if p and q % p == 0:
            f = q // p
            for r in a:
                r[j2] -= f * r[j1]
            for r in v:
                r[j2] -= f * r[j1]
            w1, w2 = vinv[j1], vinv[j2]
            for c in range(n):
                w1[c] += f * w2[c]
            return
        g, s, t = xgcd(p, q)
        x, y = p // g, q // g
        for r in a:
            r[j1], r[j2] = s * r[j1] + t * r[j2], x * r[j2] - y * r[j1]
        for r in v:
            r[j1], r[j2] = s * r[j1] + t * r[j2], x * r[j2] - y * r[j1]
        # inverse column op acts on vinv rows: F^-1 = [[x, y], [-t, s]]
        w1, w2 = vinv[j1], vinv[j2]
        for c in range(n):
            w1[c], w2[c] = x * w1[c] + y * w2[c], s * w2[c] - t * w1[c]

    t = 0
    limit = min(m, n)
    while t < limit:
        # pick the nonzero entry of smallest magnitude as pivot
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                e = row[j]
                if e and (best is None or abs(e) < best[0]):
                    best = (abs(e), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            a[bi], a[t] = a[t], a[bi]
            u[bi], u[t] = u[t], u[bi]
        if bj != t:
            for r in a:
                r[bj], r[t] = r[t], r[bj]
            for r in v:
                r[bj], r[t] = r[t], r[bj]
            vinv[bj], vinv[t] = vinv[t], vinv[bj]
        while True:
            for i in range(t + 1, m):
                if a[i][t]:
                    row_combine(t, i, t)
            for j in range(t + 1, n):
                if a[t][j]:
                    col_combine(t, j, t)
            if all(a[i][t] == 0 for i in range(t + 1, m)) and \
                    all(a[t][j] == 0 for j in range(t + 1, n)):
                break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        # enforce divisibility d_t | a[i][j] for the trailing block
        fixed = False
        d = a[t][t]
        for i in range(t + 1, m):
            if fixed:
                break
            for j in range(t + 1, n):
                if a[i][j] % d:
                    for c in range(n):
                        a[t][c] += a[i][c]
                    for c in range(m):
                        u[t][c] += u[i][c]
                    fixed = True
                    break
        if fixed:
            continue
        t += 1
    diag = [a[i][i] for i in range(limit)]
    rank = sum(1 for d in diag if d)
    return SnfResult(diag, u, v, vinv, rank, m, n)


def solve(mat: list[list[int]], rhs: list[int]) -> list[int] | None:
    """One integer solution x of mat @ x == rhs, or None."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    if m == 0:
        return [0] * n
    if n == 0:
        return [] if all(b == 0 for b in rhs) else None
    res = snf(mat)
    c = mat_vec(res.u, rhs)
    y = [0] * n
    for i in range(m):
        d = res.diag[i] if i < len(res.diag) else 0
        if d:
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    return mat_vec(res.v, y)


def solve_mod(mat: list[list[int]], rhs: list[int],
              moduli: list[int]) -> list[int] | None:
    """Solve mat @ x == rhs where row i holds modulo moduli[i] (0 = exact).

    Returns the x-part of a solution of the augmented exact system, or
    None when no solution exists.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    aug = [list(row) for row in mat]
    for i, md in enumerate(moduli):
        if md:
            col = [0] * m
            col[i] = md
            for r, e in zip(aug, col):
                r.append(e)
    sol = solve(aug, rhs)
    if sol is None:
        return None
    return sol[:n]


def solve_mod_prime(mat: list[list[int]], rhs: list[int], p: int) -> list[int] | None:
    """Particular solution of mat @ x == rhs over GF(p), or None.

    Fast path used when every congruence shares one prime modulus.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    a = [[e % p for e in row] + [rhs[i] % p] for i, row in enumerate(mat)]
    pivots = []
    r = 0
    for j in range(n):
        piv = None
        for i in range(r, m):
            if a[i][j]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][j], p - 2, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(m):
            if i != r and a[i][j]:
                f = a[i][j]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(j)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if a[i][n]:
            return None
    x = [0] * n
    for i, j in enumerate(pivots):
        x[j] = a[i][n]
    return x


def _valuation(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def factorize(n: int) -> dict[int, int]:
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def solve_mod_ppow(mat, rhs, p, e):
    """Particular solution of mat @ x == rhs (mod p^e), or None.

    Gaussian elimination over Z/p^e with full minimal-valuation
    pivoting: the pivot at each step is an entry of least p-valuation in
    the whole active submatrix, so every later entry in a pivot row is
    at least as divisible as the pivot and free variables can be 0.
    """
    m = p ** e
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    a = [[x % m for x in row] + [rhs[i] % m] for i, row in enumerate(mat)]
    col_order = list(range(ncols))
    pivots = []
    r = 0
    while r < nrows and r < ncols:
        best = None
        for i in range(r, nrows):
            row = a[i]
            for jj in range(r, ncols):
                entry = row[jj]
                if entry:
                    val = _valuation(entry, p)
                    if best is None or val < best[0]:
                        best = (val, i, jj)
                        if val == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        val, bi, bj = best
        a[r], a[bi] = a[bi], a[r]
        if bj != r:
            col_order[r], col_order[bj] = col_order[bj], col_order[r]
            for row in a:
                row[r], row[bj] = row[bj], row[r]
        step = p ** val
        unit = a[r][r] // step
        uinv = pow(unit, -1, m)
        a[r] = [(x * uinv) % m for x in a[r]]
        for i in range(r + 1, nrows):
            if a[i][r]:
                f = a[i][r] // step
                row_i, row_r = a[i], a[r]
                a[i] = [(x - f * y) % m for x, y in zip(row_i, row_r)]
        pivots.append((r, val))
        r += 1
    for i in range(r, nrows):
        if a[i][ncols]:
            return None
    x_perm = [0] * ncols
    for ri, val in reversed(pivots):
        acc = a[ri][ncols]
        row = a[ri]
        for c in range(ri + 1, ncols):
            if row[c] and x_perm[c]:
                acc -= row[c] * x_perm[c]
        acc %= m
        step = p ** val
        if acc % step:
            return None
        x_perm[ri] = acc // step
    x = [0] * ncols
    for pos, j in enumerate(col_order):
        x[j] = x_perm[pos]
    return x


def _crt_pair(a1, m1, a2, m2):
    g, s, t = xgcd(m1, m2)
    return (a1 + m1 * ((a2 - a1) // g * s % (m2 // g))) % (m1 * m2)


def solve_congruences(mat, rhs, moduli):
    """Solve mat @ x == rhs with a positive modulus per row.

    Decomposes into prime-power systems (scaling rows whose modulus has
    a smaller exponent), solves each by valuation elimination, and glues
    the solutions with the Chinese remainder theorem.
    """
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    if nrows == 0:
        return [0] * ncols
    if any(md <= 0 for md in moduli):
        return solve_mod(mat, rhs, moduli)
    primes = {}
    factored = [factorize(md) for md in moduli]
    for fac in factored:
        for p, e in fac.items():
            primes[p] = max(primes.get(p, 0), e)
    solution = None
    modulus_so_far = 1
    for p in sorted(primes):
        emax = primes[p]
        big = p ** emax
        rows_p, rhs_p = [], []
        for i in range(nrows):
            e_i = factored[i].get(p, 0)
            if e_i == 0:
                continue
            scale = p ** (emax - e_i)
            rows_p.append([x * scale for x in mat[i]])
            rhs_p.append(rhs[i] * scale)
        x_p = solve_mod_ppow(rows_p, rhs_p, p, emax)
        if x_p is None:
            return None
        if solution is None:
            solution = x_p
        else:
            solution = [_crt_pair(a, modulus_so_far, b, big)
                        for a, b in zip(solution, x_p)]
        modulus_so_far *= big
    return solution


def kernel(mat: list[list[int]], width: int) -> list[list[int]]:
    """Basis rows of {x in Z^width : mat @ x == 0}."""
    m = len(mat)
    if m == 0:
        return identity(width)
    aug = []
    cols = transpose(mat)
    for i in range(width):
        row = list(cols[i]) if cols else [0] * m
        row += [1 if j == i else 0 for j in range(width)]
        aug.append(row)
    h = hnf(aug, m + width)
    return [row[m:] for row in h if not any(row[:m])]


def left_kernel(mat: list[list[int]], height: int) -> list[list[int]]:
    """Basis rows of {t in Z^height : t @ mat == 0}."""
    if not mat or not mat[0]:
        return identity(height)
    return kernel(transpose(mat), height)


# ---------------------------------------------------------------------------
# lattice arithmetic (lattices as canonical HNF row bases)

def lat_canon(rows: list[list[int]], width: int) -> list[list[int]]:
    return hnf(rows, width)


def lat_sum(l1, l2, width):
    return hnf(list(l1) + list(l2), width)


def lat_member(lat: list[list[int]], vec: list[int]) -> bool:
    """Is vec in the row span of lat (over Z)?"""
    if not lat:
        return not any(vec)
    return solve(transpose(lat), list(vec)) is not None


def lat_contains(big, small) -> bool:
    return all(lat_member(big, row) for row in small)


def lat_eq(l1, l2, width) -> bool:
    return hnf(l1, width) == hnf(l2, width)


def lat_intersect(l1, l2, width):
    """Canonical basis of the intersection of two row-span lattices."""
    if not l1 or not l2:
        return []
    stacked = [list(r1) + list(r2) for r1, r2 in
               zip(transpose(l1), transpose([[-e for e in row] for row in l2]))]
    ker = kernel(stacked, len(l1) + len(l2))
    rows = [vec_mat(coeffs[:len(l1)], l1) for coeffs in ker]
    return hnf(rows, width)


def lat_scale(lat, c):
    return [[c * e for e in row] for row in lat]


def lat_project(lat, coords, width_out):
    """Projection of a lattice to a coordinate subset (still a lattice)."""
    rows = [[row[c] for c in coords] for row in lat]
    return hnf(rows, width_out)


def quotient_invariants(sup: list[list[int]], sub: list[list[int]],
                        width: int) -> tuple[int, list[int]]:
    """Structure of the quotient group sup/sub of two nested lattices.

    Returns (free_rank, divisors) with divisors the cyclic orders > 1 in
    increasing divisibility order.  Requires sub to be contained in sup.
    """
    sup = hnf(sup, width)
    if not sup:
        return 0, []
    if not sub:
        return len(sup), []
    supt = transpose(sup)
    coeff_rows = []
    for row in sub:
        c = solve(supt, list(row))
        if c is None:
            raise ValueError("sub lattice not contained in sup lattice")
        coeff_rows.append(c)
    res = snf(coeff_rows)
    divisors = [d for d in res.diag if d not in (0, 1)]
    free = len(sup) - res.rank
    return free, sorted(divisors)
