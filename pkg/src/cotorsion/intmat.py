"""Exact integer matrix algorithms: Hermite and Smith normal forms, kernels.

Conventions used throughout the package:

* matrices are lists (or tuples) of rows of Python ints;
* a lattice is the Z-span of the rows of its basis matrix;
* the row Hermite normal form is the canonical basis: echelon shape,
  positive pivots, entries above a pivot reduced into [0, pivot).

Two lattices are equal iff their HNF bases are identical, which is what
makes set-level equality of lattices, ideals and modules decidable.
"""

from __future__ import annotations

from .arith import xgcd

Matrix = list[list[int]]


def _eliminate(rows: Matrix, trans: Matrix | None, pr: int, i: int, col: int) -> None:
    """Unimodular row op zeroing rows[i][col] against the pivot row pr."""
    a, b = rows[pr][col], rows[i][col]
    if b == 0:
        return
    if a == 0:
        rows[pr], rows[i] = rows[i], rows[pr]
        if trans is not None:
            trans[pr], trans[i] = trans[i], trans[pr]
        return
    if b % a == 0:
        # plain subtraction keeps the pivot row untouched
        q = b // a
        rows[i] = [v - q * w for v, w in zip(rows[i], rows[pr])]
        if trans is not None:
            trans[i] = [v - q * w for v, w in zip(trans[i], trans[pr])]
        return
    g, x, y = xgcd(a, b)
    ag, bg = a // g, b // g
    rp, ri = rows[pr], rows[i]
    rows[pr] = [x * p + y * q for p, q in zip(rp, ri)]
    rows[i] = [-bg * p + ag * q for p, q in zip(rp, ri)]
    if trans is not None:
        tp, ti = trans[pr], trans[i]
        trans[pr] = [x * p + y * q for p, q in zip(tp, ti)]
        trans[i] = [-bg * p + ag * q for p, q in zip(tp, ti)]


def _hnf_inplace(rows: Matrix, trans: Matrix | None) -> int:
    """Reduce rows to canonical HNF in place; returns the rank."""
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        if trans is not None:
            trans[rank], trans[pivot] = trans[pivot], trans[rank]
        for i in range(rank + 1, len(rows)):
            _eliminate(rows, trans, rank, i, col)
        if rows[rank][col] < 0:
            rows[rank] = [-v for v in rows[rank]]
            if trans is not None:
                trans[rank] = [-v for v in trans[rank]]
        # reduce the entries above the new pivot
        p = rows[rank][col]
        for i in range(rank):
            q = rows[i][col] // p
            if q:
                rows[i] = [v - q * w for v, w in zip(rows[i], rows[rank])]
                if trans is not None:
                    trans[i] = [v - q * w for v, w in zip(trans[i], trans[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def row_hnf(rows) -> Matrix:
    """Canonical row HNF of the lattice spanned by ``rows``; zero rows dropped."""
    work = [list(r) for r in rows]
    rank = _hnf_inplace(work, None)
    return work[:rank]


def row_hnf_with_transform(rows) -> tuple[Matrix, Matrix]:
    """(H, U) with U unimodular, U * rows = H, H in HNF with zero rows last."""
    work = [list(r) for r in rows]
    trans = [[int(i == j) for j in range(len(work))] for i in range(len(work))]
    _hnf_inplace(work, trans)
    return work, trans


def solve_in_lattice(hnf_rows, target) -> list[int] | None:
    """Coefficients c with c * hnf_rows == target, or None if target is outside.

    ``hnf_rows`` must be an echelonized basis (output of row_hnf).
    """
    v = list(target)
    coeffs = [0] * len(hnf_rows)
    for idx, row in enumerate(hnf_rows):
        col = next((j for j, w in enumerate(row) if w), None)
        if col is None:
            continue
        if v[col] % row[col] != 0:
            return None
        q = v[col] // row[col]
        if q:
            coeffs[idx] = q
            v = [a - q * b for a, b in zip(v, row)]
    if any(v):
        return None
    return coeffs


def in_lattice(hnf_rows, target) -> bool:
    return solve_in_lattice(hnf_rows, target) is not None


def lattice_contains(hnf_outer, hnf_inner) -> bool:
    """Whether the span of hnf_inner is contained in the span of hnf_outer."""
    return all(in_lattice(hnf_outer, row) for row in hnf_inner)


def left_kernel(rows) -> Matrix:
    """Basis of {x : x * rows = 0}, via the HNF transform."""
    hnf, trans = row_hnf_with_transform(rows)
    return [trans[i] for i in range(len(hnf)) if not any(hnf[i])]


def lattice_intersect(rows1, rows2) -> Matrix:
    """HNF basis of the intersection of the two row lattices (same ambient dim)."""
    n = len(rows1[0])
    stacked = [list(r) + list(r) for r in rows1]
    stacked += [list(r) + [0] * n for r in rows2]
    hnf = row_hnf(stacked)
    out = [row[n:] for row in hnf if not any(row[:n])]
    return row_hnf(out)


def smith_normal_form(rows) -> tuple[Matrix, Matrix, Matrix]:
    """(D, U, V) with U * rows * V = D diagonal, d1 | d2 | ..., U, V unimodular."""
    m = len(rows)
    n = len(rows[0])
    B = [list(r) for r in rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(i, j, col):
        # zero B[j][col] against B[i][col]
        a, b = B[i][col], B[j][col]
        if b == 0:
            return
        if a == 0:
            B[i], B[j] = B[j], B[i]
            U[i], U[j] = U[j], U[i]
            return
        if b % a == 0:
            q = b // a
            B[j] = [v - q * w for v, w in zip(B[j], B[i])]
            U[j] = [v - q * w for v, w in zip(U[j], U[i])]
            return
        g, x, y = xgcd(a, b)
        ag, bg = a // g, b // g
        Bi, Bj = B[i], B[j]
        B[i] = [x * p + y * q for p, q in zip(Bi, Bj)]
        B[j] = [-bg * p + ag * q for p, q in zip(Bi, Bj)]
        Ui, Uj = U[i], U[j]
        U[i] = [x * p + y * q for p, q in zip(Ui, Uj)]
        U[j] = [-bg * p + ag * q for p, q in zip(Ui, Uj)]

    def col_op(i, j, rowidx):
        # zero B[rowidx][j] against B[rowidx][i]
        a, b = B[rowidx][i], B[rowidx][j]
        if b == 0:
            return
        if a == 0:
            for r in B:
                r[i], r[j] = r[j], r[i]
            for r in V:
                r[i], r[j] = r[j], r[i]
            return
        if b % a == 0:
            q = b // a
            for r in B:
                r[j] -= q * r[i]
            for r in V:
                r[j] -= q * r[i]
            return
        g, x, y = xgcd(a, b)
        ag, bg = a // g, b // g
        for r in B:
            p, q = r[i], r[j]
            r[i], r[j] = x * p + y * q, -bg * p + ag * q
        for r in V:
            p, q = r[i], r[j]
            r[i], r[j] = x * p + y * q, -bg * p + ag * q

    k = 0
    while k < min(m, n):
        pivot = next(
            ((i, j) for i in range(k, m) for j in range(k, n) if B[i][j]), None
        )
        if pivot is None:
            break
        i0, j0 = pivot
        B[k], B[i0] = B[i0], B[k]
        U[k], U[i0] = U[i0], U[k]
        if j0 != k:
            for r in B:
                r[k], r[j0] = r[j0], r[k]
            for r in V:
                r[k], r[j0] = r[j0], r[k]
        while True:
            for i in range(k + 1, m):
                row_op(k, i, k)
            for j in range(k + 1, n):
                col_op(k, j, k)
            if all(B[i][k] == 0 for i in range(k + 1, m)) and all(
                B[k][j] == 0 for j in range(k + 1, n)
            ):
                break
        k += 1

    for k in range(min(m, n)):
        if B[k][k] < 0:
            B[k] = [-v for v in B[k]]
            U[k] = [-v for v in U[k]]

    # enforce the divisibility chain: replace adjacent (a, b) by (gcd, lcm)
    # with ops touching only rows/columns k, k+1, so diagonality survives
    changed = True
    while changed:
        changed = False
        for k in range(min(m, n) - 1):
            a, b = B[k][k], B[k + 1][k + 1]
            if a == 0 or b == 0 or b % a == 0:
                continue
            changed = True
            g, x, y = xgcd(a, b)
            ag, bg = a // g, b // g
            B[k] = [p + q for p, q in zip(B[k], B[k + 1])]
            U[k] = [p + q for p, q in zip(U[k], U[k + 1])]
            for rows_ in (B, V):
                for r in rows_:
                    p, q = r[k], r[k + 1]
                    r[k], r[k + 1] = x * p + y * q, -bg * p + ag * q
            f = (y * b) // g
            B[k + 1] = [p - f * q for p, q in zip(B[k + 1], B[k])]
            U[k + 1] = [p - f * q for p, q in zip(U[k + 1], U[k])]
    return B, U, V


def smith_invariants(rows) -> list[int]:
    """Nonzero diagonal invariants d1 | d2 | ... of the row lattice."""
    D, _, _ = smith_normal_form(rows)
    return [D[k][k] for k in range(min(len(D), len(D[0]))) if D[k][k]]


def mat_mul(A, B) -> Matrix:
    return [
        [sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))]
        for i in range(len(A))
    ]


def det(rows) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    A = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]
