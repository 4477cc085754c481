"""Dense linear algebra over a Field, on integer-encoded entries.

Row reduction uses first-nonzero pivoting so ranks and null spaces are
deterministic.  GF(2) matrices additionally get a bit-packed fast path.
"""

from __future__ import annotations

from .galois import Field


def dot(u: list[int], v: list[int], field: Field) -> int:
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = field.add(acc, field.mul(a, b))
    return acc


def gram(rows: list[list[int]], field: Field) -> list[list[int]]:
    """Symmetric matrix of pairwise row inner products."""
    k = len(rows)
    out = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            d = dot(rows[i], rows[j], field)
            out[i][j] = d
            out[j][i] = d
    return out


def rank(rows: list[list[int]], field: Field) -> int:
    if not rows:
        return 0
    mat = [list(r) for r in rows]
    nrows, ncols = len(mat), len(mat[0])
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, v) for v in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [field.sub(v, field.mul(f, w)) for v, w in zip(mat[i], mat[r])]
        r += 1
    return r


def nullspace(rows: list[list[int]], field: Field, ncols: int) -> list[list[int]]:
    """Basis of {x : rows @ x = 0}, one vector per free column."""
    mat = [list(r) for r in rows if any(r)]
    nrows = len(mat)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, v) for v in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [field.sub(v, field.mul(f, w)) for v, w in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    basis = []
    pivot_set = set(pivots)
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for row, pc in zip(mat, pivots):
            vec[pc] = field.neg(row[free])
        basis.append(vec)
    return basis


# -- GF(2) bit-packed path

def pack_gf2(row: list[int]) -> int:
    acc = 0
    for j, v in enumerate(row):
        if v & 1:
            acc |= 1 << j
    return acc


def unpack_gf2(bits: int, n: int) -> list[int]:
    return [(bits >> j) & 1 for j in range(n)]


def gram_gf2(packed: list[int]) -> list[int]:
    """Gram matrix over GF(2) as bit rows: bit j of row i = parity(<r_i, r_j>)."""
    k = len(packed)
    out = []
    for i in range(k):
        bits = 0
        for j in range(k):
            if (packed[i] & packed[j]).bit_count() & 1:
                bits |= 1 << j
        out.append(bits)
    return out


def rank_gf2(packed: list[int]) -> int:
    basis: list[int] = []  # each kept row owns its lowest set bit as pivot
    for row in packed:
        cur = row
        for b in basis:
            if cur & (b & -b):
                cur ^= b
        if cur:
            basis.append(cur)
    return len(basis)
