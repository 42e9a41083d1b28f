"""Linear algebra over F_q and F_{q^n}.

Vectors are tuples/lists of packed field ints, matrices are lists of row
lists.  Functions prefixed fq_ treat entries as base-field scalars, fqn_
as extension-field elements; the two cannot be told apart structurally, so
the caller picks the right family.  Solvers use the column convention
M x = b.  Kernel bases come out in reduced echelon form of the null space
(one vector per free column, ascending), which keeps outputs reproducible.

Also home to the expansion map between length-n vectors over F_{q^n} and
n-by-n matrices over F_q relative to a basis (phi / phi_inv), transposed
vectors, Moore matrices and rank computations.
"""

from __future__ import annotations

from functools import lru_cache

from .field import FieldCtx


class InconsistentSystemError(ValueError):
    """Raised when a linear system has no solution."""


# ---------------------------------------------------------------------------
# GF(2) fast path: rows packed as ints, bit i = column i.
# ---------------------------------------------------------------------------

def _gf2_pack(M):
    out = []
    for row in M:
        m = 0
        for j, v in enumerate(row):
            if v:
                m |= 1 << j
        out.append(m)
    return out


def _gf2_rref(masks):
    """In-place RREF on bit-packed rows; returns pivot column list."""
    pivots = []
    r = 0
    nrows = len(masks)
    limit = max((m.bit_length() for m in masks), default=0)
    for c in range(limit):
        bit = 1 << c
        pr = next((i for i in range(r, nrows) if masks[i] & bit), None)
        if pr is None:
            continue
        masks[r], masks[pr] = masks[pr], masks[r]
        mr = masks[r]
        for i in range(nrows):
            if i != r and masks[i] & bit:
                masks[i] ^= mr
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _gf2_rank(M) -> int:
    masks = _gf2_pack(M)
    return len(_gf2_rref(masks))


def _gf2_kernel(M, ncols):
    masks = _gf2_pack(M)
    pivots = _gf2_rref(masks)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = [0] * ncols
        vec[free] = 1
        fb = 1 << free
        for i, pc in enumerate(pivots):
            if masks[i] & fb:
                vec[pc] = 1
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# Generic elimination parameterized by scalar ops.
# ---------------------------------------------------------------------------

def _rref(add, sub, mul, inv, M, ncols):
    rows = [list(r) for r in M]
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv_inv = inv(rows[r][c])
        rows[r] = [mul(piv_inv, v) for v in rows[r]]
        lead = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [sub(a, mul(f, b)) for a, b in zip(rows[i], lead)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def _kernel_from_rref(sub, rows, pivots, ncols):
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = sub(0, rows[i][free])
        basis.append(vec)
    return basis


def _ops_fq(ctx: FieldCtx):
    return ctx.base_add, ctx.base_sub, ctx.base_mul, ctx.base_inv


def _ops_fqn(ctx: FieldCtx):
    return ctx.add, ctx.sub, ctx.mul, ctx.inv


def _rank(ops, M, ncols):
    _, pivots = _rref(*ops, M, ncols)
    return len(pivots)


def _kernel(ops, M, ncols):
    rows, pivots = _rref(*ops, M, ncols)
    return _kernel_from_rref(ops[1], rows, pivots, ncols)


def _solve(ops, M, rhs):
    """One solution of M x = rhs plus a kernel basis; raises if inconsistent."""
    ncols = len(M[0]) if M else 0
    aug = [list(row) + [b] for row, b in zip(M, rhs)]
    rows, pivots = _rref(*ops, aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        raise InconsistentSystemError("linear system has no solution")
    x = [0] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = rows[i][ncols]
    kernel = _kernel_from_rref(ops[1], [r[:ncols] for r in rows], pivots, ncols)
    return x, kernel


# ---------------------------------------------------------------------------
# Public F_q / F_{q^n} matrix operations.
# ---------------------------------------------------------------------------

def fq_rank(ctx: FieldCtx, M) -> int:
    if not M:
        return 0
    if ctx.q == 2:
        return _gf2_rank(M)
    return _rank(_ops_fq(ctx), M, len(M[0]))


def fq_kernel(ctx: FieldCtx, M):
    if not M:
        return []
    ncols = len(M[0])
    if ctx.q == 2:
        return _gf2_kernel(M, ncols)
    return _kernel(_ops_fq(ctx), M, ncols)


def fq_solve(ctx: FieldCtx, M, rhs):
    return _solve(_ops_fq(ctx), M, rhs)


def fqn_rank(ctx: FieldCtx, M) -> int:
    if not M:
        return 0
    return _rank(_ops_fqn(ctx), M, len(M[0]))


def fqn_kernel(ctx: FieldCtx, M):
    if not M:
        return []
    return _kernel(_ops_fqn(ctx), M, len(M[0]))


def fqn_solve(ctx: FieldCtx, M, rhs):
    return _solve(_ops_fqn(ctx), M, rhs)


def fq_matmul(ctx: FieldCtx, A, B):
    badd, _, bmul, _ = _ops_fq(ctx)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        orow = [0] * cols
        for l, a in enumerate(row):
            if a == 0:
                continue
            brow = B[l]
            for j in range(cols):
                if brow[j]:
                    orow[j] = badd(orow[j], bmul(a, brow[j]))
        out.append(orow)
    return out


def fq_transpose(M):
    return [list(col) for col in zip(*M)]


def fqn_matmul(ctx: FieldCtx, X, Y):
    """Product of two matrices over F_{q^n}."""
    add, mul = ctx.add, ctx.mul
    cols = len(Y[0]) if Y else 0
    out = []
    for row in X:
        orow = [0] * cols
        for l, v in enumerate(row):
            if v:
                yrow = Y[l]
                for j in range(cols):
                    if yrow[j]:
                        orow[j] = add(orow[j], mul(v, yrow[j]))
        out.append(orow)
    return out


def fqn_matmul_fq(ctx: FieldCtx, X, P):
    """Product of an F_{q^n} matrix with an F_q matrix (scalars embed as-is)."""
    add, mul = ctx.add, ctx.mul
    cols = len(P[0]) if P else 0
    out = []
    for row in X:
        orow = [0] * cols
        for l, v in enumerate(row):
            if v:
                prow = P[l]
                for j in range(cols):
                    if prow[j]:
                        orow[j] = add(orow[j], mul(v, prow[j]))
        out.append(orow)
    return out


def fqn_vec_fq_mat(ctx: FieldCtx, v, M):
    """Row vector over F_{q^n} times a matrix over F_q."""
    add, mul = ctx.add, ctx.mul
    cols = len(M[0]) if M else 0
    out = [0] * cols
    for i, x in enumerate(v):
        if x:
            mrow = M[i]
            for j in range(cols):
                if mrow[j]:
                    out[j] = add(out[j], mul(x, mrow[j]))
    return tuple(out)


# ---------------------------------------------------------------------------
# Basis expansion map and friends.
# ---------------------------------------------------------------------------

class _CoordSolver:
    """Coordinates of extension elements relative to a fixed basis alpha."""

    def __init__(self, ctx: FieldCtx, alpha):
        n = ctx.n
        if len(alpha) != n:
            raise ValueError(f"basis must have {n} entries")
        # column j of the basis matrix = digit vector of alpha_j
        mat = [[ctx.coeffs(a)[i] for a in alpha] for i in range(n)]
        aug = [row + [1 if i == j else 0 for j in range(n)]
               for i, row in enumerate(mat)]
        ops = _ops_fq(ctx)
        rows, pivots = _rref(*ops, aug, 2 * n)
        if pivots[:n] != list(range(n)):
            raise ValueError("alpha is not a basis")
        inv_rows = [r[n:] for r in rows[:n]]
        self.ctx = ctx
        self.n = n
        if ctx.p == 2 and ctx.e == 1:
            self._masks = [sum(1 << j for j, v in enumerate(r) if v)
                           for r in inv_rows]
            self.coords = self._coords_gf2
        else:
            self._inv = inv_rows
            self.coords = self._coords_generic

    def _coords_gf2(self, x: int):
        return tuple((m & x).bit_count() & 1 for m in self._masks)

    def _coords_generic(self, x: int):
        ctx = self.ctx
        digits = ctx.coeffs(x)
        badd, bmul = ctx.base_add, ctx.base_mul
        out = []
        for row in self._inv:
            acc = 0
            for c, d in zip(row, digits):
                if c and d:
                    acc = badd(acc, bmul(c, d))
            out.append(acc)
        return tuple(out)


@lru_cache(maxsize=128)
def _coord_solver(ctx: FieldCtx, alpha) -> _CoordSolver:
    return _CoordSolver(ctx, alpha)


def phi(ctx: FieldCtx, a, alpha):
    """n-by-n matrix over F_q whose column j holds the alpha-coordinates of a_j."""
    if len(a) != ctx.n:
        raise ValueError(f"vector must have length {ctx.n}")
    solver = _coord_solver(ctx, tuple(alpha))
    cols = [solver.coords(x) for x in a]
    return [[cols[j][i] for j in range(ctx.n)] for i in range(ctx.n)]


def phi_inv(ctx: FieldCtx, A, alpha):
    """Vector a with a_j = sum_i alpha_i A[i][j]; inverse of phi."""
    n = ctx.n
    if len(A) != n or any(len(row) != n for row in A):
        raise ValueError(f"matrix must be {n}x{n}")
    add, mul = ctx.add, ctx.mul
    out = []
    for j in range(n):
        acc = 0
        for i in range(n):
            c = A[i][j]
            if c:
                acc = add(acc, mul(alpha[i], c))
        out.append(acc)
    return tuple(out)


def transpose_vector(ctx: FieldCtx, a, alpha):
    """Vector whose expansion matrix is the transpose of that of a."""
    A = phi(ctx, a, alpha)
    return phi_inv(ctx, [[A[j][i] for j in range(ctx.n)] for i in range(ctx.n)],
                   alpha)


def moore_matrix(ctx: FieldCtx, v, rows: int, shift: int = 0):
    """Matrix with entry (r, c) = v_c^(q-power r + shift)."""
    if rows < 1:
        raise ValueError("need at least one row")
    frob = ctx.frob
    return [[frob(x, r + shift) for x in v] for r in range(rows)]


def vector_rank(ctx: FieldCtx, v, alpha=None) -> int:
    """Rank of a vector over F_{q^n}: dimension of the F_q-span of its entries.

    Computed as the F_q-rank of the coordinate expansion; alpha defaults to
    the polynomial basis, whose coordinates are the packed digits.
    """
    if alpha is None:
        cols = [ctx.coeffs(x) for x in v]
    else:
        solver = _coord_solver(ctx, tuple(alpha))
        cols = [solver.coords(x) for x in v]
    M = [[col[i] for col in cols] for i in range(ctx.n)]
    return fq_rank(ctx, M)


def rank_of(ctx: FieldCtx, x, alpha=None, field: str = "fqn") -> int:
    """Rank dispatcher: flat sequences are vectors over F_{q^n}; nested
    sequences are matrices over the field named by `field` ("fq"/"fqn")."""
    if x and isinstance(x[0], (list, tuple)):
        return fq_rank(ctx, x) if field == "fq" else fqn_rank(ctx, x)
    return vector_rank(ctx, x, alpha)


# ---------------------------------------------------------------------------
# Serialization: F_q matrices as row-major CSV of ints; F_{q^n} vectors and
# matrices as ':'-joined coefficient strings, comma separated, rows on lines.
# ---------------------------------------------------------------------------

def fq_matrix_csv(M) -> str:
    return "\n".join(",".join(str(v) for v in row) for row in M)


def parse_fq_matrix(ctx: FieldCtx, text: str):
    rows = []
    for line in text.strip().splitlines():
        row = [int(v) for v in line.strip().split(",")]
        if any(not 0 <= v < ctx.q for v in row):
            raise ValueError("matrix entry out of range")
        rows.append(row)
    return rows


def fqn_vector_str(ctx: FieldCtx, v) -> str:
    return ",".join(ctx.elem_str(x) for x in v)


def parse_fqn_vector(ctx: FieldCtx, text: str):
    return tuple(ctx.parse_elem(part) for part in text.strip().split(","))


def fqn_matrix_csv(ctx: FieldCtx, M) -> str:
    return "\n".join(fqn_vector_str(ctx, row) for row in M)
