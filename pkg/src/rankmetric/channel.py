"""Error ensembles: samplers over F_q matrices and exact counting formulas.

Samplers use rejection from the uniform entry distribution, which is exactly
uniform over the target sets (full-rank, invertible, symmetric invertible)
and cheap at the field sizes used here: the acceptance probability of an
invertible t-by-t matrix over F_q is bounded below by prod_i (1 - q^-i),
about 0.289 for q = 2.

Counts are exact big integers produced directly from the product formulas;
each carries a float log2 companion good to well below 1e-6 even for counts
far beyond the float range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .field import FieldCtx, _prime_power
from .linalg import fq_matmul, fq_rank, fq_transpose, phi_inv


@dataclass(frozen=True)
class SpaceSymError:
    """Rank-t error with equal row and column space: E = A P A^T.

    A is n-by-t of rank t, P is t-by-t invertible, and e is the vector form
    of E relative to the basis the sampler was given.
    """

    t: int
    A: list
    P: list
    E: list
    e: tuple[int, ...]


def _random_matrix(ctx: FieldCtx, rows: int, cols: int, rng):
    q = ctx.q
    return [[rng.randrange(q) for _ in range(cols)] for _ in range(rows)]


def sample_full_rank(ctx: FieldCtx, rows: int, cols: int, rng):
    """Uniform matrix of full rank min(rows, cols)."""
    target = min(rows, cols)
    while True:
        M = _random_matrix(ctx, rows, cols, rng)
        if fq_rank(ctx, M) == target:
            return M


def sample_uniform_invertible(ctx: FieldCtx, t: int, rng):
    """Uniform invertible t-by-t matrix over F_q."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return sample_full_rank(ctx, t, t, rng)


def sample_symmetric_invertible(ctx: FieldCtx, t: int, rng):
    """Uniform invertible symmetric t-by-t matrix over F_q."""
    if t < 1:
        raise ValueError("t must be >= 1")
    q = ctx.q
    while True:
        M = [[0] * t for _ in range(t)]
        for i in range(t):
            for j in range(i, t):
                v = rng.randrange(q)
                M[i][j] = v
                M[j][i] = v
        if fq_rank(ctx, M) == t:
            return M


def sample_space_symmetric(ctx: FieldCtx, alpha, t: int, rng) -> SpaceSymError:
    """Uniform rank-t error matrix with equal row and column space.

    A and P are drawn uniformly over full-rank n-by-t and invertible t-by-t
    matrices; every such E has exactly |GL_t(F_q)| factorizations, so
    E = A P A^T is uniform over the target ensemble.  The vector form is
    taken relative to alpha.
    """
    n = ctx.n
    if not 0 <= t <= n:
        raise ValueError(f"need 0 <= t <= {n}")
    if t == 0:
        E = [[0] * n for _ in range(n)]
        return SpaceSymError(0, [[] for _ in range(n)], [], E, (0,) * n)
    A = sample_full_rank(ctx, n, t, rng)
    P = sample_uniform_invertible(ctx, t, rng)
    E = fq_matmul(ctx, fq_matmul(ctx, A, P), fq_transpose(A))
    e = phi_inv(ctx, E, tuple(alpha))
    return SpaceSymError(t, A, P, E, e)


def sample_rank_error(ctx: FieldCtx, n: int, t: int, rng):
    """Uniform n-by-n matrix of rank exactly t, via E = A B with A, B uniform
    full rank; the |GL_t| factorization multiplicity is constant, so E is
    uniform."""
    if not 0 <= t <= n:
        raise ValueError(f"need 0 <= t <= {n}")
    if t == 0:
        return [[0] * n for _ in range(n)]
    A = sample_full_rank(ctx, n, t, rng)
    B = sample_full_rank(ctx, t, n, rng)
    return fq_matmul(ctx, A, B)


# ---------------------------------------------------------------------------
# Exact counting.
# ---------------------------------------------------------------------------

def _log2_exact(x: int) -> float:
    if x <= 0:
        return float("-inf")
    shift = max(0, x.bit_length() - 64)
    return shift + math.log2(x >> shift)


@dataclass(frozen=True)
class CountResult:
    exact: int
    log2: float

    @classmethod
    def of(cls, exact: int) -> "CountResult":
        return cls(exact, _log2_exact(exact))


def _check_count_args(n: int, t: int, q: int):
    _prime_power(q)
    if not 0 <= t <= n:
        raise ValueError(f"need 0 <= t <= n, got t={t}, n={n}")


def gaussian_binomial(n: int, t: int, q: int) -> CountResult:
    """Number of t-dimensional subspaces of F_q^n:
    prod_{i<t} (q^n - q^i) / (q^t - q^i)."""
    _check_count_args(n, t, q)
    num = 1
    den = 1
    for i in range(t):
        num *= q ** n - q ** i
        den *= q ** t - q ** i
    assert num % den == 0
    return CountResult.of(num // den)


def count_space_symmetric(n: int, t: int, q: int) -> CountResult:
    """Number of n-by-n rank-t matrices over F_q whose row and column spaces
    coincide: prod_{i<t} (q^n - q^i)."""
    _check_count_args(n, t, q)
    out = 1
    for i in range(t):
        out *= q ** n - q ** i
    return CountResult.of(out)


def count_symmetric(n: int, tprime: int, q: int) -> CountResult:
    """Number of symmetric n-by-n matrices of rank t' over F_q.

    For t' = 2s:   prod_{i=1..s} q^(2i)/(q^(2i)-1) * prod_{i<2s} (q^(n-i)-1)
    For t' = 2s+1: same leading product, trailing product up to i = 2s.
    """
    _check_count_args(n, tprime, q)
    s = tprime // 2
    acc = Fraction(1)
    for i in range(1, s + 1):
        acc *= Fraction(q ** (2 * i), q ** (2 * i) - 1)
    for i in range(tprime):
        acc *= q ** (n - i) - 1
    assert acc.denominator == 1
    return CountResult.of(acc.numerator)


def count_rank(n: int, tprime: int, q: int) -> CountResult:
    """Number of n-by-n matrices of rank t' over F_q:
    prod_{j<t'} (q^n - q^j)^2 / (q^t' - q^j)."""
    _check_count_args(n, tprime, q)
    acc = Fraction(1)
    for j in range(tprime):
        acc *= Fraction((q ** n - q ** j) ** 2, q ** tprime - q ** j)
    assert acc.denominator == 1
    return CountResult.of(acc.numerator)
