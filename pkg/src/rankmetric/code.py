"""Gabidulin codes located on weak self-orthogonal bases.

The generator is the k-row Moore matrix of the basis.  Because the basis is
weak self-orthogonal, the (n-k)-row Moore matrix shifted by k q-powers is a
parity check of the code, and the one shifted by a single q-power is a
parity check of the transposed code (the image of every codeword's expansion
matrix under transposition).  Both facts are multiplied out and asserted at
construction so a bad basis fails fast.
"""

from __future__ import annotations

from .field import FieldCtx
from .linalg import moore_matrix, transpose_vector
from .wso import WsoBasis, find_wso_basis, is_weak_self_orthogonal


class GabidulinCode:
    """Length-n, dimension-k Gabidulin code over F_{q^n} with WSO locators."""

    def __init__(self, ctx: FieldCtx, k: int, basis: WsoBasis | None = None):
        n = ctx.n
        if not 1 <= k < n:
            raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
        if basis is None:
            basis = find_wso_basis(ctx)
        ok, _ = is_weak_self_orthogonal(ctx, basis.alpha)
        if not ok:
            raise ValueError("code locators are not weak self-orthogonal")
        self.ctx = ctx
        self.n = n
        self.k = k
        self.basis = basis
        self.alpha = basis.alpha
        self._G = moore_matrix(ctx, self.alpha, k)
        self._H = moore_matrix(ctx, self.alpha, n - k, shift=k)
        self._Hhat = moore_matrix(ctx, self.alpha, n - k, shift=1)
        self._assert_parity()

    def _assert_parity(self):
        ctx = self.ctx
        add, mul = ctx.add, ctx.mul
        for grow in self._G:
            for hrow in self._H:
                acc = 0
                for a, b in zip(grow, hrow):
                    acc = add(acc, mul(a, b))
                if acc != 0:
                    raise ValueError("generator/parity-check product is nonzero")

    def generator_matrix(self):
        return [row[:] for row in self._G]

    def parity_check(self):
        return [row[:] for row in self._H]

    def parity_check_transposed(self):
        return [row[:] for row in self._Hhat]

    def encode(self, u) -> tuple[int, ...]:
        """Codeword u G for a length-k message over F_{q^n}."""
        if len(u) != self.k:
            raise ValueError(f"message must have length {self.k}")
        ctx = self.ctx
        add, mul = ctx.add, ctx.mul
        G = self._G
        out = []
        for j in range(self.n):
            acc = 0
            for s in range(self.k):
                if u[s]:
                    acc = add(acc, mul(u[s], G[s][j]))
            out.append(acc)
        return tuple(out)

    def _syndrome_against(self, y, H) -> tuple[int, ...]:
        ctx = self.ctx
        add, mul = ctx.add, ctx.mul
        out = []
        for row in H:
            acc = 0
            for a, b in zip(y, row):
                if a and b:
                    acc = add(acc, mul(a, b))
            out.append(acc)
        return tuple(out)

    def syndrome(self, y) -> tuple[int, ...]:
        """y H^T against the ordinary parity check."""
        if len(y) != self.n:
            raise ValueError(f"word must have length {self.n}")
        return self._syndrome_against(y, self._H)

    def syndromes(self, y) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(transposed-code syndrome, ordinary syndrome) of a received word.

        The first is computed from the transposed received word against the
        transposed code's parity check, the second is y H^T; codeword parts
        cancel in both, so each depends only on the error.
        """
        if len(y) != self.n:
            raise ValueError(f"word must have length {self.n}")
        yhat = transpose_vector(self.ctx, y, self.alpha)
        s1 = self._syndrome_against(yhat, self._Hhat)
        s2 = self._syndrome_against(y, self._H)
        return s1, s2
