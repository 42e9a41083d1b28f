import random

import pytest

from rankmetric import (lin_compose_mod, lin_eval, lin_normalize, lin_qdeg,
                        min_subspace_poly, root_space_basis, vector_rank)
from rankmetric.linpoly import lin_add, lin_poly_str, lin_scale, parse_lin_poly


def _full_compose(ctx, outer, inner):
    """Untruncated composition by expanding outer term by term: a separate
    code path from the production mod-truncated loop."""
    acc = ()
    for j, c in enumerate(outer):
        if c == 0:
            continue
        # c * (inner(x))^[j]: coefficients of inner frobenius'd by j, shifted
        term = (0,) * j + tuple(ctx.frob(v, j) for v in inner)
        acc = lin_add(ctx, acc, lin_scale(ctx, c, term))
    return acc


def test_normalize_and_qdeg():
    assert lin_normalize((0, 1, 0, 0)) == (0, 1)
    assert lin_normalize(()) == ()
    assert lin_qdeg(()) == -1
    assert lin_qdeg((5,)) == 0


def test_lin_eval_examples(F4, F256):
    rng = random.Random(21)
    f = (0, 1)  # x^[1]
    assert lin_eval(F4, f, 2) == 3
    for _ in range(50):
        g = tuple(F256.rand_elem(rng) for _ in range(4))
        assert lin_eval(F256, g, 0) == 0
        a, b = F256.rand_elem(rng), F256.rand_elem(rng)
        assert lin_eval(F256, g, F256.add(a, b)) == F256.add(
            lin_eval(F256, g, a), lin_eval(F256, g, b))


def test_compose_mod_truncations(F256):
    rng = random.Random(22)
    s = tuple(F256.rand_elem(rng) for _ in range(6))
    assert lin_compose_mod(F256, (1,), s, 4) == lin_normalize(s[:4])
    outer = tuple(F256.rand_elem(rng) for _ in range(5))
    assert lin_compose_mod(F256, outer, (1,), 3) == lin_normalize(outer[:3])
    with pytest.raises(ValueError):
        lin_compose_mod(F256, outer, s, 0)


def test_compose_mod_against_full_expansion(F256):
    rng = random.Random(23)
    for _ in range(100):
        outer = tuple(F256.rand_elem(rng)
                      for _ in range(rng.randrange(1, 5)))
        inner = tuple(F256.rand_elem(rng)
                      for _ in range(rng.randrange(1, 6)))
        d = rng.randrange(1, 7)
        full = _full_compose(F256, outer, inner)
        assert lin_compose_mod(F256, outer, inner, d) == lin_normalize(full[:d])


def test_compose_mod_coefficient_formula(F256):
    rng = random.Random(24)
    for _ in range(100):
        t = rng.randrange(1, 5)
        gamma = tuple(F256.rand_elem(rng) for _ in range(t + 1))
        s = tuple(F256.rand_elem(rng) for _ in range(6))
        got = lin_compose_mod(F256, gamma, s, 6)
        got = got + (0,) * (6 - len(got))
        for p in range(6):
            acc = 0
            for j in range(min(p, t) + 1):
                acc = F256.add(acc, F256.mul(gamma[j], F256.frob(s[p - j], j)))
            assert got[p] == acc


def test_min_subspace_poly_base_cases(F4, F9):
    assert min_subspace_poly(F4, []) == (1,)
    a = 2
    assert min_subspace_poly(F4, [a]) == (a, 1)  # x^[1] + a x over F_2
    # odd characteristic: x^q - a^(q-1) x
    b = 5
    got = min_subspace_poly(F9, [b])
    assert got == (F9.neg(F9.power(b, 2)), 1)


def test_min_subspace_poly_properties(F256):
    rng = random.Random(25)
    for _ in range(100):
        gens = [F256.rand_elem(rng) for _ in range(rng.randrange(0, 6))]
        # throw in a redundant combination to exercise dependent skipping
        if len(gens) >= 2:
            gens.append(F256.add(gens[0], gens[1]))
        f = min_subspace_poly(F256, gens)
        dim = vector_rank(F256, tuple(gens)) if gens else 0
        assert lin_qdeg(f) == dim
        assert f[-1] == 1  # monic
        for g in gens:
            assert lin_eval(F256, f, g) == 0


def test_root_space_basis(F4, F256):
    assert root_space_basis(F256, (1,)) == []  # f = x has trivial root space
    # x^[1] - x vanishes exactly on F_q
    f = (F256.sub(0, 1), 1)
    roots = root_space_basis(F256, f)
    assert roots == [1]
    with pytest.raises(ValueError):
        root_space_basis(F4, (0,))


def test_root_space_roundtrip(F256):
    rng = random.Random(26)
    for _ in range(100):
        target = rng.randrange(0, 6)
        gens = []
        while vector_rank(F256, tuple(gens)) < target:
            gens.append(F256.rand_elem(rng))
        f = min_subspace_poly(F256, gens)
        roots = root_space_basis(F256, f)
        assert len(roots) == target
        assert vector_rank(F256, tuple(roots)) == target  # independent
        for r in roots:
            assert lin_eval(F256, f, r) == 0
        # same span as the generators
        assert vector_rank(F256, tuple(gens) + tuple(roots)) == target


def test_lin_poly_serialization(F4, F256):
    f = (2, 1)
    s = lin_poly_str(F4, f)
    assert s == "0:1,1:0"
    assert parse_lin_poly(F4, s) == f
    assert parse_lin_poly(F4, "") == ()
    rng = random.Random(28)
    g = lin_normalize(tuple(F256.rand_elem(rng) for _ in range(4)))
    assert parse_lin_poly(F256, lin_poly_str(F256, g)) == g


def test_root_space_count_bounded_by_qdeg(F256):
    rng = random.Random(27)
    for _ in range(50):
        f = lin_normalize(tuple(F256.rand_elem(rng) for _ in range(4)))
        if not f:
            continue
        assert len(root_space_basis(F256, f)) <= lin_qdeg(f)
