from math import factorial

import pytest
from hypothesis import given, strategies as st

from cycbrauer.clifford import SimpleModule, printed_s_action, projector, sigma_matrix
from cycbrauer.combinatorics import (OrbitLabel, enumerate_lambda, m_partitions, specht_module,
                                     stabiliser_index)
from cycbrauer.cyclotomic import CycNumber
from cycbrauer.decomposition import character_inner_product
from cycbrauer.diagrams import gen_t, group_elements
from cycbrauer.linalg import identity, matmul
from cycbrauer.relations import group_relations

CASES = [(2, 2, 2), (2, 2, 3), (4, 4, 2), (4, 2, 3), (3, 3, 3), (6, 3, 2), (4, 4, 3)]


def simples(m, p, n):
    return [SimpleModule(lab, m, p) for lab in enumerate_lambda(m, p, n, arcs_allowed=False)]


def group_order(m, p, n):
    return m ** n * factorial(n) // p


def zero(m, k):
    return [[CycNumber.zero(m)] * k for _ in range(k)]


@pytest.mark.parametrize("m,p,n", CASES)
def test_projectors_orthogonal_idempotents(m, p, n):
    for lam in m_partitions(m, n):
        t = stabiliser_index(lam, m, p)
        dim = specht_module(lam, m).dim
        ps = [projector(lam, m, p, r) for r in range(p // t)]
        total = zero(m, dim)
        for a, pa in enumerate(ps):
            total = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(total, pa)]
            for b, pb in enumerate(ps):
                assert matmul(pa, pb, m) == (pa if a == b else zero(m, dim))
        assert total == identity(m, dim)


def test_projector_example():
    """For (1,0,1,0) in G(4,4,2): p_0(t) = (t + sigma^2 t)/2."""
    lam = ((1,), (), (1,), ())
    p0 = projector(lam, 4, 4, 0)
    s2 = sigma_matrix(lam, 4, 4, 2)
    half = CycNumber.from_rational(4, 1) / 2
    want = [[half * (a + b) for a, b in zip(r1, r2)] for r1, r2 in zip(identity(4, 2), s2)]
    assert p0 == want
    with pytest.raises(ValueError):
        sigma_matrix(lam, 4, 4, 1)
    with pytest.raises(ValueError):
        projector(lam, 4, 4, 2)


@pytest.mark.parametrize("m,p,n", CASES)
def test_t1_intertwines_projectors(m, p, n):
    for lam in m_partitions(m, n):
        t = stabiliser_index(lam, m, p)
        k = p // t
        t1 = specht_module(lam, m).matrix_t1()
        for r in range(k):
            assert matmul(t1, projector(lam, m, p, r), m) == \
                matmul(projector(lam, m, p, (r - 1) % k), t1, m)


@pytest.mark.parametrize("m,p,n", CASES)
def test_sum_of_squares(m, p, n):
    assert sum(s.dim ** 2 for s in simples(m, p, n)) == group_order(m, p, n)


def test_g222_has_four_linear_characters():
    mods = simples(2, 2, 2)
    assert sorted(s.dim for s in mods) == [1, 1, 1, 1]


@pytest.mark.parametrize("m,p,n", [(2, 2, 2), (2, 2, 3), (4, 4, 2), (3, 3, 3), (4, 2, 2)])
def test_characters_orthonormal(m, p, n):
    group = group_elements(m, p, n)
    assert len(group) == group_order(m, p, n)
    mods = simples(m, p, n)
    for i, a in enumerate(mods):
        for j, b in enumerate(mods):
            assert character_inner_product(a, b, group) == (i == j)


@pytest.mark.parametrize("m,p,n", CASES)
def test_group_relations_hold(m, p, n):
    rels = group_relations(m, p, n)
    for s in simples(m, p, n):
        for rel in rels:
            assert rel.holds_on(s), f"{rel.name} on {s}"


@pytest.mark.parametrize("m,p,n", CASES)
def test_t_power_p_eigenvalue(m, p, n):
    """t^p acts on p_r(t) by xi^(p t(1)) whatever r is."""
    for s in simples(m, p, n):
        sp = s.parent.specht
        tp = s.t_p
        for j, pos in enumerate(s.positions):
            k = s.parent.split(pos)[1]
            want = CycNumber.zeta(m, p * sp.component(k, 1))
            assert all(tp[i][j] == (want if i == j else CycNumber.zero(m))
                       for i in range(s.dim))


@pytest.mark.parametrize("m,p,n", CASES)
def test_printed_s_formula(m, p, n):
    checked = 0
    for s in simples(m, p, n):
        for i in range(1, n):
            printed = printed_s_action(s, i)
            if printed is not None:
                checked += 1
                assert printed == s.s(i)
    assert checked


@given(st.sampled_from(CASES), st.data())
def test_sigma_permutes_components(case, data):
    m, p, n = case
    lam = data.draw(st.sampled_from(m_partitions(m, n)))
    t = stabiliser_index(lam, m, p)
    assert p % t == 0
    s = sigma_matrix(lam, m, p, t)
    power = s
    for k in range(2, p // t + 1):
        power = matmul(power, s, m)
        want = sigma_matrix(lam, m, p, k * t) if k * t < p else identity(m, len(s))
        assert power == want


def test_t_generator_rejected_outside_group():
    with pytest.raises(ValueError):
        gen_t(2, 4, 2, 1, 1)
