from fractions import Fraction

import pytest

from ddcrit.errors import BadCongruence, EssentialRamification, InvalidQuadruple
from ddcrit.planner import (
    lifting_radii,
    profiles_for_group,
    quadruple_for_step,
    quadruples_for_group,
)


def quad_tuple(q):
    return (q.p, q.m, q.u_tilde, q.n1)


def test_step_rule():
    assert quad_tuple(quadruple_for_step(3, 2, 1, 3)) == (3, 2, 1, 2)
    assert quad_tuple(quadruple_for_step(3, 2, 1, 5)) == (3, 2, 1, 0)
    assert quad_tuple(quadruple_for_step(3, 2, 5, 15)) == (3, 2, 5, 10)
    assert quad_tuple(quadruple_for_step(3, 2, 5, 17)) == (3, 2, 5, 8)


def test_step_errors():
    with pytest.raises(EssentialRamification):
        quadruple_for_step(3, 2, 1, 9)
    with pytest.raises(EssentialRamification):
        quadruple_for_step(3, 2, 5, 13)
    with pytest.raises(BadCongruence):
        quadruple_for_step(3, 2, 1, 4)


def test_quadruples_d9():
    got = [quad_tuple(q) for q in quadruples_for_group(3, 2, 2)]
    assert set(got) == {
        (3, 2, 1, 2),
        (3, 2, 1, 0),
        (3, 2, 5, 10),
        (3, 2, 5, 8),
    }
    assert len(got) == 4


def test_quadruples_base_case_empty():
    assert quadruples_for_group(3, 2, 1) == []
    assert quadruples_for_group(7, 2, 1) == []


def test_quadruples_522():
    got = [quad_tuple(q) for q in quadruples_for_group(5, 2, 2)]
    assert len(got) == 8
    assert {q[2] for q in got} == {1, 3, 7, 9}


def test_profiles_d9():
    got = [p.breaks for p in profiles_for_group(3, 2, 2)]
    assert got == [(1, 3), (1, 5), (1, 7), (5, 15), (5, 17), (5, 19)]


def test_profiles_length1():
    assert [p.breaks for p in profiles_for_group(3, 2, 1)] == [(1,), (5,)]


def test_profiles_map_into_quadruple_list():
    for p, m, n in [(3, 2, 2), (5, 2, 2), (7, 2, 2), (5, 4, 2)]:
        quads = {quad_tuple(q) for q in quadruples_for_group(p, m, n)}
        for prof in profiles_for_group(p, m, n):
            prev = prof.breaks[0]
            for u in prof.breaks[1:]:
                assert quad_tuple(quadruple_for_step(p, m, prev, u)) in quads
                prev = u


def test_radii_example():
    r = lifting_radii(3, 2, 5, 17, 8)
    assert r.n2 == 4
    assert r.r_crit == Fraction(1, 10)
    assert r.r_hub == Fraction(1, 20)
    assert r.r_n == Fraction(1, 34)
    assert r.delta_hub == Fraction(17, 20)


def test_radii_hub_zero_on_equal_jump():
    r = lifting_radii(3, 2, 5, 15, 10)
    assert r.n2 == 0 and r.r_hub == 0 and r.delta_hub == 0


def test_radii_inconsistent_n1():
    with pytest.raises(InvalidQuadruple):
        lifting_radii(3, 2, 5, 17, 10)


def _steps(p, m, n):
    for prof in profiles_for_group(p, m, n):
        prev = prof.breaks[0]
        for u in prof.breaks[1:]:
            q = quadruple_for_step(p, m, prev, u)
            yield p, m, prev, u, q.n1
            prev = u


@pytest.mark.parametrize("group", [(3, 2, 2), (5, 2, 2), (5, 4, 2), (3, 2, 3)])
def test_radii_linearity_identity(group):
    """(N1+N2+u_prev) r_hub + (N1+u_prev)(r_crit - r_hub) = p/(p-1)."""
    for p, m, u_prev, u_next, n1 in _steps(*group):
        r = lifting_radii(p, m, u_prev, u_next, n1)
        lhs = (n1 + r.n2 + u_prev) * r.r_hub + (n1 + u_prev) * (
            r.r_crit - r.r_hub
        )
        assert lhs == Fraction(p, p - 1)
        if r.n2 > 0:
            assert r.r_n < r.r_hub < r.r_crit
        assert r.n2 <= 2 * m * p - 2 * m
        assert (r.n2 == 0) == (u_next == p * u_prev)
