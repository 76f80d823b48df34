import pytest
from hypothesis import given, strategies as st

from ddcrit.errors import (
    EvenPrime,
    NotCoprime,
    NotInSubfield,
    NotPrime,
    OrderNotDividing,
)
from ddcrit.gf import (
    make_field,
    ord_mod,
    pth_root,
    root_of_unity,
    trace_to_prime,
)

F9 = make_field(3, 2)


def elements_of(spec):
    return st.integers(min_value=0, max_value=spec.order - 1).map(
        spec.element_by_index
    )


def test_make_field_moduli():
    assert make_field(3, 1).modulus == (0, 1)
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert make_field(5, 2).modulus == (2, 0, 1)


def test_make_field_is_pure():
    assert make_field(7, 3) is make_field(7, 3)


def test_make_field_rejects_bad_input():
    with pytest.raises(NotPrime):
        make_field(9, 1)
    with pytest.raises(EvenPrime):
        make_field(2, 1)


def test_element_ordering_constant_term_first():
    # index order sorts by constant coefficient first
    elems = list(F9.elements())
    assert [e.coeffs for e in elems[:4]] == [(0, 0), (0, 1), (0, 2), (1, 0)]
    assert elems == sorted(elems, key=lambda e: e.sort_key())


@given(st.sampled_from([make_field(3, 2), make_field(5, 1), make_field(3, 3)]))
def test_field_axioms_spotcheck(spec):
    one = spec.one()
    for i in range(1, spec.order):
        x = spec.element_by_index(i)
        assert x * x.inverse() == one
        assert x ** (spec.order - 1) == one


@given(elements_of(F9), elements_of(F9))
def test_frobenius_additivity(x, y):
    assert (x + y) ** 3 == x**3 + y**3


@given(elements_of(F9))
def test_pth_root_roundtrip(x):
    assert pth_root(x) ** 3 == x
    assert pth_root(x**3) == x


def test_pth_root_prime_field_identity():
    f5 = make_field(5, 1)
    for i in range(5):
        assert pth_root(f5.from_int(i)) == f5.from_int(i)


def test_trace_examples():
    assert trace_to_prime(F9.zero(), 2) == F9.zero()
    assert trace_to_prime(F9.one(), 2) == F9.from_int(2)
    # an honest F_9 element: trace = x + x^3
    g = F9.element([0, 1])
    assert trace_to_prime(g, 2) == g + g**3


@given(elements_of(F9))
def test_trace_lands_in_prime_field(x):
    t = trace_to_prime(x, 2)
    assert t**3 == t


def test_trace_rejects_wrong_subfield():
    g = F9.element([0, 1])
    with pytest.raises(NotInSubfield):
        trace_to_prime(g, 1)  # g is not in F_3
    with pytest.raises(NotInSubfield):
        trace_to_prime(g, 3)  # 3 does not divide k=2


def test_root_of_unity():
    f3 = make_field(3, 1)
    assert root_of_unity(f3, 2) == f3.from_int(2)
    assert root_of_unity(F9, 1) == F9.one()
    z8 = root_of_unity(F9, 8)
    assert z8**8 == F9.one() and z8**4 != F9.one()
    with pytest.raises(OrderNotDividing):
        root_of_unity(F9, 7)


def test_ord_mod():
    assert ord_mod(7, 1) == 1
    assert ord_mod(5, 24) == 2
    assert ord_mod(3, 10) == 4
    with pytest.raises(NotCoprime):
        ord_mod(3, 9)
