import pytest
from hypothesis import given, strategies as st

from spiderweb.weights import (
    W1, W2, add, dominance_leq, dominance_lt, dual, dual_reverse_signature,
    format_signature, format_weight, is_dominant, is_minuscule,
    minuscule_orbit, parse_signature, parse_weight, rho_level,
    root_coordinates, rotate_signature, signature_rho_level, sub)

weights_st = st.tuples(st.integers(-6, 6), st.integers(-6, 6))


def test_basics():
    assert is_dominant((0, 0)) and is_dominant(W1) and is_dominant((2, 3))
    assert not is_dominant((-1, 0))
    assert is_minuscule(W1) and is_minuscule(W2) and is_minuscule((0, 0))
    assert not is_minuscule((1, 1))
    assert not is_minuscule(W2, mode="a1")


def test_duality():
    assert dual(W1) == W2 and dual(W2) == W1
    assert dual((2, 5)) == (5, 2)
    assert dual(W1, mode="a1") == W1


def test_orbits():
    assert set(minuscule_orbit(W1)) == {(1, 0), (-1, 1), (0, -1)}
    assert set(minuscule_orbit(W2)) == {(0, 1), (1, -1), (-1, 0)}
    assert set(minuscule_orbit(W1, mode="a1")) == {(1, 0), (-1, 0)}
    # each orbit sums to zero
    for lam in (W1, W2):
        s = (0, 0)
        for x in minuscule_orbit(lam):
            s = add(s, x)
        assert s == (0, 0)


def test_root_coordinates_and_dominance():
    # lam - mu must be a nonnegative root combination
    assert root_coordinates((0, 0)) == (0, 0)
    assert dominance_leq((0, 0), (1, 1))
    assert not dominance_leq(W1, W2)
    assert not dominance_leq(W2, W1)
    assert dominance_lt((0, 0), (1, 1))
    assert not dominance_lt(W1, W1)
    assert dominance_leq(W1, W1)


def test_rho_levels():
    assert rho_level(W1) == rho_level(W2) == 1
    assert rho_level((1, 1)) == 2
    assert signature_rho_level((W1, W2, W1)) == 3


def test_signature_ops():
    sig = (W1, W1, W2)
    assert rotate_signature(sig, 1) == (W1, W2, W1)
    assert rotate_signature(sig, 3) == sig
    # entry j is the dual of entry -j mod n (reflection fixing position 0)
    assert dual_reverse_signature(sig) == (W2, W1, W2)


def test_parse_format_roundtrip():
    for text, w in [("0", (0, 0)), ("w1", W1), ("w2", W2),
                    ("2w1+w2", (2, 1)), ("w1+3w2", (1, 3))]:
        assert parse_weight(text) == w
        assert parse_weight(format_weight(w)) == w
    sig = parse_signature("w1,w2,w1")
    assert sig == (W1, W2, W1)
    assert parse_signature(format_signature(sig)) == sig
    with pytest.raises(ValueError):
        parse_weight("w3")


@given(weights_st, weights_st)
def test_add_sub_inverse(u, v):
    assert sub(add(u, v), v) == u


@given(weights_st, weights_st)
def test_dominance_is_partial_order(u, v):
    if dominance_leq(u, v) and dominance_leq(v, u):
        assert u == v


@given(weights_st)
def test_dual_involution(u):
    assert dual(dual(u)) == u
