import pytest

from dissections.algebra import TermOrder


def _sort_monomials(order, names, monos):
    key = order.key_function(names)
    return sorted(monos, key=key, reverse=True)


def test_lex_chain():
    names = ("x", "y", "z")
    monos = [(0, 2, 0), (1, 0, 1), (1, 1, 0), (0, 0, 3)]
    assert _sort_monomials(TermOrder.lex(), names, monos) == [
        (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 0, 3)]


def test_grevlex_chain():
    # Standard degree-2 chain in x > y > z: x2 > xy > y2 > xz > yz > z2.
    names = ("x", "y", "z")
    monos = [(0, 0, 2), (0, 1, 1), (1, 0, 1), (0, 2, 0), (1, 1, 0), (2, 0, 0)]
    assert _sort_monomials(TermOrder.grevlex(), names, monos) == [
        (2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]


def test_grevlex_is_graded():
    key = TermOrder.grevlex().key_function(("x", "y"))
    assert key((0, 3)) > key((2, 0))


def test_block_order_dominates_on_block_variables():
    names = ("a", "b", "x", "y")
    order = TermOrder.elimination(["x", "y"])
    key = order.key_function(names)
    # Any monomial containing x beats any x,y-free monomial.
    assert key((0, 0, 1, 0)) > key((5, 5, 0, 0))
    # Within the block, grevlex on (x, y).
    assert key((0, 0, 2, 0)) > key((9, 0, 1, 1))


def test_block_order_unknown_variable():
    with pytest.raises(ValueError):
        TermOrder.elimination(["nope"]).key_function(("x", "y"))


def test_admissibility_one_is_minimal():
    # 1 divides everything and must compare smallest among monomials it divides.
    for order in (TermOrder.lex(), TermOrder.grevlex(),
                  TermOrder.elimination(["x"])):
        key = order.key_function(("x", "y"))
        one = key((0, 0))
        for mono in [(1, 0), (0, 1), (2, 3)]:
            assert key(mono) > one


def test_multiplicative_compatibility():
    key = TermOrder.grevlex().key_function(("x", "y", "z"))
    a, b, c = (1, 0, 2), (0, 3, 0), (1, 1, 1)
    if key(a) > key(b):
        shifted_a = tuple(u + v for u, v in zip(a, c))
        shifted_b = tuple(u + v for u, v in zip(b, c))
        assert key(shifted_a) > key(shifted_b)
