import random
from fractions import Fraction

import pytest

from zpbal.errors import NotAnIdeal, NotAssociative, NotIdempotent, ParentMismatch
from zpbal.fields import PrimeField, QQ
from zpbal.linalg import Subspace
from zpbal.algebra import (
    Algebra,
    commutator,
    direct_sum,
    function_algebra,
    ideal_closure,
    is_ideal,
    matrix_algebra,
    matrix_over,
    matrix_trace,
    nilpotent_algebra,
    poly_quotient_algebra,
    quotient_algebra,
    scalar_algebra,
    subalgebra,
    tensor_product,
    zero_algebra,
)

F2 = PrimeField(2)
F3 = PrimeField(3)


def test_nilpotent_algebra_relations():
    n3 = nilpotent_algebra(F2, 3)
    x = n3.basis_element(0)
    x2 = n3.basis_element(1)
    assert x * x == x2
    assert (x * x2).is_zero() and (x2 * x).is_zero() and (x2 * x2).is_zero()
    assert x.power(3).is_zero() and not x.power(2).is_zero()


def test_non_associative_rejected():
    # e1*e1 = e2, e2*e1 = e1 and all else zero: (e1 e1)e1 = e1 but e1(e1 e1) = 0
    table = [[[0, 1], [0, 0]], [[1, 0], [0, 0]]]
    with pytest.raises(NotAssociative) as exc:
        Algebra(F2, ["e1", "e2"], table)
    assert exc.value.triple == (0, 0, 0)


def test_matrix_units():
    m2 = matrix_algebra(QQ, 2)
    e12 = m2.basis_element(1)
    e21 = m2.basis_element(2)
    e11 = m2.basis_element(0)
    assert e12 * e21 == e11
    assert (e12 * e12).is_zero()
    c = commutator(e12, e21)
    assert c == e11 - m2.basis_element(3)


def test_parent_mismatch():
    a = nilpotent_algebra(F2, 3)
    b = nilpotent_algebra(F2, 3)
    with pytest.raises(ParentMismatch):
        a.basis_element(0) * b.basis_element(0)


def test_predicates():
    n3 = nilpotent_algebra(F2, 3)
    p = n3.predicates()
    assert not p.is_unital and not p.is_idempotent and not p.is_faithful
    assert p.is_commutative and not p.has_zero_multiplication

    m2 = matrix_algebra(F2, 2)
    p = m2.predicates()
    assert p.is_unital and p.is_idempotent and p.is_faithful and not p.is_commutative
    unit = m2.element(p.unit)
    for i in range(4):
        e = m2.basis_element(i)
        assert unit * e == e and e * unit == e

    z = zero_algebra(F2, 1)
    assert z.predicates().has_zero_multiplication


def test_unital_implies_idempotent_and_faithful():
    for alg in (matrix_algebra(F3, 2), function_algebra(QQ, 3),
                poly_quotient_algebra(F2, [1, 1, 1])):
        p = alg.predicates()
        assert p.is_unital and p.is_idempotent and p.is_faithful


def test_function_algebra():
    kk = function_algebra(QQ, 2)
    a = kk.element([Fraction(1), Fraction(0)])
    b = kk.element([Fraction(0), Fraction(1)])
    assert (a * b).is_zero()
    assert a * a == a


def test_tensor_product_triple_products_vanish():
    f4 = poly_quotient_algebra(F2, [1, 1, 1])
    n3 = nilpotent_algebra(F2, 3)
    a = tensor_product(f4, n3)
    assert a.dim == 4
    # exhaustive: the product of any three elements is zero
    for u in a.coord_tuples():
        eu = a.element(u)
        for v in a.coord_tuples():
            prod = eu * a.element(v)
            if prod.is_zero():
                continue
            for w in a.coord_tuples():
                assert (prod * a.element(w)).is_zero()


def test_tensor_product_bilinear_rule():
    m2 = matrix_algebra(F2, 2)
    n3 = nilpotent_algebra(F2, 3)
    t = tensor_product(m2, n3)
    # (a⊗u)(b⊗v) = ab⊗uv on basis pairs
    for i in range(m2.dim):
        for u in range(n3.dim):
            for j in range(m2.dim):
                for v in range(n3.dim):
                    left = t.basis_element(i * n3.dim + u) * t.basis_element(j * n3.dim + v)
                    ab = m2.table[i][j]
                    uv = n3.table[u][v]
                    expected = [F2.mul(a, b) for a in ab for b in uv]
                    assert list(left.coords) == expected


def test_direct_sum_cross_products_vanish():
    a = matrix_algebra(F2, 2)
    b = nilpotent_algebra(F2, 3)
    s = direct_sum(a, b)
    for i in range(a.dim):
        for j in range(b.dim):
            assert (s.basis_element(i) * s.basis_element(a.dim + j)).is_zero()
            assert (s.basis_element(a.dim + j) * s.basis_element(i)).is_zero()


def test_matrix_over_nonunital():
    m2n3 = matrix_over(nilpotent_algebra(F2, 3), 2)
    assert m2n3.dim == 8
    assert m2n3.names[0] == "E11⊗x"
    assert not m2n3.predicates().is_unital
    # (E12⊗x)(E21⊗x) = E11⊗x^2
    e12x = m2n3.element([1 if n == "E12⊗x" else 0 for n in m2n3.names])
    e21x = m2n3.element([1 if n == "E21⊗x" else 0 for n in m2n3.names])
    assert e12x * e21x == m2n3.element([1 if n == "E11⊗x^2" else 0 for n in m2n3.names])


def test_matrix_trace():
    m2 = matrix_algebra(QQ, 2)
    a = m2.element([Fraction(1), Fraction(5), Fraction(-2), Fraction(3)])
    tr = matrix_trace(a)
    assert tr.coords == (Fraction(4),)


def test_commutator_five_by_five_display():
    # the classical 5x5 example: a diagonal trace-zero matrix realized as one commutator
    m5 = matrix_algebra(QQ, 5)

    def unit(r, c):
        v = [QQ.zero] * 25
        v[(r - 1) * 5 + (c - 1)] = QQ.one
        return m5.element(v)

    x = (unit(1, 2).scale(Fraction(4)) + unit(2, 3).scale(Fraction(3))
         + unit(3, 4).scale(Fraction(2)) + unit(4, 5))
    y = unit(2, 1) + unit(3, 2) + unit(4, 3) + unit(5, 4)
    expected = (unit(1, 1).scale(Fraction(4)) - unit(2, 2) - unit(3, 3)
                - unit(4, 4) - unit(5, 5))
    assert commutator(x, y) == expected


def test_quotient_algebra():
    n4 = nilpotent_algebra(F2, 4)
    ideal = ideal_closure(n4, [[0, 1, 0]])  # ideal generated by x^2
    assert ideal.dim == 2  # spans x^2, x^3
    quot = quotient_algebra(n4, ideal)
    q = quot.algebra
    assert q.dim == 1
    # projection is multiplicative
    for i in range(n4.dim):
        for j in range(n4.dim):
            lhs = quot.project(n4.basis_element(i) * n4.basis_element(j))
            rhs = quot.project(n4.basis_element(i)) * quot.project(n4.basis_element(j))
            assert lhs == rhs
    # the quotient is the order-2 nilpotent algebra (zero multiplication)
    assert q.predicates().has_zero_multiplication


def test_quotient_rejects_non_ideal():
    m2 = matrix_algebra(F2, 2)
    not_ideal = Subspace(F2, 4, [[1, 0, 0, 0]])  # span{E11} is not an ideal
    ok, witness = is_ideal(m2, not_ideal)
    assert not ok and witness is not None
    with pytest.raises(NotAnIdeal):
        quotient_algebra(m2, not_ideal)


def test_subalgebra_closure():
    m2 = matrix_algebra(F2, 2)
    e12 = m2.basis_element(1)
    e21 = m2.basis_element(2)
    sub = subalgebra(m2, [e12, e21])
    assert sub.algebra.dim == 4  # e12, e21 generate everything
    n4 = nilpotent_algebra(F2, 4)
    sub2 = subalgebra(n4, [n4.basis_element(1)])  # x^2 generates just itself
    assert sub2.algebra.dim == 1


def test_register_idempotent_validates():
    m2 = matrix_algebra(F2, 2)
    with pytest.raises(NotIdempotent):
        m2.register_idempotent(m2.basis_element(1))


def test_associativity_on_random_elements():
    rng = random.Random(3)
    for alg in (matrix_algebra(F3, 2), tensor_product(poly_quotient_algebra(F2, [1, 1, 1]),
                                                      nilpotent_algebra(F2, 3)),
                direct_sum(scalar_algebra(QQ), nilpotent_algebra(QQ, 4))):
        f = alg.field
        for _ in range(20):
            def rand():
                if f.characteristic == 0:
                    return alg.element([Fraction(rng.randint(-2, 2)) for _ in range(alg.dim)])
                return alg.element([rng.randrange(f.characteristic) for _ in range(alg.dim)])
            a, b, c = rand(), rand(), rand()
            assert (a * b) * c == a * (b * c)


def test_power_requires_positive():
    n3 = nilpotent_algebra(F2, 3)
    with pytest.raises(ValueError):
        n3.basis_element(0).power(0)
