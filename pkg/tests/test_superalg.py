"""Normal ordering in the mode algebra and the graded tensor square."""

import random
from fractions import Fraction

from qgl11.scalars import QMQI, QONE, QScalar, qbracket, qpow
from qgl11.superalg import (
    Element, Monomial, TensorElement, gen_C, gen_E, gen_F, gen_h, gen_k1,
    gen_k2, phi_mode,
)


def comm(a, b):
    return a * b - b * a


def anticomm(a, b):
    return a * b + b * a


def test_odd_generators_square_to_zero():
    for n in (-2, 0, 3):
        assert (gen_E(n) * gen_E(n)).is_zero()
        assert (gen_F(n) * gen_F(n)).is_zero()


def test_odd_generators_anticommute():
    assert anticomm(gen_E(1), gen_E(4)).is_zero()
    assert anticomm(gen_E(-3), gen_E(2)).is_zero()
    assert anticomm(gen_F(0), gen_F(5)).is_zero()


def test_group_like_conjugation():
    # both group-likes scale E by q and F by 1/q
    for k in (gen_k1(), gen_k2()):
        for n in (-1, 0, 2):
            assert k * gen_E(n) == (gen_E(n) * k).scale(qpow(1))
            assert k * gen_F(n) == (gen_F(n) * k).scale(qpow(-1))
    # so the balanced product commutes with everything odd
    bal = gen_k1() * gen_k2(-1)
    w = gen_E(2) * gen_F(-1)
    assert bal * w == w * bal


def test_c_modes_are_central():
    x = gen_E(2) * gen_F(-1) * gen_h(1) * gen_k1()
    for s in (1, -2, 3):
        assert gen_C(s) * x == x * gen_C(s)


def test_cartan_modes_commute():
    for a, b in ((1, 2), (1, -1), (-2, 3)):
        assert comm(gen_h(a), gen_h(b)).is_zero()
        assert comm(gen_h(a), gen_C(b)).is_zero()


def test_h_shifts_odd_modes():
    # [h_s, E_n] = (q^s [s] / s) E_{n+s} and F picks up the opposite sign
    for s in (1, 2, 3, -1, -2):
        coeff = qpow(s) * qbracket(s) * QScalar.from_fraction(Fraction(1, s))
        for n in (-1, 0, 2):
            assert comm(gen_h(s), gen_E(n)) == gen_E(n + s).scale(coeff)
            assert comm(gen_h(s), gen_F(n)) == gen_F(n + s).scale(-coeff)


def test_mixed_anticommutator_is_cartan():
    # E_m F_n + F_n E_m lands in the Cartan modes of total degree m + n
    assert anticomm(gen_E(0), gen_F(0)) == \
        (phi_mode("+", 0) - phi_mode("-", 0)).scale(QMQI)
    assert anticomm(gen_E(1), gen_F(1)) == phi_mode("+", 2).scale(QMQI)
    assert anticomm(gen_E(-2), gen_F(1)) == phi_mode("-", 1).scale(-QMQI)
    for m, n in ((0, 1), (2, -2), (-1, 3)):
        out = anticomm(gen_E(m), gen_F(n))
        for mono in out.terms:
            assert not mono.e and not mono.f
            assert mono.z_degree() == m + n


def test_phi_modes_structure():
    assert phi_mode("+", 0) == Element.from_mono(Monomial(k1=-1, k2=1))
    assert phi_mode("-", 0) == Element.from_mono(Monomial(k1=1, k2=-1))
    # first nontrivial mode carries one C letter
    p1 = phi_mode("+", 1)
    assert p1 == Element.from_mono(Monomial(k1=-1, k2=1, c=((1, 1),)), QMQI)


def test_gradings_additive():
    rng = random.Random(7)
    gens = [gen_E(-1), gen_E(2), gen_F(0), gen_F(1), gen_h(1), gen_C(2),
            gen_k1(), gen_k2(-1)]
    for _ in range(60):
        a = rng.choice(gens)
        b = rng.choice(gens)
        prod = a * b
        if prod.is_zero():
            continue
        (am,), (bm,) = a.terms, b.terms
        zdeg = am.z_degree() + bm.z_degree()
        qdeg = am.q_degree() + bm.q_degree()
        for mono in prod.terms:
            assert mono.z_degree() == zdeg
            assert mono.q_degree() == qdeg


def test_rewrite_is_associative_seeded():
    rng = random.Random(11)
    gens = [gen_E(n) for n in range(-2, 3)] + [gen_F(n) for n in range(-2, 3)]
    gens += [gen_h(1), gen_h(-2), gen_C(1), gen_k1(), gen_k2(-1)]
    for _ in range(40):
        a, b, c = (rng.choice(gens) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_element_ring_basics():
    x = gen_E(0) + gen_F(1).scale(qpow(2))
    assert x - x == Element.zero()
    assert x * Element.one() == x
    assert Element.one() * x == x
    assert (x + x) == x.scale(QScalar((2,)))
    assert x ** 2 == x * x
    assert Element.from_scalar(QMQI) * gen_E(0) == gen_E(0).scale(QMQI)


def test_group_like_inverse():
    g = gen_k1(2) * gen_k2(-1)
    inv = g.try_inverse()
    assert inv is not None
    assert g * inv == Element.one()
    assert (gen_E(0) + gen_k1()).try_inverse() is None


def test_parity():
    assert gen_E(3).parity() == 1
    assert gen_F(-1).parity() == 1
    assert gen_h(2).parity() == 0
    assert (gen_E(0) * gen_F(2)).parity() == 0
    assert (gen_E(0) * gen_h(1)).parity() == 1


def test_tensor_koszul_sign():
    one = Element.one()
    E, F = gen_E(0), gen_F(1)
    left = TensorElement.of(one, E) * TensorElement.of(F, one)
    # moving an odd factor past an odd factor flips the sign
    assert left == -TensorElement.of(F, E)
    h = gen_h(1)
    assert TensorElement.of(one, E) * TensorElement.of(h, one) == \
        TensorElement.of(h, E)


def test_tensor_flip_and_product():
    E, F, h = gen_E(0), gen_F(1), gen_h(1)
    t = TensorElement.of(E, F) + TensorElement.of(h, Element.one())
    assert t.flip().flip() == t
    # the signed flip is an algebra map, not an antihomomorphism
    a = TensorElement.of(E, Element.one())
    b = TensorElement.of(Element.one(), F)
    assert (a * b).flip() == a.flip() * b.flip()


def test_tensor_componentwise_product():
    a = TensorElement.of(gen_h(1), gen_C(2))
    b = TensorElement.of(gen_h(2), gen_C(1))
    # even factors multiply leg by leg with no sign
    assert a * b == TensorElement.of(gen_h(1) * gen_h(2), gen_C(2) * gen_C(1))
