import pytest

from ringinv.groups import (
    AutomorphismGroup,
    GroupTooLarge,
    InvalidAutomorphism,
    NotDividing,
    NotPGroup,
    NotPModule,
    RingAutomorphism,
    close_group,
    fixed_ring,
    h_constant,
    identity_automorphism,
    p_group_fixed_point,
    p_normal_complement,
    quotient_action,
    trivial_group,
)
from ringinv.ring_core import (
    Subgroup,
    cyclic_ring,
    direct_product,
    zero_mult_ring,
)


def f3xf3():
    return direct_product([cyclic_ring(3), cyclic_ring(3)], name="f3xf3")


def swap_aut(ring):
    return RingAutomorphism(ring, [ring.generator(1), ring.generator(0)])


def f2cube():
    return direct_product([cyclic_ring(2)] * 3, name="f2cube")


def zm_f4():
    return zero_mult_ring((2, 2), name="zm_f4")


def zm_f4_group():
    """Order-6 automorphism group of the zero-multiplication ring on F4:
    multiplication by a cube root of unity together with squaring."""
    r = zm_f4()
    mult_omega = RingAutomorphism(r, [(0, 1), (1, 1)])
    frobenius = RingAutomorphism(r, [(1, 0), (1, 1)])
    return r, close_group([mult_omega, frobenius])


# -- automorphism validation -----------------------------------------------

def test_swap_is_automorphism():
    r = f3xf3()
    a = swap_aut(r)
    assert a.apply((1, 2)) == (2, 1)
    assert a.order() == 2


def test_invalid_automorphism_rejected():
    r = f3xf3()
    with pytest.raises(InvalidAutomorphism):
        # not injective: both generators map to the same element
        RingAutomorphism(r, [(1, 0), (1, 0)])
    with pytest.raises(InvalidAutomorphism):
        # additive map x -> 2x is a group automorphism of (Z/3)^2 but does
        # not preserve multiplication (2x*2y = 4xy = xy != 2xy in general)
        RingAutomorphism(r, [(2, 0), (0, 2)])


def test_negation_on_two_z8():
    r = cyclic_ring(4, c=2, name="two_z8")
    neg = RingAutomorphism(r, [(3,)])
    assert neg.order() == 2
    assert neg.apply((1,)) == (3,)


def test_inverse_and_compose():
    r, g = zm_f4_group()
    for a in g.elements:
        assert a.compose(a.inverse()).is_identity()
        assert a.inverse().compose(a).is_identity()


# -- closure -----------------------------------------------------------------

def test_close_group_swap():
    r = f3xf3()
    g = close_group([swap_aut(r)])
    assert g.order == 2


def test_close_group_empty_is_trivial():
    r = f3xf3()
    g = close_group([], ring=r)
    assert g.order == 1
    assert g.identity().is_identity()


def test_close_group_s3_on_f2cube():
    r = f2cube()
    cycle = RingAutomorphism(r, [r.generator(1), r.generator(2), r.generator(0)])
    transp = RingAutomorphism(r, [r.generator(1), r.generator(0), r.generator(2)])
    g = close_group([cycle, transp])
    assert g.order == 6
    orders = sorted(a.order() for a in g.elements)
    assert orders == [1, 2, 2, 2, 3, 3]  # the symmetric group on 3 letters


def test_close_group_cap():
    r = f2cube()
    cycle = RingAutomorphism(r, [r.generator(1), r.generator(2), r.generator(0)])
    transp = RingAutomorphism(r, [r.generator(1), r.generator(0), r.generator(2)])
    with pytest.raises(GroupTooLarge):
        close_group([cycle, transp], cap=4)


def test_group_closure_verified():
    r = f3xf3()
    a = swap_aut(r)
    with pytest.raises(Exception):
        AutomorphismGroup(r, [a])  # missing identity / not closed


# -- p-normal complements ------------------------------------------------------

def s3_group():
    r = f2cube()
    cycle = RingAutomorphism(r, [r.generator(1), r.generator(2), r.generator(0)])
    transp = RingAutomorphism(r, [r.generator(1), r.generator(0), r.generator(2)])
    return r, close_group([cycle, transp])


def test_p_normal_complement_s3_p2():
    _, g = s3_group()
    n2 = p_normal_complement(g, 2)
    assert n2 is not None
    assert n2.order == 3
    assert n2.is_normal_in(g)
    # the complement is exactly the elements of order coprime to 2
    census = {a for a in g.elements if a.order() % 2}
    assert set(n2.elements) == census


def test_p_normal_complement_c2():
    r = f3xf3()
    g = close_group([swap_aut(r)])
    n2 = p_normal_complement(g, 2)
    assert n2 is not None
    assert n2.order == 1


def test_p_normal_complement_s3_p3_not_exists():
    _, g = s3_group()
    assert p_normal_complement(g, 3) is None


def test_p_normal_complement_requires_divisor():
    r = f3xf3()
    g = close_group([swap_aut(r)])
    with pytest.raises(NotDividing):
        p_normal_complement(g, 5)


def test_lagrange_on_produced_subgroups():
    _, g = s3_group()
    n2 = p_normal_complement(g, 2)
    assert g.order % n2.order == 0


# -- h constant -----------------------------------------------------------------

def test_h_constant_values():
    assert h_constant(1) == 2
    assert h_constant(2) == 6
    assert h_constant(3) == 32
    assert h_constant(4) == 350


def test_h_constant_lower_bound():
    for n in range(1, 12):
        assert h_constant(n) >= 2 ** n


# -- fixed rings and quotient actions ----------------------------------------------

def test_fixed_ring_trivial_group():
    r = f3xf3()
    s = fixed_ring(r, trivial_group(r))
    assert s.size == r.order


def test_fixed_ring_swap():
    r = direct_product([cyclic_ring(2), cyclic_ring(2)], name="f2xf2")
    g = close_group([swap_aut(r)])
    s = fixed_ring(r, g)
    assert s.elements() == frozenset({(0, 0), (1, 1)})


def test_zm_f4_group_structure():
    r, g = zm_f4_group()
    assert g.order == 6
    n2 = p_normal_complement(g, 2)
    assert n2 is not None and n2.order == 3
    # fixed ring of the order-3 part is zero
    s = fixed_ring(r, n2)
    assert s.size == 1


def test_quotient_action_on_zero_fixed_ring():
    r, g = zm_f4_group()
    n2 = p_normal_complement(g, 2)
    s = fixed_ring(r, n2)
    induced, coset_map = quotient_action(g, n2, s)
    assert induced.ring.order == 1
    assert induced.order == 1
    assert len(coset_map) == 6


def test_quotient_action_by_whole_group():
    r = f3xf3()
    g = close_group([swap_aut(r)])
    s = fixed_ring(r, g)
    induced, _ = quotient_action(g, g, s)
    assert induced.order == 1
    assert induced.ring.order == 3


def test_quotient_action_by_trivial_subgroup():
    r = f3xf3()
    g = close_group([swap_aut(r)])
    triv = trivial_group(r)
    s = fixed_ring(r, triv)
    induced, _ = quotient_action(g, triv, s)
    assert induced.order == g.order
    assert induced.ring.order == r.order


# -- p-group fixed points ---------------------------------------------------------

def test_fixed_point_swap_on_f2_square():
    r = zero_mult_ring((2, 2))
    g = close_group([RingAutomorphism(r, [(0, 1), (1, 0)])])
    v = Subgroup.from_generators(r.additive, r.generators())
    assert p_group_fixed_point(g, v) == (1, 1)


def test_fixed_point_zero_module():
    r = zero_mult_ring((2, 2))
    g = close_group([RingAutomorphism(r, [(0, 1), (1, 0)])])
    v = Subgroup.zero(r.additive)
    assert p_group_fixed_point(g, v) is None


def test_fixed_point_rejects_trivial_group():
    r = zero_mult_ring((3,))
    g = trivial_group(r)
    v = Subgroup.from_generators(r.additive, r.generators())
    with pytest.raises(NotPGroup):
        p_group_fixed_point(g, v)


def test_fixed_point_rejects_wrong_prime():
    r = zero_mult_ring((3, 3, 2))
    # order-3 automorphism cycling nothing useful; use the 2-part as module
    a = RingAutomorphism(r, [(0, 1, 0), (2, 2, 0), (0, 0, 1)])
    assert a.order() == 3
    g = close_group([a])
    v = Subgroup.from_generators(r.additive, [(0, 0, 1)])
    with pytest.raises(NotPModule):
        p_group_fixed_point(g, v)
