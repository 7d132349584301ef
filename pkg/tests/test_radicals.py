import pytest

from ringinv.radicals import (
    SizeCap,
    enumerate_ideals,
    is_quasi_regular,
    is_semiprime,
    is_semisimple_artinian,
    jacobson_radical,
    left_annihilator,
    minimal_ideals,
    module_length,
    nilpotency_index,
    prime_radical,
    radical_profile,
    regular_elements_quotient,
    ring_as_module,
    uniform_dimension,
)
from ringinv.caps import Caps
from ringinv.ring_core import (
    LEFT,
    RIGHT,
    Subgroup,
    SubringView,
    cyclic_ring,
    direct_product,
    group_ring,
    matrix_ring,
    zero_mult_ring,
)


def two_z8():
    return cyclic_ring(4, c=2, name="two_z8")


def m2f2():
    return matrix_ring(cyclic_ring(2), 2, name="m2f2")


def f3xf3():
    return direct_product([cyclic_ring(3), cyclic_ring(3)], name="f3xf3")


def f2c2():
    cayley = [[0, 1], [1, 0]]
    return group_ring(cyclic_ring(2), cayley, name="f2c2")


# -- nilpotency ---------------------------------------------------------------

def test_nilpotency_zero_mult():
    r = zero_mult_ring((2, 2))
    assert nilpotency_index(r) == 2


def test_nilpotency_two_z8():
    # R^2 = {0,4}, R^3 = 0 inside 2Z/8Z
    assert nilpotency_index(two_z8()) == 3


def test_nilpotency_unital_ring_none():
    assert nilpotency_index(cyclic_ring(3)) is None


# -- radicals -----------------------------------------------------------------

def test_prime_radical_z12():
    r = cyclic_ring(12)
    assert prime_radical(r).elements() == frozenset({(0,), (6,)})


def test_prime_radical_simple_ring():
    assert prime_radical(m2f2()).is_zero()


def test_prime_radical_zero_mult_whole():
    r = zero_mult_ring((2, 2))
    assert prime_radical(r).size == r.order


def test_jacobson_z12_agrees():
    r = cyclic_ring(12)
    assert jacobson_radical(r).elements() == frozenset({(0,), (6,)})


def test_jacobson_f2c2():
    r = f2c2()
    rad = jacobson_radical(r)
    # the square-zero span of 1+g
    assert rad.elements() == frozenset({(0, 0), (1, 1)})


def test_jacobson_semisimple_zero():
    assert jacobson_radical(f3xf3()).is_zero()


def test_radical_profile_cross_check():
    for r in (cyclic_ring(12), two_z8(), m2f2(), f2c2(), f3xf3()):
        profile = radical_profile(r)
        assert profile.prime_radical.sub == profile.jacobson_radical.sub
        assert profile.semiprime == profile.prime_radical.is_zero()
        assert profile.semisimple_artinian == profile.jacobson_radical.is_zero()


def test_radical_quotient_is_semiprime():
    from ringinv.ring_core import quotient_by_ideal

    for r in (cyclic_ring(12), two_z8(), f2c2()):
        nil = prime_radical(r)
        q = quotient_by_ideal(r, nil)
        assert is_semiprime(q.ring)


def test_quasi_regular_examples():
    r = cyclic_ring(12)
    assert is_quasi_regular(r, (6,))   # z = 6: 6+6+36 = 48 = 0 mod 12
    assert not is_quasi_regular(r, (11,))  # 11 = -1: z - 1 - z = -1 != 0


def test_semiprime_flags():
    assert is_semiprime(m2f2()) and is_semisimple_artinian(m2f2())
    assert not is_semiprime(two_z8()) and not is_semisimple_artinian(two_z8())
    assert not is_semiprime(f2c2()) and not is_semisimple_artinian(f2c2())


# -- ideal lattices and udim -----------------------------------------------------

def test_enumerate_ideals_z12():
    r = cyclic_ring(12)
    ideals, exhaustive = enumerate_ideals(r, LEFT)
    assert exhaustive
    # ideals of Z/12 correspond to divisors of 12
    assert sorted(i.size for i in ideals) == [1, 2, 3, 4, 6, 12]


def test_enumerate_ideals_count_cap():
    r = zero_mult_ring((2, 2, 2))
    ideals, exhaustive = enumerate_ideals(r, LEFT, Caps(ideal_count=5))
    assert not exhaustive
    assert len(ideals) >= 5


def test_minimal_ideals_m2f2():
    r = m2f2()
    atoms = minimal_ideals(r, LEFT)
    assert len(atoms) == 3  # one per line of the 2-dim column space
    assert all(a.size == 4 for a in atoms)


def test_udim_f3xf3():
    cert = uniform_dimension(f3xf3(), LEFT)
    assert cert.value == 2
    assert cert.maximality == "exhaustive"
    sizes = sorted(i.size for i in cert.witness)
    assert sizes == [3, 3]


def test_udim_m2f2_left():
    cert = uniform_dimension(m2f2(), LEFT)
    assert cert.value == 2


def test_udim_field_is_one():
    for q in (2, 3, 5, 7):
        assert uniform_dimension(cyclic_ring(q), LEFT).value == 1


def test_udim_diag_subring():
    r = f3xf3()
    diag = SubringView.from_elements(r, [(1, 1)])
    img = diag.image()
    assert uniform_dimension(img.ring, LEFT).value == 1


def test_udim_witness_reverified():
    cert = uniform_dimension(m2f2(), RIGHT)
    for ideal in cert.witness:
        assert not ideal.is_zero()
    assert cert.value == len(cert.witness)


# -- regular elements ----------------------------------------------------------------

def test_regular_elements_z12():
    out = regular_elements_quotient(cyclic_ring(12))
    assert out.regular == ((1,), (5,), (7,), (11,))
    assert out.units == out.regular
    assert out.quotient_status == "equals-ring"
    assert out.goldie


def test_regular_elements_m2f2_gl2():
    out = regular_elements_quotient(m2f2())
    assert len(out.regular) == 6  # |GL_2(F_2)|
    assert out.regular_are_units


def test_regular_elements_zero_mult_degenerate():
    out = regular_elements_quotient(zero_mult_ring((2, 2)))
    assert out.regular == ()
    assert out.quotient_status == "degenerate-undefined"


# -- annihilators -----------------------------------------------------------------------

def test_left_annihilator_zero_set():
    r = cyclic_ring(12)
    assert left_annihilator(r, [(0,)]).size == 12


def test_left_annihilator_z12_of_6():
    r = cyclic_ring(12)
    ann = left_annihilator(r, [(6,)])
    assert ann.elements() == frozenset({(0,), (2,), (4,), (6,), (8,), (10,)})


def test_left_annihilator_m2f2_e11():
    r = m2f2()
    ann = left_annihilator(r, [(1, 0, 0, 0)])
    # matrices with zero first column: span{e12, e22}
    assert ann.size == 4
    for x in ann.elements():
        assert x[0] == 0 and x[2] == 0


# -- modules and length --------------------------------------------------------------------

def test_module_length_zero():
    r = cyclic_ring(4)
    m = ring_as_module(r, LEFT)
    q = m.quotient(Subgroup.from_generators(r.additive, r.generators()))
    assert module_length(q) == 0


def test_module_length_f3xf3_over_itself():
    m = ring_as_module(f3xf3(), LEFT)
    assert module_length(m) == 2


def test_module_length_z4_over_itself():
    m = ring_as_module(cyclic_ring(4), LEFT)
    assert module_length(m) == 2


def test_module_length_additive_on_series():
    # splitting off one atom drops the length by exactly one
    m = ring_as_module(f3xf3(), LEFT)
    atom = m.minimal_submodules()[0]
    q = m.quotient(atom)
    assert module_length(m) == module_length(q) + 1


def test_module_length_size_cap():
    m = ring_as_module(cyclic_ring(8), LEFT)
    with pytest.raises(SizeCap):
        module_length(m, Caps(module_order=4))


def test_module_length_choice_independent():
    """Composition length must not depend on which atom gets split off."""

    def length_with(module, pick):
        n = 0
        current = module
        while current.size > 1:
            atoms = current.minimal_submodules()
            current = current.quotient(pick(atoms))
            n += 1
        return n

    for ring in (f3xf3(), cyclic_ring(4), m2f2(), f2c2(), cyclic_ring(12)):
        for side in (LEFT, RIGHT):
            m = ring_as_module(ring, side)
            first = length_with(m, lambda atoms: atoms[0])
            last = length_with(m, lambda atoms: atoms[-1])
            assert first == last == module_length(m), (ring.name, side)


def test_module_over_subring():
    r = f3xf3()
    diag = SubringView.from_elements(r, [(1, 1)])
    img = diag.image()
    m = ring_as_module(r, LEFT, scalars=img.ring, embed=img.from_image)
    # as a module over the diagonal, the ring splits into two lines
    assert module_length(m) == 2
