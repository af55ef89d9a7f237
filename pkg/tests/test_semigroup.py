import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from centralsets.catalog import all_semigroups, random_semigroup, semigroups_up_to
from centralsets.errors import ElementOutOfRange, IndexOutOfRange, NonAssociative
from centralsets.semigroup import (
    ElementSet,
    central_shift_spectrum,
    ideal_structure,
    largeness_profile,
    load_semigroup,
    shift_set,
    subsets_in_order,
)


def members(S, *xs):
    return ElementSet.of(S.order, xs)


class TestLoadSemigroup:
    def test_mod2_table_valid(self):
        S = load_semigroup(2, [[0, 0], [0, 1]])
        assert S.mul(1, 1) == 1

    def test_group_table_valid(self):
        S = load_semigroup(2, [[0, 1], [1, 0]])
        assert S.mul(1, 1) == 0

    def test_nonassociative_reports_first_failing_triple(self):
        with pytest.raises(NonAssociative) as exc:
            load_semigroup(2, [[1, 0], [0, 0]])
        # exhaustive scan in (i, j, k) order: (0,0,0) passes, (0,0,1) fails
        assert exc.value.triple == (0, 0, 1)

    def test_dimension_mismatch(self):
        with pytest.raises(IndexOutOfRange):
            load_semigroup(3, [[0, 0], [0, 0]])

    def test_entry_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            load_semigroup(2, [[0, 2], [0, 1]])


class TestIdealStructure:
    def test_cyclic_group(self, z3):
        st_ = ideal_structure(z3)
        assert st_.kernel.as_tuple() == (0, 1, 2)
        assert st_.idempotents.as_tuple() == (0,)
        assert st_.minimal_idempotents.as_tuple() == (0,)

    def test_right_zero(self, rz2):
        st_ = ideal_structure(rz2)
        assert [L.as_tuple() for L in st_.minimal_left_ideals] == [(0,), (1,)]
        assert st_.kernel.as_tuple() == (0, 1)
        assert st_.idempotents.as_tuple() == (0, 1)
        assert st_.minimal_idempotents.as_tuple() == (0, 1)

    def test_absorbing_zero(self, mod2):
        st_ = ideal_structure(mod2)
        assert [L.as_tuple() for L in st_.minimal_left_ideals] == [(0,)]
        assert st_.kernel.as_tuple() == (0,)
        assert st_.idempotents.as_tuple() == (0, 1)
        assert st_.minimal_idempotents.as_tuple() == (0,)

    def test_kernel_same_from_both_sides_exhaustive(self):
        for S in semigroups_up_to(3):
            st_ = ideal_structure(S)
            left = frozenset().union(*(L.members for L in st_.minimal_left_ideals))
            right = frozenset().union(*(R.members for R in st_.minimal_right_ideals))
            assert left == right == st_.kernel.members

    def test_idempotents_never_empty_exhaustive(self):
        for S in semigroups_up_to(3):
            assert len(ideal_structure(S).idempotents) >= 1


class TestLargenessProfile:
    def test_singleton_in_group(self, z3):
        p = largeness_profile(z3, members(z3, 0))
        assert not p.thick
        assert p.syndetic and p.syndetic_witness == (0, 1, 2)
        assert p.piecewise_syndetic
        assert p.central and p.central_witness == 0

    def test_complement_of_identity_not_central(self, z3):
        p = largeness_profile(z3, members(z3, 1, 2))
        assert not p.central

    def test_right_zero_singleton_thick(self, rz2):
        p = largeness_profile(rz2, members(rz2, 0))
        assert p.thick and p.thick_witness == 0
        assert p.central

    def test_empty_set_is_never_large(self):
        for S in semigroups_up_to(2):
            p = largeness_profile(S, ElementSet.of(S.order, []))
            assert not (p.thick or p.syndetic or p.piecewise_syndetic or p.central)

    def test_whole_set_is_everything(self, z3):
        p = largeness_profile(z3, members(z3, 0, 1, 2))
        assert p.thick and p.syndetic and p.piecewise_syndetic and p.central

    def test_rejects_foreign_set(self, z3):
        with pytest.raises(ElementOutOfRange):
            largeness_profile(z3, ElementSet.of(5, [4]))


class TestShiftSet:
    def test_group_shift(self, z3):
        assert shift_set(z3, members(z3, 0), 1).as_tuple() == (2,)

    def test_full_set_shifts_to_full(self, z3):
        assert shift_set(z3, members(z3, 0, 1, 2), 2).as_tuple() == (0, 1, 2)

    def test_absorbing_shift_empty(self, mod2):
        assert shift_set(mod2, members(mod2, 1), 0).as_tuple() == ()

    def test_bad_element(self, z3):
        with pytest.raises(ElementOutOfRange):
            shift_set(z3, members(z3, 0), 3)


class TestCentralShiftSpectrum:
    def test_absorbing_zero_set(self, mod2):
        B, rep = central_shift_spectrum(mod2, members(mod2, 0))
        assert B.as_tuple() == (0, 1)
        assert rep.agree and rep.piecewise_syndetic and rep.spectrum_syndetic

    def test_empty_set(self, z3):
        B, rep = central_shift_spectrum(z3, ElementSet.of(3, []))
        assert B.as_tuple() == ()
        assert rep.agree
        assert not (rep.piecewise_syndetic or rep.spectrum_syndetic or rep.spectrum_nonempty)

    def test_right_zero(self, rz2):
        # every left shift of {1} is {1}, which is central in the right-zero semigroup
        B, rep = central_shift_spectrum(rz2, members(rz2, 1))
        assert B.as_tuple() == (0, 1)
        assert rep.agree and rep.piecewise_syndetic


def test_enumeration_counts():
    assert len(all_semigroups(1)) == 1
    assert len(all_semigroups(2)) == 8
    assert len(all_semigroups(3)) == 113


def test_random_semigroups_are_valid_and_seeded():
    import random
    tables_a = [random_semigroup(4, random.Random(11)).table for _ in range(3)]
    tables_b = [random_semigroup(4, random.Random(11)).table for _ in range(3)]
    assert tables_a[0] == tables_b[0]
    for order in (1, 2, 3, 4):
        rng = random.Random(order)
        for _ in range(10):
            S = random_semigroup(order, rng)
            load_semigroup(S.order, S.table)  # revalidates associativity


@st.composite
def small_instance(draw):
    S = draw(st.sampled_from(semigroup_pool()))
    sub = draw(st.sets(st.integers(0, S.order - 1)))
    return S, ElementSet.of(S.order, sub)


_pool = None


def semigroup_pool():
    global _pool
    if _pool is None:
        _pool = list(semigroups_up_to(3))
    return _pool


@settings(max_examples=60, derandomize=True)
@given(small_instance())
def test_pws_iff_kernel_meets_set(inst):
    S, A = inst
    p = largeness_profile(S, A)
    assert p.piecewise_syndetic == bool(ideal_structure(S).kernel.members & A.members)


@settings(max_examples=60, derandomize=True)
@given(small_instance())
def test_largeness_chain(inst):
    S, A = inst
    p = largeness_profile(S, A)
    if p.thick:
        assert p.central
    if p.central:
        assert p.piecewise_syndetic
    if p.syndetic:
        assert p.piecewise_syndetic


@settings(max_examples=60, derandomize=True)
@given(small_instance())
def test_witnesses_check_out(inst):
    S, A = inst
    p = largeness_profile(S, A)
    if p.thick:
        assert all(S.mul(s, p.thick_witness) in A.members for s in S.elements)
    if p.syndetic:
        G = p.syndetic_witness
        assert all(any(S.mul(g, s) in A.members for g in G) for s in S.elements)
    if p.piecewise_syndetic:
        G, a = p.pws_witness
        covered = {s for s in S.elements if any(S.mul(g, s) in A.members for g in G)}
        assert all(S.mul(s, a) in covered for s in S.elements)
    if p.central:
        e = p.central_witness
        assert S.mul(e, e) == e and e in A.members
        assert e in ideal_structure(S).kernel.members


def test_subsets_in_order_is_size_then_lex():
    got = list(subsets_in_order([2, 0, 1]))
    assert got == [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]


def test_pws_iff_kernel_on_random_order_four():
    import random

    rng = random.Random(404)
    for _ in range(40):
        S = random_semigroup(4, rng)
        kernel = ideal_structure(S).kernel.members
        for sub in subsets_in_order(range(4), include_empty=True):
            A = ElementSet.of(4, sub)
            assert largeness_profile(S, A).piecewise_syndetic == bool(kernel & A.members)
