import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from centralsets.catalog import left_zero
from centralsets.contexts import NAT_ADD, NAT_MUL, semigroup_context
from centralsets.errors import (
    BadBounds,
    BudgetExceeded,
    DomainTooSmall,
    NoStar,
    UndefinedAt,
)
from centralsets.halesjewett import (
    ChiArguments,
    JSearchBounds,
    VariableWord,
    WordColoring,
    build_gw,
    chi_eval,
    cset_recursion,
    find_j_witness,
    find_mono_line,
    hj_number_search,
    line,
    reduce_line_to_witness,
    subsets_of_tables,
    verify_c_witness,
    verify_j_witness,
    verify_mono_line,
)

IDENT = tuple(range(1, 101))
DOUBLE = tuple(2 * n for n in range(1, 101))


class TestLines:
    def test_star_then_letter(self):
        assert line(VariableWord.of(2, (0, 1))) == [(1, 1), (2, 1)]

    def test_all_stars(self):
        assert line(VariableWord.of(2, (0, 0))) == [(1, 1), (2, 2)]

    def test_three_letters(self):
        assert line(VariableWord.of(3, (2, 0))) == [(2, 1), (2, 2), (2, 3)]

    def test_no_star_rejected(self):
        with pytest.raises(NoStar):
            VariableWord.of(2, (1, 2))


class TestFindMonoLine:
    def test_diagonal_coloring(self):
        # ranks (1,1),(1,2),(2,1),(2,2); equal-letter words share color 1
        col = WordColoring.of(2, 2, 2, [1, 2, 2, 1])
        w = find_mono_line(col)
        assert w.entries == (0, 0)
        assert verify_mono_line(col, w)

    def test_constant_coloring_length_one(self):
        assert find_mono_line(WordColoring.of(2, 1, 2, [1, 1])).entries == (0,)

    def test_separating_coloring_has_no_line(self):
        assert find_mono_line(WordColoring.of(2, 1, 2, [1, 2])) is None

    def test_output_always_monochromatic(self):
        for values in ([1, 1, 2, 2], [2, 1, 1, 2], [1, 2, 1, 2]):
            col = WordColoring.of(2, 2, 2, values)
            w = find_mono_line(col)
            if w is not None:
                assert verify_mono_line(col, w)


class TestHjNumberSearch:
    def test_two_letters_two_colors(self):
        res = hj_number_search(2, 2, 3)
        assert res.found == 2
        assert res.refuter_for(1) == (1, 2)
        assert dict(res.checked)[2] == 16  # all colorings of the 4-word cube

    def test_single_letter(self):
        assert hj_number_search(1, 5, 2).found == 1

    def test_single_color(self):
        assert hj_number_search(2, 1, 2).found == 1

    def test_budget_guard(self):
        with pytest.raises(BudgetExceeded) as exc:
            hj_number_search(3, 3, 4, budget=1000)
        assert exc.value.partial is not None


class TestChiEval:
    def test_additive_one_slot(self):
        args = ChiArguments.of(1, (1, 1), (3,), IDENT)
        assert chi_eval(args, NAT_ADD) == 5

    def test_additive_two_slots(self):
        args = ChiArguments.of(2, (1, 1, 1), (1, 2), IDENT)
        assert chi_eval(args, NAT_ADD) == 6

    def test_cyclic_group(self, z3):
        mod3 = tuple(n % 3 for n in range(1, 10))
        args = ChiArguments.of(1, (1, 1), (2,), mod3)
        assert chi_eval(args, z3) == 1

    def test_undefined_position(self):
        with pytest.raises(UndefinedAt):
            ChiArguments.of(1, (1, 1), (200,), IDENT)

    def test_bad_shapes(self):
        with pytest.raises(BadBounds):
            ChiArguments.of(2, (1, 1), (1, 2), IDENT)
        with pytest.raises(BadBounds):
            ChiArguments.of(2, (1, 1, 1), (2, 2), IDENT)


class TestFindJWitness:
    def test_evens_least_witness(self):
        evens = set(range(2, 101, 2))
        bounds = JSearchBounds.of(2, 5, (1, 2, 3, 4))
        w = find_j_witness(evens, [IDENT], bounds, NAT_ADD)
        assert (w.m, w.a, w.t) == (1, (1, 2), (1,))
        assert verify_j_witness(evens, [IDENT], w, NAT_ADD)

    def test_left_zero_collapses_to_first_factor(self, lz2):
        const1 = tuple(1 for _ in range(10))
        w = find_j_witness({0}, [const1], JSearchBounds.of(2, 4, (0, 1)), lz2)
        assert w.a[0] == 0

    def test_empty_target(self):
        assert find_j_witness(set(), [IDENT], JSearchBounds.of(2, 4, (1, 2)), NAT_ADD) is None

    def test_min_t_respected(self):
        evens = set(range(2, 101, 2))
        bounds = JSearchBounds.of(2, 9, (1, 2, 3, 4))
        w = find_j_witness(evens, [IDENT], bounds, NAT_ADD, min_t=5)
        assert w is not None and w.t[0] > 5

    def test_two_sequences(self):
        mult4 = set(range(4, 201, 4))
        bounds = JSearchBounds.of(2, 12, tuple(range(1, 13)))
        w = find_j_witness(mult4, [IDENT, DOUBLE], bounds, NAT_ADD)
        assert w is not None
        assert verify_j_witness(mult4, [IDENT, DOUBLE], w, NAT_ADD)


class TestBuildGw:
    def test_single_sequence(self):
        g = build_gw([IDENT], 1, 1, 5, NAT_ADD)
        assert g[(1,)] == (3, 4, 5, 6, 7)  # l + 2

    def test_two_sequences_expansion(self):
        g = build_gw([IDENT, DOUBLE], 2, 1, 5, NAT_ADD)
        assert g[(1, 2)] == tuple(6 * l + 7 for l in range(1, 6))

    def test_zero_length_rejected(self):
        with pytest.raises(DomainTooSmall):
            build_gw([IDENT], 0, 1, 3, NAT_ADD)

    def test_short_table_rejected(self):
        with pytest.raises(DomainTooSmall):
            build_gw([(1, 2, 3)], 2, 1, 5, NAT_ADD)


class TestReduceLineToWitness:
    def test_worked_additive_example(self):
        w = VariableWord.of(2, (0, 1))
        red = reduce_line_to_witness(1, (1, 1), (1,), w, [IDENT, DOUBLE], 1, NAT_ADD)
        assert (red.m, red.a, red.t) == (1, (2, 6), (3,))
        assert red.checks == ((1, 11), (2, 14))  # both sides are 8 + h_i(3)

    def test_all_star_word(self):
        w = VariableWord.of(2, (0, 0))
        red = reduce_line_to_witness(1, (1, 1), (1,), w, [IDENT, DOUBLE], 1, NAT_ADD)
        assert red.m == 2  # one block, two star slots

    def test_degenerate_alphabet(self):
        w = VariableWord.of(1, (0,))
        red = reduce_line_to_witness(1, (1, 1), (1,), w, [IDENT], 1, NAT_ADD)
        assert red.checks == ((1, 5),)

    def test_multiplicative_carrier(self):
        h1 = tuple(1 + (n % 2) for n in range(1, 41))
        h2 = tuple(2 for _ in range(40))
        w = VariableWord.of(2, (0, 2, 0))
        red = reduce_line_to_witness(2, (1, 2, 1), (1, 3), w, [h1, h2], 1, NAT_MUL)
        assert red.m == 4
        assert len(red.a) == 5

    def test_finite_carrier(self, z3):
        ctx = semigroup_context(z3)
        h1 = tuple(n % 3 for n in range(1, 41))
        h2 = tuple((2 * n) % 3 for n in range(1, 41))
        w = VariableWord.of(2, (1, 0))
        red = reduce_line_to_witness(2, (0, 1, 2), (2, 4), w, [h1, h2], 1, ctx)
        assert red.m == 2

    def test_positions_are_block_offsets(self):
        w = VariableWord.of(2, (0, 1, 0))
        red = reduce_line_to_witness(2, (1, 1, 1), (2, 5), w, [IDENT, DOUBLE], 1, NAT_ADD)
        # stars at word positions 1 and 3, blocks at 2 and 5, length 3
        assert red.t == (7, 9, 16, 18)


@st.composite
def reduction_instance(draw):
    k = draw(st.integers(1, 3))
    length = draw(st.integers(1, 4))
    entries = [draw(st.integers(0, k)) for _ in range(length)]
    entries[draw(st.integers(0, length - 1))] = 0
    p = draw(st.integers(1, 3))
    s = tuple(sorted(draw(st.sets(st.integers(1, 6), min_size=p, max_size=p))))
    b = tuple(draw(st.integers(1, 9)) for _ in range(p + 1))
    d = draw(st.integers(1, 9))
    need = length * s[-1] + length
    H = [tuple(draw(st.integers(1, 9)) for _ in range(need)) for _ in range(k)]
    return k, entries, p, s, b, d, H


@settings(max_examples=60, derandomize=True, deadline=None)
@given(reduction_instance())
def test_reduction_always_verifies_additively(inst):
    k, entries, p, s, b, d, H = inst
    w = VariableWord.of(k, entries)
    red = reduce_line_to_witness(p, b, s, w, H, d, NAT_ADD)
    assert red.m == p * len(w.star_positions())


class TestCsetRecursion:
    def test_left_zero_collapse(self, lz2):
        const1 = tuple(1 for _ in range(10))
        out = cset_recursion({0, 1}, [[const1]], lz2, JSearchBounds.of(2, 4, (0, 1)))
        assert out.ok
        F = out.witness.subfamilies[0]
        assert out.witness.m[F] == 1
        ok, violation = verify_c_witness({0, 1}, out.witness, lz2)
        assert ok and violation is None

    def test_empty_membership_fails_at_first_subfamily(self, lz2):
        const1 = tuple(1 for _ in range(10))
        out = cset_recursion(set(), [[const1]], lz2, JSearchBounds.of(2, 4, (0, 1)))
        assert not out.ok
        assert sorted(out.failed_at) == [0]
        assert out.diagnostics["restricted_size"] == 0

    def test_multiples_of_four_two_level_family(self):
        ident = tuple(range(1, 61))
        double = tuple(2 * n for n in range(1, 61))
        A = set(range(4, 2001, 4))
        out = cset_recursion(A, [[ident], [ident, double]], NAT_ADD,
                             JSearchBounds.of(2, 20, tuple(range(1, 13))))
        assert out.ok
        wt = out.witness
        single = frozenset({0})
        both = frozenset({0, 1})
        assert (wt.m[single], wt.a[single], wt.t[single]) == (1, (1, 2), (1,))
        assert (wt.m[both], wt.a[both], wt.t[both]) == (1, (1, 3), (4,))
        ok, violation = verify_c_witness(A, wt, NAT_ADD)
        assert ok and violation is None

    def test_nesting_order_enforced(self):
        ident = tuple(range(1, 61))
        double = tuple(2 * n for n in range(1, 61))
        A = set(range(4, 2001, 4))
        out = cset_recursion(A, subsets_of_tables([ident, double]), NAT_ADD,
                             JSearchBounds.of(2, 20, tuple(range(1, 13))))
        assert out.ok
        wt = out.witness
        for F in wt.subfamilies:
            for G in wt.subfamilies:
                if F < G:
                    assert wt.t[F][-1] < wt.t[G][0]

    def test_verifier_flags_planted_ordering_defect(self):
        ident = tuple(range(1, 61))
        double = tuple(2 * n for n in range(1, 61))
        A = set(range(4, 2001, 4))
        out = cset_recursion(A, [[ident], [ident, double]], NAT_ADD,
                             JSearchBounds.of(2, 20, tuple(range(1, 13))))
        wt = out.witness
        tampered = dict(wt.t)
        tampered[frozenset({0, 1})] = (1,)  # now starts at/below the singleton's end
        wt.t = tampered
        ok, violation = verify_c_witness(A, wt, NAT_ADD)
        assert not ok and violation["kind"] == "ordering"

    def test_verifier_flags_planted_membership_defect(self):
        ident = tuple(range(1, 61))
        double = tuple(2 * n for n in range(1, 61))
        A = set(range(4, 2001, 4))
        out = cset_recursion(A, [[ident], [ident, double]], NAT_ADD,
                             JSearchBounds.of(2, 20, tuple(range(1, 13))))
        wt = out.witness
        tampered = dict(wt.a)
        F = wt.subfamilies[0]
        tampered[F] = tuple(v + 1 for v in tampered[F])  # knocks the product off A
        wt.a = tampered
        ok, violation = verify_c_witness(A, wt, NAT_ADD)
        assert not ok and violation["kind"] == "membership"


def test_subsets_of_tables():
    fams = subsets_of_tables([IDENT, DOUBLE])
    assert len(fams) == 3
    assert fams[0] == (IDENT,) and fams[2] == (IDENT, DOUBLE)


def test_longer_two_letter_cubes_keep_admitting_lines():
    # once length 2 forces a line for two colors, longer cubes do too
    import random

    rng = random.Random(22)
    for length in (3, 4):
        for _ in range(40):
            values = [rng.randint(1, 2) for _ in range(2 ** length)]
            col = WordColoring.of(2, length, 2, values)
            w = find_mono_line(col)
            assert w is not None and verify_mono_line(col, w)
