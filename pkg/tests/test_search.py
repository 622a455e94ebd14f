import pytest
from hypothesis import given, settings, strategies as st

from cyclechains import (
    BudgetExhaustedError,
    SearchBudget,
    Tableau,
    TorsionProfile,
    count_tableaux,
    enumerate_tableaux,
    find_tableau,
    validate,
)
from oracle import brute_count, brute_grids

# --- frozen examples (oracle values computed first, then pinned) -------------


def test_count_zeros_2x2_genus4():
    # brute scan over 4^4 grids gives exactly the two standard fillings
    assert brute_count(2, 2, 4, (0, 0, 0)) == 2
    assert count_tableaux(2, 2, 4, TorsionProfile.zeros(4)) == 2


def test_count_uniform2_2x2_genus3():
    # with every entry 2, genus 3 admits ((1,2),(2,3)) via diagonal shift 2
    assert brute_count(2, 2, 3, (2, 2)) == 1
    assert count_tableaux(2, 2, 3, TorsionProfile.uniform(3, 2)) == 1
    t = find_tableau(2, 2, 3, TorsionProfile.uniform(3, 2))
    assert t.entries == ((1, 2), (2, 3))


def test_zeros_2x2_genus3_absent():
    assert brute_count(2, 2, 3, (0, 0)) == 0
    assert find_tableau(2, 2, 3, TorsionProfile.zeros(3)) is None


def test_lex_first_witness_zeros_2x2_genus4():
    t = find_tableau(2, 2, 4, TorsionProfile.zeros(4))
    assert t.entries == ((1, 2), (3, 4))


# --- shape edge cases ---------------------------------------------------------


def test_empty_shape_yields_trivial_tableau():
    prof = TorsionProfile.zeros(4)
    assert find_tableau(0, 3, 4, prof) == Tableau((), 4)
    assert find_tableau(2, 0, 4, prof) == Tableau((), 4)
    assert count_tableaux(0, 0, 4, prof) == 1
    assert list(enumerate_tableaux(0, 2, 4, prof)) == [Tableau((), 4)]


def test_oversized_shape_short_circuits():
    prof = TorsionProfile.zeros(4)
    # bottom-right corner needs value >= rows + cols - 1 > genus
    assert find_tableau(4, 2, 4, prof) is None
    assert count_tableaux(3, 3, 4, prof) == 0
    assert list(enumerate_tableaux(5, 5, 4, prof)) == []


def test_negative_shape_rejected():
    with pytest.raises(ValueError):
        find_tableau(-1, 2, 4, TorsionProfile.zeros(4))


def test_genus_mismatch_rejected():
    with pytest.raises(ValueError):
        find_tableau(2, 2, 4, TorsionProfile.zeros(5))


# --- equivalence with the unpruned definitional scan --------------------------

shapes = st.tuples(st.integers(1, 3), st.integers(1, 2))
entry_alphabet = st.sampled_from([0, 2, 3, 4])


@given(shapes, st.integers(2, 6), st.data())
@settings(max_examples=200, deadline=None)
def test_search_agrees_with_brute_force(shape, genus, data):
    rows, cols = shape
    entries = tuple(data.draw(entry_alphabet) for _ in range(genus - 1))
    prof = TorsionProfile(genus, entries)
    expect = brute_grids(rows, cols, genus, entries)
    got = [t.entries for t in enumerate_tableaux(rows, cols, genus, prof)]
    assert got == expect
    assert count_tableaux(rows, cols, genus, prof) == len(expect)
    first = find_tableau(rows, cols, genus, prof)
    assert (first.entries if first else None) == (expect[0] if expect else None)


@given(shapes, st.integers(2, 6), st.data())
@settings(max_examples=100, deadline=None)
def test_every_enumerated_tableau_is_valid(shape, genus, data):
    rows, cols = shape
    entries = tuple(data.draw(entry_alphabet) for _ in range(genus - 1))
    prof = TorsionProfile(genus, entries)
    for t in enumerate_tableaux(rows, cols, genus, prof):
        assert t.shape == (rows, cols)
        assert validate(t, prof).valid


@given(shapes, st.integers(2, 6), st.data())
@settings(max_examples=60, deadline=None)
def test_enumeration_is_deterministic(shape, genus, data):
    rows, cols = shape
    entries = tuple(data.draw(entry_alphabet) for _ in range(genus - 1))
    prof = TorsionProfile(genus, entries)
    a = list(enumerate_tableaux(rows, cols, genus, prof))
    b = list(enumerate_tableaux(rows, cols, genus, prof))
    assert a == b


def test_enumeration_order_is_lexicographic():
    prof = TorsionProfile(5, (2, 0, 3, 0))
    grids = [t.entries for t in enumerate_tableaux(2, 2, 5, prof)]
    flats = [sum(g, ()) for g in grids]
    assert flats == sorted(flats)


# --- budgets ------------------------------------------------------------------


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(node_cap=0)
    with pytest.raises(ValueError):
        SearchBudget(count_cap=-1)


def test_node_budget_exhaustion():
    prof = TorsionProfile.zeros(12)
    with pytest.raises(BudgetExhaustedError):
        count_tableaux(3, 3, 12, prof, SearchBudget(node_cap=5))


def test_node_budget_large_enough_succeeds():
    prof = TorsionProfile.zeros(6)
    n = count_tableaux(2, 2, 6, prof, SearchBudget(node_cap=10_000))
    assert n == brute_count(2, 2, 6, (0,) * 5)


def test_count_cap_exhaustion():
    prof = TorsionProfile.zeros(10)
    with pytest.raises(BudgetExhaustedError):
        count_tableaux(2, 2, 10, prof, SearchBudget(count_cap=3))


def test_find_needs_no_count_cap():
    prof = TorsionProfile.zeros(10)
    t = find_tableau(2, 2, 10, prof, SearchBudget(count_cap=1))
    assert t is not None


def test_find_budget_exhaustion_is_distinct_from_absence():
    # genus 3 zeros has no 2x2 tableau; a tiny node budget must raise, not
    # return None, because the search did not finish
    prof = TorsionProfile.zeros(3)
    with pytest.raises(BudgetExhaustedError):
        find_tableau(2, 2, 3, prof, SearchBudget(node_cap=1))
