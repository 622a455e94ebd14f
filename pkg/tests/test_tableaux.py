import pytest
from hypothesis import given, settings, strategies as st

from cyclechains import (
    RULE_COL,
    RULE_CONGRUENCE,
    RULE_RANGE,
    RULE_ROW,
    DivisorQuery,
    Tableau,
    TorsionProfile,
    enumerate_tableaux,
    params_of,
    shape_for,
    validate,
    validate_grid,
)
from oracle import grid_congruent, grid_monotone, valid_grid

# --- construction -----------------------------------------------------------


def test_tableau_accepts_valid_grid():
    t = Tableau(((1, 2), (3, 4)), 5)
    assert t.shape == (2, 2)
    assert t.at(2, 1) == 3
    assert list(t.values()) == [1, 2, 3, 4]


def test_tableau_rejects_row_violation():
    with pytest.raises(ValueError):
        Tableau(((2, 2),), 4)


def test_tableau_rejects_column_violation():
    with pytest.raises(ValueError):
        Tableau(((1, 3), (1, 4)), 5)


def test_tableau_rejects_range_violation():
    with pytest.raises(ValueError):
        Tableau(((1, 6),), 5)
    with pytest.raises(ValueError):
        Tableau(((0, 1),), 5)


def test_tableau_rejects_ragged_grid():
    with pytest.raises(ValueError):
        Tableau(((1, 2), (3,)), 5)


def test_empty_tableau_allowed():
    t = Tableau((), 4)
    assert t.shape == (0, 0)
    assert list(t.values()) == []


def test_genus_must_be_positive():
    with pytest.raises(ValueError):
        Tableau(((1,),), 0)


# --- repeats across rows are fine when moduli permit ------------------------


def test_repeat_on_congruent_diagonals():
    # value 3 sits at (1,3) and (2,1): diagonals -2 and 1, distance 3, and
    # m_3 = 3 divides it
    t = Tableau(((1, 2, 3), (3, 4, 5)), 5)
    prof = TorsionProfile(5, (2, 3, 2, 2))
    assert validate(t, prof).valid


def test_repeat_rejected_when_modulus_misses():
    t = Tableau(((1, 2, 3), (3, 4, 5)), 5)
    prof = TorsionProfile(5, (2, 2, 2, 2))
    report = validate(t, prof)
    assert not report.valid
    assert any(v.rule == RULE_CONGRUENCE and v.value == 3 for v in report.violations)


def test_zero_modulus_means_exact_equality_of_diagonals():
    t = Tableau(((1, 2, 3), (3, 4, 5)), 5)
    prof = TorsionProfile(5, (0, 0, 0, 0))
    assert not validate(t, prof).valid


def test_zero_modulus_forbids_every_repeat():
    # strict increase means equal values never share a diagonal: the cell
    # (x+k, y+k) always exceeds (x, y). So zero entries reject any repeat.
    prof = TorsionProfile(5, (0, 0, 0, 0))
    for grid in (((1, 2, 3), (3, 4, 5)), ((1, 2), (2, 3)), ((1, 3), (3, 5))):
        assert not validate(Tableau(grid, 5), prof).valid


# --- validate_grid reports every broken rule --------------------------------


def test_validate_grid_reports_monotonicity():
    rep = validate_grid(((2, 1), (1, 3)), 4, TorsionProfile.zeros(4))
    assert not rep.valid
    rules = {v.rule for v in rep.violations}
    assert RULE_ROW in rules and RULE_COL in rules


def test_validate_grid_reports_range():
    rep = validate_grid(((1, 9),), 4, TorsionProfile.zeros(4))
    assert not rep.valid
    assert any(v.rule == RULE_RANGE for v in rep.violations)


def test_validate_grid_genus_mismatch_raises():
    with pytest.raises(ValueError):
        validate_grid(((1, 2),), 4, TorsionProfile.zeros(5))


def test_validate_grid_rejects_non_integers():
    with pytest.raises(ValueError):
        validate_grid((("1", 2),), 4, TorsionProfile.zeros(4))


small_grids = st.integers(min_value=1, max_value=3).flatmap(
    lambda r: st.integers(min_value=1, max_value=3).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(min_value=1, max_value=8), min_size=c, max_size=c).map(tuple),
            min_size=r,
            max_size=r,
        ).map(tuple)
    )
)
entry_lists = st.lists(st.sampled_from([0, 2, 3, 4]), min_size=5, max_size=5).map(tuple)


@given(small_grids, entry_lists)
@settings(max_examples=300)
def test_validate_grid_matches_definitional_oracle(grid, entries):
    genus = 6
    prof = TorsionProfile(genus, entries)
    rep = validate_grid(grid, genus, prof)
    assert rep.valid == valid_grid(grid, genus, entries)
    # rule-level agreement too
    mono = grid_monotone(grid, genus)
    assert (not any(v.rule in (RULE_ROW, RULE_COL, RULE_RANGE) for v in rep.violations)) == mono
    if mono:
        assert (not rep.violations) == grid_congruent(grid, entries)


# --- transpose / restrict / append ------------------------------------------


def tableaux_for(genus, rows, cols, entries):
    prof = TorsionProfile(genus, entries)
    return list(enumerate_tableaux(rows, cols, genus, prof))


@given(
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=1, max_value=3),
    entry_lists,
    st.data(),
)
@settings(max_examples=200, deadline=None)
def test_transpose_involution_preserves_validity(rows, cols, entries, data):
    genus = 6
    prof = TorsionProfile(genus, entries)
    pool = tableaux_for(genus, rows, cols, entries)
    if not pool:
        return
    t = data.draw(st.sampled_from(pool))
    tt = t.transpose()
    assert tt.shape == (cols, rows)
    assert tt.transpose() == t
    assert validate(tt, prof).valid


def test_transpose_example():
    t = Tableau(((1, 2, 4), (3, 5, 6)), 6)
    assert t.transpose().entries == ((1, 3), (2, 5), (4, 6))


@given(
    st.integers(min_value=2, max_value=3),
    st.integers(min_value=2, max_value=3),
    entry_lists,
    st.data(),
)
@settings(max_examples=200, deadline=None)
def test_restriction_stays_valid(rows, cols, entries, data):
    genus = 6
    prof = TorsionProfile(genus, entries)
    pool = tableaux_for(genus, rows, cols, entries)
    if not pool:
        return
    t = data.draw(st.sampled_from(pool))
    r = data.draw(st.integers(min_value=1, max_value=rows))
    c = data.draw(st.integers(min_value=1, max_value=cols))
    sub = t.restrict(r, c)
    assert sub.shape == (r, c)
    assert sub.genus == genus
    assert validate(sub, prof).valid
    for x in range(1, r + 1):
        for y in range(1, c + 1):
            assert sub.at(x, y) == t.at(x, y)


def test_restrict_bounds_checked():
    t = Tableau(((1, 2), (3, 4)), 5)
    with pytest.raises(ValueError):
        t.restrict(3, 1)
    with pytest.raises(ValueError):
        t.restrict(1, 0)


def test_with_genus_reinterprets_range():
    t = Tableau(((1, 2), (3, 4)), 9)
    assert t.with_genus(4).genus == 4
    with pytest.raises(ValueError):
        t.with_genus(3)


def test_append_pair_rows():
    t = Tableau(((1, 2), (2, 3)), 7)
    out = t.append_pair_rows(4, 2)
    assert out.entries == ((1, 2), (2, 3), (4, 5), (6, 7))
    assert out.genus == 7
    assert t.append_pair_rows(4, 0) == t


def test_append_pair_rows_requires_two_columns():
    t = Tableau(((1, 2, 3),), 9)
    with pytest.raises(ValueError):
        t.append_pair_rows(4, 1)


def test_append_pair_rows_range_checked():
    t = Tableau(((1, 2),), 4)
    with pytest.raises(ValueError):
        t.append_pair_rows(4, 1)  # would need value 5 > genus


# --- query bookkeeping -------------------------------------------------------


def test_shape_for_query():
    q = DivisorQuery(genus=5, degree=4, rank=1)
    assert q.shape == (2, 2)
    assert shape_for(q) == (2, 2)
    assert q.in_regime


def test_query_out_of_regime_shapes():
    assert DivisorQuery(genus=5, degree=5, rank=1).shape == (1, 2)
    assert not DivisorQuery(genus=5, degree=5, rank=1).in_regime
    assert DivisorQuery(genus=5, degree=6, rank=1).shape == (0, 2)


def test_query_validation():
    with pytest.raises(ValueError):
        DivisorQuery(genus=0, degree=2, rank=1)
    with pytest.raises(ValueError):
        DivisorQuery(genus=5, degree=2, rank=0)


@given(
    st.integers(min_value=2, max_value=12),
    st.integers(min_value=0, max_value=14),
    st.integers(min_value=1, max_value=6),
)
def test_params_of_inverts_shape(genus, degree, rank):
    q = DivisorQuery(genus=genus, degree=degree, rank=rank)
    back = params_of(q.shape, genus)
    assert (back.degree, back.rank) == (degree, rank)


def test_params_of_needs_two_columns():
    with pytest.raises(ValueError):
        params_of((2, 1), 5)
