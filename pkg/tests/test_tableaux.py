import pytest
from hypothesis import given, strategies as st

from qsc.compositions import compositions
from qsc.tableaux import (
    INF,
    augmented_cells,
    entry_or_inf,
    from_json_obj,
    immaculate_descent_set,
    immaculate_reading_word,
    is_immaculate,
    is_ssyct,
    is_standard,
    make_rows,
    parse_rows,
    positions,
    render,
    semistandard_tableaux,
    shape_of,
    standard_tableaux,
    to_json_obj,
    weight,
    weighted_tableaux,
    young_descent_set,
    young_reading_word,
)

# The running six-cell example of shape (1,3,2): a standard filling whose
# two reading words differ.
EXAMPLE = ((1,), (2, 3, 5), (4, 6))


def test_make_rows_validation():
    assert make_rows([[2], [3, 4, 7]]) == ((2,), (3, 4, 7))
    with pytest.raises(ValueError):
        make_rows([[0]])
    with pytest.raises(ValueError):
        make_rows([[1], []])
    with pytest.raises(ValueError):
        make_rows([[1.5]])


def test_shape_weight_positions():
    assert shape_of(EXAMPLE) == (1, 3, 2)
    assert weight(EXAMPLE) == (1, 1, 1, 1, 1, 1)
    assert weight(((1, 1), (2,))) == (2, 1)
    assert positions(EXAMPLE)[5] == (3, 2)
    assert positions(EXAMPLE)[4] == (1, 3)


def test_augmentation():
    assert entry_or_inf(EXAMPLE, 2, 1) is INF
    assert entry_or_inf(EXAMPLE, 2, 2) == 3
    cells = augmented_cells((1, 3, 2))
    # Rightmost column first, top to bottom within a column.
    assert cells[0] == (4, 2)
    assert cells[-1] == (1, 1)
    assert len(cells) == 9


def test_reading_words():
    assert young_reading_word(EXAMPLE) == (INF, INF, 5, 6, 3, INF, 4, 2, 1)
    assert immaculate_reading_word(EXAMPLE) == (4, 6, 2, 3, 5, 1)


def test_descent_sets_on_example():
    assert young_descent_set(EXAMPLE) == frozenset({1, 3, 5})
    assert immaculate_descent_set(EXAMPLE) == frozenset({1, 3, 5})


def test_descent_sets_distinguish():
    assert immaculate_descent_set(((1, 3), (2, 4))) == frozenset({1, 3})
    assert immaculate_descent_set(((1, 4), (2, 3))) == frozenset({1})
    assert young_descent_set(((1, 4), (2, 3))) == frozenset({1, 3})
    assert young_descent_set(((1,), (2, 3, 4))) == frozenset({1})


def test_filling_kinds():
    assert is_immaculate(EXAMPLE) and is_ssyct(EXAMPLE)
    assert is_standard(EXAMPLE)
    # Weakly increasing rows and a strict first column are not enough for
    # the triple rule.
    for rows in [((1, 2), (2, 2)), ((1, 3), (2, 3)), ((1, 2, 2), (2, 3))]:
        assert is_immaculate(rows)
        assert not is_ssyct(rows)
    assert is_ssyct(((1, 1), (2, 3)))
    assert not is_standard(((1, 1), (2, 3)))
    assert not is_immaculate(((2, 1),))
    assert not is_immaculate(((2,), (1, 1)))


def test_standard_enumeration_goldens():
    assert standard_tableaux((2, 2), "immaculate") == (
        ((1, 4), (2, 3)),
        ((1, 3), (2, 4)),
        ((1, 2), (3, 4)),
    )
    assert standard_tableaux((2, 2), "ssyct") == (
        ((1, 4), (2, 3)),
        ((1, 2), (3, 4)),
    )
    assert standard_tableaux((1, 3), "ssyct") == (((1,), (2, 3, 4)),)
    assert standard_tableaux((1, 2, 1), "ssyct") == (((1,), (2, 3), (4,)),)
    assert young_descent_set(((1,), (2, 3), (4,))) == frozenset({1, 3})


@given(st.integers(min_value=1, max_value=5))
def test_standard_enumeration_is_sound(n):
    for shape in compositions(n):
        for rows in standard_tableaux(shape, "immaculate"):
            assert shape_of(rows) == shape
            assert is_standard(rows) and is_immaculate(rows)
        ssyct = standard_tableaux(shape, "ssyct")
        assert set(ssyct) <= set(standard_tableaux(shape, "immaculate"))
        for rows in ssyct:
            assert is_ssyct(rows)


def test_semistandard_enumeration():
    small = semistandard_tableaux((1, 2), "ssyct", 2)
    assert all(is_ssyct(rows) for rows in small)
    assert all(max(max(r) for r in rows) <= 2 for rows in small)
    assert len(semistandard_tableaux((1, 2), "ssyct", 3)) > len(small)


def test_weighted_fillings():
    assert len(weighted_tableaux((1, 2, 1), "ssyct", (1, 2, 1))) == 1
    for rows in weighted_tableaux((2, 2), "immaculate", (1, 2, 1)):
        assert weight(rows) == (1, 2, 1)


def test_parse_and_render():
    assert parse_rows("2/3,4,7/6,8") == ((2,), (3, 4, 7), (6, 8))
    assert parse_rows("1") == ((1,),)
    with pytest.raises(ValueError):
        parse_rows("2//3")
    text = render(EXAMPLE)
    assert text.splitlines()[-1].strip() == "1"
    assert "4 6" in text


def test_json_round_trip():
    obj = to_json_obj(EXAMPLE)
    assert obj == {"shape": [1, 3, 2], "rows": [[1], [2, 3, 5], [4, 6]]}
    assert from_json_obj(obj) == EXAMPLE
    with pytest.raises(ValueError):
        from_json_obj({"shape": [2], "rows": [[1], [2]]})
