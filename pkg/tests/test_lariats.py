"""Lariat products and tables against the printed fixtures."""

from fractions import Fraction

import pytest

from boxkites.algebra import Hypercomplex, hc_mul
from boxkites.fixtures import (
    MOCK_OCTONION_AF,
    QUIZZICAL_TRIPLES,
    SWITCHING_YARD,
    SYNC_TABLE,
)
from boxkites.kites import build_box_kite
from boxkites.lariats import (
    YARD_SYMBOLS,
    LariatResult,
    NonCollapsibleError,
    collapse,
    is_octonion_isomorphic,
    lariat_product,
    mock_octonion_table,
    quizzical_tables,
    switching_yard,
    symbol_rep,
    trip_sync_report,
    yard_strut_subtable,
)


def bk1():
    return build_box_kite(1)


class TestLariatProduct:
    def test_diagonal_times_diagonal(self):
        result = lariat_product("F", "a", bk1())
        assert (result.sign, result.symbol, result.scale) == (1, "8", 2)

    def test_unit_times_diagonal(self):
        result = lariat_product("8", "F", bk1())
        assert (result.sign, result.symbol, result.scale) == (1, "a", 1)

    def test_edge_pairings(self):
        # F-E is a "-" edge: opposite orientations annihilate, like ones do not
        assert lariat_product("F", "e", bk1()).is_zero
        assert str(lariat_product("F", "E", bk1())) == "-c"

    def test_square_of_diagonal(self):
        result = lariat_product("A", "A", bk1())
        assert (result.sign, result.symbol, result.scale) == (-1, "R", 2)

    def test_life_line_is_identity(self):
        bk = bk1()
        for sym in YARD_SYMBOLS:
            left = lariat_product("R", sym, bk)
            right = lariat_product(sym, "R", bk)
            assert str(left) == str(right) == f"+{sym}"

    def test_scale_split_by_operand_kind(self):
        bk = bk1()
        units = {"R", "8", "X", "S"}
        for p in YARD_SYMBOLS:
            for q in YARD_SYMBOLS:
                result = lariat_product(p, q, bk)
                if result.is_zero:
                    continue
                expected = 2 if (p not in units and q not in units) else 1
                assert result.scale == expected, (p, q)

    def test_sign_flips_on_reversal(self):
        bk = bk1()
        for p in YARD_SYMBOLS:
            for q in YARD_SYMBOLS:
                if p == q:
                    continue
                forward = lariat_product(p, q, bk)
                backward = lariat_product(q, p, bk)
                if forward.is_zero or forward.symbol == "R" or p == "R" or q == "R":
                    continue
                assert forward.symbol == backward.symbol
                assert forward.sign == -backward.sign, (p, q)

    def test_non_collapsible_raises(self):
        with pytest.raises(NonCollapsibleError):
            collapse(bk1(), Hypercomplex(4, {1: 1, 2: 1}))

    def test_unknown_symbol(self):
        with pytest.raises(ValueError):
            lariat_product("G", "R", bk1())


class TestMockOctonion:
    def test_bk1_af_matches_printed_table(self):
        table = mock_octonion_table(bk1(), "AF")
        assert table.cell_strings() == MOCK_OCTONION_AF

    def test_quoted_cells(self):
        table = mock_octonion_table(bk1(), "AF")
        assert str(table.cell("8", "X")) == "+S"
        assert str(table.cell("f", "A")) == "-8"

    def test_all_21_isomorphic(self):
        for s in range(1, 8):
            bk = build_box_kite(s)
            for strut in ("AF", "BE", "CD"):
                assert is_octonion_isomorphic(mock_octonion_table(bk, strut)), (s, strut)

    def test_bad_strut_name(self):
        with pytest.raises(ValueError):
            mock_octonion_table(bk1(), "AB")


class TestSwitchingYard:
    def test_bk1_matches_printed_table(self):
        assert switching_yard(bk1()).cell_strings() == SWITCHING_YARD

    def test_zero_count(self):
        assert switching_yard(bk1()).zero_count() == 48

    def test_all_seven_identical_in_symbols(self):
        reference = switching_yard(bk1()).cell_strings()
        for s in range(2, 8):
            assert switching_yard(build_box_kite(s)).cell_strings() == reference

    def test_strut_subtables_equal_mocks(self):
        for s in range(1, 8):
            bk = build_box_kite(s)
            yard = switching_yard(bk)
            for strut in ("AF", "BE", "CD"):
                assert yard_strut_subtable(yard, strut).cells == \
                    mock_octonion_table(bk, strut).cells

    def test_upper_left_quadrant_is_quaternion_table(self):
        yard = switching_yard(bk1())
        sub = tuple(row[:4] for row in yard.cell_strings()[:4])
        assert sub == (
            ("+R", "+8", "+X", "+S"),
            ("+8", "-R", "+S", "-X"),
            ("+X", "-S", "-R", "+8"),
            ("+S", "+X", "-8", "-R"),
        )


class TestQuizzical:
    def test_coherent_triples_match_quoted_blocks(self):
        tables = quizzical_tables(bk1())
        by_sail = {}
        for t in tables:
            by_sail.setdefault(t.sail_name, []).append(t.symbols)
        for name, triples in QUIZZICAL_TRIPLES.items():
            assert tuple(by_sail[name]) == triples

    def test_all_56_satisfy_relations(self):
        count = 0
        for s in range(1, 8):
            for lariat in quizzical_tables(build_box_kite(s)):
                assert lariat.relations_hold, (s, lariat.sail_name, lariat.symbols)
                count += 1
        assert count == 56

    def test_table_cells_are_ijk_shaped(self):
        for lariat in quizzical_tables(bk1()):
            for i in range(3):
                for j in range(3):
                    cell = lariat.cells[i][j]
                    if i == j:
                        assert (cell.sign, cell.symbol) == (-1, "R")
                    else:
                        k = 3 - i - j
                        assert cell.symbol == lariat.symbols[k]

    def test_scale_law_at_k_one_and_half(self):
        for s in range(1, 8):
            bk = build_box_kite(s)
            for lariat in quizzical_tables(bk):
                p, q = lariat.symbols[0], lariat.symbols[1]
                result = lariat_product(p, q, bk)
                for k in (1, Fraction(1, 2)):
                    lhs = hc_mul(k * symbol_rep(bk, p), k * symbol_rep(bk, q))
                    rhs = (2 * k * k * result.sign) * symbol_rep(bk, result.symbol)
                    assert lhs == rhs, (s, p, q, k)


class TestTripSync:
    def test_bk1_abc_all_positive(self):
        report = trip_sync_report(bk1())
        abc = report.sails[0]
        assert abc.name == "ABC"
        assert abc.trips == SYNC_TABLE[1]["ABC"]
        assert abc.orientations == (1, 1, 1, 1)

    def test_bk1_ade_pattern(self):
        report = trip_sync_report(bk1())
        ade = next(s for s in report.sails if s.name == "ADE")
        assert ade.trips == ((3, 4, 7), (3, 13, 14), (10, 4, 14), (10, 13, 7))
        assert ade.orientations == (1, 1, -1, -1)

    def test_bk1_fdb_positive_strip_shares_abc_octonion(self):
        report = trip_sync_report(bk1())
        fdb = next(s for s in report.sails if s.name == "FDB")
        positives = [
            trip
            for trip, orientation in zip(fdb.trips, fdb.orientations)
            if orientation > 0 and trip != fdb.trips[0]
        ]
        assert positives == [(11, 13, 6)]  # contains b = 6, shared with ABC

    def test_all_rows_match_sync_table(self):
        for s, row in SYNC_TABLE.items():
            report = trip_sync_report(build_box_kite(s))
            assert {x.name: x.trips for x in report.sails} == row
            assert report.passed

    def test_result_str(self):
        assert str(LariatResult.ZERO) == "0"
        assert str(LariatResult(-1, "X", 2)) == "-X"


class TestPathionLariats:
    def test_yard_machinery_generalizes_one_level_up(self):
        # not required at 32-D, but the closure is not a 16-D accident:
        # native pathion kites carry the same yard shape
        from boxkites.emanation import find_box_kites

        for s in (1, 9):
            kite = find_box_kites(5, s)[0]
            yard = switching_yard(kite)
            assert yard.zero_count() == 48
            for strut in ("AF", "BE", "CD"):
                assert is_octonion_isomorphic(mock_octonion_table(kite, strut))
