"""Box-kite assembly against the strut table, and the sail machinery."""

import pytest

from boxkites.fixtures import (
    AUTOMORPHEMES,
    S_TRIPS,
    SIX_CYCLE_ABC_BK1,
    STRUT_TABLE,
    TRAY_RACKS,
    TRIGRAM_SWITCHED,
    TRIGRAM_UNSWITCHED,
)
from boxkites.kites import (
    LETTERS,
    Assessor,
    BoxKite,
    assessors_for_strut,
    automorpheme,
    build_box_kite,
    goto_numbers,
    is_zero_divisor_pair,
    sail_six_cycle,
    tray_racks,
    trigram_code,
)


def bk1():
    return build_box_kite(1)


class TestAssessors:
    def test_strut_one(self):
        got = {a.indices for a in assessors_for_strut(1)}
        assert got == {(2, 11), (3, 10), (4, 13), (5, 12), (6, 15), (7, 14)}

    def test_strut_seven(self):
        got = {a.indices for a in assessors_for_strut(7)}
        assert {(1, 14), (6, 9)} <= got

    def test_inner_xor_forced(self):
        for s in range(1, 8):
            for a in assessors_for_strut(s):
                assert a.o ^ a.hi == 8 + s
                assert a.s == s

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            assessors_for_strut(8)
        with pytest.raises(ValueError):
            assessors_for_strut(0)

    def test_diagonal_reps(self):
        a = Assessor(4, 3, 10)
        assert a.slash.rep.coeffs == {3: 1, 10: 1}
        assert a.backslash.rep.coeffs == {3: 1, 10: -1}


class TestZeroDivisorPairs:
    def test_cross_assessor_pairing(self):
        a, b = Assessor(4, 3, 10), Assessor(4, 6, 15)
        assert is_zero_divisor_pair(a.slash, b.backslash)
        assert not is_zero_divisor_pair(a.slash, b.slash)

    def test_own_diagonals_never(self):
        a = Assessor(4, 3, 10)
        assert not is_zero_divisor_pair(a.slash, a.backslash)

    def test_strut_mates_never(self):
        a, f = Assessor(4, 3, 10), Assessor(4, 2, 11)
        for d1 in (a.slash, a.backslash):
            for d2 in (f.slash, f.backslash):
                assert not is_zero_divisor_pair(d1, d2)

    def test_symmetry(self):
        a, b = Assessor(4, 3, 10), Assessor(4, 6, 15)
        assert is_zero_divisor_pair(b.backslash, a.slash)


class TestStrutTable:
    def test_all_rows(self):
        for s, row in STRUT_TABLE.items():
            bk = build_box_kite(s)
            assert {p: bk.vertex(p).indices for p in LETTERS} == row["vertices"], s

    def test_goto_tuples(self):
        for s, row in STRUT_TABLE.items():
            assert goto_numbers(build_box_kite(s)) == row["goto"], s

    def test_goto_coverage(self):
        # each canonical triple index appears in exactly four kites' tuples
        counts = {i: 0 for i in range(1, 8)}
        for s in range(1, 8):
            for g in goto_numbers(build_box_kite(s)):
                counts[g] += 1
        assert counts == {i: 4 for i in range(1, 8)}

    def test_strut_xors_equal_s(self):
        for s in range(1, 8):
            bk = build_box_kite(s)
            for v1, v2 in bk.struts:
                assert v1.o ^ v2.o == s

    def test_edge_sign_rule(self):
        for s in range(1, 8):
            bk = build_box_kite(s)
            for tri in (("A", "B", "C"), ("D", "E", "F")):
                for i in range(3):
                    assert bk.edge(tri[i], tri[(i + 1) % 3]) == -1
            for p, q in (("A", "D"), ("A", "E"), ("B", "D"),
                         ("B", "F"), ("C", "E"), ("C", "F")):
                assert bk.edge(p, q) == 1

    def test_bad_strut_rejected(self):
        with pytest.raises(ValueError):
            build_box_kite(0)

    def test_assemble_rejects_wrong_geometry(self):
        bk = bk1()
        letters = dict(zip(LETTERS, bk.vertices))
        # swap a strut mate into a sail slot: struts then zero-divide
        letters["A"], letters["F"] = letters["F"], letters["A"]
        letters["A"], letters["B"] = letters["B"], letters["A"]
        with pytest.raises(ValueError):
            BoxKite.assemble(4, 1, letters)


class TestSails:
    def test_abc_is_zigzag(self):
        sails = {s.name: s for s in bk1().sails}
        assert sails["ABC"].kind == "zigzag"
        for name in ("ADE", "FDB", "FCE"):
            assert sails[name].kind == "trefoil"

    def test_zigzag_by_trips_matches_kind(self):
        for s in range(1, 8):
            for sail in build_box_kite(s).sails:
                assert (sail.kind == "zigzag") == sail.is_zigzag_by_trips

    def test_six_cycle_matches_quoted_progression(self):
        bk = bk1()
        cycle = sail_six_cycle(bk.sail("ABC"), bk.vertex("A").slash)
        got = tuple(
            (
                (d1.assessor.o, d1.assessor.hi, d1.orientation),
                (d2.assessor.o, d2.assessor.hi, d2.orientation),
            )
            for d1, d2 in cycle
        )
        assert got == SIX_CYCLE_ABC_BK1

    def test_six_cycles_every_sail_every_kite(self):
        for s in range(1, 8):
            bk = build_box_kite(s)
            for sail in bk.sails:
                for start in (sail.vertices[0].slash, sail.vertices[0].backslash):
                    assert len(sail_six_cycle(sail, start)) == 6

    def test_start_must_lie_on_sail(self):
        bk = bk1()
        with pytest.raises(ValueError):
            sail_six_cycle(bk.sail("ABC"), bk.vertex("D").slash)

    def test_zigzag_alternates_trefoils_do_not(self):
        for s in range(1, 8):
            bk = build_box_kite(s)
            for sail in bk.sails:
                cycle = sail_six_cycle(sail, sail.vertices[0].slash)
                orientations = [d1.orientation for d1, _d2 in cycle]
                alternates = all(
                    orientations[i] != orientations[i + 1] for i in range(5)
                )
                assert alternates == (sail.kind == "zigzag"), (s, sail.name)


class TestTrayRacks:
    def test_squares_and_sign_patterns(self):
        for s in range(1, 8):
            racks = tray_racks(build_box_kite(s))
            assert [(r.letters, r.edge_signs) for r in racks] == list(TRAY_RACKS)

    def test_each_square_omits_one_strut(self):
        for rack in tray_racks(bk1()):
            assert rack.omitted_strut in (("A", "F"), ("B", "E"), ("C", "D"))

    def test_two_circuits_cover_all_diagonals(self):
        for rack in tray_racks(bk1()):
            diagonals = {d for circuit in rack.circuits for d in circuit}
            assert len(diagonals) == 8

    def test_toggling_signs_shifts_but_keeps_cycles(self):
        # complementing every edge sign still alternates around each square,
        # with the sign sequence rotated by one step
        for rack in tray_racks(bk1()):
            toggled = tuple(-x for x in rack.edge_signs)
            shifted = rack.edge_signs[1:] + rack.edge_signs[:1]
            assert toggled == shifted


class TestCodes:
    def test_trigram_unswitched(self):
        for s in range(1, 8):
            assert trigram_code(build_box_kite(s)) == TRIGRAM_UNSWITCHED

    def test_trigram_switched_complements(self):
        for s in range(1, 8):
            assert trigram_code(build_box_kite(s), switched=True) == TRIGRAM_SWITCHED

    def test_parity_uniform_per_state(self):
        plain = {code.count("1") % 2 for code in trigram_code(bk1()).values()}
        switched = {
            code.count("1") % 2
            for code in trigram_code(bk1(), switched=True).values()
        }
        assert plain == {0} and switched == {1}


class TestSTripDistribution:
    def test_non_eightball_strips_fill_abc_sails_once_each(self):
        # each ABC sail carries three mixed triples; across the seven kites
        # these are exactly the twenty-one triples avoiding index 8, once each
        seen = []
        for s in range(1, 8):
            sail = build_box_kite(s).sail("ABC")
            for trip in sail.trips()[1:]:
                seen.append(frozenset(trip))
        expected = {frozenset(t) for t in S_TRIPS if 8 not in t}
        assert len(seen) == 21 == len(set(seen))
        assert set(seen) == expected

    def test_eight_ball_indices_forbidden_from_their_kite(self):
        for s in range(1, 8):
            bk = build_box_kite(s)
            used = {i for v in bk.vertices for i in v.indices}
            assert used == set(range(1, 16)) - {8, s, 8 + s}


class TestAutomorpheme:
    def test_quoted_axis_sets(self):
        for trip, axes in AUTOMORPHEMES.items():
            assert automorpheme(trip) == axes

    def test_rejects_non_otrip(self):
        with pytest.raises(ValueError):
            automorpheme((1, 2, 4))
        with pytest.raises(ValueError):
            automorpheme((3, 13, 14))
