"""Zero-divisor structure at arbitrary 2^n: graphs, kite search, sweeps.

For dimension exponent n >= 4 and strut constant 0 < s < 2^(n-1), the
assessors are the 2^(n-1) - 2 pairs (o, o xor X) with X = 2^(n-1) + s.
Their zero-divisor adjacency graph decomposes into octahedral box-kites;
this module enumerates them, lifts sedenion kites one level up, counts
kites per strut constant, and runs the trip-synchronization check across
whole sweeps of strut constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .algebra import TripIndices, aso_form, trip_orientation
from .kites import (
    LETTERS,
    Assessor,
    BoxKite,
    assessors_for_strut,
    edge_sign,
)
from .lariats import TripSyncReport, trip_sync_report


def emanation_assessors(n: int, s: int) -> list[Assessor]:
    """All assessors for (n, s), ascending by low index."""
    if n < 4:
        raise ValueError("emanation structure starts at the sedenions (n >= 4)")
    return assessors_for_strut(s, n)


@dataclass(frozen=True)
class EmanationContext:
    n: int
    s: int
    x: int
    assessors: tuple[Assessor, ...]


def emanation_context(n: int, s: int) -> EmanationContext:
    assessors = tuple(emanation_assessors(n, s))
    return EmanationContext(n, s, (1 << (n - 1)) + s, assessors)


@dataclass(frozen=True)
class ZDGraph:
    """Zero-divisor adjacency over a context's assessors, with edge signs."""

    context: EmanationContext
    signs: dict

    @property
    def assessors(self) -> tuple[Assessor, ...]:
        return self.context.assessors

    def sign(self, a1: Assessor, a2: Assessor) -> int | None:
        return self.signs.get(frozenset((a1, a2)))

    def edges(self) -> list[tuple[Assessor, Assessor, int]]:
        out = []
        for i, a1 in enumerate(self.assessors):
            for a2 in self.assessors[i + 1 :]:
                sign = self.sign(a1, a2)
                if sign is not None:
                    out.append((a1, a2, sign))
        return out

    def non_adjacent_pairs(self) -> list[tuple[Assessor, Assessor]]:
        out = []
        for i, a1 in enumerate(self.assessors):
            for a2 in self.assessors[i + 1 :]:
                if self.sign(a1, a2) is None:
                    out.append((a1, a2))
        return out


@lru_cache(maxsize=None)
def zd_graph(n: int, s: int) -> ZDGraph:
    """Compute every pairwise edge sign; the dichotomy is asserted inside."""
    context = emanation_context(n, s)
    signs = {}
    for a1, a2 in combinations(context.assessors, 2):
        sign = edge_sign(a1, a2)
        if sign is not None:
            signs[frozenset((a1, a2))] = sign
    return ZDGraph(context, signs)


def _label_kite(n: int, s: int, antipodes: list[tuple[Assessor, Assessor]]) -> BoxKite | None:
    """Canonical letters for an octahedron, or None when it is no box-kite.

    A box-kite is more than an induced octahedron with clean antipodes: it
    must carry the checkerboard of four sails, transversal faces whose low
    indices close under XOR.  The dense zero-divisor graphs contain many
    octahedra without that structure (for s=1 at n=5 the graph is the
    complete graph minus the strut matching, giving 35 octahedra of which
    only 7 carry sails; at n=6 there are octahedra whose three strut pairs
    have unequal low XORs, leaving fewer than four trip faces).  So two
    conditions are imposed: the strut pairs share one low XOR, and at least
    one transversal face is a triple, which together force exactly four
    sails in checkerboard position.

    A, B, C take the sail whose four slot triples are all positively
    oriented, rotated to start at the smallest low index; ties go to the
    lexicographically least low triple.  Kites with no zigzag sail exist
    (trip-sync counterexamples appear at n=6 for s above 24); those fall
    back to the lexicographically least sail so the sweep can report them
    instead of crashing.  F, E, D are the antipodes of A, B, C.
    """
    if len({u.o ^ v.o for u, v in antipodes}) != 1:
        return None
    partner = {}
    for u, v in antipodes:
        partner[u], partner[v] = v, u
    faces = []
    for triple in combinations(partner, 3):
        if any(partner[u] == v for u, v in combinations(triple, 2)):
            continue
        lows = tuple(v.o for v in triple)
        if lows[0] ^ lows[1] ^ lows[2]:
            continue  # not a sail: lows must close under XOR
        ordered = aso_form(lows)
        by_low = {v.o: v for v in triple}
        verts = tuple(by_low[o] for o in ordered)
        all_positive = all(
            trip_orientation(*t) > 0
            for t in (
                (verts[0].o, verts[1].o, verts[2].o),
                (verts[0].o, verts[1].hi, verts[2].hi),
                (verts[0].hi, verts[1].o, verts[2].hi),
                (verts[0].hi, verts[1].hi, verts[2].o),
            )
        )
        faces.append((ordered, verts, all_positive))
    if not faces:
        return None
    faces.sort(key=lambda f: f[0])
    zigzags = [f for f in faces if f[2]]
    chosen = zigzags[0] if zigzags else faces[0]
    vertex_map = dict(zip("ABC", chosen[1]))
    for letter, abc_letter in (("F", "A"), ("E", "B"), ("D", "C")):
        vertex_map[letter] = partner[vertex_map[abc_letter]]
    return BoxKite.assemble(n, s, vertex_map)


@lru_cache(maxsize=None)
def _find_box_kites(n: int, s: int) -> tuple[BoxKite, ...]:
    graph = zd_graph(n, s)
    assessors = graph.assessors
    index = {a: i for i, a in enumerate(assessors)}
    adjacency = [0] * len(assessors)
    for a1, a2, _sign in graph.edges():
        adjacency[index[a1]] |= 1 << index[a2]
        adjacency[index[a2]] |= 1 << index[a1]

    non_edges = [
        (index[a1], index[a2]) for a1, a2 in graph.non_adjacent_pairs()
    ]
    kites = []
    seen = set()
    for e1 in range(len(non_edges)):
        u1, v1 = non_edges[e1]
        common1 = adjacency[u1] & adjacency[v1]
        for e2 in range(e1 + 1, len(non_edges)):
            u2, v2 = non_edges[e2]
            if not ((common1 >> u2) & 1 and (common1 >> v2) & 1):
                continue
            common2 = common1 & adjacency[u2] & adjacency[v2]
            for e3 in range(e2 + 1, len(non_edges)):
                u3, v3 = non_edges[e3]
                if not ((common2 >> u3) & 1 and (common2 >> v3) & 1):
                    continue
                members = frozenset((u1, v1, u2, v2, u3, v3))
                if members in seen:
                    continue
                seen.add(members)
                antipodes = [
                    (assessors[u1], assessors[v1]),
                    (assessors[u2], assessors[v2]),
                    (assessors[u3], assessors[v3]),
                ]
                kite = _label_kite(n, s, antipodes)
                if kite is not None:
                    kites.append(kite)
    kites.sort(key=lambda kite: tuple(v.o for v in kite.sail("ABC").vertices))
    return tuple(kites)


def find_box_kites(n: int, s: int) -> list[BoxKite]:
    """All box-kites for (n, s): induced octahedra carrying four sails.

    The three non-adjacent antipodal pairs are the struts; the sail
    conditions (one shared strut low-XOR, four transversal faces with
    XOR-closed low indices) filter out octahedra that the dense
    zero-divisor graphs contain incidentally.  Ordered by the low-index
    triple of the A, B, C sail.
    """
    return list(_find_box_kites(n, s))


def pathion_lift(bk: BoxKite) -> BoxKite:
    """Lift a sedenion box-kite one level: add 8 to every high index.

    The result is validated as a genuine box-kite for the same strut
    constant one dimension up.
    """
    if bk.n != 4:
        raise ValueError("lift starts from a sedenion box-kite")
    vertex_map = {
        letter: Assessor(5, v.o, v.hi + 8) for letter, v in zip(LETTERS, bk.vertices)
    }
    return BoxKite.assemble(5, bk.s, vertex_map)


@dataclass(frozen=True)
class SweepEntry:
    n: int
    s: int
    abc_lows: TripIndices
    passed: bool
    counterexamples: tuple[TripIndices, ...]


@dataclass(frozen=True)
class SweepReport:
    n: int
    s_values: tuple[int, ...]
    entries: tuple[SweepEntry, ...]

    @property
    def all_passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    @property
    def kite_count(self) -> int:
        return len(self.entries)


def trip_sync_sweep(n: int, s_values=None) -> SweepReport:
    """Check the trip-synchronization pattern on every kite of every s.

    Makes no claim beyond the swept range; failures carry the offending
    triples so they can be replayed.
    """
    if s_values is None:
        s_values = range(1, 1 << (n - 1))
    s_values = tuple(sorted(set(s_values)))
    entries = []
    for s in s_values:
        for kite in find_box_kites(n, s):
            report: TripSyncReport = trip_sync_report(kite)
            counterexamples = tuple(
                trip for sail in report.sails for trip in sail.counterexamples()
            )
            entries.append(
                SweepEntry(n, s, report.abc_lows, report.passed, counterexamples)
            )
    return SweepReport(n, s_values, tuple(entries))


@dataclass(frozen=True)
class CensusReport:
    n: int
    per_s: dict
    total: int


def census(n: int) -> CensusReport:
    """Box-kite count per strut constant, by exhaustive enumeration."""
    per_s = {s: len(find_box_kites(n, s)) for s in range(1, 1 << (n - 1))}
    return CensusReport(n, per_s, sum(per_s.values()))
