"""Box-kite structure: assessors, zero-divisor edges, sails, and their codes.

An assessor is a plane spanned by a low unit e_o and a high unit e_hi with
o xor hi = X, where X = 2^(n-1) + s for strut constant s.  Its two diagonals
e_o + e_hi (slash) and e_o - e_hi (backslash) carry the primitive zero
divisors.  Six assessors sharing a strut constant assemble into an
octahedron (a box-kite) whose twelve edges carry mutual zero divisors and
whose three antipodal pairs (struts) carry none.

Vertex letters follow the fixed convention: triangle A, B, C is the sail
whose three edges are all "-", F, E, D sit at the opposite ends of the
struts from A, B, C respectively, and (a, b, c), the low indices of A, B, C,
is a positively oriented triple starting at the smallest index.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    Hypercomplex,
    TripIndices,
    aso_form,
    enumerate_trips,
    hc_mul,
    trip_orientation,
)

SLASH = 1
BACKSLASH = -1

LETTERS = ("A", "B", "C", "D", "E", "F")
STRUT_LETTER_PAIRS = (("A", "F"), ("B", "E"), ("C", "D"))
SAIL_LETTERS = (("A", "B", "C"), ("A", "D", "E"), ("F", "D", "B"), ("F", "C", "E"))
# Order used by the trip-synchronization tabulation.
SYNC_SAIL_ORDER = ("ABC", "ADE", "FCE", "FDB")


@dataclass(frozen=True)
class Assessor:
    """Index pair (o, hi) with o xor hi = 2^(n-1) + s."""

    n: int
    o: int
    hi: int

    def __post_init__(self) -> None:
        half = 1 << (self.n - 1)
        if not (0 < self.o < half):
            raise ValueError(f"low index {self.o} out of range for n={self.n}")
        if not (half < self.hi < 2 * half):
            raise ValueError(f"high index {self.hi} out of range for n={self.n}")

    @property
    def x(self) -> int:
        return self.o ^ self.hi

    @property
    def s(self) -> int:
        return self.x ^ (1 << (self.n - 1))

    def diagonal(self, orientation: int) -> "Diagonal":
        return Diagonal(self, orientation)

    @property
    def slash(self) -> "Diagonal":
        return Diagonal(self, SLASH)

    @property
    def backslash(self) -> "Diagonal":
        return Diagonal(self, BACKSLASH)

    @property
    def indices(self) -> tuple[int, int]:
        return (self.o, self.hi)

    def __str__(self) -> str:
        return f"({self.o},{self.hi})"


@dataclass(frozen=True)
class Diagonal:
    """Oriented diagonal of an assessor; the representative fixes +1 on e_o."""

    assessor: Assessor
    orientation: int

    def __post_init__(self) -> None:
        if self.orientation not in (SLASH, BACKSLASH):
            raise ValueError("orientation must be +1 (slash) or -1 (backslash)")

    @property
    def rep(self) -> Hypercomplex:
        a = self.assessor
        return Hypercomplex(a.n, {a.o: 1, a.hi: self.orientation})

    def __str__(self) -> str:
        return f"{self.assessor}{'/' if self.orientation == SLASH else chr(92)}"


def assessors_for_strut(s: int, n: int = 4) -> list[Assessor]:
    """The 2^(n-1) - 2 assessors owned by strut constant s, ascending by o."""
    half = 1 << (n - 1)
    if not (0 < s < half):
        raise ValueError(f"strut constant {s} out of range for n={n}")
    x = half + s
    return [Assessor(n, o, o ^ x) for o in range(1, half) if o != s]


def is_zero_divisor_pair(d1: Diagonal, d2: Diagonal) -> bool:
    """True iff the two diagonal representatives multiply to exactly zero."""
    if d1.assessor.n != d2.assessor.n:
        raise ValueError("diagonals live in different algebras")
    return hc_mul(d1.rep, d2.rep).is_zero


def edge_sign(a1: Assessor, a2: Assessor) -> int | None:
    """Edge sign between two assessors, or None when no pairing annihilates.

    "+" means like-oriented diagonals multiply to zero, "-" means oppositely
    oriented ones do.  The two pairings of each class must agree, and the two
    classes can never both vanish; both facts are asserted here rather than
    assumed.
    """
    like = is_zero_divisor_pair(a1.slash, a2.slash)
    like_mate = is_zero_divisor_pair(a1.backslash, a2.backslash)
    unlike = is_zero_divisor_pair(a1.slash, a2.backslash)
    unlike_mate = is_zero_divisor_pair(a1.backslash, a2.slash)
    if like != like_mate or unlike != unlike_mate:
        raise AssertionError(f"orientation mates disagree for {a1} x {a2}")
    if like and unlike:
        raise AssertionError(f"both orientation classes vanish for {a1} x {a2}")
    if like:
        return 1
    if unlike:
        return -1
    return None


def slot_trips(vertices) -> tuple[TripIndices, TripIndices, TripIndices, TripIndices]:
    """The four index triples a sail circuit touches, in slot order.

    First the three low indices, then the three mixed triples that keep
    exactly one slot's low index and swap the other two slots to their highs.
    """
    (l0, l1, l2) = (v.o for v in vertices)
    (h0, h1, h2) = (v.hi for v in vertices)
    return ((l0, l1, l2), (l0, h1, h2), (h0, l1, h2), (h0, h1, l2))


@dataclass(frozen=True)
class Sail:
    """Three mutually zero-dividing vertices of a box-kite, in slot order."""

    name: str
    vertices: tuple[Assessor, Assessor, Assessor]
    edge_signs: tuple[int, int, int]  # (v0-v1, v1-v2, v2-v0)

    @property
    def kind(self) -> str:
        return "zigzag" if all(s < 0 for s in self.edge_signs) else "trefoil"

    def trips(self) -> tuple[TripIndices, ...]:
        return slot_trips(self.vertices)

    def orientations(self) -> tuple[int, ...]:
        return tuple(trip_orientation(*t) for t in self.trips())

    @property
    def is_zigzag_by_trips(self) -> bool:
        return all(o > 0 for o in self.orientations())


@dataclass(frozen=True)
class BoxKite:
    """Octahedron of six assessors with computed zero-divisor edge signs."""

    n: int
    s: int
    vertices: tuple[Assessor, Assessor, Assessor, Assessor, Assessor, Assessor]
    edge_signs: dict

    @classmethod
    def assemble(cls, n: int, s: int, vertex_map: dict[str, Assessor]) -> "BoxKite":
        """Build from a letter -> assessor map, computing and checking edges.

        The twelve non-strut pairs must each carry a zero-divisor pairing and
        the three struts must carry none; anything else is rejected.
        """
        if sorted(vertex_map) != sorted(LETTERS):
            raise ValueError(f"vertex map must cover letters {LETTERS}")
        signs = {}
        strut_sets = {frozenset(p) for p in STRUT_LETTER_PAIRS}
        for i, p in enumerate(LETTERS):
            for q in LETTERS[i + 1 :]:
                sign = edge_sign(vertex_map[p], vertex_map[q])
                pair = frozenset((p, q))
                if pair in strut_sets:
                    if sign is not None:
                        raise ValueError(f"strut {p}-{q} carries a zero divisor")
                elif sign is None:
                    raise ValueError(f"edge {p}-{q} carries no zero divisor")
                else:
                    signs[pair] = sign
        return cls(n, s, tuple(vertex_map[p] for p in LETTERS), signs)

    def vertex(self, letter: str) -> Assessor:
        return self.vertices[LETTERS.index(letter)]

    def edge(self, p: str, q: str) -> int:
        return self.edge_signs[frozenset((p, q))]

    @property
    def lows(self) -> dict[str, int]:
        return {p: self.vertex(p).o for p in LETTERS}

    @property
    def struts(self) -> tuple[tuple[Assessor, Assessor], ...]:
        return tuple((self.vertex(p), self.vertex(q)) for p, q in STRUT_LETTER_PAIRS)

    def sail(self, name: str) -> Sail:
        letters = tuple(name)
        if tuple(sorted(name)) not in {tuple(sorted("".join(s))) for s in SAIL_LETTERS}:
            raise ValueError(f"{name!r} is not a sail of a box-kite")
        verts = tuple(self.vertex(p) for p in letters)
        signs = tuple(
            self.edge(letters[i], letters[(i + 1) % 3]) for i in range(3)
        )
        return Sail(name, verts, signs)

    @property
    def sails(self) -> tuple[Sail, ...]:
        return tuple(self.sail("".join(s)) for s in SAIL_LETTERS)

    def zigzag_sails(self) -> list[Sail]:
        return [s for s in self.sails if s.is_zigzag_by_trips]

    def __str__(self) -> str:
        inner = ", ".join(f"{p}={self.vertex(p)}" for p in LETTERS)
        return f"BoxKite(n={self.n}, s={self.s}, {inner})"


def build_box_kite(s: int, n: int = 4) -> BoxKite:
    """Deterministic sedenion box-kite for strut constant s.

    Strut pairs are the assessor pairs whose low indices XOR to s.  Within
    the pair {x, y}, the terminal member is the one t with (s, other, t)
    positively oriented; the three terminals always form a triple, which in
    canonical order becomes (A, B, C).  F, E, D take the strut partners of
    A, B, C.
    """
    if n != 4:
        raise ValueError("direct construction is for the sedenions; "
                         "use find_box_kites for higher dimensions")
    assessors = {a.o: a for a in assessors_for_strut(s, n)}
    pairs = sorted({tuple(sorted((o, o ^ s))) for o in assessors})
    terminals = []
    for x, y in pairs:
        terminals.append(y if trip_orientation(s, x, y) > 0 else x)
    abc = aso_form(terminals)
    vertex_map = {letter: assessors[o] for letter, o in zip("ABC", abc)}
    for letter, o in zip("FED", abc):
        vertex_map[letter] = assessors[o ^ s]
    return BoxKite.assemble(n, s, vertex_map)


def sail_six_cycle(sail: Sail, start: Diagonal) -> list[tuple[Diagonal, Diagonal]]:
    """The six zero products circling a sail from a starting diagonal.

    Each edge dictates the next orientation (keep it on "+", flip on "-");
    after two laps the walk is back at the start.  Every product is verified
    to vanish before being returned.
    """
    verts = sail.vertices
    if start.assessor not in verts:
        raise ValueError(f"{start} does not lie on sail {sail.name}")
    slot = verts.index(start.assessor)
    steps = []
    current = start
    for _ in range(6):
        next_slot = (slot + 1) % 3
        orientation = current.orientation * sail.edge_signs[slot]
        nxt = verts[next_slot].diagonal(orientation)
        if not is_zero_divisor_pair(current, nxt):
            raise AssertionError(f"sail product {current} * {nxt} is not zero")
        steps.append((current, nxt))
        current, slot = nxt, next_slot
    if current != start:
        raise AssertionError("sail circuit did not close after six steps")
    return steps


@dataclass(frozen=True)
class TrayRack:
    """One of the three alternating-sign squares of a box-kite."""

    letters: tuple[str, str, str, str]
    edge_signs: tuple[int, int, int, int]
    circuits: tuple[tuple[Diagonal, ...], tuple[Diagonal, ...]]

    @property
    def omitted_strut(self) -> tuple[str, str]:
        missing = [p for p in LETTERS if p not in self.letters]
        return tuple(sorted(missing, key=LETTERS.index))


# Square circuits in conventional starting order: each omits one strut and
# alternates edge signs, so a zero-product walk closes in four steps.
TRAY_RACK_CIRCUITS = (("B", "C", "E", "D"), ("A", "B", "F", "E"), ("A", "D", "F", "C"))


def tray_racks(bk: BoxKite) -> list[TrayRack]:
    racks = []
    for letters in TRAY_RACK_CIRCUITS:
        signs = tuple(
            bk.edge(letters[i], letters[(i + 1) % 4]) for i in range(4)
        )
        circuits = []
        for start_orientation in (SLASH, BACKSLASH):
            walk = [bk.vertex(letters[0]).diagonal(start_orientation)]
            for i in range(4):
                nxt = bk.vertex(letters[(i + 1) % 4]).diagonal(
                    walk[-1].orientation * signs[i]
                )
                if not is_zero_divisor_pair(walk[-1], nxt):
                    raise AssertionError(
                        f"tray-rack product {walk[-1]} * {nxt} is not zero"
                    )
                walk.append(nxt)
            if walk[-1] != walk[0]:
                raise AssertionError("tray-rack circuit did not close in four steps")
            circuits.append(tuple(walk[:4]))
        racks.append(TrayRack(letters, signs, tuple(circuits)))
    return racks


# Sail order for the trigram bit codes.
TRIGRAM_SAIL_ORDER = ("ABC", "FDB", "ADE", "FCE")


def trigram_code(bk: BoxKite, switched: bool = False) -> dict[str, str]:
    """3-bit code per sail: edge signs in slot order, "-" as 0 and "+" as 1.

    The unswitched state reads the zero-division edge signs; the switched
    state complements every bit.
    """
    codes = {}
    for name in TRIGRAM_SAIL_ORDER:
        sail = bk.sail(name)
        bits = ""
        for sign in sail.edge_signs:
            bit = "0" if sign < 0 else "1"
            if switched:
                bit = "1" if bit == "0" else "0"
            bits += bit
        codes[name] = bits
    return codes


def automorpheme(otrip) -> frozenset[int]:
    """Seven-axis span of a sail's zero-divisor pattern at the sedenion level.

    The octonion triple plus the four high units other than the XORs of 8
    with the triple members.  These loops counterfeit the octonions but fail
    Moufang.
    """
    trip = tuple(otrip.indices if hasattr(otrip, "indices") else otrip)
    if len(set(trip)) != 3 or any(not 0 < i < 8 for i in trip) or trip[0] ^ trip[1] ^ trip[2]:
        raise ValueError(f"{trip} is not an octonion triple")
    excluded = {o ^ 8 for o in trip}
    return frozenset(trip) | (frozenset(range(9, 16)) - excluded)


def octonion_loop_axes(otrip) -> frozenset[int]:
    """Axes of the true octonion-loop copy over an octonion triple: the trip,
    index 8, and the XORs of 8 with the trip."""
    trip = tuple(otrip.indices if hasattr(otrip, "indices") else otrip)
    if len(set(trip)) != 3 or any(not 0 < i < 8 for i in trip) or trip[0] ^ trip[1] ^ trip[2]:
        raise ValueError(f"{trip} is not an octonion triple")
    return frozenset(trip) | {8} | {o ^ 8 for o in trip}


# Sail order for the GoTo tuple.
GOTO_SAIL_ORDER = ("ABC", "ADE", "FDB", "FCE")


def goto_numbers(bk: BoxKite) -> tuple[int, int, int, int]:
    """1-based positions of each sail's octonion triple in the canonical list."""
    if bk.n != 4:
        raise ValueError("GoTo numbers are defined for sedenion box-kites")
    otrips = [t.index_set() for t in enumerate_trips(4, "o")]
    numbers = []
    for name in GOTO_SAIL_ORDER:
        lows = frozenset(v.o for v in bk.sail(name).vertices)
        numbers.append(otrips.index(lows) + 1)
    return tuple(numbers)
