"""Line algebras over a box-kite: products of oriented lines modulo scale.

The tracked entities are whole oriented lines, not unit points.  Sixteen
line symbols attach to a box-kite: R is the positive real axis (the
identity, or life-line), "8" the half-dimension unit e_8, X the unit
indexed 8 + s, S the unit indexed s, and each vertex letter names a
diagonal, upper case for slash (e_o + e_hi) and lower case for backslash
(e_o - e_hi).  A product of two lines is either exactly zero or a positive
multiple of the signed representative of another symbol; the positive scale
(2 for diagonal times diagonal, 1 otherwise) is reported but not part of
the cell value.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .algebra import Hypercomplex, TripIndices, blade_sign, hc_mul, trip_orientation
from .kites import SYNC_SAIL_ORDER, BoxKite, Sail, slot_trips

YARD_SYMBOLS = (
    "R", "8", "X", "S",
    "F", "a", "f", "A",
    "E", "b", "e", "B",
    "D", "c", "d", "C",
)

STRUT_SYMBOLS = {"AF": ("F", "a", "f", "A"), "BE": ("E", "b", "e", "B"), "CD": ("D", "c", "d", "C")}


class NonCollapsibleError(ArithmeticError):
    """A product failed to land on zero or a scaled yard symbol."""


def symbol_rep(bk: BoxKite, symbol: str) -> Hypercomplex:
    """Canonical representative of a yard symbol over a box-kite."""
    half = 1 << (bk.n - 1)
    if symbol == "R":
        return Hypercomplex.unit(bk.n, 0)
    if symbol == "8":
        return Hypercomplex.unit(bk.n, half)
    if symbol == "X":
        return Hypercomplex.unit(bk.n, half + bk.s)
    if symbol == "S":
        return Hypercomplex.unit(bk.n, bk.s)
    if symbol.upper() in "ABCDEF" and len(symbol) == 1:
        assessor = bk.vertex(symbol.upper())
        return (assessor.slash if symbol.isupper() else assessor.backslash).rep
    raise ValueError(f"unknown yard symbol {symbol!r}")


@dataclass(frozen=True)
class LariatResult:
    """Zero, or a signed symbol together with the positive scale divided out."""

    sign: int
    symbol: str | None
    scale: int

    ZERO = None  # populated below

    @property
    def is_zero(self) -> bool:
        return self.symbol is None

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return f"{'+' if self.sign > 0 else '-'}{self.symbol}"


LariatResult.ZERO = LariatResult(0, None, 0)


def collapse(bk: BoxKite, product: Hypercomplex) -> LariatResult:
    """Reduce an exact product to a yard cell: strip positive content, match.

    Raises NonCollapsibleError when the reduced product is not plus or minus
    the representative of any yard symbol, which would break lariat closure.
    """
    if product.is_zero:
        return LariatResult.ZERO
    content = gcd(*(abs(c) for c in product.coeffs.values()))
    reduced = Hypercomplex(
        bk.n, {i: c // content for i, c in product.coeffs.items()}
    )
    for symbol in YARD_SYMBOLS:
        rep = symbol_rep(bk, symbol)
        if reduced == rep:
            return LariatResult(1, symbol, content)
        if reduced == -rep:
            return LariatResult(-1, symbol, content)
    raise NonCollapsibleError(f"product {product} is not a scaled yard symbol")


def lariat_product(p: str, q: str, bk: BoxKite) -> LariatResult:
    """Product of two yard lines, collapsed to zero or a signed symbol."""
    return collapse(bk, hc_mul(symbol_rep(bk, p), symbol_rep(bk, q)))


@dataclass(frozen=True)
class LariatTable:
    """Square multiplication table over line symbols."""

    n: int
    s: int
    symbols: tuple[str, ...]
    cells: tuple[tuple[LariatResult, ...], ...]

    def cell(self, row: str, col: str) -> LariatResult:
        return self.cells[self.symbols.index(row)][self.symbols.index(col)]

    def cell_strings(self) -> tuple[tuple[str, ...], ...]:
        return tuple(tuple(str(cell) for cell in row) for row in self.cells)

    def zero_count(self) -> int:
        return sum(cell.is_zero for row in self.cells for cell in row)


def _table(bk: BoxKite, symbols: tuple[str, ...]) -> LariatTable:
    cells = tuple(
        tuple(lariat_product(p, q, bk) for q in symbols) for p in symbols
    )
    return LariatTable(bk.n, bk.s, symbols, cells)


def switching_yard(bk: BoxKite) -> LariatTable:
    """The full 16 x 16 line table pairing a box-kite with its 8-ball."""
    return _table(bk, YARD_SYMBOLS)


def mock_octonion_table(bk: BoxKite, strut: str = "AF") -> LariatTable:
    """8 x 8 line table over one strut pair plus the 8-ball units.

    In the symbol sequence (R, 8, X, S, P, q, p, Q) the table is cell for
    cell the octonion table under symbol k -> e_k.
    """
    if strut not in STRUT_SYMBOLS:
        raise ValueError(f"strut must be one of {sorted(STRUT_SYMBOLS)}")
    return _table(bk, ("R", "8", "X", "S") + STRUT_SYMBOLS[strut])


def is_octonion_isomorphic(table: LariatTable) -> bool:
    """Cell-for-cell match with the octonion table under symbol k -> e_k."""
    if len(table.symbols) != 8:
        return False
    for i in range(8):
        for j in range(8):
            cell = table.cells[i][j]
            if cell.is_zero:
                return False
            if cell.sign != blade_sign(i, j) or cell.symbol != table.symbols[i ^ j]:
                return False
    return True


def yard_strut_subtable(yard: LariatTable, strut: str) -> LariatTable:
    """The 8 x 8 slice of a switching yard for one strut pair."""
    symbols = ("R", "8", "X", "S") + STRUT_SYMBOLS[strut]
    idx = [YARD_SYMBOLS.index(sym) for sym in symbols]
    cells = tuple(tuple(yard.cells[i][j] for j in idx) for i in idx)
    return LariatTable(yard.n, yard.s, symbols, cells)


# Quizzical block order and case rule: walking a sail cycle, the case stays
# the same across "-" edges and flips across "+" edges (of the unswitched
# signs), giving two coherent triples per sail.
QUIZZICAL_SAIL_ORDER = ("ABC", "ADE", "FCE", "FDB")


def _coherent_triples(sail: Sail) -> tuple[tuple[str, ...], tuple[str, ...]]:
    letters = list(sail.name)
    cases = [True]  # True = upper case (slash)
    for i in range(2):
        same = sail.edge_signs[i] < 0
        cases.append(cases[-1] if same else not cases[-1])
    # Consistency around the cycle needs an odd number of "-" edges.
    if (cases[2] if sail.edge_signs[2] < 0 else not cases[2]) != cases[0]:
        raise AssertionError(f"sail {sail.name} admits no coherent case assignment")
    first = tuple(x if up else x.lower() for x, up in zip(letters, cases))
    second = tuple(x.lower() if up else x for x, up in zip(letters, cases))
    return first, second


@dataclass(frozen=True)
class QuizzicalLariat:
    """One quaternion-shaped sail lariat: x^2 = y^2 = z^2 = xyz = -R."""

    n: int
    s: int
    sail_name: str
    symbols: tuple[str, str, str]
    cells: tuple[tuple[LariatResult, ...], ...]
    relations_hold: bool


def _quizzical(bk: BoxKite, sail: Sail, symbols: tuple[str, ...]) -> QuizzicalLariat:
    cells = tuple(
        tuple(lariat_product(p, q, bk) for q in symbols) for p in symbols
    )
    holds = all(
        cells[i][i] == LariatResult(-1, "R", 2) for i in range(3)
    )
    reps = [symbol_rep(bk, sym) for sym in symbols]
    triple = collapse(bk, hc_mul(hc_mul(reps[0], reps[1]), reps[2]))
    holds = holds and triple.sign == -1 and triple.symbol == "R"
    return QuizzicalLariat(bk.n, bk.s, sail.name, symbols, cells, holds)


def quizzical_tables(bk: BoxKite) -> list[QuizzicalLariat]:
    """The eight sail lariats of a box-kite, two coherent triples per sail."""
    tables = []
    for name in QUIZZICAL_SAIL_ORDER:
        sail = bk.sail(name)
        for symbols in _coherent_triples(sail):
            tables.append(_quizzical(bk, sail, symbols))
    return tables


@dataclass(frozen=True)
class SailSync:
    """Orientation bookkeeping for the four triples attached to one sail."""

    name: str
    lows: TripIndices
    trips: tuple[TripIndices, TripIndices, TripIndices, TripIndices]
    orientations: tuple[int, int, int, int]
    expected: tuple[int, int, int, int]

    @property
    def passed(self) -> bool:
        return self.orientations == self.expected

    def counterexamples(self) -> tuple[TripIndices, ...]:
        return tuple(
            trip
            for trip, got, want in zip(self.trips, self.orientations, self.expected)
            if got != want
        )


@dataclass(frozen=True)
class TripSyncReport:
    """Per-sail orientation pattern check for one box-kite.

    The all-minus sail must carry four positively oriented triples; each
    other sail must carry exactly two, the base triple and the mixed triple
    that keeps the low index of the vertex shared with the all-minus sail.
    """

    n: int
    s: int
    abc_lows: TripIndices
    sails: tuple[SailSync, ...]

    @property
    def passed(self) -> bool:
        return all(sail.passed for sail in self.sails)


def trip_sync_report(bk: BoxKite) -> TripSyncReport:
    sails = []
    for name in SYNC_SAIL_ORDER:
        sail = bk.sail(name)
        trips = slot_trips(sail.vertices)
        orientations = tuple(trip_orientation(*t) for t in trips)
        if name == "ABC":
            expected = (1, 1, 1, 1)
        else:
            shared = next(i for i, letter in enumerate(name) if letter in "ABC")
            expected = (1,) + tuple(1 if i == shared else -1 for i in range(3))
        sails.append(SailSync(name, trips[0], trips, orientations, expected))
    abc = tuple(v.o for v in bk.sail("ABC").vertices)
    return TripSyncReport(bk.n, bk.s, abc, tuple(sails))
