"""Finite unit loops inside 2^n-ion algebras, and exhaustive identity checks.

A unit loop here is the set {+-e_0} union {+-e_i : i in axes} for a set of
axis indices closed under XOR.  Closure under the algebra product then comes
for free, since a product of signed units is a signed unit on the XOR index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .algebra import BasisBlade


@dataclass(frozen=True)
class UnitLoop:
    """A multiplicatively closed set of signed basis units."""

    axis_indices: frozenset[int]
    elements: tuple[BasisBlade, ...]
    was_closed: bool

    def __len__(self) -> int:
        return len(self.elements)


def loop_closure(axis_indices) -> UnitLoop:
    """Close {+-e_0, +-e_i} under the product; XOR-closing the axes suffices."""
    axes = set(axis_indices)
    if not axes or 0 in axes or any(i < 0 for i in axes):
        raise ValueError("axis indices must be a nonempty set of positive integers")
    closed = set(axes)
    while True:
        new = {a ^ b for a in closed for b in closed if a != b} - {0} - closed
        if not new:
            break
        closed |= new
    elements = [BasisBlade(s, i) for i in sorted(closed | {0}) for s in (1, -1)]
    return UnitLoop(frozenset(closed), tuple(elements), closed == axes)


@dataclass(frozen=True)
class Counterexample:
    identity: str
    x: BasisBlade
    y: BasisBlade
    z: BasisBlade
    lhs: BasisBlade
    rhs: BasisBlade

    def __str__(self) -> str:
        return (
            f"{self.identity} fails at x={self.x}, y={self.y}, z={self.z}: "
            f"{self.lhs} != {self.rhs}"
        )


# Each form maps a triple to one or more (lhs, rhs) equations to compare.
Equations = tuple[tuple[BasisBlade, BasisBlade], ...]
TripleForm = Callable[[BasisBlade, BasisBlade, BasisBlade], Equations]

# The three classical Moufang identities; "moufang" checks the middle one.
MOUFANG_FORMS: dict[str, TripleForm] = {
    "middle": lambda x, y, z: (((x * y) * (z * x), x * ((y * z) * x)),),
    "left": lambda x, y, z: ((x * (y * (x * z)), ((x * y) * x) * z),),
    "right": lambda x, y, z: ((((x * y) * z) * y, x * (y * (z * y))),),
}

IDENTITY_FORMS: dict[str, TripleForm] = {
    "moufang": MOUFANG_FORMS["middle"],
    "associative": lambda x, y, z: (((x * y) * z, x * (y * z)),),
    "flexible": lambda x, y, z: (((x * y) * x, x * (y * x)),),
    "alternative": lambda x, y, z: (
        ((x * x) * y, x * (x * y)),
        ((y * x) * x, y * (x * x)),
    ),
}


def _scan(loop: UnitLoop, name: str, form: TripleForm) -> Optional[Counterexample]:
    for x in loop.elements:
        for y in loop.elements:
            for z in loop.elements:
                for lhs, rhs in form(x, y, z):
                    if lhs != rhs:
                        return Counterexample(name, x, y, z, lhs, rhs)
    return None


def check_identity(loop: UnitLoop, identity: str) -> Optional[Counterexample]:
    """Exhaustively test an identity; None means it holds everywhere."""
    if identity not in IDENTITY_FORMS:
        raise ValueError(f"unknown identity {identity!r}")
    return _scan(loop, identity, IDENTITY_FORMS[identity])


def moufang_report(loop: UnitLoop) -> dict[str, Optional[Counterexample]]:
    """All three Moufang forms, since finite loops can in principle split them."""
    return {
        name: _scan(loop, f"moufang-{name}", form)
        for name, form in MOUFANG_FORMS.items()
    }


def is_quaternion_group(loop: UnitLoop) -> bool:
    """True for the 8-element quaternion group Q8.

    Among order-8 structures this pins Q8 exactly: associative, not
    commutative, and a single element of order two.
    """
    if len(loop) != 8 or check_identity(loop, "associative") is not None:
        return False
    identity = BasisBlade(1, 0)
    involutions = [x for x in loop.elements if x != identity and x * x == identity]
    commutative = all(x * y == y * x for x in loop.elements for y in loop.elements)
    return len(involutions) == 1 and not commutative
