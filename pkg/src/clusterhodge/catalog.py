"""Named seeds for the varieties with known Hodge tables.

Edges follow ``B[i, j] > 0  <=>  i -> j``.  Mutable vertices come first and
are labelled x, y, z; frozen vertices continue the alphabet.
"""

from __future__ import annotations

from .quiver import Seed


def torus(r: int) -> Seed:
    labels = [f"t{i + 1}" for i in range(r)]
    return Seed.from_matrix([[] for _ in range(r)], 0, labels)


def two_dim(a: int) -> Seed:
    """``xx' = y^a + 1`` with ``y`` invertible."""
    return Seed.from_matrix([[0], [a]], 1, "xy")


def two_dim_times_torus(a: int) -> Seed:
    """Frozen z attached to nothing."""
    return Seed.from_matrix([[0], [a], [0]], 1, "xyz")


def one_mutable(a: int, b: int) -> Seed:
    """Mutable x with frozen y -> x (weight a) and z -> x (weight b)."""
    return Seed.from_matrix([[0], [a], [b]], 1, "xyz")


def two_mutable(a: int, b: int, c: int) -> Seed:
    """Mutable edge y -> x of weight a; frozen z with z -> x (b) and z -> y (c)."""
    return Seed.from_matrix([[0, -a], [a, 0], [b, c]], 2, "xyz")


def three_mutable(a: int, b: int, c: int) -> Seed:
    """Acyclic triangle y -> x (a), z -> x (b), z -> y (c)."""
    return Seed.from_matrix([[0, -a, -b], [a, 0, -c], [b, c, 0]], 3, "xyz")


def cyclic(a: int, b: int, c: int) -> Seed:
    """Oriented triangle x -> y (a), y -> z (b), z -> x (c)."""
    return Seed.from_matrix([[0, a, -c], [-a, 0, b], [c, -b, 0]], 3, "xyz")


def singular_case1(a: int = 1, b: int = 1) -> Seed:
    """Two mutable vertices without an edge, both fed by frozen z: ``xx' = z^a + 1, yy' = z^b + 1``."""
    return Seed.from_matrix([[0, 0], [0, 0], [a, b]], 2, "xyz")
