"""The admissibility predicate for nested path sequences, and their type."""

from latmult.partitions import Partition
from latmult.paths import ColorCountTable, LatticePath, PathSequence, color_counts


def satisfies_diagonal_condition(p: LatticePath) -> bool:
    """No prefix has more up than right moves, so the path never crosses the
    anti-diagonal through its endpoints (touching is allowed)."""
    return all(2 * u <= m for m, u in enumerate(p.up_prefix))


def _band_ok(table: ColorCountTable, ell: int, i: int, j: int) -> bool:
    ti = table.t(i, j)
    if ti > table.t(i - 1, j):
        return False
    budget = ell - abs(j) - table.t(1, j) - sum(table.t(a, j) for a in range(1, i))
    return ti <= budget


def is_admissible(z: PathSequence) -> bool:
    """The defining conditions: the first path stays weakly below the
    anti-diagonal, and every band's color tallies respect the cap against
    the previous band, the remaining budget on that color, and weak
    monotonicity toward color zero. With k = 2 only the first condition
    applies."""
    if not satisfies_diagonal_condition(z.paths[0]):
        return False
    if z.k == 2:
        return True
    table = color_counts(z)
    ell = z.ell
    for i in range(2, z.k):
        # walk colors outward from 0 so each monotonicity link is checked once
        for j in range(0, ell):
            if not _band_ok(table, ell, i, j):
                return False
            if j > 0 and table.t(i, j) > table.t(i, j - 1):
                return False
        for j in range(-1, -ell, -1):
            if not _band_ok(table, ell, i, j):
                return False
            if table.t(i, j) > table.t(i, j + 1):
                return False
    return True


def sequence_type(z: PathSequence) -> Partition:
    """The partition formed by the color-zero band tallies, top band first,
    trailing zeros dropped."""
    if not is_admissible(z):
        raise ValueError("type is only defined for admissible sequences")
    column = color_counts(z).zero_column()
    if any(a < b for a, b in zip(column, column[1:])):
        raise RuntimeError(f"internal error: color-zero tallies not weakly decreasing: {column}")
    parts = tuple(c for c in column if c > 0)
    if sum(parts) != z.ell:
        raise RuntimeError(f"internal error: type {parts} does not partition {z.ell}")
    return Partition(parts)
