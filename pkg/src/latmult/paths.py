"""Monotone lattice paths on a colored square, nesting order, color counts.

The square sits in the fourth quadrant with its upper-left corner at the
origin. A box is named by its upper-left corner (a, b) with 0 <= a <= ell-1
and -(ell-1) <= b <= 0, and carries color a + b. Paths run from (0, -ell)
to (ell, 0) in unit right and up moves.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

_SWAP = str.maketrans("RU", "UR")


def reflected_moves(moves: str) -> str:
    """Mirror a move string across the anti-diagonal: reverse it and swap R/U."""
    return moves[::-1].translate(_SWAP)


@dataclass(frozen=True)
class LatticePath:
    """A monotone path recorded as a string of 'R' and 'U' moves."""

    moves: str

    def __post_init__(self) -> None:
        n = len(self.moves)
        if n == 0 or n % 2:
            raise ValueError(f"move string must have positive even length: {self.moves!r}")
        rights = self.moves.count("R")
        ups = self.moves.count("U")
        if rights + ups != n:
            raise ValueError(f"moves must be 'R' and 'U' only: {self.moves!r}")
        if rights != ups:
            raise ValueError(f"need equally many R and U moves: {self.moves!r}")

    @property
    def ell(self) -> int:
        return len(self.moves) // 2

    @cached_property
    def up_prefix(self) -> tuple[int, ...]:
        """up_prefix[m] is the number of U moves among the first m moves."""
        acc = [0]
        for mv in self.moves:
            acc.append(acc[-1] + (mv == "U"))
        return tuple(acc)

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """heights[x-1] is the y coordinate of the horizontal step in column x."""
        ell = self.ell
        out = []
        ups = 0
        for mv in self.moves:
            if mv == "R":
                out.append(ups - ell)
            else:
                ups += 1
        return tuple(out)

    @classmethod
    def from_heights(cls, heights) -> "LatticePath":
        """Rebuild the move string from the per-column heights vector."""
        hs = tuple(heights)
        ell = len(hs)
        if ell == 0:
            raise ValueError("heights vector must be nonempty")
        if any(h < -ell or h > 0 for h in hs):
            raise ValueError(f"heights must lie in [-{ell}, 0]: {hs!r}")
        if any(a > b for a, b in zip(hs, hs[1:])):
            raise ValueError(f"heights must be weakly increasing: {hs!r}")
        pieces = []
        y = -ell
        for h in hs:
            pieces.append("U" * (h - y))
            pieces.append("R")
            y = h
        pieces.append("U" * (0 - y))
        return cls("".join(pieces))


def reflect(p: LatticePath) -> LatticePath:
    """The mirror image of p across the anti-diagonal from (0, 0) to (ell, -ell)."""
    return LatticePath(reflected_moves(p.moves))


def path_leq(p: LatticePath, q: LatticePath) -> bool:
    """True when p lies weakly below q in every column."""
    if p.ell != q.ell:
        raise ValueError(f"paths live on different squares: ell {p.ell} vs {q.ell}")
    return all(a <= b for a, b in zip(p.heights, q.heights))


@dataclass(frozen=True)
class ColoredSquare:
    """The ell by ell grid of boxes; the box cornered at (a, b) has color a + b."""

    ell: int

    def __post_init__(self) -> None:
        if self.ell < 1:
            raise ValueError(f"ell must be >= 1, got {self.ell}")

    def box_color(self, a: int, b: int) -> int:
        if not 0 <= a <= self.ell - 1:
            raise ValueError(f"a must lie in [0, {self.ell - 1}], got {a}")
        if not -(self.ell - 1) <= b <= 0:
            raise ValueError(f"b must lie in [{-(self.ell - 1)}, 0], got {b}")
        return a + b

    def boxes(self) -> Iterator[tuple[int, int]]:
        for a in range(self.ell):
            for b in range(-(self.ell - 1), 1):
                yield a, b

    def color_count(self, j: int) -> int:
        """Number of boxes of color j; zero outside the color range."""
        return max(self.ell - abs(j), 0)


def box_color(ell: int, a: int, b: int) -> int:
    return ColoredSquare(ell).box_color(a, b)


def box_below_path(p: LatticePath, a: int, b: int) -> bool:
    """Is the box cornered at (a, b) below p? Column rule: heights[a] >= b."""
    return p.heights[a] >= b


@dataclass(frozen=True)
class PathSequence:
    """Nested paths p1 <= p2 <= ... <= p_{k-1} on one square."""

    paths: tuple[LatticePath, ...]

    def __post_init__(self) -> None:
        paths = tuple(self.paths)
        object.__setattr__(self, "paths", paths)
        if not paths:
            raise ValueError("a sequence needs at least one path (k >= 2)")
        ell = paths[0].ell
        if any(p.ell != ell for p in paths):
            raise ValueError("all paths must share one square size")
        for lower, upper in zip(paths, paths[1:]):
            if not path_leq(lower, upper):
                raise ValueError(f"paths are not nested: {lower.moves} above {upper.moves}")

    @property
    def ell(self) -> int:
        return self.paths[0].ell

    @property
    def k(self) -> int:
        return len(self.paths) + 1


def is_self_conjugate(z: PathSequence) -> bool:
    """True when every path equals its own reflection."""
    return all(p.moves == reflected_moves(p.moves) for p in z.paths)


@dataclass(frozen=True)
class ColorCountTable:
    """Box tallies t[i][j]: band i, color j, with j running -(ell-1)..ell-1.

    Band 1 is below the first path, band i sits between paths i-1 and i,
    and band 0 is above the last path.
    """

    ell: int
    k: int
    counts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        counts = tuple(tuple(row) for row in self.counts)
        object.__setattr__(self, "counts", counts)
        width = 2 * self.ell - 1
        if len(counts) != self.k or any(len(row) != width for row in counts):
            raise ValueError(f"table must be {self.k} x {width}")
        for jx in range(width):
            j = jx - (self.ell - 1)
            total = sum(row[jx] for row in counts)
            if total != self.ell - abs(j):
                raise ValueError(
                    f"color {j} tallies sum to {total}, expected {self.ell - abs(j)}"
                )

    def t(self, i: int, j: int) -> int:
        if not 0 <= i < self.k:
            raise ValueError(f"band index must lie in [0, {self.k - 1}], got {i}")
        if abs(j) > self.ell - 1:
            raise ValueError(f"color must lie in [{1 - self.ell}, {self.ell - 1}], got {j}")
        return self.counts[i][j + self.ell - 1]

    def zero_column(self) -> tuple[int, ...]:
        return tuple(self.t(i, 0) for i in range(self.k))


def color_counts(z: PathSequence) -> ColorCountTable:
    """Tally the boxes of each color by the band they fall in."""
    ell, k = z.ell, z.k
    counts = [[0] * (2 * ell - 1) for _ in range(k)]
    heights = [p.heights for p in z.paths]
    for a in range(ell):
        for b in range(-(ell - 1), 1):
            band = 0
            for i, hs in enumerate(heights, start=1):
                if hs[a] >= b:
                    band = i
                    break
            counts[band][a + b + ell - 1] += 1
    return ColorCountTable(ell, k, tuple(tuple(row) for row in counts))
