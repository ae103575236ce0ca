"""Exhaustive enumeration of admissible sequences with incremental pruning.

Naively filtering all (k-1)-tuples of paths dies quickly: the tuple space
grows like binomial(2*ell, ell)**(k-1). Instead paths are grown depth first,
move by move, and every defining condition is checked the instant the moves
determining it are fixed.

The key fact making that possible: after m moves a path sits on the
(m - ell)-diagonal, and the number of boxes of color j = m - ell below a
path equals its up-move count at move ell + j, minus max(j, 0). Band
tallies are therefore differences of up-move prefix counts, so each color's
conditions can be tested as soon as all paths have taken ell + j moves.
"""

from typing import Callable

from latmult.admissibility import sequence_type
from latmult.guards import check_guard
from latmult.partitions import Partition, partitions_of
from latmult.paths import LatticePath, PathSequence, is_self_conjugate

GUARD_ELL = 6
GUARD_K = 5


def _check_args(ell: int, k: int) -> None:
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")


def _check_size(ell: int, k: int, allow_large: bool) -> None:
    check_guard(
        ell <= GUARD_ELL and k <= GUARD_K,
        allow_large,
        f"enumeration at ell={ell}, k={k} exceeds the default guard (ell <= {GUARD_ELL}, k <= {GUARD_K})",
    )


def visit_admissible(ell: int, k: int, visit: Callable[[PathSequence], None]) -> None:
    """Stream every admissible sequence to visit, in canonical order.

    Canonical order is lexicographic on the concatenated move strings, which
    the search produces directly by growing paths in index order and trying
    'R' before 'U' at every move. No size guard is applied here; the list
    building wrappers own that.
    """
    _check_args(ell, k)
    total = 2 * ell
    n_colors = total - 1
    finished: list[str] = []

    def grow_path(i: int, prev_up, band_prev, band_one, cum) -> None:
        # i: 1-based path index. prev_up: up-move prefix counts of path i-1.
        # band_prev / band_one: color tallies of band i-1 and band 1.
        # cum[jx]: sum of tallies of bands 1..i-1 at color index jx.
        moves = [""] * total
        ups = [0] * (total + 1)
        band_cur = [0] * n_colors

        def step(m: int) -> None:
            if m > total:
                finished.append("".join(moves))
                if i == k - 1:
                    visit(PathSequence(tuple(LatticePath(s) for s in finished)))
                else:
                    new_cum = tuple(a + b for a, b in zip(cum, band_cur))
                    grow_path(
                        i + 1,
                        tuple(ups),
                        tuple(band_cur),
                        band_one if i > 1 else tuple(band_cur),
                        new_cum,
                    )
                finished.pop()
                return
            before = ups[m - 1]
            for mv, u in (("R", before), ("U", before + 1)):
                if mv == "R":
                    if m - u > ell:
                        continue
                elif u > ell:
                    continue
                if i == 1:
                    if 2 * u > m:  # first path may not cross the anti-diagonal
                        continue
                elif u < prev_up[m]:  # nesting above the previous path
                    continue
                if m < total:
                    # move m fixes this path's tally for color j = m - ell
                    j = m - ell
                    jx = m - 1
                    if i == 1:
                        t = u - j if j > 0 else u
                    else:
                        t = u - prev_up[m]
                        if t > band_prev[jx]:
                            continue
                        if t > ell - abs(j) - band_one[jx] - cum[jx]:
                            continue
                        if j <= 0:
                            if m > 1 and band_cur[jx - 1] > t:
                                continue
                        elif t > band_cur[jx - 1]:
                            continue
                    band_cur[jx] = t
                moves[m - 1] = mv
                ups[m] = u
                step(m + 1)

        step(1)

    grow_path(1, (), (), (), (0,) * n_colors)


def enumerate_admissible(ell: int, k: int, *, allow_large: bool = False) -> list[PathSequence]:
    """Every admissible sequence of k-1 nested paths, canonically ordered."""
    _check_args(ell, k)
    _check_size(ell, k, allow_large)
    out: list[PathSequence] = []
    visit_admissible(ell, k, out.append)
    return out


def enumerate_self_conjugate(ell: int, k: int, *, allow_large: bool = False) -> list[PathSequence]:
    """The reflection-fixed subset of enumerate_admissible, same order."""
    _check_args(ell, k)
    _check_size(ell, k, allow_large)
    out: list[PathSequence] = []

    def keep(z: PathSequence) -> None:
        if is_self_conjugate(z):
            out.append(z)

    visit_admissible(ell, k, keep)
    return out


def count_sequences(ell: int, k: int, *, allow_large: bool = False) -> tuple[int, int]:
    """(admissible, self-conjugate) totals without materializing the lists."""
    _check_args(ell, k)
    _check_size(ell, k, allow_large)
    admissible = conjugate_fixed = 0

    def tally(z: PathSequence) -> None:
        nonlocal admissible, conjugate_fixed
        admissible += 1
        if is_self_conjugate(z):
            conjugate_fixed += 1

    visit_admissible(ell, k, tally)
    return admissible, conjugate_fixed


def count_by_type(ell: int, k: int, *, allow_large: bool = False) -> dict[Partition, tuple[int, int]]:
    """Per-partition tallies: (admissible count, self-conjugate count).

    Keys are exactly partitions_of(ell, k) in their canonical order.
    """
    _check_args(ell, k)
    _check_size(ell, k, allow_large)
    tallies: dict[Partition, list[int]] = {lam: [0, 0] for lam in partitions_of(ell, k)}

    def tally(z: PathSequence) -> None:
        entry = tallies[sequence_type(z)]
        entry[0] += 1
        if is_self_conjugate(z):
            entry[1] += 1

    visit_admissible(ell, k, tally)
    return {lam: (a, s) for lam, (a, s) in tallies.items()}
