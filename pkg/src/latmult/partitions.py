"""Integer partitions, hook lengths, and exact standard-filling counts.

Everything here is exact: counts are Python integers, division happens only
after the divisibility has been checked.
"""

from dataclasses import dataclass
from math import factorial


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts, the shape of a Young diagram."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("partition needs at least one part")
        if any(not isinstance(p, int) or p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive integers: {self.parts!r}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {self.parts!r}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def height(self) -> int:
        return len(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


def partitions_of(ell: int, max_height: int) -> list[Partition]:
    """All partitions of ell with at most max_height parts, reverse-lex order.

    >>> [p.parts for p in partitions_of(5, 4)]
    [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1)]
    """
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    if max_height < 1:
        raise ValueError(f"max_height must be >= 1, got {max_height}")
    out: list[Partition] = []
    prefix: list[int] = []

    def descend(remaining: int, cap: int, slots: int) -> None:
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        first = min(remaining, cap)
        # parts below remaining/slots cannot fill the leftover slots
        while first >= 1 and first * slots >= remaining:
            prefix.append(first)
            descend(remaining - first, first, slots - 1)
            prefix.pop()
            first -= 1

    descend(ell, ell, max_height)
    return out


def conjugate(lam: Partition) -> Partition:
    """Column lengths of the diagram of lam."""
    cols = tuple(sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0]))
    return Partition(cols)


def hook_lengths(lam: Partition) -> tuple[tuple[int, ...], ...]:
    """Hook length of every box, row-major: arm plus leg plus one."""
    cols = conjugate(lam).parts
    return tuple(
        tuple(row_len + cols[j] - i - j - 1 for j in range(row_len))
        for i, row_len in enumerate(lam.parts)
    )


def count_syt(lam: Partition) -> int:
    """Number of standard fillings of lam by the hook length formula."""
    hooks = 1
    for row in hook_lengths(lam):
        for h in row:
            hooks *= h
    numer = factorial(lam.size)
    if numer % hooks:
        # the hook product always divides the factorial; a remainder means a bug
        raise RuntimeError(f"hook product {hooks} does not divide {lam.size}!")
    return numer // hooks


def _check_ell_k(ell: int, k: int) -> None:
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")


def syt_sum(ell: int, k: int) -> int:
    """Sum of count_syt over all partitions of ell with height at most k."""
    _check_ell_k(ell, k)
    return sum(count_syt(lam) for lam in partitions_of(ell, k))


def syt_sum_squares(ell: int, k: int) -> int:
    """Sum of count_syt squared over all partitions of ell with height at most k."""
    _check_ell_k(ell, k)
    return sum(count_syt(lam) ** 2 for lam in partitions_of(ell, k))
