"""Cross-check suite: three routes to each count plus bijection roundtrips.

The report is deterministic text so repeated runs can be compared byte for
byte.
"""

from dataclasses import dataclass

from latmult.avoidance import count_avoiders
from latmult.bijections import join, sigma, split, tau
from latmult.enumeration import count_by_type, enumerate_admissible
from latmult.partitions import count_syt, partitions_of, syt_sum, syt_sum_squares
from latmult.paths import is_self_conjugate
from latmult.tableaux import enumerate_syt


@dataclass(frozen=True)
class CheckResult:
    name: str
    ell: int
    k: int
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f"  [{self.detail}]" if self.detail and not self.ok else ""
        return f"{status} {self.name} ell={self.ell} k={self.k}{tail}"


def _check_cell(ell: int, k: int, allow_large: bool) -> list[CheckResult]:
    out = []
    seqs = enumerate_admissible(ell, k, allow_large=allow_large)
    fixed = [z for z in seqs if is_self_conjugate(z)]

    want_squares = syt_sum_squares(ell, k)
    out.append(
        CheckResult(
            "admissible-count", ell, k, len(seqs) == want_squares,
            f"enumerated {len(seqs)}, formula {want_squares}",
        )
    )
    want_sum = syt_sum(ell, k)
    out.append(
        CheckResult(
            "self-conjugate-count", ell, k, len(fixed) == want_sum,
            f"enumerated {len(fixed)}, formula {want_sum}",
        )
    )

    per_type = count_by_type(ell, k, allow_large=allow_large)
    detail = ""
    for lam in partitions_of(ell, k):
        f = count_syt(lam)
        if per_type[lam] != (f * f, f):
            detail = f"type {list(lam.parts)}: got {per_type[lam]}, expected {(f * f, f)}"
            break
    out.append(CheckResult("per-type-counts", ell, k, not detail, detail))

    detail = ""
    for lam in partitions_of(ell, k):
        for x in enumerate_syt(lam):
            if sigma(tau(x, k)) != x:
                detail = f"tableau {[list(r) for r in x.rows]}"
                break
        if detail:
            break
    out.append(CheckResult("tableau-roundtrip", ell, k, not detail, detail))

    detail = ""
    for z in fixed:
        if tau(sigma(z), k) != z:
            detail = f"sequence {[p.moves for p in z.paths]}"
            break
    out.append(CheckResult("sequence-roundtrip", ell, k, not detail, detail))

    detail = ""
    for z in seqs:
        z1, z2 = split(z)
        if join(z1, z2) != z:
            detail = f"sequence {[p.moves for p in z.paths]}"
            break
    out.append(CheckResult("split-join-roundtrip", ell, k, not detail, detail))

    brute = count_avoiders(ell, k, "brute", allow_large=allow_large)
    by_insertion = count_avoiders(ell, k, "rsk", allow_large=allow_large)
    out.append(
        CheckResult(
            "avoider-counts", ell, k, brute == by_insertion == want_squares,
            f"brute {brute}, rsk {by_insertion}, formula {want_squares}",
        )
    )
    return out


def run_verification(ell_max: int, k_max: int, *, allow_large: bool = False) -> list[CheckResult]:
    """Run every check over the full (ell, k) grid up to the given bounds."""
    if ell_max < 1:
        raise ValueError(f"ell_max must be >= 1, got {ell_max}")
    if k_max < 2:
        raise ValueError(f"k_max must be >= 2, got {k_max}")
    results: list[CheckResult] = []
    for ell in range(1, ell_max + 1):
        for k in range(2, k_max + 1):
            results.extend(_check_cell(ell, k, allow_large))
    return results


def render_report(results: list[CheckResult]) -> str:
    lines = [r.line() for r in results]
    passed = sum(r.ok for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)
