"""JSON-facing converters shared by the command line front end."""

from latmult.avoidance import Permutation
from latmult.partitions import Partition
from latmult.paths import LatticePath, PathSequence
from latmult.tableaux import StandardTableau


def _int_list(obj, what: str) -> list[int]:
    if not isinstance(obj, list) or any(not isinstance(v, int) or isinstance(v, bool) for v in obj):
        raise ValueError(f"{what} must be a JSON array of integers, got {obj!r}")
    return obj


def partition_to_json(lam: Partition) -> list[int]:
    return list(lam.parts)


def partition_from_json(obj) -> Partition:
    return Partition(tuple(_int_list(obj, "partition")))


def tableau_to_json(x: StandardTableau) -> list[list[int]]:
    return [list(row) for row in x.rows]


def tableau_from_json(obj) -> StandardTableau:
    if not isinstance(obj, list):
        raise ValueError(f"tableau must be a JSON array of row arrays, got {obj!r}")
    return StandardTableau(tuple(tuple(_int_list(row, "tableau row")) for row in obj))


def path_to_json(p: LatticePath) -> str:
    return p.moves


def path_from_json(obj) -> LatticePath:
    if not isinstance(obj, str):
        raise ValueError(f"path must be a JSON string of R/U moves, got {obj!r}")
    return LatticePath(obj)


def sequence_to_json(z: PathSequence) -> dict:
    return {"ell": z.ell, "k": z.k, "paths": [p.moves for p in z.paths]}


def sequence_from_json(obj) -> PathSequence:
    if not isinstance(obj, dict):
        raise ValueError(f"sequence must be a JSON object, got {obj!r}")
    missing = {"ell", "k", "paths"} - obj.keys()
    if missing:
        raise ValueError(f"sequence object is missing keys: {sorted(missing)}")
    if not isinstance(obj["paths"], list):
        raise ValueError("sequence 'paths' must be an array of move strings")
    z = PathSequence(tuple(path_from_json(s) for s in obj["paths"]))
    if z.ell != obj["ell"] or z.k != obj["k"]:
        raise ValueError(
            f"declared ell={obj['ell']}, k={obj['k']} do not match paths (ell={z.ell}, k={z.k})"
        )
    return z


def permutation_to_json(w: Permutation) -> list[int]:
    return list(w.word)


def permutation_from_json(obj) -> Permutation:
    return Permutation(tuple(_int_list(obj, "permutation")))


def permutation_from_word(text: str) -> Permutation:
    """Parse a one-line word of decimal digits, for sizes up to 9."""
    word = text.strip()
    if not word.isdigit():
        raise ValueError(f"word must be decimal digits like 26873415, got {text!r}")
    return Permutation(tuple(int(ch) for ch in word))
