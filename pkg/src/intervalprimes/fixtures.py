"""Embedded reference sequences used by the verification suites.

The terms are curated ground truth: they are stored as static data files and
never regenerated by the code under test. File format, one sequence per
file: a header line ``# <id> <source>`` followed by one integer per line.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources


@dataclass(frozen=True)
class Fixture:
    id: str
    source: str
    terms: tuple[int, ...]


def _parse(text: str) -> Fixture:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise ValueError("fixture file must start with a '# <id> <source>' header")
    header = lines[0][1:].strip()
    fid, _, source = header.partition(" ")
    return Fixture(id=fid, source=source, terms=tuple(int(ln) for ln in lines[1:]))


def load_fixture(name: str) -> Fixture:
    """Load a fixture by file stem, e.g. 'ramanujan_v2'."""
    path = resources.files("intervalprimes").joinpath(f"data/{name}.txt")
    return _parse(path.read_text(encoding="ascii"))


def all_fixture_names() -> list[str]:
    root = resources.files("intervalprimes").joinpath("data")
    return sorted(p.name.removesuffix(".txt") for p in root.iterdir() if p.name.endswith(".txt"))


#: fixture stem -> (ratio string, kind) for the Ramanujan/Chebyshev families
SEQUENCE_FAMILIES = {
    "ramanujan_v2": "2",
    "ramanujan_v3_2": "3/2",
    "ramanujan_v4_3": "4/3",
    "ramanujan_v6_5": "6/5",
    "ramanujan_v10_9": "10/9",
    "ramanujan_v15_14": "15/14",
    "chebyshev_v2": "2",
    "chebyshev_v3_2": "3/2",
    "chebyshev_v4_3": "4/3",
    "chebyshev_v6_5": "6/5",
    "chebyshev_v10_9": "10/9",
    "chebyshev_v15_14": "15/14",
}

#: fixture stem -> k for the interval-threshold families
THRESHOLD_FAMILIES = {
    "threshold_k1": 1,
    "threshold_k2": 2,
    "threshold_k3": 3,
    "threshold_k5": 5,
    "threshold_k9": 9,
    "threshold_k14": 14,
}

#: fixture stem -> (modulus, residue) for the class families
CLASS_FAMILIES = {
    "class_ramanujan_1mod3": (3, 1),
    "class_ramanujan_2mod3": (3, 2),
    "class_ramanujan_1mod4": (4, 1),
    "class_ramanujan_3mod4": (4, 3),
    "class_threshold_1mod3": (3, 1),
    "class_threshold_2mod3": (3, 2),
    "class_threshold_1mod4": (4, 1),
    "class_threshold_3mod4": (4, 3),
}
