"""Registry of the exceptional solution sets fixed by the classification
theorems, with membership testing up to family, subset, and associate.

The concrete entries live in ``data/exceptional_sets.txt``; two parametric
entries share a single template in the base-2 tower
(2**g + (-1)**eps, 2, 2**g - (-1)**eps, 1, 2; 0,g-1, 1,0, 1,g)
and differ only in their admissible g-range.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .equation import Instance, determine_signs, enumerate_solutions
from .families import (
    SolutionSet,
    associate,
    family_key,
    parse_set,
    reduce_to_basic_form,
)

_DATA_FILE = "exceptional_sets.txt"
_PARAM_TEMPLATE = "2^g+(-1)^e,2,2^g-(-1)^e,1,2;0,g-1,1,0,1,g"

_SOURCES = {
    "TheoremA": "classification of sets with more than three solutions",
    "Theorem1": "gcd(a,b) > 1 classification",
    "Lemma2": "zero-coordinate count exceptions",
    "Lemma4": "distinctness exceptions, (0,0) zero pattern",
    "Lemma6": "distinctness exceptions, double y = 0 pattern",
    "Lemma7": "distinctness exceptions, split zero pattern",
    "Lemma8": "minimal-x2 exceptions",
    "Lemma9": "minimal-x2/y1 exceptions",
    "Lemma11": "monotonicity exceptions",
    "Lemma12": "sorted-exponent trichotomy exceptions",
    "Anomalous": "exactly-three-solution cases outside all generator families",
}

# Expected enumeration counts for the nine TheoremA entries, in order.
THEOREM_A_COUNTS = (4, 5, 4, 5, 4, 4, 4, 4, 4)


@dataclass(frozen=True)
class ParamFamily:
    """The parametric base-2 tower entry, instantiable at (eps, g)."""

    constraint: str  # "g>1" or "g+e>3"

    def admissible(self, eps: int, g: int) -> bool:
        if eps not in (0, 1) or g < 1:
            return False
        if self.constraint == "g>1":
            return g > 1
        if self.constraint == "g+e>3":
            return g + eps > 3
        raise ValueError(f"unknown constraint {self.constraint!r}")

    def instantiate(self, eps: int, g: int) -> SolutionSet:
        if not self.admissible(eps, g):
            raise ValueError(f"(eps={eps}, g={g}) violates {self.constraint}")
        e = (-1) ** eps
        inst = Instance(2**g + e, 2, 2**g - e, 1, 2)
        return SolutionSet(inst, ((0, g - 1), (1, 0), (1, g)))


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    source: str
    set: SolutionSet | None = None
    param: ParamFamily | None = None

    @property
    def is_parametric(self) -> bool:
        return self.param is not None


def _source_for(label: str) -> str:
    prefix = label.split("-")[0]
    return _SOURCES[prefix]


@lru_cache(maxsize=1)
def catalog_entries() -> tuple[CatalogEntry, ...]:
    """All registry entries, in file order, concrete sets pre-verified."""
    text = resources.files("pillai.data").joinpath(_DATA_FILE).read_text()
    entries: list[CatalogEntry] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        head, rest = line.split(maxsplit=1)
        if head.startswith("param:"):
            label = head[len("param:"):]
            template, constraint = rest.split()
            if template != _PARAM_TEMPLATE:
                raise ValueError(f"unrecognized parametric template {template!r}")
            entries.append(
                CatalogEntry(label, _source_for(label), param=ParamFamily(constraint))
            )
        else:
            sset = parse_set(rest)
            if not sset.verify():
                raise ValueError(f"catalog entry {head} fails verification")
            entries.append(CatalogEntry(head, _source_for(head), set=sset))
    if len({e.label for e in entries}) != len(entries):
        raise ValueError("duplicate catalog labels")
    return tuple(entries)


def theorem_a_entries() -> tuple[CatalogEntry, ...]:
    return tuple(e for e in catalog_entries() if e.label.startswith("TheoremA-"))


def theorem1_entries() -> tuple[CatalogEntry, ...]:
    return tuple(e for e in catalog_entries() if e.label.startswith("Theorem1-"))


@lru_cache(maxsize=1)
def _subset_key_index() -> dict[str, CatalogEntry]:
    """family_key -> entry, over all subsets of size >= 3 of concrete entries.

    First registration wins, so earlier entries (TheoremA, Theorem1) take
    labeling priority when several lists print the same set.
    """
    index: dict[str, CatalogEntry] = {}
    for entry in catalog_entries():
        if entry.set is None:
            continue
        pairs = entry.set.pairs
        for size in range(3, len(pairs) + 1):
            for combo in itertools.combinations(pairs, size):
                key = family_key(SolutionSet(entry.set.inst, combo))
                index.setdefault(key, entry)
    return index


def _solve_param_template(basic: SolutionSet) -> tuple[int, int] | None:
    """Read (eps, g) off a basic form matching the parametric template."""
    inst = basic.inst
    if basic.n_count != 3 or inst.b != 2 or inst.r != 1 or inst.s != 2:
        return None
    ones = [y for x, y in basic.pairs if x == 1]
    zeros = [y for x, y in basic.pairs if x == 0]
    if sorted(ones) != [0, max(ones, default=0)] or len(zeros) != 1:
        return None
    g = max(ones)
    if g < 1 or zeros[0] != g - 1:
        return None
    e = inst.a - 2**g
    if e not in (1, -1) or inst.c != 2**g - e:
        return None
    return (0 if e == 1 else 1), g


def match_catalog(sset: SolutionSet) -> CatalogEntry | None:
    """The registry entry whose family covers this set, if any.

    A set is covered when it is in the same family as a subset (or an
    associate of a subset) of an entry; the family key folds associates in,
    so a single lookup per subset suffices.  Parametric entries are matched
    by solving (eps, g) from the reduced basic form.
    """
    if sset.n_count < 3:
        raise ValueError("catalog matching requires at least three solutions")
    key = family_key(sset)
    hit = _subset_key_index().get(key)
    if hit is not None:
        return hit
    basic = reduce_to_basic_form(sset).set
    for candidate in (basic, associate(basic)):
        solved = _solve_param_template(candidate)
        if solved is None:
            continue
        eps, g = solved
        for entry in catalog_entries():
            if entry.param is not None and entry.param.admissible(eps, g):
                return entry
    return None


def verify_catalog(param_g_max: int = 30, caps: int = 64) -> list[str]:
    """Re-verify the whole registry; returns a list of problem descriptions.

    Concrete entries must solve the equation pair by pair with unique signs;
    the nine TheoremA entries must be exactly reproduced by enumeration under
    the given caps; parametric entries must verify at every admissible
    (eps, g) with g <= param_g_max.
    """
    problems: list[str] = []
    a_seen = 0
    for entry in catalog_entries():
        if entry.set is not None:
            for x, y in entry.set.pairs:
                if determine_signs(entry.set.inst, x, y) is None:
                    problems.append(f"{entry.label}: ({x},{y}) does not verify")
            if entry.label.startswith("TheoremA-"):
                enum = enumerate_solutions(entry.set.inst, caps, caps)
                found = tuple((s.x, s.y) for s in enum.solutions)
                expected_n = THEOREM_A_COUNTS[a_seen] if a_seen < 9 else -1
                a_seen += 1
                if found != entry.set.pairs or len(found) != expected_n:
                    problems.append(
                        f"{entry.label}: enumeration mismatch, found {found}"
                    )
        else:
            for eps in (0, 1):
                for g in range(1, param_g_max + 1):
                    if not entry.param.admissible(eps, g):
                        continue
                    inst_set = entry.param.instantiate(eps, g)
                    if not inst_set.verify():
                        problems.append(
                            f"{entry.label}: (eps={eps}, g={g}) does not verify"
                        )
    if a_seen != len(THEOREM_A_COUNTS):
        problems.append(f"TheoremA: expected nine entries, found {a_seen}")
    return problems
