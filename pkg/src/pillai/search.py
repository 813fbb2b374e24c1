"""Checkpointed exhaustive search over bounded coefficient boxes.

Every instance (a, b, c, r, s) in a box is solved within exponent caps; any
solution set reaching the threshold size is emitted exactly once per family
key with a classification against the exceptional-set catalog and the
generator families.  Iteration is lexicographic in (a, b, r, s) with c
innermost; interior discovery uses forward evaluation (bucketing the values
r*a**x +- s*b**y by c), an independent route from the division-based
per-instance enumeration, which re-derives every emitted set.
"""

from __future__ import annotations

import hashlib
import itertools
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from math import gcd
from pathlib import Path
from typing import Iterable, Iterator

from .catalog import match_catalog
from .equation import Instance, enumerate_solutions
from .families import (
    SolutionSet,
    associate,
    family_key,
    parse_set,
    reduce_to_basic_form,
)
from .generators import classify_generator_family

GCD_FILTERS = ("any", "coprime", "common")


class CheckpointError(ValueError):
    """Checkpoint file does not belong to this box/shard or is corrupt."""


@dataclass(frozen=True)
class SearchBox:
    a_range: tuple[int, int]
    b_range: tuple[int, int]
    r_range: tuple[int, int]
    s_range: tuple[int, int]
    c_range: tuple[int, int]
    exp_cap: int = 40
    min_n: int = 3
    gcd_filter: str = "any"

    def __post_init__(self) -> None:
        for name, (lo, hi) in self._ranges():
            if lo > hi:
                raise ValueError(f"empty {name} range {lo}:{hi}")
            floor = 2 if name in ("a", "b") else 1
            if lo < floor:
                raise ValueError(f"{name} range must start at {floor} or above")
        if self.exp_cap < 1:
            raise ValueError("exp_cap must be >= 1")
        if self.min_n < 3:
            raise ValueError("min_n must be >= 3")
        if self.gcd_filter not in GCD_FILTERS:
            raise ValueError(f"gcd_filter must be one of {GCD_FILTERS}")

    def _ranges(self):
        return (
            ("a", self.a_range),
            ("b", self.b_range),
            ("r", self.r_range),
            ("s", self.s_range),
            ("c", self.c_range),
        )

    def descriptor(self) -> str:
        parts = [f"{name}={lo}:{hi}" for name, (lo, hi) in self._ranges()]
        parts.append(f"exp_cap={self.exp_cap}")
        parts.append(f"min_n={self.min_n}")
        parts.append(f"gcd={self.gcd_filter}")
        return " ".join(parts)


@dataclass(frozen=True)
class Finding:
    """One solution set reaching the threshold, keyed by its family."""

    set: SolutionSet
    key: str
    classification: str
    complete: bool
    cursor: tuple[int, int, int, int, int] | None

    def line(self) -> str:
        return f"{self.key}\t{self.classification}\t{str(self.complete).lower()}"


def parse_finding_line(line: str) -> Finding:
    key, classification, complete = line.rstrip("\n").split("\t")
    return Finding(parse_set(key), key, classification, complete == "true", None)


def findings_digest(findings: Iterable[Finding]) -> str:
    payload = "\n".join(f.line() for f in findings)
    return hashlib.sha256(payload.encode()).hexdigest()


def _box_digest(box: SearchBox, shard: tuple[int, int] | None) -> str:
    text = box.descriptor()
    if shard is not None:
        text += f" shard={shard[0]}/{shard[1]}"
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def solutions_in_block(
    box: SearchBox, a: int, b: int, r: int, s: int
) -> dict[int, list[tuple[int, int]]]:
    """c -> solution pairs with x, y <= exp_cap, by forward evaluation.

    For every exponent pair the three reachable c values are r*a**x + s*b**y
    and |r*a**x - s*b**y|; bucketing them by c inverts the whole block at
    once without any division.
    """
    c_lo, c_hi = box.c_range
    cap = box.exp_cap
    ps = [r * a**x for x in range(cap + 1)]
    qs = [s * b**y for y in range(cap + 1)]
    buckets: dict[int, list[tuple[int, int]]] = {}
    for x, p in enumerate(ps):
        if p + qs[0] > c_hi:
            break
        for y, q in enumerate(qs):
            value = p + q
            if value > c_hi:
                break
            if value >= c_lo:
                buckets.setdefault(value, []).append((x, y))
    for x, p in enumerate(ps):
        if p - qs[-1] > c_hi:
            break
        for y in range(bisect_left(qs, p - c_hi), bisect_right(qs, p + c_hi)):
            diff = p - qs[y]
            if diff and c_lo <= abs(diff) <= c_hi:
                buckets.setdefault(abs(diff), []).append((x, y))
    return {c: sorted(pairs) for c, pairs in buckets.items()}


def classify_finding(sset: SolutionSet) -> str:
    entry = match_catalog(sset)
    if entry is not None:
        return f"known({entry.label})"
    if sset.n_count == 3:
        fid = classify_generator_family(sset)
        if fid is not None:
            return f"generator({fid})"
        return "anomalous-candidate"
    return "unexplained"


def _block_admitted(box: SearchBox, a: int, b: int, r: int, s: int) -> bool:
    if box.gcd_filter == "coprime" and gcd(r * a, s * b) != 1:
        return False
    g = gcd(r, s)
    if g > 1:
        # Dividing the equation by g = gcd(r, s) leaves the solution list
        # unchanged (no solutions at all when g does not divide c), so the
        # block duplicates its reduced twin whenever that twin is in-box.
        if (
            box.c_range[0] == 1
            and r // g >= box.r_range[0]
            and s // g >= box.s_range[0]
        ):
            return False
    return True


def _base_pairs(box: SearchBox, shard: tuple[int, int] | None) -> list[tuple[int, int]]:
    pairs = [
        (a, b)
        for a in range(box.a_range[0], box.a_range[1] + 1)
        for b in range(box.b_range[0], box.b_range[1] + 1)
    ]
    if box.gcd_filter == "common":
        pairs = [(a, b) for a, b in pairs if gcd(a, b) > 1]
    if shard is not None:
        index, count = shard
        if not (count >= 1 and 0 <= index < count):
            raise ValueError("shard must be (index, count) with 0 <= index < count")
        pairs = pairs[index::count]
    return pairs


def _write_checkpoint(path: Path, digest: str, cursor, lines: list[str]) -> None:
    body = [f"#box {digest}", "#cursor " + " ".join(str(v) for v in cursor)]
    body.extend(lines)
    payload = "\n".join(lines)
    body.append("#digest " + hashlib.sha256(payload.encode()).hexdigest())
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text("\n".join(body) + "\n")
    tmp.replace(path)


def _load_checkpoint(path: Path, digest: str):
    lines = path.read_text().splitlines()
    if len(lines) < 3 or not lines[0].startswith("#box ") or not lines[-1].startswith("#digest "):
        raise CheckpointError(f"malformed checkpoint {path}")
    if lines[0].split()[1] != digest:
        raise CheckpointError("checkpoint belongs to a different box or shard")
    if not lines[1].startswith("#cursor "):
        raise CheckpointError("missing cursor line")
    cursor = tuple(int(v) for v in lines[1].split()[1:])
    if len(cursor) != 4:
        raise CheckpointError("cursor must have four components")
    finding_lines = lines[2:-1]
    payload = "\n".join(finding_lines)
    if lines[-1].split()[1] != hashlib.sha256(payload.encode()).hexdigest():
        raise CheckpointError("findings digest mismatch")
    return cursor, [parse_finding_line(line) for line in finding_lines]


def run_search(
    box: SearchBox,
    checkpoint: str | Path | None = None,
    shard: tuple[int, int] | None = None,
    block_limit: int | None = None,
) -> Iterator[Finding]:
    """Stream findings from the box, one per family key, in discovery order.

    With a checkpoint path, previously stored findings are replayed first and
    the scan resumes after the last completed (a, b, r, s) block, so a
    resumed run produces output identical to an uninterrupted one.
    ``block_limit`` stops after that many solved blocks (for interruption
    tests and manual chunking); the checkpoint keeps the run resumable.
    """
    digest = _box_digest(box, shard)
    path = Path(checkpoint) if checkpoint is not None else None
    resume_from = None
    lines: list[str] = []
    seen: set[str] = set()
    if path is not None and path.exists():
        resume_from, stored = _load_checkpoint(path, digest)
        for finding in stored:
            seen.add(finding.key)
            lines.append(finding.line())
            yield finding
    blocks_done = 0
    skipping = resume_from is not None
    for a, b in _base_pairs(box, shard):
        for r in range(box.r_range[0], box.r_range[1] + 1):
            for s in range(box.s_range[0], box.s_range[1] + 1):
                if skipping:
                    if (a, b, r, s) == resume_from:
                        skipping = False
                    continue
                if not _block_admitted(box, a, b, r, s):
                    continue
                buckets = solutions_in_block(box, a, b, r, s)
                for c in range(box.c_range[0], box.c_range[1] + 1):
                    pairs = buckets.get(c)
                    if pairs is None or len(pairs) < box.min_n:
                        continue
                    inst = Instance(a, b, c, r, s)
                    enum = enumerate_solutions(inst, box.exp_cap, box.exp_cap)
                    found = tuple((sol.x, sol.y) for sol in enum.solutions)
                    if len(found) < box.min_n:
                        continue
                    sset = SolutionSet(inst, found)
                    key = family_key(sset)
                    if key in seen:
                        continue
                    seen.add(key)
                    finding = Finding(
                        sset, key, classify_finding(sset), enum.complete, (a, b, r, s, c)
                    )
                    lines.append(finding.line())
                    yield finding
                blocks_done += 1
                if path is not None:
                    _write_checkpoint(path, digest, (a, b, r, s), lines)
                if block_limit is not None and blocks_done >= block_limit:
                    return
    if skipping:
        raise CheckpointError("checkpoint cursor not reached; box mismatch")


def merge_findings(groups: Iterable[Iterable[Finding]]) -> list[Finding]:
    """Deterministic ordered reduction of shard outputs: concatenate in shard
    order, dropping repeats of a family key after its first appearance."""
    out: list[Finding] = []
    seen: set[str] = set()
    for group in groups:
        for finding in group:
            if finding.key not in seen:
                seen.add(finding.key)
                out.append(finding)
    return out


# --- structural lemma checks -------------------------------------------------


@dataclass(frozen=True)
class StructureCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class StructureReport:
    basic: SolutionSet
    checks: tuple[StructureCheck, ...]
    catalog_label: str | None

    @property
    def violations(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    @property
    def unmatched_violations(self) -> list[str]:
        return self.violations if self.catalog_label is None else []


def _distinct(values) -> bool:
    return len(set(values)) == len(values)


def _distinct_positive(values) -> bool:
    pos = [v for v in values if v > 0]
    return _distinct(pos)


def _distinctness_check(basic: SolutionSet) -> StructureCheck:
    pairs = basic.pairs
    x_zero = [p for p in pairs if p[0] == 0]
    y_zero = [p for p in pairs if p[1] == 0]
    xs = [x for x, _ in pairs]
    ys = [y for _, y in pairs]
    origin = (0, 0) in pairs
    if origin and len(x_zero) == 1 and len(y_zero) == 1:
        ok = _distinct(xs) and _distinct(ys)
        case = "single-origin"
    elif origin and len(y_zero) == 2 and len(x_zero) == 1:
        ok = _distinct(xs) and _distinct_positive(ys)
        case = "double-y-zero"
    elif origin and len(x_zero) == 2 and len(y_zero) == 1:
        ok = _distinct(ys) and _distinct_positive(xs)
        case = "double-x-zero"
    elif not origin and len(x_zero) == 1 and len(y_zero) == 1:
        ok = _distinct(xs) and _distinct(ys)
        case = "split-zero"
    else:
        return StructureCheck(
            "distinctness", True, "zero pattern outside the case analysis"
        )
    return StructureCheck("distinctness", ok, f"{case} pattern")


def _monotonic_check(basic: SolutionSet) -> StructureCheck:
    pairs = basic.pairs
    if not _distinct_positive([x for x, _ in pairs]) or not _distinct_positive(
        [y for _, y in pairs]
    ):
        return StructureCheck(
            "monotonicity", True, "hypotheses unmet (repeated positive exponent)"
        )
    ok = True
    for (x1, y1), (x2, y2) in itertools.permutations(pairs, 2):
        if 0 < x1 < x2 and y1 >= y2:
            ok = False
        if 0 < y1 < y2 and x1 >= x2:
            ok = False
    return StructureCheck("monotonicity", ok)


def _ordered_trichotomy(sset: SolutionSet) -> bool:
    pairs = sset.pairs
    xs = [x for x, _ in pairs]
    ys = [y for _, y in pairs]
    n = len(pairs)
    if any(xs[i] >= xs[i + 1] for i in range(n - 1)):
        return False
    if any(ys[i] >= ys[i + 1] for i in range(2, n - 1)):
        return False
    return ys[2] > max(ys[0], ys[1])


def _trichotomy_check(basic: SolutionSet) -> StructureCheck:
    ok = _ordered_trichotomy(basic) or _ordered_trichotomy(associate(basic))
    return StructureCheck("trichotomy", ok)


def check_structure(sset: SolutionSet) -> StructureReport:
    """Evaluate the ordering/distinctness laws on the set's basic form.

    Checks, in order: at most two solutions with min(x, y) = 0; exponent
    distinctness under the applicable zero pattern (on the basic form or its
    associate); pairwise monotonicity of positive exponents; and the sorted
    trichotomy.  A failed check matched by a catalog entry is expected; a
    failed check with no catalog match is a counterexample candidate and is
    surfaced through ``unmatched_violations``.
    """
    if sset.n_count < 3:
        raise ValueError("structure checks require at least three solutions")
    basic = reduce_to_basic_form(sset).set
    zero_min = sum(1 for x, y in basic.pairs if min(x, y) == 0)
    checks = (
        StructureCheck(
            "zero-coordinate-count",
            zero_min <= 2,
            f"{zero_min} solutions with min(x,y) = 0",
        ),
        _distinctness_check(basic),
        _monotonic_check(basic),
        _trichotomy_check(basic),
    )
    entry = match_catalog(sset)
    return StructureReport(basic, checks, entry.label if entry else None)
