"""Solution-set algebra: associates, subsets, reduction to basic form,
family equivalence, and canonical family keys.

A solution set is an instance plus a canonically ordered list of distinct
(x, y) solution pairs.  Two sets belong to the same family when one rescales
onto the other by a positive rational k with matched terms, allowing powers
of a common base to replace a or b.  Every family contains exactly one
member in *basic form*: gcd(r, s*b) = gcd(s, r*a) = 1, minimal x and y both
zero, and neither base a perfect power.  Reduction below is the constructive
route to that member.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .equation import Instance, determine_signs
from .intmath import is_perfect_power


class ReductionError(Exception):
    """Reduction produced a set violating the basic-form invariants.

    Unreachable for genuine solution sets with more than two solutions;
    two-solution inputs can legitimately land here (e.g. when both bases are
    even and the reduced s shares a factor with r*a).
    """


@dataclass(frozen=True)
class SolutionSet:
    """An instance with its solution pairs, sorted ascending by (x, y).

    Admits two-solution sets for reduction plumbing even though the proper
    notion of a "set of solutions" requires more than two (see ``proper``).
    No x value and no y value may occur more than twice.
    """

    inst: Instance
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple(sorted((int(x), int(y)) for x, y in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        if len(pairs) < 2:
            raise ValueError("a solution set needs at least two pairs")
        if len(set(pairs)) != len(pairs):
            raise ValueError("solution pairs must be distinct")
        if any(x < 0 or y < 0 for x, y in pairs):
            raise ValueError("exponents must be nonnegative")
        for coord in (0, 1):
            values = [p[coord] for p in pairs]
            if any(values.count(v) > 2 for v in set(values)):
                raise ValueError("no exponent value may occur more than twice")

    @property
    def n_count(self) -> int:
        return len(self.pairs)

    @property
    def proper(self) -> bool:
        """True when the set meets the n > 2 definition of a solution set."""
        return len(self.pairs) > 2

    def verify(self) -> bool:
        """True iff every pair actually solves the instance."""
        return all(determine_signs(self.inst, x, y) is not None for x, y in self.pairs)


@dataclass(frozen=True)
class BasicForm:
    set: SolutionSet
    verified: bool


@dataclass(frozen=True)
class FamilyWitness:
    """Scale factor k and index pairing certifying family membership:
    k*c = C, and pair (i, j) matches k*r*a**x_i = R*A**X_j term by term."""

    k: Fraction
    pairing: tuple[tuple[int, int], ...]


def format_set(sset: SolutionSet) -> str:
    """Canonical ASCII serialization a,b,c,r,s;x1,y1,x2,y2,... (no spaces)."""
    inst = sset.inst
    head = f"{inst.a},{inst.b},{inst.c},{inst.r},{inst.s}"
    tail = ",".join(f"{x},{y}" for x, y in sset.pairs)
    return f"{head};{tail}"


def parse_set(text: str) -> SolutionSet:
    try:
        head, tail = text.strip().split(";")
        a, b, c, r, s = (int(v) for v in head.split(","))
        flat = [int(v) for v in tail.split(",")]
    except (ValueError, TypeError) as exc:
        raise ValueError(f"malformed solution-set serialization: {text!r}") from exc
    if len(flat) % 2:
        raise ValueError("odd number of exponent values")
    pairs = list(zip(flat[0::2], flat[1::2]))
    return SolutionSet(Instance(a, b, c, r, s), tuple(pairs))


def associate(sset: SolutionSet) -> SolutionSet:
    """Swap the roles of (a, r, x) and (b, s, y).  An involution."""
    inst = sset.inst
    return SolutionSet(
        Instance(inst.b, inst.a, inst.c, inst.s, inst.r),
        tuple((y, x) for x, y in sset.pairs),
    )


def is_subset(small: SolutionSet, big: SolutionSet) -> bool:
    return small.inst == big.inst and set(small.pairs) <= set(big.pairs)


def is_basic_form(sset: SolutionSet) -> bool:
    inst = sset.inst
    if gcd(inst.r, inst.s * inst.b) != 1 or gcd(inst.s, inst.r * inst.a) != 1:
        return False
    if min(x for x, _ in sset.pairs) != 0 or min(y for _, y in sset.pairs) != 0:
        return False
    if is_perfect_power(inst.a).exponent != 1:
        return False
    if is_perfect_power(inst.b).exponent != 1:
        return False
    return True


def reduce_to_basic_form(sset: SolutionSet) -> BasicForm:
    """Constructive reduction to the family's unique basic form.

    Divides through by g = gcd(r*a**x0, s*b**y0) with the minimal exponents
    shifted to zero, then strips perfect powers from both bases, rescaling
    exponents by the power index.  The basic-form invariants are asserted on
    the result; a violation raises ReductionError rather than passing a
    non-canonical set downstream.
    """
    inst = sset.inst
    for x, y in sset.pairs:
        if determine_signs(inst, x, y) is None:
            raise ValueError(f"({x},{y}) does not solve {inst}")
    x0 = min(x for x, _ in sset.pairs)
    y0 = min(y for _, y in sset.pairs)
    g = gcd(inst.r * inst.a**x0, inst.s * inst.b**y0)
    if inst.c % g:
        raise ReductionError("c is not divisible by the leading-term gcd")
    r2 = inst.r * inst.a**x0 // g
    s2 = inst.s * inst.b**y0 // g
    c2 = inst.c // g
    pairs = [(x - x0, y - y0) for x, y in sset.pairs]
    a2, ea = is_perfect_power(inst.a)
    b2, eb = is_perfect_power(inst.b)
    if ea > 1 or eb > 1:
        pairs = [(x * ea, y * eb) for x, y in pairs]
    out = SolutionSet(Instance(a2, b2, c2, r2, s2), tuple(pairs))
    if not is_basic_form(out):
        raise ReductionError(f"reduced set {format_set(out)} is not in basic form")
    return BasicForm(out, True)


def _root(n: int) -> int:
    return is_perfect_power(n).base


def _build_witness(s1: SolutionSet, s2: SolutionSet) -> FamilyWitness:
    """Reconstruct and fully re-verify the witness from the raw definition."""
    if s1.n_count != s2.n_count:
        raise ReductionError("family members must have equal solution counts")
    i1, i2 = s1.inst, s2.inst
    if _root(i1.a) != _root(i2.a) or _root(i1.b) != _root(i2.b):
        raise ReductionError("bases are not powers of a common integer")
    k = Fraction(i2.c, i1.c)
    pairing = []
    used = set()
    for i, (x, y) in enumerate(s1.pairs):
        matches = [
            j
            for j, (xx, yy) in enumerate(s2.pairs)
            if k * i1.r * i1.a**x == i2.r * i2.a**xx
            and k * i1.s * i1.b**y == i2.s * i2.b**yy
        ]
        if len(matches) != 1 or matches[0] in used:
            raise ReductionError("term pairing is not a bijection")
        used.add(matches[0])
        pairing.append((i, matches[0]))
    return FamilyWitness(k, tuple(pairing))


def same_family(s1: SolutionSet, s2: SolutionSet) -> FamilyWitness | None:
    """Witness of family membership, or None.

    Equality of reduced basic forms decides membership; the witness is then
    rebuilt from the raw definition as an independent guard.
    """
    if reduce_to_basic_form(s1).set != reduce_to_basic_form(s2).set:
        return None
    return _build_witness(s1, s2)


def family_key(sset: SolutionSet) -> str:
    """Canonical family identifier, shared across associates.

    The key is the lexicographically smaller serialization among the family's
    basic form and that basic form's associate (the associate of a basic form
    is itself basic).  The associate fold-in matches how every exception list
    is stated: "... or an associate of a subset".
    """
    basic = reduce_to_basic_form(sset).set
    return min(format_set(basic), format_set(associate(basic)))
