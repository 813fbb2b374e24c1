"""Instances and solutions of (-1)**u * r * a**x + (-1)**v * s * b**y = c.

Solutions are pairs of nonnegative exponents (x, y) together with the sign
bits (u, v); the sign bits are always uniquely determined by (x, y), so most
of the package passes bare (x, y) pairs around.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .intmath import padic_valuation, prime_factors

# Exponent/coefficient region outside which no instance with coprime r*a and
# s*b can have more than three solutions: max(a, b, r, s, x, y) < 2e15, and in
# the sharper secondary form max(r, s, x, y) < 8e14.  These justify treating
# enumeration caps as a user knob; they are far too large to be defaults.
THEOREM2_EXPONENT_BOUND = 2 * 10**15
THEOREM2_SECONDARY_BOUND = 8 * 10**14

DEFAULT_EXPONENT_CAP = 64


@dataclass(frozen=True)
class Instance:
    """Coefficient tuple (a, b, c, r, s) with a, b > 1 and c, r, s > 0."""

    a: int
    b: int
    c: int
    r: int
    s: int

    def __post_init__(self) -> None:
        if self.a <= 1 or self.b <= 1:
            raise ValueError("bases a, b must exceed 1")
        if self.c <= 0:
            raise ValueError("c must be positive")
        if self.r <= 0 or self.s <= 0:
            raise ValueError("coefficients r, s must be positive")


class Solution(NamedTuple):
    x: int
    y: int
    u: int
    v: int


@dataclass(frozen=True)
class Enumeration:
    """All solutions with x <= x_cap and y <= y_cap, sorted by (x, y).

    ``complete`` is True only when no solution can exist beyond the caps:
    either the caps reach the two-term exponent bound, or a common prime
    factor of a and b certifies min(x, y) <= t with t inside both caps and
    both certification sweeps stayed inside the caps.
    """

    solutions: tuple[Solution, ...]
    complete: bool


@dataclass(frozen=True)
class PairRelation:
    """The identity tying two solutions of one instance together:

    r * a**xmin * (a**t_diff + (-1)**gamma)
        = s * b**ymin * (b**w_diff + (-1)**delta) = common_value > 0.
    """

    gamma: int
    delta: int
    common_value: int
    xmin: int
    ymin: int
    t_diff: int
    w_diff: int


def determine_signs(inst: Instance, x: int, y: int) -> tuple[int, int] | None:
    """The unique (u, v) making (x, y) a solution, or None.

    Uniqueness holds because c > 0: two distinct sign pairs would force one
    of r*a**x, s*b**y, or c to vanish.
    """
    if x < 0 or y < 0:
        raise ValueError("exponents must be nonnegative")
    p = inst.r * inst.a**x
    q = inst.s * inst.b**y
    hits = [
        (u, v)
        for u in (0, 1)
        for v in (0, 1)
        if (-1) ** u * p + (-1) ** v * q == inst.c
    ]
    if not hits:
        return None
    if len(hits) > 1:
        raise AssertionError(f"sign pair for ({x},{y}) is not unique on {inst}")
    return hits[0]


def gcd_exponent_cap(inst: Instance) -> int | None:
    """Cap on min(x, y) forced by a common prime factor of a and b.

    If p divides both bases and p**t exactly divides c, any solution has
    min(x, y) <= t; the returned cap is the max of t over common primes.
    None when gcd(a, b) = 1.
    """
    g = gcd(inst.a, inst.b)
    if g == 1:
        return None
    return max(padic_valuation(p, inst.c) for p, _ in prime_factors(g))


def _y_for_value(inst: Instance, value: int) -> int | None:
    """Exact y with s * b**y == value, else None."""
    if value <= 0 or value % inst.s:
        return None
    q, y = value // inst.s, 0
    while q > 1 and q % inst.b == 0:
        q //= inst.b
        y += 1
    return y if q == 1 else None


def _x_for_value(inst: Instance, value: int) -> int | None:
    """Exact x with r * a**x == value, else None."""
    if value <= 0 or value % inst.r:
        return None
    q, x = value // inst.r, 0
    while q > 1 and q % inst.a == 0:
        q //= inst.a
        x += 1
    return x if q == 1 else None


def _probe_x(inst: Instance, x: int) -> list[Solution]:
    """All solutions with this x, by exact inversion of the three candidates
    c - r*a**x (signs 0,0), r*a**x - c (0,1), and c + r*a**x (1,0)."""
    p = inst.r * inst.a**x
    out = []
    for value, (u, v) in ((inst.c - p, (0, 0)), (p - inst.c, (0, 1)), (inst.c + p, (1, 0))):
        y = _y_for_value(inst, value)
        if y is not None:
            out.append(Solution(x, y, u, v))
    return out


def _probe_y(inst: Instance, y: int) -> list[Solution]:
    q = inst.s * inst.b**y
    out = []
    for value, (u, v) in ((inst.c - q, (0, 0)), (inst.c + q, (0, 1)), (q - inst.c, (1, 0))):
        x = _x_for_value(inst, value)
        if x is not None:
            out.append(Solution(x, y, u, v))
    return out


def enumerate_solutions(
    inst: Instance,
    x_cap: int = DEFAULT_EXPONENT_CAP,
    y_cap: int = DEFAULT_EXPONENT_CAP,
) -> Enumeration:
    """Every solution with x <= x_cap and y <= y_cap, sorted ascending.

    When gcd(a, b) > 1 and the min(x, y) cap t fits inside both caps, the
    x-sweep over [0, t] plus the mirrored y-sweep provably see every solution
    of the instance, so completeness can be certified; solutions falling
    outside the caps flip the flag instead of being dropped silently.
    """
    if x_cap < 1 or y_cap < 1:
        raise ValueError("caps must be >= 1")
    found: dict[tuple[int, int], Solution] = {}
    beyond = False
    t = gcd_exponent_cap(inst)
    if t is not None and t <= x_cap and t <= y_cap:
        for x in range(t + 1):
            for sol in _probe_x(inst, x):
                if sol.y <= y_cap:
                    found[sol.x, sol.y] = sol
                else:
                    beyond = True
        for y in range(t + 1):
            for sol in _probe_y(inst, y):
                if sol.x <= x_cap:
                    found[sol.x, sol.y] = sol
                else:
                    beyond = True
        complete = not beyond
    else:
        for x in range(x_cap + 1):
            for sol in _probe_x(inst, x):
                if sol.y <= y_cap:
                    found[sol.x, sol.y] = sol
        complete = min(x_cap, y_cap) >= THEOREM2_EXPONENT_BOUND
    sols = tuple(sorted(found.values()))
    for sol in sols:
        assert determine_signs(inst, sol.x, sol.y) == (sol.u, sol.v)
    return Enumeration(sols, complete)


def pair_relation(inst: Instance, s1, s2) -> PairRelation:
    """gamma, delta and the common positive value relating two solutions.

    Accepts Solution tuples or bare (x, y) pairs; both must solve inst.
    """
    x1, y1 = s1[0], s1[1]
    x2, y2 = s2[0], s2[1]
    if (x1, y1) == (x2, y2):
        raise ValueError("pair_relation requires two distinct solutions")
    for x, y in ((x1, y1), (x2, y2)):
        if determine_signs(inst, x, y) is None:
            raise ValueError(f"({x},{y}) does not solve {inst}")
    xmin, t = min(x1, x2), abs(x2 - x1)
    ymin, w = min(y1, y2), abs(y2 - y1)
    left_base = inst.r * inst.a**xmin
    right_base = inst.s * inst.b**ymin
    for gamma in (0, 1):
        left = left_base * (inst.a**t + (-1) ** gamma)
        if left <= 0:
            continue
        for delta in (0, 1):
            if left == right_base * (inst.b**w + (-1) ** delta):
                return PairRelation(gamma, delta, left, xmin, ymin, t, w)
    raise AssertionError(f"pair identity failed for {inst}: ({x1},{y1}),({x2},{y2})")
