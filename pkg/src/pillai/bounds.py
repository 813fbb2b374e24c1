"""Quantitative bound machinery.

Covers the sigma divisibility index over the prime factors of a, the paired
structural inequality checkers for solution quadruples and pairs, crossing
point solvers for the transcendental linear-form bounds, and the documented
numeric caps those crossings reproduce.

All real-valued work runs in mpmath software floats at a caller-chosen
precision (default 60 significant digits); machine doubles are never used
because the K * log^3 terms near 1e15 need controlled rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterable

from mpmath import mp, mpf

from .equation import Instance
from .families import SolutionSet
from .intmath import padic_valuation, pm1_index, prime_factors

# Linear-form-in-logarithms constants, used as given.
K_LINEAR_FORM = 16901816335  # 1.6901816335e10, exactly an integer
RS_ONE_CAP = "2409.08"
MIGNOTTE_COEFF = "22.997"
MIGNOTTE_SHIFT = "2.405"

# Documented caps the crossing points must stay below.
CASE1_CAP = "7.4e14"
CASE2_CAP = "7.9e14"
PRIMARY_CAP = "2e15"
SECONDARY_CAP = "8e14"

DEFAULT_DPS = 60


class NumericError(RuntimeError):
    """A crossing-point solve failed to bracket or converge."""


@dataclass(frozen=True)
class PrimeIndexRow:
    p: int
    n: int
    g: int
    sign: int


@dataclass(frozen=True)
class SigmaBreakdown:
    """Per-prime rows (p, n, g, sign) over the primes of a, and
    sigma = sum g * log(p) / log(a)."""

    a: int
    b: int
    rows: tuple[PrimeIndexRow, ...]
    sigma: mpf

    def weight(self) -> int:
        """The exact integer prod(p**g); sigma = log(weight)/log(a)."""
        out = 1
        for row in self.rows:
            out *= row.p**row.g
        return out


@dataclass(frozen=True)
class DivisibilityReport:
    a: int
    b: int
    cases: int
    violations: tuple[tuple[int, int, int], ...]  # (x, y, sign)

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    applicable: bool
    passed: bool | None
    reason: str


@dataclass(frozen=True)
class Crossing:
    name: str
    z_star: mpf


@dataclass(frozen=True)
class BoundReport:
    name: str
    branch: str
    inputs: tuple[tuple[str, object], ...]
    constants: tuple[tuple[str, str], ...]
    crossings: tuple[Crossing, ...]
    z_star: mpf
    cap: mpf | None
    within_cap: bool | None


def sigma(a: int, b: int, dps: int = DEFAULT_DPS) -> SigmaBreakdown:
    """The divisibility index sigma of the pair (a, b), gcd(a, b) = 1.

    For each prime p of a, n is the least exponent with b**n = +-1 (mod p)
    and p**g exactly divides b**n + sign with the sign maximizing g.  Then
    a**x | b**y +- 1 forces p**(x*alpha_p - g_p) | y for every p, i.e.
    a**x divides a**sigma * y multiplicatively.
    """
    if a <= 1 or b <= 1:
        raise ValueError("sigma requires a > 1 and b > 1")
    if gcd(a, b) != 1:
        raise ValueError("sigma requires gcd(a, b) = 1")
    rows = []
    for p, _ in prime_factors(a):
        idx = pm1_index(b, p)
        rows.append(PrimeIndexRow(p, idx.n, idx.g, idx.sign))
    with mp.workdps(dps):
        value = mp.fsum(row.g * mp.log(row.p) / mp.log(a) for row in rows)
    return SigmaBreakdown(a, b, tuple(rows), value)


def check_lemma17(
    a: int,
    b: int,
    x_range: Iterable[int],
    y_range: Iterable[int],
) -> DivisibilityReport:
    """Exhaustively confirm the sigma divisibility law on a finite window.

    For every (x, y) in range with a**x | b**y + sign, checks that
    p**max(x*alpha_p - g_p, 0) divides y for each prime p of a.  Violations
    are findings, not errors.
    """
    if gcd(a, b) != 1:
        raise ValueError("requires gcd(a, b) = 1")
    breakdown = sigma(a, b)
    data = {
        row.p: (padic_valuation(row.p, a), row.g) for row in breakdown.rows
    }
    cases = 0
    violations = []
    ys = [y for y in y_range if y >= 1]
    for x in x_range:
        if x < 1:
            continue
        modulus = a**x
        for y in ys:
            by = pow(b, y, modulus)
            for sign in (1, -1):
                if (by + sign) % modulus == 0:
                    cases += 1
                    ok = all(
                        y % p ** max(x * alpha - g, 0) == 0
                        for p, (alpha, g) in data.items()
                    )
                    if not ok:
                        violations.append((x, y, sign))
    return DivisibilityReport(a, b, cases, tuple(violations))


def check_lemma18(a: int, b: int) -> bool:
    """sigma < a*log(b) / (2*log(a)), with (3, 2) the lone exception
    (there sigma = 1 exactly).  Decided by exact integer comparison:
    the inequality is weight**2 < b**a for weight = prod(p**g)."""
    if a <= 2:
        raise ValueError("requires a > 2")
    if (a, b) == (3, 2):
        return True
    return sigma(a, b).weight() ** 2 < b**a


def check_lemma13(sset: SolutionSet) -> LemmaCheck:
    """Quadruple inequalities: with Z = max(x4, y1..y4),
    a**(x3-x2) <= Z, s <= Z + 1, and x2 * a**(x3-x2) <= Z when a > b.

    Applicable to four-solution sets with strictly increasing x and
    gcd(r*a, s*b) = 1.
    """
    name = "lemma13"
    if sset.n_count != 4:
        return LemmaCheck(name, False, None, "needs exactly four solutions")
    inst = sset.inst
    if gcd(inst.r * inst.a, inst.s * inst.b) != 1:
        return LemmaCheck(name, False, None, "gcd(r*a, s*b) != 1")
    xs = [x for x, _ in sset.pairs]
    ys = [y for _, y in sset.pairs]
    if any(xs[i] >= xs[i + 1] for i in range(3)):
        return LemmaCheck(name, False, None, "x values not strictly increasing")
    z = max(xs[3], *ys)
    gap = inst.a ** (xs[2] - xs[1])
    ok = gap <= z and inst.s <= z + 1
    if inst.a > inst.b:
        ok = ok and xs[1] * gap <= z
    return LemmaCheck(name, True, ok, "" if ok else f"failed with Z={z}")


def check_lemma14(inst: Instance, s1, s2) -> LemmaCheck:
    """Pair inequality: r*a**x2 > c/2 when r > 1 or x1 > 0, and
    a**x2 > (c - 2)/2 when r = 1 and x1 = 0.  Needs x1 < x2 and
    gcd(r*a, s*b) = 1."""
    name = "lemma14"
    if gcd(inst.r * inst.a, inst.s * inst.b) != 1:
        return LemmaCheck(name, False, None, "gcd(r*a, s*b) != 1")
    x1, x2 = s1[0], s2[0]
    if x1 >= x2:
        return LemmaCheck(name, False, None, "needs x1 < x2")
    if inst.r > 1 or x1 > 0:
        ok = 2 * inst.r * inst.a**x2 > inst.c
        branch = "r*a**x2 > c/2"
    else:
        ok = 2 * inst.a**x2 > inst.c - 2
        branch = "a**x2 > (c-2)/2"
    return LemmaCheck(name, True, ok, branch)


def _solve_crossing(
    rhs: Callable[[mpf], mpf],
    lo: mpf,
    hi: mpf,
    rel_tol: mpf,
) -> mpf:
    """Largest Z with Z < rhs(Z): bisection on f(Z) = rhs(Z) - Z.

    Requires f(lo) > 0 and f(hi) < 0; the log-growth right sides cross the
    identity exactly once on any such bracket.
    """
    f_lo = rhs(lo) - lo
    f_hi = rhs(hi) - hi
    if f_lo <= 0:
        raise NumericError(f"no positive margin at bracket start {lo}")
    if f_hi >= 0:
        raise NumericError(f"no crossing below bracket end {hi}")
    while (hi - lo) / lo > rel_tol:
        mid = (lo + hi) / 2
        if rhs(mid) - mid > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def lemma15_bound(
    r: int,
    s: int,
    a: int,
    b: int,
    c: int,
    d: int,
    dps: int = DEFAULT_DPS,
) -> BoundReport:
    """Crossing points of the two linear-form inequalities in Z = max(x, y).

    d is the caller-supplied min(r*a**x, s*b**y) or a proven lower bound for
    it; this function never guesses it.  When r*s = 1 the alternative branch
    Z < 2409.08 * log(max(a, b)) is reported as well, and the binding bound
    becomes max of the quadratic-log crossing and that alternative.
    """
    if min(r, s, a, b, c, d) < 1 or a < 2 or b < 2:
        raise ValueError("inputs must be positive with a, b > 1")
    j_big = max(a, b)
    with mp.workdps(dps):
        k_const = mpf(K_LINEAR_FORM)
        base = (mp.log(1 + mpf(c) / d) + mp.log(c)) / mp.log(2)
        log_j = mp.log(j_big)
        coeff = mp.log(max(r, s))
        shift = mpf(MIGNOTTE_SHIFT)
        quad = mpf(MIGNOTTE_COEFF)

        def rhs61(z):
            return base + k_const * coeff * log_j * mp.log(1.5 * mp.e * z)

        def rhs62(z):
            return base + quad * (mp.log(z / mp.log(2)) + shift) ** 2 * log_j

        rel_tol = mpf(10) ** (-(min(dps, 30) - 5))
        lo, hi = mpf(2), mpf("1e25")
        crossings = []
        if max(r, s) > 1:
            crossings.append(Crossing("ineq-61", _solve_crossing(rhs61, lo, hi, rel_tol)))
        else:
            # the product term vanishes; the inequality caps Z at the constant
            crossings.append(Crossing("ineq-61", base))
        crossings.append(Crossing("ineq-62", _solve_crossing(rhs62, lo, hi, rel_tol)))
        if r * s == 1:
            crossings.append(Crossing("rs1-alternative", mpf(RS_ONE_CAP) * log_j))
            applicable = [cr for cr in crossings if cr.name != "ineq-61"]
        else:
            applicable = crossings
        binding = max(applicable, key=lambda cr: cr.z_star)
    return BoundReport(
        name="lemma15",
        branch=binding.name,
        inputs=(("r", r), ("s", s), ("a", a), ("b", b), ("c", c), ("d", d)),
        constants=(
            ("K", str(K_LINEAR_FORM)),
            ("quad-coeff", MIGNOTTE_COEFF),
            ("quad-shift", MIGNOTTE_SHIFT),
            ("rs1-cap", RS_ONE_CAP),
        ),
        crossings=tuple(crossings),
        z_star=binding.z_star,
        cap=None,
        within_cap=None,
    )


def _fixed_point_report(
    name: str,
    crossings: list[Crossing],
    cap: str,
    constants: tuple[tuple[str, str], ...],
) -> BoundReport:
    binding = max(crossings, key=lambda cr: cr.z_star)
    cap_val = mpf(cap)
    return BoundReport(
        name=name,
        branch=binding.name,
        inputs=(),
        constants=constants,
        crossings=tuple(crossings),
        z_star=binding.z_star,
        cap=cap_val,
        within_cap=binding.z_star < cap_val,
    )


def theorem2_fixed_points(dps: int = DEFAULT_DPS) -> list[BoundReport]:
    """Solve the four transcendental bound inequalities for their largest
    satisfying Z.

    Case 1 substitutes the derived envelope c <= Z + 3, max(r, s) <= Z + 1,
    max(a, b) <= (8/3) Z + 5/3 into both linear-form inequalities; its
    crossing must stay below 7.4e14.  Case 2 substitutes
    log(c) <= 1e11 * log(Z + 1); its crossing must stay below 7.9e14.  The
    remaining two are the large-c fallbacks 0.47 Z < 1 + K log^3(...) and
    Z < 143 + 1.443 log Z + K log^3(...), reproduced against the overall
    2e15 / 8e14 caps.
    """
    with mp.workdps(dps):
        k_const = mpf(K_LINEAR_FORM)
        quad = mpf(MIGNOTTE_COEFF)
        shift = mpf(MIGNOTTE_SHIFT)
        ln2 = mp.log(2)
        rel_tol = mpf(10) ** (-(min(dps, 30) - 5))
        lo, hi = mpf(100), mpf("1e18")

        def log_cube(z):
            return mp.log(z + 1) * mp.log(z) * mp.log(1.5 * mp.e * z)

        def case1_61(z):
            return 2 * mp.log(z + 3) / ln2 + k_const * mp.log(z + 1) * mp.log(
                mpf(8) / 3 * z + mpf(5) / 3
            ) * mp.log(1.5 * mp.e * z)

        def case1_62(z):
            return 2 * mp.log(z + 3) / ln2 + quad * (
                mp.log(z / ln2) + shift
            ) ** 2 * mp.log(mpf(8) / 3 * z + mpf(5) / 3)

        def case2(z):
            return mpf("0.9") + mpf("1e11") * mp.log(z + 1) / ln2 + k_const * log_cube(z)

        def large_c_81(z):
            return (1 + k_const * log_cube(z)) / mpf("0.47")

        def large_c_83(z):
            return 143 + mpf("1.443") * mp.log(z) + k_const * log_cube(z)

        consts = (
            ("K", str(K_LINEAR_FORM)),
            ("quad-coeff", MIGNOTTE_COEFF),
            ("quad-shift", MIGNOTTE_SHIFT),
        )
        reports = [
            _fixed_point_report(
                "t2-case1",
                [
                    Crossing("ineq-61", _solve_crossing(case1_61, lo, hi, rel_tol)),
                    Crossing("ineq-62", _solve_crossing(case1_62, lo, hi, rel_tol)),
                ],
                CASE1_CAP,
                consts,
            ),
            _fixed_point_report(
                "t2-case2",
                [Crossing("ineq-76a", _solve_crossing(case2, lo, hi, rel_tol))],
                CASE2_CAP,
                consts + (("log-c-envelope", "1e11"),),
            ),
            _fixed_point_report(
                "t2-81",
                [Crossing("ineq-81", _solve_crossing(large_c_81, lo, hi, rel_tol))],
                PRIMARY_CAP,
                consts + (("slope", "0.47"),),
            ),
            _fixed_point_report(
                "t2-83",
                [Crossing("ineq-83", _solve_crossing(large_c_83, lo, hi, rel_tol))],
                SECONDARY_CAP,
                consts + (("offset", "143"), ("log-coeff", "1.443")),
            ),
        ]
    return reports


def lemma19_threshold(a: int, dps: int = DEFAULT_DPS) -> mpf:
    """The additive exponent margin k with x1 < sigma + k:
    (8.1 + log log a) / log a below a = 5346, and 1.19408 from there on."""
    if a <= 2:
        raise ValueError("requires a > 2")
    with mp.workdps(dps):
        if a < 5346:
            return (mpf("8.1") + mp.log(mp.log(a))) / mp.log(a)
        return mpf("1.19408")


def theorem2_secondary_expression(a: int, b: int, c: int) -> int:
    """min(max(a, b), max(b, c), max(a, c)) — the quantity the secondary
    8e14 cap constrains.  Evaluated only; the theorem-level claim is not
    independently checkable at desk scale."""
    return min(max(a, b), max(b, c), max(a, c))
