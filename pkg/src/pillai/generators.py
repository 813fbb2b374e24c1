"""Constructions realizing infinite families of three-solution sets.

Each family id names one display-style construction; ``generate`` builds the
set exactly as displayed (raw, non-reduced), verifies every listed solution
by substitution, counts solutions under enumeration caps, and records any
overlap with the exceptional-set catalog.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .catalog import match_catalog
from .equation import (
    DEFAULT_EXPONENT_CAP,
    Instance,
    determine_signs,
    enumerate_solutions,
)
from .families import SolutionSet, associate, family_key, reduce_to_basic_form

FAMILY_IDS = (57, 58, 84, 85, 86, 87, 88, 89)

_PARAM_NAMES = {
    57: ("a", "m", "u", "v"),
    58: ("m1",),
    84: ("a", "d", "k", "u", "v"),
    85: ("a", "d", "v"),
    86: ("g", "v"),
    87: ("g", "v"),
    88: ("a", "x", "sign"),
    89: ("a", "x2", "x3", "t", "w"),
}


class GeneratorParameterError(ValueError):
    """Parameters violate a family constraint or break integrality."""


@dataclass(frozen=True)
class GeneratedSet:
    family_id: int
    params: tuple[tuple[str, object], ...]
    set: SolutionSet
    verified_n: int
    overlap: str | None

    @property
    def params_dict(self) -> dict:
        return dict(self.params)


@dataclass(frozen=True)
class SweepResult:
    sets: tuple[GeneratedSet, ...]
    skipped: Counter


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise GeneratorParameterError(message)


def _exact_div(num: int, den: int, what: str) -> int:
    _require(den != 0 and num % den == 0, f"{what} = {num}/{den} is not an integer")
    return num // den


def _sign_bit(name: str, value: int) -> int:
    _require(value in (0, 1), f"{name} must be 0 or 1")
    return value


def _build_57(a: int, m: int, u: int, v: int):
    _require(isinstance(a, int) and a >= 2, "a must be an integer >= 2")
    _require(isinstance(m, int) and m >= 0, "m must be an integer >= 0")
    u, v = _sign_bit("u", u), _sign_bit("v", v)
    t_num = a**m + (-1) ** v
    t_den = a + (-1) ** u
    _require(t_num % t_den == 0, f"t = ({t_num})/({t_den}) is not an integer")
    t = t_num // t_den
    _require(t >= 1, f"t = {t} is not positive")
    b = t * a
    h = gcd(t * a + (-1) ** v, a + (-1) ** u)
    c = _exact_div(a * (t + (-1) ** (u + v + 1)), h, "c")
    _require(c > 0, f"c = {c} is not positive")
    r = _exact_div(t * a + (-1) ** v, h, "r")
    s = _exact_div(a + (-1) ** u, h, "s")
    return Instance(a, b, c, r, s), ((0, 0), (1, 1), (m + 1, 2))


def _build_58(m1: int):
    _require(isinstance(m1, int) and m1 >= -1 and m1 % 2 == 1, "m1 must be an odd integer >= -1")
    t = (Fraction(2) ** m1 + 1) / 3
    h1 = 3 if m1 % 6 == 5 else 1
    b4t = 4 * t
    _require(b4t.denominator == 1, f"b = 4t = {b4t} is not an integer")
    b = int(b4t)
    _require(b > 1, f"b = {b} must exceed 1")
    c_frac = (4 * t + 4) / h1
    r_frac = (4 * t + 1) / h1
    s_frac = Fraction(3, h1)
    for name, frac in (("c", c_frac), ("r", r_frac), ("s", s_frac)):
        _require(frac.denominator == 1 and frac > 0, f"{name} = {frac} is not a positive integer")
    return (
        Instance(2, b, int(c_frac), int(r_frac), int(s_frac)),
        ((0, 0), (2, 1), (m1 + 2, 2)),
    )


def _build_84(a: int, d: int, k, u: int, v: int):
    _require(isinstance(a, int) and a >= 2, "a must be an integer >= 2")
    _require(isinstance(d, int) and d >= 1, "d must be an integer >= 1")
    u, v = _sign_bit("u", u), _sign_bit("v", v)
    k = Fraction(k)
    _require(k > 0, "k must be positive")
    half_k = k.denominator == 2
    _require(k.denominator in (1, 2), "k must be an integer or half-integer")
    if half_k:
        _require(
            (a, d, u, v) == (2, 2, 1, 1),
            "half-integer k requires a = d = 2 and (u, v) = (1, 1)",
        )
    if u == 0:
        _require(int(k - v) % 2 == 1, "k - v must be odd when u = 0")
    if (u, v) == (1, 1) and not half_k:
        _require(a**d <= 3, "a**d must be at most 3 when (u, v) = (1, 1)")
    kd = k * d
    _require(kd.denominator == 1, f"k*d = {kd} is not an integer")
    kd = int(kd)
    b = _exact_div(a**kd + (-1) ** (u + v), a**d + (-1) ** u, "b")
    _require(b > 1, f"b = {b} must exceed 1")
    h = gcd(a**d + (-1) ** u, b + (-1) ** v)
    c = _exact_div(a**d * b + (-1) ** (u + v + 1), h, "c")
    _require(c > 0, f"c = {c} is not positive")
    r = _exact_div(b + (-1) ** v, h, "r")
    s = _exact_div(a**d + (-1) ** u, h, "s")
    _require(r > 0, f"r = {r} is not positive")
    return Instance(a, b, c, r, s), ((0, 1), (d, 0), (kd, 2))


def _build_85(a: int, d: int, v: int):
    _require(isinstance(a, int) and a >= 2, "a must be an integer >= 2")
    _require(isinstance(d, int) and d >= 1, "d must be an integer >= 1")
    v = _sign_bit("v", v)
    e = (-1) ** v
    big = a**d
    b = big + e
    _require(b > 1, f"b = {b} must exceed 1")
    h = gcd(big - e, b + e)
    c = _exact_div(2 * big + e, h, "c")
    r = _exact_div(big + 2 * e, h, "r")
    s = _exact_div(big - e, h, "s")
    _require(r > 0, f"r = {r} is not positive")
    _require(c > 0, f"c = {c} is not positive")
    return Instance(a, b, c, r, s), ((0, 0), (d, 1), (3 * d, 3))


# alpha rule for family 86, keyed on (g % 2, v): 0 when g - v is even,
# 1 when g is odd and v = 0, 2 when g is even and v = 1
_ALPHA_86 = {(0, 0): 0, (1, 1): 0, (1, 0): 1, (0, 1): 2}


def _alpha_86(g: int, v: int) -> int:
    return _ALPHA_86[g % 2, v]


def _build_86(g: int, v: int):
    _require(isinstance(g, int) and g >= 1, "g must be an integer >= 1")
    v = _sign_bit("v", v)
    e = (-1) ** v
    alpha = _alpha_86(g, v)
    denom = 2 ** (2 + v - alpha)
    b = _exact_div(3**g + e, 2, "b")
    _require(b > 1, f"b = {b} must exceed 1")
    c = _exact_div(3 ** (g + 1) + e, denom, "c")
    r = _exact_div(3 * (3 ** (g - 1) + e), denom, "r")
    _require(r > 0, f"r = {r} is not positive")
    s = 2 ** (1 - v + alpha)
    return Instance(3, b, c, r, s), ((0, 1), (1, 0), (2 * g, 3))


def _build_87(g: int, v: int):
    _require(isinstance(g, int) and g >= 1, "g must be an integer >= 1")
    v = _sign_bit("v", v)
    b = 2**g + (-1) ** v
    _require(b > 1, f"b = {b} must exceed 1")
    c = 2**g + (-1) ** (v + 1)
    _require(c > 0, f"c = {c} is not positive")
    return Instance(2, b, c, 2, 1), ((0, 1), (g - 1, 0), (g, 1))


def _build_88(a: int, x: int, sign: int):
    _require(isinstance(a, int) and a >= 2 and a % 2 == 0, "a must be an even integer >= 2")
    _require(isinstance(x, int) and x >= 1, "x must be an integer >= 1")
    _require(sign in (1, -1), "sign must be +1 or -1")
    p = a**x
    return Instance(a, 2 * p + sign, p + sign, 2, p - sign), ((0, 0), (x, 0), (2 * x, 1))


def _build_89(a: int, x2: int, x3: int, t: int, w: int):
    _require(isinstance(a, int) and a >= 2, "a must be an integer >= 2")
    _require(isinstance(x2, int) and x2 >= 1, "x2 must be an integer >= 1")
    _require(isinstance(x3, int) and x3 >= 1, "x3 must be an integer >= 1")
    t, w = _sign_bit("t", t), _sign_bit("w", w)
    m = 1 if a % 2 else 0
    s = _exact_div(a**x2 + (-1) ** (t + 1), 2**m, "s")
    _require(s > 0, f"s = {s} is not positive")
    _require(
        pow(a, x3, s) == (-1) ** w % s,
        f"a**x3 is not congruent to (-1)**{w} mod {s}",
    )
    c = _exact_div(a**x2 + (-1) ** t, 2**m, "c")
    _require(c > 0, f"c = {c} is not positive")
    r = 2 ** (1 - m)
    b = _exact_div(
        2 * a**x3 + (-1) ** (t + w + 1) * a**x2 + (-1) ** (w + 1),
        a**x2 + (-1) ** (t + 1),
        "b",
    )
    _require(b > 1, f"b = {b} must exceed 1")
    return Instance(a, b, c, r, s), ((0, 0), (x2, 0), (x3, 1))


_BUILDERS = {
    57: _build_57,
    58: _build_58,
    84: _build_84,
    85: _build_85,
    86: _build_86,
    87: _build_87,
    88: _build_88,
    89: _build_89,
}


def generate(
    family_id: int,
    *,
    caps: int = DEFAULT_EXPONENT_CAP,
    classify: bool = True,
    **params,
) -> GeneratedSet:
    """Construct, verify, and classify one generated three-solution set.

    Raises GeneratorParameterError naming the offending quantity when the
    parameters violate the family's constraints or break integrality.
    """
    if family_id not in _BUILDERS:
        raise ValueError(f"unknown family id {family_id}; choose from {FAMILY_IDS}")
    names = _PARAM_NAMES[family_id]
    unknown = set(params) - set(names)
    if unknown or set(names) - set(params):
        raise ValueError(f"family {family_id} takes parameters {names}")
    inst, pairs = _BUILDERS[family_id](**params)
    try:
        sset = SolutionSet(inst, pairs)
    except ValueError as exc:
        raise GeneratorParameterError(f"degenerate solution list: {exc}") from exc
    for x, y in pairs:
        assert determine_signs(inst, x, y) is not None, (
            f"family {family_id} construction bug: ({x},{y}) fails on {inst}"
        )
    if family_id in (57, 58):
        assert gcd(inst.a, inst.b) > 1
    else:
        _require(
            gcd(inst.r * inst.a, inst.s * inst.b) == 1,
            "gcd(r*a, s*b) != 1 after construction",
        )
    cap = max(caps, *(max(x, y) for x, y in pairs))
    enum = enumerate_solutions(inst, cap, cap)
    found = {(sol.x, sol.y) for sol in enum.solutions}
    assert set(pairs) <= found
    overlap = None
    if classify:
        hit = match_catalog(sset)
        overlap = hit.label if hit is not None else None
    return GeneratedSet(
        family_id,
        tuple((n, params[n]) for n in names),
        sset,
        len(enum.solutions),
        overlap,
    )


def default_sweep_ranges(family_id: int) -> dict[str, tuple]:
    """Desk-scale parameter ranges for each family's sweep."""
    bits = (0, 1)
    return {
        57: {"a": tuple(range(2, 7)), "m": tuple(range(0, 7)), "u": bits, "v": bits},
        58: {"m1": tuple(range(-1, 14, 2))},
        84: {
            "a": tuple(range(2, 7)),
            "d": (1, 2, 3),
            "k": (2, 3, 4, 5, Fraction(3, 2), Fraction(5, 2)),
            "u": bits,
            "v": bits,
        },
        85: {"a": tuple(range(2, 7)), "d": (1, 2, 3), "v": bits},
        86: {"g": tuple(range(1, 11)), "v": bits},
        87: {"g": tuple(range(1, 21)), "v": bits},
        88: {"a": (2, 4, 6, 8, 10), "x": (1, 2, 3, 4), "sign": (1, -1)},
        89: {
            "a": tuple(range(2, 9)),
            "x2": (1, 2, 3, 4),
            "x3": tuple(range(1, 9)),
            "t": bits,
            "w": bits,
        },
    }[family_id]


def sweep(family_id: int, ranges: dict | None = None, **kw) -> SweepResult:
    """Generate every valid parameter tuple in range, in deterministic order.

    Invalid tuples are skipped with their rejection reasons tallied.
    """
    if ranges is None:
        ranges = default_sweep_ranges(family_id)
    names = _PARAM_NAMES[family_id]
    missing = set(names) - set(ranges)
    if missing:
        raise ValueError(f"sweep ranges missing {sorted(missing)}")
    sets = []
    skipped: Counter = Counter()
    for combo in itertools.product(*(tuple(ranges[n]) for n in names)):
        try:
            sets.append(generate(family_id, **dict(zip(names, combo)), **kw))
        except GeneratorParameterError as exc:
            skipped[str(exc)] += 1
    return SweepResult(tuple(sets), skipped)


def _proposals(cand: SolutionSet):
    """Candidate (family_id, params) back-solved from a basic form.

    Patterns allow both bases of the displayed construction to have been
    perfect powers (stripped during reduction), which scales exponents; the
    x-side scale folds into free parameters while the y-side scale drops out
    entirely because proposals are confirmed by regeneration and family-key
    comparison.
    """
    pairs = set(cand.pairs)
    a = cand.inst.a
    bits = (0, 1)
    if (0, 0) in pairs and len(pairs) == 3:
        nz = sorted(pairs - {(0, 0)}, key=lambda p: (p[1], p[0]))
        (p, q), (x3, y3) = nz
        if p >= 1 and q >= 1 and y3 == 2 * q:
            if x3 % p == 0 and x3 >= p:
                for u, v in itertools.product(bits, bits):
                    yield 57, {"a": a**p, "m": x3 // p - 1, "u": u, "v": v}
            if a == 2 and p == 2 and (x3 - 2) % 2 == 1:
                yield 58, {"m1": x3 - 2}
        if p >= 1 and q >= 1 and x3 == 3 * p and y3 == 3 * q:
            for v in bits:
                yield 85, {"a": a, "d": p, "v": v}
        if q == 0 and p >= 1 and y3 >= 1:
            if x3 == 2 * p:
                for sign in (1, -1):
                    yield 88, {"a": a, "x": p, "sign": sign}
            for t, w in itertools.product(bits, bits):
                yield 89, {"a": a, "x2": p, "x3": x3, "t": t, "w": w}
        if a == 2 and len({s for s in pairs if s[0] == 0}) == 2:
            # pattern {(0,0),(0,q),(1,q)}: the g = 1 edge of family 87
            (x3, y3) = max(pairs)
            if x3 == 1 and pairs == {(0, 0), (0, y3), (1, y3)}:
                yield 87, {"g": 1, "v": 0}
    x_zero = [s for s in pairs if s[0] == 0]
    y_zero = [s for s in pairs if s[1] == 0]
    if (
        len(pairs) == 3
        and (0, 0) not in pairs
        and len(x_zero) == 1
        and len(y_zero) == 1
    ):
        (_, q) = x_zero[0]
        (d, _) = y_zero[0]
        third = next(iter(pairs - {x_zero[0], y_zero[0]}))
        x3, y3 = third
        if d >= 1 and q >= 1 and y3 == 2 * q and x3 >= 1:
            k = Fraction(x3, d)
            if k.denominator <= 2:
                for u, v in itertools.product(bits, bits):
                    yield 84, {"a": a, "d": d, "k": k, "u": u, "v": v}
        if a == 3 and d == 1 and y3 == 3 * q and x3 % 2 == 0 and x3 >= 2:
            for v in bits:
                yield 86, {"g": x3 // 2, "v": v}
        if a == 2 and y3 == q and d == x3 - 1:
            for v in bits:
                yield 87, {"g": x3, "v": v}


def classify_generator_family(sset: SolutionSet) -> int | None:
    """The family id whose construction covers this three-solution set, if any.

    Back-solves candidate parameters from the basic form (and its associate),
    then confirms each proposal by regenerating and comparing family keys.
    """
    if sset.n_count != 3:
        return None
    key = family_key(sset)
    basic = reduce_to_basic_form(sset).set
    for cand in (basic, associate(basic)):
        for fid, params in sorted(_proposals(cand), key=lambda t: t[0]):
            try:
                gen = generate(fid, classify=False, **params)
            except GeneratorParameterError:
                continue
            if family_key(gen.set) == key:
                return fid
    return None
