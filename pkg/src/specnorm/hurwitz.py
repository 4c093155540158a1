"""Admissibility of bilinear norm-multiplicative triples and ratio queries.

A triple [l, m, n] is admissible when a bilinear map R^l x R^m -> R^n exists
with ||f(x, y)|| = ||x|| ||y||; such maps are exactly what realize the trivial
best rank-one approximation ratio on l x m x n tensors.  Three exact or
tabulated sources decide queries: the Hurwitz-Radon function for square
triples, the minimal-n table for l <= 9 (a sharp recursion), and tabulated
upper bounds for 10 <= l <= m <= 16.  Everything else is reported Unknown
rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod, sqrt

__all__ = [
    "Admissibility",
    "AppRatio",
    "ADMISSIBLE",
    "NOT_ADMISSIBLE",
    "UNKNOWN",
    "EXACT",
    "BRACKET",
    "LOWER_BOUND_ONLY",
    "hurwitz_radon",
    "l_star_m",
    "yiu_upper",
    "is_admissible",
    "naive_lower_bound",
    "app_ratio",
    "catalog_tables",
]

ADMISSIBLE = "Admissible"
NOT_ADMISSIBLE = "NotAdmissible"
UNKNOWN = "Unknown"

EXACT = "Exact"
BRACKET = "Bracket"
LOWER_BOUND_ONLY = "LowerBoundOnly"


@dataclass(frozen=True)
class Admissibility:
    """Verdict for a sorted triple, with the rule that decided it."""

    triple: tuple[int, int, int]
    verdict: str
    reason: str


@dataclass(frozen=True)
class AppRatio:
    """What is known about the best rank-one approximation ratio of a shape.

    kind is Exact (lower == upper), Bracket (both finite, lower < upper), or
    LowerBoundOnly (upper is None; strict means the true ratio is known to
    exceed the stated lower value).
    """

    kind: str
    field: str
    lower: float
    upper: float | None
    strict: bool
    source: str


def hurwitz_radon(n: int) -> int:
    """Largest l with [l, n, n] admissible: 2^beta + 8*alpha for the 2-adic part."""
    n = int(n)
    if n < 1:
        raise ValueError("n must be positive")
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    alpha, beta = divmod(e, 4)
    return 2**beta + 8 * alpha


@lru_cache(maxsize=None)
def l_star_m(l: int, m: int) -> int:
    """Minimal n making [l, m, n] admissible, for l <= 9 and m >= l.

    Sharp recursion on the halved pair: doubling is lossless except in the
    boundary case where both arguments are odd and the halved value is already
    extremal, which saves exactly one dimension.
    """
    l, m = int(l), int(m)
    if not 1 <= l <= 9:
        raise ValueError("the exact table covers 1 <= l <= 9")
    if m < l:
        raise ValueError("need m >= l; sort the pair first")
    if l == 1:
        return m
    half = l_star_m((l + 1) // 2, (m + 1) // 2)
    if l % 2 == 1 and m % 2 == 1 and half == (l + 1) // 2 + (m + 1) // 2 - 1:
        return 2 * half - 1
    return 2 * half


# Upper bounds on the minimal admissible n for 10 <= l <= m <= 16; these are
# constructions, not known to be sharp, so they never prove non-admissibility.
_YIU = {
    10: (16, 26, 26, 27, 27, 28, 28),
    11: (26, 26, 28, 28, 30, 30),
    12: (26, 28, 30, 32, 32),
    13: (28, 32, 32, 32),
    14: (32, 32, 32),
    15: (32, 32),
    16: (32,),
}


def yiu_upper(l: int, m: int) -> int:
    """Tabulated admissible n for 10 <= l <= m <= 16."""
    l, m = int(l), int(m)
    if not (10 <= l <= m <= 16):
        raise ValueError("the tabulated range is 10 <= l <= m <= 16")
    return _YIU[l][m - l]


def _min_radon_block(l: int, m: int) -> int:
    """Smallest n0 >= m with hurwitz_radon(n0) >= l (a power-of-two multiple)."""
    e = 0
    while 2 ** (e % 4) + 8 * (e // 4) < l:
        e += 1
    block = 2**e
    return block * ((m + block - 1) // block)


def is_admissible(l: int, m: int, n: int) -> Admissibility:
    """Three-valued admissibility verdict for [l, m, n] (sorted internally).

    Admissible and NotAdmissible are only reported when a listed source
    proves them; everything else is Unknown with reason out_of_table.
    """
    triple = tuple(sorted(int(v) for v in (l, m, n)))
    if triple[0] < 1:
        raise ValueError("dimensions must be positive")
    l, m, n = triple

    if n >= l * m:
        return Admissibility(triple, ADMISSIBLE, "trivial_tall")
    if l <= 9:
        need = l_star_m(l, m)
        verdict = ADMISSIBLE if n >= need else NOT_ADMISSIBLE
        return Admissibility(triple, verdict, "l_star_table")
    if m <= 16 and n >= yiu_upper(l, m):
        return Admissibility(triple, ADMISSIBLE, "yiu_table")
    n0 = _min_radon_block(l, m)
    if n >= n0:
        # [l, n0, n0] is admissible by Hurwitz-Radon; shrink m, grow n
        reason = "hurwitz_radon" if (m, n) == (n0, n0) else "monotonicity"
        return Admissibility(triple, ADMISSIBLE, reason)
    if m == n and l > hurwitz_radon(n):
        return Admissibility(triple, NOT_ADMISSIBLE, "hurwitz_radon")
    return Admissibility(triple, UNKNOWN, "out_of_table")


def naive_lower_bound(dims) -> float:
    """Trivial ratio floor 1/sqrt(min_nu prod_{mu != nu} n_mu)."""
    dims = tuple(int(n) for n in dims)
    if len(dims) < 1 or any(n < 1 for n in dims):
        raise ValueError("dims must be positive")
    total = prod(dims)
    return 1.0 / sqrt(min(total // n for n in dims))


def _exact(field: str, value: float, source: str) -> AppRatio:
    return AppRatio(EXACT, field, value, value, strict=False, source=source)


def _lower_only(field: str, value: float, strict: bool, source: str) -> AppRatio:
    return AppRatio(LOWER_BOUND_ONLY, field, value, None, strict=strict, source=source)


# Known exact real third-order values that the admissibility route does not
# force by itself; entries duplicated by that route agree with it.
_REAL_CATALOG = {
    (2, 3, 3): (1.0 / sqrt(5.0), "two_slice_odd"),
    (2, 3, 4): (1.0 / sqrt(6.0), "catalog"),
    (2, 4, 4): (1.0 / sqrt(8.0), "catalog"),
    (3, 3, 4): (1.0 / 3.0, "catalog"),
    (3, 4, 4): (1.0 / sqrt(12.0), "catalog"),
}

_COMPLEX_CATALOG = {
    (2, 2, 2): (2.0 / 3.0, "complex_catalog"),
    (2, 2, 2, 2): (sqrt(2.0) / 3.0, "complex_catalog"),
}

_CUBIC_BRACKET_333 = (1.0 / sqrt(7.36), 1.0 / sqrt(7.0))


def app_ratio(field: str, dims) -> AppRatio:
    """Best known statement about the approximation ratio of the shape.

    Sorted dims; field is "real" or "complex".  Values are exact where a
    catalog or an admissibility proof pins them, brackets where only a band
    is known, and otherwise the trivial floor with a strictness flag when
    non-attainment is proven.
    """
    field = field.strip().lower()
    if field not in ("real", "complex"):
        raise ValueError('field must be "real" or "complex"')
    dims = tuple(sorted(int(n) for n in dims))
    if len(dims) < 2 or any(n < 1 for n in dims):
        raise ValueError("need at least two positive dimensions")
    naive = naive_lower_bound(dims)
    d = len(dims)

    if d == 2:
        return _exact(field, 1.0 / sqrt(dims[0]), "matrix")

    if field == "complex":
        if dims in _COMPLEX_CATALOG:
            value, tag = _COMPLEX_CATALOG[dims]
            return _exact(field, value, tag)
        if prod(dims[:-1]) <= dims[-1]:
            return _exact(field, naive, "tall")
        if dims[-3] * dims[-2] > dims[-1]:
            return _lower_only(field, naive, strict=True, source="complex_nonexistence")
        return _lower_only(field, naive, strict=False, source="open")

    # real field
    if dims == (3, 3, 3):
        lo, hi = _CUBIC_BRACKET_333
        return AppRatio(BRACKET, field, lo, hi, strict=False, source="cubic_band")
    if dims in _REAL_CATALOG:
        value, tag = _REAL_CATALOG[dims]
        return _exact(field, value, tag)
    if d == 3 and dims[0] == 2 and dims[1] == dims[2] and dims[1] % 2 == 1:
        return _exact(field, 1.0 / sqrt(2.0 * dims[1] - 1.0), "two_slice_odd")
    if prod(dims[:-1]) <= dims[-1]:
        return _exact(field, naive, "tall")
    if dims[-1] in (1, 2, 4, 8):
        return _exact(field, naive, "composition_small_dims")
    if len(set(dims)) == 1:
        # cubic, side not a composition algebra dimension: not attained
        return _lower_only(field, naive, strict=True, source="cubic")
    if d == 3:
        verdict = is_admissible(*dims)
        if verdict.verdict == ADMISSIBLE:
            return _exact(field, naive, "hurwitz_admissible")
        if verdict.verdict == NOT_ADMISSIBLE:
            return _lower_only(field, naive, strict=True, source="hurwitz_not_admissible")
        return _lower_only(field, naive, strict=False, source="open")
    return _lower_only(field, naive, strict=False, source="open")


def catalog_tables() -> dict:
    """All tabulated data as plain JSON-ready structures."""
    l_star = {
        f"{l}x{m}": l_star_m(l, m) for l in range(1, 10) for m in range(l, 17)
    }
    yiu = {f"{l}x{m}": yiu_upper(l, m) for l in range(10, 17) for m in range(l, 17)}
    radon = {str(n): hurwitz_radon(n) for n in range(1, 33)}
    ratios = [
        {"field": "real", "dims": list(k), "value": v, "source": tag}
        for k, (v, tag) in sorted(_REAL_CATALOG.items())
    ]
    ratios.append(
        {
            "field": "real",
            "dims": [3, 3, 3],
            "lower": _CUBIC_BRACKET_333[0],
            "upper": _CUBIC_BRACKET_333[1],
            "source": "cubic_band",
        }
    )
    ratios.extend(
        {"field": "complex", "dims": list(k), "value": v, "source": tag}
        for k, (v, tag) in sorted(_COMPLEX_CATALOG.items())
    )
    return {"l_star": l_star, "yiu_upper": yiu, "hurwitz_radon": radon, "app_catalog": ratios}
