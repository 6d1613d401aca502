"""The extremal families and graphs, plus their closed-form sizes."""
from __future__ import annotations

import warnings
from math import comb

from .core import Family, all_k_subsets, prefix_mask
from .errors import GroundSetMismatchError, InvalidParametersError


class BelowThresholdWarning(UserWarning):
    """Parameters below n >= 2s + 2, where the extremal bound is stated."""


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise InvalidParametersError(f"constraint violated: {what}")


def _soft_threshold(n: int, s: int) -> bool:
    _require(s >= 2, f"s >= 2 (got s={s})")
    if n < 2 * s + 2:
        warnings.warn(f"n={n} < 2s+2={2 * s + 2}; outside the theorem's range",
                      BelowThresholdWarning, stacklevel=3)
        return False
    return True


def make_A(p: int, r: int, n: int, k: int) -> Family:
    """k-subsets of [n] meeting [p] in at least r vertices."""
    _require(r >= 1, f"r >= 1 (got r={r})")
    _require(p >= r, f"p >= r (got p={p}, r={r})")
    _require(n >= p, f"n >= p (got n={n}, p={p})")
    _require(k >= r, f"k >= r (got k={k}, r={r})")
    low = prefix_mask(p)
    return Family._trusted(n, k, (e for e in all_k_subsets(n, k) if (e & low).bit_count() >= r))


def make_F1(n: int, s: int) -> Family:
    _soft_threshold(n, s)
    return make_A(1, 1, n, 3)


def make_F2(n: int, s: int) -> Family:
    _soft_threshold(n, s)
    return make_A(s + 1, 2, n, 3)


def make_F3(n: int, s: int) -> Family:
    _soft_threshold(n, s)
    return make_A(2 * s + 1, 3, n, 3)


def size_formulas(n: int, s: int) -> tuple[int, int, int]:
    _soft_threshold(n, s)
    _require(n >= 2 * s + 1, f"n >= 2s+1 (got n={n}, s={s})")
    return (
        comb(n - 1, 2),
        comb(s + 1, 2) * (n - s - 1) + comb(s + 1, 3),
        comb(2 * s + 1, 3),
    )


def conjecture_bound(n: int, s: int) -> int:
    return max(size_formulas(n, s))


def make_A_graph(i: int, n: int, m: int) -> Family:
    """The graph with spine [i] joined to everything, a clique on
    [2m-i+1] minus [i], and the remaining vertices isolated."""
    _require(0 <= i, f"i >= 0 (got i={i})")
    _require(i <= m, f"i <= m (got i={i}, m={m})")
    _require(2 * m <= n - 2, f"m <= (n-2)/2 (got n={n}, m={m})")
    spine = prefix_mask(i)
    block = prefix_mask(2 * m - i + 1) & ~spine
    edges = [e for e in all_k_subsets(n, 2) if e & spine or not e & ~block]
    return Family._trusted(n, 2, edges)


def is_subgraph(g: Family, h: Family) -> bool:
    if g.n != h.n:
        raise GroundSetMismatchError(f"ground sets differ: n={g.n} vs n={h.n}")
    if g.k != h.k:
        raise GroundSetMismatchError(f"uniformities differ: k={g.k} vs k={h.k}")
    return g.mask_set <= h.mask_set
