"""Decision procedures and statistics on families.

Witness tie-breaking is uniform across this module: when several edge lists
qualify, the one returned is the lexicographically least list of edges, each
list sorted in colex order.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Edge, Family, delete_prefix
from .errors import InvalidArgumentError


@dataclass(frozen=True)
class UnionWitness:
    """s distinct edges whose union is larger than allowed."""

    edges: tuple[Edge, ...]
    union_size: int

    def to_dict(self) -> dict:
        return {"edges": [list(e) for e in self.edges], "union_size": self.union_size}


@dataclass(frozen=True)
class MatchingWitness:
    edges: tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def to_dict(self) -> dict:
        return {"edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class StabilityStat:
    r: int
    nu: int


# ---------------------------------------------------------------- union bounds

def _top_sum(values: list[int], count: int) -> int:
    if count == 1:
        return max(values, default=0)
    return sum(sorted(values, reverse=True)[:count])


def _max_union_masks(masks: tuple[int, ...], s: int) -> tuple[int, list[int]]:
    """Maximum union of s distinct masks and the lexicographically first
    index list achieving it."""
    m = len(masks)
    cur = 0
    for _ in range(s):
        cur |= max(masks, key=lambda e: (e & ~cur).bit_count())
    value = cur.bit_count()
    while _reaches(masks, 0, s, value + 1):
        value += 1

    chosen: list[int] = []

    def first(start: int, cur: int, rem: int) -> bool:
        # lexicographic depth-first search for the first list reaching value
        if rem == 0:
            return cur.bit_count() >= value
        base = cur.bit_count()
        notcur = ~cur
        margs = [(masks[i] & notcur).bit_count() for i in range(start, m)]
        reach = cur
        for i in range(start, m):
            reach |= masks[i]
        if reach.bit_count() < value or base + _top_sum(margs, rem) < value:
            return False
        for idx in range(start, m - rem + 1):
            chosen.append(idx)
            if first(idx + 1, cur | masks[idx], rem - 1):
                return True
            chosen.pop()
        return False

    first(0, 0, s)
    return value, chosen


def _maximal_gains(pool, cur: int) -> list[int]:
    """Distinct nonempty sets ``e - cur``, inclusion-maximal ones only,
    largest first."""
    notcur = ~cur
    gains = sorted({e & notcur for e in pool} - {0}, key=int.bit_count, reverse=True)
    kept: list[int] = []
    for g in gains:
        if not any(g & k == g for k in kept):
            kept.append(g)
    return kept


def _reaches(pool, cur: int, rem: int, target: int) -> bool:
    """Can at most ``rem`` masks from ``pool`` lift ``cur`` to ``target`` vertices?

    Repeats and subsets never help a union, so candidates collapse to the
    inclusion-maximal new-vertex sets and results are memoized on ``cur``.
    """
    failed: set[tuple[int, int]] = set()

    def rec(cur: int, rem: int) -> bool:
        base = cur.bit_count()
        if base >= target:
            return True
        if rem == 0 or (cur, rem) in failed:
            return False
        gains = _maximal_gains(pool, cur)
        reach = cur
        for g in gains:
            reach |= g
        if reach.bit_count() < target or base + sum(g.bit_count() for g in gains[:rem]) < target:
            failed.add((cur, rem))
            return False
        for g in gains:
            if rec(cur | g, rem - 1):
                return True
        failed.add((cur, rem))
        return False

    return rec(cur, rem)


def _exists_union_above(pool: list[int], cur: int, rem: int, target: int) -> bool:
    """Is there a choice of ``rem`` distinct masks from ``pool`` whose union
    with ``cur`` has at least ``target`` vertices?"""
    if len(pool) < rem:
        return False
    # with rem distinct masks available, any shorter choice can be padded
    return _reaches(pool, cur, rem, target)


def exceeds_with(edge: int, others, s: int, q: int) -> bool:
    """True iff some s-set containing ``edge`` plus s - 1 masks from
    ``others`` (which must not contain ``edge``) has union larger than q."""
    return _exists_union_above(list(others), edge, s - 1, q + 1)


def max_union(f: Family, s: int) -> tuple[int, tuple[Edge, ...]]:
    """Largest union of s distinct edges, with the canonical achieving list."""
    if s < 1:
        raise InvalidArgumentError(f"s must be positive, got {s}")
    if s > len(f):
        raise InvalidArgumentError(f"s={s} exceeds the family size {len(f)}")
    val, idx = _max_union_masks(f.masks, s)
    return val, tuple(Edge.from_mask(f.masks[i]) for i in idx)


def check_U(f: Family, s: int, q: int) -> UnionWitness | None:
    """``None`` if every s distinct edges of f span at most q vertices,
    otherwise the canonical maximal-union counterexample."""
    if s < 1:
        raise InvalidArgumentError(f"s must be positive, got {s}")
    if len(f) < s:
        return None
    if not _exists_union_above(list(f.masks), 0, s, q + 1):
        return None
    val, edges = max_union(f, s)
    return UnionWitness(edges, val)


def is_U(f: Family, s: int, q: int) -> bool:
    return check_U(f, s, q) is None


# -------------------------------------------------------------------- matching

def _nu_value(masks: list[int], k: int) -> int:
    best = 0

    def rec(edges: list[int], count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if not edges:
            return
        cover = 0
        for e in edges:
            cover |= e
        if count + min(len(edges), cover.bit_count() // k) <= best:
            return
        v = cover & -cover
        for e in edges:
            if e & v:
                rec([g for g in edges if not g & e], count + 1)
        rec([g for g in edges if not g & v], count)

    rec(masks, 0)
    return best


def _first_matching(masks: tuple[int, ...], k: int, target: int) -> list[int]:
    chosen: list[int] = []

    def rec(start: int, used: int) -> bool:
        if len(chosen) == target:
            return True
        cands = [i for i in range(start, len(masks)) if not masks[i] & used]
        cover = 0
        for i in cands:
            cover |= masks[i]
        if len(chosen) + min(len(cands), cover.bit_count() // k) < target:
            return False
        for i in cands:
            chosen.append(i)
            if rec(i + 1, used | masks[i]):
                return True
            chosen.pop()
        return False

    rec(0, 0)
    return chosen


def matching_number(f: Family) -> tuple[int, MatchingWitness]:
    """Exact maximum matching size by branching on the lowest coverable vertex.

    The witness is the lexicographically least maximum matching.
    """
    if not len(f):
        return 0, MatchingWitness(())
    nu = _nu_value(list(f.masks), f.k)
    idx = _first_matching(f.masks, f.k, nu)
    return nu, MatchingWitness(tuple(Edge.from_mask(f.masks[i]) for i in idx))


def nu(f: Family) -> int:
    if not len(f):
        return 0
    return _nu_value(list(f.masks), f.k)


# ------------------------------------------------------------------- shifting

def shift_violation(f: Family) -> tuple[Edge, Edge] | None:
    """First ``(present, missing)`` pair breaking down-closure, or ``None``.

    Uses elementary swaps: for every edge F, every j in F and i < j outside
    F, the set F - j + i must be present.
    """
    present = f.mask_set
    for e in f.masks:
        rest = e
        while rest:
            jbit = rest & -rest
            rest ^= jbit
            ibit = 1
            while ibit < jbit:
                if not e & ibit:
                    cand = (e ^ jbit) | ibit
                    if cand not in present:
                        return Edge.from_mask(e), Edge.from_mask(cand)
                ibit <<= 1
    return None


def is_shifted(f: Family) -> bool:
    return shift_violation(f) is None


def compress(masks: set[int], i: int, j: int) -> tuple[set[int], int]:
    """Elementary compression replacing j by i < j wherever the result is new.

    Returns the new set and the number of edges moved.
    """
    ib, jb = 1 << (i - 1), 1 << (j - 1)
    out = set()
    moved = 0
    for e in masks:
        if e & jb and not e & ib:
            cand = (e ^ jb) | ib
            if cand not in masks:
                out.add(cand)
                moved += 1
                continue
        out.add(e)
    return out, moved


def _label_sum(masks) -> int:
    return sum(v for e in masks for v in range(1, e.bit_length() + 1) if e >> (v - 1) & 1)


def stabilize(f: Family) -> Family:
    """Apply compressions S_ij, (i, j) in lexicographic order, until a full
    sweep changes nothing. The result is shifted and has the same size."""
    cur = set(f.masks)
    changed = True
    while changed:
        changed = False
        for i in range(1, f.n):
            for j in range(i + 1, f.n + 1):
                if __debug__:
                    before = _label_sum(cur)
                nxt, moved = compress(cur, i, j)
                if moved:
                    if __debug__:
                        assert _label_sum(nxt) == before - moved * (j - i) < before
                    cur = nxt
                    changed = True
    return Family._trusted(f.n, f.k, cur)


# ------------------------------------------------------------------ r-statistic

def r_stat(g: Family) -> StabilityStat:
    """Largest i in 0..nu(g) with nu(g - [i]) = nu(g) - i."""
    total = nu(g)
    r = 0
    for i in range(1, min(total, g.n) + 1):
        if nu(delete_prefix(g, i)) == total - i:
            r = i
    return StabilityStat(r, total)
