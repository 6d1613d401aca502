"""Randomized and exhaustive verification of the structural lemmas.

Each ``verify_*`` function returns ``None`` on success or a counterexample
dict that can be replayed with :func:`replay`. :func:`run_lemma` drives many
seeded trials and aggregates them into a :class:`LemmaReport`.

Trial ``i`` of lemma ``L`` draws from ``numpy.random.default_rng([seed, L, i])``,
so a trial's instance depends only on (seed, lemma, i), never on the thread
count or on which other trials ran.
"""
from __future__ import annotations

import multiprocessing as mp
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .constructions import is_subgraph, make_A_graph
from .core import Family, all_k_subsets, mask_of, shadow
from .errors import GeneratorExhaustedError, InvalidParametersError, PreconditionError
from .formats import family_from_dict, family_to_dict
from .properties import check_U, is_shifted, nu, r_stat, stabilize

LEMMA_IDS = ("S_subgraph", "S_matching", "stable_preservation", "shadow_stable", "leq4")
RNG_NAME = "numpy.PCG64(SeedSequence([seed, lemma_index, trial]))"
MAX_RETRIES = 10_000


@dataclass
class LemmaReport:
    lemma_id: str
    trials: int
    failures: list[dict] = field(default_factory=list)
    seed: int = 0
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, normalized: bool = False) -> dict:
        out = {
            "lemma_id": self.lemma_id,
            "trials": self.trials,
            "failures": self.failures,
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
            "verdict": "pass" if self.passed else "fail",
        }
        if normalized:
            out.pop("elapsed_ms")
        return out


# ------------------------------------------------------------------ generators

def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def _upper_covers(e: int, n: int) -> list[int]:
    out = []
    for v in range(n - 1):
        bit = 1 << v
        if e & bit and not e & (bit << 1):
            out.append((e ^ bit) | (bit << 1))
    return out


def _lower_covers(e: int) -> list[int]:
    out = []
    bit = 2
    while bit <= e:
        if e & bit and not e & (bit >> 1):
            out.append((e ^ bit) | (bit >> 1))
        bit <<= 1
    return out


def random_shifted_family(n: int, k: int, rng, density: float | None = None) -> Family:
    pool = all_k_subsets(n, k)
    p = rng.random() if density is None else density
    keep = rng.random(len(pool)) < p
    return stabilize(Family(n, k, [e for e, flag in zip(pool, keep) if flag]))


def gen_stable_graph(n: int, target_nu: int, seed) -> Family:
    """Random shifted graph on [n] with matching number exactly ``target_nu``.

    A random graph is stabilized, then maximal edges are removed (or minimal
    non-edges added) one at a time; both moves keep the graph shifted and
    change the matching number by at most one.
    """
    if not 1 <= target_nu <= (n - 2) / 2:
        raise InvalidParametersError(f"constraint violated: 1 <= target_nu <= (n-2)/2 "
                                     f"(got n={n}, target_nu={target_nu})")
    rng = _rng(seed)
    pool = all_k_subsets(n, 2)
    for _ in range(MAX_RETRIES):
        g = set(random_shifted_family(n, 2, rng).masks)
        cur = nu(Family._trusted(n, 2, g))
        steps = 0
        while cur != target_nu and steps < len(pool) + 1:
            steps += 1
            if cur > target_nu:
                maximal = sorted(e for e in g if not any(c in g for c in _upper_covers(e, n)))
                g.discard(maximal[rng.integers(len(maximal))])
            else:
                minimal = sorted(e for e in pool
                                 if e not in g and all(c in g for c in _lower_covers(e)))
                g.add(minimal[rng.integers(len(minimal))])
            cur = nu(Family._trusted(n, 2, g))
        if cur == target_nu:
            out = Family._trusted(n, 2, g)
            assert is_shifted(out) and nu(out) == target_nu
            return out
    raise GeneratorExhaustedError(f"no stable graph with nu={target_nu} on n={n} "
                                  f"after {MAX_RETRIES} attempts")


def _random_family_for_U(n: int, s: int, q: int, rng) -> Family:
    """Small 3-family on [n]; about half the draws are built to satisfy U(s, q)."""
    pool = all_k_subsets(n, 3)
    kind = rng.integers(4)
    if kind == 1:
        inside = mask_of(1 + rng.permutation(n)[:min(q, n)])
        pool = [e for e in pool if not e & ~inside]
    elif kind == 2:
        centre = 1 << int(rng.integers(n))
        pool = [e for e in pool if e & centre]
    elif kind == 3:
        core = mask_of(1 + rng.permutation(n)[:min(s + 1, n)])
        pool = [e for e in pool if (e & core).bit_count() >= 2]
    size = int(rng.integers(1, min(20, len(pool)) + 1))
    pick = rng.choice(len(pool), size=size, replace=False)
    return Family(n, 3, [pool[i] for i in sorted(pick)])


# --------------------------------------------------------------------- verifiers

def verify_S_subgraph(g: Family) -> dict | None:
    """A shifted graph with matching number m lies inside the container graph
    indexed by its r-statistic."""
    if g.k != 2 or not is_shifted(g):
        raise PreconditionError("verify_S_subgraph needs a stable graph")
    stat = r_stat(g)
    container = make_A_graph(stat.r, g.n, stat.nu)
    if is_subgraph(g, container):
        return None
    extra = Family._trusted(g.n, 2, set(g.masks) - container.mask_set)
    return {"instance": family_to_dict(g), "params": {"m": stat.nu, "r": stat.r},
            "reason": f"not a subgraph of the r={stat.r} container; edges outside: "
                      f"{[list(e) for e in extra]}"}


def verify_S_matching(g: Family) -> dict | None:
    if g.k != 2 or not is_shifted(g):
        raise PreconditionError("verify_S_matching needs a stable graph")
    s = nu(g)
    missing = [[i, 2 * s - i + 1] for i in range(1, s + 1)
               if mask_of((i, 2 * s - i + 1)) not in g.mask_set]
    if not missing:
        return None
    return {"instance": family_to_dict(g), "params": {"nu": s},
            "reason": f"pairs {missing} are not edges"}


def verify_shadow_stable(f: Family) -> dict | None:
    if f.k != 3 or not is_shifted(f):
        raise PreconditionError("verify_shadow_stable needs a shifted 3-graph")
    if is_shifted(shadow(f)):
        return None
    return {"instance": family_to_dict(f), "reason": "shadow is not shifted"}


def verify_stable_preservation(f: Family, s: int, q: int) -> dict | None:
    g = stabilize(f)
    reasons = []
    if len(g) != len(f):
        reasons.append(f"size changed {len(f)} -> {len(g)}")
    if not is_shifted(g):
        reasons.append("result not shifted")
    if check_U(f, s, q) is None and check_U(g, s, q) is not None:
        reasons.append(f"U({s},{q}) lost")
    if not reasons:
        return None
    return {"instance": family_to_dict(f), "params": {"s": s, "q": q}, "reason": "; ".join(reasons)}


def leq4_pool() -> list[int]:
    """Triples of [6] meeting each of {1,6}, {2,5}, {3,4}."""
    pairs = [mask_of(p) for p in ((1, 6), (2, 5), (3, 4))]
    return [e for e in all_k_subsets(6, 3) if all(e & p for p in pairs)]


def leq4_exhaustion() -> tuple[int, Family]:
    """Maximum size of an intersecting subfamily of the pool over all 2^8
    subsets; returns the size and the lexicographically least achiever."""
    pool = leq4_pool()
    best, best_sub = -1, None
    for size in range(1, len(pool) + 1):
        for sub in combinations(pool, size):
            if size > best and nu(Family._trusted(6, 3, sub)) == 1:
                best, best_sub = size, Family._trusted(6, 3, sub)
    return best, best_sub


def verify_leq4() -> dict | None:
    best, achiever = leq4_exhaustion()
    if best == 4:
        return None
    return {"instance": family_to_dict(achiever), "reason": f"maximum intersecting size {best} != 4"}


# -------------------------------------------------------------------- trial runner

def _trial(lemma_id: str, seed: int, i: int) -> dict | None:
    rng = np.random.default_rng([seed, LEMMA_IDS.index(lemma_id), i])
    if lemma_id == "leq4":
        return verify_leq4()
    if lemma_id in ("S_subgraph", "S_matching"):
        n = int(rng.integers(4, 13))
        g = gen_stable_graph(n, int(rng.integers(1, (n - 2) // 2 + 1)), rng)
        return verify_S_subgraph(g) if lemma_id == "S_subgraph" else verify_S_matching(g)
    if lemma_id == "shadow_stable":
        return verify_shadow_stable(random_shifted_family(int(rng.integers(4, 13)), 3, rng))
    if lemma_id == "stable_preservation":
        s, q = ((2, 5), (3, 7))[rng.integers(2)]
        return verify_stable_preservation(_random_family_for_U(int(rng.integers(6, 10)), s, q, rng), s, q)
    raise InvalidParametersError(f"unknown lemma id {lemma_id!r}")


def _trial_chunk(args) -> list[tuple[int, dict | None]]:
    lemma_id, seed, lo, hi = args
    return [(i, _trial(lemma_id, seed, i)) for i in range(lo, hi)]


def run_lemma(lemma_id: str, trials: int = 1000, seed: int = 0, threads: int = 1) -> LemmaReport:
    if lemma_id not in LEMMA_IDS:
        raise InvalidParametersError(f"unknown lemma id {lemma_id!r}; choose from {LEMMA_IDS}")
    if lemma_id == "leq4":
        trials = 1
    start = time.monotonic()
    if threads <= 1 or trials < 2:
        results = _trial_chunk((lemma_id, seed, 0, trials))
    else:
        step = max(1, -(-trials // (threads * 4)))
        chunks = [(lemma_id, seed, lo, min(lo + step, trials)) for lo in range(0, trials, step)]
        with ProcessPoolExecutor(threads, mp_context=mp.get_context("fork")) as pool:
            results = [r for chunk in pool.map(_trial_chunk, chunks) for r in chunk]
    failures = []
    for i, fail in results:
        if fail is not None:
            failures.append({"trial": i, **fail})
    return LemmaReport(lemma_id, trials, failures, seed, int((time.monotonic() - start) * 1000))


def run_lemmas(only: str | None = None, trials: int = 1000, seed: int = 0,
               threads: int = 1) -> list[LemmaReport]:
    ids = LEMMA_IDS if only is None else (only,)
    return [run_lemma(i, trials, seed, threads) for i in ids]


def replay(lemma_id: str, failure: dict) -> bool:
    """Re-run a recorded counterexample; True if it still fails."""
    if lemma_id == "leq4":
        return verify_leq4() is not None
    f = family_from_dict(failure["instance"])
    if lemma_id == "S_subgraph":
        return verify_S_subgraph(f) is not None
    if lemma_id == "S_matching":
        return verify_S_matching(f) is not None
    if lemma_id == "shadow_stable":
        return verify_shadow_stable(f) is not None
    if lemma_id == "stable_preservation":
        p = failure["params"]
        return verify_stable_preservation(f, p["s"], p["q"]) is not None
    raise InvalidParametersError(f"unknown lemma id {lemma_id!r}")


__all__ = [
    "LEMMA_IDS", "LemmaReport", "gen_stable_graph", "leq4_exhaustion", "leq4_pool",
    "random_shifted_family", "replay", "run_lemma", "run_lemmas", "verify_S_matching",
    "verify_S_subgraph", "verify_leq4", "verify_shadow_stable", "verify_stable_preservation",
]
