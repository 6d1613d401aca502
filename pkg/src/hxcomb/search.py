"""Exact maximum size of U(s, 2s+1) 3-graphs on [n] at desk scale.

The shifted search walks the triples of [n] in colex order, which is a
linear extension of the shift order, and decides include/exclude for each.
A triple can only be included when it is still alive, i.e. no predecessor
was excluded; excluding a triple kills its whole up-set. Inclusion also
requires that no s-set containing the new triple spans more than 2s+1
vertices. The incumbent is seeded with the three extremal constructions, so
a complete run is an equality test against the conjectured bound.
"""
from __future__ import annotations

import multiprocessing as mp
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .constructions import make_F1, make_F2, make_F3, size_formulas
from .core import Family, all_k_subsets, vertices_of
from .errors import InstanceTooLargeError, InvalidParametersError
from .formats import family_from_dict, family_to_dict
from .properties import check_U, exceeds_with, is_shifted

UNRESTRICTED_MAX_TRIPLES = 20

# keys whose values legitimately vary between otherwise identical runs
VOLATILE_KEYS = ("nodes_explored", "elapsed_ms")


@dataclass(frozen=True)
class Budget:
    nodes: int | None = None
    secs: float | None = None


@dataclass
class SearchCertificate:
    n: int
    s: int
    q: int
    optimum: int
    witness: Family
    bound_breakdown: tuple[int, int, int]
    theorem_holds: bool | None
    restricted_to_shifted: bool
    nodes_explored: int
    elapsed_ms: int
    complete: bool = True
    finding: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def bound(self) -> int:
        return max(self.bound_breakdown)

    def to_dict(self, normalized: bool = False) -> dict:
        out = {
            "n": self.n,
            "s": self.s,
            "q": self.q,
            "optimum": self.optimum,
            "witness": family_to_dict(self.witness),
            "bound_breakdown": list(self.bound_breakdown),
            "bound": self.bound,
            "theorem_holds": self.theorem_holds,
            "restricted_to_shifted": self.restricted_to_shifted,
            "status": "complete" if self.complete else "incomplete",
            "finding": self.finding,
            "notes": list(self.notes),
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": self.elapsed_ms,
        }
        if normalized:
            for key in VOLATILE_KEYS:
                out.pop(key)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> SearchCertificate:
        return cls(
            n=data["n"],
            s=data["s"],
            q=data["q"],
            optimum=data["optimum"],
            witness=family_from_dict(data["witness"]),
            bound_breakdown=tuple(data["bound_breakdown"]),
            theorem_holds=data["theorem_holds"],
            restricted_to_shifted=data["restricted_to_shifted"],
            nodes_explored=data.get("nodes_explored", 0),
            elapsed_ms=data.get("elapsed_ms", 0),
            complete=data["status"] == "complete",
            finding=data.get("finding"),
            notes=list(data.get("notes", [])),
        )


class _BudgetExceeded(Exception):
    pass


class _ShiftedSpace:
    """Precomputed triple order and up-sets for one (n, s)."""

    def __init__(self, n: int, s: int):
        self.n, self.s, self.q = n, s, 2 * s + 1
        self.triples = all_k_subsets(n, 3)
        size = len(self.triples)
        self.full = (1 << size) - 1
        verts = [vertices_of(t) for t in self.triples]
        self.upset = [0] * size
        for a, va in enumerate(verts):
            bits = 0
            for b in range(a, size):
                vb = verts[b]
                if va[0] <= vb[0] and va[1] <= vb[1] and va[2] <= vb[2]:
                    bits |= 1 << b
            self.upset[a] = bits


class _Runner:
    """Depth-first include/exclude search from a given partial state."""

    def __init__(self, space: _ShiftedSpace, best: int, budget: Budget, shared=None,
                 stop_at: int | None = None, deadline: float | None = None):
        self.sp = space
        self.best = best
        self.best_family: list[int] | None = None
        self.nodes = 0
        self.budget = budget
        if deadline is None and budget.secs is not None:
            deadline = time.monotonic() + budget.secs
        self.deadline = deadline
        self.shared = shared
        self.stop_at = stop_at

    def _incumbent(self) -> int:
        if self.shared is not None and self.shared.value > self.best:
            self.best = self.shared.value
        return self.best

    def _record(self, size: int, fam: list[int]) -> None:
        self.best = size
        self.best_family = fam.copy()
        if self.shared is not None:
            with self.shared.get_lock():
                if self.shared.value < size:
                    self.shared.value = size

    def run(self, dead: int, fam: list[int]) -> None:
        sp = self.sp
        full, upset, triples, s, q = sp.full, sp.upset, sp.triples, sp.s, sp.q
        nodes_cap = self.budget.nodes

        def dfs(dead: int, size: int) -> bool:
            self.nodes += 1
            if nodes_cap is not None and self.nodes > nodes_cap:
                raise _BudgetExceeded
            if self.deadline is not None and not self.nodes & 255 and time.monotonic() > self.deadline:
                raise _BudgetExceeded
            while True:
                alive = full & ~dead
                if not alive:
                    if size > self.best:
                        self._record(size, fam)
                        return self.stop_at is not None and size >= self.stop_at
                    return False
                if size + alive.bit_count() <= self._incumbent():
                    return False
                low = alive & -alive
                t = low.bit_length() - 1
                if not exceeds_with(triples[t], fam, s, q):
                    fam.append(triples[t])
                    done = dfs(dead | low, size + 1)
                    fam.pop()
                    if done:
                        return True
                dead |= upset[t]

        dfs(dead, len(fam))

    def frontier(self, dead: int, fam: list[int], depth: int) -> list[tuple[int, tuple[int, ...]]]:
        """Split the tree into disjoint subtrees after ``depth`` branchings."""
        sp = self.sp
        out = []

        def walk(dead: int, fam: list[int], d: int) -> None:
            while True:
                alive = sp.full & ~dead
                if d == 0 or not alive:
                    out.append((dead, tuple(fam)))
                    return
                low = alive & -alive
                t = low.bit_length() - 1
                if not exceeds_with(sp.triples[t], fam, sp.s, sp.q):
                    walk(dead | low, fam + [sp.triples[t]], d - 1)
                    walk(dead | sp.upset[t], fam, d - 1)
                    return
                dead |= sp.upset[t]

        walk(dead, list(fam), depth)
        return out


_shared_best = None


def _init_worker(shared) -> None:
    global _shared_best
    _shared_best = shared


def _run_subtree(args):
    n, s, best, budget, deadline, dead, fam = args
    runner = _Runner(_ShiftedSpace(n, s), best, budget, shared=_shared_best, deadline=deadline)
    try:
        runner.run(dead, list(fam))
        incomplete = False
    except _BudgetExceeded:
        incomplete = True
    return runner.best, runner.best_family, runner.nodes, incomplete


def resolve_threads(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get("HX_THREADS", "1") or 1)
    return max(1, threads)


def _seed_incumbent(n: int, s: int) -> tuple[int, Family | None, list[str]]:
    notes = []
    best, witness = 0, None
    for name, make in (("F1", make_F1), ("F2", make_F2), ("F3", make_F3)):
        fam = make(n, s)
        if check_U(fam, s, 2 * s + 1) is not None or not is_shifted(fam):
            notes.append(f"construction {name} infeasible")
            continue
        if len(fam) > best:
            best, witness = len(fam), fam
    return best, witness, notes


def _check_params(n: int, s: int) -> None:
    if s < 2:
        raise InvalidParametersError(f"constraint violated: s >= 2 (got s={s})")
    if not 2 * s + 1 <= n <= 64:
        raise InvalidParametersError(f"constraint violated: 2s+1 <= n <= 64 (got n={n}, s={s})")


def search_shifted_max(n: int, s: int, budget: Budget | None = None,
                       threads: int | None = None) -> SearchCertificate:
    """Exact maximum over shifted U(s, 2s+1) families of triples of [n]."""
    _check_params(n, s)
    budget = budget or Budget()
    threads = resolve_threads(threads)
    start = time.monotonic()
    breakdown = size_formulas(n, s)
    seed_val, seed_fam, notes = _seed_incumbent(n, s)
    space = _ShiftedSpace(n, s)

    best, best_fam, nodes, complete = seed_val, None, 0, True
    if threads == 1:
        runner = _Runner(space, seed_val, budget)
        try:
            runner.run(0, [])
        except _BudgetExceeded:
            complete = False
        best, best_fam, nodes = runner.best, runner.best_family, runner.nodes
    else:
        splitter = _Runner(space, seed_val, Budget())
        tasks = splitter.frontier(0, [], depth=max(1, (threads * 4).bit_length()))
        ctx = mp.get_context("fork")
        shared = ctx.Value("i", seed_val)
        deadline = None if budget.secs is None else start + budget.secs
        with ProcessPoolExecutor(threads, mp_context=ctx, initializer=_init_worker,
                                 initargs=(shared,)) as pool:
            results = pool.map(_run_subtree, [(n, s, seed_val, budget, deadline, d, f) for d, f in tasks])
            for val, fam, cnt, inc in results:
                nodes += cnt
                complete &= not inc
                if fam is not None and val > best:
                    best = val

    if best > seed_val and threads > 1:
        # canonical achiever: the first optimum family in depth-first order
        canon = _Runner(space, best - 1, Budget(), stop_at=best)
        canon.run(0, [])
        witness = Family._trusted(n, 3, canon.best_family)
    elif best_fam is not None:
        witness = Family._trusted(n, 3, best_fam)
    else:
        witness = seed_fam if seed_fam is not None else Family(n, 3)

    bound = max(breakdown)
    finding = None
    if complete:
        holds = best == bound
        if best > bound:
            finding = "counterexample: optimum exceeds the conjectured bound"
        elif best < bound:
            finding = "a seeded construction failed validation"
    else:
        holds = None
    return SearchCertificate(
        n=n, s=s, q=2 * s + 1, optimum=best, witness=witness, bound_breakdown=breakdown,
        theorem_holds=holds, restricted_to_shifted=True, nodes_explored=nodes,
        elapsed_ms=int((time.monotonic() - start) * 1000), complete=complete,
        finding=finding, notes=notes,
    )


def search_unrestricted_max(n: int, s: int) -> SearchCertificate:
    """Exact maximum over all U(s, 2s+1) families, not only shifted ones.

    Plain include/exclude enumeration of every subfamily with U-pruning; no
    seeding and no use of the shift order, so it checks the shifted search
    independently.
    """
    if comb(n, 3) > UNRESTRICTED_MAX_TRIPLES:
        raise InstanceTooLargeError(
            f"C({n},3)={comb(n, 3)} triples exceeds the unrestricted limit of "
            f"{UNRESTRICTED_MAX_TRIPLES} (2^{UNRESTRICTED_MAX_TRIPLES} subfamilies)")
    if s != 2:
        raise InvalidParametersError(f"unrestricted search supports s = 2 only (got s={s})")
    _check_params(n, s)
    start = time.monotonic()
    q = 2 * s + 1
    triples = all_k_subsets(n, 3)
    total = len(triples)
    best, best_fam, nodes = -1, [], 0
    fam: list[int] = []

    def dfs(i: int) -> None:
        nonlocal best, best_fam, nodes
        nodes += 1
        if len(fam) + (total - i) <= best:
            return
        if i == total:
            best, best_fam = len(fam), fam.copy()
            return
        t = triples[i]
        if not exceeds_with(t, fam, s, q):
            fam.append(t)
            dfs(i + 1)
            fam.pop()
        dfs(i + 1)

    dfs(0)
    breakdown = size_formulas(n, s)
    return SearchCertificate(
        n=n, s=s, q=q, optimum=best, witness=Family._trusted(n, 3, best_fam),
        bound_breakdown=breakdown, theorem_holds=best == max(breakdown),
        restricted_to_shifted=False, nodes_explored=nodes,
        elapsed_ms=int((time.monotonic() - start) * 1000),
    )


def verify_theorem(n: int, s: int, budget: Budget | None = None,
                   threads: int | None = None) -> SearchCertificate:
    """Shifted search plus the equality test against the conjectured bound."""
    cert = search_shifted_max(n, s, budget, threads)
    problems = validate_certificate(cert)
    if problems:
        cert.finding = "; ".join(problems)
        cert.theorem_holds = False if cert.complete else None
    return cert


def validate_certificate(cert: SearchCertificate | dict) -> list[str]:
    """Re-check a certificate from scratch; returns a list of problems."""
    if isinstance(cert, dict):
        cert = SearchCertificate.from_dict(cert)
    problems = []
    w = cert.witness
    if w.n != cert.n or w.k != 3:
        problems.append("witness ground set or arity mismatch")
    if cert.q != 2 * cert.s + 1:
        problems.append("q != 2s+1")
    if len(w) != cert.optimum:
        problems.append(f"witness size {len(w)} != optimum {cert.optimum}")
    if check_U(w, cert.s, cert.q) is not None:
        problems.append("witness violates the union condition")
    if cert.restricted_to_shifted and not is_shifted(w):
        problems.append("witness is not shifted")
    breakdown = size_formulas(cert.n, cert.s)
    if tuple(cert.bound_breakdown) != breakdown:
        problems.append("bound breakdown does not match the closed forms")
    if cert.complete:
        if cert.theorem_holds != (cert.optimum == max(breakdown)):
            problems.append("theorem_holds inconsistent with optimum and bound")
    elif cert.theorem_holds is not None:
        problems.append("incomplete certificate carries a verdict")
    return problems
