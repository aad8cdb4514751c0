"""Exact T-count decision by nested meet-in-the-middle coset search.

count_t_decide answers "what is the T-count of U, if it is at most m?"
using databases of depth ceil(m/c) only: a direct label lookup covers
T-counts up to ceil(m/c), and deeper values are found by peeling one
database witness off the left and recursing with a smaller bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .channel import ChannelMatrix
from .coset import (CosetDatabase, MemoryBudgetError, build_databases,
                    coset_label)
from .decomposition import Decomposition
from .rp import rp_compact, rp_inverse, rp_mult

__all__ = ["ProvableConfig", "MemoryBudgetError", "count_t_decide",
           "tcount_bruteforce", "decomposition_from_decision"]


@dataclass(frozen=True)
class ProvableConfig:
    """m: T-count bound; c >= 2 trades database depth against search time."""

    m: int
    c: int = 2
    entry_cap: int = 2_000_000
    db_dir: str | None = None

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("bound m must be at least 1")
        if self.c < 2:
            raise ValueError("trade-off parameter c must be at least 2")

    @property
    def depth(self) -> int:
        return ceil(self.m / self.c)


def count_t_decide(u_chan: ChannelMatrix, cfg: ProvableConfig,
                   databases: list[CosetDatabase] | None = None) -> int | None:
    """T-count of u_chan if it is <= cfg.m, else None.  Exact either way."""
    if databases is None:
        databases = build_databases(u_chan.n, cfg.depth, cfg.entry_cap,
                                    cfg.db_dir)
    elif len(databases) < cfg.depth + 1:
        raise ValueError("databases shallower than ceil(m/c)")
    return _decide(u_chan, cfg.m, cfg.depth, databases)


def _decide(chan: ChannelMatrix, bound: int, q: int,
            dbs: list[CosetDatabase]) -> int | None:
    label = coset_label(chan)
    # direct lookup covers T-count <= q; levels are label-disjoint, so a
    # hit at level j certifies T-count exactly j
    for j in range(min(q, bound) + 1):
        if dbs[j].lookup(label) is not None:
            return j
    # peel a depth-r witness off the left and recurse on the remainder;
    # iterations test increasing bounds B, so the first productive B holds
    # the true T-count, found as the minimum over its witness hits
    j = 1
    while j * q < bound:
        b = min((j + 1) * q, bound)
        r = b - j * q
        best = None
        for witness in dbs[r].witnesses:
            v = chan
            for p in witness:
                v = rp_mult(rp_inverse(p, chan.n), v)
            inner = _decide(v, j * q, q, dbs)
            if inner is not None:
                cand = inner + r
                if best is None or cand < best:
                    best = cand
        if best is not None:
            return best
        j += 1
    return None


def tcount_bruteforce(u_chan: ChannelMatrix, mmax: int) -> int | None:
    """Exact T-count by breadth-first layered enumeration with coset
    dedup; independent of the database machinery above."""
    n = u_chan.n
    target = coset_label(u_chan).digest()
    frontier = [((), ChannelMatrix.identity(n))]
    seen = {coset_label(frontier[0][1]).digest()}
    if target in seen:
        return 0
    dim_p = 4 ** n
    for level in range(1, mmax + 1):
        nxt = []
        for witness, m in frontier:
            for p in range(1, dim_p):
                w = rp_mult(rp_compact(p, n), m)
                d = coset_label(w).digest()
                if d in seen:
                    continue
                seen.add(d)
                if d == target:
                    return level
                nxt.append(((p,) + witness, w))
        frontier = nxt
    return None


def decomposition_from_decision(u_chan: ChannelMatrix, t: int,
                                cfg: ProvableConfig,
                                databases: list[CosetDatabase] | None = None
                                ) -> Decomposition:
    """Recover a length-t Pauli sequence by peeling one rotation at a
    time: P is accepted iff the remainder's T-count drops to t-1."""
    if databases is None:
        databases = build_databases(u_chan.n, cfg.depth, cfg.entry_cap,
                                    cfg.db_dir)
    n = u_chan.n
    dim_p = 4 ** n
    paulis = []
    v = u_chan
    remaining = t
    while remaining > 0:
        for p in range(1, dim_p):
            v2 = rp_mult(rp_inverse(p, n), v)
            if _decide(v2, remaining - 1, cfg.depth, databases) == remaining - 1:
                paulis.append(p)
                v = v2
                break
        else:
            raise RuntimeError("no peeling Pauli found; decision and "
                               "peeling disagree, which indicates a bug")
        remaining -= 1
    if not v.is_clifford():
        raise RuntimeError("peeled remainder is not a Clifford channel")
    d = Decomposition(tuple(paulis), v)
    if not d.verify(u_chan):
        raise RuntimeError("reconstruction identity failed after peeling")
    return d
