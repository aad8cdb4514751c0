"""Polynomial-space heuristic T-count synthesis.

Iterative deepening: for increasing depth budgets m, grow a search tree
whose edges multiply by <R(P)>^-1 for every non-identity Pauli P, and
prune each level to the minimum-cardinality class of (sde delta,
Hamming-weight delta) children.  A node whose matrix reaches sde 0 is a
Clifford channel, and its path is a decomposition.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .channel import ChannelMatrix
from .decomposition import Decomposition
from .rp import rp_inverse, sde_delta_mult

__all__ = ["HeuristicConfig", "FrontierCapError", "HeuristicInconclusive",
           "min_t_synth", "subroutine_a", "divide_select"]


class FrontierCapError(Exception):
    """A level's selected frontier exceeded the configured cap."""


class HeuristicInconclusive(Exception):
    """The depth cap was reached without finding a decomposition."""


@dataclass(frozen=True)
class HeuristicConfig:
    method: str = "C"
    frontier_cap: int = 4096
    m_cap: int | None = None      # default: sde + 2n + 8
    join_first_two: bool = True
    method_fallback: bool = True  # try the other methods at each depth

    def __post_init__(self):
        if self.method not in ("A", "B", "C"):
            raise ValueError("method must be A, B or C")
        if self.frontier_cap < 1:
            raise ValueError("frontier cap must be positive")


@dataclass(frozen=True)
class SearchNode:
    matrix: ChannelMatrix
    path: tuple[int, ...]
    sde: int
    hw: int


def min_t_synth(u_chan: ChannelMatrix, cfg: HeuristicConfig | None = None,
                telemetry: dict | None = None) -> Decomposition:
    """Synthesize a decomposition of u_chan, deepening m from sde(u_chan).

    Raises HeuristicInconclusive if the depth cap is exhausted; every
    returned decomposition is verified against u_chan before returning.
    """
    cfg = cfg or HeuristicConfig()
    tel = telemetry if telemetry is not None else {}
    tel.setdefault("max_frontier", 1)
    tel.setdefault("levels", 0)
    start = time.monotonic()
    if u_chan.is_clifford():
        d = Decomposition((), u_chan)
    else:
        m = u_chan.sde
        m_cap = cfg.m_cap if cfg.m_cap is not None \
            else u_chan.sde + 2 * u_chan.n + 8
        # a heuristic NO is a wrong turn, not a bound: if one selection
        # method stays inconclusive through every depth, rerun the whole
        # deepening loop with the remaining methods before giving up
        methods = [cfg.method]
        if cfg.method_fallback:
            methods += [x for x in ("C", "A", "B") if x != cfg.method]
        overflowed = False
        d = None
        for method in methods:
            m = u_chan.sde
            while m <= m_cap:
                try:
                    d = subroutine_a(u_chan, m, _with_method(cfg, method),
                                     tel)
                except FrontierCapError:
                    overflowed = True
                    d = None
                if d is not None:
                    break
                m += 1
            if d is not None:
                break
        if d is None:
            detail = "frontier cap overflow occurred" if overflowed \
                else "every depth returned NO"
            raise HeuristicInconclusive(
                f"no decomposition up to depth {m_cap} ({detail})")
        tel["m_final"] = m
    tel["wall_ms"] = (time.monotonic() - start) * 1000.0
    if not d.verify(u_chan):
        raise RuntimeError("reconstruction check failed, which is a bug")
    tel["tcount"] = d.tcount
    return d


def subroutine_a(u_chan: ChannelMatrix, m: int, cfg: HeuristicConfig,
                 telemetry: dict | None = None) -> Decomposition | None:
    """One depth-m tree: returns a decomposition of length <= m or None.

    Child matrices are generated twice: one streaming pass classifies
    every (node, Pauli) child by its deltas keeping only index pairs, and
    a second pass materializes just the selected class.  This keeps the
    live set at one frontier plus one class instead of all children.
    """
    if m < 1:
        raise ValueError("depth budget must be at least 1")
    tel = telemetry if telemetry is not None else {}
    n = u_chan.n
    dim_p = 4 ** n
    frontier = [SearchNode(u_chan, (), u_chan.sde, u_chan.hamming_weight())]
    i = 1
    while i <= m:
        join = cfg.join_first_two and i == 1 and m >= 2
        budget = m - i
        # each class maps matrix fingerprint -> (parent index, Pauli), so a
        # class's cardinality counts distinct unitaries, not tree nodes
        classes: dict[tuple[int, int], dict[int, tuple[int, int]]] = {}
        for idx, node in enumerate(frontier):
            for p in range(1, dim_p):
                w, sde, hw = sde_delta_mult(rp_inverse(p, n), node.matrix)
                if sde == 0:
                    return Decomposition(node.path + (p,), w)
                if sde > budget:
                    continue
                key = (_sign(sde - node.sde), _sign(hw - node.hw))
                classes.setdefault(key, {}).setdefault(w.fingerprint(),
                                                       (idx, p))
        if join:
            merged: dict[int, tuple[int, int]] = {}
            for members in classes.values():
                merged.update(members)
            selected = list(merged.values())
        else:
            selected = divide_select(classes, cfg.method)
        if not selected:
            return None
        if len(selected) > cfg.frontier_cap:
            raise FrontierCapError(
                f"frontier exceeded {cfg.frontier_cap} nodes at "
                f"level {i} of depth {m}")
        nxt = []
        for idx, p in selected:
            node = frontier[idx]
            w, sde, hw = sde_delta_mult(rp_inverse(p, n), node.matrix)
            nxt.append(SearchNode(w, node.path + (p,), sde, hw))
        frontier = nxt
        tel["levels"] = tel.get("levels", 0) + 1
        tel["max_frontier"] = max(tel.get("max_frontier", 1), len(frontier))
        i += 1
    return None


def _with_method(cfg: HeuristicConfig, method: str) -> HeuristicConfig:
    if method == cfg.method:
        return cfg
    return HeuristicConfig(method=method, frontier_cap=cfg.frontier_cap,
                           m_cap=cfg.m_cap,
                           join_first_two=cfg.join_first_two,
                           method_fallback=cfg.method_fallback)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


# class keys are (sde delta sign, hw delta sign); +1 increase, -1 decrease
_PRIORITY_C = [(-1, -1), (-1, 0), (-1, 1),
               (0, -1), (0, 0), (0, 1),
               (1, -1), (1, 0), (1, 1)]


def divide_select(classes: dict[tuple[int, int], dict],
                  method: str) -> list:
    """Pick the minimum-cardinality class of budget-admissible children.

    Classes map matrix fingerprints to (parent, Pauli) pairs, so the
    cardinality compared is the number of distinct unitaries.  Method C
    compares all 9 (sde, hw) delta classes.  Methods A and B compare only
    strict sde-increase vs sde-decrease groupings and then append the
    unchanged-sde children to the winner; with method B the unchanged-hw
    children count toward both hw classes of their side.  Ties prefer
    sde decrease, then hw decrease.
    """
    if method == "C":
        best = None
        for key in _PRIORITY_C:
            members = classes.get(key)
            if members and (best is None or len(members) < len(best)):
                best = members
        return list(best.values()) if best else []

    def group(*keys):
        out: dict = {}
        for key in keys:
            out.update(classes.get(key, {}))
        return out

    unchanged = group((0, -1), (0, 0), (0, 1))
    if method == "A":
        candidates = [group((-1, -1), (-1, 0), (-1, 1)),
                      group((1, -1), (1, 0), (1, 1))]
    elif method == "B":
        candidates = [group((-1, -1), (-1, 0)), group((-1, 1), (-1, 0)),
                      group((1, -1), (1, 0)), group((1, 1), (1, 0))]
    else:
        raise ValueError(f"unknown method {method!r}")
    best = None
    for members in candidates:
        if members and (best is None or len(members) < len(best)):
            best = members
    if best is None:
        # no strict sde movement anywhere: the unchanged children are all
        # that remains, and dropping them would end the search spuriously
        return list(unchanged.values())
    best = dict(best)
    best.update(unchanged)
    return list(best.values())
