"""Decompositions <U> = <R(P_t)>...<R(P_1)> <C0> with C0 Clifford."""

from __future__ import annotations

from dataclasses import dataclass

from .channel import ChannelMatrix
from .pauli import pauli_str
from .rp import rp_compact, rp_mult


@dataclass(frozen=True)
class Decomposition:
    """paulis holds P_t first (the leftmost rotation factor); clifford is
    the terminal channel matrix, a signed permutation."""

    paulis: tuple[int, ...]
    clifford: ChannelMatrix

    @property
    def n(self) -> int:
        return self.clifford.n

    @property
    def tcount(self) -> int:
        return len(self.paulis)

    def pauli_strings(self) -> list[str]:
        return [pauli_str(p, self.n) for p in self.paulis]

    def reconstruct(self) -> ChannelMatrix:
        m = self.clifford
        for p in reversed(self.paulis):
            m = rp_mult(rp_compact(p, self.n), m)
        return m

    def verify(self, u_chan: ChannelMatrix) -> bool:
        return self.clifford.is_clifford() and self.reconstruct() == u_chan
