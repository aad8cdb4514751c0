"""Compact representation of <R(P)> and its structured multiply/inverse.

R(P) = (1 + e^{i pi/4})/2 * I + (1 - e^{i pi/4})/2 * P is the one-T-gate
rotation attached to a non-identity Pauli P.  Its channel matrix touches
exactly half of the rows: row r is non-trivial iff P_r anticommutes with
P, in which case it pairs with the row of P_r*P.  That structure is all
the multiply needs, so <R(P)> is kept as N^2/4 signed index pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .channel import ChannelMatrix, _maxabs, _to_object
from .pauli import pauli_digits, pauli_mul, pauli_str

_INT64_HEADROOM = 2 ** 61


@dataclass(frozen=True)
class RpCompact:
    """<R(P)> as pairs (i, l, sign), i < l: entries (i,i)=(l,l)=1/sqrt2,
    (i,l)=sign/sqrt2, (l,i)=-sign/sqrt2; untouched rows are identity rows."""

    n: int
    pauli: int
    pairs: tuple[tuple[int, int, int], ...]

    def __str__(self):
        body = "".join(f"({i},{'+' if s > 0 else '-'}{l})" for i, l, s in self.pairs)
        return f"P={pauli_str(self.pauli, self.n)}: {body}"


@lru_cache(maxsize=None)
def rp_compact(p: int, n: int) -> RpCompact:
    """Build the compact form combinatorially, never via the dense matrix."""
    if p == 0:
        raise ValueError("R(P) is only defined for non-identity Paulis")
    dim = 4 ** n
    p_digits = pauli_digits(p, n)
    pairs = []
    for r in range(dim):
        r_digits = pauli_digits(r, n)
        anti = sum(1 for dr, dp in zip(r_digits, p_digits)
                   if dr != 0 and dp != 0 and dr != dp)
        if anti % 2 == 0:
            continue  # row r commutes with P: identity row
        _, partner = pauli_mul(r, p, n)
        if partner < r:
            continue  # recorded when the smaller index was visited
        # entry (r, partner) = i^(e+1)/sqrt2 where P_r P_partner P = i^e I
        e, q = pauli_mul(r, partner, n)
        e2, q = pauli_mul(q, p, n)
        e = (e + e2) % 4
        if q != 0 or e % 2 == 0:
            raise AssertionError("off-diagonal phase is inconsistent")
        sign = -1 if e == 1 else 1
        pairs.append((r, partner, sign))
    if len(pairs) != dim // 4:
        raise AssertionError("touched-row count violates the 2^(2n-1) rule")
    return RpCompact(n, p, tuple(pairs))


def rp_inv(a: RpCompact) -> RpCompact:
    """Compact form of <R(P)>^-1: every pair sign flipped."""
    return RpCompact(a.n, a.pauli, tuple((i, l, -s) for i, l, s in a.pairs))


@lru_cache(maxsize=None)
def rp_inverse(p: int, n: int) -> RpCompact:
    """Cached <R(P)>^-1 compact form (hot path of the searches)."""
    return rp_inv(rp_compact(p, n))


def expand(a: RpCompact) -> ChannelMatrix:
    """Dense <R(P)> from the compact form."""
    return rp_mult(a, ChannelMatrix.identity(a.n))


def rp_mult(a: RpCompact, v: ChannelMatrix) -> ChannelMatrix:
    """W = <R(P)> V by row operations: Theta(N^4) instead of a dense product."""
    m, _, _ = _rp_mult_tracked(a, v)
    return m


def sde_delta_mult(a: RpCompact, v: ChannelMatrix,
                   sde_v: int | None = None) -> tuple[ChannelMatrix, int, int]:
    """Fused multiply returning (W, sde(W), hamming_weight(W))."""
    if sde_v is not None and sde_v != v.sde:
        raise ValueError("stale sde passed for the right factor")
    return _rp_mult_tracked(a, v)


def _rp_mult_tracked(a: RpCompact, v: ChannelMatrix):
    if a.n != v.n:
        raise ValueError("qubit-count mismatch")
    va, vb = v.a, v.b
    if va.dtype != object and 2 * _maxabs(va) + 2 * _maxabs(vb) >= _INT64_HEADROOM:
        va, vb = _to_object(va), _to_object(vb)
    # untouched rows keep their value; at denominator k+1 that is (2b, a)
    wa = 2 * vb
    wb = va.copy()
    for i, l, s in a.pairs:
        wa[i] = va[i] + s * va[l]
        wb[i] = vb[i] + s * vb[l]
        wa[l] = va[l] - s * va[i]
        wb[l] = vb[l] - s * vb[i]
    w = ChannelMatrix(v.n, wa, wb, v.k + 1)
    return w, w.sde, w.hamming_weight()
