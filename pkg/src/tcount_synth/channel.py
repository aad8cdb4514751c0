"""The channel representation <U> of a Clifford+T unitary.

<U>_rs = (1/2^n) Tr(P_r U P_s U^dag) is real with entries in Z[1/sqrt(2)],
so a whole N^2 x N^2 channel matrix is stored as two integer arrays A, B
and one shared denominator exponent k: M = (A + B*sqrt(2)) / sqrt(2)**k,
normalized so that k equals the sde of the matrix.

Arrays are int64 while values provably fit (hot path), and are promoted
to arbitrary-precision Python ints the moment they might not.
"""

from __future__ import annotations

import json

import numpy as np

from .pauli import apply_pauli, pauli_mul
from .ring import RealRingElt, reduce_real
from .unitary import RingUnitary

_INT64_SAFE = 2 ** 60  # promote above this; leaves headroom for one add/double


def _to_object(arr: np.ndarray) -> np.ndarray:
    if arr.dtype == object:
        return arr
    return np.array(arr.tolist(), dtype=object)


def _maxabs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    if arr.dtype == object:
        return int(max(max(row) for row in np.abs(arr)))
    return int(np.abs(arr).max())


def _maybe_demote(arr: np.ndarray) -> np.ndarray:
    if arr.dtype == object and _maxabs(arr) < _INT64_SAFE:
        return arr.astype(np.int64)
    return arr


class ChannelMatrix:
    """Immutable N^2 x N^2 channel matrix over Z[1/sqrt(2)]."""

    __slots__ = ("n", "a", "b", "k", "_digest", "_fp")

    def __init__(self, n: int, a: np.ndarray, b: np.ndarray, k: int,
                 _normalized: bool = False):
        dim = 4 ** n
        if a.shape != (dim, dim) or b.shape != (dim, dim):
            raise ValueError(f"expected {dim}x{dim} arrays for n={n}")
        if not _normalized:
            a, b, k = _normalize(a, b, k)
        self.n = n
        self.a = a
        self.b = b
        self.k = k
        self._digest = None
        self._fp = None
        a.setflags(write=False)
        b.setflags(write=False)

    # -- construction -------------------------------------------------

    @staticmethod
    def identity(n: int) -> "ChannelMatrix":
        dim = 4 ** n
        return ChannelMatrix(n, np.eye(dim, dtype=np.int64),
                             np.zeros((dim, dim), dtype=np.int64), 0,
                             _normalized=True)

    @staticmethod
    def from_entries(n: int, grid) -> "ChannelMatrix":
        """Build from a grid of RealRingElt (or [a,b,k] triples)."""
        dim = 4 ** n
        elts = [[e if isinstance(e, RealRingElt) else reduce_real(*e)
                 for e in row] for row in grid]
        if len(elts) != dim or any(len(row) != dim for row in elts):
            raise ValueError(f"expected a {dim}x{dim} grid")
        k = max(e.k for row in elts for e in row)
        a = np.empty((dim, dim), dtype=object)
        b = np.empty((dim, dim), dtype=object)
        for i, row in enumerate(elts):
            for j, e in enumerate(row):
                a[i, j], b[i, j] = e.raised(k)
        return ChannelMatrix(n, _maybe_demote(a), _maybe_demote(b), k,
                             _normalized=True)

    # -- scalar diagnostics -------------------------------------------

    @property
    def dim(self) -> int:
        return 4 ** self.n

    @property
    def sde(self) -> int:
        return self.k

    def entry(self, r: int, s: int) -> RealRingElt:
        return reduce_real(int(self.a[r, s]), int(self.b[r, s]), self.k)

    def hamming_weight(self) -> int:
        return int(np.count_nonzero((self.a != 0) | (self.b != 0)))

    def is_clifford(self) -> bool:
        """True iff the matrix is a signed permutation (one +-1 per row/col)."""
        if self.k != 0 or np.any(self.b):
            return False
        nz = self.a != 0
        if np.any(nz.sum(axis=0) != 1) or np.any(nz.sum(axis=1) != 1):
            return False
        vals = self.a[nz]
        return bool(np.all((vals == 1) | (vals == -1)))

    # -- algebra -------------------------------------------------------

    def transpose(self) -> "ChannelMatrix":
        return ChannelMatrix(self.n, self.a.T.copy(), self.b.T.copy(), self.k,
                             _normalized=True)

    def __matmul__(self, other: "ChannelMatrix") -> "ChannelMatrix":
        if self.n != other.n:
            raise ValueError("qubit-count mismatch")
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        # rigorous overflow bound for the int64 fast path
        bound = self.dim * (_maxabs(a1) * _maxabs(a2)
                            + 2 * _maxabs(b1) * _maxabs(b2)
                            + _maxabs(a1) * _maxabs(b2)
                            + _maxabs(b1) * _maxabs(a2))
        if bound >= 2 ** 62 or a1.dtype == object or a2.dtype == object:
            a1, b1 = _to_object(a1), _to_object(b1)
            a2, b2 = _to_object(a2), _to_object(b2)
        a = a1 @ a2 + 2 * (b1 @ b2)
        b = a1 @ b2 + b1 @ a2
        return ChannelMatrix(self.n, a, b, self.k + other.k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChannelMatrix):
            return NotImplemented
        return (self.n == other.n and self.k == other.k
                and np.array_equal(self.a, other.a)
                and np.array_equal(self.b, other.b))

    def __hash__(self):
        return hash(self.digest())

    def digest(self) -> bytes:
        """Canonical bytes, equal iff the matrices are equal."""
        if self._digest is None:
            a, b = _maybe_demote(self.a), _maybe_demote(self.b)
            if a.dtype == object or b.dtype == object:
                payload = repr((a.tolist(), b.tolist())).encode()
            else:
                payload = a.tobytes() + b.tobytes()
            self._digest = self.k.to_bytes(4, "little") + payload
        return self._digest

    def fingerprint(self) -> int:
        """Cheap hash of the canonical bytes, for high-volume dedup."""
        if self._fp is None:
            self._fp = hash(self.digest())
        return self._fp

    # -- serialization -------------------------------------------------

    def to_json_dict(self) -> dict:
        dim = self.dim
        return {
            "n": self.n,
            "entries": [[self.entry(r, s).as_triple() for s in range(dim)]
                        for r in range(dim)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def from_json_dict(data: dict) -> "ChannelMatrix":
        return ChannelMatrix.from_entries(int(data["n"]), data["entries"])

    @staticmethod
    def from_json(text: str) -> "ChannelMatrix":
        return ChannelMatrix.from_json_dict(json.loads(text))

    def to_numpy(self) -> np.ndarray:
        """Floating-point rendering, for diagnostics only."""
        s = 2 ** 0.5
        return (self.a.astype(float) + s * self.b.astype(float)) / s ** self.k

    def __repr__(self):
        return f"ChannelMatrix(n={self.n}, sde={self.k}, hw={self.hamming_weight()})"


def _normalize(a: np.ndarray, b: np.ndarray, k: int):
    """Reduce so that k is the sde of the matrix (or 0 for the zero matrix)."""
    if k < 0:
        raise ValueError("denominator exponent must be non-negative")
    if not (np.any(a) or np.any(b)):
        return a, b, 0
    while k > 0 and not np.any(a % 2):
        a, b = b, a // 2
        k -= 1
    return a, b, k


def channel_of_unitary(u: RingUnitary, check_unitary: bool = True) -> ChannelMatrix:
    """Exact channel representation <U>_rs = (1/2^n) Tr(P_r U P_s U^dag)."""
    if check_unitary and not u.is_unitary():
        raise ValueError("input matrix is not unitary")
    n = u.n
    dim_p = 4 ** n
    dim = 2 ** n
    udag = u.dagger()
    # signed-permutation data for every row Pauli: P_r |j> = i^phase |sigma(j)>
    perm = np.empty((dim_p, dim), dtype=np.int64)
    phase = np.empty((dim_p, dim), dtype=np.int64)
    for r in range(dim_p):
        for j in range(dim):
            e, out = apply_pauli(r, j, n)
            perm[r, j] = out
            phase[r, j] = e
    grid = [[None] * dim_p for _ in range(dim_p)]
    for s in range(dim_p):
        m = u @ udag.pauli_conjugate_rows(s)  # U P_s U^dag
        kk = m.k + 2 * n  # fold in the 1/2^n
        for r in range(dim_p):
            a = b = c = d = 0
            for j in range(dim):
                sig = int(perm[r, j])
                e = int(phase[r, j])
                ea, eb, ec, ed = (int(m.a[j, sig]), int(m.b[j, sig]),
                                  int(m.c[j, sig]), int(m.d[j, sig]))
                for _ in range(e):
                    ea, eb, ec, ed = -eb, ea, -ed, ec
                a += ea
                b += eb
                c += ec
                d += ed
            if b or d:
                raise ValueError("channel entry is not real; input outside the ring?")
            grid[r][s] = reduce_real(a, c, kk)
    return ChannelMatrix.from_entries(n, grid)


def channel_tensor(x: ChannelMatrix, y: ChannelMatrix) -> ChannelMatrix:
    """Kronecker product; matches channel_of_unitary of a tensor product."""
    ax, bx, ay, by = x.a, x.b, y.a, y.b
    bound = (_maxabs(ax) + 2 * _maxabs(bx)) * (_maxabs(ay) + 2 * _maxabs(by))
    if bound >= 2 ** 61 or ax.dtype == object or ay.dtype == object:
        ax, bx = _to_object(ax), _to_object(bx)
        ay, by = _to_object(ay), _to_object(by)
    a = np.kron(ax, ay) + 2 * np.kron(bx, by)
    b = np.kron(ax, by) + np.kron(bx, ay)
    return ChannelMatrix(x.n + y.n, a, b, x.k + y.k)


def sde_matrix(m: ChannelMatrix) -> int:
    return m.k


def hamming_weight(m: ChannelMatrix) -> int:
    return m.hamming_weight()


def is_clifford_channel(m: ChannelMatrix) -> bool:
    return m.is_clifford()


def dense_channel_mul(x: ChannelMatrix, y: ChannelMatrix) -> ChannelMatrix:
    return x @ y


def tcount_single_qubit(u: RingUnitary) -> int:
    """T-count of a single-qubit Clifford+T unitary: the sde of its channel."""
    if u.n != 1:
        raise ValueError("defined for single-qubit unitaries only")
    return channel_of_unitary(u).sde
