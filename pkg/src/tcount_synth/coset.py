"""Coset labels and sorted per-T-count coset databases.

Two channel matrices W, V satisfy coset_label(W) == coset_label(V) iff
W = V*C for a Clifford channel C, so the label is a canonical form for
the left coset of the Clifford group.  Databases hold one witness per
coset at each T-count level, sorted by label for binary search.
"""

from __future__ import annotations

import bisect
import hashlib
import os
import struct
from dataclasses import dataclass, field

import numpy as np

from .channel import ChannelMatrix, _maxabs
from .ring import _sign_a_plus_b_sqrt2
from .rp import rp_compact, rp_mult


class MemoryBudgetError(Exception):
    """A database build exceeded its configured entry cap."""


@dataclass(frozen=True)
class CosetLabel:
    """Canonical column-signed, column-sorted form of a channel matrix."""

    matrix: ChannelMatrix

    def digest(self) -> bytes:
        return self.matrix.digest()

    def __eq__(self, other):
        if not isinstance(other, CosetLabel):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __lt__(self, other: "CosetLabel") -> bool:
        return label_compare(self, other) < 0


def coset_label(w: ChannelMatrix) -> CosetLabel:
    """Canonicalize: common denominator sqrt(2)**sde, per-column sign fix
    on the first nonzero entry, then sort the columns by exact value."""
    a = np.array(w.a.tolist(), dtype=object)
    b = np.array(w.b.tolist(), dtype=object)
    dim = w.dim
    cols = []
    for s in range(dim):
        ca = [a[r, s] for r in range(dim)]
        cb = [b[r, s] for r in range(dim)]
        for va, vb in zip(ca, cb):
            if va or vb:
                if va < 0 or (va == 0 and vb < 0):
                    ca = [-x for x in ca]
                    cb = [-x for x in cb]
                break
        else:
            raise ValueError("zero column: input is not an orthogonal channel")
        cols.append((ca, cb))
    cols.sort(key=_ColumnKey)
    for s, (ca, cb) in enumerate(cols):
        for r in range(dim):
            a[r, s] = ca[r]
            b[r, s] = cb[r]
    return CosetLabel(ChannelMatrix(w.n, a, b, w.k, _normalized=True))


class _ColumnKey:
    """Sort key comparing columns entry-wise by exact ring value."""

    __slots__ = ("col",)

    def __init__(self, col):
        self.col = col

    def __lt__(self, other: "_ColumnKey") -> bool:
        ca, cb = self.col
        oa, ob = other.col
        for x, y, u, v in zip(ca, cb, oa, ob):
            s = _sign_a_plus_b_sqrt2(x - u, y - v)
            if s:
                return s < 0
        return False


def label_compare(x: CosetLabel, y: CosetLabel) -> int:
    """-1, 0 or +1: row-major entry-wise scan in exact value order."""
    mx, my = x.matrix, y.matrix
    if mx.n != my.n:
        raise ValueError("qubit-count mismatch")
    k = max(mx.k, my.k)
    dim = mx.dim
    for r in range(dim):
        for s in range(dim):
            ax, bx = _raise_pair(int(mx.a[r, s]), int(mx.b[r, s]), mx.k, k)
            ay, by = _raise_pair(int(my.a[r, s]), int(my.b[r, s]), my.k, k)
            sign = _sign_a_plus_b_sqrt2(ax - ay, bx - by)
            if sign:
                return sign
    return 0


def _raise_pair(a: int, b: int, k: int, to_k: int) -> tuple[int, int]:
    for _ in range(to_k - k):
        a, b = 2 * b, a
    return a, b


@dataclass
class CosetDatabase:
    """Sorted labels at one T-count level, with witness Pauli sequences.

    witness[i] regenerates labels[i]'s representative: the matrix is the
    product of <R(p)> over the witness Paulis, leftmost factor first.
    """

    n: int
    k: int
    labels: list[CosetLabel] = field(default_factory=list)
    witnesses: list[tuple[int, ...]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.labels)

    def insert_if_new(self, label: CosetLabel, witness: tuple[int, ...]) -> bool:
        pos = bisect.bisect_left(self.labels, label)
        if pos < len(self.labels) and self.labels[pos] == label:
            return False
        self.labels.insert(pos, label)
        self.witnesses.insert(pos, witness)
        return True

    def lookup(self, label: CosetLabel) -> tuple[int, ...] | None:
        pos = bisect.bisect_left(self.labels, label)
        if pos < len(self.labels) and self.labels[pos] == label:
            return self.witnesses[pos]
        return None


def db_lookup(label: CosetLabel, db: CosetDatabase) -> tuple[int, ...] | None:
    return db.lookup(label)


def witness_matrix(witness: tuple[int, ...], n: int) -> ChannelMatrix:
    """Product of <R(p)> factors, leftmost witness Pauli outermost."""
    m = ChannelMatrix.identity(n)
    for p in reversed(witness):
        m = rp_mult(rp_compact(p, n), m)
    return m


def build_databases(n: int, kmax: int, entry_cap: int = 2_000_000,
                    db_dir: str | None = None) -> list[CosetDatabase]:
    """Databases D_0..D_kmax; D_k extends every D_{k-1} entry by every
    non-identity Pauli, keeping only labels unseen at any level <= k."""
    if kmax < 0:
        raise ValueError("kmax must be non-negative")
    dbs: list[CosetDatabase] = []
    seen: set[bytes] = set()
    total = 0
    for k in range(kmax + 1):
        db = _load_database(n, k, db_dir) if db_dir else None
        if db is None:
            db = _build_level(n, k, dbs, seen, entry_cap - total)
            if db_dir:
                save_database(db, db_dir)
        else:
            for label in db.labels:
                seen.add(label.digest())
        total += len(db)
        if total > entry_cap:
            raise MemoryBudgetError(
                f"database entry cap {entry_cap} exceeded at level {k} "
                f"({total} entries)")
        dbs.append(db)
    return dbs


def _build_level(n: int, k: int, lower: list[CosetDatabase],
                 seen: set[bytes], budget: int) -> CosetDatabase:
    db = CosetDatabase(n, k)
    if k == 0:
        label = coset_label(ChannelMatrix.identity(n))
        db.insert_if_new(label, ())
        seen.add(label.digest())
        return db
    dim_p = 4 ** n
    for m_witness, m_matrix in zip(lower[k - 1].witnesses,
                                   _level_matrices(lower[k - 1])):
        for p in range(1, dim_p):
            w = rp_mult(rp_compact(p, n), m_matrix)
            label = coset_label(w)
            d = label.digest()
            if d in seen:
                continue
            seen.add(d)
            db.insert_if_new(label, (p,) + m_witness)
            if len(db) > budget:
                raise MemoryBudgetError(
                    f"database entry cap exceeded while building level {k}")
    return db


def _level_matrices(db: CosetDatabase):
    for w in db.witnesses:
        yield witness_matrix(w, db.n)


# -- on-disk format ------------------------------------------------------
#
# magic "TCDB1", then n, k (uint32), count (uint64), little-endian, then
# `count` fixed-width records: sha256 of the label digest (32 bytes), the
# k witness Paulis (uint32 each), the label payload (label sde as uint32,
# then dim*dim (a, b) pairs as int64), bit-exact across platforms.

_MAGIC = b"TCDB1"
_I64 = 2 ** 63


def database_path(n: int, k: int, db_dir: str) -> str:
    return os.path.join(db_dir, f"d{n}_{k}.tcdb")


def save_database(db: CosetDatabase, db_dir: str) -> str:
    os.makedirs(db_dir, exist_ok=True)
    path = database_path(db.n, db.k, db_dir)
    dim = 4 ** db.n
    with open(path, "wb") as fh:
        fh.write(_MAGIC)
        fh.write(struct.pack("<IIQ", db.n, db.k, len(db)))
        for label, witness in zip(db.labels, db.witnesses):
            m = label.matrix
            if _maxabs(m.a) >= _I64 or _maxabs(m.b) >= _I64:
                raise ValueError("label entry too large for the disk format")
            fh.write(hashlib.sha256(label.digest()).digest())
            fh.write(struct.pack(f"<{db.k}I", *witness))
            fh.write(struct.pack("<I", m.k))
            flat = []
            for r in range(dim):
                for s in range(dim):
                    flat.append(int(m.a[r, s]))
                    flat.append(int(m.b[r, s]))
            fh.write(struct.pack(f"<{2 * dim * dim}q", *flat))
    return path


def load_database(path: str) -> CosetDatabase:
    with open(path, "rb") as fh:
        if fh.read(5) != _MAGIC:
            raise ValueError(f"{path}: bad magic")
        n, k, count = struct.unpack("<IIQ", fh.read(16))
        dim = 4 ** n
        db = CosetDatabase(n, k)
        payload = 2 * dim * dim
        for _ in range(count):
            stored_sha = fh.read(32)
            witness = struct.unpack(f"<{k}I", fh.read(4 * k))
            (label_k,) = struct.unpack("<I", fh.read(4))
            flat = struct.unpack(f"<{payload}q", fh.read(8 * payload))
            a = np.array(flat[0::2], dtype=np.int64).reshape(dim, dim)
            b = np.array(flat[1::2], dtype=np.int64).reshape(dim, dim)
            label = CosetLabel(ChannelMatrix(n, a, b, label_k,
                                             _normalized=True))
            if hashlib.sha256(label.digest()).digest() != stored_sha:
                raise ValueError(f"{path}: corrupt record")
            db.labels.append(label)
            db.witnesses.append(witness)
    return db


def _load_database(n: int, k: int, db_dir: str) -> CosetDatabase | None:
    path = database_path(n, k, db_dir)
    if not os.path.exists(path):
        return None
    return load_database(path)
