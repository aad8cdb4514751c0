"""Exact N x N unitaries with entries in Z[i, 1/sqrt(2)].

The whole matrix is kept over a common denominator sqrt(2)**k: four
integer numpy arrays (object dtype, so arbitrary precision) hold the
coefficients of 1, i, sqrt(2) and i*sqrt(2).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .pauli import apply_pauli
from .ring import ComplexRingElt, reduce_complex

def _zeros(shape) -> np.ndarray:
    m = np.empty(shape, dtype=object)
    m[...] = 0
    return m


@dataclass(frozen=True)
class RingUnitary:
    """N x N matrix over Z[i, 1/sqrt(2)] with a common denominator exponent."""

    n: int
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray
    k: int

    @property
    def dim(self) -> int:
        return 2 ** self.n

    @staticmethod
    def identity(n: int) -> "RingUnitary":
        dim = 2 ** n
        a = _zeros((dim, dim))
        for i in range(dim):
            a[i, i] = 1
        return RingUnitary(n, a, _zeros((dim, dim)), _zeros((dim, dim)),
                           _zeros((dim, dim)), 0)

    @staticmethod
    def from_entries(n: int, entries) -> "RingUnitary":
        """Build from a grid of ComplexRingElt (or [a,b,c,d,k] 5-tuples)."""
        dim = 2 ** n
        grid = [[e if isinstance(e, ComplexRingElt) else reduce_complex(*e)
                 for e in row] for row in entries]
        if len(grid) != dim or any(len(row) != dim for row in grid):
            raise ValueError(f"expected a {dim}x{dim} grid")
        k = max(e.k for row in grid for e in row)
        comps = [_zeros((dim, dim)) for _ in range(4)]
        for i, row in enumerate(grid):
            for j, e in enumerate(row):
                for comp, v in zip(comps, e.raised(k)):
                    comp[i, j] = v
        return RingUnitary(n, *comps, k)._reduced()

    def _reduced(self) -> "RingUnitary":
        a, b, c, d, k = self.a, self.b, self.c, self.d, self.k
        if not (np.any(a) or np.any(b) or np.any(c) or np.any(d)):
            return RingUnitary(self.n, a, b, c, d, 0)
        while k > 0 and not np.any(a % 2) and not np.any(b % 2):
            a, b, c, d = c, d, a // 2, b // 2
            k -= 1
        return RingUnitary(self.n, a, b, c, d, k)

    def entry(self, i: int, j: int) -> ComplexRingElt:
        return reduce_complex(int(self.a[i, j]), int(self.b[i, j]),
                              int(self.c[i, j]), int(self.d[i, j]), self.k)

    def __matmul__(self, other: "RingUnitary") -> "RingUnitary":
        if self.n != other.n:
            raise ValueError("qubit-count mismatch")
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        a = a1 @ a2 - b1 @ b2 + 2 * (c1 @ c2) - 2 * (d1 @ d2)
        b = a1 @ b2 + b1 @ a2 + 2 * (c1 @ d2) + 2 * (d1 @ c2)
        c = a1 @ c2 + c1 @ a2 - b1 @ d2 - d1 @ b2
        d = a1 @ d2 + d1 @ a2 + b1 @ c2 + c1 @ b2
        return RingUnitary(self.n, a, b, c, d, self.k + other.k)._reduced()

    def dagger(self) -> "RingUnitary":
        return RingUnitary(self.n, self.a.T.copy(), -self.b.T, self.c.T.copy(),
                           -self.d.T, self.k)

    def kron(self, other: "RingUnitary") -> "RingUnitary":
        """Tensor product self (most significant qubits) with other."""
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        a = np.kron(a1, a2) + 2 * np.kron(c1, c2) \
            - np.kron(b1, b2) - 2 * np.kron(d1, d2)
        b = np.kron(a1, b2) + np.kron(b1, a2) \
            + 2 * np.kron(c1, d2) + 2 * np.kron(d1, c2)
        c = np.kron(a1, c2) + np.kron(c1, a2) \
            - np.kron(b1, d2) - np.kron(d1, b2)
        d = np.kron(a1, d2) + np.kron(d1, a2) \
            + np.kron(b1, c2) + np.kron(c1, b2)
        return RingUnitary(self.n + other.n, a, b, c, d,
                           self.k + other.k)._reduced()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingUnitary):
            return NotImplemented
        return (self.n == other.n and self.k == other.k
                and np.array_equal(self.a, other.a)
                and np.array_equal(self.b, other.b)
                and np.array_equal(self.c, other.c)
                and np.array_equal(self.d, other.d))

    def is_identity(self) -> bool:
        return self == RingUnitary.identity(self.n)

    def is_unitary(self) -> bool:
        return (self @ self.dagger()).is_identity()

    def pauli_conjugate_rows(self, p: int) -> "RingUnitary":
        """Left-multiply by the Pauli P_p (a signed permutation of rows)."""
        dim = self.dim
        comps = [_zeros((dim, dim)) for _ in range(4)]
        for j in range(dim):
            e, out = apply_pauli(p, j, self.n)
            # row `out` of the product is i^e times row j of self
            row = (self.a[j], self.b[j], self.c[j], self.d[j])
            a, b, c, d = row
            for _ in range(e):
                a, b, c, d = -b, a, -d, c
            comps[0][out], comps[1][out], comps[2][out], comps[3][out] = a, b, c, d
        return RingUnitary(self.n, *comps, self.k)

    def to_json_dict(self) -> dict:
        dim = self.dim
        return {
            "n": self.n,
            "entries": [[self.entry(i, j).as_tuple5() for j in range(dim)]
                        for i in range(dim)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def from_json_dict(data: dict) -> "RingUnitary":
        return RingUnitary.from_entries(int(data["n"]), data["entries"])

    @staticmethod
    def from_json(text: str) -> "RingUnitary":
        return RingUnitary.from_json_dict(json.loads(text))

    def to_numpy(self) -> np.ndarray:
        """Floating-point rendering, for diagnostics only."""
        s = 2 ** 0.5
        return ((self.a.astype(float) + s * self.c.astype(float))
                + 1j * (self.b.astype(float) + s * self.d.astype(float))) / s ** self.k
