"""Exact arithmetic over Z[1/sqrt(2)] and Z[i, 1/sqrt(2)].

A real element is stored as the canonical triple ``(a, b, k)`` meaning
``(a + b*sqrt(2)) / sqrt(2)**k`` where ``k`` is the smallest denominator
exponent (sde): either ``k == 0`` or ``a`` is odd.  The zero element is
``(0, 0, 0)``.  All integers are Python ints, so values never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass


def _sign_a_plus_b_sqrt2(a: int, b: int) -> int:
    """Exact sign of a + b*sqrt(2), without floating point."""
    if a == 0 and b == 0:
        return 0
    if a >= 0 and b >= 0:
        return 1
    if a <= 0 and b <= 0:
        return -1
    # mixed signs: |a| vs |b|*sqrt(2), settled by squaring
    if a > 0:
        return 1 if a * a > 2 * b * b else -1
    return -1 if a * a > 2 * b * b else 1


def reduce_real(a: int, b: int, k: int) -> "RealRingElt":
    """Canonicalize (a + b*sqrt(2)) / sqrt(2)**k so that k is the sde."""
    if k < 0:
        raise ValueError("denominator exponent must be non-negative")
    if a == 0 and b == 0:
        return RealRingElt(0, 0, 0)
    while k > 0 and a % 2 == 0:
        # (a + b*sqrt2)/sqrt2^k == (b + (a/2)*sqrt2)/sqrt2^(k-1)
        a, b = b, a // 2
        k -= 1
    return RealRingElt(a, b, k)


@dataclass(frozen=True, slots=True)
class RealRingElt:
    """Canonical element of Z[1/sqrt(2)].  Construct via :func:`reduce_real`."""

    a: int
    b: int
    k: int

    @property
    def sde(self) -> int:
        return self.k

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def raised(self, k: int) -> tuple[int, int]:
        """Numerator (a, b) when rewritten with denominator sqrt(2)**k."""
        if k < self.k:
            raise ValueError(f"cannot lower exponent below sde {self.k}")
        a, b = self.a, self.b
        for _ in range(k - self.k):
            a, b = 2 * b, a
        return a, b

    def compare(self, other: "RealRingElt") -> int:
        """-1, 0 or +1 according to exact real-value order."""
        k = max(self.k, other.k)
        a1, b1 = self.raised(k)
        a2, b2 = other.raised(k)
        return _sign_a_plus_b_sqrt2(a1 - a2, b1 - b2)

    def __lt__(self, other: "RealRingElt") -> bool:
        return self.compare(other) < 0

    def __le__(self, other: "RealRingElt") -> bool:
        return self.compare(other) <= 0

    def __neg__(self) -> "RealRingElt":
        return RealRingElt(-self.a, -self.b, self.k)

    def __add__(self, other: "RealRingElt") -> "RealRingElt":
        k = max(self.k, other.k)
        a1, b1 = self.raised(k)
        a2, b2 = other.raised(k)
        return reduce_real(a1 + a2, b1 + b2, k)

    def __sub__(self, other: "RealRingElt") -> "RealRingElt":
        return self + (-other)

    def __mul__(self, other: "RealRingElt") -> "RealRingElt":
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return reduce_real(a1 * a2 + 2 * b1 * b2, a1 * b2 + b1 * a2, self.k + other.k)

    def value(self) -> float:
        """Floating approximation, for diagnostics only."""
        return (self.a + self.b * 2 ** 0.5) / 2 ** (self.k / 2)

    def as_triple(self) -> list[int]:
        return [self.a, self.b, self.k]

    def __str__(self) -> str:
        return f"({self.a}{self.b:+}*sqrt2)/sqrt2^{self.k}"


REAL_ZERO = RealRingElt(0, 0, 0)
REAL_ONE = RealRingElt(1, 0, 0)


def sde_real(x: RealRingElt) -> int:
    return x.k


def halved_sum(q: RealRingElt, r: RealRingElt, sign: int = 1) -> RealRingElt:
    """Canonical (q + sign*r)/sqrt(2).

    If sde(q) != sde(r) the result has sde max(sde(q), sde(r)) + 1; if the
    sdes are equal and positive it is at most sde(q).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    k = max(q.k, r.k)
    a1, b1 = q.raised(k)
    a2, b2 = r.raised(k)
    return reduce_real(a1 + sign * a2, b1 + sign * b2, k + 1)


def ring_compare(q: RealRingElt, r: RealRingElt) -> int:
    """Total order on Z[1/sqrt(2)] by exact real value: -1, 0 or +1."""
    return q.compare(r)


def reduce_complex(a: int, b: int, c: int, d: int, k: int) -> "ComplexRingElt":
    """Canonicalize (a + b*i + c*sqrt(2) + d*i*sqrt(2)) / sqrt(2)**k."""
    if k < 0:
        raise ValueError("denominator exponent must be non-negative")
    if a == 0 and b == 0 and c == 0 and d == 0:
        return ComplexRingElt(0, 0, 0, 0, 0)
    while k > 0 and a % 2 == 0 and b % 2 == 0:
        a, b, c, d = c, d, a // 2, b // 2
        k -= 1
    return ComplexRingElt(a, b, c, d, k)


@dataclass(frozen=True, slots=True)
class ComplexRingElt:
    """Canonical element of Z[i, 1/sqrt(2)].  Construct via :func:`reduce_complex`."""

    a: int
    b: int
    c: int
    d: int
    k: int

    @property
    def sde(self) -> int:
        return self.k

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    def raised(self, k: int) -> tuple[int, int, int, int]:
        if k < self.k:
            raise ValueError(f"cannot lower exponent below sde {self.k}")
        a, b, c, d = self.a, self.b, self.c, self.d
        for _ in range(k - self.k):
            a, b, c, d = 2 * c, 2 * d, a, b
        return a, b, c, d

    def __neg__(self) -> "ComplexRingElt":
        return ComplexRingElt(-self.a, -self.b, -self.c, -self.d, self.k)

    def __add__(self, other: "ComplexRingElt") -> "ComplexRingElt":
        k = max(self.k, other.k)
        x = self.raised(k)
        y = other.raised(k)
        return reduce_complex(*(p + q for p, q in zip(x, y)), k)

    def __sub__(self, other: "ComplexRingElt") -> "ComplexRingElt":
        return self + (-other)

    def __mul__(self, other: "ComplexRingElt") -> "ComplexRingElt":
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        a = a1 * a2 - b1 * b2 + 2 * c1 * c2 - 2 * d1 * d2
        b = a1 * b2 + b1 * a2 + 2 * c1 * d2 + 2 * d1 * c2
        c = a1 * c2 + c1 * a2 - b1 * d2 - d1 * b2
        d = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2
        return reduce_complex(a, b, c, d, self.k + other.k)

    def conj(self) -> "ComplexRingElt":
        return ComplexRingElt(self.a, -self.b, self.c, -self.d, self.k)

    def times_i_power(self, e: int) -> "ComplexRingElt":
        """Multiply by i**e (e taken mod 4) without a full ring product."""
        a, b, c, d = self.a, self.b, self.c, self.d
        for _ in range(e % 4):
            a, b, c, d = -b, a, -d, c
        return ComplexRingElt(a, b, c, d, self.k)

    def real(self) -> RealRingElt:
        return reduce_real(self.a, self.c, self.k)

    def imag(self) -> RealRingElt:
        return reduce_real(self.b, self.d, self.k)

    def value(self) -> complex:
        s = 2 ** 0.5
        return complex(self.a + self.c * s, self.b + self.d * s) / s ** self.k

    def as_tuple5(self) -> list[int]:
        return [self.a, self.b, self.c, self.d, self.k]


COMPLEX_ZERO = ComplexRingElt(0, 0, 0, 0, 0)
COMPLEX_ONE = ComplexRingElt(1, 0, 0, 0, 0)
COMPLEX_I = ComplexRingElt(0, 1, 0, 0, 0)
# e^{i*pi/4} = (1 + i)/sqrt(2)
OMEGA = ComplexRingElt(1, 1, 0, 0, 1)


def c_add(x: ComplexRingElt, y: ComplexRingElt) -> ComplexRingElt:
    return x + y


def c_mul(x: ComplexRingElt, y: ComplexRingElt) -> ComplexRingElt:
    return x * y


def c_conj(x: ComplexRingElt) -> ComplexRingElt:
    return x.conj()


def c_reduce(a: int, b: int, c: int, d: int, k: int) -> ComplexRingElt:
    return reduce_complex(a, b, c, d, k)
