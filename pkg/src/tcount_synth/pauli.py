"""n-qubit Pauli operators as base-4 indices, with exact phase tracking.

Digit convention: I, X, Y, Z -> 0, 1, 2, 3 with qubit 1 the most
significant digit, so index 0 is always the identity string.  Phases are
powers of i, carried as an exponent in {0, 1, 2, 3}.
"""

from __future__ import annotations

PAULI_CHARS = "IXYZ"

# _MUL_TABLE[p][q] = (phase exponent e, digit r) with P_p P_q = i^e P_r
_MUL_TABLE = (
    ((0, 0), (0, 1), (0, 2), (0, 3)),
    ((0, 1), (0, 0), (1, 3), (3, 2)),
    ((0, 2), (3, 3), (0, 0), (1, 1)),
    ((0, 3), (1, 2), (3, 1), (0, 0)),
)


def pauli_digits(index: int, n: int) -> tuple[int, ...]:
    """Base-4 digits of a Pauli index, qubit 1 first."""
    if not 0 <= index < 4 ** n:
        raise ValueError(f"Pauli index {index} out of range for n={n}")
    digits = []
    for _ in range(n):
        digits.append(index % 4)
        index //= 4
    return tuple(reversed(digits))


def pauli_index(digits: tuple[int, ...] | list[int]) -> int:
    idx = 0
    for d in digits:
        if not 0 <= d <= 3:
            raise ValueError(f"bad Pauli digit {d}")
        idx = 4 * idx + d
    return idx


def pauli_str(index: int, n: int) -> str:
    return "".join(PAULI_CHARS[d] for d in pauli_digits(index, n))


def pauli_from_str(s: str) -> tuple[int, int]:
    """Parse a string like "IZYX" into (index, n)."""
    try:
        digits = [PAULI_CHARS.index(ch) for ch in s.upper()]
    except ValueError:
        raise ValueError(f"invalid Pauli string {s!r}") from None
    if not digits:
        raise ValueError("empty Pauli string")
    return pauli_index(digits), len(digits)


def pauli_mul(p: int, q: int, n: int) -> tuple[int, int]:
    """Return (e, r) with P_p P_q = i^e P_r, computed digit-wise."""
    phase = 0
    r = 0
    shift = 4 ** (n - 1)
    pp, qq = p, q
    if not (0 <= p < 4 ** n and 0 <= q < 4 ** n):
        raise ValueError("Pauli index out of range")
    for _ in range(n):
        dp, pp = divmod(pp, shift)
        dq, qq = divmod(qq, shift)
        e, d = _MUL_TABLE[dp][dq]
        phase += e
        r = 4 * r + d
        shift //= 4
        if shift == 0:
            break
    return phase % 4, r


def paulis_commute(p: int, q: int, n: int) -> bool:
    """True iff P_p and P_q commute (even number of anticommuting digits)."""
    anti = 0
    for dp, dq in zip(pauli_digits(p, n), pauli_digits(q, n)):
        if dp != 0 and dq != 0 and dp != dq:
            anti += 1
    return anti % 2 == 0


# single-qubit action on |0>, |1>: _APPLY[digit][bit] = (phase exp, out bit)
_APPLY = (
    ((0, 0), (0, 1)),        # I
    ((0, 1), (0, 0)),        # X
    ((1, 1), (3, 0)),        # Y:  Y|0> = i|1>,  Y|1> = -i|0>
    ((0, 0), (2, 1)),        # Z
)


def apply_pauli(p: int, basis_index: int, n: int) -> tuple[int, int]:
    """P_p |basis_index> = i^e |out>; basis bit of qubit 1 is most significant."""
    if not 0 <= basis_index < 2 ** n:
        raise ValueError(f"basis index {basis_index} out of range for n={n}")
    digits = pauli_digits(p, n)
    phase = 0
    out = 0
    for j, d in enumerate(digits):
        bit = (basis_index >> (n - 1 - j)) & 1
        e, ob = _APPLY[d][bit]
        phase += e
        out |= ob << (n - 1 - j)
    return phase % 4, out
