"""Gate-list circuits, exact circuit unitaries, and R(P) conjugators.

Text format: one gate per line, lowercase mnemonic followed by 1-based
qubit operands ("h 1", "t 2", "cnot 1 3"); "#" starts a comment and blank
lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .pauli import pauli_digits
from .ring import ComplexRingElt
from .unitary import RingUnitary

GATE_KINDS = {"h": 1, "t": 1, "tdg": 1, "s": 1, "sdg": 1,
              "x": 1, "y": 1, "z": 1, "cnot": 2, "swap": 2}

_C = ComplexRingElt
_0 = _C(0, 0, 0, 0, 0)
_1 = _C(1, 0, 0, 0, 0)
_i = _C(0, 1, 0, 0, 0)
_omega = _C(1, 1, 0, 0, 1)        # e^{i pi/4}
_inv_sqrt2 = _C(1, 0, 0, 0, 1)    # 1/sqrt2

_GATE_MATRICES_1Q = {
    "h": [[_inv_sqrt2, _inv_sqrt2], [_inv_sqrt2, -_inv_sqrt2]],
    "t": [[_1, _0], [_0, _omega]],
    "tdg": [[_1, _0], [_0, _omega.conj()]],
    "s": [[_1, _0], [_0, _i]],
    "sdg": [[_1, _0], [_0, -_i]],
    "x": [[_0, _1], [_1, _0]],
    "y": [[_0, -_i], [_i, _0]],
    "z": [[_1, _0], [_0, -_1]],
}

_INVERSE = {"h": "h", "s": "sdg", "sdg": "s", "t": "tdg", "tdg": "t",
            "x": "x", "y": "y", "z": "z", "cnot": "cnot", "swap": "swap"}


@dataclass(frozen=True)
class Gate:
    kind: str
    qubits: tuple[int, ...]

    def __str__(self):
        return " ".join([self.kind, *map(str, self.qubits)])


@dataclass(frozen=True)
class Circuit:
    """Gates in chronological (left-to-right) application order."""

    n: int
    gates: tuple[Gate, ...]

    def __post_init__(self):
        for g in self.gates:
            if g.kind not in GATE_KINDS:
                raise ValueError(f"unknown gate {g.kind!r}")
            if len(g.qubits) != GATE_KINDS[g.kind]:
                raise ValueError(f"{g.kind} takes {GATE_KINDS[g.kind]} operand(s)")
            if any(not 1 <= q <= self.n for q in g.qubits):
                raise ValueError(f"qubit out of range in {g}")
            if len(set(g.qubits)) != len(g.qubits):
                raise ValueError(f"repeated operand in {g}")

    def inverse(self) -> "Circuit":
        return Circuit(self.n, tuple(Gate(_INVERSE[g.kind], g.qubits)
                                     for g in reversed(self.gates)))

    def __add__(self, other: "Circuit") -> "Circuit":
        if self.n != other.n:
            raise ValueError("qubit-count mismatch")
        return Circuit(self.n, self.gates + other.gates)

    def t_gate_count(self) -> int:
        return sum(1 for g in self.gates if g.kind in ("t", "tdg"))

    def to_text(self) -> str:
        return "".join(f"{g}\n" for g in self.gates)


def circuit(n: int, gates) -> Circuit:
    """Convenience constructor from (kind, *qubits) tuples."""
    return Circuit(n, tuple(Gate(g[0], tuple(g[1:])) for g in gates))


def parse_circuit(text: str) -> Circuit:
    """Parse the text format; the qubit count is the largest operand seen."""
    gates = []
    n = 1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0].lower()
        if kind not in GATE_KINDS:
            raise ValueError(f"line {lineno}: unknown gate {kind!r}")
        try:
            qubits = tuple(int(p) for p in parts[1:])
        except ValueError:
            raise ValueError(f"line {lineno}: bad operand in {line!r}") from None
        if len(qubits) != GATE_KINDS[kind]:
            raise ValueError(f"line {lineno}: {kind} takes "
                             f"{GATE_KINDS[kind]} operand(s)")
        if any(q < 1 for q in qubits):
            raise ValueError(f"line {lineno}: qubits are 1-based")
        n = max(n, *qubits)
        gates.append(Gate(kind, qubits))
    return Circuit(n, tuple(gates))


@lru_cache(maxsize=None)
def gate_unitary(kind: str, qubits: tuple[int, ...], n: int) -> RingUnitary:
    """Exact N x N unitary of one gate embedded on the given qubits."""
    dim = 2 ** n
    if GATE_KINDS[kind] == 1:
        (q,) = qubits
        g = _GATE_MATRICES_1Q[kind]
        entries = [[_0] * dim for _ in range(dim)]
        for row in range(dim):
            bit = (row >> (n - q)) & 1
            for gbit in (0, 1):
                col = row ^ ((bit ^ gbit) << (n - q))
                if not g[bit][gbit].is_zero():
                    entries[row][col] = g[bit][gbit]
        return RingUnitary.from_entries(n, entries)
    # two-qubit permutation gates
    c, t = qubits
    entries = [[_0] * dim for _ in range(dim)]
    for col in range(dim):
        cb = (col >> (n - c)) & 1
        tb = (col >> (n - t)) & 1
        if kind == "cnot":
            row = col ^ ((cb & 1) << (n - t))
        elif kind == "swap":
            row = col ^ (((cb ^ tb) << (n - c)) | ((cb ^ tb) << (n - t)))
        else:
            raise AssertionError(kind)
        entries[row][col] = _1
    return RingUnitary.from_entries(n, entries)


def unitary_of_circuit(c: Circuit) -> RingUnitary:
    """Exact product of the gate matrices in application order."""
    u = RingUnitary.identity(c.n)
    for g in c.gates:
        u = gate_unitary(g.kind, g.qubits, c.n) @ u
    return u


# single-qubit conjugators mapping Z to each non-identity Pauli
_Z_TO = {1: ("h",), 2: ("h", "s"), 3: ()}  # chronological gate order; V Z V^dag = P


def clifford_mapping_circuit(p: int, n: int, q: int) -> Circuit:
    """Clifford circuit C with C Z_(q) C^dag = P_p exactly.

    The target qubit q must carry a non-identity digit of P.
    """
    if p == 0:
        raise ValueError("no conjugator for the identity Pauli")
    digits = pauli_digits(p, n)
    if digits[q - 1] == 0:
        raise ValueError(f"qubit {q} is not in the support of the Pauli")
    support = [j + 1 for j, d in enumerate(digits) if d != 0]
    gates: list[Gate] = []
    # CNOT fan-in first: conjugating Z_(q) collects a Z on every support qubit
    for j in support:
        if j != q:
            gates.append(Gate("cnot", (j, q)))
    # then per-qubit rotations send each Z to the required digit
    for j in support:
        for kind in _Z_TO[digits[j - 1]]:
            gates.append(Gate(kind, (j,)))
    return Circuit(n, tuple(gates))


def rp_circuit(p: int, n: int) -> Circuit:
    """Circuit for R(P) = C T_(q) C^dag with exactly one T gate."""
    digits = pauli_digits(p, n)
    q = next(j + 1 for j, d in enumerate(digits) if d != 0)
    conj = clifford_mapping_circuit(p, n, q)
    return conj.inverse() + Circuit(n, (Gate("t", (q,)),)) + conj


def emit_circuit(paulis, n: int) -> Circuit:
    """Circuit fragment for R(P_t)...R(P_1), given paulis = [P_t, ..., P_1].

    The fragment together with the terminal Clifford channel reproduces the
    synthesized unitary; it contains exactly one T gate per Pauli.
    """
    frag = Circuit(n, ())
    for p in reversed(list(paulis)):  # P_1 is applied first chronologically
        frag = frag + rp_circuit(p, n)
    return frag
