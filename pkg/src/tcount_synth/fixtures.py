"""Benchmark circuits and unitaries: reversible 3-qubit gates, the
4-qubit ripple adder fragment, tensor-product Toffoli chains, and
seed-reproducible random Clifford+T circuits."""

from __future__ import annotations

import random

from .circuits import Circuit, Gate, circuit, parse_circuit
from .ring import COMPLEX_ONE, COMPLEX_ZERO
from .unitary import RingUnitary

TOFFOLI_QC = """\
h 3
t 1
t 2
t 3
cnot 2 1
cnot 3 2
cnot 1 3
tdg 2
cnot 1 2
tdg 1
tdg 2
t 3
cnot 3 2
cnot 1 3
cnot 2 1
h 3
"""

FREDKIN_QC = """\
cnot 3 2
cnot 1 2
h 3
t 1
tdg 2
t 3
cnot 3 2
cnot 1 3
t 2
cnot 1 2
tdg 3
tdg 2
cnot 1 3
cnot 3 2
t 2
h 3
cnot 3 2
"""

PERES_QC = """\
t 1
t 2
h 3
cnot 3 2
tdg 2
cnot 1 3
cnot 1 2
tdg 3
cnot 1 3
t 2
t 3
cnot 3 2
tdg 2
h 3
"""

ADDER4_QC = """\
cnot 2 1
h 4
cnot 3 1
sdg 1
sdg 2
sdg 3
cnot 1 3
cnot 2 3
cnot 2 1
cnot 3 1
h 1
h 2
sdg 3
h 3
cnot 2 3
cnot 1 2
cnot 4 1
h 1
h 2
h 3
cnot 1 3
cnot 4 3
cnot 4 2
cnot 4 1
cnot 3 1
sdg 4
t 2
t 3
tdg 4
cnot 2 4
cnot 3 4
cnot 3 2
cnot 4 3
t 2
t 3
t 4
cnot 2 4
cnot 3 2
swap 1 2
h 4
t 1
cnot 1 2
cnot 2 1
swap 2 3
"""


def toffoli() -> Circuit:
    return parse_circuit(TOFFOLI_QC)


def fredkin() -> Circuit:
    return parse_circuit(FREDKIN_QC)


def peres() -> Circuit:
    return parse_circuit(PERES_QC)


def adder4() -> Circuit:
    return parse_circuit(ADDER4_QC)


def quantum_or() -> Circuit:
    """|a,b,c> -> |a,b,c xor (a or b)>: X-conjugated controls plus a
    target flip turn the Toffoli's AND into an OR."""
    pre = circuit(3, [("x", 1), ("x", 2)])
    post = circuit(3, [("x", 1), ("x", 2), ("x", 3)])
    return pre + toffoli() + post


def negated_toffoli() -> Circuit:
    """Toffoli controlled on both controls being zero."""
    flip = circuit(3, [("x", 1), ("x", 2)])
    return flip + toffoli() + flip


def permutation_unitary(n: int, perm) -> RingUnitary:
    """Unitary mapping basis state j to perm[j], entries 0 or 1."""
    dim = 2 ** n
    if sorted(perm) != list(range(dim)):
        raise ValueError("not a permutation of the basis states")
    entries = [[COMPLEX_ZERO] * dim for _ in range(dim)]
    for j, out in enumerate(perm):
        entries[out][j] = COMPLEX_ONE
    return RingUnitary.from_entries(n, entries)


def toffoli_unitary() -> RingUnitary:
    """|a,b,c> -> |a,b,c xor ab> directly as a permutation matrix."""
    perm = [j ^ 1 if j >> 1 == 3 else j for j in range(8)]
    return permutation_unitary(3, perm)


def u1() -> RingUnitary:
    """(TOF (x) I) (I (x) TOF) on 4 qubits."""
    tof = toffoli_unitary()
    eye = RingUnitary.identity(1)
    return tof.kron(eye) @ eye.kron(tof)


def u2() -> RingUnitary:
    """(TOF (x) I) (I (x) TOF) (TOF (x) I) on 4 qubits."""
    tof = toffoli_unitary()
    eye = RingUnitary.identity(1)
    a = tof.kron(eye)
    return a @ eye.kron(tof) @ a


_CLIFFORD_1Q = ("h", "s", "sdg", "x", "z")


def random_circuit(n: int, t_gates: int, seed: int) -> Circuit:
    """Exactly t_gates T gates separated by random Clifford gates."""
    rng = random.Random(seed)
    gates: list[Gate] = []

    def clifford_burst():
        for _ in range(rng.randint(1, 3)):
            if n > 1 and rng.random() < 0.5:
                c, t = rng.sample(range(1, n + 1), 2)
                gates.append(Gate("cnot", (c, t)))
            else:
                gates.append(Gate(rng.choice(_CLIFFORD_1Q),
                                  (rng.randint(1, n),)))

    for _ in range(t_gates):
        clifford_burst()
        gates.append(Gate("t", (rng.randint(1, n),)))
    clifford_burst()
    return Circuit(n, tuple(gates))


FIXTURE_CIRCUITS = {
    "toffoli": toffoli,
    "fredkin": fredkin,
    "peres": peres,
    "quantum_or": quantum_or,
    "negated_toffoli": negated_toffoli,
    "adder4": adder4,
}

FIXTURE_UNITARIES = {
    "u1": u1,
    "u2": u2,
}
