import numpy as np
import pytest

from tcount_synth.channel import ChannelMatrix, channel_of_unitary
from tcount_synth.circuits import (Circuit, Gate, circuit,
                                   clifford_mapping_circuit, emit_circuit,
                                   gate_unitary, parse_circuit, rp_circuit,
                                   unitary_of_circuit)
from tcount_synth.decomposition import Decomposition
from tcount_synth.fixtures import (adder4, fredkin, negated_toffoli, peres,
                                   permutation_unitary, quantum_or,
                                   random_circuit, toffoli, toffoli_unitary,
                                   u1, u2)
from tcount_synth.pauli import pauli_from_str, pauli_str
from tcount_synth.rp import expand, rp_compact
from tcount_synth.unitary import RingUnitary


class TestParsing:
    def test_basic(self):
        c = parse_circuit("h 1\ncnot 1 3\n# comment\n\nt 2  # trailing\n")
        assert c.n == 3
        assert [str(g) for g in c.gates] == ["h 1", "cnot 1 3", "t 2"]

    def test_roundtrip(self):
        c = random_circuit(3, 6, 42)
        assert parse_circuit(c.to_text()) == c

    @pytest.mark.parametrize("text", ["q 1", "cnot 1", "h 0", "cnot 2 2",
                                      "t x"])
    def test_rejects_malformed(self, text):
        with pytest.raises(ValueError):
            parse_circuit(text)


class TestUnitaryOfCircuit:
    def test_empty_is_identity(self):
        assert unitary_of_circuit(Circuit(2, ())).is_identity()

    def test_hh_is_identity(self):
        assert unitary_of_circuit(parse_circuit("h 1\nh 1")).is_identity()

    def test_tt_is_s(self):
        assert unitary_of_circuit(parse_circuit("t 1\nt 1")) == \
            unitary_of_circuit(parse_circuit("s 1"))

    def test_tdg_is_t_seventh(self):
        t7 = parse_circuit("\n".join(["t 1"] * 7))
        assert channel_of_unitary(unitary_of_circuit(t7)) == \
            channel_of_unitary(unitary_of_circuit(parse_circuit("tdg 1")))

    def test_swap_is_three_cnots(self):
        assert unitary_of_circuit(parse_circuit("swap 1 2")) == \
            unitary_of_circuit(parse_circuit("cnot 1 2\ncnot 2 1\ncnot 1 2"))

    def test_all_gates_unitary(self):
        for kind, arity in (("h", 1), ("t", 1), ("tdg", 1), ("s", 1),
                            ("sdg", 1), ("x", 1), ("y", 1), ("z", 1)):
            assert gate_unitary(kind, (1,), 2).is_unitary()
        assert gate_unitary("cnot", (2, 1), 2).is_unitary()
        assert gate_unitary("swap", (1, 2), 2).is_unitary()

    def test_inverse_circuit(self):
        c = random_circuit(2, 5, 9)
        assert unitary_of_circuit(c + c.inverse()).is_identity()


class TestFixtures:
    def test_toffoli_circuit_matches_permutation(self):
        # equality at the channel level resolves the global phase
        assert channel_of_unitary(unitary_of_circuit(toffoli())) == \
            channel_of_unitary(toffoli_unitary())

    def test_toffoli_action(self):
        m = toffoli_unitary().to_numpy()
        for a in range(2):
            for b in range(2):
                for c in range(2):
                    src = (a << 2) | (b << 1) | c
                    dst = (a << 2) | (b << 1) | (c ^ (a & b))
                    assert m[dst, src] == pytest.approx(1)

    def test_fredkin_is_controlled_swap(self):
        perm = []
        for j in range(8):
            a, b, c = (j >> 2) & 1, (j >> 1) & 1, j & 1
            if a:
                b, c = c, b
            perm.append((a << 2) | (b << 1) | c)
        assert channel_of_unitary(unitary_of_circuit(fredkin())) == \
            channel_of_unitary(permutation_unitary(3, perm))

    def test_peres_is_toffoli_then_cnot(self):
        # |a,b,c> -> |a, b xor a, c xor ab|
        perm = []
        for j in range(8):
            a, b, c = (j >> 2) & 1, (j >> 1) & 1, j & 1
            perm.append((a << 2) | ((b ^ a) << 1) | (c ^ (a & b)))
        assert channel_of_unitary(unitary_of_circuit(peres())) == \
            channel_of_unitary(permutation_unitary(3, perm))

    def test_quantum_or_action(self):
        perm = []
        for j in range(8):
            a, b, c = (j >> 2) & 1, (j >> 1) & 1, j & 1
            perm.append((a << 2) | (b << 1) | (c ^ (a | b)))
        assert channel_of_unitary(unitary_of_circuit(quantum_or())) == \
            channel_of_unitary(permutation_unitary(3, perm))

    def test_negated_toffoli_action(self):
        perm = []
        for j in range(8):
            a, b, c = (j >> 2) & 1, (j >> 1) & 1, j & 1
            perm.append((a << 2) | (b << 1) | (c ^ ((1 - a) & (1 - b))))
        assert channel_of_unitary(unitary_of_circuit(negated_toffoli())) == \
            channel_of_unitary(permutation_unitary(3, perm))

    def test_adder4_is_permutation_with_7_t_gates(self):
        c = adder4()
        assert c.n == 4
        assert c.t_gate_count() == 7
        m = unitary_of_circuit(c).to_numpy()
        absm = np.abs(m)
        assert np.allclose(np.sort(absm, axis=0)[-1], 1, atol=1e-9)
        assert ((absm > 0.5).sum(axis=0) == 1).all()
        assert ((absm > 0.5).sum(axis=1) == 1).all()

    def test_u2_definition(self):
        tof = toffoli_unitary()
        eye = RingUnitary.identity(1)
        a = tof.kron(eye)
        assert u2() == a @ eye.kron(tof) @ a
        assert u1() == a @ eye.kron(tof)

    def test_random_circuit_deterministic(self):
        assert random_circuit(2, 10, 5) == random_circuit(2, 10, 5)
        assert random_circuit(2, 10, 5).t_gate_count() == 10


class TestCliffordMapping:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_conjugation_identity_exhaustive(self, n):
        # C Z_(q) C^dag = P for every non-identity P, checked as matrices
        z_single = unitary_of_circuit(parse_circuit("z 1"))
        from tests.test_pauli import dense_pauli
        for p in range(1, 4 ** n):
            digits = [d for d in range(n)]
            from tcount_synth.pauli import pauli_digits
            q = next(j + 1 for j, d in enumerate(pauli_digits(p, n)) if d)
            c = clifford_mapping_circuit(p, n, q)
            cu = unitary_of_circuit(c)
            zq = _embedded_z(q, n)
            lhs = cu @ zq @ cu.dagger()
            assert np.allclose(lhs.to_numpy(), dense_pauli(p, n), atol=1e-9)

    def test_identity_pauli_rejected(self):
        with pytest.raises(ValueError):
            clifford_mapping_circuit(0, 2, 1)

    def test_unsupported_qubit_rejected(self):
        p, n = pauli_from_str("IZ")
        with pytest.raises(ValueError):
            clifford_mapping_circuit(p, n, 1)


def _embedded_z(q: int, n: int) -> RingUnitary:
    return unitary_of_circuit(Circuit(n, (Gate("z", (q,)),)))


class TestEmit:
    def test_rp_circuit_has_one_t(self):
        for n in (1, 2):
            for p in range(1, 4 ** n):
                c = rp_circuit(p, n)
                assert c.t_gate_count() == 1
                assert channel_of_unitary(unitary_of_circuit(c)) == \
                    expand(rp_compact(p, n))

    def test_emit_roundtrip(self):
        # decomposition -> circuit fragment -> channel x clifford = <U>
        paulis = tuple(pauli_from_str(s)[0] for s in ("ZX", "IY", "XZ"))
        n = 2
        d = Decomposition(paulis, ChannelMatrix.identity(n))
        frag = emit_circuit(d.paulis, n)
        assert frag.t_gate_count() == 3
        assert channel_of_unitary(unitary_of_circuit(frag)) @ d.clifford \
            == d.reconstruct()

    def test_empty_emit(self):
        assert emit_circuit((), 2) == Circuit(2, ())
