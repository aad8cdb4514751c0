import random

import numpy as np
import pytest

from tcount_synth.channel import (ChannelMatrix, channel_of_unitary,
                                  channel_tensor, dense_channel_mul,
                                  is_clifford_channel, tcount_single_qubit)
from tcount_synth.circuits import parse_circuit, unitary_of_circuit
from tcount_synth.fixtures import random_circuit
from tcount_synth.ring import reduce_real
from tcount_synth.unitary import RingUnitary


def chan_of(text: str) -> ChannelMatrix:
    return channel_of_unitary(unitary_of_circuit(parse_circuit(text)))


def numpy_channel(u: RingUnitary) -> np.ndarray:
    """Independent float oracle for <U>_rs = Tr(P_r U P_s U^dag)/2^n."""
    from tests.test_pauli import dense_pauli
    n = u.n
    m = u.to_numpy()
    dim = 4 ** n
    out = np.empty((dim, dim))
    for r in range(dim):
        pr = dense_pauli(r, n)
        for s in range(dim):
            ps = dense_pauli(s, n)
            v = np.trace(pr @ m @ ps @ m.conj().T) / 2 ** n
            assert abs(v.imag) < 1e-9
            out[r, s] = v.real
    return out


class TestChannelOfUnitary:
    def test_identity(self):
        u = RingUnitary.identity(2)
        assert channel_of_unitary(u) == ChannelMatrix.identity(2)

    def test_t_gate_known_entries(self):
        c = chan_of("t 1")
        # rows/cols indexed I, X, Y, Z
        r = reduce_real
        assert c.entry(0, 0) == r(1, 0, 0)
        assert c.entry(1, 1) == r(1, 0, 1)
        assert c.entry(1, 2) == r(-1, 0, 1)
        assert c.entry(2, 1) == r(1, 0, 1)
        assert c.entry(2, 2) == r(1, 0, 1)
        assert c.entry(3, 3) == r(1, 0, 0)
        assert c.sde == 1

    @pytest.mark.parametrize("seed", range(5))
    def test_matches_float_oracle(self, seed):
        u = unitary_of_circuit(random_circuit(2, 4, seed))
        c = channel_of_unitary(u)
        assert np.allclose(c.to_numpy(), numpy_channel(u), atol=1e-8)

    def test_multiplicative(self):
        rng = random.Random(7)
        a = unitary_of_circuit(random_circuit(2, 3, 11))
        b = unitary_of_circuit(random_circuit(2, 3, 12))
        assert channel_of_unitary(a @ b) == \
            channel_of_unitary(a) @ channel_of_unitary(b)

    def test_kills_global_phase(self):
        # S*S*S*S = -I, same channel as identity
        c = chan_of("s 1\ns 1\ns 1\ns 1")
        assert c == ChannelMatrix.identity(1)

    def test_orthogonal(self):
        c = chan_of("h 1\nt 1\ncnot 1 2\nt 2")
        assert c @ c.transpose() == ChannelMatrix.identity(2)

    def test_rejects_non_unitary(self):
        u = RingUnitary.identity(1)
        bad = RingUnitary(1, u.a * 2, u.b, u.c, u.d, 0)
        with pytest.raises(ValueError):
            channel_of_unitary(bad)


class TestCliffordDetection:
    @pytest.mark.parametrize("text", ["h 1", "s 1", "h 1\ns 1",
                                      "cnot 1 2", "h 2\ncnot 2 1\nsdg 1"])
    def test_cliffords_are_signed_permutations(self, text):
        c = chan_of(text)
        assert c.sde == 0
        assert is_clifford_channel(c)

    @pytest.mark.parametrize("text", ["t 1", "h 1\nt 1", "t 2\ncnot 1 2"])
    def test_non_cliffords_are_not(self, text):
        assert not is_clifford_channel(chan_of(text))


class TestSingleQubitTheorem:
    def test_tcount_equals_sde(self):
        # T-count of a 1-qubit unitary is the sde of its channel
        assert tcount_single_qubit(unitary_of_circuit(
            parse_circuit("t 1"))) == 1
        assert tcount_single_qubit(unitary_of_circuit(
            parse_circuit("t 1\nh 1\nt 1"))) == 2
        assert tcount_single_qubit(unitary_of_circuit(
            parse_circuit("h 1"))) == 0


class TestAlgebra:
    def test_tensor_matches_kron_of_unitaries(self):
        a = unitary_of_circuit(parse_circuit("t 1"))
        b = unitary_of_circuit(parse_circuit("h 1\nt 1"))
        assert channel_tensor(channel_of_unitary(a), channel_of_unitary(b)) \
            == channel_of_unitary(a.kron(b))

    def test_dense_mul_alias(self):
        x = chan_of("t 1")
        y = chan_of("h 1\nt 1")
        assert dense_channel_mul(x, y) == x @ y

    def test_object_fallback_keeps_exactness(self):
        # repeated squaring blows past int64; values must stay exact
        c = chan_of("h 1\nt 1")
        acc = ChannelMatrix.identity(1)
        for _ in range(200):
            acc = acc @ c
        assert acc @ acc.transpose() == ChannelMatrix.identity(1)

    def test_eq_hash_digest_canonical(self):
        x = chan_of("t 1")
        y = chan_of("t 1")
        assert x == y and hash(x) == hash(y) and x.digest() == y.digest()
        assert x.fingerprint() == y.fingerprint()


class TestSerialization:
    def test_json_roundtrip(self):
        c = chan_of("t 1\nh 1\ncnot 1 2\nt 2")
        assert ChannelMatrix.from_json(c.to_json()) == c

    def test_unitary_json_roundtrip(self):
        u = unitary_of_circuit(random_circuit(2, 5, 3))
        assert RingUnitary.from_json(u.to_json()) == u
