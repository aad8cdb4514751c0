"""A tour of the exact arithmetic underneath the synthesis algorithms.

Every matrix entry in this package lives in the ring Z[1/sqrt(2)]: an
integer combination (a + b*sqrt(2)) / sqrt(2)**k.  The key statistic is
the smallest denominator exponent (sde), the least k that still writes
the value exactly.  Run with:  python3 demos/exact_arithmetic_tour.py
"""

from tcount_synth import (ChannelMatrix, channel_of_unitary, parse_circuit,
                          reduce_real, unitary_of_circuit)


def main():
    x = reduce_real(2, 3, 3)
    print("(2 + 3*sqrt2)/sqrt2^3 reduces to", x, "with sde", x.sde)
    print("float check:", x.value())

    # the channel representation of a unitary is a real orthogonal matrix
    # over the same ring: entry (r, s) = Tr(P_r U P_s U^dag) / 2^n
    t = channel_of_unitary(unitary_of_circuit(parse_circuit("t 1")))
    print("\nchannel of a single T gate (rows I, X, Y, Z):")
    for r in range(4):
        print("  ", [str(t.entry(r, s)) for s in range(4)])
    print("sde of the T channel:", t.sde)

    # Clifford gates have sde 0: their channels are signed permutations
    h = channel_of_unitary(unitary_of_circuit(parse_circuit("h 1")))
    print("\nsde of the H channel:", h.sde, "- Clifford:", h.is_clifford())

    # for a single qubit the T-count is exactly the channel's sde
    w = channel_of_unitary(unitary_of_circuit(
        parse_circuit("t 1\nh 1\nt 1\nh 1\nt 1")))
    print("\nT-H-T-H-T channel sde (equals its T-count):", w.sde)

    # multiplication stays exact no matter how the denominators grow
    acc = ChannelMatrix.identity(1)
    for _ in range(200):
        acc = acc @ t
    print("\nafter 200 exact multiplies the matrix is still orthogonal:",
          acc @ acc.transpose() == ChannelMatrix.identity(1))


if __name__ == "__main__":
    main()
