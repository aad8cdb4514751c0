"""Exact T-count decisions from shallow coset databases.

A database level D_k holds one canonical label per left Clifford coset
reachable with exactly k rotations.  The decision procedure looks a
channel up directly for small T-counts and peels database witnesses off
the left to reach larger ones, so answering "is the T-count at most m?"
only ever needs databases of depth ceil(m/c).
Run with:  python3 demos/provable_decision.py
"""

from tcount_synth import (ProvableConfig, build_databases, channel_of_unitary,
                          count_t_decide, decomposition_from_decision,
                          parse_circuit, tcount_bruteforce,
                          unitary_of_circuit)


def chan_of(text):
    return channel_of_unitary(unitary_of_circuit(parse_circuit(text)))


def main():
    dbs = build_databases(1, 3)
    print("single-qubit database sizes per T-count level:",
          [len(db) for db in dbs])

    w = chan_of("t 1\nh 1\nt 1\nh 1\nt 1\nh 1\nt 1\nh 1\nt 1")
    print("\ndeciding a 5-T single-qubit unitary with bound m=6:")
    for c in (2, 3, 4):
        cfg = ProvableConfig(m=6, c=c)
        t = count_t_decide(w, cfg)
        print(f"  c={c} (database depth {cfg.depth}): T-count = {t}")

    print("with bound m=3 the answer is a definite NO:",
          count_t_decide(w, ProvableConfig(m=3)))

    # a two-qubit example: controlled-S costs exactly 3 T gates
    cs = chan_of("t 1\nt 2\ncnot 1 2\ntdg 2\ncnot 1 2")
    t = count_t_decide(cs, ProvableConfig(m=4))
    print("\ncontrolled-S T-count:", t,
          "(brute force agrees:", tcount_bruteforce(cs, 4), ")")

    d = decomposition_from_decision(cs, t, ProvableConfig(m=4))
    print("recovered rotation axes:", " ".join(d.pauli_strings()))
    print("exact reconstruction check:", d.verify(cs))


if __name__ == "__main__":
    main()
