"""Exact T-count synthesis for Clifford+T circuits.

Exposes exact ring arithmetic, Pauli algebra, channel representations,
the structured <R(P)> kernel, coset databases, the provable decision
procedure, and the heuristic synthesizer.
"""

from .channel import (ChannelMatrix, channel_of_unitary, channel_tensor,
                      dense_channel_mul, hamming_weight, is_clifford_channel,
                      sde_matrix, tcount_single_qubit)
from .circuits import (Circuit, Gate, circuit, clifford_mapping_circuit,
                       emit_circuit, parse_circuit, rp_circuit,
                       unitary_of_circuit)
from .coset import (CosetDatabase, CosetLabel, MemoryBudgetError,
                    build_databases, coset_label, db_lookup, label_compare,
                    load_database, save_database)
from .decomposition import Decomposition
from .fixtures import (adder4, fredkin, negated_toffoli, peres, quantum_or,
                       random_circuit, toffoli, toffoli_unitary, u1, u2)
from .heuristic import (FrontierCapError, HeuristicConfig,
                        HeuristicInconclusive, divide_select, min_t_synth,
                        subroutine_a)
from .pauli import (pauli_from_str, pauli_index, pauli_mul, pauli_str,
                    paulis_commute)
from .provable import (ProvableConfig, count_t_decide,
                       decomposition_from_decision, tcount_bruteforce)
from .ring import (ComplexRingElt, RealRingElt, halved_sum, reduce_complex,
                   reduce_real, ring_compare)
from .rp import RpCompact, expand, rp_compact, rp_inv, rp_inverse, rp_mult
from .unitary import RingUnitary

__version__ = "0.1.0"
