// Copyright 2026 The surfdec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

#include "surfdec/layout.hpp"
#include "surfdec/rng.hpp"

namespace surfdec {

struct NoiseParams {
    double p = 0.0;
};

// Pauli payload as an (x,z) bit pair: 0=I, 1=X, 2=Z, 3=Y.
using Pauli = uint8_t;
constexpr Pauli kPauliI = 0;
constexpr Pauli kPauliX = 1;
constexpr Pauli kPauliZ = 2;
constexpr Pauli kPauliY = 3;

/// Per-round data-qubit error record. `x_cum[j]` is the accumulated X frame
/// on the data qubits at the time the round-(j+1) stabilizers are measured;
/// `x_chg` holds the round-to-round differences (round 1 difference equals
/// round 1 cumulative). Idle faults occurring in the measurement/reset window
/// after round j first appear in round j+1, aligned with the round that can
/// detect them.
struct ErrorVolume {
    int dm = 0;
    int num_qubits = 0;
    std::vector<uint8_t> x_cum, z_cum; // [dm][num_qubits]
    std::vector<uint8_t> x_chg, z_chg;

    uint8_t cum(StabType basis, int round, int qubit) const {
        const auto& v = basis == StabType::X ? x_cum : z_cum;
        return v[static_cast<size_t>(round - 1) * num_qubits + qubit];
    }
    uint8_t chg(StabType basis, int round, int qubit) const {
        const auto& v = basis == StabType::X ? x_chg : z_chg;
        return v[static_cast<size_t>(round - 1) * num_qubits + qubit];
    }
};

/// Raw outcomes and their round differences. `raw_x` holds the syndromes for
/// X errors, i.e. the Z-stabilizer measurement record; `raw_z` the X-stabilizer
/// record. Difference round 1 equals raw round 1.
struct SyndromeVolume {
    int dm = 0;
    int num_z_stabs = 0; // width of raw_x rows
    int num_x_stabs = 0; // width of raw_z rows
    std::vector<uint8_t> raw_x, raw_z;
    std::vector<uint8_t> diff_x, diff_z;

    int stab_count(StabType error_basis) const {
        return error_basis == StabType::X ? num_z_stabs : num_x_stabs;
    }
    uint8_t raw(StabType error_basis, int round, int stab) const {
        const auto& v = error_basis == StabType::X ? raw_x : raw_z;
        return v[static_cast<size_t>(round - 1) * stab_count(error_basis) + stab];
    }
    uint8_t diff(StabType error_basis, int round, int stab) const {
        const auto& v = error_basis == StabType::X ? diff_x : diff_z;
        return v[static_cast<size_t>(round - 1) * stab_count(error_basis) + stab];
    }
    uint8_t& diff_ref(StabType error_basis, int round, int stab) {
        auto& v = error_basis == StabType::X ? diff_x : diff_z;
        return v[static_cast<size_t>(round - 1) * stab_count(error_basis) + stab];
    }
};

/// One elementary fault location in the measurement circuit. Rounds are
/// 1-based; the last round is a perfect round and carries no locations.
struct FaultSite {
    enum class Kind : uint8_t {
        AncillaPrep,   // flip of the prepared ancilla state
        CnotGate,      // two-qubit Pauli after a scheduled CNOT
        GateIdleData,  // data qubit idling during a CNOT step
        GateIdleAnc,   // weight-2 ancilla idling during a CNOT step
        Measurement,   // classical outcome flip
        DataWindowIdle // data qubit idling during ancilla measure+reset
    };

    Kind kind;
    int round;
    StabType stab_type = StabType::X; // prep/cnot/idle-anc/meas
    int stab_index = 0;
    int support_pos = 0; // CnotGate: index into stabilizer support
    int step = 0;        // gate idles: CNOT step 1..4
    int qubit = 0;       // data-qubit id for data idles
    Pauli pauli = kPauliI;        // single-qubit payload (prep/meas use X-or-Z flip)
    Pauli pauli_control = kPauliI; // CnotGate payloads
    Pauli pauli_target = kPauliI;
};

struct ShotResult {
    ErrorVolume errors;
    SyndromeVolume syndromes;
};

/// Monte Carlo shot under the circuit-level depolarizing model: 2-qubit gates
/// fail with total probability p uniformly over the 15 nontrivial Pauli pairs,
/// preparations and measurements flip with 2p/3, idle locations take X/Y/Z
/// with p/3 each and the ancilla measure+reset window counts as a single idle
/// location per data qubit. Round dm draws no faults. Bit-identical results
/// for equal (layout, dm, noise, seed).
ShotResult sample_shot(const CodeLayout& layout, int dm, const NoiseParams& noise,
                       uint64_t seed);

/// Same propagation machinery with the fault set fixed. Throws on a fault
/// site that does not exist in the circuit.
ShotResult inject_faults(const CodeLayout& layout, int dm,
                         const std::vector<FaultSite>& faults);

/// All fault locations of the dm-round circuit, in the canonical draw order.
std::vector<FaultSite> enumerate_fault_sites(const CodeLayout& layout, int dm);

/// Logical failure test on the final (perfect-round) frame: an X failure is
/// an odd overlap of residual-xor-correction with the logical Z
/// representative, and symmetrically for Z. Stabilizer-equivalent residuals
/// give identical results.
std::pair<bool, bool> logical_failure(const CodeLayout& layout,
                                      const std::vector<uint8_t>& residual_x,
                                      const std::vector<uint8_t>& residual_z,
                                      const std::vector<uint8_t>& correction_x,
                                      const std::vector<uint8_t>& correction_z);

// Location-class fault draws (the \"which Pauli, if any\" step used by
// sample_shot), exposed so the noise rates can be validated class by class.
Pauli draw_single_qubit_gate_fault(Rng& rng, double p);
std::pair<Pauli, Pauli> draw_two_qubit_gate_fault(Rng& rng, double p);
bool draw_prep_fault(Rng& rng, double p);
bool draw_measurement_fault(Rng& rng, double p);
Pauli draw_idle_fault(Rng& rng, double p);

} // namespace surfdec
