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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace surfdec {

enum class StabType : uint8_t { X, Z };

inline const char* to_string(StabType t) {
    return t == StabType::X ? "X" : "Z";
}

/// One stabilizer of the rotated surface code. The four corner roles of the
/// (possibly half-virtual) plaquette square are NW, NE, SW, SE relative to
/// the anchor (top-left) corner; weight-2 boundary stabilizers keep only the
/// in-lattice corners.
struct Stabilizer {
    StabType type;
    int anchor_row; // top-left corner of the square; may be -1 (top) etc.
    int anchor_col;
    std::vector<int> support;             // data qubit ids, support[i] acts in cnot_step[i]
    std::vector<int> cnot_step;           // time step 1..4 per support qubit
    int cell_row;                         // syndrome-matrix cell (min support row/col)
    int cell_col;

    int weight() const { return static_cast<int>(support.size()); }
};

/// Rotated surface code on a dx-by-dz data-qubit grid. Row-major qubit ids;
/// stabilizers of each type are numbered left to right, top to bottom.
/// Immutable after construction.
class CodeLayout {
  public:
    CodeLayout(int dx, int dz);

    int dx() const { return dx_; }
    int dz() const { return dz_; }
    int num_qubits() const { return dx_ * dz_; }

    int qubit_id(int row, int col) const { return row * dz_ + col; }
    int qubit_row(int id) const { return id / dz_; }
    int qubit_col(int id) const { return id % dz_; }

    const std::vector<Stabilizer>& stabilizers(StabType t) const {
        return t == StabType::X ? x_stabs_ : z_stabs_;
    }
    int num_stabilizers(StabType t) const {
        return static_cast<int>(stabilizers(t).size());
    }

    /// Stabilizers of `t` acting on a data qubit (at most 2 of each type).
    const std::vector<int>& stabs_on_qubit(StabType t, int qubit) const {
        return t == StabType::X ? x_on_qubit_[qubit] : z_on_qubit_[qubit];
    }

    /// Minimum-weight logical representatives: X is the left column,
    /// Z the top row.
    const std::vector<int>& logical_x() const { return logical_x_; }
    const std::vector<int>& logical_z() const { return logical_z_; }

    std::string to_json() const;

  private:
    void build_stabilizers();
    void build_schedule();
    void check_invariants() const;

    int dx_;
    int dz_;
    std::vector<Stabilizer> x_stabs_;
    std::vector<Stabilizer> z_stabs_;
    std::vector<std::vector<int>> x_on_qubit_;
    std::vector<std::vector<int>> z_on_qubit_;
    std::vector<int> logical_x_;
    std::vector<int> logical_z_;
};

} // namespace surfdec
