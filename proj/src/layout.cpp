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

#include "surfdec/layout.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace surfdec {

namespace {

// Corner roles of a plaquette square, in the per-type CNOT order.
// X-type stabilizers sweep NW,NE,SW,SE ("Z" shape); Z-type sweep
// NW,SW,NE,SE ("N" shape). This pairing keeps every data qubit on at
// most one CNOT per step and reproduces the space-time fault signature
// of a two-qubit gate failure during a Z-stabilizer measurement: the
// resulting data X error is seen by one Z stabilizer in the same round
// and by both from the next round on.
constexpr int kRoleOffsets[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}}; // NW,NE,SW,SE
constexpr int kXOrder[4] = {0, 1, 2, 3};
constexpr int kZOrder[4] = {0, 2, 1, 3};

} // namespace

CodeLayout::CodeLayout(int dx, int dz) : dx_(dx), dz_(dz) {
    if (dx < 3 || dz < 3 || dx % 2 == 0 || dz % 2 == 0)
        throw std::invalid_argument("code distances must be odd and >= 3");
    build_stabilizers();
    build_schedule();

    x_on_qubit_.assign(num_qubits(), {});
    z_on_qubit_.assign(num_qubits(), {});
    for (int i = 0; i < num_stabilizers(StabType::X); ++i)
        for (int q : x_stabs_[i].support)
            x_on_qubit_[q].push_back(i);
    for (int i = 0; i < num_stabilizers(StabType::Z); ++i)
        for (int q : z_stabs_[i].support)
            z_on_qubit_[q].push_back(i);

    for (int r = 0; r < dx_; ++r)
        logical_x_.push_back(qubit_id(r, 0));
    for (int c = 0; c < dz_; ++c)
        logical_z_.push_back(qubit_id(0, c));

    check_invariants();
}

void CodeLayout::build_stabilizers() {
    // Bulk plaquette anchored at (r,c) is X-type iff r+c is even. Boundary
    // halves extend the checkerboard: X-type semicircles on the top and
    // bottom rows, Z-type on the left and right columns. Anchor-lexicographic
    // emission yields the left-to-right, top-to-bottom numbering.
    for (int r = -1; r <= dx_ - 1; ++r) {
        for (int c = -1; c <= dz_ - 1; ++c) {
            bool exists = false;
            StabType type = StabType::X;
            if (r == -1) {
                if (c >= 0 && c <= dz_ - 2 && c % 2 == 1) {
                    exists = true;
                    type = StabType::X;
                }
            } else if (r == dx_ - 1) {
                if (c >= 0 && c <= dz_ - 2 && c % 2 == 0) {
                    exists = true;
                    type = StabType::X;
                }
            } else if (c == -1) {
                if (r % 2 == 0) {
                    exists = true;
                    type = StabType::Z;
                }
            } else if (c == dz_ - 1) {
                if (r % 2 == 1) {
                    exists = true;
                    type = StabType::Z;
                }
            } else {
                exists = true;
                type = (r + c) % 2 == 0 ? StabType::X : StabType::Z;
            }
            if (!exists)
                continue;

            Stabilizer s;
            s.type = type;
            s.anchor_row = r;
            s.anchor_col = c;
            s.cell_row = dx_;
            s.cell_col = dz_;
            (type == StabType::X ? x_stabs_ : z_stabs_).push_back(std::move(s));
        }
    }
}

void CodeLayout::build_schedule() {
    auto fill = [&](Stabilizer& s) {
        const int* order = s.type == StabType::X ? kXOrder : kZOrder;
        for (int k = 0; k < 4; ++k) {
            int role = order[k];
            int row = s.anchor_row + kRoleOffsets[role][0];
            int col = s.anchor_col + kRoleOffsets[role][1];
            if (row < 0 || row >= dx_ || col < 0 || col >= dz_)
                continue;
            s.support.push_back(qubit_id(row, col));
            s.cnot_step.push_back(k + 1);
            s.cell_row = std::min(s.cell_row, row);
            s.cell_col = std::min(s.cell_col, col);
        }
    };
    for (auto& s : x_stabs_)
        fill(s);
    for (auto& s : z_stabs_)
        fill(s);
}

void CodeLayout::check_invariants() const {
    const int total = num_stabilizers(StabType::X) + num_stabilizers(StabType::Z);
    if (total != dx_ * dz_ - 1)
        throw std::logic_error("stabilizer count mismatch");

    // Opposite-type supports overlap on an even number of qubits.
    for (const auto& sx : x_stabs_) {
        for (const auto& sz : z_stabs_) {
            int overlap = 0;
            for (int q : sx.support)
                overlap += std::count(sz.support.begin(), sz.support.end(), q) ? 1 : 0;
            if (overlap % 2 != 0)
                throw std::logic_error("anticommuting stabilizer pair");
        }
    }

    // No data qubit takes part in two CNOTs within one time step.
    std::set<std::pair<int, int>> used; // (step, qubit)
    auto check_schedule = [&](const Stabilizer& s) {
        if (s.weight() != 2 && s.weight() != 4)
            throw std::logic_error("unexpected stabilizer weight");
        for (size_t i = 0; i < s.support.size(); ++i)
            if (!used.insert({s.cnot_step[i], s.support[i]}).second)
                throw std::logic_error("schedule conflict");
    };
    for (const auto& s : x_stabs_)
        check_schedule(s);
    for (const auto& s : z_stabs_)
        check_schedule(s);

    // The stabilizer-to-matrix-cell map is injective per type; this is what
    // makes the matrix representation lossless.
    for (StabType t : {StabType::X, StabType::Z}) {
        std::set<std::pair<int, int>> cells;
        for (const auto& s : stabilizers(t))
            if (!cells.insert({s.cell_row, s.cell_col}).second)
                throw std::logic_error("syndrome cell collision");
    }

    // Logical operators: commute with every stabilizer, anticommute mutually.
    auto overlap_parity = [](const std::vector<int>& a, const std::vector<int>& b) {
        int n = 0;
        for (int q : a)
            n += std::count(b.begin(), b.end(), q) ? 1 : 0;
        return n % 2;
    };
    for (const auto& sz : z_stabs_)
        if (overlap_parity(logical_x_, sz.support) != 0)
            throw std::logic_error("logical X anticommutes with a Z stabilizer");
    for (const auto& sx : x_stabs_)
        if (overlap_parity(logical_z_, sx.support) != 0)
            throw std::logic_error("logical Z anticommutes with an X stabilizer");
    if (overlap_parity(logical_x_, logical_z_) != 1)
        throw std::logic_error("logical operators must anticommute");
}

std::string CodeLayout::to_json() const {
    nlohmann::json j;
    j["dx"] = dx_;
    j["dz"] = dz_;
    j["data_qubits"] = nlohmann::json::array();
    for (int q = 0; q < num_qubits(); ++q)
        j["data_qubits"].push_back({qubit_row(q), qubit_col(q)});
    for (StabType t : {StabType::X, StabType::Z}) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : stabilizers(t)) {
            nlohmann::json e;
            e["anchor"] = {s.anchor_row, s.anchor_col};
            e["cell"] = {s.cell_row, s.cell_col};
            nlohmann::json sup = nlohmann::json::array();
            for (size_t i = 0; i < s.support.size(); ++i)
                sup.push_back({{"qubit", {qubit_row(s.support[i]), qubit_col(s.support[i])}},
                               {"step", s.cnot_step[i]}});
            e["support"] = sup;
            arr.push_back(e);
        }
        j[t == StabType::X ? "x_stabilizers" : "z_stabilizers"] = arr;
    }
    auto qubits = [&](const std::vector<int>& ids) {
        nlohmann::json arr = nlohmann::json::array();
        for (int q : ids)
            arr.push_back({qubit_row(q), qubit_col(q)});
        return arr;
    };
    j["logical_x"] = qubits(logical_x_);
    j["logical_z"] = qubits(logical_z_);
    return j.dump(2);
}

} // namespace surfdec
