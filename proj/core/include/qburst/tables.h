// Copyright 2026 The qburst Authors
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

#ifndef QBURST_TABLES_H
#define QBURST_TABLES_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qburst/galois.h"
#include "qburst/qcc_burst.h"

namespace qburst {

inline constexpr const char *kExpectedDiscrepancy = "expected-discrepancy";

/// Row of a burst-limit table; columns as in report_csv, tab separated.
struct BurstRow {
    int line = 0;
    int delta = 0;
    int n = 0;
    int K = 0;
    int L = 0;
    std::optional<int> ell0;
    Construction construction = Construction::kHermitian;
    std::vector<std::string> generators;
    std::vector<std::string> flags;
    std::string note;
};

/// Columns m, n, K, L, lower, qrb, basis, flags. An empty basis column selects
/// self_dual_basis(); otherwise it lists the packed elements separated by ','.
struct RsRow {
    int line = 0;
    int m = 0;
    int n = 0;
    int K = 0;
    int L = 0;
    int lower = 0;
    int qrb = 0;
    std::vector<Symbol> basis;
    std::vector<std::string> flags;
    std::string note;
};

/// Columns code, ND, N0, N, construction, generators, flags.
struct QetdRow {
    int line = 0;
    int n = 0;
    int K = 0;
    std::uint64_t ND = 0;
    std::uint64_t N0 = 0;
    std::uint64_t N = 0;
    Construction construction = Construction::kHermitian;
    std::vector<std::string> generators;
    std::vector<std::string> flags;
    std::string note;
};

std::vector<BurstRow> load_burst_rows(const std::string &path);
std::vector<RsRow> load_rs_rows(const std::string &path);
std::vector<QetdRow> load_qetd_rows(const std::string &path);

/// Builds the quantum code named by a fixture row; throws on any defect.
QuantumCyclicCode code_from_row(int n, Construction construction, const std::vector<std::string> &generators);

enum class RowStatus { kMatch, kMismatch, kSkipped };

struct RowCheck {
    std::string table;
    std::string label;
    RowStatus status = RowStatus::kMatch;
    bool expected_discrepancy = false;
    std::string detail;
    double seconds = 0;

    bool unexpected() const { return status == RowStatus::kMismatch && !expected_discrepancy; }
};

RowCheck check_burst_row(const BurstRow &row, const std::string &table);
RowCheck check_rs_row(const RsRow &row, const std::string &table);
/// Rows with more than max_bursts bursts are skipped.
RowCheck check_qetd_row(const QetdRow &row, const std::string &table, std::uint64_t max_bursts, int jobs);

struct VerifyOptions {
    std::uint64_t max_qetd_bursts = 10'000'000;
    int jobs = 1;
};

/// Checks table1.tsv, table2.tsv, table3.tsv and table4.tsv under dir (missing files are skipped).
std::vector<RowCheck> verify_tables(const std::string &dir, const VerifyOptions &options);

}  // namespace qburst

#endif
