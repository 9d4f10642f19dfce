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

#ifndef QBURST_REPORT_H
#define QBURST_REPORT_H

#include <string>
#include <vector>

#include "qburst/qcc_burst.h"
#include "qburst/qetd.h"
#include "qburst/qrs_burst.h"

namespace qburst {

enum class Format { kJson, kCsv };

/// Parses "json" or "csv"; throws std::invalid_argument otherwise.
Format parse_format(const std::string &s);

/// "[[n,K]]".
std::string code_label(int n, int K);

/// Array of {n, K, L, ell0, delta, construction, generators[], flags[]}.
std::string report_json(const std::vector<QccReport> &reports);
/// Columns delta,code,L,ell0,construction,generators,flags; lists joined by ';'.
std::string report_csv(const std::vector<QccReport> &reports);
std::string report_emit(const std::vector<QccReport> &reports, Format format);
/// Inverse of report_json (per-part details are not serialized).
std::vector<QccReport> reports_from_json(const std::string &text);

std::string rs_report_emit(const std::vector<RsReport> &reports, Format format);

struct QetdRecord {
    int n;
    int K;
    QetdStats stats;
    std::vector<Polynomial> generators;
};
/// Columns code,ND,N0,N,ND/N,N0/N,ND/N0,generators.
std::string qetd_report_emit(const std::vector<QetdRecord> &records, Format format);

}  // namespace qburst

#endif
