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

#include "qburst/tables.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qburst/errors.h"
#include "qburst/notation.h"
#include "qburst/qetd.h"
#include "qburst/qrs_burst.h"
#include "qburst/report.h"

namespace qburst {

namespace {

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> out;
    for (auto &x : split(s, ';')) {
        if (!x.empty()) {
            out.push_back(x);
        }
    }
    return out;
}

// Each data line as its tab-separated fields, with the 1-based line number.
std::vector<std::pair<int, std::vector<std::string>>> read_tsv(const std::string &path, std::size_t min_cols) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open fixture " + path);
    }
    std::vector<std::pair<int, std::vector<std::string>>> rows;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        no++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        auto cols = split(line, '\t');
        if (cols.size() < min_cols) {
            throw ParseError(path + ":" + std::to_string(no) + ": expected at least " + std::to_string(min_cols) +
                             " columns");
        }
        rows.emplace_back(no, std::move(cols));
    }
    return rows;
}

int to_int(const std::string &s, const std::string &where) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
        return static_cast<int>(v);
    } catch (const std::exception &) {
        throw ParseError(where + ": bad integer '" + s + "'");
    }
}

std::uint64_t to_u64(const std::string &s, const std::string &where) {
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception &) {
        throw ParseError(where + ": bad integer '" + s + "'");
    }
}

void parse_code(const std::string &s, int &n, int &K, const std::string &where) {
    if (s.size() < 7 || s.rfind("[[", 0) != 0 || s.substr(s.size() - 2) != "]]") {
        throw ParseError(where + ": bad code label '" + s + "'");
    }
    auto parts = split(s.substr(2, s.size() - 4), ',');
    if (parts.size() != 2) {
        throw ParseError(where + ": bad code label '" + s + "'");
    }
    n = to_int(parts[0], where);
    K = to_int(parts[1], where);
}

Construction to_construction(const std::string &s, const std::string &where) {
    if (s == "hermitian") {
        return Construction::kHermitian;
    }
    if (s == "css") {
        return Construction::kCss;
    }
    throw ParseError(where + ": unknown construction '" + s + "'");
}

bool has_marker(const std::vector<std::string> &flags) {
    return std::find(flags.begin(), flags.end(), kExpectedDiscrepancy) != flags.end();
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<BurstRow> load_burst_rows(const std::string &path) {
    std::vector<BurstRow> out;
    for (auto &[no, c] : read_tsv(path, 6)) {
        std::string where = path + ":" + std::to_string(no);
        BurstRow r;
        r.line = no;
        r.delta = to_int(c[0], where);
        parse_code(c[1], r.n, r.K, where);
        r.L = to_int(c[2], where);
        if (c[3] != "-") {
            r.ell0 = to_int(c[3], where);
        }
        r.construction = to_construction(c[4], where);
        r.generators = split_list(c[5]);
        if (c.size() > 6) {
            r.flags = split_list(c[6]);
        }
        if (c.size() > 7) {
            r.note = c[7];
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<RsRow> load_rs_rows(const std::string &path) {
    std::vector<RsRow> out;
    for (auto &[no, c] : read_tsv(path, 6)) {
        std::string where = path + ":" + std::to_string(no);
        RsRow r;
        r.line = no;
        r.m = to_int(c[0], where);
        r.n = to_int(c[1], where);
        r.K = to_int(c[2], where);
        r.L = to_int(c[3], where);
        r.lower = to_int(c[4], where);
        r.qrb = to_int(c[5], where);
        if (c.size() > 6) {
            for (const auto &e : split(c[6], ',')) {
                if (!e.empty()) {
                    r.basis.push_back(static_cast<Symbol>(to_int(e, where)));
                }
            }
        }
        if (c.size() > 7) {
            r.flags = split_list(c[7]);
        }
        if (c.size() > 8) {
            r.note = c[8];
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<QetdRow> load_qetd_rows(const std::string &path) {
    std::vector<QetdRow> out;
    for (auto &[no, c] : read_tsv(path, 6)) {
        std::string where = path + ":" + std::to_string(no);
        QetdRow r;
        r.line = no;
        parse_code(c[0], r.n, r.K, where);
        r.ND = to_u64(c[1], where);
        r.N0 = to_u64(c[2], where);
        r.N = to_u64(c[3], where);
        r.construction = to_construction(c[4], where);
        r.generators = split_list(c[5]);
        if (c.size() > 6) {
            r.flags = split_list(c[6]);
        }
        if (c.size() > 7) {
            r.note = c[7];
        }
        out.push_back(std::move(r));
    }
    return out;
}

QuantumCyclicCode code_from_row(int n, Construction construction, const std::vector<std::string> &generators) {
    if (generators.empty() || generators.size() > 2) {
        throw ParseError("expected one or two generators");
    }
    if (construction == Construction::kHermitian) {
        if (generators.size() != 1) {
            throw ParseError("Hermitian rows take one generator");
        }
        auto c = CyclicCode::from_generator(n, parse_generator(generators[0], FieldSpec::gf4()));
        return QuantumCyclicCode::hermitian(c);
    }
    auto c1 = CyclicCode::from_generator(n, parse_generator(generators[0], FieldSpec::gf2()));
    auto c2 = generators.size() == 2
                  ? CyclicCode::from_generator(n, parse_generator(generators[1], FieldSpec::gf2()))
                  : c1;
    return QuantumCyclicCode::css(c1, c2);
}

RowCheck check_burst_row(const BurstRow &row, const std::string &table) {
    auto t0 = std::chrono::steady_clock::now();
    RowCheck rc;
    rc.table = table;
    rc.label = code_label(row.n, row.K);
    rc.expected_discrepancy = has_marker(row.flags);
    try {
        QuantumCyclicCode q = code_from_row(row.n, row.construction, row.generators);
        QccReport rep = algorithm1(q);
        std::ostringstream d;
        d << "K=" << rep.K << " L=" << rep.L << " ell0=" << rep.ell0 << " delta=" << rep.delta;
        bool ok = rep.K == row.K && rep.L == row.L && rep.delta == row.delta;
        if (row.ell0) {
            ok = ok && rep.ell0 == *row.ell0;
        }
        if (!ok) {
            d << " (table K=" << row.K << " L=" << row.L;
            if (row.ell0) {
                d << " ell0=" << *row.ell0;
            }
            d << " delta=" << row.delta << ")";
        }
        rc.status = ok ? RowStatus::kMatch : RowStatus::kMismatch;
        rc.detail = d.str();
    } catch (const std::exception &e) {
        rc.status = RowStatus::kMismatch;
        rc.detail = e.what();
    }
    if (!row.note.empty()) {
        rc.detail += " [" + row.note + "]";
    }
    rc.seconds = since(t0);
    return rc;
}

RowCheck check_rs_row(const RsRow &row, const std::string &table) {
    auto t0 = std::chrono::steady_clock::now();
    RowCheck rc;
    rc.table = table;
    rc.label = "m=" + std::to_string(row.m) + " " + code_label(row.n, row.K);
    rc.expected_discrepancy = has_marker(row.flags);
    try {
        std::optional<SelfDualBasis> basis;
        if (!row.basis.empty()) {
            basis = SelfDualBasis(FieldSpec::make(row.m), row.basis);
        }
        RsReport rep = algorithm2(RsCode::make(row.m, row.K, basis));
        std::ostringstream d;
        d << "L=" << rep.L << " lower=" << rep.lower << " qrb=" << rep.qrb_image;
        bool ok = rep.n == row.n && rep.L == row.L && rep.lower == row.lower && rep.qrb_image == row.qrb;
        if (!ok) {
            d << " (table L=" << row.L << " lower=" << row.lower << " qrb=" << row.qrb << ")";
        }
        rc.status = ok ? RowStatus::kMatch : RowStatus::kMismatch;
        rc.detail = d.str();
    } catch (const std::exception &e) {
        rc.status = RowStatus::kMismatch;
        rc.detail = e.what();
    }
    if (!row.note.empty()) {
        rc.detail += " [" + row.note + "]";
    }
    rc.seconds = since(t0);
    return rc;
}

RowCheck check_qetd_row(const QetdRow &row, const std::string &table, std::uint64_t max_bursts, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    RowCheck rc;
    rc.table = table;
    rc.label = code_label(row.n, row.K);
    rc.expected_discrepancy = has_marker(row.flags);
    try {
        QuantumCyclicCode q = code_from_row(row.n, row.construction, row.generators);
        std::uint64_t count = qetd_burst_count(row.n, (row.n - q.K()) / 2);
        if (count > max_bursts) {
            rc.status = RowStatus::kSkipped;
            rc.detail = std::to_string(count) + " bursts exceed the budget";
        } else {
            QetdStats s = qetd_stats(q, std::nullopt, QetdMode::kAuto, jobs);
            std::ostringstream d;
            d << "N=" << s.N << " ND=" << s.ND << " N0=" << s.N0;
            bool ok = q.K() == row.K && s.N == row.N && s.ND == row.ND && s.N0 == row.N0;
            if (!ok) {
                d << " (table N=" << row.N << " ND=" << row.ND << " N0=" << row.N0 << ")";
            }
            rc.status = ok ? RowStatus::kMatch : RowStatus::kMismatch;
            rc.detail = d.str();
        }
    } catch (const std::exception &e) {
        rc.status = RowStatus::kMismatch;
        rc.detail = e.what();
    }
    if (!row.note.empty()) {
        rc.detail += " [" + row.note + "]";
    }
    rc.seconds = since(t0);
    return rc;
}

std::vector<RowCheck> verify_tables(const std::string &dir, const VerifyOptions &options) {
    namespace fs = std::filesystem;
    std::vector<RowCheck> out;
    for (const char *name : {"table1", "table2"}) {
        fs::path p = fs::path(dir) / (std::string(name) + ".tsv");
        if (fs::exists(p)) {
            for (const auto &row : load_burst_rows(p.string())) {
                out.push_back(check_burst_row(row, name));
            }
        }
    }
    fs::path p3 = fs::path(dir) / "table3.tsv";
    if (fs::exists(p3)) {
        for (const auto &row : load_rs_rows(p3.string())) {
            out.push_back(check_rs_row(row, "table3"));
        }
    }
    fs::path p4 = fs::path(dir) / "table4.tsv";
    if (fs::exists(p4)) {
        for (const auto &row : load_qetd_rows(p4.string())) {
            out.push_back(check_qetd_row(row, "table4", options.max_qetd_bursts, options.jobs));
        }
    }
    return out;
}

}  // namespace qburst
