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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qburst/errors.h"
#include "qburst/notation.h"
#include "qburst/parallel.h"
#include "qburst/qcc_burst.h"
#include "qburst/qetd.h"
#include "qburst/qrs_burst.h"
#include "qburst/report.h"
#include "qburst/search.h"
#include "qburst/tables.h"

using namespace qburst;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitDiscrepancy = 2;

struct CodeArgs {
    int n = 0;
    std::string field = "gf4";
    std::string gen;
    std::string gen2;
};

void add_code_options(CLI::App *cmd, CodeArgs &a) {
    cmd->add_option("--n", a.n, "code length")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--field", a.field, "gf4 (Hermitian) or gf2 (CSS)")
        ->check(CLI::IsMember({"gf2", "gf4"}))
        ->capture_default_str();
    cmd->add_option("--gen", a.gen, "generator, e.g. \"(1^6 2^3 1^0)\"")->required();
    cmd->add_option("--gen2", a.gen2, "second CSS generator (defaults to --gen)");
}

QuantumCyclicCode build_code(const CodeArgs &a) {
    if (a.field == "gf4") {
        if (!a.gen2.empty()) {
            throw ParseError("--gen2 applies to gf2 (CSS) codes only");
        }
        return QuantumCyclicCode::hermitian(CyclicCode::from_generator(a.n, parse_generator(a.gen, FieldSpec::gf4())));
    }
    auto c1 = CyclicCode::from_generator(a.n, parse_generator(a.gen, FieldSpec::gf2()));
    auto c2 = a.gen2.empty() ? c1 : CyclicCode::from_generator(a.n, parse_generator(a.gen2, FieldSpec::gf2()));
    return QuantumCyclicCode::css(c1, c2);
}

void write_output(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << text;
    if (!out) {
        throw Error("write failed for " + path);
    }
}

std::vector<Symbol> parse_basis(const std::string &text) {
    std::vector<Symbol> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        unsigned long v = std::stoul(item, &used);
        if (used != item.size()) {
            throw ParseError("bad basis element '" + item + "'");
        }
        out.push_back(static_cast<Symbol>(v));
    }
    return out;
}

const char *status_text(const RowCheck &c) {
    switch (c.status) {
        case RowStatus::kMatch:
            return c.expected_discrepancy ? "MATCH*" : "MATCH";
        case RowStatus::kSkipped:
            return "SKIP";
        case RowStatus::kMismatch:
            return c.expected_discrepancy ? "KNOWN" : "MISMATCH";
    }
    return "?";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Burst error correction limits of quantum cyclic and Reed-Solomon codes"};
    app.require_subcommand(1);
    std::string format = "json";
    std::string out_path;
    int jobs = default_jobs();

    auto *burst = app.add_subcommand("burst-limit", "burst correction limit of a quantum cyclic code");
    CodeArgs burst_args;
    bool brute = false;
    add_code_options(burst, burst_args);
    burst->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    burst->add_flag("--brute-force", brute, "also run exhaustive coset enumeration");

    auto *rs = app.add_subcommand("rs-limit", "burst limit of the binary image of a quantum RS code");
    int rs_m = 0;
    int rs_k = 0;
    std::string rs_basis;
    rs->add_option("--m", rs_m, "extension degree")->required()->check(CLI::Range(2, 8));
    rs->add_option("--kq", rs_k, "quantum dimension K")->required();
    rs->add_option("--basis", rs_basis, "self-dual basis as comma separated packed elements");
    rs->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto *qetd = app.add_subcommand("qetd-sim", "exhaustive error-trapping decoder statistics");
    CodeArgs qetd_args;
    std::optional<int> lmax;
    std::string mode = "auto";
    add_code_options(qetd, qetd_args);
    qetd->add_option("--lmax", lmax, "largest burst length (default (n-K)/2)");
    qetd->add_option("--mode", mode, "CSS decoding: joint, split or auto")
        ->check(CLI::IsMember({"auto", "joint", "split"}));
    qetd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    qetd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto *srch = app.add_subcommand("search", "search dual-containing cyclic codes");
    SearchJob job;
    std::string search_field = "gf4";
    std::optional<std::size_t> sample;
    srch->add_option("--n-min", job.n_min)->required()->check(CLI::PositiveNumber);
    srch->add_option("--n-max", job.n_max)->required()->check(CLI::PositiveNumber);
    srch->add_option("--field", search_field)->check(CLI::IsMember({"gf2", "gf4"}));
    srch->add_option("--delta-max", job.delta_max)->capture_default_str();
    srch->add_option("--min-L", job.min_L)->capture_default_str();
    srch->add_option("--sample", sample, "random generators per length");
    srch->add_option("--seed", job.seed)->capture_default_str();
    srch->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    srch->add_option("--out", out_path, "output file (default stdout)");
    srch->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto *verify = app.add_subcommand("verify-tables", "check the bundled table fixtures");
    std::string fixtures;
    VerifyOptions vopt;
    verify->add_option("--fixtures", fixtures, "fixture directory")->required()->check(CLI::ExistingDirectory);
    verify->add_option("--max-qetd-bursts", vopt.max_qetd_bursts)->capture_default_str();
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        Format fmt = parse_format(format);
        if (*burst) {
            QuantumCyclicCode q = build_code(burst_args);
            QccReport rep = algorithm1(q);
            write_output(report_emit({rep}, fmt), "");
            if (brute) {
                auto [L, ell0] = brute_force_limit(q);
                std::cerr << "exhaustive: L=" << L << " ell0=" << ell0 << "\n";
                if (L != rep.L || ell0 != rep.ell0) {
                    return kExitDiscrepancy;
                }
            }
        } else if (*rs) {
            std::optional<SelfDualBasis> basis;
            if (!rs_basis.empty()) {
                basis = SelfDualBasis(FieldSpec::make(rs_m), parse_basis(rs_basis));
            }
            write_output(rs_report_emit({algorithm2(RsCode::make(rs_m, rs_k, basis))}, fmt), "");
        } else if (*qetd) {
            QuantumCyclicCode q = build_code(qetd_args);
            QetdMode m = mode == "joint" ? QetdMode::kJoint : mode == "split" ? QetdMode::kSplit : QetdMode::kAuto;
            QetdRecord rec{q.n(), q.K(), qetd_stats(q, lmax, m, jobs), q.generators()};
            write_output(qetd_report_emit({rec}, fmt), "");
        } else if (*srch) {
            job.construction = search_field == "gf4" ? Construction::kHermitian : Construction::kCss;
            job.jobs = jobs;
            job.sample = sample;
            write_output(report_emit(search(job), fmt), out_path);
        } else if (*verify) {
            vopt.jobs = jobs;
            int unexpected = 0;
            int known = 0;
            int skipped = 0;
            for (const auto &c : verify_tables(fixtures, vopt)) {
                std::printf("%-8s %-7s %-16s %s\n", status_text(c), c.table.c_str(), c.label.c_str(), c.detail.c_str());
                unexpected += c.unexpected();
                known += c.status == RowStatus::kMismatch && c.expected_discrepancy;
                skipped += c.status == RowStatus::kSkipped;
            }
            std::printf("unexpected mismatches: %d, known discrepancies: %d, skipped: %d\n", unexpected, known,
                        skipped);
            return unexpected ? kExitDiscrepancy : 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
