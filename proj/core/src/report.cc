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

#include "qburst/report.h"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qburst/errors.h"
#include "qburst/notation.h"

namespace qburst {

using ojson = nlohmann::ordered_json;

namespace {

std::string join(const std::vector<std::string> &items, const char *sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); i++) {
        out += (i ? sep : "") + items[i];
    }
    return out;
}

std::vector<std::string> generator_texts(const std::vector<Polynomial> &gens) {
    std::vector<std::string> out;
    for (const auto &g : gens) {
        out.push_back(emit_generator(g));
    }
    return out;
}

std::string fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

}  // namespace

Format parse_format(const std::string &s) {
    if (s == "json") {
        return Format::kJson;
    }
    if (s == "csv") {
        return Format::kCsv;
    }
    throw std::invalid_argument("unknown format: " + s);
}

std::string code_label(int n, int K) { return "[[" + std::to_string(n) + "," + std::to_string(K) + "]]"; }

std::string report_json(const std::vector<QccReport> &reports) {
    ojson arr = ojson::array();
    for (const auto &r : reports) {
        ojson o;
        o["n"] = r.n;
        o["K"] = r.K;
        o["L"] = r.L;
        o["ell0"] = r.ell0;
        o["delta"] = r.delta;
        o["construction"] = to_string(r.construction);
        o["generators"] = generator_texts(r.generators);
        o["flags"] = r.flags;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::string report_csv(const std::vector<QccReport> &reports) {
    std::string out = "delta,code,L,ell0,construction,generators,flags\n";
    for (const auto &r : reports) {
        out += std::to_string(r.delta) + "," + code_label(r.n, r.K) + "," + std::to_string(r.L) + "," +
               std::to_string(r.ell0) + "," + to_string(r.construction) + "," +
               join(generator_texts(r.generators), ";") + "," + join(r.flags, ";") + "\n";
    }
    return out;
}

std::string report_emit(const std::vector<QccReport> &reports, Format format) {
    return format == Format::kJson ? report_json(reports) : report_csv(reports);
}

std::vector<QccReport> reports_from_json(const std::string &text) {
    std::vector<QccReport> out;
    try {
        for (const auto &o : ojson::parse(text)) {
            QccReport r;
            r.n = o.at("n").get<int>();
            r.K = o.at("K").get<int>();
            r.L = o.at("L").get<int>();
            r.ell0 = o.at("ell0").get<int>();
            r.delta = o.at("delta").get<int>();
            std::string c = o.at("construction").get<std::string>();
            if (c != "hermitian" && c != "css") {
                throw ParseError("unknown construction " + c);
            }
            r.construction = c == "hermitian" ? Construction::kHermitian : Construction::kCss;
            const Field &f = r.construction == Construction::kHermitian ? FieldSpec::gf4() : FieldSpec::gf2();
            for (const auto &g : o.at("generators")) {
                r.generators.push_back(parse_generator(g.get<std::string>(), f));
            }
            r.flags = o.at("flags").get<std::vector<std::string>>();
            out.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("report json: ") + e.what());
    }
    return out;
}

std::string rs_report_emit(const std::vector<RsReport> &reports, Format format) {
    if (format == Format::kJson) {
        ojson arr = ojson::array();
        for (const auto &r : reports) {
            ojson o;
            o["m"] = r.m;
            o["n"] = r.n;
            o["K"] = r.K;
            o["L"] = r.L;
            o["lower"] = r.lower;
            o["qrb"] = r.qrb_image;
            o["min_rank"] = r.min_rank;
            o["max_rank"] = r.max_rank;
            o["flags"] = r.flags;
            arr.push_back(std::move(o));
        }
        return arr.dump(2) + "\n";
    }
    std::string out = "m,n,K,L,lower,qrb,flags\n";
    for (const auto &r : reports) {
        out += std::to_string(r.m) + "," + std::to_string(r.n) + "," + std::to_string(r.K) + "," +
               std::to_string(r.L) + "," + std::to_string(r.lower) + "," + std::to_string(r.qrb_image) + "," +
               join(r.flags, ";") + "\n";
    }
    return out;
}

std::string qetd_report_emit(const std::vector<QetdRecord> &records, Format format) {
    if (format == Format::kJson) {
        ojson arr = ojson::array();
        for (const auto &r : records) {
            ojson o;
            o["code"] = code_label(r.n, r.K);
            o["ND"] = r.stats.ND;
            o["N0"] = r.stats.N0;
            o["N"] = r.stats.N;
            o["ND/N"] = r.stats.nd_over_n();
            o["N0/N"] = r.stats.n0_over_n();
            o["ND/N0"] = r.stats.nd_over_n0();
            o["generators"] = generator_texts(r.generators);
            arr.push_back(std::move(o));
        }
        return arr.dump(2) + "\n";
    }
    std::string out = "code,ND,N0,N,ND/N,N0/N,ND/N0,generators\n";
    for (const auto &r : records) {
        out += code_label(r.n, r.K) + "," + std::to_string(r.stats.ND) + "," + std::to_string(r.stats.N0) + "," +
               std::to_string(r.stats.N) + "," + fixed(r.stats.nd_over_n(), 4) + "," +
               fixed(r.stats.n0_over_n(), 4) + "," + fixed(r.stats.nd_over_n0(), 4) + "," +
               join(generator_texts(r.generators), ";") + "\n";
    }
    return out;
}

}  // namespace qburst
