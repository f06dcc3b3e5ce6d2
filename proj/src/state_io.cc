// Copyright 2026 The symgm Authors
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

#include "symgm/state_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "symgm/errors.h"
#include "symgm/majorana.h"

namespace symgm {

namespace {

using nlohmann::json;

Complex parse_complex(const json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InputError("expected an amplitude [re, im], got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

CVec parse_vector(const json &j) {
    if (!j.is_array() || j.empty()) {
        throw InputError("expected a non-empty list of amplitudes");
    }
    CVec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = parse_complex(j[i]);
    }
    return v;
}

int parse_count(const json &j, const char *what) {
    if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 1000000) {
        throw InputError(std::string(what) + " must be a non-negative integer");
    }
    return j.get<int>();
}

}  // namespace

StateSpec parse_state(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InputError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw InputError("state file must be a JSON object");
    }
    int forms = doc.contains("kets") + doc.contains("dicke_counts") + doc.contains("dicke");
    if (forms != 1) {
        throw InputError("state file needs exactly one of \"kets\", \"dicke_counts\", \"dicke\"");
    }

    StateSpec spec;
    if (doc.contains("kets")) {
        const json &kets = doc["kets"];
        if (!kets.is_array() || kets.empty()) {
            throw InputError("\"kets\" must be a non-empty list");
        }
        std::vector<CVec> vs;
        for (const auto &k : kets) {
            vs.push_back(parse_vector(k));
        }
        if (doc.contains("dim")) {
            int d = parse_count(doc["dim"], "\"dim\"");
            for (const auto &v : vs) {
                if (v.size() != d) {
                    throw InputError("ket length does not match \"dim\"");
                }
            }
        }
        std::vector<int> mults(vs.size(), 1);
        if (doc.contains("mults")) {
            const json &m = doc["mults"];
            if (!m.is_array() || m.size() != vs.size()) {
                throw InputError("\"mults\" must list one multiplicity per ket");
            }
            for (std::size_t i = 0; i < m.size(); ++i) {
                mults[i] = parse_count(m[i], "multiplicity");
            }
        }
        spec.multiset = KetMultiset(std::move(vs), std::move(mults));
    } else if (doc.contains("dicke_counts")) {
        const json &c = doc["dicke_counts"];
        if (!c.is_array() || c.size() != 4) {
            throw InputError("\"dicke_counts\" must be [n00, n01, n10, n11]");
        }
        if (!doc.contains("theta") || !doc["theta"].is_number()) {
            throw InputError("\"dicke_counts\" requires a numeric \"theta\"");
        }
        DickeCounts dc;
        dc.n00 = parse_count(c[0], "count");
        dc.n01 = parse_count(c[1], "count");
        dc.n10 = parse_count(c[2], "count");
        dc.n11 = parse_count(c[3], "count");
        dc.theta = doc["theta"].get<double>();
        if (dc.total() == 0) {
            throw InputError("\"dicke_counts\" must not all be zero");
        }
        spec.counts = dc;
    } else {
        spec.dicke_amplitudes = parse_vector(doc["dicke"]);
    }
    return spec;
}

StateSpec load_state(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open state file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_state(buf.str());
}

KetMultiset resolve_multiset(const StateSpec &spec, std::uint64_t seed) {
    if (spec.multiset) {
        return *spec.multiset;
    }
    if (spec.counts) {
        return dicke_multiset(*spec.counts);
    }
    if (spec.dicke_amplitudes) {
        return majorana_from_dicke(*spec.dicke_amplitudes, seed).multiset;
    }
    throw InputError("empty state specification");
}

}  // namespace symgm
