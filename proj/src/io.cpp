// Copyright 2026 The acham Authors
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

#include "acham/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "acham/errors.hpp"

namespace acham {

namespace {

double number_at(const Json &j, const char *what) {
    if (!j.is_number()) {
        throw Error(ErrorKind::Schema, std::string(what) + " must be a number");
    }
    return j.get<double>();
}

double clean(double v) {
    return v == 0.0 ? 0.0 : v;
}

void apply_precision(Json &j, int digits) {
    if (j.is_number_float()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", digits, j.get<double>());
        j = clean(std::strtod(buf, nullptr));
    } else if (j.is_structured()) {
        for (auto &child : j) {
            apply_precision(child, digits);
        }
    }
}

}  // namespace

LocalTerm term_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("qubits") || !j.contains("coeffs")) {
        throw Error(ErrorKind::Schema, "each term needs \"qubits\" and \"coeffs\"");
    }
    const Json &qs = j.at("qubits");
    const Json &cs = j.at("coeffs");
    if (!qs.is_array() || qs.size() > 2) {
        throw Error(ErrorKind::Schema, "\"qubits\" must be an array of at most two indices");
    }
    std::array<std::size_t, 2> q{0, 0};
    for (std::size_t k = 0; k < qs.size(); ++k) {
        if (!qs[k].is_number_integer() || qs[k].get<long long>() < 0) {
            throw Error(ErrorKind::Schema, "qubit indices must be non-negative integers");
        }
        q[k] = qs[k].get<std::size_t>();
    }
    switch (qs.size()) {
        case 0: {
            if (cs.is_array() && cs.size() == 1) {
                return LocalTerm::constant(number_at(cs[0], "0-local coefficient"));
            }
            return LocalTerm::constant(number_at(cs, "0-local coefficient"));
        }
        case 1: {
            if (!cs.is_array() || cs.size() != 4) {
                throw Error(ErrorKind::Schema, "1-local \"coeffs\" must hold 4 numbers");
            }
            PauliCoeffs1 c{};
            for (int a = 0; a < 4; ++a) {
                c[a] = number_at(cs[a], "coefficient");
            }
            return LocalTerm::one_local(q[0], c);
        }
        default: {
            if (!cs.is_array() || cs.size() != 4) {
                throw Error(ErrorKind::Schema, "2-local \"coeffs\" must be a 4x4 array");
            }
            PauliCoeffs2 c{};
            for (int a = 0; a < 4; ++a) {
                if (!cs[a].is_array() || cs[a].size() != 4) {
                    throw Error(ErrorKind::Schema, "2-local \"coeffs\" must be a 4x4 array");
                }
                for (int b = 0; b < 4; ++b) {
                    c[a][b] = number_at(cs[a][b], "coefficient");
                }
            }
            return LocalTerm::two_local(q[0], q[1], c);
        }
    }
}

Json term_to_json(const LocalTerm &t) {
    Json j;
    j["qubits"] = Json::array();
    for (std::size_t q : t.support()) {
        j["qubits"].push_back(q);
    }
    if (t.arity == 0) {
        j["coeffs"] = clean(t.coeffs[0]);
    } else if (t.arity == 1) {
        j["coeffs"] = Json::array();
        for (int a = 0; a < 4; ++a) {
            j["coeffs"].push_back(clean(t.coeffs[a]));
        }
    } else {
        j["coeffs"] = Json::array();
        for (int a = 0; a < 4; ++a) {
            Json row = Json::array();
            for (int b = 0; b < 4; ++b) {
                row.push_back(clean(t.coeffs[4 * a + b]));
            }
            j["coeffs"].push_back(row);
        }
    }
    return j;
}

Hamiltonian ingest(const Json &doc, bool enforce_unit_norm) {
    if (!doc.is_object()) {
        throw Error(ErrorKind::Schema, "instance document must be a JSON object");
    }
    if (!doc.contains("format") || doc.at("format") != kInstanceFormat) {
        throw Error(ErrorKind::Schema, std::string("\"format\" must be \"") + kInstanceFormat + "\"");
    }
    if (!doc.contains("n") || !doc.at("n").is_number_integer() || doc.at("n").get<long long>() < 0) {
        throw Error(ErrorKind::Schema, "\"n\" must be a non-negative integer");
    }
    if (!doc.contains("terms") || !doc.at("terms").is_array()) {
        throw Error(ErrorKind::Schema, "\"terms\" must be an array");
    }
    std::vector<LocalTerm> terms;
    for (const Json &t : doc.at("terms")) {
        terms.push_back(term_from_json(t));
    }
    return ingest_terms(doc.at("n").get<std::size_t>(), std::move(terms), enforce_unit_norm);
}

Json to_json(const Hamiltonian &h) {
    Json doc;
    doc["format"] = kInstanceFormat;
    doc["n"] = h.n;
    doc["terms"] = Json::array();
    for (const LocalTerm &t : h.terms) {
        doc["terms"].push_back(term_to_json(t));
    }
    return doc;
}

std::string dump_json(const Json &doc) {
    const char *env = std::getenv("ACHAM_OUTPUT_PRECISION");
    if (env != nullptr && *env != '\0') {
        char *end = nullptr;
        long digits = std::strtol(env, &end, 10);
        if (*end == '\0' && digits >= 1 && digits <= 17) {
            Json copy = doc;
            apply_precision(copy, static_cast<int>(digits));
            return copy.dump(2) + "\n";
        }
    }
    return doc.dump(2) + "\n";
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Schema, "cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw Error(ErrorKind::Schema, path + ": " + e.what());
    }
}

void write_json_file(const std::string &path, const Json &doc) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::Schema, "cannot write " + path);
    }
    out << dump_json(doc);
}

}  // namespace acham
