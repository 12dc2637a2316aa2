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

// Command-line frontend. Exit codes: 0 pass, 1 audit failure, 2 schema or
// usage error, 3 out of regime (eps > 1, norm violation, collapsed gap).

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acham/apps.hpp"
#include "acham/errors.hpp"
#include "acham/generators.hpp"
#include "acham/io.hpp"
#include "acham/rounding.hpp"
#include "acham/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAudit = 1;
constexpr int kExitSchema = 2;
constexpr int kExitRegime = 3;

int exit_code_for(acham::ErrorKind kind) {
    using acham::ErrorKind;
    switch (kind) {
        case ErrorKind::Schema:
        case ErrorKind::IndexRange:
        case ErrorKind::Dimension:
        case ErrorKind::Hermiticity:
        case ErrorKind::Contract:
            return kExitSchema;
        case ErrorKind::Regime:
        case ErrorKind::NormViolation:
        case ErrorKind::GapCollapse:
        case ErrorKind::SizeCap:
            return kExitRegime;
        default:
            return kExitAudit;
    }
}

std::optional<double> parse_eps(const std::string &text) {
    if (text.empty() || text == "auto") {
        return std::nullopt;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size()) {
        throw acham::Error(acham::ErrorKind::Schema, "--eps expects \"auto\" or a number, got " + text);
    }
    return v;
}

void add_param(acham::GeneratorSpec &spec, const std::string &kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw acham::Error(acham::ErrorKind::Schema, "parameter \"" + kv + "\" is not key=value");
    }
    spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
}

void emit(const std::string &path, const acham::Json &doc) {
    if (path.empty() || path == "-") {
        std::cout << acham::dump_json(doc);
    } else {
        acham::write_json_file(path, doc);
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Round almost-commuting 2-local qubit Hamiltonians to commuting ones"};
    app.require_subcommand(1);

    // generate
    auto *gen = app.add_subcommand("generate", "Write a generated instance");
    std::string gen_family, gen_out;
    std::vector<std::string> gen_params;
    std::string gen_params_csv;
    gen->add_option("--family", gen_family, "tfim-chain | tfim-grid | triangle-figure | triangle-paper | "
                                            "random-near-commuting")
        ->required();
    gen->add_option("--param", gen_params, "key=value (repeatable)");
    gen->add_option("--params", gen_params_csv, "comma-separated key=value list");
    gen->add_option("-o,--out", gen_out, "output instance (default stdout)");

    // round
    auto *rnd = app.add_subcommand("round", "Round an instance and audit the bounds");
    std::string rnd_in, rnd_out, rnd_report, rnd_eps = "auto";
    rnd->add_option("-i,--in", rnd_in, "input instance")->required();
    rnd->add_option("-o,--out", rnd_out, "rounded instance")->required();
    rnd->add_option("-r,--report", rnd_report, "rounding report");
    rnd->add_option("--eps", rnd_eps, "auto or a promised eps");

    // verify
    auto *ver = app.add_subcommand("verify", "Audit a rounded instance against its input");
    std::string ver_in, ver_rounded, ver_out, ver_eps = "auto";
    double ver_tol = acham::kCommuteTol;
    bool ver_no_energy = false;
    ver->add_option("-i,--in", ver_in, "input instance")->required();
    ver->add_option("--rounded", ver_rounded, "rounded instance")->required();
    ver->add_option("--tol", ver_tol, "commutator tolerance");
    ver->add_option("--eps", ver_eps, "auto or a promised eps");
    ver->add_flag("--no-energy", ver_no_energy, "skip the ground-energy check");
    ver->add_option("-o,--out", ver_out, "verification report");

    // reduce
    auto *red = app.add_subcommand("reduce", "Reduce a promise instance to a commuting one");
    std::string red_in, red_out, red_eps = "auto";
    std::optional<double> red_a, red_b;
    red->add_option("-i,--in", red_in, "input instance (may carry \"a\" and \"b\")")->required();
    red->add_option("--a", red_a, "YES threshold");
    red->add_option("--b", red_b, "NO threshold");
    red->add_option("--eps", red_eps, "auto or a promised eps");
    red->add_option("-o,--out", red_out, "reduced promise instance (default stdout)");

    // gibbs
    auto *gib = app.add_subcommand("gibbs", "Certify the Gibbs-sampling reduction");
    std::string gib_in, gib_out, gib_eps = "auto";
    double gib_beta = 1.0, gib_delta = 0.1;
    gib->add_option("-i,--in", gib_in, "input instance")->required();
    gib->add_option("--beta", gib_beta, "inverse temperature")->required();
    gib->add_option("--delta", gib_delta, "target precision")->required();
    gib->add_option("--eps", gib_eps, "auto or a promised eps");
    gib->add_option("-o,--out", gib_out, "certificate (default stdout)");

    // split
    auto *spl = app.add_subcommand("split", "Split H into a commuting part and a small remainder");
    std::string spl_in, spl_out, spl_eps = "auto";
    double spl_t = 1.0, spl_tblock = 1.0;
    spl->add_option("-i,--in", spl_in, "input instance")->required();
    spl->add_option("--t", spl_t, "evolution time")->required();
    spl->add_option("--t-block", spl_tblock, "cost of one block-encoding of the commuting part")->required();
    spl->add_option("--eps", spl_eps, "auto or a promised eps");
    spl->add_option("-o,--out", spl_out, "split (default stdout)");

    // evolve
    auto *evo = app.add_subcommand("evolve", "Check the product formula for a commuting instance");
    std::string evo_in, evo_out;
    std::vector<double> evo_t;
    evo->add_option("-i,--in", evo_in, "commuting instance")->required();
    evo->add_option("--t", evo_t, "evolution times (repeatable)")->required();
    evo->add_option("-o,--out", evo_out, "comparison report (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitSchema;
    }

    try {
        if (*gen) {
            acham::GeneratorSpec spec;
            spec.family = gen_family;
            for (const auto &kv : gen_params) {
                add_param(spec, kv);
            }
            std::size_t start = 0;
            while (start < gen_params_csv.size()) {
                std::size_t comma = gen_params_csv.find(',', start);
                if (comma == std::string::npos) {
                    comma = gen_params_csv.size();
                }
                if (comma > start) {
                    add_param(spec, gen_params_csv.substr(start, comma - start));
                }
                start = comma + 1;
            }
            acham::Hamiltonian h = acham::generate(spec);
            emit(gen_out, acham::to_json(h));
            if (!gen_out.empty() && gen_out != "-") {
                std::printf("generated %s: n=%zu m=%zu eps=%.6g\n", gen_family.c_str(), h.n, h.m(),
                            acham::realized_epsilon(h));
            }
            return kExitPass;
        }
        if (*rnd) {
            acham::Hamiltonian h = acham::ingest(acham::read_json_file(rnd_in));
            acham::RoundingResult rr = acham::round(h, parse_eps(rnd_eps));
            acham::write_json_file(rnd_out, acham::to_json(rr.rounded));
            if (!rnd_report.empty()) {
                acham::write_json_file(rnd_report, acham::report_to_json(rr.report));
            }
            const auto &r = rr.report;
            std::printf("eps=%.6g m=%zu residual=%.3g distance_sum=%.6g bound/term=%.6g: %s\n", r.eps, h.m(),
                        r.max_residual_commutator, r.distance_sum, r.per_term_bound,
                        r.bounds_satisfied ? "bounds satisfied" : "BOUNDS VIOLATED");
            for (const auto &v : r.violations) {
                std::printf("  %s\n", v.c_str());
            }
            return r.bounds_satisfied ? kExitPass : kExitAudit;
        }
        if (*ver) {
            acham::Hamiltonian h = acham::ingest(acham::read_json_file(ver_in));
            acham::Hamiltonian hhat = acham::ingest(acham::read_json_file(ver_rounded), false);
            acham::AuditOptions opt;
            opt.eps = parse_eps(ver_eps);
            opt.commute_tol = ver_tol;
            opt.energies = !ver_no_energy;
            acham::VerificationReport v = acham::audit_bounds(h, hhat, opt);
            if (!ver_out.empty()) {
                acham::write_json_file(ver_out, acham::verification_to_json(v));
            }
            std::printf("residual=%.3g global_distance=%.6g%s bound=%.6g: %s\n", v.max_residual, v.global_distance,
                        v.global_exact ? "" : " (summed)", v.global_bound, v.passed ? "audit passed" : "AUDIT FAILED");
            for (const auto &f : v.failures) {
                std::printf("  %s\n", f.c_str());
            }
            return v.passed ? kExitPass : kExitAudit;
        }
        if (*red) {
            acham::Json doc = acham::read_json_file(red_in);
            if (red_a) {
                doc["a"] = *red_a;
            }
            if (red_b) {
                doc["b"] = *red_b;
            }
            acham::PromiseInstance inst = acham::promise_from_json(doc);
            acham::ReductionResult rr = acham::reduce_promise(inst, parse_eps(red_eps));
            emit(red_out, acham::promise_to_json(rr.reduced));
            if (!red_out.empty() && red_out != "-") {
                std::printf("eps=%.6g shift=%.6g a'=%.10g b'=%.10g\n", rr.eps, rr.shift, rr.reduced.a, rr.reduced.b);
            }
            return kExitPass;
        }
        if (*gib) {
            acham::Hamiltonian h = acham::ingest(acham::read_json_file(gib_in));
            acham::GibbsCertificate c = acham::certify_gibbs_reduction(h, gib_beta, gib_delta, parse_eps(gib_eps));
            emit(gib_out, acham::gibbs_to_json(c));
            if (!gib_out.empty() && gib_out != "-") {
                std::printf("distance=%.6g bound=%.6g regime_ok=%s measured=%s\n", c.rounding_distance,
                            c.continuity_bound, c.regime_ok ? "true" : "false",
                            c.measured_trace_distance ? std::to_string(*c.measured_trace_distance).c_str() : "n/a");
            }
            return c.measured_within_bound ? kExitPass : kExitAudit;
        }
        if (*spl) {
            acham::Hamiltonian h = acham::ingest(acham::read_json_file(spl_in));
            acham::SimulationSplit s = acham::simulation_split(h, spl_t, spl_tblock, parse_eps(spl_eps));
            emit(spl_out, acham::split_to_json(s));
            if (!spl_out.empty() && spl_out != "-") {
                std::printf("%s\n", s.cost_formula.c_str());
            }
            return kExitPass;
        }
        if (*evo) {
            acham::Hamiltonian hc = acham::ingest(acham::read_json_file(evo_in), false);
            auto cmp = acham::compare_evolution(hc, evo_t);
            acham::Json doc;
            doc["format"] = "acham-evolve-v1";
            doc["n"] = hc.n;
            doc["m"] = hc.m();
            doc["comparisons"] = acham::Json::array();
            bool ok = true;
            for (const auto &c : cmp) {
                bool pass = c.deviation <= 1e-8 && c.unitarity_defect <= 1e-9;
                ok = ok && pass;
                doc["comparisons"].push_back({{"t", c.t},
                                              {"deviation", c.deviation},
                                              {"unitarity_defect", c.unitarity_defect},
                                              {"passed", pass}});
            }
            doc["passed"] = ok;
            emit(evo_out, doc);
            return ok ? kExitPass : kExitAudit;
        }
    } catch (const acham::Error &e) {
        std::fprintf(stderr, "acham: %s\n", e.what());
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        std::fprintf(stderr, "acham: %s\n", e.what());
        return kExitSchema;
    }
    return kExitSchema;
}
