// Command-line front end: exact chain-complex computations over
// integral group rings, with certificate-bearing JSON reports.
//
// Exit codes: 0 = verdict computed (including "not silent"/"unknown"),
// 2 = malformed input, 1 = internal error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "zgchain/io.hpp"
#include "zgchain/realize.hpp"
#include "zgchain/transform.hpp"

using namespace zgc;
using json = io::json;

namespace {

struct ReportSink {
    std::string path;  // empty: stdout
    io::ToolConfig config;
    json inputs = json::object();
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void note_input(const std::string& p) { inputs[p] = io::file_hash(p); }

    int emit(const std::string& command, json results) {
        json rep;
        rep["command"] = command;
        rep["inputs"] = inputs;
        rep["config"] = config.to_json();
        for (auto& [k, v] : results.items()) rep[k] = v;
        if (config.emit_timing) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                            started);
            rep["timing_ms"] = ms.count();
        }
        std::string text = rep.dump(2) + "\n";
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(path, std::ios::binary);
            out << text;
        }
        return 0;
    }
};

json validation_to_json(const std::optional<ValidationFailure>& v) {
    json j;
    j["valid"] = !v.has_value();
    if (v) {
        j["reason"] = v->reason;
        j["degree"] = v->degree;
        j["witness_column"] = v->witness_column;
    }
    return j;
}

GroupRingMatrix load_idempotent(const std::string& path, GroupData* group_out) {
    json j = io::load_json_file(path);
    GroupData g = io::resolve_group_ref(j.at("group"), io::dirname_of(path));
    GroupRingMatrix m = io::json_to_gr_matrix(j.at("matrix"), "idempotent");
    if (group_out) *group_out = g;
    return m;
}

SubcomplexDesignation load_designation(const std::string& path) {
    json j = io::load_json_file(path);
    SubcomplexDesignation d;
    d.bottom_degree = j.value("bottom_degree", 0);
    for (const auto& row : j.at("columns")) d.columns.push_back(row.get<std::vector<std::size_t>>());
    return d;
}

K0Registry load_registry(const std::string& path) {
    if (path.empty()) return K0Registry::builtin();
    return io::json_to_registry(io::load_json_file(path));
}

json self_dual_verdict_json(SelfDualVerdict v) {
    switch (v) {
        case SelfDualVerdict::consistent: return json("consistent");
        case SelfDualVerdict::violated: return json("violated");
        default: return json("unknown");
    }
}

json product_report_json(const ProductFormulaReport& r) {
    json j;
    j["preconditions_ok"] = r.preconditions_ok;
    if (!r.failure.empty()) j["failure"] = r.failure;
    j["chi"] = io::int_to_json(r.chi);
    j["flattened_euler_multiplicative"] = r.ranks_multiplicative;
    json xs = json::array(), ts = json::array();
    for (const auto& c : r.x_certs) xs.push_back(io::silence_certificate_to_json(c));
    for (const auto& c : r.t_certs) ts.push_back(io::silence_certificate_to_json(c));
    j["factor_silence"] = xs;
    j["product_silence"] = ts;
    if (r.preconditions_ok) {
        j["triviality"] = io::triviality_to_json(r.triviality);
        j["verdict"] = r.consistent ? "consistent" : "unknown";
    }
    return j;
}

json pair_report_json(const PairAdditivityReport& r) {
    json j;
    j["preconditions_ok"] = r.preconditions_ok;
    if (!r.failure.empty()) j["failure"] = r.failure;
    if (r.preconditions_ok) {
        j["relative_fingerprint"] = io::fingerprint_to_json(r.relative_fingerprint);
        j["relative_projective"] = r.relative_projective;
        j["trace_t"] = io::int_to_json(r.trace_t);
        j["trace_x"] = io::int_to_json(r.trace_x);
        j["relative_rank"] = io::int_to_json(r.relative_rank);
        j["trace_identity"] = r.trace_identity;
        j["triviality"] = io::triviality_to_json(r.triviality);
        j["verdict"] = r.consistent ? "consistent" : "unknown";
    }
    return j;
}

json relative_duality_json(const RelativeDualityReport& r) {
    json j;
    j["preconditions_ok"] = r.preconditions_ok;
    if (!r.failure.empty()) j["failure"] = r.failure;
    if (r.preconditions_ok) {
        j["rank_cascade"] = r.rank_cascade;
        j["rank_match"] = r.rank_match;
        j["fingerprint_match"] = r.fingerprint_match;
        j["bottom_rank"] = io::int_to_json(r.bottom_rank);
        j["top_rank"] = io::int_to_json(r.top_rank);
        j["bottom_fingerprint"] = io::fingerprint_to_json(r.bottom_fp);
        j["top_fingerprint"] = io::fingerprint_to_json(r.top_fp);
        j["dual_fingerprint"] = io::fingerprint_to_json(r.dual_fp);
        j["verdict"] = r.consistent ? "consistent" : "inconsistent";
    }
    return j;
}

json self_duality_json(const SelfDualityReport& r) {
    json j;
    j["preconditions_ok"] = r.preconditions_ok;
    if (!r.failure.empty()) j["failure"] = r.failure;
    if (r.preconditions_ok) {
        j["image_rank_identity"] = r.image_rank_identity;
        j["cycle_dual_trace"] = r.cycle_dual_trace;
        j["cycle_dual_fingerprint"] = r.cycle_dual_fingerprint;
        j["class_verdict"] = self_dual_verdict_json(r.class_verdict);
        j["verdict"] = r.consistent ? "consistent" : (r.class_verdict == SelfDualVerdict::unknown &&
                                                              r.image_rank_identity && r.cycle_dual_trace &&
                                                              r.cycle_dual_fingerprint
                                                          ? "unknown"
                                                          : "inconsistent");
    }
    return j;
}

bool is_zero_one_diagonal_matrix(const GroupRingMatrix& e) {
    for (std::size_t i = 0; i < e.rows(); ++i)
        for (std::size_t j = 0; j < e.cols(); ++j) {
            if (i != j && !e(i, j).is_zero()) return false;
            if (i == j && !e(i, j).is_zero() && e(i, j) != GroupRingElement::one()) return false;
        }
    return true;
}

// Re-verify all certificates inlined in a report using only matrix
// arithmetic (no solvers).
json verify_report(const json& rep) {
    json out;
    json checks = json::array();
    auto add_check = [&](const std::string& name, bool ok, const std::string& detail = "") {
        json c;
        c["check"] = name;
        c["ok"] = ok;
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(c);
    };
    const std::string cmd = rep.at("command").get<std::string>();
    FreeChainComplex complex_in;
    bool have_complex = rep.contains("complex");
    if (have_complex) complex_in = io::json_to_complex(rep.at("complex"), ".");

    auto verify_silence_list = [&](const json& list, const FreeChainComplex& c, const std::string& label) {
        for (const auto& item : list) {
            SilenceCertificate cert = io::json_to_silence_certificate(item, c.group());
            std::string why;
            bool ok = verify_silence_certificate(c, cert, &why);
            add_check(label + " degree " + std::to_string(cert.degree), ok, why);
        }
    };

    if (rep.contains("silence") && have_complex) {
        verify_silence_list(rep.at("silence").is_array() ? rep.at("silence") : json::array({rep.at("silence")}),
                            complex_in, "silence certificate");
    }
    if (rep.contains("representative")) {
        const json& r = rep.at("representative");
        GroupData g = complex_in.group();
        for (const auto& e : r.at("positive")) {
            GroupRingMatrix m = io::json_to_gr_matrix(e, "representative");
            add_check("representative idempotent", m.is_idempotent(g));
        }
        for (const auto& e : r.at("negative")) {
            GroupRingMatrix m = io::json_to_gr_matrix(e, "representative");
            add_check("representative idempotent", m.is_idempotent(g));
        }
    }
    if (rep.contains("certificate") && rep.contains("output_complex") && have_complex) {
        FreeChainComplex out_c = io::json_to_complex(rep.at("output_complex"), ".");
        HomotopyCertificate cert = io::json_to_homotopy_certificate(rep.at("certificate"));
        std::string why;
        add_check("homotopy certificate", verify_homotopy_certificate(complex_in, out_c, cert, &why), why);
        add_check("output complex valid", !out_c.validate().has_value());
    }
    if (rep.contains("output_complex") && !rep.contains("certificate")) {
        FreeChainComplex out_c = io::json_to_complex(rep.at("output_complex"), ".");
        add_check("output complex valid", !out_c.validate().has_value());
    }
    for (const std::string key : {"factor_silence", "product_silence"}) {
        if (rep.contains(key) && rep.contains(key == "factor_silence" ? "complex" : "output_complex")) {
            FreeChainComplex c = io::json_to_complex(
                rep.at(key == "factor_silence" ? "complex" : "output_complex"), ".");
            verify_silence_list(rep.at(key), c, key);
        }
    }
    if (rep.contains("triviality")) {
        const json& t = rep.at("triviality");
        if (t.contains("conjugator")) {
            GroupData g = complex_in.group();
            GroupRingMatrix subject = io::json_to_gr_matrix(t.at("subject"), "subject");
            GroupRingMatrix w = io::json_to_gr_matrix(t.at("conjugator"), "conjugator");
            GroupRingMatrix winv = io::json_to_gr_matrix(t.at("conjugator_inverse"), "conjugator inverse");
            bool inv_ok = w.mul(winv, g) == GroupRingMatrix::identity(w.rows()) &&
                          winv.mul(w, g) == GroupRingMatrix::identity(w.rows());
            GroupRingMatrix conj = w.mul(subject, g).mul(winv, g);
            add_check("triviality witness", inv_ok && subject.is_idempotent(g) && is_zero_one_diagonal_matrix(conj));
        }
    }
    (void)cmd;
    bool all_ok = true;
    for (const auto& c : checks) all_ok = all_ok && c.at("ok").get<bool>();
    out["checks"] = checks;
    out["all_ok"] = all_ok;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zgchain: exact chain complexes over integral group rings"};
    app.require_subcommand(1);

    std::string report_path, config_path, registry_path;
    app.add_option("--report", report_path, "write the JSON report to this file (default: stdout)");
    app.add_option("--config", config_path, "configuration file (JSON); env ZGCHAIN_CONFIG is the fallback");
    app.add_option("--registry", registry_path, "known-K0 registry file (default: builtin table)");

    std::string complex_path, base_path, idem_path, module_path, right_path, sub_path, group_path, output_path,
        report_in;
    int degree = 0, from_deg = 0, to_deg = 0, dim_n = 0, stage = 0, kk = 0, ll = 0;
    bool stabilize = false, check_formula = false;
    std::string coefficients = "trivial", parity = "even";

    auto* c_validate = app.add_subcommand("validate", "check complex invariants");
    c_validate->add_option("--complex", complex_path)->required();

    auto* c_homology = app.add_subcommand("homology", "homology of the complex in one degree");
    c_homology->add_option("--complex", complex_path)->required();
    c_homology->add_option("--degree", degree)->required();

    auto* c_cohomology = app.add_subcommand("cohomology", "cohomology with local coefficients");
    c_cohomology->add_option("--complex", complex_path)->required();
    c_cohomology->add_option("--degree", degree)->required();
    c_cohomology->add_option("--coefficients", coefficients, "regular | trivial | augmentation");
    c_cohomology->add_option("--module", module_path, "lattice module file (overrides --coefficients)");

    auto* c_silence = app.add_subcommand("silence", "decide cohomology silence with certificates");
    c_silence->add_option("--complex", complex_path)->required();
    c_silence->add_option("--degree", degree);
    c_silence->add_option("--from", from_deg);
    c_silence->add_option("--to", to_deg);

    auto* c_obstruction = app.add_subcommand("obstruction", "cell-dispensability obstruction representative");
    c_obstruction->add_option("--complex", complex_path)->required();
    c_obstruction->add_option("--degree", degree)->required();

    auto* c_realize = app.add_subcommand("realize", "realization complex for an idempotent");
    c_realize->add_option("--base", base_path)->required();
    c_realize->add_option("--idempotent", idem_path)->required();
    c_realize->add_option("--k", kk)->required();
    c_realize->add_option("--l", ll);
    c_realize->add_option("--stage", stage);
    c_realize->add_option("--output", output_path);

    auto* c_dualize = app.add_subcommand("dualize", "dual complex in formal dimension n");
    c_dualize->add_option("--complex", complex_path)->required();
    c_dualize->add_option("--dimension", dim_n)->required();
    c_dualize->add_option("--output", output_path);

    auto* c_product = app.add_subcommand("product", "tensor product over the product group");
    c_product->add_option("--left", complex_path)->required();
    c_product->add_option("--right", right_path)->required();
    c_product->add_option("--output", output_path);
    c_product->add_flag("--check-formula", check_formula, "also run the product-formula check");
    c_product->add_option("--k", kk);
    c_product->add_option("--l", ll);

    auto* c_cancel = app.add_subcommand("cancel", "cancel gap cells with a homotopy certificate");
    c_cancel->add_option("--complex", complex_path)->required();
    c_cancel->add_option("--from", from_deg)->required();
    c_cancel->add_option("--to", to_deg)->required();
    c_cancel->add_flag("--stabilize", stabilize, "use witness-driven stabilization");
    c_cancel->add_option("--output", output_path);

    auto* c_pair = app.add_subcommand("pair-check", "pair additivity of the obstruction");
    c_pair->add_option("--complex", complex_path)->required();
    c_pair->add_option("--subcomplex", sub_path)->required();
    c_pair->add_option("--degree", degree)->required();

    auto* c_reldual = app.add_subcommand("rel-duality", "relative duality of end homologies");
    c_reldual->add_option("--complex", complex_path)->required();
    c_reldual->add_option("--dimension", dim_n)->required();

    auto* c_tate = app.add_subcommand("tate", "Z2-Tate cohomology of an involuted abelian group");
    c_tate->add_option("--group-data", group_path)->required();
    c_tate->add_option("--parity", parity, "even | odd");

    auto* c_selfdual = app.add_subcommand("self-dual", "chain-level self-duality check");
    c_selfdual->add_option("--complex", complex_path)->required();
    c_selfdual->add_option("--dimension", dim_n)->required();
    c_selfdual->add_option("--degree", degree)->required();

    auto* c_verify = app.add_subcommand("verify-certificate", "re-verify certificates in a report");
    c_verify->add_option("--report-file", report_in)->required();

    CLI11_PARSE(app, argc, argv);

    ReportSink sink;
    sink.path = report_path;
    try {
        if (config_path.empty()) {
            if (const char* env = std::getenv("ZGCHAIN_CONFIG")) config_path = env;
        }
        if (!config_path.empty()) {
            sink.config = io::ToolConfig::from_json(io::load_json_file(config_path));
            sink.note_input(config_path);
        }
        K0Registry registry = load_registry(registry_path);
        if (!registry_path.empty()) sink.note_input(registry_path);
        const TrivialityConfig& tcfg = sink.config.triviality;

        if (*c_validate) {
            sink.note_input(complex_path);
            FreeChainComplex c = io::load_complex(complex_path);
            json res;
            res["complex"] = io::complex_to_json(c);
            res["result"] = validation_to_json(c.validate());
            return sink.emit("validate", res);
        }
        if (*c_homology) {
            sink.note_input(complex_path);
            FreeChainComplex c = io::load_complex(complex_path);
            if (auto err = c.validate()) throw io::ParseError("invalid complex: " + err->reason);
            json res;
            res["complex"] = io::complex_to_json(c);
            res["degree"] = degree;
            res["module"] = io::fp_module_to_json(homology_module(c, degree));
            res["group"] = io::abelian_group_to_json(homology_group(c, degree));
            return sink.emit("homology", res);
        }
        if (*c_cohomology) {
            sink.note_input(complex_path);
            FreeChainComplex c = io::load_complex(complex_path);
            if (auto err = c.validate()) throw io::ParseError("invalid complex: " + err->reason);
            FPModule r;
            if (!module_path.empty()) {
                sink.note_input(module_path);
                json mj = io::load_json_file(module_path);
                r = io::json_to_fp_module(mj, c.group());
            } else if (coefficients == "regular") {
                r = LatticeModule::regular(c.group()).as_fp_module();
            } else if (coefficients == "augmentation") {
                r = LatticeModule::augmentation_ideal(c.group()).as_fp_module();
            } else if (coefficients == "trivial") {
                r = LatticeModule::trivial(c.group()).as_fp_module();
            } else {
                throw io::ParseError("unknown coefficients: " + coefficients);
            }
            json res;
            res["complex"] = io::complex_to_json(c);
            res["degree"] = degree;
            res["coefficients"] = module_path.empty() ? coefficients : module_path;
            res["group"] = io::abelian_group_to_json(cohomology_local(c, r, degree));
            return sink.emit("cohomology", res);
        }
        if (*c_silence) {
            sink.note_input(complex_path);
            FreeChainComplex c = io::load_complex(complex_path);
            json res;
            res["complex"] = io::complex_to_json(c);
            json certs = json::array();
            bool overall = true;
            int a = c_silence->count("--degree") ? degree : from_deg;
            int b = c_silence->count("--degree") ? degree : to_deg;
            if (!c_silence->count("--degree") && !(c_silence->count("--from") && c_silence->count("--to")))
                throw io::ParseError("silence: give --degree or --from/--to");
            for (const auto& cert : silent_in_range(c, a, b)) {
                overall = overall && cert.kind == SilenceCertificate::Kind::silent;
                certs.push_back(io::silence_certificate_to_json(cert));
            }
            res["silence"] = certs;
            res["verdict"] = overall ? "silent" : "not-silent";
            return sink.emit("silence", res);
        }
        if (*c_obstruction) {
            sink.note_input(complex_path);
            FreeChainComplex c = io::load_complex(complex_path);
            ObstructionResult r = obstruction(c, degree);
            json res;
            res["complex"] = io::complex_to_json(c);
            res["degree"] = degree;
            res["silence"] = json::array({io::silence_certificate_to_json(r.silence)});
            res["defined"] = r.defined;
            if (r.defined) res["representative"] = io::kzero_rep_to_json(r.rep);
            return sink.emit("obstruction", res);
        }
        if (*c_realize) {
            sink.note_input(base_path);
            sink.note_input(idem_path);
            FreeChainComplex y = io::load_complex(base_path);
            GroupData g;
            GroupRingMatrix e = load_idempotent(idem_path, &g);
            if (!same_group(g, y.group())) throw io::ParseError("realize: idempotent group differs from base group");
            RealizationInput in{y, e, kk, c_realize->count("--l") ? ll : kk + 1};
            FreeChainComplex out = c_realize->count("--stage") ? realize_stage(in, stage) : realize_finite(in);
            json res;
            res["k"] = kk;
            if (c_realize->count("--stage"))
                res["stage"] = stage;
            else
                res["l"] = in.l;
            res["output_complex"] = io::complex_to_json(out);
            res["output_valid"] = !out.validate().has_value();
            if (!output_path.empty()) {
                std::ofstream f(output_path, std::ios::binary);
                f << io::complex_to_json(out).dump(2) << "\n";
                res["output"] = output_path;
            }
            return sink.emit("realize", res);
        }
        if (*c_dualize) {
            sink.note_input(complex_path);
            FreeChainComplex c = io::load_complex(complex_path);
            FreeChainComplex d = dualize(c, dim_n);
            json res;
            res["complex"] = io::complex_to_json(c);
            res["dimension"] = dim_n;
            res["output_complex"] = io::complex_to_json(d);
            res["output_valid"] = !d.validate().has_value();
            if (!output_path.empty()) {
                std::ofstream f(output_path, std::ios::binary);
                f << io::complex_to_json(d).dump(2) << "\n";
                res["output"] = output_path;
            }
            return sink.emit("dualize", res);
        }
        if (*c_product) {
            sink.note_input(complex_path);
            sink.note_input(right_path);
            FreeChainComplex x = io::load_complex(complex_path);
            FreeChainComplex a = io::load_complex(right_path);
            FreeChainComplex t = tensor_product(x, a);
            json res;
            res["complex"] = io::complex_to_json(x);
            res["right_complex"] = io::complex_to_json(a);
            res["output_complex"] = io::complex_to_json(t);
            res["output_valid"] = !t.validate().has_value();
            if (check_formula) {
                if (!(c_product->count("--k") && c_product->count("--l")))
                    throw io::ParseError("product --check-formula needs --k and --l");
                res["formula"] = product_report_json(product_formula_check(x, kk, ll, a, registry, tcfg));
            }
            if (!output_path.empty()) {
                std::ofstream f(output_path, std::ios::binary);
                f << io::complex_to_json(t).dump(2) << "\n";
                res["output"] = output_path;
            }
            return sink.emit("product", res);
        }
        if (*c_cancel) {
            sink.note_input(complex_path);
            FreeChainComplex c = io::load_complex(complex_path);
            CancelResult r = stabilize ? cancel_gap_stabilized(c, from_deg, to_deg, tcfg)
                                       : cancel_gap(c, from_deg, to_deg);
            json res;
            res["complex"] = io::complex_to_json(c);
            res["from"] = from_deg;
            res["to"] = to_deg;
            res["stabilized"] = stabilize;
            res["success"] = r.success;
            res["note"] = r.note;
            res["output_complex"] = io::complex_to_json(r.output);
            res["certificate"] = io::homotopy_certificate_to_json(r.cert);
            if (!output_path.empty()) {
                std::ofstream f(output_path, std::ios::binary);
                f << io::complex_to_json(r.output).dump(2) << "\n";
                res["output"] = output_path;
            }
            return sink.emit("cancel", res);
        }
        if (*c_pair) {
            sink.note_input(complex_path);
            sink.note_input(sub_path);
            FreeChainComplex t = io::load_complex(complex_path);
            SubcomplexDesignation x = load_designation(sub_path);
            json res;
            res["complex"] = io::complex_to_json(t);
            res["degree"] = degree;
            res["result"] = pair_report_json(pair_additivity(t, x, degree, registry, tcfg));
            return sink.emit("pair-check", res);
        }
        if (*c_reldual) {
            sink.note_input(complex_path);
            FreeChainComplex w = io::load_complex(complex_path);
            json res;
            res["complex"] = io::complex_to_json(w);
            res["dimension"] = dim_n;
            res["result"] = relative_duality_json(relative_duality_check(w, dim_n));
            return sink.emit("rel-duality", res);
        }
        if (*c_tate) {
            sink.note_input(group_path);
            InvolutedAbelianGroup a = io::json_to_involuted_group(io::load_json_file(group_path));
            TateParity p;
            if (parity == "even")
                p = TateParity::even;
            else if (parity == "odd")
                p = TateParity::odd;
            else
                throw io::ParseError("tate: parity must be even or odd");
            json res;
            res["parity"] = parity;
            res["group"] = io::abelian_group_to_json(tate_z2(a, p));
            return sink.emit("tate", res);
        }
        if (*c_selfdual) {
            sink.note_input(complex_path);
            FreeChainComplex c = io::load_complex(complex_path);
            json res;
            res["complex"] = io::complex_to_json(c);
            res["dimension"] = dim_n;
            res["degree"] = degree;
            res["result"] = self_duality_json(poincare_self_duality_check(c, dim_n, degree, registry, tcfg));
            return sink.emit("self-dual", res);
        }
        if (*c_verify) {
            sink.note_input(report_in);
            json rep = io::load_json_file(report_in);
            json res;
            res["verified_report"] = report_in;
            res["result"] = verify_report(rep);
            return sink.emit("verify-certificate", res);
        }
        throw io::ParseError("no subcommand");
    } catch (const io::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
