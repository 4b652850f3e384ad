#pragma once

// JSON input/output: group files, complex files, matrices, registry and
// involuted-group files, configuration, and deterministic run reports.
// All report serialization uses ordered_json and stable field order so
// identical inputs produce byte-identical reports.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "zgchain/cancel.hpp"
#include "zgchain/chain_map.hpp"
#include "zgchain/kzero.hpp"
#include "zgchain/silence.hpp"

namespace zgc::io {

using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// ---------------------------------------------------------------------------
// basics

inline json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
    return json(v.get_str());
}

inline Int json_to_int(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw ParseError(where + ": expected integer (number or decimal string)");
}

inline json int_matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(row);
    }
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = rows;
    return out;
}

inline IntMatrix json_to_int_matrix(const json& j, const std::string& where) {
    if (j.is_array()) {
        // bare row-major array form
        std::size_t rows = j.size();
        std::size_t cols = rows == 0 ? 0 : j.at(0).size();
        IntMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            if (j.at(r).size() != cols) throw ParseError(where + ": ragged matrix");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = json_to_int(j.at(r).at(c), where);
        }
        return m;
    }
    if (!j.is_object() || !j.contains("entries")) throw ParseError(where + ": expected matrix");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    IntMatrix m(rows, cols);
    const json& e = j.at("entries");
    if (e.size() != rows) throw ParseError(where + ": wrong row count");
    for (std::size_t r = 0; r < rows; ++r) {
        if (e.at(r).size() != cols) throw ParseError(where + ": wrong column count");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = json_to_int(e.at(r).at(c), where);
    }
    return m;
}

// ---------------------------------------------------------------------------
// groups

inline json group_to_json(const GroupData& g) {
    json out;
    out["name"] = g.name();
    out["elements"] = g.element_names();
    out["table"] = g.table();
    out["omega"] = g.omega_values();
    return out;
}

inline GroupData json_to_group(const json& j) {
    if (!j.is_object()) throw ParseError("group: expected object");
    std::string name = j.value("name", "G");
    if (j.contains("table") && j.at("table").is_object()) {
        const json& t = j.at("table");
        if (!t.contains("perm_generators")) throw ParseError("group: table object without perm_generators");
        std::vector<std::vector<int>> gens = t.at("perm_generators").get<std::vector<std::vector<int>>>();
        std::vector<int> omega;
        if (j.contains("omega")) omega = j.at("omega").get<std::vector<int>>();
        return GroupData::from_permutation_generators(name, gens, omega);
    }
    if (!j.contains("elements") || !j.contains("table")) throw ParseError("group: missing elements/table");
    std::vector<std::string> elements = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
    std::vector<int> omega;
    if (j.contains("omega"))
        omega = j.at("omega").get<std::vector<int>>();
    else
        omega.assign(elements.size(), 1);
    try {
        return GroupData(name, elements, table, omega);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("group: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// group-ring matrices and complexes

inline json gr_element_to_json(const GroupRingElement& e) {
    json terms = json::array();
    for (const auto& [g, c] : e.coeffs()) {
        json t = json::array();
        t.push_back(int_to_json(c));
        t.push_back(g);
        terms.push_back(t);
    }
    return terms;
}

inline GroupRingElement json_to_gr_element(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected list of [coeff, element] pairs");
    GroupRingElement e;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) throw ParseError(where + ": bad term");
        e.add_term(json_to_int(t.at(0), where), t.at(1).get<std::size_t>());
    }
    return e;
}

inline json gr_matrix_to_json(const GroupRingMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(gr_element_to_json(m(i, j)));
        rows.push_back(row);
    }
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = rows;
    return out;
}

inline GroupRingMatrix json_to_gr_matrix(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("entries")) throw ParseError(where + ": expected matrix object");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    GroupRingMatrix m(rows, cols);
    const json& e = j.at("entries");
    if (e.size() != rows) throw ParseError(where + ": wrong row count");
    for (std::size_t r = 0; r < rows; ++r) {
        if (e.at(r).size() != cols) throw ParseError(where + ": wrong column count");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = json_to_gr_element(e.at(r).at(c), where);
    }
    return m;
}

inline json complex_to_json(const FreeChainComplex& c) {
    json out;
    out["group"] = group_to_json(c.group());
    out["bottom_degree"] = c.bottom_degree();
    out["ranks"] = c.ranks();
    json bnds = json::array();
    for (const auto& b : c.boundaries()) bnds.push_back(gr_matrix_to_json(b));
    out["boundaries"] = bnds;
    return out;
}

// `group` may be inline or a path relative to `base_dir`.
inline GroupData resolve_group_ref(const json& j, const std::string& base_dir);

inline FreeChainComplex json_to_complex(const json& j, const std::string& base_dir) {
    if (!j.is_object()) throw ParseError("complex: expected object");
    GroupData g = resolve_group_ref(j.at("group"), base_dir);
    int bottom = j.value("bottom_degree", 0);
    std::vector<std::size_t> ranks = j.at("ranks").get<std::vector<std::size_t>>();
    std::vector<GroupRingMatrix> bnds;
    if (j.contains("boundaries"))
        for (std::size_t i = 0; i < j.at("boundaries").size(); ++i)
            bnds.push_back(json_to_gr_matrix(j.at("boundaries").at(i), "boundary " + std::to_string(i)));
    if (!ranks.empty() && bnds.size() + 1 != ranks.size())
        throw ParseError("complex: boundaries length must be ranks length - 1");
    return FreeChainComplex(std::move(g), bottom, std::move(ranks), std::move(bnds));
}

// ---------------------------------------------------------------------------
// files

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

inline std::string dirname_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

inline GroupData resolve_group_ref(const json& j, const std::string& base_dir) {
    if (j.is_string()) {
        std::string p = j.get<std::string>();
        if (!p.empty() && p[0] != '/') p = base_dir + "/" + p;
        return json_to_group(load_json_file(p));
    }
    return json_to_group(j);
}

inline FreeChainComplex load_complex(const std::string& path) {
    return json_to_complex(load_json_file(path), dirname_of(path));
}

inline GroupData load_group(const std::string& path) { return json_to_group(load_json_file(path)); }

// FNV-1a 64-bit content hash (stability stamp, not cryptographic).
inline std::string content_hash(const std::string& data) {
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream s;
    s << "fnv1a64:" << std::hex << h;
    return s.str();
}

inline std::string file_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return content_hash(buf.str());
}

// ---------------------------------------------------------------------------
// involuted abelian groups and the registry

inline json involuted_group_to_json(const InvolutedAbelianGroup& a) {
    json out;
    out["generators"] = a.generators;
    out["relations"] = int_matrix_to_json(a.relations);
    out["involution"] = int_matrix_to_json(a.involution);
    return out;
}

inline InvolutedAbelianGroup json_to_involuted_group(const json& j) {
    InvolutedAbelianGroup a;
    a.generators = j.at("generators").get<std::size_t>();
    a.relations = j.contains("relations") ? json_to_int_matrix(j.at("relations"), "relations")
                                          : IntMatrix(a.generators, 0);
    a.involution = j.contains("involution") ? json_to_int_matrix(j.at("involution"), "involution")
                                            : IntMatrix::identity(a.generators);
    if (a.relations.rows() != a.generators) throw ParseError("involuted group: relations row mismatch");
    if (auto err = a.validate()) throw ParseError("involuted group: " + *err);
    return a;
}

inline json registry_to_json(const K0Registry& r) {
    json out = json::array();
    for (const auto& e : r.entries()) {
        json item;
        item["group"] = e.group_name;
        item["structural_key"] = e.structural_key;
        if (e.k0_trivial)
            item["k0_tilde"] = "zero";
        else
            item["k0_tilde"] = involuted_group_to_json(e.k0);
        item["source"] = e.source;
        out.push_back(item);
    }
    return out;
}

inline K0Registry json_to_registry(const json& j) {
    if (!j.is_array()) throw ParseError("registry: expected array of entries");
    K0Registry r;
    for (const auto& item : j) {
        K0RegistryEntry e;
        e.group_name = item.at("group").get<std::string>();
        e.structural_key = item.at("structural_key").get<std::string>();
        const json& k0 = item.at("k0_tilde");
        if (k0.is_string() && k0.get<std::string>() == "zero") {
            e.k0_trivial = true;
        } else {
            e.k0_trivial = false;
            e.k0 = json_to_involuted_group(k0);
        }
        e.source = item.value("source", "");
        r.add(std::move(e));
    }
    return r;
}

// ---------------------------------------------------------------------------
// configuration

struct ToolConfig {
    TrivialityConfig triviality;
    long oracle_box_bound = 4;
    bool emit_timing = false;

    static ToolConfig from_json(const json& j) {
        ToolConfig c;
        c.triviality.coeff_bound = j.value("witness_coeff_bound", 4);
        c.triviality.stab_rank = j.value("witness_stab_rank", 2);
        c.triviality.node_budget = j.value("witness_node_budget", 4000);
        c.oracle_box_bound = j.value("oracle_box_bound", 4);
        c.emit_timing = j.value("emit_timing", false);
        return c;
    }
    json to_json() const {
        json j;
        j["witness_coeff_bound"] = triviality.coeff_bound;
        j["witness_stab_rank"] = triviality.stab_rank;
        j["witness_node_budget"] = triviality.node_budget;
        j["oracle_box_bound"] = oracle_box_bound;
        j["emit_timing"] = emit_timing;
        return j;
    }
};

// ---------------------------------------------------------------------------
// structured results

inline json abelian_group_to_json(const AbelianGroup& g) {
    json j;
    j["free_rank"] = g.free_rank;
    json t = json::array();
    for (const Int& v : g.torsion) t.push_back(int_to_json(v));
    j["torsion"] = t;
    j["pretty"] = g.to_string();
    return j;
}

inline json functional_to_json(const NonMembershipFunctional& f) {
    json j;
    json phi = json::array();
    for (const Int& v : f.phi) phi.push_back(int_to_json(v));
    j["phi"] = phi;
    j["modulus"] = int_to_json(f.modulus);
    return j;
}

inline NonMembershipFunctional json_to_functional(const json& j) {
    NonMembershipFunctional f;
    for (const auto& v : j.at("phi")) f.phi.push_back(json_to_int(v, "functional"));
    f.modulus = json_to_int(j.at("modulus"), "functional");
    return f;
}

inline json int_vector_to_json(const std::vector<Int>& v) {
    json j = json::array();
    for (const Int& x : v) j.push_back(int_to_json(x));
    return j;
}

inline std::vector<Int> json_to_int_vector(const json& j, const std::string& where) {
    std::vector<Int> v;
    for (const auto& x : j) v.push_back(json_to_int(x, where));
    return v;
}

inline json fp_module_to_json(const FPModule& m) {
    json j;
    j["generators"] = m.generators;
    j["relations"] = int_matrix_to_json(m.relations);
    json act = json::array();
    for (const auto& a : m.action) act.push_back(int_matrix_to_json(a));
    j["action"] = act;
    return j;
}

inline FPModule json_to_fp_module(const json& j, const GroupData& g) {
    FPModule m;
    m.group = g;
    m.generators = j.at("generators").get<std::size_t>();
    m.relations = json_to_int_matrix(j.at("relations"), "fp module relations");
    for (const auto& a : j.at("action")) m.action.push_back(json_to_int_matrix(a, "fp module action"));
    if (m.action.size() != g.order()) throw ParseError("fp module: action table size mismatch");
    return m;
}

inline json silence_certificate_to_json(const SilenceCertificate& c) {
    json j;
    j["degree"] = c.degree;
    j["kind"] = c.kind == SilenceCertificate::Kind::silent ? "silent" : "not-silent";
    if (c.kind == SilenceCertificate::Kind::silent) {
        j["retraction_witness"] = gr_matrix_to_json(c.retraction_witness);
        j["cycle_factorization"] = gr_matrix_to_json(c.cycle_factorization);
    } else {
        j["failure"] = c.failure == SilenceCertificate::Failure::retraction ? "retraction" : "homology";
        j["counterexample"] = fp_module_to_json(c.counterexample);
        j["cocycle"] = int_vector_to_json(c.cocycle);
        j["cocycle_relation_combo"] = int_vector_to_json(c.cocycle_relation_combo);
        j["class_functional"] = functional_to_json(c.class_functional);
        if (c.failure == SilenceCertificate::Failure::homology) {
            j["homology_witness"] = int_vector_to_json(c.homology_witness);
            j["homology_functional"] = functional_to_json(c.homology_functional);
        }
    }
    return j;
}

inline SilenceCertificate json_to_silence_certificate(const json& j, const GroupData& g) {
    SilenceCertificate c;
    c.degree = j.at("degree").get<int>();
    if (j.at("kind").get<std::string>() == "silent") {
        c.kind = SilenceCertificate::Kind::silent;
        c.retraction_witness = json_to_gr_matrix(j.at("retraction_witness"), "retraction witness");
        c.cycle_factorization = json_to_gr_matrix(j.at("cycle_factorization"), "cycle factorization");
    } else {
        c.kind = SilenceCertificate::Kind::not_silent;
        c.failure = j.at("failure").get<std::string>() == "retraction" ? SilenceCertificate::Failure::retraction
                                                                       : SilenceCertificate::Failure::homology;
        c.counterexample = json_to_fp_module(j.at("counterexample"), g);
        c.cocycle = json_to_int_vector(j.at("cocycle"), "cocycle");
        c.cocycle_relation_combo = json_to_int_vector(j.at("cocycle_relation_combo"), "cocycle combo");
        c.class_functional = json_to_functional(j.at("class_functional"));
        if (c.failure == SilenceCertificate::Failure::homology) {
            c.homology_witness = json_to_int_vector(j.at("homology_witness"), "homology witness");
            c.homology_functional = json_to_functional(j.at("homology_functional"));
        }
    }
    return c;
}

inline json kzero_rep_to_json(const KZeroRep& r) {
    json j;
    j["sign"] = r.sign;
    json pos = json::array(), neg = json::array();
    for (const auto& e : r.positive) pos.push_back(gr_matrix_to_json(e));
    for (const auto& e : r.negative) neg.push_back(gr_matrix_to_json(e));
    j["positive"] = pos;
    j["negative"] = neg;
    j["z_rank"] = int_to_json(r.z_rank());
    return j;
}

inline json fingerprint_to_json(const TateFingerprint& f) {
    json j;
    j["z_torsion_free"] = f.z_torsion_free;
    json entries = json::array();
    for (const auto& e : f.entries) {
        json item;
        item["subgroup"] = e.subgroup;
        item["h0"] = abelian_group_to_json(e.h0);
        item["h1"] = abelian_group_to_json(e.h1);
        entries.push_back(item);
    }
    j["entries"] = entries;
    j["projective"] = f.projective();
    return j;
}

inline json chain_map_to_json(const ChainMap& m) {
    json j = json::array();
    for (const auto& [deg, blk] : m.blocks) {
        json item;
        item["degree"] = deg;
        item["matrix"] = gr_matrix_to_json(blk);
        j.push_back(item);
    }
    return j;
}

inline ChainMap json_to_chain_map(const json& j) {
    ChainMap m;
    for (const auto& item : j)
        m.blocks.emplace(item.at("degree").get<int>(), json_to_gr_matrix(item.at("matrix"), "chain map"));
    return m;
}

inline json degree_one_map_to_json(const DegreeOneMap& m) {
    json j = json::array();
    for (const auto& [deg, blk] : m.blocks) {
        json item;
        item["degree"] = deg;
        item["matrix"] = gr_matrix_to_json(blk);
        j.push_back(item);
    }
    return j;
}

inline DegreeOneMap json_to_degree_one_map(const json& j) {
    DegreeOneMap m;
    for (const auto& item : j)
        m.blocks.emplace(item.at("degree").get<int>(), json_to_gr_matrix(item.at("matrix"), "homotopy"));
    return m;
}

inline json homotopy_certificate_to_json(const HomotopyCertificate& c) {
    json j;
    j["f"] = chain_map_to_json(c.f);
    j["g"] = chain_map_to_json(c.g);
    j["h"] = degree_one_map_to_json(c.h);
    j["h_prime"] = degree_one_map_to_json(c.h_prime);
    return j;
}

inline HomotopyCertificate json_to_homotopy_certificate(const json& j) {
    HomotopyCertificate c;
    c.f = json_to_chain_map(j.at("f"));
    c.g = json_to_chain_map(j.at("g"));
    c.h = json_to_degree_one_map(j.at("h"));
    c.h_prime = json_to_degree_one_map(j.at("h_prime"));
    return c;
}

inline json triviality_to_json(const TrivialityResult& t) {
    json j;
    j["verdict"] = t.yes ? "yes" : "unknown";
    std::string kind;
    switch (t.cert.kind) {
        case TrivialityCertificate::Kind::formal: kind = "formal"; break;
        case TrivialityCertificate::Kind::registry: kind = "registry"; break;
        case TrivialityCertificate::Kind::witness: kind = "witness"; break;
    }
    if (t.yes) {
        j["kind"] = kind;
        j["detail"] = t.cert.detail;
        if (t.cert.kind == TrivialityCertificate::Kind::witness) {
            j["subject"] = gr_matrix_to_json(t.cert.subject);
            j["conjugator"] = gr_matrix_to_json(t.cert.conjugator);
            j["conjugator_inverse"] = gr_matrix_to_json(t.cert.conjugator_inverse);
            j["stabilization"] = t.cert.stabilization;
        }
    } else {
        j["detail"] = t.cert.detail;
    }
    return j;
}

}  // namespace zgc::io
