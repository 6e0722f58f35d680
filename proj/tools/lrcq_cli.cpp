// Command-line front end: construct certified family instances, verify and
// decompose user-supplied codes, induce quantum parameters, and re-render
// stored instances.  Exit codes: 0 success, 2 user error, 3 budget exhausted,
// 4 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lrcq/error.hpp"
#include "lrcq/serialize.hpp"

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) lrcq::fail_user("FileNotFound", "cannot read file: " + path);
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        lrcq::fail_user("MalformedJson", std::string(e.what()) + " in " + path);
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) lrcq::fail_user("FileNotFound", "cannot write file: " + path);
    out << content;
}

std::string field_label(const lrcq::Field& f) { return "GF(" + std::to_string(f.order()) + ")"; }

lrcq::Form resolve_form(const std::string& form, const lrcq::Field& f) {
    if (form == "euclidean") return lrcq::Form::Euclidean;
    if (form == "hermitian") return lrcq::Form::Hermitian;
    return f.m() % 2 == 0 ? lrcq::Form::Hermitian : lrcq::Form::Euclidean;
}

std::string form_label(lrcq::Form form) {
    return form == lrcq::Form::Hermitian ? "hermitian" : "euclidean";
}

std::vector<std::vector<size_t>> groups_from_file(const std::string& path) {
    json j = read_json_file(path);
    if (!j.is_array()) lrcq::fail_user("MalformedJson", "groups file must be an array of arrays");
    std::vector<std::vector<size_t>> groups;
    for (const auto& arr : j) {
        std::vector<size_t> support;
        for (const auto& e : arr) {
            uint64_t c = e.get<uint64_t>();
            if (c < 1) lrcq::fail_user("MalformedJson", "group coordinates are 1-based");
            support.push_back(static_cast<size_t>(c - 1));
        }
        groups.push_back(std::move(support));
    }
    return groups;
}

std::string coords_1based(const std::vector<size_t>& coords) {
    std::string out = "{";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coords[i] + 1);
    }
    return out + "}";
}

int run_construct(int family, uint64_t q, size_t u, size_t v, size_t s, size_t t,
                  const std::string& out_path, const lrcq::DistanceBudget& budget) {
    lrcq::FamilyInstance inst = [&] {
        switch (family) {
            case 1:
                return lrcq::build_family1({q, u, v, t}, budget);
            case 2:
                return lrcq::build_family2({q, s, v, t}, budget);
            default:
                return lrcq::build_family3({q, s, v, t}, budget);
        }
    }();
    std::string dumped = lrcq::canonical_dump(lrcq::instance_to_json(inst));
    const auto& qp = inst.quantum;
    const auto& cert = inst.cert;
    std::string summary = "family " + std::to_string(family) + " instance over " +
                          field_label(*inst.classical.field()) + ": classical [" +
                          std::to_string(inst.classical.n()) + "," +
                          std::to_string(inst.classical.k()) + "," +
                          std::to_string(inst.verdict.d) + "], (r,delta) = (" +
                          std::to_string(cert.params.r) + "," + std::to_string(cert.params.delta) +
                          "), quantum [[" + std::to_string(qp.n) + "," + std::to_string(qp.k) +
                          "," + std::to_string(qp.d) + "]]_" + std::to_string(qp.q) +
                          ", optimal: " + (inst.verdict.optimal ? "yes" : "no") + "\n";
    if (out_path.empty()) {
        std::cout << dumped;
    } else {
        write_file(out_path, dumped);
        std::cout << summary << "wrote " << out_path << "\n";
    }
    return 0;
}

int run_verify(const std::string& code_path, size_t r, size_t delta, const std::string& form_str,
               const std::string& groups_path, const lrcq::DistanceBudget& budget) {
    lrcq::LoadedCode loaded = lrcq::code_from_json(read_json_file(code_path));
    const lrcq::LinearCode& code = loaded.code;
    lrcq::LocalityParams p{r, delta};
    lrcq::Form form = resolve_form(form_str, *code.field());

    std::optional<std::vector<std::vector<size_t>>> user_groups;
    if (!groups_path.empty()) user_groups = groups_from_file(groups_path);
    const auto* groups_ptr = user_groups ? &*user_groups : nullptr;

    std::cout << "code: [" << code.n() << "," << code.k() << "] over "
              << field_label(*code.field()) << "\n";

    lrcq::QuantumLrcVerdict verdict =
        lrcq::verify_optimal_quantum_lrc(code, p, form, budget, groups_ptr);

    if (verdict.locality) {
        lrcq::LocalityCertificate cert = lrcq::certify_lrc(code, p, budget, groups_ptr);
        std::cout << "locality: certified (r,delta) = (" << r << "," << delta << ") with "
                  << cert.groups.size() << " repair groups\n";
    } else {
        std::cout << "locality: not certified for (r,delta) = (" << r << "," << delta << ")\n";
    }

    uint64_t bound = lrcq::singleton_like_bound(code.n(), code.k(), p);
    std::cout << "distance: d = " << verdict.d << ", singleton-like bound = " << bound << "\n";
    if (loaded.declared_d) {
        std::cout << "declared d = " << *loaded.declared_d
                  << (*loaded.declared_d == verdict.d ? " matches the computed distance\n"
                                                      : " DIFFERS from the computed distance\n");
    }
    bool optimal_lrc = verdict.locality && verdict.d == bound;
    std::cout << "optimal LRC: " << (optimal_lrc ? "yes" : "no") << "\n";
    std::cout << "dual-containing (" << form_label(form)
              << "): " << (verdict.dual_containing ? "yes" : "no") << "\n";
    if (verdict.dual_containing) {
        std::cout << "quantum: [[" << verdict.n << "," << verdict.k << "," << verdict.d << "]]_"
                  << verdict.q << ", verdict optimal: " << (verdict.optimal ? "yes" : "no")
                  << "\n";
        std::cout << "identity: lhs = " << verdict.identity_lhs
                  << ", rhs = " << verdict.identity_rhs
                  << (verdict.identity_holds ? " (holds)" : " (fails)") << "\n";
        std::cout << "delta <= dual distance: " << (verdict.delta_le_dual ? "yes" : "no")
                  << " (dual distance " << (verdict.dual_distance_exact ? "= " : ">= ")
                  << verdict.dual_distance << ")\n";
    } else {
        std::cout << "quantum: not dual-containing (" << form_label(form) << " form)\n";
    }
    std::cout << "verdict-json:\n" << lrcq::canonical_dump(lrcq::verdict_to_json(verdict));
    return 0;
}

int run_decompose(const std::string& code_path, size_t r, size_t delta,
                  const lrcq::DistanceBudget& budget) {
    lrcq::LoadedCode loaded = lrcq::code_from_json(read_json_file(code_path));
    const lrcq::LinearCode& code = loaded.code;
    lrcq::LocalityParams p{r, delta};
    lrcq::LocalityCertificate cert = lrcq::certify_lrc(code, p, budget);
    lrcq::Decomposition dec = lrcq::decompose(code, cert, budget);
    lrcq::DecompositionReport rep = lrcq::verify_decomposition(code, dec, p, budget);
    if (!rep.ok) {
        std::string detail;
        for (const auto& v : rep.violations) detail += v + "; ";
        lrcq::fail_internal("InternalInvariantViolated",
                            "decomposition failed its own re-verification: " + detail);
    }
    std::cout << "case " << (dec.case_id == 1 ? "I" : "II") << ": " << dec.groups.size()
              << " repair groups";
    for (const auto& g : dec.groups) std::cout << " " << coords_1based(g);
    std::cout << "\n";
    if (dec.case_id == 1) std::cout << "terminal coordinates: " << coords_1based(dec.terminal) << "\n";
    std::cout << "residual set U = " << coords_1based(dec.residual)
              << " (|U| = d = " << dec.residual.size() << ")\n";
    std::cout << "re-verified: ok\n";
    std::cout << lrcq::canonical_dump(lrcq::decomposition_to_json(dec));
    return 0;
}

int run_quantize(const std::string& code_path, size_t r, size_t delta,
                 const std::string& form_str, const std::string& groups_path,
                 const lrcq::DistanceBudget& budget) {
    lrcq::LoadedCode loaded = lrcq::code_from_json(read_json_file(code_path));
    const lrcq::LinearCode& code = loaded.code;
    lrcq::LocalityParams p{r, delta};
    lrcq::Form form = resolve_form(form_str, *code.field());
    std::optional<std::vector<std::vector<size_t>>> user_groups;
    if (!groups_path.empty()) user_groups = groups_from_file(groups_path);
    const auto* groups_ptr = user_groups ? &*user_groups : nullptr;
    lrcq::LocalityCertificate cert = lrcq::certify_lrc(code, p, budget, groups_ptr);
    lrcq::QuantumParams qp = lrcq::induce_optimal_quantum(code, cert, form, budget);
    std::cout << "[[" << qp.n << "," << qp.k << "," << qp.d << "]]_" << qp.q << " via "
              << qp.construction << " construction (d " << (qp.d_exact ? "exact" : "lower bound")
              << ")\n";
    std::cout << lrcq::canonical_dump(lrcq::quantum_to_json(qp));
    return 0;
}

int run_emit(const std::string& in_path, const std::string& format,
             const lrcq::DistanceBudget& budget) {
    lrcq::FamilyInstance inst = lrcq::instance_from_json(read_json_file(in_path), budget);
    if (format == "json") {
        std::cout << lrcq::canonical_dump(lrcq::instance_to_json(inst));
    } else if (format == "text") {
        std::cout << lrcq::matrix_to_text(inst.classical.H());
    } else {
        std::cout << lrcq::matrix_to_latex(inst.classical.H());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal (r,delta) locally repairable codes and their induced quantum codes"};
    app.require_subcommand(1);

    uint64_t max_codewords = 10'000'000;
    uint64_t max_subsets = 1'000'000;
    app.add_option("--max-codewords", max_codewords,
                   "cap on enumerated codewords for exact distances")
        ->capture_default_str();
    app.add_option("--max-subsets", max_subsets,
                   "cap on visited nodes in column/support searches")
        ->capture_default_str();

    auto* construct = app.add_subcommand("construct", "build and certify a family instance");
    construct->fallthrough();
    int family = 0;
    uint64_t q = 0;
    size_t u = 0, v = 0, s = 0, t = 0;
    std::string out_path;
    construct->add_option("--family", family, "family number")->required()->check(CLI::Range(1, 3));
    construct->add_option("--q", q, "base field size (the code lives over GF(q^2))")->required();
    construct->add_option("--u", u, "local parity rows per block (family 1)");
    construct->add_option("--v", v, "band rows (family 1) / middle column count (families 2,3)");
    construct->add_option("--s", s, "local parity rows per half block (families 2,3)");
    construct->add_option("--t", t, "number of blocks");
    construct->add_option("--out", out_path, "write the instance JSON here instead of stdout");

    auto* verify = app.add_subcommand("verify", "verify locality, optimality, and the quantum verdict");
    verify->fallthrough();
    std::string verify_code, verify_form = "auto", verify_groups;
    size_t verify_r = 0, verify_delta = 0;
    verify->add_option("--code", verify_code, "code JSON file")->required();
    verify->add_option("--r", verify_r, "locality radius")->required();
    verify->add_option("--delta", verify_delta, "local distance guarantee")->required();
    verify->add_option("--form", verify_form, "inner-product form")
        ->check(CLI::IsMember({"euclidean", "hermitian", "auto"}));
    verify->add_option("--groups", verify_groups, "JSON file with 1-based repair groups");

    auto* decompose = app.add_subcommand("decompose", "run the rank-attainment decomposition");
    decompose->fallthrough();
    std::string dec_code;
    size_t dec_r = 0, dec_delta = 0;
    decompose->add_option("--code", dec_code, "code JSON file")->required();
    decompose->add_option("--r", dec_r, "locality radius")->required();
    decompose->add_option("--delta", dec_delta, "local distance guarantee")->required();

    auto* quantize = app.add_subcommand("quantize", "induce quantum parameters from an optimal LRC");
    quantize->fallthrough();
    std::string qz_code, qz_form = "auto", qz_groups;
    size_t qz_r = 0, qz_delta = 0;
    quantize->add_option("--code", qz_code, "code JSON file")->required();
    quantize->add_option("--r", qz_r, "locality radius")->required();
    quantize->add_option("--delta", qz_delta, "local distance guarantee")->required();
    quantize->add_option("--form", qz_form, "inner-product form")
        ->check(CLI::IsMember({"euclidean", "hermitian", "auto"}));
    quantize->add_option("--groups", qz_groups, "JSON file with 1-based repair groups");

    auto* emit = app.add_subcommand("emit", "re-render a stored instance");
    emit->fallthrough();
    std::string emit_in, emit_format;
    emit->add_option("--in", emit_in, "instance JSON file")->required();
    emit->add_option("--format", emit_format, "output format")
        ->required()
        ->check(CLI::IsMember({"json", "text", "latex-matrix"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (const char* table = std::getenv("LRC_FIELD_TABLE")) {
            if (table[0] != '\0') lrcq::install_field_table(table);
        }
        lrcq::DistanceBudget budget{max_codewords, max_subsets};
        if (construct->parsed()) {
            if (family == 1 && (construct->count("--s") > 0))
                lrcq::fail_user("InvalidParams", "family 1 takes --u, not --s");
            if (family != 1 && (construct->count("--u") > 0))
                lrcq::fail_user("InvalidParams",
                                "families 2 and 3 take --s, not --u");
            return run_construct(family, q, u, v, s, t, out_path, budget);
        }
        if (verify->parsed())
            return run_verify(verify_code, verify_r, verify_delta, verify_form, verify_groups,
                              budget);
        if (decompose->parsed()) return run_decompose(dec_code, dec_r, dec_delta, budget);
        if (quantize->parsed())
            return run_quantize(qz_code, qz_r, qz_delta, qz_form, qz_groups, budget);
        if (emit->parsed()) return run_emit(emit_in, emit_format, budget);
        return 2;
    } catch (const lrcq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case lrcq::ErrorKind::User:
                return 2;
            case lrcq::ErrorKind::Budget:
                return 3;
            case lrcq::ErrorKind::Internal:
                return 4;
        }
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
