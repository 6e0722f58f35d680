#include "lrcq/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "lrcq/error.hpp"

namespace lrcq {

namespace {

using nlohmann::json;

// Translate structural JSON problems (missing keys, wrong types) into the
// library's typed user error.
template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const json::exception& e) {
        fail_user("MalformedJson", e.what());
    }
}

std::vector<size_t> coords_from_wire(const json& arr, const char* what) {
    std::vector<size_t> out;
    for (const auto& e : arr) {
        uint64_t c = e.get<uint64_t>();
        if (c < 1) fail_user("MalformedJson", std::string(what) + " coordinates are 1-based");
        out.push_back(static_cast<size_t>(c - 1));
    }
    return out;
}

json coords_to_wire(const std::vector<size_t>& coords) {
    json arr = json::array();
    for (size_t c : coords) arr.push_back(c + 1);
    return arr;
}

}  // namespace

nlohmann::json field_to_json(const Field& f) {
    return json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

FieldPtr field_from_json(const nlohmann::json& j) {
    return guarded([&] {
        uint64_t p = j.at("p").get<uint64_t>();
        uint32_t m = j.at("m").get<uint32_t>();
        if (j.contains("modulus")) {
            std::vector<uint64_t> modulus = j.at("modulus").get<std::vector<uint64_t>>();
            return Field::create(p, m, modulus);
        }
        return Field::create(p, m);
    });
}

nlohmann::json matrix_to_json(const Matrix& m) {
    return json{{"field", field_to_json(*m.field())},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"data", m.data()}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
    return guarded([&] {
        FieldPtr f = field_from_json(j.at("field"));
        size_t rows = j.at("rows").get<size_t>();
        size_t cols = j.at("cols").get<size_t>();
        std::vector<uint64_t> data = j.at("data").get<std::vector<uint64_t>>();
        if (data.size() != rows * cols)
            fail_user("MalformedJson", "matrix data length does not equal rows*cols");
        Matrix m(f, rows, cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) {
                uint64_t enc = data[r * cols + c];
                if (!f->valid(enc))
                    fail_user("MalformedJson", "matrix entry is not a valid field encoding");
                m.set(r, c, enc);
            }
        return m;
    });
}

std::string matrix_to_text(const Matrix& m) {
    std::ostringstream out;
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << m.at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

Matrix matrix_from_text(const FieldPtr& f, const std::string& text) {
    std::vector<std::vector<uint64_t>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<uint64_t> row;
        uint64_t enc;
        while (ls >> enc) {
            if (!f->valid(enc))
                fail_user("MalformedText", "matrix entry is not a valid field encoding");
            row.push_back(enc);
        }
        if (!ls.eof()) fail_user("MalformedText", "matrix entries must be unsigned integers");
        if (!rows.empty() && row.size() != rows.front().size())
            fail_user("MalformedText", "matrix rows have differing lengths");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return Matrix(f, 0, 0);
    return Matrix::from_rows(f, rows);
}

std::string matrix_to_latex(const Matrix& m) {
    std::ostringstream out;
    out << "\\begin{pmatrix}\n";
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            if (c) out << " & ";
            out << m.at(r, c);
        }
        if (r + 1 < m.rows()) out << " \\\\";
        out << '\n';
    }
    out << "\\end{pmatrix}\n";
    return out.str();
}

nlohmann::json code_to_json(const LinearCode& c, std::optional<size_t> d) {
    json j{{"field", field_to_json(*c.field())},
           {"n", c.n()},
           {"k", c.k()},
           {"G", matrix_to_json(c.G())},
           {"H", matrix_to_json(c.H())}};
    if (d) j["d"] = *d;
    return j;
}

LoadedCode code_from_json(const nlohmann::json& j) {
    return guarded([&] {
        FieldPtr f = field_from_json(j.at("field"));
        size_t n = j.at("n").get<size_t>();
        size_t k = j.at("k").get<size_t>();
        bool has_g = j.contains("G"), has_h = j.contains("H");
        if (!has_g && !has_h)
            fail_user("MalformedJson", "a code needs a generator or a parity-check matrix");

        std::optional<Matrix> G, H;
        if (has_g) G = matrix_from_json(j.at("G"));
        if (has_h) H = matrix_from_json(j.at("H"));
        for (const auto* m : {&G, &H})
            if (*m && !(*m)->field()->same_spec(*f))
                fail_user("MalformedJson", "matrix field differs from the code field");

        std::optional<size_t> declared_d;
        if (j.contains("d")) declared_d = j.at("d").get<size_t>();

        auto check_dims = [&](const LinearCode& code) {
            if (code.n() != n || code.k() != k)
                fail_user("MalformedJson", "declared n/k do not match the matrices");
            return LoadedCode{code, declared_d};
        };

        if (has_g && has_h) {
            if (G->cols() != H->cols())
                fail_user("MalformedJson", "generator and parity-check lengths differ");
            if (rank(*G) != G->rows())
                fail_user("RankDeficientInput", "generator matrix rows are linearly dependent");
            if (rank(*H) != H->rows())
                fail_user("RankDeficientInput",
                          "parity-check matrix rows are linearly dependent");
            if (G->rows() + H->rows() != G->cols())
                fail_user("MalformedJson", "generator and parity-check ranks do not add to n");
            if (!is_zero(multiply(*G, transpose(*H))))
                fail_user("MalformedJson", "generator and parity-check are not orthogonal");
            return check_dims(LinearCode::from_parts_unchecked(*G, *H));
        }
        if (has_g) return check_dims(LinearCode::from_generator(*G));
        return check_dims(LinearCode::from_parity(*H));
    });
}

nlohmann::json certificate_to_json(const LocalityCertificate& cert) {
    json groups = json::array();
    for (const auto& g : cert.groups) groups.push_back(json{{"support", coords_to_wire(g.support)}});
    json cover = json::object();
    for (size_t i = 0; i < cert.cover.size(); ++i)
        cover[std::to_string(i + 1)] = cert.cover[i] + 1;
    return json{{"params", {{"r", cert.params.r}, {"delta", cert.params.delta}}},
                {"groups", groups},
                {"cover", cover}};
}

LocalityCertificate certificate_from_json(const nlohmann::json& j, const LinearCode& c,
                                          const DistanceBudget& budget) {
    return guarded([&] {
        LocalityCertificate cert;
        cert.params.r = j.at("params").at("r").get<size_t>();
        cert.params.delta = j.at("params").at("delta").get<size_t>();
        for (const auto& g : j.at("groups")) {
            std::vector<size_t> support = coords_from_wire(g.at("support"), "support");
            if (support.empty()) fail_user("MalformedJson", "empty support in certificate");
            cert.groups.push_back(
                verify_repair_group(c, support.front(), support, cert.params, budget));
        }
        const json& cover = j.at("cover");
        cert.cover.assign(c.n(), 0);
        std::vector<bool> seen(c.n(), false);
        for (auto it = cover.begin(); it != cover.end(); ++it) {
            size_t coord = std::stoull(it.key());
            uint64_t gi = it.value().get<uint64_t>();
            if (coord < 1 || coord > c.n() || gi < 1 || gi > cert.groups.size())
                fail_user("MalformedJson", "cover entry out of range");
            const auto& sup = cert.groups[gi - 1].support;
            if (!std::binary_search(sup.begin(), sup.end(), coord - 1))
                fail_user("MalformedJson", "cover maps a coordinate to a group not containing it");
            cert.cover[coord - 1] = gi - 1;
            seen[coord - 1] = true;
        }
        for (size_t i = 0; i < c.n(); ++i)
            if (!seen[i])
                fail_user("UncoveredCoordinate",
                          "coordinate " + std::to_string(i + 1) + " is missing from the cover");
        return cert;
    });
}

nlohmann::json decomposition_to_json(const Decomposition& d) {
    json groups = json::array();
    for (const auto& g : d.groups) groups.push_back(coords_to_wire(g));
    return json{{"case", d.case_id == 1 ? "I" : "II"},
                {"groups", groups},
                {"terminal", coords_to_wire(d.terminal)},
                {"residual", coords_to_wire(d.residual)},
                {"size_increments", d.s_list},
                {"rank_increments", d.r_list}};
}

Decomposition decomposition_from_json(const nlohmann::json& j) {
    return guarded([&] {
        Decomposition d;
        std::string c = j.at("case").get<std::string>();
        if (c == "I")
            d.case_id = 1;
        else if (c == "II")
            d.case_id = 2;
        else
            fail_user("MalformedJson", "case must be \"I\" or \"II\"");
        for (const auto& g : j.at("groups")) d.groups.push_back(coords_from_wire(g, "group"));
        d.terminal = coords_from_wire(j.at("terminal"), "terminal");
        d.residual = coords_from_wire(j.at("residual"), "residual");
        if (j.contains("size_increments"))
            d.s_list = j.at("size_increments").get<std::vector<size_t>>();
        if (j.contains("rank_increments"))
            d.r_list = j.at("rank_increments").get<std::vector<size_t>>();
        return d;
    });
}

nlohmann::json quantum_to_json(const QuantumParams& p) {
    return json{{"n", p.n},         {"k", p.k},
                {"d", p.d},         {"q", p.q},
                {"construction", p.construction}, {"d_exact", p.d_exact}};
}

QuantumParams quantum_from_json(const nlohmann::json& j) {
    return guarded([&] {
        QuantumParams p;
        p.n = j.at("n").get<size_t>();
        p.k = j.at("k").get<int64_t>();
        p.d = j.at("d").get<size_t>();
        p.q = j.at("q").get<uint64_t>();
        p.construction = j.at("construction").get<std::string>();
        p.d_exact = j.at("d_exact").get<bool>();
        return p;
    });
}

nlohmann::json verdict_to_json(const QuantumLrcVerdict& v) {
    return json{{"optimal", v.optimal},
                {"n", v.n},
                {"k", v.k},
                {"d", v.d},
                {"q", v.q},
                {"construction", v.construction},
                {"identity", {{"lhs", v.identity_lhs}, {"rhs", v.identity_rhs}}},
                {"delta_vs_dual", {v.delta, v.dual_distance}},
                {"dual_distance_exact", v.dual_distance_exact},
                {"clauses",
                 {{"dual_containing", v.dual_containing},
                  {"locality", v.locality},
                  {"delta_le_dual", v.delta_le_dual},
                  {"identity", v.identity_holds}}}};
}

QuantumLrcVerdict verdict_from_json(const nlohmann::json& j) {
    return guarded([&] {
        QuantumLrcVerdict v;
        v.optimal = j.at("optimal").get<bool>();
        v.n = j.at("n").get<size_t>();
        v.k = j.at("k").get<int64_t>();
        v.d = j.at("d").get<size_t>();
        v.q = j.at("q").get<uint64_t>();
        v.construction = j.at("construction").get<std::string>();
        v.identity_lhs = j.at("identity").at("lhs").get<int64_t>();
        v.identity_rhs = j.at("identity").at("rhs").get<int64_t>();
        v.delta = j.at("delta_vs_dual").at(0).get<size_t>();
        v.dual_distance = j.at("delta_vs_dual").at(1).get<size_t>();
        v.dual_distance_exact = j.at("dual_distance_exact").get<bool>();
        v.dual_containing = j.at("clauses").at("dual_containing").get<bool>();
        v.locality = j.at("clauses").at("locality").get<bool>();
        v.delta_le_dual = j.at("clauses").at("delta_le_dual").get<bool>();
        v.identity_holds = j.at("clauses").at("identity").get<bool>();
        return v;
    });
}

nlohmann::json structured_to_json(const StructuredParityCheck& s) {
    json groups = json::array();
    for (const auto& g : s.groups) groups.push_back(coords_to_wire(g));
    json blocks = json::array();
    for (const auto& a : s.A) blocks.push_back(matrix_to_json(a));
    return json{{"layout", s.layout}, {"delta", s.delta}, {"l", s.l},
                {"groups", groups},   {"A", blocks},      {"B", matrix_to_json(s.B)}};
}

StructuredParityCheck structured_from_json(const nlohmann::json& j) {
    return guarded([&] {
        StructuredParityCheck s;
        s.layout = j.at("layout").get<std::string>();
        s.delta = j.at("delta").get<size_t>();
        s.l = j.at("l").get<size_t>();
        if (s.delta < 2) fail_user("MalformedJson", "delta must be at least 2");
        for (const auto& g : j.at("groups")) s.groups.push_back(coords_from_wire(g, "group"));
        for (const auto& a : j.at("A")) s.A.push_back(matrix_from_json(a));
        s.B = matrix_from_json(j.at("B"));
        if (s.groups.empty() || s.A.size() != s.groups.size())
            fail_user("MalformedJson", "one local block per group is required");
        for (size_t i = 0; i < s.A.size(); ++i)
            if (s.A[i].rows() != s.delta - 1 || s.A[i].cols() != s.groups[i].size())
                fail_user("MalformedJson", "local block shape does not match its group");
        if (s.B.rows() != s.l) fail_user("MalformedJson", "band height does not equal l");
        return s;
    });
}

nlohmann::json instance_to_json(const FamilyInstance& inst) {
    json params = json::object();
    for (const auto& [key, value] : inst.params) params[key] = value;
    json prov{{"g", inst.provenance.g}, {"omega", inst.provenance.omega}};
    if (inst.provenance.zeta != 0) prov["zeta"] = inst.provenance.zeta;
    if (!inst.provenance.lambda.empty()) prov["lambda"] = inst.provenance.lambda;
    if (!inst.provenance.mu.empty()) prov["mu"] = inst.provenance.mu;
    return json{{"family", inst.family},
                {"params", params},
                {"classical", code_to_json(inst.classical, inst.verdict.d)},
                {"certificate", certificate_to_json(inst.cert)},
                {"structured", structured_to_json(inst.structured)},
                {"quantum", quantum_to_json(inst.quantum)},
                {"verdict", verdict_to_json(inst.verdict)},
                {"provenance", prov}};
}

FamilyInstance instance_from_json(const nlohmann::json& j, const DistanceBudget& budget) {
    return guarded([&] {
        int family = j.at("family").get<int>();
        std::map<std::string, uint64_t> params;
        for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
            params[it.key()] = it.value().get<uint64_t>();
        LoadedCode loaded = code_from_json(j.at("classical"));
        LocalityCertificate cert =
            certificate_from_json(j.at("certificate"), loaded.code, budget);
        StructuredParityCheck structured = structured_from_json(j.at("structured"));
        QuantumParams quantum = quantum_from_json(j.at("quantum"));
        QuantumLrcVerdict verdict = verdict_from_json(j.at("verdict"));
        FamilyProvenance prov;
        const json& pj = j.at("provenance");
        prov.g = pj.at("g").get<uint64_t>();
        prov.omega = pj.at("omega").get<std::vector<uint64_t>>();
        if (pj.contains("zeta")) prov.zeta = pj.at("zeta").get<uint64_t>();
        if (pj.contains("lambda")) prov.lambda = pj.at("lambda").get<std::vector<uint64_t>>();
        if (pj.contains("mu")) prov.mu = pj.at("mu").get<std::vector<uint64_t>>();
        return FamilyInstance{family,
                              std::move(params),
                              std::move(loaded.code),
                              std::move(cert),
                              std::move(structured),
                              quantum,
                              verdict,
                              std::move(prov)};
    });
}

std::string canonical_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

size_t install_field_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_user("InvalidFieldTable", "cannot read field table file: " + path);
    json table;
    try {
        in >> table;
    } catch (const json::exception& e) {
        fail_user("InvalidFieldTable", e.what());
    }
    if (!table.is_array())
        fail_user("InvalidFieldTable", "field table must be a JSON array of entries");
    size_t count = 0;
    for (const auto& entry : table) {
        uint64_t p;
        uint32_t m;
        std::vector<uint64_t> modulus;
        try {
            p = entry.at("p").get<uint64_t>();
            m = entry.at("m").get<uint32_t>();
            modulus = entry.at("modulus").get<std::vector<uint64_t>>();
        } catch (const json::exception& e) {
            fail_user("InvalidFieldTable", e.what());
        }
        Field::create(p, m, modulus);  // full validation before installing
        Field::add_modulus_override(p, m, modulus);
        ++count;
    }
    return count;
}

}  // namespace lrcq
