// Python bindings for the lrcq library.  The module mirrors the C++ API:
// handles for fields, matrices, and linear codes; the locality toolbox
// (certificates, optimality, decomposition, rigidity, staircase form); the
// quantum constructions and verdicts; the three certified families; and the
// canonical JSON bridge (every *_to_json returns the canonical dump string,
// every *_from_json parses one).

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "lrcq/error.hpp"
#include "lrcq/families.hpp"
#include "lrcq/field.hpp"
#include "lrcq/linear_code.hpp"
#include "lrcq/locality.hpp"
#include "lrcq/matrix.hpp"
#include "lrcq/quantum.hpp"
#include "lrcq/serialize.hpp"

namespace py = pybind11;
using namespace lrcq;

namespace {

// shared_ptr<const Field> does not fit pybind11's holder model, so fields
// cross the boundary inside a tiny value wrapper.
struct FieldHandle {
    FieldPtr ptr;
};

nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail_user("MalformedJson", e.what());
    }
}

std::vector<std::vector<uint64_t>> matrix_rows(const Matrix& m) {
    std::vector<std::vector<uint64_t>> out;
    out.reserve(m.rows());
    for (size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
    return out;
}

std::string field_repr(const Field& f) {
    if (f.m() == 1) return "GF(" + std::to_string(f.order()) + ")";
    return "GF(" + std::to_string(f.order()) + ") = GF(" + std::to_string(f.p()) + "^" +
           std::to_string(f.m()) + ")";
}

}  // namespace

PYBIND11_MODULE(_lrcq, m) {
    m.doc() =
        "Optimal (r, delta) locally repairable codes over finite fields and the "
        "optimal quantum codes they induce.";

    py::register_exception<Error>(m, "Error");

    // ---- fields ------------------------------------------------------------
    py::class_<FieldHandle>(m, "Field", "Finite field GF(p^m) with integer-encoded elements.")
        .def_property_readonly("p", [](const FieldHandle& f) { return f.ptr->p(); })
        .def_property_readonly("m", [](const FieldHandle& f) { return f.ptr->m(); })
        .def_property_readonly("order", [](const FieldHandle& f) { return f.ptr->order(); })
        .def_property_readonly(
            "modulus", [](const FieldHandle& f) { return f.ptr->modulus(); },
            "Ascending coefficients of the defining polynomial, length m+1, monic.")
        .def("add", [](const FieldHandle& f, uint64_t a, uint64_t b) { return f.ptr->add(a, b); })
        .def("sub", [](const FieldHandle& f, uint64_t a, uint64_t b) { return f.ptr->sub(a, b); })
        .def("neg", [](const FieldHandle& f, uint64_t a) { return f.ptr->neg(a); })
        .def("mul", [](const FieldHandle& f, uint64_t a, uint64_t b) { return f.ptr->mul(a, b); })
        .def("inv", [](const FieldHandle& f, uint64_t a) { return f.ptr->inv(a); })
        .def("div", [](const FieldHandle& f, uint64_t a, uint64_t b) { return f.ptr->div(a, b); })
        .def("pow", [](const FieldHandle& f, uint64_t a, uint64_t e) { return f.ptr->pow(a, e); })
        .def("frobenius",
             [](const FieldHandle& f, uint64_t x, uint64_t q) { return f.ptr->frobenius(x, q); })
        .def("primitive_element",
             [](const FieldHandle& f) { return f.ptr->primitive_element(); })
        .def("element_order",
             [](const FieldHandle& f, uint64_t a) { return f.ptr->element_order(a); })
        .def("__eq__",
             [](const FieldHandle& a, const FieldHandle& b) { return a.ptr->same_spec(*b.ptr); })
        .def("__repr__", [](const FieldHandle& f) { return field_repr(*f.ptr); });

    m.def(
        "field",
        [](uint64_t p, uint32_t mm, std::optional<std::vector<uint64_t>> modulus) {
            if (modulus) return FieldHandle{Field::create(p, mm, *modulus)};
            return FieldHandle{Field::create(p, mm)};
        },
        py::arg("p"), py::arg("m") = 1, py::arg("modulus") = std::nullopt,
        "GF(p^m); the defining modulus defaults to the canonical table entry.");

    // ---- budgets and matrices ----------------------------------------------
    py::class_<DistanceBudget>(m, "DistanceBudget",
                               "Work caps for exact-distance and support searches.")
        .def(py::init([](uint64_t max_codewords, uint64_t max_subsets) {
                 DistanceBudget b;
                 b.max_codewords = max_codewords;
                 b.max_subsets = max_subsets;
                 return b;
             }),
             py::arg("max_codewords") = DistanceBudget{}.max_codewords,
             py::arg("max_subsets") = DistanceBudget{}.max_subsets)
        .def_readwrite("max_codewords", &DistanceBudget::max_codewords)
        .def_readwrite("max_subsets", &DistanceBudget::max_subsets)
        .def("__repr__", [](const DistanceBudget& b) {
            return "DistanceBudget(max_codewords=" + std::to_string(b.max_codewords) +
                   ", max_subsets=" + std::to_string(b.max_subsets) + ")";
        });

    py::class_<Matrix>(m, "Matrix", "Dense matrix over a finite field.")
        .def_property_readonly("rows", &Matrix::rows)
        .def_property_readonly("cols", &Matrix::cols)
        .def_property_readonly("field", [](const Matrix& mm) { return FieldHandle{mm.field()}; })
        .def("at", &Matrix::at, py::arg("r"), py::arg("c"))
        .def("to_rows", &matrix_rows, "Entries as a list of rows of encoded elements.")
        .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; })
        .def("__repr__", [](const Matrix& mm) {
            return "Matrix(" + std::to_string(mm.rows()) + "x" + std::to_string(mm.cols()) +
                   " over " + field_repr(*mm.field()) + ")";
        });

    m.def(
        "matrix",
        [](const FieldHandle& f, const std::vector<std::vector<uint64_t>>& rows) {
            return Matrix::from_rows(f.ptr, rows);
        },
        py::arg("field"), py::arg("rows"), "Matrix from a list of rows of encoded elements.");
    m.def(
        "identity_matrix",
        [](const FieldHandle& f, size_t n) { return Matrix::identity(f.ptr, n); },
        py::arg("field"), py::arg("n"));

    // ---- linear codes -------------------------------------------------------
    py::enum_<Form>(m, "Form", "Bilinear form for duality checks.")
        .value("EUCLIDEAN", Form::Euclidean)
        .value("HERMITIAN", Form::Hermitian);

    py::class_<LinearCode>(m, "LinearCode",
                           "[n, k] linear code held as a generator/parity-check pair.")
        .def_static("from_generator", &LinearCode::from_generator, py::arg("G"))
        .def_static("from_parity", &LinearCode::from_parity, py::arg("H"))
        .def_property_readonly("n", &LinearCode::n)
        .def_property_readonly("k", &LinearCode::k)
        .def_property_readonly("field",
                               [](const LinearCode& c) { return FieldHandle{c.field()}; })
        .def_property_readonly("G", [](const LinearCode& c) { return c.G(); })
        .def_property_readonly("H", [](const LinearCode& c) { return c.H(); })
        .def("min_distance", &LinearCode::min_distance, py::arg("budget") = DistanceBudget{},
             "Exact minimum distance (cached after the first call).")
        .def_property_readonly("cached_distance", &LinearCode::cached_distance)
        .def("puncture", &LinearCode::puncture, py::arg("support"),
             "Restriction to the given 0-based coordinates.")
        .def("__repr__", [](const LinearCode& c) {
            return "LinearCode(n=" + std::to_string(c.n()) + ", k=" + std::to_string(c.k()) +
                   " over " + field_repr(*c.field()) + ")";
        });

    m.def("min_distance_by_enumeration", &min_distance_by_enumeration, py::arg("code"),
          py::arg("budget") = DistanceBudget{});
    m.def(
        "min_distance_by_column_search",
        [](const LinearCode& c, const DistanceBudget& budget) {
            std::vector<size_t> witness;
            size_t d = min_distance_by_column_search(c, budget, &witness);
            return py::make_tuple(d, witness);
        },
        py::arg("code"), py::arg("budget") = DistanceBudget{},
        "(d, witness): the distance and the lexicographically first dependent column set.");
    m.def("dual_euclidean", &dual_euclidean, py::arg("code"));
    m.def("dual_hermitian", &dual_hermitian, py::arg("code"));
    m.def("is_mds", &is_mds, py::arg("code"), py::arg("budget") = DistanceBudget{});
    m.def("is_dual_containing", &is_dual_containing, py::arg("code"), py::arg("form"));
    m.def("is_self_orthogonal", &is_self_orthogonal, py::arg("code"), py::arg("form"));
    m.def("smallest_dependent_columns", &smallest_dependent_columns, py::arg("matrix"),
          py::arg("wmax"), py::arg("budget") = DistanceBudget{});

    // ---- locality ------------------------------------------------------------
    py::class_<LocalityParams>(m, "LocalityParams", "(r, delta) locality target.")
        .def(py::init([](size_t r, size_t delta) { return LocalityParams{r, delta}; }),
             py::arg("r"), py::arg("delta") = 2)
        .def_readwrite("r", &LocalityParams::r)
        .def_readwrite("delta", &LocalityParams::delta)
        .def("__repr__", [](const LocalityParams& p) {
            return "LocalityParams(r=" + std::to_string(p.r) +
                   ", delta=" + std::to_string(p.delta) + ")";
        });

    m.def("singleton_like_bound", &singleton_like_bound, py::arg("n"), py::arg("k"),
          py::arg("params"), "d <= n - k + 1 - (ceil(k/r) - 1)(delta - 1).");

    py::class_<RepairGroup>(m, "RepairGroup",
                            "A verified repair group: support, restriction, local distance.")
        .def_readonly("support", &RepairGroup::support)
        .def_readonly("punct", &RepairGroup::punct)
        .def_readonly("punct_distance", &RepairGroup::punct_distance)
        .def("__repr__", [](const RepairGroup& g) {
            return "RepairGroup(|support|=" + std::to_string(g.support.size()) +
                   ", local_d=" + std::to_string(g.punct_distance) + ")";
        });

    py::class_<LocalityCertificate>(m, "LocalityCertificate",
                                    "Cover of all coordinates by verified repair groups.")
        .def_readonly("params", &LocalityCertificate::params)
        .def_readonly("groups", &LocalityCertificate::groups)
        .def_readonly("cover", &LocalityCertificate::cover);

    py::class_<OptimalityReport>(m, "OptimalityReport")
        .def_readonly("optimal", &OptimalityReport::optimal)
        .def_readonly("d", &OptimalityReport::d)
        .def_readonly("bound", &OptimalityReport::bound)
        .def("__repr__", [](const OptimalityReport& r) {
            return std::string("OptimalityReport(optimal=") + (r.optimal ? "True" : "False") +
                   ", d=" + std::to_string(r.d) + ", bound=" + std::to_string(r.bound) + ")";
        });

    m.def("verify_repair_group", &verify_repair_group, py::arg("code"), py::arg("i"),
          py::arg("support"), py::arg("params"), py::arg("budget") = DistanceBudget{});
    m.def("find_local_protection", &find_local_protection, py::arg("code"), py::arg("i"),
          py::arg("params"), py::arg("budget") = DistanceBudget{},
          "Lexicographically smallest repair group of minimum size containing i.");
    m.def(
        "certify_lrc",
        [](const LinearCode& c, const LocalityParams& p, const DistanceBudget& budget,
           std::optional<std::vector<std::vector<size_t>>> groups) {
            return certify_lrc(c, p, budget, groups ? &*groups : nullptr);
        },
        py::arg("code"), py::arg("params"), py::arg("budget") = DistanceBudget{},
        py::arg("groups") = std::nullopt,
        "Locality certificate from the given groups, or greedily searched ones.");
    m.def("check_optimal_lrc", &check_optimal_lrc, py::arg("code"), py::arg("cert"),
          py::arg("budget") = DistanceBudget{},
          "Exact distance against the Singleton-like bound.");
    m.def("is_optimal_lrc", &is_optimal_lrc, py::arg("code"), py::arg("cert"),
          py::arg("budget") = DistanceBudget{});

    py::class_<Decomposition>(m, "Decomposition",
                              "Output of the rank-attainment decomposition (case I or II).")
        .def_readonly("case_id", &Decomposition::case_id)
        .def_readonly("groups", &Decomposition::groups)
        .def_readonly("terminal", &Decomposition::terminal)
        .def_readonly("residual", &Decomposition::residual)
        .def_readonly("s_list", &Decomposition::s_list)
        .def_readonly("r_list", &Decomposition::r_list)
        .def("__repr__", [](const Decomposition& d) {
            return "Decomposition(case=" + std::to_string(d.case_id) +
                   ", groups=" + std::to_string(d.groups.size()) +
                   ", |terminal|=" + std::to_string(d.terminal.size()) +
                   ", |residual|=" + std::to_string(d.residual.size()) + ")";
        });

    py::class_<DecompositionReport>(m, "DecompositionReport")
        .def_readonly("ok", &DecompositionReport::ok)
        .def_readonly("violations", &DecompositionReport::violations);

    m.def("decompose", &decompose, py::arg("code"), py::arg("cert"),
          py::arg("budget") = DistanceBudget{},
          "Deterministic repair-group decomposition of an optimal (r, delta) code.");
    m.def("verify_decomposition", &verify_decomposition, py::arg("code"), py::arg("decomposition"),
          py::arg("params"), py::arg("budget") = DistanceBudget{},
          "Re-derives every decomposition condition from scratch.");
    m.def(
        "rigidity_check",
        [](const LinearCode& c, const LocalityParams& p, const DistanceBudget& budget) {
            std::vector<std::vector<size_t>> violations;
            bool ok = rigidity_check(c, p, budget, &violations);
            return py::make_tuple(ok, violations);
        },
        py::arg("code"), py::arg("params"), py::arg("budget") = DistanceBudget{},
        "(ok, violations): every admissible support must restrict to an MDS code "
        "with distance exactly delta.");
    m.def("mutual_rigidity_check", &mutual_rigidity_check, py::arg("code"), py::arg("groups"),
          py::arg("params"), py::arg("budget") = DistanceBudget{},
          "Rank gain at each step must be the size gain minus (delta - 1).");

    py::class_<StructuredParityCheck>(
        m, "StructuredParityCheck",
        "Staircase parity-check form: per-group local blocks A[i] plus a bottom band B.")
        .def_readonly("delta", &StructuredParityCheck::delta)
        .def_readonly("l", &StructuredParityCheck::l)
        .def_readonly("layout", &StructuredParityCheck::layout)
        .def_readonly("groups", &StructuredParityCheck::groups)
        .def_readonly("A", &StructuredParityCheck::A)
        .def_readonly("B", &StructuredParityCheck::B)
        .def("__repr__", [](const StructuredParityCheck& s) {
            return "StructuredParityCheck(layout=" + s.layout +
                   ", groups=" + std::to_string(s.groups.size()) +
                   ", delta=" + std::to_string(s.delta) + ", l=" + std::to_string(s.l) + ")";
        });

    m.def("extract_structured_parity", &extract_structured_parity, py::arg("code"),
          py::arg("groups"), py::arg("params"), py::arg("budget") = DistanceBudget{});
    m.def("assemble_structured", &assemble_structured, py::arg("structured"),
          "Rebuild the full staircase parity-check matrix.");

    // ---- quantum --------------------------------------------------------------
    py::class_<QuantumParams>(m, "QuantumParams", "[[n, k, d]]_q with its construction route.")
        .def_readonly("n", &QuantumParams::n)
        .def_readonly("k", &QuantumParams::k)
        .def_readonly("d", &QuantumParams::d)
        .def_readonly("q", &QuantumParams::q)
        .def_readonly("construction", &QuantumParams::construction)
        .def_readonly("d_exact", &QuantumParams::d_exact)
        .def("__repr__", [](const QuantumParams& p) {
            return "[[" + std::to_string(p.n) + ", " + std::to_string(p.k) + ", " +
                   std::to_string(p.d) + "]]_" + std::to_string(p.q) + " (" + p.construction +
                   (p.d_exact ? ", d exact)" : ", d is a lower bound)");
        });

    py::class_<QuantumLrcVerdict>(m, "QuantumLrcVerdict",
                                  "Clause-by-clause optimal quantum (r, delta) LRC verdict.")
        .def_readonly("optimal", &QuantumLrcVerdict::optimal)
        .def_readonly("n", &QuantumLrcVerdict::n)
        .def_readonly("k", &QuantumLrcVerdict::k)
        .def_readonly("d", &QuantumLrcVerdict::d)
        .def_readonly("q", &QuantumLrcVerdict::q)
        .def_readonly("construction", &QuantumLrcVerdict::construction)
        .def_readonly("identity_lhs", &QuantumLrcVerdict::identity_lhs)
        .def_readonly("identity_rhs", &QuantumLrcVerdict::identity_rhs)
        .def_readonly("delta", &QuantumLrcVerdict::delta)
        .def_readonly("dual_distance", &QuantumLrcVerdict::dual_distance)
        .def_readonly("dual_distance_exact", &QuantumLrcVerdict::dual_distance_exact)
        .def_readonly("dual_containing", &QuantumLrcVerdict::dual_containing)
        .def_readonly("locality", &QuantumLrcVerdict::locality)
        .def_readonly("delta_le_dual", &QuantumLrcVerdict::delta_le_dual)
        .def_readonly("identity_holds", &QuantumLrcVerdict::identity_holds)
        .def("__repr__", [](const QuantumLrcVerdict& v) {
            return "QuantumLrcVerdict([[" + std::to_string(v.n) + ", " + std::to_string(v.k) +
                   ", " + std::to_string(v.d) + "]]_" + std::to_string(v.q) +
                   ", optimal=" + (v.optimal ? "True" : "False") + ")";
        });

    m.def("css_params", &css_params, py::arg("c1"), py::arg("c2"),
          py::arg("budget") = DistanceBudget{},
          "[[n, k1+k2-n, d]] from a Euclidean pair with the dual of c2 inside c1.");
    m.def("hermitian_params", &hermitian_params, py::arg("code"),
          py::arg("budget") = DistanceBudget{},
          "[[n, 2k-n, >= d]] from a Hermitian dual-containing code over GF(q^2).");
    m.def(
        "verify_optimal_quantum_lrc",
        [](const LinearCode& c, const LocalityParams& p, Form form, const DistanceBudget& budget,
           std::optional<std::vector<std::vector<size_t>>> groups) {
            return verify_optimal_quantum_lrc(c, p, form, budget, groups ? &*groups : nullptr);
        },
        py::arg("code"), py::arg("params"), py::arg("form"),
        py::arg("budget") = DistanceBudget{}, py::arg("groups") = std::nullopt,
        "Checks every clause of the optimal quantum (r, delta) LRC definition.");
    m.def("induce_optimal_quantum", &induce_optimal_quantum, py::arg("code"), py::arg("cert"),
          py::arg("form"), py::arg("budget") = DistanceBudget{},
          "Exact quantum parameters induced by a certified optimal LRC.");
    m.def("block_self_orthogonality_criterion", &block_self_orthogonality_criterion,
          py::arg("structured"), py::arg("form"),
          "Dual containment decided from the staircase blocks alone.");

    // ---- families -------------------------------------------------------------
    py::class_<Family1Params>(m, "Family1Params", "Disjoint-block family over GF(q^2).")
        .def(py::init([](uint64_t q, size_t u, size_t v, size_t t) {
                 return Family1Params{q, u, v, t};
             }),
             py::arg("q"), py::arg("u"), py::arg("v"), py::arg("t"))
        .def_readwrite("q", &Family1Params::q)
        .def_readwrite("u", &Family1Params::u)
        .def_readwrite("v", &Family1Params::v)
        .def_readwrite("t", &Family1Params::t)
        .def("__repr__", [](const Family1Params& p) {
            return "Family1Params(q=" + std::to_string(p.q) + ", u=" + std::to_string(p.u) +
                   ", v=" + std::to_string(p.v) + ", t=" + std::to_string(p.t) + ")";
        });

    py::class_<Family2Params>(m, "Family2Params",
                              "Shared-middle family over GF(q^2), single-row band.")
        .def(py::init([](uint64_t q, size_t s, size_t v, size_t t) {
                 return Family2Params{q, s, v, t};
             }),
             py::arg("q"), py::arg("s"), py::arg("v"), py::arg("t"))
        .def_readwrite("q", &Family2Params::q)
        .def_readwrite("s", &Family2Params::s)
        .def_readwrite("v", &Family2Params::v)
        .def_readwrite("t", &Family2Params::t)
        .def("__repr__", [](const Family2Params& p) {
            return "Family2Params(q=" + std::to_string(p.q) + ", s=" + std::to_string(p.s) +
                   ", v=" + std::to_string(p.v) + ", t=" + std::to_string(p.t) + ")";
        });

    py::class_<Family3Params>(m, "Family3Params",
                              "Shared-middle family over GF(q^2), two-row band.")
        .def(py::init([](uint64_t q, size_t s, size_t v, size_t t) {
                 return Family3Params{q, s, v, t};
             }),
             py::arg("q"), py::arg("s"), py::arg("v"), py::arg("t"))
        .def_readwrite("q", &Family3Params::q)
        .def_readwrite("s", &Family3Params::s)
        .def_readwrite("v", &Family3Params::v)
        .def_readwrite("t", &Family3Params::t)
        .def("__repr__", [](const Family3Params& p) {
            return "Family3Params(q=" + std::to_string(p.q) + ", s=" + std::to_string(p.s) +
                   ", v=" + std::to_string(p.v) + ", t=" + std::to_string(p.t) + ")";
        });

    py::class_<FamilyProvenance>(m, "FamilyProvenance",
                                 "Field-element choices made during construction.")
        .def_readonly("g", &FamilyProvenance::g)
        .def_readonly("omega", &FamilyProvenance::omega)
        .def_readonly("zeta", &FamilyProvenance::zeta)
        .def_readonly("lambda_", &FamilyProvenance::lambda)
        .def_readonly("mu", &FamilyProvenance::mu);

    py::class_<FamilyInstance>(m, "FamilyInstance",
                               "A fully certified construction with its quantum verdict.")
        .def_readonly("family", &FamilyInstance::family)
        .def_readonly("params", &FamilyInstance::params)
        .def_readonly("classical", &FamilyInstance::classical)
        .def_readonly("cert", &FamilyInstance::cert)
        .def_readonly("structured", &FamilyInstance::structured)
        .def_readonly("quantum", &FamilyInstance::quantum)
        .def_readonly("verdict", &FamilyInstance::verdict)
        .def_readonly("provenance", &FamilyInstance::provenance)
        .def("__repr__", [](const FamilyInstance& inst) {
            return "FamilyInstance(family=" + std::to_string(inst.family) + ", [" +
                   std::to_string(inst.classical.n()) + ", " +
                   std::to_string(inst.classical.k()) + "] -> [[" +
                   std::to_string(inst.quantum.n) + ", " + std::to_string(inst.quantum.k) + ", " +
                   std::to_string(inst.quantum.d) + "]]_" + std::to_string(inst.quantum.q) + ")";
        });

    m.def("validate_family1", &validate_family1, py::arg("params"),
          "One line per violated hypothesis; empty means admissible.");
    m.def("validate_family2", &validate_family2, py::arg("params"));
    m.def("validate_family3", &validate_family3, py::arg("params"));
    m.def("build_family1", &build_family1, py::arg("params"),
          py::arg("budget") = DistanceBudget{});
    m.def("build_family2", &build_family2, py::arg("params"),
          py::arg("budget") = DistanceBudget{});
    m.def("build_family3", &build_family3, py::arg("params"),
          py::arg("budget") = DistanceBudget{});

    // ---- canonical JSON bridge --------------------------------------------------
    m.def(
        "field_to_json",
        [](const FieldHandle& f) { return canonical_dump(field_to_json(*f.ptr)); },
        py::arg("field"));
    m.def(
        "field_from_json",
        [](const std::string& s) { return FieldHandle{field_from_json(parse_json(s))}; },
        py::arg("text"));
    m.def(
        "matrix_to_json", [](const Matrix& mm) { return canonical_dump(matrix_to_json(mm)); },
        py::arg("matrix"));
    m.def(
        "matrix_from_json", [](const std::string& s) { return matrix_from_json(parse_json(s)); },
        py::arg("text"));
    m.def("matrix_to_text", &matrix_to_text, py::arg("matrix"),
          "One row per line, encoded entries separated by single spaces.");
    m.def(
        "matrix_from_text",
        [](const FieldHandle& f, const std::string& text) {
            return matrix_from_text(f.ptr, text);
        },
        py::arg("field"), py::arg("text"));
    m.def("matrix_to_latex", &matrix_to_latex, py::arg("matrix"), "pmatrix body, render-only.");
    m.def(
        "code_to_json",
        [](const LinearCode& c, std::optional<size_t> d) {
            return canonical_dump(code_to_json(c, d));
        },
        py::arg("code"), py::arg("d") = std::nullopt,
        "Canonical JSON for a code; pass d to record a declared distance.");
    m.def(
        "code_from_json",
        [](const std::string& s) {
            LoadedCode lc = code_from_json(parse_json(s));
            return py::make_tuple(lc.code, lc.declared_d);
        },
        py::arg("text"),
        "(code, declared_d): declared_d is reported back, never trusted as cached.");
    m.def(
        "certificate_to_json",
        [](const LocalityCertificate& cert) { return canonical_dump(certificate_to_json(cert)); },
        py::arg("cert"));
    m.def(
        "certificate_from_json",
        [](const std::string& s, const LinearCode& c, const DistanceBudget& budget) {
            return certificate_from_json(parse_json(s), c, budget);
        },
        py::arg("text"), py::arg("code"), py::arg("budget") = DistanceBudget{},
        "Re-verifies every support against the code.");
    m.def(
        "decomposition_to_json",
        [](const Decomposition& d) { return canonical_dump(decomposition_to_json(d)); },
        py::arg("decomposition"));
    m.def(
        "decomposition_from_json",
        [](const std::string& s) { return decomposition_from_json(parse_json(s)); },
        py::arg("text"));
    m.def(
        "quantum_to_json",
        [](const QuantumParams& p) { return canonical_dump(quantum_to_json(p)); },
        py::arg("quantum"));
    m.def(
        "quantum_from_json",
        [](const std::string& s) { return quantum_from_json(parse_json(s)); }, py::arg("text"));
    m.def(
        "verdict_to_json",
        [](const QuantumLrcVerdict& v) { return canonical_dump(verdict_to_json(v)); },
        py::arg("verdict"));
    m.def(
        "verdict_from_json",
        [](const std::string& s) { return verdict_from_json(parse_json(s)); }, py::arg("text"));
    m.def(
        "structured_to_json",
        [](const StructuredParityCheck& s) { return canonical_dump(structured_to_json(s)); },
        py::arg("structured"));
    m.def(
        "structured_from_json",
        [](const std::string& s) { return structured_from_json(parse_json(s)); },
        py::arg("text"));
    m.def(
        "instance_to_json",
        [](const FamilyInstance& inst) { return canonical_dump(instance_to_json(inst)); },
        py::arg("instance"));
    m.def(
        "instance_from_json",
        [](const std::string& s, const DistanceBudget& budget) {
            return instance_from_json(parse_json(s), budget);
        },
        py::arg("text"), py::arg("budget") = DistanceBudget{},
        "Re-certifies the instance while loading.");
    m.def("install_field_table", &install_field_table, py::arg("path"),
          "Install modulus overrides from a JSON file; returns the entry count.");
}
