#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "nfct/errors.hpp"
#include "nfct/homological.hpp"
#include "nfct/matrix.hpp"
#include "nfct/normalform.hpp"
#include "nfct/polyvec.hpp"
#include "nfct/rational.hpp"
#include "nfct/symmetry.hpp"
#include "nfct/transversal.hpp"

namespace nfct {

using json = nlohmann::ordered_json;

enum class ProblemMode { None, Equivariant, ReversibleEquivariant };

inline std::string to_string(ProblemMode m) {
    switch (m) {
        case ProblemMode::None: return "none";
        case ProblemMode::Equivariant: return "equivariant";
        case ProblemMode::ReversibleEquivariant: return "reversible_equivariant";
    }
    return "none";
}

/// One problem file: the linear part, the signed symmetry group by
/// generators, the degree window, and optionally the nonlinear terms of the
/// field. Rationals travel as strings so nothing is ever rounded.
struct ProblemSpec {
    size_t dimension = 0;
    RatMatrix linear_part;
    std::vector<SignedElement> group_generators;
    int degree_min = 2;
    int degree_max = 2;
    std::map<TermIndex, Rational> vector_field; // degrees >= 2 only
    ProblemMode mode = ProblemMode::None;

    friend bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
        if (a.dimension != b.dimension || a.linear_part != b.linear_part ||
            a.degree_min != b.degree_min || a.degree_max != b.degree_max ||
            a.vector_field != b.vector_field || a.mode != b.mode)
            return false;
        if (a.group_generators.size() != b.group_generators.size()) return false;
        for (size_t i = 0; i < a.group_generators.size(); ++i)
            if (!(a.group_generators[i] == b.group_generators[i])) return false;
        return true;
    }
};

namespace detail {

inline Rational parse_rational_at(const json& v, const std::string& path) {
    if (!v.is_string()) throw ParseError(path + ": expected a rational as a string");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline long parse_int_at(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw ParseError(path + ": expected an integer");
    return v.get<long>();
}

inline RatMatrix parse_matrix_at(const json& v, size_t n, const std::string& path) {
    if (!v.is_array() || v.size() != n) throw ParseError(path + ": expected " + std::to_string(n) + " rows");
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        const json& row = v[i];
        const std::string rp = path + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != n)
            throw ParseError(rp + ": expected " + std::to_string(n) + " entries");
        for (size_t j = 0; j < n; ++j)
            m(i, j) = parse_rational_at(row[j], rp + "[" + std::to_string(j) + "]");
    }
    return m;
}

inline json matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json terms_to_json(const HomogeneousVF& p) {
    json terms = json::array();
    for (size_t i = 0; i < p.nvars(); ++i)
        for (const auto& [e, c] : p.component(i).terms())
            terms.push_back(json{{"component", i + 1}, {"exponents", e}, {"coefficient", c.str()}});
    return terms;
}

inline json field_json(const HomogeneousVF& p) {
    return json{{"terms", terms_to_json(p)}, {"rendered", render(p)}};
}

inline json subspace_basis_json(const Subspace& s, const SliceBasis& b) {
    json basis = json::array();
    for (size_t i = 0; i < s.dim(); ++i) basis.push_back(render(from_coords(s.basis().row(i), b)));
    return basis;
}

} // namespace detail

inline ProblemSpec parse_problem(const json& j) {
    if (!j.is_object()) throw ParseError("problem: expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "dimension" && key != "linear_part" && key != "group_generators" &&
            key != "degrees" && key != "vector_field" && key != "mode")
            throw ParseError("problem: unknown key '" + key + "'");
    }
    ProblemSpec spec;

    if (!j.contains("dimension")) throw ParseError("dimension: missing");
    const long n = detail::parse_int_at(j.at("dimension"), "dimension");
    if (n < 1) throw ParseError("dimension: must be at least 1");
    spec.dimension = static_cast<size_t>(n);

    if (!j.contains("linear_part")) throw ParseError("linear_part: missing");
    spec.linear_part = detail::parse_matrix_at(j.at("linear_part"), spec.dimension, "linear_part");

    if (j.contains("group_generators")) {
        const json& gens = j.at("group_generators");
        if (!gens.is_array()) throw ParseError("group_generators: expected an array");
        for (size_t i = 0; i < gens.size(); ++i) {
            const std::string path = "group_generators[" + std::to_string(i) + "]";
            const json& gen = gens[i];
            if (!gen.is_object() || !gen.contains("matrix"))
                throw ParseError(path + ": expected an object with a 'matrix'");
            SignedElement el;
            el.rho = detail::parse_matrix_at(gen.at("matrix"), spec.dimension, path + ".matrix");
            el.sigma = 1;
            if (gen.contains("sigma")) {
                const long s = detail::parse_int_at(gen.at("sigma"), path + ".sigma");
                if (s != 1 && s != -1) throw ParseError(path + ".sigma: must be 1 or -1");
                el.sigma = static_cast<int>(s);
            }
            spec.group_generators.push_back(std::move(el));
        }
    }

    if (!j.contains("degrees")) throw ParseError("degrees: missing");
    const json& degrees = j.at("degrees");
    if (!degrees.is_object()) throw ParseError("degrees: expected an object with 'min' and 'max'");
    spec.degree_min = static_cast<int>(detail::parse_int_at(degrees.value("min", json(2)), "degrees.min"));
    if (!degrees.contains("max")) throw ParseError("degrees.max: missing");
    spec.degree_max = static_cast<int>(detail::parse_int_at(degrees.at("max"), "degrees.max"));
    if (spec.degree_min < 2) throw ParseError("degrees.min: must be at least 2");
    if (spec.degree_min > spec.degree_max) throw ParseError("degrees: min exceeds max");

    if (j.contains("vector_field")) {
        const json& vf = j.at("vector_field");
        if (!vf.is_array()) throw ParseError("vector_field: expected an array of terms");
        for (size_t i = 0; i < vf.size(); ++i) {
            const std::string path = "vector_field[" + std::to_string(i) + "]";
            const json& term = vf[i];
            if (!term.is_object()) throw ParseError(path + ": expected an object");
            if (!term.contains("component") || !term.contains("exponents") || !term.contains("coefficient"))
                throw ParseError(path + ": needs 'component', 'exponents' and 'coefficient'");
            const long comp = detail::parse_int_at(term.at("component"), path + ".component");
            if (comp < 1 || static_cast<size_t>(comp) > spec.dimension)
                throw ParseError(path + ".component: out of range 1.." + std::to_string(spec.dimension));
            const json& exps = term.at("exponents");
            if (!exps.is_array() || exps.size() != spec.dimension)
                throw ParseError(path + ".exponents: expected " + std::to_string(spec.dimension) + " entries");
            Exponents e(spec.dimension);
            for (size_t q = 0; q < spec.dimension; ++q) {
                const long exp = detail::parse_int_at(exps[q], path + ".exponents[" + std::to_string(q) + "]");
                if (exp < 0) throw ParseError(path + ".exponents: must be nonnegative");
                e[q] = static_cast<int>(exp);
            }
            if (degree_of(e) < 2)
                throw ParseError(path + ": term degree must be at least 2 (the linear part is 'linear_part')");
            const Rational c = detail::parse_rational_at(term.at("coefficient"), path + ".coefficient");
            TermIndex t{static_cast<size_t>(comp - 1), std::move(e)};
            auto [it, fresh] = spec.vector_field.emplace(std::move(t), c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) spec.vector_field.erase(it);
            }
        }
    }

    const std::string mode = j.value("mode", std::string("none"));
    if (mode == "none")
        spec.mode = ProblemMode::None;
    else if (mode == "equivariant")
        spec.mode = ProblemMode::Equivariant;
    else if (mode == "reversible_equivariant")
        spec.mode = ProblemMode::ReversibleEquivariant;
    else
        throw ParseError("mode: expected 'none', 'equivariant' or 'reversible_equivariant'");

    return spec;
}

inline ProblemSpec parse_problem_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_problem(j);
}

inline json problem_to_json(const ProblemSpec& spec) {
    json j;
    j["dimension"] = spec.dimension;
    j["linear_part"] = detail::matrix_to_json(spec.linear_part);
    json gens = json::array();
    for (const auto& g : spec.group_generators)
        gens.push_back(json{{"matrix", detail::matrix_to_json(g.rho)}, {"sigma", g.sigma}});
    j["group_generators"] = std::move(gens);
    j["degrees"] = json{{"min", spec.degree_min}, {"max", spec.degree_max}};
    json vf = json::array();
    std::map<int, std::vector<std::pair<TermIndex, Rational>>> by_degree;
    for (const auto& [t, c] : spec.vector_field) by_degree[t.degree()].emplace_back(t, c);
    for (const auto& [d, terms] : by_degree)
        for (const auto& [t, c] : terms)
            vf.push_back(json{{"component", t.component + 1}, {"exponents", t.exponents}, {"coefficient", c.str()}});
    j["vector_field"] = std::move(vf);
    j["mode"] = to_string(spec.mode);
    return j;
}

/// Symmetry-aware validation shared by every command: generators close to a
/// finite group, sigmas are consistent with the declared mode, and the linear
/// part respects the group where the mode demands it.
inline std::optional<SignedGroup> build_group(const ProblemSpec& spec) {
    if (spec.mode == ProblemMode::None) {
        if (!spec.group_generators.empty())
            throw ValidationError("mode 'none' does not take group generators");
        return std::nullopt;
    }
    if (spec.mode == ProblemMode::Equivariant)
        for (const auto& g : spec.group_generators)
            if (g.sigma != 1)
                throw ValidationError("mode 'equivariant' requires every generator to have sigma = 1");
    SignedGroup group = generate_group(spec.dimension, spec.group_generators);
    if (!is_rev_equivariant_linear(spec.linear_part, group))
        throw LinearPartNotReversible("linear part is not reversible-equivariant for the generated group");
    return group;
}

/// The input jet: linear part plus the optional nonlinear terms, truncated.
inline TruncatedVF build_jet(const ProblemSpec& spec, int max_degree) {
    TruncatedVF h = TruncatedVF::from_linear(spec.linear_part, max_degree);
    for (const auto& [t, c] : spec.vector_field) {
        if (t.degree() > max_degree) continue;
        h.add_term(t.component, t.exponents, c);
    }
    return h;
}

struct RunOptions {
    std::optional<int> max_degree_override; // normalform only
};

struct RunOutcome {
    json report;
    bool all_ok = true; // false when a theorem-guaranteed flag came out false
};

inline RunOutcome run_transversal(const ProblemSpec& spec) {
    const std::optional<SignedGroup> group = build_group(spec);
    json report = problem_to_json(spec);
    report["command"] = "transversal";
    json results = json::array();
    for (int d = spec.degree_min; d <= spec.degree_max; ++d) {
        const SliceBasis basis = slice_basis(spec.dimension, d);
        const Subspace w = group ? nf_space_reveq(spec.linear_part, *group, d)
                                 : nf_space_nonsym(spec.linear_part, d);
        results.push_back(json{{"degree", d},
                               {"transversal_dim", w.dim()},
                               {"transversal_basis", detail::subspace_basis_json(w, basis)}});
    }
    report["results"] = std::move(results);
    return {std::move(report), true};
}

inline RunOutcome run_verify(const ProblemSpec& spec) {
    const std::optional<SignedGroup> group = build_group(spec);
    const TruncatedVF h = build_jet(spec, std::max(spec.degree_max - 1, 1));
    json report = problem_to_json(spec);
    report["command"] = "verify";
    json results = json::array();
    bool all_ok = true;
    for (int d = spec.degree_min; d <= spec.degree_max; ++d) {
        const DecompositionReport dec = verify_decomposition(spec.linear_part, d, group);
        const bool contained =
            group ? verify_containment(h, d - 1, *group) : verify_containment(h, d - 1);
        all_ok = all_ok && dec.ok() && contained;
        const Subspace w = group ? nf_space_reveq(spec.linear_part, *group, d)
                                 : nf_space_nonsym(spec.linear_part, d);
        results.push_back(json{{"degree", d},
                               {"transversal_dim", dec.transversal_dim},
                               {"transversal_basis",
                                detail::subspace_basis_json(w, slice_basis(spec.dimension, d))},
                               {"decomposition",
                                json{{"target_dim", dec.target_dim},
                                     {"transversal_dim", dec.transversal_dim},
                                     {"image_dim", dec.image_dim},
                                     {"direct", dec.is_direct},
                                     {"spans", dec.spans_all}}},
                               {"decomposition_ok", dec.ok()},
                               {"containment_ok", contained}});
    }
    report["results"] = std::move(results);
    return {std::move(report), all_ok};
}

inline RunOutcome run_normalform(const ProblemSpec& spec, const RunOptions& options = {}) {
    const std::optional<SignedGroup> group = build_group(spec);
    const int N = options.max_degree_override.value_or(spec.degree_max);
    if (N < 2) throw ValidationError("normal form truncation degree must be at least 2");
    const TruncatedVF h = build_jet(spec, N);
    const ReductionResult red = group ? reduce(h, N, *group) : reduce(h, N);
    json report = problem_to_json(spec);
    report["command"] = "normalform";
    json parts = json::array();
    for (int d = 1; d <= N; ++d) {
        const HomogeneousVF part = red.g.part(d);
        parts.push_back(json{{"degree", d},
                             {"terms", detail::terms_to_json(part)},
                             {"rendered", render(part)}});
    }
    report["normal_form"] =
        json{{"max_degree", N}, {"rendered", render(red.g)}, {"parts", std::move(parts)}};
    json results = json::array();
    bool all_ok = true;
    for (int k = 2; k <= N; ++k) {
        const size_t i = static_cast<size_t>(k - 2);
        all_ok = all_ok && red.certificate[i];
        results.push_back(json{{"degree", k},
                               {"change", detail::field_json(red.xis[i])},
                               {"normal_form_part", detail::field_json(red.g.part(k))},
                               {"in_transversal", red.certificate[i]}});
    }
    report["results"] = std::move(results);
    return {std::move(report), all_ok};
}

inline RunOutcome run_dims(const ProblemSpec& spec) {
    std::optional<SignedGroup> group = build_group(spec);
    const SignedGroup g = group.value_or(SignedGroup::trivial(spec.dimension));
    json report = problem_to_json(spec);
    report["command"] = "dims";
    report["group_order"] = g.order();
    json results = json::array();
    bool all_ok = true;
    for (int d = spec.degree_min; d <= spec.degree_max; ++d) {
        const size_t eq_basis = fixed_slice(g, d, SliceMode::Equivariant).dim();
        const long eq_trace = dim_by_trace(g, d, SliceMode::Equivariant);
        const size_t rev_basis = fixed_slice(g, d, SliceMode::Reversible).dim();
        const long rev_trace = dim_by_trace(g, d, SliceMode::Reversible);
        const bool agree =
            eq_trace == static_cast<long>(eq_basis) && rev_trace == static_cast<long>(rev_basis);
        all_ok = all_ok && agree;
        results.push_back(json{{"degree", d},
                               {"equivariant_dim", eq_basis},
                               {"equivariant_trace_dim", eq_trace},
                               {"reversible_dim", rev_basis},
                               {"reversible_trace_dim", rev_trace},
                               {"agree", agree}});
    }
    report["results"] = std::move(results);
    return {std::move(report), all_ok};
}

// --- human-readable rendering ----------------------------------------------

namespace detail {

inline void render_basis_lines(std::ostream& os, const json& basis, size_t dim) {
    if (dim == 0) {
        os << "dim 0, basis: (none)\n";
    } else if (dim == 1) {
        os << "dim 1, basis: " << basis[0].get<std::string>() << "\n";
    } else {
        os << "dim " << dim << ", basis:\n";
        for (const auto& line : basis) os << "    " << line.get<std::string>() << "\n";
    }
}

} // namespace detail

/// Plain-text form of a report produced by one of the run_* functions.
inline std::string render_report(const json& report) {
    std::ostringstream os;
    const std::string command = report.at("command").get<std::string>();
    os << "command: " << command << "\n";
    os << "mode: " << report.at("mode").get<std::string>() << "\n";
    os << "dimension: " << report.at("dimension").get<long>() << "\n";
    os << "linear part:\n";
    for (const auto& row : report.at("linear_part")) {
        os << "  [";
        for (size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << row[j].get<std::string>();
        os << "]\n";
    }
    if (command == "transversal") {
        for (const auto& r : report.at("results")) {
            os << "degree " << r.at("degree").get<int>() << ": ";
            detail::render_basis_lines(os, r.at("transversal_basis"), r.at("transversal_dim").get<size_t>());
        }
    } else if (command == "verify") {
        for (const auto& r : report.at("results")) {
            const auto& dec = r.at("decomposition");
            os << "degree " << r.at("degree").get<int>() << ": transversal dim "
               << r.at("transversal_dim").get<size_t>() << ", decomposition "
               << dec.at("target_dim").get<size_t>() << " = " << dec.at("transversal_dim").get<size_t>()
               << " + " << dec.at("image_dim").get<size_t>() << " "
               << (r.at("decomposition_ok").get<bool>() ? "[ok]" : "[FAIL]") << ", containment "
               << (r.at("containment_ok").get<bool>() ? "[ok]" : "[FAIL]") << "\n";
        }
    } else if (command == "normalform") {
        const auto& nf = report.at("normal_form");
        os << "normal form to degree " << nf.at("max_degree").get<int>() << ": "
           << nf.at("rendered").get<std::string>() << "\n";
        for (const auto& r : report.at("results")) {
            os << "degree " << r.at("degree").get<int>() << ": part "
               << r.at("normal_form_part").at("rendered").get<std::string>() << ", change "
               << r.at("change").at("rendered").get<std::string>() << ", in transversal: "
               << (r.at("in_transversal").get<bool>() ? "yes" : "NO") << "\n";
        }
    } else if (command == "dims") {
        os << "group order: " << report.at("group_order").get<size_t>() << "\n";
        for (const auto& r : report.at("results")) {
            os << "degree " << r.at("degree").get<int>() << ": equivariant "
               << r.at("equivariant_dim").get<size_t>() << " (trace "
               << r.at("equivariant_trace_dim").get<long>() << "), reversible "
               << r.at("reversible_dim").get<size_t>() << " (trace "
               << r.at("reversible_trace_dim").get<long>() << ") "
               << (r.at("agree").get<bool>() ? "[ok]" : "[FAIL]") << "\n";
        }
    }
    return os.str();
}

} // namespace nfct
