#include "toraut/report.hpp"

#include <chrono>
#include <cstdio>

#include "toraut/error.hpp"
#include "toraut/foliation.hpp"
#include "toraut/invariant_form.hpp"
#include "toraut/spectral.hpp"

namespace toraut {

namespace {

const char* role_name(FactorRole role) {
    switch (role) {
        case FactorRole::Anosov:
            return "ANOSOV";
        case FactorRole::Center:
            return "CENTER";
        case FactorRole::Mixed:
            return "MIXED";
    }
    return "MIXED";
}

}  // namespace

nlohmann::ordered_json matrix_json(const IntMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::ordered_json vectors_json(const std::vector<std::vector<Int>>& rows) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json converted = nlohmann::ordered_json::array();
        for (const auto& entry : row) converted.push_back(entry.str());
        out.push_back(std::move(converted));
    }
    return out;
}

nlohmann::ordered_json poly_json(const IntPoly& p) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(i).str());
    return out;
}

std::string double_string(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

nlohmann::ordered_json analysis_report(const IntMatrix& input, bool with_timing) {
    const auto started = std::chrono::steady_clock::now();
    nlohmann::ordered_json report;
    nlohmann::ordered_json errors = nlohmann::ordered_json::array();
    auto record = [&errors](const char* stage, const std::exception& e) {
        errors.push_back(std::string(stage) + ": " + e.what());
    };

    report["input"] = {{"rows", input.rows()}, {"cols", input.cols()},
                       {"matrix", matrix_json(input)}};

    Int determinant = input.is_square() ? det(input) : Int(0);
    report["input"]["determinant"] = determinant.str();
    report["unimodular"] = determinant == 1 || determinant == -1;

    report["symplectic_forms"] = nullptr;
    if (report["unimodular"].get<bool>()) {
        try {
            SkewFormLattice forms = solve_invariant_form(input);
            nlohmann::ordered_json entry;
            entry["rank"] = forms.rank;
            entry["nondegenerate_found"] = forms.nondegenerate.has_value();
            entry["nondegenerate_form"] =
                forms.nondegenerate ? matrix_json(*forms.nondegenerate)
                                    : nlohmann::ordered_json(nullptr);
            entry["search_complete"] = forms.search_complete;
            report["symplectic_forms"] = std::move(entry);
        } catch (const std::exception& e) {
            record("symplectic_forms", e);
        }
    } else {
        errors.push_back("symplectic_forms: skipped, input is not unimodular");
    }

    report["trichotomy"] = nullptr;
    try {
        SpectrumSplit split = spectrum_trichotomy(input);
        nlohmann::ordered_json entry;
        entry["dim_stable"] = split.dim_stable;
        entry["dim_center"] = split.dim_center;
        entry["dim_unstable"] = split.dim_unstable;
        nlohmann::ordered_json factors = nlohmann::ordered_json::array();
        for (const auto& factor : split.factors) {
            factors.push_back({{"poly", poly_json(factor.poly)},
                               {"inside", factor.counts.inside},
                               {"on", factor.counts.on},
                               {"outside", factor.counts.outside}});
        }
        entry["factors"] = std::move(factors);
        report["trichotomy"] = std::move(entry);
    } catch (const std::exception& e) {
        record("trichotomy", e);
    }

    report["partially_hyperbolic"] = nullptr;
    report["anosov"] = nullptr;
    try {
        Hyperbolicity hyp = is_partially_hyperbolic(input);
        report["partially_hyperbolic"] = hyp.partially_hyperbolic;
        report["anosov"] = hyp.anosov;
    } catch (const std::exception& e) {
        record("partial_hyperbolicity", e);
    }

    report["ergodic"] = nullptr;
    try {
        report["ergodic"] = is_ergodic(input);
    } catch (const std::exception& e) {
        record("ergodic", e);
    }

    report["entropy"] = nullptr;
    try {
        EntropyResult entropy = bowen_entropy(input);
        nlohmann::ordered_json entry;
        entry["value"] = double_string(entropy.value);
        entry["error_bound"] = double_string(entropy.error_bound);
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& term : entropy.terms) {
            terms.push_back({{"factor", poly_json(term.factor)},
                             {"value", double_string(term.value)},
                             {"error_bound", double_string(term.error_bound)}});
        }
        entry["terms"] = std::move(terms);
        report["entropy"] = std::move(entry);
    } catch (const std::exception& e) {
        record("entropy", e);
    }

    report["foliation"] = nullptr;
    try {
        FoliationVerdict verdict = classify_foliation(input);
        DecompositionReport decomposition = decomposition_report(input);
        nlohmann::ordered_json entry;
        entry["kind"] =
            verdict.kind == FoliationKind::Transitive ? "TRANSITIVE" : "DECOMPOSABLE";
        entry["closure_dim"] = verdict.closure_dim;
        entry["outside_paper_class"] = verdict.outside_paper_class;
        entry["hull"] = vectors_json(verdict.hull_basis);
        entry["resonance"] = vectors_json(verdict.resonance_basis);
        nlohmann::ordered_json table = nlohmann::ordered_json::array();
        for (const auto& factor : decomposition.factors) {
            table.push_back({{"poly", poly_json(factor.poly)},
                             {"role", role_name(factor.role)},
                             {"dim", int(factor.sublattice.size())}});
        }
        entry["factors"] = std::move(table);
        report["foliation"] = std::move(entry);
    } catch (const std::exception& e) {
        record("foliation", e);
    }

    report["decomposition"] = nullptr;
    try {
        DecompositionReport decomposition = decomposition_report(input);
        nlohmann::ordered_json entry;
        nlohmann::ordered_json factors = nlohmann::ordered_json::array();
        for (const auto& factor : decomposition.factors) {
            factors.push_back({{"poly", poly_json(factor.poly)},
                               {"role", role_name(factor.role)},
                               {"sublattice", vectors_json(factor.sublattice)}});
        }
        entry["factors"] = std::move(factors);
        entry["center_order"] = decomposition.center_order
                                    ? nlohmann::ordered_json(*decomposition.center_order)
                                    : nlohmann::ordered_json(nullptr);
        report["decomposition"] = std::move(entry);
    } catch (const std::exception& e) {
        record("decomposition", e);
    }

    report["errors"] = std::move(errors);

    long long elapsed_ms = 0;
    if (with_timing) {
        elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    }
    report["timing_ms"] = elapsed_ms;
    return report;
}

std::string render_text_report(const nlohmann::ordered_json& report) {
    std::string out;
    auto line = [&out](const std::string& text) {
        out += text;
        out += '\n';
    };
    const auto& input = report["input"];
    line("matrix: " + std::to_string(input["rows"].get<int>()) + "x" +
         std::to_string(input["cols"].get<int>()) + ", det " +
         input["determinant"].get<std::string>());
    line(std::string("unimodular: ") + (report["unimodular"].get<bool>() ? "yes" : "no"));

    if (report["symplectic_forms"].is_null()) {
        line("invariant skew forms: (unavailable)");
    } else {
        const auto& forms = report["symplectic_forms"];
        line("invariant skew forms: rank " + std::to_string(forms["rank"].get<int>()) +
             (forms["nondegenerate_found"].get<bool>() ? ", nondegenerate form found"
                                                       : ", no nondegenerate form"));
    }

    if (report["trichotomy"].is_null()) {
        line("trichotomy: (unavailable)");
    } else {
        const auto& tri = report["trichotomy"];
        line("trichotomy: stable " + std::to_string(tri["dim_stable"].get<int>()) +
             ", center " + std::to_string(tri["dim_center"].get<int>()) + ", unstable " +
             std::to_string(tri["dim_unstable"].get<int>()));
    }

    auto flag = [&](const char* name, const nlohmann::ordered_json& value) {
        return std::string(name) + ": " +
               (value.is_null() ? "(unavailable)" : (value.get<bool>() ? "yes" : "no"));
    };
    line(flag("partially hyperbolic", report["partially_hyperbolic"]) + ", " +
         flag("anosov", report["anosov"]) + ", " + flag("ergodic", report["ergodic"]));

    if (report["entropy"].is_null()) {
        line("entropy: (unavailable)");
    } else {
        line("entropy: " + report["entropy"]["value"].get<std::string>() + " (error bound " +
             report["entropy"]["error_bound"].get<std::string>() + ")");
    }

    if (report["foliation"].is_null()) {
        line("unstable foliation: (unavailable)");
    } else {
        const auto& fol = report["foliation"];
        line("unstable foliation: " + fol["kind"].get<std::string>() + ", leaf closure dim " +
             std::to_string(fol["closure_dim"].get<int>()));
    }

    if (!report["decomposition"].is_null()) {
        const auto& dec = report["decomposition"];
        std::string factors;
        for (const auto& factor : dec["factors"]) {
            if (!factors.empty()) factors += ", ";
            factors += factor["role"].get<std::string>();
            factors += "(" + std::to_string(int(factor["sublattice"].size())) + ")";
        }
        std::string order = dec["center_order"].is_null()
                                ? "none"
                                : std::to_string(dec["center_order"].get<int>());
        line("splitting: " + factors + "; center order " + order);
    }

    const auto& errors = report["errors"];
    if (!errors.empty()) {
        line("errors:");
        for (const auto& e : errors) line("  - " + e.get<std::string>());
    }
    return out;
}

}  // namespace toraut
