#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toraut/conjugacy.hpp"
#include "toraut/dynamics.hpp"
#include "toraut/error.hpp"
#include "toraut/fixtures.hpp"
#include "toraut/int_matrix.hpp"
#include "toraut/io.hpp"
#include "toraut/poly_roots.hpp"
#include "toraut/report.hpp"
#include "toraut/spectral.hpp"

namespace {

using toraut::Int;
using toraut::IntMatrix;

Int parse_cli_integer(const std::string& token) {
    size_t start = !token.empty() && (token[0] == '-' || token[0] == '+') ? 1 : 0;
    if (start == token.size()) throw toraut::ParseError("'" + token + "' is not an integer");
    for (size_t i = start; i < token.size(); ++i) {
        if (token[i] < '0' || token[i] > '9') {
            throw toraut::ParseError("'" + token + "' is not an integer");
        }
    }
    return Int(token);
}

/// A source is a fixture name or a file path; exact fixture names win.
IntMatrix resolve_source(const std::string& source) {
    if (source.empty()) {
        throw toraut::ParseError("no input: give a matrix file or fixture name");
    }
    if (const toraut::Fixture* fixture = toraut::find_fixture(source)) return fixture->matrix;
    return toraut::load_matrix(source);
}

IntMatrix resolve_input(const std::string& positional, const std::string& fixture_flag) {
    if (!fixture_flag.empty()) {
        if (const toraut::Fixture* fixture = toraut::find_fixture(fixture_flag)) {
            return fixture->matrix;
        }
        throw toraut::ParseError("unknown fixture '" + fixture_flag + "'");
    }
    return resolve_source(positional);
}

IntMatrix require_square(IntMatrix m) {
    if (!m.is_square()) throw toraut::ParseError("matrix is not square");
    return m;
}

std::string fixture_listing() {
    std::string names;
    for (const auto& fixture : toraut::fixtures()) {
        if (!names.empty()) names += ", ";
        names += fixture.name;
    }
    return names;
}

struct RatParts {
    Int numerator;
    Int denominator;
};

RatParts parse_fraction(const std::string& token) {
    auto slash = token.find('/');
    if (slash == std::string::npos) return {parse_cli_integer(token), Int(1)};
    RatParts parts{parse_cli_integer(token.substr(0, slash)),
                   parse_cli_integer(token.substr(slash + 1))};
    if (parts.denominator <= 0) {
        throw toraut::ParseError("fraction denominator must be positive in '" + token + "'");
    }
    return parts;
}

toraut::RationalPoint parse_point(const std::string& text) {
    std::vector<RatParts> parts;
    std::string token;
    for (char c : text + ",") {
        if (c == ',') {
            if (!token.empty()) parts.push_back(parse_fraction(token));
            token.clear();
        } else if (c != ' ') {
            token += c;
        }
    }
    if (parts.empty()) throw toraut::ParseError("empty point");
    Int common = 1;
    for (const auto& p : parts) common = lcm(common, p.denominator);
    toraut::RationalPoint point;
    point.denominator = common;
    for (const auto& p : parts) point.numerators.push_back(p.numerator * (common / p.denominator));
    return point;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification of integer automorphisms of tori: spectrum, "
                 "ergodicity, entropy, unstable-foliation transitivity, and conjugacy."};
    app.require_subcommand(1);

    std::string fixture;
    bool json = false;
    bool timing = false;
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
    app.add_flag("--json", json, "emit JSON instead of text");
    app.add_option("--fixture", fixture, "use a built-in matrix: " + fixture_listing());
    app.add_option("--tolerance", tolerance,
                   "acceptance tolerance where a command checks one (default 1e-9)");
    app.add_option("--seed", seed, "sampling seed (default 0)");
    app.add_flag("--timing", timing, "include wall-clock timing in reports (off by default "
                                     "so identical inputs give byte-identical output)");

    int exit_code = 0;

    auto* analyze = app.add_subcommand("analyze", "full classification report");
    analyze->fallthrough();
    std::string analyze_source;
    analyze->add_option("source", analyze_source, "matrix file or fixture name");
    analyze->callback([&] {
        IntMatrix m = require_square(resolve_input(analyze_source, fixture));
        nlohmann::ordered_json report = toraut::analysis_report(m, timing);
        if (json) {
            std::cout << report.dump(2) << '\n';
        } else {
            std::cout << toraut::render_text_report(report);
        }
        exit_code = report["errors"].empty() ? 0 : 2;
    });

    auto* construct = app.add_subcommand(
        "construct", "emit a matrix: companion-from-cubic A B C | block-diag FILE... | "
                     "nonstandard-J A B C (use -- before negative integers)");
    construct->fallthrough();
    std::string construct_kind;
    std::vector<std::string> construct_params;
    construct->add_option("kind", construct_kind, "companion-from-cubic | block-diag | nonstandard-J")
        ->required();
    construct->add_option("params", construct_params, "kind-specific parameters");
    construct->callback([&] {
        IntMatrix result;
        if (construct_kind == "companion-from-cubic" || construct_kind == "nonstandard-J") {
            if (construct_params.size() != 3) {
                throw toraut::ParseError(construct_kind + " needs exactly three integers");
            }
            Int a = parse_cli_integer(construct_params[0]);
            Int b = parse_cli_integer(construct_params[1]);
            Int c = parse_cli_integer(construct_params[2]);
            if (construct_kind == "companion-from-cubic") {
                result = toraut::companion(toraut::lift_cubic(a, b, c));
            } else {
                result = toraut::nonstandard_symplectic_form(a, b, c).matrix;
            }
        } else if (construct_kind == "block-diag") {
            if (construct_params.empty()) {
                throw toraut::ParseError("block-diag needs at least one block source");
            }
            std::vector<IntMatrix> blocks;
            for (const auto& source : construct_params) {
                blocks.push_back(require_square(resolve_source(source)));
            }
            result = toraut::block_diag(blocks);
        } else {
            throw toraut::ParseError("unknown construct kind '" + construct_kind + "'");
        }
        if (json) {
            std::cout << toraut::matrix_json(result).dump(2) << '\n';
        } else {
            std::cout << toraut::matrix_to_text(result);
        }
    });

    auto* conjugacy = app.add_subcommand(
        "conjugacy", "integral-similarity semi-decision; exit 0 CONJUGATE, 3 DISTINCT, 4 UNKNOWN");
    conjugacy->fallthrough();
    std::string conj_a;
    std::string conj_b;
    int conj_bound = 3;
    conjugacy->add_option("a", conj_a, "first matrix file or fixture")->required();
    conjugacy->add_option("b", conj_b, "second matrix file or fixture")->required();
    conjugacy->add_option("--bound", conj_bound, "coordinate search bound (default 3)");
    conjugacy->callback([&] {
        IntMatrix a = require_square(resolve_source(conj_a));
        IntMatrix b = require_square(resolve_source(conj_b));
        toraut::ConjugacyVerdict verdict = toraut::decide_conjugacy(a, b, conj_bound);
        nlohmann::ordered_json out;
        switch (verdict.status) {
            case toraut::ConjugacyStatus::Conjugate:
                out["status"] = "CONJUGATE";
                exit_code = 0;
                break;
            case toraut::ConjugacyStatus::Distinct:
                out["status"] = "DISTINCT";
                exit_code = 3;
                break;
            case toraut::ConjugacyStatus::Unknown:
                out["status"] = "UNKNOWN";
                exit_code = 4;
                break;
        }
        out["witness"] = verdict.witness ? toraut::matrix_json(*verdict.witness)
                                         : nlohmann::ordered_json(nullptr);
        out["separating_invariant"] = verdict.separating_invariant
                                          ? nlohmann::ordered_json(*verdict.separating_invariant)
                                          : nlohmann::ordered_json(nullptr);
        out["search_bound"] = verdict.search_bound;
        std::cout << out.dump(2) << '\n';
    });

    auto* simulate = app.add_subcommand("simulate", "unstable-leaf density scan");
    simulate->fallthrough();
    std::string simulate_source;
    int resolution = 2;
    long long samples = 100000;
    std::string csv_path;
    simulate->add_option("source", simulate_source, "matrix file or fixture name");
    simulate->add_option("--resolution", resolution, "boxes per axis (default 2)");
    simulate->add_option("--samples", samples, "sample count (default 100000)");
    simulate->add_option("--csv", csv_path, "also write sampled points as CSV");
    simulate->callback([&] {
        IntMatrix m = require_square(resolve_input(simulate_source, fixture));
        std::vector<std::vector<double>> points;
        toraut::DensityScan scan = toraut::leaf_density_scan(
            m, resolution, samples, seed, csv_path.empty() ? nullptr : &points);
        if (!csv_path.empty()) {
            std::ofstream csv(csv_path);
            if (!csv) throw toraut::ParseError("cannot write '" + csv_path + "'");
            for (int c = 0; c < m.cols(); ++c) csv << (c > 0 ? "," : "") << "x" << (c + 1);
            csv << '\n';
            for (const auto& point : points) {
                for (size_t c = 0; c < point.size(); ++c) {
                    csv << (c > 0 ? "," : "") << toraut::double_string(point[c]);
                }
                csv << '\n';
            }
        }
        nlohmann::ordered_json out;
        out["coverage"] = scan.coverage;
        out["boxes_hit"] = scan.boxes_hit;
        out["resolution"] = scan.resolution;
        out["samples"] = scan.samples;
        out["seed"] = scan.seed;
        if (json) {
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << "coverage " << toraut::double_string(scan.coverage) << " ("
                      << scan.boxes_hit << "/" << scan.total_boxes << " boxes, " << scan.samples
                      << " samples, seed " << scan.seed << ")\n";
        }
    });

    auto* entropy = app.add_subcommand("entropy", "topological entropy with error bound");
    entropy->fallthrough();
    std::string entropy_source;
    entropy->add_option("source", entropy_source, "matrix file or fixture name");
    entropy->callback([&] {
        IntMatrix m = require_square(resolve_input(entropy_source, fixture));
        toraut::EntropyResult result = toraut::bowen_entropy(m);
        if (json) {
            nlohmann::ordered_json out;
            out["value"] = toraut::double_string(result.value);
            out["error_bound"] = toraut::double_string(result.error_bound);
            nlohmann::ordered_json terms = nlohmann::ordered_json::array();
            for (const auto& term : result.terms) {
                terms.push_back({{"factor", toraut::poly_json(term.factor)},
                                 {"value", toraut::double_string(term.value)},
                                 {"error_bound", toraut::double_string(term.error_bound)}});
            }
            out["terms"] = std::move(terms);
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << "entropy " << toraut::double_string(result.value) << " (error bound "
                      << toraut::double_string(result.error_bound) << ")\n";
        }
        if (result.error_bound > tolerance) {
            std::cerr << "entropy error bound exceeds tolerance " << tolerance << '\n';
            exit_code = 2;
        }
    });

    auto* periodic = app.add_subcommand("periodic-points",
                                        "period of a rational point, or fixed-point counts");
    periodic->fallthrough();
    std::string periodic_source;
    std::string point_text;
    int power = 1;
    periodic->add_option("source", periodic_source, "matrix file or fixture name");
    periodic->add_option("--point", point_text,
                         "rational point, e.g. 1/2,1/2 (comma-separated fractions)");
    periodic->add_option("--power", power, "count fixed points of A^power (default 1)");
    periodic->callback([&] {
        IntMatrix m = require_square(resolve_input(periodic_source, fixture));
        nlohmann::ordered_json out;
        if (!point_text.empty()) {
            long long period = toraut::period_of(m, parse_point(point_text));
            out["period"] = period;
            if (!json) {
                std::cout << "period " << period << '\n';
                exit_code = 0;
                return;
            }
        } else {
            auto count = toraut::count_fixed_points(m, power);
            out["power"] = power;
            out["fixed_points"] = count ? nlohmann::ordered_json(count->str())
                                        : nlohmann::ordered_json("INFINITE");
            if (!json) {
                std::cout << "fixed points of A^" << power << ": "
                          << (count ? count->str() : std::string("INFINITE")) << '\n';
                return;
            }
        }
        std::cout << out.dump(2) << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 1;
    } catch (const toraut::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const toraut::Error& e) {
        std::cerr << "analysis error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
