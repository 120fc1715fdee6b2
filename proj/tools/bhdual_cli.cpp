#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "bhdual/duality.hpp"
#include "bhdual/json_io.hpp"

using nlohmann::json;
using namespace bhdual;

namespace {

struct CliConfig {
    long group_cap = DefaultCaps::group_order;
    long subgroup_cap = DefaultCaps::subgroup_enum;
    long pairs_cap = DefaultCaps::pairs_oracle;
    std::string output = "text";

    bool json_output() const { return output == "json"; }
};

InvertiblePolynomial read_polynomial(const std::string& input) {
    std::string trimmed = input;
    auto pos = trimmed.find_first_not_of(" \t\n");
    if (pos != std::string::npos && trimmed[pos] == '{') {
        json j = json::parse(trimmed, nullptr, false);
        if (j.is_discarded())
            throw SyntaxError("invalid JSON matrix input");
        return polynomial_from_matrix(ExponentMatrix(matrix_from_json(j)));
    }
    return parse_polynomial(input);
}

Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw SyntaxError("bad rational '" + s + "'");
    }
}

// one generator per option value, coordinates comma-separated: "1/2,1/2" or "1/4,2/4"
Subgroup subgroup_from_options(GroupPtr gf, const std::vector<std::string>& gen_specs) {
    if (gen_specs.empty())
        return full_subgroup(gf);
    std::vector<GroupElement> gens;
    for (const auto& spec : gen_specs) {
        std::vector<Rat> coords;
        std::size_t start = 0;
        while (start <= spec.size()) {
            auto comma = spec.find(',', start);
            std::string tok =
                spec.substr(start, comma == std::string::npos ? spec.size() - start
                                                              : comma - start);
            coords.push_back(parse_rational(tok));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        gens.push_back(gf->element_from_rationals(coords));
    }
    return subgroup_from_generators(gf, gens);
}

void emit(const CliConfig& cfg, const json& j, const std::string& text) {
    if (cfg.json_output())
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string format_element(const GroupElement& e, const Int& d) {
    std::string out = "(";
    for (std::size_t i = 0; i < e.k.size(); ++i) {
        if (i) out += ", ";
        out += e.k[i].str() + "/" + d.str();
    }
    return out + ")";
}

int cmd_parse(const CliConfig& cfg, const std::string& poly) {
    auto f = read_polynomial(poly);
    auto w = weights(f);
    json j = to_json(f);
    j["weights"] = to_json(w);
    std::string text = "polynomial: " + to_string(f) + "\n";
    text += "n: " + std::to_string(f.n()) + "\n";
    text += "det: " + f.matrix.det().str() + "\nE:\n";
    for (std::size_t r = 0; r < f.n(); ++r) {
        text += " ";
        for (std::size_t c = 0; c < f.n(); ++c)
            text += " " + f.matrix.entry(r, c).str();
        text += "\n";
    }
    text += "weights:";
    for (const auto& v : w.w) {
        Rat r = v;
        text += " " + numerator(r).str() + "/" + denominator(r).str();
    }
    text += w.all_positive ? " (all positive)\n" : " (not all positive)\n";
    emit(cfg, j, text);
    return 0;
}

int cmd_group(const CliConfig& cfg, const std::string& poly) {
    auto f = read_polynomial(poly);
    auto gf = full_symmetry_group(f.matrix, cfg.group_cap);
    json j = to_json(*gf);
    std::string text = "order: " + gf->order().str() + "\nfactors:";
    for (const auto& d : gf->invariant_factors())
        text += " " + d.str();
    text += "\ngenerators:\n";
    for (const auto& g : gf->generators())
        text += "  " + format_element(g, gf->order()) + "\n";
    emit(cfg, j, text);
    return 0;
}

int cmd_subgroups(const CliConfig& cfg, const std::string& poly) {
    auto f = read_polynomial(poly);
    auto gf = full_symmetry_group(f.matrix, cfg.group_cap);
    auto subs = all_subgroups(gf, cfg.subgroup_cap);
    json j = json::array();
    std::string text = std::to_string(subs.size()) + " subgroups of a group of order " +
                       gf->order().str() + "\n";
    for (const auto& s : subs) {
        j.push_back(to_json(s));
        text += "  order " + s.order().str() + ":";
        for (const auto& e : s.elements)
            text += " " + format_element(e, gf->order());
        text += "\n";
    }
    emit(cfg, j, text);
    return 0;
}

int cmd_dual(const CliConfig& cfg, const std::string& poly,
             const std::vector<std::string>& gens) {
    auto f = read_polynomial(poly);
    auto gf = full_symmetry_group(f.matrix, cfg.group_cap);
    auto g = subgroup_from_options(gf, gens);
    auto pair = dual_pair(f, g);
    json j{{"f", to_json(pair.f)},
           {"f_dual", to_json(pair.f_dual)},
           {"subgroup", to_json(pair.g)},
           {"subgroup_dual", to_json(pair.g_dual)}};
    std::string text = "f:      " + to_string(pair.f) + "\n";
    text += "f_dual: " + to_string(pair.f_dual) + "\n";
    text += "|G| = " + pair.g.order().str() + ", |G_dual| = " + pair.g_dual.order().str() +
            ", |G_f| = " + gf->order().str() + "\n";
    text += "G_dual:";
    for (const auto& e : pair.g_dual.elements)
        text += " " + format_element(e, gf->order());
    text += "\n";
    emit(cfg, j, text);
    return 0;
}

int cmd_euler(const CliConfig& cfg, const std::string& poly,
              const std::vector<std::string>& gens, const std::string& method) {
    auto f = read_polynomial(poly);
    auto gf = full_symmetry_group(f.matrix, cfg.group_cap);
    auto g = subgroup_from_options(gf, gens);
    std::vector<OrbifoldEulerReport> reports;
    if (method == "strata" || method == "both")
        reports.push_back(orbifold_euler_strata(f, g));
    if (method == "pairs" || method == "both")
        reports.push_back(orbifold_euler_pairs(f, g, cfg.pairs_cap));
    json j = json::array();
    std::string text;
    for (const auto& r : reports) {
        j.push_back(to_json(r, f.n()));
        text += "method " + r.method + ": chi_orb = " + r.chi_orb.str() +
                ", chi_reduced = " + r.chi_reduced.str() +
                ", orbifold_milnor = " + r.orbifold_milnor.str() + "\n";
    }
    if (method == "both" && reports[0].chi_orb != reports[1].chi_orb)
        throw InternalCheckFailure("strata and pairs methods disagree");
    emit(cfg, j.size() == 1 ? j[0] : j, text);
    return 0;
}

int cmd_verify(const CliConfig& cfg, const std::string& poly,
               const std::vector<std::string>& gens) {
    auto f = read_polynomial(poly);
    auto gf = full_symmetry_group(f.matrix, cfg.group_cap);
    auto g = subgroup_from_options(gf, gens);
    auto r = verify_theorem(f, g, cfg.pairs_cap);
    std::string text = "chi_reduced(f, G)           = " + r.chi_reduced_f.str() + "\n";
    text += "chi_reduced(f_dual, G_dual) = " + r.chi_reduced_dual.str() + "\n";
    text += "sign (-1)^n                 = " + std::to_string(r.sign) + "\n";
    text += std::string("theorem: ") + (r.theorem_holds ? "holds" : "FAILS") + "\n";
    emit(cfg, to_json(r), text);
    return r.theorem_holds && r.oracle_agrees ? 0 : 1;
}

int cmd_corpus(const CliConfig& cfg, std::uint64_t seed, const std::string& mode,
               std::size_t count, std::size_t n_max, long exp_max, bool verify) {
    CorpusMode m = mode == "sparse" ? CorpusMode::Sparse : CorpusMode::Atomic;
    auto corpus = generate_corpus(seed, m, n_max, exp_max, count);
    std::size_t failures = 0, checks = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& f = corpus[i];
        json line{{"schema", 1},
                  {"index", i},
                  {"polynomial", to_string(f)},
                  {"matrix", to_json(f.matrix.matrix())},
                  {"det", json_int(f.matrix.det())},
                  {"classification", to_json(classify_atomic(f))}};
        if (verify) {
            auto gf = full_symmetry_group(f.matrix, cfg.group_cap);
            std::vector<Subgroup> subs;
            if (gf->order() <= cfg.subgroup_cap) {
                subs = all_subgroups(gf, cfg.subgroup_cap);
            } else {
                // random cyclic subgroups, deterministic per instance
                std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
                for (int t = 0; t < 10; ++t)
                    subs.push_back(subgroup_from_generators(
                        gf, {gf->elements()[rng() % gf->elements().size()]}));
            }
            json results = json::array();
            bool all_hold = true;
            for (const auto& g : subs) {
                auto r = verify_theorem(f, g, cfg.pairs_cap);
                ++checks;
                if (!r.theorem_holds || !r.oracle_agrees) {
                    all_hold = false;
                    ++failures;
                }
                results.push_back(json{{"subgroup_order", json_int(g.order())},
                                       {"dual_order", json_int(r.pair.g_dual.order())},
                                       {"chi_reduced_f", json_int(r.chi_reduced_f)},
                                       {"chi_reduced_dual", json_int(r.chi_reduced_dual)},
                                       {"holds", r.theorem_holds && r.oracle_agrees}});
            }
            line["checks"] = results;
            line["all_hold"] = all_hold;
        }
        std::cout << line.dump() << "\n";
    }
    json summary{{"schema", 1},
                 {"summary", json{{"count", corpus.size()},
                                  {"mode", mode},
                                  {"seed", seed},
                                  {"checks", checks},
                                  {"failures", failures}}}};
    std::cout << summary.dump() << "\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetry groups, dual pairs and orbifold Euler characteristics of "
                 "invertible polynomials"};
    app.require_subcommand(1);

    CliConfig cfg;
    app.add_option("--output", cfg.output, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--group-cap", cfg.group_cap, "largest group order to enumerate")
        ->envname("BHDUAL_GROUP_CAP")
        ->check(CLI::PositiveNumber);
    app.add_option("--subgroup-cap", cfg.subgroup_cap,
                   "largest group order for subgroup enumeration")
        ->envname("BHDUAL_SUBGROUP_CAP")
        ->check(CLI::PositiveNumber);
    app.add_option("--pairs-cap", cfg.pairs_cap,
                   "largest subgroup order for the pairs oracle")
        ->envname("BHDUAL_PAIRS_CAP")
        ->check(CLI::PositiveNumber);

    std::string poly, method = "strata", mode = "atomic";
    std::vector<std::string> gens;
    std::uint64_t seed = 1;
    std::size_t count = 10, n_max = 3;
    long exp_max = 4;
    bool do_verify = false;

    auto* parse_cmd = app.add_subcommand("parse", "parse a polynomial, print E and weights");
    parse_cmd->add_option("poly", poly)->required();

    auto* group_cmd = app.add_subcommand("group", "the full symmetry group G_f");
    group_cmd->add_option("poly", poly)->required();

    auto* subs_cmd = app.add_subcommand("subgroups", "all subgroups of G_f");
    subs_cmd->add_option("poly", poly)->required();

    auto* dual_cmd = app.add_subcommand("dual", "Berglund-Henningson dual pair");
    dual_cmd->add_option("poly", poly)->required();
    dual_cmd->add_option("--subgroup", gens,
                         "subgroup generator, e.g. 1/2,1/2 (repeatable; default: full G_f)");

    auto* euler_cmd = app.add_subcommand("euler", "orbifold Euler characteristic");
    euler_cmd->add_option("poly", poly)->required();
    euler_cmd->add_option("--subgroup", gens, "subgroup generator (repeatable)");
    euler_cmd->add_option("--method", method)
        ->check(CLI::IsMember({"strata", "pairs", "both"}))
        ->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "check the duality of reduced "
                                                    "orbifold Euler characteristics");
    verify_cmd->add_option("poly", poly)->required();
    verify_cmd->add_option("--subgroup", gens, "subgroup generator (repeatable)");

    auto* corpus_cmd = app.add_subcommand("corpus", "generate (and optionally verify) "
                                                    "a corpus of invertible polynomials");
    corpus_cmd->add_option("--seed", seed)->capture_default_str();
    corpus_cmd->add_option("--mode", mode)
        ->check(CLI::IsMember({"atomic", "sparse"}))
        ->capture_default_str();
    corpus_cmd->add_option("--count", count)->capture_default_str();
    corpus_cmd->add_option("--n-max", n_max)->capture_default_str();
    corpus_cmd->add_option("--exp-max", exp_max)->capture_default_str();
    corpus_cmd->add_flag("--verify", do_verify, "run the theorem check on every instance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (parse_cmd->parsed()) return cmd_parse(cfg, poly);
        if (group_cmd->parsed()) return cmd_group(cfg, poly);
        if (subs_cmd->parsed()) return cmd_subgroups(cfg, poly);
        if (dual_cmd->parsed()) return cmd_dual(cfg, poly, gens);
        if (euler_cmd->parsed()) return cmd_euler(cfg, poly, gens, method);
        if (verify_cmd->parsed()) return cmd_verify(cfg, poly, gens);
        if (corpus_cmd->parsed())
            return cmd_corpus(cfg, seed, mode, count, n_max, exp_max, do_verify);
    } catch (const GroupTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
