#include "bhdual/json_io.hpp"

namespace bhdual {

using nlohmann::json;

json json_int(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

json json_rat(const Rat& v) {
    if (denominator(v) == 1)
        return json_int(numerator(v));
    return numerator(v).str() + "/" + denominator(v).str();
}

static json varset_to_json(VarSet I, std::size_t n) {
    json a = json::array();
    for (std::size_t i = 0; i < n; ++i)
        if (in_set(I, i))
            a.push_back(i + 1); // 1-based in external output
    return a;
}

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(json_int(m(r, c)));
        rows.push_back(row);
    }
    return json{{"n", m.rows()}, {"E", rows}};
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("E"))
        throw SyntaxError("matrix JSON must be {\"n\": int, \"E\": [[int,...],...]}");
    std::size_t n = j.at("n").get<std::size_t>();
    const json& e = j.at("E");
    if (!e.is_array() || e.size() != n)
        throw SyntaxError("matrix JSON: E must have n rows");
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!e[r].is_array() || e[r].size() != n)
            throw SyntaxError("matrix JSON: E must be n x n");
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = Int(e[r][c].get<std::int64_t>());
    }
    return m;
}

json to_json(const InvertiblePolynomial& f) {
    return json{{"polynomial", to_string(f)},
                {"variables", f.variable_names},
                {"matrix", to_json(f.matrix.matrix())},
                {"det", json_int(f.matrix.det())}};
}

json to_json(const WeightVector& w) {
    json a = json::array();
    for (const auto& v : w.w)
        a.push_back(json_rat(v));
    return json{{"weights", a}, {"all_positive", w.all_positive}};
}

json to_json(const GroupElement& e) {
    json a = json::array();
    for (const auto& v : e.k)
        a.push_back(json_int(v));
    return a;
}

json to_json(const SymmetryGroup& g) {
    json factors = json::array();
    for (const auto& f : g.invariant_factors())
        factors.push_back(json_int(f));
    json gens = json::array();
    for (const auto& e : g.generators())
        gens.push_back(to_json(e));
    return json{{"d", json_int(g.order())},
                {"invariant_factors", factors},
                {"generators", gens}};
}

json to_json(const Subgroup& s) {
    json elems = json::array();
    for (const auto& e : s.elements)
        elems.push_back(to_json(e));
    return json{{"order", json_int(s.order())}, {"elements", elems}};
}

json to_json(const StratumReport& s, std::size_t n) {
    return json{{"I", varset_to_json(s.I, n)},
                {"chi_stratum", json_int(s.chi_stratum)},
                {"isotropy_order", json_int(s.isotropy_order_in_G)},
                {"contribution", json_rat(s.contribution)}};
}

json to_json(const OrbifoldEulerReport& r, std::size_t n) {
    json strata = json::array();
    for (const auto& s : r.strata)
        strata.push_back(to_json(s, n));
    return json{{"group_order", json_int(r.group_order)},
                {"strata", strata},
                {"chi_orb", json_int(r.chi_orb)},
                {"chi_reduced", json_int(r.chi_reduced)},
                {"orbifold_milnor", json_int(r.orbifold_milnor)},
                {"method", r.method}};
}

json to_json(const VerificationReport& r) {
    return json{{"f", to_json(r.pair.f)},
                {"f_dual", to_json(r.pair.f_dual)},
                {"subgroup", to_json(r.pair.g)},
                {"subgroup_dual", to_json(r.pair.g_dual)},
                {"chi_reduced_f", json_int(r.chi_reduced_f)},
                {"chi_reduced_dual", json_int(r.chi_reduced_dual)},
                {"sign", r.sign},
                {"theorem_holds", r.theorem_holds},
                {"oracle_checked_f", r.oracle_checked_f},
                {"oracle_checked_dual", r.oracle_checked_dual},
                {"oracle_agrees", r.oracle_agrees},
                {"report_f", to_json(r.side_f, r.pair.f.n())},
                {"report_dual", to_json(r.side_dual, r.pair.f.n())}};
}

json to_json(const AtomicDecomposition& d) {
    static const char* kind_names[] = {"fermat", "chain", "loop"};
    static const char* verdicts[] = {"confirmed_nondegenerate", "unknown",
                                     "not_decomposable"};
    json blocks = json::array();
    for (const auto& b : d.blocks) {
        json vars = json::array(), exps = json::array();
        for (auto v : b.variables)
            vars.push_back(v + 1);
        for (const auto& e : b.exponents)
            exps.push_back(json_int(e));
        blocks.push_back(json{{"kind", kind_names[static_cast<int>(b.kind)]},
                              {"variables", vars},
                              {"exponents", exps}});
    }
    return json{{"blocks", blocks}, {"verdict", verdicts[static_cast<int>(d.verdict)]}};
}

} // namespace bhdual
