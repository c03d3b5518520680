#include "kac/serialize.hpp"

namespace kac {

using nlohmann::json;

json to_json(const Weight& w) {
    return json{{"m", w.m},
                {"n", w.n},
                {"shifted", format_shifted(w)},
                {"partition", format_partition(to_partition(w))}};
}

json to_json(const NqcTable& table) {
    const int r = table.degree();
    json rel = json::array();
    json ell = json::array();
    for (int s = 1; s <= r; ++s) {
        json rel_row = json::array();
        json ell_row = json::array();
        for (int t = s; t <= r; ++t) {
            rel_row.push_back(std::string(1, relation_symbol(table.rel(s, t))));
            ell_row.push_back(table.ell(s, t));
        }
        rel.push_back(std::move(rel_row));
        ell.push_back(std::move(ell_row));
    }
    json p = json::array();
    json plow = json::array();
    for (int s = 1; s <= r; ++s) {
        p.push_back(table.p(s));
        plow.push_back(table.plow(s));
    }
    return json{{"r", r}, {"rel", rel}, {"ell", ell}, {"p", p}, {"plow", plow}};
}

json to_json(const LoweringTrace& trace) {
    json intermediates = json::array();
    for (const Weight& w : trace.intermediates) intermediates.push_back(format_shifted(w));
    return json{{"theta", trace.theta},
                {"kk", trace.kk},
                {"intermediates", intermediates},
                {"result", to_json(trace.result)}};
}

json to_json(const FactorSet& fs) {
    json factors = json::array();
    for (const Factor& f : fs.factors)
        factors.push_back(json{{"theta", f.theta},
                               {"weight", format_shifted(f.mu)},
                               {"partition", format_partition(to_partition(f.mu))}});
    return json{{"lambda", to_json(fs.lambda)}, {"factors", factors}};
}

json codes_to_json(const Weight& w, const std::vector<Code>& codes) {
    json out = json::array();
    for (const Code& code : codes) {
        const Theta theta = code_to_theta(w, code);
        out.push_back(json{{"code", format_code(code)},
                           {"theta", theta},
                           {"weight", format_shifted(lower_theta(w, theta).result)}});
    }
    return out;
}

json to_json(const CompositeDiagram& diagram) {
    return json{{"covariant", diagram.covariant},
                {"contravariant", diagram.contravariant},
                {"shift", diagram.shift}};
}

json to_json(const StripLabeling& labeling) {
    json cells = json::array();
    for (const auto& [key, label] : labeling.cells)
        cells.push_back(json{{"part", key[0] == kCovariant ? "covariant" : "contravariant"},
                             {"row", key[1]},
                             {"column", key[2]},
                             {"label", label}});
    json counts = json::array();
    for (const auto& [cov, con] : labeling.counts)
        counts.push_back(json{{"covariant", cov}, {"contravariant", con}});
    return json{{"theta", labeling.theta},
                {"remaining", to_json(labeling.remaining_weight)},
                {"initial", to_json(labeling.initial)},
                {"remaining_diagram", to_json(labeling.remaining)},
                {"cells", cells},
                {"counts", counts}};
}

} // namespace kac
