#include "kac/cli.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "kac/serialize.hpp"
#include "kac/theta.hpp"

namespace kac::cli {

using nlohmann::json;

static Theta parse_theta(const std::string& text) {
    Theta theta;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        int value = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last)
            throw ParseError("bad theta entry: '" + text.substr(pos, comma - pos) + "'");
        theta.push_back(value);
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return theta;
}

static std::string theta_text(const Theta& theta) {
    std::ostringstream os;
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (i) os << ',';
        os << theta[i];
    }
    return os.str();
}

static std::string dump(const json& j) { return j.dump(2) + "\n"; }

static Response run_nqc(const Weight& w, const Request& req) {
    const NqcTable table = NqcTable::build(w);
    if (req.format == "json") return {0, dump(to_json(table))};
    std::ostringstream os;
    const int r = table.degree();
    os << "weight " << format_shifted(w) << "\n";
    os << "degree " << r << "\n";
    for (int s = 1; s <= r; ++s) {
        os << "row " << s << ":";
        for (int t = s; t <= r; ++t)
            os << " " << relation_symbol(table.rel(s, t)) << "(" << table.ell(s, t) << ")";
        os << "\n";
    }
    os << "p:";
    for (int s = 1; s <= r; ++s) os << " " << table.p(s);
    os << "\nplow:";
    for (int s = 1; s <= r; ++s) os << " " << table.plow(s);
    os << "\n";
    return {0, os.str()};
}

static Response run_theta(const Weight& w, const Request& req) {
    const auto thetas = enumerate_direct(w);
    if (req.format == "json") {
        json j = json::array();
        for (const Theta& t : thetas) j.push_back(t);
        return {0, dump(j)};
    }
    std::ostringstream os;
    for (const Theta& t : thetas) os << theta_text(t) << "\n";
    return {0, os.str()};
}

static Response run_factors(const Weight& w, const Request& req) {
    const FactorSet fs = composition_factors(w);
    std::ostringstream os;
    if (req.format == "json") {
        json j = to_json(fs);
        if (req.with_trace) {
            json traces = json::array();
            for (const Factor& f : fs.factors) traces.push_back(to_json(lower_theta(w, f.theta)));
            j["traces"] = traces;
        }
        os << dump(j);
    } else {
        for (const Factor& f : fs.factors)
            os << "theta=" << theta_text(f.theta) << " weight=" << format_shifted(f.mu) << "\n";
    }
    if (req.verify_factors) {
        bool ok = true;
        for (const Factor& f : fs.factors)
            if (!brundan_witness(w, f.mu)) ok = false;
        os << (ok ? "witnesses PASS\n" : "witnesses FAIL\n");
        if (atypical_data(w).r <= 3) {
            const Entry margin = req.margin >= 0 ? req.margin : default_oracle_margin(w);
            std::vector<Weight> expected;
            for (const Factor& f : fs.factors) expected.push_back(f.mu);
            std::sort(expected.begin(), expected.end());
            const bool same = primitive_set_oracle(w, margin) == expected;
            os << (same ? "oracle PASS\n" : "oracle FAIL\n");
            ok = ok && same;
        }
        if (!ok) return {2, os.str()};
    }
    return {0, os.str()};
}

static Response run_codes(const Weight& w, const Request& req) {
    const auto codes = enumerate_codes(w);
    if (req.format == "json") return {0, dump(codes_to_json(w, codes))};
    std::ostringstream os;
    for (const Code& code : codes) {
        const Theta theta = code_to_theta(w, code);
        os << format_code(code) << "  theta=" << theta_text(theta)
           << "  weight=" << format_shifted(lower_theta(w, theta).result) << "\n";
    }
    return {0, os.str()};
}

static Response run_diagram(const Weight& w, const Request& req) {
    const Entry margin = req.margin >= 0 ? req.margin : 0;
    if (!req.theta_text.empty()) {
        const StripLabeling labeling = strip_labeling(w, parse_theta(req.theta_text));
        if (req.format == "json") return {0, dump(to_json(labeling))};
        return {0, render_ascii(labeling.initial, &labeling)};
    }
    const CompositeDiagram diagram = build_diagram(w, margin);
    if (req.format == "json") return {0, dump(to_json(diagram))};
    return {0, render_ascii(diagram)};
}

static Response run_verify(const Weight& w, const Request& req) {
    std::ostringstream os;
    bool ok = true;
    const auto check = [&](const char* name, bool pass) {
        os << name << (pass ? " PASS" : " FAIL") << "\n";
        ok = ok && pass;
    };

    const auto direct = enumerate_direct(w);
    auto recursive = enumerate_recursive(w);
    check("theta enumerators agree", direct == recursive);

    const FactorSet fs = composition_factors(w);
    check("factor count matches theta count", fs.factors.size() == direct.size());

    bool witnesses = true, roundtrip = true;
    for (const Factor& f : fs.factors) {
        witnesses = witnesses && brundan_witness(w, f.mu).has_value();
        roundtrip = roundtrip && raise_theta(f.mu, theta_prime_for(w, f.theta)) == w;
    }
    check("brundan witnesses", witnesses);
    check("raising round-trip", roundtrip);

    const auto codes = enumerate_codes(w);
    bool bijection = codes.size() == direct.size();
    for (const Code& code : codes)
        bijection = bijection && theta_to_code(w, code_to_theta(w, code)) == code;
    check("code bijection", bijection);

    bool diagrams = true;
    try {
        for (const auto& theta : direct) {
            const StripLabeling labeling = strip_labeling(w, theta);
            diagrams = diagrams && labeling.remaining_weight == lower_theta(w, theta).result;
        }
    } catch (const StripInvariantViolation&) {
        diagrams = false;
    }
    check("diagram pipeline", diagrams);

    if (atypical_data(w).r <= 3) {
        const Entry margin = req.margin >= 0 ? req.margin : default_oracle_margin(w);
        std::vector<Weight> expected;
        for (const Factor& f : fs.factors) expected.push_back(f.mu);
        std::sort(expected.begin(), expected.end());
        check("oracle set equality", primitive_set_oracle(w, margin) == expected);
    }
    return {ok ? 0 : 2, os.str()};
}

Response run(const Request& request) {
    try {
        Weight w;
        if (request.notation == "partition")
            w = from_partition(parse_partition(request.weight_text));
        else if (request.notation == "shifted")
            w = parse_shifted(request.weight_text);
        else
            throw ParseError("unknown notation: " + request.notation);
        if (!is_dominant(w)) throw ParseError("weight is not dominant: " + format_shifted(w));

        if (request.subcommand == "nqc") return run_nqc(w, request);
        if (request.subcommand == "theta") return run_theta(w, request);
        if (request.subcommand == "factors") return run_factors(w, request);
        if (request.subcommand == "codes") return run_codes(w, request);
        if (request.subcommand == "diagram") return run_diagram(w, request);
        if (request.subcommand == "verify") return run_verify(w, request);
        throw ParseError("unknown subcommand: " + request.subcommand);
    } catch (const Error& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace kac::cli
