#include "kac/codes.hpp"
#include "kac/theta.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace kac {

bool operator<(const Code& a, const Code& b) { return a.columns < b.columns; }

std::string rule_name(Rule rule) {
    switch (rule) {
        case Rule::I: return "i";
        case Rule::II: return "ii";
        case Rule::III: return "iii";
        case Rule::IV: return "iv";
        case Rule::V: return "v";
        case Rule::VI: return "vi";
        case Rule::VIp: return "vi'";
        case Rule::VII: return "vii";
        case Rule::VIIp: return "vii'";
    }
    return "?";
}

static bool contains(const std::vector<int>& column, int label) {
    return std::find(column.begin(), column.end(), label) != column.end();
}

static void check_shape(const NqcTable& table, const Code& code) {
    const int r = table.degree();
    if (code.length() != r)
        throw MalformedCode("code has " + std::to_string(code.length()) + " columns, degree is " +
                            std::to_string(r));
    for (int p = 1; p <= r; ++p) {
        const auto& col = code.column(p);
        if (col.empty()) throw MalformedCode("column " + std::to_string(p) + " is empty");
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (col[i] < 0 || col[i] > r)
                throw MalformedCode("label " + std::to_string(col[i]) + " outside 0.." +
                                    std::to_string(r));
            if (col[i] == 0 && col.size() != 1)
                throw MalformedCode("label 0 must form a singleton column");
            if (i > 0 && col[i] <= col[i - 1])
                throw MalformedCode("column " + std::to_string(p) + " is not strictly increasing");
        }
    }
}

std::vector<RuleViolation> validate_code(const NqcTable& table, const Code& code) {
    check_shape(table, code);
    const int r = table.degree();
    std::vector<RuleViolation> out;
    const auto report = [&out](Rule rule, int column, int label, std::string msg) {
        out.push_back({rule, column, label, std::move(msg)});
    };

    // (i) top of column s is 0, s, or the top a > s of some quasi-critically
    // related later column.
    for (int s = 1; s <= r; ++s) {
        const int a = code.top(s);
        if (a == 0 || a == s) continue;
        if (a < s) {
            report(Rule::I, s, a, "top label smaller than its column index");
            continue;
        }
        bool ok = false;
        for (int t = s + 1; t <= r && !ok; ++t)
            ok = table.rel(s, t) == Relation::Q && code.top(t) == a;
        if (!ok) report(Rule::I, s, a, "top label has no quasi-critical source column");
    }

    // (ii) a full critical chain from s to t forces t's top below s's top.
    for (int t = 2; t <= r; ++t) {
        const int a = code.top(t);
        if (a == 0 || a < t) continue;
        for (int s = t - 1; s >= 1; --s) {
            if (table.rel(s, t) != Relation::C) break;
            const auto& col = code.column(s);
            if (std::find(col.begin() + 1, col.end(), a) == col.end())
                report(Rule::II, s, a, "critical chain to column " + std::to_string(t) +
                                           " demands its top below this column's top");
        }
    }

    // (iii) below s only critically related labels t that top their own column.
    for (int p = 1; p <= r; ++p) {
        const auto& col = code.column(p);
        for (std::size_t i = 0; i + 1 < col.size(); ++i)
            for (std::size_t j = i + 1; j < col.size(); ++j) {
                const int s = col[i], t = col[j];
                if (code.top(t) != t)
                    report(Rule::III, p, t, "label below another must top its own column");
                else if (table.rel(s, t) != Relation::C)
                    report(Rule::III, p, t,
                           "label below " + std::to_string(s) + " not critically related");
            }
    }

    // (iv) the immediate successor of a label agrees across columns.
    for (int s = 1; s <= r; ++s) {
        std::vector<std::pair<int, int>> succ; // (column, label below s or 0)
        for (int p = 1; p <= r; ++p) {
            const auto& col = code.column(p);
            const auto it = std::find(col.begin(), col.end(), s);
            if (it == col.end()) continue;
            succ.emplace_back(p, it + 1 != col.end() ? *(it + 1) : 0);
        }
        if (succ.size() < 2) continue;
        for (const auto& [p, t] : succ)
            if (t != 0)
                for (const auto& [p2, t2] : succ)
                    if (t2 != t)
                        report(Rule::IV, p2, s,
                               "label " + std::to_string(t) + " follows " + std::to_string(s) +
                                   " in column " + std::to_string(p) + " but not here");
    }

    // (v) a quasi-critical chain s-t-u with equal nonzero tops at the ends
    // forbids a zero top in the middle.
    for (int s = 1; s <= r; ++s)
        for (int t = s + 1; t <= r; ++t)
            for (int u = t + 1; u <= r; ++u)
                if (table.rel(s, t) == Relation::Q && table.rel(t, u) == Relation::Q &&
                    code.top(s) == code.top(u) && code.top(s) != 0 && code.top(t) == 0)
                    report(Rule::V, t, code.top(s), "zero top inside a quasi-critical chain");

    // (vi) alternating tops a,b,a,b; (vi)' same with containment, implied.
    const auto alternating = [&](Rule rule, auto has) {
        for (int s = 1; s <= r; ++s)
            for (int t = s + 1; t <= r; ++t)
                for (int u = t + 1; u <= r; ++u)
                    for (int v = u + 1; v <= r; ++v)
                        for (int a = 1; a <= r; ++a)
                            for (int b = 1; b <= r; ++b) {
                                if (a == b || !has(s, a) || !has(t, b) || !has(u, a) || !has(v, b))
                                    continue;
                                if (a < b) {
                                    if (!contains(code.column(s), b))
                                        report(rule, s, b, "interleaving demands the larger label");
                                    if (!contains(code.column(u), b))
                                        report(rule, u, b, "interleaving demands the larger label");
                                } else {
                                    if (!contains(code.column(t), a))
                                        report(rule, t, a, "interleaving demands the larger label");
                                    if (!contains(code.column(v), a))
                                        report(rule, v, a, "interleaving demands the larger label");
                                }
                            }
    };
    alternating(Rule::VI, [&](int p, int a) { return code.top(p) == a; });
    alternating(Rule::VIp, [&](int p, int a) { return contains(code.column(p), a); });

    // (vii) and (vii)': non-top labels of a multi-label column appear in the
    // next column ((vii) asks this of the last label only).
    for (int p = 1; p <= r; ++p) {
        const auto& col = code.column(p);
        if (col.size() < 2) continue;
        const bool has_next = p < r;
        if (!has_next || !contains(code.column(p + 1), col.back()))
            report(Rule::VII, p, col.back(), "last label missing from the next column");
        for (std::size_t i = 1; i < col.size(); ++i)
            if (!has_next || !contains(code.column(p + 1), col[i]))
                report(Rule::VIIp, p, col[i], "non-top label missing from the next column");
    }
    return out;
}

std::vector<RuleViolation> validate_code(const Weight& w, const Code& code) {
    return validate_code(NqcTable::build(w), code);
}

std::vector<Code> enumerate_codes(const NqcTable& table) {
    const int r = table.degree();
    // Candidate columns for position p: the zero column plus every strictly
    // increasing subset of {p..r} whose internal pairs are critically related
    // (rule (iii) intra-column prune).
    std::vector<std::vector<std::vector<int>>> candidates(static_cast<std::size_t>(r));
    for (int p = 1; p <= r; ++p) {
        auto& list = candidates[static_cast<std::size_t>(p - 1)];
        list.push_back({0});
        const int span = r - p + 1;
        for (int mask = 1; mask < (1 << span); ++mask) {
            std::vector<int> col;
            for (int i = 0; i < span; ++i)
                if (mask & (1 << i)) col.push_back(p + i);
            bool ok = true;
            for (std::size_t i = 0; ok && i + 1 < col.size(); ++i)
                for (std::size_t j = i + 1; ok && j < col.size(); ++j)
                    ok = table.rel(col[i], col[j]) == Relation::C;
            if (ok) list.push_back(std::move(col));
        }
    }
    std::vector<Code> out;
    Code code;
    code.columns.resize(static_cast<std::size_t>(r));
    auto rec = [&](auto&& self, int p) -> void {
        if (p > r) {
            if (validate_code(table, code).empty()) out.push_back(code);
            return;
        }
        for (const auto& col : candidates[static_cast<std::size_t>(p - 1)]) {
            code.columns[static_cast<std::size_t>(p - 1)] = col;
            self(self, p + 1);
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Code> enumerate_codes(const Weight& w) { return enumerate_codes(NqcTable::build(w)); }

Theta code_to_theta(const Weight& w, const Code& code) {
    const NqcTable table = NqcTable::build(w);
    const auto violations = validate_code(table, code);
    if (!violations.empty())
        throw InvalidCode("code breaks rule " + rule_name(violations.front().rule) + ": " +
                          violations.front().message);
    const int r = table.degree();
    Theta theta(static_cast<std::size_t>(r), 0);
    for (int s = 1; s <= r; ++s)
        for (int p = 1; p <= r; ++p)
            if (contains(code.column(p), s)) {
                theta[static_cast<std::size_t>(s - 1)] = s + 1 - p;
                break;
            }
    return theta;
}

Code theta_to_code(const Weight& w, const Theta& theta) {
    const NqcTable table = NqcTable::build(w);
    if (!theta_valid(table, theta).empty())
        throw ThetaNotInThetaLambda("theta is not admissible for this weight");
    const int r = table.degree();
    Code code;
    code.columns.resize(static_cast<std::size_t>(r));
    for (int s = 1; s <= r; ++s) {
        if (theta[static_cast<std::size_t>(s - 1)] == 0) continue;
        const int a = s + 1 - theta[static_cast<std::size_t>(s - 1)];
        for (int p = a; p <= s; ++p) {
            auto& col = code.columns[static_cast<std::size_t>(p - 1)];
            const bool place =
                p == a || p == s || table.rel(p, s) == Relation::C ||
                (table.rel(p, s) == Relation::Q && col.empty());
            if (place) col.push_back(s); // increasing: labels arrive in order
        }
    }
    for (auto& col : code.columns)
        if (col.empty()) col = {0};
    return code;
}

Code parse_code(const std::string& text) {
    Code code;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t semi = text.find(';', pos);
        if (semi == std::string::npos) semi = text.size();
        std::vector<int> col;
        std::size_t q = pos;
        while (q <= semi) {
            std::size_t comma = text.find(',', q);
            if (comma == std::string::npos || comma > semi) comma = semi;
            int label = 0;
            const char* first = text.data() + q;
            const char* last = text.data() + comma;
            auto [ptr, ec] = std::from_chars(first, last, label);
            if (ec != std::errc{} || ptr != last)
                throw ParseError("bad label in code: '" + text.substr(q, comma - q) + "'");
            col.push_back(label);
            if (comma == semi) break;
            q = comma + 1;
        }
        code.columns.push_back(std::move(col));
        if (semi == text.size()) break;
        pos = semi + 1;
    }
    return code;
}

std::string format_code(const Code& code) {
    std::ostringstream os;
    for (std::size_t p = 0; p < code.columns.size(); ++p) {
        if (p) os << ';';
        for (std::size_t i = 0; i < code.columns[p].size(); ++i) {
            if (i) os << ',';
            os << code.columns[p][i];
        }
    }
    return os.str();
}

} // namespace kac
