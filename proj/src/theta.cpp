#include "kac/theta.hpp"

#include <algorithm>

namespace kac {

static void check_ambient(const NqcTable& table, const Theta& theta) {
    if (static_cast<int>(theta.size()) != table.degree())
        throw DegreeMismatch("theta has " + std::to_string(theta.size()) + " entries, degree is " +
                             std::to_string(table.degree()));
    for (int s = 1; s <= table.degree(); ++s) {
        const int t = theta[static_cast<std::size_t>(s - 1)];
        if (t < 0 || t > s)
            throw ThetaOutOfRange("theta_" + std::to_string(s) + " = " + std::to_string(t) +
                                  " exceeds its index");
    }
}

std::vector<Violation> violations_at(const NqcTable& table, const Theta& theta, int s) {
    std::vector<Violation> out;
    const auto th = [&theta](int i) { return theta[static_cast<std::size_t>(i - 1)]; };
    const int ts = th(s);
    if (ts == 0) return out;
    const int a = s - ts;     // c_{a,s} != c required, omitted when a = 0
    const int b = s + 1 - ts; // c_{b,s} != n required, b >= 1 always
    if (a >= 1 && table.rel(a, s) == Relation::C)
        out.push_back({Cond::C1a, s, a, "c_{" + std::to_string(a) + "," + std::to_string(s) + "} = c"});
    if (table.rel(b, s) == Relation::N)
        out.push_back({Cond::C1b, s, b, "c_{" + std::to_string(b) + "," + std::to_string(s) + "} = n"});
    for (int p = b; p <= s - 1; ++p) {
        const int bound = ts - s + p;
        if (th(p) > bound || (th(p) == bound && table.rel(p, s) != Relation::C))
            out.push_back({Cond::C2, s, p,
                           "theta_" + std::to_string(p) + " = " + std::to_string(th(p)) +
                               " against bound " + std::to_string(bound)});
        if (table.rel(p, s) == Relation::N) continue;
        if (p == b && table.rel(p, s) == Relation::Q) {
            if (th(p) != 0)
                out.push_back({Cond::C4, s, p,
                               "quasi-critical exception needs theta_" + std::to_string(p) + " = 0"});
            continue;
        }
        bool supported = th(p) != 0;
        for (int pp = p + 1; !supported && pp <= s; ++pp)
            supported = table.rel(p, pp) == Relation::Q && th(pp) >= pp + 1 - p;
        if (!supported)
            out.push_back({Cond::C3, s, p,
                           "index " + std::to_string(p) + " carries no step and no quasi-critical "
                           "support up to " + std::to_string(s)});
    }
    return out;
}

std::vector<Violation> theta_valid(const NqcTable& table, const Theta& theta) {
    check_ambient(table, theta);
    std::vector<Violation> out;
    for (int s = 1; s <= table.degree(); ++s) {
        auto v = violations_at(table, theta, s);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

std::vector<Violation> theta_valid(const Weight& w, const Theta& theta) {
    return theta_valid(NqcTable::build(w), theta);
}

std::vector<Theta> enumerate_direct(const NqcTable& table) {
    const int r = table.degree();
    std::vector<Theta> out;
    Theta theta(static_cast<std::size_t>(r), 0);
    // Odometer over Theta_r in lexicographic order.
    while (true) {
        if (theta_valid(table, theta).empty()) out.push_back(theta);
        int i = r - 1;
        while (i >= 0 && theta[static_cast<std::size_t>(i)] == i + 1) {
            theta[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++theta[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<Theta> enumerate_direct(const Weight& w) {
    return enumerate_direct(NqcTable::build(w));
}

std::vector<Theta> enumerate_recursive(const NqcTable& table) {
    const int r = table.degree();
    std::vector<Theta> cur = {Theta{}};
    for (int u = 1; u <= r; ++u) {
        std::vector<Theta> next;
        for (const Theta& prefix : cur) {
            Theta theta = prefix;
            theta.push_back(0);
            for (int j = 0; j <= u; ++j) {
                theta.back() = j;
                // j = u+1-s corresponds to a removal ending at index s; the
                // two top relation constraints prune the candidate values and
                // the remaining index-u conditions decide membership.
                if (violations_at(table, theta, u).empty()) next.push_back(theta);
            }
        }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

std::vector<Theta> enumerate_recursive(const Weight& w) {
    return enumerate_recursive(NqcTable::build(w));
}

Theta theta_restrict(const Theta& theta, const std::vector<int>& indices) {
    Theta out;
    out.reserve(indices.size());
    for (int i : indices) {
        if (i < 1 || i > static_cast<int>(theta.size()))
            throw IndexOutOfRange("restriction index " + std::to_string(i));
        out.push_back(theta[static_cast<std::size_t>(i - 1)]);
    }
    return out;
}

std::uint64_t count_theta(const Weight& w) {
    const NqcTable table = NqcTable::build(w);
    const int r = table.degree();
    std::uint64_t count = 0;
    // Depth-first over admissible prefixes; prefixes that already break an
    // index condition cannot recover, so whole subtrees are skipped.
    Theta theta;
    auto rec = [&](auto&& self, int u) -> void {
        if (u > r) {
            ++count;
            return;
        }
        theta.push_back(0);
        for (int j = 0; j <= u; ++j) {
            theta.back() = j;
            if (violations_at(table, theta, u).empty()) self(self, u + 1);
        }
        theta.pop_back();
    };
    rec(rec, 1);
    return count;
}

} // namespace kac
