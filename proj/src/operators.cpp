#include "kac/operators.hpp"

#include <algorithm>

namespace kac {

static std::vector<Entry> sorted_entries(const Weight& w) {
    std::vector<Entry> s(w.entries.begin(), w.entries.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

static void check_index(const AtypicalData& aty, int s, const char* what) {
    if (s < 1 || s > aty.r)
        throw IndexOutOfRange(std::string(what) + " index " + std::to_string(s) + " with r=" +
                              std::to_string(aty.r));
}

Weight lower_once(const Weight& w, int s) { return lower_power(w, s, 1); }

Weight lower_power(const Weight& w, int s, int nu) {
    if (nu < 0) throw IndexOutOfRange("negative lowering power");
    if (!is_regular(w)) throw NonRegular("lowering requires a regular weight");
    const AtypicalData aty = atypical_data(w);
    check_index(aty, s, "lower");
    if (nu == 0) return w;
    const int mp = aty.mpos[static_cast<std::size_t>(s - 1)];
    const int np = aty.npos[static_cast<std::size_t>(s - 1)];
    if (w.at(mp) != w.at(np)) throw NotAtypicalPair("positions do not carry equal entries");
    const Entry k = k_low(w, s, nu);
    Weight out = w;
    out.at(mp) -= k;
    out.at(np) -= k;
    return out;
}

Weight raise_once(const Weight& w, int s) {
    const NqcTable table = NqcTable::build(w); // rejects non-dominant weights
    check_index(table.atypical(), s, "raise");
    const Entry k = k_step(table, s);
    Weight out = w;
    out.at(table.atypical().mpos[static_cast<std::size_t>(s - 1)]) += k;
    out.at(table.atypical().npos[static_cast<std::size_t>(s - 1)]) += k;
    return out;
}

Weight raise_theta(const Weight& mu, const ThetaPrime& theta_prime) {
    const NqcTable table = NqcTable::build(mu);
    const int r = table.degree();
    if (static_cast<int>(theta_prime.size()) != r)
        throw DegreeMismatch("theta' has " + std::to_string(theta_prime.size()) +
                             " entries, degree is " + std::to_string(r));
    Weight out = mu;
    for (int s = 1; s <= r; ++s) {
        const int t = theta_prime[static_cast<std::size_t>(s - 1)];
        if (t != 0 && t != 1) throw ThetaOutOfRange("theta' entries must be 0 or 1");
        if (t == 0) continue;
        const Entry k = k_step(table, s);
        out.at(table.atypical().mpos[static_cast<std::size_t>(s - 1)]) += k;
        out.at(table.atypical().npos[static_cast<std::size_t>(s - 1)]) += k;
    }
    return dominant_conjugate(out);
}

LoweringTrace lower_theta(const Weight& lambda, const Theta& theta) {
    const NqcTable table = NqcTable::build(lambda);
    const AtypicalData& aty = table.atypical();
    const int r = aty.r;
    if (static_cast<int>(theta.size()) != r)
        throw DegreeMismatch("theta has " + std::to_string(theta.size()) + " entries, degree is " +
                             std::to_string(r));
    for (int s = 1; s <= r; ++s) {
        const int t = theta[static_cast<std::size_t>(s - 1)];
        if (t < 0 || t > s)
            throw ThetaOutOfRange("theta_" + std::to_string(s) + " = " + std::to_string(t) +
                                  " exceeds its index");
    }
    LoweringTrace trace;
    trace.theta = theta;
    trace.intermediates.reserve(static_cast<std::size_t>(r) + 1);
    trace.intermediates.push_back(lambda);
    trace.kk.resize(static_cast<std::size_t>(r), 0);
    Weight cur = lambda;
    for (int s = 1; s <= r; ++s) {
        const int nu = theta[static_cast<std::size_t>(s - 1)];
        if (nu != 0) {
            // The pair positions stay those of lambda; the step is the nu-th
            // gap below the current entry, over the current entry set.
            const int mp = aty.mpos[static_cast<std::size_t>(s - 1)];
            const int np = aty.npos[static_cast<std::size_t>(s - 1)];
            const Entry v = cur.at(mp);
            if (v != cur.at(np)) throw NotAtypicalPair("intermediate lost its atypical pair");
            const Entry k = v - nth_missing_below(sorted_entries(cur), v, nu);
            trace.kk[static_cast<std::size_t>(s - 1)] = k;
            cur.at(mp) -= k;
            cur.at(np) -= k;
        }
        trace.intermediates.push_back(cur);
    }
    trace.result = dominant_conjugate(cur);
    return trace;
}

} // namespace kac
