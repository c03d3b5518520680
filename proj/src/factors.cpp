#include "kac/factors.hpp"

#include <algorithm>
#include <set>

namespace kac {

static std::vector<Entry> atypical_values(const Weight& w) { return atypical_data(w).values; }

FactorSet composition_factors(const Weight& lambda) {
    const NqcTable table = NqcTable::build(lambda);
    FactorSet fs;
    fs.lambda = lambda;
    for (const Theta& theta : enumerate_direct(table))
        fs.factors.push_back({theta, lower_theta(lambda, theta).result});
    std::sort(fs.factors.begin(), fs.factors.end(), [](const Factor& a, const Factor& b) {
        return atypical_values(a.mu) < atypical_values(b.mu);
    });
    return fs;
}

std::optional<RaisingWitness> brundan_witness(const Weight& lambda, const Weight& mu) {
    if (lambda.m != mu.m || lambda.n != mu.n)
        throw DimensionMismatch("weights live in different gl(m|n)");
    const int r = atypical_data(mu).r;
    ThetaPrime tp(static_cast<std::size_t>(r), 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        for (int s = 0; s < r; ++s) tp[static_cast<std::size_t>(s)] = (mask >> s) & 1;
        if (raise_theta(mu, tp) == lambda) return RaisingWitness{tp, true};
    }
    return std::nullopt;
}

Entry default_oracle_margin(const Weight& lambda) {
    return static_cast<Entry>(atypical_data(lambda).r) * (lambda.m + lambda.n);
}

static Weight candidate_weight(const Weight& lambda, const EntrySets& es,
                               const std::vector<Entry>& values) {
    std::vector<Entry> even(es.tbar.even().begin(), es.tbar.even().end());
    std::vector<Entry> odd(es.tbar.odd().begin(), es.tbar.odd().end());
    even.insert(even.end(), values.begin(), values.end());
    odd.insert(odd.end(), values.begin(), values.end());
    std::sort(even.begin(), even.end(), std::greater<>());
    std::sort(odd.begin(), odd.end());
    std::vector<Entry> e = std::move(even);
    e.insert(e.end(), odd.begin(), odd.end());
    return Weight(lambda.m, lambda.n, std::move(e));
}

std::vector<Weight> primitive_set_oracle(const Weight& lambda, Entry search_margin) {
    const EntrySets es = entry_sets(lambda);
    const int r = atypical_data(lambda).r;
    if (r == 0) return {lambda};
    const Entry lo = es.S.front() - search_margin;
    const Entry hi = es.S.back();
    std::vector<Entry> pool; // admissible atypical values: outside Tbar
    for (Entry v = lo; v <= hi; ++v)
        if (!std::binary_search(es.Tbar.begin(), es.Tbar.end(), v)) pool.push_back(v);

    std::vector<Weight> out;
    std::vector<Entry> values(static_cast<std::size_t>(r));
    auto rec = [&](auto&& self, int depth, std::size_t from) -> void {
        if (depth == r) {
            const Weight mu = candidate_weight(lambda, es, values);
            if (brundan_witness(lambda, mu)) out.push_back(mu);
            return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            values[static_cast<std::size_t>(depth)] = pool[i];
            self(self, depth + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

ThetaPrime theta_prime_for(const Weight& lambda, const Theta& theta) {
    const NqcTable table = NqcTable::build(lambda);
    const int r = table.degree();
    if (!theta_valid(table, theta).empty())
        throw ThetaNotInThetaLambda("theta is not admissible for this weight");
    const auto th = [&theta](int i) { return theta[static_cast<std::size_t>(i - 1)]; };
    const auto a = [&th](int s) { return s + 1 - th(s); }; // meaningful when th(s) != 0

    // Internal consistency: the count of earlier nonzero entries sharing the
    // same start equals s - a_s - ell_{a_s,s}; prefix counts never exceed it
    // and sit strictly below it at every contributing index.
    for (int s = 1; s <= r; ++s) {
        if (th(s) == 0) continue;
        int ns = 0;
        for (int pp = a(s); pp <= s - 1; ++pp)
            if (th(pp) != 0 && a(pp) == a(s)) ++ns;
        if (static_cast<Entry>(ns) != s - a(s) - table.ell(a(s), s))
            throw Error("start-count identity failed at index " + std::to_string(s));
        for (int p = a(s); p < s; ++p) {
            if (th(p) != 0 && !(a(s) <= a(p) && a(p) <= p))
                throw Error("start ordering failed at index " + std::to_string(s));
            int nsp = 0;
            for (int pp = a(s); pp <= p - 1; ++pp)
                if (th(pp) != 0 && a(pp) == a(s)) ++nsp;
            if (nsp > ns || (th(p) != 0 && a(p) == a(s) && nsp >= ns))
                throw Error("prefix count bound failed at index " + std::to_string(s));
        }
    }

    // An atypical value of mu must be raised exactly when it is not one of
    // lambda's untouched atypical values: a pair lowered at some stage can
    // never land on a value that an unlowered pair still occupies, and
    // untouched pairs keep their values verbatim.
    const std::vector<Entry>& lv = table.atypical().values;
    std::set<Entry> untouched;
    for (int s = 1; s <= r; ++s)
        if (th(s) == 0) untouched.insert(lv[static_cast<std::size_t>(s - 1)]);

    const Weight mu = lower_theta(lambda, theta).result;
    const std::vector<Entry> mv = atypical_data(mu).values;
    ThetaPrime tp(static_cast<std::size_t>(r), 0);
    for (int s = 1; s <= r; ++s)
        tp[static_cast<std::size_t>(s - 1)] = untouched.count(mv[static_cast<std::size_t>(s - 1)]) ? 0 : 1;

    int nonzero_theta = 0, nonzero_tp = 0;
    for (int s = 1; s <= r; ++s) {
        nonzero_theta += th(s) != 0;
        nonzero_tp += tp[static_cast<std::size_t>(s - 1)] != 0;
    }
    if (nonzero_tp != nonzero_theta) throw Error("support counting identity failed");
    return tp;
}

} // namespace kac
