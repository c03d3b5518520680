#include "kac/nqc.hpp"

#include <algorithm>
#include <set>

namespace kac {

char relation_symbol(Relation rel) {
    switch (rel) {
        case Relation::N: return 'n';
        case Relation::Q: return 'q';
        case Relation::C: return 'c';
    }
    return '?';
}

static std::vector<Entry> sorted_entry_set(const Weight& w) {
    std::vector<Entry> s(w.entries.begin(), w.entries.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

static Entry count_in_set(const std::vector<Entry>& sset, Entry lo, Entry hi) {
    if (lo > hi) return 0;
    auto a = std::lower_bound(sset.begin(), sset.end(), lo);
    auto b = std::upper_bound(sset.begin(), sset.end(), hi);
    return static_cast<Entry>(b - a);
}

Entry nth_missing_above(const std::vector<Entry>& sset, Entry v, int nu) {
    Entry cur = v + 1;
    Entry need = nu;
    for (auto it = std::upper_bound(sset.begin(), sset.end(), v); it != sset.end(); ++it) {
        const Entry gap = *it - cur;
        if (gap >= need) return cur + need - 1;
        need -= gap;
        cur = *it + 1;
    }
    return cur + need - 1;
}

Entry nth_missing_below(const std::vector<Entry>& sset, Entry v, int nu) {
    Entry cur = v - 1;
    Entry need = nu;
    auto it = std::lower_bound(sset.begin(), sset.end(), v);
    while (it != sset.begin()) {
        --it;
        const Entry gap = cur - *it;
        if (gap >= need) return cur - need + 1;
        need -= gap;
        cur = *it - 1;
    }
    return cur - need + 1;
}

NqcTable NqcTable::build(const Weight& w) {
    if (!is_dominant(w)) throw Error("nqc table requires a dominant weight: " + format_shifted(w));
    NqcTable t;
    t.lambda_ = w;
    t.aty_ = atypical_data(w);
    t.sset_ = sorted_entry_set(w);
    const int r = t.aty_.r;
    t.ell_.resize(static_cast<std::size_t>(r));
    t.rel_.resize(static_cast<std::size_t>(r));
    for (int s = 1; s <= r; ++s) {
        for (int tt = s; tt <= r; ++tt) {
            const Entry lo = t.aty_.values[static_cast<std::size_t>(s - 1)];
            const Entry hi = t.aty_.values[static_cast<std::size_t>(tt - 1)];
            const Entry inside = lo > hi ? 0 : hi - lo + 1;
            const Entry l = inside - count_in_set(t.sset_, lo, hi);
            t.ell_[static_cast<std::size_t>(s - 1)].push_back(l);
            const Entry d = tt - s;
            t.rel_[static_cast<std::size_t>(s - 1)].push_back(
                l > d ? Relation::N : (l == d ? Relation::Q : Relation::C));
        }
    }
    t.p_.resize(static_cast<std::size_t>(r));
    t.plow_.resize(static_cast<std::size_t>(r));
    for (int s = 1; s <= r; ++s) {
        int p = s;
        while (p < r && t.rel(s, p + 1) == Relation::C) ++p;
        t.p_[static_cast<std::size_t>(s - 1)] = p;
        int q = s;
        while (q > 1 && t.rel(q - 1, s) == Relation::C) --q;
        t.plow_[static_cast<std::size_t>(s - 1)] = q;
    }
    return t;
}

void NqcTable::check(int s, int t) const {
    if (s < 1 || t < s || t > degree())
        throw IndexOutOfRange("nqc index (" + std::to_string(s) + "," + std::to_string(t) +
                              ") with r=" + std::to_string(degree()));
}

Entry NqcTable::ell(int s, int t) const {
    check(s, t);
    return ell_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t - s)];
}

Relation NqcTable::rel(int s, int t) const {
    check(s, t);
    return rel_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t - s)];
}

int NqcTable::p(int s) const {
    check(s, s);
    return p_[static_cast<std::size_t>(s - 1)];
}

int NqcTable::plow(int s) const {
    check(s, s);
    return plow_[static_cast<std::size_t>(s - 1)];
}

Entry ell(const Weight& w, int s, int t) { return NqcTable::build(w).ell(s, t); }
Relation relation(const Weight& w, int s, int t) { return NqcTable::build(w).rel(s, t); }
int p_upper(const Weight& w, int s) { return NqcTable::build(w).p(s); }
int p_lower(const Weight& w, int s) { return NqcTable::build(w).plow(s); }

Entry k_step(const NqcTable& table, int s) {
    if (s < 1 || s > table.degree()) throw IndexOutOfRange("k_step index " + std::to_string(s));
    const int nu = table.p(s) + 1 - s;
    const Entry v = table.atypical().values[static_cast<std::size_t>(s - 1)];
    return nth_missing_above(table.entry_set(), v, nu) - v;
}

Entry k_step(const Weight& w, int s) { return k_step(NqcTable::build(w), s); }

std::vector<Entry> k_step_sequential(const Weight& w) {
    if (!is_regular(w)) throw NonRegular("k_step_sequential requires a regular weight");
    const AtypicalData aty = atypical_data(w); // value-ordered, so s = r..1 is
                                               // decreasing entry order
    std::set<Entry> grow(w.entries.begin(), w.entries.end());
    std::vector<Entry> k(static_cast<std::size_t>(aty.r));
    for (int s = aty.r; s >= 1; --s) {
        const Entry v = aty.values[static_cast<std::size_t>(s - 1)];
        Entry cur = v + 1;
        for (auto it = grow.upper_bound(v); it != grow.end() && *it == cur; ++it) ++cur;
        k[static_cast<std::size_t>(s - 1)] = cur - v;
        grow.insert(cur);
    }
    return k;
}

Entry k_low(const Weight& w, int s, int nu) {
    if (nu == 0) return 0;
    if (nu < 0) throw IndexOutOfRange("k_low with negative power");
    if (!is_regular(w)) throw NonRegular("k_low requires a regular weight");
    const AtypicalData aty = atypical_data(w);
    if (s < 1 || s > aty.r) throw IndexOutOfRange("k_low index " + std::to_string(s));
    const Entry v = aty.values[static_cast<std::size_t>(s - 1)];
    return v - nth_missing_below(sorted_entry_set(w), v, nu);
}

Entry k_hat(const Weight& w, int s, int nu) {
    if (nu < 1) throw IndexOutOfRange("k_hat requires nu >= 1");
    if (!is_regular(w)) throw NonRegular("k_hat requires a regular weight");
    const AtypicalData aty = atypical_data(w);
    if (s < 1 || s > aty.r) throw IndexOutOfRange("k_hat index " + std::to_string(s));
    const Entry v = aty.values[static_cast<std::size_t>(s - 1)];
    return nth_missing_above(sorted_entry_set(w), v, nu) - v;
}

Weight restrict(const Weight& w, int s, int t) {
    const NqcTable table = NqcTable::build(w);
    const AtypicalData& aty = table.atypical();
    if (s < 1 || t < s || t > aty.r)
        throw IndexOutOfRange("restrict range (" + std::to_string(s) + "," + std::to_string(t) + ")");
    const int m_prev = s == 1 ? w.m + 1 : aty.mpos[static_cast<std::size_t>(s - 2)];
    const int n_prev = s == 1 ? w.m : aty.npos[static_cast<std::size_t>(s - 2)];
    const int even_lo = aty.mpos[static_cast<std::size_t>(t - 1)];
    const int even_hi = m_prev - 1;
    const int odd_lo = n_prev + 1;
    const int odd_hi = aty.npos[static_cast<std::size_t>(t - 1)];
    std::vector<Entry> e;
    for (int i = even_lo; i <= even_hi; ++i) e.push_back(w.at(i));
    for (int a = odd_lo; a <= odd_hi; ++a) e.push_back(w.at(a));
    return Weight(even_hi - even_lo + 1, odd_hi - odd_lo + 1, std::move(e));
}

} // namespace kac
