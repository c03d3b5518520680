#include "kac/weights.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace kac {

Weight::Weight(int m_, int n_, std::vector<Entry> e) : m(m_), n(n_), entries(std::move(e)) {
    if (m < 0 || n < 0 || entries.size() != static_cast<std::size_t>(m + n))
        throw DimensionMismatch("weight entry count does not match m+n");
}

Entry Weight::at(int a) const {
    if (a < 1 || a > m + n) throw IndexOutOfRange("weight index " + std::to_string(a));
    return entries[static_cast<std::size_t>(a - 1)];
}

Entry& Weight::at(int a) {
    if (a < 1 || a > m + n) throw IndexOutOfRange("weight index " + std::to_string(a));
    return entries[static_cast<std::size_t>(a - 1)];
}

bool operator<(const Weight& a, const Weight& b) {
    if (a.m != b.m) return a.m < b.m;
    if (a.n != b.n) return a.n < b.n;
    return a.entries < b.entries;
}

Weight from_partition(const PartitionWeight& pw) {
    std::vector<Entry> e(pw.coords.size());
    for (int i = 1; i <= pw.m; ++i) e[i - 1] = pw.coords[i - 1] + (pw.m + 1 - i);
    for (int eta = 1; eta <= pw.n; ++eta) e[pw.m + eta - 1] = -pw.coords[pw.m + eta - 1] + eta;
    return Weight(pw.m, pw.n, std::move(e));
}

PartitionWeight to_partition(const Weight& w) {
    PartitionWeight pw;
    pw.m = w.m;
    pw.n = w.n;
    pw.coords.resize(w.entries.size());
    for (int i = 1; i <= w.m; ++i) pw.coords[i - 1] = w.entries[i - 1] - (w.m + 1 - i);
    for (int eta = 1; eta <= w.n; ++eta) pw.coords[w.m + eta - 1] = eta - w.entries[w.m + eta - 1];
    return pw;
}

bool is_dominant(const Weight& w) {
    for (int i = 1; i < w.m; ++i)
        if (w.entries[i - 1] <= w.entries[i]) return false;
    for (int eta = 1; eta < w.n; ++eta)
        if (w.entries[w.m + eta - 1] >= w.entries[w.m + eta]) return false;
    return true;
}

static bool distinct(std::span<const Entry> part) {
    std::vector<Entry> v(part.begin(), part.end());
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool is_regular(const Weight& w) { return distinct(w.even()) && distinct(w.odd()); }

Weight dominant_conjugate(const Weight& w) {
    if (!is_regular(w)) throw NonRegular("weight has a repeated entry within a part: " + format_shifted(w));
    Weight out = w;
    std::sort(out.entries.begin(), out.entries.begin() + out.m, std::greater<>());
    std::sort(out.entries.begin() + out.m, out.entries.end());
    return out;
}

AtypicalData atypical_data(const Weight& w) {
    std::vector<std::tuple<Entry, int, int>> pairs; // (value, even pos, odd pos)
    for (int i = 1; i <= w.m; ++i)
        for (int eta = 1; eta <= w.n; ++eta)
            if (w.entries[i - 1] == w.entries[w.m + eta - 1])
                pairs.emplace_back(w.entries[i - 1], i, w.m + eta);
    std::sort(pairs.begin(), pairs.end());
    AtypicalData data;
    data.r = static_cast<int>(pairs.size());
    for (auto& [v, i, a] : pairs) {
        data.values.push_back(v);
        data.mpos.push_back(i);
        data.npos.push_back(a);
    }
    return data;
}

std::vector<std::vector<Entry>> atypicality_matrix(const Weight& w) {
    std::vector<std::vector<Entry>> a(static_cast<std::size_t>(w.m),
                                      std::vector<Entry>(static_cast<std::size_t>(w.n)));
    for (int i = 0; i < w.m; ++i)
        for (int eta = 0; eta < w.n; ++eta) a[i][eta] = w.entries[i] - w.entries[w.m + eta];
    return a;
}

EntrySets entry_sets(const Weight& w) {
    if (!is_regular(w)) throw NonRegular("entry_sets requires a regular weight");
    const AtypicalData aty = atypical_data(w);
    EntrySets es;
    es.S.assign(w.entries.begin(), w.entries.end());
    std::sort(es.S.begin(), es.S.end());
    es.S.erase(std::unique(es.S.begin(), es.S.end()), es.S.end());
    es.T = aty.values;
    std::sort(es.T.begin(), es.T.end());
    std::set_difference(es.S.begin(), es.S.end(), es.T.begin(), es.T.end(),
                        std::back_inserter(es.Tbar));

    std::vector<bool> atypical_pos(static_cast<std::size_t>(w.m + w.n) + 1, false);
    for (int p : aty.mpos) atypical_pos[static_cast<std::size_t>(p)] = true;
    for (int p : aty.npos) atypical_pos[static_cast<std::size_t>(p)] = true;

    std::vector<Entry> te, to, be, bo;
    for (int a = 1; a <= w.m + w.n; ++a) {
        const Entry v = w.entries[static_cast<std::size_t>(a - 1)];
        if (atypical_pos[static_cast<std::size_t>(a)])
            (a <= w.m ? te : to).push_back(v);
        else
            (a <= w.m ? be : bo).push_back(v);
    }
    auto cat = [](std::vector<Entry> e, const std::vector<Entry>& o) {
        e.insert(e.end(), o.begin(), o.end());
        return e;
    };
    es.t = Weight(aty.r, aty.r, cat(std::move(te), to));
    es.tbar = Weight(w.m - aty.r, w.n - aty.r, cat(std::move(be), bo));
    return es;
}

Weight shift(const Weight& w, Entry c) {
    Weight out = w;
    for (Entry& e : out.entries) e += c;
    return out;
}

static std::vector<Entry> parse_entry_list(const std::string& text) {
    std::vector<Entry> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        while (first < last && *first == ' ') ++first;
        Entry value = 0;
        auto [ptr, ec] = std::from_chars(first, last, value);
        while (ptr < last && *ptr == ' ') ++ptr;
        if (ec != std::errc{} || ptr != last)
            throw ParseError("bad integer in weight: '" + text.substr(pos, comma - pos) + "'");
        out.push_back(value);
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return out;
}

static std::pair<std::vector<Entry>, std::vector<Entry>> split_parts(const std::string& text,
                                                                     char sep) {
    const std::size_t bar = text.find(sep);
    if (bar == std::string::npos)
        throw ParseError(std::string("missing '") + sep + "' separator in weight: " + text);
    return {parse_entry_list(text.substr(0, bar)), parse_entry_list(text.substr(bar + 1))};
}

Weight parse_shifted(const std::string& text) {
    auto [even, odd] = split_parts(text, '|');
    std::vector<Entry> e = even;
    e.insert(e.end(), odd.begin(), odd.end());
    return Weight(static_cast<int>(even.size()), static_cast<int>(odd.size()), std::move(e));
}

PartitionWeight parse_partition(const std::string& text) {
    auto [even, odd] = split_parts(text, '/');
    PartitionWeight pw;
    pw.m = static_cast<int>(even.size());
    pw.n = static_cast<int>(odd.size());
    pw.coords = even;
    pw.coords.insert(pw.coords.end(), odd.begin(), odd.end());
    return pw;
}

static std::string join(std::span<const Entry> part) {
    std::ostringstream os;
    for (std::size_t i = 0; i < part.size(); ++i) {
        if (i) os << ',';
        os << part[i];
    }
    return os.str();
}

std::string format_shifted(const Weight& w) { return join(w.even()) + "|" + join(w.odd()); }

std::string format_partition(const PartitionWeight& pw) {
    std::span<const Entry> all(pw.coords);
    return join(all.subspan(0, static_cast<std::size_t>(pw.m))) + "/" +
           join(all.subspan(static_cast<std::size_t>(pw.m)));
}

} // namespace kac
