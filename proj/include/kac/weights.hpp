#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kac/errors.hpp"

namespace kac {

using Entry = std::int64_t;

/// An integral gl(m|n) weight in shifted notation: m even entries followed
/// by n odd entries.  Entries are arbitrary integers; dominance and
/// regularity are queried, never enforced.
struct Weight {
    int m = 0;
    int n = 0;
    std::vector<Entry> entries; // size m+n

    Weight() = default;
    Weight(int m_, int n_, std::vector<Entry> e);

    // 1-based absolute index, a in [1, m+n]
    Entry at(int a) const;
    Entry& at(int a);

    std::span<const Entry> even() const { return {entries.data(), static_cast<std::size_t>(m)}; }
    std::span<const Entry> odd() const { return {entries.data() + m, static_cast<std::size_t>(n)}; }

    bool operator==(const Weight&) const = default;
};

bool operator<(const Weight& a, const Weight& b);

/// The same weight in partition-style notation (2.6 style coordinates).
struct PartitionWeight {
    int m = 0;
    int n = 0;
    std::vector<Entry> coords; // size m+n

    bool operator==(const PartitionWeight&) const = default;
};

/// Atypical roots gamma_1 < ... < gamma_r of a weight, ordered by
/// increasing entry value.  Positions are 1-based absolute indices:
/// mpos within [1,m] (strictly decreasing for dominant weights),
/// npos within [m+1,m+n] (strictly increasing).
struct AtypicalData {
    int r = 0;
    std::vector<int> mpos;
    std::vector<int> npos;
    std::vector<Entry> values;

    bool operator==(const AtypicalData&) const = default;
};

/// Entry-value sets of a regular weight: S (all entries), T (atypical
/// values), Tbar = S \ T, and the tuples t, tbar obtained by deleting
/// non-atypical resp. atypical positions.
struct EntrySets {
    std::vector<Entry> S;    // sorted, unique
    std::vector<Entry> T;    // sorted
    std::vector<Entry> Tbar; // sorted
    Weight t;                // gl(r|r)
    Weight tbar;             // gl(m-r|n-r)
};

Weight from_partition(const PartitionWeight& pw);
PartitionWeight to_partition(const Weight& w);

bool is_dominant(const Weight& w);
bool is_regular(const Weight& w);

/// The unique dominant W-conjugate (even part sorted decreasing, odd part
/// increasing).  Throws NonRegular on a repeated entry within a part.
Weight dominant_conjugate(const Weight& w);

/// All positions pairs (i, eta) with equal entries, ordered by increasing
/// value.  Works for any weight; the (2.12) chain shape is guaranteed only
/// when w is dominant.
AtypicalData atypical_data(const Weight& w);

/// m x n matrix with entry (i,eta) = lambda_i - lambda_{bar eta}.
std::vector<std::vector<Entry>> atypicality_matrix(const Weight& w);

EntrySets entry_sets(const Weight& w);

/// Adds c to every entry.  All nqc data, Theta^lambda and codes are
/// invariant under this translation.
Weight shift(const Weight& w, Entry c);

// Text formats: shifted "15,11,10|3,5,7" and partition "8,5,5/-2,-3,-4".
Weight parse_shifted(const std::string& text);
PartitionWeight parse_partition(const std::string& text);
std::string format_shifted(const Weight& w);
std::string format_partition(const PartitionWeight& pw);

} // namespace kac
