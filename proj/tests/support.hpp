#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "kac/weights.hpp"

namespace kactest {

inline kac::Weight running_lambda() {
    return kac::parse_shifted("15,11,10,7,6,4,3|3,5,7,8,10,15");
}

/// gl(r|r) weight whose atypical values are exactly `values` (strictly
/// increasing): even part reversed, odd part as given.
inline kac::Weight gl_rr(const std::vector<kac::Entry>& values) {
    std::vector<kac::Entry> e(values.rbegin(), values.rend());
    e.insert(e.end(), values.begin(), values.end());
    return kac::Weight(static_cast<int>(values.size()), static_cast<int>(values.size()),
                       std::move(e));
}

inline kac::Weight totally_c(int r) { // consecutive values: every relation critical
    std::vector<kac::Entry> v(static_cast<std::size_t>(r));
    std::iota(v.begin(), v.end(), 1);
    return gl_rr(v);
}

inline kac::Weight totally_q(int r) { // gap-one values 1,3,5,...
    std::vector<kac::Entry> v;
    for (int i = 0; i < r; ++i) v.push_back(1 + 2 * i);
    return gl_rr(v);
}

inline kac::Weight totally_n(int r) { // gap-two values 1,4,7,...
    std::vector<kac::Entry> v;
    for (int i = 0; i < r; ++i) v.push_back(1 + 3 * i);
    return gl_rr(v);
}

/// Random dominant weights with controlled degree of atypicality: exactly
/// `r` shared values between the parts, everything else pairwise distinct.
class RandomWeights {
  public:
    RandomWeights(unsigned seed, int max_mn, kac::Entry lo, kac::Entry hi, int max_r)
        : rng_(seed), max_mn_(max_mn), lo_(lo), hi_(hi), max_r_(max_r) {}

    kac::Weight next() {
        std::uniform_int_distribution<int> mn(1, max_mn_);
        const int m = mn(rng_);
        const int n = mn(rng_);
        std::uniform_int_distribution<int> rd(0, std::min({m, n, max_r_}));
        const int r = rd(rng_);

        std::vector<kac::Entry> pool(static_cast<std::size_t>(hi_ - lo_ + 1));
        std::iota(pool.begin(), pool.end(), lo_);
        std::shuffle(pool.begin(), pool.end(), rng_);

        std::vector<kac::Entry> even(pool.begin(), pool.begin() + m);
        std::vector<kac::Entry> odd(pool.begin() + m, pool.begin() + m + (n - r));
        odd.insert(odd.end(), even.begin(), even.begin() + r); // shared values
        std::sort(even.begin(), even.end(), std::greater<>());
        std::sort(odd.begin(), odd.end());
        even.insert(even.end(), odd.begin(), odd.end());
        return kac::Weight(m, n, std::move(even));
    }

  private:
    std::mt19937 rng_;
    int max_mn_;
    kac::Entry lo_, hi_;
    int max_r_;
};

} // namespace kactest
