#pragma once

#include <vector>

#include "kac/weights.hpp"

namespace kac {

enum class Relation { N, Q, C };

char relation_symbol(Relation rel); // 'n', 'q', 'c'

/// The nqc data of a dominant weight, computed once and consumed by every
/// downstream module: interval counts ell_{s,t}, relation symbols c_{s,t}
/// (1 <= s <= t <= r), and the chain bounds p_s / plow_s.
class NqcTable {
  public:
    static NqcTable build(const Weight& w); // requires is_dominant(w)

    const Weight& lambda() const { return lambda_; }
    const AtypicalData& atypical() const { return aty_; }
    const std::vector<Entry>& entry_set() const { return sset_; } // sorted, unique
    int degree() const { return aty_.r; }

    Entry ell(int s, int t) const;
    Relation rel(int s, int t) const;
    int p(int s) const;
    int plow(int s) const;

  private:
    Weight lambda_;
    AtypicalData aty_;
    std::vector<Entry> sset_;
    std::vector<std::vector<Entry>> ell_;     // ell_[s-1][t-s]
    std::vector<std::vector<Relation>> rel_;  // rel_[s-1][t-s]
    std::vector<int> p_, plow_;

    void check(int s, int t) const;
};

// Convenience wrappers that build the table internally.
Entry ell(const Weight& w, int s, int t);
Relation relation(const Weight& w, int s, int t);
int p_upper(const Weight& w, int s);
int p_lower(const Weight& w, int s);

/// Raising step k_s of (3.6): lambda_{m_s}+k_s is the (p_s+1-s)-th smallest
/// integer above lambda_{m_s} not in S(lambda).  Dominant weights only.
Entry k_step(const Weight& w, int s);
Entry k_step(const NqcTable& table, int s);

/// All k_s at once via the growing-set procedure; works for any regular
/// weight, processing atypical positions in decreasing entry order.
std::vector<Entry> k_step_sequential(const Weight& w);

/// nu-th lowering gap (3.7); nu = 0 gives 0.  Regular weights.
Entry k_low(const Weight& w, int s, int nu);

/// nu-th raising gap (5.1).
Entry k_hat(const Weight& w, int s, int nu);

/// The (3.25) restriction lambda^{(s,t)}: keeps entries from the t-th down
/// to the s-th atypical block; a dominant (t-s+1)-fold atypical weight of a
/// smaller gl whose nqc table is the (s..t) sub-table of lambda's.
Weight restrict(const Weight& w, int s, int t);

// Missing-integer helpers on a sorted unique value set.
Entry nth_missing_above(const std::vector<Entry>& sset, Entry v, int nu);
Entry nth_missing_below(const std::vector<Entry>& sset, Entry v, int nu);

} // namespace kac
