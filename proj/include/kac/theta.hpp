#pragma once

#include <cstdint>
#include <string>

#include "kac/nqc.hpp"
#include "kac/operators.hpp"

namespace kac {

/// Which admissibility condition a tuple breaks.  C1a/C1b are the two top
/// relation constraints at index s; C2 the growth bound at an inner index p;
/// C3 the support clause; C4 the quasi-critical exception.
enum class Cond { C1a, C1b, C2, C3, C4 };

struct Violation {
    Cond condition;
    int s = 0;
    int p = 0; // 0 when the condition involves no inner index
    std::string detail;
};

/// All conditions broken by theta (empty result = admissible).
/// Requires theta in the ambient set (theta_s <= s), else ThetaOutOfRange.
std::vector<Violation> theta_valid(const NqcTable& table, const Theta& theta);
std::vector<Violation> theta_valid(const Weight& w, const Theta& theta);

/// Conditions broken at index s only (they depend just on theta_1..theta_s).
std::vector<Violation> violations_at(const NqcTable& table, const Theta& theta, int s);

/// Admissible set via brute-force filter over the (r+1)! ambient tuples,
/// in lexicographic order.
std::vector<Theta> enumerate_direct(const NqcTable& table);
std::vector<Theta> enumerate_direct(const Weight& w);

/// Same set, built index by index: tuples on [1,u] extend tuples on [1,u-1]
/// by an entry passing the index-u conditions.  The per-extension branches
/// are disjoint by construction.
std::vector<Theta> enumerate_recursive(const NqcTable& table);
std::vector<Theta> enumerate_recursive(const Weight& w);

/// Subtuple on an index set (1-based, increasing), order preserved.
Theta theta_restrict(const Theta& theta, const std::vector<int>& indices);

std::uint64_t count_theta(const Weight& w);

} // namespace kac
