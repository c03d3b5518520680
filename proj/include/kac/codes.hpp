#pragma once

#include <string>

#include "kac/nqc.hpp"
#include "kac/operators.hpp"

namespace kac {

/// An r-column array; each column is either the zero column {0} or a
/// strictly increasing list of labels from {1..r}.
struct Code {
    std::vector<std::vector<int>> columns;

    bool operator==(const Code&) const = default;
    int length() const { return static_cast<int>(columns.size()); }
    bool is_zero_column(int p) const { return columns[static_cast<std::size_t>(p - 1)] == std::vector<int>{0}; }
    const std::vector<int>& column(int p) const { return columns[static_cast<std::size_t>(p - 1)]; }
    int top(int p) const { return column(p).front(); }
};

bool operator<(const Code& a, const Code& b);

enum class Rule { I, II, III, IV, V, VI, VIp, VII, VIIp };

std::string rule_name(Rule rule); // "i", "ii", ..., "vi'", "vii", "vii'"

struct RuleViolation {
    Rule rule;
    int column = 0; // primary column involved (1-based)
    int label = 0;  // label involved, 0 if none
    std::string message;
};

/// Checks the column-shape constraints (throws MalformedCode) and then every
/// placement rule, reporting all violations.  Rule vi' is implied by the
/// others and is checked defensively; it should never be the only failure.
std::vector<RuleViolation> validate_code(const Weight& w, const Code& code);
std::vector<RuleViolation> validate_code(const NqcTable& table, const Code& code);

/// All valid codes, by backtracking over column contents; sorted.
std::vector<Code> enumerate_codes(const Weight& w);
std::vector<Code> enumerate_codes(const NqcTable& table);

/// theta_s = s+1-a_s where a_s is the first column containing label s;
/// zero where s never appears.  Throws InvalidCode on an invalid code.
Theta code_to_theta(const Weight& w, const Code& code);

/// Inverse construction: label s tops column s, fills its start column
/// s+1-theta_s, and the columns between per the critical/quasi-critical
/// placement rule.  Throws ThetaNotInThetaLambda for inadmissible theta.
Code theta_to_code(const Weight& w, const Theta& theta);

// Text format: columns separated by ';', labels by ',' -- e.g. "1,3;3;3;0".
Code parse_code(const std::string& text);
std::string format_code(const Code& code);

} // namespace kac
