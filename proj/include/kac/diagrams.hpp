#pragma once

#include <array>
#include <map>
#include <string>

#include "kac/operators.hpp"

namespace kac {

/// Joined pair of Young diagrams in partition notation: covariant rows for
/// the even part, contravariant rows for the negated, reversed odd part.
/// `shift` is the translation applied to make both sides non-negative.
struct CompositeDiagram {
    std::vector<Entry> covariant;     // weakly decreasing, >= 0
    std::vector<Entry> contravariant; // weakly decreasing, >= 0
    Entry shift = 0;

    bool operator==(const CompositeDiagram&) const = default;
};

constexpr int kCovariant = 0;
constexpr int kContravariant = 1;

/// Which cells each lowering stage removes.  Keys are (part, row, column),
/// 1-based, part kCovariant or kContravariant; values are the stage label s.
struct StripLabeling {
    Theta theta;
    Weight lambda;
    Weight remaining_weight; // the theta-lowered dominant weight
    CompositeDiagram initial;
    CompositeDiagram remaining;
    std::map<std::array<int, 3>, int> cells;
    std::vector<std::array<Entry, 2>> counts; // counts[s-1] = cells removed per part
};

/// Diagram of a dominant weight, shifted by the minimal amount that leaves
/// `margin` slack on both sides.
CompositeDiagram build_diagram(const Weight& w, Entry margin = 0);

/// Runs the composite lowering stage by stage and labels the cell-set
/// difference of consecutive stage diagrams.  Every removed region must be a
/// boundary strip (connected, no 2x2 block) of the expected size, else
/// StripInvariantViolation.
StripLabeling strip_labeling(const Weight& lambda, const Theta& theta);

/// Monospace picture: contravariant part on top with its rows turned into
/// upward columns, covariant part below, the two meeting at the corner.
/// '#' for plain cells, stage digits for labeled ones.
std::string render_ascii(const CompositeDiagram& diagram, const StripLabeling* labeling = nullptr);

} // namespace kac
