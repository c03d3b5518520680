#include "kac/diagrams.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "kac/theta.hpp"

namespace kac {

static std::vector<Entry> covariant_rows(const PartitionWeight& pw, Entry c) {
    std::vector<Entry> rows(pw.coords.begin(), pw.coords.begin() + pw.m);
    for (Entry& x : rows) x += c;
    return rows;
}

static std::vector<Entry> contravariant_rows(const PartitionWeight& pw, Entry c) {
    std::vector<Entry> rows;
    rows.reserve(static_cast<std::size_t>(pw.n));
    for (int eta = pw.n; eta >= 1; --eta)
        rows.push_back(-pw.coords[static_cast<std::size_t>(pw.m + eta - 1)] + c);
    return rows;
}

// Minimal c with `margin` slack: last covariant row and first contravariant
// row both end up >= margin.
static Entry needed_shift(const PartitionWeight& pw, Entry margin) {
    Entry c = 0;
    if (pw.m > 0) c = std::max(c, margin - pw.coords[static_cast<std::size_t>(pw.m - 1)]);
    if (pw.n > 0) c = std::max(c, margin + pw.coords[static_cast<std::size_t>(pw.m)]);
    return c;
}

CompositeDiagram build_diagram(const Weight& w, Entry margin) {
    if (!is_dominant(w)) throw Error("diagram requires a dominant weight: " + format_shifted(w));
    const PartitionWeight pw = to_partition(w);
    const Entry c = needed_shift(pw, margin);
    return {covariant_rows(pw, c), contravariant_rows(pw, c), c};
}

using CellSet = std::set<std::pair<int, int>>; // (row, column), 1-based

static CellSet removed_cells(const std::vector<Entry>& before, const std::vector<Entry>& after,
                             int stage) {
    if (before.size() != after.size())
        throw StripInvariantViolation("stage changed the number of rows");
    CellSet cells;
    for (std::size_t i = 0; i < before.size(); ++i) {
        if (after[i] > before[i])
            throw StripInvariantViolation("row grew during stage " + std::to_string(stage));
        for (Entry j = after[i] + 1; j <= before[i]; ++j)
            cells.emplace(static_cast<int>(i) + 1, static_cast<int>(j));
    }
    return cells;
}

static void check_rim(const CellSet& cells, int stage, const char* part) {
    if (cells.empty()) return;
    // Connected through edge-adjacency.
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> queue = {*cells.begin()};
    seen.insert(queue.front());
    while (!queue.empty()) {
        const auto [i, j] = queue.back();
        queue.pop_back();
        for (const auto& [di, dj] :
             {std::pair{1, 0}, std::pair{-1, 0}, std::pair{0, 1}, std::pair{0, -1}}) {
            const std::pair<int, int> next{i + di, j + dj};
            if (cells.count(next) && seen.insert(next).second) queue.push_back(next);
        }
    }
    if (seen.size() != cells.size())
        throw StripInvariantViolation(std::string(part) + " removal disconnected at stage " +
                                      std::to_string(stage));
    // No full 2x2 block.
    for (const auto& [i, j] : cells)
        if (cells.count({i, j + 1}) && cells.count({i + 1, j}) && cells.count({i + 1, j + 1}))
            throw StripInvariantViolation(std::string(part) + " removal contains a 2x2 block at stage " +
                                          std::to_string(stage));
}

StripLabeling strip_labeling(const Weight& lambda, const Theta& theta) {
    const NqcTable table = NqcTable::build(lambda);
    if (!theta_valid(table, theta).empty())
        throw ThetaNotInThetaLambda("theta is not admissible for this weight");
    const LoweringTrace trace = lower_theta(lambda, theta);
    const int r = table.degree();

    std::vector<PartitionWeight> stages;
    stages.reserve(static_cast<std::size_t>(r) + 1);
    Entry c = 0;
    for (const Weight& raw : trace.intermediates) {
        stages.push_back(to_partition(dominant_conjugate(raw)));
        c = std::max(c, needed_shift(stages.back(), 0));
    }

    StripLabeling out;
    out.theta = theta;
    out.lambda = lambda;
    out.remaining_weight = trace.result;
    out.initial = {covariant_rows(stages.front(), c), contravariant_rows(stages.front(), c), c};
    out.remaining = {covariant_rows(stages.back(), c), contravariant_rows(stages.back(), c), c};
    out.counts.assign(static_cast<std::size_t>(r), {0, 0});

    for (int s = 1; s <= r; ++s) {
        const auto& prev = stages[static_cast<std::size_t>(s - 1)];
        const auto& next = stages[static_cast<std::size_t>(s)];
        const CellSet cov = removed_cells(covariant_rows(prev, c), covariant_rows(next, c), s);
        const CellSet con =
            removed_cells(contravariant_rows(prev, c), contravariant_rows(next, c), s);
        check_rim(cov, s, "covariant");
        check_rim(con, s, "contravariant");
        const Entry k = trace.kk[static_cast<std::size_t>(s - 1)];
        if (static_cast<Entry>(cov.size()) != k || static_cast<Entry>(con.size()) != k)
            throw StripInvariantViolation("stage " + std::to_string(s) + " removed " +
                                          std::to_string(cov.size()) + "+" +
                                          std::to_string(con.size()) + " cells, expected 2x" +
                                          std::to_string(k));
        out.counts[static_cast<std::size_t>(s - 1)] = {static_cast<Entry>(cov.size()),
                                                       static_cast<Entry>(con.size())};
        for (const auto& [i, j] : cov) out.cells[{kCovariant, i, j}] = s;
        for (const auto& [i, j] : con) out.cells[{kContravariant, i, j}] = s;
    }
    return out;
}

static char cell_char(const StripLabeling* labeling, int part, int row, int col) {
    if (labeling) {
        const auto it = labeling->cells.find({part, row, col});
        if (it != labeling->cells.end())
            return it->second < 10 ? static_cast<char>('0' + it->second)
                                   : static_cast<char>('a' + it->second - 10);
    }
    return '#';
}

std::string render_ascii(const CompositeDiagram& diagram, const StripLabeling* labeling) {
    std::ostringstream os;
    const int nrows = static_cast<int>(diagram.contravariant.size());
    const Entry width = nrows > 0 ? diagram.contravariant.front() : 0;
    // Contravariant part, turned so each of its rows becomes an upward
    // column: display position (line t, column p) holds cell
    // (row nrows+1-p, column width+1-t).
    for (Entry t = 1; t <= width; ++t) {
        std::string line;
        for (int p = 1; p <= nrows; ++p) {
            const int j = nrows + 1 - p;
            const Entry k = width + 1 - t;
            if (k <= diagram.contravariant[static_cast<std::size_t>(j - 1)])
                line += cell_char(labeling, kContravariant, j, static_cast<int>(k));
            else
                line += ' ';
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    // Covariant part below, indented past the contravariant block.
    const std::string indent(static_cast<std::size_t>(nrows), ' ');
    for (std::size_t i = 0; i < diagram.covariant.size(); ++i) {
        std::string line = indent;
        for (Entry j = 1; j <= diagram.covariant[i]; ++j)
            line += cell_char(labeling, kCovariant, static_cast<int>(i) + 1, static_cast<int>(j));
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

} // namespace kac
