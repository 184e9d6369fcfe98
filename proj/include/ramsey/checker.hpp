
// Arrival checking: decides whether a complete coloring contains one of the
// targets in the subgraph that avoids the target's forbidden color, and
// produces a re-checkable embedding when it does.

#pragma once

#include "ramsey/core.hpp"

namespace ramsey {

struct StarEmbedding {
    int center = -1;
    std::vector<int> leaves;
};

struct MatchingReport {
    int size = 0;
    std::vector<std::pair<int, int>> edges;  // a maximum matching, lex-sorted
};

struct Arrival {
    int target_index = -1;  // 0-based position in TargetSpec::entries
    std::optional<StarEmbedding> star;
    std::vector<std::pair<int, int>> matching_edges;
};

struct Verdict {
    std::optional<Arrival> arrival;
    bool avoids() const { return !arrival.has_value(); }
};

// First (lowest center, then lex leaves) star with `arms` edges whose colors
// all differ from `missing`, or nullopt.  The degree test is a count per
// vertex: degree in colors != missing equals (n-1) minus the missing-color
// degree.
std::optional<StarEmbedding> star_missing_color(const Coloring& c,
                                                Color missing, int arms);

// Maximum matching of the spanning subgraph of c formed by edges whose color
// lies in `allowed` (general graphs; blossom contraction, O(n^3)).
MatchingReport max_matching(const Coloring& c, const std::vector<Color>& allowed);

// Maximum matching of an explicit edge list on vertices 0..n-1.  Exposed for
// the search code, which maintains its own partial edge sets.
MatchingReport max_matching_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Scans targets in order and reports the first that is present.  The
// coloring must be complete and the targets must fit its palette.
Verdict coloring_arrives(const Coloring& c, const TargetSpec& targets);

}  // namespace ramsey
