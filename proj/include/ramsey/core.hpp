
// Core domain types shared by every other module: problem instances,
// edge colorings, target specifications, derivation traces and matching
// decompositions.  All types are immutable once fully constructed and may
// be shared across threads without synchronization.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ramsey {

// Colors are 1-based (1..t); vertex labels are 0-based.
using Color = int;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveStar : Error { using Error::Error; };
struct TooFewColors : Error { using Error::Error; };
struct MatchingWithTLessThan3 : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct OddOrder : Error { using Error::Error; };
struct EvenOrder : Error { using Error::Error; };
struct ParityInfeasible : Error { using Error::Error; };
struct ConstructionInfeasible : Error { using Error::Error; };
struct ConstructionInvariantViolated : Error { using Error::Error; };
struct WitnessUnavailable : Error { using Error::Error; };

struct ParseError : Error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

// A normalized problem instance.  For an all-stars instance there are
// exactly `colors` stars; for a stars-plus-one-matching instance there are
// `colors - 1` stars and `matching_size` is set.  Stars are sorted
// non-decreasing; `perm` maps each sorted position (1-based) back to the
// position the star had in the user-supplied list.
struct Parameters {
    int colors = 0;
    std::vector<int> stars;
    std::optional<int> matching_size;
    std::vector<int> perm;

    bool with_matching() const { return matching_size.has_value(); }
};

// Validates and normalizes raw user input.
// Throws NonPositiveStar, TooFewColors, MatchingWithTLessThan3 or
// ValidationError (star count does not match the color count).
Parameters normalize(int colors, std::vector<int> stars,
                     std::optional<int> matching_size = std::nullopt);

// ---------------------------------------------------------------------------
// Coloring
// ---------------------------------------------------------------------------

// A total assignment of colors 1..t to the edges of K_n, stored as an
// upper-triangular array in lexicographic (u,v) order.  A freshly created
// coloring has every edge unset (color 0); complete() reports whether all
// edges have been assigned.
class Coloring {
  public:
    Coloring(int n, int t);

    int order() const { return n_; }
    int palette() const { return t_; }
    std::size_t edge_count() const { return colors_.size(); }

    Color color(int u, int v) const;
    void set_color(int u, int v, Color c);
    bool complete() const;

    // Degree of v in color c (counts only set edges).
    int color_degree(int v, Color c) const;

    // Same edges reinterpreted over a larger palette.
    Coloring widened(int new_palette) const;

    // Induced coloring on vertices 0..k-1.
    Coloring induced_prefix(int k) const;

    // Relabels colors: edge colored c becomes new_of_old[c-1].
    Coloring relabel_colors(const std::vector<Color>& new_of_old) const;

    bool operator==(const Coloring&) const = default;

    static std::size_t edge_index(int n, int u, int v);

  private:
    int n_;
    int t_;
    std::vector<Color> colors_;
};

// Color relabeling that carries a witness for normalized parameters back to
// the user's original star order (sorted color i becomes user color perm[i];
// the matching color t stays fixed).
std::vector<Color> color_relabeling_from(const Parameters& params);

// ---------------------------------------------------------------------------
// TargetSpec
// ---------------------------------------------------------------------------

struct StarPattern { int arms; };
struct MatchingPattern { int size; };
using Pattern = std::variant<StarPattern, MatchingPattern>;

struct TargetEntry {
    Pattern pattern;
    Color missing;
};

// A list of (pattern, forbidden color) pairs over a palette of `palette`
// colors; entry i must appear in the subgraph spanned by the colors other
// than entries[i].missing for the coloring to "arrive".
struct TargetSpec {
    int palette = 0;
    std::vector<TargetEntry> entries;
};

// Targets in normalized order: entry i is the i-th sorted star missing
// color i, plus the matching (when present) missing color t.
TargetSpec targets_for(const Parameters& params);

// Targets in the user-supplied order (star j missing color j as given).
TargetSpec user_targets(int colors, const std::vector<int>& stars,
                        std::optional<int> matching_size = std::nullopt);

// ---------------------------------------------------------------------------
// DerivationTrace
// ---------------------------------------------------------------------------

struct TraceStep {
    std::string rule;
    // Ordered so serialization is deterministic.
    std::vector<std::pair<std::string, long long>> symbols;

    std::optional<long long> symbol(const std::string& name) const;
};

struct DerivationTrace {
    std::vector<TraceStep> steps;
    long long result = 0;
};

// ---------------------------------------------------------------------------
// MatchingDecomposition
// ---------------------------------------------------------------------------

// A 1-factorization (even order, p-1 classes) or near-1-factorization
// (odd order, p classes, class k missing exactly vertex k).  Edges within a
// class are ordered pairs; the near-factorization order follows the rotated
// pattern (v+1,v-1), (v+2,v-2), ...
struct MatchingDecomposition {
    int order = 0;
    std::vector<std::vector<std::pair<int, int>>> classes;
    std::vector<std::optional<int>> missing_vertex;
};

}  // namespace ramsey
