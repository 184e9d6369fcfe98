
#include "ramsey/core.hpp"

#include <algorithm>
#include <numeric>

namespace ramsey {

namespace {

// Keeps downstream 64-bit arithmetic (sums over t stars) overflow-free.
constexpr int kMaxStar = 1'000'000'000;
constexpr int kMaxColors = 1'000'000;

}  // namespace

Parameters normalize(int colors, std::vector<int> stars,
                     std::optional<int> matching_size) {
    if (matching_size.has_value()) {
        if (colors < 3)
            throw MatchingWithTLessThan3(
                "a matching target requires at least 3 colors, got t=" +
                std::to_string(colors));
        if (*matching_size < 1)
            throw NonPositiveStar("matching size must be >= 1, got s=" +
                                  std::to_string(*matching_size));
        if (static_cast<int>(stars.size()) != colors - 1)
            throw ValidationError(
                "expected t-1=" + std::to_string(colors - 1) + " stars, got " +
                std::to_string(stars.size()));
    } else {
        if (colors < 2)
            throw TooFewColors("need at least 2 colors, got t=" +
                               std::to_string(colors));
        if (static_cast<int>(stars.size()) != colors)
            throw ValidationError("expected t=" + std::to_string(colors) +
                                  " stars, got " + std::to_string(stars.size()));
    }
    if (colors > kMaxColors)
        throw ValidationError("color count out of range");
    for (int m : stars) {
        if (m < 1)
            throw NonPositiveStar("star sizes must be >= 1, got " +
                                  std::to_string(m));
        if (m > kMaxStar)
            throw ValidationError("star size out of range");
    }

    // Stable sort, remembering where each sorted entry came from.
    std::vector<int> order(stars.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return stars[a] < stars[b]; });

    Parameters p;
    p.colors = colors;
    p.matching_size = matching_size;
    p.stars.reserve(stars.size());
    p.perm.reserve(stars.size());
    for (int idx : order) {
        p.stars.push_back(stars[idx]);
        p.perm.push_back(idx + 1);
    }
    return p;
}

// ---------------------------------------------------------------------------

Coloring::Coloring(int n, int t) : n_(n), t_(t) {
    if (n < 0) throw ValidationError("coloring order must be non-negative");
    if (t < 1) throw ValidationError("palette must contain at least one color");
    colors_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
}

std::size_t Coloring::edge_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n || u == v)
        throw ValidationError("edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ") out of range for n=" +
                              std::to_string(n));
    // Row u starts after all shorter rows of the upper triangle.
    return static_cast<std::size_t>(u) * n - static_cast<std::size_t>(u) * (u + 1) / 2 +
           (v - u - 1);
}

Color Coloring::color(int u, int v) const {
    return colors_[edge_index(n_, u, v)];
}

void Coloring::set_color(int u, int v, Color c) {
    if (c < 1 || c > t_)
        throw ValidationError("color " + std::to_string(c) +
                              " outside palette 1.." + std::to_string(t_));
    colors_[edge_index(n_, u, v)] = c;
}

bool Coloring::complete() const {
    return std::find(colors_.begin(), colors_.end(), 0) == colors_.end();
}

int Coloring::color_degree(int v, Color c) const {
    int deg = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && colors_[edge_index(n_, u, v)] == c) ++deg;
    return deg;
}

Coloring Coloring::widened(int new_palette) const {
    if (new_palette < t_)
        throw ValidationError("widened palette must not shrink");
    Coloring out(n_, new_palette);
    out.colors_ = colors_;
    return out;
}

Coloring Coloring::induced_prefix(int k) const {
    if (k < 0 || k > n_)
        throw ValidationError("induced prefix size out of range");
    Coloring out(k, t_);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            out.colors_[edge_index(k, u, v)] = colors_[edge_index(n_, u, v)];
    return out;
}

Coloring Coloring::relabel_colors(const std::vector<Color>& new_of_old) const {
    if (static_cast<int>(new_of_old.size()) != t_)
        throw ValidationError("relabeling must cover the whole palette");
    for (Color c : new_of_old)
        if (c < 1 || c > t_)
            throw ValidationError("relabeling leaves the palette");
    Coloring out(n_, t_);
    for (std::size_t i = 0; i < colors_.size(); ++i)
        out.colors_[i] = colors_[i] == 0 ? 0 : new_of_old[colors_[i] - 1];
    return out;
}

std::vector<Color> color_relabeling_from(const Parameters& params) {
    std::vector<Color> map(params.colors);
    for (int i = 0; i < params.colors; ++i) map[i] = i + 1;
    for (std::size_t i = 0; i < params.perm.size(); ++i)
        map[i] = params.perm[i];
    return map;
}

// ---------------------------------------------------------------------------

TargetSpec targets_for(const Parameters& params) {
    TargetSpec spec;
    spec.palette = params.colors;
    for (std::size_t i = 0; i < params.stars.size(); ++i)
        spec.entries.push_back(
            {StarPattern{params.stars[i]}, static_cast<Color>(i + 1)});
    if (params.with_matching())
        spec.entries.push_back(
            {MatchingPattern{*params.matching_size}, params.colors});
    return spec;
}

TargetSpec user_targets(int colors, const std::vector<int>& stars,
                        std::optional<int> matching_size) {
    // Validate through normalize, then emit entries in the given order.
    normalize(colors, stars, matching_size);
    TargetSpec spec;
    spec.palette = colors;
    for (std::size_t i = 0; i < stars.size(); ++i)
        spec.entries.push_back({StarPattern{stars[i]}, static_cast<Color>(i + 1)});
    if (matching_size.has_value())
        spec.entries.push_back({MatchingPattern{*matching_size}, colors});
    return spec;
}

std::optional<long long> TraceStep::symbol(const std::string& name) const {
    for (const auto& [key, value] : symbols)
        if (key == name) return value;
    return std::nullopt;
}

}  // namespace ramsey
