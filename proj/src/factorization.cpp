
#include "ramsey/factorization.hpp"

#include <algorithm>

namespace ramsey {

MatchingDecomposition one_factorization(int p) {
    if (p < 0 || p % 2 != 0)
        throw OddOrder("one_factorization needs even order, got " +
                       std::to_string(p));
    MatchingDecomposition dec;
    dec.order = p;
    if (p == 0) return dec;

    // Round-robin: vertex p-1 is fixed, the others rotate.  Round k pairs
    // p-1 with k and folds the remaining positions around k.
    const int m = p - 1;
    for (int k = 0; k < m; ++k) {
        std::vector<std::pair<int, int>> cls;
        cls.emplace_back(p - 1, k);
        for (int j = 1; j <= (p - 2) / 2; ++j) {
            int a = (k + j) % m;
            int b = (k - j % m + m) % m;
            cls.emplace_back(a, b);
        }
        dec.classes.push_back(std::move(cls));
        dec.missing_vertex.push_back(std::nullopt);
    }
    return dec;
}

MatchingDecomposition near_one_factorization(int x) {
    if (x < 0 || x % 2 == 0)
        throw EvenOrder("near_one_factorization needs odd order, got " +
                        std::to_string(x));
    MatchingDecomposition dec;
    dec.order = x;
    for (int v = 0; v < x; ++v) {
        std::vector<std::pair<int, int>> cls;
        for (int k = 1; k <= (x - 1) / 2; ++k) {
            int a = (v + k) % x;
            int b = (v - k % x + x) % x;
            cls.emplace_back(a, b);
        }
        dec.classes.push_back(std::move(cls));
        dec.missing_vertex.push_back(v);
    }
    return dec;
}

std::vector<std::pair<int, int>> regular_circulant(int p, int d) {
    if (p < 0 || d < 0 || (p == 0 && d > 0) || (p > 0 && d > p - 1))
        throw ValidationError("circulant degree must lie in 0..p-1");
    if (d % 2 == 1 && p % 2 == 1)
        throw ParityInfeasible("no " + std::to_string(d) +
                               "-regular graph on " + std::to_string(p) +
                               " vertices: odd degree sum");
    std::vector<std::pair<int, int>> edges;
    for (int off = 1; off <= d / 2; ++off)
        for (int u = 0; u < p; ++u) {
            // Each base vertex contributes one distinct edge per offset
            // (offsets stay below p/2, so u and u+off never coincide).
            int v = (u + off) % p;
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    if (d % 2 == 1)
        for (int u = 0; u < p / 2; ++u) edges.emplace_back(u, u + p / 2);
    return edges;
}

}  // namespace ramsey
