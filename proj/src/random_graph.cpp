#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include "fjoin/graph.hpp"

namespace fjoin {
namespace {

// Maps k in [0, n(n-1)/2) to the k-th pair (u < v) in lexicographic order.
Edge pair_at(std::uint64_t k, std::uint64_t n) {
    // Row u starts at offset u*(2n-u-1)/2; solve for u then correct rounding.
    const auto row_start = [n](std::uint64_t u) { return u * (2 * n - u - 1) / 2; };
    const double nn = static_cast<double>(n);
    const double disc = (2 * nn - 1) * (2 * nn - 1) - 8.0 * static_cast<double>(k);
    auto u = static_cast<std::uint64_t>(std::floor(((2 * nn - 1) - std::sqrt(std::max(disc, 0.0))) / 2));
    while (u > 0 && row_start(u) > k) --u;
    while (u + 1 < n && row_start(u + 1) <= k) ++u;
    const std::uint64_t v = u + 1 + (k - row_start(u));
    return {static_cast<VertexId>(u), static_cast<VertexId>(v)};
}

}  // namespace

Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n < 1) throw DomainError("random graph needs n >= 1");
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m > pairs) {
        throw DomainError("cannot place " + std::to_string(m) + " edges on " + std::to_string(n) +
                          " vertices");
    }
    // Floyd's sampling: exactly m distinct pair indices, each subset equally likely.
    std::mt19937_64 rng(seed);
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(m * 2);
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t j = pairs - m; j < pairs; ++j) {
        std::uniform_int_distribution<std::uint64_t> pick(0, j);
        std::uint64_t t = pick(rng);
        if (!chosen.insert(t).second) {
            chosen.insert(j);
            t = j;
        }
        edges.push_back(pair_at(t, n));
    }
    return Graph(n, std::move(edges));
}

}  // namespace fjoin
