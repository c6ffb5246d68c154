#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "cluster.hpp"
#include "holant/checks/graph_enum.hpp"
#include "holant/checks/oracles.hpp"
#include "holant/exact.hpp"

using namespace holant;

namespace {

std::set<std::vector<int>> connected_by_brute_force(const Multigraph &g, int N)
{
    std::set<std::vector<int>> out;
    const int n = g.num_vertices();
    for (std::uint32_t mask = 1; mask < (1U << n); mask++) {
        std::vector<int> U;
        for (int v = 0; v < n; v++) {
            if (mask >> v & 1U) {
                U.push_back(v);
            }
        }
        if (static_cast<int>(U.size()) <= N && checks::is_connected(induced_subgraph(g, U))) {
            out.insert(U);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("connected sets are enumerated once each")
{
    Rng rng(6);
    for (int trial = 0; trial < 10; trial++) {
        const Multigraph g = checks::random_graph(rng, 8, 12, 4, trial % 2 == 0);
        for (int N = 1; N <= 5; N++) {
            const auto sets = detail::connected_sets(g, N);
            const std::set<std::vector<int>> unique(sets.begin(), sets.end());
            CHECK(unique.size() == sets.size());
            CHECK(unique == connected_by_brute_force(g, N));
        }
    }
}

TEST_CASE("cluster log series matches the log of the interpolated polynomial")
{
    Rng rng(10);
    for (int trial = 0; trial < 6; trial++) {
        const int k = 2 + trial % 2;
        const Multigraph g = checks::random_graph(rng, 6, 9, 4, true);
        const EdgeColoringModel h = checks::random_model(rng, k, 0.8, g.max_degree());
        TensorAssignment D = TensorAssignment::from_model(g, h);
        for (int v = 0; v < D.size(); v++) {
            for (const Alpha &alpha : D[v].support()) {
                D[v].set(alpha, D[v].at(alpha) - 1.0);
            }
        }
        const int n = g.num_vertices();
        const auto L = detail::log_series_by_clusters(g, D, n);

        // Series of ln(q / k^|E|) from the oracle coefficients.
        const ComplexPoly q = exact_poly_by_interpolation(g, h);
        const double scale = std::pow(static_cast<double>(k), -g.num_edges());
        std::vector<cplx> a(n + 1), b(n + 1, 0.0);
        for (int j = 0; j <= n; j++) {
            a[j] = q[j] * scale;
        }
        for (int j = 1; j <= n; j++) {
            cplx acc = static_cast<double>(j) * a[j];
            for (int i = 1; i < j; i++) {
                acc -= static_cast<double>(i) * b[i] * a[j - i];
            }
            b[j] = acc / static_cast<double>(j);
        }
        for (int j = 1; j <= n; j++) {
            CHECK(std::abs(L[j] - b[j]) <= 1e-8 * std::max(1.0, std::abs(b[j])));
        }
    }
}
