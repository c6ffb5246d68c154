#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holant/barvinok.hpp"
#include "holant/graph.hpp"
#include "holant/models.hpp"

namespace holant {

struct EngineChoice {
    enum Kind { Exact, Approx } kind = Exact;
    /// Additive accuracy per vertex for the approximation engine.
    double eps = 1e-3;
};

/// n(G)(h) = ln|p(G)(h)| / |V|. Throws PreconditionError when the exact
/// value is 0.
double normalized_pf(const Multigraph &g, const EdgeColoringModel &h, EngineChoice engine = {});

/// T[i][j] = h(e_i + e_j).
CMatrix cycle_transfer_matrix(const EdgeColoringModel &h);

/// trace(T^n) = p(C_n)(h) by repeated squaring.
cplx cycle_transfer_pf(const EdgeColoringModel &h, int n);

/// ln|trace(T^n)|, rescaling during the squaring so large n does not
/// overflow.
double cycle_transfer_log_abs(const EdgeColoringModel &h, int n);

/// ln of the largest eigenvalue modulus of T.
double log_lambda_max(const EdgeColoringModel &h);

struct ConvergenceReport {
    std::string family;
    std::vector<int> sizes;
    /// n(G_i)(h), empty when that size failed (see errors).
    std::vector<std::optional<double>> values;
    std::vector<double> densities;
    /// Successive differences of consecutive available values.
    std::vector<double> diffs;
    bool cauchy = false;
    double tolerance = 1e-2;
    std::vector<std::string> engines;
    std::vector<std::string> errors;
};

/// n(G)(h) along the family members (in order of size). Cycles use the
/// transfer matrix, other families the additive approximation with `eps`.
/// cauchy: the last three differences (or all, if fewer) are below tol.
ConvergenceReport convergence_run(const std::vector<GraphFamilySpec> &family,
                                  const EdgeColoringModel &h, double eps, double tol = 1e-2);

struct LogPotentialResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double discrepancy = 0.0;
    std::vector<cplx> roots;
};

/// lhs = mean over roots of qhat(z) = k^-|E| z^|V| q(1/z) of ln|1 - root|;
/// rhs = n(G)(h) - (|E|/|V|) ln k from the exact engine.
LogPotentialResult log_potential_check(const Multigraph &g, const EdgeColoringModel &h);

}  // namespace holant
