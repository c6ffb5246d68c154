#pragma once

#include "holant/barvinok.hpp"
#include "holant/limits.hpp"
#include "holant/model_io.hpp"

namespace holant {

/// Finite doubles as numbers, everything else as null.
json number_or_null(double x);

/// {value:{re,im}, M, q0, n, bound, mode, log_value:{re,im}, r, degree,
///  method, heuristic_radius}; M is null when infinite.
json certificate_to_json(const ApproxCertificate &cert);

/// {family, sizes, values, densities, diffs, cauchy, tolerance,
///  engine_per_size, errors}.
json report_to_json(const ConvergenceReport &report);

json radius_to_json(const RadiusInfo &info);

}  // namespace holant
