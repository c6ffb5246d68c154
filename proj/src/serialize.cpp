#include "holant/serialize.hpp"

#include <cmath>

namespace holant {

json number_or_null(double x)
{
    return std::isfinite(x) ? json(x) : json(nullptr);
}

json certificate_to_json(const ApproxCertificate &cert)
{
    return json{{"value", complex_to_json(cert.value)},
                {"M", number_or_null(cert.M)},
                {"q0", cert.q0},
                {"n", cert.n},
                {"bound", cert.bound},
                {"mode", to_string(cert.mode)},
                {"log_value", complex_to_json(cert.log_value)},
                {"r", cert.r},
                {"degree", cert.degree},
                {"method", to_string(cert.method)},
                {"heuristic_radius", cert.heuristic_radius}};
}

json report_to_json(const ConvergenceReport &report)
{
    json values = json::array();
    for (const auto &v : report.values) {
        values.push_back(v ? number_or_null(*v) : json(nullptr));
    }
    return json{{"family", report.family},
                {"sizes", report.sizes},
                {"values", values},
                {"densities", report.densities},
                {"diffs", report.diffs},
                {"cauchy", report.cauchy},
                {"tolerance", report.tolerance},
                {"engine_per_size", report.engines},
                {"errors", report.errors}};
}

json radius_to_json(const RadiusInfo &info)
{
    return json{{"r", info.r},
                {"threshold", info.threshold},
                {"M", number_or_null(info.M)},
                {"inside", info.M > 1.0}};
}

}  // namespace holant
