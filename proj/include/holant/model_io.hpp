#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "holant/models.hpp"
#include "vendor_json.hpp"

namespace holant {

using json = nlohmann::json;

json complex_to_json(cplx z);
cplx complex_from_json(const json &j);

/// {"k": int, "default": {"re","im"}, "entries": [{"alpha": [...], "re", "im"}, ...]}.
/// Rule-based models are written with every alpha of total at most
/// `degree_bound` listed.
json model_to_json(const EdgeColoringModel &h, int degree_bound);
EdgeColoringModel model_from_json(const json &j);

/// {"a": [complex...], "B": [[complex...]...]}.
json vertex_model_to_json(const VertexModel &m);
VertexModel vertex_model_from_json(const json &j);

/// Either kind, decided by the keys present.
std::variant<EdgeColoringModel, VertexModel> read_model_file(const std::string &path);

}  // namespace holant

namespace holant {

/// h(alpha) = 1 + r e^{i phi_alpha} with seeded uniform phases, listed for
/// every |alpha| <= degree_bound (1 beyond), so sup |h - 1| = r.
EdgeColoringModel perturbed_ones_model(int k, double r, std::uint64_t seed, int degree_bound);

/// Built-in names: ones, matching, dregular:<d>, ones+uniform:<r>:<seed>
/// (also written ones±uniform or ones+-uniform). Throws ParseError.
EdgeColoringModel builtin_model(const std::string &name, int k, int degree_bound);

/// A built-in name, or else a model file (edge-coloring or vertex model).
EdgeColoringModel load_model(const std::string &name_or_path, int k, int degree_bound);

}  // namespace holant
