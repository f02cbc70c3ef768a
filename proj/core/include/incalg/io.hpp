#pragma once

#include "incalg/experiments.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace incalg {

inline constexpr const char *kSchema = "incalg/1";

using nlohmann::json;

/// {"elements": [...], "relations": [[x, y], ...]}; closure is applied.
Preorder preorder_from_json(const json &j);
json to_json(const Preorder &p);

json to_json(const Scalar &s);
/// [[x, y, coef], ...] in basis order.
json to_json(const IncidenceElement &f);
/// {"ring": ..., "images": [{"from": [x, y], "to": [[u, v, coef], ...]}]}.
/// Every basis index is listed.
json to_json(const LinearMap &m);
/// Missing basis indices map to zero. A "ring" entry, when present, must
/// match the algebra.
LinearMap linear_map_from_json(const AlgebraPtr &algebra, const json &j);
IncidenceElement element_from_json(const AlgebraPtr &algebra, const json &j);

json to_json(const IdentityReport &r);
json to_json(const CRelationReport &r);
json to_json(const DecompositionCertificate &c);
json to_json(const SpaceComparison &c);
/// Basis dump: {"dimension": n, "class": ..., "basis": [map | {xi, tau}]}.
json to_json(const SolutionSpace &s);
json to_json(const TheoremReport &r);
json to_json(const TorsionReport &r);

/// Reads and parses a JSON file. Throws InputError with the path and the
/// parser's location on failure.
json read_json_file(const std::filesystem::path &path);
Preorder read_preorder_file(const std::filesystem::path &path);
LinearMap read_linear_map_file(const AlgebraPtr &algebra,
                               const std::filesystem::path &path);

/// Pretty-printed, two-space indent, trailing newline.
std::string dump(const json &j);

} // namespace incalg
