#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "superinv/relations.hpp"
#include "superinv/sft11.hpp"

namespace superinv::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class EmitFormat { Text, Json, Latex };
std::optional<EmitFormat> format_from_name(const std::string& name);

Json certificate_json(const Certificate& c);
Json relation_json(const Relation& rel);
// {"schema": 1, "relations": [...]}, two-space indent, trailing newline.
std::string relations_json(const std::vector<Relation>& rels);
// One display per relation, grouped under a comment naming its family.
std::string relations_latex(const std::vector<Relation>& rels);
std::string relations_text(const std::vector<Relation>& rels);

Json membership_json(const InvariantPolynomial& f, const MembershipResult& r, std::size_t p, std::size_t q);
std::string membership_latex(const InvariantPolynomial& f, const MembershipResult& r);

std::string dump(const Json& j);

}  // namespace superinv::cli
