#include "emit.hpp"

#include <sstream>

namespace superinv::cli {

std::optional<EmitFormat> format_from_name(const std::string& name) {
  if (name == "text") return EmitFormat::Text;
  if (name == "json") return EmitFormat::Json;
  if (name == "latex") return EmitFormat::Latex;
  return std::nullopt;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json certificate_json(const Certificate& c) {
  Json j;
  j["mode"] = mode_name(c.mode);
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["verified"] = c.verified();
  j["verdict"] = verdict_name(c.verdict);
  if (!c.witness.empty()) j["witness"] = c.witness;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json relation_json(const Relation& rel) {
  Json j;
  j["family"] = family_name(rel.family);
  Json idx = Json::object();
  for (const auto& [name, values] : rel.indices) idx[name] = values;
  j["indices"] = std::move(idx);
  j["lhs"] = rel.lhs.to_string();
  j["rhs"] = rel.rhs.to_string();
  j["certificate"] = certificate_json(rel.certificate);
  return j;
}

std::string relations_json(const std::vector<Relation>& rels) {
  Json root;
  root["schema"] = kSchemaVersion;
  root["relations"] = Json::array();
  for (const auto& r : rels) root["relations"].push_back(relation_json(r));
  return dump(root);
}

std::string relations_latex(const std::vector<Relation>& rels) {
  std::ostringstream os;
  std::optional<Family> current;
  for (const auto& r : rels) {
    if (!current || *current != r.family) {
      current = r.family;
      os << "% " << family_name(r.family) << ": " << family_latex(r.family) << "\n";
    }
    os << "\\[ " << r.to_latex() << " \\]";
    if (!r.certificate.verified() && r.certificate.verdict != Verdict::Unchecked) {
      os << "  % " << verdict_name(r.certificate.verdict);
    }
    os << "\n";
  }
  return os.str();
}

std::string relations_text(const std::vector<Relation>& rels) {
  std::ostringstream os;
  for (const auto& r : rels) {
    os << "[" << verdict_name(r.certificate.verdict) << "] " << family_name(r.family) << ": " << r.to_string() << "\n";
    if (!r.certificate.witness.empty()) os << "    witness: " << r.certificate.witness << "\n";
  }
  return os.str();
}

Json membership_json(const InvariantPolynomial& f, const MembershipResult& r, std::size_t p, std::size_t q) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["p"] = p;
  j["q"] = q;
  j["input"] = f.to_string();
  j["in_ideal"] = r.in_ideal;
  j["pi_zero"] = r.pi_zero;
  j["agrees"] = r.agrees();
  Json nf = Json::array();
  for (const auto& [w, c] : r.normal_form.terms()) {
    const auto [sp, sign] = StandardProduct::from_word(w);
    Json t;
    t["coefficient"] = rational_to_string(sign > 0 ? c : Rational(-c));
    t["standard_product"] = sp.to_string();
    nf.push_back(std::move(t));
  }
  j["normal_form"] = std::move(nf);
  return j;
}

std::string membership_latex(const InvariantPolynomial& f, const MembershipResult& r) {
  std::ostringstream os;
  os << "% in ideal: " << (r.in_ideal ? "true" : "false") << "\n";
  os << "\\[ " << f.to_latex() << " \\;\\longmapsto\\; " << r.normal_form.to_latex() << " \\]\n";
  return os.str();
}

}  // namespace superinv::cli
