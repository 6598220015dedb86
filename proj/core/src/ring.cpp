#include "superinv/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace superinv {

namespace {

// Pairwise coprime polynomials whose products generate every input.
std::vector<Poly> coprime_base(std::vector<Poly> items) {
  std::vector<Poly> base;
  for (auto& p : items) {
    if (!p.is_constant()) base.push_back(p.primitive_part());
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        const Poly d = Poly::gcd(base[i], base[j]);
        if (d.is_constant()) continue;
        std::vector<Poly> next;
        for (std::size_t k = 0; k < base.size(); ++k) {
          if (k != i && k != j) next.push_back(base[k]);
        }
        for (const Poly* src : {&base[i], &base[j]}) {
          Poly q = *src->divide_exact(d);
          if (!q.is_constant()) next.push_back(q.primitive_part());
        }
        next.push_back(d);
        std::vector<Poly> dedup;
        for (auto& p : next) {
          if (std::find(dedup.begin(), dedup.end(), p) == dedup.end()) dedup.push_back(std::move(p));
        }
        base = std::move(dedup);
        changed = true;
      }
    }
  }
  return base;
}

}  // namespace

ContextPtr RingContext::create(std::vector<std::string> even_names, std::vector<std::string> odd_names) {
  if (even_names.size() > kMaxEvenVars) {
    throw std::invalid_argument("too many even generators (limit " + std::to_string(kMaxEvenVars) + ")");
  }
  if (odd_names.size() > kMaxOddGens) {
    throw std::invalid_argument("too many odd generators (limit " + std::to_string(kMaxOddGens) + ")");
  }
  std::set<std::string> seen;
  for (const auto* names : {&even_names, &odd_names}) {
    for (const auto& n : *names) {
      if (n.empty()) throw std::invalid_argument("empty generator name");
      if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name: " + n);
    }
  }
  return ContextPtr(new RingContext(std::move(even_names), std::move(odd_names)));
}

RingContext::RingContext(std::vector<std::string> even_names, std::vector<std::string> odd_names)
    : even_names_(std::move(even_names)), odd_names_(std::move(odd_names)) {}

std::optional<std::size_t> RingContext::find_even(std::string_view name) const {
  for (std::size_t i = 0; i < even_names_.size(); ++i) {
    if (even_names_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> RingContext::find_odd(std::string_view name) const {
  for (std::size_t i = 0; i < odd_names_.size(); ++i) {
    if (odd_names_[i] == name) return i;
  }
  return std::nullopt;
}

Factorization RingContext::factor(const Poly& p, Int& unit) const {
  if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  Int c = p.content();
  if (p.leading().coeff.sign() < 0) c.negate();
  unit = c;
  Poly r = p.divided_by_int(c);
  if (r.is_constant()) return {};
  std::lock_guard<std::mutex> lock(mutex_);
  return factor_over_leaves_locked(std::move(r));
}

Factorization RingContext::factor_over_leaves_locked(Poly r) const {
  std::map<AtomId, std::uint32_t> out;
  while (!r.is_constant()) {
    for (AtomId id = 0; id < atoms_.size() && !r.is_constant(); ++id) {
      const AtomEntry& a = atoms_[id];
      if (!a.children.empty() || (a.support & ~r.support()) != 0) continue;
      while (!r.is_constant()) {
        auto q = r.divide_exact(a.poly);
        if (!q) break;
        r = std::move(*q);
        ++out[id];
      }
    }
    if (r.is_constant()) break;
    bool split = false;
    for (AtomId id = 0; id < atoms_.size(); ++id) {
      const AtomEntry& a = atoms_[id];
      if (!a.children.empty() || (a.support & r.support()) == 0) continue;
      const Poly g = Poly::gcd(r, a.poly);
      if (g.is_constant()) continue;
      split_locked(id, g);
      split = true;
      break;
    }
    if (!split) {
      ++out[add_leaf_locked(r)];
      break;
    }
  }
  return Factorization(out.begin(), out.end());
}

AtomId RingContext::add_leaf_locked(Poly p) const {
  const AtomId id = static_cast<AtomId>(atoms_.size());
  AtomEntry e;
  e.support = p.support();
  e.poly = std::move(p);
  atoms_.push_back(std::move(e));
  return id;
}

void RingContext::split_locked(AtomId id, const Poly& part) const {
  Poly f = atoms_[id].poly;
  const Poly rest = *f.divide_exact(part);
  const std::vector<Poly> base = coprime_base({part, rest});
  std::map<AtomId, std::uint32_t> children;
  for (const auto& b : base) {
    const AtomId child = add_leaf_locked(b);
    while (auto q = f.divide_exact(b)) {
      f = std::move(*q);
      ++children[child];
      if (f.is_constant()) break;
    }
  }
  if (!f.is_constant()) throw std::logic_error("atom split left a nonconstant cofactor");
  atoms_[id].children.assign(children.begin(), children.end());
  any_split_ = true;
}

Poly RingContext::atom(AtomId id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return atoms_.at(id).poly;
}

Factorization RingContext::atom_children(AtomId id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return atoms_.at(id).children;
}

bool RingContext::any_split() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return any_split_;
}

std::size_t RingContext::atom_count() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return atoms_.size();
}

Poly RingContext::atom_power(AtomId id, std::uint32_t e) const {
  if (e == 0) return Poly(Int(1));
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = power_cache_.find({id, e});
  if (it != power_cache_.end()) return it->second;
  Poly p = atoms_.at(id).poly.pow(e);
  if (power_cache_.size() < 4096) power_cache_.emplace(std::make_pair(id, e), p);
  return p;
}

Poly RingContext::expand(const Factorization& f) const {
  Poly out(Int(1));
  for (const auto& [id, e] : f) out = out * atom_power(id, e);
  return out;
}

void RingContext::refresh_into_locked(AtomId id, std::uint32_t e, std::map<AtomId, std::uint32_t>& out) const {
  const AtomEntry& a = atoms_.at(id);
  if (a.children.empty()) {
    out[id] += e;
    return;
  }
  for (const auto& [c, k] : a.children) refresh_into_locked(c, e * k, out);
}

Factorization RingContext::refresh(const Factorization& f) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!any_split_) return f;
  std::map<AtomId, std::uint32_t> out;
  for (const auto& [id, e] : f) refresh_into_locked(id, e, out);
  return Factorization(out.begin(), out.end());
}

}  // namespace superinv
