#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superinv/poly.hpp"

namespace superinv {

inline constexpr std::size_t kMaxOddGens = 64;

using AtomId = std::uint32_t;
// Sorted by atom id, exponents positive.
using Factorization = std::vector<std::pair<AtomId, std::uint32_t>>;

class RingContext;
using ContextPtr = std::shared_ptr<const RingContext>;

class ContextMismatch : public std::logic_error {
 public:
  ContextMismatch() : std::logic_error("scalars belong to different ring contexts") {}
};

// Declares the even and odd generators of the ring Frac(Q[even]) (x) Lambda(odd).
//
// The context also owns a registry of denominator factors ("atoms"): primitive
// polynomials with positive leading coefficient that are pairwise coprime. Every
// denominator of a scalar is a product of atom powers. When a new polynomial
// shares a proper factor with an atom, that atom is split and scalars that
// reference it re-express themselves through its children on next normalization.
class RingContext {
 public:
  static ContextPtr create(std::vector<std::string> even_names, std::vector<std::string> odd_names);

  std::size_t even_count() const noexcept { return even_names_.size(); }
  std::size_t odd_count() const noexcept { return odd_names_.size(); }
  const std::vector<std::string>& even_names() const noexcept { return even_names_; }
  const std::vector<std::string>& odd_names() const noexcept { return odd_names_; }
  std::optional<std::size_t> find_even(std::string_view name) const;
  std::optional<std::size_t> find_odd(std::string_view name) const;

  // p = unit * prod atom^e; registers new atoms as needed. p must be nonzero.
  Factorization factor(const Poly& p, Int& unit) const;
  Poly atom(AtomId id) const;
  // Empty for an unsplit atom.
  Factorization atom_children(AtomId id) const;
  bool any_split() const;
  std::size_t atom_count() const;
  Poly atom_power(AtomId id, std::uint32_t e) const;
  Poly expand(const Factorization& f) const;
  // Rewrites split atoms into their current leaves.
  Factorization refresh(const Factorization& f) const;

 private:
  RingContext(std::vector<std::string> even_names, std::vector<std::string> odd_names);

  struct AtomEntry {
    Poly poly;
    std::uint32_t support = 0;
    Factorization children;
  };

  AtomId add_leaf_locked(Poly p) const;
  void split_locked(AtomId id, const Poly& part) const;
  Factorization factor_over_leaves_locked(Poly p) const;
  void refresh_into_locked(AtomId id, std::uint32_t e, std::map<AtomId, std::uint32_t>& out) const;

  std::vector<std::string> even_names_;
  std::vector<std::string> odd_names_;

  mutable std::mutex mutex_;
  mutable std::deque<AtomEntry> atoms_;
  mutable std::map<std::pair<AtomId, std::uint32_t>, Poly> power_cache_;
  mutable bool any_split_ = false;
};

}  // namespace superinv
