#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "superinv/minors.hpp"
#include "superinv/numeric.hpp"
#include "superinv/relations.hpp"
#include "superinv/sft11.hpp"

namespace superinv::acceptance {

namespace {

struct Check {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail << "first failure: " << what << "; ";
    }
  }
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

std::string shape_name(const MatrixShape& s) {
  std::ostringstream os;
  os << "(" << s.r << "|" << s.s << ")x(" << s.p << "|" << s.q << ")";
  return os.str();
}

// ---- 1 -------------------------------------------------------------------

void classical_two_by_four(Check& c) {
  const auto rels = classical_plucker_relations(2, 4);
  c.require(rels.size() == 1, "expected exactly one relation, got " + std::to_string(rels.size()));
  if (rels.empty()) return;
  const std::string expected = "X[1,2]*X[3,4] - X[1,3]*X[2,4] + X[1,4]*X[2,3] = 0";
  c.require(rels[0].to_string() == expected, "relation reads " + rels[0].to_string());

  CoordinateModel model = CoordinateModel::generic({2, 0, 4, 0});
  const Scalar diff = evaluate(rels[0].lhs, model) - evaluate(rels[0].rhs, model);
  c.require(diff.is_zero(), "expansion is " + diff.to_string());
  const Certificate cert = verify_relation(rels[0], VerifyMode::Symbolic, 0, 0);
  c.require(cert.verified(), std::string("certificate ") + verdict_name(cert.verdict));
  c.detail << rels[0].to_string() << ", expansion exactly 0";
}

// ---- 2 -------------------------------------------------------------------

void super_cramer_example(Check& c) {
  const ContextPtr ctx = RingContext::create({"a", "b", "c"}, {"al", "be", "ga"});
  const Scalar a = Scalar::even_generator(ctx, 0), b = Scalar::even_generator(ctx, 1), cc = Scalar::even_generator(ctx, 2);
  const Scalar al = Scalar::odd_generator(ctx, 0), be = Scalar::odd_generator(ctx, 1), ga = Scalar::odd_generator(ctx, 2);
  auto one_by_one = [&](const Scalar& v) {
    ScalarMatrix m(ctx, 1, 1);
    m(0, 0) = v;
    return m;
  };
  const SuperMatrix g = SuperMatrix::from_blocks(one_by_one(a), one_by_one(al), one_by_one(be), one_by_one(b));
  const std::vector<Scalar> rhs{cc, ga};
  const std::vector<Scalar> sol = super_cramer_solve(g, rhs);
  c.require(sol.size() == 2, "solution has wrong length");
  if (sol.size() != 2) return;

  const Scalar x = (cc - al * b.inverse() * ga) * (a - al * b.inverse() * be).inverse();
  const Scalar eta = (ga - be * a.inverse() * cc) * (b - be * a.inverse() * al).inverse();
  c.require(sol[0] == x, "x = " + sol[0].to_string());
  c.require(sol[1] == eta, "eta = " + sol[1].to_string());
  c.require(g(0, 0) * sol[0] + g(0, 1) * sol[1] == cc && g(1, 0) * sol[0] + g(1, 1) * sol[1] == ga,
            "solution does not satisfy g v = b");
  c.detail << "x = (c - al b^-1 ga)/(a - al b^-1 be), eta = (ga - be a^-1 c)/(b - be a^-1 al)";
}

// ---- 3 -------------------------------------------------------------------

void super_jacobi_sweep(Check& c) {
  std::size_t cases = 0, ok = 0;
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::size_t q = 1; q <= 3; ++q) {
      const SuperMatrix a = generic_square(p, q, SquareParam::Factored);
      for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t s = 0; s < q; ++s) {
          ++cases;
          const JacobiReport rep = super_jacobi_check(a, r, s);
          if (rep.verified) ++ok;
          std::ostringstream what;
          what << "p=" << p << " q=" << q << " r=" << r << " s=" << s << " t=" << rep.sign_exponent;
          c.require(rep.verified, what.str());
        }
      }
    }
  }
  c.detail << ok << "/" << cases << " cases with t = r(p+1)+s(q+1)";
}

// ---- 4 -------------------------------------------------------------------

void sl11_corpus(Check& c) {
  std::size_t total = 0, ok = 0;
  RelationVerifier verifier(VerifyOptions{VerifyMode::Symbolic, 0, 0, 0});
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::size_t q = 1; q <= 3; ++q) {
      for (const Relation& rel : sl11_plucker_relations(p, q)) {
        ++total;
        const Certificate cert = verifier.verify(rel);
        if (cert.verified()) ++ok;
        c.require(cert.verified(), rel.to_string() + " is " + verdict_name(cert.verdict));
      }
    }
  }
  c.require(total > 0, "empty corpus");
  c.detail << ok << "/" << total << " instances expand to 0";
}

// ---- 5 -------------------------------------------------------------------

std::multiset<std::string> relation_texts(const std::vector<Relation>& rels) {
  std::multiset<std::string> out;
  for (const auto& r : rels) out.insert(r.to_string());
  return out;
}

void slrs_corpus(Check& c) {
  std::vector<std::string> parts;
  RelationVerifier verifier(VerifyOptions{VerifyMode::Symbolic, 0, 0, 0});
  for (const MatrixShape shape : {MatrixShape{2, 1, 3, 2}, MatrixShape{1, 2, 2, 3}, MatrixShape{2, 2, 3, 3}}) {
    std::size_t total = 0, ok = 0;
    for (const Relation& rel : slrs_plucker_relations(shape)) {
      ++total;
      const Certificate cert = verifier.verify(rel);
      if (cert.verified()) ++ok;
      c.require(cert.verified(), shape_name(shape) + " " + rel.to_string() + " is " + verdict_name(cert.verdict));
    }
    c.require(total > 0, "no relations at " + shape_name(shape));
    parts.push_back(shape_name(shape) + " " + std::to_string(ok) + "/" + std::to_string(total));
  }

  const Family gsp[4] = {Family::Gsp1, Family::Gsp2, Family::Gsp3, Family::Gsp4};
  const Family sp[4] = {Family::Sp1, Family::Sp2, Family::Sp3, Family::Sp4};
  std::size_t compared = 0;
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::size_t q = 1; q <= 3; ++q) {
      for (int k = 0; k < 4; ++k) {
        const auto general = relation_texts(slrs_family(gsp[k], {1, 1, p, q}));
        const auto special = relation_texts(sl11_family(sp[k], p, q));
        compared += special.size();
        c.require(general == special, std::string(family_name(gsp[k])) + " differs from " + family_name(sp[k]) +
                                          " at p=" + std::to_string(p) + " q=" + std::to_string(q));
      }
    }
  }
  parts.push_back("(1|1) term-identical to sp on " + std::to_string(compared) + " instances");
  c.detail << join(parts, ", ");
}

// ---- 6 -------------------------------------------------------------------

void fft_sweep(Check& c) {
  std::size_t shapes = 0, entries = 0;
  for (std::size_t r = 0; r <= 3; ++r) {
    for (std::size_t s = 0; r + s <= 3; ++s) {
      if (r == 0) continue;  // the first column is divided by the head minor
      for (std::size_t p = r; p <= 5; ++p) {
        for (std::size_t q = s; p + q <= 5; ++q) {
          const MatrixShape shape{r, s, p, q};
          auto g = generic_matrix(r, s, p, q);
          const FftDecomposition d = fft_decompose(g.matrix, shape);
          ++shapes;
          c.require(d.product_matches, shape_name(shape) + ": A != A~ B");
          c.require(d.unimodular, shape_name(shape) + ": Ber A~ = " + d.ber_a_tilde.to_string());
          for (const FftEntryReport& e : verify_fft_entries(g.matrix, shape, d)) {
            ++entries;
            c.require(e.matches, shape_name(shape) + " " + e.block + "(" + std::to_string(e.row) + "," +
                                     std::to_string(e.col) + ") " + e.note);
          }
        }
      }
    }
  }
  c.detail << shapes << " shapes (r >= 1), " << entries << " entries of B match their minor formulas";
}

// ---- 7 -------------------------------------------------------------------

// Plain minors of both kinds, fake-I minors (one odd column in an even slot,
// Ber) and fake-II minors (one even column in an odd slot, Ber*).
std::vector<MinorSymbol> every_minor(const MatrixShape& shape) {
  std::vector<std::vector<std::size_t>> even_sets, odd_sets;
  std::function<void(std::size_t, std::size_t, std::size_t, std::vector<std::size_t>&, std::vector<std::vector<std::size_t>>&)>
      choose = [&](std::size_t from, std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
        if (cur.size() == k) {
          out.push_back(cur);
          return;
        }
        for (std::size_t v = from; v <= n; ++v) {
          cur.push_back(v);
          choose(v + 1, n, k, cur, out);
          cur.pop_back();
        }
      };
  std::vector<std::size_t> cur;
  choose(1, shape.p, shape.r, cur, even_sets);
  choose(1, shape.q, shape.s, cur, odd_sets);

  std::vector<MinorSymbol> out;
  auto keep = [&](const MinorSymbol& m) {
    try {
      m.validate(shape);
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    } catch (const std::invalid_argument&) {
    }
  };
  for (const auto& e : even_sets) {
    for (const auto& o : odd_sets) {
      for (bool starred : {false, true}) keep(MinorSymbol::plain(starred, e, o));
      const MinorSymbol base = MinorSymbol::plain(false, e, o);
      for (std::size_t slot = 0; slot < base.even_slots.size(); ++slot) {
        for (std::size_t lam = 1; lam <= shape.q; ++lam) {
          MinorSymbol m = base;
          m.even_slots[slot] = ColumnLabel{Parity::Odd, lam};
          keep(m);
        }
      }
      for (std::size_t slot = 0; slot < base.odd_slots.size(); ++slot) {
        for (std::size_t j = 1; j <= shape.p; ++j) {
          MinorSymbol m = base;
          m.starred = true;
          m.odd_slots[slot] = ColumnLabel{Parity::Even, j};
          keep(m);
        }
      }
    }
  }
  return out;
}

SuperMatrix random_coordinates(const ContextPtr& ctx, const MatrixShape& shape, Rng& rng) {
  SuperMatrix a(ctx, {shape.r, shape.s}, {shape.p, shape.q});
  std::size_t next = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const bool odd = (i < shape.r) != (j < shape.p);
      const Rational v = rng.nonzero_rational(97, 13);
      a(i, j) = odd ? Scalar::odd_generator(ctx, next++).scaled(v) : Scalar::constant(ctx, v);
    }
  }
  return a;
}

void invariance(Check& c) {
  const std::vector<MatrixShape> shapes{{1, 1, 2, 2}, {2, 1, 3, 2}, {1, 2, 2, 3}, {1, 1, 3, 3}};
  constexpr std::size_t kTrials = 20;
  std::size_t compared = 0, undefined = 0;
  for (std::size_t t = 0; t < kTrials; ++t) {
    const MatrixShape shape = shapes[t % shapes.size()];
    Rng rng(trial_seed(2024, t));
    const std::size_t coord_odd = shape.r * shape.q + shape.s * shape.p;
    const ContextPtr ctx = grassmann_context(coord_odd + unimodular_odd_count(shape.r, shape.s));
    const SuperMatrix a = random_coordinates(ctx, shape, rng);
    const SuperMatrix g = random_unimodular(ctx, shape.r, shape.s, coord_odd, rng);
    c.require(berezinian(g).is_one(), "group element with Ber != 1 at trial " + std::to_string(t));
    CoordinateModel before = CoordinateModel::from_matrix(a);
    CoordinateModel after = CoordinateModel::from_matrix(g * a);
    for (const MinorSymbol& m : every_minor(shape)) {
      try {
        const Scalar lhs = before.minor(m);
        const Scalar rhs = after.minor(m);
        ++compared;
        c.require(lhs == rhs, m.to_string() + " moved at trial " + std::to_string(t) + " " + shape_name(shape));
      } catch (const std::domain_error&) {
        ++undefined;  // a pivot block of this minor is singular at this point
      }
    }
  }
  c.detail << kTrials << " group elements, " << compared << " minor comparisons exact";
  if (undefined) c.detail << " (" << undefined << " undefined at the sampled point)";
}

// ---- 8 -------------------------------------------------------------------

std::vector<InvariantPolynomial> words_up_to(const std::vector<MinorSymbol>& gens, unsigned degree) {
  std::vector<InvariantPolynomial> out{InvariantPolynomial::constant(Rational(1))};
  std::vector<InvariantPolynomial> frontier = out;
  std::vector<std::size_t> last{0};
  for (unsigned d = 1; d <= degree; ++d) {
    std::vector<InvariantPolynomial> next;
    std::vector<std::size_t> next_last;
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      for (std::size_t g = (d == 1 ? 0 : last[k]); g < gens.size(); ++g) {
        // odd generators square to zero; skip repeats
        if (d > 1 && g == last[k] && generator_is_odd(gens[g])) continue;
        next.push_back(frontier[k] * InvariantPolynomial::generator(gens[g]));
        next_last.push_back(g);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
    last = std::move(next_last);
  }
  return out;
}

struct SftTally {
  std::size_t checked = 0, agree = 0, sound = 0, members = 0;
};

void sft_membership(Check& c, std::size_t p, std::size_t q, SftTally& tally) {
  const auto gens = all_generators(p, q);
  std::vector<InvariantPolynomial> corpus = words_up_to(gens, 3);

  const auto relations = sl11_relation_polynomials(p, q);
  std::vector<InvariantPolynomial> sp1;
  for (const auto& [rel, poly] : relations) {
    corpus.push_back(poly);
    if (rel.family == Family::Sp1) sp1.push_back(poly);
  }
  for (const auto& g : gens) {
    for (const auto& r : sp1) corpus.push_back(InvariantPolynomial::generator(g) * r);
  }

  Rng rng(trial_seed(6400 + 10 * p + q, 0));
  const auto words = words_up_to(gens, 3);
  for (int k = 0; k < 300; ++k) {
    InvariantPolynomial f;
    const std::size_t n = 2 + rng.below(3);
    for (std::size_t t = 0; t < n; ++t) f = f + words[rng.below(words.size())].scaled(rng.nonzero_rational());
    corpus.push_back(f);
    // a member of the ideal plus a standard word: in the ideal exactly when the word part vanishes
    const auto& rel = relations[rng.below(relations.size())].second;
    const auto& w = words[rng.below(words.size())];
    corpus.push_back(w * rel.scaled(rng.nonzero_rational()));
    corpus.push_back(w * rel + words[rng.below(words.size())]);
  }

  for (const auto& f : corpus) {
    const MembershipResult r = normal_form_membership(f, p, q);
    ++tally.checked;
    if (r.agrees()) ++tally.agree;
    if (r.in_ideal) ++tally.members;
    c.require(r.agrees(), "oracles disagree on " + f.to_string() + " at p=" + std::to_string(p) +
                              " q=" + std::to_string(q));
    const bool sound = pi_laurent(f, p, q) == pi_laurent(r.normal_form, p, q);
    if (sound) ++tally.sound;
    c.require(sound, "rewriting changed the image of " + f.to_string());
  }
}

void sft_presentation(Check& c) {
  SftTally tally;
  std::size_t full_rank = 0, distinct = 0, shapes = 0, products = 0;
  std::string collision;
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::size_t q = 1; q <= 3; ++q) {
      ++shapes;
      sft_membership(c, p, q, tally);

      const auto sps = enumerate_standard_products(p, q, 3);
      products += sps.size();
      std::vector<InvariantPolynomial> polys;
      for (const auto& sp : sps) polys.push_back(sp.to_polynomial());
      const std::size_t rank = image_rank(polys, p, q);
      if (rank == sps.size()) ++full_rank;
      c.require(rank == sps.size(), "standard products dependent at p=" + std::to_string(p) + " q=" + std::to_string(q));

      const IndependenceReport rep = independence_check(sps, p, q);
      if (rep.distinct_leading_terms) {
        ++distinct;
      } else if (rep.collision && collision.empty()) {
        const auto [i, j] = *rep.collision;
        collision = "p=" + std::to_string(p) + " q=" + std::to_string(q) + ": " + sps[i].to_string() + " and " +
                    sps[j].to_string() + " share " + rep.leading_terms[i].to_string();
      }
      c.require(rep.distinct_leading_terms,
                "leading terms collide at p=" + std::to_string(p) + " q=" + std::to_string(q));
    }
  }
  c.detail << "membership agrees " << tally.agree << "/" << tally.checked << " (" << tally.members
           << " in ideal), rewriting sound " << tally.sound << "/" << tally.checked << ", images of " << products
           << " standard products independent (exact rank) at " << full_rank << "/" << shapes
           << " shapes, distinct leading terms at " << distinct << "/" << shapes << " shapes";
  if (!collision.empty()) c.detail << "; " << collision;
}

// ---- 9 -------------------------------------------------------------------

Scalar random_homogeneous(const ContextPtr& ctx, bool odd, Rng& rng) {
  Scalar out(ctx);
  const std::size_t terms = 1 + rng.below(3);
  for (std::size_t t = 0; t < terms; ++t) {
    Scalar term = Scalar::constant(ctx, rng.nonzero_rational());
    for (std::size_t v = 0; v < ctx->even_count(); ++v) {
      const auto e = rng.below(3);
      for (std::uint64_t k = 0; k < e; ++k) term = term * Scalar::even_generator(ctx, v);
    }
    std::vector<std::size_t> picks;
    for (std::size_t v = 0; v < ctx->odd_count(); ++v) {
      if (rng.below(2)) picks.push_back(v);
    }
    if ((picks.size() % 2 == 1) != odd) {
      if (picks.empty()) {
        picks.push_back(rng.below(ctx->odd_count()));
      } else {
        picks.pop_back();
      }
    }
    for (std::size_t v : picks) term = term * Scalar::odd_generator(ctx, v);
    out = out + term;
  }
  if (rng.below(2)) {
    const Scalar den = Scalar::even_generator(ctx, rng.below(ctx->even_count())) +
                       Scalar::constant(ctx, rng.nonzero_rational());
    out = out * den.inverse();
  }
  return out;
}

SuperMatrix random_square_in(const ContextPtr& ctx, std::size_t p, std::size_t q, std::size_t& next, Rng& rng) {
  SuperMatrix a(ctx, {p, q}, {p, q});
  while (true) {
    std::size_t k = next;
    for (std::size_t i = 0; i < p + q; ++i) {
      for (std::size_t j = 0; j < p + q; ++j) {
        const bool odd = (i < p) != (j < p);
        const Rational v = rng.nonzero_rational(9, 5);
        a(i, j) = odd ? Scalar::odd_generator(ctx, k++).scaled(v) : Scalar::constant(ctx, v);
      }
    }
    const bool invertible = (p == 0 || !det_rows(a.block(Parity::Even, Parity::Even)).body_scalar().is_zero()) &&
                            (q == 0 || !det_rows(a.block(Parity::Odd, Parity::Odd)).body_scalar().is_zero());
    if (invertible) {
      next = k;
      return a;
    }
  }
}

void kernel_properties(Check& c) {
  constexpr std::size_t kInstances = 100;
  Rng rng(trial_seed(9, 0));

  const ContextPtr sctx = RingContext::create({"u", "v"}, {"t1", "t2", "t3", "t4", "t5"});
  std::size_t supercomm = 0;
  for (std::size_t k = 0; k < kInstances; ++k) {
    const bool pa = rng.below(2), pb = rng.below(2);
    const Scalar a = random_homogeneous(sctx, pa, rng), b = random_homogeneous(sctx, pb, rng);
    const Scalar ba = (pa && pb) ? -(b * a) : b * a;
    c.require(a * b == ba, "supercommutativity fails for " + a.to_string() + " and " + b.to_string());
    if (pa) c.require((a * a).is_zero(), "odd element with nonzero square: " + a.to_string());
    if (a * b == ba) ++supercomm;
  }

  const std::pair<std::size_t, std::size_t> sizes[] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
  std::size_t mult = 0, star = 0, udl = 0;
  for (std::size_t k = 0; k < kInstances; ++k) {
    const auto [p, q] = sizes[k % 4];
    const ContextPtr ctx = grassmann_context(4 * p * q);
    std::size_t next = 0;
    const SuperMatrix m = random_square_in(ctx, p, q, next, rng);
    const SuperMatrix n = random_square_in(ctx, p, q, next, rng);

    const bool m_ok = berezinian(m * n) == berezinian(m) * berezinian(n);
    c.require(m_ok, "Ber(MN) != Ber M Ber N at " + std::to_string(p) + "|" + std::to_string(q));
    if (m_ok) ++mult;

    const bool s_ok = berezinian_star(m) == berezinian(inverse(m));
    c.require(s_ok, "Ber* M != Ber M^-1 at " + std::to_string(p) + "|" + std::to_string(q));
    if (s_ok) ++star;

    const UdlFactors f = udl_decompose(m);
    const bool u_ok = f.upper * f.diagonal * f.lower == m;
    c.require(u_ok, "UDL factors do not reassemble at " + std::to_string(p) + "|" + std::to_string(q));
    if (u_ok) ++udl;
  }
  c.detail << "supercommutativity " << supercomm << "/" << kInstances << ", Ber multiplicative " << mult << "/"
           << kInstances << ", Ber* = Ber of inverse " << star << "/" << kInstances << ", UDL reassembly " << udl
           << "/" << kInstances;
}

// ---- 10 ------------------------------------------------------------------

void mutation_soundness(Check& c) {
  std::vector<Relation> corpus;
  auto add = [&](std::vector<Relation> rels) { corpus.insert(corpus.end(), rels.begin(), rels.end()); };
  add(classical_plucker_relations(2, 4));
  add(classical_plucker_relations(2, 5));
  add(classical_plucker_relations(3, 5));
  add(sl11_plucker_relations(2, 2));
  add(sl11_plucker_relations(3, 3));
  add(slrs_plucker_relations({2, 1, 3, 2}));
  add(slrs_plucker_relations({1, 2, 2, 3}));

  MutationOptions opt;
  opt.seed = 7;
  opt.trials = 10;
  auto stats = mutation_campaign(corpus, opt);
  const auto jacobi = jacobi_mutation_campaign(4, 2, opt);
  stats.insert(stats.end(), jacobi.begin(), jacobi.end());

  std::vector<std::string> parts;
  std::size_t equivalent = 0;
  for (const MutationStats& s : stats) {
    std::ostringstream os;
    os << family_name(s.family) << " " << s.falsified << "/" << s.effective;
    parts.push_back(os.str());
    equivalent += s.equivalent;
    c.require(s.effective > 0, std::string("no effective mutants for ") + family_name(s.family));
    c.require(s.rate() >= 0.95, std::string(family_name(s.family)) + " caught " + std::to_string(s.falsified) + "/" +
                                    std::to_string(s.effective));
  }
  c.detail << "falsified within 10 trials: " << join(parts, ", ") << "; " << equivalent
           << " equivalent mutants (still true identities) redrawn";
}

struct Entry {
  const char* title;
  void (*run)(Check&);
};

const Entry kEntries[kCriterionCount] = {
    {"classical Plucker relation on 2x4", classical_two_by_four},
    {"super Cramer rule on GL(1|1)", super_cramer_example},
    {"super Jacobi identity, r<p<=3, s<q<=3", super_jacobi_sweep},
    {"SL(1|1) super Plucker corpus, p,q<=3", sl11_corpus},
    {"SL(r|s) super Plucker relations", slrs_corpus},
    {"FFT decomposition, r+s<=3, p+q<=5", fft_sweep},
    {"invariance of super and fake minors", invariance},
    {"SFT presentation for SL(1|1), degree<=3", sft_presentation},
    {"algebra kernel properties", kernel_properties},
    {"mutation soundness", mutation_soundness},
};

}  // namespace

std::vector<int> all_criteria() {
  std::vector<int> ids;
  for (int k = 1; k <= kCriterionCount; ++k) ids.push_back(k);
  return ids;
}

std::string criterion_title(int id) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  return kEntries[id - 1].title;
}

Outcome run_criterion(int id) {
  Outcome o;
  o.id = id;
  o.title = criterion_title(id);
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    kEntries[id - 1].run(c);
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail << "aborted: " << e.what();
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.passed = c.passed;
  o.detail = c.detail.str();
  return o;
}

std::string format_line(const Outcome& o) {
  std::ostringstream os;
  os << (o.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << o.id << "  " << o.title << " (" << std::fixed
     << std::setprecision(1) << o.seconds << " s): " << o.detail;
  return os.str();
}

bool run_suite(const std::vector<int>& ids, std::ostream& os) {
  bool all = true;
  for (int id : ids) {
    const Outcome o = run_criterion(id);
    os << format_line(o) << std::endl;
    all = all && o.passed;
  }
  return all;
}

}  // namespace superinv::acceptance
