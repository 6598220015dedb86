#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "acceptance.hpp"
#include "emit.hpp"
#include "parse.hpp"
#include "superinv/budget.hpp"
#include "superinv/minors.hpp"
#include "superinv/relations.hpp"
#include "superinv/sft11.hpp"

namespace superinv::cli {

namespace {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::uint64_t op_cap = 0;
  std::string emit = "text";
  std::string out_path;

  // ber, cramer
  std::string matrix, in_path, rhs;
  std::size_t even = 0;
  bool generic = false, example = false;

  std::size_t r = 1, s = 1, p = 2, q = 2, n = 3;
  std::string mode = "super";
  std::string param = "factored";
  std::string mutation = "none";

  // plucker
  std::string group = "sl11";
  std::string family;
  std::string verify_mode = "symbolic";
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::size_t cap = 0;
  std::string gsp4 = "corrected";
  bool no_verify = false;

  // sft11
  std::string expr;
  unsigned degree = 3;

  std::vector<int> only;
};

EmitFormat emit_format(const Options& o) {
  const auto f = format_from_name(o.emit);
  if (!f) throw InputError("unknown emit format: " + o.emit);
  return *f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_artifact(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw InputError("cannot write " + o.out_path);
  f << text;
  if (!f) throw InputError("write failed: " + o.out_path);
}

// Square supermatrix of signature even|odd from matrix text over x, y, al, be.
SuperMatrix matrix_from_text(const std::string& text, std::size_t even) {
  auto rows = parse_rows(text);
  std::vector<const Expr*> all;
  for (const auto& row : rows)
    for (const auto& e : row) all.push_back(&e);
  if (rows.empty()) throw InputError("empty matrix");
  const std::size_t n = rows.size();
  for (const auto& row : rows) {
    if (row.size() != n) throw InputError("matrix must be square; got a row of length " + std::to_string(row.size()));
  }
  if (even > n) throw InputError("--even exceeds the matrix size");
  const ContextPtr ctx = context_for(all);
  SuperMatrix m(ctx, {even, n - even}, {even, n - even});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = to_scalar(rows[i][j], ctx);
  return m;
}

// ---- ber ------------------------------------------------------------------

int cmd_ber(const Options& o, std::ostream& out) {
  SuperMatrix m;
  if (o.generic) {
    m = generic_square(o.p, o.q, SquareParam::Raw);
  } else {
    const std::string text = !o.in_path.empty() ? read_file(o.in_path) : o.matrix;
    if (text.empty()) throw InputError("ber needs --matrix, --in or --generic");
    m = matrix_from_text(text, o.even);
  }
  const MatrixKind kind = classify(m);
  std::optional<Scalar> ber, ber_star;
  std::string ber_note, star_note;
  try {
    ber = berezinian(m);
  } catch (const ResourceCapExceeded&) {
    throw;
  } catch (const std::exception& e) {
    ber_note = e.what();
  }
  try {
    ber_star = berezinian_star(m);
  } catch (const ResourceCapExceeded&) {
    throw;
  } catch (const std::exception& e) {
    star_note = e.what();
  }
  if (!ber && !ber_star) throw InputError("Ber and Ber* are both undefined: " + ber_note);

  if (emit_format(o) == EmitFormat::Json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = kind_name(kind);
    j["ber"] = ber ? Json(ber->to_string()) : Json(nullptr);
    j["ber_star"] = ber_star ? Json(ber_star->to_string()) : Json(nullptr);
    out << dump(j);
  } else {
    out << "kind: " << kind_name(kind) << "\n";
    out << "Ber = " << (ber ? ber->to_string() : "undefined (" + ber_note + ")") << "\n";
    out << "Ber* = " << (ber_star ? ber_star->to_string() : "undefined (" + star_note + ")") << "\n";
  }
  return kOk;
}

// ---- cramer ---------------------------------------------------------------

int cmd_cramer(const Options& o, std::ostream& out) {
  SuperMatrix m;
  std::vector<Scalar> b;
  std::vector<std::string> names;
  if (o.example) {
    const ContextPtr ctx = RingContext::create({"a", "b", "c"}, {"al", "be", "ga"});
    auto one = [&](const Scalar& v) {
      ScalarMatrix s(ctx, 1, 1);
      s(0, 0) = v;
      return s;
    };
    m = SuperMatrix::from_blocks(one(Scalar::even_generator(ctx, 0)), one(Scalar::odd_generator(ctx, 0)),
                                 one(Scalar::odd_generator(ctx, 1)), one(Scalar::even_generator(ctx, 1)));
    b = {Scalar::even_generator(ctx, 2), Scalar::odd_generator(ctx, 2)};
    names = {"x", "eta"};
  } else {
    if (o.matrix.empty() || o.rhs.empty()) throw InputError("cramer needs --matrix and --rhs, or --example");
    auto rhs_rows = parse_rows(o.rhs);
    std::vector<Expr> rhs_exprs;
    for (auto& row : rhs_rows) {
      if (row.size() != 1) throw InputError("--rhs is a column: one entry per row");
      rhs_exprs.push_back(std::move(row[0]));
    }
    auto rows = parse_rows(o.matrix);
    std::vector<const Expr*> all;
    for (const auto& row : rows)
      for (const auto& e : row) all.push_back(&e);
    for (const auto& e : rhs_exprs) all.push_back(&e);
    const std::size_t n = rows.size();
    if (n == 0) throw InputError("empty matrix");
    for (const auto& row : rows) {
      if (row.size() != n) throw InputError("matrix must be square");
    }
    if (rhs_exprs.size() != n) throw InputError("--rhs length does not match the matrix");
    if (o.even > n) throw InputError("--even exceeds the matrix size");
    const ContextPtr ctx = context_for(all);
    m = SuperMatrix(ctx, {o.even, n - o.even}, {o.even, n - o.even});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = to_scalar(rows[i][j], ctx);
    for (const auto& e : rhs_exprs) b.push_back(to_scalar(e, ctx));
    for (std::size_t k = 0; k < n; ++k) names.push_back("v" + std::to_string(k + 1));
  }

  const std::vector<Scalar> sol = super_cramer_solve(m, b);
  bool ok = true;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Scalar acc(m.context());
    for (std::size_t j = 0; j < m.cols(); ++j) acc = acc + m(i, j) * sol[j];
    ok = ok && acc == b[i];
  }
  if (emit_format(o) == EmitFormat::Json) {
    Json j;
    j["schema"] = kSchemaVersion;
    Json s = Json::object();
    for (std::size_t k = 0; k < sol.size(); ++k) s[names[k]] = sol[k].to_string();
    j["solution"] = std::move(s);
    j["verified"] = ok;
    out << dump(j);
  } else {
    for (std::size_t k = 0; k < sol.size(); ++k) out << names[k] << " = " << sol[k].to_string() << "\n";
    out << "check M v = b: " << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? kOk : kFalsified;
}

// ---- jacobi ---------------------------------------------------------------

JacobiMutation mutation_from_name(const std::string& name) {
  for (JacobiMutation m : {JacobiMutation::None, JacobiMutation::FlipSign, JacobiMutation::ShiftEvenRow,
                           JacobiMutation::ShiftOddRow, JacobiMutation::ShiftEvenCol, JacobiMutation::ShiftOddCol}) {
    if (name == jacobi_mutation_name(m)) return m;
  }
  throw InputError("unknown mutation: " + name);
}

int cmd_jacobi(const Options& o, std::ostream& out) {
  const JacobiMutation mut = mutation_from_name(o.mutation);
  JacobiReport rep;
  if (o.mode == "classical") {
    if (o.n == 0 || o.r >= o.n) throw InputError("classical Jacobi needs 0 <= r < n");
    const SuperMatrix g = generic_square(o.n, 0, SquareParam::Raw);
    rep = jacobi_check(g.block(Parity::Even, Parity::Even), o.r, mut);
  } else if (o.mode == "super") {
    if (o.r >= o.p || o.s >= o.q) throw InputError("super Jacobi needs r < p and s < q");
    SquareParam param;
    if (o.param == "factored") {
      param = SquareParam::Factored;
    } else if (o.param == "raw") {
      param = SquareParam::Raw;
    } else {
      throw InputError("unknown --param: " + o.param);
    }
    rep = super_jacobi_check(generic_square(o.p, o.q, param), o.r, o.s, mut);
  } else {
    throw InputError("unknown --mode: " + o.mode);
  }

  if (emit_format(o) == EmitFormat::Json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["mode"] = o.mode;
    j["sign_exponent"] = rep.sign_exponent;
    j["lhs"] = rep.lhs.to_string();
    j["rhs"] = rep.rhs.to_string();
    j["verified"] = rep.verified;
    out << dump(j);
  } else {
    out << "t = " << rep.sign_exponent << "\n";
    out << "verified: " << (rep.verified ? "true" : "false") << "\n";
    if (!rep.verified) {
      out << "lhs: " << rep.lhs.to_string() << "\n";
      out << "rhs: " << rep.rhs.to_string() << "\n";
    }
  }
  return rep.verified ? kOk : kFalsified;
}

// ---- plucker --------------------------------------------------------------

int cmd_plucker(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<Relation> rels;
  std::optional<Family> only;
  if (!o.family.empty()) {
    only = family_from_name(o.family);
    if (!only) throw InputError("unknown family: " + o.family);
  }
  if (o.group == "classical") {
    if (o.r > o.p || o.r == 0) throw InputError("classical relations need 1 <= r <= p");
    rels = classical_plucker_relations(o.r, o.p);
  } else if (o.group == "sl11") {
    if (o.p == 0 || o.q == 0) throw InputError("sl11 relations need p, q >= 1");
    rels = only ? sl11_family(*only, o.p, o.q) : sl11_plucker_relations(o.p, o.q);
  } else if (o.group == "slrs") {
    const MatrixShape shape{o.r, o.s, o.p, o.q};
    shape.validate();
    GspOptions g;
    g.instance_cap = o.cap;
    if (o.gsp4 == "printed") {
      g.gsp4 = Gsp4Exponent::Printed;
    } else if (o.gsp4 != "corrected") {
      throw InputError("unknown --gsp4: " + o.gsp4);
    }
    rels = only ? slrs_family(*only, shape, g) : slrs_plucker_relations(shape, g);
  } else {
    throw InputError("unknown --group: " + o.group);
  }
  if (only) {
    std::erase_if(rels, [&](const Relation& r) { return r.family != *only; });
  }

  const auto mode = mode_from_name(o.verify_mode);
  if (!mode) throw InputError("unknown --mode: " + o.verify_mode);
  std::size_t verified = 0, falsified = 0, undefined = 0, capped = 0;
  if (!o.no_verify) {
    RelationVerifier verifier(VerifyOptions{*mode, o.trials, o.seed, o.op_cap});
    for (Relation& r : rels) {
      r.certificate = verifier.verify(r);
      switch (r.certificate.verdict) {
        case Verdict::Verified: ++verified; break;
        case Verdict::Falsified: ++falsified; break;
        case Verdict::CapExceeded: ++capped; break;
        default: ++undefined; break;
      }
    }
  }

  std::string artifact;
  switch (emit_format(o)) {
    case EmitFormat::Json: artifact = relations_json(rels); break;
    case EmitFormat::Latex: artifact = relations_latex(rels); break;
    case EmitFormat::Text: artifact = relations_text(rels); break;
  }
  write_artifact(o, artifact, out);
  std::ostream& summary = (o.out_path.empty() && emit_format(o) != EmitFormat::Text) ? err : out;
  summary << rels.size() << " relations: " << verified << " verified, " << falsified << " falsified, " << undefined
          << " undefined, " << capped << " over the resource cap\n";

  if (o.no_verify) return kOk;
  if (falsified || undefined) return kFalsified;
  if (capped) return kResourceCap;
  return kOk;
}

// ---- fft ------------------------------------------------------------------

int cmd_fft(const Options& o, std::ostream& out) {
  const MatrixShape shape{o.r, o.s, o.p, o.q};
  shape.validate();
  auto g = generic_matrix(o.r, o.s, o.p, o.q);
  const FftDecomposition d = fft_decompose(g.matrix, shape);
  const auto entries = verify_fft_entries(g.matrix, shape, d);
  bool ok = d.product_matches && d.unimodular;
  for (const auto& e : entries) ok = ok && e.matches;

  if (emit_format(o) == EmitFormat::Json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["shape"] = {o.r, o.s, o.p, o.q};
    j["product_matches"] = d.product_matches;
    j["ber_a_tilde"] = d.ber_a_tilde.to_string();
    Json arr = Json::array();
    for (const auto& e : entries) {
      Json t;
      t["block"] = e.block;
      t["row"] = e.row;
      t["col"] = e.col;
      t["formula"] = e.formula;
      t["matches"] = e.matches;
      if (!e.note.empty()) t["note"] = e.note;
      arr.push_back(std::move(t));
    }
    j["entries"] = std::move(arr);
    j["verified"] = ok;
    out << dump(j);
  } else {
    out << "A = A~ B: " << (d.product_matches ? "ok" : "FAILED") << "\n";
    out << "Ber A~ = " << d.ber_a_tilde.to_string() << "\n";
    for (const auto& e : entries) {
      out << e.block << "(" << e.row << "," << e.col << ") = " << e.formula << (e.matches ? "" : "  MISMATCH");
      if (!e.note.empty()) out << "  [" << e.note << "]";
      out << "\n";
    }
  }
  return ok ? kOk : kFalsified;
}

// ---- sft11 ----------------------------------------------------------------

InvariantPolynomial invariant_from(const Options& o) {
  if (o.expr.empty()) throw InputError("--expr is required");
  if (o.p == 0 || o.q == 0) throw InputError("--p and --q must be positive");
  return to_invariant(parse_expression(o.expr), o.p, o.q);
}

int cmd_normal_form(const Options& o, std::ostream& out) {
  const InvariantPolynomial f = invariant_from(o);
  const MembershipResult r = normal_form_membership(f, o.p, o.q);
  switch (emit_format(o)) {
    case EmitFormat::Json: out << dump(membership_json(f, r, o.p, o.q)); break;
    case EmitFormat::Latex: out << membership_latex(f, r); break;
    case EmitFormat::Text:
      out << "in ideal: " << (r.in_ideal ? "true" : "false") << "\n";
      out << "normal form: " << r.normal_form.to_string() << "\n";
      out << "image is zero: " << (r.pi_zero ? "true" : "false") << "\n";
      break;
  }
  return r.agrees() ? kOk : kFalsified;
}

int cmd_standard(const Options& o, std::ostream& out) {
  if (o.p == 0 || o.q == 0) throw InputError("--p and --q must be positive");
  const auto products = enumerate_standard_products(o.p, o.q, o.degree);
  std::vector<InvariantPolynomial> polys;
  for (const auto& sp : products) polys.push_back(sp.to_polynomial());
  const std::size_t rank = image_rank(polys, o.p, o.q);
  const IndependenceReport rep = independence_check(products, o.p, o.q);

  if (emit_format(o) == EmitFormat::Json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["p"] = o.p;
    j["q"] = o.q;
    j["degree"] = o.degree;
    Json arr = Json::array();
    for (std::size_t k = 0; k < products.size(); ++k) {
      Json t;
      t["product"] = products[k].to_string();
      t["leading_term"] = rep.leading_terms[k].to_string();
      arr.push_back(std::move(t));
    }
    j["products"] = std::move(arr);
    j["rank"] = rank;
    j["distinct_leading_terms"] = rep.distinct_leading_terms;
    if (rep.collision) j["collision"] = {rep.collision->first, rep.collision->second};
    out << dump(j);
  } else {
    for (std::size_t k = 0; k < products.size(); ++k) {
      out << products[k].to_string() << "    Lt = " << rep.leading_terms[k].to_string() << "\n";
    }
    out << products.size() << " standard products, rank of images " << rank << "\n";
    out << "distinct leading terms: " << (rep.distinct_leading_terms ? "true" : "false") << "\n";
    if (rep.collision) {
      const auto [a, b] = *rep.collision;
      out << "collision: " << products[a].to_string() << " and " << products[b].to_string() << "\n";
    }
  }
  return (rank == products.size() && rep.distinct_leading_terms) ? kOk : kFalsified;
}

int cmd_leading_term(const Options& o, std::ostream& out) {
  const InvariantPolynomial f = invariant_from(o);
  const LaurentExterior image = pi_laurent(f, o.p, o.q);
  if (image.is_zero()) throw InputError("the image is zero and has no leading term");
  const BasisMonomial lt = leading_term(image);
  if (emit_format(o) == EmitFormat::Json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["image"] = image.to_string();
    j["leading_term"] = lt.to_string();
    out << dump(j);
  } else {
    out << "image: " << image.to_string() << "\n";
    out << "leading term: " << lt.to_string() << "\n";
  }
  return kOk;
}

// ---- selftest -------------------------------------------------------------

int cmd_selftest(const Options& o, std::ostream& out) {
  std::vector<int> ids = o.only.empty() ? acceptance::all_criteria() : o.only;
  for (int id : ids) {
    if (id < 1 || id > acceptance::kCriterionCount) throw InputError("no acceptance criterion " + std::to_string(id));
  }
  return acceptance::run_suite(ids, out) ? kOk : kFalsified;
}

void add_emit(CLI::App* sub, Options& o, bool latex) {
  sub->add_option("--emit", o.emit, latex ? "text, json or latex" : "text or json")
      ->check(latex ? CLI::IsMember({"text", "json", "latex"}) : CLI::IsMember({"text", "json"}));
}

void add_op_cap(CLI::App* sub, Options& o) {
  sub->add_option("--op-cap", o.op_cap, "operation budget (default from SUPERINV_OP_CAP, else 1e7)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Super minors, super Plucker relations and SL(1|1) normal forms"};
  app.name("superinv");
  app.require_subcommand(1);
  Options o;

  auto* ber = app.add_subcommand("ber", "Berezinian and Ber* of a square supermatrix");
  ber->add_option("--matrix", o.matrix, "rows separated by ';', entries by ','");
  ber->add_option("--in", o.in_path, "read the matrix from a file");
  ber->add_option("--even", o.even, "number of even rows (and columns); the rest are odd");
  ber->add_flag("--generic", o.generic, "generic (p|q) matrix");
  ber->add_option("--p", o.p, "even size for --generic");
  ber->add_option("--q", o.q, "odd size for --generic");
  add_emit(ber, o, false);
  add_op_cap(ber, o);

  auto* cramer = app.add_subcommand("cramer", "solve M v = b by the super Cramer rule");
  cramer->add_option("--matrix", o.matrix, "square supermatrix");
  cramer->add_option("--rhs", o.rhs, "column b, entries separated by ';'");
  cramer->add_option("--even", o.even, "number of even rows");
  cramer->add_flag("--example", o.example, "the (1|1) example with entries a, al; be, b and b = (c; ga)");
  add_emit(cramer, o, false);
  add_op_cap(cramer, o);

  auto* jacobi = app.add_subcommand("jacobi", "Jacobi complementary minor identity on a generic matrix");
  jacobi->add_option("--mode", o.mode, "super or classical")->check(CLI::IsMember({"super", "classical"}));
  jacobi->add_option("--p", o.p);
  jacobi->add_option("--q", o.q);
  jacobi->add_option("--r", o.r);
  jacobi->add_option("--s", o.s);
  jacobi->add_option("--n", o.n, "size for classical mode");
  jacobi->add_option("--param", o.param, "factored or raw coordinates")->check(CLI::IsMember({"factored", "raw"}));
  jacobi->add_option("--mutate", o.mutation, "inject a corruption (flip-sign, shift-even-row, ...)");
  add_emit(jacobi, o, false);
  add_op_cap(jacobi, o);

  auto* plucker = app.add_subcommand("plucker", "generate and verify Plucker relations");
  plucker->add_option("--group", o.group, "classical, sl11 or slrs")->check(CLI::IsMember({"classical", "sl11", "slrs"}));
  plucker->add_option("--r", o.r);
  plucker->add_option("--s", o.s);
  plucker->add_option("--p", o.p);
  plucker->add_option("--q", o.q);
  plucker->add_option("--family", o.family, "restrict to one family (sp1..sp4, gsp1..gsp4)");
  plucker->add_option("--mode", o.verify_mode, "symbolic, slice or numeric")
      ->check(CLI::IsMember({"symbolic", "slice", "numeric"}));
  plucker->add_option("--trials", o.trials, "numeric trials per relation");
  plucker->add_option("--seed", o.seed);
  plucker->add_option("--cap", o.cap, "at most this many instances per family (0 = all)");
  plucker->add_option("--gsp4", o.gsp4, "corrected or printed exponent")->check(CLI::IsMember({"corrected", "printed"}));
  plucker->add_flag("--no-verify", o.no_verify, "emit without verifying");
  plucker->add_option("--out", o.out_path, "write relations here instead of stdout");
  add_emit(plucker, o, true);
  add_op_cap(plucker, o);

  auto* fft = app.add_subcommand("fft", "decompose the generic matrix as A~ B and check B against minors");
  fft->add_option("--r", o.r);
  fft->add_option("--s", o.s);
  fft->add_option("--p", o.p);
  fft->add_option("--q", o.q);
  add_emit(fft, o, false);
  add_op_cap(fft, o);

  auto* sft = app.add_subcommand("sft11", "SL(1|1) invariant ring: normal forms and standard products");
  sft->require_subcommand(1);
  auto* nf = sft->add_subcommand("normal-form", "rewrite to standard products and decide ideal membership");
  nf->add_option("--expr", o.expr, "polynomial in X[..|..] and Xs[..|..]")->required();
  nf->add_option("--p", o.p);
  nf->add_option("--q", o.q);
  add_emit(nf, o, true);
  add_op_cap(nf, o);
  auto* standard = sft->add_subcommand("standard", "list standard products with leading terms and rank");
  standard->add_option("--p", o.p);
  standard->add_option("--q", o.q);
  standard->add_option("--degree", o.degree);
  add_emit(standard, o, false);
  add_op_cap(standard, o);
  auto* lt = sft->add_subcommand("leading-term", "leading basis monomial of the image");
  lt->add_option("--expr", o.expr)->required();
  lt->add_option("--p", o.p);
  lt->add_option("--q", o.q);
  add_emit(lt, o, false);
  add_op_cap(lt, o);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--only", o.only, "criterion numbers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    OpBudget budget(o.op_cap ? o.op_cap : op_cap_from_env());
    if (*ber) return cmd_ber(o, out);
    if (*cramer) return cmd_cramer(o, out);
    if (*jacobi) return cmd_jacobi(o, out);
    if (*plucker) return cmd_plucker(o, out, err);
    if (*fft) return cmd_fft(o, out);
    if (*nf) return cmd_normal_form(o, out);
    if (*standard) return cmd_standard(o, out);
    if (*lt) return cmd_leading_term(o, out);
  } catch (const ResourceCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const FuelExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (*selftest) {
    // unbudgeted: the verifiers inside set per relation caps
    try {
      return cmd_selftest(o, out);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
  }
  return kInputError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"superinv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace superinv::cli
