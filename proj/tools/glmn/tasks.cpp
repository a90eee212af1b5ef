#include "tasks.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "glmn/analysis.hpp"
#include "glmn/error.hpp"
#include "glmn/io.hpp"
#include "glmn/kw.hpp"
#include "glmn/verma.hpp"
#include "glmn/version.hpp"

namespace glmn::app {

namespace {

std::uint64_t task_stream(const std::string& task) {
  const auto& t = known_tasks();
  return static_cast<std::uint64_t>(std::find(t.begin(), t.end(), task) - t.begin() + 1) << 32;
}

Elem elem_from_list(const Field& F, const std::vector<std::int64_t>& coeffs) {
  if (coeffs.size() > F.degree()) throw ConfigError("field element has more than k coefficients");
  std::vector<Coeff> c;
  const auto p = static_cast<std::int64_t>(F.characteristic());
  for (auto v : coeffs) c.push_back(static_cast<Coeff>(((v % p) + p) % p));
  c.resize(F.degree(), 0);
  return F.from_coeffs(c);
}

std::uint64_t saturating_pow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = r > UINT64_MAX / b ? UINT64_MAX : r * b;
  return r;
}

std::uint64_t verma_dim(const RootSystem& R) {
  const auto even = saturating_pow(R.algebra().field().characteristic(), R.positive_even().size());
  const auto odd = saturating_pow(2, R.positive_odd().size());
  return even > UINT64_MAX / odd ? UINT64_MAX : even * odd;
}

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::CompositeP:
    case ErrorCode::PTooSmall:
    case ErrorCode::NonIrreducibleModulus:
    case ErrorCode::FieldTooLarge:
    case ErrorCode::BadDims:
    case ErrorCode::InvalidSupport:
    case ErrorCode::ChiNotBorelCompatible:
    case ErrorCode::LambdaNotInX:
    case ErrorCode::NotNormalized:
    case ErrorCode::NotStandardLevi:
    case ErrorCode::ParseError:
      return true;
    default:
      return false;
  }
}

struct TaskContext {
  const RunOptions& opt;
  const Setting& s;
  const std::string& task;
  Report& report;

  const ExperimentConfig& cfg() const { return opt.config; }
  Sampling sampling(std::uint64_t unit) const {
    Sampling smp;
    smp.line_budget = cfg().line_budget;
    smp.seed = derive_seed(cfg().seed, task_stream(task) + unit);
    return smp;
  }
  void check(const std::string& name, bool pass, const std::string& detail = {}) {
    Report c;
    c["name"] = name;
    c["pass"] = pass;
    if (!detail.empty()) c["detail"] = detail;
    report["checks"].push_back(std::move(c));
  }
  void require_budget(std::uint64_t predicted, const std::string& what) const {
    if (predicted > cfg().dim_budget)
      throw Error(ErrorCode::DimensionBudgetExceeded, what + " would have dimension " + std::to_string(predicted) +
                                                          " > dim_budget " + std::to_string(cfg().dim_budget));
  }
  void dump(const std::string& stem, std::size_t idx, const ModuleRep& M) const {
    if (!opt.dump_module_dir) return;
    std::filesystem::create_directories(*opt.dump_module_dir);
    std::ofstream out(std::filesystem::path(*opt.dump_module_dir) / (stem + "_" + std::to_string(idx) + ".module"));
    write_module(out, M);
  }
};

std::string fmt(const Field& F, Elem e) { return F.format(e); }

std::string join_roots(const RootSystem& R, const std::vector<Root>& rs) {
  std::string out;
  for (Root a : rs) out += (out.empty() ? "" : " ") + R.label(a);
  return out.empty() ? "-" : out;
}

/// Fits one constant k with num = k * den over the rows; rows with den = 0 need num = 0.
struct ConstantFit {
  std::optional<Elem> k;
  bool constant = true;
  std::size_t support = 0;
};

ConstantFit fit_constant(const Field& F, const std::vector<std::pair<Elem, Elem>>& num_den) {
  ConstantFit fit;
  for (auto [num, den] : num_den) {
    if (!den.code) {
      if (num.code) fit.constant = false;
      continue;
    }
    ++fit.support;
    const Elem k = F.div(num, den);
    if (!fit.k) fit.k = k;
    else if (*fit.k != k) fit.constant = false;
  }
  if (fit.k && !fit.k->code) fit.constant = false;
  return fit;
}

// ---------------------------------------------------------------- structure

void structure_check(TaskContext& t) {
  const SuperAlgebra& A = t.s.algebra;
  const Field& F = A.field();
  const RootSystem R(A);
  const int d = A.dim();
  auto sign = [&](int a, int b) { return A.parity(a) && A.parity(b) ? F.neg(F.one()) : F.one(); };

  std::size_t anti_fail = 0, jac_fail = 0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      AlgElem ab = A.bracket(A.unit_vector(a), A.unit_vector(b));
      AlgElem ba = A.bracket(A.unit_vector(b), A.unit_vector(a));
      if (!is_zero(add(F, ab, scale(F, ba, sign(a, b))))) ++anti_fail;
    }
  std::uint64_t triples = 0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        ++triples;
        const AlgElem x = A.unit_vector(a), y = A.unit_vector(b), z = A.unit_vector(c);
        AlgElem s = scale(F, A.bracket(x, A.bracket(y, z)), sign(a, c));
        s = add(F, s, scale(F, A.bracket(y, A.bracket(z, x)), sign(b, a)));
        s = add(F, s, scale(F, A.bracket(z, A.bracket(x, y)), sign(c, b)));
        if (!is_zero(s)) ++jac_fail;
      }
  t.check("super anticommutativity on all basis pairs", anti_fail == 0, std::to_string(d * d) + " pairs");
  t.check("super Jacobi on all basis triples", jac_fail == 0, std::to_string(triples) + " triples");

  std::uint64_t state = derive_seed(t.cfg().seed, task_stream(t.task) + 1);
  const auto even = A.even_basis();
  auto random_even = [&]() {
    AlgElem x = A.zero();
    for (int g : even) x[g] = F.from_code(splitmix64(state) % F.order());
    return x;
  };
  std::size_t restr = 0, restr_fail = 0;
  auto restricted_ok = [&](const AlgElem& x) {
    ++restr;
    if (!(A.ad(A.p_power(x)) == power(A.ad(x), F.characteristic()))) ++restr_fail;
  };
  for (int g : even) restricted_ok(A.unit_vector(g));
  for (std::size_t i = 0; i < t.cfg().random_elements; ++i) restricted_ok(random_even());
  t.check("ad(x^[p]) = ad(x)^p", restr_fail == 0,
          std::to_string(even.size()) + " basis + " + std::to_string(t.cfg().random_elements) + " random even elements");

  std::size_t str_fail = 0;
  const std::size_t pairs = 2 * t.cfg().random_elements;
  auto random_homogeneous = [&](int parity) {
    AlgElem x = A.zero();
    for (int g = 0; g < d; ++g)
      if (A.parity(g) == parity) x[g] = F.from_code(splitmix64(state) % F.order());
    return x;
  };
  for (std::size_t i = 0; i < pairs; ++i) {
    const AlgElem x = random_homogeneous(static_cast<int>(splitmix64(state) & 1));
    const AlgElem y = random_homogeneous(static_cast<int>(splitmix64(state) & 1));
    if (A.supertrace(A.bracket(x, y)).code) ++str_fail;
  }
  t.check("str([x,y]) = 0", str_fail == 0, std::to_string(pairs) + " random homogeneous pairs");

  // rho on odd coroots against the closed form m - i - j + 2 (1-based i, j)
  std::size_t rho_fail = 0;
  for (Root a : R.positive_odd()) {
    const Elem got = R.on_coroot(R.rho(), a);
    const Elem want = F.from_int(A.m() - (a.i + 1) - (a.j - A.m() + 1) + 2);
    if (got != want) ++rho_fail;
  }
  t.check("rho(h_a) = m - i - j + 2 on odd positive roots", rho_fail == 0);

  ReductionContext ctx(A, Character::zero(A));
  std::vector<int> all(d);
  for (int g = 0; g < d; ++g) all[g] = g;
  const std::uint64_t predicted = saturating_pow(F.characteristic(), A.even_basis().size()) *
                                  saturating_pow(2, A.odd_basis().size());
  Report summary;
  summary["dim_g_even"] = A.even_basis().size();
  summary["dim_g_odd"] = A.odd_basis().size();
  summary["pbw_predicted"] = predicted;
  if (predicted <= 4'000'000) {
    const auto count = ctx.admissible_monomials(all).size();
    summary["pbw_enumerated"] = count;
    t.check("PBW monomial count = p^dim g0 * 2^dim g1", count == predicted);
  } else {
    summary["pbw_enumerated"] = "skipped (above 4e6)";
  }
  summary["positive_roots"] = R.positive().size();
  summary["rho"] = format_weight(F, R.rho());
  t.report["summary"] = summary;
}

// ---------------------------------------------------------------- verma scan

void verma_scan(TaskContext& t) {
  const auto& X = t.s.variety;
  const SuperAlgebra& A = X.algebra;
  const Field& F = A.field();
  const RootSystem R(A);
  t.require_budget(verma_dim(R), "baby Verma");
  const bool semisimple = classify_character(R, X.chi).semisimple;
  const VermaFactory fac(A, X.chi);
  const auto expected_dim = verma_dim(R);

  struct Unit {
    Elem fd, ff;
    bool simple = false;
    std::size_t dim = 0;
  };
  std::vector<Unit> units(t.s.lambdas.size());
  auto rows = parallel_rows(t.s.lambdas.size(), t.cfg().jobs, [&](std::size_t i) {
    const Weight& lambda = t.s.lambdas[i];
    const ModuleRep Z = fac.build(lambda);
    t.dump("verma", t.s.lambda_index[i], Z);
    const Elem fd = f_direct(Z);
    const auto pol = f_formula(R, lambda);
    Report row;
    row["index"] = t.s.lambda_index[i];
    row["lambda"] = format_weight(F, lambda);
    row["f_direct"] = fmt(F, fd);
    row["f_formula"] = fmt(F, pol.f_formula);
    row["f0"] = fmt(F, pol.f0);
    row["f1"] = fmt(F, pol.f1);
    units[i] = {fd, pol.f_formula, false, Z.dim};
    if (semisimple) {
      const auto v = is_simple(Z, t.sampling(i));
      units[i].simple = v.simple;
      row["verdict"] = v.simple ? "simple" : "not-simple";
      row["agree"] = v.simple == (fd.code != 0);
      row["probabilistic"] = v.probabilistic;
      row["witness_weight"] = v.witness_weight ? format_weight(F, *v.witness_weight) : "-";
    } else {
      row["verdict"] = "n/a";
      row["agree"] = "n/a";
    }
    return row;
  });

  std::size_t simple = 0, agree = 0, dim_ok = 0;
  std::vector<std::pair<Elem, Elem>> pairs;
  std::map<Weight, bool> zero;
  for (std::size_t i = 0; i < units.size(); ++i) {
    simple += units[i].simple;
    agree += units[i].simple == (units[i].fd.code != 0);
    dim_ok += units[i].dim == expected_dim;
    pairs.emplace_back(units[i].fd, units[i].ff);
    zero[t.s.lambdas[i]] = units[i].fd.code == 0;
  }
  const auto fit = fit_constant(F, pairs);
  Report summary;
  summary["weights"] = units.size();
  summary["module_dim"] = expected_dim;
  if (semisimple) summary["simple"] = simple;
  summary["c"] = fit.k ? fmt(F, *fit.k) : "-";
  summary["c_constant"] = fit.constant;
  summary["c_is_sign"] = fit.k && (F.is_one(*fit.k) || *fit.k == F.neg(F.one()));

  t.check("dim Z = p^|N0+| 2^|N1+| for every weight", dim_ok == units.size(), std::to_string(expected_dim));
  if (semisimple)
    t.check("simple <=> f_direct != 0", agree == units.size(),
            std::to_string(agree) + "/" + std::to_string(units.size()) + " rows agree");
  t.check("f_direct = c * f_formula with one constant c != 0", fit.constant && (fit.k || fit.support == 0),
          "c = " + (fit.k ? fmt(F, *fit.k) : std::string("-")));

  // zero-set symmetry and pointwise divisibility
  std::size_t sym_checked = 0, sym_fail = 0, div_checked = 0, div_fail = 0;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const Weight& lambda = t.s.lambdas[i];
    for (Root a : R.simple()) {
      const Elem x = F.add(R.on_coroot(lambda, a), R.on_coroot(R.rho(), a));
      const bool forces_zero = R.parity(a) ? F.is_one(x) : (x.code && F.in_prime_field(x));
      if (forces_zero) {
        ++div_checked;
        if (units[i].fd.code) ++div_fail;
      }
      if (R.parity(a)) continue;
      Weight mu = lambda;
      const Vec alpha = R.as_functional(a);
      for (std::size_t c = 0; c < mu.values.size(); ++c) mu.values[c] = F.add(mu.values[c], alpha[c]);
      mu = R.reflect(a, mu);
      if (auto it = zero.find(mu); it != zero.end()) {
        ++sym_checked;
        if (it->second != zero[lambda]) ++sym_fail;
      }
    }
  }
  t.check("zero set symmetric under lambda -> s_a(lambda + a), even simple a", sym_fail == 0,
          std::to_string(sym_checked) + " pairs");
  t.check("vanishing factor on a simple root forces f_direct = 0", div_fail == 0,
          std::to_string(div_checked) + " implications");

  const std::size_t ng = std::min(t.cfg().gamma_samples, units.size());
  if (ng) {
    ReductionContext ctx(A, X.chi);
    std::size_t gfail = 0;
    for (std::size_t i = 0; i < ng; ++i)
      if (f_via_gamma(ctx, t.s.lambdas[i]) != units[i].fd) ++gfail;
    t.check("f_direct = gamma(big element)(lambda)", gfail == 0, std::to_string(ng) + " weights");
  }
  t.report["summary"] = summary;
  t.report["rows"] = rows;
}

// ---------------------------------------------------------------- graded scan

void graded_scan(TaskContext& t) {
  const auto& X = t.s.variety;
  const SuperAlgebra& A = X.algebra;
  const Field& F = A.field();
  const RootSystem R(A);
  const auto even_dim = saturating_pow(F.characteristic(), R.positive_even().size());
  t.require_budget(std::max(verma_dim(R), even_dim << (A.m() * A.n())), "graded baby Verma");
  const auto cls = classify_character(R, X.chi);
  bool odd_nonvanishing = cls.semisimple;
  for (Root a : R.positive_odd()) odd_nonvanishing = odd_nonvanishing && R.on_coroot(X.chi, a).code;
  const VermaFactory fac(A, X.chi);
  const GradedVermaFactory gfac(A, X.chi);

  struct Unit {
    Elem f1, f0, fd, f1_formula;
    bool simple = false, dims = false;
  };
  std::vector<Unit> units(t.s.lambdas.size());
  auto rows = parallel_rows(t.s.lambdas.size(), t.cfg().jobs, [&](std::size_t i) {
    const Weight& lambda = t.s.lambdas[i];
    const auto smp = t.sampling(i);
    const ModuleRep M = build_simple_g0_module(A, X.chi, lambda, smp);
    const ModuleRep Zg = gfac.build(M);
    t.dump("graded", t.s.lambda_index[i], Zg);
    const Elem f1 = f1_direct(Zg);
    const Elem fd = f_direct(fac.build(lambda));
    const auto pol = f_formula(R, lambda);
    Unit u{f1, pol.f0, fd, pol.f1, false, Zg.dim == (M.dim << (A.m() * A.n()))};
    Report row;
    row["index"] = t.s.lambda_index[i];
    row["lambda"] = format_weight(F, lambda);
    row["dim_M"] = M.dim;
    row["dim_Z"] = Zg.dim;
    row["f1_direct"] = fmt(F, f1);
    row["f1_formula"] = fmt(F, pol.f1);
    row["f0"] = fmt(F, pol.f0);
    row["f_direct"] = fmt(F, fd);
    if (cls.semisimple) {
      const auto v = is_simple(Zg, smp);
      u.simple = v.simple;
      row["verdict"] = v.simple ? "simple" : "not-simple";
      row["agree"] = v.simple == (f1.code != 0);
      row["probabilistic"] = v.probabilistic;
    } else {
      row["verdict"] = "n/a";
      row["agree"] = "n/a";
    }
    units[i] = u;
    return row;
  });

  std::size_t simple = 0, agree = 0, dims = 0;
  std::vector<std::pair<Elem, Elem>> graded_pairs, odd;
  for (const auto& u : units) {
    simple += u.simple;
    agree += u.simple == (u.f1.code != 0);
    dims += u.dims;
    graded_pairs.emplace_back(F.mul(u.f1, u.f0), u.fd);
    odd.emplace_back(u.f1, u.f1_formula);
  }
  const auto cp = fit_constant(F, graded_pairs);
  const auto c1 = fit_constant(F, odd);
  Report summary;
  summary["weights"] = units.size();
  if (cls.semisimple) summary["simple"] = simple;
  summary["c_prime"] = cp.k ? fmt(F, *cp.k) : "-";
  summary["c_prime_constant"] = cp.constant;
  summary["c1"] = c1.k ? fmt(F, *c1.k) : "-";
  summary["c1_constant"] = c1.constant;
  summary["odd_coroots_nonvanishing"] = odd_nonvanishing;
  t.check("dim Z(M) = 2^(mn) dim M", dims == units.size());
  if (cls.semisimple)
    t.check("f1_direct != 0 <=> Z(M) simple", agree == units.size(),
            std::to_string(agree) + "/" + std::to_string(units.size()) + " rows agree");
  t.check("f1_direct * f0 = c' * f_direct with one constant c' != 0", cp.constant && (cp.k || cp.support == 0),
          "c' = " + (cp.k ? fmt(F, *cp.k) : std::string("-")));
  t.check("f1_direct = c1 * odd factor product", c1.constant && (c1.k || c1.support == 0));
  if (odd_nonvanishing) t.check("chi(h_a) != 0 on every odd root => every Z(M) simple", simple == units.size());
  t.report["summary"] = summary;
  t.report["rows"] = rows;
}

// ---------------------------------------------------------------- kw

void kw_task(TaskContext& t) {
  const auto& X = t.s.variety;
  const SuperAlgebra& A = X.algebra;
  const Field& F = A.field();
  const RootSystem R(A);
  t.require_budget(verma_dim(R), "baby Verma");
  const LeviData L = levi_data(R, X.chi);
  const PhiOrdering ord = order_phi_prime(R, X.chi);
  std::string order_text;
  for (const auto& st : ord.steps) order_text += (order_text.empty() ? "" : " ") + R.label(st.alpha);
  t.check("Phi' ordering: every prefix of negatives closed", ord.prefixes_closed, order_text.empty() ? "-" : order_text);
  t.check("Phi' ordering: every prefix normalized by l' roots", ord.prefixes_normalized);
  t.check("chi vanishes on the Borel part of l", L.chi_on_levi_nilpotent);

  auto rows = parallel_rows(t.s.lambdas.size(), t.cfg().jobs, [&](std::size_t i) {
    const auto r = kw_verify(A, X.chi, t.s.lambdas[i], t.sampling(i), t.cfg().dim_budget);
    Report row;
    row["index"] = t.s.lambda_index[i];
    row["lambda"] = format_weight(F, t.s.lambdas[i]);
    row["dim_M_prime"] = r.dim_m_prime;
    row["predicted"] = r.predicted_dim;
    row["induced"] = r.induced_dim;
    row["head"] = r.head_dim;
    row["M_prime_simple"] = r.m_prime_simple;
    row["induced_simple"] = r.induced_verdict.simple;
    row["probabilistic"] = r.induced_verdict.probabilistic;
    row["ok"] = r.ok();
    return row;
  });
  std::size_t ok = 0;
  for (const auto& row : rows) ok += row.at("ok").get<bool>();
  Report summary;
  summary["phi_prime"] = join_roots(R, L.phi_prime);
  summary["dim_N_even"] = L.n_even;
  summary["dim_N_odd"] = L.n_odd;
  summary["weights"] = rows.size();
  summary["formula_holds"] = ok;
  t.check("dim M = p^dim N0 2^dim N1 dim M', induced module simple", ok == rows.size(),
          std::to_string(ok) + "/" + std::to_string(rows.size()));
  t.report["summary"] = summary;
  t.report["rows"] = rows;
}

// ---------------------------------------------------------------- levi

void levi_task(TaskContext& t) {
  const auto& X = t.s.variety;
  const SuperAlgebra& A = X.algebra;
  const Field& F = A.field();
  const RootSystem R(A);
  t.require_budget(verma_dim(R), "baby Verma");
  const auto cls = classify_character(R, X.chi);
  if (!cls.standard_levi) throw Error(ErrorCode::NotStandardLevi, "character is not of standard Levi form");
  auto rows = parallel_rows(t.s.lambdas.size(), t.cfg().jobs, [&](std::size_t i) {
    const auto r = levi_scan(A, X.chi, t.s.lambdas[i], t.sampling(i), t.cfg().outside_samples);
    Report row;
    row["index"] = t.s.lambda_index[i];
    row["lambda"] = format_weight(F, t.s.lambdas[i]);
    Report entries = Report::array();
    for (const auto& e : r.entries) {
      Report je;
      je["alpha"] = R.label(e.alpha);
      je["a"] = e.a;
      je["maximal"] = e.maximal;
      je["mu"] = format_weight(F, e.mu);
      je["hom_rank"] = e.hom_rank;
      je["dim"] = e.dim;
      je["heads_match"] = e.heads_match;
      entries.push_back(std::move(je));
    }
    row["entries"] = entries;
    row["head_dim"] = r.head_dim;
    row["head_simple"] = r.head_simple;
    row["radical_absorbs"] = r.radical_absorbs;
    row["outside_samples"] = r.outside_samples;
    row["outside_generate"] = r.outside_generate;
    row["probabilistic"] = r.probabilistic;
    row["ok"] = r.ok();
    return row;
  });
  std::size_t ok = 0;
  for (const auto& row : rows) ok += row.at("ok").get<bool>();
  Report summary;
  summary["levi_set"] = join_roots(R, cls.levi_set);
  summary["weights"] = rows.size();
  summary["ok"] = ok;
  t.check("maximal f^(a+1)v, full-rank induced hom, unique maximal submodule, equal heads", ok == rows.size(),
          std::to_string(ok) + "/" + std::to_string(rows.size()));
  t.report["summary"] = summary;
  t.report["rows"] = rows;
}

// ---------------------------------------------------------------- unipotent checks

std::vector<int> negative_part(const SuperAlgebra& A) {
  std::vector<int> sub;
  for (int g = 0; g < A.dim(); ++g) {
    const auto [i, j] = A.unit(g);
    if (i > j) sub.push_back(g);
  }
  return sub;
}

bool chi_vanishes_on(const Character& chi, const std::vector<int>& sub) {
  for (int g : sub)
    if (chi.at(g).code) return false;
  return true;
}

/// Fingerprint with every parity flipped (the parity-shifted module).
std::vector<std::string> shifted(std::vector<std::string> fp) {
  for (auto& line : fp) {
    auto& last = line.back();
    last = last == '0' ? '1' : '0';
  }
  std::sort(fp.begin(), fp.end());
  return fp;
}

/// c with a = c b, when a and b are proportional.
std::optional<Elem> proportional(const Field& F, const PBWElement& a, const PBWElement& b) {
  if (a.is_zero()) return F.zero();
  if (b.is_zero()) return std::nullopt;
  const auto& [m0, c0] = *b.terms.begin();
  auto it = a.terms.find(m0);
  if (it == a.terms.end()) return std::nullopt;
  const Elem k = F.div(it->second, c0);
  if (a.terms.size() != b.terms.size()) return std::nullopt;
  for (const auto& [m, c] : b.terms) {
    auto jt = a.terms.find(m);
    if (jt == a.terms.end() || jt->second != F.mul(k, c)) return std::nullopt;
  }
  return k;
}

void frobenius_task(TaskContext& t) {
  const SuperAlgebra& A = t.s.algebra;
  const Field& F = A.field();
  const auto sub = negative_part(A);
  ReductionContext ctx(A, t.s.chi);
  t.require_budget(ctx.admissible_count(sub), "u(N-)");
  const auto top = frobenius_gram(ctx, sub, t.cfg().dim_budget, FrobeniusForm::TopCoefficient);
  t.check("top-coefficient form on u(N-) is nondegenerate", top.nondegenerate,
          std::to_string(top.gram.rows()) + "x" + std::to_string(top.gram.cols()));
  const auto unit = frobenius_gram(ctx, sub, t.cfg().dim_budget, FrobeniusForm::UnitCoefficient);
  const bool chi_zero = chi_vanishes_on(t.s.chi, sub);
  if (chi_zero) t.check("control: unit-coefficient form is degenerate", !unit.nondegenerate);

  // derivation rule on sampled homogeneous pairs
  std::uint64_t state = derive_seed(t.cfg().seed, task_stream(t.task) + 1);
  std::size_t leib_fail = 0;
  const std::size_t samples = t.cfg().random_elements;
  for (std::size_t i = 0; i < samples; ++i) {
    const int a = static_cast<int>(splitmix64(state) % A.dim());
    std::vector<int> word(1 + splitmix64(state) % 3);
    for (int& w : word) w = static_cast<int>(splitmix64(state) % A.dim());
    const Elem c = F.from_code(1 + splitmix64(state) % (F.order() - 1));
    const PBWElement u = ctx.normalize(word, c);
    if (!(ctx.ad_action(A.unit_vector(a), u) == ctx.ad_action_leibniz(A.unit_vector(a), u))) ++leib_fail;
  }
  t.check("ad a (u) = sum of ad a on factors", leib_fail == 0, std::to_string(samples) + " sampled pairs");

  // ad on the trivial line v_L for a in H + N-
  const ModuleRep left = regular_module(ctx, sub, Side::Left);
  const Subspace triv = trivial_submodules(left);
  std::size_t scalar_fail = 0, nil_fail = 0, tested = 0;
  if (triv.dim() == 1) {
    const PBWElement vL = element_from_coords(ctx, ctx.admissible_monomials(sub), triv.vector(0));
    for (int a = 0; a < A.dim(); ++a) {
      const auto [i, j] = A.unit(a);
      if (i < j) continue;
      // a must preserve chi on N-: chi([a, b]) = 0 for b in N-
      bool preserves = true;
      for (int b : sub) preserves = preserves && !t.s.chi.eval(A.bracket(A.unit_vector(a), A.unit_vector(b))).code;
      if (!preserves) continue;
      ++tested;
      const auto k = proportional(F, ctx.ad_action(A.unit_vector(a), vL), vL);
      if (!k) ++scalar_fail;
      else if (i > j && k->code) ++nil_fail;
    }
  }
  t.check("trivial line of u(N-) is one-dimensional", triv.dim() == 1, std::to_string(triv.dim()));
  t.check("ad a (v_L) in F v_L for a in H + N-", scalar_fail == 0 && triv.dim() == 1,
          std::to_string(tested) + " elements");
  t.check("ad a (v_L) = 0 for nilpotent ad a", nil_fail == 0 && triv.dim() == 1);
  Report summary;
  summary["dim_u"] = ctx.admissible_count(sub);
  summary["gram_rank_top"] = rank(top.gram);
  summary["gram_rank_unit"] = rank(unit.gram);
  t.report["summary"] = summary;
}

/// Right-module axioms for u -> u x: R([x,y]) = R(y)R(x) - s R(x)R(y) and R(x)^p = R(x^[p]) + chi(x)^p.
std::optional<std::string> check_right_module(const ModuleRep& M) {
  const SuperAlgebra& A = M.algebra;
  const Field& F = M.field();
  auto action_of = [&](const AlgElem& x) {
    Matrix acc(F, M.dim, M.dim);
    for (int g = 0; g < A.dim(); ++g)
      if (x[g].code) acc = acc + scale(M.act(g), x[g]);
    return acc;
  };
  for (int x : M.gens)
    for (int y : M.gens) {
      const Elem s = A.parity(x) && A.parity(y) ? F.neg(F.one()) : F.one();
      const Matrix want = M.act(y) * M.act(x) - scale(M.act(x) * M.act(y), s);
      if (!(action_of(A.bracket(A.unit_vector(x), A.unit_vector(y))) == want))
        return "bracket relation fails for [" + A.label(x) + "," + A.label(y) + "]";
    }
  for (int x : M.gens) {
    if (A.parity(x)) continue;
    const Matrix lhs = power(M.act(x), F.characteristic());
    const Matrix rhs = action_of(A.p_power(A.unit_vector(x))) +
                       scale(Matrix::identity(F, M.dim), F.pow(M.chi.at(x), F.characteristic()));
    if (!(lhs == rhs)) return "p-relation fails for " + A.label(x);
  }
  return std::nullopt;
}

void regular_task(TaskContext& t) {
  const SuperAlgebra& A = t.s.algebra;
  const Field& F = A.field();
  const auto sub = negative_part(A);
  ReductionContext ctx(A, t.s.chi);
  t.require_budget(ctx.admissible_count(sub), "u(N-)");
  const ModuleRep left = regular_module(ctx, sub, Side::Left);
  const ModuleRep right = regular_module(ctx, sub, Side::Right);
  const auto lc = verify_module(left);
  const auto rc = check_right_module(right);
  t.check("left regular module satisfies the module axioms", lc.ok(), lc.ok() ? "" : lc.failures.front());
  t.check("right regular module satisfies the right-module axioms", !rc, rc.value_or(""));
  t.check("dim left = dim right = PBW count", left.dim == right.dim && left.dim == ctx.admissible_count(sub),
          std::to_string(left.dim));
  const Subspace tl = trivial_submodules(left), tr = trivial_submodules(right);
  t.check("left trivial submodule is one-dimensional", tl.dim() == 1, std::to_string(tl.dim()));
  t.check("right trivial submodule is one-dimensional", tr.dim() == 1, std::to_string(tr.dim()));
  t.check("v_L = v_R up to scalar", tl.dim() == 1 && tr.dim() == 1 && tl == tr);
  const auto series = composition_series(left, t.sampling(0));
  bool iso = true;
  for (const auto& f : series.factors) {
    const auto& first = series.factors.front();
    iso = iso && f.dim == first.dim && (f.fingerprint == first.fingerprint || shifted(f.fingerprint) == first.fingerprint);
  }
  t.check("composition factors of the left regular module isomorphic up to parity shift", iso,
          std::to_string(series.factors.size()) + " factors");
  Report summary;
  summary["dim_u"] = left.dim;
  summary["composition_length"] = series.factors.size();
  summary["factor_dim"] = series.factors.empty() ? 0 : series.factors.front().dim;
  summary["probabilistic"] = series.probabilistic;
  std::string vl;
  if (tl.dim() == 1) {
    const PBWElement v = element_from_coords(ctx, ctx.admissible_monomials(sub), tl.vector(0));
    vl = ctx.format(v);
  }
  summary["v_L"] = vl;
  (void)F;
  t.report["summary"] = summary;
}

Report field_json(const Field& F) {
  Report j;
  j["p"] = F.characteristic();
  j["k"] = F.degree();
  j["modulus"] = F.modulus();
  return j;
}

}  // namespace

std::vector<Report> parallel_rows(std::size_t count, unsigned jobs, const std::function<Report(std::size_t)>& f) {
  std::vector<Report> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < n; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

Setting make_setting(const ExperimentConfig& c) {
  try {
    const Field F = c.modulus ? Field::make(c.p, c.field_degree, std::vector<Coeff>(c.modulus->begin(), c.modulus->end()))
                              : Field::make(c.p, c.field_degree);
    const SuperAlgebra A = SuperAlgebra::build(c.m, c.n, F);
    Character chi(A);
    for (const auto& [label, coeffs] : c.chi) {
      const auto [i, j] = A.unit(parse_unit_label(A, label));
      chi.set(i, j, elem_from_list(F, coeffs));
    }
    WeightVariety X = weight_variety(A, chi);
    Setting s{A, chi, X, {}, {}};
    const std::size_t total = X.weights.size();
    switch (c.lambda_mode) {
      case LambdaMode::ScanAll:
        for (std::size_t i = 0; i < total; ++i) s.lambda_index.push_back(i);
        break;
      case LambdaMode::Sample: {
        std::vector<std::size_t> idx(total);
        for (std::size_t i = 0; i < total; ++i) idx[i] = i;
        std::uint64_t state = derive_seed(c.seed, 0x5a);
        const std::size_t k = std::min(c.lambda_sample, total);
        for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + splitmix64(state) % (total - i)]);
        idx.resize(k);
        std::sort(idx.begin(), idx.end());
        s.lambda_index = idx;
        break;
      }
      case LambdaMode::Explicit:
        for (const auto& w : c.lambdas) {
          Weight lambda;
          for (const auto& coord : w) lambda.values.push_back(elem_from_list(X.algebra.field(), coord));
          auto it = std::find(X.weights.begin(), X.weights.end(), lambda);
          if (it == X.weights.end())
            throw ConfigError("lambda " + format_weight(X.algebra.field(), lambda) + " is not in the weight variety");
          s.lambda_index.push_back(static_cast<std::size_t>(it - X.weights.begin()));
        }
        break;
    }
    for (auto i : s.lambda_index) s.lambdas.push_back(X.weights[i]);
    return s;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

Report run_task(const std::string& task, const RunOptions& opt, const Setting& s) {
  Report r;
  r["schema"] = kReportSchema;
  r["version"] = kVersion;
  r["task"] = task;
  r["input"] = config_echo(opt.config);
  r["field"] = field_json(s.variety.algebra.field());
  r["chi"] = s.chi.format();
  r["checks"] = Report::array();
  TaskContext t{opt, s, task, r};
  try {
    if (task == "structure-check") structure_check(t);
    else if (task == "verma-scan") verma_scan(t);
    else if (task == "graded-verma-scan") graded_scan(t);
    else if (task == "kw-verify") kw_task(t);
    else if (task == "levi-scan") levi_task(t);
    else if (task == "frobenius-check") frobenius_task(t);
    else if (task == "regular-module-check") regular_task(t);
    else throw ConfigError("unknown task '" + task + "'");
    bool pass = true;
    for (const auto& c : r["checks"]) pass = pass && c.at("pass").get<bool>();
    r["status"] = pass ? "pass" : "fail";
  } catch (const Error& e) {
    r["status"] = e.code() == ErrorCode::DimensionBudgetExceeded ? "refused" : is_input_error(e.code()) ? "invalid" : "error";
    r["error"] = e.what();
  } catch (const ConfigError& e) {
    r["status"] = "invalid";
    r["error"] = e.what();
  } catch (const std::exception& e) {
    r["status"] = "error";
    r["error"] = e.what();
  }
  return r;
}

std::string dump_pbar_element(const Setting& s) {
  ReductionContext ctx(s.variety.algebra, s.variety.chi);
  const PBWElement u = pbar_product(ctx);
  std::string out = "# normal form of prod e^(pbar-1) prod f^(pbar-1), ascending height\n";
  out += ctx.format(u) + "\n# Cartan projection\n" + ctx.format(ctx.hc_gamma(u)) + "\n";
  return out;
}

int exit_code(const std::vector<Report>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    const auto st = r.value("status", std::string("error"));
    if (st == "refused" || st == "invalid") code = 2;
    else if (st != "pass" && code == 0) code = 1;
  }
  return code;
}

}  // namespace glmn::app
