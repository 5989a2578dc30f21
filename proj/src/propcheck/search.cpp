#include "ezd/propcheck/search.hpp"

#include <sstream>

namespace ezd::propcheck {

using classes::MembershipReport;
using classes::Verdict;

namespace {

const char* const kNames[] = {"x", "y", "z"};

constexpr const char* kNotOnA = "(x, y) is not an exact pair on A";
constexpr const char* kNotOnC = "(x, y) is not an exact pair on C";
constexpr const char* kNotOnM = "(x, y) is not an exact pair on M";
constexpr const char* kNotInG = "M is not in G_C";
constexpr const char* kUndetermined = "membership undetermined";

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::string monomial_text(const std::vector<int>& e) {
  std::string s;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += kNames[v];
    if (e[v] > 1) s += "^" + std::to_string(e[v]);
  }
  return s.empty() ? "1" : s;
}

// A monomial of degree >= 2 strictly below the pure powers; needs two or
// more variables.
std::vector<int> mixed_monomial(std::mt19937_64& rng, const std::vector<int>& powers) {
  std::vector<int> e(powers.size());
  for (;;) {
    int deg = 0;
    for (std::size_t v = 0; v < e.size(); ++v) {
      e[v] = static_cast<int>(pick(rng, static_cast<std::size_t>(powers[v])));
      deg += e[v];
    }
    if (deg >= 2) return e;
  }
}

std::string ring_text(std::mt19937_64& rng, const std::string& field) {
  const std::size_t nv = 1 + pick(rng, 3);
  std::vector<int> powers(nv);
  std::vector<std::string> gens;
  for (std::size_t v = 0; v < nv; ++v) {
    powers[v] = 2 + static_cast<int>(pick(rng, 3));
    std::vector<int> e(nv, 0);
    e[v] = powers[v];
    gens.push_back(monomial_text(e));
  }
  if (nv > 1) {
    const std::size_t extra = pick(rng, 3);
    for (std::size_t i = 0; i < extra; ++i) gens.push_back(monomial_text(mixed_monomial(rng, powers)));
  }
  if (nv > 1 && pick(rng, 3) == 0) {
    auto a = mixed_monomial(rng, powers), b = mixed_monomial(rng, powers);
    if (a != b) gens.push_back(monomial_text(a) + (pick(rng, 2) ? " - " : " + ") + monomial_text(b));
  }
  std::string s = field + "[";
  for (std::size_t v = 0; v < nv; ++v) s += std::string(v ? "," : "") + kNames[v];
  s += "] / (";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i];
  return s + ")";
}

// Staircase monomials of positive degree and sums of two of them.
std::vector<Element> radical_candidates(const AlgebraPtr& a) {
  std::vector<Element> out;
  const auto rb = a->radical_basis();
  auto unit = [&](std::size_t i) {
    std::vector<linalg::Scalar> c(a->dim(), linalg::Scalar::zero(a->field()));
    c[i] = linalg::Scalar::one(a->field());
    return a->element(c);
  };
  for (std::size_t i : rb) out.push_back(unit(i));
  for (std::size_t i = 0; i < rb.size(); ++i) {
    for (std::size_t j = i + 1; j < rb.size(); ++j) out.push_back(unit(rb[i]) + unit(rb[j]));
  }
  return out;
}

std::string m_candidate(std::mt19937_64& rng, const std::string& z) {
  const std::vector<std::string> forms = {
      "A", "C", "omega(A)", "sum(A, C)", "modx(A, Z)", "ann(A, Z)", "dualk(modx(A, Z))",
      "hom(modx(A, Z), C)", "tensor(modx(A, Z), C)", "sum(A, modx(A, Z))", "modx(C, Z)", "hom(C, A)"};
  std::string f = forms[pick(rng, forms.size())];
  const auto at = f.find('Z');
  if (at != std::string::npos) f.replace(at, 1, z);
  return f;
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

std::string instance_recipe(const std::string& ring, const std::string& x, const std::string& y,
                            const std::string& c, const std::string& m) {
  return "ring A = " + ring + ";\nelement ex = " + x + " in A;\nelement ey = " + y + " in A;\nmodule C = " + c +
         ";\nmodule M = " + m + ";\n";
}

std::optional<GeneratedInstance> generate_instance(std::mt19937_64& rng, const SearchConfig& cfg,
                                                   std::size_t trial, GeneratorStats* stats) {
  const std::string ring = ring_text(rng, cfg.field);
  AlgebraPtr a;
  try {
    a = algmod::parse_algebra(ring);
  } catch (const Error&) {
    if (stats) ++stats->too_large;
    return std::nullopt;
  }
  if (a->dim() > cfg.max_dim || a->dim() < 2) {
    if (stats) ++stats->too_large;
    return std::nullopt;
  }
  const auto cands = radical_candidates(a);
  const Module reg = algmod::regular_module(a);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t j = 0; j < cands.size(); ++j) {
      if (classes::is_ezd_pair(cands[i], cands[j], reg).holds) pairs.emplace_back(i, j);
    }
  }
  if (pairs.empty()) {
    if (stats) ++stats->no_pair;
    return std::nullopt;
  }
  const auto [i, j] = pairs[pick(rng, pairs.size())];
  const std::string c = pick(rng, 2) ? "omega(A)" : "A";
  const std::string m = m_candidate(rng, cands[pick(rng, cands.size())].to_string());
  std::string recipe = instance_recipe(ring, cands[i].to_string(), cands[j].to_string(), c, m);
  Instance in = instance_from_script("trial-" + std::to_string(trial), recipe, cfg.bound, cfg.seed);
  return GeneratedInstance{trial, std::move(recipe), std::move(in)};
}

VerificationResult verify_open_question(const Instance& in) {
  VerificationResult r;
  r.prop = "open_question";
  r.instance_id = in.id;
  r.recipe = in.recipe;
  r.bound = in.bound;
  r.seed = in.seed;
  auto finish = [&](Status s, const std::string& w) {
    r.status = s;
    r.witness = w;
    return r;
  };
  auto keep = [&](const MembershipReport& m, const std::string& what) {
    r.tables.insert(r.tables.end(), m.tables.begin(), m.tables.end());
    r.details.push_back(what + ": " + m.verdict.to_string());
  };
  classes::Options opt;
  opt.bound = in.bound;
  opt.derived.seed = in.seed;
  if (!classes::is_ezd_pair(in.x, in.y, algmod::regular_module(in.algebra)).holds) return finish(Status::Inconclusive, kNotOnA);
  if (!in.c || !classes::is_ezd_pair(in.x, in.y, *in.c).holds) return finish(Status::Inconclusive, kNotOnC);
  if (!in.m || !classes::is_ezd_pair(in.x, in.y, *in.m).holds) return finish(Status::Inconclusive, kNotOnM);
  auto sd = classes::is_semidualizing(*in.c, opt);
  keep(sd.report, "C semidualizing");
  if (sd.report.verdict.kind == Verdict::Kind::Undetermined) return finish(Status::Inconclusive, kUndetermined);
  if (!sd.holds()) return finish(Status::Inconclusive, "C is not semidualizing");
  auto g = classes::in_G_C(*in.m, sd, opt);
  keep(g, "M in G_C");
  if (g.verdict.kind == Verdict::Kind::Undetermined) return finish(Status::Inconclusive, kUndetermined);
  if (!g.holds()) return finish(Status::Inconclusive, kNotInG);

  auto q = algmod::quotient_algebra(in.algebra, in.x);
  auto reduce = [&](const Module& m) { return algmod::change_algebra(algmod::scale_quotient(m, in.x).module, q); };
  auto sdq = classes::is_semidualizing(reduce(*in.c), opt);
  keep(sdq.report, "C/xC semidualizing");
  if (sdq.report.verdict.kind == Verdict::Kind::Undetermined) return finish(Status::Inconclusive, kUndetermined);
  if (!sdq.holds()) return finish(Status::Fail, "C/xC is not semidualizing: " + sdq.report.verdict.witness);
  auto gq = classes::in_G_C(reduce(*in.m), sdq, opt);
  keep(gq, "M/xM in G_{C/xC}");
  if (gq.verdict.kind == Verdict::Kind::Undetermined) return finish(Status::Inconclusive, kUndetermined);
  if (!gq.holds()) return finish(Status::Fail, "M/xM is not in G_{C/xC}: " + gq.verdict.witness);
  return finish(Status::Pass, gq.verdict.to_string());
}

SearchReport search_counterexamples(const SearchConfig& cfg) {
  SearchReport rep;
  rep.config = cfg;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    ++rep.trials_run;
    auto rng = trial_rng(cfg.seed, t);
    auto g = generate_instance(rng, cfg, t, &rep.generator);
    if (!g) continue;
    auto v = verify_open_question(g->instance);
    if (v.status == Status::Pass) {
      ++rep.examined;
      ++rep.passed;
    } else if (v.status == Status::Fail) {
      ++rep.examined;
      rep.failures.push_back(v);
      break;
    } else if (v.witness == kNotOnC) {
      ++rep.c_not_exact;
    } else if (v.witness == kNotOnM) {
      ++rep.m_not_exact;
    } else if (v.witness == kNotInG) {
      ++rep.m_not_in_g;
    } else if (v.witness == kUndetermined) {
      ++rep.undetermined;
    } else {
      throw Error("search: unexpected gate outcome '" + v.witness + "'");
    }
  }
  return rep;
}

std::string SearchReport::render() const {
  std::ostringstream os;
  os << "search seed " << config.seed << ", field " << config.field << ", dims <= " << config.max_dim
     << ", bound " << config.bound << "\n";
  os << "trials run          " << trials_run << " of " << config.trials << "\n";
  os << "rejected: too large " << generator.too_large << "\n";
  os << "rejected: no pair   " << generator.no_pair << "\n";
  os << "gate: pair on C     " << c_not_exact << "\n";
  os << "gate: pair on M     " << m_not_exact << "\n";
  os << "gate: M in G_C      " << m_not_in_g << "\n";
  os << "undetermined        " << undetermined << "\n";
  os << "gated instances     " << examined << "\n";
  os << "passed              " << passed << "\n";
  os << "counterexamples     " << failures.size() << "\n";
  for (const auto& f : failures) {
    os << "halted at " << f.instance_id << ": " << f.witness << "\n" << f.recipe;
  }
  return os.str();
}

}  // namespace ezd::propcheck
