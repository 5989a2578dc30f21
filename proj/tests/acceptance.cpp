// One PASS/FAIL line per acceptance criterion. Exit status 1 if a criterion
// fails outright; a resource shortfall prints FAIL but does not change it.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "ezd/algmod/isomorphism.hpp"
#include "ezd/cli/cli.hpp"
#include "ezd/propcheck/search.hpp"

using namespace ezd;
using namespace ezd::propcheck;
using homology::DimValue;

namespace {

struct Outcome {
  bool ok = true;
  std::string summary;
  bool shortfall = false;  // failed for want of resources, with no counterexample
};

// Collects failures; the summary carries counts or the first problem.
struct Tally {
  bool ok = true;
  std::string first;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) first = what;
    ok = ok && cond;
  }
  Outcome done(const std::string& summary) const { return {ok, ok ? summary : first}; }
};

const char* const kSPrime =
    "ring R = GF(101)[x,y] / (x^2, x*y, y^2);\n"
    "ring A = GF(101)[x,y,u] / (x^2, x*y, y^2, u^2);\n"
    "element ex = u in A;\nelement ey = u in A;\n"
    "module W = basechange(omega(R), A);\n";

Instance inst(const std::string& text, int bound = 10) { return instance_from_script("acceptance", text, bound, 1); }

// Generated instances with the pair exact on M, in trial order.
std::vector<GeneratedInstance> gated_pool(std::uint64_t seed, std::size_t trials, std::size_t max_dim) {
  SearchConfig cfg;
  cfg.seed = seed;
  cfg.max_dim = max_dim;
  cfg.bound = 10;
  std::vector<GeneratedInstance> out;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    auto g = generate_instance(rng, cfg, t);
    if (g && classes::is_ezd_pair(g->instance.x, g->instance.y, *g->instance.m).holds) out.push_back(std::move(*g));
  }
  return out;
}

const std::vector<GeneratedInstance>& pool() {
  static const auto p = gated_pool(11, 1500, 6);
  return p;
}

Outcome criterion_1() {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  auto r = algmod::parse_algebra("GF(101)[x,y]/(x^2, x*y, y^2)");
  t.require(r->dim() == 3, "dim R = " + std::to_string(r->dim()));
  auto w = algmod::dual_k(algmod::regular_module(r));
  classes::Options opt;
  opt.bound = 12;
  auto sd = classes::is_semidualizing(w, opt);
  t.require(sd.holds(), "omega not semidualizing: " + sd.report.verdict.to_string());
  t.require(sd.report.natural_map == "chi" && sd.report.natural_map_iso, "chi is not an isomorphism");
  for (const auto& tab : sd.report.tables) {
    t.require(tab.table.bound == 12 && tab.table.vanishes_up_to_bound(), tab.name + " does not vanish to 12");
  }
  auto iso = algmod::is_isomorphic(w, algmod::regular_module(r));
  t.require(iso.not_iso(), std::string("omega vs R: ") + algmod::kind_name(iso.kind));
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  t.require(ms < 1000, "took " + std::to_string(ms) + " ms");
  return t.done("dim 3, omega " + sd.report.verdict.to_string() + " with chi iso, NotIso to R, " +
                std::to_string(static_cast<int>(ms)) + " ms");
}

Outcome criterion_2() {
  Tally t;
  const std::vector<std::string> recipes = {
      "ring A = GF(101)[x] / (x^2);\nelement ex = x in A;\nelement ey = x in A;\nmodule C = A;\n",
      "ring A = GF(101)[x] / (x^4);\nelement ex = x in A;\nelement ey = x^3 in A;\nmodule C = A;\n",
      "ring A = GF(101)[x,y] / (x*y, x^2 - y^2);\nelement ex = x in A;\nelement ey = y in A;\nmodule C = A;\n",
      std::string(kSPrime) + "module C = W;\n",
      "ring A = GF(101)[x] / (x^4);\nelement ex = x in A;\nelement ey = x^3 in A;\nmodule C = omega(A);\n",
      std::string(kSPrime) + "module C = A;\n"};
  std::size_t n = 0;
  for (const auto& rec : recipes) {
    auto in = inst(rec);
    for (const auto& r : {verify_prop_A(in), verify_prop_C(in)}) {
      t.require(r.passed(), r.prop + " on instance " + std::to_string(n) + ": " + r.witness);
    }
    ++n;
  }
  return t.done(std::to_string(n) + " instances, G_C and A_C hold for R/xR at bound 10");
}

Outcome criterion_3() {
  Tally t;
  std::size_t count = 0;
  for (const auto& g : pool()) {
    const Module& m = *g.instance.m;
    auto r = verify_fact_a(g.instance);
    t.require(r.passed(), "trial " + std::to_string(g.trial) + ": " + r.witness);
    Module ann = algmod::annihilator_submodule(m, g.instance.x).module;
    Module quo = algmod::scale_quotient(m, g.instance.x).module;
    auto v = algmod::is_isomorphic(ann, quo, 1);
    const bool witnessed = v.iso() && v.witness && v.witness->is_isomorphism() &&
                           algmod::intertwines(v.witness->matrix(), ann, quo);
    t.require(witnessed, "no explicit isomorphism at trial " + std::to_string(g.trial));
    ++count;
  }
  t.require(count >= 100, "only " + std::to_string(count) + " gated instances");
  return t.done(std::to_string(count) + " gated instances, isomorphism witnessed each time");
}

// Resolutions whose Betti numbers double every degree cannot reach degree 10
// at this scale; those instances exhaust the budget and are counted apart.
constexpr std::size_t kFactCBudget = 600;

Outcome criterion_4() {
  Tally t;
  std::size_t b = 0, c = 0, converse = 0, truncated = 0;
  for (const auto& g : pool()) {
    auto fb = verify_fact_b(g.instance);
    t.require(fb.passed(), "fact b, trial " + std::to_string(g.trial) + ": " + fb.witness);
    for (const auto& d : fb.details) converse += d.rfind("converse asserted", 0) == 0;
    ++b;
    Instance in = g.instance;
    in.budget = kFactCBudget;
    bool cut = false;
    for (bool residue : {true, false}) {
      in.n = residue ? algmod::residue_field(in.algebra)
                     : algmod::scale_quotient(algmod::regular_module(in.algebra), in.x).module;
      auto fc = verify_fact_c(in);
      t.require(!fc.failed(), "fact c, trial " + std::to_string(g.trial) + ": " + fc.witness);
      cut = cut || fc.status == Status::Inconclusive;
      c += fc.passed();
    }
    truncated += cut;
  }
  // modules without the pair exercise the converse
  const char* hyper = "ring A = GF(101)[x,y] / (x*y, x^2 - y^2);\nelement ex = x in A;\nelement ey = y in A;\n";
  for (const char* m : {"module M = residue(A);", "module M = modx(A, x + y);", "module M = sum(A, residue(A));"}) {
    auto fb = verify_fact_b(inst(std::string(hyper) + m));
    t.require(fb.passed(), std::string("fact b on ") + m + ": " + fb.witness);
    for (const auto& d : fb.details) converse += d.rfind("converse asserted", 0) == 0;
  }
  t.require(converse > 0, "the converse was never asserted");
  const std::string counts = std::to_string(b) + " fact b instances, " + std::to_string(c) +
                             " fact c comparisons complete to bound 10, converse asserted " + std::to_string(converse) +
                             " times";
  if (t.ok && truncated > 0) {
    return {false, counts + "; no mismatch, but " + std::to_string(truncated) +
                       " instances exhaust the Betti budget before degree 10 in fact c", true};
  }
  return t.done(counts);
}

Outcome criterion_5() {
  Tally t;
  auto good = verify_prop_B(inst(std::string(kSPrime) + "module C = W;\n"));
  t.require(good.passed() && good.witness == "(i) and (ii) both hold", "B = S' (x) omega: " + good.witness);
  auto forged = verify_prop_B(inst(std::string(kSPrime) + "module C = sum(A, A);\n"));
  t.require(forged.passed() && forged.witness == "(i) and (ii) both fail", "forged B: " + forged.witness);
  return t.done("S' (x) omega: both directions hold; forged A + A fails on both sides");
}

Outcome criterion_6() {
  Tally t;
  std::size_t gated[4] = {0, 0, 0, 0};
  for (const auto& g : pool()) {
    for (int which = 1; which <= 3; ++which) {
      auto f = verify_prop_J(g.instance, which, Direction::Forward);
      auto b = verify_prop_J(g.instance, which, Direction::Backward);
      const std::string where = "part " + std::to_string(which) + ", trial " + std::to_string(g.trial);
      t.require(!f.failed() && !b.failed(), where + ": " + f.witness + " / " + b.witness);
      if (f.status != Status::Inconclusive && b.status != Status::Inconclusive) ++gated[which];
    }
  }
  for (int which = 1; which <= 3; ++which) {
    t.require(gated[which] >= 20, "part " + std::to_string(which) + " has " + std::to_string(gated[which]) + " instances");
  }
  return t.done("forward and backward agree; gated instances " + std::to_string(gated[1]) + ", " +
                std::to_string(gated[2]) + ", " + std::to_string(gated[3]));
}

Outcome criterion_7() {
  Tally t;
  propcheck::Environment env;
  env.load(presentation::parse_script(
      "ring A = GF(2)[x,y] / (x^2, x*y, y^2);\n"
      "module M1 = A;\nmodule M2 = residue(A);\nmodule M3 = omega(A);\nmodule M4 = modx(A, x);\n"
      "module M5 = modx(A, y);\nmodule M6 = modx(A, x + y);\nmodule M7 = sum(A, residue(A));\n"
      "module M8 = sum(residue(A), residue(A));\nmodule M9 = sum(omega(A), residue(A));\n"
      "module M10 = quot(free(A, 2), [x, y]);\n"));
  std::vector<Module> mods;
  for (int i = 1; i <= 10; ++i) {
    mods.push_back(env.module("M" + std::to_string(i)));
    t.require(mods.back().dim() <= 6, "module M" + std::to_string(i) + " too large");
  }
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < mods.size(); ++i) {
    for (std::size_t j = 0; j < mods.size(); ++j) {
      auto p = homology::ext_via(mods[i], mods[j], 4, homology::Route::First);
      auto q = homology::ext_via(mods[i], mods[j], 4, homology::Route::Second);
      t.require(p.complete() && q.complete() && p.dims == q.dims,
                "Ext(M" + std::to_string(i + 1) + ", M" + std::to_string(j + 1) + ") disagrees");
      ++pairs;
    }
  }
  return t.done(std::to_string(pairs) + " pairs over GF(2), both routes agree in degrees 0..4");
}

Outcome criterion_8() {
  Tally t;
  auto a2 = algmod::parse_algebra("GF(101)[x]/(x^2)");
  auto res = homology::minimal_free_resolution(algmod::residue_field(a2), 10);
  t.require(res.betti == std::vector<std::size_t>(11, 1), "betti of k are not all 1");
  auto per = homology::syzygy_periodicity(res, res.syzygies.size());
  t.require(per && per->i == 1 && per->j == 2, "no (1, 2) periodicity certificate");
  t.require(per && per->witness.is_isomorphism(), "periodicity witness is not an isomorphism");
  auto a4 = algmod::parse_algebra("GF(101)[x]/(x^4)");
  const Element x = a4->variable(0);
  const Element x3 = x * x * x;
  auto cyc = algmod::scale_quotient(algmod::regular_module(a4), x).module;
  auto r4 = homology::minimal_free_resolution(cyc, 10);
  t.require(r4.betti == std::vector<std::size_t>(11, 1), "betti of R/xR are not all 1");
  for (std::size_t i = 0; i < r4.algebra_differentials.size(); ++i) {
    const auto& d = r4.algebra_differentials[i];
    t.require(d.rows == 1 && d.cols == 1 && d.at(0, 0) == (i % 2 == 0 ? x : x3),
              "d" + std::to_string(i + 1) + " is " + (d.entries.empty() ? "?" : d.at(0, 0).to_string()));
  }
  return t.done("k over k[x]/(x^2): betti 1 x 11, syzygy 1 ~ syzygy 2; R/xR over k[x]/(x^4): x, x^3 alternate");
}

Outcome criterion_9() {
  Tally t;
  std::vector<Instance> cases;
  for (const char* m : {"module C = W;\nmodule M = W;", "module C = W;\nmodule M = sum(W, W);",
                        "module C = A;\nmodule M = A;", "module C = W;\nmodule M = A;",
                        "module C = W;\nmodule M = hom(W, omega(A));"}) {
    cases.push_back(inst(std::string(kSPrime) + m));
  }
  for (const auto& g : pool()) cases.push_back(g.instance);
  std::size_t zero = 0, seen = 0;
  for (const auto& in : cases) {
    classes::Options opt;
    opt.bound = in.bound;
    auto sd = classes::is_semidualizing(*in.c, opt);
    if (!sd.holds() || !classes::is_ezd_pair(in.x, in.y, *in.c).holds) continue;
    for (bool proj : {true, false}) {
      auto v = proj ? classes::pc_pd(*in.m, sd, opt) : classes::ic_id(*in.m, sd, opt);
      if (!v.defined) continue;
      ++seen;
      const bool collapse = v.value.kind == DimValue::Kind::NegInf || v.value.is_exact(0) ||
                            v.value == DimValue::at_least(in.bound + 1);
      t.require(collapse, "value " + v.value.to_string() + " outside the collapse set");
      if (!proj || !v.value.is_exact(0) || !v.by_formula) continue;
      ++zero;
      auto h = verify_lemma_H(in, 1);
      auto g = verify_prop_G(in, 1);
      t.require(h.passed(), "lemma H: " + h.witness + " on " + in.recipe);
      t.require(g.passed(), "prop G: " + g.witness + " on " + in.recipe);
    }
  }
  t.require(zero > 0, "no instance with P_C-pd = 0");
  return t.done(std::to_string(zero) + " instances with P_C-pd 0, quotient value 0 and Tor vanishing; " +
                std::to_string(seen) + " values inside {-inf, 0, >= bound+1}");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion_10() {
  Tally t;
  const std::string js = (std::filesystem::temp_directory_path() / "ezd_acceptance_search.json").string();
  const std::vector<std::string> args = {"search", "--seed", "7", "--trials", "500", "--dims", "6", "--json", js};
  std::ostringstream o1, o2, e;
  const int c1 = cli::run(args, o1, e);
  const std::string j1 = slurp(js);
  const int c2 = cli::run(args, o2, e);
  const std::string j2 = slurp(js);
  t.require(o1.str() == o2.str() && j1 == j2, "reports differ between runs");
  t.require(c1 == c2, "exit codes differ");
  auto j = cli::Json::parse(j1);
  const auto examined = j["extra"]["examined"].get<std::size_t>();
  t.require(examined > 0, "no gated instances");
  if (j["extra"].contains("counterexample")) {
    auto in = instance_from_script("dump", j["extra"]["counterexample"].get<std::string>(), 10, 7);
    t.require(verify_open_question(in).failed(), "counterexample dump does not reproduce");
    return {t.ok, "counterexample found and reproduced: " + o1.str()};
  }
  t.require(c1 == cli::kAllPass, "exit code " + std::to_string(c1));
  return t.done("identical reports, " + std::to_string(examined) + " gated instances, no counterexample");
}

Outcome criterion_11() {
  Tally t;
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(EZD_CORPUS_DIR)) {
    if (e.path().extension() != ".ezd") continue;
    ++files;
    auto s = presentation::parse_script(slurp(e.path().string()));
    t.require(presentation::parse_script(presentation::pretty_print(s)) == s, e.path().filename().string() + " does not round-trip");
  }
  t.require(files >= 10, std::to_string(files) + " corpus files");
  t.require(algmod::parse_algebra("GF(101)[x,y]/(x^2, x*y, y^2)")->dim() == 3, "(x^2, xy, y^2) is not 3");
  t.require(algmod::parse_algebra("GF(101)[x,y]/(x*y, x^2 - y^2)")->dim() == 4, "(xy, x^2 - y^2) is not 4");
  bool infinite = false;
  try {
    algmod::parse_algebra("GF(101)[x,y]/(x*y)");
  } catch (const presentation::InfiniteDimensionalError&) {
    infinite = true;
  }
  t.require(infinite, "(xy) was not reported infinite-dimensional");
  return t.done(std::to_string(files) + " corpus files round-trip; staircase dims 3, 4, infinite");
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {criterion_1, criterion_2, criterion_3, criterion_4,
                                                          criterion_5, criterion_6, criterion_7, criterion_8,
                                                          criterion_9, criterion_10, criterion_11};
  const auto start = std::chrono::steady_clock::now();
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.summary << " (" << s << " s)" << std::endl;
    all = all && (o.ok || o.shortfall);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "total " << total << " s\n";
  return all ? 0 : 1;
}
