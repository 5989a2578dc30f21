#include "ezd/propcheck/checks.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "ezd/algmod/isomorphism.hpp"

namespace ezd::propcheck {

using classes::Options;
using homology::DimValue;
using Kind = Expr::Kind;

bool check_matches(const std::string& check, const std::string& id) {
  if (check == id) return true;
  static const std::map<std::string, std::string> prefixes = {
      {"a", "fact_a"}, {"b", "fact_b"}, {"c", "fact_c"},       {"dualizing", "cor_dualizing"},
      {"K", "cor_K_"}, {"H", "lemma_H_"}, {"1", "free_extension"}};
  auto it = prefixes.find(id);
  const std::string prefix = it != prefixes.end() ? it->second : "prop_" + id;
  if (check.rfind(prefix, 0) != 0) return false;
  // "prop_A" must not match "prop_AB"; parts follow an underscore
  return check.size() == prefix.size() || prefix.back() == '_' || check[prefix.size()] == '_';
}

namespace {

struct Ctx {
  const Environment& env;
  const CheckStmt& st;
  int bound;
  std::uint64_t seed;
  CheckOutcome& out;

  const Expr& arg(std::size_t i) const {
    if (i >= st.args.size()) throw Error(st.check + ": missing argument " + std::to_string(i + 1));
    return st.args[i];
  }
  void args(std::size_t n) const {
    if (st.args.size() != n) {
      throw Error(st.check + " expects " + std::to_string(n) + " arguments, got " + std::to_string(st.args.size()));
    }
  }
  Module module(std::size_t i) const { return env.eval_module(arg(i)); }
  Options options() const {
    Options o;
    o.bound = bound;
    o.derived.seed = seed;
    return o;
  }
  void verdict(bool ok, const std::string& witness) {
    out.status = ok ? Status::Pass : Status::Fail;
    out.witness = witness;
  }
  void membership(const classes::MembershipReport& r) {
    out.tables = r.tables;
    out.details.push_back(r.class_name + ": " + r.verdict.to_string());
    if (r.verdict.kind == classes::Verdict::Kind::Undetermined) {
      out.status = Status::Inconclusive;
      out.budget_exceeded = true;
      out.witness = r.verdict.witness;
      return;
    }
    verdict(r.holds(), r.holds() ? r.verdict.to_string() : r.verdict.witness);
  }
};

// An expected dimension: an integer, "inf" for >= bound + 1, or "neginf".
DimValue expected_dim(const Ctx& c, const Expr& e) {
  if (e.kind == Kind::Ident && e.name == "inf") return DimValue::at_least(c.bound + 1);
  if (e.kind == Kind::Ident && e.name == "neginf") return DimValue::neg_inf();
  return DimValue::exactly(static_cast<int>(c.env.eval_int(e)));
}

void compare_dim(Ctx& c, const DimValue& got, const DimValue& want) {
  c.out.details.push_back("value " + got.to_string() + (got.collapsed ? " (artinian collapse)" : ""));
  c.verdict(got == want, "expected " + want.to_string() + ", got " + got.to_string());
}

// Instance for the statement checks: (x, y, modules...) in the given roles.
Instance make_instance(const Ctx& c, const std::vector<const char*>& roles, const std::string& text) {
  if (c.st.args.size() != roles.size() + 2) {
    throw Error(c.st.check + " expects " + std::to_string(roles.size() + 2) + " arguments");
  }
  std::vector<Module> mods;
  for (std::size_t i = 0; i < roles.size(); ++i) mods.push_back(c.module(i + 2));
  AlgebraPtr a = mods.front().algebra();
  Instance in{c.out.id, text, a, c.env.eval_element(c.arg(0), a), c.env.eval_element(c.arg(1), a),
              std::nullopt, std::nullopt, std::nullopt, c.bound, c.seed};
  for (std::size_t i = 0; i < roles.size(); ++i) {
    std::string r = roles[i];
    if (r == "C") in.c = mods[i];
    else if (r == "M") in.m = mods[i];
    else in.n = mods[i];
  }
  return in;
}

void adopt(Ctx& c, const VerificationResult& r) {
  c.out.status = r.status;
  c.out.witness = r.witness;
  c.out.details.insert(c.out.details.end(), r.details.begin(), r.details.end());
  c.out.tables.insert(c.out.tables.end(), r.tables.begin(), r.tables.end());
  for (const auto& t : r.tables) c.out.budget_exceeded = c.out.budget_exceeded || !t.table.complete();
}

int part_of(const std::string& name) {
  const auto u = name.rfind('_');
  const std::string p = name.substr(u + 1);
  return p == "i" ? 1 : p == "ii" ? 2 : 3;
}

void dispatch(Ctx& c, const std::string& text) {
  const std::string& n = c.st.check;
  if (n == "dim") {
    c.args(2);
    const auto d = c.module(0).dim();
    const auto want = c.env.eval_int(c.arg(1));
    c.verdict(static_cast<long long>(d) == want, "dimension " + std::to_string(d));
  } else if (n == "iso") {
    c.args(2);
    auto v = algmod::is_isomorphic(c.module(0), c.module(1), c.seed);
    c.out.details.push_back(std::string("verdict ") + algmod::kind_name(v.kind));
    if (v.kind == algmod::IsoVerdict::Kind::Unknown) {
      c.out.status = Status::Inconclusive;
      c.out.witness = v.reason;
    } else {
      c.verdict(v.iso(), v.iso() ? "isomorphism witnessed" : v.reason);
    }
  } else if (n == "ezd") {
    c.args(3);
    Module m = c.module(2);
    auto r = classes::is_ezd_pair(c.env.eval_element(c.arg(0), m.algebra()), c.env.eval_element(c.arg(1), m.algebra()), m);
    c.verdict(r.holds, r.holds ? "exact" : "fails " + r.failing_check());
  } else if (n == "semidualizing" || n == "dualizing") {
    c.args(1);
    Module cm = c.module(0);
    auto sd = classes::is_semidualizing(cm, c.options());
    c.membership(sd.report);
    if (n == "dualizing" && c.out.status == Status::Pass) {
      auto id = homology::id_bounded(cm, c.bound);
      c.out.details.push_back("id = " + id.to_string());
      c.verdict(id.is_exact(0), "id = " + id.to_string());
    }
  } else if (n == "in_G" || n == "in_A" || n == "in_B") {
    c.args(2);
    auto sd = classes::is_semidualizing(c.module(1), c.options());
    if (!sd.holds()) {
      c.out.status = Status::Inconclusive;
      c.out.witness = "C is not semidualizing: " + sd.report.verdict.to_string();
      return;
    }
    Module m = c.module(0);
    c.membership(n == "in_G" ? classes::in_G_C(m, sd, c.options())
                             : n == "in_A" ? classes::in_A_C(m, sd, c.options()) : classes::in_B_C(m, sd, c.options()));
  } else if (n == "pd" || n == "id") {
    c.args(2);
    Module m = c.module(0);
    compare_dim(c, n == "pd" ? homology::pd_bounded(m, c.bound) : homology::id_bounded(m, c.bound), expected_dim(c, c.arg(1)));
  } else if (n == "pc_pd" || n == "ic_id") {
    c.args(3);
    auto sd = classes::is_semidualizing(c.module(1), c.options());
    if (!sd.holds()) {
      c.out.status = Status::Inconclusive;
      c.out.witness = "C is not semidualizing";
      return;
    }
    auto v = n == "pc_pd" ? classes::pc_pd(c.module(0), sd, c.options()) : classes::ic_id(c.module(0), sd, c.options());
    if (!v.note.empty()) c.out.details.push_back(v.note);
    if (!v.defined) {
      c.out.status = Status::Inconclusive;
      c.out.budget_exceeded = true;
      c.out.witness = v.note;
      return;
    }
    compare_dim(c, v.value, expected_dim(c, c.arg(2)));
  } else if (n == "betti") {
    c.args(2);
    const Expr& list = c.arg(1);
    if (list.kind != Kind::Tuple) throw Error("betti expects a list such as [1, 2, 4]");
    std::vector<std::size_t> want;
    for (const auto& e : list.children) want.push_back(static_cast<std::size_t>(c.env.eval_int(e)));
    auto res = homology::minimal_free_resolution(c.module(0), want.empty() ? 0 : want.size() - 1);
    std::vector<std::size_t> got = res.betti;
    if (res.terminated) got.resize(want.size(), 0);
    std::string s;
    for (std::size_t i = 0; i < got.size(); ++i) s += (i ? ", " : "") + std::to_string(got[i]);
    c.out.budget_exceeded = res.budget_exceeded;
    c.verdict(got == want, "betti [" + s + "]");
  } else if (n == "fact_a") {
    adopt(c, verify_fact_a(make_instance(c, {"M"}, text)));
  } else if (n == "fact_b") {
    adopt(c, verify_fact_b(make_instance(c, {"M"}, text)));
  } else if (n == "fact_c") {
    adopt(c, verify_fact_c(make_instance(c, {"M", "N"}, text)));
  } else if (n == "prop_A") {
    adopt(c, verify_prop_A(make_instance(c, {"C"}, text)));
  } else if (n == "prop_B") {
    adopt(c, verify_prop_B(make_instance(c, {"C"}, text)));
  } else if (n == "prop_C") {
    adopt(c, verify_prop_C(make_instance(c, {"C"}, text)));
  } else if (n == "cor_dualizing") {
    adopt(c, verify_cor_dualizing(make_instance(c, {"C"}, text)));
  } else if (n == "free_extension") {
    adopt(c, verify_free_extension(make_instance(c, {"C"}, text)));
  } else if (n.rfind("cor_K_", 0) == 0) {
    adopt(c, verify_cor_K(make_instance(c, {"C", "M"}, text), part_of(n)));
  } else if (n.rfind("prop_D_", 0) == 0) {
    adopt(c, verify_prop_D(make_instance(c, {"C", "M"}, text), part_of(n)));
  } else if (n.rfind("prop_J_", 0) == 0) {
    Instance in = make_instance(c, {"C", "M"}, text);
    auto f = verify_prop_J(in, part_of(n), Direction::Forward);
    auto b = verify_prop_J(in, part_of(n), Direction::Backward);
    adopt(c, f);
    c.out.details.push_back(std::string("forward ") + status_name(f.status) + ", backward " + status_name(b.status));
    if (f.status != b.status || b.failed()) adopt(c, b);
  } else if (n == "prop_E") {
    adopt(c, verify_prop_E(make_instance(c, {"C", "M"}, text)));
  } else if (n == "prop_F") {
    adopt(c, verify_prop_F(make_instance(c, {"C", "M"}, text)));
  } else if (n.rfind("lemma_H_", 0) == 0) {
    adopt(c, verify_lemma_H(make_instance(c, {"C", "M"}, text), part_of(n)));
  } else if (n.rfind("prop_G_", 0) == 0) {
    adopt(c, verify_prop_G(make_instance(c, {"C", "M"}, text), part_of(n)));
  } else {
    throw Error("check '" + n + "' is not implemented");
  }
}

}  // namespace

CheckOutcome run_check(const Environment& env, const CheckStmt& check, const std::string& script_text,
                       const RunOptions& opt) {
  CheckOutcome out;
  out.id = opt.source + ":" + std::to_string(check.pos.line);
  presentation::Script one;
  one.statements.push_back(check);
  out.statement = presentation::pretty_print(one);
  while (!out.statement.empty() && out.statement.back() == '\n') out.statement.pop_back();
  out.bound = check.bound.value_or(opt.bound);
  const auto start = std::chrono::steady_clock::now();
  Ctx c{env, check, out.bound, opt.seed, out};
  dispatch(c, script_text);
  if (check.negated && out.status != Status::Inconclusive) {
    out.status = out.status == Status::Pass ? Status::Fail : Status::Pass;
  }
  if (opt.timings) {
    out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return out;
}

std::vector<CheckOutcome> run_script(const std::string& text, const RunOptions& opt) {
  Environment env;
  env.load(presentation::parse_script(text));
  std::vector<CheckOutcome> out;
  for (const auto& c : env.checks()) out.push_back(run_check(env, c, text, opt));
  return out;
}

}  // namespace ezd::propcheck
