#include "ezd/propcheck/propcheck.hpp"

#include <algorithm>

#include "ezd/algmod/isomorphism.hpp"

namespace ezd::propcheck {

using classes::MembershipReport;
using classes::Options;
using classes::Semidualizing;
using classes::Verdict;
using homology::DimTable;
using homology::DimValue;

Instance instance_from_script(const std::string& id, const std::string& recipe, int bound, std::uint64_t seed) {
  Environment env;
  env.load(presentation::parse_script(recipe));
  if (env.ring_names().empty()) throw Error("instance script declares no ring");
  AlgebraPtr a = env.has_ring("A") ? env.ring("A") : env.ring(env.ring_names().front());
  auto el = [&](const char* name) { return env.has_element(name) ? env.element(name) : a->zero(); };
  auto mod = [&](const char* name) -> std::optional<Module> {
    if (!env.has_module(name)) return std::nullopt;
    return env.module(name);
  };
  Instance in{id, recipe, a, el("ex"), el("ey"), mod("C"), mod("M"), mod("N"), bound, seed};
  for (const auto* m : {&in.c, &in.m, &in.n}) {
    if (*m && !algmod::same_algebra((*m)->algebra(), a)) throw Error("instance module over another ring");
  }
  return in;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "Pass";
    case Status::Fail: return "Fail";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* class_name(ClassKind k) {
  switch (k) {
    case ClassKind::G: return "G_C";
    case ClassKind::A: return "A_C";
    case ClassKind::B: return "B_C";
  }
  return "?";
}

MembershipReport membership(ClassKind k, const Module& m, const Semidualizing& c, const Options& opt) {
  switch (k) {
    case ClassKind::G: return classes::in_G_C(m, c, opt);
    case ClassKind::A: return classes::in_A_C(m, c, opt);
    case ClassKind::B: return classes::in_B_C(m, c, opt);
  }
  throw Error("membership: unknown class");
}

namespace {

struct Run {
  VerificationResult r;

  Run(const char* prop, const Instance& in) {
    r.prop = prop;
    r.instance_id = in.id;
    r.recipe = in.recipe;
    r.bound = in.bound;
    r.seed = in.seed;
  }
  void note(const std::string& s) { r.details.push_back(s); }
  VerificationResult finish(Status s, const std::string& why) {
    r.status = s;
    r.witness = why;
    return r;
  }
  VerificationResult pass(const std::string& why = "") { return finish(Status::Pass, why); }
  VerificationResult fail(const std::string& why) { return finish(Status::Fail, why); }
  VerificationResult inconclusive(const std::string& why) { return finish(Status::Inconclusive, why); }
  void keep(const MembershipReport& m) {
    for (const auto& t : m.tables) r.tables.push_back(t);
  }
};

Options options(const Instance& in) {
  Options o;
  o.bound = in.bound;
  o.derived.seed = in.seed;
  o.derived.budget = in.budget;
  return o;
}

const Module& need(const std::optional<Module>& m, const char* what) {
  if (!m) throw Error(std::string("instance lacks module ") + what);
  return *m;
}

bool ezd(const Instance& in, const Module& m) { return classes::is_ezd_pair(in.x, in.y, m).holds; }

// xM != 0 and xM != M
bool nondegenerate(const Instance& in, const Module& m) {
  const std::size_t r = linalg::rank(m.element_action(in.x));
  return r != 0 && r != m.dim();
}

Module reduce(const Module& m, const Element& z, const AlgebraPtr& q) {
  return algmod::change_algebra(algmod::scale_quotient(m, z).module, q);
}

Module cyclic(const Instance& in) { return algmod::scale_quotient(algmod::regular_module(in.algebra), in.x).module; }

enum class Tri { Yes, No, Unknown };

Tri tri(const MembershipReport& m) {
  if (m.verdict.kind == Verdict::Kind::Undetermined) return Tri::Unknown;
  return m.holds() ? Tri::Yes : Tri::No;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string verdict_line(const std::string& what, const MembershipReport& m) {
  return what + ": " + m.verdict.to_string();
}

// Shared gate: (x, y) exact on A and C, and C semidualizing.
struct Gate {
  std::optional<Semidualizing> c;
  std::string failure;
};

Gate gate_pair_and_c(const Instance& in, Run& run) {
  Gate g;
  if (!ezd(in, algmod::regular_module(in.algebra))) {
    g.failure = "(x, y) is not an exact pair on A";
    return g;
  }
  const Module& cm = need(in.c, "C");
  if (!ezd(in, cm)) {
    g.failure = "(x, y) is not an exact pair on C";
    return g;
  }
  auto sd = classes::is_semidualizing(cm, options(in));
  run.note(verdict_line("C semidualizing", sd.report));
  if (!sd.holds()) {
    g.failure = "C is not semidualizing: " + sd.report.verdict.to_string();
    return g;
  }
  g.c = sd;
  return g;
}

// C/zC over A/zA, verified semidualizing.
std::optional<Semidualizing> reduced_c(const Instance& in, const Element& z, const AlgebraPtr& q, Run& run) {
  auto sd = classes::is_semidualizing(reduce(need(in.c, "C"), z, q), options(in));
  run.note(verdict_line("C/" + z.to_string() + "C semidualizing over the quotient", sd.report));
  if (!sd.holds()) return std::nullopt;
  return sd;
}

// Lowest degree at which two tables disagree, over their common prefix.
std::optional<std::size_t> mismatch(const DimTable& a, const DimTable& b) {
  const std::size_t n = std::min(a.dims.size(), b.dims.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.dims[i] != b.dims[i]) return i;
  }
  return std::nullopt;
}

bool vanishes_above(const DimTable& t, std::size_t n) {
  for (std::size_t i = n + 1; i < t.dims.size(); ++i) {
    if (t.dims[i] != 0) return false;
  }
  return true;
}

std::string dims_string(const DimTable& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.dims.size(); ++i) s += (i ? ", " : "") + std::to_string(t.dims[i]);
  return s + (t.complete() ? "]" : ", ...]");
}

enum class RelKind { P, F, I };

classes::RelativeDim relative_dim(RelKind k, const Module& m, const Semidualizing& c, const Options& opt) {
  switch (k) {
    case RelKind::P: return classes::pc_pd(m, c, opt);
    case RelKind::F: return classes::fc_pd(m, c, opt);
    case RelKind::I: return classes::ic_id(m, c, opt);
  }
  throw Error("relative_dim: unknown kind");
}

const char* rel_name(RelKind k) {
  switch (k) {
    case RelKind::P: return "P_C-pd";
    case RelKind::F: return "F_C-pd";
    case RelKind::I: return "I_C-id";
  }
  return "?";
}

RelKind rel_kind(int part) { return part == 1 ? RelKind::P : part == 2 ? RelKind::F : RelKind::I; }

}  // namespace

VerificationResult verify_fact_a(const Instance& in) {
  Run run("fact_a", in);
  const Module& m = need(in.m, "M");
  if (!ezd(in, m)) return run.inconclusive("(x, y) is not an exact pair on M");
  Module ann = algmod::annihilator_submodule(m, in.x).module;
  Module quo = algmod::scale_quotient(m, in.x).module;
  run.note("dim (0 :_M x) = " + std::to_string(ann.dim()) + ", dim M/xM = " + std::to_string(quo.dim()));
  auto v = algmod::is_isomorphic(ann, quo, in.seed);
  if (v.iso() && v.witness->is_isomorphism()) return run.pass("isomorphism witnessed");
  if (v.not_iso()) return run.fail("(0 :_M x) and M/xM are not isomorphic: " + v.reason);
  return run.inconclusive("isomorphism search gave up: " + v.reason);
}

VerificationResult verify_fact_b(const Instance& in) {
  Run run("fact_b", in);
  if (!ezd(in, algmod::regular_module(in.algebra))) return run.inconclusive("(x, y) is not an exact pair on A");
  const Module& m = need(in.m, "M");
  Module q = cyclic(in);
  auto opt = options(in);
  DimTable e = homology::ext(q, m, in.bound, opt.derived);
  DimTable t = homology::tor(q, m, in.bound, opt.derived);
  run.r.tables.push_back({"Ext(R/xR,M)", true, e});
  run.r.tables.push_back({"Tor(R/xR,M)", false, t});
  run.note("Ext(R/xR, M) = " + dims_string(e) + ", Tor(R/xR, M) = " + dims_string(t));
  const bool pair = ezd(in, m);
  run.note(std::string("(i) holds: ") + yes_no(pair));
  if (pair && (e.first_nonzero(1) || t.first_nonzero(1))) {
    return run.fail("(i) holds but Ext or Tor is nonzero in positive degree");
  }
  // (ii) <=> (iii) for every n; the tables are 2-periodic from degree 1, so
  // the last two degrees are left out of the comparison
  const std::size_t len = std::min(e.dims.size(), t.dims.size());
  for (std::size_t n = 0; n + 2 < len; ++n) {
    if (vanishes_above(e, n) != vanishes_above(t, n)) {
      return run.fail("(ii) and (iii) disagree at n = " + std::to_string(n));
    }
  }
  // the converse needs condition (a), or condition (b) on a nonzero module
  const bool cond_a = nondegenerate(in, m);
  const bool cond_b = m.dim() != 0;
  if (cond_a || cond_b) {
    run.note(cond_a ? "converse asserted under condition (a)" : "converse asserted under condition (b)");
    const std::size_t top = len == 0 ? 0 : len - 1;
    const bool tail_vanishes = top >= 2 && e.dims[top] == 0 && e.dims[top - 1] == 0;
    if (tail_vanishes && !pair) return run.fail("Ext vanishes in high degrees but (i) fails");
  } else {
    run.note("converse not asserted: M = 0");
  }
  if (!e.complete() || !t.complete()) return run.inconclusive("Betti budget exhausted before the bound");
  return run.pass();
}

VerificationResult verify_fact_c(const Instance& in) {
  Run run("fact_c", in);
  const Module& m = need(in.m, "M");
  const Module& n = need(in.n, "N");
  if (!ezd(in, algmod::regular_module(in.algebra)) || !ezd(in, m)) {
    return run.inconclusive("(x, y) is not an exact pair on both A and M");
  }
  if (!n.element_action(in.x).is_zero()) return run.inconclusive("N is not killed by x");
  auto q = algmod::quotient_algebra(in.algebra, in.x);
  Module mq = reduce(m, in.x, q);
  Module nq = algmod::change_algebra(n, q);
  auto d = options(in).derived;
  struct Family {
    const char* name;
    DimTable over_r;
    DimTable over_q;
  };
  Family fams[] = {{"Ext^i(N, M)", homology::ext(n, m, in.bound, d), homology::ext(nq, mq, in.bound, d)},
                   {"Ext^i(M, N)", homology::ext(m, n, in.bound, d), homology::ext(mq, nq, in.bound, d)},
                   {"Tor_i(M, N)", homology::tor(m, n, in.bound, d), homology::tor(mq, nq, in.bound, d)}};
  for (const auto& f : fams) {
    run.note(std::string(f.name) + ": " + dims_string(f.over_r) + " vs " + dims_string(f.over_q));
    if (auto i = mismatch(f.over_r, f.over_q)) {
      return run.fail(std::string(f.name) + " differs at i = " + std::to_string(*i));
    }
  }
  for (const auto& f : fams) {
    if (!f.over_r.complete() || !f.over_q.complete()) {
      return run.inconclusive(std::string(f.name) + ": Betti budget exhausted before the bound");
    }
  }
  return run.pass();
}

namespace {

VerificationResult cyclic_membership(const char* prop, ClassKind k, const Instance& in) {
  Run run(prop, in);
  Gate g = gate_pair_and_c(in, run);
  if (!g.c) return run.inconclusive(g.failure);
  auto mem = membership(k, cyclic(in), *g.c, options(in));
  run.keep(mem);
  run.note(verdict_line(std::string("R/xR in ") + class_name(k), mem));
  switch (tri(mem)) {
    case Tri::Yes: return run.pass(mem.verdict.to_string());
    case Tri::No: return run.fail(mem.verdict.witness);
    case Tri::Unknown: break;
  }
  return run.inconclusive(mem.verdict.witness);
}

}  // namespace

VerificationResult verify_prop_A(const Instance& in) { return cyclic_membership("prop_A", ClassKind::G, in); }
VerificationResult verify_prop_C(const Instance& in) { return cyclic_membership("prop_C", ClassKind::A, in); }

VerificationResult verify_prop_B(const Instance& in) {
  Run run("prop_B", in);
  const Module& b = need(in.c, "B");
  if (!ezd(in, algmod::regular_module(in.algebra)) || !ezd(in, b)) {
    return run.inconclusive("(x, y) is not an exact pair on both A and B");
  }
  auto opt = options(in);
  auto whole = classes::is_semidualizing(b, opt);
  run.note(verdict_line("(i) B semidualizing", whole.report));
  bool parts = true, unknown = whole.report.verdict.kind == Verdict::Kind::Undetermined;
  for (const Element* z : {&in.x, &in.y}) {
    auto q = algmod::quotient_algebra(in.algebra, *z);
    auto sd = classes::is_semidualizing(reduce(b, *z, q), opt);
    run.note(verdict_line("(ii) B/" + z->to_string() + "B semidualizing", sd.report));
    parts = parts && sd.holds();
    unknown = unknown || sd.report.verdict.kind == Verdict::Kind::Undetermined;
  }
  if (unknown) return run.inconclusive("a semidualizing test stayed undetermined");
  if (whole.holds() != parts) {
    return run.fail(whole.holds() ? "(i) holds but (ii) fails" : "(ii) holds but (i) fails");
  }
  return run.pass(whole.holds() ? "(i) and (ii) both hold" : "(i) and (ii) both fail");
}

VerificationResult verify_cor_dualizing(const Instance& in) {
  Run run("cor_dualizing", in);
  const Module& dm = need(in.c, "D");
  if (!ezd(in, algmod::regular_module(in.algebra)) || !ezd(in, dm)) {
    return run.inconclusive("(x, y) is not an exact pair on both A and D");
  }
  auto opt = options(in);
  auto qx = algmod::quotient_algebra(in.algebra, in.x);
  auto qy = algmod::quotient_algebra(in.algebra, in.y);
  Module dx = reduce(dm, in.x, qx), dy = reduce(dm, in.y, qy);
  auto sx = classes::is_semidualizing(dx, opt);
  auto idx = homology::id_bounded(dx, in.bound, opt.derived.budget);
  auto sy = classes::is_semidualizing(dy, opt);
  run.note(verdict_line("D/xD semidualizing", sx.report) + ", id = " + idx.to_string());
  run.note(verdict_line("D/yD semidualizing", sy.report));
  if (!sx.holds() || !idx.is_exact(0)) return run.inconclusive("D/xD is not dualizing over A/xA");
  if (!sy.holds()) return run.inconclusive("D/yD is not semidualizing over A/yA");
  auto sd = classes::is_semidualizing(dm, opt);
  auto id = homology::id_bounded(dm, in.bound, opt.derived.budget);
  run.note(verdict_line("D semidualizing", sd.report) + ", id = " + id.to_string());
  if (!sd.holds()) return run.fail("D is not semidualizing: " + sd.report.verdict.to_string());
  if (!id.is_exact(0)) return run.fail("id D = " + id.to_string());
  return run.pass();
}

namespace {

ClassKind k_class(int which) { return which == 1 ? ClassKind::G : which == 2 ? ClassKind::A : ClassKind::B; }

const char* part_name(int which) { return which == 1 ? "i" : which == 2 ? "ii" : "iii"; }

}  // namespace

VerificationResult verify_cor_K(const Instance& in, int which) {
  const std::string prop = std::string("cor_K_") + part_name(which);
  Run run(prop.c_str(), in);
  Gate g = gate_pair_and_c(in, run);
  if (!g.c) return run.inconclusive(g.failure);
  const Module& m = need(in.m, "M");
  if (!m.element_action(in.x).is_zero()) return run.inconclusive("M is not killed by x");
  auto q = algmod::quotient_algebra(in.algebra, in.x);
  auto cq = reduced_c(in, in.x, q, run);
  if (!cq) return run.fail("C/xC is not semidualizing over A/xA");
  const ClassKind k = k_class(which);
  auto opt = options(in);
  auto over_r = membership(k, m, *g.c, opt);
  auto over_q = membership(k, algmod::change_algebra(m, q), *cq, opt);
  run.keep(over_r);
  run.keep(over_q);
  run.note(verdict_line(std::string("M in ") + class_name(k) + "(R)", over_r));
  run.note(verdict_line(std::string("M in ") + class_name(k) + "(R/xR)", over_q));
  if (tri(over_r) == Tri::Unknown || tri(over_q) == Tri::Unknown) return run.inconclusive("membership undetermined");
  if (over_r.holds() != over_q.holds()) return run.fail("memberships over R and R/xR disagree");
  return run.pass(over_r.holds() ? "both hold" : "both fail");
}

VerificationResult verify_prop_D(const Instance& in, int which) {
  const std::string prop = std::string("prop_D_") + part_name(which);
  Run run(prop.c_str(), in);
  // parts follow the statement: (i) A_C, (ii) B_C, (iii) G_C
  const ClassKind k = which == 1 ? ClassKind::A : which == 2 ? ClassKind::B : ClassKind::G;
  Gate g = gate_pair_and_c(in, run);
  if (!g.c) return run.inconclusive(g.failure);
  const Module& m = need(in.m, "M");
  if (!ezd(in, m)) return run.inconclusive("(x, y) is not an exact pair on M");
  auto opt = options(in);
  for (const Element* z : {&in.x, &in.y}) {
    auto q = algmod::quotient_algebra(in.algebra, *z);
    auto cq = reduced_c(in, *z, q, run);
    if (!cq) return run.fail("C/zC is not semidualizing over A/zA for z = " + z->to_string());
    auto mem = membership(k, reduce(m, *z, q), *cq, opt);
    run.keep(mem);
    run.note(verdict_line("M/" + z->to_string() + "M in the quotient class", mem));
    if (tri(mem) == Tri::Unknown) return run.inconclusive("quotient membership undetermined");
    if (!mem.holds()) return run.inconclusive("hypothesis not met for z = " + z->to_string());
  }
  auto whole = membership(k, m, *g.c, opt);
  run.keep(whole);
  run.note(verdict_line(std::string("M in ") + class_name(k), whole));
  switch (tri(whole)) {
    case Tri::Yes: return run.pass(whole.verdict.to_string());
    case Tri::No: return run.fail(whole.verdict.witness);
    case Tri::Unknown: break;
  }
  return run.inconclusive(whole.verdict.witness);
}

VerificationResult verify_prop_J(const Instance& in, int which, Direction dir) {
  const std::string prop =
      std::string("prop_J_") + part_name(which) + (dir == Direction::Forward ? "_forward" : "_backward");
  Run run(prop.c_str(), in);
  if (!ezd(in, algmod::regular_module(in.algebra))) return run.inconclusive("(x, y) is not an exact pair on A");
  const Module& m = need(in.m, "M");
  if (!ezd(in, m)) return run.inconclusive("(x, y) is not an exact pair on M");
  const Module& cm = need(in.c, "C");
  auto opt = options(in);
  auto sd = classes::is_semidualizing(cm, opt);
  if (!sd.holds()) return run.inconclusive("C is not semidualizing");
  // (i) G_C with Hom(M, C), (ii) B_C with Hom(C, M), (iii) A_C with C (x) M
  const ClassKind k = which == 1 ? ClassKind::G : which == 2 ? ClassKind::B : ClassKind::A;
  auto base = membership(k, m, sd, opt);
  run.note(verdict_line(std::string("M in ") + class_name(k), base));
  if (tri(base) != Tri::Yes) return run.inconclusive("M is not shown to lie in " + std::string(class_name(k)));
  Module aux = which == 1 ? algmod::hom_module(m, cm)
                          : which == 2 ? algmod::hom_module(cm, m) : algmod::tensor_module(cm, m);
  const bool aux_pair = ezd(in, aux);
  auto quo = membership(k, algmod::scale_quotient(m, in.x).module, sd, opt);
  run.keep(quo);
  run.note(std::string("pair on the auxiliary module: ") + yes_no(aux_pair));
  run.note(verdict_line(std::string("M/xM in ") + class_name(k), quo));
  if (tri(quo) == Tri::Unknown) return run.inconclusive("membership of M/xM undetermined");
  const bool mem = quo.holds();
  if (dir == Direction::Forward) {
    if (mem && !aux_pair) return run.fail("M/xM in the class but the pair is not exact on the auxiliary module");
    return run.pass(mem ? "implication holds" : "antecedent false");
  }
  if (aux_pair && !mem) return run.fail("pair exact on the auxiliary module but M/xM not in the class");
  return run.pass(aux_pair ? "implication holds" : "antecedent false");
}

VerificationResult verify_prop_E(const Instance& in) {
  Run run("prop_E", in);
  Gate g = gate_pair_and_c(in, run);
  if (!g.c) return run.inconclusive(g.failure);
  const Module& m = need(in.m, "M");
  if (!nondegenerate(in, m)) return run.inconclusive("xM is 0 or M");
  auto opt = options(in);
  auto p = classes::pc_pd(m, *g.c, opt);
  auto i = classes::ic_id(m, *g.c, opt);
  run.note("P_C-pd(M) = " + p.value.to_string() + ", I_C-id(M) = " + i.value.to_string());
  const bool in_p = p.by_formula && p.value.is_exact(0);
  const bool in_i = i.by_formula && i.value.is_exact(0);
  if (!in_p && !in_i) return run.inconclusive("M is in neither P_C nor I_C");
  if (!ezd(in, m)) return run.fail("M is in the class but (x, y) is not an exact pair on M");
  auto q = algmod::quotient_algebra(in.algebra, in.x);
  auto cq = reduced_c(in, in.x, q, run);
  if (!cq) return run.fail("C/xC is not semidualizing over A/xA");
  Module mq = reduce(m, in.x, q);
  if (in_p) {
    auto v = classes::pc_pd(mq, *cq, opt);
    run.note("P_{C/xC}-pd(M/xM) = " + v.value.to_string());
    if (!v.value.is_exact(0)) return run.fail("M/xM is not in P_{C/xC}");
  }
  if (in_i) {
    auto v = classes::ic_id(mq, *cq, opt);
    run.note("I_{C/xC}-id(M/xM) = " + v.value.to_string());
    if (!v.value.is_exact(0)) return run.fail("M/xM is not in I_{C/xC}");
  }
  return run.pass(in_p && in_i ? "P_C and I_C" : in_p ? "P_C" : "I_C");
}

VerificationResult verify_prop_F(const Instance& in) {
  Run run("prop_F", in);
  Gate g = gate_pair_and_c(in, run);
  if (!g.c) return run.inconclusive(g.failure);
  const Module& m = need(in.m, "M");
  if (!nondegenerate(in, m)) return run.inconclusive("xM is 0 or M");
  auto opt = options(in);
  bool finite = false;
  for (RelKind k : {RelKind::P, RelKind::F, RelKind::I}) {
    auto v = relative_dim(k, m, *g.c, opt);
    run.note(std::string(rel_name(k)) + "(M) = " + v.value.to_string());
    finite = finite || (v.by_formula && v.value.kind == DimValue::Kind::Exactly);
  }
  if (!finite) return run.inconclusive("no relative dimension is finite within the bound");
  if (!ezd(in, m)) return run.fail("finite relative dimension but (x, y) is not an exact pair on M");
  return run.pass();
}

VerificationResult verify_lemma_H(const Instance& in, int part) {
  const std::string prop = std::string("lemma_H_") + part_name(part);
  Run run(prop.c_str(), in);
  Gate g = gate_pair_and_c(in, run);
  if (!g.c) return run.inconclusive(g.failure);
  const Module& m = need(in.m, "M");
  auto opt = options(in);
  const RelKind k = rel_kind(part);
  auto v = relative_dim(k, m, *g.c, opt);
  run.note(std::string(rel_name(k)) + "(M) = " + v.value.to_string());
  if (v.value.kind == DimValue::Kind::NegInf) return run.pass("M = 0");
  if (!v.by_formula || v.value.kind != DimValue::Kind::Exactly) {
    return run.inconclusive("dimension not finite within the bound");
  }
  const auto n = static_cast<std::size_t>(v.value.value);
  Module q = cyclic(in);
  DimTable t = k == RelKind::I ? homology::ext(q, m, in.bound, opt.derived) : homology::tor(q, m, in.bound, opt.derived);
  run.r.tables.push_back({k == RelKind::I ? "Ext(R/xR,M)" : "Tor(R/xR,M)", k == RelKind::I, t});
  run.note("table = " + dims_string(t));
  if (!vanishes_above(t, n)) return run.fail("nonzero above degree " + std::to_string(n));
  return run.pass();
}

VerificationResult verify_prop_G(const Instance& in, int part) {
  const std::string prop = std::string("prop_G_") + part_name(part);
  Run run(prop.c_str(), in);
  Gate g = gate_pair_and_c(in, run);
  if (!g.c) return run.inconclusive(g.failure);
  const Module& m = need(in.m, "M");
  if (!nondegenerate(in, m)) return run.inconclusive("xM is 0 or M");
  auto opt = options(in);
  const RelKind k = rel_kind(part);
  auto v = relative_dim(k, m, *g.c, opt);
  run.note(std::string(rel_name(k)) + "(M) = " + v.value.to_string());
  if (!v.by_formula || v.value.kind != DimValue::Kind::Exactly) {
    return run.inconclusive("dimension not finite within the bound");
  }
  auto q = algmod::quotient_algebra(in.algebra, in.x);
  auto cq = reduced_c(in, in.x, q, run);
  if (!cq) return run.fail("C/xC is not semidualizing over A/xA");
  auto w = relative_dim(k, reduce(m, in.x, q), *cq, opt);
  run.note(std::string(rel_name(k)) + " over the quotient = " + w.value.to_string());
  if (!homology::certainly_le(w.value, v.value)) return run.fail("inequality fails");
  if (!(w.value == v.value)) return run.fail("equality (iv) fails");
  return run.pass();
}

VerificationResult verify_free_extension(const Instance& in) {
  Run run("free_extension", in);
  if (!ezd(in, algmod::regular_module(in.algebra))) return run.inconclusive("(x, y) is not an exact pair on A");
  const Module& cm = need(in.c, "C");
  auto opt = options(in);
  auto sd = classes::is_semidualizing(cm, opt);
  run.note(verdict_line("C semidualizing", sd.report));
  if (!sd.holds()) return run.fail("C is not semidualizing");
  auto iso = algmod::is_isomorphic(cm, algmod::regular_module(in.algebra), in.seed);
  run.note(std::string("C isomorphic to A: ") + algmod::kind_name(iso.kind));
  if (!iso.not_iso()) return run.fail("C is not shown to differ from A");
  auto id = homology::id_bounded(cm, in.bound, opt.derived.budget);
  auto pd = homology::pd_bounded(cm, in.bound, opt.derived.budget);
  // whether C is dualizing depends on the fibre of the extension, so id is
  // only reported
  run.note("id C = " + id.to_string() + ", pd C = " + pd.to_string());
  if (pd.kind != DimValue::Kind::AtLeast) return run.fail("C has finite projective dimension");
  if (!ezd(in, cm)) return run.fail("(x, y) is not an exact pair on C");
  return run.pass();
}

}  // namespace ezd::propcheck
