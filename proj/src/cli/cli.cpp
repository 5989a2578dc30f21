#include "ezd/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "ezd/propcheck/search.hpp"

#ifndef EZD_CORPUS_DIR
#define EZD_CORPUS_DIR "corpus"
#endif

namespace ezd::cli {

namespace fs = std::filesystem;
using propcheck::Status;

Json table_json(const classes::NamedTable& t) {
  Json j;
  j["name"] = t.name;
  j["dims"] = t.table.dims;
  j["bound"] = t.table.bound;
  j["route"] = homology::route_name(t.is_ext, t.table.route);
  j["complete"] = t.table.complete();
  j["certified"] = t.table.vanishing_certified();
  return j;
}

Result from_outcome(const propcheck::CheckOutcome& o) {
  return Result{o.id, o.status, o.witness, o.tables, o.budget_exceeded, o.millis};
}

Json Report::to_json() const {
  Json j;
  j["version"] = kVersion;
  j["command"] = command;
  j["seed"] = seed;
  j["bound"] = bound;
  Json rs = Json::array();
  for (const auto& r : results) {
    Json e;
    e["id"] = r.id;
    e["status"] = propcheck::status_name(r.status);
    if (!r.witness.empty()) e["witness"] = r.witness;
    if (!r.tables.empty()) {
      Json ts = Json::array();
      for (const auto& t : r.tables) ts.push_back(table_json(t));
      e["tables"] = ts;
    }
    if (r.budget_exceeded) e["budget_exceeded"] = true;
    e["millis"] = r.millis;
    rs.push_back(e);
  }
  j["results"] = rs;
  if (!extra.is_null()) j["extra"] = extra;
  return j;
}

int Report::exit_code() const {
  bool budget = false;
  for (const auto& r : results) {
    if (r.status == Status::Fail) return kAnyFail;
    budget = budget || r.budget_exceeded;
  }
  return budget ? kBudget : kAllPass;
}

namespace {

struct Flags {
  int bound = homology::kDefaultBound;
  std::string field;
  std::uint64_t seed = 1;
  std::string json;
  bool quiet = false;
  bool timings = false;
  std::string ring;
  std::string from = "k";
  std::string to = "k";
  std::string module = "k";
  std::string c = "R";
  std::string prop;
  std::string corpus = EZD_CORPUS_DIR;
  std::string script;
  std::size_t trials = 500;
  std::size_t dims = 6;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string status_tag(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string dims_text(const std::vector<std::size_t>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + std::to_string(d[i]);
  return s;
}

// Ring text for --ring: the field prefix is optional and defaults to --field.
std::string ring_text(const Flags& f) {
  if (f.ring.empty()) throw UsageError("--ring is required");
  const bool has_field = f.ring.rfind("GF(", 0) == 0 || f.ring.rfind("QQ", 0) == 0;
  if (has_field) return f.ring;
  return (f.field.empty() ? "GF(101)" : f.field) + f.ring;
}

std::string module_expr(const std::string& s) {
  if (s == "k") return "residue(R)";
  if (s == "omega") return "omega(R)";
  return s;
}

// Environment with ring R and the named module expressions.
propcheck::Environment one_shot(const Flags& f, const std::vector<std::pair<std::string, std::string>>& mods) {
  std::string text = "ring R = " + ring_text(f) + ";\n";
  for (const auto& [name, e] : mods) text += "module " + name + " = " + module_expr(e) + ";\n";
  propcheck::Environment env;
  env.load(presentation::parse_script(text));
  return env;
}

void emit(const Report& rep, const Flags& f, std::ostream& out) {
  if (!f.json.empty()) {
    std::ofstream js(f.json, std::ios::binary);
    if (!js) throw UsageError("cannot write " + f.json);
    js << rep.to_json().dump(2) << "\n";
  }
  std::size_t pass = 0, fail = 0, other = 0;
  for (const auto& r : rep.results) {
    (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : other)++;
  }
  if (!f.quiet || rep.exit_code() != kAllPass) {
    out << pass << " passed, " << fail << " failed, " << other << " inconclusive\n";
  }
}

template <class F>
double timed(bool on, F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  if (!on) return 0;
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void print_outcome(const propcheck::CheckOutcome& o, const Flags& f, std::ostream& out) {
  if (f.quiet && o.status == Status::Pass) return;
  out << status_tag(o.status) << "  " << o.id << "  " << o.statement;
  if (!o.witness.empty()) out << "  [" << o.witness << "]";
  if (f.timings) out << "  " << static_cast<long long>(o.millis) << " ms";
  out << "\n";
}

int cmd_check(const Flags& f, Report& rep, std::ostream& out) {
  propcheck::RunOptions ro{f.bound, f.seed, f.timings, f.script};
  for (const auto& o : propcheck::run_script(read_file(f.script), ro)) {
    print_outcome(o, f, out);
    rep.results.push_back(from_outcome(o));
  }
  return rep.exit_code();
}

std::vector<fs::path> corpus_files(const std::string& dir) {
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) throw UsageError("corpus directory " + dir + " not found");
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".ezd") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

int cmd_verify(const Flags& f, Report& rep, std::ostream& out) {
  for (const auto& file : corpus_files(f.corpus)) {
    const std::string text = read_file(file.string());
    propcheck::Environment env;
    env.load(presentation::parse_script(text));
    propcheck::RunOptions ro{f.bound, f.seed, f.timings, file.filename().string()};
    for (const auto& c : env.checks()) {
      if (!f.prop.empty() && !propcheck::check_matches(c.check, f.prop)) continue;
      auto o = propcheck::run_check(env, c, text, ro);
      print_outcome(o, f, out);
      rep.results.push_back(from_outcome(o));
    }
  }
  if (rep.results.empty()) throw UsageError("no corpus checks match --prop " + f.prop);
  return rep.exit_code();
}

int cmd_ext_tor(const Flags& f, bool is_ext, Report& rep, std::ostream& out) {
  auto env = one_shot(f, {{"X", f.from}, {"Y", f.to}});
  homology::DimTable t;
  Result r;
  r.millis = timed(f.timings, [&] {
    t = is_ext ? homology::ext(env.module("X"), env.module("Y"), f.bound, {homology::kDefaultBettiBudget, f.seed})
               : homology::tor(env.module("X"), env.module("Y"), f.bound, {homology::kDefaultBettiBudget, f.seed});
  });
  const std::string name = std::string(is_ext ? "Ext" : "Tor") + "(" + f.from + "," + f.to + ")";
  r.id = name;
  r.tables.push_back({name, is_ext, t});
  r.budget_exceeded = !t.complete();
  r.status = r.budget_exceeded ? Status::Inconclusive : Status::Pass;
  if (r.budget_exceeded) r.witness = "budget exhausted after degree " + std::to_string(t.dims.size() - 1);
  out << name << " degrees 0.." << t.dims.size() - 1 << ": " << dims_text(t.dims) << "\n";
  if (!f.quiet) {
    out << "route " << homology::route_name(is_ext, t.route);
    if (t.period) out << ", syzygy period " << t.period->i << " -> " << t.period->j;
    if (t.terminated) out << ", finite resolution";
    out << "\n";
  }
  rep.results.push_back(r);
  return rep.exit_code();
}

std::string algebra_matrix_text(const homology::AlgebraMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows; ++r) {
    s += r ? "; " : "";
    for (std::size_t c = 0; c < m.cols; ++c) s += (c ? ", " : "") + m.at(r, c).to_string();
  }
  return s + "]";
}

int cmd_resolve(const Flags& f, Report& rep, std::ostream& out) {
  auto env = one_shot(f, {{"X", f.module}});
  const auto start = std::chrono::steady_clock::now();
  const auto res = homology::minimal_free_resolution(env.module("X"), static_cast<std::size_t>(f.bound));
  const auto per = homology::syzygy_periodicity(res, res.syzygies.size(), f.seed);
  Result r;
  if (f.timings) r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.id = "resolve(" + f.module + ")";
  r.budget_exceeded = res.budget_exceeded;
  r.status = res.budget_exceeded ? Status::Inconclusive : Status::Pass;
  homology::DimTable t;
  t.dims = res.betti;
  t.bound = f.bound;
  t.terminated = res.terminated;
  r.tables.push_back({"betti(" + f.module + ")", true, t});
  out << "betti " << dims_text(res.betti) << (res.terminated ? " (terminated)" : "") << "\n";
  if (per) {
    out << "periodicity: syzygy " << per->i << " isomorphic to syzygy " << per->j << "\n";
    r.witness = "period " + std::to_string(per->i) + " -> " + std::to_string(per->j);
  }
  if (!f.quiet) {
    for (std::size_t i = 0; i < res.algebra_differentials.size(); ++i) {
      const auto& d = res.algebra_differentials[i];
      if (d.rows * d.cols > 16) continue;
      out << "d" << i + 1 << " = " << algebra_matrix_text(d) << "\n";
    }
  }
  rep.results.push_back(r);
  return rep.exit_code();
}

int cmd_classify(const Flags& f, Report& rep, std::ostream& out) {
  auto env = one_shot(f, {{"X", f.module}, {"W", f.c}});
  const auto& m = env.module("X");
  classes::Options opt;
  opt.bound = f.bound;
  opt.derived.seed = f.seed;
  out << "dim " << m.dim() << ", generators " << algmod::num_generators(m) << ", free "
      << (algmod::is_free(m) ? "yes" : "no") << "\n";
  auto add = [&](const std::string& id, const classes::MembershipReport& mr) {
    Result r;
    r.id = id;
    r.tables = mr.tables;
    const auto k = mr.verdict.kind;
    r.budget_exceeded = k == classes::Verdict::Kind::Undetermined;
    r.status = r.budget_exceeded ? Status::Inconclusive : Status::Pass;
    r.witness = mr.verdict.to_string();
    out << id << ": " << r.witness << "\n";
    rep.results.push_back(r);
  };
  auto sd = classes::is_semidualizing(env.module("W"), opt);
  add("semidualizing(" + f.c + ")", sd.report);
  if (sd.holds()) {
    add("G_C", classes::in_G_C(m, sd, opt));
    add("A_C", classes::in_A_C(m, sd, opt));
    add("B_C", classes::in_B_C(m, sd, opt));
  }
  for (bool proj : {true, false}) {
    auto v = proj ? homology::pd_bounded(m, f.bound) : homology::id_bounded(m, f.bound);
    Result r;
    r.id = proj ? "pd" : "id";
    r.status = Status::Pass;
    r.witness = v.to_string();
    out << r.id << " " << r.witness << "\n";
    rep.results.push_back(r);
  }
  return rep.exit_code();
}

int cmd_search(const Flags& f, Report& rep, std::ostream& out) {
  propcheck::SearchConfig cfg;
  cfg.max_dim = f.dims;
  cfg.field = f.field.empty() ? "GF(2)" : f.field;
  cfg.seed = f.seed;
  cfg.trials = f.trials;
  cfg.bound = f.bound;
  propcheck::SearchReport sr;
  const double ms = timed(f.timings, [&] { sr = propcheck::search_counterexamples(cfg); });
  out << sr.render();
  Result r;
  r.id = "search";
  r.millis = ms;
  r.budget_exceeded = sr.budget_exceeded();
  if (!sr.failures.empty()) {
    r.status = Status::Fail;
    r.witness = sr.failures.front().witness;
    r.tables = sr.failures.front().tables;
  } else {
    r.status = r.budget_exceeded ? Status::Inconclusive : Status::Pass;
    r.witness = std::to_string(sr.examined) + " gated instances";
  }
  rep.results.push_back(r);
  Json counts;
  counts["trials"] = sr.trials_run;
  counts["too_large"] = sr.generator.too_large;
  counts["no_pair"] = sr.generator.no_pair;
  counts["pair_not_exact_on_C"] = sr.c_not_exact;
  counts["pair_not_exact_on_M"] = sr.m_not_exact;
  counts["not_in_G_C"] = sr.m_not_in_g;
  counts["undetermined"] = sr.undetermined;
  counts["examined"] = sr.examined;
  counts["passed"] = sr.passed;
  if (!sr.failures.empty()) counts["counterexample"] = sr.failures.front().recipe;
  rep.extra = counts;
  return rep.exit_code();
}

std::string join(const std::vector<std::string>& args) {
  std::string s = "ezd";
  for (const auto& a : args) s += " " + a;
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Exact zero-divisor pairs and semidualizing modules over finite-dimensional algebras", "ezd"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--bound", f.bound, "degree bound for Ext, Tor and resolutions")->check(CLI::NonNegativeNumber);
  app.add_option("--field", f.field, "GF(p) or QQ");
  app.add_option("--seed", f.seed, "random seed");
  app.add_option("--json", f.json, "write a JSON report to this path");
  app.add_flag("--quiet", f.quiet, "print failures and the summary only");
  app.add_flag("--timings", f.timings, "measure and report running times");

  auto* check = app.add_subcommand("check", "run the check statements of a script");
  check->add_option("script", f.script, "script file")->required();
  auto* resolve = app.add_subcommand("resolve", "minimal free resolution of a module");
  auto* ext = app.add_subcommand("ext", "dimensions of Ext^i(from, to)");
  auto* tor = app.add_subcommand("tor", "dimensions of Tor_i(from, to)");
  auto* classify = app.add_subcommand("classify", "class memberships of a module");
  for (auto* s : {resolve, ext, tor, classify}) s->add_option("--ring", f.ring, "ring, e.g. GF(101)[x]/(x^2)")->required();
  for (auto* s : {ext, tor}) {
    s->add_option("--from", f.from, "k, R, omega or a module expression over R");
    s->add_option("--to", f.to, "k, R, omega or a module expression over R");
  }
  for (auto* s : {resolve, classify}) s->add_option("--module", f.module, "k, R, omega or a module expression over R");
  classify->add_option("--c", f.c, "semidualizing module for the classes");
  auto* verify = app.add_subcommand("verify-paper", "run the built-in corpus");
  verify->add_option("--prop", f.prop, "restrict to one statement, e.g. A, J, K, a");
  verify->add_option("--corpus", f.corpus, "corpus directory");
  auto* search = app.add_subcommand("search", "random search for counterexamples to the open question");
  search->add_option("--trials", f.trials, "number of trials");
  search->add_option("--dims", f.dims, "largest algebra dimension");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  if (!f.field.empty()) {
    try {
      presentation::parse_script("ring T = " + f.field + "[t] / (t);");
    } catch (const Error& e) {
      err << "usage error: bad --field " << f.field << "\n";
      return kUsage;
    }
  }

  Report rep;
  rep.command = join(args);
  rep.seed = f.seed;
  rep.bound = f.bound;
  int code = kAllPass;
  try {
    if (check->parsed()) code = cmd_check(f, rep, out);
    else if (verify->parsed()) code = cmd_verify(f, rep, out);
    else if (ext->parsed()) code = cmd_ext_tor(f, true, rep, out);
    else if (tor->parsed()) code = cmd_ext_tor(f, false, rep, out);
    else if (resolve->parsed()) code = cmd_resolve(f, rep, out);
    else if (classify->parsed()) code = cmd_classify(f, rep, out);
    else if (search->parsed()) code = cmd_search(f, rep, out);
    emit(rep, f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}

}  // namespace ezd::cli
