#include <functional>
#include <map>
#include <random>

#include "doctest.h"
#include "ezd/linalg/matrix.hpp"
#include "ezd/presentation/groebner.hpp"
#include "ezd/presentation/script.hpp"

using namespace ezd::presentation;
using ezd::linalg::Field;
using ezd::linalg::Matrix;

namespace {

const Field GF101 = Field::prime(101);
const std::vector<std::string> XY = {"x", "y"};

Polynomial poly(const std::string& text, const std::vector<std::string>& vars = XY,
                MonomialOrder order = MonomialOrder::DegRevLex, Field field = GF101) {
  auto script = parse_script("ring T = GF(101)[" + [&] {
    std::string s;
    for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
    return s;
  }() + "] / (" + text + ");");
  const auto& ring = std::get<RingDecl>(script.statements[0]);
  return evaluate_polynomial(ring.generators.at(0), field, vars, order);
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint32_t max_deg) {
  std::vector<Monomial> out;
  Monomial m(nvars, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t v, std::uint32_t left) {
    if (v == nvars) {
      out.push_back(m);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      m[v] = e;
      rec(v + 1, left - e);
    }
    m[v] = 0;
  };
  rec(0, max_deg);
  return out;
}

// Oracle: span of all multiples m*g of degree <= max_deg, as coefficient rows.
Matrix truncated_ideal(const std::vector<Polynomial>& gens, std::uint32_t max_deg,
                       std::map<Monomial, std::size_t>& index) {
  auto mons = monomials_up_to(gens[0].nvars(), max_deg);
  for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
  std::vector<Polynomial> rows;
  for (const auto& g : gens) {
    for (const auto& m : mons) {
      auto p = g.times_term(ezd::linalg::Scalar::one(GF101), m);
      if (degree(p.leading().exponents) <= max_deg) rows.push_back(p);
    }
  }
  Matrix mat(GF101, rows.size(), mons.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& t : rows[r].terms()) mat.set(r, index.at(t.exponents), t.coeff);
  }
  return mat;
}

}  // namespace

TEST_CASE("monomial orders") {
  // degrevlex: x*y^2 vs x^2*y -> x^2*y larger; x > y
  CHECK(monomial_greater({2, 1}, {1, 2}, MonomialOrder::DegRevLex));
  CHECK(monomial_greater({1, 0}, {0, 1}, MonomialOrder::DegRevLex));
  CHECK(monomial_greater({0, 3}, {2, 0}, MonomialOrder::DegRevLex));
  CHECK(monomial_greater({2, 0}, {0, 3}, MonomialOrder::Lex));
  // degrevlex three variables: x*z vs y^2 -> y^2 larger
  CHECK(monomial_greater({0, 2, 0}, {1, 0, 1}, MonomialOrder::DegRevLex));
  CHECK(monomial_greater({1, 0, 1}, {0, 2, 0}, MonomialOrder::Lex));
}

TEST_CASE("groebner basis of {xy, x^2 - y^2} checked against truncated linear algebra") {
  std::vector<Polynomial> gens = {poly("x*y"), poly("x^2 - y^2")};
  auto gb = groebner_basis(gens);
  REQUIRE(gb.size() == 3);
  CHECK(gb[0] == poly("x*y"));
  CHECK(gb[1] == poly("x^2 - y^2"));
  CHECK(gb[2] == poly("y^3"));

  std::map<Monomial, std::size_t> index;
  Matrix span = truncated_ideal(gens, 4, index);
  Matrix y3(GF101, 1, index.size());
  y3.set(0, index.at({0, 3}), 1);
  CHECK(ezd::linalg::span_contains(span.transpose(), y3.transpose()));
  // every monomial of degree 3 and 4 lies in the ideal; the quotient in degree <= 4 has dim 4
  CHECK(index.size() - ezd::linalg::rank(span) == 4);
}

TEST_CASE("monomial ideals are their own groebner bases") {
  CHECK(groebner_basis({poly("x^2")}) == std::vector<Polynomial>{poly("x^2")});
  auto gb = groebner_basis({poly("x^2"), poly("x*y"), poly("y^2")});
  CHECK(gb.size() == 3);
  for (const auto& g : {poly("x^2"), poly("x*y"), poly("y^2")}) {
    CHECK(std::find(gb.begin(), gb.end(), g) != gb.end());
  }
}

TEST_CASE("groebner pair budget") {
  std::vector<Polynomial> gens = {poly("x*y - y^2"), poly("x^2 - y^3"), poly("x^3 + y")};
  CHECK_THROWS_AS(groebner_basis(gens, 0), BudgetExceededError);
  CHECK_NOTHROW(groebner_basis(gens));
}

TEST_CASE("staircase golden dimensions") {
  auto q = make_presentation(GF101, XY, {poly("x^2"), poly("x*y"), poly("y^2")});
  CHECK(q.dim() == 3);
  CHECK(q.staircase == std::vector<Monomial>{{0, 0}, {1, 0}, {0, 1}});

  auto h = make_presentation(GF101, XY, {poly("x*y"), poly("x^2 - y^2")});
  CHECK(h.staircase == std::vector<Monomial>{{0, 0}, {1, 0}, {0, 1}, {0, 2}});

  CHECK_THROWS_AS(make_presentation(GF101, XY, {poly("x*y")}), InfiniteDimensionalError);
  CHECK_THROWS_AS(make_presentation(GF101, {"x"}, {}), InfiniteDimensionalError);
}

TEST_CASE("structure constants") {
  auto q = make_presentation(GF101, XY, {poly("x*y"), poly("x^2 - y^2")});
  auto table = structure_constants(q);
  const std::size_t d = q.dim();
  CHECK(table[0] == Matrix::identity(GF101, d));
  // x*x = y^2
  auto xx = table[1].column(1);
  CHECK(xx == Matrix::from_ints(GF101, 4, 1, {0, 0, 0, 1}));
  CHECK(table[1].column(2).is_zero());
  // commutative and associative over all basis triples
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      CHECK(table[i].column(j) == table[j].column(i));
      CHECK(table[i] * table[j] == table[j] * table[i]);
    }
  }
  // dim = rank of normal-form map on the truncated monomial space
  auto mons = monomials_up_to(2, 4);
  Matrix nf(GF101, d, mons.size());
  for (std::size_t c = 0; c < mons.size(); ++c) {
    auto coords = q.coordinates(Polynomial::monomial(GF101, q.order, ezd::linalg::Scalar::one(GF101), mons[c]));
    for (std::size_t r = 0; r < d; ++r) nf.set(r, c, coords[r]);
  }
  CHECK(ezd::linalg::rank(nf) == d);
}

TEST_CASE("lex order presentation") {
  auto q = make_presentation(GF101, XY,
                             {poly("x*y", XY, MonomialOrder::Lex), poly("x^2 - y^2", XY, MonomialOrder::Lex)},
                             MonomialOrder::Lex);
  // lex: x^2 - y^2 has leading x^2; y^3 joins the basis as before.
  CHECK(q.dim() == 4);
}

TEST_CASE("script parsing examples") {
  auto s = parse_script("ring R = GF(101)[x,y] / (x*y, x^2 - y^2);");
  REQUIRE(s.statements.size() == 1);
  const auto& r = std::get<RingDecl>(s.statements[0]);
  CHECK(r.name == "R");
  CHECK(r.generators.size() == 2);
  CHECK(r.variables == XY);

  auto z = parse_script("ring R = GF(101)[x] / ();");
  CHECK(std::get<RingDecl>(z.statements[0]).generators.empty());

  CHECK_THROWS_AS(parse_script("ring R = GF(4)[x]/(x^2);"), ParseError);
  try {
    parse_script("ring R = GF(101)[x]/(x^2);\nmodule M = free(S, 1);");
    FAIL("expected an error");
  } catch (const UndefinedNameError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 17);
  }
  CHECK_THROWS_AS(parse_script("ring R = GF(101)[x]/(x^2) ;\ncheck frobnicate(R);"), UndefinedNameError);
  CHECK_THROWS_AS(parse_script("ring R = GF(101)[x]/(y^2);"), UndefinedNameError);
  CHECK_THROWS_AS(parse_script("ring R = GF(101)[x]/(x^2)"), ParseError);
  CHECK_THROWS_AS(parse_script("ring R = GF(101)[x]/(x^2); ring R = QQ[y]/(y);"), ParseError);
}

TEST_CASE("pretty print then reparse is the identity") {
  const char* text = R"(# comment
ring R = GF(101)[x,y] / (x*y, x^2 - y^2);
ring L = QQ[a,b] / (a^3, b^2 - a*b, -(a - b)*a) lex;
element u = x + 2*y^2 in R;
module M = quot(free(R, 2), [x, y], [0, x*y]);
module N = hom(M, dualk(free(R,1)));
check not iso(M, N) bound 4;
check ezd(u, x - -y, M);
check betti(M, [1, 2, 3]);
)";
  auto s = parse_script(text);
  auto printed = pretty_print(s);
  auto again = parse_script(printed);
  CHECK(again == s);
  CHECK(pretty_print(again) == printed);
  CHECK(printed.find("x - -y") != std::string::npos);

  std::mt19937_64 rng(99);
  // random expression trees survive the round trip
  for (int trial = 0; trial < 200; ++trial) {
    std::function<std::string(int)> gen = [&](int depth) -> std::string {
      int k = depth <= 0 ? rng() % 2 : rng() % 7;
      switch (k) {
        case 0: return "x";
        case 1: return std::to_string(rng() % 5);
        case 2: return "(" + gen(depth - 1) + " + " + gen(depth - 1) + ")";
        case 3: return "(" + gen(depth - 1) + " - " + gen(depth - 1) + ")";
        case 4: return "(" + gen(depth - 1) + ")*(" + gen(depth - 1) + ")";
        case 5: return "-(" + gen(depth - 1) + ")";
        default: return "(" + gen(depth - 1) + ")^" + std::to_string(rng() % 3 + 1);
      }
    };
    std::string t = "ring R = GF(7)[x,y] / (" + gen(4) + ", y^2);";
    auto parsed = parse_script(t);
    CHECK(parse_script(pretty_print(parsed)) == parsed);
  }
}
