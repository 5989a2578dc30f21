#include "ezd/algmod/module.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace ezd::algmod {

namespace {

// Above this dimension the representation check uses random probe vectors
// instead of full matrix products.
constexpr std::size_t kExactCheckDim = 128;

std::size_t probe_count(const Field& f) {
  if (f.is_rational()) return 2;
  std::size_t n = 1;
  double miss = 1.0 / static_cast<double>(f.characteristic());
  for (double p = miss; p > 1e-12; p *= miss) ++n;
  return n;
}

// m applied to vector v through powers of the variable actions.
Matrix apply_monomial(const std::vector<Matrix>& actions, const Monomial& m, Matrix v) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::uint32_t e = 0; e < m[i]; ++e) v = actions[i] * v;
  }
  return v;
}

Matrix apply_polynomial(const std::vector<Matrix>& actions, const Polynomial& p, const Matrix& v) {
  Matrix out(v.field(), v.rows(), v.cols());
  for (const auto& t : p.terms()) out += t.coeff * apply_monomial(actions, t.exponents, v);
  return out;
}

void check_representation(const Algebra& a, std::size_t dim, const std::vector<Matrix>& actions) {
  const Field& f = a.field();
  if (actions.size() != a.num_variables()) throw Error("module: one action per variable required");
  for (const auto& x : actions) {
    if (!(x.field() == f)) throw Error("module: action over the wrong field");
    if (x.rows() != dim || x.cols() != dim) throw Error("module: action size mismatch");
  }
  if (dim == 0) return;
  std::vector<Matrix> probes;
  if (dim <= kExactCheckDim) {
    probes.push_back(Matrix::identity(f, dim));
  } else {
    std::mt19937_64 rng(0x5eed + dim);
    for (std::size_t i = 0; i < probe_count(f); ++i) probes.push_back(Matrix::random(f, dim, 1, rng));
  }
  for (const auto& r : probes) {
    for (std::size_t v = 0; v < actions.size(); ++v) {
      Matrix xr = actions[v] * r;
      for (std::size_t w = v + 1; w < actions.size(); ++w) {
        if (!(actions[w] * xr == actions[v] * (actions[w] * r))) {
          throw Error("module: actions of " + a.variables()[v] + " and " + a.variables()[w] +
                      " do not commute");
        }
      }
    }
    for (const auto& g : a.presentation().groebner) {
      if (!apply_polynomial(actions, g, r).is_zero()) {
        throw Error("module: relation " + g.to_string(a.variables()) + " does not act as zero");
      }
    }
  }
}

}  // namespace

Module::Module(AlgebraPtr algebra, std::vector<Matrix> actions)
    : algebra_(std::move(algebra)), actions_(std::move(actions)) {
  if (!algebra_) throw Error("module: missing algebra");
  dim_ = actions_.empty() ? 0 : actions_.front().rows();
  check_representation(*algebra_, dim_, actions_);
}

Module Module::zero(AlgebraPtr algebra) {
  std::vector<Matrix> actions(algebra->num_variables(), Matrix(algebra->field(), 0, 0));
  if (actions.empty()) throw Error("module: algebra without variables");
  return Module(std::move(algebra), std::move(actions));
}

Matrix Module::monomial_action(const Monomial& m) const {
  return apply_monomial(actions_, m, Matrix::identity(field(), dim_));
}

Matrix Module::polynomial_action(const Polynomial& p) const {
  return apply_polynomial(actions_, p, Matrix::identity(field(), dim_));
}

Matrix Module::element_action(const Element& r) const {
  if (!same_algebra(r.algebra(), algebra_)) throw Error("element_action: element of another algebra");
  const auto& q = algebra_->presentation();
  // build monomial actions along the staircase, each from a divisor one step down
  std::map<std::size_t, Matrix> cache;
  std::function<const Matrix&(std::size_t)> mon = [&](std::size_t i) -> const Matrix& {
    auto it = cache.find(i);
    if (it != cache.end()) return it->second;
    const Monomial& m = q.staircase[i];
    Matrix value = Matrix::identity(field(), dim_);
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      Monomial d = m;
      --d[v];
      value = actions_[v] * mon(q.index_of(d));
      break;
    }
    return cache.emplace(i, std::move(value)).first->second;
  };
  Matrix out(field(), dim_, dim_);
  for (std::size_t i = 0; i < r.coords().size(); ++i) {
    if (!r.coords()[i].is_zero()) out += r.coords()[i] * mon(i);
  }
  return out;
}

std::string Module::describe() const {
  std::ostringstream os;
  os << "module of dimension " << dim_ << " over " << algebra_->describe();
  return os.str();
}

bool intertwines(const Matrix& f, const Module& source, const Module& target) {
  if (f.rows() != target.dim() || f.cols() != source.dim()) return false;
  for (std::size_t v = 0; v < source.actions().size(); ++v) {
    if (!(f * source.action(v) == target.action(v) * f)) return false;
  }
  return true;
}

void require_same_algebra(const Module& a, const Module& b, const char* what) {
  if (!same_algebra(a.algebra(), b.algebra())) {
    throw Error(std::string(what) + ": modules over different algebras");
  }
}

Morphism::Morphism(Module source, Module target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  require_same_algebra(source_, target_, "morphism");
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim()) {
    throw Error("morphism: matrix size does not match the modules");
  }
  if (!intertwines(matrix_, source_, target_)) throw Error("morphism: matrix is not A-linear");
}

Morphism Morphism::identity(const Module& m) {
  return Morphism(m, m, Matrix::identity(m.field(), m.dim()));
}

bool Morphism::is_isomorphism() const {
  return source_.dim() == target_.dim() && linalg::is_invertible(matrix_);
}

}  // namespace ezd::algmod
