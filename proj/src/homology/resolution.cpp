#include "ezd/homology/resolution.hpp"

namespace ezd::homology {

bool AlgebraMatrix::entries_in_radical() const {
  for (const auto& e : entries) {
    if (!e.in_radical()) return false;
  }
  return true;
}

std::size_t FreeResolution::free_dim(std::size_t i) const {
  return i < betti.size() ? betti[i] * module.algebra()->dim() : 0;
}

Matrix orbit_columns(const Module& m, const Matrix& v) {
  const auto& q = m.algebra()->presentation();
  const std::size_t d = q.dim();
  Matrix out(m.field(), m.dim(), d);
  std::vector<Matrix> cols;
  cols.reserve(d);
  cols.push_back(v);
  for (std::size_t t = 1; t < d; ++t) {
    const auto& mono = q.staircase[t];
    std::size_t var = 0;
    while (mono[var] == 0) ++var;
    auto parent = mono;
    --parent[var];
    cols.push_back(m.action(var) * cols[q.index_of(parent)]);
  }
  for (std::size_t t = 0; t < d; ++t) out.set_block(0, t, cols[t]);
  return out;
}

namespace {

AlgebraMatrix to_algebra_matrix(const AlgebraPtr& a, const Matrix& k, std::size_t rows,
                                std::size_t cols) {
  const std::size_t d = a->dim();
  AlgebraMatrix out{rows, cols, {}};
  out.entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::vector<linalg::Scalar> coords;
      for (std::size_t t = 0; t < d; ++t) coords.push_back(k.at(r * d + t, c * d));
      out.entries.push_back(a->element(coords));
    }
  }
  return out;
}

}  // namespace

ResolutionBuilder::ResolutionBuilder(const Module& m, std::size_t budget)
    : res_{m, {}, Matrix(m.field(), m.dim(), 0), {}, {}, {}, {}, false, false, 0},
      budget_(budget),
      pending_(m),
      pending_inclusion(Matrix::identity(m.field(), m.dim())) {
  if (m.dim() == 0) res_.terminated = true;
}

bool ResolutionBuilder::step() {
  if (done()) return false;
  const AlgebraPtr& a = res_.module.algebra();
  const std::size_t d = a->dim();
  const Module& s = pending_;
  Matrix gens = algmod::minimal_generators(s);
  const std::size_t b = gens.cols();
  if (res_.total_dim + b * d > budget_) {
    res_.budget_exceeded = true;
    return false;
  }
  Matrix eps(s.field(), s.dim(), b * d);
  for (std::size_t j = 0; j < b; ++j) eps.set_block(0, j * d, orbit_columns(s, gens.column(j)));
  const std::size_t i = res_.betti.size();
  if (i == 0) {
    res_.augmentation = eps;
  } else {
    Matrix di = pending_inclusion * eps;
    res_.algebra_differentials.push_back(to_algebra_matrix(a, di, res_.betti.back(), b));
    res_.differentials.push_back(std::move(di));
  }
  res_.betti.push_back(b);
  res_.total_dim += b * d;

  Module fi = algmod::free_module(a, b);
  auto syz = algmod::kernel(Morphism(fi, s, eps));
  res_.syzygies.push_back(syz.module);
  res_.syzygy_inclusions.push_back(syz.inclusion.matrix());
  pending_inclusion = syz.inclusion.matrix();
  pending_ = syz.module;
  if (pending_.dim() == 0) res_.terminated = true;
  return true;
}

FreeResolution minimal_free_resolution(const Module& m, std::size_t bound, std::size_t budget) {
  ResolutionBuilder builder(m, budget);
  while (builder.result().betti.size() <= bound && builder.step()) {
  }
  return builder.result();
}

}  // namespace ezd::homology
