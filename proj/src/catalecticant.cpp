#include "cactus/catalecticant.hpp"

#include <algorithm>

namespace cactus {

SplittingWindow::SplittingWindow(Bidegree a, Bidegree target)
    : a_(a), b_(target - a) {
  if (!a_.nonnegative() || !b_.nonnegative() || a_ == Bidegree{0, 0} ||
      a_ == target) {
    throw std::invalid_argument("invalid window " + a.to_string() +
                                " for target " + target.to_string());
  }
}

std::vector<SplittingWindow> all_windows(Bidegree target) {
  std::vector<SplittingWindow> ws;
  for (int i = 0; i <= target.i; ++i) {
    for (int j = 0; j <= target.j; ++j) {
      Bidegree a{i, j};
      if (a == Bidegree{0, 0} || a == target) continue;
      ws.emplace_back(a, target);
    }
  }
  return ws;
}

SplittingWindow designated_window(Bidegree target, int r) {
  int k = std::clamp(target.i / 2, r, target.i - r);
  return designated_window(target, r, k);
}

SplittingWindow designated_window(Bidegree target, int r, int k) {
  if (k < r || k > target.i - r) {
    throw std::invalid_argument("k outside [r, d-r]");
  }
  return SplittingWindow({k, 0}, target);
}

CatalecticantMatrix cat_matrix(const Functional& p, const SplittingWindow& w) {
  if (w.target() != p.bidegree()) {
    throw std::invalid_argument("window does not match functional bidegree");
  }
  const Model& model = p.model();
  auto arows = model.piece_basis(w.a());
  long bdim = model.piece_dim(w.b());
  Matrix m(model.field(), arows.size(), bdim);
  for (std::size_t u = 0; u < arows.size(); ++u) {
    // Row u is the contraction basis_u . p, paired against the b-basis.
    Functional q = contract(RingElement::monomial(model, w.a(), arows[u]), p);
    for (long v = 0; v < bdim; ++v) m.set(u, v, q.coeff(v));
  }
  return {w, std::move(m)};
}

std::size_t cat_rank(const Functional& p, const SplittingWindow& w) {
  return mat_rank(cat_matrix(p, w).matrix);
}

bool rank_locus_member(const Functional& p, std::size_t r,
                       const SplittingWindow& w) {
  return cat_rank(p, w) <= r;
}

std::pair<std::size_t, SplittingWindow> max_cat_rank(const Functional& p) {
  if (p.is_zero()) throw std::invalid_argument("not a projective point");
  auto windows = all_windows(p.bidegree());
  std::size_t best = 0;
  const SplittingWindow* argmax = nullptr;
  for (const auto& w : windows) {
    std::size_t rk = cat_rank(p, w);
    if (argmax == nullptr || rk > best) {
      best = rk;
      argmax = &w;
    }
  }
  if (argmax == nullptr) {
    throw std::invalid_argument("bidegree admits no window");
  }
  return {best, *argmax};
}

bool check_unit_generation(const Model& model, const SplittingWindow& w) {
  long tdim = model.piece_dim(w.target());
  return static_cast<long>(mat_rank(multiplication_map(model, w.a(), w.b()))) == tdim;
}

}  // namespace cactus
