#pragma once

#include <utility>
#include <vector>

#include "cactus/apolarity.hpp"

namespace cactus {

// A splitting (a, b) of a target bidegree with a + b = target and a strictly
// between (0,0) and the target.
class SplittingWindow {
 public:
  SplittingWindow(Bidegree a, Bidegree target);

  Bidegree a() const { return a_; }
  Bidegree b() const { return b_; }
  Bidegree target() const { return a_ + b_; }

  std::string to_string() const {
    return "(" + a_.to_string() + ")|(" + b_.to_string() + ")";
  }

 private:
  Bidegree a_, b_;
};

// All valid windows of a target bidegree, lexicographically by a.
std::vector<SplittingWindow> all_windows(Bidegree target);

// Default window for theorem verification: a = (k, 0) with k = floor(d/2)
// clamped into [r, d-r], against a target (d, e).
SplittingWindow designated_window(Bidegree target, int r);
SplittingWindow designated_window(Bidegree target, int r, int k);

struct CatalecticantMatrix {
  SplittingWindow window;
  Matrix matrix;  // rows indexed by basis of piece a, columns by piece b
};

// Entry (u, v) is the scalar (basis_u * basis_v) . p.
CatalecticantMatrix cat_matrix(const Functional& p, const SplittingWindow& w);

std::size_t cat_rank(const Functional& p, const SplittingWindow& w);

// True iff all (r+1)x(r+1) minors vanish, decided by exact rank.
bool rank_locus_member(const Functional& p, std::size_t r,
                       const SplittingWindow& w);

// Maximum of cat_rank over all windows, with the lexicographically least
// window attaining it.
std::pair<std::size_t, SplittingWindow> max_cat_rank(const Functional& p);

// True iff the 1x1 minors of the window's matrix span the whole target
// piece, i.e. the multiplication map is surjective.
bool check_unit_generation(const Model& model, const SplittingWindow& w);

}  // namespace cactus
