#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cactus/catalecticant.hpp"
#include "testutil.hpp"

using namespace cactus;
using testutil::Rng;

namespace {

Functional dual_monomial(const Model& model, Bidegree deg, const Monomial& m) {
  Functional f(model, deg);
  long idx = model.monomial_index(deg, m);
  REQUIRE(idx >= 0);
  f.coeff(idx) = Scalar::one(model.field());
  return f;
}

Functional binary_dual(const Model& model, Bidegree deg, int a) {
  int total = model.kind() == ModelKind::TwistedBinary
                  ? deg.i + model.param1() * deg.j
                  : deg.i;
  return dual_monomial(model, deg, Monomial{{a, total - a}, {}});
}

Functional binary_power_sum(const Model& model, Bidegree deg,
                            const std::vector<int>& exps) {
  Functional f(model, deg);
  for (int a : exps) f = f + binary_dual(model, deg, a);
  return f;
}

}  // namespace

TEST_CASE("window validation") {
  Bidegree target{2, 2};
  CHECK_THROWS_AS(SplittingWindow({0, 0}, target), std::invalid_argument);
  CHECK_THROWS_AS(SplittingWindow({2, 2}, target), std::invalid_argument);
  CHECK_THROWS_AS(SplittingWindow({3, 0}, target), std::invalid_argument);
  SplittingWindow w({1, 2}, target);
  CHECK(w.b() == Bidegree{1, 0});
  CHECK(all_windows(target).size() == 7);
  CHECK(all_windows({3, 0}).size() == 2);

  // default theorem window: floor(d/2) clamped into [r, d-r]
  CHECK(designated_window({5, 1}, 2).a() == Bidegree{2, 0});
  CHECK(designated_window({7, 1}, 3).a() == Bidegree{3, 0});
  CHECK(designated_window({4, 1}, 2).a() == Bidegree{2, 0});
  CHECK(designated_window({5, 1}, 2, 3).a() == Bidegree{3, 0});
  CHECK_THROWS_AS(designated_window({5, 1}, 2, 4), std::invalid_argument);
}

TEST_CASE("cat_matrix rejects windows of the wrong target") {
  Field q = Field::rationals();
  Model tb = Model::twisted_binary(1, q);
  Rng rng(5);
  Functional p = testutil::random_functional(tb, {3, 1}, rng);
  SplittingWindow w({2, 0}, {5, 1});
  CHECK_THROWS_AS(cat_matrix(p, w), std::invalid_argument);
}

TEST_CASE("catalecticant matrices of segre points") {
  Field q = Field::rationals();
  Model ap = Model::ambient_product(1, 1, q);
  SplittingWindow w({1, 0}, {1, 1});

  Functional corner = dual_monomial(ap, {1, 1}, Monomial{{1, 0}, {1, 0}});
  CatalecticantMatrix cm = cat_matrix(corner, w);
  CHECK(cm.matrix.rows() == 2);
  CHECK(cm.matrix.cols() == 2);
  CHECK(cm.matrix(0, 0).is_one());
  CHECK(cm.matrix(0, 1).is_zero());
  CHECK(cm.matrix(1, 0).is_zero());
  CHECK(cm.matrix(1, 1).is_zero());
  CHECK(cat_rank(corner, w) == 1);

  Functional segre = corner + dual_monomial(ap, {1, 1}, Monomial{{0, 1}, {0, 1}});
  CHECK(cat_rank(segre, w) == 2);

  Functional pure = dual_monomial(ap, {2, 2}, Monomial{{2, 0}, {2, 0}});
  for (const auto& win : all_windows({2, 2})) {
    CHECK(cat_rank(pure, win) == 1);
  }
}

TEST_CASE("catalecticant ranks on the twisted binary model") {
  Field q = Field::rationals();
  Model tb = Model::twisted_binary(1, q);
  Bidegree target{5, 1};
  SplittingWindow w({2, 0}, target);

  Functional sixth_powers = binary_power_sum(tb, target, {6, 0});
  CHECK(cat_rank(sixth_powers, w) == 2);

  Functional tangent = binary_dual(tb, target, 5);  // x0^(5) x1
  CHECK(cat_rank(tangent, w) == 2);

  // evaluation vectors have rank one at every window
  ProjectivePoint pt{{Scalar::one(q), Scalar::from_int(q, 2)}, {}};
  Functional nu = veronese_functional(tb, pt, target);
  for (const auto& win : all_windows(target)) {
    CHECK(cat_rank(nu, win) == 1);
  }
}

TEST_CASE("rank locus membership") {
  Field q = Field::rationals();
  Model tb = Model::twisted_binary(1, q);
  Bidegree target{5, 1};

  // span of two points stays in every rank-2 locus
  ProjectivePoint p1{{Scalar::one(q), Scalar::zero(q)}, {}};
  ProjectivePoint p2{{Scalar::one(q), Scalar::one(q)}, {}};
  Functional combo = veronese_functional(tb, p1, target) +
                     veronese_functional(tb, p2, target).scaled(Scalar::from_int(q, 3));
  for (const auto& win : all_windows(target)) {
    CHECK(rank_locus_member(combo, 2, win));
  }

  // three distinct sixth powers fall outside the rank-2 locus
  Functional three = binary_power_sum(tb, target, {6, 0}) +
                     veronese_functional(tb, p2, target);
  SplittingWindow w30({3, 0}, target);
  CHECK_FALSE(rank_locus_member(three, 2, w30));
  CHECK(cat_rank(three, w30) == 3);

  // r at least the smaller piece dimension is vacuous
  CHECK(rank_locus_member(three, 4, w30));
}

TEST_CASE("max_cat_rank picks the lexicographically least argmax") {
  Field q = Field::rationals();
  Model sp = Model::single_projective(1, q);
  Functional cubic = binary_dual(sp, {3, 0}, 2);  // x0^(2) x1
  auto [rank, window] = max_cat_rank(cubic);
  CHECK(rank == 2);
  CHECK(window.a() == Bidegree{1, 0});

  ProjectivePoint pt{{Scalar::from_int(q, 2), Scalar::one(q)}, {}};
  auto [rank_nu, win_nu] = max_cat_rank(veronese_functional(sp, pt, {4, 0}));
  CHECK(rank_nu == 1);
  CHECK(win_nu.a() == Bidegree{1, 0});

  Model ap = Model::ambient_product(1, 1, q);
  Functional segre = dual_monomial(ap, {1, 1}, Monomial{{1, 0}, {1, 0}}) +
                     dual_monomial(ap, {1, 1}, Monomial{{0, 1}, {0, 1}});
  CHECK(max_cat_rank(segre).first == 2);

  CHECK_THROWS_AS(max_cat_rank(Functional(ap, {1, 1})), std::invalid_argument);
}

TEST_CASE("unit generation = surjective multiplication at the window") {
  Field q = Field::rationals();
  Model tb = Model::twisted_binary(1, q);
  CHECK(check_unit_generation(tb, SplittingWindow({2, 0}, {5, 1})));
  Model ap = Model::ambient_product(1, 1, q);
  CHECK(check_unit_generation(ap, SplittingWindow({1, 0}, {1, 1})));
  CHECK_THROWS_AS(SplittingWindow({0, 0}, {1, 1}), std::invalid_argument);
}

TEST_CASE("cat_rank equals the apolar Hilbert entry at every window") {
  Rng rng(20240815);
  Field f5 = Field::prime(5);
  struct Case {
    Model model;
    Bidegree deg;
  };
  std::vector<Case> cases = {{Model::ambient_product(1, 1, f5), {2, 2}},
                             {Model::ambient_product(1, 1, f5), {3, 3}},
                             {Model::twisted_binary(1, f5), {5, 1}}};
  for (const auto& c : cases) {
    for (int trial = 0; trial < 200; ++trial) {
      Functional p = testutil::random_functional(c.model, c.deg, rng);
      ApolarProfile profile = apolar_hilbert(p);
      for (const auto& w : all_windows(c.deg)) {
        CHECK(static_cast<long>(cat_rank(p, w)) == profile.at(w.a()));
      }
    }
  }
}

TEST_CASE("rank symmetry and scale invariance") {
  Rng rng(20240816);
  Field f7 = Field::prime(7);
  Model ap = Model::ambient_product(1, 1, f7);
  Bidegree deg{2, 2};
  for (int trial = 0; trial < 100; ++trial) {
    Functional p = testutil::random_functional(ap, deg, rng);
    for (const auto& w : all_windows(deg)) {
      SplittingWindow flipped(w.b(), deg);
      CHECK(cat_rank(p, w) == cat_rank(p, flipped));
    }
    Scalar lambda = testutil::random_nonzero_scalar(f7, rng);
    SplittingWindow w11({1, 1}, deg);
    CHECK(cat_rank(p, w11) == cat_rank(p.scaled(lambda), w11));
  }
}

TEST_CASE("spans of few evaluation vectors have bounded rank, exhaustively") {
  Field f3 = Field::prime(3);
  Model tb = Model::twisted_binary(1, f3);
  Bidegree target{3, 1};
  auto pts = testutil::all_projective_tuples(f3, 2);
  std::vector<Functional> nus;
  for (const Vec& a : pts) {
    nus.push_back(veronese_functional(tb, ProjectivePoint{a, {}}, target));
  }
  auto windows = all_windows(target);
  std::vector<Scalar> coeffs = {Scalar::one(f3), Scalar::from_int(f3, 2)};
  // all coefficient combinations of up to three evaluation vectors
  for (std::size_t r = 1; r <= 3; ++r) {
    std::vector<std::size_t> idx(r, 0);
    std::vector<std::size_t> cidx(r, 0);
    auto advance = [](std::vector<std::size_t>& v, std::size_t base) {
      for (std::size_t t = 0; t < v.size(); ++t) {
        if (++v[t] < base) return true;
        v[t] = 0;
      }
      return false;
    };
    do {
      std::vector<std::size_t> c(r, 0);
      do {
        Functional sum(tb, target);
        for (std::size_t t = 0; t < r; ++t) {
          sum = sum + nus[idx[t]].scaled(coeffs[c[t]]);
        }
        if (sum.is_zero()) continue;
        for (const auto& w : windows) {
          CHECK(cat_rank(sum, w) <= r);
        }
      } while (advance(c, coeffs.size()));
    } while (advance(idx, nus.size()));
  }
}
