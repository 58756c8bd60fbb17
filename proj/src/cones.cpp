#include "cactus/cones.hpp"

#include <sstream>

#include "cactus/exactalg.hpp"

namespace cactus {

namespace {

constexpr int kMaxRho = 20;  // bounds the 2^rho vertex sweeps

mpq_class dot(const ZVec& phi, const QVec& d) {
  mpq_class acc = 0;
  for (std::size_t t = 0; t < phi.size(); ++t) acc += phi[t] * d[t];
  return acc;
}

QVec operator+(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) r[t] = a[t] + b[t];
  return r;
}

QVec operator-(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) r[t] = a[t] - b[t];
  return r;
}

QVec scale(const mpq_class& c, const QVec& v) {
  QVec r(v.size());
  for (std::size_t t = 0; t < v.size(); ++t) r[t] = c * v[t];
  return r;
}

ZVec zscale(const mpz_class& c, const ZVec& v) {
  ZVec r(v.size());
  for (std::size_t t = 0; t < v.size(); ++t) r[t] = c * v[t];
  return r;
}

ZVec zadd(const ZVec& a, const ZVec& b) {
  ZVec r(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) r[t] = a[t] + b[t];
  return r;
}

ZVec zsub(const ZVec& a, const ZVec& b) {
  ZVec r(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) r[t] = a[t] - b[t];
  return r;
}

// Nearest integer, with exact halves rounded down: ceil(x - 1/2).
mpz_class round_half_down(const mpq_class& x) {
  mpq_class shifted = x - mpq_class(1, 2);
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), shifted.get_num().get_mpz_t(),
             shifted.get_den().get_mpz_t());
  return q;
}

mpz_class ceil_q(const mpq_class& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

std::vector<ZVec> standard_basis(int rho) {
  std::vector<ZVec> basis(rho, ZVec(rho, 0));
  for (int t = 0; t < rho; ++t) basis[t][t] = 1;
  return basis;
}

// Vertices +-b_1 +- ... +- b_m of the cube spanned by the basis, enumerated
// with the all-minus vertex first.
std::vector<ZVec> cube_vertices(const std::vector<ZVec>& basis, int rho) {
  std::size_t m = basis.size();
  std::vector<ZVec> verts;
  verts.reserve(std::size_t{1} << m);
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    ZVec v(rho, 0);
    for (std::size_t t = 0; t < m; ++t) {
      mpz_class sign = (mask >> t & 1) ? 1 : -1;
      for (int u = 0; u < rho; ++u) v[u] += sign * basis[t][u];
    }
    verts.push_back(std::move(v));
  }
  return verts;
}

// Exact rational solve B y = target for the sublattice coordinates.
QVec sublattice_coordinates(const std::vector<ZVec>& basis, const QVec& target) {
  Field q = Field::rationals();
  std::size_t rho = target.size();
  Matrix m(q, rho, basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    for (std::size_t row = 0; row < rho; ++row) {
      m.set(row, col, Scalar::from_mpq(mpq_class(basis[col][row])));
    }
  }
  Vec rhs(rho, Scalar::zero(q));
  for (std::size_t row = 0; row < rho; ++row) rhs[row] = Scalar::from_mpq(target[row]);
  auto sol = solve_membership(m, rhs);
  if (!sol) {
    throw std::invalid_argument("midpoint is not in the span of the sublattice");
  }
  QVec y(basis.size());
  for (std::size_t t = 0; t < basis.size(); ++t) y[t] = (*sol)[t].rational();
  return y;
}

}  // namespace

QVec to_qvec(const ZVec& v) {
  QVec r(v.size());
  for (std::size_t t = 0; t < v.size(); ++t) r[t] = v[t];
  return r;
}

std::string vec_to_string(const ZVec& v) {
  std::string s;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) s += " ";
    s += v[t].get_str();
  }
  return s;
}

std::string vec_to_string(const QVec& v) {
  std::string s;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) s += " ";
    s += v[t].get_str();
  }
  return s;
}

ConeSpec::ConeSpec(int rho, std::vector<ZVec> dual_generators, ZVec h)
    : rho_(rho), dual_generators_(std::move(dual_generators)), h_(std::move(h)) {
  if (rho_ < 1 || rho_ > kMaxRho) {
    throw std::invalid_argument("lattice rank must be in [1, 20]");
  }
  if (dual_generators_.empty()) {
    throw std::invalid_argument("need at least one dual generator");
  }
  for (const ZVec& g : dual_generators_) {
    if (static_cast<int>(g.size()) != rho_) {
      throw std::invalid_argument("dual generator has wrong length");
    }
  }
  if (static_cast<int>(h_.size()) != rho_) {
    throw std::invalid_argument("H has wrong length");
  }
  QVec hq = to_qvec(h_);
  for (const ZVec& g : dual_generators_) {
    if (dot(g, hq) <= 0) {
      throw std::invalid_argument("H must be strictly positive on every dual generator");
    }
  }
  // Pointedness: the dual generators must span the dual space.
  Field q = Field::rationals();
  Matrix m(q, dual_generators_.size(), rho_);
  for (std::size_t row = 0; row < dual_generators_.size(); ++row) {
    for (int col = 0; col < rho_; ++col) {
      m.set(row, col, Scalar::from_mpq(mpq_class(dual_generators_[row][col])));
    }
  }
  if (mat_rank(m) != static_cast<std::size_t>(rho_)) {
    throw std::invalid_argument("cone is not pointed: dual generators do not span");
  }
}

mpq_class ConeSpec::min_coeff(const QVec& d) const {
  if (static_cast<int>(d.size()) != rho_) {
    throw std::invalid_argument("vector has wrong length");
  }
  mpq_class best;
  bool first = true;
  for (const ZVec& g : dual_generators_) {
    mpq_class value = dot(g, d) / dot(g, to_qvec(h_));
    if (first || value < best) {
      best = value;
      first = false;
    }
  }
  return best;
}

std::optional<std::size_t> ConeSpec::violated_generator(const QVec& d) const {
  for (std::size_t t = 0; t < dual_generators_.size(); ++t) {
    if (dot(dual_generators_[t], d) < 0) return t;
  }
  return std::nullopt;
}

ZVec cube_lattice_point(const ConeSpec& cone, const QVec& dp, const QVec& dpp,
                        const std::optional<std::vector<ZVec>>& sublattice) {
  const std::vector<ZVec> basis =
      sublattice ? *sublattice : standard_basis(cone.rho());
  QVec diff = dp - dpp;
  for (const ZVec& v : cube_vertices(basis, cone.rho())) {
    if (!cone.contains(diff + to_qvec(v))) {
      throw VertexNotInCone(v, "cube vertex outside cone: " + vec_to_string(v));
    }
  }

  QVec mid = scale(mpq_class(1, 2), dp + dpp);
  ZVec point;
  if (!sublattice) {
    point.resize(cone.rho());
    for (int t = 0; t < cone.rho(); ++t) point[t] = round_half_down(mid[t]);
  } else {
    QVec y = sublattice_coordinates(basis, mid);
    point.assign(cone.rho(), 0);
    for (std::size_t t = 0; t < basis.size(); ++t) {
      mpz_class c = round_half_down(y[t]);
      for (int u = 0; u < cone.rho(); ++u) point[u] += c * basis[t][u];
    }
  }

  QVec pq = to_qvec(point);
  if (!cone.contains(dp - pq) || !cone.contains(pq - dpp)) {
    throw std::logic_error("rounded point escaped the translated cones");
  }
  return point;
}

long lambda_bound(const ConeSpec& cone, const ZVec& d0, long r, long d,
                  const std::optional<std::vector<ZVec>>& sublattice) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  if (d < 2 * r) throw std::invalid_argument("need d >= 2r");
  mpq_class min_d0 = cone.min_coeff(d0);
  if (min_d0 <= 0) throw std::invalid_argument("D0 is not ample");

  mpz_class best = 2 * d - r - 1;
  const std::vector<ZVec> basis =
      sublattice ? *sublattice : standard_basis(cone.rho());
  for (const ZVec& v : cube_vertices(basis, cone.rho())) {
    mpq_class rhs = mpq_class(3 * d - r, d - r) -
                    mpq_class(d * (2 * d - r)) * cone.min_coeff(v) /
                        (mpq_class(d - r) * min_d0);
    mpz_class needed = ceil_q(rhs);
    if (needed > best) best = needed;
  }
  return best.get_si();
}

ZVec find_delta1(const ConeSpec& cone, const ZVec& d0, const ZVec& delta,
                 long lambda, long d, long r,
                 const std::optional<std::vector<ZVec>>& sublattice) {
  if (!cone.contains(delta)) throw std::invalid_argument("Delta is not nef");
  QVec d0q = to_qvec(d0);
  QVec dq = to_qvec(delta);
  QVec dp = scale(mpq_class(lambda - 1, d) - 1, d0q) + scale(mpq_class(1, d), dq);
  QVec dpp = scale(mpq_class(lambda + 1, 2 * d - r) - 1, d0q) +
             scale(mpq_class(1, 2 * d - r), dq);
  ZVec delta1 = cube_lattice_point(cone, dp, dpp, sublattice);

  ZVec class2 = zadd(zscale(lambda - d - 1, d0), zsub(delta, zscale(d, delta1)));
  ZVec class3 = zadd(zscale(2 * d - r - lambda - 1, d0),
                     zsub(zscale(2 * d - r, delta1), delta));
  if (!cone.contains(delta1) || !cone.contains(class2) || !cone.contains(class3)) {
    throw std::runtime_error("splitting classes failed verification (lambda below bound?)");
  }
  return delta1;
}

std::string SplittingPlan::to_string() const {
  std::ostringstream os;
  os << "splitting plan\n";
  os << "d: " << d << "\n";
  os << "k: " << k << "\n";
  os << "lambda: " << lambda << "\n";
  os << "D1: " << vec_to_string(d1) << "\n";
  os << "D2: " << vec_to_string(d2) << "\n";
  os << "Delta1: " << vec_to_string(delta1) << "\n";
  return os.str();
}

SplittingPlan synthesize_splitting(const ConeSpec& cone, const ZVec& d0,
                                   const ZVec& big_d, long r,
                                   std::optional<long> d_override) {
  long d = d_override.value_or(2 * r);
  if (d < 2 * r) throw std::invalid_argument("need d >= 2r");
  long lambda = lambda_bound(cone, d0, r, d);
  ZVec delta = zsub(big_d, zscale(lambda, d0));
  if (auto bad = cone.violated_generator(to_qvec(delta))) {
    throw SplittingInfeasible(
        "D is not sufficiently ample: generator (" +
        vec_to_string(cone.dual_generators()[*bad]) + ") is negative on D - " +
        std::to_string(lambda) + "*D0");
  }
  ZVec delta1 = find_delta1(cone, d0, delta, lambda, d, r);
  SplittingPlan plan;
  plan.d = d;
  plan.k = std::min(std::max(d / 2, r), d - r);
  plan.lambda = lambda;
  plan.delta1 = delta1;
  plan.d1 = zadd(d0, delta1);
  plan.d2 = zsub(big_d, zscale(d, plan.d1));
  if (!verify_splitting(cone, d0, big_d, r, plan)) {
    throw std::logic_error("synthesized plan failed verification");
  }
  return plan;
}

bool verify_splitting(const ConeSpec& cone, const ZVec& d0, const ZVec& big_d,
                      long r, const SplittingPlan& plan) {
  if (plan.d < 2 * r) return false;
  ZVec recombined = zadd(zscale(plan.d, plan.d1), plan.d2);
  if (recombined != big_d) return false;
  ZVec third = zsub(zscale(plan.d - r, plan.d1), plan.d2);
  return cone.contains(zsub(plan.d1, d0)) && cone.contains(zsub(plan.d2, d0)) &&
         cone.contains(zsub(third, d0));
}

}  // namespace cactus
