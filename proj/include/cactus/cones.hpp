#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cactus {

using QVec = std::vector<mpq_class>;
using ZVec = std::vector<mpz_class>;

QVec to_qvec(const ZVec& v);
std::string vec_to_string(const ZVec& v);
std::string vec_to_string(const QVec& v);

// Thrown by synthesize_splitting when the target class is below the
// sufficiently-ample threshold; a mathematical negative, not a usage error.
class SplittingInfeasible : public std::runtime_error {
 public:
  explicit SplittingInfeasible(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown when a cube-lemma precondition fails; carries the offending vertex.
class VertexNotInCone : public std::runtime_error {
 public:
  VertexNotInCone(const ZVec& vertex, const std::string& msg)
      : std::runtime_error(msg), vertex_(vertex) {}
  const ZVec& vertex() const { return vertex_; }

 private:
  ZVec vertex_;
};

// A closed, pointed, full-dimensional cone in Z^rho, described by finitely
// many integer covectors generating the dual cone, together with an interior
// vector H (every generator is positive on H).  min_coeff evaluates the
// normalized generators phi/phi(H), whose minimum over the compact slice
// (H=1) of the dual cone characterizes membership and interiority.
class ConeSpec {
 public:
  ConeSpec(int rho, std::vector<ZVec> dual_generators, ZVec h);

  int rho() const { return rho_; }
  const std::vector<ZVec>& dual_generators() const { return dual_generators_; }
  const ZVec& h() const { return h_; }

  mpq_class min_coeff(const QVec& d) const;
  mpq_class min_coeff(const ZVec& d) const { return min_coeff(to_qvec(d)); }

  bool contains(const QVec& d) const { return min_coeff(d) >= 0; }
  bool contains(const ZVec& d) const { return contains(to_qvec(d)); }
  bool interior(const ZVec& d) const { return min_coeff(to_qvec(d)) > 0; }

  // Index of a dual generator negative on d, or nullopt when d is in the cone.
  std::optional<std::size_t> violated_generator(const QVec& d) const;

 private:
  int rho_;
  std::vector<ZVec> dual_generators_;
  ZVec h_;
};

// Lattice point in (dp - cone) intersect (dpp + cone), found by rounding the
// midpoint into the half-size cube and re-verified exactly.  Requires
// dp - dpp + v to lie in the cone for every vertex v of the size-2 cube; the
// cube is spanned by the standard basis, or by the optional sublattice basis.
ZVec cube_lattice_point(const ConeSpec& cone, const QVec& dp, const QVec& dpp,
                        const std::optional<std::vector<ZVec>>& sublattice = std::nullopt);

// Smallest integer lambda with lambda >= 2d-r-1 and, for every cube vertex v,
// lambda >= (3d-r)/(d-r) - d(2d-r) min[v] / ((d-r) min[D0]).
long lambda_bound(const ConeSpec& cone, const ZVec& d0, long r, long d,
                  const std::optional<std::vector<ZVec>>& sublattice = std::nullopt);

// Integer class Delta1 making all three of
//   Delta1,
//   (lambda-d-1) D0 + Delta - d Delta1,
//   (2d-r-lambda-1) D0 - Delta + (2d-r) Delta1
// members of the cone; memberships are re-verified exactly before returning.
ZVec find_delta1(const ConeSpec& cone, const ZVec& d0, const ZVec& delta,
                 long lambda, long d, long r,
                 const std::optional<std::vector<ZVec>>& sublattice = std::nullopt);

struct SplittingPlan {
  long d = 0;
  long k = 0;
  ZVec d1;
  ZVec d2;
  long lambda = 0;
  ZVec delta1;

  std::string to_string() const;
};

// Splits D = d*D1 + D2 with D1, D2 and (d-r)D1 - D2 all in D0 + cone, for
// the minimal admissible d = 2r unless a larger d is requested.  Requires
// D - lambda_bound * D0 to be in the cone.
SplittingPlan synthesize_splitting(const ConeSpec& cone, const ZVec& d0,
                                   const ZVec& big_d, long r,
                                   std::optional<long> d_override = std::nullopt);

// Exact check of the three splitting conditions.
bool verify_splitting(const ConeSpec& cone, const ZVec& d0, const ZVec& big_d,
                      long r, const SplittingPlan& plan);

}  // namespace cactus
