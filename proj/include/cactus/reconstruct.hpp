#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cactus/catalecticant.hpp"

namespace cactus {

// Thrown by decompose when the functional is outside the rank locus.
class NotInRankLocus : public std::runtime_error {
 public:
  NotInRankLocus() : std::runtime_error("not in rank locus") {}
};

// Thrown when the reconstruction hypotheses fail (bad parameters, or an
// internal step that the hypotheses rule out).
class HypothesesViolated : public std::runtime_error {
 public:
  explicit HypothesesViolated(const std::string& what)
      : std::runtime_error("hypotheses violated: " + what) {}
};

// Parameters for reconstruction on the twisted binary model (X = P^1,
// L1 = O(1), L2 = O(c)), against functionals of bidegree (d, 1).
struct TheoremParams {
  int r = 0;
  int c = 0;
  int d = 0;
  int k = 0;

  // r <= k <= d-r, and d-r >= c so that sections of O(d-r-c) times
  // sections of O(c) span O(d-r).
  void validate() const;
  SplittingWindow window() const { return designated_window({d, 1}, r, k); }
};

// Reconstructed finite scheme for a rank-locus point: the saturated ideal of
// the scheme is principal, generated by the binary form witness of degree
// r0 <= r; span_ok records the independent span check g . p = 0.
struct DecompositionCertificate {
  int k0 = 0;
  int r0 = 0;
  RingElement witness;  // binary form of degree r0, at bidegree (r0, 0)
  bool span_ok = false;
};

// Minimal k0 in [k, d-1] where the (*, 0) apolar profile repeats, and the
// plateau value r0.  Requires the designated-window rank to be at most r.
std::pair<int, long> find_plateau(const Functional& p, const TheoremParams& params);

// Bases of the annihilator pieces (i, 0) for 1 <= i <= k0, concatenated.
std::vector<RingElement> truncated_ideal(const Functional& p, int k0);

// Saturation of the ideal generated by binary forms: in k[a0, a1] the
// saturated ideal of a finite subscheme is principal, generated by the gcd.
// The result is normalized monic in its lexicographically greatest monomial.
RingElement saturate_binary(const std::vector<RingElement>& gens);

// Executes the reconstruction: plateau, truncated annihilator ideal,
// saturation by gcd, and the span check.  Throws NotInRankLocus when the
// designated-window rank exceeds r.
DecompositionCertificate decompose(const Functional& p, const TheoremParams& params);

// Independent certificate check: deg g <= r, g != 0, and g . p = 0.
bool verify_certificate(const Functional& p, const DecompositionCertificate& cert,
                        const TheoremParams& params);

}  // namespace cactus
