#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cactus/reconstruct.hpp"

namespace cactus {

// A finite subscheme witness: a list of reduced rational points, or a binary
// divisor cut out by one form g (the only non-reduced schemes we enumerate,
// and the complete list of finite subschemes of P^1).
struct SchemeWitness {
  enum class Kind { ReducedPoints, BinaryDivisor };
  Kind kind = Kind::BinaryDivisor;
  std::vector<ProjectivePoint> points;
  std::optional<RingElement> divisor;
  int degree = 0;

  static SchemeWitness reduced(std::vector<ProjectivePoint> pts);
  static SchemeWitness binary_divisor(RingElement g, int form_degree);
};

// Minimal-degree binary form g with g . p = 0 and deg g <= r, by exact
// kernel computation of the contraction maps; nullopt when none exists.
// Witnesses found over F_q are genuinely F_q-rational since kernels are
// base-field-defined.
std::optional<SchemeWitness> cactus_member_binary(const Functional& p, int r);

// Span of the evaluation vectors of the points inside the dual of piece b.
Subspace span_of_points(const Model& model,
                        const std::vector<ProjectivePoint>& points, Bidegree b);

// Enumerates normalized representatives (first nonzero coordinate 1) of the
// projective space of F_q^dim, in lexicographic order.  decode is a pure
// function of the index so sweeps can be partitioned freely.
class ProjectiveEnumerator {
 public:
  ProjectiveEnumerator(const Field& fq, std::size_t dim);

  unsigned long long total() const { return total_; }
  Vec decode(unsigned long long idx) const;

 private:
  Field field_;
  std::size_t dim_;
  unsigned long long total_;
};

struct Disagreement {
  unsigned long long index = 0;
  bool rank_locus = false;
  bool certificate = false;
  bool witness = false;
};

struct SweepReport {
  std::string field_label;
  TheoremParams params;
  unsigned long long total = 0;
  unsigned long long both_true = 0;
  unsigned long long both_false = 0;
  unsigned long long disagreements = 0;
  std::optional<Disagreement> first_disagreement;
  double seconds = 0.0;

  bool counts_equal(const SweepReport& o) const;
  std::string to_string() const;
};

// Serial reference implementation of the exhaustive theorem check.
SweepReport sweep_serial(const TheoremParams& params, const Field& fq);

// OpenMP-parallel sweep over index blocks; jobs <= 0 selects the runtime
// default.  Produces the same report as sweep_serial.
SweepReport sweep_parallel(const TheoremParams& params, const Field& fq, int jobs);

// Exhaustive verification that the three membership predicates (designated
// window rank <= r, reconstruction certificate, apolar form of degree <= r)
// agree on every point of P(piece(d,1)^*) over F_q.  Errors out when the
// enumeration exceeds the budget.
SweepReport exhaustive_equivalence(const TheoremParams& params, const Field& fq,
                                   unsigned long long budget, int jobs = 1);

// Hilbert function of a reduced point set over a window, computed from span
// dimensions.  The (0,0) entry is 1 by the k-in-degree-zero convention, even
// for the empty scheme.
struct HilbertTable {
  Bidegree window;
  std::vector<long> entries;  // row-major, (window.j + 1) columns

  long at(int i, int j) const;
  std::string to_string() const;
};

struct PropertyReport {
  HilbertTable table;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Computes the Hilbert table of a distinct point set and checks the four
// finite-scheme properties: bounded by the degree, componentwise monotone,
// persistence of plateaus, and stabilization at the degree once i+j >=
// degree-1.  Violations are reported, not thrown; for the empty set the
// (0,0) convention entry is exempt from the degree bound.
PropertyReport hilbert_properties_check(const Model& model,
                                        const std::vector<ProjectivePoint>& points,
                                        Bidegree window);

}  // namespace cactus
