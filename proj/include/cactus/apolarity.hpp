#pragma once

#include <string>
#include <vector>

#include "cactus/bigraded.hpp"
#include "cactus/exactalg.hpp"

namespace cactus {

// A dual vector to a graded piece: coefficients over the divided-power dual
// monomial basis, which is indexed exactly like the primal monomial basis of
// that piece.  A nonzero functional represents a point of P(piece^*).
class Functional {
 public:
  Functional(const Model& model, Bidegree deg);
  Functional(const Model& model, Bidegree deg, Vec coeffs);

  const Model& model() const { return model_; }
  Bidegree bidegree() const { return deg_; }
  const Vec& coeffs() const { return coeffs_; }
  Scalar& coeff(std::size_t idx) { return coeffs_[idx]; }
  const Scalar& coeff(std::size_t idx) const { return coeffs_[idx]; }

  bool is_zero() const;
  Functional operator+(const Functional& o) const;
  Functional scaled(const Scalar& s) const;
  bool operator==(const Functional& o) const;

  std::string to_string() const;

 private:
  Model model_;
  Bidegree deg_;
  Vec coeffs_;
};

// The contraction pairing: a ring element of bidegree (i, j) acting on a
// functional of bidegree (d, e) gives a functional of bidegree (d-i, e-j).
// On monomials this is the coefficient-free exponent shift, so it is valid
// in any characteristic.
Functional contract(const RingElement& theta, const Functional& p);

// Scalar pairing of a ring element against a functional of the same
// bidegree (full contraction down to the (0,0) piece).
Scalar pair_scalar(const RingElement& theta, const Functional& p);

// Matrix of theta |-> theta . p restricted to piece b: rows indexed by the
// dual basis of piece (d-i, e-j), columns by the basis of piece b.
Matrix contraction_matrix(const Functional& p, Bidegree b);

// Kernel of the contraction map on piece b, i.e. the degree-b part of the
// annihilator ideal of p, as a canonical subspace.
Subspace annihilator_piece(const Functional& p, Bidegree b);

// Table of dim Apolar(p)_{i,j} over the closed window of p's bidegree.
class ApolarProfile {
 public:
  ApolarProfile(Bidegree window, std::vector<long> dims);

  Bidegree window() const { return window_; }
  long at(int i, int j) const;
  long at(Bidegree b) const { return at(b.i, b.j); }

  bool symmetric() const;        // entry (i,j) == entry (d-i, e-j)
  bool all_positive() const;     // every in-window entry >= 1

  std::string to_string() const;

 private:
  Bidegree window_;
  std::vector<long> dims_;  // row-major, (e+1) columns per row
};

// Full apolar Hilbert table of a nonzero functional.
ApolarProfile apolar_hilbert(const Functional& p);

// True iff every element of the ideal piece contracts p to zero; decides
// membership of p in P(ideal_piece^perp).
bool span_membership(const Functional& p, const Subspace& ideal_piece);

// A point of the underlying geometry: homogeneous coordinates per factor.
// The beta block is used by the ambient product model only.
struct ProjectivePoint {
  Vec alpha;
  Vec beta;

  std::string to_string() const;
};

// Evaluation vector of a point in the dual of piece b: the coefficient at a
// dual monomial equals the value of the matching primal monomial at the
// point.  Realizes points of X inside P(piece^*).
Functional veronese_functional(const Model& model, const ProjectivePoint& pt,
                               Bidegree b);

}  // namespace cactus
