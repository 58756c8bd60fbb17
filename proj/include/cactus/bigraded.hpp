#pragma once

#include <string>
#include <vector>

#include "cactus/exactalg.hpp"

namespace cactus {

// Bigrading (i, j); negative components denote zero graded pieces.
struct Bidegree {
  int i = 0;
  int j = 0;

  Bidegree operator+(Bidegree o) const { return {i + o.i, j + o.j}; }
  Bidegree operator-(Bidegree o) const { return {i - o.i, j - o.j}; }
  bool operator==(Bidegree o) const { return i == o.i && j == o.j; }
  bool operator!=(Bidegree o) const { return !(*this == o); }
  bool nonnegative() const { return i >= 0 && j >= 0; }
  bool componentwise_leq(Bidegree o) const { return i <= o.i && j <= o.j; }

  std::string to_string() const {
    return std::to_string(i) + "," + std::to_string(j);
  }
};

// A monomial of the bigraded ring: exponents of the alpha block followed by
// exponents of the beta block.  The twisted binary model uses the alpha
// block only (binary forms in alpha_0, alpha_1).
struct Monomial {
  std::vector<int> alpha;
  std::vector<int> beta;

  bool operator==(const Monomial& o) const {
    return alpha == o.alpha && beta == o.beta;
  }
  std::string to_string() const;
};

enum class ModelKind { AmbientProduct, SingleProjective, TwistedBinary };

// A computable presentation of a doubly graded ring of sections by monomial
// bases of its graded pieces.  Three built-in geometries:
//   AmbientProduct(n1, n2): bihomogeneous coordinate ring of P^n1 x P^n2;
//     piece (i, j) has dimension C(n1+i, i) * C(n2+j, j).
//   SingleProjective(n): coordinate ring of P^n placed on the (*, 0) line.
//   TwistedBinary(c): X = P^1 with the degree-1 and degree-c line bundles;
//     piece (i, j) is the space of binary forms of degree i + c*j.
class Model {
 public:
  static Model ambient_product(int n1, int n2, const Field& field);
  static Model single_projective(int n, const Field& field);
  static Model twisted_binary(int c, const Field& field);

  ModelKind kind() const { return kind_; }
  const Field& field() const { return field_; }
  int param1() const { return p1_; }  // n1, n, or c
  int param2() const { return p2_; }  // n2; unused otherwise

  int alpha_vars() const;
  int beta_vars() const;

  long piece_dim(Bidegree b) const;
  // Monomials in lexicographic order on exponent vectors (alpha block first,
  // higher powers of earlier variables first), so bases are reproducible.
  std::vector<Monomial> piece_basis(Bidegree b) const;
  // Index of a monomial in piece_basis(b); -1 when absent.
  long monomial_index(Bidegree b, const Monomial& m) const;

  bool operator==(const Model& o) const {
    return kind_ == o.kind_ && p1_ == o.p1_ && p2_ == o.p2_ && field_ == o.field_;
  }
  bool operator!=(const Model& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Model(ModelKind kind, int p1, int p2, const Field& field)
      : kind_(kind), p1_(p1), p2_(p2), field_(field) {}
  ModelKind kind_;
  int p1_, p2_;
  Field field_;
};

// Element of one graded piece, as a coefficient vector over the piece basis.
class RingElement {
 public:
  RingElement(const Model& model, Bidegree deg);
  RingElement(const Model& model, Bidegree deg, Vec coeffs);
  static RingElement monomial(const Model& model, Bidegree deg,
                              const Monomial& m);

  const Model& model() const { return model_; }
  Bidegree bidegree() const { return deg_; }
  const Vec& coeffs() const { return coeffs_; }
  Scalar& coeff(std::size_t idx) { return coeffs_[idx]; }
  const Scalar& coeff(std::size_t idx) const { return coeffs_[idx]; }

  bool is_zero() const;
  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement scaled(const Scalar& s) const;
  bool operator==(const RingElement& o) const;

  std::string to_string() const;

 private:
  Model model_;
  Bidegree deg_;
  Vec coeffs_;
};

RingElement multiply(const RingElement& f, const RingElement& g);

// Matrix of the multiplication piece(a) x piece(b) -> piece(a+b), flattened:
// rows indexed by the basis of piece(a+b), columns by basis pairs (u, v)
// with column index u * dim(b) + v.
Matrix multiplication_map(const Model& model, Bidegree a, Bidegree b);

struct SurjectivityFailure {
  Bidegree from;
  Bidegree step;  // (1,0) or (0,1)
  long rank = 0;
  long target_dim = 0;
};

struct DoublyStandardReport {
  Bidegree window;
  std::vector<SurjectivityFailure> failures;
  bool all_surjective() const { return failures.empty(); }
  std::string to_string() const;
};

// Verifies that both stepwise multiplication maps are surjective for all
// bidegrees up to the window.
DoublyStandardReport check_doubly_standard(const Model& model, Bidegree window);

}  // namespace cactus
