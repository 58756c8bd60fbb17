#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cactus {

enum class FieldKind { Rationals, PrimeField };

// Exact coefficient field: the rationals, or F_p for a prime p < 2^31.
class Field {
 public:
  static Field rationals();
  static Field prime(std::int64_t p);

  FieldKind kind() const { return kind_; }
  // p for prime fields, 0 for the rationals.
  std::int64_t characteristic() const { return p_; }

  bool operator==(const Field& other) const {
    return kind_ == other.kind_ && p_ == other.p_;
  }
  bool operator!=(const Field& other) const { return !(*this == other); }

  // "q" or "fp:<p>", the CLI spelling.
  std::string to_string() const;

 private:
  Field(FieldKind kind, std::int64_t p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  std::int64_t p_;
};

// Exact field element. Rationals are kept canonical (lowest terms, positive
// denominator, which mpq guarantees); prime-field values are representatives
// in [0, p).
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}
  explicit Scalar(const Field& field) : field_(field) {}

  static Scalar zero(const Field& field) { return Scalar(field); }
  static Scalar one(const Field& field) { return from_int(field, 1); }
  static Scalar from_int(const Field& field, long value);
  static Scalar from_mpq(mpq_class value);
  // Accepts "-12" or "3/4" over Q; any integer string over F_p (reduced).
  static Scalar parse(const Field& field, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator/(const Scalar& other) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  // Only meaningful for the matching field kind.
  const mpq_class& rational() const { return rat_; }
  std::int64_t residue() const { return rep_; }

  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;
  Field field_;
  std::int64_t rep_ = 0;  // prime field representative
  mpq_class rat_;         // rational value
};

using Vec = std::vector<Scalar>;

// Dense matrix with entries in one shared field, row-major.
class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);
  // Convenience for tests: integer entries, row-major.
  static Matrix from_int_rows(const Field& field,
                              const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, const Scalar& value);

  Matrix transpose() const;
  void swap_rows(std::size_t i, std::size_t j);

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> entries_;
};

struct RankKernel {
  std::size_t rank = 0;
  std::vector<Vec> kernel_basis;  // column vectors, m * v = 0
};

// Reduced row echelon form; appends pivot column indices when requested.
Matrix rref(Matrix m, std::vector<std::size_t>* pivot_cols = nullptr);

// Rank and a basis of the right kernel.  Pivots are chosen as the first
// nonzero entry in column order, so the output is deterministic.
RankKernel mat_rank_kernel(const Matrix& m);
std::size_t mat_rank(const Matrix& m);

// Coefficients c with m * c = v, or nullopt when v is outside the column
// span.  Free variables are set to zero.
std::optional<Vec> solve_membership(const Matrix& m, const Vec& v);

// A linear subspace of k^n, stored as an RREF row basis so that equal
// subspaces compare equal as matrices.
class Subspace {
 public:
  Subspace(const Field& field, std::size_t ambient_dim);
  static Subspace from_rows(const Matrix& rows);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  const Field& field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(std::size_t i) const;

  bool contains(const Vec& v) const;
  bool operator==(const Subspace& other) const;

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;  // RREF, no zero rows
};

}  // namespace cactus
