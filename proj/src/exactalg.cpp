#include "cactus/exactalg.hpp"

#include <utility>

namespace cactus {

namespace {

bool is_prime_u32(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid; a is a representative in [0, p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("division by zero");
  return t < 0 ? t + p : t;
}

}  // namespace

Field Field::rationals() { return Field(FieldKind::Rationals, 0); }

Field Field::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime_u32(p)) {
    throw std::invalid_argument("prime field characteristic must be a prime < 2^31");
  }
  return Field(FieldKind::PrimeField, p);
}

std::string Field::to_string() const {
  return kind_ == FieldKind::Rationals ? "q" : "fp:" + std::to_string(p_);
}

Scalar Scalar::from_int(const Field& field, long value) {
  Scalar s(field);
  if (field.kind() == FieldKind::Rationals) {
    s.rat_ = value;
  } else {
    s.rep_ = mod_reduce(value, field.characteristic());
  }
  return s;
}

Scalar Scalar::from_mpq(mpq_class value) {
  Scalar s(Field::rationals());
  value.canonicalize();
  s.rat_ = std::move(value);
  return s;
}

Scalar Scalar::parse(const Field& field, const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0) {
    throw std::invalid_argument("cannot parse scalar: " + text);
  }
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  v.canonicalize();
  if (field.kind() == FieldKind::Rationals) return from_mpq(std::move(v));
  if (v.get_den() != 1) {
    throw std::invalid_argument("prime field scalar must be an integer: " + text);
  }
  mpz_class r = v.get_num() % field.characteristic();
  return from_int(field, r.get_si());
}

void Scalar::check_same_field(const Scalar& other) const {
  if (field_ != other.field_) throw std::invalid_argument("field mismatch");
}

bool Scalar::is_zero() const {
  return field_.kind() == FieldKind::Rationals ? rat_ == 0 : rep_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind() == FieldKind::Rationals ? rat_ == 1 : rep_ == 1;
}

Scalar Scalar::operator+(const Scalar& other) const {
  check_same_field(other);
  Scalar s(field_);
  if (field_.kind() == FieldKind::Rationals) {
    s.rat_ = rat_ + other.rat_;
  } else {
    s.rep_ = mod_reduce(rep_ + other.rep_, field_.characteristic());
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& other) const {
  check_same_field(other);
  Scalar s(field_);
  if (field_.kind() == FieldKind::Rationals) {
    s.rat_ = rat_ - other.rat_;
  } else {
    s.rep_ = mod_reduce(rep_ - other.rep_, field_.characteristic());
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& other) const {
  check_same_field(other);
  Scalar s(field_);
  if (field_.kind() == FieldKind::Rationals) {
    s.rat_ = rat_ * other.rat_;
  } else {
    s.rep_ = mod_reduce(rep_ * other.rep_, field_.characteristic());
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& other) const {
  return *this * other.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.kind() == FieldKind::Rationals) {
    s.rat_ = -rat_;
  } else {
    s.rep_ = rep_ == 0 ? 0 : field_.characteristic() - rep_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  Scalar s(field_);
  if (field_.kind() == FieldKind::Rationals) {
    if (rat_ == 0) throw std::domain_error("division by zero");
    s.rat_ = 1 / rat_;
  } else {
    s.rep_ = mod_inverse(rep_, field_.characteristic());
  }
  return s;
}

bool Scalar::operator==(const Scalar& other) const {
  check_same_field(other);
  return field_.kind() == FieldKind::Rationals ? rat_ == other.rat_
                                               : rep_ == other.rep_;
}

std::string Scalar::to_string() const {
  return field_.kind() == FieldKind::Rationals ? rat_.get_str()
                                               : std::to_string(rep_);
}

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), field_(field),
      entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(field));
  return m;
}

Matrix Matrix::from_int_rows(const Field& field,
                             const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < c; ++j) {
      m.set(i, j, Scalar::from_int(field, rows[i][j]));
    }
  }
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& value) {
  if (value.field() != field_) throw std::invalid_argument("field mismatch");
  entries_[i * cols_ + j] = value;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  }
  return t;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) {
    std::swap(entries_[i * cols_ + k], entries_[j * cols_ + k]);
  }
}

Matrix rref(Matrix m, std::vector<std::size_t>* pivot_cols) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    // First nonzero entry in column order keeps the output deterministic.
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(pivot_row, sel);
    Scalar inv = m(pivot_row, col).inverse();
    for (std::size_t k = col; k < m.cols(); ++k) {
      m.set(pivot_row, k, m(pivot_row, k) * inv);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t k = col; k < m.cols(); ++k) {
        m.set(r, k, m(r, k) - factor * m(pivot_row, k));
      }
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++pivot_row;
  }
  return m;
}

RankKernel mat_rank_kernel(const Matrix& m) {
  std::vector<std::size_t> pivots;
  Matrix r = rref(m, &pivots);
  RankKernel out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), Scalar::zero(m.field()));
    v[f] = Scalar::one(m.field());
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
      v[pivots[pr]] = -r(pr, f);
    }
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

std::size_t mat_rank(const Matrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

std::optional<Vec> solve_membership(const Matrix& m, const Vec& v) {
  if (v.size() != m.rows()) throw std::invalid_argument("dimension mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m(i, j));
    aug.set(i, m.cols(), v[i]);
  }
  std::vector<std::size_t> pivots;
  Matrix r = rref(std::move(aug), &pivots);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec c(m.cols(), Scalar::zero(m.field()));
  for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
    c[pivots[pr]] = r(pr, m.cols());
  }
  return c;
}

Subspace::Subspace(const Field& field, std::size_t ambient_dim)
    : basis_(field, 0, ambient_dim) {}

Subspace Subspace::from_rows(const Matrix& rows) {
  std::vector<std::size_t> pivots;
  Matrix r = rref(rows, &pivots);
  Matrix basis(rows.field(), pivots.size(), rows.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t j = 0; j < rows.cols(); ++j) basis.set(i, j, r(i, j));
  }
  return Subspace(std::move(basis));
}

Vec Subspace::basis_row(std::size_t i) const {
  Vec v(ambient_dim(), Scalar::zero(field()));
  for (std::size_t j = 0; j < ambient_dim(); ++j) v[j] = basis_(i, j);
  return v;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("dimension mismatch");
  Vec rem = v;
  std::size_t col = 0;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    while (col < ambient_dim() && basis_(r, col).is_zero()) ++col;
    if (col == ambient_dim()) break;
    Scalar factor = rem[col];
    if (!factor.is_zero()) {
      for (std::size_t j = col; j < ambient_dim(); ++j) {
        rem[j] = rem[j] - factor * basis_(r, j);
      }
    }
  }
  for (const Scalar& s : rem) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  if (dim() != other.dim() || ambient_dim() != other.ambient_dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < ambient_dim(); ++j) {
      if (basis_(i, j) != other.basis_(i, j)) return false;
    }
  }
  return true;
}

}  // namespace cactus
