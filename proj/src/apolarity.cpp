#include "cactus/apolarity.hpp"

#include <algorithm>
#include <sstream>

namespace cactus {

namespace {

// Componentwise exponent difference; false when any component underflows.
bool shift_exponents(const Monomial& dual, const Monomial& theta, Monomial& out) {
  out = dual;
  for (std::size_t t = 0; t < theta.alpha.size(); ++t) {
    out.alpha[t] -= theta.alpha[t];
    if (out.alpha[t] < 0) return false;
  }
  for (std::size_t t = 0; t < theta.beta.size(); ++t) {
    out.beta[t] -= theta.beta[t];
    if (out.beta[t] < 0) return false;
  }
  return true;
}

Scalar eval_block(const std::vector<int>& exps, const Vec& coords, const Field& field) {
  Scalar v = Scalar::one(field);
  for (std::size_t t = 0; t < exps.size(); ++t) {
    for (int e = 0; e < exps[t]; ++e) v = v * coords[t];
  }
  return v;
}

}  // namespace

Functional::Functional(const Model& model, Bidegree deg)
    : model_(model), deg_(deg),
      coeffs_(model.piece_dim(deg), Scalar::zero(model.field())) {}

Functional::Functional(const Model& model, Bidegree deg, Vec coeffs)
    : model_(model), deg_(deg), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(model.piece_dim(deg))) {
    throw std::invalid_argument("coefficient vector does not match piece dimension");
  }
}

bool Functional::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Functional Functional::operator+(const Functional& o) const {
  if (model_ != o.model_ || deg_ != o.deg_) {
    throw std::invalid_argument("model mismatch");
  }
  Functional r(model_, deg_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
  }
  return r;
}

Functional Functional::scaled(const Scalar& s) const {
  Functional r(model_, deg_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k] * s;
  return r;
}

bool Functional::operator==(const Functional& o) const {
  return model_ == o.model_ && deg_ == o.deg_ && coeffs_ == o.coeffs_;
}

std::string Functional::to_string() const {
  auto basis = model_.piece_basis(deg_);
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string mono = basis[k].to_string();
    for (char& ch : mono) {
      if (ch == 'a') ch = 'x';
      if (ch == 'b') ch = 'y';
    }
    s += coeffs_[k].to_string() + "*" + mono;
  }
  return s.empty() ? "0" : s;
}

Functional contract(const RingElement& theta, const Functional& p) {
  if (theta.model() != p.model()) throw std::invalid_argument("model mismatch");
  const Model& model = theta.model();
  Bidegree target = p.bidegree() - theta.bidegree();
  if (!target.nonnegative()) {
    throw std::invalid_argument("contraction out of window");
  }
  Functional r(model, target);
  auto tb = model.piece_basis(theta.bidegree());
  auto pb = model.piece_basis(p.bidegree());
  Monomial shifted;
  for (std::size_t u = 0; u < tb.size(); ++u) {
    if (theta.coeff(u).is_zero()) continue;
    for (std::size_t v = 0; v < pb.size(); ++v) {
      if (p.coeff(v).is_zero()) continue;
      if (!shift_exponents(pb[v], tb[u], shifted)) continue;
      long idx = model.monomial_index(target, shifted);
      r.coeff(idx) += theta.coeff(u) * p.coeff(v);
    }
  }
  return r;
}

Scalar pair_scalar(const RingElement& theta, const Functional& p) {
  if (theta.bidegree() != p.bidegree()) {
    throw std::invalid_argument("bidegree mismatch");
  }
  Functional r = contract(theta, p);
  return r.coeff(0);
}

Matrix contraction_matrix(const Functional& p, Bidegree b) {
  const Model& model = p.model();
  Bidegree target = p.bidegree() - b;
  if (!target.nonnegative()) {
    throw std::invalid_argument("contraction out of window");
  }
  auto source = model.piece_basis(b);
  long tdim = model.piece_dim(target);
  Matrix m(model.field(), tdim, source.size());
  auto pb = model.piece_basis(p.bidegree());
  Monomial shifted;
  for (std::size_t col = 0; col < source.size(); ++col) {
    for (std::size_t v = 0; v < pb.size(); ++v) {
      if (p.coeff(v).is_zero()) continue;
      if (!shift_exponents(pb[v], source[col], shifted)) continue;
      long row = model.monomial_index(target, shifted);
      m.set(row, col, m(row, col) + p.coeff(v));
    }
  }
  return m;
}

Subspace annihilator_piece(const Functional& p, Bidegree b) {
  const Model& model = p.model();
  auto kernel = mat_rank_kernel(contraction_matrix(p, b)).kernel_basis;
  Matrix rows(model.field(), kernel.size(), model.piece_dim(b));
  for (std::size_t r = 0; r < kernel.size(); ++r) {
    for (std::size_t c = 0; c < kernel[r].size(); ++c) rows.set(r, c, kernel[r][c]);
  }
  return Subspace::from_rows(rows);
}

ApolarProfile::ApolarProfile(Bidegree window, std::vector<long> dims)
    : window_(window), dims_(std::move(dims)) {
  if (dims_.size() !=
      static_cast<std::size_t>((window_.i + 1) * (window_.j + 1))) {
    throw std::invalid_argument("profile table does not match window");
  }
}

long ApolarProfile::at(int i, int j) const {
  if (i < 0 || i > window_.i || j < 0 || j > window_.j) return 0;
  return dims_[static_cast<std::size_t>(i) * (window_.j + 1) + j];
}

bool ApolarProfile::symmetric() const {
  for (int i = 0; i <= window_.i; ++i) {
    for (int j = 0; j <= window_.j; ++j) {
      if (at(i, j) != at(window_.i - i, window_.j - j)) return false;
    }
  }
  return true;
}

bool ApolarProfile::all_positive() const {
  for (int i = 0; i <= window_.i; ++i) {
    for (int j = 0; j <= window_.j; ++j) {
      if (at(i, j) < 1) return false;
    }
  }
  return true;
}

std::string ApolarProfile::to_string() const {
  std::ostringstream os;
  for (int i = 0; i <= window_.i; ++i) {
    for (int j = 0; j <= window_.j; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

ApolarProfile apolar_hilbert(const Functional& p) {
  if (p.is_zero()) throw std::invalid_argument("not a projective point");
  Bidegree window = p.bidegree();
  std::vector<long> dims;
  dims.reserve(static_cast<std::size_t>((window.i + 1) * (window.j + 1)));
  for (int i = 0; i <= window.i; ++i) {
    for (int j = 0; j <= window.j; ++j) {
      dims.push_back(static_cast<long>(mat_rank(contraction_matrix(p, {i, j}))));
    }
  }
  return ApolarProfile(window, std::move(dims));
}

bool span_membership(const Functional& p, const Subspace& ideal_piece) {
  const Model& model = p.model();
  long dim = model.piece_dim(p.bidegree());
  if (ideal_piece.ambient_dim() != static_cast<std::size_t>(dim)) {
    throw std::invalid_argument("bidegree mismatch");
  }
  for (std::size_t r = 0; r < ideal_piece.dim(); ++r) {
    RingElement theta(model, p.bidegree(), ideal_piece.basis_row(r));
    if (!pair_scalar(theta, p).is_zero()) return false;
  }
  return true;
}

std::string ProjectivePoint::to_string() const {
  std::string s = "[";
  for (std::size_t t = 0; t < alpha.size(); ++t) {
    if (t) s += ":";
    s += alpha[t].to_string();
  }
  s += "]";
  if (!beta.empty()) {
    s += "x[";
    for (std::size_t t = 0; t < beta.size(); ++t) {
      if (t) s += ":";
      s += beta[t].to_string();
    }
    s += "]";
  }
  return s;
}

Functional veronese_functional(const Model& model, const ProjectivePoint& pt,
                               Bidegree b) {
  auto all_zero = [](const Vec& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Scalar& s) { return s.is_zero(); });
  };
  if (static_cast<int>(pt.alpha.size()) != model.alpha_vars() ||
      static_cast<int>(pt.beta.size()) != model.beta_vars()) {
    throw std::invalid_argument("point does not match model");
  }
  if (all_zero(pt.alpha) || (model.beta_vars() > 0 && all_zero(pt.beta))) {
    throw std::invalid_argument("zero coordinate tuple");
  }
  Functional f(model, b);
  auto basis = model.piece_basis(b);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Scalar v = eval_block(basis[k].alpha, pt.alpha, model.field());
    if (!basis[k].beta.empty()) {
      v = v * eval_block(basis[k].beta, pt.beta, model.field());
    }
    f.coeff(k) = v;
  }
  return f;
}

}  // namespace cactus
