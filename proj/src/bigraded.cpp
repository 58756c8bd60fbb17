#include "cactus/bigraded.hpp"

#include <algorithm>
#include <sstream>

namespace cactus {

namespace {

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long result = 1;
  for (long t = 1; t <= k; ++t) {
    result = result * (n - k + t) / t;
  }
  return result;
}

// Exponent vectors of total degree deg in nvars variables, lexicographically
// with the earlier variables carrying the higher powers first.
void enumerate_exponents(int nvars, int deg, std::vector<int>& prefix,
                         std::vector<std::vector<int>>& out) {
  if (nvars == 1) {
    prefix.push_back(deg);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = deg; e >= 0; --e) {
    prefix.push_back(e);
    enumerate_exponents(nvars - 1, deg - e, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> exponents(int nvars, int deg) {
  std::vector<std::vector<int>> out;
  if (nvars <= 0 || deg < 0) return out;
  std::vector<int> prefix;
  enumerate_exponents(nvars, deg, prefix, out);
  return out;
}

// Rank of an exponent vector among all vectors of the same total degree,
// in the enumeration order above.
long lex_rank(const std::vector<int>& e, int deg) {
  long r = 0;
  int n = static_cast<int>(e.size());
  int rem = deg;
  for (int pos = 0; pos + 1 < n; ++pos) {
    for (int t = rem; t > e[pos]; --t) {
      r += binomial(n - pos - 2 + (rem - t), rem - t);
    }
    rem -= e[pos];
  }
  return r;
}

bool block_matches(const std::vector<int>& exps, int nvars, int deg) {
  if (static_cast<int>(exps.size()) != nvars) return false;
  int total = 0;
  for (int e : exps) {
    if (e < 0) return false;
    total += e;
  }
  return total == deg;
}

void append_block(std::string& s, const char* name, const std::vector<int>& exps) {
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] == 0) continue;
    s += name;
    s += std::to_string(v);
    if (exps[v] > 1) s += "^" + std::to_string(exps[v]);
  }
}

}  // namespace

std::string Monomial::to_string() const {
  std::string s;
  append_block(s, "a", alpha);
  append_block(s, "b", beta);
  return s.empty() ? "1" : s;
}

Model Model::ambient_product(int n1, int n2, const Field& field) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("ambient product needs n1, n2 >= 1");
  return Model(ModelKind::AmbientProduct, n1, n2, field);
}

Model Model::single_projective(int n, const Field& field) {
  if (n < 1) throw std::invalid_argument("single projective needs n >= 1");
  return Model(ModelKind::SingleProjective, n, 0, field);
}

Model Model::twisted_binary(int c, const Field& field) {
  if (c < 0) throw std::invalid_argument("twisted binary needs c >= 0");
  return Model(ModelKind::TwistedBinary, c, 0, field);
}

int Model::alpha_vars() const {
  switch (kind_) {
    case ModelKind::AmbientProduct: return p1_ + 1;
    case ModelKind::SingleProjective: return p1_ + 1;
    case ModelKind::TwistedBinary: return 2;
  }
  return 0;
}

int Model::beta_vars() const {
  return kind_ == ModelKind::AmbientProduct ? p2_ + 1 : 0;
}

long Model::piece_dim(Bidegree b) const {
  if (b.i < 0 || b.j < 0) return 0;
  switch (kind_) {
    case ModelKind::AmbientProduct:
      return binomial(p1_ + b.i, b.i) * binomial(p2_ + b.j, b.j);
    case ModelKind::SingleProjective:
      return b.j == 0 ? binomial(p1_ + b.i, b.i) : 0;
    case ModelKind::TwistedBinary:
      return b.i + static_cast<long>(p1_) * b.j + 1;
  }
  return 0;
}

std::vector<Monomial> Model::piece_basis(Bidegree b) const {
  std::vector<Monomial> basis;
  if (piece_dim(b) == 0) return basis;
  switch (kind_) {
    case ModelKind::AmbientProduct: {
      auto as = exponents(p1_ + 1, b.i);
      auto bs = exponents(p2_ + 1, b.j);
      basis.reserve(as.size() * bs.size());
      for (const auto& a : as) {
        for (const auto& bb : bs) basis.push_back(Monomial{a, bb});
      }
      break;
    }
    case ModelKind::SingleProjective: {
      for (auto& a : exponents(p1_ + 1, b.i)) basis.push_back(Monomial{a, {}});
      break;
    }
    case ModelKind::TwistedBinary: {
      int deg = b.i + p1_ * b.j;
      for (auto& a : exponents(2, deg)) basis.push_back(Monomial{a, {}});
      break;
    }
  }
  return basis;
}

long Model::monomial_index(Bidegree b, const Monomial& m) const {
  if (piece_dim(b) == 0) return -1;
  switch (kind_) {
    case ModelKind::AmbientProduct: {
      if (!block_matches(m.alpha, p1_ + 1, b.i) ||
          !block_matches(m.beta, p2_ + 1, b.j)) {
        return -1;
      }
      return lex_rank(m.alpha, b.i) * binomial(p2_ + b.j, b.j) +
             lex_rank(m.beta, b.j);
    }
    case ModelKind::SingleProjective: {
      if (b.j != 0 || !block_matches(m.alpha, p1_ + 1, b.i) || !m.beta.empty()) {
        return -1;
      }
      return lex_rank(m.alpha, b.i);
    }
    case ModelKind::TwistedBinary: {
      int deg = b.i + p1_ * b.j;
      if (!block_matches(m.alpha, 2, deg) || !m.beta.empty()) return -1;
      return deg - m.alpha[0];
    }
  }
  return -1;
}

std::string Model::to_string() const {
  switch (kind_) {
    case ModelKind::AmbientProduct:
      return "ambient-product:n1=" + std::to_string(p1_) +
             ",n2=" + std::to_string(p2_);
    case ModelKind::SingleProjective:
      return "single-projective:n=" + std::to_string(p1_);
    case ModelKind::TwistedBinary:
      return "twisted-binary:c=" + std::to_string(p1_);
  }
  return "";
}

RingElement::RingElement(const Model& model, Bidegree deg)
    : model_(model), deg_(deg),
      coeffs_(model.piece_dim(deg), Scalar::zero(model.field())) {}

RingElement::RingElement(const Model& model, Bidegree deg, Vec coeffs)
    : model_(model), deg_(deg), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(model.piece_dim(deg))) {
    throw std::invalid_argument("coefficient vector does not match piece dimension");
  }
}

RingElement RingElement::monomial(const Model& model, Bidegree deg,
                                  const Monomial& m) {
  RingElement e(model, deg);
  long idx = model.monomial_index(deg, m);
  if (idx < 0) throw std::invalid_argument("monomial not in piece " + deg.to_string());
  e.coeffs_[idx] = Scalar::one(model.field());
  return e;
}

bool RingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

RingElement RingElement::operator+(const RingElement& o) const {
  if (model_ != o.model_ || deg_ != o.deg_) {
    throw std::invalid_argument("model mismatch");
  }
  RingElement r(model_, deg_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
  }
  return r;
}

RingElement RingElement::operator-(const RingElement& o) const {
  return *this + o.scaled(-Scalar::one(model_.field()));
}

RingElement RingElement::scaled(const Scalar& s) const {
  RingElement r(model_, deg_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k] * s;
  return r;
}

bool RingElement::operator==(const RingElement& o) const {
  return model_ == o.model_ && deg_ == o.deg_ && coeffs_ == o.coeffs_;
}

std::string RingElement::to_string() const {
  auto basis = model_.piece_basis(deg_);
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += coeffs_[k].to_string() + "*" + basis[k].to_string();
  }
  return s.empty() ? "0" : s;
}

RingElement multiply(const RingElement& f, const RingElement& g) {
  if (f.model() != g.model()) throw std::invalid_argument("model mismatch");
  const Model& model = f.model();
  Bidegree target = f.bidegree() + g.bidegree();
  RingElement r(model, target);
  auto fb = model.piece_basis(f.bidegree());
  auto gb = model.piece_basis(g.bidegree());
  for (std::size_t u = 0; u < fb.size(); ++u) {
    if (f.coeff(u).is_zero()) continue;
    for (std::size_t v = 0; v < gb.size(); ++v) {
      if (g.coeff(v).is_zero()) continue;
      Monomial prod = fb[u];
      for (std::size_t t = 0; t < prod.alpha.size(); ++t) prod.alpha[t] += gb[v].alpha[t];
      for (std::size_t t = 0; t < prod.beta.size(); ++t) prod.beta[t] += gb[v].beta[t];
      long idx = model.monomial_index(target, prod);
      r.coeff(idx) += f.coeff(u) * g.coeff(v);
    }
  }
  return r;
}

Matrix multiplication_map(const Model& model, Bidegree a, Bidegree b) {
  auto ab = model.piece_basis(a);
  auto bb = model.piece_basis(b);
  Bidegree target = a + b;
  long tdim = model.piece_dim(target);
  Matrix m(model.field(), tdim, ab.size() * bb.size());
  for (std::size_t u = 0; u < ab.size(); ++u) {
    for (std::size_t v = 0; v < bb.size(); ++v) {
      Monomial prod = ab[u];
      for (std::size_t t = 0; t < prod.alpha.size(); ++t) prod.alpha[t] += bb[v].alpha[t];
      for (std::size_t t = 0; t < prod.beta.size(); ++t) prod.beta[t] += bb[v].beta[t];
      long row = model.monomial_index(target, prod);
      m.set(row, u * bb.size() + v, Scalar::one(model.field()));
    }
  }
  return m;
}

DoublyStandardReport check_doubly_standard(const Model& model, Bidegree window) {
  if (!window.nonnegative()) throw std::invalid_argument("window must be nonnegative");
  DoublyStandardReport report{window, {}};
  const Bidegree steps[2] = {{1, 0}, {0, 1}};
  for (int i = 0; i <= window.i; ++i) {
    for (int j = 0; j <= window.j; ++j) {
      Bidegree from{i, j};
      for (Bidegree step : steps) {
        Bidegree to = from + step;
        long tdim = model.piece_dim(to);
        if (tdim == 0) continue;  // nothing to generate
        long rank = static_cast<long>(mat_rank(multiplication_map(model, from, step)));
        if (rank != tdim) {
          report.failures.push_back({from, step, rank, tdim});
        }
      }
    }
  }
  return report;
}

std::string DoublyStandardReport::to_string() const {
  std::ostringstream os;
  os << "doubly standard check up to window " << window.to_string() << "\n";
  if (failures.empty()) {
    os << "all stepwise multiplication maps surjective\n";
  } else {
    for (const auto& f : failures) {
      os << "not surjective: (" << f.from.to_string() << ") x ("
         << f.step.to_string() << "), rank " << f.rank << " of " << f.target_dim
         << "\n";
    }
  }
  return os.str();
}

}  // namespace cactus
