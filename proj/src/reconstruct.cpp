#include "cactus/reconstruct.hpp"

#include <algorithm>

namespace cactus {

namespace {

// Dense binary form f = sum f[u] * a0^(deg-u) * a1^u, indexed like the
// twisted binary piece basis.
struct BinaryForm {
  Vec coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

int low_index(const BinaryForm& f) {
  for (std::size_t u = 0; u < f.coeffs.size(); ++u) {
    if (!f.coeffs[u].is_zero()) return static_cast<int>(u);
  }
  return -1;
}

int high_index(const BinaryForm& f) {
  for (std::size_t u = f.coeffs.size(); u-- > 0;) {
    if (!f.coeffs[u].is_zero()) return static_cast<int>(u);
  }
  return -1;
}

// Univariate polynomial coefficients, lowest degree first.
using Poly = Vec;

int poly_deg(const Poly& p) {
  for (std::size_t u = p.size(); u-- > 0;) {
    if (!p[u].is_zero()) return static_cast<int>(u);
  }
  return -1;
}

Poly poly_rem(Poly a, const Poly& b) {
  int db = poly_deg(b);
  Scalar lead_inv = b[db].inverse();
  for (int da = poly_deg(a); da >= db; da = poly_deg(a)) {
    Scalar factor = a[da] * lead_inv;
    for (int u = 0; u <= db; ++u) {
      a[da - db + u] = a[da - db + u] - factor * b[u];
    }
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  while (poly_deg(b) >= 0) {
    Poly r = poly_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Splits f as a1^t_pow * a0^s_pow * (reduced polynomial in z = a1/a0).
void split_form(const BinaryForm& f, int& s_pow, int& t_pow, Poly& reduced) {
  int lo = low_index(f);
  int hi = high_index(f);
  t_pow = lo;
  s_pow = f.degree() - hi;
  reduced.assign(f.coeffs.begin() + lo, f.coeffs.begin() + hi + 1);
}

BinaryForm assemble_form(const Field& field, int s_pow, int t_pow, const Poly& reduced) {
  int rdeg = poly_deg(reduced);
  BinaryForm g;
  g.coeffs.assign(static_cast<std::size_t>(s_pow + t_pow + rdeg) + 1,
                  Scalar::zero(field));
  for (int u = 0; u <= rdeg; ++u) g.coeffs[t_pow + u] = reduced[u];
  return g;
}

BinaryForm gcd_forms(const BinaryForm& f, const BinaryForm& g) {
  int fs, ft, gs, gt;
  Poly fr, gr;
  split_form(f, fs, ft, fr);
  split_form(g, gs, gt, gr);
  Poly common = poly_gcd(fr, gr);
  return assemble_form(f.coeffs[0].field(), std::min(fs, gs), std::min(ft, gt),
                       common);
}

}  // namespace

void TheoremParams::validate() const {
  if (r < 1) throw HypothesesViolated("r must be at least 1");
  if (!(r <= k && k <= d - r)) throw HypothesesViolated("need r <= k <= d-r");
  if (d - r < c) throw HypothesesViolated("need d-r >= c");
}

std::pair<int, long> find_plateau(const Functional& p, const TheoremParams& params) {
  params.validate();
  std::vector<long> profile(params.d + 1, 0);
  for (int i = params.k; i <= params.d; ++i) {
    profile[i] = static_cast<long>(mat_rank(contraction_matrix(p, {i, 0})));
  }
  for (int i = params.k; i < params.d; ++i) {
    if (profile[i] < profile[i + 1]) {
      throw HypothesesViolated("(*,0) profile increases past k");
    }
  }
  for (int i = params.k; i <= params.d - 1; ++i) {
    if (profile[i] == profile[i + 1]) return {i, profile[i]};
  }
  throw HypothesesViolated("no plateau found below d");
}

std::vector<RingElement> truncated_ideal(const Functional& p, int k0) {
  std::vector<RingElement> gens;
  for (int i = 1; i <= k0; ++i) {
    Subspace piece = annihilator_piece(p, {i, 0});
    for (std::size_t row = 0; row < piece.dim(); ++row) {
      gens.emplace_back(p.model(), Bidegree{i, 0}, piece.basis_row(row));
    }
  }
  return gens;
}

RingElement saturate_binary(const std::vector<RingElement>& gens) {
  const Model* model = nullptr;
  std::optional<BinaryForm> acc;
  for (const RingElement& gen : gens) {
    if (gen.model().kind() != ModelKind::TwistedBinary &&
        gen.model().kind() != ModelKind::SingleProjective) {
      throw std::invalid_argument("saturation requires binary forms");
    }
    if (gen.is_zero()) continue;
    model = &gen.model();
    BinaryForm f{gen.coeffs()};
    acc = acc ? gcd_forms(*acc, f) : f;
  }
  if (!acc) throw std::invalid_argument("all generators are zero");
  // Monic in the lexicographically greatest monomial present.
  Scalar lead = acc->coeffs[low_index(*acc)];
  for (Scalar& cf : acc->coeffs) cf = cf / lead;
  int deg = acc->degree();
  return RingElement(*model, Bidegree{deg, 0}, std::move(acc->coeffs));
}

DecompositionCertificate decompose(const Functional& p, const TheoremParams& params) {
  params.validate();
  if (p.model().kind() != ModelKind::TwistedBinary ||
      p.model().param1() != params.c) {
    throw HypothesesViolated("functional is not on the expected twisted binary model");
  }
  if (p.bidegree() != Bidegree{params.d, 1}) {
    throw HypothesesViolated("functional bidegree must be (d, 1)");
  }
  std::size_t rank = cat_rank(p, params.window());
  if (rank > static_cast<std::size_t>(params.r)) throw NotInRankLocus();

  auto [k0, r0] = find_plateau(p, params);
  RingElement g = saturate_binary(truncated_ideal(p, k0));
  bool span_ok = contract(g, p).is_zero();

  // The argument pins these down; failures indicate a bug, not bad input.
  if (k0 != params.k || r0 != static_cast<long>(rank)) {
    throw HypothesesViolated("plateau does not match designated rank");
  }
  if (g.bidegree().i != r0) {
    throw HypothesesViolated("saturated ideal degree differs from plateau value");
  }
  return DecompositionCertificate{k0, static_cast<int>(r0), std::move(g), span_ok};
}

bool verify_certificate(const Functional& p, const DecompositionCertificate& cert,
                        const TheoremParams& params) {
  const RingElement& g = cert.witness;
  if (g.is_zero()) return false;
  if (g.bidegree().j != 0 || g.bidegree().i > params.r) return false;
  if (!g.bidegree().componentwise_leq(p.bidegree())) return false;
  return contract(g, p).is_zero();
}

}  // namespace cactus
