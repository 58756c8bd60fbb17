#include "cactus/oracle.hpp"

#include <chrono>
#include <limits>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cactus {

namespace {

// Divide out the coefficient of the lexicographically greatest monomial.
Vec normalize_leading(const Vec& v) {
  for (const Scalar& s : v) {
    if (!s.is_zero()) {
      Vec out(v.size(), Scalar::zero(s.field()));
      Scalar inv = s.inverse();
      for (std::size_t t = 0; t < v.size(); ++t) out[t] = v[t] * inv;
      return out;
    }
  }
  return v;
}

// Placement of a degree-s binary form inside the bigraded ring: the least
// j with 0 <= s - c*j <= d, so that contraction against a (d, e) functional
// stays inside the window.
Bidegree binary_placement(const Model& model, Bidegree target, int s) {
  if (model.kind() == ModelKind::SingleProjective) {
    if (s > target.i) return {-1, -1};
    return {s, 0};
  }
  int c = model.param1();
  for (int j = 0; j <= target.j; ++j) {
    int i = s - c * j;
    if (i >= 0 && i <= target.i) return {i, j};
  }
  return {-1, -1};
}

struct PredicateTriple {
  bool rank_locus = false;
  bool certificate = false;
  bool witness = false;
  bool agree() const {
    return rank_locus == certificate && certificate == witness;
  }
};

PredicateTriple evaluate_point(const Functional& p, const TheoremParams& params,
                               const SplittingWindow& window) {
  PredicateTriple t;
  t.rank_locus = rank_locus_member(p, params.r, window);
  try {
    DecompositionCertificate cert = decompose(p, params);
    t.certificate = verify_certificate(p, cert, params);
  } catch (const NotInRankLocus&) {
    t.certificate = false;
  }
  t.witness = cactus_member_binary(p, params.r).has_value();
  return t;
}

struct SweepCounters {
  unsigned long long both_true = 0;
  unsigned long long both_false = 0;
  unsigned long long disagreements = 0;
  unsigned long long first_disagreement = std::numeric_limits<unsigned long long>::max();

  void absorb(unsigned long long idx, const PredicateTriple& t) {
    if (!t.agree()) {
      ++disagreements;
      if (idx < first_disagreement) first_disagreement = idx;
    } else if (t.rank_locus) {
      ++both_true;
    } else {
      ++both_false;
    }
  }
};

SweepReport finish_report(const TheoremParams& params, const Field& fq,
                          const ProjectiveEnumerator& points,
                          const SweepCounters& counters, double seconds) {
  SweepReport report;
  report.field_label = fq.to_string();
  report.params = params;
  report.total = points.total();
  report.both_true = counters.both_true;
  report.both_false = counters.both_false;
  report.disagreements = counters.disagreements;
  report.seconds = seconds;
  if (counters.disagreements > 0) {
    Model model = Model::twisted_binary(params.c, fq);
    Bidegree target{params.d, 1};
    Functional p(model, target, points.decode(counters.first_disagreement));
    PredicateTriple t = evaluate_point(p, params, params.window());
    report.first_disagreement = Disagreement{counters.first_disagreement,
                                             t.rank_locus, t.certificate, t.witness};
  }
  return report;
}

}  // namespace

SchemeWitness SchemeWitness::reduced(std::vector<ProjectivePoint> pts) {
  SchemeWitness w;
  w.kind = Kind::ReducedPoints;
  w.degree = static_cast<int>(pts.size());
  w.points = std::move(pts);
  return w;
}

SchemeWitness SchemeWitness::binary_divisor(RingElement g, int form_degree) {
  if (g.is_zero()) throw std::invalid_argument("divisor witness must be nonzero");
  SchemeWitness w;
  w.kind = Kind::BinaryDivisor;
  w.degree = form_degree;
  w.divisor = std::move(g);
  return w;
}

std::optional<SchemeWitness> cactus_member_binary(const Functional& p, int r) {
  const Model& model = p.model();
  bool binary = model.kind() == ModelKind::TwistedBinary ||
                (model.kind() == ModelKind::SingleProjective && model.param1() == 1);
  if (!binary) {
    throw std::invalid_argument("witness search requires a binary model");
  }
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  if (p.is_zero()) throw std::invalid_argument("not a projective point");
  for (int s = 1; s <= r; ++s) {
    Bidegree placement = binary_placement(model, p.bidegree(), s);
    if (!placement.nonnegative()) break;  // degree exceeds every window line
    auto kernel = mat_rank_kernel(contraction_matrix(p, placement)).kernel_basis;
    if (kernel.empty()) continue;
    return SchemeWitness::binary_divisor(
        RingElement(model, placement, normalize_leading(kernel.front())), s);
  }
  return std::nullopt;
}

Subspace span_of_points(const Model& model,
                        const std::vector<ProjectivePoint>& points, Bidegree b) {
  long dim = model.piece_dim(b);
  Matrix rows(model.field(), points.size(), dim);
  for (std::size_t t = 0; t < points.size(); ++t) {
    Functional f = veronese_functional(model, points[t], b);
    for (long u = 0; u < dim; ++u) rows.set(t, u, f.coeff(u));
  }
  return Subspace::from_rows(rows);
}

ProjectiveEnumerator::ProjectiveEnumerator(const Field& fq, std::size_t dim)
    : field_(fq), dim_(dim) {
  if (fq.kind() != FieldKind::PrimeField) {
    throw std::invalid_argument("enumeration requires a finite field");
  }
  if (dim == 0) throw std::invalid_argument("dimension must be positive");
  unsigned long long q = static_cast<unsigned long long>(fq.characteristic());
  unsigned long long count = 0, block = 1;
  const unsigned long long cap = std::numeric_limits<unsigned long long>::max() / 2;
  for (std::size_t t = 0; t < dim; ++t) {
    count = count > cap - block ? cap : count + block;
    block = block > cap / q ? cap : block * q;
  }
  total_ = count;
}

Vec ProjectiveEnumerator::decode(unsigned long long idx) const {
  unsigned long long q = static_cast<unsigned long long>(field_.characteristic());
  // Blocks by leading position, from the last coordinate up: sizes 1, q, ...
  std::size_t lead = dim_ - 1;
  unsigned long long block = 1;
  while (idx >= block) {
    idx -= block;
    block *= q;
    --lead;
  }
  Vec coords(dim_, Scalar::zero(field_));
  coords[lead] = Scalar::one(field_);
  for (std::size_t pos = dim_; pos-- > lead + 1;) {
    coords[pos] = Scalar::from_int(field_, static_cast<long>(idx % q));
    idx /= q;
  }
  return coords;
}

bool SweepReport::counts_equal(const SweepReport& o) const {
  bool same = field_label == o.field_label && total == o.total &&
              both_true == o.both_true && both_false == o.both_false &&
              disagreements == o.disagreements;
  if (!same) return false;
  if (first_disagreement.has_value() != o.first_disagreement.has_value()) return false;
  if (first_disagreement) {
    return first_disagreement->index == o.first_disagreement->index;
  }
  return true;
}

std::string SweepReport::to_string() const {
  std::ostringstream os;
  os << "sweep report\n";
  os << "field: " << field_label << "\n";
  os << "params: r=" << params.r << " c=" << params.c << " d=" << params.d
     << " k=" << params.k << "\n";
  os << "points: " << total << "\n";
  os << "both-true: " << both_true << "\n";
  os << "both-false: " << both_false << "\n";
  os << "disagreements: " << disagreements << "\n";
  if (first_disagreement) {
    os << "first-disagreement: index=" << first_disagreement->index
       << " rank-locus=" << first_disagreement->rank_locus
       << " certificate=" << first_disagreement->certificate
       << " apolar-witness=" << first_disagreement->witness << "\n";
  }
  os << "runtime-seconds: " << seconds << "\n";
  return os.str();
}

SweepReport sweep_serial(const TheoremParams& params, const Field& fq) {
  params.validate();
  auto start = std::chrono::steady_clock::now();
  Model model = Model::twisted_binary(params.c, fq);
  Bidegree target{params.d, 1};
  ProjectiveEnumerator points(fq, model.piece_dim(target));
  SplittingWindow window = params.window();
  SweepCounters counters;
  for (unsigned long long idx = 0; idx < points.total(); ++idx) {
    Functional p(model, target, points.decode(idx));
    counters.absorb(idx, evaluate_point(p, params, window));
  }
  double seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start).count();
  return finish_report(params, fq, points, counters, seconds);
}

SweepReport sweep_parallel(const TheoremParams& params, const Field& fq, int jobs) {
  params.validate();
  auto start = std::chrono::steady_clock::now();
  Model model = Model::twisted_binary(params.c, fq);
  Bidegree target{params.d, 1};
  ProjectiveEnumerator points(fq, model.piece_dim(target));
  SplittingWindow window = params.window();
  SweepCounters counters;
#ifdef _OPENMP
  int nthreads = jobs > 0 ? jobs : omp_get_max_threads();
  unsigned long long both_true = 0, both_false = 0, disagreements = 0;
  unsigned long long first = std::numeric_limits<unsigned long long>::max();
  long long total = static_cast<long long>(points.total());
#pragma omp parallel for num_threads(nthreads) schedule(dynamic, 64) \
    reduction(+ : both_true, both_false, disagreements) reduction(min : first)
  for (long long signed_idx = 0; signed_idx < total; ++signed_idx) {
    unsigned long long idx = static_cast<unsigned long long>(signed_idx);
    Functional p(model, target, points.decode(idx));
    PredicateTriple t = evaluate_point(p, params, window);
    if (!t.agree()) {
      ++disagreements;
      if (idx < first) first = idx;
    } else if (t.rank_locus) {
      ++both_true;
    } else {
      ++both_false;
    }
  }
  counters.both_true = both_true;
  counters.both_false = both_false;
  counters.disagreements = disagreements;
  counters.first_disagreement = first;
#else
  (void)jobs;
  for (unsigned long long idx = 0; idx < points.total(); ++idx) {
    Functional p(model, target, points.decode(idx));
    counters.absorb(idx, evaluate_point(p, params, window));
  }
#endif
  double seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start).count();
  return finish_report(params, fq, points, counters, seconds);
}

SweepReport exhaustive_equivalence(const TheoremParams& params, const Field& fq,
                                   unsigned long long budget, int jobs) {
  params.validate();
  Model model = Model::twisted_binary(params.c, fq);
  ProjectiveEnumerator points(fq, model.piece_dim({params.d, 1}));
  if (points.total() > budget) {
    throw std::invalid_argument("budget exceeded: enumeration needs " +
                                std::to_string(points.total()) + " points");
  }
  return jobs == 1 ? sweep_serial(params, fq) : sweep_parallel(params, fq, jobs);
}

long HilbertTable::at(int i, int j) const {
  if (i < 0 || i > window.i || j < 0 || j > window.j) return 0;
  return entries[static_cast<std::size_t>(i) * (window.j + 1) + j];
}

std::string HilbertTable::to_string() const {
  std::ostringstream os;
  for (int i = 0; i <= window.i; ++i) {
    for (int j = 0; j <= window.j; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

std::string PropertyReport::to_string() const {
  std::ostringstream os;
  os << "hilbert table over window " << table.window.to_string() << "\n";
  os << table.to_string();
  if (violations.empty()) {
    os << "violations: none\n";
  } else {
    os << "violations:\n";
    for (const std::string& v : violations) os << "  " << v << "\n";
  }
  return os.str();
}

namespace {

bool same_point(const ProjectivePoint& a, const ProjectivePoint& b) {
  return normalize_leading(a.alpha) == normalize_leading(b.alpha) &&
         normalize_leading(a.beta) == normalize_leading(b.beta);
}

}  // namespace

PropertyReport hilbert_properties_check(const Model& model,
                                        const std::vector<ProjectivePoint>& points,
                                        Bidegree window) {
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (same_point(points[a], points[b])) {
        throw std::invalid_argument("points must be distinct");
      }
    }
  }
  long r = static_cast<long>(points.size());
  HilbertTable table{window, {}};
  table.entries.assign(static_cast<std::size_t>((window.i + 1) * (window.j + 1)), 0);
  for (int i = 0; i <= window.i; ++i) {
    for (int j = 0; j <= window.j; ++j) {
      long h;
      if (i == 0 && j == 0) {
        h = 1;  // S_(0,0) = k
      } else {
        h = static_cast<long>(span_of_points(model, points, {i, j}).dim());
      }
      table.entries[static_cast<std::size_t>(i) * (window.j + 1) + j] = h;
    }
  }

  PropertyReport report{table, {}};
  auto note = [&](int i, int j, const std::string& what) {
    report.violations.push_back("(" + std::to_string(i) + "," + std::to_string(j) +
                                "): " + what);
  };
  for (int i = 0; i <= window.i; ++i) {
    for (int j = 0; j <= window.j; ++j) {
      long h = table.at(i, j);
      // For the empty scheme the (0,0) entry is the k-convention, not a
      // span dimension; it is exempt from all four properties.
      bool convention_entry = (i == 0 && j == 0 && r == 0);
      if (convention_entry) continue;
      if (h > r) {
        note(i, j, "exceeds degree bound " + std::to_string(r));
      }
      if (i + j >= r - 1 && h != r) {
        note(i, j, "not stabilized at " + std::to_string(r));
      }
      if (i + 1 <= window.i && h > table.at(i + 1, j)) {
        note(i, j, "not monotone in the first grading");
      }
      if (j + 1 <= window.j && h > table.at(i, j + 1)) {
        note(i, j, "not monotone in the second grading");
      }
      if (i + 1 <= window.i && h == table.at(i + 1, j)) {
        for (int i2 = i + 2; i2 <= window.i; ++i2) {
          if (table.at(i2, j) != h) {
            note(i, j, "plateau does not persist in the first grading");
            break;
          }
        }
      }
      if (j + 1 <= window.j && h == table.at(i, j + 1)) {
        for (int j2 = j + 2; j2 <= window.j; ++j2) {
          if (table.at(i, j2) != h) {
            note(i, j, "plateau does not persist in the second grading");
            break;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace cactus
