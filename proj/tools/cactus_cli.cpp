// Command-line front end: exact catalecticant ranks, apolar Hilbert tables,
// reconstruction certificates, nef-cone splittings, and exhaustive sweeps.
//
// Exit codes: 0 success / positive answer, 1 mathematical negative
// (outside the rank locus, invalid certificate, disagreement, infeasible
// splitting, property violation), 2 usage or input error.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cactus/io.hpp"

using namespace cactus;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct CommonOpts {
  std::string model = "twisted-binary:c=1";
  std::string field = "q";
  std::string functional_path;
};

Model make_model(const CommonOpts& opts) {
  return parse_model(opts.model, parse_field(opts.field));
}

int run_rank(const CommonOpts& opts, const std::string& bidegree,
             const std::string& window) {
  Model model = make_model(opts);
  Bidegree target = parse_bidegree(bidegree);
  Functional p = read_functional(opts.functional_path, model, target);
  SplittingWindow w(parse_bidegree(window), target);
  std::cout << "rank: " << cat_rank(p, w) << "\n";
  return kOk;
}

int run_hilbert(const CommonOpts& opts, const std::string& bidegree) {
  Model model = make_model(opts);
  Bidegree target = parse_bidegree(bidegree);
  Functional p = read_functional(opts.functional_path, model, target);
  std::cout << apolar_hilbert(p).to_string();
  return kOk;
}

int run_decompose(const CommonOpts& opts, const TheoremParams& params,
                  const std::string& out_path) {
  Field field = parse_field(opts.field);
  Model model = parse_model(opts.model, field);
  if (model.kind() != ModelKind::TwistedBinary || model.param1() != params.c) {
    throw ParseError("decompose expects --model twisted-binary:c=" +
                     std::to_string(params.c));
  }
  Functional p = read_functional(opts.functional_path, model, {params.d, 1});
  try {
    DecompositionCertificate cert = decompose(p, params);
    std::string record = emit_certificate(field, params, cert);
    std::cout << record;
    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      out << record;
    }
    return kOk;
  } catch (const NotInRankLocus& e) {
    std::cout << e.what() << "\n";
    return kNegative;
  }
}

int run_verify(const std::string& functional_path, const std::string& cert_path) {
  CertificateFile file = read_certificate(cert_path);
  Model model = Model::twisted_binary(file.params.c, file.field);
  Functional p = read_functional(functional_path, model, {file.params.d, 1});
  bool ok = verify_certificate(p, file.cert, file.params);
  std::cout << (ok ? "certificate valid" : "certificate invalid") << "\n";
  return ok ? kOk : kNegative;
}

int run_cone_split(const std::string& cone_path, long r, std::optional<long> d,
                   const std::string& target) {
  ConeFile file = read_cone_file(cone_path);
  ZVec big_d;
  if (target.empty()) {
    // default target: the threshold class lambda * D0 itself
    long lambda = lambda_bound(file.cone, file.d0, r, d.value_or(2 * r));
    big_d.resize(file.d0.size());
    for (std::size_t t = 0; t < big_d.size(); ++t) big_d[t] = lambda * file.d0[t];
  } else {
    std::istringstream ts(target);
    std::string tok;
    while (ts >> tok) {
      mpz_class z;
      if (z.set_str(tok, 10) != 0) throw ParseError("bad target entry '" + tok + "'");
      big_d.push_back(std::move(z));
    }
    if (big_d.size() != static_cast<std::size_t>(file.cone.rho())) {
      throw ParseError("target must have rho entries");
    }
  }
  try {
    SplittingPlan plan = synthesize_splitting(file.cone, file.d0, big_d, r, d);
    std::cout << plan.to_string();
    std::cout << "verify: "
              << (verify_splitting(file.cone, file.d0, big_d, r, plan) ? "ok"
                                                                       : "failed")
              << "\n";
    return kOk;
  } catch (const SplittingInfeasible& e) {
    std::cout << e.what() << "\n";
    return kNegative;
  }
}

int run_sweep(const CommonOpts& opts, const TheoremParams& params,
              unsigned long long budget, int jobs) {
  Field field = parse_field(opts.field);
  if (field.kind() != FieldKind::PrimeField) {
    throw ParseError("sweep requires a finite field (--field fp:<p>)");
  }
  Model model = parse_model(opts.model, field);
  if (model.kind() != ModelKind::TwistedBinary || model.param1() != params.c) {
    throw ParseError("sweep expects --model twisted-binary:c=" +
                     std::to_string(params.c));
  }
  SweepReport report = exhaustive_equivalence(params, field, budget, jobs);
  std::cout << report.to_string();
  return report.disagreements == 0 ? kOk : kNegative;
}

int run_check_props(const CommonOpts& opts, const std::string& points_path,
                    const std::string& window) {
  Model model = make_model(opts);
  auto points = read_points(points_path, model);
  PropertyReport report =
      hilbert_properties_check(model, points, parse_bidegree(window));
  std::cout << report.to_string();
  return report.ok() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multigraded apolarity, catalecticant ranks and cactus membership"};
  app.require_subcommand(1);

  CommonOpts opts;
  TheoremParams params{2, 1, 5, 3};
  std::string bidegree, window, out_path, cert_path, cone_path, points_path, target;
  unsigned long long budget = 2000000;
  int jobs = 1;
  long cone_r = 1;
  std::optional<long> cone_d;

  auto add_common = [&](CLI::App* cmd, bool with_functional = true) {
    cmd->add_option("--model", opts.model, "model descriptor");
    cmd->add_option("--field", opts.field, "q or fp:<prime>");
    if (with_functional) {
      cmd->add_option("--functional", opts.functional_path, "functional JSON file")
          ->required();
    }
  };
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--r", params.r, "target rank")->required();
    cmd->add_option("--c", params.c, "twist of the second bundle");
    cmd->add_option("--d", params.d, "power of the first bundle")->required();
    cmd->add_option("--k", params.k, "designated window split")->required();
  };

  CLI::App* rank = app.add_subcommand("rank", "catalecticant rank at a window");
  add_common(rank);
  rank->add_option("--bidegree", bidegree, "functional bidegree d,e")->required();
  rank->add_option("--window", window, "window part a as i,j")->required();

  CLI::App* hilbert = app.add_subcommand("hilbert", "apolar Hilbert table");
  add_common(hilbert);
  hilbert->add_option("--bidegree", bidegree, "functional bidegree d,e")->required();

  CLI::App* decomp = app.add_subcommand("decompose", "reconstruction certificate");
  add_common(decomp);
  add_params(decomp);
  decomp->add_option("--out", out_path, "also write the certificate here");

  CLI::App* verify = app.add_subcommand("verify", "check a certificate");
  verify->add_option("--functional", opts.functional_path, "functional JSON file")
      ->required();
  verify->add_option("--cert", cert_path, "certificate record")->required();

  CLI::App* cone = app.add_subcommand("cone-split", "synthesize a nef splitting");
  cone->add_option("--cone", cone_path, "cone spec file")->required();
  cone->add_option("--r", cone_r, "target rank")->required();
  cone->add_option("--d", cone_d, "override d (default 2r)");
  cone->add_option("--target", target, "target class D (rho integers)");

  CLI::App* sweep = app.add_subcommand("sweep", "exhaustive theorem verification");
  add_common(sweep, false);
  add_params(sweep);
  sweep->add_option("--budget", budget, "maximum enumeration size");
  sweep->add_option("--jobs", jobs, "worker threads (0 = runtime default)");

  CLI::App* props = app.add_subcommand("check-props", "finite-scheme Hilbert properties");
  add_common(props, false);
  props->add_option("--points", points_path, "points JSON file")->required();
  props->add_option("--window", window, "table window i,j")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (rank->parsed()) return run_rank(opts, bidegree, window);
    if (hilbert->parsed()) return run_hilbert(opts, bidegree);
    if (decomp->parsed()) return run_decompose(opts, params, out_path);
    if (verify->parsed()) return run_verify(opts.functional_path, cert_path);
    if (cone->parsed()) return run_cone_split(cone_path, cone_r, cone_d, target);
    if (sweep->parsed()) return run_sweep(opts, params, budget, jobs);
    if (props->parsed()) return run_check_props(opts, points_path, window);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
