// Compares the serial reference sweep against the OpenMP kernel on the
// exhaustive theorem check, and verifies that the reports agree.
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "cactus/oracle.hpp"

using namespace cactus;

int main(int argc, char** argv) {
  long q = 5;
  int jobs = 0;  // runtime default
  for (int a = 1; a < argc; ++a) {
    if (std::strcmp(argv[a], "--field") == 0 && a + 1 < argc) {
      q = std::atol(argv[++a]);
    } else if (std::strcmp(argv[a], "--jobs") == 0 && a + 1 < argc) {
      jobs = std::atoi(argv[++a]);
    } else {
      std::fprintf(stderr, "usage: bench_sweep [--field <prime>] [--jobs <n>]\n");
      return 2;
    }
  }

  TheoremParams params{2, 1, 5, 3};
  Field fq = Field::prime(q);

  std::printf("exhaustive equivalence sweep, F_%ld, r=%d d=%d k=%d\n", q,
              params.r, params.d, params.k);

  SweepReport serial = sweep_serial(params, fq);
  std::printf("serial reference: %llu points in %.3f s\n", serial.total,
              serial.seconds);

  SweepReport parallel = sweep_parallel(params, fq, jobs);
  std::printf("openmp kernel:    %llu points in %.3f s\n", parallel.total,
              parallel.seconds);

  if (!serial.counts_equal(parallel)) {
    std::printf("MISMATCH between serial and parallel reports\n%s\n%s\n",
                serial.to_string().c_str(), parallel.to_string().c_str());
    return 1;
  }
  std::printf("reports agree (both-true=%llu both-false=%llu disagreements=%llu)\n",
              serial.both_true, serial.both_false, serial.disagreements);
  if (parallel.seconds > 0) {
    std::printf("speedup: %.2fx\n", serial.seconds / parallel.seconds);
  }
  return serial.disagreements == 0 ? 0 : 1;
}
