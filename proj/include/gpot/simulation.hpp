#ifndef GPOT_SIMULATION_HPP
#define GPOT_SIMULATION_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "gpot/divergences.hpp"
#include "gpot/kernels.hpp"

namespace gpot {

/// Innovation law for path generation: independent zero-mean unit-variance
/// entries, either standard normal or uniform on [-sqrt(3), sqrt(3)].
enum class Innovation { Gaussian, UniformScaled };

/// m evaluation sites drawn i.i.d. uniform on [0,1]^d.
struct PointSample {
  int d = 1;
  int m = 1;
  Matrix coords;  // m x d
  std::uint64_t seed = 0;
};

/// N process realizations observed at the sites of X (Z is m x N).
struct PathSample {
  PointSample x;
  Matrix z;
  int n = 1;
  Innovation innovation = Innovation::Gaussian;
  std::uint64_t seed = 0;
};

/// (1/N) Z Z^T, PSD by construction with rank <= min(m, N).
struct EmpiricalCov {
  SymMatrix mat;
  int n;
};

/// Seeded generator with platform-stable uniform and normal draws.
/// std::mt19937_64 is fully specified by the standard; the distributions are
/// hand-rolled because the standard library's are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() {  // in [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double normal();  // Box-Muller

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Stable per-substream seed, so parallel trials are schedule-independent.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

PointSample sample_points(int d, int m, std::uint64_t seed);

PathSample sample_paths(const GramMatrix& g, int n, Innovation innovation,
                        std::uint64_t seed, const PsdPolicy& policy = {});

EmpiricalCov empirical_cov(const PathSample& z, bool subtract_mean = false);

/// Plug-in estimator: empirical covariances normalized by 1/m, then the
/// full divergence report.
DivergenceReport estimate_from_samples(const PathSample& z1,
                                       const PathSample& z2,
                                       const std::vector<double>& eps_list,
                                       bool subtract_mean = false,
                                       const PsdPolicy& policy = {});

}  // namespace gpot

#endif
