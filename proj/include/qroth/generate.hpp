#pragma once

// Seeded instance generation.
//
// The generator is std::mt19937_64 seeded with the 64-bit seed. An integer in
// [lo, hi] is drawn by rejection: with span = hi - lo + 1, raw 64-bit outputs
// at or above floor(2^64 / span) * span are discarded, and the first accepted
// output x gives lo + x % span. No std::*_distribution is used, so sequences
// are identical across standard libraries.

#include "qroth/io.hpp"

#include <cstdint>
#include <random>

namespace qroth {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }

private:
  std::mt19937_64 engine_;
};

enum class GenerateMode { solvable, arbitrary };

std::string_view to_string(GenerateMode mode);
GenerateMode parse_mode(std::string_view name);

inline constexpr std::size_t kMaxGeneratedDim = 6;

struct GenerateOptions {
  EquationKind kind = EquationKind::sylvester_hat;
  std::size_t m = 2;
  std::size_t n = 2;
  int epsilon = 1;
  std::uint64_t seed = 1;
  GenerateMode mode = GenerateMode::solvable;
  /// Bound on |numerator| and denominator of every drawn rational.
  long magnitude = 9;
  /// Draw A and B from the complex subfield only; C, X0, Y0 stay quaternionic.
  bool complex_coefficients = false;
};

/// Random rational: zero with probability 1/2, otherwise numerator in
/// [-mag, mag] and denominator in [1, mag].
Rational random_rational(Rng& rng, long magnitude);
/// Components drawn independently; c = d = 0 when complex_only.
Quaternion random_quaternion(Rng& rng, long magnitude, bool complex_only = false);
QMatrix random_qmatrix(Rng& rng, std::size_t rows, std::size_t cols, long magnitude,
                       bool complex_only = false);
/// Nonsingular matrix L*U with unit-triangular factors, entries in {-1,0,1}
/// (or 0, +-1, +-i when complex_only, over the quaternion units otherwise)
/// off the diagonal.
QMatrix random_unimodular(Rng& rng, std::size_t n, bool complex_only = false);
/// Monomial matrix: a permutation with a random unit (+-1, +-i, +-j, +-k;
/// only +-1, +-i when complex_only) in each nonzero slot.
QMatrix random_monomial(Rng& rng, std::size_t n, bool complex_only = false);

/// With probability 1/2 couples A and B so that the homogeneous equation has
/// a nonzero solution (or, for two_sided, the map (X, Y) -> AX - YB is not
/// onto), which makes arbitrary right-hand sides unsolvable in general.
/// mode = solvable draws X0 (and Y0), sets C from them and records them as
/// the known solution; mode = arbitrary draws C directly.
/// Throws std::invalid_argument when m or n is outside [1, 6], epsilon is not
/// +-1, or magnitude < 1.
InstanceFile generate_instance(const GenerateOptions& opts);

}  // namespace qroth
