#include "entdyn/random.hpp"

#include <cmath>
#include <random>

#include "entdyn/types.hpp"

namespace entdyn {

std::vector<double> sample_white_noise(double mu, double f, std::uint64_t seed, std::size_t count) {
  if (!(std::isfinite(mu) && mu >= 0.0) || !(std::isfinite(f) && f >= 0.0))
    throw ValidationError("white noise requires finite mu >= 0 and f >= 0");
  const double lo = std::abs(mu - f);
  const double hi = mu + f;
  std::mt19937_64 engine(seed);
  std::vector<double> out(count);
  for (auto& v : out) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    v = lo + (hi - lo) * u;
  }
  return out;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_row_seed(std::uint64_t master_seed, std::size_t row) {
  return mix64(master_seed ^ (static_cast<std::uint64_t>(row) * kRowSeedStride));
}

std::uint64_t derive_repeat_seed(std::uint64_t row_seed, std::size_t repeat) {
  if (repeat == 0) return row_seed;
  return mix64(row_seed ^ (static_cast<std::uint64_t>(repeat) * kRepeatSeedStride));
}

}  // namespace entdyn
