#ifndef HOPSPAN_UTIL_HPP_
#define HOPSPAN_UTIL_HPP_

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace hopspan {

// Edge weights are 64-bit nonnegative integers; path lengths accumulate in
// 128 bits so that sums up to n * w_max never wrap.
using Weight = std::uint64_t;
using dist_t = unsigned __int128;

inline constexpr dist_t kInfDist = ~dist_t{0};

std::string dist_to_string(dist_t d);

// Unbiased draw in [0, bound) from a fixed-sequence engine. We avoid
// std::uniform_int_distribution because its output is implementation-defined
// and graphs must be byte-identical for a given seed everywhere.
std::uint64_t rng_below(std::mt19937_64& gen, std::uint64_t bound);

// Uniform double in [0, 1) with 53 bits, same portability argument.
double rng_unit(std::mt19937_64& gen);

// Fisher-Yates with rng_below; std::shuffle is also implementation-defined.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& gen) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng_below(gen, i));
    std::swap(v[i - 1], v[j]);
  }
}

// Small rational in [0,1), used for stretch parameters that must be compared
// exactly (no floating point in any acceptance comparison).
struct Eps {
  std::uint64_t num{0};
  std::uint64_t den{1};

  bool is_zero() const { return num == 0; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

Eps parse_eps(const std::string& text);  // accepts "a/b", decimals, "0"

// Exact nonnegative rational on 128-bit limbs. Only needs multiply and
// compare-against-distance; throws if a product would not fit.
class Ratio {
 public:
  Ratio() = default;
  Ratio(dist_t num, dist_t den);
  static Ratio one() { return Ratio(1, 1); }
  static Ratio one_plus(Eps e) { return Ratio(dist_t(e.den) + e.num, e.den); }

  Ratio times(const Ratio& o) const;
  // a <= (*this) * b, exact.
  bool le_scaled(dist_t a, dist_t b) const;
  // ceil((*this) * b)
  dist_t mul_ceil(dist_t b) const;

  dist_t num() const { return num_; }
  dist_t den() const { return den_; }
  double value() const;
  std::string to_string() const;  // "num/den"

 private:
  dist_t num_{1};
  dist_t den_{1};
};

Ratio parse_ratio(const std::string& text);

// Domain / parse / construction error taxonomy shared by the CLI exit codes.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& m) : std::runtime_error(m) {}
};
struct construction_error : std::runtime_error {
  explicit construction_error(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace hopspan

#endif  // HOPSPAN_UTIL_HPP_
