#include "hopspan/util.hpp"

#include <algorithm>
#include <cmath>

namespace hopspan {

std::string dist_to_string(dist_t d) {
  if (d == kInfDist) return "inf";
  if (d == 0) return "0";
  std::string s;
  while (d > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(d % 10)));
    d /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::uint64_t rng_below(std::mt19937_64& gen, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("rng_below: bound must be positive");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  for (;;) {
    std::uint64_t x = gen();
    if (x < limit) return x % bound;
  }
}

double rng_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

Eps parse_eps(const std::string& text) {
  if (text.empty()) return {0, 1};
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::uint64_t num = std::stoull(text.substr(0, slash));
    std::uint64_t den = std::stoull(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("eps: zero denominator");
    if (num >= den) throw std::invalid_argument("eps must lie in [0,1)");
    return {num, den};
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    std::uint64_t v = std::stoull(text);
    if (v != 0) throw std::invalid_argument("eps must lie in [0,1)");
    return {0, 1};
  }
  std::string frac = text.substr(dot + 1);
  std::string whole = text.substr(0, dot);
  if (!whole.empty() && std::stoull(whole) != 0)
    throw std::invalid_argument("eps must lie in [0,1)");
  if (frac.size() > 18) frac = frac.substr(0, 18);
  std::uint64_t num = frac.empty() ? 0 : std::stoull(frac);
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  return {num, den};
}

namespace {

dist_t gcd128(dist_t a, dist_t b) {
  while (b != 0) {
    dist_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

dist_t checked_mul(dist_t a, dist_t b) {
  if (a == 0 || b == 0) return 0;
  dist_t r = a * b;
  if (r / a != b) throw std::overflow_error("128-bit rational product overflow");
  return r;
}

}  // namespace

Ratio::Ratio(dist_t num, dist_t den) : num_(num), den_(den) {
  if (den_ == 0) throw std::invalid_argument("Ratio: zero denominator");
  dist_t g = gcd128(num_ == 0 ? den_ : num_, den_);
  num_ /= g;
  den_ /= g;
}

Ratio Ratio::times(const Ratio& o) const {
  // cross-reduce first to keep the limbs small
  dist_t g1 = gcd128(num_ == 0 ? 1 : num_, o.den_);
  dist_t g2 = gcd128(o.num_ == 0 ? 1 : o.num_, den_);
  return Ratio(checked_mul(num_ / g1, o.num_ / g2),
               checked_mul(den_ / g2, o.den_ / g1));
}

bool Ratio::le_scaled(dist_t a, dist_t b) const {
  if (b == kInfDist) return true;
  if (a == kInfDist) return false;
  return checked_mul(a, den_) <= checked_mul(num_, b);
}

dist_t Ratio::mul_ceil(dist_t b) const {
  if (b == kInfDist) return kInfDist;
  dist_t p = checked_mul(num_, b);
  return p / den_ + (p % den_ != 0 ? 1 : 0);
}

double Ratio::value() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Ratio::to_string() const {
  return dist_to_string(num_) + "/" + dist_to_string(den_);
}

Ratio parse_ratio(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Ratio(std::stoull(text), 1);
  auto parse128 = [](const std::string& s) {
    dist_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("ratio: bad digit");
      v = v * 10 + static_cast<unsigned>(c - '0');
    }
    return v;
  };
  return Ratio(parse128(text.substr(0, slash)), parse128(text.substr(slash + 1)));
}

}  // namespace hopspan
