#include "jts/rational.hpp"

#include <cmath>
#include <limits>

namespace jts {

long long Rat::narrow(__int128 v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min() + 1) {
    throw GuardError("rational: 64-bit overflow in exact arithmetic");
  }
  return static_cast<long long>(v);
}

long long Rat::checked_neg(long long v) { return narrow(-static_cast<__int128>(v)); }

void Rat::normalize() {
  if (den_ == 0) throw ValidationError("rational: zero denominator");
  if (den_ < 0) {
    num_ = checked_neg(num_);
    den_ = checked_neg(den_);
  }
  long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

std::optional<Rat> Rat::from_double(double x, long long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  double scaled = x;
  long long den = 1;
  while (scaled != std::floor(scaled)) {
    if (den > max_den / 2) return std::nullopt;
    scaled *= 2;
    den *= 2;
    if (std::fabs(scaled) > 9.0e15) return std::nullopt;
  }
  if (std::fabs(scaled) > 9.0e15) return std::nullopt;
  return Rat(static_cast<long long>(scaled), den);
}

Rat Rat::operator+(const Rat& o) const {
  __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  // Reduce on 128 bits before narrowing so mid-sized sums stay representable.
  auto gcd128 = [](__int128 a, __int128 b) {
    if (a < 0) a = -a;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  __int128 gg = gcd128(n, d);
  if (gg > 1) {
    n /= gg;
    d /= gg;
  }
  return Rat(narrow(n), narrow(d));
}

Rat Rat::operator*(const Rat& o) const {
  long long g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
  long long g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
  __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
  __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
  return Rat(narrow(n), narrow(d));
}

Rat Rat::operator/(const Rat& o) const {
  if (o.num_ == 0) throw ValidationError("rational: division by zero");
  return *this * Rat(o.den_, o.num_);
}

bool Rat::operator<(const Rat& o) const {
  return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

VecD to_double(const VecR& v) {
  VecD out;
  out.reserve(v.size());
  for (const Rat& r : v) out.push_back(r.to_double());
  return out;
}

}  // namespace jts
