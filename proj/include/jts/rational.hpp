#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "jts/errors.hpp"

namespace jts {

// Exact rational on 64-bit numerator/denominator with 128-bit intermediates.
// Overflow throws instead of silently losing exactness; at desk scale
// (word lengths, homology counts, small hulls) it never triggers.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  constexpr Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Exact binary expansion of a double, refused when the denominator would
  // exceed max_den (e.g. 0.1 has no short dyadic form).
  static std::optional<Rat> from_double(double x, long long max_den = (1LL << 32));

  Rat operator-() const { return Rat(checked_neg(num_), den_, already_normal_tag{}); }
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const { return *this + (-o); }
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const;
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator<=(const Rat& o) const { return !(o < *this); }
  bool operator>=(const Rat& o) const { return !(*this < o); }

  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  Rat abs() const { return num_ < 0 ? -*this : *this; }
  bool is_zero() const { return num_ == 0; }

  std::string str() const;

 private:
  struct already_normal_tag {};
  Rat(long long n, long long d, already_normal_tag) : num_(n), den_(d) {}
  void normalize();
  static long long checked_neg(long long v);
  static long long narrow(__int128 v);

  long long num_;
  long long den_;  // always > 0
};

using VecD = std::vector<double>;
using VecR = std::vector<Rat>;

VecD to_double(const VecR& v);

}  // namespace jts
