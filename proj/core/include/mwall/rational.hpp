#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mwall {

// Exact rational. Values whose numerator and denominator fit in 64 bits are
// kept inline; anything larger spills into a boost cpp_rational.
class Scalar {
 public:
  using Big = boost::multiprecision::cpp_rational;

  Scalar() = default;
  template <std::integral T>
  Scalar(T v) : num_(static_cast<std::int64_t>(v)) {
    if constexpr (std::is_unsigned_v<T> && sizeof(T) >= sizeof(std::int64_t)) {
      if (v > static_cast<std::uint64_t>(INT64_MAX)) set_big(Big(v));
    } else if constexpr (sizeof(T) >= sizeof(std::int64_t)) {
      if (v == INT64_MIN) set_big(Big(v));
    }
  }
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(const Big& b) { set_big(b); }

  // Exact value of a finite double.
  static Scalar from_double(double d);
  // Accepts "7", "-3/4", "0.125", "1e-3".
  static Scalar parse(std::string_view text);

  bool is_small() const { return !big_; }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;
  int sign() const;
  double to_double() const;
  Big to_big() const;
  std::string str() const;

  // Only valid when is_integer() and the value fits.
  std::int64_t to_int64() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  void set_big(const Big& b);
  void assign_checked(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const Big> big_;
};

Scalar abs(const Scalar& s);
Scalar floor(const Scalar& s);
Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace mwall
