#include "mwall/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace mwall {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) { return v > static_cast<i128>(INT64_MIN) && v <= static_cast<i128>(INT64_MAX); }

Scalar::Big big_of(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  boost::multiprecision::cpp_int r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  if (neg) r = -r;
  return Scalar::Big(r);
}

}  // namespace

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  assign_checked(num, den);
}

void Scalar::set_big(const Big& b) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  const auto& n = numerator(b);
  const auto& d = denominator(b);
  static const boost::multiprecision::cpp_int lo = INT64_MIN;
  static const boost::multiprecision::cpp_int hi = INT64_MAX;
  if (n > lo && n <= hi && d <= hi) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
    return;
  }
  big_ = std::make_shared<const Big>(b);
  num_ = 0;
  den_ = 1;
}

void Scalar::assign_checked(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  if (fits64(n) && fits64(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
  } else {
    set_big(Big(big_of(n)) / Big(big_of(d)));
  }
}

Scalar Scalar::from_double(double d) {
  if (!std::isfinite(d)) throw std::domain_error("non-finite value");
  if (d == 0.0) return Scalar(0);
  int e = 0;
  double m = std::frexp(d, &e);
  auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  e -= 53;
  Big r = Big(mant);
  if (e > 0) {
    boost::multiprecision::cpp_int p = 1;
    p <<= e;
    r *= Big(p);
  } else if (e < 0) {
    boost::multiprecision::cpp_int p = 1;
    p <<= -e;
    r /= Big(p);
  }
  return Scalar(r);
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      boost::multiprecision::cpp_int n(s.substr(0, slash));
      boost::multiprecision::cpp_int d(s.substr(slash + 1));
      if (d == 0) throw std::invalid_argument("zero denominator in " + s);
      return Scalar(Big(n, d));
    }
    if (s.find_first_of(".eE") == std::string::npos) {
      return Scalar(Big(boost::multiprecision::cpp_int(s)));
    }
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad number: " + s);
  }
  // Decimal literal: exact value of the written decimal, not of its double.
  std::string mant = s;
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    mant = s.substr(0, epos);
    exp10 = std::stol(s.substr(epos + 1));
  }
  auto dot = mant.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  if (mant.empty() || mant == "-" || mant == "+") throw std::invalid_argument("bad number: " + s);
  if (mant[0] == '+') mant.erase(0, 1);
  boost::multiprecision::cpp_int n;
  try {
    n = boost::multiprecision::cpp_int(mant);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad number: " + s);
  }
  boost::multiprecision::cpp_int p = boost::multiprecision::pow(boost::multiprecision::cpp_int(10), static_cast<unsigned>(std::labs(exp10)));
  return exp10 >= 0 ? Scalar(Big(n * p)) : Scalar(Big(n, p));
}

bool Scalar::is_integer() const {
  if (!big_) return den_ == 1;
  return boost::multiprecision::denominator(*big_) == 1;
}

int Scalar::sign() const {
  if (!big_) return (num_ > 0) - (num_ < 0);
  return big_->sign();
}

double Scalar::to_double() const {
  if (!big_) return static_cast<double>(num_) / static_cast<double>(den_);
  return big_->convert_to<double>();
}

Scalar::Big Scalar::to_big() const {
  if (!big_) return Big(num_, den_);
  return *big_;
}

std::string Scalar::str() const {
  if (!big_) return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  return big_->str();
}

std::int64_t Scalar::to_int64() const {
  if (!is_integer()) throw std::domain_error("not an integer: " + str());
  if (!big_) return num_;
  throw std::overflow_error("integer out of range: " + str());
}

Scalar Scalar::operator-() const {
  if (!big_) {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return Scalar(Big(-*big_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!big_ && !o.big_) {
    if (den_ == o.den_ && den_ == 1) {
      assign_checked(static_cast<i128>(num_) + o.num_, 1);
    } else {
      assign_checked(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_, static_cast<i128>(den_) * o.den_);
    }
    return *this;
  }
  set_big(to_big() + o.to_big());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (!big_ && !o.big_) {
    if (den_ == o.den_ && den_ == 1) {
      assign_checked(static_cast<i128>(num_) - o.num_, 1);
    } else {
      assign_checked(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_, static_cast<i128>(den_) * o.den_);
    }
    return *this;
  }
  set_big(to_big() - o.to_big());
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!big_ && !o.big_) {
    assign_checked(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
    return *this;
  }
  set_big(to_big() * o.to_big());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (!big_ && !o.big_) {
    assign_checked(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
    return *this;
  }
  set_big(to_big() / o.to_big());
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a value that fits inline is never stored big
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  auto ab = a.to_big();
  auto bb = b.to_big();
  if (ab < bb) return std::strong_ordering::less;
  if (ab > bb) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

Scalar floor(const Scalar& s) {
  if (s.is_integer()) return s;
  auto b = s.to_big();
  boost::multiprecision::cpp_int q = boost::multiprecision::numerator(b) / boost::multiprecision::denominator(b);
  if (b.sign() < 0) q -= 1;
  return Scalar(Scalar::Big(q));
}

Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace mwall
