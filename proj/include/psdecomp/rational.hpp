#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "psdecomp/errors.hpp"

namespace psdecomp {

__extension__ using Wide = __int128;

/// Exact rational number, always held in lowest terms with a positive
/// denominator.  Every pairing value in the library is one of these.
///
/// Intermediate products are formed in 128 bits; a result that does not fit
/// back into 64 bits raises std::overflow_error instead of wrapping.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(std::int64_t n) : num_(n) {}  // NOLINT: implicit on purpose
  Rat(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  Rat& operator+=(const Rat& o) {
    const Wide n = static_cast<Wide>(num_) * o.den_ + static_cast<Wide>(o.num_) * den_;
    const Wide d = static_cast<Wide>(den_) * o.den_;
    return set(n, d);
  }
  Rat& operator-=(const Rat& o) { return *this += -o; }
  Rat& operator*=(const Rat& o) {
    return set(static_cast<Wide>(num_) * o.num_, static_cast<Wide>(den_) * o.den_);
  }
  Rat& operator/=(const Rat& o) {
    if (o.num_ == 0) throw std::domain_error("division by zero rational");
    return set(static_cast<Wide>(num_) * o.den_, static_cast<Wide>(den_) * o.num_);
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const Rat&, const Rat&) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const Wide l = static_cast<Wide>(a.num_) * b.den_;
    const Wide r = static_cast<Wide>(b.num_) * a.den_;
    return l <=> r;
  }

 private:
  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    set(n, d);
  }

  Rat& set(Wide n, Wide d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Wide a = n < 0 ? -n : n, b = d;
    while (b != 0) {
      const Wide t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr Wide lo = INT64_MIN + 1, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi) throw std::overflow_error("rational overflow");
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    return *this;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << to_string(r); }

/// Parses "3", "-7", "1/2", "-3/4".  Whitespace around the token is ignored.
inline Rat parse_rat(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [&](std::string_view s) -> std::int64_t {
    s = trim(s);
    if (s.empty()) throw ValidationError("empty rational component in '" + std::string(text) + "'");
    std::size_t pos = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(std::string(s), &pos);
    } catch (const std::exception&) {
      throw ValidationError("not a rational number: '" + std::string(text) + "'");
    }
    if (pos != s.size()) throw ValidationError("not a rational number: '" + std::string(text) + "'");
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const auto num = parse_int(text.substr(0, slash));
  const auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

inline int sign(const Rat& r) {
  if (r.numerator() > 0) return 1;
  if (r.numerator() < 0) return -1;
  return 0;
}

inline Rat abs(const Rat& r) { return r.numerator() < 0 ? -r : r; }

}  // namespace psdecomp
