#ifndef SCATTER_HALFINT_HPP
#define SCATTER_HALFINT_HPP

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>

#include "scatter/error.hpp"

namespace scatter {

// Element of (1/2)Z stored as its double, so all arithmetic is exact integer
// arithmetic.  Zhelobenko rows, rho, and K-type coordinates all live here.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(long long n) : twice_(2 * n) {}  // NOLINT: implicit by design
  static constexpr HalfInt from_twice(long long t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr long long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  long long to_int() const {
    if (!is_integer()) fail(Errc::PreconditionViolation, "half-integer where integer required: " + to_string());
    return twice_ / 2;
  }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator*(long long k, HalfInt a) { return from_twice(k * a.twice_); }
  friend constexpr HalfInt operator*(HalfInt a, long long k) { return from_twice(k * a.twice_); }

  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  // Accepts "3", "-7/2", "4/2", "5/1".
  static HalfInt parse(std::string_view s) {
    if (s.empty()) fail(Errc::ParseError, "empty numeric token");
    std::size_t slash = s.find('/');
    auto parse_ll = [&](std::string_view part) -> long long {
      if (part.empty()) fail(Errc::ParseError, "bad numeric token: " + std::string(s));
      std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
      if (i == part.size()) fail(Errc::ParseError, "bad numeric token: " + std::string(s));
      for (std::size_t j = i; j < part.size(); ++j)
        if (part[j] < '0' || part[j] > '9') fail(Errc::ParseError, "bad numeric token: " + std::string(s));
      return std::strtoll(std::string(part).c_str(), nullptr, 10);
    };
    if (slash == std::string_view::npos) return HalfInt(parse_ll(s));
    long long num = parse_ll(s.substr(0, slash));
    long long den = parse_ll(s.substr(slash + 1));
    if (den == 1) return HalfInt(num);
    if (den == 2) return from_twice(num);
    fail(Errc::ParseError, "denominator must be 1 or 2: " + std::string(s));
  }

  friend std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

 private:
  long long twice_ = 0;
};

inline HalfInt abs(HalfInt h) { return h.abs(); }

}  // namespace scatter

#endif
