#ifndef SCATTER_WEIGHT_HPP
#define SCATTER_WEIGHT_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "scatter/error.hpp"
#include "scatter/halfint.hpp"
#include "scatter/rational.hpp"

namespace scatter {

// Complex classical families.  A is the general-linear case and only appears
// as a factor (A-chains, Levi blocks); censuses run over B, C, D.
enum class Family { A, B, C, D };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

inline Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
  }
  fail(Errc::ParseError, std::string("unknown family letter '") + c + "'");
}

using Weight = std::vector<HalfInt>;

// Half sum of positive roots in coordinates:
//   A_n (gl_n): ((n-1)/2, (n-3)/2, ..., -(n-1)/2)
//   B_n:        (n-1/2, n-3/2, ..., 1/2)
//   C_n:        (n, n-1, ..., 1)
//   D_n:        (n-1, n-2, ..., 1, 0)
inline Weight rho(Family f, int rank) {
  if (rank < 1) fail(Errc::PreconditionViolation, "rank must be positive");
  Weight r(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    switch (f) {
      case Family::A: r[i] = HalfInt::from_twice(rank - 1 - 2 * i); break;
      case Family::B: r[i] = HalfInt::from_twice(2 * (rank - i) - 1); break;
      case Family::C: r[i] = HalfInt(rank - i); break;
      case Family::D: r[i] = HalfInt(rank - 1 - i); break;
    }
  }
  return r;
}

// Dominant representative {v} used throughout for K-type labels: descending
// for A, absolute values descending for B/C/D (so the last coordinate of a
// type-D label is nonnegative by convention).
inline Weight dominant_sort(Family f, Weight v) {
  if (f != Family::A)
    for (auto& x : v) x = x.abs();
  std::sort(v.begin(), v.end(), std::greater<HalfInt>());
  return v;
}

inline bool is_dominant(Family f, const Weight& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  if (v.empty()) return true;
  switch (f) {
    case Family::A: return true;
    case Family::B:
    case Family::C: return v.back() >= HalfInt(0);
    case Family::D:
      return v.size() < 2 || v[v.size() - 2] >= v.back().abs();
  }
  return true;
}

inline Rational norm2(const Weight& v) {
  long long s = 0;
  for (auto x : v) s += x.twice() * x.twice();
  return Rational(s, 4);
}

inline Weight operator+(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) fail(Errc::PreconditionViolation, "weight length mismatch");
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Weight operator-(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) fail(Errc::PreconditionViolation, "weight length mismatch");
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Squared spin norm of a K-type delta: ||{delta - rho} + rho||^2.
inline Rational spin_norm_sq(Family f, const Weight& delta) {
  Weight r = rho(f, static_cast<int>(delta.size()));
  return norm2(dominant_sort(f, delta - r) + r);
}

// mu lies in the convex hull of W.(2rho), the unitarily-small region for a
// complex group: equivalently 2rho - {mu} is a nonnegative rational
// combination of the simple roots.  In coordinates d = 2rho - {mu} this reads
// off the partial sums S_j = d_1 + ... + d_j:
//   A: S_j >= 0 for j < n and S_n = 0
//   B: S_j >= 0 for all j
//   C: S_j >= 0 for all j
//   D: S_j >= 0 for j <= n-2, S_{n-1} - d_n >= 0, S_n >= 0
inline bool is_unitarily_small(Family f, const Weight& mu) {
  const int n = static_cast<int>(mu.size());
  Weight two_rho = rho(f, n);
  for (auto& x : two_rho) x = 2 * x;
  Weight d = two_rho - dominant_sort(f, mu);
  long long s = 0;  // doubled partial sum
  std::vector<long long> partial(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    s += d[i].twice();
    partial[i] = s;
  }
  switch (f) {
    case Family::A: {
      if (partial[n - 1] != 0) return false;
      for (int i = 0; i + 1 < n; ++i)
        if (partial[i] < 0) return false;
      return true;
    }
    case Family::B:
    case Family::C: {
      for (int i = 0; i < n; ++i)
        if (partial[i] < 0) return false;
      return true;
    }
    case Family::D: {
      for (int i = 0; i + 2 < n; ++i)
        if (partial[i] < 0) return false;
      if (n >= 2 && partial[n - 2] - d[n - 1].twice() < 0) return false;
      return partial[n - 1] >= 0;
    }
  }
  return false;
}

// Pairing of lambda with the simple coroots, in coordinate order:
//   A: lambda_i - lambda_{i+1}                       (n-1 values)
//   B: differences, then 2*lambda_n
//   C: differences, then lambda_n
//   D: differences up to lambda_{n-1} - lambda_n, then lambda_{n-1} + lambda_n
inline std::vector<HalfInt> to_fundamental(Family f, const Weight& lambda) {
  const std::size_t n = lambda.size();
  if (n == 0) fail(Errc::PreconditionViolation, "empty weight");
  std::vector<HalfInt> c;
  for (std::size_t i = 0; i + 1 < n; ++i) c.push_back(lambda[i] - lambda[i + 1]);
  switch (f) {
    case Family::A: break;
    case Family::B: c.push_back(2 * lambda[n - 1]); break;
    case Family::C: c.push_back(lambda[n - 1]); break;
    case Family::D:
      if (n < 2) fail(Errc::PreconditionViolation, "type D needs rank >= 2");
      c.push_back(lambda[n - 2] + lambda[n - 1]);
      break;
  }
  return c;
}

// Inverse of to_fundamental on full-rank inputs (test helper).
inline Weight from_fundamental(Family f, const std::vector<HalfInt>& c) {
  std::size_t n = c.size();
  if (f == Family::A) fail(Errc::PreconditionViolation, "type A coordinates are determined only up to a central shift");
  if (n == 0) fail(Errc::PreconditionViolation, "empty coordinate vector");
  Weight lambda(n);
  switch (f) {
    case Family::B: lambda[n - 1] = HalfInt::from_twice(c[n - 1].to_int()); break;
    case Family::C: lambda[n - 1] = c[n - 1]; break;
    case Family::D: {
      if (n < 2) fail(Errc::PreconditionViolation, "type D needs rank >= 2");
      lambda[n - 1] = HalfInt::from_twice((c[n - 1] - c[n - 2]).twice() / 2);
      lambda[n - 2] = HalfInt::from_twice((c[n - 1] + c[n - 2]).twice() / 2);
      for (std::size_t i = n - 2; i-- > 0;) lambda[i] = lambda[i + 1] + c[i];
      return lambda;
    }
    default: break;
  }
  for (std::size_t i = n - 1; i-- > 0;) lambda[i] = lambda[i + 1] + c[i];
  return lambda;
}

inline std::string weight_to_string(const Weight& v, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i].to_string();
  }
  return s;
}

inline Weight parse_weight(std::string_view text) {
  Weight v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::size_t b = tok.find_first_not_of(" \t");
    if (b == std::string_view::npos) fail(Errc::ParseError, "empty weight entry");
    std::size_t e = tok.find_last_not_of(" \t");
    v.push_back(HalfInt::parse(tok.substr(b, e - b + 1)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return v;
}

inline Weight int_weight(std::vector<long long> entries) {
  Weight w(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) w[i] = HalfInt(entries[i]);
  return w;
}

}  // namespace scatter

#endif
