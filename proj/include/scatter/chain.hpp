#ifndef SCATTER_CHAIN_HPP
#define SCATTER_CHAIN_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scatter/error.hpp"
#include "scatter/weight.hpp"

namespace scatter {

// The six chain kinds.  A is the general-linear segment A(T,t); the other
// five are anchored at the bottom of the coordinate range and carry the
// unipotent orbit of their family:
//   B       coords {2k-1, 2k-3, ..., 2n+1} u {2n, ..., 1},   orbit [2k+1, 2n]
//   CEven   coords {2n, 2n-2, ..., 2},                       orbit [2n]
//   COdd    coords {2n-1, 2n-3, ..., 1},                     orbit [2n-1, 1]
//   DEven   coords {2n-2, 2n-4, ..., 2, 0},                  orbit [2n]
//   DMixed  coords {2n-2, ..., 2k} u {2k-1, ..., 1, 0},      orbit [2n, 2k-1, 1]
enum class ChainKind { A, B, CEven, COdd, DEven, DMixed };

struct Chain {
  ChainKind kind;
  long long p1 = 0;  // A: T;  B: k;  CEven/COdd/DEven: n;  DMixed: n
  long long p2 = 0;  // A: t;  B: n;  DMixed: k

  static Chain segment(long long T, long long t) {
    if (t < 1) fail(Errc::ZeroInAChain, "A-chain coordinates must be positive");
    if (T < t) fail(Errc::PreconditionViolation, "A-chain needs T >= t");
    if ((T - t) % 2 != 0) fail(Errc::PreconditionViolation, "A-chain endpoints must have equal parity");
    return {ChainKind::A, T, t};
  }
  static Chain b_chain(long long k, long long n) {
    if (k < 1 || n < 0 || k < n) fail(Errc::PreconditionViolation, "B-chain needs k >= n >= 0, k >= 1");
    return {ChainKind::B, k, n};
  }
  static Chain c_even(long long n) {
    if (n < 1) fail(Errc::PreconditionViolation, "C-chain needs n >= 1");
    return {ChainKind::CEven, n, 0};
  }
  static Chain c_odd(long long n) {
    if (n < 1) fail(Errc::PreconditionViolation, "C-chain needs n >= 1");
    return {ChainKind::COdd, n, 0};
  }
  static Chain d_even(long long n) {
    if (n < 2) fail(Errc::PreconditionViolation, "D-chain needs n >= 2");
    return {ChainKind::DEven, n, 0};
  }
  static Chain d_mixed(long long n, long long k) {
    if (k < 2 || n < k) fail(Errc::PreconditionViolation, "D-chain needs n >= k >= 2");
    return {ChainKind::DMixed, n, k};
  }

  bool is_segment() const { return kind == ChainKind::A; }
  bool is_x_chain() const { return kind != ChainKind::A; }

  // family an X-chain belongs to
  Family family() const {
    switch (kind) {
      case ChainKind::B: return Family::B;
      case ChainKind::CEven:
      case ChainKind::COdd: return Family::C;
      case ChainKind::DEven:
      case ChainKind::DMixed: return Family::D;
      case ChainKind::A: fail(Errc::PreconditionViolation, "A-chains belong to every family");
    }
    return Family::A;
  }

  long long rank() const {
    switch (kind) {
      case ChainKind::A: return (p1 - p2) / 2 + 1;
      case ChainKind::B: return p1 + p2;
      case ChainKind::CEven:
      case ChainKind::COdd:
      case ChainKind::DEven: return p1;
      case ChainKind::DMixed: return p1 + p2;
    }
    return 0;
  }

  std::vector<long long> coordinates() const {
    std::vector<long long> c;
    switch (kind) {
      case ChainKind::A:
        for (long long v = p1; v >= p2; v -= 2) c.push_back(v);
        break;
      case ChainKind::B:
        for (long long v = 2 * p1 - 1; v >= 2 * p2 + 1; v -= 2) c.push_back(v);
        for (long long v = 2 * p2; v >= 1; --v) c.push_back(v);
        break;
      case ChainKind::CEven:
        for (long long v = 2 * p1; v >= 2; v -= 2) c.push_back(v);
        break;
      case ChainKind::COdd:
        for (long long v = 2 * p1 - 1; v >= 1; v -= 2) c.push_back(v);
        break;
      case ChainKind::DEven:
        for (long long v = 2 * p1 - 2; v >= 0; v -= 2) c.push_back(v);
        break;
      case ChainKind::DMixed:
        for (long long v = 2 * p1 - 2; v >= 2 * p2; v -= 2) c.push_back(v);
        for (long long v = 2 * p2 - 1; v >= 1; --v) c.push_back(v);
        c.push_back(0);
        break;
    }
    return c;
  }

  long long max_coord() const { return coordinates().front(); }
  long long min_coord() const { return coordinates().back(); }

  // Zhelobenko rows.  Both rows are listed in the chain's own order; the
  // columns (top_i, bottom_i) are what the parameter is made of.
  Weight top_row() const {
    Weight w;
    switch (kind) {
      case ChainKind::A:
        for (long long v = p1; v >= p2; v -= 2) w.push_back(HalfInt::from_twice(v));
        break;
      case ChainKind::B:
        for (long long j = 1; j <= p1; ++j) w.push_back(HalfInt::from_twice(2 * j - 1));
        for (long long j = 1; j <= p2; ++j) w.push_back(HalfInt(j));
        break;
      case ChainKind::CEven:
        for (long long j = 1; j <= p1; ++j) w.push_back(HalfInt(j));
        break;
      case ChainKind::COdd:
        for (long long j = 1; j <= p1; ++j) w.push_back(HalfInt::from_twice(2 * j - 1));
        break;
      case ChainKind::DEven:
        for (long long j = 0; j < p1; ++j) w.push_back(HalfInt(j));
        break;
      case ChainKind::DMixed:
        for (long long j = 0; j < p1; ++j) w.push_back(HalfInt(j));
        for (long long j = 1; j <= p2; ++j) w.push_back(HalfInt::from_twice(2 * j - 1));
        break;
    }
    return w;
  }

  Weight bottom_row() const {
    Weight w = top_row();
    switch (kind) {
      case ChainKind::A: {
        std::size_t q = w.size();
        for (std::size_t j = 0; j < q; ++j) w[j] = HalfInt::from_twice(-(p2 + 2 * static_cast<long long>(j)));
        break;
      }
      case ChainKind::COdd:
        // the sign of the first entry alternates with n
        w[0] = HalfInt::from_twice(p1 % 2 == 0 ? 1 : -1);
        break;
      case ChainKind::DMixed:
        w[static_cast<std::size_t>(p1)] = HalfInt::from_twice(p2 % 2 == 0 ? 1 : -1);
        break;
      default:
        break;  // B, CEven, DEven: both rows agree
    }
    return w;
  }

  std::string to_string() const {
    switch (kind) {
      case ChainKind::A: return "A(" + std::to_string(p1) + "," + std::to_string(p2) + ")";
      case ChainKind::B:
        if (p2 == 0) return "B[" + std::to_string(2 * p1 + 1) + "]";
        return "B[" + std::to_string(2 * p1 + 1) + "," + std::to_string(2 * p2) + "]";
      case ChainKind::CEven: return "C[" + std::to_string(2 * p1) + "]";
      case ChainKind::COdd: return "C[" + std::to_string(2 * p1 - 1) + ",1]";
      case ChainKind::DEven: return "D[" + std::to_string(2 * p1) + "]";
      case ChainKind::DMixed:
        return "D[" + std::to_string(2 * p1) + "," + std::to_string(2 * p2 - 1) + ",1]";
    }
    return "?";
  }

  friend bool operator==(const Chain& a, const Chain& b) = default;
};

// Linkage.  Two coordinate-disjoint chains are linked when their coordinate
// intervals properly overlap (each contains the other's endpoint on one
// side).  One special case is declared linked by fiat: the singleton A-chain
// {1} with any CEven chain, whose intervals do not overlap.
inline bool is_linked(const Chain& c1, const Chain& c2) {
  long long M = c1.max_coord(), m = c1.min_coord();
  long long N = c2.max_coord(), n = c2.min_coord();
  if (M > N && N > m) return true;
  if (N > M && M > n) return true;
  auto special = [](const Chain& a, const Chain& x) {
    return a.kind == ChainKind::A && a.p1 == 1 && a.p2 == 1 && x.kind == ChainKind::CEven;
  };
  return special(c1, c2) || special(c2, c1);
}

// A union of coordinate-disjoint chains with at most one X-chain.
// Invariant order: A-chains sorted by (T+t, T) descending, X-chain last.
struct ChainUnion {
  Family family = Family::B;
  std::vector<Chain> chains;

  static ChainUnion make(Family fam, std::vector<Chain> parts) {
    if (fam == Family::A) fail(Errc::PreconditionViolation, "unions live in families B, C, D");
    int x_count = 0;
    for (const Chain& c : parts) {
      if (c.is_x_chain()) {
        ++x_count;
        if (c.family() != fam)
          fail(Errc::PreconditionViolation, c.to_string() + " does not belong to family " +
                                                std::string(1, family_letter(fam)));
      }
    }
    if (x_count > 1) fail(Errc::MultipleXChains, "a union admits at most one X-chain");
    std::set<long long> seen;
    for (const Chain& c : parts)
      for (long long v : c.coordinates())
        if (!seen.insert(v).second)
          fail(Errc::DuplicateCoordinate, "coordinate " + std::to_string(v) + " appears twice");
    std::stable_sort(parts.begin(), parts.end(), [](const Chain& a, const Chain& b) {
      if (a.is_segment() != b.is_segment()) return a.is_segment();
      if (!a.is_segment()) return false;
      if (a.p1 + a.p2 != b.p1 + b.p2) return a.p1 + a.p2 > b.p1 + b.p2;
      return a.p1 > b.p1;
    });
    return {fam, std::move(parts)};
  }

  long long rank() const {
    long long r = 0;
    for (const Chain& c : chains) r += c.rank();
    return r;
  }

  std::vector<Chain> segments() const {
    std::vector<Chain> s;
    for (const Chain& c : chains)
      if (c.is_segment()) s.push_back(c);
    return s;
  }

  std::optional<Chain> x_chain() const {
    for (const Chain& c : chains)
      if (c.is_x_chain()) return c;
    return std::nullopt;
  }

  // 2lambda: the coordinate multiset in dominant order.
  Weight two_lambda() const {
    std::vector<long long> coords;
    for (const Chain& c : chains)
      for (long long v : c.coordinates()) coords.push_back(v);
    std::sort(coords.begin(), coords.end(), std::greater<long long>());
    return int_weight(coords);
  }

  // Lowest K-type: the dominant sort of the stacked row differences.
  Weight lkt() const {
    Weight diff;
    for (const Chain& c : chains) {
      Weight t = c.top_row(), b = c.bottom_row();
      for (std::size_t j = 0; j < t.size(); ++j) diff.push_back(t[j] - b[j]);
    }
    return dominant_sort(family, diff);
  }

  // Linkage graph connectivity.  A single chain is interlaced by convention.
  bool is_interlaced() const {
    std::size_t n = chains.size();
    if (n <= 1) return true;
    std::vector<std::size_t> comp(n);
    for (std::size_t i = 0; i < n; ++i) comp[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
      return comp[a] == a ? a : comp[a] = find(comp[a]);
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (is_linked(chains[i], chains[j])) comp[find(i)] = find(j);
    for (std::size_t i = 1; i < n; ++i)
      if (find(i) != find(0)) return false;
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < chains.size(); ++i) {
      if (i) s += "+";
      s += chains[i].to_string();
    }
    return s;
  }

  friend bool operator==(const ChainUnion& a, const ChainUnion& b) = default;
};

// Scattered: exactly one X-chain and connected linkage graph.
inline bool is_scattered(const ChainUnion& u) {
  return u.x_chain().has_value() && u.is_interlaced();
}

inline void expect_rank(const ChainUnion& u, long long rank) {
  if (u.rank() != rank)
    fail(Errc::RankMismatch, "union " + u.to_string() + " has rank " + std::to_string(u.rank()) +
                                 ", expected " + std::to_string(rank));
}

namespace detail {

inline std::vector<long long> parse_bracket_list(std::string_view body, std::string_view token) {
  std::vector<long long> vals;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view part = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (part.empty()) fail(Errc::ParseError, "bad chain token: " + std::string(token));
    for (char ch : part)
      if (ch < '0' || ch > '9') fail(Errc::ParseError, "bad chain token: " + std::string(token));
    vals.push_back(std::strtoll(std::string(part).c_str(), nullptr, 10));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return vals;
}

}  // namespace detail

// Grammar: A(T,t) | B[2k+1] | B[2k+1,2n] | C[2n] | C[2n-1,1] | D[2n] | D[2n,2k-1,1].
inline Chain parse_chain(std::string_view token) {
  if (token.size() < 4) fail(Errc::ParseError, "bad chain token: " + std::string(token));
  char letter = token[0];
  char open = token[1];
  char close = token.back();
  std::string_view body = token.substr(2, token.size() - 3);
  if (letter == 'A') {
    if (open != '(' || close != ')') fail(Errc::ParseError, "A-chains use parentheses: " + std::string(token));
    auto vals = detail::parse_bracket_list(body, token);
    if (vals.size() != 2) fail(Errc::ParseError, "A-chain needs two endpoints: " + std::string(token));
    if (vals[1] < 1) fail(Errc::ZeroInAChain, "A-chain coordinates must be positive: " + std::string(token));
    return Chain::segment(vals[0], vals[1]);
  }
  if (open != '[' || close != ']') fail(Errc::ParseError, "orbit chains use brackets: " + std::string(token));
  auto vals = detail::parse_bracket_list(body, token);
  auto bad = [&]() -> Chain { fail(Errc::ParseError, "unrecognized orbit label: " + std::string(token)); };
  switch (letter) {
    case 'B': {
      if (vals.size() == 1) vals.push_back(0);
      if (vals.size() != 2 || vals[0] % 2 != 1 || vals[1] % 2 != 0) return bad();
      return Chain::b_chain((vals[0] - 1) / 2, vals[1] / 2);
    }
    case 'C': {
      if (vals.size() == 1 && vals[0] % 2 == 0 && vals[0] >= 2) return Chain::c_even(vals[0] / 2);
      if (vals.size() == 2 && vals[1] == 1 && vals[0] % 2 == 1) return Chain::c_odd((vals[0] + 1) / 2);
      return bad();
    }
    case 'D': {
      if (vals.size() == 1 && vals[0] % 2 == 0) return Chain::d_even(vals[0] / 2);
      if (vals.size() == 3 && vals[2] == 1 && vals[0] % 2 == 0 && vals[1] % 2 == 1)
        return Chain::d_mixed(vals[0] / 2, (vals[1] + 1) / 2);
      return bad();
    }
    default: return bad();
  }
}

// Parse a +-separated union.  The family comes from the X-chain when present;
// all-segment unions need the family supplied.
inline ChainUnion parse_union(std::string_view text, std::optional<Family> fam = std::nullopt) {
  std::vector<Chain> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t plus = text.find('+', pos);
    std::string_view tok = text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
    std::size_t b = tok.find_first_not_of(" \t");
    if (b == std::string_view::npos) fail(Errc::ParseError, "empty chain token");
    std::size_t e = tok.find_last_not_of(" \t");
    parts.push_back(parse_chain(tok.substr(b, e - b + 1)));
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  for (const Chain& c : parts)
    if (c.is_x_chain()) {
      if (fam && *fam != c.family()) fail(Errc::RankMismatch, "family contradicts the X-chain");
      fam = c.family();
    }
  if (!fam) fail(Errc::ParseError, "family required for all-segment unions");
  return ChainUnion::make(*fam, std::move(parts));
}

// The Zhelobenko parameter of a union: the two stacked rows.
struct ZhParam {
  Weight lambda_l;
  Weight lambda_r;
};

inline ZhParam zh_param(const ChainUnion& u) {
  ZhParam p;
  for (const Chain& c : u.chains) {
    Weight t = c.top_row(), b = c.bottom_row();
    p.lambda_l.insert(p.lambda_l.end(), t.begin(), t.end());
    p.lambda_r.insert(p.lambda_r.end(), b.begin(), b.end());
  }
  return p;
}

}  // namespace scatter

#endif
