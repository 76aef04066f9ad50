#ifndef SCATTER_CENSUS_HPP
#define SCATTER_CENSUS_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scatter/chain.hpp"
#include "scatter/error.hpp"

namespace scatter {

// Enumeration is bounded to keep accidental huge requests from spinning;
// SCATTER_MAX_RANK overrides the default of 10.
inline int max_census_rank() {
  if (const char* env = std::getenv("SCATTER_MAX_RANK")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<int>(v);
  }
  return 10;
}

// Census order: 2lambda descending lexicographically, grammar string as a
// tie break.
inline void census_sort(std::vector<ChainUnion>& reps) {
  std::sort(reps.begin(), reps.end(), [](const ChainUnion& a, const ChainUnion& b) {
    Weight wa = a.two_lambda(), wb = b.two_lambda();
    if (wa != wb) return wa > wb;
    return a.to_string() < b.to_string();
  });
}

// All scattered representations of the given family and rank: one X-chain
// plus pairwise disjoint A-chains filling the remaining rank, connected
// linkage graph.  Coordinates are searched below coord_bound (default
// 2*rank, which a regression test confirms loses nothing).
inline std::vector<ChainUnion> enumerate_scattered(Family f, int rank, long long coord_bound = 0) {
  if (f == Family::A) fail(Errc::PreconditionViolation, "censuses run over families B, C, D");
  int min_rank = f == Family::D ? 3 : 2;
  if (rank < min_rank)
    fail(Errc::PreconditionViolation, "family " + std::string(1, family_letter(f)) +
                                          " census starts at rank " + std::to_string(min_rank));
  if (rank > max_census_rank())
    fail(Errc::RankTooLarge, "rank " + std::to_string(rank) + " exceeds the census bound " +
                                 std::to_string(max_census_rank()) +
                                 " (set SCATTER_MAX_RANK to raise it)");
  if (coord_bound <= 0) coord_bound = 2 * rank;

  std::vector<Chain> x_choices;
  switch (f) {
    case Family::B:
      for (long long k = 1; k <= rank; ++k)
        for (long long n = 0; n <= k; ++n)
          if (k + n <= rank) x_choices.push_back(Chain::b_chain(k, n));
      break;
    case Family::C:
      for (long long n = 1; n <= rank; ++n) {
        x_choices.push_back(Chain::c_even(n));
        x_choices.push_back(Chain::c_odd(n));
      }
      break;
    case Family::D:
      for (long long n = 2; n <= rank; ++n) x_choices.push_back(Chain::d_even(n));
      for (long long n = 2; n <= rank; ++n)
        for (long long k = 2; k <= n; ++k)
          if (n + k <= rank) x_choices.push_back(Chain::d_mixed(n, k));
      break;
    default: break;
  }

  // all A-chains inside the coordinate bound, largest (T+t, T) first, so the
  // recursion can enforce the canonical order and never build a union twice
  std::vector<Chain> segments;
  for (long long T = coord_bound; T >= 1; --T)
    for (long long t = T; t >= 1; t -= 2) segments.push_back(Chain::segment(T, t));
  std::stable_sort(segments.begin(), segments.end(), [](const Chain& a, const Chain& b) {
    if (a.p1 + a.p2 != b.p1 + b.p2) return a.p1 + a.p2 > b.p1 + b.p2;
    return a.p1 > b.p1;
  });

  std::vector<ChainUnion> census;
  for (const Chain& x : x_choices) {
    if (x.rank() > rank || x.max_coord() > coord_bound) continue;
    std::set<long long> used;
    for (long long v : x.coordinates()) used.insert(v);
    std::vector<Chain> picked;
    std::function<void(std::size_t, long long)> rec = [&](std::size_t from, long long left) {
      if (left == 0) {
        std::vector<Chain> parts = picked;
        parts.push_back(x);
        ChainUnion u = ChainUnion::make(f, parts);
        if (u.is_interlaced()) census.push_back(u);
        return;
      }
      for (std::size_t i = from; i < segments.size(); ++i) {
        const Chain& s = segments[i];
        if (s.rank() > left) continue;
        bool clash = false;
        for (long long v : s.coordinates())
          if (used.count(v)) {
            clash = true;
            break;
          }
        if (clash) continue;
        for (long long v : s.coordinates()) used.insert(v);
        picked.push_back(s);
        rec(i + 1, left - s.rank());
        picked.pop_back();
        for (long long v : s.coordinates()) used.erase(v);
      }
    };
    rec(0, rank - x.rank());
  }
  census_sort(census);
  return census;
}

// Reference counts from the recursions:
//   b_2 = 2,        b_{n+1} = 2 b_n - [n even]
//   c_2 = 3,        c_{n+1} = 2 c_n
//   d_3 = 2, d_4 = 5, d_{n+1} = 2 d_n - [n even]   (n >= 4)
inline long long recursion_count(Family f, int rank) {
  switch (f) {
    case Family::B: {
      if (rank < 2) fail(Errc::PreconditionViolation, "b_n starts at rank 2");
      long long b = 2;
      for (int n = 2; n < rank; ++n) b = 2 * b - (n % 2 == 0 ? 1 : 0);
      return b;
    }
    case Family::C: {
      if (rank < 2) fail(Errc::PreconditionViolation, "c_n starts at rank 2");
      long long c = 3;
      for (int n = 2; n < rank; ++n) c = 2 * c;
      return c;
    }
    case Family::D: {
      if (rank < 3) fail(Errc::PreconditionViolation, "d_n starts at rank 3");
      if (rank == 3) return 2;
      long long d = 5;
      for (int n = 4; n < rank; ++n) d = 2 * d - (n % 2 == 0 ? 1 : 0);
      return d;
    }
    case Family::A: break;
  }
  fail(Errc::PreconditionViolation, "counts run over families B, C, D");
}

namespace detail {

// Grows one chain by the coordinate v, where v sits two above the top of one
// of the chain's parity runs.  Returns nothing when the grown shape is not a
// valid chain (the even run of B(n,n) and the odd run of D_mixed(n,n) cannot
// grow, which is what truncates the even-rank counts).
inline std::optional<Chain> try_grow(const Chain& c, long long v) {
  switch (c.kind) {
    case ChainKind::A:
      if (v == c.p1 + 2) return Chain::segment(v, c.p2);
      break;
    case ChainKind::B:
      if (v == 2 * c.p1 + 1) return Chain::b_chain(c.p1 + 1, c.p2);
      if (v == 2 * c.p2 + 2) {
        if (c.p1 < c.p2 + 1) return std::nullopt;
        return Chain::b_chain(c.p1, c.p2 + 1);
      }
      break;
    case ChainKind::CEven:
      if (v == 2 * c.p1 + 2) return Chain::c_even(c.p1 + 1);
      break;
    case ChainKind::COdd:
      if (v == 2 * c.p1 + 1) return Chain::c_odd(c.p1 + 1);
      break;
    case ChainKind::DEven:
      if (v == 2 * c.p1) return Chain::d_even(c.p1 + 1);
      break;
    case ChainKind::DMixed:
      if (v == 2 * c.p1) return Chain::d_mixed(c.p1 + 1, c.p2);
      if (v == 2 * c.p2 + 1) {
        if (c.p1 < c.p2 + 1) return std::nullopt;
        return Chain::d_mixed(c.p1, c.p2 + 1);
      }
      break;
  }
  fail(Errc::PreconditionViolation,
       std::to_string(v) + " does not extend a run of " + c.to_string());
}

}  // namespace detail

// The successors of a scattered representation at the next rank, at most
// two.  With M the largest coordinate of the whole union:
//   - add M+2, growing the run that tops at M;
//   - if M-1 is a coordinate, add M+1, growing the run that tops at M-1;
//     otherwise add the new singleton A-chain {M-1}.
// A growth whose shape is not a chain is dropped, which leaves exactly one
// successor for B(n,n) and D_mixed(n,n).
inline std::vector<ChainUnion> extend_rank(const ChainUnion& u) {
  if (!is_scattered(u)) fail(Errc::NotScattered, "extension is defined on scattered representations");
  std::vector<ChainUnion> out;

  auto rebuild = [&](const Chain& old_part, const Chain& new_part) {
    std::vector<Chain> parts;
    for (const Chain& c : u.chains) parts.push_back(c == old_part ? new_part : c);
    return ChainUnion::make(u.family, parts);
  };
  auto owner = [&](long long v) -> const Chain& {
    for (const Chain& c : u.chains)
      for (long long w : c.coordinates())
        if (w == v) return c;
    fail(Errc::PreconditionViolation, "no chain holds coordinate " + std::to_string(v));
  };

  long long M = 0;
  for (const Chain& c : u.chains) M = std::max(M, c.max_coord());

  if (auto g = detail::try_grow(owner(M), M + 2)) out.push_back(rebuild(owner(M), *g));

  bool below_used = false;
  for (const Chain& c : u.chains)
    for (long long v : c.coordinates())
      if (v == M - 1) below_used = true;
  if (below_used) {
    const Chain& c = owner(M - 1);
    if (auto g = detail::try_grow(c, M + 1)) out.push_back(rebuild(c, *g));
  } else if (M - 1 >= 1) {
    std::vector<Chain> parts = u.chains;
    parts.push_back(Chain::segment(M - 1, M - 1));
    out.push_back(ChainUnion::make(u.family, std::move(parts)));
  }
  for (const ChainUnion& v : out)
    if (!is_scattered(v))
      fail(Errc::NotScattered, "extension produced a non-scattered union from " + u.to_string());
  return out;
}

}  // namespace scatter

#endif
