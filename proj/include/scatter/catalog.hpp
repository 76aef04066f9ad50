#ifndef SCATTER_CATALOG_HPP
#define SCATTER_CATALOG_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scatter/chain.hpp"
#include "scatter/error.hpp"
#include "scatter/weight.hpp"

namespace scatter {

// Unipotent orbit carried by an X-chain, as a partition of 2*rank(+1).
inline std::vector<long long> orbit_label(const Chain& x) {
  switch (x.kind) {
    case ChainKind::B:
      return x.p2 == 0 ? std::vector<long long>{2 * x.p1 + 1}
                       : std::vector<long long>{2 * x.p1 + 1, 2 * x.p2};
    case ChainKind::CEven: return {2 * x.p1};
    case ChainKind::COdd: return {2 * x.p1 - 1, 1};
    case ChainKind::DEven: return {2 * x.p1};
    case ChainKind::DMixed: return {2 * x.p1, 2 * x.p2 - 1, 1};
    case ChainKind::A: fail(Errc::PreconditionViolation, "A-chains carry no orbit");
  }
  return {};
}

// The X-chain attached to an admissible orbit label.  Inadmissible labels
// raise InvalidOrbit; [2n,1,1] in type D is called out specially because that
// parameter is the union A(1,1) + D[2n], not a single chain.
inline Chain unipotent_param(Family f, std::vector<long long> orbit) {
  while (!orbit.empty() && orbit.back() == 0) orbit.pop_back();
  if (orbit.empty() || !std::is_sorted(orbit.rbegin(), orbit.rend()))
    fail(Errc::InvalidOrbit, "orbit labels are partitions");
  switch (f) {
    case Family::B: {
      if (orbit.size() == 1 && orbit[0] % 2 == 1 && orbit[0] >= 3)
        return Chain::b_chain((orbit[0] - 1) / 2, 0);
      if (orbit.size() == 2 && orbit[0] % 2 == 1 && orbit[1] % 2 == 0 && orbit[1] >= 2 &&
          orbit[0] > orbit[1])
        return Chain::b_chain((orbit[0] - 1) / 2, orbit[1] / 2);
      break;
    }
    case Family::C: {
      if (orbit.size() == 1 && orbit[0] % 2 == 0 && orbit[0] >= 2)
        return Chain::c_even(orbit[0] / 2);
      if (orbit.size() == 2 && orbit[1] == 1 && orbit[0] % 2 == 1)
        return Chain::c_odd((orbit[0] + 1) / 2);
      break;
    }
    case Family::D: {
      if (orbit.size() == 1 && orbit[0] % 2 == 0 && orbit[0] >= 4)
        return Chain::d_even(orbit[0] / 2);
      if (orbit.size() == 3 && orbit[1] == 1 && orbit[2] == 1)
        fail(Errc::InvalidOrbit, "[" + std::to_string(orbit[0]) +
                                     ",1,1] labels the union A(1,1)+D[" +
                                     std::to_string(orbit[0]) + "], not a single chain");
      if (orbit.size() == 3 && orbit[2] == 1 && orbit[0] % 2 == 0 && orbit[1] % 2 == 1 &&
          orbit[1] >= 3 && orbit[0] > orbit[1])
        return Chain::d_mixed(orbit[0] / 2, (orbit[1] + 1) / 2);
      break;
    }
    case Family::A: break;
  }
  std::string s;
  for (std::size_t i = 0; i < orbit.size(); ++i) s += (i ? "," : "") + std::to_string(orbit[i]);
  fail(Errc::InvalidOrbit, "no X-chain for orbit [" + s + "] in family " +
                               std::string(1, family_letter(f)));
}

// Spin-relevant part of the X-chain's K-type:
//   B[2k+1,2n]:     k+n-1, k+n-3, ..., k-n+1 each twice, then k-n zeros
//   C[2n]:          all zeros
//   C[2n-1,1]:      (n, 0, ..., 0)
//   D[2n]:          all zeros
//   D[2n,2k-1,1]:   n+k-1, n+k-2, ..., n-k, then n-k zeros
inline Weight theta_O(const Chain& x) {
  std::vector<long long> v;
  switch (x.kind) {
    case ChainKind::B: {
      for (long long val = x.p1 + x.p2 - 1; val >= x.p1 - x.p2 + 1; val -= 2) {
        v.push_back(val);
        v.push_back(val);
      }
      v.resize(static_cast<std::size_t>(x.rank()), 0);
      break;
    }
    case ChainKind::CEven:
    case ChainKind::DEven:
      v.assign(static_cast<std::size_t>(x.rank()), 0);
      break;
    case ChainKind::COdd:
      v.assign(static_cast<std::size_t>(x.rank()), 0);
      v[0] = x.p1;
      break;
    case ChainKind::DMixed: {
      for (long long val = x.p1 + x.p2 - 1; val >= x.p1 - x.p2; --val) v.push_back(val);
      v.resize(static_cast<std::size_t>(x.rank()), 0);
      break;
    }
    case ChainKind::A: fail(Errc::PreconditionViolation, "theta_O is defined for X-chains");
  }
  return int_weight(v);
}

namespace detail {

// A parameter column normalized by the joint sign flip: first entry
// positive, or zero first entry with nonnegative second.
struct Column {
  HalfInt l, r;
  friend bool operator==(const Column&, const Column&) = default;
  friend auto operator<=>(const Column&, const Column&) = default;
};

inline Column normalize_column(HalfInt l, HalfInt r) {
  if (l.twice() < 0 || (l.twice() == 0 && r.twice() < 0)) return {-l, -r};
  return {l, r};
}

inline std::vector<Column> chain_columns(const Chain& c) {
  Weight t = c.top_row(), b = c.bottom_row();
  std::vector<Column> cols(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) cols[i] = normalize_column(t[i], b[i]);
  std::sort(cols.rbegin(), cols.rend());
  return cols;
}

// Remove needle from haystack (both sorted descending); false if impossible.
inline bool erase_subset(std::vector<Column>& haystack, const std::vector<Column>& needle) {
  std::vector<Column> rest;
  std::size_t i = 0;
  for (const Column& c : haystack) {
    if (i < needle.size() && needle[i] == c) {
      ++i;
    } else {
      rest.push_back(c);
    }
  }
  if (i != needle.size()) return false;
  haystack = std::move(rest);
  return true;
}

}  // namespace detail

// Decompose a parameter into a union of chains; nullopt when no union of
// disjoint chains (at most one of them an X-chain) matches the column
// multiset.  Throws InvalidParameter when the two rows have different
// lengths or their difference is not integral.
inline std::optional<ChainUnion> decompose_parameter(Family f, const ZhParam& param) {
  if (f == Family::A) fail(Errc::PreconditionViolation, "decomposition targets families B, C, D");
  if (param.lambda_l.size() != param.lambda_r.size())
    fail(Errc::InvalidParameter, "rows must have equal length");
  if (param.lambda_l.empty()) fail(Errc::InvalidParameter, "empty parameter");
  for (std::size_t i = 0; i < param.lambda_l.size(); ++i)
    if (!((param.lambda_l[i] - param.lambda_r[i]).is_integer()))
      fail(Errc::InvalidParameter, "row difference must be integral");

  std::vector<detail::Column> columns(param.lambda_l.size());
  for (std::size_t i = 0; i < columns.size(); ++i)
    columns[i] = detail::normalize_column(param.lambda_l[i], param.lambda_r[i]);
  std::sort(columns.rbegin(), columns.rend());

  // coordinates are doubled row entries, so the largest one bounds all chains
  long long bound = 1;
  for (const auto& c : columns)
    bound = std::max({bound, c.l.abs().twice(), c.r.abs().twice()});
  const long long n = static_cast<long long>(columns.size());
  std::vector<std::pair<Chain, std::vector<detail::Column>>> candidates;
  auto add = [&](const Chain& c) {
    if (c.rank() <= n && c.max_coord() <= bound) candidates.emplace_back(c, detail::chain_columns(c));
  };
  for (long long T = 1; T <= bound; ++T)
    for (long long t = T % 2 == 0 ? 2 : 1; t <= T; t += 2) add(Chain::segment(T, t));
  switch (f) {
    case Family::B:
      for (long long k = 1; k <= (bound + 1) / 2; ++k)
        for (long long m = 0; m <= k; ++m) add(Chain::b_chain(k, m));
      break;
    case Family::C:
      for (long long m = 1; m <= (bound + 1) / 2; ++m) {
        add(Chain::c_even(m));
        add(Chain::c_odd(m));
      }
      break;
    case Family::D:
      for (long long m = 2; m <= bound / 2 + 1; ++m) {
        add(Chain::d_even(m));
        for (long long k = 2; k <= m; ++k) add(Chain::d_mixed(m, k));
      }
      break;
    default: break;
  }

  std::vector<Chain> picked;
  std::function<bool(std::vector<detail::Column>&, bool)> rec =
      [&](std::vector<detail::Column>& remaining, bool x_used) -> bool {
    if (remaining.empty()) return true;
    const detail::Column anchor = remaining.front();
    for (const auto& [chain, cols] : candidates) {
      if (chain.is_x_chain() && x_used) continue;
      if (std::find(cols.begin(), cols.end(), anchor) == cols.end()) continue;
      if (cols.front() != anchor) continue;  // the anchor is the largest remaining column
      std::vector<detail::Column> rest = remaining;
      if (!detail::erase_subset(rest, cols)) continue;
      picked.push_back(chain);
      if (rec(rest, x_used || chain.is_x_chain())) return true;
      picked.pop_back();
    }
    return false;
  };
  std::vector<detail::Column> remaining = columns;
  if (!rec(remaining, false)) return std::nullopt;
  return ChainUnion::make(f, picked);
}

}  // namespace scatter

#endif
