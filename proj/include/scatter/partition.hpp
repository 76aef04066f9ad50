#ifndef SCATTER_PARTITION_HPP
#define SCATTER_PARTITION_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "scatter/error.hpp"

namespace scatter {

// Partitions are weakly decreasing vectors of nonnegative integers; trailing
// zeros are legal everywhere and stripped for comparisons.
using Partition = std::vector<long long>;

inline Partition trimmed(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline bool same_partition(const Partition& a, const Partition& b) {
  return trimmed(a) == trimmed(b);
}

inline bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) return false;
  return p.empty() || p.back() >= 0;
}

inline long long partition_sum(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0LL);
}

// Cellwise containment inner <= outer.
inline bool contains(const Partition& outer, const Partition& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == 0) continue;
    if (i >= outer.size() || outer[i] < inner[i]) return false;
  }
  return true;
}

// Transpose: beta_i = #{j : alpha_j >= i}.
inline Partition transpose(const Partition& p) {
  if (!is_partition(p)) fail(Errc::PreconditionViolation, "transpose needs a partition");
  Partition q = trimmed(p);
  if (q.empty()) return {};
  Partition t(static_cast<std::size_t>(q[0]), 0);
  for (long long part : q)
    for (long long i = 0; i < part; ++i) ++t[static_cast<std::size_t>(i)];
  return t;
}

// Reverse lattice word: reading the word right to left, every prefix of that
// reading has at least as many k's as (k+1)'s, for all k.
inline bool is_reverse_lattice_word(const std::vector<int>& word) {
  int maxletter = 0;
  for (int x : word) {
    if (x < 1) fail(Errc::PreconditionViolation, "letters must be positive");
    maxletter = std::max(maxletter, x);
  }
  std::vector<long long> count(static_cast<std::size_t>(maxletter) + 2, 0);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    ++count[static_cast<std::size_t>(*it)];
    if (*it > 1 && count[static_cast<std::size_t>(*it)] > count[static_cast<std::size_t>(*it) - 1]) return false;
  }
  return true;
}

// Littlewood-Richardson coefficient c^{lam}_{mu,nu}: the number of LR skew
// tableaux of shape lam/mu and weight nu.  Cells are filled in the order of
// the right-to-left reading (top row first, each row right to left), which
// lets the lattice condition be enforced as a running prefix bound.
inline long long lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lam) {
  if (!is_partition(mu) || !is_partition(nu) || !is_partition(lam))
    fail(Errc::PreconditionViolation, "lr_coefficient needs partitions");
  Partition m = trimmed(mu), n = trimmed(nu), l = trimmed(lam);
  if (partition_sum(m) + partition_sum(n) != partition_sum(l)) return 0;
  if (!contains(l, m)) return 0;
  if (n.empty()) return 1;
  const std::size_t rows = l.size();
  const std::size_t letters = n.size();
  auto inner_at = [&](std::size_t r) -> long long { return r < m.size() ? m[r] : 0; };

  // cells in reading order (row, col), cols descending within a row
  struct Cell { std::size_t row; long long col; };
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < rows; ++r)
    for (long long c = l[r] - 1; c >= inner_at(r); --c) cells.push_back({r, c});

  // filling[r] holds entries of row r indexed by column
  std::vector<std::vector<int>> grid(rows);
  for (std::size_t r = 0; r < rows; ++r) grid[r].assign(static_cast<std::size_t>(l[r]), 0);
  std::vector<long long> used(letters + 1, 0);

  long long total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    int hi = static_cast<int>(letters);
    // column strictness against the cell above (always already filled, or inner)
    if (r > 0 && c < l[r - 1] && c >= inner_at(r - 1)) lo = std::max(lo, grid[r - 1][static_cast<std::size_t>(c)] + 1);
    // row weak increase against the right neighbour (filled earlier)
    if (c + 1 < l[r]) hi = std::min(hi, grid[r][static_cast<std::size_t>(c) + 1]);
    for (int e = lo; e <= hi; ++e) {
      if (used[static_cast<std::size_t>(e)] >= n[static_cast<std::size_t>(e) - 1]) continue;
      // lattice: in the reading prefix, count(e) may not exceed count(e-1)
      if (e > 1 && used[static_cast<std::size_t>(e)] + 1 > used[static_cast<std::size_t>(e) - 1]) continue;
      grid[r][static_cast<std::size_t>(c)] = e;
      ++used[static_cast<std::size_t>(e)];
      rec(idx + 1);
      --used[static_cast<std::size_t>(e)];
      grid[r][static_cast<std::size_t>(c)] = 0;
    }
  };
  rec(0);
  return total;
}

// All partitions t with k <= t <= bound cellwise and |t| = |k| + add,
// visited in lexicographic order.  Helper for the iterated LR search.
inline void expand_within(const Partition& k, const Partition& bound, long long add,
                          const std::function<void(const Partition&)>& visit) {
  Partition t(bound.size(), 0);
  std::function<void(std::size_t, long long)> rec = [&](std::size_t row, long long left) {
    if (row == bound.size()) {
      if (left == 0) visit(trimmed(t));
      return;
    }
    long long lo = row < k.size() ? k[row] : 0;
    long long hi = bound[row];
    if (row > 0) hi = std::min(hi, t[row - 1]);
    for (long long v = hi; v >= lo; --v) {
      if (v - lo > left) continue;
      t[row] = v;
      rec(row + 1, left - (v - lo));
    }
    t[row] = 0;
  };
  rec(0, add);
}

// Iterated LR occurrence: whether theta appears in the product of the Schur
// functions of chi_1, ..., chi_l.  Reachability over intermediate partitions
// bounded cellwise by theta.
inline bool lr_iterated_positive(const Partition& theta, const std::vector<Partition>& chis) {
  Partition target = trimmed(theta);
  std::vector<Partition> layer = {{}};
  long long mass = 0;
  for (std::size_t i = 0; i < chis.size(); ++i) {
    mass += partition_sum(chis[i]);
    std::vector<Partition> next;
    for (const Partition& k : layer) {
      expand_within(k, target, partition_sum(chis[i]), [&](const Partition& t) {
        if (lr_coefficient(k, chis[i], t) > 0) next.push_back(t);
      });
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer = std::move(next);
    if (layer.empty()) return false;
  }
  if (mass != partition_sum(target)) return false;
  return std::find(layer.begin(), layer.end(), target) != layer.end();
}

// Skew semistandard tableau on the stacked shape outer/inner; rows[r] lists
// the entries of row r left to right (only rows with cells appear nonempty).
struct SkewTableau {
  Partition outer;
  Partition inner;
  std::vector<std::vector<int>> rows;

  bool is_semistandard() const {
    if (!is_partition(outer) || !is_partition(inner)) return false;
    if (!contains(outer, inner)) return false;
    if (rows.size() != outer.size()) return false;
    auto inner_at = [&](std::size_t r) -> long long { return r < inner.size() ? inner[r] : 0; };
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<long long>(rows[r].size()) != outer[r] - inner_at(r)) return false;
      for (std::size_t j = 0; j + 1 < rows[r].size(); ++j)
        if (rows[r][j] > rows[r][j + 1]) return false;
      if (r == 0) continue;
      // columns shared with the row above must increase strictly
      for (long long c = inner_at(r); c < outer[r]; ++c) {
        if (c < inner_at(r - 1) || c >= outer[r - 1]) continue;
        int above = rows[r - 1][static_cast<std::size_t>(c - inner_at(r - 1))];
        int here = rows[r][static_cast<std::size_t>(c - inner_at(r))];
        if (above >= here) return false;
      }
    }
    return true;
  }

  // Row word: rows bottom to top, each left to right.
  std::vector<int> row_word() const {
    std::vector<int> w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
      for (int e : *it) w.push_back(e);
    return w;
  }

  Partition weight() const {
    Partition wt;
    for (const auto& row : rows)
      for (int e : row) {
        if (static_cast<std::size_t>(e) > wt.size()) wt.resize(static_cast<std::size_t>(e), 0);
        ++wt[static_cast<std::size_t>(e) - 1];
      }
    return wt;
  }
};

// The explicit LR filling certifying c^{(theta+nu stacked)}_{(theta stacked), sort(nus)} >= 1.
//
// theta_blocks[i] is chain i's block of the stacked inner shape; nus[i] its
// addition (empty when unlinked).  Writing i_1 < ... < i_j for the indices
// with nonempty nu, let shape_t be the decreasing sort of the rows of
// nu_{i_1}, ..., nu_{i_t} and T_t the tableau on shape_t whose row k is all
// k's.  Block i_t receives the entries of the columns of T_t / T_{t-1}:
// its row k collects the k-th-from-top entry of every column with at least k
// cells, sorted increasingly.
inline SkewTableau lemma_filling(const std::vector<Partition>& theta_blocks,
                                 const std::vector<Partition>& nus) {
  if (theta_blocks.size() != nus.size())
    fail(Errc::InvalidShape, "one overlap list per block required");
  SkewTableau t;
  for (std::size_t i = 0; i < theta_blocks.size(); ++i) {
    const Partition& th = theta_blocks[i];
    const Partition& nu = nus[i];
    if (!is_partition(th) || !is_partition(nu))
      fail(Errc::InvalidShape, "blocks must be partitions");
    if (nu.size() > th.size() && !(th.empty() && nu.empty()))
      fail(Errc::InvalidShape, "overlap longer than its block");
    for (std::size_t r = 0; r < th.size(); ++r) {
      long long add = r < nu.size() ? nu[r] : 0;
      t.inner.push_back(th[r]);
      t.outer.push_back(th[r] + add);
    }
  }
  if (!is_partition(t.outer) || !is_partition(t.inner) || !contains(t.outer, t.inner))
    fail(Errc::InvalidShape, "stacked blocks do not form a skew shape");

  Partition shape_prev;
  std::vector<std::vector<int>> blocks(theta_blocks.size());
  std::vector<Partition> accum;
  for (std::size_t i = 0; i < nus.size(); ++i) {
    if (trimmed(nus[i]).empty()) continue;
    for (long long part : trimmed(nus[i])) accum.push_back({part});
    Partition shape_cur;
    for (const auto& row : accum) shape_cur.push_back(row[0]);
    std::sort(shape_cur.begin(), shape_cur.end(), std::greater<long long>());
    // columns of T_t / T_{t-1}: in column c the entries are the row indices
    // (1-based) r with shape_prev^t[c] < r <= shape_cur^t[c]
    Partition tp = transpose(shape_prev), tc = transpose(shape_cur);
    std::vector<std::vector<int>> cols(tc.size());
    for (std::size_t c = 0; c < tc.size(); ++c) {
      long long from = c < tp.size() ? tp[c] : 0;
      for (long long r = from + 1; r <= tc[c]; ++r) cols[c].push_back(static_cast<int>(r));
    }
    const Partition nu = trimmed(nus[i]);
    for (std::size_t k = 0; k < nu.size(); ++k) {
      std::vector<int> row;
      for (const auto& col : cols)
        if (col.size() > k) row.push_back(col[k]);
      std::sort(row.begin(), row.end());
      if (static_cast<long long>(row.size()) != nu[k])
        fail(Errc::InvalidShape, "column depths incompatible with the overlap rows");
      for (int e : row) blocks[i].push_back(e);
    }
    shape_prev = shape_cur;
  }

  // distribute the per-block fillings onto the stacked rows
  std::size_t global_row = 0;
  t.rows.assign(t.outer.size(), {});
  for (std::size_t i = 0; i < theta_blocks.size(); ++i) {
    const Partition& th = theta_blocks[i];
    const Partition nu = trimmed(nus[i]);
    std::size_t taken = 0;
    for (std::size_t r = 0; r < th.size(); ++r, ++global_row) {
      long long len = r < nu.size() ? nu[r] : 0;
      for (long long j = 0; j < len; ++j) t.rows[global_row].push_back(blocks[i][taken++]);
    }
  }
  if (!t.is_semistandard()) fail(Errc::InvalidShape, "constructed filling is not semistandard");
  return t;
}

// Staircase transpose identity: with l = (m, m-1, ..., 1) and p strict,
// the decreasing sort of l - p equals l - transpose(p).
inline bool eqpt_check(long long m, const Partition& p) {
  if (m < 1) fail(Errc::PreconditionViolation, "m must be positive");
  Partition q = trimmed(p);
  if (!is_partition(q)) fail(Errc::PreconditionViolation, "p must be a partition");
  for (std::size_t i = 0; i + 1 < q.size(); ++i)
    if (q[i] == q[i + 1]) fail(Errc::PreconditionViolation, "positive parts of p must be distinct");
  if (!q.empty() && q[0] > m) fail(Errc::PreconditionViolation, "p_1 must be at most m");
  if (static_cast<long long>(q.size()) > m) fail(Errc::PreconditionViolation, "p has more than m parts");

  Partition lhs(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i)
    lhs[static_cast<std::size_t>(i)] = m - i - (static_cast<std::size_t>(i) < q.size() ? q[static_cast<std::size_t>(i)] : 0);
  std::sort(lhs.begin(), lhs.end(), std::greater<long long>());

  Partition pt = transpose(q);
  Partition rhs(static_cast<std::size_t>(m));
  for (long long j = 0; j < m; ++j)
    rhs[static_cast<std::size_t>(j)] = m - j - (static_cast<std::size_t>(j) < pt.size() ? pt[static_cast<std::size_t>(j)] : 0);

  // Independent cross-check on the skew staircase l/p: the sorted row sizes
  // must agree with the column sizes (the staircase is self-conjugate, so
  // the column sizes are exactly l - p^t).
  Partition rowsizes = lhs;
  Partition colsizes(static_cast<std::size_t>(m), 0);
  for (long long i = 0; i < m; ++i) {
    long long from = static_cast<std::size_t>(i) < q.size() ? q[static_cast<std::size_t>(i)] : 0;
    for (long long c = from; c < m - i; ++c) ++colsizes[static_cast<std::size_t>(c)];
  }
  std::sort(colsizes.begin(), colsizes.end(), std::greater<long long>());
  Partition rowcheck = rowsizes;
  if (rowcheck != colsizes) return false;

  return lhs == rhs;
}

inline std::string partition_to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

inline Partition parse_partition(const std::string& text) {
  Partition p;
  if (text.empty()) return p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) fail(Errc::ParseError, "empty partition entry");
    std::size_t e = tok.find_last_not_of(" \t");
    tok = tok.substr(b, e - b + 1);
    for (char ch : tok)
      if (ch < '0' || ch > '9') fail(Errc::ParseError, "partition entries are nonnegative integers");
    p.push_back(std::strtoll(tok.c_str(), nullptr, 10));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (!is_partition(p)) fail(Errc::ParseError, "entries must be weakly decreasing");
  return p;
}

}  // namespace scatter

#endif
