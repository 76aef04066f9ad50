#ifndef SCATTER_ORACLE_HPP
#define SCATTER_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scatter/error.hpp"
#include "scatter/weight.hpp"

// Multiplicity engine on the compact factors U(q), SO(x), Sp(r).  Everything
// here works on doubled integer coordinates so that the half-integral rho of
// the odd orthogonal groups stays exact; a library Weight enters by doubling
// and all multiplicities are plain integers.
namespace scatter::oracle {

using IntVec = std::vector<long long>;

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (long long x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};
using WeightMap = std::unordered_map<IntVec, long long, IntVecHash>;

inline long long dot(const IntVec& a, const IntVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IntVec vec_add(IntVec a, const IntVec& b, long long k = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
  return a;
}

inline long long vec_sum(const IntVec& v) { return std::accumulate(v.begin(), v.end(), 0LL); }

inline IntVec rho_twice(Family f, int n) {
  IntVec r(n);
  for (int i = 0; i < n; ++i) switch (f) {
      case Family::A: r[i] = n - 1 - 2 * i; break;
      case Family::B: r[i] = 2 * (n - i) - 1; break;
      case Family::C: r[i] = 2 * (n - i); break;
      case Family::D: r[i] = 2 * (n - 1 - i); break;
    }
  return r;
}

inline std::vector<IntVec> positive_roots_twice(Family f, int n) {
  std::vector<IntVec> roots;
  auto push = [&](int i, int j, long long si, long long sj) {
    IntVec v(n, 0);
    v[i] = si;
    if (j >= 0) v[j] = sj;
    roots.push_back(v);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      push(i, j, 2, -2);
      if (f != Family::A) push(i, j, 2, 2);
    }
  if (f == Family::B)
    for (int i = 0; i < n; ++i) push(i, -1, 2, 0);
  if (f == Family::C)
    for (int i = 0; i < n; ++i) push(i, -1, 4, 0);
  return roots;
}

// Weight lattice of the group (not its cover): plain integer vectors, so all
// doubled coordinates must be even.
inline void expect_integral(const IntVec& v) {
  for (long long x : v)
    if (x % 2 != 0) fail(Errc::PreconditionViolation, "half-integral weight rejected");
}

inline bool is_dominant_vec(Family f, const IntVec& v) {
  int n = static_cast<int>(v.size());
  for (int i = 0; i + 1 < n; ++i)
    if (v[i] < v[i + 1]) return false;
  switch (f) {
    case Family::A: return true;
    case Family::B:
    case Family::C: return n == 0 || v[n - 1] >= 0;
    case Family::D: return n < 2 || v[n - 2] >= std::llabs(v[n - 1]);
  }
  return false;
}

// Representative of the W-orbit in the dominant chamber (repeated entries
// allowed).  For D an odd number of sign changes is pushed onto the smallest
// absolute coordinate.
inline IntVec orbit_rep(Family f, IntVec v) {
  if (f == Family::A) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  }
  int neg = 0;
  for (long long& x : v)
    if (x < 0) {
      x = -x;
      ++neg;
    }
  std::sort(v.begin(), v.end(), std::greater<>());
  if (f == Family::D && neg % 2 == 1 && !v.empty()) v.back() = -v.back();
  return v;
}

// Moves v to the dominant chamber, returning det of the Weyl element used,
// or 0 when v is singular.
inline int regularize(Family f, IntVec& v) {
  const int n = static_cast<int>(v.size());
  int sign = 1;
  bool flip_last = false;
  if (f != Family::A) {
    int neg = 0;
    for (long long& x : v) {
      if (x < 0) {
        x = -x;
        ++neg;
      } else if (x == 0 && f != Family::D) {
        return 0;
      }
    }
    if (neg % 2 == 1) {
      if (f == Family::D)
        flip_last = true;  // the leftover sign change lands on the smallest coordinate
      else
        sign = -sign;
    }
  }
  for (int i = 0; i < n; ++i) {
    int best = i;
    for (int j = i + 1; j < n; ++j)
      if (v[j] > v[best]) best = j;
    if (best != i) {
      std::swap(v[i], v[best]);
      sign = -sign;
    }
    if (i > 0 && v[i] == v[i - 1]) return 0;
  }
  if (flip_last && n > 0) v.back() = -v.back();
  return sign;
}

// lambda - mu lies in the nonnegative span of the simple roots; with both
// weights dominant this is membership of mu in conv(W lambda).
inline bool in_hull(Family f, const IntVec& lam, const IntVec& mu) {
  const int n = static_cast<int>(lam.size());
  long long s = 0;
  if (f == Family::D) {
    if (n == 1) return lam[0] == mu[0];
    for (int i = 0; i < n - 2; ++i) {
      s += lam[i] - mu[i];
      if (s < 0) return false;
    }
    long long dn1 = lam[n - 2] - mu[n - 2];
    long long dn = lam[n - 1] - mu[n - 1];
    return s + dn1 + dn >= 0 && s + dn1 - dn >= 0;
  }
  for (int i = 0; i < n; ++i) {
    s += lam[i] - mu[i];
    if (i == n - 1 && f == Family::A) return s == 0;
    if (s < 0) return false;
  }
  return true;
}

inline bool in_root_lattice(Family f, const IntVec& d) {
  for (long long x : d)
    if (x % 2 != 0) return false;
  long long s = vec_sum(d);
  switch (f) {
    case Family::A: return s == 0;
    case Family::B: return true;
    case Family::C:
    case Family::D: return s % 4 == 0;
  }
  return false;
}

// Dominant weight multiplicities of one irreducible, by Freudenthal's
// recursion over the dominant weights inside conv(W lambda).
class IrrepCharacter {
 public:
  IrrepCharacter(Family f, int n, IntVec hw) : family_(f), rank_(n), highest_(std::move(hw)) {
    if (static_cast<int>(highest_.size()) != n)
      fail(Errc::PreconditionViolation, "highest weight length mismatch");
    expect_integral(highest_);
    if (!is_dominant_vec(f, highest_))
      fail(Errc::PreconditionViolation, "highest weight is not dominant");
    build();
  }

  Family family() const { return family_; }
  int rank() const { return rank_; }
  const IntVec& highest() const { return highest_; }
  const std::map<IntVec, long long>& dominant_mults() const { return dominant_; }

  long long mult(const IntVec& w) const {
    auto it = dominant_.find(orbit_rep(family_, w));
    return it == dominant_.end() ? 0 : it->second;
  }

  long long dim() const {
    long long d = 0;
    for (const auto& [w, m] : dominant_) d += m * orbit_size(w);
    return d;
  }

  // every weight with multiplicity, expanded over the orbits
  WeightMap full() const {
    WeightMap out;
    for (const auto& [w, m] : dominant_)
      for_each_in_orbit(w, [&](const IntVec& v) { out[v] += m; });
    return out;
  }

  template <typename F>
  void for_each_in_orbit(const IntVec& dom, F&& visit) const {
    std::vector<IntVec> variants;
    if (family_ == Family::A) {
      variants.push_back(dom);
    } else {
      // distinct sign assignments first (grouped by absolute value to avoid
      // duplicates), then distinct rearrangements of each.  For D the flip
      // parity must match the parity of the representative itself, except in
      // the presence of a zero coordinate, which absorbs one flip.
      std::map<long long, int> groups;
      int zeros = 0;
      int base_negs = 0;
      for (long long x : dom) {
        if (x == 0)
          ++zeros;
        else
          groups[std::llabs(x)]++;
        if (x < 0) ++base_negs;
      }
      std::vector<std::pair<long long, int>> gs(groups.begin(), groups.end());
      IntVec cur;
      std::function<void(std::size_t, int)> rec = [&](std::size_t gi, int negs) {
        if (gi == gs.size()) {
          if (family_ == Family::D && zeros == 0 && (negs - base_negs) % 2 != 0) return;
          IntVec v = cur;
          v.insert(v.end(), zeros, 0);
          variants.push_back(std::move(v));
          return;
        }
        auto [val, cnt] = gs[gi];
        for (int t = 0; t <= cnt; ++t) {
          IntVec saved = cur;
          cur.insert(cur.end(), cnt - t, val);
          cur.insert(cur.end(), t, -val);
          rec(gi + 1, negs + t);
          cur = std::move(saved);
        }
      };
      rec(0, 0);
    }
    for (IntVec& v : variants) {
      std::sort(v.begin(), v.end());
      do {
        visit(v);
      } while (std::next_permutation(v.begin(), v.end()));
    }
  }

 private:
  long long orbit_size(const IntVec& dom) const {
    long long c = 0;
    for_each_in_orbit(dom, [&](const IntVec&) { ++c; });
    return c;
  }

  void build() {
    const IntVec rho = rho_twice(family_, rank_);
    const auto roots = positive_roots_twice(family_, rank_);
    std::vector<IntVec> cands;
    IntVec cur(rank_);
    long long top = rank_ == 0 ? 0 : highest_[0];
    std::function<void(int, long long, long long)> rec = [&](int i, long long prev, long long psum) {
      if (i == rank_) {
        if (in_root_lattice(family_, vec_add(highest_, cur, -1)) &&
            in_hull(family_, highest_, cur))
          cands.push_back(cur);
        return;
      }
      long long hi = std::min(prev, top);
      long long lo;
      switch (family_) {
        case Family::A: lo = highest_[rank_ - 1]; break;
        case Family::B:
        case Family::C: lo = 0; break;
        case Family::D: lo = i == rank_ - 1 ? -prev : 0; break;
      }
      for (long long v = hi; v >= lo; v -= 2) {
        // partial sums of lambda - mu stay nonnegative on every prefix
        if (i < rank_ - 1 && family_ != Family::D) {
          long long need = psum + v;
          long long have = 0;
          for (int j = 0; j <= i; ++j) have += highest_[j];
          if (need > have) continue;
        }
        cur[i] = v;
        rec(i + 1, v, psum + v);
      }
    };
    if (rank_ == 0) {
      dominant_[IntVec{}] = 1;
      return;
    }
    // weights of an integral representation share the parity lattice of the
    // highest weight, stepping by 2 in doubled coordinates
    rec(0, top, 0);

    std::sort(cands.begin(), cands.end(), [&](const IntVec& a, const IntVec& b) {
      return dot(vec_add(a, rho), vec_add(a, rho)) > dot(vec_add(b, rho), vec_add(b, rho));
    });
    const long long top_norm = dot(vec_add(highest_, rho), vec_add(highest_, rho));
    for (const IntVec& mu : cands) {
      if (mu == highest_) {
        dominant_[mu] = 1;
        continue;
      }
      long long numer = 0;
      const long long hw_norm = dot(highest_, highest_);
      for (const IntVec& a : roots) {
        // |mu + k a| increases with k (mu dominant, a positive), and every
        // weight of the module satisfies |w| <= |highest|
        for (long long k = 1;; ++k) {
          IntVec w = vec_add(mu, a, k);
          if (dot(w, w) > hw_norm) break;
          auto it = dominant_.find(orbit_rep(family_, w));
          if (it != dominant_.end()) numer += it->second * dot(w, a);
        }
      }
      long long denom = top_norm - dot(vec_add(mu, rho), vec_add(mu, rho));
      if (denom <= 0) fail(Errc::InternalError, "Freudenthal denominator not positive");
      if ((2 * numer) % denom != 0) fail(Errc::InternalError, "Freudenthal division not exact");
      long long m = 2 * numer / denom;
      if (m > 0) dominant_[mu] = m;
    }
  }

  Family family_;
  int rank_;
  IntVec highest_;
  std::map<IntVec, long long> dominant_;
};

// shared character cache; queries after construction are read-only
inline const IrrepCharacter& irrep(Family f, int n, const IntVec& hw) {
  static std::map<std::tuple<int, int, IntVec>, IrrepCharacter> cache;
  auto key = std::make_tuple(static_cast<int>(f), n, hw);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, IrrepCharacter(f, n, hw)).first;
  return it->second;
}

inline long long weyl_dim(Family f, int n, const IntVec& hw) {
  expect_integral(hw);
  const IntVec rho = rho_twice(f, n);
  const IntVec lr = vec_add(hw, rho);
  auto gcd128 = [](__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  __int128 num = 1, den = 1;
  for (const IntVec& a : positive_roots_twice(f, n)) {
    num *= dot(lr, a);
    den *= dot(rho, a);
    __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  if (den == 0 || num % den != 0) fail(Errc::InternalError, "Weyl dimension not integral");
  return static_cast<long long>(num / den);
}

// Klimyk tensor decomposition: each weight of the second factor shifts
// a + rho, singular points drop, the rest regularize with their sign.
inline std::map<IntVec, long long> tensor_decompose(Family f, int n, const IntVec& a,
                                                    const IntVec& b) {
  const IntVec* hi = &a;
  const IntVec* lo = &b;
  if (weyl_dim(f, n, a) < weyl_dim(f, n, b)) std::swap(hi, lo);
  const IntVec rho = rho_twice(f, n);
  std::map<IntVec, long long> out;
  const IrrepCharacter& small = irrep(f, n, *lo);
  for (const auto& [w, m] : small.full()) {
    IntVec t = vec_add(vec_add(*hi, rho), w);
    int s = regularize(f, t);
    if (s == 0) continue;
    out[vec_add(t, rho, -1)] += s * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else if (it->second < 0)
      fail(Errc::InternalError, "negative tensor multiplicity");
    else
      ++it;
  }
  return out;
}

inline long long tensor_multiplicity(Family f, int n, const IntVec& a, const IntVec& b,
                                     const IntVec& c) {
  auto dec = tensor_decompose(f, n, a, b);
  auto it = dec.find(c);
  return it == dec.end() ? 0 : it->second;
}

// M cap K = U(q) x K', the compact Levi factor the induction goes through.
struct LeviShape {
  Family family = Family::C;  // family of K and of K'
  int q = 0;                  // total rank of the GL factor
  int r = 1;                  // rank of K'

  LeviShape(Family f, int q_, int r_) : family(f), q(q_), r(r_) {
    if (f == Family::A) fail(Errc::PreconditionViolation, "the ambient family is B, C, or D");
    if (q < 0 || r < 1 || (f == Family::D && r < 2))
      fail(Errc::PreconditionViolation, "degenerate Levi shape");
  }

  int ambient_rank() const { return q + r; }
  // dimension of the standard representation of K'
  int x() const { return family == Family::B ? 2 * r + 1 : 2 * r; }

  friend bool operator<(const LeviShape& a, const LeviShape& b) {
    return std::tie(a.family, a.q, a.r) < std::tie(b.family, b.q, b.r);
  }
};

// Weights of n cap k as U(q) x K'-module, doubled, GL block first:
// (std x std') plus Lambda^2 std (B, D) or Sym^2 std (C) on the GL factor.
inline std::vector<IntVec> nk_weights(const LeviShape& sh) {
  std::vector<IntVec> out;
  auto blank = [&] { return IntVec(sh.q + sh.r, 0); };
  std::vector<IntVec> std_kp;
  for (int j = 0; j < sh.r; ++j) {
    IntVec v(sh.r, 0);
    v[j] = 2;
    std_kp.push_back(v);
    v[j] = -2;
    std_kp.push_back(v);
  }
  if (sh.family == Family::B) std_kp.push_back(IntVec(sh.r, 0));
  for (int i = 0; i < sh.q; ++i)
    for (const IntVec& d : std_kp) {
      IntVec v = blank();
      v[i] = 2;
      std::copy(d.begin(), d.end(), v.begin() + sh.q);
      out.push_back(v);
    }
  for (int i = 0; i < sh.q; ++i)
    for (int j = sh.family == Family::C ? i : i + 1; j < sh.q; ++j) {
      IntVec v = blank();
      v[i] += 2;
      v[j] += 2;
      out.push_back(v);
    }
  return out;
}

// S^0..S^m of n cap k, cached per shape.  The degree-d map is the unbounded
// multiset sum over the weights above.
inline const WeightMap& sym_power_nk(const LeviShape& sh, int m) {
  static std::map<LeviShape, std::vector<WeightMap>> cache;
  auto& layers = cache[sh];
  if (static_cast<int>(layers.size()) <= m) {
    layers.assign(m + 1, WeightMap{});
    layers[0][IntVec(sh.q + sh.r, 0)] = 1;
    for (const IntVec& w : nk_weights(sh))
      for (int d = 1; d <= m; ++d)
        for (const auto& [v, c] : layers[d - 1]) layers[d][vec_add(v, w)] += c;
  }
  return layers[m];
}

namespace detail {

// visit(perm, flip, det) over the Weyl group of one factor
template <typename F>
void for_each_weyl(Family f, int n, F&& visit) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> flip(n, 1);
  do {
    int psign = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) psign = -psign;
    if (f == Family::A) {
      visit(perm, flip, psign);
      continue;
    }
    for (int mask = 0; mask < (1 << n); ++mask) {
      int bits = __builtin_popcount(static_cast<unsigned>(mask));
      if (f == Family::D && bits % 2 == 1) continue;
      for (int i = 0; i < n; ++i) flip[i] = (mask >> i) & 1 ? -1 : 1;
      visit(perm, flip, f == Family::D ? psign : (bits % 2 == 1 ? -psign : psign));
    }
    std::fill(flip.begin(), flip.end(), 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// signed extraction of the irrep beta from the character shifted by -g:
// sum over W of det(w) char(w(beta + rho) - rho - g)
inline long long factor_extract(const IrrepCharacter& ch, const IntVec& rho, const IntVec& beta,
                                const IntVec& g) {
  if (ch.rank() == 0) return 1;
  const IntVec br = vec_add(beta, rho);
  long long total = 0;
  for_each_weyl(ch.family(), ch.rank(), [&](const std::vector<int>& perm,
                                            const std::vector<int>& flip, int det) {
    IntVec v(br.size());
    for (std::size_t i = 0; i < br.size(); ++i) v[i] = flip[i] * br[perm[i]];
    total += det * ch.mult(vec_add(vec_add(v, rho, -1), g, -1));
  });
  return total;
}

}  // namespace detail

// multiplicity of V_betaA x V_betaO inside sigma tensor S^m(n cap k)
inline long long product_constituent(const LeviShape& sh, const IrrepCharacter& sigma_a,
                                     const IrrepCharacter& sigma_o, int m, const IntVec& beta_a,
                                     const IntVec& beta_o, bool positivity_shortcut = true) {
  if (positivity_shortcut)
    for (long long x : beta_a)
      if (x < 0) return 0;  // every GL weight of sigma tensor S^m is nonnegative
  const IntVec rho_a = rho_twice(Family::A, sh.q);
  const IntVec rho_o = rho_twice(sh.family, sh.r);
  const WeightMap& sm = sym_power_nk(sh, m);
  std::map<IntVec, long long> a_part, o_part;
  for (const auto& [w, c] : sm) {
    (void)c;
    a_part.emplace(IntVec(w.begin(), w.begin() + sh.q), 0);
    o_part.emplace(IntVec(w.begin() + sh.q, w.end()), 0);
  }
  for (auto& [g, val] : a_part) val = detail::factor_extract(sigma_a, rho_a, beta_a, g);
  for (auto& [g, val] : o_part) val = detail::factor_extract(sigma_o, rho_o, beta_o, g);
  long long total = 0;
  for (const auto& [w, c] : sm) {
    long long av = a_part[IntVec(w.begin(), w.begin() + sh.q)];
    if (av == 0) continue;
    total += c * av * o_part[IntVec(w.begin() + sh.q, w.end())];
  }
  return total;
}

// One Blattner evaluation, kept layer by layer so the vanishing of the
// higher cohomology can be inspected.  by_length[l] is the plain (unsigned)
// sum of constituent multiplicities at coset length l; the total applies
// (-1)^l.  The m-sum stops at |beta_1| - |theta_A|, the GL degree that the
// summands of n cap k can still reach.
struct BlattnerResult {
  long long total = 0;
  long long h0 = 0;
  std::map<int, long long> by_length;
  int max_degree = 0;
};

inline BlattnerResult blattner_breakdown(const LeviShape& sh, const IntVec& theta_a,
                                         const IntVec& theta_o, const IntVec& mu,
                                         bool signed_enumeration = false) {
  const int n = sh.ambient_rank();
  if (static_cast<int>(mu.size()) != n)
    fail(Errc::PreconditionViolation, "K-type rank mismatch");
  expect_integral(mu);
  if (!is_dominant_vec(sh.family, mu) || (n > 0 && mu[n - 1] < 0))
    fail(Errc::PreconditionViolation, "K-type is not dominant");
  const IrrepCharacter& sigma_a = irrep(Family::A, sh.q, theta_a);
  const IrrepCharacter& sigma_o = irrep(sh.family, sh.r, theta_o);
  const IntVec rho_k = rho_twice(sh.family, n);
  const IntVec mu_rho = vec_add(mu, rho_k);

  BlattnerResult res;
  std::vector<int> subset(sh.q);
  std::iota(subset.begin(), subset.end(), 0);
  auto advance = [&]() -> bool {
    int i = sh.q - 1;
    while (i >= 0 && subset[i] == n - sh.q + i) --i;
    if (i < 0) return false;
    ++subset[i];
    for (int j = i + 1; j < sh.q; ++j) subset[j] = subset[j - 1] + 1;
    return true;
  };

  do {
    std::vector<char> chosen(n, 0);
    for (int s : subset) chosen[s] = 1;
    int len = 0;
    for (int j = 0; j < sh.q; ++j) len += subset[j] - j;

    std::vector<IntVec> sign_patterns{IntVec(sh.q, 1)};
    if (signed_enumeration) {
      sign_patterns.clear();
      bool has_zero = false;
      for (int i = 0; i < n; ++i)
        if (mu_rho[i] == 0) has_zero = true;
      for (int mask = 0; mask < (1 << sh.q); ++mask) {
        IntVec eps(sh.q, 1);
        bool skip = false;
        int minus = 0;
        for (int j = 0; j < sh.q; ++j)
          if ((mask >> j) & 1) {
            if (mu_rho[subset[j]] == 0) skip = true;  // flipping a zero repeats the element
            eps[j] = -1;
            ++minus;
          }
        if (skip) continue;
        if (sh.family == Family::D && minus % 2 == 1 && !has_zero) continue;
        sign_patterns.push_back(std::move(eps));
      }
    }

    for (const IntVec& eps : sign_patterns) {
      // descending rearrangement of the signed chosen block
      std::vector<long long> gl;
      for (int j = 0; j < sh.q; ++j) gl.push_back(eps[j] * mu_rho[subset[j]]);
      int sign = len % 2 == 0 ? 1 : -1;
      int minus = 0;
      for (int v : eps)
        if (v < 0) ++minus;
      if (sh.family != Family::D && minus % 2 == 1) sign = -sign;
      for (std::size_t i = 0; i < gl.size(); ++i)
        for (std::size_t j = i + 1; j < gl.size(); ++j)
          if (gl[i] < gl[j]) sign = -sign;
      std::sort(gl.begin(), gl.end(), std::greater<>());

      IntVec beta_a(sh.q), beta_o(sh.r);
      for (int j = 0; j < sh.q; ++j) beta_a[j] = gl[j] - rho_k[j];
      int at = 0;
      for (int i = 0; i < n; ++i)
        if (!chosen[i]) {
          beta_o[at] = mu_rho[i] - rho_k[sh.q + at];
          ++at;
        }

      long long degree_cap = (vec_sum(beta_a) - vec_sum(theta_a)) / 2;
      if (degree_cap < 0) continue;
      for (int m = 0; m <= degree_cap; ++m) {
        long long c = product_constituent(sh, sigma_a, sigma_o, m, beta_a, beta_o,
                                          !signed_enumeration);
        if (c == 0) continue;
        res.max_degree = std::max(res.max_degree, m);
        res.by_length[len] += c;
        res.total += sign * c;
        if (len == 0 && minus == 0) res.h0 += c;
      }
    }
  } while (advance());
  return res;
}

inline long long blattner_multiplicity(const LeviShape& sh, const IntVec& theta_a,
                                       const IntVec& theta_o, const IntVec& mu) {
  return blattner_breakdown(sh, theta_a, theta_o, mu).total;
}

// Full decomposition of an honest product-group character by repeated
// extraction of the lexicographically largest weight.
struct ProductConstituent {
  IntVec gl;
  IntVec kp;
  long long mult = 0;
};

inline WeightMap product_character(const LeviShape& sh, const IrrepCharacter& sigma_a,
                                   const IrrepCharacter& sigma_o, int m) {
  WeightMap out;
  const WeightMap sm = sym_power_nk(sh, m);
  const WeightMap fa = sigma_a.full();
  const WeightMap fo = sigma_o.full();
  for (const auto& [w, c] : sm)
    for (const auto& [a, ca] : fa)
      for (const auto& [o, co] : fo) {
        IntVec v(sh.q + sh.r);
        for (int i = 0; i < sh.q; ++i) v[i] = w[i] + a[i];
        for (int i = 0; i < sh.r; ++i) v[sh.q + i] = w[sh.q + i] + o[i];
        out[std::move(v)] += c * ca * co;
      }
  return out;
}

inline std::vector<ProductConstituent> peel_product(const LeviShape& sh, WeightMap character) {
  std::vector<ProductConstituent> out;
  for (;;) {
    const IntVec* best = nullptr;
    long long best_mult = 0;
    for (const auto& [v, c] : character) {
      if (c == 0) continue;
      if (c < 0) fail(Errc::InternalError, "peeling hit a negative multiplicity");
      if (!best || v > *best) {
        best = &v;
        best_mult = c;
      }
    }
    if (!best) break;
    IntVec gl(best->begin(), best->begin() + sh.q);
    IntVec kp(best->begin() + sh.q, best->end());
    if (!is_dominant_vec(Family::A, gl) || !is_dominant_vec(sh.family, kp))
      fail(Errc::InternalError, "lex-maximal weight is not dominant");
    const IrrepCharacter& ca = irrep(Family::A, sh.q, gl);
    const IrrepCharacter& co = irrep(sh.family, sh.r, kp);
    for (const auto& [a, ma] : ca.full())
      for (const auto& [o, mo] : co.full()) {
        IntVec v = a;
        v.insert(v.end(), o.begin(), o.end());
        character[v] -= best_mult * ma * mo;
      }
    out.push_back({std::move(gl), std::move(kp), best_mult});
  }
  return out;
}

// doubled-coordinate adapters for the library's Weight type
inline IntVec to_doubled(const Weight& w) {
  IntVec v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i].twice();
  return v;
}

inline Weight from_doubled(const IntVec& v) {
  Weight w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = HalfInt::from_twice(v[i]);
  return w;
}

inline WeightMap irrep_weights(Family f, int n, const Weight& hw) {
  return irrep(f, n, to_doubled(hw)).full();
}

}  // namespace scatter::oracle

#endif
