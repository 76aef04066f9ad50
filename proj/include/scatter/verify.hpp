#ifndef SCATTER_VERIFY_HPP
#define SCATTER_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "scatter/oracle.hpp"
#include "scatter/partition.hpp"
#include "scatter/spin_lkt.hpp"

// Per-representation checks layered on top of the assembly: the exact
// certificate, the hull test, occurrence and cohomology vanishing through the
// multiplicity engine, the witness degree, and the bounded Dirac scan.
namespace scatter {

namespace detail {

inline oracle::IntVec stacked_theta_a(const SpinLKTResult& res) {
  std::vector<long long> v;
  for (const auto& b : res.theta_blocks) v.insert(v.end(), b.begin(), b.end());
  return doubled_ints(v);
}

}  // namespace detail

// Occurrence of the assembled weight in the induced module.
inline long long oracle_occurrence(const ChainUnion& u, const SpinLKTResult& res) {
  return oracle::blattner_multiplicity(levi_shape(u), detail::stacked_theta_a(res),
                                       detail::doubled_ints(res.theta_o),
                                       oracle::to_doubled(res.mu));
}

// The alternating sum must collapse to the degree-zero layer.
inline bool vanishing_check(const ChainUnion& u, const SpinLKTResult& res) {
  oracle::BlattnerResult bd =
      oracle::blattner_breakdown(levi_shape(u), detail::stacked_theta_a(res),
                                 detail::doubled_ints(res.theta_o), oracle::to_doubled(res.mu));
  return bd.total >= 1 && bd.total == bd.h0;
}

struct H0Witness {
  long long k = 0;                 // total correction mass
  SkewTableau filling;             // explicit tableau behind the GL inequality
  bool structural_ok = false;      // filling checks plus the X-block occurrence
  long long occurrence = -1;       // evaluated multiplicity, -1 when skipped
};

// Witness for the occurrence of the corrected type in degree k = sum |nu|.
// The structural half re-derives the two LR positivity statements; the
// numeric half evaluates the constituent multiplicity directly.
inline H0Witness h0_witness(const ChainUnion& u, const SpinLKTResult& res, bool numeric) {
  H0Witness w;
  std::vector<Partition> blocks, nus;
  std::vector<Partition> x_factors;
  {
    Partition top;
    for (long long v : res.theta_o)
      if (v > 0) top.push_back(v);
    if (!top.empty()) x_factors.push_back(top);
  }
  for (std::size_t i = 0; i < res.theta_blocks.size(); ++i) {
    blocks.push_back(res.theta_blocks[i]);
    nus.push_back(res.corrections[i].nu);
    for (long long v : res.corrections[i].nu) w.k += v;
  }
  for (std::size_t i = res.corrections.size(); i-- > 0;)
    if (res.corrections[i].kind != LinkCase::Unlinked) x_factors.push_back(res.corrections[i].nu);

  w.filling = lemma_filling(blocks, nus);
  Partition mu_o;
  for (long long v : res.mu_parts.back())
    if (v != 0) mu_o.push_back(v);
  w.structural_ok = is_reverse_lattice_word(w.filling.row_word()) &&
                    lr_iterated_positive(mu_o, x_factors);

  if (numeric) {
    std::vector<long long> gl;
    for (std::size_t i = 0; i + 1 < res.mu_parts.size(); ++i)
      gl.insert(gl.end(), res.mu_parts[i].begin(), res.mu_parts[i].end());
    const oracle::LeviShape shape = levi_shape(u);
    w.occurrence = oracle::product_constituent(
        shape, oracle::irrep(Family::A, shape.q, detail::stacked_theta_a(res)),
        oracle::irrep(shape.family, shape.r, detail::doubled_ints(res.theta_o)),
        static_cast<int>(w.k), detail::doubled_ints(gl),
        detail::doubled_ints(res.mu_parts.back()));
    if (w.occurrence < 1)
      fail(Errc::WitnessFailed, u.to_string() + ": no constituent at degree " + std::to_string(w.k));
  }
  if (!w.structural_ok)
    fail(Errc::WitnessFailed, u.to_string() + ": witness filling rejected");
  return w;
}

struct DiracScan {
  long long types_seen = 0;     // occurring K-types inspected
  bool inequality_ok = true;    // spin norm >= |2lambda|^2 throughout
  bool minimum_unique = true;   // equality reached only at the assembled weight
};

// Bounded scan over the K-types of the induced module: constituents of
// sigma (x) S^m up to the correction mass (capped), kept when they are
// K-dominant and actually occur.  Each survivor must respect the Dirac
// inequality; the assembled weight must be the only minimizer seen.
inline DiracScan dirac_scan(const ChainUnion& u, const SpinLKTResult& res, long long cap = 3) {
  DiracScan scan;
  const oracle::LeviShape shape = levi_shape(u);
  const oracle::IntVec sig_a = detail::stacked_theta_a(res);
  const oracle::IntVec sig_o = detail::doubled_ints(res.theta_o);
  const Rational bound = norm2(u.two_lambda());
  long long mass = 0;
  for (const NuCorrection& nc : res.corrections)
    for (long long v : nc.nu) mass += v;
  const oracle::IrrepCharacter& ch_a = oracle::irrep(Family::A, shape.q, sig_a);
  const oracle::IrrepCharacter& ch_o = oracle::irrep(shape.family, shape.r, sig_o);
  const long long m_max = std::min(mass, cap);
  for (long long m = 0; m <= m_max; ++m) {
    for (const oracle::ProductConstituent& pc :
         oracle::peel_product(shape, oracle::product_character(shape, ch_a, ch_o,
                                                               static_cast<int>(m)))) {
      oracle::IntVec cand = pc.gl;
      cand.insert(cand.end(), pc.kp.begin(), pc.kp.end());
      Weight mu = oracle::from_doubled(cand);
      if (!is_dominant(u.family, mu) || (!mu.empty() && mu.back() < HalfInt(0))) continue;
      if (oracle::blattner_multiplicity(shape, sig_a, sig_o, cand) < 1) continue;
      ++scan.types_seen;
      const Rational sn = spin_norm_sq(u.family, mu);
      if (sn < bound) scan.inequality_ok = false;
      if (sn == bound && mu != res.mu) scan.minimum_unique = false;
    }
  }
  return scan;
}

struct RepVerification {
  std::string chains;
  long long rank = 0;
  bool eqpar_ok = false;
  bool usmall_ok = false;
  std::optional<long long> occurrence;
  std::optional<bool> vanishing_ok;
  std::optional<long long> witness_k;
  std::optional<bool> witness_ok;
  std::optional<bool> dirac_ok;
  std::optional<bool> dirac_unique;

  bool all_ok() const {
    return eqpar_ok && usmall_ok && (!occurrence || *occurrence >= 1) &&
           (!vanishing_ok || *vanishing_ok) && (!witness_ok || *witness_ok) &&
           (!dirac_ok || *dirac_ok);
  }
};

struct VerifyChecks {
  bool oracle = false;
  bool vanishing = false;
  bool witness = false;
  bool dirac = false;
};

inline RepVerification verify_rep(const ChainUnion& u, const VerifyChecks& checks) {
  RepVerification out;
  out.chains = u.to_string();
  out.rank = u.rank();
  SpinLKTResult res = assemble_spin_lkt(u);
  out.eqpar_ok = res.certificate_ok;
  out.usmall_ok = is_unitarily_small(u.family, res.mu);
  if (checks.oracle) out.occurrence = oracle_occurrence(u, res);
  if (checks.vanishing) out.vanishing_ok = vanishing_check(u, res);
  if (checks.witness) {
    H0Witness w = h0_witness(u, res, true);
    out.witness_k = w.k;
    out.witness_ok = w.structural_ok && w.occurrence >= 1;
  }
  if (checks.dirac) {
    DiracScan scan = dirac_scan(u, res);
    out.dirac_ok = scan.inequality_ok;
    out.dirac_unique = scan.minimum_unique;
  }
  return out;
}

}  // namespace scatter

#endif
