#ifndef SCATTER_RECORD_HPP
#define SCATTER_RECORD_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "scatter/spin_lkt.hpp"
#include "scatter/verify.hpp"

// Machine-readable views of a representation.  Weights that are integral
// serialize as integer arrays; parameter rows keep fraction strings so that
// half-integral entries survive a round trip unchanged.
namespace scatter {

using ordered_json = nlohmann::ordered_json;

inline ordered_json weight_json(const Weight& w) {
  ordered_json arr = ordered_json::array();
  for (const HalfInt& h : w) {
    if (h.is_integer())
      arr.push_back(h.to_int());
    else
      arr.push_back(h.to_string());
  }
  return arr;
}

inline Weight weight_from_json(const ordered_json& arr) {
  Weight w;
  for (const auto& v : arr) {
    if (v.is_string())
      w.push_back(HalfInt::parse(v.template get<std::string>()));
    else
      w.push_back(HalfInt(v.template get<long long>()));
  }
  return w;
}

inline ordered_json param_json(const ZhParam& p) {
  ordered_json j;
  ordered_json l = ordered_json::array(), r = ordered_json::array();
  for (const HalfInt& h : p.lambda_l) l.push_back(h.to_string());
  for (const HalfInt& h : p.lambda_r) r.push_back(h.to_string());
  j["lambda_l"] = l;
  j["lambda_r"] = r;
  return j;
}

struct RepRecord {
  Family family = Family::B;
  long long rank = 0;
  std::string chains;
  Weight two_lambda;
  Weight lkt;
  Weight spin_lkt;
  bool unitarily_small = false;
  bool certificate_ok = false;
  long long oracle_occurrence = -1;  // negative means not evaluated

  ordered_json to_json() const {
    ordered_json j;
    j["family"] = std::string(1, family_letter(family));
    j["rank"] = rank;
    j["chains"] = chains;
    j["two_lambda"] = weight_json(two_lambda);
    j["lkt"] = weight_json(lkt);
    j["spin_lkt"] = weight_json(spin_lkt);
    j["unitarily_small"] = unitarily_small;
    j["certificate_ok"] = certificate_ok;
    if (oracle_occurrence < 0)
      j["oracle_occurrence"] = "skipped";
    else
      j["oracle_occurrence"] = oracle_occurrence;
    return j;
  }
};

// Ranks where the multiplicity engine is cheap enough to run per record.
inline constexpr long long kOracleRankCap = 4;

inline RepRecord make_record(const ChainUnion& u, bool with_oracle) {
  RepRecord rec;
  rec.family = u.family;
  rec.rank = u.rank();
  rec.chains = u.to_string();
  rec.two_lambda = u.two_lambda();
  rec.lkt = u.lkt();
  SpinLKTResult res = assemble_spin_lkt(u);
  rec.spin_lkt = res.mu;
  rec.unitarily_small = is_unitarily_small(u.family, res.mu);
  rec.certificate_ok = res.certificate_ok;
  if (with_oracle && rec.rank <= kOracleRankCap)
    rec.oracle_occurrence = oracle_occurrence(u, res);
  return rec;
}

}  // namespace scatter

#endif
