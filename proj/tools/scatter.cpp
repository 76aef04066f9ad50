// Command-line front end: census enumeration, counting, spin lowest K-types,
// the verification suite, parameter membership, and partition utilities.
// Output is deterministic for fixed inputs; see --help for the subcommands.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scatter/catalog.hpp"
#include "scatter/census.hpp"
#include "scatter/record.hpp"
#include "scatter/verify.hpp"

namespace {

using namespace scatter;

enum class Format { Table, Json, Csv };

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  fail(Errc::ParseError, "unknown format: " + s);
}

Family parse_family(const std::string& s) {
  if (s.size() == 1) return family_from_letter(s[0]);
  fail(Errc::ParseError, "family must be one of B, C, D");
}

int min_rank(Family f) { return f == Family::D ? 3 : 2; }

std::string paren(const Weight& w) { return "(" + weight_to_string(w) + ")"; }

// quote a csv field only when it needs it
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_table(const std::vector<std::vector<std::string>>& rows, std::ostream& os) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.resize(i + 1, 0);
      width[i] = std::max(width[i], row[i].size());
    }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line.append(width[i] - row[i].size() + 2, ' ');
    }
    os << line << "\n";
  }
}

void print_csv(const std::vector<std::vector<std::string>>& rows, std::ostream& os) {
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << csv_field(row[i]);
    }
    os << "\n";
  }
}

void emit(const std::vector<std::vector<std::string>>& rows, const ordered_json& j, Format fmt,
          std::ostream& os) {
  switch (fmt) {
    case Format::Table: print_table(rows, os); break;
    case Format::Csv: print_csv(rows, os); break;
    case Format::Json: os << j.dump(2) << "\n"; break;
  }
}

std::vector<std::string> record_row(const RepRecord& r) {
  return {std::string(1, family_letter(r.family)),
          std::to_string(r.rank),
          r.chains,
          paren(r.two_lambda),
          paren(r.lkt),
          paren(r.spin_lkt),
          r.unitarily_small ? "yes" : "no",
          r.certificate_ok ? "yes" : "no",
          r.oracle_occurrence < 0 ? "skipped" : std::to_string(r.oracle_occurrence)};
}

const std::vector<std::string> kRecordHeader = {
    "family", "rank",   "chains",          "two_lambda",     "lkt",
    "spin_lkt", "unitarily_small", "certificate_ok", "oracle_occurrence"};

int run_count(Family f, int max_rank, Format fmt) {
  std::vector<std::vector<std::string>> rows{{"rank", "count"}};
  ordered_json counts = ordered_json::array();
  for (int rank = min_rank(f); rank <= max_rank; ++rank) {
    const long long n = static_cast<long long>(enumerate_scattered(f, rank).size());
    rows.push_back({std::to_string(rank), std::to_string(n)});
    counts.push_back({{"rank", rank}, {"count", n}});
  }
  ordered_json j;
  j["family"] = std::string(1, family_letter(f));
  j["counts"] = counts;
  emit(rows, j, fmt, std::cout);
  return kExitOk;
}

int run_enumerate(Family f, int rank_from, int rank_to, bool with_oracle, Format fmt) {
  std::vector<RepRecord> recs;
  for (int rank = rank_from; rank <= rank_to; ++rank) {
    std::vector<ChainUnion> reps = enumerate_scattered(f, rank);
    census_sort(reps);
    for (const ChainUnion& u : reps) recs.push_back(make_record(u, with_oracle));
  }
  std::vector<std::vector<std::string>> rows{kRecordHeader};
  ordered_json arr = ordered_json::array();
  for (const RepRecord& r : recs) {
    rows.push_back(record_row(r));
    arr.push_back(r.to_json());
  }
  emit(rows, arr, fmt, std::cout);
  return kExitOk;
}

int run_spin_lkt(const std::string& chains, std::optional<Family> fam, bool with_oracle,
                 Format fmt) {
  ChainUnion u = parse_union(chains, fam);
  RepRecord r = make_record(u, with_oracle);
  std::vector<std::vector<std::string>> rows{kRecordHeader, record_row(r)};
  emit(rows, r.to_json(), fmt, std::cout);
  return r.certificate_ok ? kExitOk : kExitCheckFailed;
}

int run_verify(Family f, int max_rank, const std::string& checks_csv, Format fmt) {
  VerifyChecks checks;
  bool eqpar = false, usmall = false;
  std::stringstream ss(checks_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "eqpar")
      eqpar = true;
    else if (tok == "usmall")
      usmall = true;
    else if (tok == "oracle")
      checks.oracle = true;
    else if (tok == "vanishing")
      checks.vanishing = true;
    else if (tok == "witness")
      checks.witness = true;
    else if (tok == "dirac")
      checks.dirac = true;
    else
      fail(Errc::ParseError, "unknown check: " + tok);
  }

  std::vector<std::string> header{"chains", "rank"};
  if (eqpar) header.push_back("eqpar");
  if (usmall) header.push_back("usmall");
  if (checks.oracle) header.push_back("occurrence");
  if (checks.vanishing) header.push_back("vanishing");
  if (checks.witness) header.push_back("witness");
  if (checks.dirac) {
    header.push_back("dirac");
    header.push_back("uniqueness (partial)");
  }
  std::vector<std::vector<std::string>> rows{header};
  ordered_json arr = ordered_json::array();
  long long failures = 0;
  auto mark = [](bool ok) { return ok ? std::string("pass") : std::string("FAIL"); };
  for (int rank = min_rank(f); rank <= max_rank; ++rank) {
    std::vector<ChainUnion> reps = enumerate_scattered(f, rank);
    census_sort(reps);
    for (const ChainUnion& u : reps) {
      RepVerification rv = verify_rep(u, checks);
      if (!rv.all_ok()) ++failures;
      std::vector<std::string> row{rv.chains, std::to_string(rv.rank)};
      ordered_json j;
      j["chains"] = rv.chains;
      j["rank"] = rv.rank;
      if (eqpar) {
        row.push_back(mark(rv.eqpar_ok));
        j["eqpar"] = rv.eqpar_ok;
      }
      if (usmall) {
        row.push_back(mark(rv.usmall_ok));
        j["usmall"] = rv.usmall_ok;
      }
      if (checks.oracle) {
        row.push_back(std::to_string(*rv.occurrence));
        j["occurrence"] = *rv.occurrence;
      }
      if (checks.vanishing) {
        row.push_back(mark(*rv.vanishing_ok));
        j["vanishing"] = *rv.vanishing_ok;
      }
      if (checks.witness) {
        row.push_back(mark(*rv.witness_ok) + " (k=" + std::to_string(*rv.witness_k) + ")");
        j["witness"] = *rv.witness_ok;
        j["witness_k"] = *rv.witness_k;
      }
      if (checks.dirac) {
        row.push_back(mark(*rv.dirac_ok));
        row.push_back(mark(*rv.dirac_unique));
        j["dirac"] = *rv.dirac_ok;
        j["uniqueness_partial"] = *rv.dirac_unique;
      }
      rows.push_back(std::move(row));
      arr.push_back(std::move(j));
    }
  }
  ordered_json j;
  j["family"] = std::string(1, family_letter(f));
  j["max_rank"] = max_rank;
  j["reps"] = arr;
  j["failures"] = failures;
  emit(rows, j, fmt, std::cout);
  if (fmt != Format::Json)
    std::cout << (failures == 0 ? "all checks passed\n"
                                : std::to_string(failures) + " representation(s) failed\n");
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int run_check_param(Family f, int rank, const std::string& ll, const std::string& lr,
                    Format fmt) {
  ZhParam p{parse_weight(ll), parse_weight(lr)};
  if (static_cast<int>(p.lambda_l.size()) != rank || static_cast<int>(p.lambda_r.size()) != rank)
    fail(Errc::InvalidParameter, "rows must have length " + std::to_string(rank));
  std::optional<ChainUnion> u = decompose_parameter(f, p);

  ordered_json j = param_json(p);
  j["family"] = std::string(1, family_letter(f));
  j["rank"] = rank;
  j["in_ghat_d"] = u.has_value();
  if (u) {
    j["chains"] = u->to_string();
    j["scattered"] = is_scattered(*u);
  }
  if (fmt == Format::Json) {
    std::cout << j.dump(2) << "\n";
  } else if (!u) {
    std::cout << "not in Ghat^d\n";
  } else {
    std::cout << "in Ghat^d: " << u->to_string() << (is_scattered(*u) ? " (scattered)" : "")
              << "\n";
  }
  return kExitOk;
}

int run_lr_coeff(const std::string& mu_s, const std::string& nu_s, const std::string& lam_s,
                 Format fmt) {
  Partition mu = parse_partition(mu_s), nu = parse_partition(nu_s), lam = parse_partition(lam_s);
  const long long c = lr_coefficient(mu, nu, lam);
  if (fmt == Format::Json) {
    ordered_json j;
    j["mu"] = mu;
    j["nu"] = nu;
    j["lambda"] = lam;
    j["coefficient"] = c;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << c << "\n";
  }
  return kExitOk;
}

int run_lr_transpose(const std::string& p_s, Format fmt) {
  Partition p = parse_partition(p_s);
  Partition t = transpose(p);
  if (fmt == Format::Json) {
    ordered_json j;
    j["p"] = p;
    j["transpose"] = t;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << partition_to_string(t) << "\n";
  }
  return kExitOk;
}

int run_lr_eqpt(long long m, const std::string& p_s, Format fmt) {
  Partition p = parse_partition(p_s);
  const bool ok = eqpt_check(m, p);
  if (fmt == Format::Json) {
    ordered_json j;
    j["m"] = m;
    j["p"] = p;
    j["holds"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (ok ? "holds\n" : "FAILS\n");
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scattered representations of complex classical groups"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "output format: table, json, csv")
      ->capture_default_str()
      ->check(CLI::IsMember({"table", "json", "csv"}));

  std::string family = "C", chains, checks = "eqpar,usmall", ll, lr;
  std::string mu_s, nu_s, lam_s, p_s;
  int rank = 0, max_rank = 0;
  long long m_val = 0;
  bool with_oracle = false;

  CLI::App* count = app.add_subcommand("count", "census sizes per rank")->fallthrough();
  count->add_option("--family", family, "B, C, or D")->required();
  count->add_option("--max-rank", max_rank, "largest rank to count")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "list scattered representations")->fallthrough();
  enumerate->add_option("--family", family, "B, C, or D")->required();
  CLI::Option* en_rank = enumerate->add_option("--rank", rank, "single rank");
  enumerate->add_option("--max-rank", max_rank, "all ranks up to this bound")->excludes(en_rank);
  enumerate->add_flag("--oracle", with_oracle, "evaluate occurrence at small rank");

  CLI::App* spin = app.add_subcommand("spin-lkt", "assemble the spin lowest K-type")->fallthrough();
  spin->add_option("--chains", chains, "union in grammar form, e.g. \"A(2,2)+C[3,1]\"")
      ->required();
  CLI::Option* spin_fam = spin->add_option("--family", family, "needed only without an X-chain");
  spin->add_flag("--oracle", with_oracle, "evaluate occurrence at small rank");

  CLI::App* verify = app.add_subcommand("verify", "run per-representation checks")->fallthrough();
  verify->add_option("--family", family, "B, C, or D")->required();
  verify->add_option("--max-rank", max_rank, "verify all ranks up to this bound")->required();
  verify->add_option("--checks", checks, "comma list: eqpar,usmall,oracle,vanishing,witness,dirac")
      ->capture_default_str();

  CLI::App* check_param = app.add_subcommand("check-param", "membership from a parameter")->fallthrough();
  check_param->add_option("--family", family, "B, C, or D")->required();
  check_param->add_option("--rank", rank, "parameter length")->required();
  check_param->add_option("--lambda-l", ll, "left row, e.g. 5/2,3/2,1/2")->required();
  check_param->add_option("--lambda-r", lr, "right row")->required();

  CLI::App* lr_cmd = app.add_subcommand("lr", "partition utilities")->fallthrough();
  lr_cmd->require_subcommand(1);
  CLI::App* lr_coeff = lr_cmd->add_subcommand("coeff", "Littlewood-Richardson coefficient")->fallthrough();
  lr_coeff->add_option("--mu", mu_s, "first factor")->required();
  lr_coeff->add_option("--nu", nu_s, "second factor")->required();
  lr_coeff->add_option("--lambda", lam_s, "target")->required();
  CLI::App* lr_tr = lr_cmd->add_subcommand("transpose", "conjugate partition")->fallthrough();
  lr_tr->add_option("--p", p_s, "partition")->required();
  CLI::App* lr_eqpt = lr_cmd->add_subcommand("eqpt", "staircase transpose identity")->fallthrough();
  lr_eqpt->add_option("--m", m_val, "staircase size")->required();
  lr_eqpt->add_option("--p", p_s, "strict partition, largest part at most m")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Format fmt = parse_format(format);
    if (*count) return run_count(parse_family(family), max_rank, fmt);
    if (*enumerate) {
      const Family f = parse_family(family);
      if (en_rank->count() > 0) return run_enumerate(f, rank, rank, with_oracle, fmt);
      if (max_rank > 0) return run_enumerate(f, min_rank(f), max_rank, with_oracle, fmt);
      fail(Errc::ParseError, "enumerate needs --rank or --max-rank");
    }
    if (*spin) {
      std::optional<Family> fam;
      if (spin_fam->count() > 0) fam = parse_family(family);
      return run_spin_lkt(chains, fam, with_oracle, fmt);
    }
    if (*verify) return run_verify(parse_family(family), max_rank, checks, fmt);
    if (*check_param) return run_check_param(parse_family(family), rank, ll, lr, fmt);
    if (*lr_coeff) return run_lr_coeff(mu_s, nu_s, lam_s, fmt);
    if (*lr_tr) return run_lr_transpose(p_s, fmt);
    if (*lr_eqpt) return run_lr_eqpt(m_val, p_s, fmt);
    return kExitUsage;
  } catch (const scatter::Error& e) {
    std::cerr << errc_name(e.code) << ": " << e.what() << "\n";
    switch (e.code) {
      case Errc::CertificateNotUnique:
      case Errc::CertificateFailedAfterFallback:
      case Errc::WitnessFailed:
      case Errc::InternalError: return kExitCheckFailed;
      default: return kExitUsage;
    }
  }
}
