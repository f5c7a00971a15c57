#include "liecensus/cli.hpp"

#include "liecensus/bounds.hpp"
#include "liecensus/candidates.hpp"
#include "liecensus/census.hpp"
#include "liecensus/errors.hpp"
#include "liecensus/primes.hpp"
#include "liecensus/version.hpp"
#include "liecensus/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <numeric>
#include <ostream>

namespace liecensus::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json envelope(const std::string& command, ordered_json inputs, ordered_json result,
                      std::vector<std::string> flags = {}) {
  ordered_json rec;
  rec["command"] = command;
  rec["inputs"] = std::move(inputs);
  rec["result"] = std::move(result);
  rec["flags"] = std::move(flags);
  rec["tool_version"] = tool_version;
  rec["schema_version"] = output_schema_version;
  return rec;
}

void emit(std::ostream& out, const ordered_json& rec) { out << rec.dump() << '\n'; }

ordered_json bound_json(const BoundExpr& e) {
  ordered_json j;
  j["symbolic"] = e.symbolic();
  if (e.floor_value) {
    j["floor"] = to_decimal(*e.floor_value);
    j["ceil"] = to_decimal(*e.ceil_value());
    j["exact"] = e.exact;
  }
  j["flags"] = e.flags;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string t_factor_str(int scaled, int scale) {
  const int g = std::gcd(scaled, scale);
  const int num = scaled / g, den = scale / g;
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

LieType parse_type_args(const std::string& family, int rank) {
  LieType t(parse_family(family), rank);
  require_valid(t);
  return t;
}

// ---------------------------------------------------------------- dim

struct DimArgs {
  std::string family;
  int rank = 1;
  std::string weight;
};

int run_dim(const DimArgs& a, std::ostream& out) {
  const LieType type = parse_type_args(a.family, a.rank);
  const Weight w = parse_weight(a.weight);
  require_dominant(w, type.rank);
  const Int d = weyl_dim(type, w);
  ordered_json inputs;
  inputs["family"] = a.family;
  inputs["rank"] = a.rank;
  inputs["weight"] = w.coeffs;
  ordered_json result;
  result["dim"] = to_decimal(d);
  emit(out, envelope("dim", inputs, result));
  return exit_ok;
}

// ---------------------------------------------------------------- roots

int run_roots(const DimArgs& a, std::ostream& out) {
  const LieType type = parse_type_args(a.family, a.rank);
  const RootSystemData& rs = root_system(type);
  ordered_json inputs;
  inputs["family"] = a.family;
  inputs["rank"] = a.rank;

  ordered_json header;
  header["kind"] = "root_system";
  header["type"] = type.name();
  header["count"] = rs.positive_roots.size();
  std::vector<std::string> t_factors;
  for (int s : rs.scaled_t) t_factors.push_back(t_factor_str(s, rs.t_scale));
  header["length_factors"] = t_factors;
  header["cartan"] = rs.cartan;
  emit(out, envelope("roots", inputs, header));

  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
    const auto& b = rs.positive_roots[i];
    ordered_json rec;
    rec["kind"] = "root";
    rec["index"] = i;
    rec["coeffs"] = b;
    rec["height"] = std::accumulate(b.begin(), b.end(), 0);
    emit(out, envelope("roots", inputs, rec));
  }
  return exit_ok;
}

// ---------------------------------------------------------------- dual

int run_dual(const DimArgs& a, std::ostream& out) {
  const LieType type = parse_type_args(a.family, a.rank);
  const Weight w = parse_weight(a.weight);
  require_dominant(w, type.rank);
  const Weight d = dual_weight(type, w);
  ordered_json inputs;
  inputs["family"] = a.family;
  inputs["rank"] = a.rank;
  inputs["weight"] = w.coeffs;
  ordered_json result;
  result["dual"] = d.coeffs;
  result["self_dual"] = (d == w);
  emit(out, envelope("dual", inputs, result));
  return exit_ok;
}

// ---------------------------------------------------------------- enum

struct EnumArgs {
  std::string family;
  int rank = 1;
  long long max_dim = 1;
  std::string format = "json";
  std::string cache_dir;
};

int run_enum(const EnumArgs& a, std::ostream& out) {
  const LieType type = parse_type_args(a.family, a.rank);
  std::optional<CacheConfig> cache;
  if (!a.cache_dir.empty()) cache = CacheConfig{a.cache_dir};
  const auto entries = enumerate_weights(type, a.max_dim, cache ? &*cache : nullptr);

  ordered_json inputs;
  inputs["family"] = a.family;
  inputs["rank"] = a.rank;
  inputs["max_dim"] = a.max_dim;
  inputs["format"] = a.format;

  if (a.format == "csv") {
    out << "command,family,rank,max_dim,weight,dim,flags,tool_version,schema_version\n";
    for (const auto& e : entries)
      out << "enum," << a.family << ',' << a.rank << ',' << a.max_dim << ','
          << csv_escape(e.weight.str()) << ',' << to_decimal(e.dim) << ",," << tool_version << ','
          << output_schema_version << '\n';
  } else if (a.format == "text") {
    for (const auto& e : entries)
      out << type.name() << " (" << e.weight.str() << ") dim " << to_decimal(e.dim) << '\n';
  } else {
    for (const auto& e : entries) {
      ordered_json rec;
      rec["weight"] = e.weight.coeffs;
      rec["dim"] = to_decimal(e.dim);
      emit(out, envelope("enum", inputs, rec));
    }
  }
  return exit_ok;
}

// ---------------------------------------------------------------- census

struct CensusArgs {
  long long prime = 2;
  bool no_canonical = false;
  std::string cache_dir;
};

int run_census(const CensusArgs& a, std::ostream& out) {
  std::optional<CacheConfig> cache;
  if (!a.cache_dir.empty()) cache = CacheConfig{a.cache_dir};
  const auto entries =
      prime_degree_census(a.prime, !a.no_canonical, cache ? &*cache : nullptr);
  ordered_json inputs;
  inputs["prime"] = a.prime;
  inputs["canonical"] = !a.no_canonical;
  for (const auto& e : entries) {
    ordered_json rec;
    rec["family"] = family_name(e.lie_type.family);
    rec["rank"] = e.lie_type.rank;
    rec["weight"] = e.weight.coeffs;
    rec["dim"] = to_decimal(e.dim);
    emit(out, envelope("census", inputs, rec));
  }
  return exit_ok;
}

// ---------------------------------------------------------------- verify-kac

int run_verify_kac(const CensusArgs& a, std::ostream& out) {
  std::optional<CacheConfig> cache;
  if (!a.cache_dir.empty()) cache = CacheConfig{a.cache_dir};
  const KacReport report = verify_kac(a.prime, cache ? &*cache : nullptr);

  auto entry_list = [](const std::vector<CensusEntry>& entries) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : entries) {
      ordered_json rec;
      rec["family"] = family_name(e.lie_type.family);
      rec["rank"] = e.lie_type.rank;
      rec["weight"] = e.weight.coeffs;
      rec["dim"] = to_decimal(e.dim);
      arr.push_back(std::move(rec));
    }
    return arr;
  };

  ordered_json inputs;
  inputs["prime"] = a.prime;
  ordered_json result;
  result["match"] = report.match;
  result["expected"] = entry_list(report.expected);
  result["found"] = entry_list(report.found);
  result["notes"] = report.notes;
  emit(out, envelope("verify-kac", inputs, result));
  return report.match ? exit_ok : exit_mismatch;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  long long prime = 3;
  long long k = 1;
  std::uint64_t bits = default_bit_budget;
};

int run_bounds(const BoundsArgs& a, std::ostream& out) {
  if (a.k < 1) throw domain_error("field exponent k must be >= 1");
  const long long r = a.prime;
  const BoundExpr pb = p_bound(r, a.bits);
  const CandidateCountCaps caps = candidate_count_caps(r, a.bits);

  ordered_json inputs;
  inputs["prime"] = r;
  inputs["k"] = a.k;
  inputs["bits"] = a.bits;

  ordered_json result;
  result["p_bound"] = bound_json(pb);

  ordered_json wcaps;
  wcaps["generic"] = bound_json(weyl_cap(std::nullopt, r, a.bits));
  wcaps["A"] = bound_json(weyl_cap(LieType(Family::A, 1), r, a.bits));
  wcaps["B_n_ge_7"] = bound_json(weyl_cap(LieType(Family::B, 7), r, a.bits));
  wcaps["C"] = bound_json(weyl_cap(LieType(Family::C, 2), r, a.bits));
  wcaps["D_n_ge_8"] = bound_json(weyl_cap(LieType(Family::D, 8), r, a.bits));
  result["weyl_caps"] = wcaps;

  ordered_json rcaps;
  rcaps["p_eq_2"] = bound_json(rep_count_cap(std::nullopt, r, 2, a.bits));
  rcaps["A_p_gt_2"] = bound_json(rep_count_cap(Family::A, r, 3, a.bits));
  rcaps["other_p_gt_2"] = bound_json(rep_count_cap(Family::B, r, 3, a.bits));
  result["rep_count_caps"] = rcaps;

  ordered_json ccaps;
  ccaps["bb1"] = bound_json(caps.bb1);
  ccaps["th8"] = bound_json(caps.th8);
  ccaps["t11"] = bound_json(caps.t11);
  result["candidate_caps"] = ccaps;

  // Order note: |SL_r(p0^k)| for p0 the greatest prime below the
  // characteristic bound, evaluated when the search and the product stay
  // in budget.
  ordered_json note;
  note["symbolic"] = "|SL_" + std::to_string(r) + "(p0^" + std::to_string(a.k) +
                     ")| for p0 the greatest prime < " + pb.symbolic();
  if (pb.floor_value && *pb.floor_value <= 1'000'000'000'000LL) {
    const long long p0 = greatest_prime_le(static_cast<long long>(*pb.floor_value));
    note["p0"] = std::to_string(p0);
    try {
      const Int q = ipow(Int(p0), static_cast<std::uint64_t>(a.k));
      note["order"] = to_decimal(order_of_sl(static_cast<int>(r), q, a.bits));
    } catch (const resource_limit_error&) {
      note["order_flags"] = ordered_json::array({"order_exceeds_bit_budget"});
    }
  } else {
    note["order_flags"] = ordered_json::array({"p0_beyond_deterministic_search"});
  }
  result["sl_order_note"] = note;

  // The exceptional minimal dimensions: 26 and 7 hold in characteristic
  // 0; 25 and 6 are the modular minima for F4 and G2.
  ordered_json minima;
  minima["char0"] = {{"E6", 27}, {"E7", 56}, {"E8", 248}, {"F4", 26}, {"G2", 7}};
  minima["modular"] = {{"E6", 27}, {"E7", 56}, {"E8", 248}, {"F4", 25}, {"G2", 6}};
  result["exceptional_minima"] = minima;

  emit(out, envelope("bounds", inputs, result));
  return exit_ok;
}

// ---------------------------------------------------------------- candidates

struct CandArgs {
  long long prime = 3;
  long long k = 1;
  bool allow_self_dual = false;
  long long p_limit = 0;
  long long dim_ceiling = 1'000'000;
  std::string format = "json";
  std::string cache_dir;
};

ordered_json record_json(const char* kind, const CandidateRecord& rec) {
  ordered_json j;
  j["kind"] = kind;
  j["p"] = std::to_string(rec.descriptor.characteristic_p);
  j["family"] = family_name(rec.descriptor.lie_type.family);
  j["rank"] = rec.descriptor.lie_type.rank;
  j["twist"] = rec.descriptor.twist_e;
  j["t"] = std::to_string(rec.descriptor.field_exponent_t);
  j["group"] = rec.descriptor.name();
  j["weight"] = rec.weight.coeffs;
  j["dim"] = to_decimal(rec.dim);
  j["flags"] = rec.record_flags;
  j["constraints"] = rec.constraints_applied;
  return j;
}

void record_csv(std::ostream& out, const std::string& prefix, const char* kind,
                const CandidateRecord& rec) {
  out << prefix << kind << ',' << rec.descriptor.characteristic_p << ','
      << family_name(rec.descriptor.lie_type.family) << ',' << rec.descriptor.lie_type.rank << ','
      << rec.descriptor.twist_e << ',' << rec.descriptor.field_exponent_t << ','
      << csv_escape(rec.descriptor.name()) << ',' << csv_escape(rec.weight.str()) << ','
      << to_decimal(rec.dim) << ',' << csv_escape(join(rec.record_flags, ";")) << ','
      << csv_escape(join(rec.constraints_applied, ";"))
      << ",,,,,,,,,,,," << tool_version << ',' << output_schema_version << '\n';
}

int run_candidates(const CandArgs& a, std::ostream& out) {
  CandidateOptions opts;
  opts.exclude_self_dual = !a.allow_self_dual;
  opts.p_limit_override = a.p_limit;
  opts.dim_ceiling = a.dim_ceiling;
  std::optional<CacheConfig> cache;
  if (!a.cache_dir.empty()) {
    cache = CacheConfig{a.cache_dir};
    opts.cache = &*cache;
  }

  ordered_json inputs;
  inputs["prime"] = a.prime;
  inputs["k"] = a.k;
  inputs["exclude_self_dual"] = opts.exclude_self_dual;
  inputs["p_limit"] = a.p_limit;
  inputs["dim_ceiling"] = a.dim_ceiling;
  inputs["format"] = a.format;

  const bool csv = a.format == "csv";
  const bool text = a.format == "text";
  std::string csv_prefix;
  if (csv) {
    out << "command,prime,k,kind,p,family,rank,twist,t,group,weight,dim,flags,constraints,"
           "count_main,count_kac,count_self_dual,total_main,total_flagged,prime_limit,"
           "bb1_floor,th8_floor,t11_floor,caps_ok,notes,tool_version,schema_version\n";
    csv_prefix = "candidates," + std::to_string(a.prime) + "," + std::to_string(a.k) + ",";
  }

  auto on_main = [&](const CandidateRecord& rec) {
    if (csv) record_csv(out, csv_prefix, "candidate", rec);
    else if (text)
      out << rec.descriptor.name() << " weight (" << rec.weight.str() << ") dim "
          << to_decimal(rec.dim) << " [" << join(rec.record_flags, ";") << "]\n";
    else
      emit(out, envelope("candidates", inputs, record_json("candidate", rec)));
  };
  auto on_flagged = [&](const CandidateRecord& rec) {
    if (csv) record_csv(out, csv_prefix, "flagged", rec);
    else if (text)
      out << rec.descriptor.name() << " weight (" << rec.weight.str() << ") dim "
          << to_decimal(rec.dim) << " [" << join(rec.record_flags, ";") << "] (side list)\n";
    else
      emit(out, envelope("candidates", inputs, record_json("flagged", rec)));
  };

  const CandidatesSummary summary =
      enumerate_candidates_stream(a.prime, a.k, opts, on_main, on_flagged);

  const bool caps_ok =
      summary.per_p_within_bb1 && summary.total_within_th8 && summary.total_within_t11;

  if (csv) {
    for (const auto& c : summary.per_p)
      out << csv_prefix << "per_p," << c.p << ",,,,,,,,,," << c.main_count << ','
          << c.kac_count << ',' << c.self_dual_count << ",,,,,,,,," << tool_version << ','
          << output_schema_version << '\n';
    out << csv_prefix << "summary,,,,,,,,,,,,,," << summary.total_main << ','
        << summary.total_flagged << ',' << summary.prime_limit << ','
        << (summary.bb1_floor ? to_decimal(*summary.bb1_floor) : "") << ','
        << (summary.th8_floor ? to_decimal(*summary.th8_floor) : "") << ','
        << (summary.t11_floor ? to_decimal(*summary.t11_floor) : "") << ','
        << (caps_ok ? "true" : "false") << ',' << csv_escape(join(summary.notes, ";")) << ','
        << tool_version << ',' << output_schema_version << '\n';
  } else if (text) {
    for (const auto& c : summary.per_p)
      out << "p=" << c.p << " main=" << c.main_count << " kac=" << c.kac_count
          << " self_dual=" << c.self_dual_count << '\n';
    out << "total_main=" << summary.total_main << " total_flagged=" << summary.total_flagged
        << " primes_below=" << summary.prime_limit << " caps_ok=" << (caps_ok ? "yes" : "no")
        << '\n';
    for (const auto& n : summary.notes) out << "note: " << n << '\n';
  } else {
    for (const auto& c : summary.per_p) {
      ordered_json j;
      j["kind"] = "per_p";
      j["p"] = std::to_string(c.p);
      j["main"] = c.main_count;
      j["kac"] = c.kac_count;
      j["self_dual"] = c.self_dual_count;
      emit(out, envelope("candidates", inputs, j));
    }
    ordered_json j;
    j["kind"] = "summary";
    j["total_main"] = summary.total_main;
    j["total_flagged"] = summary.total_flagged;
    j["prime_limit"] = std::to_string(summary.prime_limit);
    if (summary.bb1_floor) j["bb1_floor"] = to_decimal(*summary.bb1_floor);
    if (summary.th8_floor) j["th8_floor"] = to_decimal(*summary.th8_floor);
    if (summary.t11_floor) j["t11_floor"] = to_decimal(*summary.t11_floor);
    j["per_p_within_bb1"] = summary.per_p_within_bb1;
    j["total_within_th8"] = summary.total_within_th8;
    j["total_within_t11"] = summary.total_within_t11;
    j["notes"] = summary.notes;
    emit(out, envelope("candidates", inputs, j));
  }
  return exit_ok;
}

// ---------------------------------------------------------------- alt-cap

int run_alt_cap(long long degree, std::ostream& out) {
  const AltCap cap = alternating_cap(degree);
  ordered_json inputs;
  inputs["degree"] = degree;
  ordered_json result;
  result["value"] = cap.value.str();
  result["floor"] = to_decimal(cap.floor);
  emit(out, envelope("alt-cap", inputs, result));
  return exit_ok;
}

void emit_error(std::ostream& err, const std::string& command, const std::string& kind,
                const std::string& message) {
  ordered_json rec;
  rec["command"] = command;
  rec["error"] = {{"kind", kind}, {"message", message}};
  rec["tool_version"] = tool_version;
  rec["schema_version"] = output_schema_version;
  err << rec.dump() << '\n';
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Lie-type dimension census and bound toolkit"};
  app.name("liecensus");
  app.require_subcommand(1);

  const char* env_cache = std::getenv("LIECENSUS_CACHE");
  const std::string default_cache = env_cache ? env_cache : "";

  int exit_code = exit_ok;
  std::string command = "liecensus";

  DimArgs dim_args;
  auto* dim_cmd = app.add_subcommand("dim", "Weyl dimension of a highest-weight module");
  dim_cmd->add_option("family", dim_args.family, "family (A, B, C, D, E6, E7, E8, F4, G2)")
      ->required();
  dim_cmd->add_option("rank", dim_args.rank, "rank")->required();
  dim_cmd->add_option("weight", dim_args.weight, "weight a_1,...,a_n")->required();
  dim_cmd->callback([&] {
    command = "dim";
    exit_code = run_dim(dim_args, out);
  });

  DimArgs roots_args;
  auto* roots_cmd = app.add_subcommand("roots", "positive roots of a simple type");
  roots_cmd->add_option("family", roots_args.family, "family")->required();
  roots_cmd->add_option("rank", roots_args.rank, "rank")->required();
  roots_cmd->callback([&] {
    command = "roots";
    exit_code = run_roots(roots_args, out);
  });

  DimArgs dual_args;
  auto* dual_cmd = app.add_subcommand("dual", "dual highest weight");
  dual_cmd->add_option("family", dual_args.family, "family")->required();
  dual_cmd->add_option("rank", dual_args.rank, "rank")->required();
  dual_cmd->add_option("weight", dual_args.weight, "weight a_1,...,a_n")->required();
  dual_cmd->callback([&] {
    command = "dual";
    exit_code = run_dual(dual_args, out);
  });

  EnumArgs enum_args;
  enum_args.cache_dir = default_cache;
  auto* enum_cmd = app.add_subcommand("enum", "all dominant weights up to a dimension cap");
  enum_cmd->add_option("family", enum_args.family, "family")->required();
  enum_cmd->add_option("rank", enum_args.rank, "rank")->required();
  enum_cmd->add_option("--max-dim", enum_args.max_dim, "dimension cap")->required();
  enum_cmd->add_option("--format", enum_args.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  enum_cmd->add_option("--cache", enum_args.cache_dir, "census cache directory");
  enum_cmd->callback([&] {
    command = "enum";
    exit_code = run_enum(enum_args, out);
  });

  CensusArgs census_args;
  census_args.cache_dir = default_cache;
  auto* census_cmd = app.add_subcommand("census", "weights of exact prime dimension r");
  census_cmd->add_option("--prime", census_args.prime, "prime dimension r")->required();
  census_cmd->add_flag("--no-canonical", census_args.no_canonical,
                       "include the duplicate labels C_2 and D_3");
  census_cmd->add_option("--cache", census_args.cache_dir, "census cache directory");
  census_cmd->callback([&] {
    command = "census";
    exit_code = run_census(census_args, out);
  });

  CensusArgs kac_args;
  kac_args.cache_dir = default_cache;
  auto* kac_cmd =
      app.add_subcommand("verify-kac", "check the census against the prime-dimension classification");
  kac_cmd->add_option("--prime", kac_args.prime, "prime dimension r")->required();
  kac_cmd->add_option("--cache", kac_args.cache_dir, "census cache directory");
  kac_cmd->callback([&] {
    command = "verify-kac";
    exit_code = run_verify_kac(kac_args, out);
  });

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "every explicit bound at prime degree r");
  bounds_cmd->add_option("--prime", bounds_args.prime, "prime degree r")->required();
  bounds_cmd->add_option("--k", bounds_args.k, "field exponent for the order note");
  bounds_cmd->add_option("--bits", bounds_args.bits, "bit budget for floor evaluation");
  bounds_cmd->callback([&] {
    command = "bounds";
    exit_code = run_bounds(bounds_args, out);
  });

  CandArgs cand_args;
  cand_args.cache_dir = default_cache;
  auto* cand_cmd = app.add_subcommand("candidates", "screened Lie-type candidate tuples");
  cand_cmd->add_option("--prime", cand_args.prime, "prime degree r")->required();
  cand_cmd->add_option("--k", cand_args.k, "field exponent k")->required();
  cand_cmd->add_flag("--allow-self-dual", cand_args.allow_self_dual,
                     "keep self-dual types and weights in the main list");
  cand_cmd->add_option("--p-limit", cand_args.p_limit, "only characteristics p below this bound");
  cand_cmd->add_option("--dim-ceiling", cand_args.dim_ceiling,
                       "enumeration ceiling on Weyl dimensions");
  cand_cmd->add_option("--format", cand_args.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cand_cmd->add_option("--cache", cand_args.cache_dir, "census cache directory");
  cand_cmd->callback([&] {
    command = "candidates";
    exit_code = run_candidates(cand_args, out);
  });

  long long alt_degree = 1;
  auto* alt_cmd = app.add_subcommand("alt-cap", "alternating-degree cap (3m+6)/2");
  alt_cmd->add_option("--degree", alt_degree, "matrix degree m")->required();
  alt_cmd->callback([&] {
    command = "alt-cap";
    exit_code = run_alt_cap(alt_degree, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    emit_error(err, command, "usage", e.what());
    return exit_usage;
  } catch (const internal_error& e) {
    emit_error(err, command, "internal", e.what());
    return exit_internal;
  } catch (const resource_limit_error& e) {
    emit_error(err, command, "resource_limit", e.what());
    return exit_resource_limit;
  } catch (const domain_error& e) {
    emit_error(err, command, "domain", e.what());
    return exit_usage;
  } catch (const std::exception& e) {
    emit_error(err, command, "internal", e.what());
    return exit_internal;
  }
  return exit_code;
}

} // namespace liecensus::cli
