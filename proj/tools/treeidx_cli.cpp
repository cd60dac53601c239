// SPDX-License-Identifier: Apache-2.0
// treeidx: degree-based tree indices, tree generators and claim verification.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "treeidx/treeidx.hpp"

namespace fs = std::filesystem;
using namespace treeidx;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::size_t> parse_list(const std::string& text) {
  return detail::parse_number_list(text, "degree list");
}

// ---- compute / gen ---------------------------------------------------------

struct TreeSource {
  std::string input;
  std::string family;

  Tree load() const {
    if (input.empty() == family.empty()) throw UsageError("exactly one of --input or --family is required");
    if (!family.empty()) return make_family(parse_family_spec(family));
    return parse_edge_list(read_file(input));
  }
};

const std::vector<std::string> kIndexNames = {"irr", "irr_T", "M1", "M2", "F", "sigma"};

int run_compute(const TreeSource& src, const std::string& indices) {
  const Tree t = src.load();
  std::vector<std::string> wanted = kIndexNames;
  if (!indices.empty()) {
    wanted.clear();
    std::stringstream ss(indices);
    for (std::string name; std::getline(ss, name, ',');) {
      if (std::find(kIndexNames.begin(), kIndexNames.end(), name) == kIndexNames.end())
        throw UsageError("unknown index '" + name + "'");
      wanted.push_back(name);
    }
  }
  const IndexValues v = compute_indices(t);
  const std::map<std::string, const Integer*> by_name = {{"irr", &v.irr}, {"irr_T", &v.irr_total},
                                                          {"M1", &v.m1},   {"M2", &v.m2},
                                                          {"F", &v.forgotten}, {"sigma", &v.sigma}};
  ordered_json j;
  j["n"] = t.order();
  j["m"] = t.edge_count();
  const auto ds = degree_sequence(t);
  j["degrees"] = std::vector<std::size_t>(ds.values().begin(), ds.values().end());
  for (const auto& name : kIndexNames)
    if (std::find(wanted.begin(), wanted.end(), name) != wanted.end()) j[name] = to_decimal(*by_name.at(name));
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int run_gen(const std::string& family) {
  std::cout << to_edge_list(make_family(parse_family_spec(family)));
  return kExitOk;
}

// ---- enumerate -------------------------------------------------------------

struct EnumerateArgs {
  std::size_t n = 0;
  bool nonisomorphic = false;
  std::string degree_seq;
  bool count_only = false;
  bool force = false;
};

int run_enumerate(const EnumerateArgs& a) {
  const EnumerationLimits limits = a.force ? EnumerationLimits::forced() : EnumerationLimits{};
  const Isomorphism iso = a.nonisomorphic ? Isomorphism::NonIsomorphic : Isomorphism::Labeled;
  std::uint64_t count = 0;
  bool first = true;
  auto emit = [&](const Tree& t) {
    ++count;
    if (a.count_only) return;
    if (!first) std::cout << "\n";
    first = false;
    std::cout << to_edge_list(t);
  };

  if (!a.degree_seq.empty()) {
    const DegreeSequence ds(parse_list(a.degree_seq));
    if (a.n != 0 && a.n != ds.size()) throw UsageError("--n does not match the length of --degree-seq");
    if (iso == Isomorphism::Labeled) {
      for_each_with_degree_sequence(ds, emit, limits);
    } else {
      for (const auto& t : enumerate_with_degree_sequence(ds, iso, limits)) emit(t);
    }
  } else {
    if (a.n == 0) throw UsageError("--n is required");
    if (iso == Isomorphism::Labeled)
      for_each_labeled(a.n, emit, limits);
    else
      for (const auto& c : census(a.n, 1, limits)) emit(c.tree);
  }
  if (a.count_only) std::cout << count << "\n";
  return kExitOk;
}

// ---- verify / search -------------------------------------------------------

struct ClaimArgs {
  std::string claim;
  bool all = false;
  std::string claims_file;
  std::string reading = "nondecreasing";
  std::size_t jobs = 1;
  std::size_t counterexamples = 5;
  bool force = false;
};

std::vector<Claim> load_claims(const ClaimArgs& a) {
  if (a.claims_file.empty()) return registry();
  return parse_claims(read_file(a.claims_file));
}

VerifyOptions options_from(const ClaimArgs& a) {
  VerifyOptions o;
  o.reading = parse_reading(a.reading);
  o.jobs = std::max<std::size_t>(a.jobs, 1);
  o.max_counterexamples = a.counterexamples;
  return o;
}

struct VerifyArgs : ClaimArgs {
  std::size_t nmin = 1;
  std::size_t nmax = 8;
  bool nonisomorphic = false;
  std::string report;
};

void write_report(const fs::path& path, const Report& r) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write '" + path.string() + "'");
  out << to_json(r).dump(2) << "\n";
}

int run_verify(const VerifyArgs& a) {
  if (a.all == !a.claim.empty()) throw UsageError("exactly one of --claim or --all is required");
  const auto claims = load_claims(a);
  std::vector<const Claim*> selected;
  if (a.all)
    for (const auto& c : claims) selected.push_back(&c);
  else
    selected.push_back(&find_claim(claims, a.claim));

  const VerifyOptions options = options_from(a);
  const EnumerationLimits limits = a.force ? EnumerationLimits::forced() : EnumerationLimits{};
  CensusCache cache(options.jobs, limits);
  const DomainSpec domain{ExhaustiveDomain{a.nmin, a.nmax},
                          a.nonisomorphic ? Isomorphism::NonIsomorphic : Isomorphism::Labeled};

  // A single claim may write to a named .json file; otherwise --report is a directory.
  std::optional<fs::path> report_file, report_dir;
  if (!a.report.empty()) {
    const fs::path p(a.report);
    if (!a.all && p.extension() == ".json") {
      report_file = p;
    } else {
      fs::create_directories(p);
      report_dir = p;
    }
  }

  std::vector<Report> reports;
  for (const Claim* c : selected) {
    std::cerr << "verifying " << c->id << " ..." << std::endl;
    reports.push_back(verify_claim(*c, domain, options, cache));
    const Report& r = reports.back();
    std::cerr << "  " << to_string(r.verdict) << " (" << std::fixed << std::setprecision(1) << r.wall_ms << " ms)"
              << std::endl;
    if (report_file) write_report(*report_file, r);
    if (report_dir) write_report(*report_dir / (r.claim_id + ".json"), r);
  }

  bool all_hold = true;
  for (const auto& r : reports) all_hold = all_hold && r.verdict == Verdict::HoldsOnDomain;

  if (!a.all && !report_file && !report_dir) {
    std::cout << to_json(reports.front()).dump(2) << "\n";
  } else {
    std::cout << std::left << std::setw(28) << "claim" << std::setw(26) << "verdict" << std::right << std::setw(12)
              << "scanned" << std::setw(12) << "in_scope" << std::setw(12) << "satisfied" << "\n";
    for (const auto& r : reports)
      std::cout << std::left << std::setw(28) << r.claim_id << std::setw(26) << to_string(r.verdict) << std::right
                << std::setw(12) << r.scanned << std::setw(12) << r.in_scope << std::setw(12) << r.satisfied << "\n";
  }
  return all_hold ? kExitOk : kExitVerdict;
}

struct SearchArgs : ClaimArgs {
  std::size_t n = 0;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  bool nonisomorphic = false;
};

int run_search(const SearchArgs& a) {
  if (a.claim.empty()) throw UsageError("--claim is required");
  if (a.n == 0) throw UsageError("--n is required");
  if (a.samples && !a.seed) throw UsageError("--samples requires --seed");
  if (a.seed && !a.samples) throw UsageError("--seed requires --samples");
  const auto claims = load_claims(a);
  const Claim& claim = find_claim(claims, a.claim);
  const VerifyOptions options = options_from(a);
  CensusCache cache(options.jobs, a.force ? EnumerationLimits::forced() : EnumerationLimits{});

  DomainSpec domain;
  if (a.samples)
    domain.mode = SampledDomain{a.n, *a.samples, *a.seed};
  else
    domain = {ExhaustiveDomain{a.n, a.n}, a.nonisomorphic ? Isomorphism::NonIsomorphic : Isomorphism::Labeled};

  const auto found = find_counterexample(claim, domain, options, cache);
  if (!found) {
    std::cout << "none found\n";
    return kExitOk;
  }
  const auto& [tree, eval] = *found;
  std::cout << "counterexample\n" << to_edge_list(tree) << "lhs " << to_decimal(eval.lhs) << "\nrhs "
            << to_decimal(eval.rhs) << "\n";
  return kExitVerdict;
}

int run_registry(const ClaimArgs& a, bool text) {
  for (const auto& c : load_claims(a)) {
    if (text)
      std::cout << to_claim_text(c) << "\n";
    else
      std::cout << c.id << "\t" << c.kind() << "\t" << c.statement << "\n";
  }
  return kExitOk;
}

void add_claim_options(CLI::App* cmd, ClaimArgs& a) {
  cmd->add_option("--claims-file", a.claims_file, "Claim file to use instead of the built-in registry");
  cmd->add_option("--reading", a.reading, "Degree index convention")
      ->check(CLI::IsMember({"nondecreasing", "nonincreasing"}));
  cmd->add_option("--jobs", a.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--counterexamples", a.counterexamples, "Counterexamples kept per report");
  cmd->add_flag("--force", a.force, "Raise the enumeration cap to its hard limit");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-based tree indices, generators and claim verification"};
  app.require_subcommand(1);
  app.allow_extras(false);

  TreeSource compute_src;
  std::string compute_indices_list;
  auto* compute = app.add_subcommand("compute", "Compute degree-based indices of one tree");
  compute->add_option("--input", compute_src.input, "Edge-list file");
  compute->add_option("--family", compute_src.family, "Family spec, e.g. star:7 or caterpillar:4,3,5");
  compute->add_option("--indices", compute_indices_list, "Comma-separated subset of irr,irr_T,M1,M2,F,sigma");

  std::string gen_family;
  auto* gen = app.add_subcommand("gen", "Print the edge list of a family member");
  gen->add_option("--family", gen_family, "Family spec")->required();

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate trees of a given order or degree sequence");
  enumerate->add_option("--n", enum_args.n, "Order");
  enumerate->add_flag("--nonisomorphic", enum_args.nonisomorphic, "One tree per isomorphism class");
  enumerate->add_option("--degree-seq", enum_args.degree_seq, "Comma-separated degree multiset");
  enumerate->add_flag("--count-only", enum_args.count_only, "Print only the number of trees");
  enumerate->add_flag("--force", enum_args.force, "Raise the enumeration cap to its hard limit");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Verify claims over all trees up to a given order");
  verify->add_option("--claim", verify_args.claim, "Claim id");
  verify->add_flag("--all", verify_args.all, "Verify every claim");
  verify->add_option("--nmin", verify_args.nmin, "Smallest order scanned")->check(CLI::PositiveNumber);
  verify->add_option("--nmax", verify_args.nmax, "Largest order scanned")->check(CLI::PositiveNumber);
  verify->add_flag("--nonisomorphic", verify_args.nonisomorphic, "Scan isomorphism classes instead of labeled trees");
  verify->add_option("--report", verify_args.report, "Report directory, or a .json file for a single claim");
  add_claim_options(verify, verify_args);

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Look for a counterexample of one claim");
  search->add_option("--claim", search_args.claim, "Claim id")->required();
  search->add_option("--n", search_args.n, "Order")->required()->check(CLI::PositiveNumber);
  search->add_option("--samples", search_args.samples, "Number of uniform random trees to draw");
  search->add_option("--seed", search_args.seed, "Seed for the random stream");
  search->add_flag("--nonisomorphic", search_args.nonisomorphic, "Exhaustive search over isomorphism classes");
  add_claim_options(search, search_args);

  ClaimArgs registry_args;
  bool registry_text = false;
  auto* reg = app.add_subcommand("registry", "List the claims");
  reg->add_option("--claims-file", registry_args.claims_file, "Claim file to list instead of the registry");
  reg->add_flag("--text", registry_text, "Print claims in claim-file syntax");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return run_compute(compute_src, compute_indices_list);
    if (*gen) return run_gen(gen_family);
    if (*enumerate) return run_enumerate(enum_args);
    if (*verify) return run_verify(verify_args);
    if (*search) return run_search(search_args);
    if (*reg) return run_registry(registry_args, registry_text);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::CapExceeded || e.code() == Errc::UnknownClaim ? kExitUsage : kExitInput;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
