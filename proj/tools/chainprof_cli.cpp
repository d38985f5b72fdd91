#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chainprof/bounds.hpp"
#include "chainprof/certificate.hpp"
#include "chainprof/constructions.hpp"
#include "chainprof/io.hpp"
#include "chainprof/profile.hpp"
#include "chainprof/search.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kBadInput = 2;

chainprof::Poset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw chainprof::Error("cannot open '" + path + "'");
  return chainprof::read_poset(in);
}

int run_profile(const std::string& path, const std::string& method,
                std::uint64_t path_budget) {
  chainprof::Poset p = load_poset(path);
  std::optional<chainprof::ChainProfile> result;
  if (method == "matrix" || method == "both") result = chainprof::profile_matrix(p);
  if (method == "enumerate" || method == "both") {
    chainprof::ChainProfile enumerated = chainprof::profile_enumerate(p, path_budget);
    if (result && *result != enumerated) {
      std::cerr << "method mismatch: matrix " << chainprof::format_profile(*result)
                << " vs enumerate " << chainprof::format_profile(enumerated) << "\n";
      return kRejected;
    }
    result = enumerated;
  }
  std::cout << chainprof::format_profile(*result) << "\n";
  return kOk;
}

int run_bounds(const std::string& multiset) {
  chainprof::ChainProfile s = chainprof::parse_profile_arg(multiset);
  chainprof::BoundsReport report = chainprof::exact_bounds(s);
  std::cout << "lower=" << report.lower << " upper=" << report.upper;
  if (report.exact) std::cout << " exact=" << *report.exact;
  std::cout << " rule=" << chainprof::to_string(report.rule) << "\n";
  return kOk;
}

int run_construct(const std::string& kind, const std::string& multiset) {
  chainprof::ChainProfile s = chainprof::parse_profile_arg(multiset);
  if (kind == "trivial") {
    chainprof::write_poset(std::cout, chainprof::trivial_construction(s));
    return kOk;
  }
  auto decomposition = chainprof::as_shifted_sums(s);
  if (!decomposition) {
    std::cerr << "profile is not of the shifted subset-sums form\n";
    return kRejected;
  }
  chainprof::write_poset(std::cout, chainprof::sums_construction(*decomposition));
  return kOk;
}

int run_search(const std::string& multiset, std::optional<std::uint64_t> size_cap,
               std::uint64_t class_budget) {
  chainprof::ChainProfile s = chainprof::parse_profile_arg(multiset);
  chainprof::SearchResult result =
      chainprof::minimal_poset(s, size_cap.value_or(chainprof::upper_bound(s)), class_budget);
  if (result.status != chainprof::SearchResult::Status::exact) {
    std::cerr << "status=budget_exhausted classes=" << result.explored << "\n";
    return kRejected;
  }
  std::cerr << "status=exact size=" << result.size << " classes=" << result.explored
            << (result.ceiling_used ? " ceiling_used=true" : "") << "\n";
  chainprof::write_poset(std::cout, *result.witness);
  return kOk;
}

int run_compress(const std::string& path) {
  chainprof::Poset p = load_poset(path);
  chainprof::CompressedPoset cert = chainprof::compress(p, chainprof::max_chain(p));
  chainprof::write_certificate(std::cout, cert);
  return kOk;
}

int run_verify(const std::string& cert_path, const std::string& multiset, std::uint64_t t) {
  std::ifstream in(cert_path);
  if (!in) throw chainprof::Error("cannot open '" + cert_path + "'");
  chainprof::CompressedPoset cert = chainprof::read_certificate(in);
  chainprof::ChainProfile s = chainprof::parse_profile_arg(multiset);
  std::string reason;
  if (!chainprof::verify(cert, s, t, &reason)) {
    std::cerr << "rejected: " << reason << "\n";
    return kRejected;
  }
  return kOk;
}

int run_export_dot(const std::string& path) {
  chainprof::write_dot(std::cout, load_poset(path));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds, witnesses, exact search, and succinct certificates for "
               "maximal-chain cardinality profiles of finite posets"};
  app.require_subcommand(1);

  std::string poset_path, multiset, cert_path, construct_kind, method = "matrix";
  std::uint64_t path_budget = 1'000'000;
  std::uint64_t class_budget = chainprof::kDefaultClassBudget;
  std::optional<std::uint64_t> size_cap;
  std::uint64_t t = 0;

  auto* profile = app.add_subcommand("profile", "Maximal-chain cardinality profile of a poset");
  profile->add_option("poset-file", poset_path)->required();
  profile->add_option("--method", method, "matrix|enumerate|both (both cross-checks)")
      ->check(CLI::IsMember({"matrix", "enumerate", "both"}));
  profile->add_option("--path-budget", path_budget, "maximal chain cap for --method enumerate");

  auto* bounds = app.add_subcommand("bounds", "Lower/upper/exact poset size bounds for a profile");
  bounds->add_option("S", multiset, "comma-separated, 5x2 = two fives")->required();

  auto* construct = app.add_subcommand("construct", "Write a witness poset for a profile");
  construct->add_option("kind", construct_kind)->check(CLI::IsMember({"trivial", "sums"}))
      ->required();
  construct->add_option("S", multiset)->required();

  auto* search = app.add_subcommand("search", "Exact minimum poset size at desk scale");
  search->add_option("S", multiset)->required();
  search->add_option("--size-cap", size_cap);
  search->add_option("--class-budget", class_budget);

  auto* compress = app.add_subcommand("compress", "Compress a poset against its maximum chain");
  compress->add_option("poset-file", poset_path)->required();

  auto* verify = app.add_subcommand("verify", "Verify a compressed certificate against a claim");
  verify->add_option("cert-file", cert_path)->required();
  verify->add_option("S", multiset)->required();
  verify->add_option("t", t, "claimed poset cardinality bound")->required();

  auto* export_dot = app.add_subcommand("export-dot", "Hasse diagram as a DOT digraph");
  export_dot->add_option("poset-file", poset_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (profile->parsed()) return run_profile(poset_path, method, path_budget);
    if (bounds->parsed()) return run_bounds(multiset);
    if (construct->parsed()) return run_construct(construct_kind, multiset);
    if (search->parsed()) return run_search(multiset, size_cap, class_budget);
    if (compress->parsed()) return run_compress(poset_path);
    if (verify->parsed()) return run_verify(cert_path, multiset, t);
    if (export_dot->parsed()) return run_export_dot(poset_path);
  } catch (const chainprof::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  } catch (const chainprof::InvalidProfileError& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  } catch (const chainprof::CapBelowLowerBoundError& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  } catch (const chainprof::BudgetExceededError& e) {
    std::cerr << e.what() << "\n";
    return kRejected;
  } catch (const chainprof::Error& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
