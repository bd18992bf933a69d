#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jpcount/bounds.hpp"
#include "jpcount/hickerson.hpp"
#include "jpcount/io.hpp"
#include "jpcount/jordan_polya.hpp"
#include "jpcount/representations.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

jp::BigInt parse_natural(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("expected a decimal natural number, got '" + text + "'");
  }
  return jp::BigInt(text);
}

jp::Family parse_family(const std::string& tag) {
  auto family = jp::family_from_tag(tag);
  if (!family) throw std::invalid_argument("unknown family '" + tag + "' (use j or jp)");
  return *family;
}

int print_report(const jp::AuditReport& report) {
  for (const std::string& line : report.lines) std::cout << "  " << line << "\n";
  std::cout << (report.pass ? "PASS" : "FAIL") << ": " << report.name << "\n";
  return report.pass ? kExitOk : kExitCheckFailed;
}

struct AuditArgs {
  std::string which;
  uint64_t limit = 500;        // lemma5 m
  uint64_t k_max = 100000;     // rosser
  uint64_t n_max = 100;        // stirling
  uint64_t x = 1'000'000;      // granville / jp-prime-lower
  uint64_t y = 5;              // granville
  uint32_t k = 2;              // jp-prime-lower
  uint32_t nk_max = 8;         // nk family
  double log_x = 10'000.0;     // proof-sums
  double epsilon = 0.1;
  uint32_t instances = 100;    // ennola
};

int run_audit(const AuditArgs& args) {
  if (args.which == "lemma5") return print_report(jp::audit_exponent_ratio(args.limit));
  if (args.which == "rosser") return print_report(jp::audit_rosser(args.k_max));
  if (args.which == "stirling") return print_report(jp::audit_stirling(args.n_max));
  if (args.which == "feller") return print_report(jp::audit_simplex(8, 8));
  if (args.which == "ennola") return print_report(jp::audit_ennola_suite(args.instances));
  if (args.which == "proof-sums") {
    jp::ProofSumOptions options;
    options.mertens_epsilon = args.epsilon;
    return print_report(jp::audit_proof_sums(args.log_x, options));
  }
  if (args.which == "granville") return print_report(jp::audit_granville(args.x, args.y));
  if (args.which == "nk") return print_report(jp::audit_multiplicity_family(args.nk_max));
  if (args.which == "jp-prime-lower") {
    return print_report(jp::audit_jp_prime_lower(jp::BigInt(args.x), args.k));
  }
  throw std::invalid_argument("unknown audit '" + args.which + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Jordan-Polya numbers (products of factorials)"};
  app.require_subcommand(1);

  // count
  std::string count_limit, count_family = "j";
  CLI::App* count = app.add_subcommand("count", "Count family members up to a limit");
  count->add_option("--limit", count_limit, "inclusive upper bound")->required();
  count->add_option("--family", count_family, "j (factorials) or jp (prime factorials)");

  // list
  std::string list_limit, list_family = "j", list_format = "txt", list_out, list_cache;
  CLI::App* list = app.add_subcommand("list", "List family members up to a limit");
  list->add_option("--limit", list_limit)->required();
  list->add_option("--family", list_family);
  list->add_option("--format", list_format, "txt, csv, or json");
  list->add_option("--out", list_out, "output path (default stdout)");
  list->add_option("--cache", list_cache, "cache directory for enumerations");

  // member
  std::string member_n;
  CLI::App* member = app.add_subcommand("member", "Test membership of one value");
  member->add_option("n", member_n)->required();

  // reps
  std::string reps_n;
  bool reps_enumerate = false;
  CLI::App* reps = app.add_subcommand("reps", "Count factorisations into factorials");
  reps->add_option("n", reps_n)->required();
  reps->add_flag("--enumerate", reps_enumerate, "print each representation");

  // hickerson
  uint32_t hick_max_n = 200;
  bool hick_trivial = false;
  CLI::App* hick = app.add_subcommand("hickerson", "Search n! = a_1! ... a_r!");
  hick->add_option("--max-n", hick_max_n)->required();
  hick->add_flag("--include-trivial", hick_trivial);

  // psi
  uint64_t psi_x = 0, psi_y = 0;
  CLI::App* psi_cmd = app.add_subcommand("psi", "Exact friable count Psi(x, y)");
  psi_cmd->add_option("--x", psi_x)->required();
  psi_cmd->add_option("--y", psi_y)->required();

  // bounds
  double bounds_log_x = 0.0, bounds_eps = 0.1;
  CLI::App* bounds = app.add_subcommand("bounds", "Log-scale counting envelopes at L = log x");
  bounds->add_option("--log-x", bounds_log_x)->required();
  bounds->add_option("--epsilon", bounds_eps);

  // audit
  AuditArgs audit_args;
  CLI::App* audit = app.add_subcommand("audit", "Numeric audits of the classical ingredients");
  audit
      ->add_option("--which", audit_args.which,
                   "lemma5|rosser|stirling|feller|ennola|proof-sums|granville|nk|jp-prime-lower")
      ->required();
  audit->add_option("--limit", audit_args.limit, "lemma5: audit m! exponents up to this m");
  audit->add_option("--k-max", audit_args.k_max, "rosser: check primes p_1..p_k");
  audit->add_option("--n-max", audit_args.n_max, "stirling: check factorials up to n");
  audit->add_option("--x", audit_args.x, "granville / jp-prime-lower x");
  audit->add_option("--y", audit_args.y, "granville y");
  audit->add_option("--k", audit_args.k, "jp-prime-lower k");
  audit->add_option("--nk-max", audit_args.nk_max, "nk: witnesses up to k");
  audit->add_option("--log-x", audit_args.log_x, "proof-sums L");
  audit->add_option("--epsilon", audit_args.epsilon, "mertens epsilon");
  audit->add_option("--instances", audit_args.instances, "ennola random instances");

  // oeis-check
  std::string oeis_bfile, oeis_limit;
  CLI::App* oeis = app.add_subcommand("oeis-check", "Compare the enumeration with a b-file");
  oeis->add_option("--bfile", oeis_bfile)->required();
  oeis->add_option("--limit", oeis_limit)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*count) {
      std::cout << jp::count_jordan_polya(parse_natural(count_limit), parse_family(count_family))
                << "\n";
      return kExitOk;
    }

    if (*list) {
      auto format = jp::list_format_from_tag(list_format);
      if (!format) throw std::invalid_argument("unknown format '" + list_format + "'");
      jp::BigInt limit = parse_natural(list_limit);
      jp::Family family = parse_family(list_family);
      jp::Enumeration enumeration =
          list_cache.empty() ? jp::enumerate_jordan_polya(limit, family)
                             : jp::enumerate_with_cache(list_cache, limit, family);
      if (list_out.empty()) {
        jp::write_list(std::cout, enumeration, *format);
      } else {
        std::ofstream out(list_out);
        if (!out) throw std::runtime_error("cannot open " + list_out);
        jp::write_list(out, enumeration, *format);
      }
      return kExitOk;
    }

    if (*member) {
      std::cout << (jp::is_jordan_polya(parse_natural(member_n)) ? "yes" : "no") << "\n";
      return kExitOk;
    }

    if (*reps) {
      auto found = jp::enumerate_representations(parse_natural(reps_n));
      std::cout << found.size() << "\n";
      if (reps_enumerate) {
        for (const auto& rep : found) std::cout << rep.to_string() << "\n";
      }
      return kExitOk;
    }

    if (*hick) {
      jp::hickerson::SearchOptions options{.include_trivial = hick_trivial};
      auto solutions = jp::hickerson::search(hick_max_n, options);
      for (const auto& sol : solutions) {
        std::cout << sol.n << "! = " << sol.rep.to_string()
                  << (sol.trivial ? "  (trivial)" : "  (non-trivial)") << "\n";
      }
      std::cout << solutions.size() << " solution(s)\n";
      return kExitOk;
    }

    if (*psi_cmd) {
      std::cout << jp::psi(psi_x, psi_y) << "\n";
      return kExitOk;
    }

    if (*bounds) {
      jp::BoundEval eval = jp::bound_eval(bounds_log_x, bounds_eps);
      std::cout << "L = " << eval.L << ", epsilon = " << eval.epsilon << "\n"
                << "log upper envelope = " << eval.log_upper << "\n"
                << "log lower envelope = " << eval.log_lower << "\n";
      return kExitOk;
    }

    if (*audit) return run_audit(audit_args);

    if (*oeis) {
      jp::BFile bfile = jp::parse_bfile(std::filesystem::path(oeis_bfile));
      jp::Enumeration enumeration = jp::enumerate_jordan_polya(parse_natural(oeis_limit));
      jp::OeisReport report = jp::oeis_check(bfile, enumeration);
      std::cout << report.message << "\n";
      return report.agree ? kExitOk : kExitCheckFailed;
    }
  } catch (const jp::ParseError& e) {
    std::cerr << "parse error (line " << e.line << "): " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
