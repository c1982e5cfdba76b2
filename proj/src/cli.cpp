#include "ftgen/cli.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ftgen/generate.hpp"
#include "ftgen/oracle.hpp"
#include "ftgen/term.hpp"
#include "ftgen/type.hpp"

namespace ftgen {

namespace {

const char* const kDefaultType = "(a -> Bool) -> (Bool -> a) -> [a] -> a";
const char* const kGeneralityNote =
    "note: equation may lose generality (precondition-requiring type)";

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

void print_theorem_block(std::ostream& out, const char* title, const std::string& lhs,
                         const std::string& rhs) {
  out << title << "\n";
  out << " " << lhs << "\n";
  out << "  =\n";
  out << " " << rhs << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  CLI::App app{"derives the free theorem of a polymorphic type"};
  app.name("ftgen");

  std::string type_text;
  bool no_eta = false;
  bool json_mode = false;
  long long seed = 0;
  CLI::Option* type_opt =
      app.add_option("--type", type_text, "the type of f; skips the interactive prompt");
  app.add_flag("--no-eta", no_eta, "omit the eta-reduced form of the theorem");
  CLI::Option* check_opt =
      app.add_option("--check", "test the equation on N random inputs (default 1000)")
          ->expected(0, 1);
  app.add_option("--seed", seed, "random seed for --check (default 0)");
  app.add_flag("--json", json_mode, "emit one JSON record instead of text");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  int trials = 1000;
  if (check_opt->count() > 0 && !check_opt->results().empty() &&
      !check_opt->results().front().empty()) {
    try {
      trials = std::stoi(check_opt->results().front());
    } catch (const std::exception&) {
      trials = 0;
    }
    if (trials <= 0) {
      out << "error: --check expects a positive trial count\n";
      return 1;
    }
  }

  std::string text = type_text;
  if (type_opt->count() == 0) {
    out << "function type (or Enter for default): " << std::flush;
    std::getline(in, text);
    out << "\n\n";
  }
  if (blank(text)) text = kDefaultType;

  TypePtr sigma;
  try {
    sigma = parse_type(text);
  } catch (const TypeParseError& e) {
    out << "error: " << e.what() << "\n";
    return 1;
  }

  Theorem th = generate(sigma);

  const CatalogueEntry* entry = nullptr;
  EntryReport report;
  bool checked = false;
  if (check_opt->count() > 0) {
    entry = find_entry(sigma);
    if (entry) {
      report = check_theorem(*entry, trials, static_cast<unsigned long long>(seed));
      checked = true;
    }
  }

  if (json_mode) {
    nlohmann::json j;
    j["sigma"] = render_type(sigma);
    j["e_term"] = render_func(th.e_term) + " f";
    j["lhs"] = render_term(th.lhs);
    j["rhs"] = render_term(th.rhs);
    j["lhs_eta"] = render_term(th.lhs_eta);
    j["rhs_eta"] = render_term(th.rhs_eta);
    j["fully_general"] = th.fully_general;
    if (check_opt->count() > 0) {
      j["oracle"] = checked ? nlohmann::json::parse(report_records(report)) : nlohmann::json();
    }
    out << j.dump(2) << "\n";
  } else {
    const std::string sep(66, '-');
    out << "f :: " << render_type(sigma) << "\n";
    out << sep << "\n";
    out << "e = " << render_func(th.e_term) << " f\n";
    out << sep << "\n";
    print_theorem_block(out, "free theorem:", render_term(th.lhs), render_term(th.rhs));
    if (!no_eta) {
      out << sep << "\n";
      print_theorem_block(out, "free theorem, eta-reduced:", render_term(th.lhs_eta),
                          render_term(th.rhs_eta));
    }
    if (!th.fully_general) out << kGeneralityNote << "\n";
    out << "\n";
    if (check_opt->count() > 0) {
      if (!checked) {
        out << "no oracle catalogue entry for: " << render_type(sigma) << "\n";
      } else {
        out << render_report(report);
      }
    }
  }

  return checked && !report.passed() ? 2 : 0;
}

}  // namespace ftgen
