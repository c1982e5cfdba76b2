#include "ftgen/cli.hpp"

#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "test_support.hpp"

using namespace ftgen;

namespace {

struct Result {
  int code;
  std::string out;
};

Result run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  int code = run(args, in, out);
  return {code, out.str()};
}

const char* const kSep = "------------------------------------------------------------------";

}  // namespace

TEST_CASE("interactive session with the default type") {
  Result r = run_cli({}, "\n");
  CHECK(r.code == 0);
  std::string expected = std::string("function type (or Enter for default): \n") +
      "\n"
      "f :: (alpha -> Bool) -> (Bool -> alpha) -> [alpha] -> alpha\n" +
      kSep + "\n" +
      "e = (\\h1 -> (\\h2 -> (\\h3 -> post . h3 . map pre) . h2 . (\\h4 -> pre . h4 . id)) . h1"
      " . (\\h5 -> id . h5 . post)) f\n" +
      kSep + "\n" +
      "free theorem:\n"
      " \\x1 x2 x3 -> g (f (\\x4 -> x1 (g x4)) (\\x5 -> x2 x5) x3)\n"
      "  =\n"
      " \\x1 x2 x3 -> f (\\x4 -> x1 x4) (\\x5 -> g (x2 x5)) (map g x3)\n" +
      kSep + "\n" +
      "free theorem, eta-reduced:\n"
      " \\x1 x2 x3 -> g (f (\\x4 -> x1 (g x4)) x2 x3)\n"
      "  =\n"
      " \\x1 x2 x3 -> f x1 (\\x4 -> g (x2 x4)) (map g x3)\n"
      "\n";
  CHECK(r.out == expected);
}

TEST_CASE("entering a type at the prompt matches --type output") {
  const std::string sigma = "(a -> a -> Bool) -> [a] -> [a]";
  Result interactive = run_cli({}, sigma + "\n");
  Result oneshot = run_cli({"--type", sigma});
  CHECK(interactive.code == 0);
  CHECK(oneshot.code == 0);
  // identical apart from the prompt and echo blank line
  CHECK(interactive.out == "function type (or Enter for default): \n\n" + oneshot.out);

  std::string expected = std::string("f :: (alpha -> alpha -> Bool) -> [alpha] -> [alpha]\n") +
      kSep + "\n" +
      "e = (\\h1 -> (\\h2 -> map post . h2 . map pre) . h1 ."
      " (\\h3 -> (\\h4 -> id . h4 . post) . h3 . post)) f\n" +
      kSep + "\n" +
      "free theorem:\n"
      " \\x1 x2 -> map g (f (\\x3 x4 -> x1 (g x3) (g x4)) x2)\n"
      "  =\n"
      " \\x1 x2 -> f (\\x3 x4 -> x1 x3 x4) (map g x2)\n" +
      kSep + "\n" +
      "free theorem, eta-reduced:\n"
      " \\x1 x2 -> map g (f (\\x3 x4 -> x1 (g x3) (g x4)) x2)\n"
      "  =\n"
      " \\x1 x2 -> f x1 (map g x2)\n"
      "\n";
  CHECK(oneshot.out == expected);
}

TEST_CASE("an all-whitespace line also selects the default type") {
  Result r = run_cli({}, "   \n");
  CHECK(r.code == 0);
  CHECK(r.out.find("f :: (alpha -> Bool) -> (Bool -> alpha) -> [alpha] -> alpha") !=
        std::string::npos);
}

TEST_CASE("end of input at the prompt behaves like the default") {
  Result r = run_cli({}, "");
  CHECK(r.code == 0);
  CHECK(r.out.find("f :: (alpha -> Bool) ->") != std::string::npos);
}

TEST_CASE("--no-eta stops after the plain theorem") {
  Result r = run_cli({"--type", "[a] -> [a]", "--no-eta"});
  CHECK(r.code == 0);
  CHECK(r.out.find("free theorem:") != std::string::npos);
  CHECK(r.out.find("eta-reduced") == std::string::npos);
}

TEST_CASE("the generality note appears exactly for flagged types") {
  Result flagged = run_cli({"--type", "(a -> a) -> a -> a"});
  CHECK(flagged.code == 0);
  CHECK(flagged.out.find("note: equation may lose generality (precondition-requiring type)") !=
        std::string::npos);
  // printed after the theorem blocks
  CHECK(flagged.out.find("note:") > flagged.out.find("eta-reduced"));

  Result plain = run_cli({"--type", "(a -> Bool) -> (Bool -> a) -> [a] -> a"});
  CHECK(plain.out.find("note:") == std::string::npos);
}

TEST_CASE("type errors report the position and exit 1") {
  Result r = run_cli({"--type", "a -> b"});
  CHECK(r.code == 1);
  CHECK(r.out.find("parse error at column 6") != std::string::npos);
  CHECK(r.out.find("multiple type variables") != std::string::npos);

  Result empty = run_cli({"--type", "Either a"});
  CHECK(empty.code == 1);
  CHECK(empty.out.find("unknown constructor 'Either'") != std::string::npos);
}

TEST_CASE("unknown flags are rejected with usage text") {
  Result r = run_cli({"--frobnicate"});
  CHECK(r.code == 1);
  CHECK(r.out.find("Usage") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
  Result a = run_cli({"--type", "(a -> Bool) -> [a] -> Maybe a"});
  Result b = run_cli({"--type", "(a -> Bool) -> [a] -> Maybe a"});
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);
}

TEST_CASE("--json emits one record with every theorem field") {
  Result r = run_cli({"--type", "(a -> Bool) -> [a] -> Maybe a", "--json"});
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["sigma"] == "(alpha -> Bool) -> [alpha] -> Maybe alpha");
  CHECK(j["lhs"] == "\\x1 x2 -> fmap g (f (\\x3 -> x1 (g x3)) x2)");
  CHECK(j["rhs"] == "\\x1 x2 -> f (\\x3 -> x1 x3) (map g x2)");
  CHECK(j["lhs_eta"] == "\\x1 x2 -> fmap g (f (\\x3 -> x1 (g x3)) x2)");
  CHECK(j["rhs_eta"] == "\\x1 x2 -> f x1 (map g x2)");
  CHECK(j["fully_general"] == true);
  CHECK(j["e_term"].get<std::string>().ends_with(" f"));

  // regenerating from the record's own sigma reproduces the record
  Result again = run_cli({"--type", j["sigma"].get<std::string>(), "--json"});
  CHECK(nlohmann::json::parse(again.out) == j);
}

TEST_CASE("--check runs the oracle for catalogued types") {
  Result r = run_cli({"--type", "(a -> Bool) -> [a] -> [a]", "--check", "200", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("oracle:") != std::string::npos);
  CHECK(r.out.find("filter: pass (200 trials)") != std::string::npos);

  Result bare = run_cli({"--type", "[a] -> [a]", "--check"});
  CHECK(bare.code == 0);
  CHECK(bare.out.find("trials=1000") != std::string::npos);

  Result off = run_cli({"--type", "Maybe a -> [a]", "--check", "50"});
  CHECK(off.code == 0);
  CHECK(off.out.find("no oracle catalogue entry") != std::string::npos);

  Result bad = run_cli({"--type", "[a] -> [a]", "--check", "0"});
  CHECK(bad.code == 1);
}

TEST_CASE("--json together with --check embeds the oracle records") {
  Result r = run_cli({"--type", "[a] -> [a]", "--json", "--check", "60", "--seed", "3"});
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["oracle"]["trials"] == 60);
  CHECK(j["oracle"]["seed"] == 3);
  CHECK(j["oracle"]["passed"] == true);
  CHECK(j["oracle"]["impls"].size() == 3);
}
