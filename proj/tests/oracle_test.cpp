#include "ftgen/oracle.hpp"

#include "doctest.h"
#include "ftgen/generate.hpp"

using namespace ftgen;

TEST_CASE("values print and compare structurally") {
  CHECK(render_value(make_int(-4)) == "-4");
  CHECK(render_value(make_bool(true)) == "True");
  CHECK(render_value(make_list({make_int(1), make_int(2)})) == "[1, 2]");
  CHECK(render_value(make_nothing()) == "Nothing");
  CHECK(render_value(make_just(make_int(5))) == "Just 5");
  CHECK(render_value(make_just(make_int(-5))) == "Just (-5)");
  CHECK(value_equal(make_list({make_int(1)}), make_list({make_int(1)})));
  CHECK_FALSE(value_equal(make_list({make_int(1)}), make_list({make_int(1), make_int(1)})));
  CHECK_FALSE(value_equal(make_int(0), make_bool(false)));
  CHECK_THROWS_AS(value_equal(make_closure("p", [](const Value& v) { return v; }),
                              make_closure("q", [](const Value& v) { return v; })),
                  EvalError);
}

TEST_CASE("eval applies builtins and closures call-by-value") {
  Env env = base_env();
  env["g"] = make_closure("(+3)", [](const Value& v) { return make_int(as_int(v) + 3); });
  env["xs"] = make_list({make_int(1), make_int(2)});

  Value mapped = eval(parse_term("map g"), env);
  Value applied = apply_value(mapped, env["xs"]);
  CHECK(value_equal(applied, make_list({make_int(4), make_int(5)})));

  // fmap over the two Maybe shapes
  Value fm = eval(parse_term("fmap g"), env);
  CHECK(value_equal(apply_value(fm, make_nothing()), make_nothing()));
  CHECK(value_equal(apply_value(fm, make_just(make_int(1))), make_just(make_int(4))));

  // a lambda captures its environment
  Value self = eval(parse_term("\\x -> g x"), env);
  CHECK(value_equal(apply_value(self, make_int(7)), make_int(10)));
}

TEST_CASE("eval reports unbound names and bad applications") {
  Env env = base_env();
  CHECK_THROWS_WITH_AS(eval(make_var("zzz"), env), "unbound name 'zzz'", EvalError);
  env["g"] = make_int(1);
  CHECK_THROWS_AS(eval(parse_term("g g"), env), EvalError);
  CHECK_THROWS_AS(apply_value(make_int(3), make_int(4)), EvalError);
}

TEST_CASE("the term reader inverts rendering up to binder names") {
  for (const char* text :
       {"\\x1 x2 x3 -> g (f (\\x4 -> x1 (g x4)) (\\x5 -> x2 x5) x3)", "\\x1 -> map g x1",
        "\\x1 -> x1 (\\x2 -> x2)", "f (\\x1 -> x1) (\\x2 -> x2)"}) {
    // render_term normalizes names, so compare after one round
    TermPtr once = parse_term(text);
    CHECK(render_term(parse_term(render_term(once))) == render_term(once));
  }
  CHECK_THROWS_AS(parse_term("\\x ->"), EvalError);
  CHECK_THROWS_AS(parse_term("wibble"), EvalError);
  CHECK_THROWS_AS(parse_term("(f"), EvalError);
}

TEST_CASE("catalogue entries are found by type, not by name") {
  CHECK(find_entry(parse_type("[b] -> [b]")) != nullptr);
  CHECK(find_entry(parse_type("(a -> Bool) -> [a] -> Maybe a")) != nullptr);
  CHECK(find_entry(parse_type("Maybe a -> [a]")) == nullptr);
  CHECK(catalogue().size() == 5);
  for (const CatalogueEntry& e : catalogue()) CHECK_FALSE(e.f_impls.empty());
}

TEST_CASE("every catalogued implementation satisfies its equation") {
  for (const CatalogueEntry& e : catalogue()) {
    EntryReport r = check_theorem(e, 200, 11);
    INFO(render_report(r));
    CHECK(r.passed());
    for (const ImplReport& ir : r.impls) {
      CHECK(ir.trials == 200);
      CHECK(ir.failures == 0);
    }
  }
}

TEST_CASE("non-parametric plants are caught quickly") {
  for (const CatalogueEntry& e : negative_controls()) {
    EntryReport r = check_theorem(e, 1000, 0);
    INFO(render_report(r));
    CHECK_FALSE(r.passed());
    for (const ImplReport& ir : r.impls) {
      REQUIRE(ir.first_failure.has_value());
      CHECK(ir.first_failure->trial < 1000);
      CHECK_FALSE(ir.first_failure->detail.empty());
    }
  }
}

TEST_CASE("reports are deterministic for a fixed seed") {
  const CatalogueEntry& e = catalogue().front();
  EntryReport a = check_theorem(e, 50, 12345);
  EntryReport b = check_theorem(e, 50, 12345);
  CHECK(render_report(a) == render_report(b));
  CHECK(report_records(a) == report_records(b));
  // and the counterexample surfaces the lowest failing trial
  EntryReport p = check_theorem(negative_controls().front(), 100, 7);
  EntryReport q = check_theorem(negative_controls().front(), 100, 7);
  REQUIRE(p.impls.front().first_failure.has_value());
  CHECK(p.impls.front().first_failure->trial == q.impls.front().first_failure->trial);
}

TEST_CASE("machine-readable records carry the report fields") {
  EntryReport r = check_theorem(negative_controls().back(), 20, 3);
  std::string records = report_records(r);
  CHECK(records.find("\"entry\"") != std::string::npos);
  CHECK(records.find("\"impl\"") != std::string::npos);
  CHECK(records.find("\"failures\"") != std::string::npos);
  CHECK(records.find("\"counterexample\"") != std::string::npos);
  CHECK(records.find("\"trial\"") != std::string::npos);
}
