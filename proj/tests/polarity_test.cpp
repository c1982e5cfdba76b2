#include "ftgen/polarity.hpp"

#include <random>

#include "doctest.h"
#include "test_support.hpp"

using namespace ftgen;

namespace {

// Count variable occurrences per sign.
void occurrences(const PolTypePtr& t, int& pos, int& neg) {
  switch (t->kind) {
    case TypeKind::Var:
      ++(t->sign == Polarity::Positive ? pos : neg);
      break;
    case TypeKind::Bool:
    case TypeKind::Int:
      break;
    case TypeKind::List:
    case TypeKind::Maybe:
      occurrences(t->arg, pos, neg);
      break;
    case TypeKind::Arrow:
      occurrences(t->arg, pos, neg);
      occurrences(t->res, pos, neg);
      break;
  }
}

int var_occurrences(const TypePtr& t) {
  switch (t->kind) {
    case TypeKind::Var:
      return 1;
    case TypeKind::Bool:
    case TypeKind::Int:
      return 0;
    case TypeKind::List:
    case TypeKind::Maybe:
      return var_occurrences(t->arg);
    case TypeKind::Arrow:
      return var_occurrences(t->arg) + var_occurrences(t->res);
  }
  return 0;
}

}  // namespace

TEST_CASE("annotation starts positive and flips across arrow arguments") {
  CHECK(render_polarity(annotate(parse_type("a"))) == "alpha+");
  CHECK(render_polarity(annotate(parse_type("a -> a"))) == "(alpha- -> alpha+)+");
  CHECK(render_polarity(annotate(parse_type("(a -> a) -> a -> a"))) ==
        "((alpha+ -> alpha-)- -> (alpha- -> alpha+)+)+");
  CHECK(render_polarity(annotate(parse_type("[a] -> Maybe a"))) ==
        "([alpha-]- -> (Maybe alpha+)+)+");
}

TEST_CASE("double flip restores the sign") {
  // the argument of an argument is positive again
  CHECK(render_polarity(annotate(parse_type("(a -> Int) -> Int"))) ==
        "((alpha+ -> Int-)- -> Int+)+");
  // and one level deeper it is negative once more
  CHECK(render_polarity(annotate(parse_type("((a -> Int) -> Int) -> a"))) ==
        "(((alpha- -> Int+)+ -> Int-)- -> alpha+)+");
  CHECK(flip(flip(Polarity::Negative)) == Polarity::Negative);
  CHECK(flip(flip(Polarity::Positive)) == Polarity::Positive);
}

TEST_CASE("verdicts for the three reference types") {
  CHECK(requires_precondition(parse_type("(a -> a) -> a -> a")));
  CHECK_FALSE(requires_precondition(parse_type("(a -> Bool) -> [a] -> Maybe a")));
  CHECK_FALSE(requires_precondition(parse_type("(a -> Bool) -> (Bool -> a) -> [a] -> a")));
}

TEST_CASE("verdicts on further shapes") {
  // no variable at all: nothing to clash
  CHECK_FALSE(requires_precondition(parse_type("Bool -> Int")));
  // mixed signs appear only inside positive subtrees
  CHECK_FALSE(requires_precondition(parse_type("a -> a")));
  // an endofunction in any negative position mixes both signs there
  CHECK(requires_precondition(parse_type("(a -> a) -> Bool")));
  CHECK(requires_precondition(parse_type("[a -> a] -> Bool")));
  CHECK(requires_precondition(parse_type("((a -> a) -> Bool) -> Bool")));
  // the nested second-order shapes put only negative occurrences into
  // negative subtrees, so their plain equation is already the general one
  CHECK_FALSE(requires_precondition(parse_type("(([a] -> Int) -> a) -> a")));
  CHECK_FALSE(requires_precondition(parse_type("(((([a] -> Int) -> Int) -> Int) -> a) -> a")));
}

TEST_CASE("annotation preserves shape and occurrence count") {
  std::mt19937_64 rng(424242);
  for (int i = 0; i < 500; ++i) {
    TypePtr t = ftgen::testing::random_type(rng, 6);
    PolTypePtr p = annotate(t);
    CHECK(p->kind == t->kind);
    int pos = 0, neg = 0;
    occurrences(p, pos, neg);
    CHECK(pos + neg == var_occurrences(t));
  }
}

TEST_CASE("embedding a type under one more arrow argument flips every sign") {
  std::mt19937_64 rng(515151);
  for (int i = 0; i < 200; ++i) {
    TypePtr t = ftgen::testing::random_type(rng, 5);
    int pos = 0, neg = 0;
    occurrences(annotate(t), pos, neg);
    int pos2 = 0, neg2 = 0;
    occurrences(annotate(type_arrow(t, type_bool())), pos2, neg2);
    CHECK(pos2 == neg);
    CHECK(neg2 == pos);
    // argument position makes the whole of t one negative subtree, so mixed
    // signs anywhere inside force the verdict
    if (pos > 0 && neg > 0) CHECK(requires_precondition(type_arrow(t, type_bool())));
    // result position leaves t's annotation untouched
    if (requires_precondition(t)) CHECK(requires_precondition(type_arrow(type_bool(), t)));
  }
}
