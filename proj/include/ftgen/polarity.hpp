#pragma once

#include <memory>
#include <string>

#include "ftgen/type.hpp"

namespace ftgen {

enum class Polarity { Positive, Negative };

Polarity flip(Polarity p);

struct PolType;
using PolTypePtr = std::shared_ptr<const PolType>;

// The input type with every node carrying a sign: the root is positive,
// arrow arguments flip, everything else inherits.
struct PolType {
  TypeKind kind;
  Polarity sign;
  PolTypePtr arg;
  PolTypePtr res;
};

PolTypePtr annotate(const TypePtr& sigma);

// Every node suffixed with its sign, compound nodes parenthesized, e.g.
// "((alpha+ -> alpha-)- -> (alpha- -> alpha+)+)+".
std::string render_polarity(const PolTypePtr& t);

// True iff some negatively signed subtree contains variable occurrences of
// both signs. For such types the equation only holds under an extra
// totality/strictness-style assumption on g, so the printed form may lose
// generality.
bool requires_precondition(const TypePtr& sigma);

}  // namespace ftgen
