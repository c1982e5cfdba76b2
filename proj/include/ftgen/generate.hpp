#pragma once

#include <optional>

#include "ftgen/term.hpp"
#include "ftgen/type.hpp"

namespace ftgen {

// Type-directed construction of the function-level wrapper. pre/post plug
// into the two variable occurrence sides; on the argument side of an arrow
// they swap. next_hole feeds Binder ids, increasing left to right.
FuncPtr mono(const TypePtr& sigma, const FuncPtr& pre, const FuncPtr& post, int& next_hole);

// f denotes the identity: Id, Mapped over an identity, or a composition of
// identities.
bool is_id(const FuncPtr& f);

// f is a directly applicable term: an embedded variable, or map/fmap applied
// to such a term. Returns that term.
std::optional<TermPtr> is_simple(const FuncPtr& f);

// Applies f to t, simplifying on the fly so the result contains no identity
// and no composition. The rules are tried strictly in this order: identity,
// simple, Mapped (eta-expanded map/fmap application), Binder (eta-expanded
// with the hole filled by t), Compose (right first), Embed (plain
// application). next_var feeds fresh binder names for the eta expansions.
TermPtr simplify_apply(const FuncPtr& f, const TermPtr& t, int& next_var);

struct Theorem {
  TypePtr sigma;
  FuncPtr e_term;  // wrapper with symbolic pre/post, to be shown applied to f
  TermPtr lhs;     // instance with g on the result side
  TermPtr rhs;     // instance with g on the argument side
  TermPtr lhs_eta;
  TermPtr rhs_eta;
  bool fully_general;  // false when the type would need a strictness-style precondition
};

// The full pipeline for one type: equation lhs = rhs holds for every
// parametric f of that type, with g an arbitrary function on the variable's
// instances (total, and over the full domain when fully_general).
Theorem generate(const TypePtr& sigma);

}  // namespace ftgen
