#pragma once

#include <memory>
#include <string>

namespace ftgen {

enum class TermKind { Const, Var, Apply, Lambda };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Lambda terms as produced by the generator. Binder names are chosen fresh at
// construction time and never printed: render_term renames every binder to
// x1, x2, ... in order of first appearance, so alpha-equivalent terms render
// identically.
struct Term {
  TermKind kind;
  std::string name;  // Const: token; Var: variable; Lambda: binder
  TermPtr fun;       // Apply
  TermPtr arg;       // Apply
  TermPtr body;      // Lambda
};

TermPtr make_const(std::string name);
TermPtr make_var(std::string name);
TermPtr make_apply(TermPtr fun, TermPtr arg);
TermPtr make_lambda(std::string var, TermPtr body);

// True iff `var` occurs free in t (a Lambda binding the same name shadows it).
bool free_in(const std::string& var, const TermPtr& t);

// Structural equality up to renaming of bound variables.
bool alpha_equal(const TermPtr& a, const TermPtr& b);

int node_count(const TermPtr& t);

// Concrete syntax: application is left-associative, compound arguments are
// parenthesized, and runs of directly nested binders collapse into one head
// ("\x1 x2 x3 -> ...").
std::string render_term(const TermPtr& t);

enum class FuncKind { Id, Mapped, Compose, Binder, Hole, Embed };

struct Func;
using FuncPtr = std::shared_ptr<const Func>;

// Function-level expressions: the language the type-directed construction
// works in before everything is pushed down into a plain Term. Binder/Hole
// pairs are linked by an integer id; Embed injects a finished Term.
struct Func {
  FuncKind kind;
  std::string functor;  // Mapped: "map" or "fmap"
  FuncPtr inner;        // Mapped
  FuncPtr left;         // Compose
  FuncPtr right;        // Compose
  int hole = 0;         // Binder: id it binds; Hole: id it refers to
  FuncPtr body;         // Binder
  TermPtr payload;      // Embed
};

FuncPtr func_id();
FuncPtr func_mapped(std::string functor, FuncPtr inner);
FuncPtr func_compose(FuncPtr left, FuncPtr right);
FuncPtr func_binder(int hole, FuncPtr body);
FuncPtr func_hole(int hole);
FuncPtr func_embed(TermPtr payload);

// Compositions print as a flat chain "a . b . c"; binders print
// parenthesized "(\h1 -> ...)" with ids renamed to h1, h2, ... in order of
// first appearance; Mapped parenthesizes compound arguments.
std::string render_func(const FuncPtr& f);

}  // namespace ftgen
