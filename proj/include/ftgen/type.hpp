#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace ftgen {

enum class TypeKind { Var, Bool, Int, List, Maybe, Arrow };

struct Type;
using TypePtr = std::shared_ptr<const Type>;

// A type polymorphic in (at most) one variable. The variable carries no name
// of its own: the parser accepts any lowercase identifier and normalizes it,
// and the renderer always prints "alpha".
struct Type {
  TypeKind kind;
  TypePtr arg;  // List/Maybe element, or Arrow argument
  TypePtr res;  // Arrow result
};

TypePtr type_var();
TypePtr type_bool();
TypePtr type_int();
TypePtr type_list(TypePtr elem);
TypePtr type_maybe(TypePtr elem);
TypePtr type_arrow(TypePtr arg, TypePtr res);

bool equal(const TypePtr& a, const TypePtr& b);

// Number of top-level arrows, i.e. the arity of a function of this type.
int arrow_count(const TypePtr& t);

// Column is 1-based within the input string.
class TypeParseError : public std::runtime_error {
public:
  TypeParseError(int column, const std::string& message);
  int column() const { return column_; }

private:
  int column_;
};

// Grammar:
//   type  := atype ('->' type)?                      (right-associative)
//   atype := 'Maybe' prim | prim
//   prim  := 'Bool' | 'Int' | lowercase-ident | '[' type ']' | '(' type ')'
// All lowercase identifiers in one input must be the same; "Maybe Maybe a"
// needs parentheses around the argument.
TypePtr parse_type(const std::string& text);

// Canonical form: parse_type(render_type(t)) == t, variable printed "alpha",
// parentheses only where the grammar requires them.
std::string render_type(const TypePtr& t);

}  // namespace ftgen
