#include "ftgen/polarity.hpp"

namespace ftgen {

Polarity flip(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

namespace {

PolTypePtr annotate_rec(const TypePtr& t, Polarity sign) {
  auto node = std::make_shared<PolType>();
  node->kind = t->kind;
  node->sign = sign;
  switch (t->kind) {
    case TypeKind::Var:
    case TypeKind::Bool:
    case TypeKind::Int:
      break;
    case TypeKind::List:
    case TypeKind::Maybe:
      node->arg = annotate_rec(t->arg, sign);
      break;
    case TypeKind::Arrow:
      node->arg = annotate_rec(t->arg, flip(sign));
      node->res = annotate_rec(t->res, sign);
      break;
  }
  return node;
}

char sign_char(Polarity p) { return p == Polarity::Positive ? '+' : '-'; }

std::string render_rec(const PolTypePtr& t) {
  switch (t->kind) {
    case TypeKind::Var:
      return std::string("alpha") + sign_char(t->sign);
    case TypeKind::Bool:
      return std::string("Bool") + sign_char(t->sign);
    case TypeKind::Int:
      return std::string("Int") + sign_char(t->sign);
    case TypeKind::List:
      return "[" + render_rec(t->arg) + "]" + sign_char(t->sign);
    case TypeKind::Maybe:
      return "(Maybe " + render_rec(t->arg) + ")" + sign_char(t->sign);
    case TypeKind::Arrow:
      return "(" + render_rec(t->arg) + " -> " + render_rec(t->res) + ")" + sign_char(t->sign);
  }
  return "";
}

struct VarSigns {
  bool positive = false;
  bool negative = false;
};

// Collects the signs of variable occurrences below t; sets `found` as soon as
// a negatively signed subtree holds occurrences of both signs.
VarSigns scan(const PolTypePtr& t, bool& found) {
  VarSigns here;
  switch (t->kind) {
    case TypeKind::Var:
      (t->sign == Polarity::Positive ? here.positive : here.negative) = true;
      break;
    case TypeKind::Bool:
    case TypeKind::Int:
      break;
    case TypeKind::List:
    case TypeKind::Maybe:
      here = scan(t->arg, found);
      break;
    case TypeKind::Arrow: {
      VarSigns a = scan(t->arg, found);
      VarSigns r = scan(t->res, found);
      here.positive = a.positive || r.positive;
      here.negative = a.negative || r.negative;
      break;
    }
  }
  if (t->sign == Polarity::Negative && here.positive && here.negative) found = true;
  return here;
}

}  // namespace

PolTypePtr annotate(const TypePtr& sigma) { return annotate_rec(sigma, Polarity::Positive); }

std::string render_polarity(const PolTypePtr& t) { return render_rec(t); }

bool requires_precondition(const TypePtr& sigma) {
  bool found = false;
  scan(annotate(sigma), found);
  return found;
}

}  // namespace ftgen
