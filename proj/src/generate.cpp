#include "ftgen/generate.hpp"

#include <cassert>
#include <stdexcept>

#include "ftgen/eta.hpp"
#include "ftgen/polarity.hpp"

namespace ftgen {

FuncPtr mono(const TypePtr& sigma, const FuncPtr& pre, const FuncPtr& post, int& next_hole) {
  switch (sigma->kind) {
    case TypeKind::Var:
      return post;
    case TypeKind::Bool:
    case TypeKind::Int:
      return func_id();
    case TypeKind::List:
      return func_mapped("map", mono(sigma->arg, pre, post, next_hole));
    case TypeKind::Maybe:
      return func_mapped("fmap", mono(sigma->arg, pre, post, next_hole));
    case TypeKind::Arrow: {
      int h = ++next_hole;
      FuncPtr res = mono(sigma->res, pre, post, next_hole);
      FuncPtr arg = mono(sigma->arg, post, pre, next_hole);  // sides swap
      return func_binder(h, func_compose(res, func_compose(func_hole(h), arg)));
    }
  }
  throw std::logic_error("mono: unreachable");
}

bool is_id(const FuncPtr& f) {
  switch (f->kind) {
    case FuncKind::Id:
      return true;
    case FuncKind::Mapped:
      return is_id(f->inner);
    case FuncKind::Compose:
      return is_id(f->left) && is_id(f->right);
    default:
      return false;
  }
}

std::optional<TermPtr> is_simple(const FuncPtr& f) {
  if (f->kind == FuncKind::Embed && f->payload->kind == TermKind::Var) {
    return f->payload;
  }
  if (f->kind == FuncKind::Mapped) {
    if (auto inner = is_simple(f->inner)) {
      return make_apply(make_const(f->functor), *inner);
    }
  }
  return std::nullopt;
}

namespace {

// Replaces the single Hole carrying `hole` with an embedded term. Holes are
// linear, so exactly one site changes.
FuncPtr fill_hole(const FuncPtr& f, int hole, const TermPtr& t) {
  switch (f->kind) {
    case FuncKind::Id:
    case FuncKind::Embed:
      return f;
    case FuncKind::Mapped: {
      FuncPtr inner = fill_hole(f->inner, hole, t);
      return inner == f->inner ? f : func_mapped(f->functor, inner);
    }
    case FuncKind::Compose: {
      FuncPtr l = fill_hole(f->left, hole, t);
      FuncPtr r = fill_hole(f->right, hole, t);
      return (l == f->left && r == f->right) ? f : func_compose(l, r);
    }
    case FuncKind::Binder: {
      FuncPtr body = fill_hole(f->body, hole, t);
      return body == f->body ? f : func_binder(f->hole, body);
    }
    case FuncKind::Hole:
      return f->hole == hole ? func_embed(t) : f;
  }
  return f;
}

std::string fresh_var(int& next_var) { return "v" + std::to_string(++next_var); }

}  // namespace

TermPtr simplify_apply(const FuncPtr& f, const TermPtr& t, int& next_var) {
  if (is_id(f)) return t;
  if (auto simple = is_simple(f)) return make_apply(*simple, t);
  switch (f->kind) {
    case FuncKind::Mapped: {
      std::string v = fresh_var(next_var);
      TermPtr body = simplify_apply(f->inner, make_var(v), next_var);
      return make_apply(make_apply(make_const(f->functor), make_lambda(v, body)), t);
    }
    case FuncKind::Binder: {
      FuncPtr filled = fill_hole(f->body, f->hole, t);
      std::string v = fresh_var(next_var);
      return make_lambda(v, simplify_apply(filled, make_var(v), next_var));
    }
    case FuncKind::Compose:
      return simplify_apply(f->left, simplify_apply(f->right, t, next_var), next_var);
    case FuncKind::Embed:
      return make_apply(f->payload, t);
    case FuncKind::Hole:
      throw std::logic_error("simplify_apply: unfilled hole");
    case FuncKind::Id:
      break;  // handled by is_id above
  }
  throw std::logic_error("simplify_apply: unreachable");
}

Theorem generate(const TypePtr& sigma) {
  Theorem th;
  th.sigma = sigma;

  int holes = 0;
  th.e_term = mono(sigma, func_embed(make_const("pre")), func_embed(make_const("post")), holes);

  const TermPtr f = make_const("f");
  const FuncPtr g = func_embed(make_var("g"));

  holes = 0;
  int vars = 0;
  th.lhs = simplify_apply(mono(sigma, func_id(), g, holes), f, vars);

  holes = 0;
  vars = 0;
  th.rhs = simplify_apply(mono(sigma, g, func_id(), holes), f, vars);

  th.lhs_eta = eta_reduce(th.lhs);
  th.rhs_eta = eta_reduce(th.rhs);
  th.fully_general = !requires_precondition(sigma);
  return th;
}

}  // namespace ftgen
