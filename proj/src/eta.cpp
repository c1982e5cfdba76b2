#include "ftgen/eta.hpp"

#include <cassert>

namespace ftgen {

namespace {

TermPtr pass(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Const:
    case TermKind::Var:
      return t;
    case TermKind::Apply: {
      TermPtr fun = pass(t->fun);
      TermPtr arg = pass(t->arg);
      return (fun == t->fun && arg == t->arg) ? t : make_apply(fun, arg);
    }
    case TermKind::Lambda: {
      TermPtr body = pass(t->body);
      if (body->kind == TermKind::Apply && body->arg->kind == TermKind::Var &&
          body->arg->name == t->name && !free_in(t->name, body->fun)) {
        return body->fun;
      }
      return body == t->body ? t : make_lambda(t->name, body);
    }
  }
  return t;
}

}  // namespace

TermPtr eta_reduce(const TermPtr& t) {
  // Reducing bottom-up reaches a fixpoint in one pass; the loop is a cheap
  // safety net and must exit on its first check.
  TermPtr cur = pass(t);
  for (TermPtr next = pass(cur); next != cur; next = pass(cur)) {
    assert(false && "eta_reduce: single pass was not a fixpoint");
    cur = next;
  }
  return cur;
}

}  // namespace ftgen
