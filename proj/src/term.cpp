#include "ftgen/term.hpp"

#include <map>
#include <utility>
#include <vector>

namespace ftgen {

TermPtr make_const(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Const;
  t->name = std::move(name);
  return t;
}

TermPtr make_var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->name = std::move(name);
  return t;
}

TermPtr make_apply(TermPtr fun, TermPtr arg) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Apply;
  t->fun = std::move(fun);
  t->arg = std::move(arg);
  return t;
}

TermPtr make_lambda(std::string var, TermPtr body) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Lambda;
  t->name = std::move(var);
  t->body = std::move(body);
  return t;
}

bool free_in(const std::string& var, const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Const:
      return false;
    case TermKind::Var:
      return t->name == var;
    case TermKind::Apply:
      return free_in(var, t->fun) || free_in(var, t->arg);
    case TermKind::Lambda:
      return t->name != var && free_in(var, t->body);
  }
  return false;
}

namespace {

bool alpha_rec(const TermPtr& a, const TermPtr& b, std::map<std::string, int>& la,
               std::map<std::string, int>& lb, int depth) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Const:
      return a->name == b->name;
    case TermKind::Var: {
      auto ia = la.find(a->name);
      auto ib = lb.find(b->name);
      if (ia == la.end() && ib == lb.end()) return a->name == b->name;  // both free
      if (ia == la.end() || ib == lb.end()) return false;
      return ia->second == ib->second;
    }
    case TermKind::Apply:
      return alpha_rec(a->fun, b->fun, la, lb, depth) && alpha_rec(a->arg, b->arg, la, lb, depth);
    case TermKind::Lambda: {
      auto sa = la.find(a->name);
      auto sb = lb.find(b->name);
      int olda = sa == la.end() ? -1 : sa->second;
      int oldb = sb == lb.end() ? -1 : sb->second;
      la[a->name] = depth;
      lb[b->name] = depth;
      bool ok = alpha_rec(a->body, b->body, la, lb, depth + 1);
      if (olda < 0) la.erase(a->name); else la[a->name] = olda;
      if (oldb < 0) lb.erase(b->name); else lb[b->name] = oldb;
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_equal(const TermPtr& a, const TermPtr& b) {
  std::map<std::string, int> la, lb;
  return alpha_rec(a, b, la, lb, 0);
}

int node_count(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Const:
    case TermKind::Var:
      return 1;
    case TermKind::Apply:
      return 1 + node_count(t->fun) + node_count(t->arg);
    case TermKind::Lambda:
      return 1 + node_count(t->body);
  }
  return 0;
}

namespace {

// Display names are handed out in rendering order, which is exactly order of
// first appearance in the output string.
class TermPrinter {
public:
  std::string print(const TermPtr& t) {
    switch (t->kind) {
      case TermKind::Const:
        return t->name;
      case TermKind::Var:
        return display(t->name);
      case TermKind::Apply: {
        std::string fun = t->fun->kind == TermKind::Lambda ? "(" + print(t->fun) + ")"
                                                           : print(t->fun);
        bool parens = t->arg->kind == TermKind::Apply || t->arg->kind == TermKind::Lambda;
        std::string arg = parens ? "(" + print(t->arg) + ")" : print(t->arg);
        return fun + " " + arg;
      }
      case TermKind::Lambda: {
        std::vector<std::pair<std::string, std::string>> shadowed;
        std::string head = "\\" + bind(t->name, shadowed);
        TermPtr body = t->body;
        while (body->kind == TermKind::Lambda) {
          head += " " + bind(body->name, shadowed);
          body = body->body;
        }
        std::string out = head + " -> " + print(body);
        // Restore what the chain shadowed, innermost first.
        for (auto it = shadowed.rbegin(); it != shadowed.rend(); ++it) {
          if (it->second.empty()) {
            names_.erase(it->first);
          } else {
            names_[it->first] = it->second;
          }
        }
        return out;
      }
    }
    return "";
  }

private:
  std::string bind(const std::string& internal,
                   std::vector<std::pair<std::string, std::string>>& shadowed) {
    auto it = names_.find(internal);
    shadowed.emplace_back(internal, it == names_.end() ? "" : it->second);
    std::string shown = "x" + std::to_string(++next_);
    names_[internal] = shown;
    return shown;
  }

  std::string display(const std::string& internal) {
    auto it = names_.find(internal);
    return it == names_.end() ? internal : it->second;
  }

  std::map<std::string, std::string> names_;
  int next_ = 0;
};

class FuncPrinter {
public:
  std::string print(const FuncPtr& f) {
    switch (f->kind) {
      case FuncKind::Id:
        return "id";
      case FuncKind::Mapped: {
        const FuncPtr& in = f->inner;
        bool parens = in->kind == FuncKind::Mapped || in->kind == FuncKind::Compose;
        std::string arg = parens ? "(" + print(in) + ")" : print(in);
        return f->functor + " " + arg;
      }
      case FuncKind::Compose: {
        // Sequenced explicitly: name handout must follow appearance order.
        std::string left = print(f->left);
        std::string right = print(f->right);
        return left + " . " + right;
      }
      case FuncKind::Binder: {
        std::string shown = "h" + std::to_string(++next_);
        names_[f->hole] = shown;
        return "(\\" + shown + " -> " + print(f->body) + ")";
      }
      case FuncKind::Hole: {
        auto it = names_.find(f->hole);
        return it == names_.end() ? "h?" + std::to_string(f->hole) : it->second;
      }
      case FuncKind::Embed: {
        std::string s = terms_.print(f->payload);
        bool parens = f->payload->kind == TermKind::Apply || f->payload->kind == TermKind::Lambda;
        return parens ? "(" + s + ")" : s;
      }
    }
    return "";
  }

private:
  std::map<int, std::string> names_;
  TermPrinter terms_;
  int next_ = 0;
};

}  // namespace

std::string render_term(const TermPtr& t) { return TermPrinter().print(t); }

FuncPtr func_id() {
  static const FuncPtr f = [] {
    auto p = std::make_shared<Func>();
    p->kind = FuncKind::Id;
    return p;
  }();
  return f;
}

FuncPtr func_mapped(std::string functor, FuncPtr inner) {
  auto f = std::make_shared<Func>();
  f->kind = FuncKind::Mapped;
  f->functor = std::move(functor);
  f->inner = std::move(inner);
  return f;
}

FuncPtr func_compose(FuncPtr left, FuncPtr right) {
  auto f = std::make_shared<Func>();
  f->kind = FuncKind::Compose;
  f->left = std::move(left);
  f->right = std::move(right);
  return f;
}

FuncPtr func_binder(int hole, FuncPtr body) {
  auto f = std::make_shared<Func>();
  f->kind = FuncKind::Binder;
  f->hole = hole;
  f->body = std::move(body);
  return f;
}

FuncPtr func_hole(int hole) {
  auto f = std::make_shared<Func>();
  f->kind = FuncKind::Hole;
  f->hole = hole;
  return f;
}

FuncPtr func_embed(TermPtr payload) {
  auto f = std::make_shared<Func>();
  f->kind = FuncKind::Embed;
  f->payload = std::move(payload);
  return f;
}

std::string render_func(const FuncPtr& f) { return FuncPrinter().print(f); }

}  // namespace ftgen
