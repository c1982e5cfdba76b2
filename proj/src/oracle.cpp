#include "ftgen/oracle.hpp"

#include <cctype>
#include <random>
#include <sstream>

#include "json.hpp"

#include "ftgen/generate.hpp"

namespace ftgen {

Value make_int(long long n) {
  Value v;
  v.kind = Value::Kind::Int;
  v.num = n;
  return v;
}

Value make_bool(bool b) {
  Value v;
  v.kind = Value::Kind::Bool;
  v.truth = b;
  return v;
}

Value make_list(std::vector<Value> elems) {
  Value v;
  v.kind = Value::Kind::List;
  v.elems = std::move(elems);
  return v;
}

Value make_nothing() {
  Value v;
  v.kind = Value::Kind::Maybe;
  return v;
}

Value make_just(Value inner) {
  Value v;
  v.kind = Value::Kind::Maybe;
  v.payload = std::make_shared<Value>(std::move(inner));
  return v;
}

Value make_closure(std::string name, Value::Fn fn) {
  Value v;
  v.kind = Value::Kind::Closure;
  v.fn = std::move(fn);
  v.fn_name = std::move(name);
  return v;
}

bool value_equal(const Value& a, const Value& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Value::Kind::Int:
      return a.num == b.num;
    case Value::Kind::Bool:
      return a.truth == b.truth;
    case Value::Kind::List: {
      if (a.elems.size() != b.elems.size()) return false;
      for (size_t i = 0; i < a.elems.size(); ++i) {
        if (!value_equal(a.elems[i], b.elems[i])) return false;
      }
      return true;
    }
    case Value::Kind::Maybe: {
      if (!a.payload && !b.payload) return true;
      if (!a.payload || !b.payload) return false;
      return value_equal(*a.payload, *b.payload);
    }
    case Value::Kind::Closure:
      throw EvalError("cannot compare closures for equality");
  }
  return false;
}

std::string render_value(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Int:
      return std::to_string(v.num);
    case Value::Kind::Bool:
      return v.truth ? "True" : "False";
    case Value::Kind::List: {
      std::string out = "[";
      for (size_t i = 0; i < v.elems.size(); ++i) {
        if (i) out += ", ";
        out += render_value(v.elems[i]);
      }
      return out + "]";
    }
    case Value::Kind::Maybe: {
      if (!v.payload) return "Nothing";
      std::string inner = render_value(*v.payload);
      bool parens = inner.find(' ') != std::string::npos || (!inner.empty() && inner[0] == '-');
      return parens ? "Just (" + inner + ")" : "Just " + inner;
    }
    case Value::Kind::Closure:
      return v.fn_name.empty() ? "<closure>" : v.fn_name;
  }
  return "";
}

long long as_int(const Value& v) {
  if (v.kind != Value::Kind::Int) throw EvalError("expected an Int, got " + render_value(v));
  return v.num;
}

bool as_bool(const Value& v) {
  if (v.kind != Value::Kind::Bool) throw EvalError("expected a Bool, got " + render_value(v));
  return v.truth;
}

const std::vector<Value>& as_list(const Value& v) {
  if (v.kind != Value::Kind::List) throw EvalError("expected a list, got " + render_value(v));
  return v.elems;
}

Value apply_value(const Value& fn, const Value& arg) {
  if (fn.kind != Value::Kind::Closure) {
    throw EvalError("cannot apply non-function value " + render_value(fn));
  }
  return fn.fn(arg);
}

Env base_env() {
  Env env;
  env["map"] = make_closure("map", [](const Value& f) {
    return make_closure("map _", [f](const Value& xs) {
      std::vector<Value> out;
      out.reserve(as_list(xs).size());
      for (const Value& x : as_list(xs)) out.push_back(apply_value(f, x));
      return make_list(std::move(out));
    });
  });
  env["fmap"] = make_closure("fmap", [](const Value& f) {
    return make_closure("fmap _", [f](const Value& m) {
      if (m.kind != Value::Kind::Maybe) throw EvalError("expected a Maybe, got " + render_value(m));
      if (!m.payload) return make_nothing();
      return make_just(apply_value(f, *m.payload));
    });
  });
  return env;
}

Value eval(const TermPtr& t, const Env& env) {
  switch (t->kind) {
    case TermKind::Const:
    case TermKind::Var: {
      auto it = env.find(t->name);
      if (it == env.end()) throw EvalError("unbound name '" + t->name + "'");
      return it->second;
    }
    case TermKind::Apply:
      return apply_value(eval(t->fun, env), eval(t->arg, env));
    case TermKind::Lambda: {
      Env captured = env;
      std::string var = t->name;
      TermPtr body = t->body;
      return make_closure("<fn>", [captured, var, body](const Value& arg) {
        Env inner = captured;
        inner[var] = arg;
        return eval(body, inner);
      });
    }
  }
  throw EvalError("eval: unreachable");
}

namespace {

class TermReader {
public:
  explicit TermReader(const std::string& text) : text_(text) {}

  TermPtr read() {
    TermPtr t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

private:
  TermPtr term() {
    skip_ws();
    if (peek() == '\\') {
      ++pos_;
      std::vector<std::string> binders;
      while (true) {
        skip_ws();
        if (peek() == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') break;
        binders.push_back(ident());
      }
      pos_ += 2;  // '->'
      if (binders.empty()) fail("lambda without binders");
      for (const std::string& b : binders) bound_.push_back(b);
      TermPtr body = term();
      for (size_t i = binders.size(); i-- > 0;) {
        bound_.pop_back();
        body = make_lambda(binders[i], body);
      }
      return body;
    }
    TermPtr t = atom();
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '(' || c == '\\' || std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        t = make_apply(t, c == '\\' ? term() : atom());
      } else {
        break;
      }
    }
    return t;
  }

  TermPtr atom() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      TermPtr t = term();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    std::string name = ident();
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (*it == name) return make_var(name);
    }
    if (name == "g") return make_var(name);
    if (name == "f" || name == "map" || name == "fmap") return make_const(name);
    fail("unbound identifier '" + name + "'");
    return nullptr;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_' || text_[pos_] == '\'')) {
      ++pos_;
    }
    if (start == pos_) fail("expected an identifier");
    return text_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& message) const {
    throw EvalError("term syntax error at offset " + std::to_string(pos_) + ": " + message);
  }

  std::string text_;
  size_t pos_ = 0;
  std::vector<std::string> bound_;
};

using Rng = std::mt19937_64;
using ValueGen = std::function<Value(Rng&)>;

// Explicit arithmetic instead of std distributions keeps the stream
// identical everywhere for a given seed.
long long pick(Rng& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

bool is_scalar(const TypePtr& t) { return t->kind == TypeKind::Var || t->kind == TypeKind::Int; }

ValueGen scalar_gen() {
  return [](Rng& rng) { return make_int(pick(rng, -10, 10)); };
}

ValueGen predicate_gen() {
  return [](Rng& rng) {
    long long k = pick(rng, -3, 3);
    switch (pick(rng, 0, 5)) {
      case 0:
        return make_closure("(< " + std::to_string(k) + ")",
                            [k](const Value& v) { return make_bool(as_int(v) < k); });
      case 1:
        return make_closure("(> " + std::to_string(k) + ")",
                            [k](const Value& v) { return make_bool(as_int(v) > k); });
      case 2:
        return make_closure("even", [](const Value& v) { return make_bool(as_int(v) % 2 == 0); });
      case 3:
        return make_closure("odd", [](const Value& v) { return make_bool(as_int(v) % 2 != 0); });
      case 4:
        return make_closure("const True", [](const Value&) { return make_bool(true); });
      default:
        return make_closure("const False", [](const Value&) { return make_bool(false); });
    }
  };
}

ValueGen relation_gen() {
  return [](Rng& rng) {
    int which = static_cast<int>(pick(rng, 0, 4));
    static const char* names[] = {"(<)", "(>)", "(<=)", "const2 True", "const2 False"};
    return make_closure(names[which], [which](const Value& x) {
      long long a = as_int(x);
      return make_closure("_", [which, a](const Value& y) {
        long long b = as_int(y);
        switch (which) {
          case 0: return make_bool(a < b);
          case 1: return make_bool(a > b);
          case 2: return make_bool(a <= b);
          case 3: return make_bool(true);
          default: return make_bool(false);
        }
      });
    });
  };
}

ValueGen chooser_gen() {
  return [](Rng& rng) {
    long long a = pick(rng, -10, 10);
    long long b = pick(rng, -10, 10);
    std::string name = "pick " + std::to_string(a) + " " + std::to_string(b);
    return make_closure(name,
                        [a, b](const Value& v) { return make_int(as_bool(v) ? a : b); });
  };
}

ValueGen make_generator(const TypePtr& t) {
  switch (t->kind) {
    case TypeKind::Var:
    case TypeKind::Int:
      return scalar_gen();
    case TypeKind::Bool:
      return [](Rng& rng) { return make_bool(pick(rng, 0, 1) == 1); };
    case TypeKind::List: {
      ValueGen elem = make_generator(t->arg);
      return [elem](Rng& rng) {
        long long len = pick(rng, 0, 8);
        std::vector<Value> elems;
        elems.reserve(static_cast<size_t>(len));
        for (long long i = 0; i < len; ++i) elems.push_back(elem(rng));
        return make_list(std::move(elems));
      };
    }
    case TypeKind::Maybe: {
      ValueGen elem = make_generator(t->arg);
      return [elem](Rng& rng) {
        if (pick(rng, 0, 3) == 0) return make_nothing();
        return make_just(elem(rng));
      };
    }
    case TypeKind::Arrow: {
      const TypePtr& a = t->arg;
      const TypePtr& r = t->res;
      if (is_scalar(a) && r->kind == TypeKind::Bool) return predicate_gen();
      if (is_scalar(a) && r->kind == TypeKind::Arrow && is_scalar(r->arg) &&
          r->res->kind == TypeKind::Bool) {
        return relation_gen();
      }
      if (a->kind == TypeKind::Bool && is_scalar(r)) return chooser_gen();
      throw EvalError("no argument generator for type " + render_type(t));
    }
  }
  throw EvalError("no argument generator for type " + render_type(t));
}

Value plus_three() {
  return make_closure("(+3)", [](const Value& v) { return make_int(as_int(v) + 3); });
}

Value list_closure(std::string name, std::function<std::vector<Value>(const std::vector<Value>&)> f) {
  return make_closure(std::move(name), [f](const Value& xs) { return make_list(f(as_list(xs))); });
}

CatalogueEntry rearrangers() {
  CatalogueEntry e;
  e.name = "list-rearrangement";
  e.sigma = parse_type("[a] -> [a]");
  e.f_impls.emplace_back("reverse", list_closure("reverse", [](const std::vector<Value>& xs) {
                           return std::vector<Value>(xs.rbegin(), xs.rend());
                         }));
  e.f_impls.emplace_back("identity", list_closure("identity", [](const std::vector<Value>& xs) {
                           return xs;
                         }));
  e.f_impls.emplace_back("duplicate", list_closure("duplicate", [](const std::vector<Value>& xs) {
                           std::vector<Value> out = xs;
                           out.insert(out.end(), xs.begin(), xs.end());
                           return out;
                         }));
  return e;
}

Value filter_like(std::string name, std::function<std::vector<Value>(const Value&, const std::vector<Value>&)> f) {
  return make_closure(std::move(name), [f](const Value& p) {
    return make_closure("_", [f, p](const Value& xs) { return make_list(f(p, as_list(xs))); });
  });
}

CatalogueEntry filters() {
  CatalogueEntry e;
  e.name = "list-filtering";
  e.sigma = parse_type("(a -> Bool) -> [a] -> [a]");
  e.f_impls.emplace_back("filter", filter_like("filter", [](const Value& p, const std::vector<Value>& xs) {
                           std::vector<Value> out;
                           for (const Value& x : xs) {
                             if (as_bool(apply_value(p, x))) out.push_back(x);
                           }
                           return out;
                         }));
  e.f_impls.emplace_back("take_while", filter_like("take_while", [](const Value& p, const std::vector<Value>& xs) {
                           std::vector<Value> out;
                           for (const Value& x : xs) {
                             if (!as_bool(apply_value(p, x))) break;
                             out.push_back(x);
                           }
                           return out;
                         }));
  e.f_impls.emplace_back("drop_while", filter_like("drop_while", [](const Value& p, const std::vector<Value>& xs) {
                           size_t i = 0;
                           while (i < xs.size() && as_bool(apply_value(p, xs[i]))) ++i;
                           return std::vector<Value>(xs.begin() + static_cast<long>(i), xs.end());
                         }));
  return e;
}

CatalogueEntry finders() {
  CatalogueEntry e;
  e.name = "list-search";
  e.sigma = parse_type("(a -> Bool) -> [a] -> Maybe a");
  e.f_impls.emplace_back("find_first", make_closure("find_first", [](const Value& p) {
                           return make_closure("_", [p](const Value& xs) {
                             for (const Value& x : as_list(xs)) {
                               if (as_bool(apply_value(p, x))) return make_just(x);
                             }
                             return make_nothing();
                           });
                         }));
  return e;
}

CatalogueEntry sorters() {
  CatalogueEntry e;
  e.name = "list-ordering";
  e.sigma = parse_type("(a -> a -> Bool) -> [a] -> [a]");
  e.f_impls.emplace_back("sort_by", make_closure("sort_by", [](const Value& le) {
                           return make_closure("_", [le](const Value& xs) {
                             // Stable insertion sort driven only by le.
                             std::vector<Value> out;
                             for (const Value& x : as_list(xs)) {
                               size_t i = out.size();
                               while (i > 0 &&
                                      !as_bool(apply_value(apply_value(le, out[i - 1]), x))) {
                                 --i;
                               }
                               out.insert(out.begin() + static_cast<long>(i), x);
                             }
                             return make_list(std::move(out));
                           });
                         }));
  return e;
}

CatalogueEntry selectors() {
  CatalogueEntry e;
  e.name = "list-selection";
  e.sigma = parse_type("(a -> Bool) -> (Bool -> a) -> [a] -> a");
  e.f_impls.emplace_back(
      "select_or_default", make_closure("select_or_default", [](const Value& p) {
        return make_closure("_", [p](const Value& fallback) {
          return make_closure("_", [p, fallback](const Value& xs) {
            for (const Value& x : as_list(xs)) {
              if (as_bool(apply_value(p, x))) return x;
            }
            return apply_value(fallback, make_bool(as_list(xs).empty()));
          });
        });
      }));
  return e;
}

CatalogueEntry plant_keep_zeros() {
  CatalogueEntry e;
  e.name = "plant-list-rearrangement";
  e.sigma = parse_type("[a] -> [a]");
  e.f_impls.emplace_back("keep_zeros", list_closure("keep_zeros", [](const std::vector<Value>& xs) {
                           // Inspects elements, which a parametric f cannot.
                           std::vector<Value> out;
                           for (const Value& x : xs) {
                             if (x.kind == Value::Kind::Int && x.num == 0) out.push_back(x);
                           }
                           return out;
                         }));
  return e;
}

CatalogueEntry plant_append_seven() {
  CatalogueEntry e;
  e.name = "plant-list-filtering";
  e.sigma = parse_type("(a -> Bool) -> [a] -> [a]");
  e.f_impls.emplace_back("append_seven", filter_like("append_seven", [](const Value& p, const std::vector<Value>& xs) {
                           // Conjures an element out of thin air.
                           std::vector<Value> out;
                           for (const Value& x : xs) {
                             if (as_bool(apply_value(p, x))) out.push_back(x);
                           }
                           out.push_back(make_int(7));
                           return out;
                         }));
  return e;
}

std::vector<TypePtr> argument_types(const TypePtr& sigma) {
  std::vector<TypePtr> args;
  for (TypePtr cur = sigma; cur->kind == TypeKind::Arrow; cur = cur->res) args.push_back(cur->arg);
  return args;
}

Value apply_all(Value fn, const std::vector<Value>& args) {
  for (const Value& a : args) fn = apply_value(fn, a);
  return fn;
}

std::string render_args(const std::vector<Value>& args) {
  std::string out;
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) out += "; ";
    out += "arg" + std::to_string(i + 1) + " = " + render_value(args[i]);
  }
  return out;
}

}  // namespace

TermPtr parse_term(const std::string& text) { return TermReader(text).read(); }

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> entries = {rearrangers(), filters(), finders(),
                                                      sorters(), selectors()};
  return entries;
}

const std::vector<CatalogueEntry>& negative_controls() {
  static const std::vector<CatalogueEntry> entries = {plant_keep_zeros(), plant_append_seven()};
  return entries;
}

const CatalogueEntry* find_entry(const TypePtr& sigma) {
  for (const CatalogueEntry& e : catalogue()) {
    if (equal(e.sigma, sigma)) return &e;
  }
  return nullptr;
}

bool EntryReport::passed() const {
  for (const ImplReport& r : impls) {
    if (!r.passed()) return false;
  }
  return true;
}

EntryReport check_theorem(const CatalogueEntry& entry, int trials, unsigned long long seed) {
  Theorem th = generate(entry.sigma);
  std::vector<ValueGen> gens;
  for (const TypePtr& t : argument_types(entry.sigma)) gens.push_back(make_generator(t));

  EntryReport report;
  report.entry = entry.name;
  report.sigma = render_type(entry.sigma);
  report.trials = trials;
  report.seed = seed;

  for (const auto& [impl_name, impl] : entry.f_impls) {
    ImplReport ir;
    ir.impl = impl_name;
    ir.trials = trials;

    Env env = base_env();
    env["f"] = impl;
    env["g"] = plus_three();

    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
      std::vector<Value> args;
      args.reserve(gens.size());
      for (const ValueGen& gen : gens) args.push_back(gen(rng));

      std::string detail;
      std::string lhs_shown;
      std::string rhs_shown;
      try {
        Value l = apply_all(eval(th.lhs, env), args);
        Value r = apply_all(eval(th.rhs, env), args);
        Value le = apply_all(eval(th.lhs_eta, env), args);
        Value re = apply_all(eval(th.rhs_eta, env), args);
        lhs_shown = render_value(l);
        rhs_shown = render_value(r);
        if (!value_equal(l, r)) {
          detail = "lhs != rhs";
        } else if (!value_equal(l, le)) {
          detail = "eta-reduced lhs differs";
        } else if (!value_equal(r, re)) {
          detail = "eta-reduced rhs differs";
        }
      } catch (const EvalError& e) {
        detail = e.what();
      }

      if (!detail.empty()) {
        ++ir.failures;
        if (!ir.first_failure) {
          Counterexample ce;
          ce.trial = trial;
          ce.args = render_args(args);
          ce.lhs_value = lhs_shown;
          ce.rhs_value = rhs_shown;
          ce.detail = detail;
          ir.first_failure = std::move(ce);
        }
      }
    }
    report.impls.push_back(std::move(ir));
  }
  return report;
}

std::string render_report(const EntryReport& report) {
  std::ostringstream out;
  out << "oracle: " << report.entry << " :: " << report.sigma << "  (trials=" << report.trials
      << ", seed=" << report.seed << ")\n";
  for (const ImplReport& ir : report.impls) {
    out << "  " << ir.impl << ": ";
    if (ir.passed()) {
      out << "pass (" << ir.trials << " trials)\n";
    } else {
      out << "FAIL (" << ir.failures << " of " << ir.trials << " trials)\n";
      if (ir.first_failure) {
        const Counterexample& ce = *ir.first_failure;
        out << "    first at trial " << ce.trial << ": " << ce.args;
        if (!ce.lhs_value.empty() || !ce.rhs_value.empty()) {
          out << "; lhs = " << ce.lhs_value << "; rhs = " << ce.rhs_value;
        }
        out << " (" << ce.detail << ")\n";
      }
    }
  }
  return out.str();
}

std::string report_records(const EntryReport& report) {
  nlohmann::json j;
  j["entry"] = report.entry;
  j["sigma"] = report.sigma;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["passed"] = report.passed();
  j["impls"] = nlohmann::json::array();
  for (const ImplReport& ir : report.impls) {
    nlohmann::json ji;
    ji["impl"] = ir.impl;
    ji["trials"] = ir.trials;
    ji["failures"] = ir.failures;
    ji["passed"] = ir.passed();
    if (ir.first_failure) {
      const Counterexample& ce = *ir.first_failure;
      ji["counterexample"] = {{"trial", ce.trial},
                              {"args", ce.args},
                              {"lhs", ce.lhs_value},
                              {"rhs", ce.rhs_value},
                              {"detail", ce.detail}};
    }
    j["impls"].push_back(std::move(ji));
  }
  return j.dump();
}

}  // namespace ftgen
