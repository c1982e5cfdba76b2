#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ftgen/term.hpp"
#include "ftgen/type.hpp"

namespace ftgen {

// Runtime values for checking generated equations at the instance
// alpha := Int. Maybe with a null payload is Nothing.
struct Value {
  enum class Kind { Int, Bool, List, Maybe, Closure };
  using Fn = std::function<Value(const Value&)>;

  Kind kind = Kind::Int;
  long long num = 0;
  bool truth = false;
  std::vector<Value> elems;
  std::shared_ptr<Value> payload;
  Fn fn;
  std::string fn_name;  // display only
};

Value make_int(long long n);
Value make_bool(bool b);
Value make_list(std::vector<Value> elems);
Value make_nothing();
Value make_just(Value v);
Value make_closure(std::string name, Value::Fn fn);

class EvalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Structural comparison; comparing closures is an error.
bool value_equal(const Value& a, const Value& b);
std::string render_value(const Value& v);

long long as_int(const Value& v);
bool as_bool(const Value& v);
const std::vector<Value>& as_list(const Value& v);
Value apply_value(const Value& fn, const Value& arg);

using Env = std::map<std::string, Value>;

// map and fmap are pre-bound; checks additionally bind f and g.
Env base_env();

// Call-by-value interpretation. Unbound names and applying a non-closure
// raise EvalError.
Value eval(const TermPtr& t, const Env& env);

// Reader for the concrete term syntax render_term emits:
//   term := '\' ident+ '->' term | atom+
//   atom := ident | '(' term ')'
// Free identifiers must be one of f, g, map, fmap.
TermPtr parse_term(const std::string& text);

// A type together with hand-written parametric implementations of f at
// alpha := Int. Every implementation builds its results only from its
// arguments, so the generated equation must hold for it.
struct CatalogueEntry {
  std::string name;
  TypePtr sigma;
  std::vector<std::pair<std::string, Value>> f_impls;
};

const std::vector<CatalogueEntry>& catalogue();

// Deliberately non-parametric implementations; the checker must find a
// counterexample for each of them.
const std::vector<CatalogueEntry>& negative_controls();

// Catalogue entry with this exact type, or null.
const CatalogueEntry* find_entry(const TypePtr& sigma);

struct Counterexample {
  int trial = 0;
  std::string args;
  std::string lhs_value;
  std::string rhs_value;
  std::string detail;
};

struct ImplReport {
  std::string impl;
  int trials = 0;
  int failures = 0;
  std::optional<Counterexample> first_failure;
  bool passed() const { return failures == 0; }
};

struct EntryReport {
  std::string entry;
  std::string sigma;
  int trials = 0;
  unsigned long long seed = 0;
  std::vector<ImplReport> impls;
  bool passed() const;
};

// Evaluates both equation sides (and their eta-reduced forms) fully applied
// to seeded random arguments, per implementation. Identical inputs give an
// identical report.
EntryReport check_theorem(const CatalogueEntry& entry, int trials, unsigned long long seed);

std::string render_report(const EntryReport& report);

// The same report as one JSON object (canonical machine-readable form).
std::string report_records(const EntryReport& report);

}  // namespace ftgen
