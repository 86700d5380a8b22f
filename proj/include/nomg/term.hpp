#ifndef NOMG_TERM_HPP
#define NOMG_TERM_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nomg/barstring.hpp"

namespace nomg {

enum class OpKind { Pure, FreeName, BoundName };

struct OpSym {
  std::string name;
  OpKind kind = OpKind::Pure;
  int arity = 0;
  int depth = 0;
};

/// Graded signature: operation symbols with arity and depth.
class Signature {
public:
  Signature() = default;
  explicit Signature(std::vector<OpSym> ops) : ops_(std::move(ops)) {}

  void add(OpSym op) { ops_.push_back(std::move(op)); }

  const OpSym* find(const std::string& name) const {
    for (const OpSym& op : ops_)
      if (op.name == name) return &op;
    return nullptr;
  }
  const OpSym& get(const std::string& name) const {
    const OpSym* op = find(name);
    if (!op) throw std::invalid_argument("unknown operation: " + name);
    return *op;
  }
  const std::vector<OpSym>& ops() const { return ops_; }

  int max_depth() const {
    int d = 0;
    for (const OpSym& op : ops_) d = std::max(d, op.depth);
    return d;
  }

private:
  std::vector<OpSym> ops_;
};

/// Nominal term: x | f(ts) | a.g(ts) | nu a.h(ts). The head name is
/// meaningful only for FreeApp/BoundApp.
struct Term {
  enum class Kind { Var, App, FreeApp, BoundApp };

  Kind kind = Kind::Var;
  std::string op;          // operation symbol for the App kinds
  Name head;               // free name or binder
  std::vector<Term> args;
  VarRef var;              // for Kind::Var

  friend bool operator==(const Term&, const Term&) = default;
};

inline Term make_var(VarRef v) {
  Term t;
  t.kind = Term::Kind::Var;
  t.var = std::move(v);
  return t;
}
inline Term make_app(std::string op, std::vector<Term> args) {
  Term t;
  t.kind = Term::Kind::App;
  t.op = std::move(op);
  t.args = std::move(args);
  return t;
}
inline Term make_free_app(std::string op, Name a, std::vector<Term> args) {
  Term t;
  t.kind = Term::Kind::FreeApp;
  t.op = std::move(op);
  t.head = a;
  t.args = std::move(args);
  return t;
}
inline Term make_bound_app(std::string op, Name a, std::vector<Term> args) {
  Term t;
  t.kind = Term::Kind::BoundApp;
  t.op = std::move(op);
  t.head = a;
  t.args = std::move(args);
  return t;
}

inline Term act(const Perm& p, const Term& t) {
  Term r = t;
  if (t.kind == Term::Kind::Var) {
    r.var = act(p, t.var);
    return r;
  }
  if (t.kind != Term::Kind::App) r.head = p(t.head);
  for (Term& a : r.args) a = act(p, a);
  return r;
}

/// FN(t): explicit head names plus variable supports; binders remove
/// their name from the union of the argument sets.
inline NameSet free_names_term(const Term& t) {
  if (t.kind == Term::Kind::Var) return support(t.var);
  NameSet s;
  for (const Term& a : t.args) s.unite(free_names_term(a));
  if (t.kind == Term::Kind::FreeApp) s.insert(t.head);
  if (t.kind == Term::Kind::BoundApp) s.erase(t.head);
  return s;
}

/// Set of uniform depths of a term: either exactly one value, or every
/// value from `min` upward (constants of depth k inhabit every m >= k).
struct DepthSet {
  int min = 0;
  bool exact = true;

  bool contains(int m) const { return exact ? m == min : m >= min; }

  static std::optional<DepthSet> meet(std::optional<DepthSet> a,
                                      std::optional<DepthSet> b) {
    if (!a || !b) return std::nullopt;
    if (a->exact && b->exact) {
      if (a->min != b->min) return std::nullopt;
      return a;
    }
    if (a->exact) return a->min >= b->min ? a : std::nullopt;
    if (b->exact) return b->min >= a->min ? b : std::nullopt;
    return DepthSet{std::max(a->min, b->min), false};
  }
};

/// Uniform depth per the grading rules; nullopt when undefined.
inline std::optional<DepthSet> uniform_depth(const Term& t, const Signature& sig) {
  if (t.kind == Term::Kind::Var) return DepthSet{0, true};
  const OpSym* op = sig.find(t.op);
  if (!op) return std::nullopt;
  if (static_cast<int>(t.args.size()) != op->arity) return std::nullopt;
  switch (t.kind) {
    case Term::Kind::App:
      if (op->kind != OpKind::Pure) return std::nullopt;
      break;
    case Term::Kind::FreeApp:
      if (op->kind != OpKind::FreeName) return std::nullopt;
      break;
    case Term::Kind::BoundApp:
      if (op->kind != OpKind::BoundName) return std::nullopt;
      break;
    default:
      return std::nullopt;
  }
  if (t.args.empty()) return DepthSet{op->depth, false};
  std::optional<DepthSet> m = DepthSet{0, false};
  for (const Term& a : t.args) m = DepthSet::meet(m, uniform_depth(a, sig));
  if (!m) return std::nullopt;
  return DepthSet{m->min + op->depth, m->exact};
}

/// Does t admit uniform depth n over sig?
inline bool has_depth(const Term& t, const Signature& sig, int n) {
  auto d = uniform_depth(t, sig);
  return d && d->contains(n);
}

using Substitution = std::map<VarRef, Term>;

/// Literal (capture-permitting) replacement of variables. Every variable
/// occurring in t must be mapped.
inline Term substitute(const Term& t, const Substitution& sigma) {
  if (t.kind == Term::Kind::Var) {
    auto it = sigma.find(t.var);
    if (it == sigma.end())
      throw std::invalid_argument("substitute: unmapped variable " + t.var.sym);
    return it->second;
  }
  Term r = t;
  for (Term& a : r.args) a = substitute(a, sigma);
  return r;
}

/// Variables occurring in t, in first-occurrence order, deduplicated.
inline std::vector<VarRef> term_vars(const Term& t) {
  std::vector<VarRef> out;
  auto walk = [&](auto&& self, const Term& u) -> void {
    if (u.kind == Term::Kind::Var) {
      for (const VarRef& v : out)
        if (v == u.var) return;
      out.push_back(u.var);
      return;
    }
    for (const Term& a : u.args) self(self, a);
  };
  walk(walk, t);
  return out;
}

}  // namespace nomg

#endif  // NOMG_TERM_HPP
