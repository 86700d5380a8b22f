#ifndef NOMG_THEORY_HPP
#define NOMG_THEORY_HPP

#include <optional>
#include <string>
#include <vector>

#include "nomg/term.hpp"

namespace nomg {

/// Axiom schema: template variables (bare symbols, arities chosen at
/// instantiation time) plus representative left/right terms of one
/// uniform depth.
struct Axiom {
  std::string id;
  int depth = 0;
  std::vector<std::string> vars;
  Term lhs;
  Term rhs;
};

enum class TheoryKind { Tr, Bar, Loc, Generic };

struct Theory {
  TheoryKind kind = TheoryKind::Generic;
  std::string name;
  Signature sig;
  std::vector<Axiom> axioms;

  const Axiom* find_axiom(const std::string& id) const {
    for (const Axiom& ax : axioms)
      if (ax.id == id) return &ax;
    return nullptr;
  }
  const Axiom* axiom_at(std::size_t i) const {
    return i < axioms.size() ? &axioms[i] : nullptr;
  }
};

namespace detail {

inline Term tvar(const std::string& s) { return make_var(VarRef{s, {}}); }

inline Term plus(Term a, Term b) {
  return make_app("+", {std::move(a), std::move(b)});
}
inline Term zero() { return make_app("0", {}); }
inline Term pre(Name a, Term t) { return make_free_app("pre", a, {std::move(t)}); }
inline Term abs(Name a, Term t) { return make_bound_app("abs", a, {std::move(t)}); }

inline std::vector<Axiom> semilattice_axioms() {
  const Name a{0};
  std::vector<Axiom> e;
  e.push_back({"unit", 0, {"x"}, plus(tvar("x"), zero()), tvar("x")});
  e.push_back({"idem", 0, {"x"}, plus(tvar("x"), tvar("x")), tvar("x")});
  e.push_back({"comm", 0, {"x", "y"}, plus(tvar("x"), tvar("y")), plus(tvar("y"), tvar("x"))});
  e.push_back({"assoc", 0, {"x", "y", "z"},
               plus(plus(tvar("x"), tvar("y")), tvar("z")),
               plus(tvar("x"), plus(tvar("y"), tvar("z")))});
  e.push_back({"distr-pre", 1, {"x", "y"}, pre(a, plus(tvar("x"), tvar("y"))),
               plus(pre(a, tvar("x")), pre(a, tvar("y")))});
  e.push_back({"zero-pre", 1, {}, pre(a, zero()), zero()});
  e.push_back({"distr-abs", 1, {"x", "y"}, abs(a, plus(tvar("x"), tvar("y"))),
               plus(abs(a, tvar("x")), abs(a, tvar("y")))});
  e.push_back({"zero-abs", 1, {}, abs(a, zero()), zero()});
  return e;
}

}  // namespace detail

/// Sigma^tr: pre and abs only; the empty theory. Uniform-depth terms are
/// exactly pretraces.
inline Theory theory_tr() {
  Theory t;
  t.kind = TheoryKind::Tr;
  t.name = "tr";
  t.sig = Signature({{"pre", OpKind::FreeName, 1, 1}, {"abs", OpKind::BoundName, 1, 1}});
  return t;
}

/// T^bar: join semilattice plus distributivity of both prefix operations
/// over sums (bar language semantics).
inline Theory theory_bar() {
  Theory t;
  t.kind = TheoryKind::Bar;
  t.name = "bar";
  t.sig = Signature({{"0", OpKind::Pure, 0, 0},
                     {"+", OpKind::Pure, 2, 0},
                     {"pre", OpKind::FreeName, 1, 1},
                     {"abs", OpKind::BoundName, 1, 1}});
  t.axioms = detail::semilattice_axioms();
  return t;
}

/// T^loc: T^bar plus a.pre(x) + nu a.abs(x) = nu a.abs(x) (every bound
/// name subsumes the corresponding free name).
inline Theory theory_loc() {
  Theory t = theory_bar();
  t.kind = TheoryKind::Loc;
  t.name = "loc";
  const Name a{0};
  t.axioms.push_back({"loc", 1, {"x"},
                      detail::plus(detail::pre(a, detail::tvar("x")),
                                   detail::abs(a, detail::tvar("x"))),
                      detail::abs(a, detail::tvar("x"))});
  return t;
}

}  // namespace nomg

#endif  // NOMG_THEORY_HPP
