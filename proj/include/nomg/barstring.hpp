#ifndef NOMG_BARSTRING_HPP
#define NOMG_BARSTRING_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "nomg/names.hpp"

namespace nomg {

/// One letter of the extended alphabet: a plain name or a bar-prefixed
/// (bound) name.
struct BarLetter {
  bool bar = false;
  Name name;

  friend constexpr auto operator<=>(const BarLetter&, const BarLetter&) = default;
};

inline BarLetter free_letter(Name a) { return BarLetter{false, a}; }
inline BarLetter bound_letter(Name a) { return BarLetter{true, a}; }

using BarString = std::vector<BarLetter>;
using DataWord = std::vector<Name>;

/// A context variable: symbol applied to a tuple of pairwise distinct
/// names (strong nominal set element). The unit variable is the reserved
/// symbol "*" with an empty tuple.
struct VarRef {
  std::string sym = "*";
  std::vector<Name> args;

  bool is_unit() const { return sym == "*"; }

  friend auto operator<=>(const VarRef&, const VarRef&) = default;
};

inline VarRef unit_var() { return VarRef{}; }

/// Bar string followed by a poststate variable.
struct Pretrace {
  BarString word;
  VarRef tail;

  std::size_t length() const { return word.size(); }

  friend auto operator<=>(const Pretrace&, const Pretrace&) = default;
};

inline BarLetter act(const Perm& p, const BarLetter& l) {
  return BarLetter{l.bar, p(l.name)};
}

inline BarString act(const Perm& p, const BarString& w) {
  BarString r;
  r.reserve(w.size());
  for (const BarLetter& l : w) r.push_back(act(p, l));
  return r;
}

inline VarRef act(const Perm& p, const VarRef& v) {
  return VarRef{v.sym, act(p, v.args)};
}

inline Pretrace act(const Perm& p, const Pretrace& w) {
  return Pretrace{act(p, w.word), act(p, w.tail)};
}

inline NameSet support(const VarRef& v) { return support(v.args); }

/// Free names FN(w): FN(eps) = {}, FN(aw) = {a} u FN(w),
/// FN(|aw) = FN(w) \ {a}. Tail variable support counts as free.
inline NameSet free_names(const Pretrace& w) {
  NameSet fn = support(w.tail);
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    if (it->bar)
      fn.erase(it->name);
    else
      fn.insert(it->name);
  }
  return fn;
}

inline NameSet free_names(const BarString& w) {
  return free_names(Pretrace{w, unit_var()});
}

/// The support of the alpha-class of a pretrace is FN(w).
inline NameSet support(const Pretrace& w) { return free_names(w); }
inline NameSet support(const BarString& w) { return free_names(w); }

/// Removes all bars, yielding a data word.
inline DataWord ub(const BarString& w) {
  DataWord r;
  r.reserve(w.size());
  for (const BarLetter& l : w) r.push_back(l.name);
  return r;
}

/// All bound names mutually distinct and distinct from all free names of
/// the whole string.
inline bool is_clean(const BarString& w) {
  NameSet fn = free_names(w);
  NameSet seen;
  for (const BarLetter& l : w) {
    if (!l.bar) continue;
    if (seen.contains(l.name) || fn.contains(l.name)) return false;
    seen.insert(l.name);
  }
  return true;
}

namespace detail {

inline bool alpha_eq_at(const Pretrace& w, const Pretrace& v, std::size_t i) {
  // Structural four-case recursion (standard characterization of
  // alpha-equivalence on pretraces); positions before i are already
  // matched and untouched by later swaps.
  if (i == w.word.size()) return w.tail == v.tail;
  const BarLetter a = w.word[i];
  const BarLetter b = v.word[i];
  if (!a.bar && !b.bar) {
    return a.name == b.name && alpha_eq_at(w, v, i + 1);
  }
  if (a.bar && b.bar) {
    if (a.name == b.name) return alpha_eq_at(w, v, i + 1);
    Pretrace vs{BarString(v.word.begin() + static_cast<long>(i) + 1, v.word.end()), v.tail};
    if (free_names(vs).contains(a.name)) return false;
    Pretrace ws{BarString(w.word.begin() + static_cast<long>(i) + 1, w.word.end()), w.tail};
    return alpha_eq_at(ws, act(Perm::swap(a.name, b.name), vs), 0);
  }
  return false;
}

}  // namespace detail

/// Decides w =alpha v. Both sides must have the same length.
inline bool alpha_eq(const Pretrace& w, const Pretrace& v) {
  if (w.word.size() != v.word.size())
    throw std::invalid_argument("alpha_eq: length mismatch");
  return detail::alpha_eq_at(w, v, 0);
}

inline bool alpha_eq(const BarString& w, const BarString& v) {
  return alpha_eq(Pretrace{w, unit_var()}, Pretrace{v, unit_var()});
}

/// Canonical alpha-class representative. Scans left to right; each
/// binder |a with remaining suffix s is replaced by the least name c with
/// c = a or c not free in s, the suffix rewritten by (a c). Idempotent,
/// and equal canonical forms characterize alpha-equivalence.
inline Pretrace canonicalize(Pretrace w) {
  for (std::size_t i = 0; i < w.word.size(); ++i) {
    if (!w.word[i].bar) continue;
    const Name a = w.word[i].name;
    Pretrace suffix{BarString(w.word.begin() + static_cast<long>(i) + 1, w.word.end()), w.tail};
    NameSet fn = free_names(suffix);
    Name c{0};
    while (c != a && fn.contains(c)) ++c.index;
    if (c != a) {
      suffix = act(Perm::swap(a, c), suffix);
      std::copy(suffix.word.begin(), suffix.word.end(),
                w.word.begin() + static_cast<long>(i) + 1);
      w.tail = suffix.tail;
    }
    w.word[i].name = c;
  }
  return w;
}

inline BarString canonicalize(const BarString& w) {
  return canonicalize(Pretrace{w, unit_var()}).word;
}

}  // namespace nomg

#endif  // NOMG_BARSTRING_HPP
