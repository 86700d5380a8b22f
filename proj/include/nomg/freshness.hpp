#ifndef NOMG_FRESHNESS_HPP
#define NOMG_FRESHNESS_HPP

#include <stdexcept>
#include <vector>

#include "nomg/barstring.hpp"

namespace nomg {

namespace detail {

inline Pretrace drop_head(const Pretrace& w) {
  return Pretrace{BarString(w.word.begin() + 1, w.word.end()), w.tail};
}

/// (u, tail) in D([w]); the query tail is compared against w's
/// (swap-rewritten) tail once all letters are consumed.
inline bool d_pair_member(const DataWord& u, std::size_t i, const VarRef& tail,
                          Pretrace w) {
  for (;;) {
    if (i == u.size()) return tail == w.tail;
    const BarLetter head = w.word[0];
    const Name b = u[i];
    if (!head.bar) {
      if (head.name != b) return false;
      w = drop_head(w);
    } else if (head.name == b) {
      w = drop_head(w);
    } else {
      Pretrace rest = drop_head(w);
      if (free_names(rest).contains(b)) return false;
      w = act(Perm::swap(head.name, b), rest);
    }
    ++i;
  }
}

}  // namespace detail

/// Local-freshness membership: u . w.tail in D([w]).
inline bool d_member(const DataWord& u, const Pretrace& w) {
  if (u.size() != w.length())
    throw std::invalid_argument("d_member: length mismatch");
  return detail::d_pair_member(u, 0, w.tail, w);
}

inline bool d_member(const DataWord& u, const BarString& w) {
  return d_member(u, Pretrace{w, unit_var()});
}

/// Membership of an explicit (data word, tail) pair in D([w]). Used for
/// inclusion witnesses where the tail may differ from w's own.
inline bool d_pair_member(const DataWord& u, const VarRef& tail, const Pretrace& w) {
  if (u.size() != w.length())
    throw std::invalid_argument("d_pair_member: length mismatch");
  return detail::d_pair_member(u, 0, tail, w);
}

/// Global-freshness membership: u in N([w]). Some clean w' =alpha w has
/// ub(w') = u; the candidate w' is forced position-wise by u and w's bar
/// pattern.
inline bool n_member(const DataWord& u, const BarString& w) {
  if (u.size() != w.size())
    throw std::invalid_argument("n_member: length mismatch");
  BarString cand;
  cand.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) cand.push_back(BarLetter{w[i].bar, u[i]});
  return is_clean(cand) && alpha_eq(cand, w);
}

namespace detail {

inline void check_uniform(const Pretrace& w, const std::vector<Pretrace>& s) {
  for (const Pretrace& v : s)
    if (v.length() != w.length())
      throw std::invalid_argument("d_leq: length mismatch in pretrace set");
}

}  // namespace detail

/// Decides D([w]) <= Union_{v in S} D([v]), equivalently derivability of
/// w <= Sum S in the local-freshness theory. Recursion:
///   depth 0          w.tail occurs in S
///   w = a w'         strip a: keep tails of a-headed and |a-headed
///                    elements, plus (a b)-swapped tails of |b-headed
///                    elements with a not free in the tail
///   w = |a w'        rename the binder to a fresh c that heads nothing
///                    in S, keep (b c)-swapped tails of |b-headed
///                    elements with c not free in the tail
inline bool d_leq(const Pretrace& w, const std::vector<Pretrace>& s) {
  detail::check_uniform(w, s);
  if (w.length() == 0) {
    for (const Pretrace& v : s)
      if (v.tail == w.tail) return true;
    return false;
  }
  const BarLetter head = w.word[0];
  const Pretrace rest = detail::drop_head(w);
  std::vector<Pretrace> next;
  if (!head.bar) {
    const Name a = head.name;
    for (const Pretrace& v : s) {
      const BarLetter h = v.word[0];
      const Pretrace vrest = detail::drop_head(v);
      if (!h.bar && h.name == a) {
        next.push_back(vrest);
      } else if (h.bar && h.name == a) {
        next.push_back(vrest);
      } else if (h.bar && !free_names(vrest).contains(a)) {
        next.push_back(act(Perm::swap(a, h.name), vrest));
      }
    }
    return d_leq(rest, next);
  }
  const Name a = head.name;
  NameSet avoid = free_names(rest);
  avoid.insert(a);
  for (const Pretrace& v : s) avoid.insert(v.word[0].name);
  const Name c = fresh(avoid);
  for (const Pretrace& v : s) {
    const BarLetter h = v.word[0];
    if (!h.bar) continue;
    const Pretrace vrest = detail::drop_head(v);
    if (free_names(vrest).contains(c)) continue;
    next.push_back(act(Perm::swap(h.name, c), vrest));
  }
  return d_leq(act(Perm::swap(a, c), rest), next);
}

/// For every w in S: D([w]) <= Union D(T).
inline bool d_set_leq(const std::vector<Pretrace>& s, const std::vector<Pretrace>& t) {
  for (const Pretrace& w : s)
    if (!d_leq(w, t)) return false;
  return true;
}

/// Mutual inclusion; decides derivable equality of pretrace sets in the
/// local-freshness theory.
inline bool d_set_eq(const std::vector<Pretrace>& s, const std::vector<Pretrace>& t) {
  return d_set_leq(s, t) && d_set_leq(t, s);
}

}  // namespace nomg

#endif  // NOMG_FRESHNESS_HPP
