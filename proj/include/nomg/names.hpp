#ifndef NOMG_NAMES_HPP
#define NOMG_NAMES_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace nomg {

/// An atom of the countably infinite name universe. Names are totally
/// ordered by index; index order is what makes canonical forms and
/// fresh-name choices deterministic.
struct Name {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Name, Name) = default;
};

inline std::string to_string(Name a) { return "n" + std::to_string(a.index); }

/// Sorted duplicate-free set of names. Small value type; all operations
/// are pure.
class NameSet {
public:
  NameSet() = default;
  NameSet(std::initializer_list<Name> xs) : v_(xs) { normalize(); }
  explicit NameSet(std::vector<Name> xs) : v_(std::move(xs)) { normalize(); }

  bool contains(Name a) const {
    return std::binary_search(v_.begin(), v_.end(), a);
  }
  bool empty() const { return v_.empty(); }
  std::size_t size() const { return v_.size(); }

  void insert(Name a) {
    auto it = std::lower_bound(v_.begin(), v_.end(), a);
    if (it == v_.end() || *it != a) v_.insert(it, a);
  }
  void erase(Name a) {
    auto it = std::lower_bound(v_.begin(), v_.end(), a);
    if (it != v_.end() && *it == a) v_.erase(it);
  }
  void unite(const NameSet& o) {
    for (Name a : o.v_) insert(a);
  }

  NameSet united(const NameSet& o) const {
    NameSet r = *this;
    r.unite(o);
    return r;
  }
  NameSet minus(const NameSet& o) const {
    NameSet r;
    for (Name a : v_)
      if (!o.contains(a)) r.v_.push_back(a);
    return r;
  }

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<Name>& items() const { return v_; }

  friend bool operator==(const NameSet&, const NameSet&) = default;

private:
  void normalize() {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  }
  std::vector<Name> v_;
};

/// Least name (by index) not in `avoid`.
inline Name fresh(const NameSet& avoid) {
  std::uint32_t i = 0;
  for (Name a : avoid) {
    if (a.index != i) break;
    ++i;
  }
  return Name{i};
}

/// Finite permutation of the name universe, stored as the sparse
/// bijection on its support. Fixed points are normalized away, so two
/// permutations are equal iff their maps are.
class Perm {
public:
  Perm() = default;

  static Perm swap(Name a, Name b) {
    Perm p;
    if (a != b) {
      p.map_ = {{std::min(a, b), std::max(a, b)}, {std::max(a, b), std::min(a, b)}};
      std::sort(p.map_.begin(), p.map_.end());
    }
    return p;
  }

  Name operator()(Name a) const {
    auto it = std::lower_bound(map_.begin(), map_.end(), a,
                               [](const auto& e, Name x) { return e.first < x; });
    return (it != map_.end() && it->first == a) ? it->second : a;
  }

  bool is_identity() const { return map_.empty(); }

  /// Names moved by the permutation.
  NameSet moved() const {
    NameSet s;
    for (const auto& [a, b] : map_) s.insert(a);
    return s;
  }

  Perm inverse() const {
    Perm p;
    p.map_.reserve(map_.size());
    for (const auto& [a, b] : map_) p.map_.emplace_back(b, a);
    std::sort(p.map_.begin(), p.map_.end());
    return p;
  }

  /// Composition: (p * q)(a) = p(q(a)).
  friend Perm operator*(const Perm& p, const Perm& q) {
    NameSet dom = p.moved().united(q.moved());
    Perm r;
    for (Name a : dom) {
      Name b = p(q(a));
      if (b != a) r.map_.emplace_back(a, b);
    }
    std::sort(r.map_.begin(), r.map_.end());
    return r;
  }

  /// Extends the partial injection from[i] -> to[i] (both tuples
  /// duplicate-free) to a finite permutation: leftover targets are sent
  /// back onto leftover sources in sorted order.
  static Perm extending(const std::vector<Name>& from, const std::vector<Name>& to) {
    Perm r;
    NameSet src, tgt;
    for (std::size_t i = 0; i < from.size(); ++i) {
      src.insert(from[i]);
      tgt.insert(to[i]);
    }
    std::vector<Name> leftoverSrc, leftoverTgt;
    for (Name a : src)
      if (!tgt.contains(a)) leftoverSrc.push_back(a);
    for (Name b : tgt)
      if (!src.contains(b)) leftoverTgt.push_back(b);
    for (std::size_t i = 0; i < from.size(); ++i)
      if (from[i] != to[i]) r.map_.emplace_back(from[i], to[i]);
    for (std::size_t i = 0; i < leftoverTgt.size(); ++i)
      if (leftoverTgt[i] != leftoverSrc[i]) r.map_.emplace_back(leftoverTgt[i], leftoverSrc[i]);
    std::sort(r.map_.begin(), r.map_.end());
    return r;
  }

  friend bool operator==(const Perm&, const Perm&) = default;

private:
  std::vector<std::pair<Name, Name>> map_;  // sorted by first, no fixed points
};

// Action and support for the base kinds. Further kinds (bar strings,
// terms, ...) overload these in their own headers.

inline Name act(const Perm& p, Name a) { return p(a); }

inline std::vector<Name> act(const Perm& p, const std::vector<Name>& xs) {
  std::vector<Name> r;
  r.reserve(xs.size());
  for (Name a : xs) r.push_back(p(a));
  return r;
}

inline NameSet act(const Perm& p, const NameSet& s) {
  std::vector<Name> r;
  r.reserve(s.size());
  for (Name a : s) r.push_back(p(a));
  return NameSet(std::move(r));
}

inline NameSet support(Name a) { return NameSet{a}; }

inline NameSet support(const std::vector<Name>& xs) {
  return NameSet(std::vector<Name>(xs));
}

inline NameSet support(const NameSet& s) { return s; }

/// Name abstraction <binder>body; equality is alpha-equality. Works for
/// any body type with act/support overloads and operator==.
template <class T>
struct Abstraction {
  Name binder;
  T body;

  friend bool operator==(const Abstraction& p, const Abstraction& q) {
    if (p.binder == q.binder) return p.body == q.body;
    if (support(p.body).contains(q.binder)) return false;
    return q.body == act(Perm::swap(p.binder, q.binder), p.body);
  }
};

template <class T>
Abstraction<T> act(const Perm& p, const Abstraction<T>& x) {
  return Abstraction<T>{p(x.binder), act(p, x.body)};
}

template <class T>
NameSet support(const Abstraction<T>& x) {
  NameSet s = support(x.body);
  s.erase(x.binder);
  return s;
}

/// abs_eq spelled out as a named operation; same relation as operator==.
template <class T>
bool abs_eq(const Abstraction<T>& p, const Abstraction<T>& q) {
  return p == q;
}

}  // namespace nomg

template <>
struct std::hash<nomg::Name> {
  std::size_t operator()(nomg::Name a) const noexcept {
    return std::hash<std::uint32_t>{}(a.index);
  }
};

#endif  // NOMG_NAMES_HPP
