#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "wmb/rational.hpp"

namespace wmb {

using Key = std::int64_t;

// Finite-support rational combination of basis keys of A^{(x) N}.
// Zero coefficients are never stored.
template <int N>
struct El {
  using KeyN = std::array<Key, N>;
  std::map<KeyN, Rat> c;

  El() = default;

  static El unit(const KeyN& k) {
    El e;
    e.c.emplace(k, 1);
    return e;
  }

  bool is_zero() const { return c.empty(); }

  void add(const KeyN& k, const Rat& v) {
    if (v == 0) return;
    auto it = c.find(k);
    if (it == c.end()) {
      c.emplace(k, v);
    } else {
      it->second += v;
      if (it->second == 0) c.erase(it);
    }
  }

  El& operator+=(const El& o) {
    for (const auto& [k, v] : o.c) add(k, v);
    return *this;
  }
  El& operator-=(const El& o) {
    for (const auto& [k, v] : o.c) add(k, -v);
    return *this;
  }
  El& operator*=(const Rat& s) {
    if (s == 0) {
      c.clear();
      return *this;
    }
    for (auto& [k, v] : c) v *= s;
    return *this;
  }
  friend El operator+(El a, const El& b) { return a += b; }
  friend El operator-(El a, const El& b) { return a -= b; }
  friend El operator*(const Rat& s, El a) { return a *= s; }
  bool operator==(const El& o) const { return c == o.c; }
};

using El1 = El<1>;
using El2 = El<2>;
using El3 = El<3>;

inline El1 el1(Key k) { return El1::unit({k}); }
inline El2 el2(Key a, Key b) { return El2::unit({a, b}); }
inline El3 el3(Key a, Key b, Key c) { return El3::unit({a, b, c}); }

inline El2 tens(const El1& a, const El1& b) {
  El2 r;
  for (const auto& [ka, va] : a.c)
    for (const auto& [kb, vb] : b.c) r.add({ka[0], kb[0]}, va * vb);
  return r;
}

inline El3 tens(const El2& a, const El1& b) {
  El3 r;
  for (const auto& [ka, va] : a.c)
    for (const auto& [kb, vb] : b.c) r.add({ka[0], ka[1], kb[0]}, va * vb);
  return r;
}

inline El3 tens(const El1& a, const El2& b) {
  El3 r;
  for (const auto& [ka, va] : a.c)
    for (const auto& [kb, vb] : b.c) r.add({ka[0], kb[0], kb[1]}, va * vb);
  return r;
}

inline El2 tw(const El2& a) {
  El2 r;
  for (const auto& [k, v] : a.c) r.add({k[1], k[0]}, v);
  return r;
}

// Legs of an El3: 0-indexed positions.
inline El3 perm3(const El3& a, int p0, int p1, int p2) {
  El3 r;
  for (const auto& [k, v] : a.c) r.add({k[p0], k[p1], k[p2]}, v);
  return r;
}

}  // namespace wmb
