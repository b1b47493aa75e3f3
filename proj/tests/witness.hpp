#pragma once

// Re-verifies a failing verdict's witness from first principles, using only
// element arithmetic and the brute-force oracles.

#include <string>

#include "oracles.hpp"
#include "peirce/analysis.hpp"
#include "peirce/verdict.hpp"

namespace witness {

using peirce::Element;
using peirce::associator;

/// True iff the witness demonstrates a genuine violation of its relation.
inline bool reverifies(const peirce::Witness& w) {
  const auto& a = w.args;
  const std::string& rel = w.relation;
  auto nonzero_value = [&](const Element& v) {
    return !v.is_zero() && (!w.value || *w.value == v);
  };
  if (rel == "(x,y,z)" && a.size() == 3) return nonzero_value(associator(a[0], a[1], a[2]));
  if ((rel == "(x,x,y)" || rel == "(y,x,x)" || rel == "(x,y,x)") && a.size() == 3) {
    const bool shape = rel == "(x,x,y)" ? a[0] == a[1] : rel == "(y,x,x)" ? a[1] == a[2] : a[0] == a[2];
    return shape && nonzero_value(associator(a[0], a[1], a[2]));
  }
  if (rel == "(x,z,y)+(z,x,y)" && a.size() == 3) {
    // A failing linearization forces (u,u,y) != 0 for u among x, z, x+z.
    const Element& x = a[0];
    const Element& z = a[1];
    const Element& y = a[2];
    const Element s = x + z;
    return nonzero_value(associator(x, z, y) + associator(z, x, y)) &&
           !(associator(x, x, y).is_zero() && associator(z, z, y).is_zero() &&
             associator(s, s, y).is_zero());
  }
  if (rel == "(y,x,z)+(y,z,x)" && a.size() == 3) {
    const Element& y = a[0];
    const Element& x = a[1];
    const Element& z = a[2];
    const Element s = x + z;
    return nonzero_value(associator(y, x, z) + associator(y, z, x)) &&
           !(associator(y, x, x).is_zero() && associator(y, z, z).is_zero() &&
             associator(y, s, s).is_zero());
  }
  if (rel == "(x,y,z)+(z,y,x)" && a.size() == 3) {
    return nonzero_value(associator(a[0], a[1], a[2]) + associator(a[2], a[1], a[0]));
  }
  if (rel == "k*x = 0" && a.size() == 1) {
    return !a[0].is_zero() && w.value && w.value->is_zero();
  }
  if (rel == "ideal(a)*ideal(b) = 0" && a.size() == 2) {
    if (a[0].is_zero() || a[1].is_zero()) return false;
    const oracle::Table t(a[0].ring());
    const auto ia = oracle::ideal(t, static_cast<oracle::Index>(a[0].index()));
    const auto ib = oracle::ideal(t, static_cast<oracle::Index>(a[1].index()));
    for (oracle::Index x = 0; x < t.size(); ++x)
      for (oracle::Index y = 0; y < t.size(); ++y)
        if (ia[x] && ib[y] && t.mul(x, y) != 0) return false;
    return true;
  }
  if ((rel == "(a*r)*b = 0 for all r" || rel == "a*(r*b) = 0 for all r") && a.size() == 2) {
    if (a[0].is_zero() || a[1].is_zero()) return false;
    const auto& ring = a[0].ring();
    const bool left = rel.rfind("(a*r)", 0) == 0;
    for (std::uint64_t i = 0; i < ring.size(); ++i) {
      const Element r = ring.element_at(i);
      const Element v = left ? (a[0] * r) * a[1] : a[0] * (r * a[1]);
      if (!v.is_zero()) return false;
    }
    return true;
  }
  return false;
}

inline bool reverifies(const peirce::Verdict& v) {
  return v.holds || (v.witness && reverifies(*v.witness));
}

}  // namespace witness
