#pragma once

#include <array>

#include "peirce/ring.hpp"
#include "peirce/submodule.hpp"
#include "peirce/verdict.hpp"

namespace peirce {

/// The four Peirce components of an element relative to e1.
struct PeirceParts {
  Element p11, p12, p21, p22;

  const Element& operator()(int i, int j) const;
};

/// Peirce decomposition R = R11 + R12 + R21 + R22 relative to a nontrivial
/// idempotent e1, where R_ij = e_i R e_j with e_2 acting as a - e1*a on the
/// left and a - a*e1 on the right. No unity is required.
class PeirceFrame {
 public:
  /// Throws std::invalid_argument if e1 is not a nontrivial idempotent.
  PeirceFrame(const Ring& ring, Element e1);

  const Ring& ring() const { return ring_; }
  const Element& idempotent() const { return e1_; }

  /// i, j in {1, 2}.
  const Submodule& component(int i, int j) const;

  /// p11 = e1(a e1), p12 = e1 a - p11, p21 = a e1 - p11,
  /// p22 = a - e1 a - a e1 + p11.
  PeirceParts project(const Element& a) const;

  /// The components meet pairwise in 0 and sum to the ring.
  const Verdict& direct_sum() const { return direct_sum_; }

  /// (e_i a) e_j = e_i (a e_j) for i, j in {1, 2}, checked on the basis.
  const Verdict& compatibility() const { return compatibility_; }

 private:
  Ring ring_;
  Element e1_;
  std::array<Submodule, 4> components_;
  Verdict direct_sum_;
  Verdict compatibility_;
};

inline PeirceFrame peirce(const Ring& ring, const Element& e1) {
  return PeirceFrame(ring, e1);
}

/// Left action of e_i: e_1 a = e1*a, e_2 a = a - e1*a.
Element left_idempotent_action(const PeirceFrame& frame, int i, const Element& a);
/// Right action of e_j: a e_1 = a*e1, a e_2 = a - a*e1.
Element right_idempotent_action(const PeirceFrame& frame, const Element& a, int j);

/// Multiplicative relations of an alternative ring's Peirce decomposition:
///   (i)   R_ij R_jl in R_il
///   (ii)  R_ij R_ij in R_ji
///   (iii) R_ij R_kl = 0 when j != k and (i,j) != (k,l)
///   (iv)  x^2 = 0 for x in R_12 or R_21, over all component elements.
/// Fails with the alternativity witness when the ring is not alternative.
Verdict check_peirce_relations(const PeirceFrame& frame);

/// Which off-diagonal component the hypothesis brackets against:
/// condition (i) uses R12, condition (ii) uses R21.
enum class ConditionSide { r12, r21 };

/// All s in R11 + R22 with [s, R_side] = 0.
Submodule condition_subspace(const PeirceFrame& frame, ConditionSide side);

/// condition_subspace is contained in the centre. The witness is the least
/// element of the subspace outside the centre.
Verdict check_condition(const PeirceFrame& frame, ConditionSide side);

}  // namespace peirce
