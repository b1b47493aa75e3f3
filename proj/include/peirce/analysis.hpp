#pragma once

#include <optional>
#include <vector>

#include "peirce/ring.hpp"
#include "peirce/submodule.hpp"
#include "peirce/verdict.hpp"

namespace peirce {

// Identities that are multilinear in their arguments are decided on basis
// tuples, which is exact. Witnesses are the failing tuple that is least in
// lexicographic element_index order.

Verdict is_associative(const Ring& ring);

/// (x,x,y) = 0 = (y,x,x) for all x, y; decided by the diagonal basis
/// conditions plus their linearizations, with no torsion hypothesis.
Verdict is_alternative(const Ring& ring);

/// (x,y,x) = 0 for all x, y.
Verdict is_flexible(const Ring& ring);

/// (x,y,z) + (z,y,x) = 0 for all basis triples.
Verdict check_linearized_flexible(const Ring& ring);

/// Elements u with (u,x,y) = (x,u,y) = (x,y,u) = 0 for all x, y.
Submodule nucleus(const Ring& ring);

/// Nucleus elements commuting with everything.
Submodule centre(const Ring& ring);

/// Decided from the kernel of x -> m*x on the additive group.
Verdict is_torsion_free(const Ring& ring, Scalar m);

std::optional<Element> find_unity(const Ring& ring);

enum class IdempotentKind { zero, unity, nontrivial };

struct Idempotent {
  Element element;
  IdempotentKind kind;
};

/// Every e with e*e = e, by enumeration, in element_index order.
std::vector<Idempotent> idempotents(const Ring& ring);

/// Nonzero, idempotent, and not the unity when a unity exists.
bool is_nontrivial_idempotent(const Element& e);

/// Two-sided ideal generated by a; iterated to a fixpoint since products of
/// products need not reassociate.
Submodule ideal_generated(const Element& a);

/// Additive span of all products x*y with x in a, y in b.
Submodule product_span(const Ring& ring, const Submodule& a,
                       const Submodule& b);

/// Every pair of nonzero ideals has nonzero product. Witness args are the
/// generators (a, b) of principal ideals with ideal(a)*ideal(b) = 0.
Verdict is_prime_by_ideals(const Ring& ring);

/// left: a*R*b means (a*r)*b; right: a*(r*b).
enum class PrimeVariant { left, right };

/// a R b = 0 implies a = 0 or b = 0.
Verdict prime_criterion(const Ring& ring, PrimeVariant variant);

/// Elements of a submodule of the ring, ascending by element_index.
std::vector<Element> elements_of(const Ring& ring, const Submodule& m);

/// Matrix of y -> x*y.
CoeffMatrix left_multiplication(const Element& x);

}  // namespace peirce
