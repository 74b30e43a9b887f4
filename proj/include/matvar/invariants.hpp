#pragma once

#include <gmpxx.h>

#include <map>

#include "matvar/arrangement.hpp"
#include "matvar/polynomial.hpp"

namespace matvar {

/// Memoized Möbius function of the flat lattice L (M-elements excluded).
class MoebiusTable {
  public:
    explicit MoebiusTable(const ArrangementPoset& poset) : poset_(&poset) {}

    /// mu(x, z) by the defining recursion; throws on M-element arguments.
    mpz_class mu(int x, int z) const;

  private:
    const ArrangementPoset* poset_;
    mutable std::map<std::pair<int, int>, mpz_class> memo_;
};

mpz_class moebius(const ArrangementPoset& poset, int x, int z);

/// p(L/x, t) = sum over z >= x in L of mu(x,z) t^{r(1)-r(z)}; the
/// characteristic polynomial of the geometric contraction at x.
IntPolynomial characteristic_polynomial(const ArrangementPoset& poset, int x = 0);

/// p of the interval [y, x] of L, re-ranked from 0.
IntPolynomial interval_characteristic_polynomial(const ArrangementPoset& poset, int y, int x);

/// t^c p(L,t) for the cycle-matroid lattice; counts proper colorings.
IntPolynomial chromatic_polynomial(const Graph& g);

/// Crapo beta of the contraction L/x: (-1)^{rk-1} p'(L/x, 1); 0 for the
/// trivial lattice.
mpz_class beta(const ArrangementPoset& poset, int x = 0);
mpz_class beta_of_interval(const ArrangementPoset& poset, int y, int x);

/// Signed beta function B(x) = (-1)^{r(1)-r(x)} beta(L/x).
mpz_class signed_beta(const ArrangementPoset& poset, int x);

/// x is modular iff span(x) ∩ span(z) = span(x ∧ z) for every z in L.
bool is_modular(const ArrangementPoset& poset, int x);

/// Geometric contraction: project the configuration from span(x) and rebuild.
ArrangementPoset contract(const ArrangementPoset& poset, int x);

/// Deletion of the rank-1 element owning configuration point `atom`.
ArrangementPoset delete_point(const ArrangementPoset& poset, int atom);

/// e is an isthmus iff removing its point drops the rank of L.
bool is_isthmus(const ArrangementPoset& poset, int atom);

enum class MinorTarget { L4, F7 };
ArrangementPoset minor_target_poset(MinorTarget t);

/// Exhaustive minor search (contraction by a flat, then deletions), testing
/// lattice isomorphism with the target. Bounded by max_points.
bool has_minor(const ArrangementPoset& poset, MinorTarget target, int max_points = 10);

/// Niceness: p(L/x, 2) >= 0 and p(L/x, 3) >= 0 for every x in L (equivalent
/// to excluding the four-point line and the Fano plane as minors).
bool is_nice(const ArrangementPoset& poset);

}  // namespace matvar
