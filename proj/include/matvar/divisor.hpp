#pragma once

#include <vector>

#include "matvar/arrangement.hpp"
#include "matvar/polynomial.hpp"

namespace matvar {

enum class Basis { E, H };

/// A divisor class on the blow-up tower, as a coefficient vector over the
/// generators indexed by poset element id. Slot 0 always holds the H0
/// coefficient; slots of L-elements hold E_x (E-basis) or H_x (H-basis)
/// coefficients; slots of M-elements hold F_y coefficients in both bases.
struct DivisorClass {
    Basis basis = Basis::E;
    std::vector<IntPolynomial> coeff;

    DivisorClass() = default;
    DivisorClass(Basis b, size_t slots) : basis(b), coeff(slots) {}

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(const IntPolynomial& s) const;
    bool operator==(const DivisorClass& o) const;

    /// Same class with every F (M-element) coefficient zeroed.
    DivisorClass modulo_f(const ArrangementPoset& poset) const;
};

/// E-basis expansion of the H-basis generator: H_bottom = H0 and, for x != 0,
/// H_x = H0 - sum of E_y over 0 < y <= x - sum of F_z over z in M, z < x.
DivisorClass h_class(const ArrangementPoset& poset, int x);

/// Exact unitriangular basis change; round-trips to the identity.
DivisorClass change_basis(const ArrangementPoset& poset, const DivisorClass& d, Basis target);

/// A linear functional on divisor classes, stored by its values on the
/// H-basis generators (slot 0 = H0, L slots = H_x, M slots = F_y).
struct CurveFunctional {
    std::vector<IntPolynomial> values;
};

/// gamma_x: 1 on H_x, 0 on every other H-basis generator.
CurveFunctional gamma(const ArrangementPoset& poset, int x);

/// ell = sum of gamma_x over all x in L (the hyperplane-pullback curve class).
CurveFunctional ell(const ArrangementPoset& poset);

IntPolynomial pair(const ArrangementPoset& poset, const CurveFunctional& f,
                   const DivisorClass& d);

/// S(t) = t^{r(1)} H0 - sum of t^{r(1)-r(x)} E_x, in the E-basis.
DivisorClass build_S(const ArrangementPoset& poset);

/// Sbar(t) = sum over x in L of p(L/x, t) H_x, in the H-basis.
DivisorClass build_Sbar(const ArrangementPoset& poset);

/// omega = -(n+1) H0 + sum (n-r(x)) E_x + sum (n-r(y)) F_y; requires n > r(1).
DivisorClass canonical_class(const ArrangementPoset& poset, int n);

/// omega-tilde = H0 + (n - r(1)) H_top + omega; requires n > r(1).
DivisorClass beta_divisor(const ArrangementPoset& poset, int n);

/// Pushforward along the deletion of atom e, defined modulo F: H_x maps to
/// H'_{x'} where x' is the maximal flat of L-e below x; H_e and H0 map to H0'.
/// `deleted` must be delete_point(poset, atom). Result is in the H-basis over
/// `deleted` with zero F coefficients.
DivisorClass deletion_pushforward(const ArrangementPoset& poset, const DivisorClass& d, int atom,
                                  const ArrangementPoset& deleted);

/// Restriction of the poset to the interval [0, x]: the points on span(x),
/// re-coordinatized in a sub-ambient space of dimension n''.
struct Restriction {
    int x = 0;  // the flat restricted to
    ArrangementPoset sub;
    std::vector<int> elem_map;  // poset id of z <= x  ->  sub id (-1 elsewhere)
};

/// Builds the interval geometry below a modular x; requires r(x) < n''.
Restriction restrict_to(const ArrangementPoset& poset, int x, int n_sub);

/// Pullback to the interval [0, x] for modular x: E_z and F_z map to their
/// sub-poset counterparts when z <= x and to 0 otherwise; H0 maps to H0''.
/// Requires is_modular(x) and r(x) < n'' (n'' <= n - r(1) + r(x) for nesting).
DivisorClass modular_restriction(const ArrangementPoset& poset, const Restriction& res,
                                 const DivisorClass& d);

}  // namespace matvar
