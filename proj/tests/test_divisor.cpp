#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "matvar/divisor.hpp"
#include "matvar/invariants.hpp"

using namespace matvar;

namespace {

DivisorClass unit(const ArrangementPoset& p, Basis b, int slot) {
    DivisorClass d(b, p.elems.size());
    d.coeff[slot] = IntPolynomial(1);
    return d;
}

}  // namespace

TEST_CASE("H-classes expand over the down-set") {
    ArrangementPoset k3 = build_arrangement(complete_graph(3));
    DivisorClass h = h_class(k3, k3.top);
    CHECK(h.coeff[0] == IntPolynomial(1));
    for (int x : k3.flat_ids())
        if (x != 0) CHECK(h.coeff[x] == IntPolynomial(-1));

    CHECK(h_class(k3, 0) == unit(k3, Basis::E, 0));  // H_bottom is H0
}

TEST_CASE("H-classes pick up crossing intersections in K4") {
    ArrangementPoset k4 = build_arrangement(complete_graph(4));
    DivisorClass h = h_class(k4, k4.top);
    for (int y : k4.intersection_ids()) CHECK(h.coeff[y] == IntPolynomial(-1));
    // a crossing lies below exactly two matching lines
    int y = k4.intersection_ids().front();
    int below = 0;
    for (int x : k4.ids_of_rank(2))
        if (k4.is_flat(x) && k4.lt(y, x)) {
            ++below;
            CHECK(h_class(k4, x).coeff[y] == IntPolynomial(-1));
        }
    CHECK(below == 2);
    CHECK_THROWS_AS(h_class(k4, y), precondition_error);
}

TEST_CASE("basis change round-trips") {
    ArrangementPoset k4 = build_arrangement(complete_graph(4));
    DivisorClass d(Basis::E, k4.elems.size());
    for (size_t i = 0; i < d.coeff.size(); ++i)
        d.coeff[i] = IntPolynomial(static_cast<long>(2 * i)) - IntPolynomial::t_power(1);
    DivisorClass h = change_basis(k4, d, Basis::H);
    CHECK(h.basis == Basis::H);
    CHECK(change_basis(k4, h, Basis::E) == d);
}

TEST_CASE("pairings against curve classes") {
    ArrangementPoset k4 = build_arrangement(complete_graph(4));
    // gamma0 extracts the H0 coordinate: S pairs to the characteristic polynomial
    CHECK(pair(k4, gamma(k4, 0), build_S(k4)) == characteristic_polynomial(k4));
    // ell meets a general hyperplane once
    CHECK(pair(k4, ell(k4), unit(k4, Basis::E, 0)) == IntPolynomial(1));
    // ell kills every exceptional divisor
    for (int x : k4.flat_ids())
        if (x != 0) CHECK(pair(k4, ell(k4), unit(k4, Basis::E, x)).is_zero());
}

TEST_CASE("exceptional pairing values for K4") {
    ArrangementPoset k4 = build_arrangement(complete_graph(4));
    CurveFunctional g0 = gamma(k4, 0);
    std::map<long, int> tally;  // pairing value -> count over flats above the bottom
    for (int x : k4.flat_ids()) {
        if (x == 0) continue;
        IntPolynomial v = pair(k4, g0, unit(k4, Basis::E, x));
        REQUIRE(v.is_constant());
        tally[v.constant().get_si()]++;
    }
    CHECK(tally[1] == 6);
    CHECK(tally[-2] == 4);
    CHECK(tally[-1] == 3);
    CHECK(tally[6] == 1);
}

TEST_CASE("S and Sbar agree modulo the intersection divisors") {
    for (int nv : {3, 4}) {
        ArrangementPoset p = build_arrangement(complete_graph(nv));
        DivisorClass s_h = change_basis(p, build_S(p), Basis::H);
        CHECK(s_h.modulo_f(p) == build_Sbar(p).modulo_f(p));
    }
}

TEST_CASE("canonical and beta classes") {
    ArrangementPoset k3 = build_arrangement(complete_graph(3));
    DivisorClass w = canonical_class(k3, 3);
    CHECK(w.coeff[0] == IntPolynomial(-4));
    CHECK(w.coeff[k3.atom_elem(0)] == IntPolynomial(2));
    CHECK(w.coeff[k3.top] == IntPolynomial(1));
    CHECK_THROWS_AS(canonical_class(k3, 2), precondition_error);
    CHECK_THROWS_AS(beta_divisor(k3, 2), precondition_error);

    // the E-side coefficients of the beta class do not depend on n
    DivisorClass b3 = beta_divisor(k3, 3), b9 = beta_divisor(k3, 9);
    for (int x : k3.flat_ids())
        if (x != 0) CHECK(b3.coeff[x] == b9.coeff[x]);
    CHECK(b3.coeff[0] == IntPolynomial(-k3.rank()));
}

TEST_CASE("deletion pushforward maps H-classes to H-classes") {
    ArrangementPoset k3 = build_arrangement(complete_graph(3));
    ArrangementPoset del = delete_point(k3, 0);
    // the hyperplane through the deleted point falls back to H0'
    int e = k3.atom_elem(0);
    DivisorClass img = deletion_pushforward(k3, change_basis(k3, h_class(k3, e), Basis::H), 0,
                                            del);
    CHECK(img == change_basis(del, unit(del, Basis::E, 0), Basis::H));
    // the top flat survives as the top of the deletion
    DivisorClass top_img = deletion_pushforward(
        k3, change_basis(k3, h_class(k3, k3.top), Basis::H), 0, del);
    CHECK(top_img.coeff[del.top] == IntPolynomial(1));
}

TEST_CASE("restriction to a modular flat") {
    ArrangementPoset k4 = build_arrangement(complete_graph(4));
    int a = k4.atom_elem(0);
    REQUIRE(is_modular(k4, a));
    Restriction res = restrict_to(k4, a, 2);
    CHECK(res.sub.rank() == 1);
    CHECK(res.sub.config.points.size() == 1);
    CHECK(res.elem_map[a] == res.sub.top);

    // H0 restricts to H0'', E_a to the sub exceptional divisor, others die
    CHECK(modular_restriction(k4, res, unit(k4, Basis::E, 0)) == unit(res.sub, Basis::E, 0));
    CHECK(modular_restriction(k4, res, unit(k4, Basis::E, a)) ==
          unit(res.sub, Basis::E, res.sub.top));
    CHECK(modular_restriction(k4, res, unit(k4, Basis::E, k4.top)).coeff ==
          DivisorClass(Basis::E, res.sub.elems.size()).coeff);

    CHECK_THROWS_AS(restrict_to(k4, a, 1), precondition_error);
    CHECK_THROWS_AS(restrict_to(k4, k4.intersection_ids().front(), 3), precondition_error);
    // a nonmodular matching line has a crossing below it with no image in [0,x]
    int nonmodular = -1;
    for (int x : k4.ids_of_rank(2))
        if (k4.is_flat(x) && !is_modular(k4, x)) nonmodular = x;
    REQUIRE(nonmodular >= 0);
    CHECK_THROWS_AS(restrict_to(k4, nonmodular, 3), precondition_error);
}
