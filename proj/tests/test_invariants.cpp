#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matvar/invariants.hpp"

using namespace matvar;

namespace {

IntPolynomial poly(std::vector<long> ascending) {
    std::vector<mpz_class> c(ascending.begin(), ascending.end());
    return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("Moebius values on the triangle lattice") {
    ArrangementPoset p = build_arrangement(complete_graph(3));
    CHECK(moebius(p, 0, 0) == 1);
    CHECK(moebius(p, 0, p.atom_elem(0)) == -1);
    CHECK(moebius(p, 0, p.top) == 2);
    CHECK(moebius(p, p.atom_elem(0), p.atom_elem(1)) == 0);  // incomparable
}

TEST_CASE("Moebius rejects intersection elements") {
    ArrangementPoset p = build_arrangement(complete_graph(4));
    CHECK_THROWS_AS(moebius(p, 0, p.intersection_ids().front()), precondition_error);
}

TEST_CASE("characteristic polynomials of small lattices") {
    ArrangementPoset k3 = build_arrangement(complete_graph(3));
    CHECK(characteristic_polynomial(k3) == poly({2, -3, 1}));
    CHECK(characteristic_polynomial(k3, k3.atom_elem(0)) == poly({-1, 1}));
    CHECK(characteristic_polynomial(k3, k3.top) == poly({1}));

    ArrangementPoset k4 = build_arrangement(complete_graph(4));
    CHECK(characteristic_polynomial(k4) == poly({-6, 11, -6, 1}));
}

TEST_CASE("named non-graphic lattices") {
    ArrangementPoset l4 = minor_target_poset(MinorTarget::L4);
    CHECK(characteristic_polynomial(l4) == poly({3, -4, 1}));
    CHECK(characteristic_polynomial(l4).eval(2) == -1);

    ArrangementPoset f7 = minor_target_poset(MinorTarget::F7);
    CHECK(characteristic_polynomial(f7) == poly({-8, 14, -7, 1}));
    CHECK(characteristic_polynomial(f7).eval(3) < 0);
}

TEST_CASE("chromatic polynomial matches the closed forms") {
    CHECK(chromatic_polynomial(complete_graph(3)) == poly({0, 2, -3, 1}));
    // two isolated vertices plus an edge
    Graph g{4, {{0, 1}}};
    CHECK(chromatic_polynomial(g) == poly({0, 0, 0, -1, 1}));
    Graph empty{3, {}};
    CHECK(chromatic_polynomial(empty) == poly({0, 0, 0, 1}));
}

TEST_CASE("interval characteristic polynomial re-ranks from the base") {
    ArrangementPoset k4 = build_arrangement(complete_graph(4));
    int a = k4.atom_elem(0);
    IntPolynomial whole = characteristic_polynomial(k4, a);
    CHECK(interval_characteristic_polynomial(k4, a, k4.top) == whole);
    CHECK_THROWS_AS(interval_characteristic_polynomial(k4, k4.top, a), precondition_error);
}

TEST_CASE("beta invariants") {
    ArrangementPoset k3 = build_arrangement(complete_graph(3));
    CHECK(beta(k3) == 1);
    CHECK(beta(k3, k3.top) == 0);  // trivial contraction
    CHECK(signed_beta(k3, k3.top) == 0);
    CHECK(signed_beta(k3, k3.atom_elem(0)) == -1);

    CHECK(beta(minor_target_poset(MinorTarget::L4)) == 2);
    CHECK(beta(build_arrangement(complete_graph(4))) == 2);

    // a disconnected matroid: two independent points, beta vanishes
    Graph forest{3, {{0, 1}, {1, 2}}};
    CHECK(beta(build_arrangement(forest)) == 0);
}

TEST_CASE("modularity") {
    ArrangementPoset k3 = build_arrangement(complete_graph(3));
    for (int x : k3.flat_ids()) CHECK(is_modular(k3, x));

    ArrangementPoset k4 = build_arrangement(complete_graph(4));
    CHECK(is_modular(k4, 0));
    CHECK(is_modular(k4, k4.top));
    CHECK(is_modular(k4, k4.atom_elem(0)));
    // matching lines cross outside the lattice, so they are not modular
    bool found_nonmodular = false;
    for (int x : k4.ids_of_rank(2))
        if (k4.is_flat(x) && !is_modular(k4, x)) found_nonmodular = true;
    CHECK(found_nonmodular);
    CHECK_THROWS_AS(is_modular(k4, k4.intersection_ids().front()), precondition_error);
}

TEST_CASE("contraction projects the configuration") {
    ArrangementPoset k4 = build_arrangement(complete_graph(4));
    int a = k4.atom_elem(0);
    ArrangementPoset c = contract(k4, a);
    CHECK(c.rank() == 2);
    CHECK(characteristic_polynomial(c) == interval_characteristic_polynomial(k4, a, k4.top));
    CHECK_THROWS_AS(contract(k4, k4.intersection_ids().front()), precondition_error);
}

TEST_CASE("deletion and isthmuses") {
    ArrangementPoset k3 = build_arrangement(complete_graph(3));
    ArrangementPoset d = delete_point(k3, 0);
    CHECK(d.config.points.size() == 2);
    CHECK(d.rank() == 2);
    CHECK_FALSE(is_isthmus(k3, 0));
    CHECK_THROWS_AS(delete_point(k3, 5), precondition_error);

    Graph tree{2, {{0, 1}}};
    ArrangementPoset t = build_arrangement(tree);
    CHECK(is_isthmus(t, 0));
}

TEST_CASE("minor detection") {
    ArrangementPoset l4 = minor_target_poset(MinorTarget::L4);
    CHECK(has_minor(l4, MinorTarget::L4));
    CHECK_FALSE(has_minor(build_arrangement(complete_graph(4)), MinorTarget::L4));

    ArrangementPoset f7 = minor_target_poset(MinorTarget::F7);
    CHECK(has_minor(f7, MinorTarget::F7));
    CHECK_FALSE(has_minor(l4, MinorTarget::F7));

    CHECK_THROWS_AS(has_minor(f7, MinorTarget::L4, 3), resource_error);
}

TEST_CASE("niceness") {
    CHECK(is_nice(build_arrangement(complete_graph(3))));
    CHECK(is_nice(build_arrangement(complete_graph(4))));
    CHECK_FALSE(is_nice(minor_target_poset(MinorTarget::L4)));
    CHECK_FALSE(is_nice(minor_target_poset(MinorTarget::F7)));
}
