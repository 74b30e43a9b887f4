#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matvar/graph.hpp"
#include "matvar/matrix.hpp"
#include "matvar/polynomial.hpp"

using namespace matvar;

TEST_CASE("field parsing and names") {
    CHECK(Field::parse("Q") == Field::Q());
    CHECK(Field::parse("GF(5)") == Field::GF(5));
    CHECK(Field::parse("GF:7") == Field::GF(7));
    CHECK(Field::GF(5).name() == "GF(5)");
    CHECK_THROWS_AS(Field::parse("R"), input_error);
    CHECK_THROWS_AS(Field::parse("GF(4)"), input_error);  // not prime
}

TEST_CASE("rational scalar arithmetic is exact") {
    Field q = Field::Q();
    Scalar a = Scalar::parse(q, "1/3");
    Scalar b = Scalar::parse(q, "1/6");
    CHECK((a + b) == Scalar::parse(q, "1/2"));
    CHECK((a - b) == b);
    CHECK((a * b) == Scalar::parse(q, "1/18"));
    CHECK((a / b) == Scalar(q, 2));
    CHECK((-a + a).is_zero());
    CHECK_THROWS_AS(a / Scalar(q), input_error);
}

TEST_CASE("prime field arithmetic wraps") {
    Field f = Field::GF(7);
    Scalar a(f, 5), b(f, 4);
    CHECK((a + b) == Scalar(f, 2));
    CHECK((a * b) == Scalar(f, 6));
    CHECK((a / b) == Scalar(f, 3));  // 3 * 4 = 12 = 5
    CHECK((-a) == Scalar(f, 2));
    CHECK_THROWS_AS(a + Scalar(Field::Q(), 1L), input_error);
}

static Mat mat_q(int rows, int cols, const std::vector<long>& v) {
    Mat m(Field::Q(), rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Scalar(Field::Q(), v[i * cols + j]);
    return m;
}

TEST_CASE("rref is canonical and drops zero rows") {
    Mat m = mat_q(3, 3, {2, 4, 0, 1, 2, 0, 0, 0, 5});
    Mat r = rref(m);
    CHECK(r.rows == 2);
    CHECK(r == rref(mat_q(2, 3, {1, 2, 0, 0, 0, 1})));
    CHECK(rank_of(m) == 2);
}

TEST_CASE("row space predicates and intersection") {
    Mat a = rref(mat_q(2, 4, {1, 0, 0, 0, 0, 1, 0, 0}));
    Mat b = rref(mat_q(2, 4, {0, 1, 0, 0, 0, 0, 1, 0}));
    Mat inter = intersect_row_spaces(a, b);
    CHECK(inter.rows == 1);
    std::vector<Scalar> e1{Scalar(Field::Q(), 0L), Scalar(Field::Q(), 1L),
                           Scalar(Field::Q(), 0L), Scalar(Field::Q(), 0L)};
    CHECK(contains_vector(inter, e1));
    CHECK(row_space_leq(inter, a));
    CHECK(row_space_leq(inter, b));
    CHECK_FALSE(row_space_leq(a, b));
    CHECK_THROWS_AS(coordinates_in(b, {Scalar(Field::Q(), 1L), Scalar(Field::Q(), 0L),
                                       Scalar(Field::Q(), 0L), Scalar(Field::Q(), 0L)}),
                    precondition_error);
}

TEST_CASE("polynomial ring operations") {
    IntPolynomial p({std::vector<mpz_class>{2, -3, 1}});  // t^2 - 3t + 2
    CHECK(p.eval(1) == 0);
    CHECK(p.eval(5) == 12);
    CHECK(p.degree() == 2);
    CHECK(p.derivative() == IntPolynomial(std::vector<mpz_class>{-3, 2}));
    CHECK(IntPolynomial::t_power(3) * IntPolynomial(2) ==
          IntPolynomial(std::vector<mpz_class>{0, 0, 0, 2}));
    CHECK((p - p).is_zero());
    CHECK((p * IntPolynomial(0)).is_zero());
    CHECK(p.str() == "t^2 - 3t + 2");
}

TEST_CASE("graph validation and rank") {
    Graph k3 = complete_graph(3);
    CHECK(k3.rank() == 2);
    CHECK(k3.components() == 1);

    Graph loop{2, {{1, 1}}};
    CHECK_THROWS_AS(loop.validate(), input_error);
    Graph parallel{2, {{0, 1}, {0, 1}}};
    CHECK_THROWS_AS(parallel.validate(), input_error);
    Graph range{2, {{0, 2}}};
    CHECK_THROWS_AS(range.validate(), input_error);
}

TEST_CASE("deletion and contraction stay simple") {
    Graph k4 = complete_graph(4);
    Graph d = k4.delete_edge(0);
    CHECK(d.edges.size() == 5);
    Graph c = k4.contract_edge(0);
    CHECK(c.vertices == 3);
    CHECK(c.edges.size() == 3);  // parallels merged
    c.validate();
}

TEST_CASE("canonical key is relabeling invariant") {
    Graph path{4, {{0, 1}, {1, 2}, {2, 3}}};
    Graph relabeled{4, {{0, 2}, {1, 3}, {2, 3}}};  // same path, vertices shuffled
    CHECK(path.canonical_key() == relabeled.canonical_key());
    Graph star{4, {{0, 1}, {0, 2}, {0, 3}}};
    CHECK(path.canonical_key() != star.canonical_key());
}

TEST_CASE("graph census sizes match the isomorphism-class counts") {
    CHECK(all_graphs_up_to(3).size() == 1 + 2 + 4);
    CHECK(all_graphs_up_to(4).size() == 1 + 2 + 4 + 11);
}
