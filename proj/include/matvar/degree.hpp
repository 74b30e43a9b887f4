#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "matvar/divisor.hpp"

namespace matvar {

/// The blow-up tower over P^n: all elements of L and M blown up in order of
/// increasing rank. Within a stage the centers are pairwise incomparable, so
/// any order gives the same variety; the schedule records one such order and
/// only steers enumeration order downstream.
struct BlowupTower {
    ArrangementPoset poset;
    int n = 0;
    std::vector<std::vector<int>> schedule;  // element ids grouped by rank, ascending
};

/// Requires n > r(1).
BlowupTower make_tower(ArrangementPoset poset, int n);

/// Exponent per poset element id; slot 0 is the exponent of H0.
using DivisorMonomial = std::vector<int>;

/// Evaluates degrees of top-dimensional monomials in the divisor generators
/// by recursive pushforward through the tower. Not thread-safe; use one
/// engine per thread.
struct EngineOptions {
    bool flip_exceptional_sign = false;  // seeded fault for suite sensitivity
};

class DegreeEngine {
  public:
    explicit DegreeEngine(const BlowupTower& tower, EngineOptions opt = {})
        : tower_(&tower), opt_(opt) {}

    /// Degree of the monomial; throws precondition_error unless the total
    /// degree equals n.
    mpz_class monomial_degree(const DivisorMonomial& mono);

  private:
    // universe -1 = the whole tower; universe g = the strict down-set of g,
    // i.e. the exceptional fiber over the center g.
    mpz_class eval(int universe, int ambient, DivisorMonomial exps);

    const BlowupTower* tower_;
    EngineOptions opt_;
    std::map<std::pair<int, DivisorMonomial>, mpz_class> memo_;
};

/// Degree of D^power * H0^extra_h0 (power + extra_h0 = n required). D must be
/// an E-basis class with constant coefficients. The fast path enumerates only
/// monomials whose support is a chain of the poset (all others vanish) and
/// fans the chains out across threads.
mpz_class mixed_degree(const BlowupTower& tower, const DivisorClass& d, int power, int extra_h0,
                       EngineOptions opt = {});

/// Serial reference: dense enumeration of every composition of the power over
/// the support, including the vanishing incomparable ones.
mpz_class mixed_degree_reference(const BlowupTower& tower, const DivisorClass& d, int power,
                                 int extra_h0, EngineOptions opt = {});

/// D^n over the tower.
mpz_class self_intersection(const BlowupTower& tower, const DivisorClass& d,
                            EngineOptions opt = {});
mpz_class self_intersection_reference(const BlowupTower& tower, const DivisorClass& d,
                                      EngineOptions opt = {});

/// Substitutes t = m in every coefficient.
DivisorClass eval_at(const DivisorClass& d, const mpz_class& m);

struct DegreeResult {
    mpz_class value;
    bool nice = false;  // when false the value is a bare self-intersection number
};

/// d(m, n) = Sbar(m)^n; m >= 1.
DegreeResult degree_d(const BlowupTower& tower, const mpz_class& m);

}  // namespace matvar
