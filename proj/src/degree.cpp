#include "matvar/degree.hpp"

#include "matvar/invariants.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <numeric>

namespace matvar {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

mpz_class pow_z(const mpz_class& b, unsigned long e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

}  // namespace

BlowupTower make_tower(ArrangementPoset poset, int n) {
    if (n <= poset.rank())
        throw precondition_error("tower dimension must exceed the rank of the lattice");
    BlowupTower t;
    t.poset = std::move(poset);
    t.n = n;
    for (int r = 1; r <= t.poset.rank(); ++r) {
        std::vector<int> stage;
        for (const auto& e : t.poset.elems)
            if (e.rank == r && e.id != 0) stage.push_back(e.id);
        if (!stage.empty()) t.schedule.push_back(std::move(stage));
    }
    return t;
}

mpz_class DegreeEngine::monomial_degree(const DivisorMonomial& mono) {
    if (mono.size() != tower_->poset.elems.size())
        throw precondition_error("monomial does not match the poset");
    int total = std::accumulate(mono.begin(), mono.end(), 0);
    if (total != tower_->n)
        throw precondition_error("monomial degree must equal the tower dimension");
    for (int e : mono)
        if (e < 0) throw precondition_error("negative exponent");
    return eval(-1, tower_->n, mono);
}

mpz_class DegreeEngine::eval(int universe, int ambient, DivisorMonomial exps) {
    const ArrangementPoset& p = tower_->poset;

    // locate the maximal-rank generator carried with a positive exponent
    int g = -1;
    for (size_t i = 1; i < exps.size(); ++i) {
        if (exps[i] <= 0) continue;
        if (g < 0 || p.elems[i].rank > p.elems[g].rank) g = static_cast<int>(i);
    }
    if (g < 0) return exps[0] == ambient ? mpz_class(1) : mpz_class(0);

    // same-rank centers are disjoint after the earlier stages; any surviving
    // generator must lie strictly below g or the cycles miss each other
    for (size_t i = 1; i < exps.size(); ++i)
        if (exps[i] > 0 && static_cast<int>(i) != g && !p.lt(static_cast<int>(i), g)) return 0;

    auto key = std::make_pair(universe, exps);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    int k = exps[g];
    int c = ambient - (p.elems[g].rank - 1);  // codimension of the center
    mpz_class result = 0;
    if (k >= c) {
        mpz_class factor = binom(k - 1, c - 1);
        int sign_exp = opt_.flip_exceptional_sign ? c : c - 1;
        if (sign_exp % 2 != 0) factor = -factor;

        std::vector<int> below;
        for (size_t i = 1; i < exps.size(); ++i)
            if (p.lt(static_cast<int>(i), g)) below.push_back(static_cast<int>(i));

        DivisorMonomial sub = exps;
        sub[g] = 0;
        int rem = k - c;
        int dim_g = p.elems[g].rank - 1;

        // distribute (H0 - sum of generators below g)^{k-c} and push into the
        // fiber over g
        mpz_class sum = 0;
        std::function<void(size_t, int, const mpz_class&)> rec = [&](size_t idx, int left,
                                                                     const mpz_class& coeff) {
            if (idx == below.size()) {
                sub[0] += left;
                sum += coeff * eval(g, dim_g, sub);
                sub[0] -= left;
                return;
            }
            for (int a = 0; a <= left; ++a) {
                mpz_class c2 = coeff * binom(left, a);
                if (a % 2 != 0) c2 = -c2;
                sub[below[idx]] += a;
                rec(idx + 1, left - a, c2);
                sub[below[idx]] -= a;
            }
        };
        rec(0, rem, 1);
        result = factor * sum;
    }
    memo_.emplace(std::move(key), result);
    return result;
}

namespace {

struct Support {
    std::vector<int> ids;          // generator ids with nonzero coefficient, schedule order
    std::vector<mpz_class> coeff;  // matching coefficients
    mpz_class h0;                  // coefficient of H0
};

Support collect_support(const BlowupTower& tower, const DivisorClass& d) {
    DivisorClass e = change_basis(tower.poset, d, Basis::E);
    for (const auto& c : e.coeff)
        if (!c.is_constant())
            throw precondition_error("degree evaluation needs constant coefficients");
    Support s;
    s.h0 = e.coeff[0].constant();
    for (const auto& stage : tower.schedule)
        for (int id : stage)
            if (!e.coeff[id].is_zero()) {
                s.ids.push_back(id);
                s.coeff.push_back(e.coeff[id].constant());
            }
    return s;
}

/// Sum over exponent assignments that put >= 1 on every chain element, with
/// the multinomial weight and the coefficient powers.
mpz_class chain_sum(const BlowupTower& tower, DegreeEngine& engine, const Support& s,
                    const std::vector<int>& chain, int power, int extra_h0) {
    size_t ne = tower.poset.elems.size();
    mpz_class total = 0;
    DivisorMonomial mono(ne, 0);
    std::function<void(size_t, int, const mpz_class&)> rec = [&](size_t idx, int left,
                                                                 const mpz_class& coeff) {
        if (idx == chain.size()) {
            mono[0] = left + extra_h0;
            total += coeff * pow_z(s.h0, left) * engine.monomial_degree(mono);
            return;
        }
        int id = s.ids[chain[idx]];
        int max_a = left - static_cast<int>(chain.size() - idx - 1);
        for (int a = 1; a <= max_a; ++a) {
            mono[id] = a;
            rec(idx + 1, left - a, coeff * binom(left, a) * pow_z(s.coeff[chain[idx]], a));
            mono[id] = 0;
        }
    };
    rec(0, power, 1);
    return total;
}

}  // namespace

mpz_class mixed_degree(const BlowupTower& tower, const DivisorClass& d, int power, int extra_h0,
                       EngineOptions opt) {
    if (power + extra_h0 != tower.n) throw precondition_error("total degree must equal n");
    Support s = collect_support(tower, d);
    const ArrangementPoset& p = tower.poset;

    // every nonzero monomial has a totally ordered support, so enumerate
    // chains in the support (the empty chain covers the pure-H0 term)
    std::vector<std::vector<int>> chains{{}};
    std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& chain) {
        size_t start = chain.empty() ? 0 : chain.back() + 1;
        for (size_t j = start; j < s.ids.size(); ++j) {
            if (!chain.empty() && !p.lt(s.ids[chain.back()], s.ids[j])) continue;
            if (static_cast<int>(chain.size()) + 1 > power) break;
            chain.push_back(static_cast<int>(j));
            chains.push_back(chain);
            grow(chain);
            chain.pop_back();
        }
    };
    std::vector<int> seed;
    grow(seed);

    mpz_class total = 0;
#pragma omp parallel
    {
        DegreeEngine engine(tower, opt);
        mpz_class local = 0;
#pragma omp for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(chains.size()); ++i)
            local += chain_sum(tower, engine, s, chains[i], power, extra_h0);
#pragma omp critical
        total += local;
    }
    return total;
}

mpz_class mixed_degree_reference(const BlowupTower& tower, const DivisorClass& d, int power,
                                 int extra_h0, EngineOptions opt) {
    if (power + extra_h0 != tower.n) throw precondition_error("total degree must equal n");
    Support s = collect_support(tower, d);
    DegreeEngine engine(tower, opt);

    size_t ne = tower.poset.elems.size();
    mpz_class total = 0;
    DivisorMonomial mono(ne, 0);
    // dense composition enumeration over every support generator
    std::function<void(size_t, int, const mpz_class&)> rec = [&](size_t idx, int left,
                                                                 const mpz_class& coeff) {
        if (idx == s.ids.size()) {
            mono[0] = left + extra_h0;
            total += coeff * pow_z(s.h0, left) * engine.monomial_degree(mono);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            mono[s.ids[idx]] = a;
            rec(idx + 1, left - a, coeff * binom(left, a) * pow_z(s.coeff[idx], a));
        }
        mono[s.ids[idx]] = 0;
    };
    rec(0, power, 1);
    return total;
}

mpz_class self_intersection(const BlowupTower& tower, const DivisorClass& d,
                            EngineOptions opt) {
    return mixed_degree(tower, d, tower.n, 0, opt);
}

mpz_class self_intersection_reference(const BlowupTower& tower, const DivisorClass& d,
                                      EngineOptions opt) {
    return mixed_degree_reference(tower, d, tower.n, 0, opt);
}

DivisorClass eval_at(const DivisorClass& d, const mpz_class& m) {
    DivisorClass out = d;
    for (auto& c : out.coeff) c = IntPolynomial(c.eval(m));
    return out;
}

DegreeResult degree_d(const BlowupTower& tower, const mpz_class& m) {
    if (m < 1) throw precondition_error("multiplicity m must be >= 1");
    DegreeResult out;
    out.nice = is_nice(tower.poset);
    DivisorClass sbar = eval_at(build_Sbar(tower.poset), m);
    out.value = self_intersection(tower, sbar);
    return out;
}

}  // namespace matvar
