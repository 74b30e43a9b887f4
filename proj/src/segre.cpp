#include "matvar/segre.hpp"

#include "matvar/invariants.hpp"

namespace matvar {

namespace {

mpz_class pow_z(const mpz_class& b, unsigned long e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace

DivisorClass residual_divisor(const BlowupTower& tower, const mpz_class& m) {
    if (m < 1) throw precondition_error("multiplicity m must be >= 1");
    DivisorClass mh(Basis::E, tower.poset.elems.size());
    mh.coeff[0] = IntPolynomial(pow_z(m, tower.poset.rank()));
    DivisorClass sbar = change_basis(tower.poset, eval_at(build_Sbar(tower.poset), m), Basis::E);
    return mh - sbar;
}

SegreVector segre_class(const BlowupTower& tower, const mpz_class& m) {
    SegreVector sv;
    sv.m = m;
    sv.n = tower.n;
    sv.nice = is_nice(tower.poset);
    sv.residual = residual_divisor(tower, m);
    sv.components.resize(tower.n);
    for (int k = 0; k < tower.n; ++k) {
        mpz_class deg = mixed_degree(tower, sv.residual, tower.n - k, k);
        sv.components[k] = (tower.n - k - 1) % 2 == 0 ? deg : mpz_class(-deg);
    }
    return sv;
}

bool degree_from_segre_check(const BlowupTower& tower, const mpz_class& m) {
    mpz_class lhs = degree_d(tower, m).value;
    SegreVector sv = segre_class(tower, m);
    mpz_class mr = pow_z(m, tower.poset.rank());
    mpz_class rhs = pow_z(mr, tower.n);
    for (int k = 0; k < tower.n; ++k)
        rhs -= binom(tower.n, k) * pow_z(mr, k) * sv.components[k];
    return lhs == rhs;
}

bool segre_congruence_check(const BlowupTower& tower, const mpz_class& m) {
    mpz_class n = tower.n;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
        throw precondition_error("congruence requires a prime tower dimension");
    mpz_class p = characteristic_polynomial(tower.poset).eval(m);
    SegreVector sv = segre_class(tower, m);
    mpz_class rhs = pow_z(m, tower.poset.rank()) - sv.components[0];
    return ((p - rhs) % n) == 0;
}

}  // namespace matvar
