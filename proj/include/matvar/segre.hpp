#pragma once

#include <gmpxx.h>

#include <vector>

#include "matvar/degree.hpp"

namespace matvar {

/// The pushed-forward Segre class of the scheme cut out in P^n by the degree
/// m^{r(1)} hypersurfaces with prescribed multiplicities, by dimension.
struct SegreVector {
    mpz_class m;
    int n = 0;
    std::vector<mpz_class> components;  // s_k for k = 0 .. n-1
    DivisorClass residual;              // D(m), E-basis
    bool nice = false;
};

/// D(m) = m^{r(1)} H0 - Sbar(m) in the E-basis; the fixed divisorial part of
/// the resolved linear system.
DivisorClass residual_divisor(const BlowupTower& tower, const mpz_class& m);

/// s_k = (-1)^{n-k-1} * degree of D(m)^{n-k} H0^k for k = 0 .. n-1.
SegreVector segre_class(const BlowupTower& tower, const mpz_class& m);

/// Residual-intersection identity: d(m,n) = (m^{r(1)})^n - sum over k of
/// binom(n,k) (m^{r(1)})^k s_k, both sides computed independently.
bool degree_from_segre_check(const BlowupTower& tower, const mpz_class& m);

/// p(L,m) = m^{r(1)} - s_0(m,n) modulo the tower dimension, which must be a
/// prime exceeding r(1).
bool segre_congruence_check(const BlowupTower& tower, const mpz_class& m);

}  // namespace matvar
