#include "matvar/divisor.hpp"

#include <algorithm>

#include "matvar/invariants.hpp"

namespace matvar {

namespace {

void check_compatible(const DivisorClass& a, const DivisorClass& b) {
    if (a.basis != b.basis || a.coeff.size() != b.coeff.size())
        throw precondition_error("divisor classes live over different bases or posets");
}

}  // namespace

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    check_compatible(*this, o);
    DivisorClass out = *this;
    for (size_t i = 0; i < coeff.size(); ++i) out.coeff[i] += o.coeff[i];
    return out;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    check_compatible(*this, o);
    DivisorClass out = *this;
    for (size_t i = 0; i < coeff.size(); ++i) out.coeff[i] -= o.coeff[i];
    return out;
}

DivisorClass DivisorClass::operator*(const IntPolynomial& s) const {
    DivisorClass out = *this;
    for (auto& c : out.coeff) c = c * s;
    return out;
}

bool DivisorClass::operator==(const DivisorClass& o) const {
    return basis == o.basis && coeff == o.coeff;
}

DivisorClass DivisorClass::modulo_f(const ArrangementPoset& poset) const {
    DivisorClass out = *this;
    for (int y : poset.intersection_ids()) out.coeff[y] = IntPolynomial();
    return out;
}

DivisorClass h_class(const ArrangementPoset& poset, int x) {
    if (!poset.is_flat(x)) throw precondition_error("H-classes are indexed by L only");
    DivisorClass out(Basis::E, poset.elems.size());
    out.coeff[0] = IntPolynomial(1);
    if (x == 0) return out;
    for (int y : poset.flat_ids())
        if (y != 0 && poset.leq(y, x)) out.coeff[y] = IntPolynomial(-1);
    for (int z : poset.intersection_ids())
        if (poset.lt(z, x)) out.coeff[z] = IntPolynomial(-1);
    return out;
}

DivisorClass change_basis(const ArrangementPoset& poset, const DivisorClass& d, Basis target) {
    if (d.coeff.size() != poset.elems.size())
        throw precondition_error("divisor class does not match the poset");
    if (d.basis == target) return d;

    if (target == Basis::E) {
        // substitute the E-expansion of each H_x
        DivisorClass out(Basis::E, poset.elems.size());
        out.coeff[0] = d.coeff[0];
        for (int z : poset.intersection_ids()) out.coeff[z] = d.coeff[z];
        for (int x : poset.flat_ids()) {
            if (x == 0 || d.coeff[x].is_zero()) continue;
            out = out + h_class(poset, x) * d.coeff[x];
        }
        return out;
    }

    // E -> H: peel off H_x terms from the top rank down (unitriangular solve)
    DivisorClass out(Basis::H, poset.elems.size());
    DivisorClass residual = d;
    std::vector<int> flats = poset.flat_ids();
    std::sort(flats.begin(), flats.end(), [&](int a, int b) {
        return poset.elems[a].rank > poset.elems[b].rank;
    });
    for (int x : flats) {
        if (x == 0 || residual.coeff[x].is_zero()) continue;
        IntPolynomial c = -residual.coeff[x];
        out.coeff[x] = c;
        residual = residual - h_class(poset, x) * c;
    }
    out.coeff[0] = residual.coeff[0];
    for (int z : poset.intersection_ids()) out.coeff[z] = residual.coeff[z];
    return out;
}

CurveFunctional gamma(const ArrangementPoset& poset, int x) {
    if (!poset.is_flat(x)) throw precondition_error("curve classes are indexed by L only");
    CurveFunctional f;
    f.values.assign(poset.elems.size(), IntPolynomial());
    f.values[x] = IntPolynomial(1);
    return f;
}

CurveFunctional ell(const ArrangementPoset& poset) {
    CurveFunctional f;
    f.values.assign(poset.elems.size(), IntPolynomial());
    for (int x : poset.flat_ids()) f.values[x] = IntPolynomial(1);
    return f;
}

IntPolynomial pair(const ArrangementPoset& poset, const CurveFunctional& f,
                   const DivisorClass& d) {
    DivisorClass h = change_basis(poset, d, Basis::H);
    IntPolynomial out;
    for (size_t i = 0; i < h.coeff.size(); ++i) out += f.values[i] * h.coeff[i];
    return out;
}

DivisorClass build_S(const ArrangementPoset& poset) {
    DivisorClass out(Basis::E, poset.elems.size());
    int r = poset.rank();
    out.coeff[0] = IntPolynomial::t_power(r);
    for (int x : poset.flat_ids())
        if (x != 0) out.coeff[x] = -IntPolynomial::t_power(r - poset.elems[x].rank);
    return out;
}

DivisorClass build_Sbar(const ArrangementPoset& poset) {
    DivisorClass out(Basis::H, poset.elems.size());
    for (int x : poset.flat_ids()) out.coeff[x] = characteristic_polynomial(poset, x);
    return out;
}

DivisorClass canonical_class(const ArrangementPoset& poset, int n) {
    if (n <= poset.rank()) throw precondition_error("ambient dimension must exceed the rank");
    DivisorClass out(Basis::E, poset.elems.size());
    out.coeff[0] = IntPolynomial(-(n + 1));
    for (const auto& e : poset.elems)
        if (e.id != 0) out.coeff[e.id] = IntPolynomial(n - e.rank);
    return out;
}

DivisorClass beta_divisor(const ArrangementPoset& poset, int n) {
    DivisorClass out = canonical_class(poset, n);
    out.coeff[0] += IntPolynomial(1);
    return out + h_class(poset, poset.top) * IntPolynomial(n - poset.rank());
}

DivisorClass deletion_pushforward(const ArrangementPoset& poset, const DivisorClass& d, int atom,
                                  const ArrangementPoset& deleted) {
    DivisorClass h = change_basis(poset, d, Basis::H);
    DivisorClass out(Basis::H, deleted.elems.size());
    for (int x : poset.flat_ids()) {
        if (h.coeff[x].is_zero()) continue;
        // atoms of the image flat, with indices above the deleted point shifted
        std::uint64_t atoms = poset.elems[x].atoms & ~(1ull << atom);
        std::uint64_t low = atoms & ((1ull << atom) - 1);
        std::uint64_t image = low | ((atoms >> (atom + 1)) << atom);
        out.coeff[deleted.flat_by_atoms(image)] += h.coeff[x];
    }
    return out;
}

Restriction restrict_to(const ArrangementPoset& poset, int x, int n_sub) {
    if (!poset.is_flat(x)) throw precondition_error("restriction target must lie in L");
    int rx = poset.elems[x].rank;
    if (n_sub <= rx) throw precondition_error("sub-ambient dimension must exceed r(x)");

    Restriction res;
    res.x = x;
    PointConfiguration sub;
    sub.field = poset.config.field;
    sub.ambient_dim = n_sub;
    std::vector<int> picked;  // original atom indices, ascending
    if (x != 0) {
        const Mat& basis = poset.elems[x].span;
        for (size_t i = 0; i < poset.config.points.size(); ++i) {
            if (!(poset.elems[x].atoms & (1ull << i))) continue;
            std::vector<Scalar> c = coordinates_in(basis, poset.config.points[i]);
            c.resize(n_sub + 1, Scalar(sub.field, 0L));
            sub.points.push_back(std::move(c));
            picked.push_back(static_cast<int>(i));
        }
    }
    res.sub = build_arrangement(sub);

    res.elem_map.assign(poset.elems.size(), -1);
    res.elem_map[0] = 0;
    for (int z : poset.flat_ids()) {
        if (z == 0 || !poset.leq(z, x)) continue;
        std::uint64_t mask = 0;
        for (size_t k = 0; k < picked.size(); ++k)
            if (poset.elems[z].atoms & (1ull << picked[k])) mask |= 1ull << k;
        res.elem_map[z] = res.sub.flat_by_atoms(mask);
    }
    for (int z : poset.intersection_ids()) {
        if (!poset.lt(z, x)) continue;
        // re-coordinatize the span and look it up among the sub elements
        const Mat& zs = poset.elems[z].span;
        std::vector<std::vector<Scalar>> rows;
        for (int r = 0; r < zs.rows; ++r) {
            std::vector<Scalar> row(zs.cols, Scalar(sub.field, 0L));
            for (int j = 0; j < zs.cols; ++j) row[j] = zs.at(r, j);
            std::vector<Scalar> c = coordinates_in(poset.elems[x].span, row);
            c.resize(n_sub + 1, Scalar(sub.field, 0L));
            rows.push_back(std::move(c));
        }
        Mat img = rref(from_rows(sub.field, rows));
        int found = -1;
        for (const auto& e : res.sub.elems)
            if (e.id != 0 && e.span == img) {
                found = e.id;
                break;
            }
        if (found < 0) throw precondition_error("intersection element has no image in [0,x]");
        res.elem_map[z] = found;
    }
    return res;
}

DivisorClass modular_restriction(const ArrangementPoset& poset, const Restriction& res,
                                 const DivisorClass& d) {
    if (!is_modular(poset, res.x))
        throw precondition_error("divisor restriction requires a modular flat");
    DivisorClass e = change_basis(poset, d, Basis::E);
    DivisorClass out(Basis::E, res.sub.elems.size());
    out.coeff[0] = e.coeff[0];
    for (size_t z = 1; z < e.coeff.size(); ++z) {
        if (e.coeff[z].is_zero()) continue;
        int img = res.elem_map[z];
        if (img >= 0) out.coeff[img] += e.coeff[z];
    }
    return out;
}

}  // namespace matvar
