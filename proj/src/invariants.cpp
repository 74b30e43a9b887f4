#include "matvar/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace matvar {

mpz_class MoebiusTable::mu(int x, int z) const {
    if (!poset_->is_flat(x) || !poset_->is_flat(z))
        throw precondition_error("Moebius function is defined on L only");
    if (x == z) return 1;
    if (!poset_->leq(x, z)) return 0;
    auto key = std::make_pair(x, z);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    mpz_class sum = 0;
    for (int y : poset_->flat_ids())
        if (y != z && poset_->leq(x, y) && poset_->leq(y, z)) sum += mu(x, y);
    mpz_class val = -sum;
    memo_.emplace(key, val);
    return val;
}

mpz_class moebius(const ArrangementPoset& poset, int x, int z) {
    return MoebiusTable(poset).mu(x, z);
}

IntPolynomial characteristic_polynomial(const ArrangementPoset& poset, int x) {
    MoebiusTable table(poset);
    IntPolynomial p;
    for (int z : poset.flat_ids()) {
        if (!poset.leq(x, z)) continue;
        int e = poset.rank() - poset.elems[z].rank;
        p += IntPolynomial(table.mu(x, z)) * IntPolynomial::t_power(e);
    }
    return p;
}

IntPolynomial interval_characteristic_polynomial(const ArrangementPoset& poset, int y, int x) {
    if (!poset.leq(y, x)) throw precondition_error("interval requires y <= x");
    MoebiusTable table(poset);
    IntPolynomial p;
    for (int z : poset.flat_ids()) {
        if (!poset.leq(y, z) || !poset.leq(z, x)) continue;
        int e = poset.elems[x].rank - poset.elems[z].rank;
        p += IntPolynomial(table.mu(y, z)) * IntPolynomial::t_power(e);
    }
    return p;
}

IntPolynomial chromatic_polynomial(const Graph& g) {
    g.validate();
    if (g.edges.empty()) return IntPolynomial::t_power(g.vertices);
    ArrangementPoset poset = build_arrangement(g);
    return IntPolynomial::t_power(g.components()) * characteristic_polynomial(poset, 0);
}

namespace {

mpz_class beta_from_charpoly(const IntPolynomial& p, int rk) {
    if (rk == 0) return 0;  // trivial lattice
    mpz_class d = p.derivative().eval(1);
    return (rk - 1) % 2 == 0 ? d : mpz_class(-d);
}

}  // namespace

mpz_class beta(const ArrangementPoset& poset, int x) {
    int rk = poset.rank() - poset.elems[x].rank;
    return beta_from_charpoly(characteristic_polynomial(poset, x), rk);
}

mpz_class beta_of_interval(const ArrangementPoset& poset, int y, int x) {
    int rk = poset.elems[x].rank - poset.elems[y].rank;
    return beta_from_charpoly(interval_characteristic_polynomial(poset, y, x), rk);
}

mpz_class signed_beta(const ArrangementPoset& poset, int x) {
    mpz_class b = beta(poset, x);
    return (poset.rank() - poset.elems[x].rank) % 2 == 0 ? b : mpz_class(-b);
}

bool is_modular(const ArrangementPoset& poset, int x) {
    if (!poset.is_flat(x)) throw precondition_error("modularity is defined on L only");
    for (int z : poset.flat_ids()) {
        int meet = poset.flat_by_atoms(poset.elems[x].atoms & poset.elems[z].atoms);
        Mat inter = x == 0 || z == 0 ? Mat(poset.config.field, 0, poset.config.ambient_dim + 1)
                                     : intersect_row_spaces(poset.elems[x].span,
                                                            poset.elems[z].span);
        const Mat& meet_span = poset.elems[meet].span;
        if (meet == 0) {
            if (inter.rows != 0) return false;
        } else if (!(inter == meet_span)) {
            return false;
        }
    }
    return true;
}

ArrangementPoset contract(const ArrangementPoset& poset, int x) {
    if (!poset.is_flat(x)) throw precondition_error("contraction is defined on L only");
    if (x == 0) return poset;
    const Mat& basis = poset.elems[x].span;
    int k = basis.rows;
    const PointConfiguration& cfg = poset.config;

    // pivot columns of the span; the projection keeps the other coordinates
    std::vector<int> pivots;
    for (int r = 0; r < k; ++r) {
        int j = 0;
        while (basis.at(r, j).is_zero()) ++j;
        pivots.push_back(j);
    }
    std::vector<int> keep;
    for (int j = 0; j <= cfg.ambient_dim; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) keep.push_back(j);

    PointConfiguration out;
    out.field = cfg.field;
    out.ambient_dim = cfg.ambient_dim - k;
    std::vector<std::vector<Scalar>> seen;
    for (const auto& pt : cfg.points) {
        std::vector<Scalar> v = pt;
        if (reduce_by(basis, v)) continue;  // point lies on the center
        std::vector<Scalar> proj;
        proj.reserve(keep.size());
        for (int j : keep) proj.push_back(v[j]);
        normalize_projective(proj);
        if (std::find(seen.begin(), seen.end(), proj) != seen.end()) continue;
        seen.push_back(proj);
        out.points.push_back(std::move(proj));
    }
    return build_arrangement(out);
}

ArrangementPoset delete_point(const ArrangementPoset& poset, int atom) {
    const PointConfiguration& cfg = poset.config;
    if (atom < 0 || atom >= static_cast<int>(cfg.points.size()))
        throw precondition_error("deletion index out of range");
    PointConfiguration out = cfg;
    out.points.erase(out.points.begin() + atom);
    return build_arrangement(out);
}

bool is_isthmus(const ArrangementPoset& poset, int atom) {
    std::vector<std::vector<Scalar>> rest;
    for (size_t i = 0; i < poset.config.points.size(); ++i)
        if (static_cast<int>(i) != atom) rest.push_back(poset.config.points[i]);
    int r = rest.empty() ? 0 : rank_of(from_rows(poset.config.field, rest));
    return r < poset.rank();
}

ArrangementPoset minor_target_poset(MinorTarget t) {
    if (t == MinorTarget::L4) {
        // four collinear points in P^3
        PointConfiguration cfg;
        cfg.field = Field::Q();
        cfg.ambient_dim = 3;
        const long coords[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
        for (const auto& c : coords) {
            std::vector<Scalar> pt(4, Scalar(cfg.field, 0L));
            pt[0] = Scalar(cfg.field, c[0]);
            pt[1] = Scalar(cfg.field, c[1]);
            cfg.points.push_back(pt);
        }
        return build_arrangement(cfg);
    }
    // Fano plane: all nonzero vectors of GF(2)^3, embedded with codimension 2
    PointConfiguration cfg;
    cfg.field = Field::GF(2);
    cfg.ambient_dim = 4;
    for (int m = 1; m < 8; ++m) {
        std::vector<Scalar> pt(5, Scalar(cfg.field, 0L));
        for (int b = 0; b < 3; ++b) pt[b] = Scalar(cfg.field, (m >> b) & 1);
        cfg.points.push_back(pt);
    }
    return build_arrangement(cfg);
}

bool has_minor(const ArrangementPoset& poset, MinorTarget target, int max_points) {
    size_t npts = poset.config.points.size();
    if (static_cast<int>(npts) > max_points)
        throw resource_error("minor search bounded to " + std::to_string(max_points) + " points");
    ArrangementPoset tgt = minor_target_poset(target);
    size_t tn = tgt.config.points.size();

    for (int x : poset.flat_ids()) {
        ArrangementPoset c = x == 0 ? poset : contract(poset, x);
        size_t cn = c.config.points.size();
        if (c.rank() < tgt.rank() || cn < tn) continue;
        // deletions: keep every subset of size tn
        std::vector<char> pick(cn, 0);
        std::fill(pick.end() - tn, pick.end(), 1);
        do {
            PointConfiguration sub;
            sub.field = c.config.field;
            sub.ambient_dim = c.config.ambient_dim;
            for (size_t i = 0; i < cn; ++i)
                if (pick[i]) sub.points.push_back(c.config.points[i]);
            ArrangementPoset s = build_arrangement(sub);
            if (s.rank() == tgt.rank() && lattice_isomorphic(s, tgt)) return true;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return false;
}

bool is_nice(const ArrangementPoset& poset) {
    for (int x : poset.flat_ids()) {
        IntPolynomial p = characteristic_polynomial(poset, x);
        if (p.eval(2) < 0 || p.eval(3) < 0) return false;
    }
    return true;
}

}  // namespace matvar
