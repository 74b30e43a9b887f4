#include "matvar/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace matvar {

namespace {

std::uint64_t atoms_in_span(const PointConfiguration& cfg, const Mat& span) {
    std::uint64_t mask = 0;
    for (size_t i = 0; i < cfg.points.size(); ++i)
        if (contains_vector(span, cfg.points[i])) mask |= 1ull << i;
    return mask;
}

Mat point_row(const PointConfiguration& cfg, int i) {
    return rref(from_rows(cfg.field, {cfg.points[i]}));
}

/// Sort canonically, assign ids, compute order relation and top.
void finalize(ArrangementPoset& p, std::vector<LatticeElement> raw) {
    std::sort(raw.begin(), raw.end(), [](const LatticeElement& a, const LatticeElement& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.span.str() < b.span.str();
    });
    int n = static_cast<int>(raw.size());
    p.elems = std::move(raw);
    for (int i = 0; i < n; ++i) p.elems[i].id = i;
    p.leq_.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == 0) {
                p.leq_[i][j] = 1;  // bottom below everything
            } else if (j == 0) {
                p.leq_[i][j] = 0;
            } else {
                p.leq_[i][j] = p.elems[i].rank <= p.elems[j].rank &&
                               row_space_leq(p.elems[i].span, p.elems[j].span);
            }
        }
    p.l_ids_.clear();
    p.m_ids_.clear();
    for (int i = 0; i < n; ++i)
        (p.elems[i].kind == ElemKind::Intersection ? p.m_ids_ : p.l_ids_).push_back(i);
    std::uint64_t all = p.config.points.empty() ? 0 : (~0ull >> (64 - p.config.points.size()));
    p.top = 0;
    for (int i : p.l_ids_)
        if (p.elems[i].kind == ElemKind::Flat && p.elems[i].atoms == all &&
            !p.config.points.empty())
            p.top = i;
}

}  // namespace

void PointConfiguration::validate() const {
    if (points.size() > 63) throw resource_error("configurations are limited to 63 points");
    std::vector<std::vector<Scalar>> norm;
    for (const auto& pt : points) {
        if (static_cast<int>(pt.size()) != ambient_dim + 1)
            throw input_error("point coordinate length must be ambient_dim + 1");
        bool zero = true;
        for (const Scalar& s : pt) {
            if (!(s.field() == field)) throw input_error("point scalar from the wrong field");
            if (!s.is_zero()) zero = false;
        }
        if (zero) throw input_error("zero vector is not a projective point");
        auto v = pt;
        normalize_projective(v);
        for (const auto& other : norm)
            if (other == v) throw input_error("configuration points must be projectively distinct");
        norm.push_back(std::move(v));
    }
    if (!points.empty()) {
        int r = rank_of(from_rows(field, points));
        if (r > ambient_dim - 1)
            throw precondition_error("span of configuration must have codimension >= 2");
    } else if (ambient_dim < 1) {
        throw precondition_error("ambient dimension must be >= 1");
    }
}

PointConfiguration embed_graph(const Graph& g, int padding, Field field) {
    g.validate();
    if (padding < 1) throw input_error("padding must be >= 1");
    int r = g.rank();
    int n = std::max(r + padding, g.vertices - 1);
    n = std::max(n, 1);
    PointConfiguration cfg;
    cfg.field = field;
    cfg.ambient_dim = n;
    for (auto [u, v] : g.edges) {
        std::vector<Scalar> pt(n + 1, Scalar(field, 0L));
        pt[u] = Scalar(field, 1L);
        pt[v] = pt[v] - Scalar(field, 1L);
        cfg.points.push_back(std::move(pt));
    }
    cfg.validate();
    return cfg;
}

ArrangementPoset build_flat_lattice(const PointConfiguration& config) {
    config.validate();
    ArrangementPoset poset;
    poset.config = config;

    std::vector<LatticeElement> raw;
    raw.push_back(LatticeElement{});  // bottom

    std::map<std::uint64_t, Mat> seen;
    std::vector<std::pair<Mat, std::uint64_t>> frontier;
    for (size_t i = 0; i < config.points.size(); ++i) {
        Mat span = point_row(config, static_cast<int>(i));
        std::uint64_t atoms = atoms_in_span(config, span);
        if (seen.emplace(atoms, span).second) frontier.emplace_back(span, atoms);
    }
    while (!frontier.empty()) {
        std::vector<std::pair<Mat, std::uint64_t>> next;
        for (const auto& [span, atoms] : frontier) {
            for (size_t i = 0; i < config.points.size(); ++i) {
                if (atoms & (1ull << i)) continue;
                Mat bigger = rref(stack_rows(span, point_row(config, static_cast<int>(i))));
                std::uint64_t atoms2 = atoms_in_span(config, bigger);
                if (seen.emplace(atoms2, bigger).second) next.emplace_back(bigger, atoms2);
            }
        }
        frontier = std::move(next);
    }
    for (const auto& [atoms, span] : seen) {
        LatticeElement e;
        e.kind = ElemKind::Flat;
        e.span = span;
        e.atoms = atoms;
        e.rank = span.rows;
        raw.push_back(std::move(e));
    }
    finalize(poset, std::move(raw));
    return poset;
}

void close_under_intersection(ArrangementPoset& poset) {
    std::vector<LatticeElement> family(poset.elems.begin() + 1, poset.elems.end());
    std::set<std::string> keys;
    for (const auto& e : family) keys.insert(e.span.str());

    bool changed = true;
    while (changed) {
        changed = false;
        size_t count = family.size();
        for (size_t i = 0; i < count; ++i) {
            for (size_t j = i + 1; j < count; ++j) {
                Mat inter = intersect_row_spaces(family[i].span, family[j].span);
                if (inter.rows == 0) continue;
                if (!keys.insert(inter.str()).second) continue;
                LatticeElement e;
                e.kind = ElemKind::Intersection;
                e.span = inter;
                e.atoms = atoms_in_span(poset.config, inter);
                e.rank = inter.rows;
                family.push_back(std::move(e));
                changed = true;
            }
        }
    }
    std::vector<LatticeElement> raw;
    raw.push_back(LatticeElement{});
    raw.insert(raw.end(), family.begin(), family.end());
    finalize(poset, std::move(raw));
}

ArrangementPoset build_arrangement(const PointConfiguration& config) {
    ArrangementPoset p = build_flat_lattice(config);
    close_under_intersection(p);
    return p;
}

ArrangementPoset build_arrangement(const Graph& g, int padding, Field field) {
    return build_arrangement(embed_graph(g, padding, field));
}

int ArrangementPoset::flat_by_atoms(std::uint64_t atoms) const {
    if (atoms == 0) return 0;
    for (int i : l_ids_)
        if (i != 0 && elems[i].atoms == atoms) return i;
    throw precondition_error("no flat with the requested atom set");
}

int ArrangementPoset::atom_elem(int atom) const { return flat_by_atoms(1ull << atom); }

std::vector<int> ArrangementPoset::ids_of_rank(int r) const {
    std::vector<int> out;
    for (const auto& e : elems)
        if (e.rank == r) out.push_back(e.id);
    return out;
}

std::string ArrangementPoset::fingerprint() const {
    std::string s = config.field.name() + "|" + std::to_string(config.ambient_dim);
    for (const auto& e : elems)
        s += "|" + std::to_string(e.rank) + ":" + std::to_string(static_cast<int>(e.kind)) + ":" +
             e.span.str();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::pair<int, int> meet_join(const ArrangementPoset& poset, int x, int y) {
    if (!poset.is_flat(x) || !poset.is_flat(y))
        throw precondition_error("meet/join are defined on L only");
    std::uint64_t inter = poset.elems[x].atoms & poset.elems[y].atoms;
    int meet = poset.flat_by_atoms(inter);
    int join;
    if (x == 0)
        join = y;
    else if (y == 0)
        join = x;
    else {
        Mat joined = rref(stack_rows(poset.elems[x].span, poset.elems[y].span));
        join = -1;
        for (int i : poset.flat_ids())
            if (i != 0 && poset.elems[i].span == joined) {
                join = i;
                break;
            }
        if (join < 0) throw precondition_error("join not found; lattice is inconsistent");
    }
    return {meet, join};
}

bool lattice_isomorphic(const ArrangementPoset& a, const ArrangementPoset& b) {
    size_t na = a.config.points.size(), nb = b.config.points.size();
    if (na != nb || a.rank() != b.rank()) return false;
    if (a.flat_ids().size() != b.flat_ids().size()) return false;

    auto flat_masks = [](const ArrangementPoset& p) {
        std::vector<std::pair<int, std::uint64_t>> v;  // (rank, atoms), skip bottom
        for (int i : p.flat_ids())
            if (i != 0) v.emplace_back(p.elems[i].rank, p.elems[i].atoms);
        return v;
    };
    auto fa = flat_masks(a), fb = flat_masks(b);
    std::set<std::pair<int, std::uint64_t>> fb_set(fb.begin(), fb.end());

    // per-atom invariant: multiset of (rank, size) over flats through the atom
    auto invariant = [](const std::vector<std::pair<int, std::uint64_t>>& flats, int atom) {
        std::vector<std::pair<int, int>> inv;
        for (const auto& [r, mask] : flats)
            if (mask & (1ull << atom)) inv.emplace_back(r, std::popcount(mask));
        std::sort(inv.begin(), inv.end());
        return inv;
    };
    std::vector<std::vector<std::pair<int, int>>> ia(na), ib(nb);
    for (size_t i = 0; i < na; ++i) ia[i] = invariant(fa, static_cast<int>(i));
    for (size_t i = 0; i < nb; ++i) ib[i] = invariant(fb, static_cast<int>(i));

    std::vector<int> map(na, -1);
    std::vector<char> used(nb, 0);
    auto consistent = [&]() {
        for (const auto& [r, mask] : fa) {
            std::uint64_t img = 0;
            for (size_t i = 0; i < na; ++i)
                if (mask & (1ull << i)) img |= 1ull << map[i];
            if (!fb_set.count({r, img})) return false;
        }
        return true;
    };
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == na) return consistent();
        for (size_t j = 0; j < nb; ++j) {
            if (used[j] || ia[i] != ib[j]) continue;
            map[i] = static_cast<int>(j);
            used[j] = 1;
            if (rec(i + 1)) return true;
            used[j] = 0;
        }
        return false;
    };
    return rec(0);
}

}  // namespace matvar
