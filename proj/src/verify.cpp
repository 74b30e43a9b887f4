#include "matvar/verify.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "matvar/invariants.hpp"

namespace matvar {

namespace {

std::string poly2(const IntPolynomial& a, const IntPolynomial& b) {
    return "lhs=" + a.str() + " rhs=" + b.str();
}

std::string int2(const mpz_class& a, const mpz_class& b) {
    return "lhs=" + a.get_str() + " rhs=" + b.get_str();
}

DivisorClass unit_class(const ArrangementPoset& p, int id, Basis basis = Basis::E) {
    DivisorClass d(basis, p.elems.size());
    d.coeff[id] = IntPolynomial(1);
    return d;
}

/// Per-poset workspace: a shared Moebius memo and the to-H image of every
/// unit generator, with the suite's seeded faults applied. Every identity
/// below routes through this, so a mutation on one side of an identity is
/// visible as a mismatch.
struct Ctx {
    const ArrangementPoset& p;
    Mutation mut;
    MoebiusTable mtab;
    std::vector<DivisorClass> hunit;  // E-basis unit -> H-basis image

    Ctx(const ArrangementPoset& poset, Mutation m) : p(poset), mut(m), mtab(poset) {
        size_t ne = p.elems.size();
        hunit.reserve(ne);
        for (size_t z = 0; z < ne; ++z) hunit.push_back(to_h_peel(unit_class(p, z)));
    }

    mpz_class mu(int x, int z) const {
        mpz_class v = mtab.mu(x, z);
        if (mut == Mutation::MoebiusSign && x != z) v = -v;
        return v;
    }

    IntPolynomial charpoly(int x) const {
        IntPolynomial out;
        for (int z : p.flat_ids()) {
            if (!p.leq(x, z)) continue;
            out += IntPolynomial(mu(x, z)) * IntPolynomial::t_power(p.rank() - p.elems[z].rank);
        }
        return out;
    }

    IntPolynomial charpoly_interval(int y, int x) const {
        IntPolynomial out;
        for (int z : p.flat_ids()) {
            if (!p.leq(y, z) || !p.leq(z, x)) continue;
            out += IntPolynomial(mu(y, z)) *
                   IntPolynomial::t_power(p.elems[x].rank - p.elems[z].rank);
        }
        return out;
    }

    static mpz_class beta_from(const IntPolynomial& cp, int rk) {
        if (rk == 0) return 0;
        mpz_class d = cp.derivative().eval(1);
        return (rk - 1) % 2 == 0 ? d : mpz_class(-d);
    }

    mpz_class beta(int x) const { return beta_from(charpoly(x), p.rank() - p.elems[x].rank); }

    mpz_class beta_interval(int y, int x) const {
        return beta_from(charpoly_interval(y, x), p.elems[x].rank - p.elems[y].rank);
    }

    mpz_class signed_beta(int x) const {
        mpz_class b = beta(x);
        return (p.rank() - p.elems[x].rank) % 2 == 0 ? b : mpz_class(-b);
    }

    DivisorClass hcls(int x) const {
        DivisorClass h = h_class(p, x);
        if (mut == Mutation::HClassDropF)
            for (int z : p.intersection_ids()) h.coeff[z] = IntPolynomial();
        return h;
    }

    DivisorClass to_h(const DivisorClass& d) const {
        if (d.basis == Basis::H) return d;
        DivisorClass out(Basis::H, p.elems.size());
        for (size_t z = 0; z < d.coeff.size(); ++z) {
            if (d.coeff[z].is_zero()) continue;
            for (size_t i = 0; i < out.coeff.size(); ++i)
                if (!hunit[z].coeff[i].is_zero())
                    out.coeff[i] += hunit[z].coeff[i] * d.coeff[z];
        }
        return out;
    }

    DivisorClass to_e(const DivisorClass& d) const {
        if (d.basis == Basis::E) return d;
        DivisorClass out(Basis::E, p.elems.size());
        out.coeff[0] = d.coeff[0];
        for (int z : p.intersection_ids()) out.coeff[z] = d.coeff[z];
        for (int x : p.flat_ids())
            if (x != 0 && !d.coeff[x].is_zero()) out = out + hcls(x) * d.coeff[x];
        return out;
    }

    IntPolynomial pairf(const CurveFunctional& f, const DivisorClass& d) const {
        DivisorClass h = to_h(d);
        IntPolynomial out;
        for (size_t i = 0; i < h.coeff.size(); ++i) out += f.values[i] * h.coeff[i];
        return out;
    }

    DivisorClass sbar() const {
        DivisorClass out(Basis::H, p.elems.size());
        for (int x : p.flat_ids()) out.coeff[x] = charpoly(x);
        return out;
    }

    /// Meet inside L via the atom bitmasks (no join computation).
    int meet(int x, int z) const { return p.flat_by_atoms(p.elems[x].atoms & p.elems[z].atoms); }

  private:
    DivisorClass to_h_peel(const DivisorClass& d) const {
        DivisorClass out(Basis::H, p.elems.size());
        DivisorClass residual = d;
        std::vector<int> flats = p.flat_ids();
        std::sort(flats.begin(), flats.end(),
                  [&](int a, int b) { return p.elems[a].rank > p.elems[b].rank; });
        for (int x : flats) {
            if (x == 0 || residual.coeff[x].is_zero()) continue;
            IntPolynomial c = -residual.coeff[x];
            out.coeff[x] = c;
            residual = residual - hcls(x) * c;
        }
        out.coeff[0] = residual.coeff[0];
        for (int z : p.intersection_ids()) out.coeff[z] = residual.coeff[z];
        return out;
    }
};

EngineOptions mut_engine(Mutation m) {
    EngineOptions opt;
    opt.flip_exceptional_sign = m == Mutation::DegreeSign;
    return opt;
}

struct Checker {
    IdentityReport* report;
    const std::string* entry;

    void operator()(bool ok, const std::string& identity, const std::string& detail) const {
        ++report->checks;
        if (!ok) report->failures.push_back({identity, *entry, detail});
    }
};

void run_entry(const CorpusEntry& ce, Mutation mut, IdentityReport& report) {
    const ArrangementPoset& p = ce.poset;
    Checker check{&report, &ce.name};
    int r = p.rank();
    int n = r + 1;
    size_t ne = p.elems.size();
    bool small = ne <= 40;
    auto id_str = [](int a) { return std::to_string(a); };

    Ctx c(p, mut);
    DivisorClass S = build_S(p);
    DivisorClass S_h = c.to_h(S);

    // pairings of the unit generators against the gamma and ell classes:
    // gamma_x reads off the H_x coordinate
    for (size_t z = 1; z < ne; ++z) {
        const DivisorClass& hz = c.hunit[z];
        bool is_l = p.is_flat(static_cast<int>(z));
        IntPolynomial lsum;
        for (int x : p.flat_ids()) {
            if (is_l) {
                IntPolynomial rhs(-c.mu(x, static_cast<int>(z)));
                check(hz.coeff[x] == rhs, "exceptional-vs-moebius pairing",
                      "x=" + id_str(x) + " z=" + id_str(static_cast<int>(z)) + " " +
                          poly2(hz.coeff[x], rhs));
            } else {
                check(hz.coeff[x].is_zero(), "F pairs to zero",
                      "x=" + id_str(x) + " y=" + id_str(static_cast<int>(z)));
            }
            lsum += hz.coeff[x];
        }
        check(lsum.is_zero(), "ell kills exceptional divisors",
              "z=" + id_str(static_cast<int>(z)));
    }
    for (int x : p.flat_ids()) {
        IntPolynomial cp = c.charpoly(x);
        check(S_h.coeff[x] == cp, "S pairs to the contraction polynomial",
              "x=" + id_str(x) + " " + poly2(S_h.coeff[x], cp));
    }
    {
        IntPolynomial lsum;
        for (int x : p.flat_ids()) lsum += S_h.coeff[x];
        check(lsum == IntPolynomial::t_power(r), "S against ell", lsum.str());
        IntPolynomial sum;
        for (int x : p.flat_ids()) sum += c.charpoly(x);
        check(sum == IntPolynomial::t_power(r), "contraction polynomials sum to t^r",
              sum.str());
    }

    // the H-span representative of S carries the contraction polynomials
    check(c.to_e(c.sbar()).modulo_f(p) == S.modulo_f(p), "Sbar equals S modulo F", "");

    // canonical and beta divisors
    if (r >= 1) {
        for (int nn : {n, n + 1}) {
            IntPolynomial w = c.to_h(canonical_class(p, nn)).coeff[0];
            mpz_class lhs = 1 + w.constant();
            if (r % 2 != 0) lhs = -lhs;
            check(w.is_constant() && lhs == c.beta(0), "beta from the canonical divisor",
                  "n=" + id_str(nn) + " " + int2(lhs, c.beta(0)));
        }
    }
    {
        DivisorClass wt = c.to_h(beta_divisor(p, n));
        for (int x : p.flat_ids()) {
            mpz_class rhs = c.signed_beta(x);
            check(wt.coeff[x].is_constant() && wt.coeff[x].constant() == rhs,
                  "beta divisor pairs to signed beta",
                  "x=" + id_str(x) + " " + int2(wt.coeff[x].constant(), rhs));
        }
        for (int y : p.flat_ids()) {
            mpz_class sum = 0;
            for (int x : p.flat_ids())
                if (p.leq(y, x)) sum += c.signed_beta(x);
            mpz_class rhs = p.elems[y].rank - r;
            check(sum == rhs, "signed beta sums over up-sets",
                  "y=" + id_str(y) + " " + int2(sum, rhs));
        }
    }

    // top self-intersections: H0^n = 1 and H_x^n = 0, plus the vanishing of
    // high powers of H_x; per-rank representatives on the larger posets keep
    // the suite fast
    {
        BlowupTower tower = make_tower(p, n);
        EngineOptions opt = mut_engine(mut);
        mpz_class h0n = self_intersection(tower, unit_class(p, 0), opt);
        check(h0n == 1, "H0 to the n", h0n.get_str());
        auto down_set = [&](int x) {
            size_t count = 0;
            for (size_t i = 1; i < ne; ++i)
                if (p.lt(static_cast<int>(i), x)) ++count;
            return count;
        };
        std::vector<int> sample;
        if (small) {
            for (int x : p.flat_ids())
                if (x != 0) sample.push_back(x);
        } else {
            for (int rk = 1; rk <= r; ++rk)
                for (int x : p.ids_of_rank(rk))
                    if (p.is_flat(x) && down_set(x) <= 120) {
                        sample.push_back(x);
                        break;
                    }
        }
        for (int x : sample) {
            mpz_class v = self_intersection(tower, c.hcls(x), opt);
            check(v == 0, "H_x to the n vanishes", "x=" + id_str(x) + " got " + v.get_str());
            if (!small) continue;
            for (int k = n + 1 - p.elems[x].rank; k < n; ++k) {
                mpz_class w = mixed_degree(tower, c.hcls(x), k, n - k, opt);
                check(w == 0, "high powers of H_x vanish",
                      "x=" + id_str(x) + " k=" + id_str(k) + " got " + w.get_str());
            }
        }
    }

    // deletion identities, one atom at a time
    for (size_t e = 0; e < p.config.points.size(); ++e) {
        int ea = p.atom_elem(static_cast<int>(e));
        ArrangementPoset pd = delete_point(p, static_cast<int>(e));
        Ctx cd(pd, mut);
        bool isthmus = is_isthmus(p, static_cast<int>(e));
        std::string tag = "e=" + id_str(static_cast<int>(e));

        IntPolynomial pl = c.charpoly(0);
        IntPolynomial pld = cd.charpoly(0);
        IntPolynomial plc = c.charpoly(ea);
        if (!isthmus)
            check(pl == pld - plc, "deletion-contraction for p",
                  tag + " " + poly2(pl, pld - plc));
        else
            check(pl == (IntPolynomial::t_power(1) - IntPolynomial(1)) * pld,
                  "isthmus factorization for p", tag);

        // pushforward of S
        DivisorClass push = deletion_pushforward(p, S_h, static_cast<int>(e), pd);
        DivisorClass sd = cd.to_h(build_S(pd)).modulo_f(pd);
        DivisorClass want = isthmus ? sd * IntPolynomial::t_power(1) : sd;
        check(push.modulo_f(pd) == want, "pushforward of S", tag);

        // the pullback of gamma0': pairing each H_x against gamma0' after
        // pushing forward matches gamma0 + gamma_e upstairs
        for (int x : p.flat_ids()) {
            DivisorClass hx = unit_class(p, x, Basis::H);
            DivisorClass pushx = deletion_pushforward(p, hx, static_cast<int>(e), pd);
            IntPolynomial lhs = pushx.coeff[0];
            IntPolynomial rhs((x == 0 ? 1 : 0) + (x == ea ? 1 : 0));
            check(lhs == rhs, "gamma0 pullback under deletion",
                  tag + " x=" + id_str(x) + " " + poly2(lhs, rhs));
        }

        // beta divisor pushforward, modulo F
        {
            DivisorClass lw =
                deletion_pushforward(p, c.to_h(beta_divisor(p, n)), static_cast<int>(e), pd);
            DivisorClass rw = cd.to_h(beta_divisor(pd, n));
            int drop = r - pd.rank();
            if (drop != 0) rw.coeff[pd.top] -= IntPolynomial(drop);
            check(lw.modulo_f(pd) == rw.modulo_f(pd), "beta divisor pushforward", tag);
        }

        if (!isthmus) {
            mpz_class lhs = c.beta(0);
            mpz_class rhs = cd.beta(0) + c.beta(ea);
            check(lhs == rhs, "beta additivity", tag + " " + int2(lhs, rhs));
        }
    }

    // modular restriction identities
    for (int x : p.flat_ids()) {
        if (!is_modular(p, x)) continue;
        if (!small && x == p.top) continue;  // the identity restriction, skipped when costly
        int rx = p.elems[x].rank;
        int nsub = rx + 1;
        Restriction res = restrict_to(p, x, nsub);
        Ctx cs(res.sub, mut);
        std::string tag = "x=" + id_str(x);

        DivisorClass lhs = modular_restriction(p, res, S);
        DivisorClass rhs = build_S(res.sub) * IntPolynomial::t_power(r - rx);
        check(lhs == rhs, "restriction of S", tag);

        DivisorClass lb = modular_restriction(p, res, c.to_e(c.sbar()));
        DivisorClass rb = cs.to_e(cs.sbar()) * IntPolynomial::t_power(r - rx);
        check(lb.modulo_f(res.sub) == rb.modulo_f(res.sub), "restriction of Sbar modulo F",
              tag);

        if (x != 0) {
            DivisorClass lw = modular_restriction(p, res, beta_divisor(p, n));
            DivisorClass rw = beta_divisor(res.sub, nsub);
            if (r - rx != 0) rw = rw - h_class(res.sub, res.sub.top) * IntPolynomial(r - rx);
            check(lw == rw, "beta divisor restriction", tag);
        }

        for (int y : p.flat_ids()) {
            if (!p.leq(y, x)) continue;
            std::string tag2 = tag + " y=" + id_str(y);
            IntPolynomial sum;
            mpz_class bsum = 0;
            for (int z : p.flat_ids()) {
                if (c.meet(z, x) != y) continue;
                sum += c.charpoly(z);
                bsum += c.signed_beta(z);
            }
            IntPolynomial want = c.charpoly_interval(y, x) * IntPolynomial::t_power(r - rx);
            check(sum == want, "modular fiber sum of contraction polynomials",
                  tag2 + " " + poly2(sum, want));
            if (p.lt(y, x)) {
                mpz_class bi = c.beta_interval(y, x);
                if ((rx - p.elems[y].rank) % 2 != 0) bi = -bi;
                check(bi == bsum, "modular fiber sum of signed beta",
                      tag2 + " " + int2(bi, bsum));
            }
        }

        // factorization of p over a modular flat
        {
            IntPolynomial factor;
            mpz_class msum = 0;
            for (int y : p.flat_ids()) {
                if (c.meet(y, x) != 0) continue;
                factor += IntPolynomial(c.mu(0, y)) *
                          IntPolynomial::t_power(r - rx - p.elems[y].rank);
                msum += c.mu(0, y);
            }
            IntPolynomial lhsp = c.charpoly(0);
            IntPolynomial rhsp = c.charpoly_interval(0, x) * factor;
            check(lhsp == rhsp, "modular factorization of p", tag + " " + poly2(lhsp, rhsp));
            if (x != 0) {
                mpz_class bl = c.beta(0);
                mpz_class br = c.beta_interval(0, x) * msum;
                if ((r - rx) % 2 != 0) br = -br;
                check(bl == br, "modular decomposition of beta", tag + " " + int2(bl, br));
            }
        }
    }

    // niceness agrees with direct nonnegativity at small integers
    {
        bool direct = true;
        for (int x : p.flat_ids()) {
            IntPolynomial cp = characteristic_polynomial(p, x);
            for (long v = 1; v <= 10 && direct; ++v)
                if (cp.eval(v) < 0) direct = false;
        }
        check(is_nice(p) == direct, "niceness vs direct evaluation", "");
    }

    // graph entries: coloring counts three ways
    if (ce.graph) {
        const Graph& g = *ce.graph;
        IntPolynomial geometric = IntPolynomial::t_power(g.components()) * S_h.coeff[0];
        IntPolynomial recursive = chromatic_by_deletion_contraction(g);
        check(geometric == recursive, "chromatic via geometry vs recursion",
              poly2(geometric, recursive));
        for (long m = 0; m <= 4; ++m) {
            mpz_class lhs = geometric.eval(m);
            mpz_class rhs = chromatic_by_enumeration(g, m);
            check(lhs == rhs, "chromatic vs enumeration",
                  "m=" + std::to_string(m) + " " + int2(lhs, rhs));
        }
    }
}

}  // namespace

std::vector<CorpusEntry> default_corpus(int max_vertices) {
    std::vector<CorpusEntry> out;
    int idx = 0;
    for (const Graph& g : all_graphs_up_to(max_vertices)) {
        CorpusEntry ce;
        ce.name = "graph-" + std::to_string(idx++) + "-v" + std::to_string(g.vertices) + "e" +
                  std::to_string(g.edges.size());
        ce.graph = g;
        ce.poset = build_arrangement(g);
        out.push_back(std::move(ce));
    }

    out.push_back({"four-point-line", std::nullopt, minor_target_poset(MinorTarget::L4)});
    out.push_back({"fano-gf2", std::nullopt, minor_target_poset(MinorTarget::F7)});

    auto from_ints = [](Field f, int dim, const std::vector<std::vector<long>>& pts) {
        PointConfiguration cfg;
        cfg.field = f;
        cfg.ambient_dim = dim;
        for (const auto& row : pts) {
            std::vector<Scalar> v(dim + 1, Scalar(f, 0L));
            for (size_t j = 0; j < row.size(); ++j) v[j] = Scalar(f, row[j]);
            cfg.points.push_back(std::move(v));
        }
        return build_arrangement(cfg);
    };
    out.push_back({"uniform-3-4", std::nullopt,
                   from_ints(Field::Q(), 4, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}})});
    out.push_back({"uniform-3-5", std::nullopt,
                   from_ints(Field::Q(), 4,
                             {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}})});

    // seeded random rational configurations
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> coord(-2, 2);
    std::uniform_int_distribution<int> npts(4, 6);
    for (int t = 0; t < 3; ++t) {
        PointConfiguration cfg;
        cfg.field = Field::Q();
        cfg.ambient_dim = 5;
        int want = npts(rng);
        while (static_cast<int>(cfg.points.size()) < want) {
            std::vector<Scalar> v(6, Scalar(cfg.field, 0L));
            for (int j = 0; j < 4; ++j) v[j] = Scalar(cfg.field, static_cast<long>(coord(rng)));
            PointConfiguration trial = cfg;
            trial.points.push_back(v);
            try {
                trial.validate();
            } catch (const std::exception&) {
                continue;
            }
            cfg = std::move(trial);
        }
        out.push_back({"random-" + std::to_string(t), std::nullopt, build_arrangement(cfg)});
    }
    return out;
}

mpz_class chromatic_by_enumeration(const Graph& g, long m, int max_vertices) {
    g.validate();
    if (g.vertices > max_vertices)
        throw resource_error("coloring enumeration bounded to " +
                             std::to_string(max_vertices) + " vertices");
    if (m < 0) throw input_error("color count must be nonnegative");
    if (m == 0) return g.vertices == 0 ? 1 : 0;
    std::vector<int> color(g.vertices, 0);
    mpz_class count = 0;
    while (true) {
        bool proper = true;
        for (auto [u, v] : g.edges)
            if (color[u] == color[v]) {
                proper = false;
                break;
            }
        if (proper) ++count;
        int i = 0;
        while (i < g.vertices && ++color[i] == m) color[i++] = 0;
        if (i == g.vertices) break;
    }
    return count;
}

IntPolynomial chromatic_by_deletion_contraction(const Graph& g) {
    thread_local std::map<unsigned long, IntPolynomial> memo;
    g.validate();
    if (g.edges.empty()) return IntPolynomial::t_power(g.vertices);
    unsigned long key = g.canonical_key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    IntPolynomial out = chromatic_by_deletion_contraction(g.delete_edge(0)) -
                        chromatic_by_deletion_contraction(g.contract_edge(0));
    memo.emplace(key, out);
    return out;
}

IdentityReport run_identity_suite(const std::vector<CorpusEntry>& corpus, Mutation mutation) {
    IdentityReport report;
    std::vector<IdentityReport> parts(corpus.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(corpus.size()); ++i)
        run_entry(corpus[i], mutation, parts[i]);
    for (const auto& part : parts) {
        report.checks += part.checks;
        report.failures.insert(report.failures.end(), part.failures.begin(),
                               part.failures.end());
        report.notes.insert(report.notes.end(), part.notes.begin(), part.notes.end());
    }
    return report;
}

IdentityReport congruence_scan(const std::vector<CorpusEntry>& corpus, long m_max, int n_max) {
    IdentityReport report;
    for (const auto& ce : corpus) {
        const ArrangementPoset& p = ce.poset;
        Checker check{&report, &ce.name};
        if (!is_nice(p)) {
            report.notes.push_back(ce.name + ": not nice, skipped");
            continue;
        }
        int r = p.rank();
        IntPolynomial cp = characteristic_polynomial(p);
        for (int n = r + 1; n <= n_max; ++n) {
            mpz_class nz = n;
            bool prime = mpz_probab_prime_p(nz.get_mpz_t(), 30) != 0;
            BlowupTower tower = make_tower(p, n);
            for (long m = 1; m <= m_max; ++m) {
                mpz_class d = degree_d(tower, m).value;
                mpz_class pm = cp.eval(m);
                bool congruent = (d - pm) % n == 0;
                std::string tag = "m=" + std::to_string(m) + " n=" + std::to_string(n);
                if (prime) {
                    check(congruent, "degree congruent to p", tag + " " + int2(d % n, pm % n));
                    check(segre_congruence_check(tower, m), "Segre number congruent to p",
                          tag);
                    // the Fermat step the congruence rests on
                    mpz_class mr;
                    mpz_ui_pow_ui(mr.get_mpz_t(), static_cast<unsigned long>(m),
                                  static_cast<unsigned long>(r));
                    mpz_class mrn;
                    mpz_pow_ui(mrn.get_mpz_t(), mr.get_mpz_t(), static_cast<unsigned long>(n));
                    check((mrn - mr) % n == 0, "Fermat step", tag);
                    // for n beyond p(m), the least residue recovers p(m) itself
                    if (pm >= 0 && pm < n) {
                        mpz_class res = ((d % n) + n) % n;
                        check(res == pm, "least residue recovers p", tag);
                    }
                } else {
                    report.notes.push_back(ce.name + " " + tag + ": non-prime congruence " +
                                           std::string(congruent ? "holds" : "fails"));
                }
            }
        }
    }
    return report;
}

}  // namespace matvar
