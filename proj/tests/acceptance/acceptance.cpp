// One PASS/FAIL line per acceptance criterion, with indented detail lines.
#include <algorithm>
#include <chrono>
#include <cstring>
#include <deque>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "dw/cli.hpp"

using namespace dw;

namespace {

struct Model {
    std::string name;
    Group G;
    CocycleSpec spec;
    Cochain omega;
    Tube t;
};

struct Bnd {
    const Model* m;
    std::string name;
    Boundary bd;
};

CocycleTerm term(CocycleTerm::Kind k, long n, int i = 0, int j = 0, int l = 0) {
    CocycleTerm t;
    t.kind = k;
    t.n = n;
    t.i = i;
    t.j = j;
    t.k = l;
    return t;
}

// Every model of the test matrix (|G| <= 12), library cocycles only.
std::deque<Model>& models() {
    static std::deque<Model> ms;
    if (!ms.empty()) return ms;
    auto add = [](std::string name, Group G, std::vector<CocycleTerm> terms) {
        ms.push_back({name, G, {}, {}, {}});
        Model& m = ms.back();
        m.spec.terms = terms;
        m.omega = make_cocycle(m.G, m.spec);
        m.t = build_tube(m.G, m.omega, &m.spec);
    };
    using K = CocycleTerm;
    Group Z2 = make_cyclic(2), Z3 = make_cyclic(3), Z4 = make_cyclic(4), S3 = make_s3();
    add("Z2", Z2, {});
    add("Z2 I^1", Z2, {term(K::TypeI, 1)});
    add("Z3", Z3, {});
    for (long n : {1, 2}) add("Z3 I^" + std::to_string(n), Z3, {term(K::TypeI, n)});
    add("Z4", Z4, {});
    for (long n : {1, 2}) add("Z4 I^" + std::to_string(n), Z4, {term(K::TypeI, n)});
    add("Z6", make_cyclic(6), {});
    add("Z6 I^1", make_cyclic(6), {term(K::TypeI, 1)});
    Group Z2Z2 = make_product({Z2, Z2});
    add("Z2xZ2", Z2Z2, {});
    add("Z2xZ2 II", Z2Z2, {term(K::TypeII, 1, 0, 1)});
    add("Z2xZ2 I0 I1 II", Z2Z2, {term(K::TypeI, 1, 0), term(K::TypeI, 1, 1), term(K::TypeII, 1, 0, 1)});
    Group Z2c = make_product({Z2, Z2, Z2});
    add("Z2^3", Z2c, {});
    add("Z2^3 III", Z2c, {term(K::TypeIII, 1, 0, 1, 2)});
    Group Z3Z3 = make_product({Z3, Z3});
    add("Z3xZ3", Z3Z3, {});
    add("Z3xZ3 II", Z3Z3, {term(K::TypeII, 1, 0, 1)});
    for (long p = 0; p < 6; ++p) add("S3 p=" + std::to_string(p), S3, p ? std::vector<K>{term(K::S3, p)} : std::vector<K>{});
    Group Z2S3 = make_product({Z2, S3});
    add("Z2xS3", Z2S3, {});
    add("Z2xS3 I0 S3^1", Z2S3, {term(K::TypeI, 1, 0), term(K::S3, 1, 1, 1, 1)});
    return ms;
}

std::string subgroup_name(const Group& G, const Subset& H) {
    std::string s = "{";
    for (size_t i = 0; i < H.size(); ++i) s += (i ? "," : "") + G.element_name(H[i]);
    return s + "}";
}

// Every valid boundary of every model: each subgroup, plus bilinear twists on the full group.
std::deque<Bnd>& boundaries() {
    static std::deque<Bnd> bs;
    if (!bs.empty()) return bs;
    for (auto& m : models()) {
        for (auto& H : subgroups(m.G)) {
            std::vector<std::pair<std::string, std::optional<Cochain>>> twists = {{"", std::nullopt}};
            bool full_product = (int)H.size() == m.G.n && m.G.factors.size() >= 2 && m.G.all_cyclic();
            if (full_product) {
                long p = gcdl(m.G.factors[0], m.G.factors[1]);
                for (long q = 1; q < p; ++q)
                    twists.push_back({" Omega^" + std::to_string(q), make_2cocycle(m.G, {{0, 1, q, p}})});
            }
            for (auto& [tn, tw] : twists) {
                try {
                    bs.push_back({&m, m.name + " H=" + subgroup_name(m.G, H) + tn, make_boundary(m.G, m.omega, H, tw)});
                } catch (const BoundaryInvalid&) {
                }
            }
        }
    }
    return bs;
}

struct Report {
    bool pass = true;
    std::vector<std::string> lines;
    void sub(bool ok, const std::string& s) {
        lines.push_back(std::string(ok ? "ok   " : "FAIL ") + s);
        pass &= ok;
    }
    void note(const std::string& s) { lines.push_back("     " + s); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. bundled tables
Report golden() {
    Report r;
    auto t0 = std::chrono::steady_clock::now();
    auto results = verify_golden("all");
    double dt = seconds_since(t0);
    for (auto& g : results) {
        r.sub(g.pass, g.table);
        for (auto& d : g.diff) r.note("  " + d);
    }
    r.sub(dt < 5.0, std::to_string(results.size()) + " tables recomputed in " + std::to_string(dt) + " s");
    return r;
}

// 2. Lagrangian algebras
std::string lagrangian_text(const Tube& t, const std::vector<std::pair<int, long>>& L) {
    std::string s = "{";
    for (size_t i = 0; i < L.size(); ++i)
        s += (i ? " " : "") + (L[i].second > 1 ? std::to_string(L[i].second) + "*" : "") + t.name(t.anyons[L[i].first]);
    return s + "}";
}

Report lagrangians() {
    Report r;
    auto check = [&](const std::string& what, const Group& G, const CocycleSpec& spec, const Subset& H,
                     const std::optional<Cochain>& twist, std::set<std::string> expect) {
        Cochain w = make_cocycle(G, spec);
        Tube t = build_tube(G, w, &spec);
        Boundary bd = make_boundary(G, w, H, twist);
        auto L = lagrangian_algebra(t, bd);
        std::set<std::string> got;
        for (auto [i, k] : L) got.insert(t.name(t.anyons[i]));
        std::string exp = "{";
        for (auto& e : expect) exp += (exp.size() > 1 ? " " : "") + e;
        exp += "}";
        bool ok = got == expect;
        r.sub(ok, what + ": " + lagrangian_text(t, L) + (ok ? "" : "  expected support " + exp));
    };
    using K = CocycleTerm;
    auto pair = [](long a, long b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
    Group Z4 = make_cyclic(4);
    CocycleSpec none;
    CocycleSpec i1{{term(K::TypeI, 1)}, false, std::nullopt}, i2{{term(K::TypeI, 2)}, false, std::nullopt};
    {
        std::set<std::string> e;
        for (int k = 0; k < 4; ++k) e.insert(pair(0, k));
        check("L0 Z4 I^1 H={0}", Z4, i1, {0}, std::nullopt, e);
    }
    {
        std::set<std::string> e;
        for (int g = 0; g < 4; ++g) e.insert(pair(g, 0));
        check("L1 Z4 H=Z4", Z4, none, closure(Z4, {1}), std::nullopt, e);
    }
    {
        std::set<std::string> e;
        for (int g = 0; g < 2; ++g)
            for (int k = 0; k < 2; ++k) e.insert(pair(g * 2, (2 * k + g) % 4));
        check("L2 Z4 I^2 H=<2>", Z4, i2, closure(Z4, {2}), std::nullopt, e);
    }
    for (int p : {2, 3}) {
        Group Zp = make_cyclic(p), G = make_product({Zp, Zp});
        auto el = [&](long a, long b) { return "(" + std::to_string((a % p + p) % p) + "," + std::to_string((b % p + p) % p) + ")"; };
        for (long q = 0; q < p; ++q) {
            std::set<std::string> e;
            for (int g = 0; g < p; ++g)
                for (int k = 0; k < p; ++k) e.insert("(" + el(0, g) + "," + el(k, 0) + ")");
            CocycleSpec s{{term(K::TypeII, q, 0, 1)}, false, std::nullopt};
            check("L3 Z" + std::to_string(p) + "xZ" + std::to_string(p) + " II^" + std::to_string(q) + " H=<(0,1)>", G, s,
                  closure(G, {G.index_of({0, 1})}), std::nullopt, e);
        }
        for (long m = 0; m < p; ++m) {
            std::set<std::string> e;
            for (int g1 = 0; g1 < p; ++g1)
                for (int g2 = 0; g2 < p; ++g2) e.insert("(" + el(g1, g2) + "," + el(m * g2, -m * g1) + ")");
            std::vector<int> all(G.n);
            for (int i = 0; i < G.n; ++i) all[i] = i;
            check("L4^" + std::to_string(m) + " Z" + std::to_string(p) + "xZ" + std::to_string(p) + " H=G", G, none, all,
                  make_2cocycle(G, {{0, 1, m, p}}), e);
        }
    }
    Group S3 = make_s3();
    auto s3spec = [](long p) { return CocycleSpec{{term(K::S3, p)}, false, std::nullopt}; };
    check("L1 S3 p=0 H=<r>", S3, s3spec(0), closure(S3, {1}), std::nullopt, {"(e,G0)", "(e,G1)", "(r,0)"});
    check("L1 S3 p=3 H=<r>", S3, s3spec(3), closure(S3, {1}), std::nullopt, {"(e,G0)", "(e,G1)", "(r,1)", "(r,2)"});
    for (long p : {0, 2, 4})
        check("L2 S3 p=" + std::to_string(p) + " H=<t>", S3, s3spec(p), closure(S3, {3}), std::nullopt,
              {"(e,G0)", "(t,0)", "(t,1)"});
    return r;
}

// 3. closed formula vs projector-trace oracle
Report oracle() {
    Report r;
    auto t0 = std::chrono::steady_clock::now();
    long pairs = 0, bad = 0;
    for (auto& b : boundaries()) {
        const Tube& t = b.m->t;
        SemiTube s = build_semitube(b.bd);
        if (!oracle_available(t, s)) {
            r.sub(false, b.name + ": oracle not available at this size");
            continue;
        }
        long mism = 0;
        for (auto& a : t.anyons)
            for (auto& c : s.anyons) {
                ++pairs;
                if (fusion_multiplicity(t, s, a, c) != oracle_fusion_multiplicity(t, s, a, c)) ++mism;
            }
        bad += mism;
        if (mism) r.sub(false, b.name + ": " + std::to_string(mism) + " mismatches");
    }
    double dt = seconds_since(t0);
    r.sub(bad == 0, std::to_string(boundaries().size()) + " boundaries, " + std::to_string(pairs) + " anyon pairs, " +
                        std::to_string(bad) + " mismatches");
    r.sub(dt < 60.0, "runtime " + std::to_string(dt) + " s");
    return r;
}

// 4. structural invariants
bool same_subset(Subset a, Subset b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

bool orbit_stabilizer_ok(const Group& G, const GSet& X) {
    for (auto& o : orbits(G, X)) {
        Subset st = stabilizer(G, X, o[0]);
        if (o.size() * st.size() != (size_t)G.n) return false;
    }
    for (int x = 0; x < X.npts; ++x) {
        Subset sx = stabilizer(G, X, x);
        for (int g = 0; g < G.n; ++g) {
            Subset conj;
            for (int h : sx) conj.push_back(G.conj(g, h));
            if (!same_subset(conj, stabilizer(G, X, X(g, x)))) return false;
        }
    }
    return true;
}

Report invariants() {
    Report r;
    // coboundary of a coboundary
    {
        bool ok = true;
        int checked = 0;
        unsigned seed = 1;
        for (auto& m : models()) {
            if (m.G.n > 6) continue;
            std::vector<std::pair<std::string, GSet>> sets = {{"trivial", trivial_gset(m.G)},
                                                              {"conjugation", conjugation_gset(m.G)}};
            for (auto& [sn, X] : sets)
                for (int deg : {0, 1, 2}) {
                    Cochain c = random_cochain(deg, m.G.n, 12, X.npts, seed++, false);
                    ok &= coboundary(m.G, coboundary(m.G, c, &X), &X).trivial();
                    ++checked;
                }
        }
        for (auto& b : boundaries()) {
            if (b.m->G.n > 6) continue;
            const Group& G = b.m->G;
            for (int deg : {0, 1, 2}) {
                Cochain c = random_cochain(deg, G.n, 12, b.bd.X.npts, seed++, false);
                ok &= coboundary(G, coboundary(G, c, &b.bd.X), &b.bd.X).trivial();
                ++checked;
            }
        }
        r.sub(ok, "d(d c) = 1 on " + std::to_string(checked) + " random cochains (untwisted, conjugation, coset G-sets)");
    }
    {
        bool ok = true;
        for (auto& m : models()) ok &= is_cocycle(m.G, m.omega).ok && is_normalized(m.omega);
        for (auto& m : models()) ok &= is_cocycle(m.G, m.t.beta, &m.t.A.X).ok;
        r.sub(ok, "library 3-cocycles and their slant products are cocycles (" + std::to_string(models().size()) + " models)");
    }
    {
        bool ok = true;
        for (auto& m : models()) ok &= is_associative(m.t.A);
        r.sub(ok, "tube algebras associative");
        bool oks = true;
        for (auto& b : boundaries()) oks &= is_associative(build_semitube(b.bd).A);
        r.sub(oks, "semi-tube algebras associative (" + std::to_string(boundaries().size()) + " boundaries)");
    }
    {
        double worst = 0;
        bool ok = true;
        for (auto& m : models()) {
            auto rep = check_idempotents(m.t.A, m.t.anyons);
            ok &= rep.ok(1e-9);
            worst = std::max({worst, rep.idem, rep.central, rep.orth, rep.complete});
        }
        for (auto& b : boundaries()) {
            SemiTube s = build_semitube(b.bd);
            auto rep = check_idempotents(s.A, s.anyons);
            if (!rep.ok(1e-9)) r.note("  idempotents fail on " + b.name);
            ok &= rep.ok(1e-9);
            worst = std::max({worst, rep.idem, rep.central, rep.orth, rep.complete});
        }
        std::ostringstream os;
        os << "idempotency, centrality, orthogonality, completeness (max deviation " << worst << ")";
        r.sub(ok, os.str());
    }
    {
        bool ok = true;
        for (auto& m : models()) {
            long s = 0;
            for (auto& a : m.t.anyons) s += (long)a.dim() * a.dim();
            ok &= s == (long)m.G.n * m.G.n;
        }
        r.sub(ok, "sum of squared anyon dimensions = |G|^2");
    }
    {
        bool ok = true;
        for (auto& m : models()) {
            ok &= is_action(m.G, conjugation_gset(m.G)) && orbit_stabilizer_ok(m.G, conjugation_gset(m.G));
            for (auto& H : subgroups(m.G)) {
                Cosets C = left_cosets(m.G, H);
                GSet X = coset_gset(m.G, C), P = pair_coset_gset(m.G, C);
                ok &= is_action(m.G, X) && is_action(m.G, P);
                ok &= orbit_stabilizer_ok(m.G, X) && orbit_stabilizer_ok(m.G, P);
            }
        }
        r.sub(ok, "orbit-stabilizer and Stab(gx) = g Stab(x) g^-1 (conjugation, cosets, coset pairs)");
    }
    {
        bool ok = true;
        for (auto& m : models())
            for (auto& H : subgroups(m.G)) {
                Cosets C = left_cosets(m.G, H);
                GSet P = pair_coset_gset(m.G, C);
                for (auto& D : double_cosets(m.G, H)) {
                    int d = D[0];
                    Subset K = k_x(m.G, H, d), ref;
                    for (int h : H) {
                        int x = m.G.conj(d, h);
                        if (std::binary_search(H.begin(), H.end(), x)) ref.push_back(x);
                    }
                    ok &= same_subset(K, ref) && same_subset(K, stabilizer(m.G, P, C.cid[d]));
                }
            }
        for (auto& b : boundaries()) {
            SemiTube s = build_semitube(b.bd);
            for (auto& blk : s.anyons) ok &= same_subset(blk.K, stabilizer(*b.bd.G, s.A.X, blk.base));
        }
        r.sub(ok, "K_x = H cap dHd^-1 = Stab(H, dH), and semi-tube blocks use it");
    }
    return r;
}

// 5. gauge invariance of boundary fusion tables
std::multiset<std::vector<long>> columns(const FusionTable& T) {
    std::multiset<std::vector<long>> cs;
    for (size_t j = 0; j < T.cols.size(); ++j) {
        std::vector<long> c;
        for (auto& row : T.m) c.push_back(row[j]);
        cs.insert(c);
    }
    return cs;
}

Report gauge() {
    Report r;
    unsigned seed = 7;
    int tables = 0;
    bool all = true;
    for (auto& b : boundaries()) {
        const Tube& t = b.m->t;
        SemiTube s0 = build_semitube(b.bd);
        FusionTable T0 = fusion_table(t, s0);
        auto L0 = lagrangian_algebra(t, b.bd);
        bool ok = true;
        for (int k = 0; k < 8; ++k) {
            Cochain xi = random_cochain(1, b.bd.G->n, b.bd.psi.L * 6, b.bd.X.npts, seed++, true);
            Boundary g = regauge(b.bd, xi);
            ok &= satisfies_boundary_condition(*g.G, g.omega, g.X, g.psi);
            SemiTube s = build_semitube(g);
            FusionTable T = fusion_table(t, s);
            ok &= T.rows == T0.rows && columns(T) == columns(T0) && lagrangian_algebra(t, g) == L0;
            ++tables;
        }
        if (!ok) r.sub(false, b.name);
        all &= ok;
    }
    r.sub(all, std::to_string(tables) + " regauged tables agree with the original (up to boundary-anyon relabeling)");
    return r;
}

// 6. physics cross-checks
Report physics() {
    Report r;
    {
        bool ok = true;
        for (auto& m : models()) {
            GsdReport g = torus_gsd(m.t);
            if (g.idempotency > 1e-9) {
                ok = false;
                r.note("  " + m.name + ": ground-state projector not idempotent");
            }
            if (g.rank != (long)m.t.anyons.size()) {
                ok = false;
                r.note("  " + m.name + ": gsd " + std::to_string(g.rank) + " vs " + std::to_string(m.t.anyons.size()) + " anyons");
            }
        }
        r.sub(ok, "torus GSD = number of anyons (" + std::to_string(models().size()) + " models)");
    }
    {
        bool ok = true, bosons = true;
        for (auto& b : boundaries()) {
            long s = 0;
            for (auto [i, k] : lagrangian_algebra(b.m->t, b.bd)) {
                s += k * b.m->t.anyons[i].dim();
                bosons &= std::abs(topological_spin(b.m->t.anyons[i]) - 1.0) < 1e-9;
            }
            if (s != b.m->G.n) r.note("  " + b.name + ": sum m d = " + std::to_string(s));
            ok &= s == b.m->G.n;
        }
        r.sub(ok, "sum_a m_{a,1} d_a = |G| on every valid boundary");
        r.sub(bosons, "every condensed anyon has topological spin 1");
    }
    {
        bool ok = true;
        int tested = 0;
        for (auto& m : models()) {
            bool abelian = m.G.abelian() && is_abelian_theory(m.t);
            bool s3 = m.name == "S3 p=0";
            if (!abelian && !s3) continue;
            ++tested;
            const auto& A = m.t.anyons;
            int vac = m.t.index_of(m.t.name(A[0]));
            for (size_t a = 0; a < A.size(); ++a) {
                int duals = 0;
                for (size_t b = 0; b < A.size(); ++b) {
                    long dsum = 0;
                    for (size_t c = 0; c < A.size(); ++c) dsum += bulk_fusion_N(m.t, A[a], A[b], A[c]) * A[c].dim();
                    ok &= dsum == (long)A[a].dim() * A[b].dim();
                    ok &= bulk_fusion_N(m.t, A[vac], A[a], A[b]) == (a == b);
                    ok &= bulk_fusion_N(m.t, A[a], A[vac], A[b]) == (a == b);
                    duals += bulk_fusion_N(m.t, A[a], A[b], A[vac]);
                }
                ok &= duals == 1;
            }
        }
        r.sub(ok, "bulk fusion: sum_c N_ab^c d_c = d_a d_b, vacuum is a unit, unique duals (" + std::to_string(tested) +
                      " models)");
    }
    return r;
}

// 7. boundary validity
bool valid(const Group& G, const CocycleSpec& spec, const Subset& H, const std::optional<Cochain>& thin = std::nullopt) {
    try {
        make_boundary(G, make_cocycle(G, spec), H, std::nullopt, thin);
        return true;
    } catch (const BoundaryInvalid&) {
        return false;
    }
}

Report validity() {
    Report r;
    Group S3 = make_s3();
    std::string hr, ht;
    bool okr = true, okt = true;
    for (long p = 0; p < 6; ++p) {
        CocycleSpec s{{term(CocycleTerm::S3, p)}, false, std::nullopt};
        bool vr = valid(S3, s, closure(S3, {1})), vt = valid(S3, s, closure(S3, {3}));
        okr &= vr == (p == 0 || p == 3);
        okt &= vt == (p == 0 || p == 2 || p == 4);
        if (vr) hr += std::to_string(p);
        if (vt) ht += std::to_string(p);
    }
    r.sub(okr, "S3 H=<r> valid for p in {" + hr + "}");
    r.sub(okt, "S3 H=<t> valid for p in {" + ht + "}");
    bool okz = true;
    for (int N : {2, 3, 4, 5, 6}) {
        Group Z = make_cyclic(N);
        for (long n = 1; n < N; ++n) okz &= !valid(Z, {{term(CocycleTerm::TypeI, n)}, false, std::nullopt}, closure(Z, {1}));
        okz &= valid(Z, {}, closure(Z, {1}));
    }
    r.sub(okz, "Z_N type-I twist n != 0 has no H = Z_N boundary (N = 2..6)");
    bool okw = true;
    for (int N : {2, 3}) {
        for (long n = 1; n < N; ++n) {
            CondensationWall w = condensation_wall_typeI(N, n);
            bool lib = valid(w.fm->G, w.fm->spec, w.H, w.thin), solved = valid(w.fm->G, w.fm->spec, w.H);
            okw &= lib && solved;
            r.note("  type I N=" + std::to_string(N) + " n=" + std::to_string(n) + ": closed form " + (lib ? "valid" : "INVALID") +
                   ", solver " + (solved ? "valid" : "INVALID"));
            for (long m = 0; m < N; ++m) {
                CondensationWall w2 = condensation_wall_typeI_II(N, n, m);
                // the N=3 fold has 729 elements: check omega|_H = d thin pointwise instead of lifting
                bool dense = w2.fm->G.n <= kDenseFoldLimit;
                bool v2 = dense ? valid(w2.fm->G, w2.fm->spec, w2.H, w2.thin)
                                : trivializes_on_subgroup(w2.fm->G, w2.fm->spec, w2.H, w2.thin);
                okw &= v2;
                r.note("  type I+II N=" + std::to_string(N) + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                       ": closed form " + (v2 ? "valid" : "INVALID") + (dense ? "" : " (on H)"));
            }
        }
    }
    {
        // control for the pointwise check: agrees with the dense path and rejects a perturbed trivializer
        CondensationWall w = condensation_wall_typeI_II(2, 1, 1);
        Cochain bad = w.thin;
        int a = w.H[1], b = w.H[2];
        bad.at(0, {a, b}) = modp(bad.at(0, {a, b}) + 1, bad.L);
        bool ctl = trivializes_on_subgroup(w.fm->G, w.fm->spec, w.H, w.thin) &&
                   !trivializes_on_subgroup(w.fm->G, w.fm->spec, w.H, bad) && !valid(w.fm->G, w.fm->spec, w.H, bad);
        r.sub(ctl, "pointwise subgroup check agrees with the dense lift (N=2) and rejects a perturbed cochain");
    }
    r.sub(okw, "condensation-wall subgroups valid for N in {2,3}");
    return r;
}

struct Criterion {
    int id;
    const char* title;
    std::function<Report()> run;
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> cs = {
        {1, "golden tables reproduced", golden},
        {2, "Lagrangian algebras match the displayed sets", lagrangians},
        {3, "closed formula equals the projector-trace oracle", oracle},
        {4, "structural invariants", invariants},
        {5, "gauge invariance under psi regauging", gauge},
        {6, "physics cross-checks", physics},
        {7, "boundary validity", validity},
    };
    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) only = std::atoi(argv[++i]);
    int failed = 0;
    for (auto& c : cs) {
        if (only && c.id != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Report r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.sub(false, std::string("exception: ") + e.what());
        }
        std::ostringstream dt;
        dt.precision(2);
        dt << std::fixed << seconds_since(t0);
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << dt.str() << " s)\n";
        for (auto& l : r.lines) std::cout << "    " << l << "\n";
        failed += !r.pass;
    }
    return failed ? 1 : 0;
}
