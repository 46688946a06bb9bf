#include "dw/walls.hpp"

#include <algorithm>
#include <stdexcept>

namespace dw {

std::unique_ptr<FoldedModel> fold(const ModelSpec& left, const ModelSpec& right) {
    if (left.spec.table || right.spec.table) throw std::invalid_argument("fold: library cocycles only");
    auto fm = std::make_unique<FoldedModel>();
    fm->left = left;
    fm->right = right;
    fm->G = make_product({left.G, right.G});
    int shift = (int)left.G.factors.size();
    for (auto t : left.spec.terms) {
        if (left.spec.conjugate) t.n = -t.n;
        fm->spec.terms.push_back(t);
    }
    for (auto t : right.spec.terms) {
        if (!right.spec.conjugate) t.n = -t.n;
        t.i += shift;
        t.j += shift;
        t.k += shift;
        fm->spec.terms.push_back(t);
    }
    if (fm->G.n <= kDenseFoldLimit) fm->omega = make_cocycle(fm->G, fm->spec);
    fm->tl = build_tube(fm->left.G, make_cocycle(fm->left.G, left.spec), &fm->left.spec);
    fm->tr = build_tube(fm->right.G, make_cocycle(fm->right.G, right.spec), &fm->right.spec);
    return fm;
}

Block fold_anyon(const FoldedModel& fm, const Block& a, const Block& b) {
    const Group& F = fm.G;
    Block f;
    f.label = a.label + "|" + b.label;
    f.d = a.d * b.d;
    f.local.assign(F.n, -1);
    for (size_t i = 0; i < a.orbit.size(); ++i)
        for (size_t j = 0; j < b.orbit.size(); ++j) {
            int x = fm.pair(a.orbit[i], b.orbit[j]);
            std::vector<cd> chi(F.n, 0.0);
            Subset st;
            for (int k : a.stab[i])
                for (int l : b.stab[j]) {
                    int y = fm.pair(k, l);
                    chi[y] = a.chi[i][k] * std::conj(b.chi[j][l]);
                    st.push_back(y);
                }
            std::sort(st.begin(), st.end());
            f.local[x] = (int)f.orbit.size();
            f.orbit.push_back(x);
            f.chi.push_back(chi);
            f.stab.push_back(st);
        }
    // orbit sorted by element index, as produced by decompose
    std::vector<size_t> ord(f.orbit.size());
    for (size_t i = 0; i < ord.size(); ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](size_t p, size_t q) { return f.orbit[p] < f.orbit[q]; });
    Block g = f;
    for (size_t i = 0; i < ord.size(); ++i) {
        g.orbit[i] = f.orbit[ord[i]];
        g.chi[i] = f.chi[ord[i]];
        g.stab[i] = f.stab[ord[i]];
        g.local[g.orbit[i]] = (int)i;
    }
    g.base = g.orbit.front();
    g.K = g.stab[0];
    return g;
}

TunnelingTable tunneling_table(const FoldedModel& fm, const SemiTube& s) {
    int triv = s.trivial_index();
    if (triv < 0) throw std::runtime_error("tunneling: no trivial boundary anyon");
    const Block& tb = s.anyons[triv];
    TunnelingTable T;
    for (auto& a : fm.tl.anyons) T.rows.push_back(fm.tl.name(a));
    for (auto& b : fm.tr.anyons) T.cols.push_back(fm.tr.name(b));
    int vac = -1;
    for (size_t j = 0; j < fm.tr.anyons.size() && vac < 0; ++j) {
        auto& b = fm.tr.anyons[j];
        bool t = b.base == 0;
        for (int h : b.K) t = t && std::abs(b.chi[0][h] - 1.0) < 1e-9;
        if (t) vac = (int)j;
    }
    for (auto& a : fm.tl.anyons) {
        std::vector<long> row;
        for (auto& b : fm.tr.anyons) {
            Block f = fold_anyon(fm, a, b);
            row.push_back(round_multiplicity(fusion_sum(s, f, tb), fm.tl.name(a) + " -> " + fm.tr.name(b)));
        }
        bool zero = true;
        for (long v : row) zero &= v == 0;
        T.kind.push_back(zero ? "confined" : (vac >= 0 && row[vac] > 0) ? "condensed" : "tunnels");
        T.m.push_back(row);
    }
    return T;
}

static CocycleTerm term(CocycleTerm::Kind k, int i, int j, long n) {
    CocycleTerm t;
    t.kind = k;
    t.i = i;
    t.j = j;
    t.n = n;
    return t;
}

CondensationWall condensation_wall_typeI(int N, long n) {
    if (N < 2) throw std::invalid_argument("condensation wall: N >= 2");
    ModelSpec left{make_cyclic(N * N), {}};
    ModelSpec right{make_cyclic(N), {}};
    right.spec.terms.push_back(term(CocycleTerm::TypeI, 0, 0, -n));
    CondensationWall w;
    w.fm = fold(left, right);
    const Group& F = w.fm->G;
    w.H = closure(F, {F.index_of({1, 1})});
    // psi^n(a,b) = exp(2 pi i n A (b - B) / N^2), A = a mod N
    long M = (long)N * N;
    w.thin = Cochain(2, F.n, M);
    for (int a : w.H)
        for (int b : w.H) {
            long x = F.coord[a][0], y = F.coord[b][0];
            w.thin.at(0, {a, b}) = modp(n * (x % N) * (y - y % N), M);
        }
    return w;
}

CondensationWall condensation_wall_typeI_II(int N, long n, long m) {
    if (N < 2) throw std::invalid_argument("condensation wall: N >= 2");
    Group Z2N = make_cyclic(N * N), ZN = make_cyclic(N);
    ModelSpec left{make_product({Z2N, Z2N}), {}};
    ModelSpec right{make_product({ZN, ZN}), {}};
    right.spec.terms = {term(CocycleTerm::TypeI, 0, 0, -n), term(CocycleTerm::TypeI, 1, 1, -n),
                        term(CocycleTerm::TypeII, 0, 1, -n)};
    CondensationWall w;
    w.fm = fold(left, right);
    const Group& F = w.fm->G;
    w.H = closure(F, {F.index_of({1, 0, 1, 0}), F.index_of({0, 1, 0, 1})});
    // beta^n = exp(2 pi i n/N^2 (sum_i A_i (b_i - B_i) + A_1 (b_2 - B_2))) times exp(2 pi i m a_1 b_2 / N^2)
    long M = (long)N * N;
    w.thin = Cochain(2, F.n, M);
    for (int a : w.H)
        for (int b : w.H) {
            long a1 = F.coord[a][0], a2 = F.coord[a][1], b1 = F.coord[b][0], b2 = F.coord[b][1];
            long e = n * ((a1 % N) * (b1 - b1 % N) + (a2 % N) * (b2 - b2 % N) + (a1 % N) * (b2 - b2 % N)) + m * a1 * b2;
            w.thin.at(0, {a, b}) = modp(e, M);
        }
    return w;
}

}  // namespace dw
