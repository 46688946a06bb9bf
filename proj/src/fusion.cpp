#include "dw/fusion.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <unordered_map>

namespace dw {

long round_multiplicity(cd v, const std::string& what) {
    long r = std::lround(v.real());
    if (std::abs(v.imag()) > 1e-6 || std::abs(v.real() - r) > 1e-6 || r < 0)
        throw NonIntegerMultiplicity("non-integer multiplicity " + std::to_string(v.real()) + "+" +
                                     std::to_string(v.imag()) + "i" + (what.empty() ? "" : " for " + what));
    return r;
}

cd fusion_sum(const SemiTube& s, const Block& a, const Block& b) {
    const Group& G = *s.bd->G;
    const Boundary& bd = *s.bd;
    int nc = s.nc();
    cd tot = 0;
    for (size_t i = 0; i < a.orbit.size(); ++i) {
        int g = a.orbit[i];
        for (int al = 0; al < nc; ++al) {
            int pt = bd.X(g, al) * nc + al;
            if (!b.contains(pt)) continue;
            for (int h : a.stab[i]) {
                if (s.A.X(h, pt) != pt) continue;
                tot += std::conj(bd.psi_at(al, h, g)) * bd.psi_at(al, g, h) * a.chi[i][h] * std::conj(b.at(pt, h));
            }
        }
    }
    return tot / (double)G.n;
}

long fusion_multiplicity(const Tube& t, const SemiTube& s, const Block& a, const Block& b) {
    return round_multiplicity(fusion_sum(s, a, b), t.name(a) + " x " + s.name(b));
}

bool oracle_available(const Tube& t, const SemiTube& s) { return (long)t.G->n * t.G->n * s.nc() <= 4096; }

bool tube_act(const Tube& t, int gp, int hp, BimoduleVec& v) {
    const Group& G = *t.G;
    if (gp != G.conj(v.h, v.g)) return false;
    v.c *= t.A.Psi_at(v.g, hp, v.h);
    v.h = G(hp, v.h);
    return true;
}

bool semitube_act(const Tube& t, const SemiTube& s, BimoduleVec& v, int pt, int hp) {
    const Group& G = *t.G;
    const Boundary& bd = *s.bd;
    int nc = s.nc(), alp = pt / nc, bep = pt % nc;
    if (bd.X(hp, bep) != v.alpha || bd.X(v.g, v.alpha) != bd.X(hp, alp)) return false;
    int gn = G(G(G.inv[hp], v.g), hp);
    v.c *= std::conj(bd.psi_at(bep, hp, gn)) * bd.psi_at(bep, v.g, hp) * t.A.Psi_at(gn, v.h, hp);
    v.g = gn;
    v.h = G(v.h, hp);
    v.alpha = bep;
    return true;
}

cd oracle_sum(const Tube& t, const SemiTube& s, const Block& a, const Block& b) {
    if (!oracle_available(t, s)) throw std::runtime_error("oracle: model above the scale guard");
    const Group& G = *t.G;
    int n = G.n, nc = s.nc();
    auto idx = [&](int g, int h, int al) { return ((uint64_t)g * n + h) * nc + al; };
    auto key = [](uint64_t r, uint64_t c) { return (r << 32) | c; };
    // matrix of the left action of P^T_a, as a sparse map (row, col) -> value
    std::unordered_map<uint64_t, cd> LT;
    for (auto& [i, coef] : idempotent(t.A, a)) {
        int gp = i / n, hp = i % n;
        for (int h = 0; h < n; ++h) {
            int g = G.conj(G.inv[h], gp);
            for (int al = 0; al < nc; ++al) {
                BimoduleVec v{g, h, al, coef};
                if (tube_act(t, gp, hp, v)) LT[key(idx(v.g, v.h, v.alpha), idx(g, h, al))] += v.c;
            }
        }
    }
    cd tr = 0;
    for (auto& [i, coef] : idempotent(s.A, b)) {
        int pt = i / n, hp = i % n;
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                for (int al = 0; al < nc; ++al) {
                    BimoduleVec v{g, h, al, coef};
                    if (!semitube_act(t, s, v, pt, hp)) continue;
                    // Tr(RS LT) = sum RS[r,c] LT[c,r]
                    auto it = LT.find(key(idx(g, h, al), idx(v.g, v.h, v.alpha)));
                    if (it != LT.end()) tr += v.c * it->second;
                }
    }
    return tr / ((double)a.dim() * b.dim());
}

long oracle_fusion_multiplicity(const Tube& t, const SemiTube& s, const Block& a, const Block& b) {
    return round_multiplicity(oracle_sum(t, s, a, b), "oracle " + t.name(a) + " x " + s.name(b));
}

FusionTable fusion_table(const Tube& t, const SemiTube& s, bool use_oracle) {
    FusionTable T;
    for (auto& a : t.anyons) T.rows.push_back(t.name(a));
    for (auto& b : s.anyons) T.cols.push_back(s.name(b));
    for (auto& a : t.anyons) {
        std::vector<long> row;
        for (auto& b : s.anyons) {
            long m = fusion_multiplicity(t, s, a, b);
            if (use_oracle && oracle_available(t, s) && oracle_fusion_multiplicity(t, s, a, b) != m)
                throw NonIntegerMultiplicity("oracle disagrees for " + t.name(a) + " x " + s.name(b));
            row.push_back(m);
        }
        T.m.push_back(row);
    }
    return T;
}

cd condensation_sum(const Tube& t, const Boundary& bd, const Block& a) {
    const Group& G = *t.G;
    std::vector<char> inH(G.n, 0);
    for (int h : bd.H) inH[h] = 1;
    cd tot = 0;
    for (size_t i = 0; i < a.orbit.size(); ++i) {
        int g = a.orbit[i];
        if (!inH[g]) continue;
        for (int h : a.stab[i])
            if (inH[h]) tot += std::conj(bd.psi_at(0, h, g)) * bd.psi_at(0, g, h) * a.chi[i][h];
    }
    return tot / (double)bd.H.size();
}

std::vector<std::pair<int, long>> lagrangian_algebra(const Tube& t, const Boundary& bd) {
    std::vector<std::pair<int, long>> out;
    for (size_t i = 0; i < t.anyons.size(); ++i) {
        long m = round_multiplicity(condensation_sum(t, bd, t.anyons[i]), t.name(t.anyons[i]));
        if (m > 0) out.push_back({(int)i, m});
    }
    return out;
}

static bool same(const BimoduleVec& x, const BimoduleVec& y) {
    return x.g == y.g && x.h == y.h && x.alpha == y.alpha && std::abs(x.c - y.c) < 1e-9;
}

bool bimodule_consistent(const Tube& t, const SemiTube& s, int samples, unsigned seed) {
    const Group& G = *t.G;
    const GSet& X = s.bd->X;
    int n = G.n, nc = s.nc();
    std::mt19937 rng(seed);
    auto r = [&](int m) { return (int)(rng() % (unsigned)m); };
    // the semi-tube basis element with group label hs that acts nontrivially on v
    auto acting_point = [&](const BimoduleVec& v, int hs) {
        int hi = G.inv[hs];
        return X(hi, X(v.g, v.alpha)) * nc + X(hi, v.alpha);
    };
    for (int k = 0; k < samples; ++k) {
        BimoduleVec v{r(n), r(n), r(nc), 1.0};
        int hp = r(n), gp = G.conj(v.h, v.g), hs = r(n), pt = acting_point(v, hs);
        // (t . v) . s == t . (v . s)
        BimoduleVec a = v, b = v;
        if (!tube_act(t, gp, hp, a) || !semitube_act(t, s, a, pt, hs)) return false;
        if (!semitube_act(t, s, b, pt, hs) || !tube_act(t, gp, hp, b)) return false;
        if (!same(a, b)) return false;
        // t1 . (t2 . v) = (t1 t2) . v, with (g1,h1)*(g2,h2) = beta_{g2}(h1,h2) (g2, h1 h2)
        int h1 = r(n), h2 = r(n);
        BimoduleVec x = v, y = v;
        tube_act(t, gp, h2, x);
        if (!tube_act(t, G.conj(x.h, x.g), h1, x)) return false;
        y.c *= t.A.Psi_at(gp, h1, h2);
        if (!tube_act(t, gp, G(h1, h2), y) || !same(x, y)) return false;
        // (v . s1) . s2 = v . (s1 * s2), with (p1,h1)*(p2,h2) = Psi^{p2}(h1,h2) (p2, h1 h2)
        int p1 = acting_point(v, h1);
        x = v;
        semitube_act(t, s, x, p1, h1);
        int p2 = acting_point(x, h2);
        if (!semitube_act(t, s, x, p2, h2) || s.A.X(h2, p2) != p1) return false;
        y = v;
        y.c *= s.A.Psi_at(p2, h1, h2);
        if (!semitube_act(t, s, y, p2, G(h1, h2)) || !same(x, y)) return false;
    }
    return true;
}

long bulk_fusion_N(const Tube& t, const Block& a0, const Block& a1, const Block& a2) {
    const Group& G = *t.G;
    const Cochain& w = t.omega;
    cd tot = 0;
    for (size_t i = 0; i < a0.orbit.size(); ++i) {
        int a = a0.orbit[i];
        for (size_t j = 0; j < a1.orbit.size(); ++j) {
            int b = a1.orbit[j];
            int ab = G(a, b);
            if (!a2.contains(ab)) continue;
            for (int x : a0.stab[i]) {
                if (G(x, b) != G(b, x)) continue;
                tot += w.val3(a, b, x) * std::conj(w.val3(a, x, b)) * w.val3(x, a, b) * a0.chi[i][x] *
                       a1.chi[j][x] * std::conj(a2.at(ab, x));
            }
        }
    }
    return round_multiplicity(tot / (double)G.n, "bulk fusion " + t.name(a0) + " x " + t.name(a1) + " -> " + t.name(a2));
}

GsdReport torus_gsd(const Tube& t) {
    // Q(z) = (1/|G|) sum_h U_h z U_h^-1 with U_h = sum_y (y,h), on the span of commuting pairs (x,g):
    // a projector onto the centre of the tube algebra, i.e. onto torus ground states.
    const Group& G = *t.G;
    const AlgebraWithAction& A = t.A;
    int n = G.n;
    std::vector<int> id((size_t)n * n, -1), basis;
    for (int x = 0; x < n; ++x)
        for (int g = 0; g < n; ++g)
            if (G(x, g) == G(g, x)) {
                id[x * n + g] = (int)basis.size();
                basis.push_back(x * n + g);
            }
    int m = (int)basis.size();
    std::vector<SparseElem> U(n), Uinv(n);
    for (int h = 0; h < n; ++h)
        for (int y = 0; y < n; ++y) {
            U[h].push_back({y * n + h, 1.0});
            Uinv[h].push_back({y * n + G.inv[h], 1.0 / A.Psi_at(y, h, G.inv[h])});
        }
    Eigen::MatrixXcd Q = Eigen::MatrixXcd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        SparseElem z{{basis[i], 1.0}};
        for (int h = 0; h < n; ++h)
            for (auto& [k, c] : multiply(A, multiply(A, U[h], z), Uinv[h])) {
                if (id[k] < 0) throw std::logic_error("torus_gsd: conjugation left the commuting sector");
                Q(id[k], i) += c / (double)n;
            }
    }
    GsdReport r;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Q);
    auto sv = svd.singularValues();
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-7) ++r.rank;
    r.idempotency = (Q * Q - Q).cwiseAbs().maxCoeff();
    return r;
}

}  // namespace dw
