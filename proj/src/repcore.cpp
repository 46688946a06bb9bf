#include "dw/repcore.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dw {

AlgebraWithAction::AlgebraWithAction(const Group& G_, GSet X_, Cochain Psi_)
    : G(&G_), X(std::move(X_)), Psi(std::move(Psi_)) {
    if (Psi.degree != 2 || Psi.npts != X.npts || Psi.n != G->n) throw std::invalid_argument("algebra: Psi shape");
    psi.resize(Psi.e.size());
    for (size_t i = 0; i < psi.size(); ++i) psi[i] = root(Psi.e[i], Psi.L);
}

std::string fingerprint(const std::vector<cd>& v) {
    std::ostringstream os;
    for (auto& z : v) {
        long re = std::lround(z.real() * 1e6), im = std::lround(z.imag() * 1e6);
        os << re << ',' << im << ';';
    }
    return os.str();
}

static int element_order(const Group& G, int g) {
    int k = 1, x = g;
    while (x != 0) {
        x = G(x, g);
        ++k;
    }
    return k;
}

// K = K_0 x K_1 x ... with K_i the projection onto factor i?
static std::optional<std::vector<Subset>> factor_split(const Group& G, const Subset& K) {
    size_t f = G.factors.size();
    std::vector<std::set<int>> proj(f);
    for (int h : K)
        for (size_t i = 0; i < f; ++i) proj[i].insert(G.coord[h][i]);
    size_t prod = 1;
    for (auto& p : proj) prod *= p.size();
    if (prod != K.size()) return std::nullopt;
    std::vector<Subset> out;
    for (auto& p : proj) out.emplace_back(p.begin(), p.end());
    return out;
}

std::vector<LabeledChar> linear_characters(const Group& G, const Subset& K) {
    int n = G.n, k = (int)K.size();
    std::vector<LabeledChar> out;
    if (G.factors.size() > 1) {
        if (auto parts = factor_split(G, K)) {
            // products of factorwise characters, labels joined as tuples
            std::vector<std::vector<LabeledChar>> per;
            for (size_t i = 0; i < parts->size(); ++i) {
                Group F = G.factor_is_s3[i] ? make_s3() : make_cyclic(G.factors[i]);
                per.push_back(linear_characters(F, (*parts)[i]));
            }
            std::vector<size_t> idx(per.size(), 0);
            while (true) {
                LabeledChar c{"(", std::vector<cd>(n, 0.0)};
                for (size_t i = 0; i < per.size(); ++i) c.label += (i ? "," : "") + per[i][idx[i]].label;
                c.label += ")";
                for (int h : K) {
                    cd v = 1.0;
                    for (size_t i = 0; i < per.size(); ++i) v *= per[i][idx[i]].chi[G.coord[h][i]];
                    c.chi[h] = v;
                }
                out.push_back(c);
                size_t i = per.size();
                while (i > 0 && ++idx[i - 1] == per[i - 1].size()) idx[--i] = 0;
                if (i == 0) break;
            }
            return out;
        }
    }
    if (G.abelian() && G.all_cyclic()) {
        // restrictions of characters of G, labelled by the smallest dual element
        long L = 1;
        for (int N : G.factors) L = lcml(L, N);
        std::set<std::string> seen;
        for (int q = 0; q < n && (int)out.size() < k; ++q) {
            LabeledChar c{G.element_name(q), std::vector<cd>(n, 0.0)};
            for (int h : K) {
                long s = 0;
                for (size_t i = 0; i < G.factors.size(); ++i) s += (long)G.coord[q][i] * G.coord[h][i] * (L / G.factors[i]);
                c.chi[h] = root(s, L);
            }
            if (seen.insert(fingerprint(c.chi)).second) out.push_back(c);
        }
        return out;
    }
    int gen = -1;
    for (int g : K)
        if (element_order(G, g) == k) {
            gen = g;
            break;
        }
    if (gen >= 0) {
        std::vector<int> power(n, -1);
        for (int m = 0, x = 0; m < k; ++m, x = G(x, gen)) power[x] = m;
        for (int j = 0; j < k; ++j) {
            LabeledChar c{std::to_string(j), std::vector<cd>(n, 0.0)};
            for (int h : K) c.chi[h] = root((long)j * power[h], k);
            out.push_back(c);
        }
        return out;
    }
    if (G.n == 6 && G.factor_is_s3.size() == 1 && G.factor_is_s3[0] && k == 6) {
        out.push_back({"G0", {1, 1, 1, 1, 1, 1}});
        out.push_back({"G1", {1, 1, 1, -1, -1, -1}});
        out.push_back({"G2", {2, -1, -1, 0, 0, 0}});
        return out;
    }
    return numeric_projective_characters(G, K, [](int, int) { return cd(1.0); });
}

std::vector<LabeledChar> projective_characters(const Group& G, const Subset& K, const Cochain& Psi, int point) {
    Cochain t(2, G.n, Psi.L);
    bool trivial = true;
    for (int a : K)
        for (int b : K) {
            long v = Psi.get2(point, a, b);
            t.at(0, {a, b}) = v;
            trivial &= v == 0;
        }
    if (trivial) return linear_characters(G, K);
    std::optional<Cochain> eps;
    if ((long)(K.size() - 1) <= 2500) eps = solve_coboundary(G, t, K);
    if (eps) {
        auto lin = linear_characters(G, K);
        for (auto& c : lin)
            for (int h : K) c.chi[h] *= root(eps->get1(0, h), eps->L);
        return lin;
    }
    return numeric_projective_characters(G, K, [&](int a, int b) { return root(Psi.get2(point, a, b), Psi.L); });
}

std::vector<LabeledChar> numeric_projective_characters(const Group& G, const Subset& K,
                                                       const std::function<cd(int, int)>& psi) {
    using Mat = Eigen::MatrixXcd;
    int k = (int)K.size(), n = G.n;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < k; ++i) pos[K[i]] = i;
    // centre: c_b Psi(a,b) = c_{aba^-1} Psi(aba^-1, a)
    Mat C = Mat::Zero((long)k * k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int a = K[i], b = K[j], bc = G.conj(a, b);
            C(i * k + j, j) += psi(a, b);
            C(i * k + j, pos[bc]) -= psi(bc, a);
        }
    Eigen::JacobiSVD<Mat> svd(C, Eigen::ComputeFullV);
    auto sv = svd.singularValues();
    std::vector<Eigen::VectorXcd> zs;
    for (int c = 0; c < k; ++c)
        if (c >= sv.size() || sv(c) < 1e-9) zs.push_back(svd.matrixV().col(c));
    // left-regular representation
    auto regular = [&](const Eigen::VectorXcd& z) {
        Mat M = Mat::Zero(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) M(pos[G(K[i], K[j])], j) += z(i) * psi(K[i], K[j]);
        return M;
    };
    auto star = [&](const Eigen::VectorXcd& z) {
        Eigen::VectorXcd w = Eigen::VectorXcd::Zero(k);
        for (int i = 0; i < k; ++i) {
            int a = K[i], ai = G.inv[a];
            w(pos[ai]) += std::conj(z(i)) * std::conj(psi(a, ai));
        }
        return w;
    };
    std::mt19937 rng(0xA705EED);
    std::normal_distribution<double> nd;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Eigen::VectorXcd h = Eigen::VectorXcd::Zero(k);
        for (auto& z : zs) {
            Eigen::VectorXcd zs_ = star(z);
            h += nd(rng) * (z + zs_) + cd(0, nd(rng)) * (z - zs_);  // both Hermitian parts
        }
        Mat Hm = regular(h);
        Hm = (Hm + Hm.adjoint()) / 2.0;
        Eigen::SelfAdjointEigenSolver<Mat> es(Hm);
        auto ev = es.eigenvalues();
        std::vector<std::vector<int>> clusters;
        for (int i = 0; i < k; ++i) {
            if (!clusters.empty() && std::abs(ev(clusters.back().front()) - ev(i)) < 1e-7)
                clusters.back().push_back(i);
            else
                clusters.push_back({i});
        }
        if ((int)clusters.size() != (int)zs.size()) continue;  // blocks merged: try another combination
        std::vector<LabeledChar> out;
        bool good = true;
        for (auto& cl : clusters) {
            Mat V(k, (long)cl.size());
            for (size_t c = 0; c < cl.size(); ++c) V.col(c) = es.eigenvectors().col(cl[c]);
            Eigen::VectorXcd p = V * V.adjoint().col(pos[0]);  // projector applied to e_identity
            double d = std::sqrt(std::max(0.0, k * p(pos[0]).real()));
            long di = std::lround(d);
            if (std::abs(d - di) > 1e-6 || di < 1) {
                good = false;
                break;
            }
            LabeledChar c{"", std::vector<cd>(n, 0.0)};
            for (int i = 0; i < k; ++i) c.chi[K[i]] = std::conj(p(i)) * (double)k / (double)di;
            out.push_back(c);
        }
        if (!good) continue;
        std::sort(out.begin(), out.end(), [&](const LabeledChar& a, const LabeledChar& b) {
            long da = std::lround(a.chi[0].real()), db = std::lround(b.chi[0].real());
            if (da != db) return da < db;
            return fingerprint(a.chi) < fingerprint(b.chi);
        });
        for (size_t i = 0; i < out.size(); ++i) out[i].label = "n" + std::to_string(i);
        return out;
    }
    throw std::runtime_error("projective irreps: eigenvalue clusters stayed ambiguous after 8 attempts");
}

Block extend_irrep(const AlgebraWithAction& A, const std::vector<int>& orbit, int base, const Subset& K,
                   const LabeledChar& c) {
    const Group& G = *A.G;
    Block b;
    b.orbit = orbit;
    b.base = base;
    b.K = K;
    b.label = c.label;
    b.d = (int)std::lround(c.chi[0].real());
    b.local.assign(A.X.npts, -1);
    for (size_t i = 0; i < orbit.size(); ++i) b.local[orbit[i]] = (int)i;
    b.chi.assign(orbit.size(), std::vector<cd>(G.n, 0.0));
    b.stab.resize(orbit.size());
    for (size_t i = 0; i < orbit.size(); ++i) {
        int y = orbit[i];
        int g = 0;
        while (A.X(g, base) != y) ++g;  // minimal transporter
        b.stab[i] = stabilizer(G, A.X, y);
        for (int k : b.stab[i]) {
            int kp = G(G(G.inv[g], k), g);
            b.chi[i][k] = A.Psi_at(base, k, g) * std::conj(A.Psi_at(base, g, kp)) * c.chi[kp];
        }
    }
    return b;
}

std::vector<Block> decompose(const AlgebraWithAction& A, const CharProvider& provider) {
    const Group& G = *A.G;
    std::vector<Block> out;
    for (auto& orb : orbits(G, A.X)) {
        int base = orb.front();
        Subset K = stabilizer(G, A.X, base);
        std::optional<std::vector<LabeledChar>> chars;
        if (provider) chars = provider(base, K);
        if (!chars) chars = projective_characters(G, K, A.Psi, base);
        for (auto& c : *chars) out.push_back(extend_irrep(A, orb, base, K, c));
    }
    return out;
}

SparseElem idempotent(const AlgebraWithAction& A, const Block& b) {
    int n = A.G->n;
    SparseElem e;
    double pref = (double)b.d / (double)b.K.size();
    for (size_t i = 0; i < b.orbit.size(); ++i)
        for (int g : b.stab[i]) e.push_back({b.orbit[i] * n + g, pref * std::conj(b.chi[i][g])});
    return e;
}

SparseElem multiply(const AlgebraWithAction& A, const SparseElem& u, const SparseElem& v) {
    const Group& G = *A.G;
    int n = G.n;
    std::vector<cd> acc((size_t)A.dim_basis(), 0.0);
    std::vector<char> used(acc.size(), 0);
    std::map<int, std::vector<std::pair<int, cd>>> by_point;  // x -> (g, coeff) of u
    for (auto& [i, c] : u) by_point[i / n].push_back({i % n, c});
    for (auto& [j, c2] : v) {
        int y = j / n, h = j % n, x = A.X(h, y);
        auto it = by_point.find(x);
        if (it == by_point.end()) continue;
        for (auto& [g, c1] : it->second) {
            int idx = y * n + G(g, h);
            acc[idx] += c1 * c2 * A.Psi_at(y, g, h);
            used[idx] = 1;
        }
    }
    SparseElem out;
    for (size_t i = 0; i < acc.size(); ++i)
        if (used[i] && std::abs(acc[i]) > 1e-14) out.push_back({(int)i, acc[i]});
    return out;
}

SparseElem algebra_unit(const AlgebraWithAction& A) {
    SparseElem e;
    for (int x = 0; x < A.X.npts; ++x) e.push_back({x * A.G->n, 1.0});
    return e;
}

double distance(const SparseElem& u, const SparseElem& v) {
    std::map<int, cd> d;
    for (auto& [i, c] : u) d[i] += c;
    for (auto& [i, c] : v) d[i] -= c;
    double m = 0;
    for (auto& [i, c] : d) m = std::max(m, std::abs(c));
    return m;
}

bool is_associative(const AlgebraWithAction& A) {
    const Group& G = *A.G;
    int n = G.n;
    // (a*b)*c = a*(b*c) on basis triples; nonzero only when points chain up
    for (int z = 0; z < A.X.npts; ++z)
        for (int k = 0; k < n; ++k) {
            int y = A.X(k, z);
            for (int h = 0; h < n; ++h) {
                for (int g = 0; g < n; ++g) {
                    cd lhs = A.Psi_at(y, g, h) * A.Psi_at(z, G(g, h), k);
                    cd rhs = A.Psi_at(z, h, k) * A.Psi_at(z, g, G(h, k));
                    if (std::abs(lhs - rhs) > 1e-9) return false;
                }
            }
        }
    return true;
}

IdempotentReport check_idempotents(const AlgebraWithAction& A, const std::vector<Block>& blocks) {
    IdempotentReport r;
    int n = A.G->n;
    std::vector<SparseElem> es;
    for (auto& b : blocks) es.push_back(idempotent(A, b));
    SparseElem sum;
    for (size_t i = 0; i < es.size(); ++i) {
        r.idem = std::max(r.idem, distance(multiply(A, es[i], es[i]), es[i]));
        for (int x = 0; x < A.X.npts; ++x)
            for (int g = 0; g < n; ++g) {
                SparseElem a{{x * n + g, 1.0}};
                r.central = std::max(r.central, distance(multiply(A, es[i], a), multiply(A, a, es[i])));
            }
        for (size_t j = 0; j < es.size(); ++j)
            if (j != i) r.orth = std::max(r.orth, distance(multiply(A, es[i], es[j]), {}));
        sum.insert(sum.end(), es[i].begin(), es[i].end());
        r.dim_sum += (long)blocks[i].dim() * blocks[i].dim();
    }
    r.complete = distance(sum, algebra_unit(A));
    r.algebra_dim = (long)A.X.npts * n;
    return r;
}

double character_orthogonality_error(const AlgebraWithAction& A, const std::vector<Block>& blocks) {
    double err = 0;
    std::map<int, std::vector<const Block*>> by_base;
    for (auto& b : blocks) by_base[b.base].push_back(&b);
    for (auto& [base, bs] : by_base)
        for (auto* b1 : bs)
            for (auto* b2 : bs)
                for (size_t i = 0; i < b1->orbit.size(); ++i) {
                    cd s = 0;
                    for (int k : b1->stab[i]) s += b1->chi[i][k] * std::conj(b2->chi[i][k]);
                    s /= (double)b1->stab[i].size();
                    err = std::max(err, std::abs(s - (b1 == b2 ? 1.0 : 0.0)));
                }
    (void)A;
    return err;
}

}  // namespace dw
