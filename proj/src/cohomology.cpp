#include "dw/cohomology.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace dw {

long gcdl(long a, long b) { return std::gcd(a, b); }
long lcml(long a, long b) { return std::lcm(a, b); }
long modp(long a, long L) {
    long r = a % L;
    return r < 0 ? r + L : r;
}
cd root(long e, long L) {
    e = modp(e, L);
    if (e == 0) return {1.0, 0.0};
    if (2 * e == L) return {-1.0, 0.0};
    if (4 * e == L) return {0.0, 1.0};
    if (4 * e == 3 * L) return {0.0, -1.0};
    double th = 2.0 * M_PI * (double)e / (double)L;
    return {std::cos(th), std::sin(th)};
}

PhaseExp PhaseExp::operator*(const PhaseExp& o) const {
    long M = lcml(L, o.L);
    return {e * (M / L) + o.e * (M / o.L), M};
}

Cochain::Cochain(int degree_, int n_, long L_, int npts_) : degree(degree_), n(n_), npts(npts_), L(L_) {
    e.assign((size_t)npts * size_per_point(), 0);
}

size_t Cochain::size_per_point() const {
    size_t s = 1;
    for (int i = 0; i < degree; ++i) s *= n;
    return s;
}

size_t Cochain::index(int p, const int* args) const {
    size_t i = p;
    for (int k = 0; k < degree; ++k) i = i * n + args[k];
    return i;
}

long& Cochain::at(int p, std::initializer_list<int> args) { return e[index(p, args.begin())]; }
long Cochain::at(int p, std::initializer_list<int> args) const { return e[index(p, args.begin())]; }

bool Cochain::trivial() const {
    for (long v : e)
        if (modp(v, L)) return false;
    return true;
}

Cochain rescale(const Cochain& c, long L) {
    if (L % c.L) throw std::invalid_argument("rescale: modulus must be a multiple");
    Cochain r = c;
    r.L = L;
    for (auto& v : r.e) v = modp(v * (L / c.L), L);
    return r;
}

Cochain product(const Cochain& a, const Cochain& b) {
    if (a.degree != b.degree || a.n != b.n || a.npts != b.npts) throw std::invalid_argument("cochain shape mismatch");
    long L = lcml(a.L, b.L);
    Cochain r = rescale(a, L), s = rescale(b, L);
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = modp(r.e[i] + s.e[i], L);
    return r;
}

Cochain conjugate(const Cochain& c) {
    Cochain r = c;
    for (auto& v : r.e) v = modp(-v, r.L);
    return r;
}

Cochain random_cochain(int degree, int n, long L, int npts, unsigned seed, bool normalized) {
    Cochain c(degree, n, L, npts);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> d(0, L - 1);
    std::vector<int> args(degree);
    size_t per = c.size_per_point();
    for (int p = 0; p < npts; ++p)
        for (size_t k = 0; k < per; ++k) {
            size_t r = k;
            bool has_e = false;
            for (int i = degree - 1; i >= 0; --i) {
                args[i] = r % n;
                r /= n;
                has_e |= args[i] == 0;
            }
            c.e[p * per + k] = (normalized && has_e) ? 0 : d(rng);
        }
    return c;
}

Cochain coboundary(const Group& G, const Cochain& c, const GSet* X) {
    int k = c.degree, n = G.n;
    Cochain r(k + 1, n, c.L, c.npts);
    std::vector<int> g(k + 1), a(k);
    size_t per = r.size_per_point();
    for (int p = 0; p < c.npts; ++p)
        for (size_t idx = 0; idx < per; ++idx) {
            size_t t = idx;
            for (int i = k; i >= 0; --i) {
                g[i] = t % n;
                t /= n;
            }
            long s = 0;
            for (int i = 0; i < k; ++i) a[i] = g[i + 1];
            s += c.get(p, a.data());
            for (int i = 0; i < k; ++i) {  // merge g_i g_{i+1}
                int m = 0;
                for (int j = 0; j < k + 1; ++j) {
                    if (j == i) {
                        a[m++] = G(g[i], g[i + 1]);
                        ++j;
                    } else {
                        a[m++] = g[j];
                    }
                }
                s += ((i + 1) % 2 ? -1 : 1) * c.get(p, a.data());
            }
            for (int i = 0; i < k; ++i) a[i] = g[i];
            int q = X ? (*X)(g[k], p) : p;
            s += ((k + 1) % 2 ? -1 : 1) * c.get(q, a.data());
            r.e[p * per + idx] = modp(s, c.L);
        }
    return r;
}

CocycleCheck is_cocycle(const Group& G, const Cochain& c, const GSet* X) {
    Cochain d = coboundary(G, c, X);
    size_t per = d.size_per_point();
    for (size_t i = 0; i < d.e.size(); ++i)
        if (d.e[i]) {
            CocycleCheck r{false, {}};
            r.witness.push_back((int)(i / per));
            size_t t = i % per;
            std::vector<int> args(d.degree);
            for (int k = d.degree - 1; k >= 0; --k) {
                args[k] = t % G.n;
                t /= G.n;
            }
            r.witness.insert(r.witness.end(), args.begin(), args.end());
            return r;
        }
    return {};
}

bool is_normalized(const Cochain& c) {
    size_t per = c.size_per_point();
    for (int p = 0; p < c.npts; ++p)
        for (size_t k = 0; k < per; ++k) {
            size_t r = k;
            bool has_e = false;
            for (int i = 0; i < c.degree; ++i) {
                has_e |= (r % c.n) == 0;
                r /= c.n;
            }
            if (has_e && c.e[p * per + k]) return false;
        }
    return true;
}

static long term_modulus(const Group& G, const CocycleTerm& t) {
    switch (t.kind) {
        case CocycleTerm::TypeI: return (long)G.factors.at(t.i) * G.factors.at(t.i);
        case CocycleTerm::TypeII: return (long)G.factors.at(t.i) * G.factors.at(t.j);
        case CocycleTerm::TypeIII: return gcdl(G.factors.at(t.i), gcdl(G.factors.at(t.j), G.factors.at(t.k)));
        case CocycleTerm::S3: return 18;
    }
    return 1;
}

static long term_exponent(const Group& G, const CocycleTerm& t, int x, int y, int z) {
    auto& a = G.coord[x];
    auto& b = G.coord[y];
    auto& c = G.coord[z];
    auto carry = [](long u, long v, long N) { return u + v - (u + v) % N; };
    switch (t.kind) {
        case CocycleTerm::TypeI: {
            long N = G.factors[t.i];
            return t.n * a[t.i] * carry(b[t.i], c[t.i], N);
        }
        case CocycleTerm::TypeII:
            return t.n * a[t.i] * carry(b[t.j], c[t.j], G.factors[t.j]);
        case CocycleTerm::TypeIII:
            return t.n * a[t.i] * b[t.j] * c[t.k];
        case CocycleTerm::S3: {
            int A = a[t.i] / 3, ra = a[t.i] % 3, B = b[t.i] / 3, rb = b[t.i] % 3, C = c[t.i] / 3, rc = c[t.i] % 3;
            long sb = C ? -rb : rb;
            long s = sb + rc - modp(sb + rc, 3);  // in {-3, 0, 3}
            long sign = (B + C) % 2 ? -1 : 1;
            return t.n * (2 * sign * ra * s + 9 * A * B * C);
        }
    }
    return 0;
}

static void check_terms(const Group& G, const CocycleSpec& spec) {
    for (auto& t : spec.terms) {
        if (t.kind == CocycleTerm::S3 && !G.factor_is_s3.at(t.i)) throw std::invalid_argument("S3 cocycle on non-S3 factor");
        if (t.kind != CocycleTerm::S3) {
            for (int f : {t.i, t.j, t.k})
                if (f < 0 || f >= (int)G.factors.size() || G.factor_is_s3[f])
                    throw std::invalid_argument("cocycle term needs cyclic factors");
        }
    }
}

long cocycle_modulus(const Group& G, const CocycleSpec& spec) {
    if (spec.table) return spec.table->L;
    check_terms(G, spec);
    long L = 1;
    for (auto& t : spec.terms) L = lcml(L, term_modulus(G, t));
    return L;
}

long cocycle_exponent(const Group& G, const CocycleSpec& spec, int x, int y, int z) {
    long L = cocycle_modulus(G, spec), s = 0;
    if (spec.table) {
        s = spec.table->get3(x, y, z);
    } else {
        for (auto& t : spec.terms) s += term_exponent(G, t, x, y, z) * (L / term_modulus(G, t));
    }
    return modp(spec.conjugate ? -s : s, L);
}

bool trivializes_on_subgroup(const Group& G, const CocycleSpec& spec, const Subset& H, const Cochain& thin) {
    long Lw = cocycle_modulus(G, spec), L = lcml(Lw, thin.L);
    long sw = L / Lw, st = L / thin.L;
    for (int a : H)
        for (int b : H)
            for (int c : H) {
                long d = thin.get2(0, b, c) - thin.get2(0, G(a, b), c) + thin.get2(0, a, G(b, c)) - thin.get2(0, a, b);
                if (modp(d * st - cocycle_exponent(G, spec, a, b, c) * sw, L) != 0) return false;
            }
    return true;
}

Cochain make_cocycle(const Group& G, const CocycleSpec& spec) {
    Cochain w;
    if (spec.table) {
        w = *spec.table;
        if (w.degree != 3 || w.n != G.n) throw std::invalid_argument("cocycle table has wrong shape");
        if (!is_normalized(w)) throw std::invalid_argument("cocycle table is not normalized");
    } else {
        long L = cocycle_modulus(G, spec);
        w = Cochain(3, G.n, L);
        for (int x = 0; x < G.n; ++x)
            for (int y = 0; y < G.n; ++y)
                for (int z = 0; z < G.n; ++z) {
                    long s = 0;
                    for (auto& t : spec.terms) s += term_exponent(G, t, x, y, z) * (L / term_modulus(G, t));
                    w.at(0, {x, y, z}) = modp(s, L);
                }
    }
    return spec.conjugate ? conjugate(w) : w;
}

Cochain make_2cocycle(const Group& G, const std::vector<TwoCocycleTerm>& terms) {
    long L = 1;
    std::vector<long> Ms;
    for (auto& t : terms) {
        if (t.i < 0 || t.j < 0 || t.i >= (int)G.factors.size() || t.j >= (int)G.factors.size() || G.factor_is_s3[t.i] ||
            G.factor_is_s3[t.j])
            throw std::invalid_argument("invalid 2-cocycle factor pair");
        long M = t.M ? t.M : gcdl(G.factors[t.i], G.factors[t.j]);
        Ms.push_back(M);
        L = lcml(L, M);
    }
    Cochain c(2, G.n, L);
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b) {
            long s = 0;
            for (size_t k = 0; k < terms.size(); ++k)
                s += terms[k].q * G.coord[a][terms[k].i] * G.coord[b][terms[k].j] * (L / Ms[k]);
            c.at(0, {a, b}) = modp(s, L);
        }
    return c;
}

Cochain cochain_from_json(const Group& G, const std::string& text, int npts) {
    auto j = nlohmann::json::parse(text);
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "modulus" && it.key() != "degree" && it.key() != "entries")
            throw std::invalid_argument("unknown cochain field '" + it.key() + "'");
    long L = j.at("modulus").get<long>();
    int deg = j.at("degree").get<int>();
    if (L < 1 || deg < 0) throw std::invalid_argument("bad cochain header");
    Cochain c(deg, G.n, L, npts);
    for (auto& ent : j.at("entries")) {
        auto args = ent.at(0);
        long v = ent.at(1).get<long>();
        std::vector<int> a;
        for (auto& x : args) a.push_back(x.is_string() ? G.parse_element(x.get<std::string>()) : x.get<int>());
        int p = 0;
        if (npts > 1) {
            p = a.front();
            a.erase(a.begin());
        }
        if ((int)a.size() != deg) throw std::invalid_argument("cochain entry arity mismatch");
        for (int x : a)
            if (x < 0 || x >= G.n) throw std::invalid_argument("cochain entry out of range");
        c.e[c.index(p, a.data())] = modp(v, L);
    }
    return c;
}

Cochain slant(const Group& G, const Cochain& w) {
    int n = G.n;
    Cochain b(2, n, w.L, n);
    for (int g = 0; g < n; ++g)
        for (int hp = 0; hp < n; ++hp)
            for (int h = 0; h < n; ++h) {
                int hph = G(hp, h);
                long s = w.get3(G.conj(hph, g), hp, h) + w.get3(hp, h, g) - w.get3(hp, G.conj(h, g), h);
                b.at(g, {hp, h}) = modp(s, w.L);
            }
    return b;
}

// extended gcd on nonnegative integers: s*a + t*b = g
static long egcd(long a, long b, long& s, long& t) {
    long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b) {
        long q = a / b;
        long r = a - q * b;
        a = b;
        b = r;
        long ns = s0 - q * s1, nt = t0 - q * t1;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    s = s0;
    t = t0;
    return a;
}

// Solve over Z/p^e: Z/p^e is local, so a pivot of minimal p-valuation divides every other entry
// and a single elimination pass (with column pivoting) reaches echelon form.
static std::optional<std::vector<long>> solve_prime_power(const std::vector<SparseRow>& rows, const std::vector<long>& rhs,
                                                          int m, long p, long q) {
    auto mulmod = [q](long a, long b) { return (long)((__int128)a * b % q); };
    auto val = [p, q](long a) {
        if (a == 0) return (long)1 << 40;
        long v = 0;
        while (a % p == 0) a /= p, ++v;
        return v;
    };
    auto inv = [&](long u) {
        long s, t;
        egcd(modp(u, q), q, s, t);
        return modp(s, q);
    };
    int R = (int)rows.size();
    std::vector<std::vector<long>> A(R, std::vector<long>(m + 1, 0));
    for (int i = 0; i < R; ++i) {
        for (auto& [c, v] : rows[i]) A[i][c] = modp(A[i][c] + v, q);
        A[i][m] = modp(rhs[i], q);
    }
    std::vector<int> col(m);
    std::iota(col.begin(), col.end(), 0);
    std::vector<long> pv;  // pivot valuations
    int r = 0;
    for (; r < std::min(R, m); ++r) {
        int bi = -1, bj = -1;
        long best = (long)1 << 40;
        for (int i = r; i < R && best > 0; ++i)
            for (int j = r; j < m; ++j) {
                long v = val(A[i][col[j]]);
                if (v < best) {
                    best = v, bi = i, bj = j;
                    if (v == 0) break;
                }
            }
        if (bi < 0) break;
        std::swap(A[r], A[bi]);
        std::swap(col[r], col[bj]);
        int c = col[r];
        long pk = 1;
        for (long k = 0; k < best; ++k) pk *= p;
        long uinv = inv(A[r][c] / pk);
        for (int i = r + 1; i < R; ++i) {
            if (!A[i][c]) continue;
            long f = mulmod(A[i][c] / pk, uinv);
            for (int j = 0; j <= m; ++j)
                if (A[r][j]) A[i][j] = modp(A[i][j] - mulmod(f, A[r][j]), q);
        }
        pv.push_back(pk);
    }
    for (int i = r; i < R; ++i)
        if (A[i][m]) return std::nullopt;
    std::vector<long> x(m, 0);
    for (int t = r - 1; t >= 0; --t) {
        int c = col[t];
        long s = A[t][m];
        for (int j = t + 1; j < m; ++j) s = modp(s - mulmod(A[t][col[j]], x[col[j]]), q);
        long pk = pv[t];
        if (s % pk) return std::nullopt;
        long qk = q / pk, u = A[t][c] / pk, a, b2;
        egcd(modp(u, qk), qk, a, b2);
        x[c] = (long)((__int128)(s / pk) * modp(a, qk) % qk);
    }
    return x;
}

std::optional<std::vector<long>> solve_linear_mod(const std::vector<SparseRow>& rows, const std::vector<long>& rhs,
                                                  int m, long L) {
    std::vector<long> x(m, 0);
    long M = 1, rest = L;
    for (long p = 2; rest > 1; ++p) {
        if (p * p > rest) p = rest;
        if (rest % p) continue;
        long q = 1;
        while (rest % p == 0) rest /= p, q *= p;
        auto xq = solve_prime_power(rows, rhs, m, p, q);
        if (!xq) return std::nullopt;
        // CRT: x = x (mod M), x = xq (mod q)
        long s, t;
        egcd(M % q, q, s, t);
        for (int i = 0; i < m; ++i) {
            long k = (long)((__int128)modp((*xq)[i] - x[i], q) * modp(s, q) % q);
            x[i] = x[i] + M * k;
        }
        M *= q;
    }
    for (auto& v : x) v = modp(v, L);
    return x;
}

std::optional<Cochain> solve_coboundary(const Group& G, const Cochain& target, const Subset& H) {
    int deg = target.degree - 1;
    if (deg < 0 || target.npts != 1) throw std::invalid_argument("solve_coboundary: untwisted target of degree >= 1");
    long L = target.L * (long)H.size();
    Cochain t = rescale(target, L);
    std::vector<int> nz(H.begin() + 1, H.end());  // H without identity
    int h = (int)nz.size();
    long nunk = 1;
    for (int i = 0; i < deg; ++i) nunk *= h;
    if (nunk > 2500) throw std::runtime_error("solve_coboundary: subgroup too large for the dense solver");
    std::vector<int> pos(G.n, -1);
    for (int i = 0; i < h; ++i) pos[nz[i]] = i;
    auto unk = [&](const std::vector<int>& a) -> int {  // -1 if some argument is the identity
        int u = 0;
        for (int x : a) {
            if (x == 0) return -1;
            u = u * h + pos[x];
        }
        return u;
    };
    std::vector<SparseRow> rows;
    std::vector<long> rhs;
    long neq = 1;
    for (int i = 0; i <= deg; ++i) neq *= h;
    std::vector<int> g(deg + 1), a(deg);
    for (long idx = 0; idx < neq; ++idx) {
        long r = idx;
        for (int i = deg; i >= 0; --i) {
            g[i] = nz[r % h];
            r /= h;
        }
        SparseRow row;
        auto add = [&](int u, long s) {
            if (u >= 0) row.push_back({u, s});
        };
        for (int i = 0; i < deg; ++i) a[i] = g[i + 1];
        add(unk(a), 1);
        for (int i = 0; i < deg; ++i) {
            int m = 0;
            for (int j = 0; j <= deg; ++j) {
                if (j == i) {
                    a[m++] = G(g[i], g[i + 1]);
                    ++j;
                } else {
                    a[m++] = g[j];
                }
            }
            add(unk(a), (i + 1) % 2 ? -1 : 1);
        }
        for (int i = 0; i < deg; ++i) a[i] = g[i];
        add(unk(a), (deg + 1) % 2 ? -1 : 1);
        rows.push_back(row);
        rhs.push_back(t.get(0, g.data()));
    }
    auto x = solve_linear_mod(rows, rhs, (int)nunk, L);
    if (!x) return std::nullopt;
    Cochain psi(deg, G.n, L);
    for (long u = 0; u < nunk; ++u) {
        long r = u;
        for (int i = deg - 1; i >= 0; --i) {
            a[i] = nz[r % h];
            r /= h;
        }
        psi.e[psi.index(0, a.data())] = (*x)[u];
    }
    return psi;
}

std::optional<Cochain> solve_twisted_coboundary(const Group& G, const GSet& X, const Cochain& target) {
    if (target.degree != 2) throw std::invalid_argument("twisted solver handles degree 2 targets");
    int n = G.n, P = X.npts;
    long L = target.L * n;
    Cochain t = rescale(target, L);
    auto unk = [&](int p, int g) { return g == 0 ? -1 : p * (n - 1) + (g - 1); };
    std::vector<SparseRow> rows;
    std::vector<long> rhs;
    for (int p = 0; p < P; ++p)
        for (int g = 1; g < n; ++g)
            for (int h = 1; h < n; ++h) {
                SparseRow row;
                auto add = [&](int u, long s) {
                    if (u >= 0) row.push_back({u, s});
                };
                add(unk(p, h), 1);
                add(unk(p, G(g, h)), -1);
                add(unk(X(h, p), g), 1);
                rows.push_back(row);
                rhs.push_back(t.get2(p, g, h));
            }
    if ((long)P * (n - 1) > 2500) throw std::runtime_error("twisted solver: model too large");
    auto x = solve_linear_mod(rows, rhs, P * (n - 1), L);
    if (!x) return std::nullopt;
    Cochain eta(1, n, L, P);
    for (int p = 0; p < P; ++p)
        for (int g = 1; g < n; ++g) eta.e[(size_t)p * n + g] = (*x)[unk(p, g)];
    return eta;
}

std::vector<int> m_iso(const Group& G, const Cosets& C, int alpha, const std::vector<int>& gs) {
    int k = (int)gs.size();
    std::vector<int> out(k);
    int r_prev = C.rep[alpha], acc = alpha;
    for (int i = k - 1; i >= 0; --i) {  // gs[k-1] = g_1 acts first
        acc = C.cid[G(gs[i], C.rep[acc])];
        int r = C.rep[acc];
        out[i] = G(G(G.inv[r], gs[i]), r_prev);
        r_prev = r;
    }
    return out;
}

}  // namespace dw
