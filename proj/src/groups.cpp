#include "dw/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dw {

static void fill_inverse(Group& G) {
    G.inv.assign(G.n, -1);
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            if (G(a, b) == 0) G.inv[a] = b;
}

bool Group::abelian() const {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < a; ++b)
            if ((*this)(a, b) != (*this)(b, a)) return false;
    return true;
}

bool Group::all_cyclic() const {
    return std::none_of(factor_is_s3.begin(), factor_is_s3.end(), [](bool b) { return b; });
}

int Group::index_of(const std::vector<int>& c) const {
    if (c.size() != factors.size()) throw std::invalid_argument("wrong tuple length");
    int g = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        int v = c[i];
        if (v < 0 || v >= factors[i]) throw std::invalid_argument("tuple entry out of range");
        g = g * factors[i] + v;
    }
    return g;
}

static const char* kS3Names[6] = {"e", "r", "r2", "t", "tr", "tr2"};

std::string Group::element_name(int g) const {
    auto part = [&](int i, int v) {
        return factor_is_s3[i] ? std::string(kS3Names[v]) : std::to_string(v);
    };
    if (factors.size() == 1) return part(0, coord[g][0]);
    std::string s = "(";
    for (size_t i = 0; i < factors.size(); ++i) s += (i ? "," : "") + part(i, coord[g][i]);
    return s + ")";
}

static int parse_part(const std::string& tok, bool s3, int order) {
    if (s3) {
        for (int i = 0; i < 6; ++i)
            if (tok == kS3Names[i]) return i;
        if (tok == "r^2" || tok == "r²") return 2;
        if (tok == "tr^2" || tok == "tr²") return 5;
    }
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 0 || v >= order) throw std::invalid_argument("bad element '" + tok + "'");
    return v;
}

int Group::parse_element(const std::string& raw) const {
    std::string s;
    for (char c : raw)
        if (c != ' ') s += c;
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    std::vector<std::string> toks;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == ',') {
            toks.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    if (toks.size() != factors.size()) throw std::invalid_argument("element '" + raw + "' has wrong arity");
    std::vector<int> c;
    try {
        for (size_t i = 0; i < toks.size(); ++i) c.push_back(parse_part(toks[i], factor_is_s3[i], factors[i]));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad element '" + raw + "'");
    }
    return index_of(c);
}

Group make_cyclic(int N) {
    if (N < 1) throw std::invalid_argument("cyclic order must be positive");
    Group G;
    G.n = N;
    G.name = "Z" + std::to_string(N);
    G.mul.resize(N * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) G.mul[a * N + b] = (a + b) % N;
    G.factors = {N};
    G.factor_is_s3 = {false};
    for (int g = 0; g < N; ++g) G.coord.push_back({g});
    fill_inverse(G);
    return G;
}

// t^A r^a has index 3A+a; t^A r^a * t^B r^b = t^{A+B} r^{(-1)^B a + b}
Group make_s3() {
    Group G;
    G.n = 6;
    G.name = "S3";
    G.mul.resize(36);
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            int A = x / 3, a = x % 3, B = y / 3, b = y % 3;
            G.mul[x * 6 + y] = ((A + B) % 2) * 3 + (((B ? -a : a) + b) % 3 + 3) % 3;
        }
    G.factors = {6};
    G.factor_is_s3 = {true};
    for (int g = 0; g < 6; ++g) G.coord.push_back({g});
    fill_inverse(G);
    return G;
}

Group make_product(const std::vector<Group>& gs) {
    if (gs.empty()) throw std::invalid_argument("empty product");
    Group G;
    G.n = 1;
    for (auto& g : gs) {
        G.n *= g.n;
        G.name += (G.name.empty() ? "" : "x") + g.name;
        for (size_t i = 0; i < g.factors.size(); ++i) {
            G.factors.push_back(g.factors[i]);
            G.factor_is_s3.push_back(g.factor_is_s3[i]);
        }
    }
    // coordinates: lexicographic in the flattened factor list, leftmost most significant
    G.coord.resize(G.n);
    for (int g = 0; g < G.n; ++g) {
        std::vector<int> c(G.factors.size());
        int r = g;
        for (int i = (int)c.size() - 1; i >= 0; --i) {
            c[i] = r % G.factors[i];
            r /= G.factors[i];
        }
        G.coord[g] = c;
    }
    static const Group s3 = make_s3();
    G.mul.resize((size_t)G.n * G.n);
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b) {
            std::vector<int> c(G.factors.size());
            for (size_t i = 0; i < c.size(); ++i)
                c[i] = G.factor_is_s3[i] ? s3(G.coord[a][i], G.coord[b][i])
                                         : (G.coord[a][i] + G.coord[b][i]) % G.factors[i];
            G.mul[a * G.n + b] = G.index_of(c);
        }
    fill_inverse(G);
    return G;
}

Subset closure(const Group& G, const std::vector<int>& gens) {
    std::vector<char> in(G.n, 0);
    std::vector<int> todo{0};
    in[0] = 1;
    while (!todo.empty()) {
        int x = todo.back();
        todo.pop_back();
        for (int g : gens) {
            int y = G(x, g);
            if (!in[y]) {
                in[y] = 1;
                todo.push_back(y);
            }
        }
    }
    Subset S;
    for (int g = 0; g < G.n; ++g)
        if (in[g]) S.push_back(g);
    return S;
}

bool is_subgroup(const Group& G, const Subset& H) {
    if (H.empty() || H[0] != 0) return false;
    std::vector<char> in(G.n, 0);
    for (int h : H) in[h] = 1;
    for (int a : H) {
        if (!in[G.inv[a]]) return false;
        for (int b : H)
            if (!in[G(a, b)]) return false;
    }
    return true;
}

std::vector<Subset> conjugacy_classes(const Group& G) {
    std::vector<char> seen(G.n, 0);
    std::vector<Subset> out;
    for (int g = 0; g < G.n; ++g) {
        if (seen[g]) continue;
        std::set<int> c;
        for (int h = 0; h < G.n; ++h) c.insert(G.conj(h, g));
        for (int x : c) seen[x] = 1;
        out.emplace_back(c.begin(), c.end());
    }
    return out;
}

Subset centralizer(const Group& G, int x) {
    Subset Z;
    for (int h = 0; h < G.n; ++h)
        if (G(h, x) == G(x, h)) Z.push_back(h);
    return Z;
}

std::vector<Subset> subgroups(const Group& G) {
    std::set<Subset> all;
    for (int a = 0; a < G.n; ++a)
        for (int b = a; b < G.n; ++b) all.insert(closure(G, {a, b}));
    std::vector<Subset> out(all.begin(), all.end());
    std::sort(out.begin(), out.end(), [](const Subset& x, const Subset& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

Cosets left_cosets(const Group& G, const Subset& H) {
    Cosets C;
    C.cid.assign(G.n, -1);
    for (int g = 0; g < G.n; ++g) {
        if (C.cid[g] >= 0) continue;
        int id = C.count();
        C.rep.push_back(g);  // scanning in index order makes g minimal
        for (int h : H) C.cid[G(g, h)] = id;
    }
    return C;
}

std::vector<Subset> double_cosets(const Group& G, const Subset& H) {
    std::vector<char> seen(G.n, 0);
    std::vector<Subset> out;
    for (int g = 0; g < G.n; ++g) {
        if (seen[g]) continue;
        std::set<int> d;
        for (int a : H)
            for (int b : H) d.insert(G(G(a, g), b));
        for (int x : d) seen[x] = 1;
        out.emplace_back(d.begin(), d.end());
    }
    return out;
}

Subset k_x(const Group& G, const Subset& H, int d) {
    std::vector<char> in(G.n, 0);
    for (int h : H) in[h] = 1;
    Subset K;
    for (int h : H)
        if (in[G(G(G.inv[d], h), d)]) K.push_back(h);  // h in d H d^-1
    return K;
}

GSet trivial_gset(const Group& G) {
    GSet X;
    X.npts = 1;
    X.act.assign(G.n, 0);
    return X;
}

GSet conjugation_gset(const Group& G) {
    GSet X;
    X.npts = G.n;
    X.act.resize((size_t)G.n * G.n);
    for (int g = 0; g < G.n; ++g)
        for (int x = 0; x < G.n; ++x) X.act[g * G.n + x] = G.conj(g, x);
    return X;
}

GSet coset_gset(const Group& G, const Cosets& C) {
    GSet X;
    X.npts = C.count();
    X.act.resize((size_t)G.n * X.npts);
    for (int g = 0; g < G.n; ++g)
        for (int a = 0; a < X.npts; ++a) X.act[g * X.npts + a] = C.cid[G(g, C.rep[a])];
    return X;
}

GSet pair_coset_gset(const Group& G, const Cosets& C) {
    GSet one = coset_gset(G, C);
    int nc = C.count();
    GSet X;
    X.npts = nc * nc;
    X.act.resize((size_t)G.n * X.npts);
    for (int g = 0; g < G.n; ++g)
        for (int a = 0; a < nc; ++a)
            for (int b = 0; b < nc; ++b) X.act[g * X.npts + a * nc + b] = one(g, a) * nc + one(g, b);
    return X;
}

bool is_action(const Group& G, const GSet& X) {
    for (int p = 0; p < X.npts; ++p) {
        if (X(0, p) != p) return false;
        for (int g = 0; g < G.n; ++g)
            for (int h = 0; h < G.n; ++h)
                if (X(g, X(h, p)) != X(G(g, h), p)) return false;
    }
    return true;
}

std::vector<std::vector<int>> orbits(const Group& G, const GSet& X) {
    std::vector<char> seen(X.npts, 0);
    std::vector<std::vector<int>> out;
    for (int p = 0; p < X.npts; ++p) {
        if (seen[p]) continue;
        std::set<int> o;
        for (int g = 0; g < G.n; ++g) o.insert(X(g, p));
        for (int q : o) seen[q] = 1;
        out.emplace_back(o.begin(), o.end());
    }
    return out;
}

Subset stabilizer(const Group& G, const GSet& X, int p) {
    Subset S;
    for (int g = 0; g < G.n; ++g)
        if (X(g, p) == p) S.push_back(g);
    return S;
}

}  // namespace dw
