#pragma once
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "dw/groups.hpp"

namespace dw {

using cd = std::complex<double>;

long gcdl(long a, long b);
long lcml(long a, long b);
long modp(long a, long L);
cd root(long e, long L);  // exp(2 pi i e / L)

// Phase e^{2 pi i e / L}, exponent kept in [0, L).
struct PhaseExp {
    long e = 0, L = 1;
    PhaseExp() = default;
    PhaseExp(long e_, long L_) : e(modp(e_, L_)), L(L_) {}
    PhaseExp operator*(const PhaseExp& o) const;
    PhaseExp conj() const { return {-e, L}; }
    cd value() const { return root(e, L); }
    bool operator==(const PhaseExp& o) const { return e * (o.L / gcdl(L, o.L)) == o.e * (L / gcdl(L, o.L)); }
};

// n-cochain with exponents mod L; twisted cochains carry npts > 1 (point index first).
struct Cochain {
    int degree = 0, n = 1, npts = 1;
    long L = 1;
    std::vector<long> e;

    Cochain() = default;
    Cochain(int degree_, int n_, long L_, int npts_ = 1);
    size_t size_per_point() const;
    size_t index(int p, const int* args) const;
    long& at(int p, std::initializer_list<int> args);
    long at(int p, std::initializer_list<int> args) const;
    long get(int p, const int* args) const { return e[index(p, args)]; }
    long get1(int p, int a) const { return e[(size_t)p * n + a]; }
    long get2(int p, int a, int b) const { return e[((size_t)p * n + a) * n + b]; }
    long get3(int a, int b, int c) const { return e[((size_t)a * n + b) * n + c]; }
    cd val2(int p, int a, int b) const { return root(get2(p, a, b), L); }
    cd val3(int a, int b, int c) const { return root(get3(a, b, c), L); }
    bool trivial() const;
};

Cochain rescale(const Cochain& c, long L);
Cochain product(const Cochain& a, const Cochain& b);  // pointwise, common modulus
Cochain conjugate(const Cochain& c);
Cochain random_cochain(int degree, int n, long L, int npts, unsigned seed, bool normalized = true);

// Twisted coboundary; the point is moved by the last argument:
// (dc)^x(g1..g_{k+1}) = c^x(g2..) * prod_i c^x(..g_i g_{i+1}..)^{(-1)^i} * c^{g_{k+1} x}(g1..g_k)^{(-1)^{k+1}}
Cochain coboundary(const Group& G, const Cochain& c, const GSet* X = nullptr);

struct CocycleCheck {
    bool ok = true;
    std::vector<int> witness;  // point followed by group arguments
};
CocycleCheck is_cocycle(const Group& G, const Cochain& c, const GSet* X = nullptr);
bool is_normalized(const Cochain& c);

// Library 3-cocycles.
struct CocycleTerm {
    enum Kind { TypeI, TypeII, TypeIII, S3 } kind = TypeI;
    int i = 0, j = 0, k = 0;
    long n = 0;
};
struct CocycleSpec {
    std::vector<CocycleTerm> terms;
    bool conjugate = false;
    std::optional<Cochain> table;  // user-supplied exponent table
};
Cochain make_cocycle(const Group& G, const CocycleSpec& spec);
// Pointwise evaluation of library terms, for groups too large for a dense table.
long cocycle_modulus(const Group& G, const CocycleSpec& spec);
long cocycle_exponent(const Group& G, const CocycleSpec& spec, int x, int y, int z);  // mod cocycle_modulus
// omega|_H = d thin on H^3, evaluated pointwise (thin is a degree-2 cochain on G).
bool trivializes_on_subgroup(const Group& G, const CocycleSpec& spec, const Subset& H, const Cochain& thin);

// Bilinear 2-cocycles Omega(a,b) = exp(2 pi i q a_i b_j / M) in terms of G coordinates.
struct TwoCocycleTerm {
    int i = 0, j = 1;
    long q = 0;
    long M = 0;  // 0 -> gcd(N_i, N_j)
};
Cochain make_2cocycle(const Group& G, const std::vector<TwoCocycleTerm>& terms);

// Cochain from JSON schema {"modulus","degree","entries":[[args...],exp]} (group args, point first if twisted).
Cochain cochain_from_json(const Group& G, const std::string& json_text, int npts = 1);

// beta_g(h',h) = w(h'hg(h'h)^-1, h', h) w(h', h, g) conj w(h', hgh^-1, h), twisted over conjugation.
Cochain slant(const Group& G, const Cochain& omega);

// Solve A x = b over Z_L (sparse rows of (col, coeff)); nullopt if inconsistent.
using SparseRow = std::vector<std::pair<int, long>>;
std::optional<std::vector<long>> solve_linear_mod(const std::vector<SparseRow>& rows, const std::vector<long>& rhs,
                                                  int ncols, long L);

// A (degree-1) cochain psi on H with d psi = target|_H, or nullopt. The modulus is enlarged to
// L*|H| so that every U(1) solution class is reachable. Values outside H are zero.
std::optional<Cochain> solve_coboundary(const Group& G, const Cochain& target, const Subset& H);
// Twisted version over a G-set (small models only).
std::optional<Cochain> solve_twisted_coboundary(const Group& G, const GSet& X, const Cochain& target);

// (r_n^-1 g_n r_{n-1}, ..., r_1^-1 g_1 r_0) with r_k the representative of g_k..g_1 alpha.
std::vector<int> m_iso(const Group& G, const Cosets& C, int alpha, const std::vector<int>& gs);

}  // namespace dw
