#include "dw/semitube.hpp"

#include <cmath>

namespace dw {

static long common(long a, long b) { return lcml(a, b); }

// psi^a(g,h) = psi~(h_g, h_h) conj w(g,h,x) w(g,y,h_h) conj w(z,h_g,h_h)
// with x,y,z the representatives of a, h a, gh a and h_h = y^-1 h x, h_g = z^-1 g y.
Cochain thick_from_thin(const Group& G, const Cochain& omega, const Subset& H, const Cochain& thin) {
    Cosets C = left_cosets(G, H);
    int nc = C.count();
    long L = common(omega.L, thin.L);
    long so = L / omega.L, st = L / thin.L;
    Cochain psi(2, G.n, L, nc);
    for (int a = 0; a < nc; ++a) {
        int x = C.rep[a];
        for (int g = 0; g < G.n; ++g)
            for (int h = 0; h < G.n; ++h) {
                int hx = G(h, x);
                int y = C.rep[C.cid[hx]];
                int z = C.rep[C.cid[G(g, hx)]];
                int hh = G(G.inv[y], hx), hg = G(G.inv[z], G(g, y));
                long e = thin.get2(0, hg, hh) * st +
                         (-omega.get3(g, h, x) + omega.get3(g, y, hh) - omega.get3(z, hg, hh)) * so;
                psi.at(a, {g, h}) = modp(e, L);
            }
    }
    return psi;
}

Cochain thin_from_thick(const Group& G, const Cochain& psi) {
    Cochain t(2, G.n, psi.L);
    for (int g = 0; g < G.n; ++g)
        for (int h = 0; h < G.n; ++h) t.at(0, {g, h}) = psi.get2(0, g, h);
    return t;
}

bool satisfies_boundary_condition(const Group& G, const Cochain& omega, const GSet& X, const Cochain& psi) {
    Cochain d = coboundary(G, psi, &X);
    long L = common(d.L, omega.L);
    for (int p = 0; p < X.npts; ++p)
        for (int a = 0; a < G.n; ++a)
            for (int b = 0; b < G.n; ++b)
                for (int c = 0; c < G.n; ++c)
                    if (modp(d.at(p, {a, b, c}) * (L / d.L) - omega.get3(a, b, c) * (L / omega.L), L) != 0)
                        return false;
    return true;
}

Boundary make_boundary(const Group& G, const Cochain& omega, const Subset& H, const std::optional<Cochain>& twist,
                       const std::optional<Cochain>& thin, const std::string& provenance) {
    if (!is_subgroup(G, H)) throw std::invalid_argument("boundary: H is not a subgroup");
    Boundary b;
    b.G = &G;
    b.omega = omega;
    b.H = H;
    b.C = left_cosets(G, H);
    b.X = coset_gset(G, b.C);
    if (thin) {
        b.thin = *thin;
        b.provenance = provenance.empty() ? "user" : provenance;
    } else {
        auto s = solve_coboundary(G, omega, H);
        if (!s) throw BoundaryInvalid("omega restricted to H is not a coboundary");
        b.thin = *s;
        b.provenance = "solved";
    }
    if (twist) {
        // zero the twist off H so that the thin cochain stays supported on H
        Cochain tw(2, G.n, twist->L);
        for (int x : H)
            for (int y : H) tw.at(0, {x, y}) = twist->get2(0, x, y);
        b.thin = product(b.thin, tw);
    }
    b.psi = thick_from_thin(G, omega, H, b.thin);
    if (!satisfies_boundary_condition(G, omega, b.X, b.psi))
        throw BoundaryInvalid("boundary cochain does not trivialize omega");
    return b;
}

Boundary regauge(const Boundary& b, const Cochain& xi) {
    Boundary r = b;
    Cochain d = coboundary(*b.G, xi, &b.X);
    r.psi = product(b.psi, d);
    return r;
}

SemiTube build_semitube(const Boundary& bd) {
    const Group& G = *bd.G;
    int nc = bd.C.count();
    Cochain Psi(2, G.n, bd.psi.L, nc * nc);
    for (int a = 0; a < nc; ++a)
        for (int c = 0; c < nc; ++c)
            for (int g = 0; g < G.n; ++g)
                for (int h = 0; h < G.n; ++h)
                    Psi.at(a * nc + c, {g, h}) = modp(bd.psi.get2(c, g, h) - bd.psi.get2(a, g, h), bd.psi.L);
    SemiTube s;
    s.bd = &bd;
    s.A = AlgebraWithAction(G, pair_coset_gset(G, bd.C), Psi);
    s.anyons = decompose(s.A);
    return s;
}

std::string SemiTube::double_coset_name(const Block& b) const {
    int d = bd->C.rep[b.base % nc()];
    return d == 0 ? "H" : bd->G->element_name(d);
}

std::string SemiTube::name(const Block& b) const { return "(" + double_coset_name(b) + "," + b.label + ")"; }

int SemiTube::trivial_index() const {
    for (size_t i = 0; i < anyons.size(); ++i) {
        auto& b = anyons[i];
        if (b.base != 0) continue;
        bool triv = true;
        for (int h : b.K) triv &= std::abs(b.chi[0][h] - 1.0) < 1e-9;
        if (triv) return (int)i;
    }
    return -1;
}

}  // namespace dw
