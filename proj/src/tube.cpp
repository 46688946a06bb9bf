#include "dw/tube.hpp"

#include <stdexcept>

namespace dw {

std::string Tube::name(const Block& b) const { return "(" + G->element_name(b.base) + "," + b.label + ")"; }

int Tube::index_of(const std::string& s) const {
    for (size_t i = 0; i < anyons.size(); ++i)
        if (name(anyons[i]) == s) return (int)i;
    return -1;
}

// S3: eps^p_{t^A r^a}(t^B r^b) = exp(2 pi i p/9 (b((-1)^B a + 2Ab mod 3) - A b^2)) i^{pAB}, over 36
static long s3_eps_exp(long p, int g, int h) {
    int A = g / 3, a = g % 3, B = h / 3, b = h % 3;
    long inner = modp((B ? -a : a) + 2 * A * b, 3);
    return p * (4 * (b * inner - A * b * b) + 9 * A * B);
}

std::optional<Cochain> canonical_epsilon(const Group& G, const CocycleSpec& spec) {
    if (spec.table) return std::nullopt;
    long L = 1;
    for (auto& t : spec.terms) {
        switch (t.kind) {
            case CocycleTerm::TypeI: L = lcml(L, (long)G.factors[t.i] * G.factors[t.i]); break;
            case CocycleTerm::TypeII: L = lcml(L, (long)G.factors[t.i] * G.factors[t.j]); break;
            case CocycleTerm::S3: L = lcml(L, 36); break;
            case CocycleTerm::TypeIII: return std::nullopt;
        }
    }
    Cochain eps(1, G.n, L, G.n);
    for (int g = 0; g < G.n; ++g)
        for (int h = 0; h < G.n; ++h) {
            long s = 0;
            for (auto& t : spec.terms) {
                const auto& cg = G.coord[g];
                const auto& ch = G.coord[h];
                switch (t.kind) {
                    case CocycleTerm::TypeI: {
                        long M = (long)G.factors[t.i] * G.factors[t.i];
                        s += t.n * cg[t.i] * ch[t.i] * (L / M);
                        break;
                    }
                    case CocycleTerm::TypeII: {
                        long M = (long)G.factors[t.i] * G.factors[t.j];
                        s += t.n * cg[t.i] * ch[t.j] * (L / M);
                        break;
                    }
                    case CocycleTerm::S3: s += s3_eps_exp(t.n, cg[t.i], ch[t.i]) * (L / 36); break;
                    default: break;
                }
            }
            eps.at(g, {h}) = modp(spec.conjugate ? -s : s, L);
        }
    return eps;
}

bool trivializes_on_centralizers(const Group& G, const Cochain& beta, const Cochain& eps) {
    long L = lcml(beta.L, eps.L);
    for (int g = 0; g < G.n; ++g) {
        Subset Z = centralizer(G, g);
        for (int a : Z)
            for (int b : Z) {
                long d = eps.get1(g, b) - eps.get1(g, G(a, b)) + eps.get1(g, a);
                if (modp(d * (L / eps.L) - beta.get2(g, a, b) * (L / beta.L), L) != 0) return false;
            }
    }
    return true;
}

Tube build_tube(const Group& G, const Cochain& omega, const CocycleSpec* spec) {
    if (omega.degree != 3 || omega.n != G.n) throw std::invalid_argument("tube: omega must be a 3-cochain on G");
    if (!is_cocycle(G, omega).ok) throw std::invalid_argument("tube: omega is not a 3-cocycle");
    if (!is_normalized(omega)) throw std::invalid_argument("tube: omega is not normalized");
    Tube t;
    t.G = &G;
    t.omega = omega;
    t.beta = slant(G, omega);
    t.A = AlgebraWithAction(G, conjugation_gset(G), t.beta);
    if (spec) {
        t.eps = canonical_epsilon(G, *spec);
        if (t.eps && !trivializes_on_centralizers(G, t.beta, *t.eps)) t.eps.reset();
    } else if (omega.trivial()) {
        t.eps = Cochain(1, G.n, 1, G.n);
    }
    CharProvider provider;
    if (t.eps) {
        const Cochain& e = *t.eps;
        provider = [&G, &e](int base, const Subset& K) -> std::optional<std::vector<LabeledChar>> {
            auto lin = linear_characters(G, K);
            for (auto& c : lin)
                for (int h : K) c.chi[h] *= root(e.get1(base, h), e.L);
            return lin;
        };
    }
    t.anyons = decompose(t.A, provider);
    return t;
}

bool is_abelian_theory(const Tube& t) {
    for (auto& b : t.anyons)
        if (b.dim() != 1) return false;
    return true;
}

cd topological_spin(const Block& a) { return a.at(a.base, a.base) / (double)a.d; }

}  // namespace dw
