#pragma once
#include <optional>
#include <string>
#include <vector>

#include "dw/cohomology.hpp"
#include "dw/groups.hpp"
#include "dw/repcore.hpp"

namespace dw {

// Bulk tube algebra: X = G under conjugation, Psi = beta_g = slant(omega).
struct Tube {
    const Group* G = nullptr;
    Cochain omega, beta;
    AlgebraWithAction A;
    std::vector<Block> anyons;
    std::optional<Cochain> eps;  // canonical trivializer of beta on centralizers, when available
    std::string name(const Block& b) const;
    int index_of(const std::string& name) const;  // -1 if absent
};

// eps^g(h) with beta_g = d eps^g on Z(g), from the closed formulas for type-I/II and S3 terms.
std::optional<Cochain> canonical_epsilon(const Group& G, const CocycleSpec& spec);
// true iff d eps^g(h',h) = beta_g(h',h) for all g and h',h in Z(g)
bool trivializes_on_centralizers(const Group& G, const Cochain& beta, const Cochain& eps);

// Throws std::invalid_argument if omega is not a normalized 3-cocycle.
Tube build_tube(const Group& G, const Cochain& omega, const CocycleSpec* spec = nullptr);
bool is_abelian_theory(const Tube& t);
// theta_a = chi_a^g(g) / d_a at the base flux g
cd topological_spin(const Block& a);

}  // namespace dw
