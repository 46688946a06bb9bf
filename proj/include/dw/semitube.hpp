#pragma once
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dw/cohomology.hpp"
#include "dw/groups.hpp"
#include "dw/repcore.hpp"

namespace dw {

struct BoundaryInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (H, psi) boundary of (G, omega); psi is the thick cochain psi^alpha(g,h) over G/H.
struct Boundary {
    const Group* G = nullptr;
    Cochain omega;
    Subset H;
    Cosets C;
    GSet X;  // G/H under left translation
    Cochain thin;  // psi~ on H (zero off H)
    Cochain psi;  // degree 2, npts = |G/H|
    std::string provenance;  // solved | library | user
    cd psi_at(int alpha, int g, int h) const { return root(psi.get2(alpha, g, h), psi.L); }
};

// App. E maps between thin cochains on H and thick cochains on G/H.
Cochain thick_from_thin(const Group& G, const Cochain& omega, const Subset& H, const Cochain& thin);
Cochain thin_from_thick(const Group& G, const Cochain& psi);
// omega(g,h,k) = psi^a(h,k) psi^a(g,hk) / (psi^a(gh,k) psi^{k a}(g,h)) everywhere
bool satisfies_boundary_condition(const Group& G, const Cochain& omega, const GSet& X, const Cochain& psi);

// Solve for (or take) the thin cochain, multiply by the optional twist, lift and validate.
// Throws BoundaryInvalid when omega|_H is not a coboundary or the supplied data fail the check.
Boundary make_boundary(const Group& G, const Cochain& omega, const Subset& H,
                       const std::optional<Cochain>& twist = std::nullopt,
                       const std::optional<Cochain>& thin = std::nullopt, const std::string& provenance = "");
// Same boundary with psi replaced by psi * d~xi.
Boundary regauge(const Boundary& b, const Cochain& xi);

// Semi-tube algebra on G/H x G/H (point a*nc+b), Psi^{a,b} = conj(psi^a) psi^b.
struct SemiTube {
    const Boundary* bd = nullptr;
    AlgebraWithAction A;
    std::vector<Block> anyons;
    int nc() const { return bd->C.count(); }
    std::string double_coset_name(const Block& b) const;
    std::string name(const Block& b) const;
    int trivial_index() const;  // base (H,H) with the trivial character
};
SemiTube build_semitube(const Boundary& bd);

}  // namespace dw
