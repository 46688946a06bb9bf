#pragma once
#include <stdexcept>
#include <string>
#include <vector>

#include "dw/semitube.hpp"
#include "dw/tube.hpp"

namespace dw {

struct NonIntegerMultiplicity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Nearest nonnegative integer; throws NonIntegerMultiplicity beyond 1e-6.
long round_multiplicity(cd v, const std::string& what = "");

// Closed formula: (1/|G|) sum_{g in c} sum_{alpha: (g alpha, alpha) in x} sum_{h in Z(g) cap Stab}
//   conj psi^alpha(h,g) psi^alpha(g,h) chi_a^g(h) conj chi_b^{(g alpha, alpha)}(h)
cd fusion_sum(const SemiTube& s, const Block& a, const Block& b);  // a may be any block over G
long fusion_multiplicity(const Tube& t, const SemiTube& s, const Block& a, const Block& b);
// Trace of P^T_a and P^S_b acting on the bimodule C, divided by dim(a) dim(b).
bool oracle_available(const Tube& t, const SemiTube& s);  // |G|^2 |G/H| <= 4096
cd oracle_sum(const Tube& t, const SemiTube& s, const Block& a, const Block& b);
long oracle_fusion_multiplicity(const Tube& t, const SemiTube& s, const Block& a, const Block& b);

struct FusionTable {
    std::vector<std::string> rows, cols;
    std::vector<std::vector<long>> m;
    std::string title;
};
FusionTable fusion_table(const Tube& t, const SemiTube& s, bool use_oracle = false);

// Anyons condensing at the trivial boundary anyon, from the reduced sum over H.
cd condensation_sum(const Tube& t, const Boundary& bd, const Block& a);
std::vector<std::pair<int, long>> lagrangian_algebra(const Tube& t, const Boundary& bd);

// Bimodule actions on basis (g,h,alpha); returns false if the element is annihilated.
struct BimoduleVec {
    int g, h, alpha;
    cd c;
};
bool tube_act(const Tube& t, int gp, int hp, BimoduleVec& v);
bool semitube_act(const Tube& t, const SemiTube& s, BimoduleVec& v, int pt, int hp);
// Left and right actions commute and are representations, on `samples` random basis triples.
bool bimodule_consistent(const Tube& t, const SemiTube& s, int samples, unsigned seed);

long bulk_fusion_N(const Tube& t, const Block& a0, const Block& a1, const Block& a2);
struct GsdReport {
    long rank = 0;
    double idempotency = 0;
};
GsdReport torus_gsd(const Tube& t);

}  // namespace dw
