#pragma once
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dw/fusion.hpp"

namespace dw {

struct ModelSpec {
    Group G;
    CocycleSpec spec;
};

// Folds above this order keep omega empty (a dense table would not fit); use the
// pointwise cocycle evaluation on subgroups instead.
constexpr int kDenseFoldLimit = 256;

// Wall between left and right models as a boundary of G_L x G_R with omega_L conj(omega_R).
// Members hold pointers into each other, so the model lives behind a unique_ptr.
struct FoldedModel {
    ModelSpec left, right;
    Group G;
    CocycleSpec spec;
    Cochain omega;
    Tube tl, tr;
    int pair(int l, int r) const { return l * right.G.n + r; }
};
std::unique_ptr<FoldedModel> fold(const ModelSpec& left, const ModelSpec& right);
// Anyon of the folded model with character chi_a conj(chi_b).
Block fold_anyon(const FoldedModel& fm, const Block& a, const Block& b);

struct TunnelingTable {
    std::vector<std::string> rows, cols;
    std::vector<std::vector<long>> m;
    std::vector<std::string> kind;  // condensed | confined | tunnels
};
TunnelingTable tunneling_table(const FoldedModel& fm, const SemiTube& s);

// Condensation walls: Z_{N^2} | Z_N (type I) and Z_{N^2}^2 | Z_N^2 (type I and II), with the
// trivializing cochains in closed form and an optional Omega^m twist on H.
struct CondensationWall {
    std::unique_ptr<FoldedModel> fm;
    Subset H;
    Cochain thin;  // closed-form trivializer (twist included)
};
CondensationWall condensation_wall_typeI(int N, long n);
CondensationWall condensation_wall_typeI_II(int N, long n, long m);

}  // namespace dw
