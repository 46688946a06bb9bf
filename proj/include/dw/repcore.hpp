#pragma once
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dw/cohomology.hpp"
#include "dw/groups.hpp"

namespace dw {

// C^{X x G} with (x,g)*(y,h) = delta_{x, h>y} Psi^y(g,h) (y, gh).
struct AlgebraWithAction {
    const Group* G = nullptr;
    GSet X;
    Cochain Psi;  // degree 2, npts = X.npts
    std::vector<cd> psi;  // cached values
    AlgebraWithAction() = default;
    AlgebraWithAction(const Group& G_, GSet X_, Cochain Psi_);
    cd Psi_at(int x, int g, int h) const { return psi[((size_t)x * G->n + g) * G->n + h]; }
    int dim_basis() const { return X.npts * G->n; }
};

// A character of a (projective) irrep of K, as a dense vector over G (zero off K).
struct LabeledChar {
    std::string label;
    std::vector<cd> chi;
};

// One block of the algebra: orbit, projective irrep of the base stabilizer, and its
// characters extended over the orbit.
struct Block {
    std::vector<int> orbit;
    int base = 0;
    Subset K;
    std::string label;
    int d = 1;  // irrep dimension
    std::vector<int> local;  // point -> orbit position or -1
    std::vector<std::vector<cd>> chi;  // [orbit position][g]
    std::vector<Subset> stab;  // stabilizer per orbit position
    int dim() const { return (int)orbit.size() * d; }
    bool contains(int x) const { return local[x] >= 0; }
    cd at(int x, int g) const { return chi[local[x]][g]; }
};

using SparseElem = std::vector<std::pair<int, cd>>;  // basis index x*n+g

// Character source for a stabilizer: return nullopt to fall back to the generic path.
using CharProvider = std::function<std::optional<std::vector<LabeledChar>>(int base, const Subset& K)>;

std::vector<LabeledChar> linear_characters(const Group& G, const Subset& K);
// Characters of Psi-projective irreps of K, Psi given on K at a fixed point (exact).
std::vector<LabeledChar> projective_characters(const Group& G, const Subset& K, const Cochain& Psi, int point);
std::vector<LabeledChar> numeric_projective_characters(const Group& G, const Subset& K,
                                                       const std::function<cd(int, int)>& psi);

Block extend_irrep(const AlgebraWithAction& A, const std::vector<int>& orbit, int base, const Subset& K,
                   const LabeledChar& c);
std::vector<Block> decompose(const AlgebraWithAction& A, const CharProvider& provider = nullptr);

SparseElem idempotent(const AlgebraWithAction& A, const Block& b);
SparseElem multiply(const AlgebraWithAction& A, const SparseElem& u, const SparseElem& v);
SparseElem algebra_unit(const AlgebraWithAction& A);
double distance(const SparseElem& u, const SparseElem& v);

// Exhaustive checks used by the invariant suites.
bool is_associative(const AlgebraWithAction& A);
struct IdempotentReport {
    double idem = 0, central = 0, orth = 0, complete = 0;
    long dim_sum = 0, algebra_dim = 0;
    bool ok(double tol = 1e-9) const {
        return idem < tol && central < tol && orth < tol && complete < tol && dim_sum == algebra_dim;
    }
};
IdempotentReport check_idempotents(const AlgebraWithAction& A, const std::vector<Block>& blocks);
// max deviation from rho(k)rho(k') = Psi rho(kk') consequences: character orthogonality per block
double character_orthogonality_error(const AlgebraWithAction& A, const std::vector<Block>& blocks);

std::string fingerprint(const std::vector<cd>& v);

}  // namespace dw
