#pragma once
#include <string>
#include <vector>

namespace dw {

// Finite group as a dense multiplication table; element 0 is the identity.
struct Group {
    int n = 1;
    std::vector<int> mul;  // n*n, mul[a*n+b] = ab
    std::vector<int> inv;
    std::string name;
    // factor bookkeeping for explicit products (a single Z_N or S3 is a product of one)
    std::vector<int> factors;            // factor orders
    std::vector<bool> factor_is_s3;
    std::vector<std::vector<int>> coord; // coord[g][i] = component of g in factor i

    int operator()(int a, int b) const { return mul[a * n + b]; }
    int conj(int h, int g) const { return mul[mul[h * n + g] * n + inv[h]]; }  // h g h^-1
    bool abelian() const;
    bool all_cyclic() const;  // every factor is Z_N
    int index_of(const std::vector<int>& c) const;
    std::string element_name(int g) const;
    int parse_element(const std::string& s) const;  // throws std::invalid_argument
};

Group make_cyclic(int N);
Group make_s3();
Group make_product(const std::vector<Group>& gs);

using Subset = std::vector<int>;  // sorted element indices

Subset closure(const Group& G, const std::vector<int>& gens);
bool is_subgroup(const Group& G, const Subset& H);
std::vector<Subset> conjugacy_classes(const Group& G);
Subset centralizer(const Group& G, int x);
std::vector<Subset> subgroups(const Group& G);  // every subgroup, generated from <=2 elements (enough for the test groups)

// Left cosets gH numbered by increasing minimal representative; coset 0 is H.
struct Cosets {
    std::vector<int> rep;  // canonical (minimal) representative
    std::vector<int> cid;  // element -> coset index
    int count() const { return (int)rep.size(); }
};
Cosets left_cosets(const Group& G, const Subset& H);
std::vector<Subset> double_cosets(const Group& G, const Subset& H);

// K_x for the double coset with canonical representative d: the stabilizer of (H, dH).
Subset k_x(const Group& G, const Subset& H, int d);

// Finite left G-set given by an action table act[g*npts+p].
struct GSet {
    int npts = 1;
    std::vector<int> act;
    int operator()(int g, int p) const { return act[g * npts + p]; }
};
GSet trivial_gset(const Group& G);
GSet conjugation_gset(const Group& G);
GSet coset_gset(const Group& G, const Cosets& C);
GSet pair_coset_gset(const Group& G, const Cosets& C);  // point a*nc+b
bool is_action(const Group& G, const GSet& X);
std::vector<std::vector<int>> orbits(const Group& G, const GSet& X);  // sorted, by minimal point
Subset stabilizer(const Group& G, const GSet& X, int p);

}  // namespace dw
