#pragma once

#include <array>
#include <string>
#include <vector>

namespace entherm {

struct Bond {
    int i = 0;
    int j = 0;
    friend bool operator==(const Bond&, const Bond&) = default;
    friend auto operator<=>(const Bond&, const Bond&) = default;
};

struct IVec2 {
    int x = 0;
    int y = 0;
};

enum class ClusterKind { chain, square, triangular, explicit_bonds };

ClusterKind cluster_kind_from_string(const std::string& s);
std::string to_string(ClusterKind k);

// Periodic cluster description. For the square and triangular kinds the cell
// is spanned by two integer translation vectors; built-in defaults exist for
// n_sites = 8, 10, 12.
struct ClusterSpec {
    ClusterKind kind = ClusterKind::chain;
    int n_sites = 0;
    std::array<IVec2, 2> vectors{};
    bool has_vectors = false;
    std::vector<Bond> explicit_bonds;
};

// Deduplicated, lexicographically sorted bond list with i < j per bond.
// The chain keeps one bond per ring link, so the two-site ring carries a
// doubled (0,1) bond.
struct BondList {
    std::vector<Bond> bonds;
    int n_sites = 0;

    std::vector<int> degrees() const;
};

BondList build_cluster(const ClusterSpec& spec);

// Two identical layers (B is a site-shifted copy of A) joined by one rung
// per site: A site i couples to B site i + n_a. A occupies global indices
// 0..n_a-1, B occupies n_a..2*n_a-1.
struct CoupledModel {
    int n_a = 0;
    int n_b = 0;
    double j_a = 0.0;
    double j_b = 0.0;
    double lambda = 0.0;
    BondList bonds_a;
    BondList bonds_b;       // shifted copy, coupling j_b
    std::vector<Bond> rung_bonds;

    int n_sites() const { return n_a + n_b; }
};

CoupledModel build_coupled_model(const BondList& bonds, double j_a, double j_b,
                                 double lambda);

// Parses a cluster from a JSON document: {"kind": "chain", "n_sites": 8,
// "vectors": [[2,2],[2,-2]], "bonds": [[0,1],...]}.
ClusterSpec cluster_spec_from_json(const std::string& text);
ClusterSpec load_cluster_spec(const std::string& path);

} // namespace entherm
