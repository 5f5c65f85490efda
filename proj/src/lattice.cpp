#include "entherm/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace entherm {

namespace {

// Built-in tilted cells. Chosen so that every neighbor offset e satisfies
// e not in L and 2e not in L (no self-bonds, no doubled bonds), giving the
// full coordination number at these sizes.
struct CellDefault {
    int n;
    IVec2 t1, t2;
};

const CellDefault kSquareCells[] = {
    {8, {2, 2}, {2, -2}},
    {10, {3, 1}, {-1, 3}},
    {12, {2, 2}, {-2, 4}},
};

const CellDefault kTriangularCells[] = {
    {8, {4, 0}, {1, 2}},
    {10, {3, 1}, {-1, 3}},
    {12, {2, 2}, {-2, 4}},
};

std::array<IVec2, 2> default_vectors(ClusterKind kind, int n) {
    const CellDefault* table =
        kind == ClusterKind::square ? kSquareCells : kTriangularCells;
    for (int k = 0; k < 3; ++k)
        if (table[k].n == n) return {table[k].t1, table[k].t2};
    throw std::invalid_argument("no built-in " + to_string(kind) +
                                " cell for n_sites=" + std::to_string(n) +
                                " (use explicit translation vectors)");
}

long pos_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Canonical label of the residue class of an integer point modulo the
// lattice spanned by t1, t2. Two points get the same label iff they are
// related by a cell translation.
std::pair<long, long> residue_label(IVec2 p, IVec2 t1, IVec2 t2, long det) {
    long d = std::abs(det);
    long na = static_cast<long>(p.x) * t2.y - static_cast<long>(p.y) * t2.x;
    long nb = static_cast<long>(t1.x) * p.y - static_cast<long>(t1.y) * p.x;
    return {pos_mod(na, d), pos_mod(nb, d)};
}

BondList build_tilted_cluster(const ClusterSpec& spec) {
    IVec2 t1 = spec.has_vectors ? spec.vectors[0]
                                : default_vectors(spec.kind, spec.n_sites)[0];
    IVec2 t2 = spec.has_vectors ? spec.vectors[1]
                                : default_vectors(spec.kind, spec.n_sites)[1];
    long det = static_cast<long>(t1.x) * t2.y - static_cast<long>(t1.y) * t2.x;
    if (std::abs(det) != spec.n_sites)
        throw std::invalid_argument("translation cell area " +
                                    std::to_string(std::abs(det)) +
                                    " != n_sites " +
                                    std::to_string(spec.n_sites));

    long d = std::abs(det);
    std::map<std::pair<long, long>, int> site_of;
    std::vector<IVec2> rep;
    for (int x = 0; x < d && static_cast<int>(rep.size()) < spec.n_sites; ++x)
        for (int y = 0; y < d && static_cast<int>(rep.size()) < spec.n_sites;
             ++y) {
            auto lab = residue_label({x, y}, t1, t2, det);
            if (site_of.emplace(lab, static_cast<int>(rep.size())).second)
                rep.push_back({x, y});
        }
    if (static_cast<int>(rep.size()) != spec.n_sites)
        throw std::runtime_error("cell enumeration found " +
                                 std::to_string(rep.size()) + " sites");

    std::vector<IVec2> offsets;
    if (spec.kind == ClusterKind::square)
        offsets = {{1, 0}, {0, 1}};
    else
        offsets = {{1, 0}, {0, 1}, {1, -1}};

    std::set<Bond> bonds;
    for (int s = 0; s < spec.n_sites; ++s) {
        for (const auto& e : offsets) {
            IVec2 q{rep[s].x + e.x, rep[s].y + e.y};
            auto it = site_of.find(residue_label(q, t1, t2, det));
            int t = it->second;
            if (t == s)
                throw std::invalid_argument(
                    "cell too small: offset wraps onto the same site");
            Bond b{std::min(s, t), std::max(s, t)};
            if (!bonds.insert(b).second)
                throw std::invalid_argument(
                    "cell too small: duplicate bond from periodic wrap");
        }
    }

    BondList out;
    out.n_sites = spec.n_sites;
    out.bonds.assign(bonds.begin(), bonds.end());
    return out;
}

} // namespace

ClusterKind cluster_kind_from_string(const std::string& s) {
    if (s == "chain") return ClusterKind::chain;
    if (s == "square") return ClusterKind::square;
    if (s == "triangular") return ClusterKind::triangular;
    if (s == "explicit") return ClusterKind::explicit_bonds;
    throw std::invalid_argument("unknown cluster kind: " + s);
}

std::string to_string(ClusterKind k) {
    switch (k) {
        case ClusterKind::chain: return "chain";
        case ClusterKind::square: return "square";
        case ClusterKind::triangular: return "triangular";
        case ClusterKind::explicit_bonds: return "explicit";
    }
    return "?";
}

std::vector<int> BondList::degrees() const {
    std::vector<int> deg(n_sites, 0);
    for (const auto& b : bonds) {
        ++deg[b.i];
        ++deg[b.j];
    }
    return deg;
}

BondList build_cluster(const ClusterSpec& spec) {
    if (spec.kind == ClusterKind::explicit_bonds) {
        if (spec.n_sites < 2)
            throw std::invalid_argument("explicit cluster needs n_sites >= 2");
        std::set<Bond> seen;
        BondList out;
        out.n_sites = spec.n_sites;
        for (const auto& b : spec.explicit_bonds) {
            if (b.i < 0 || b.j < 0 || b.i >= spec.n_sites ||
                b.j >= spec.n_sites || b.i == b.j)
                throw std::invalid_argument("invalid explicit bond");
            Bond canon{std::min(b.i, b.j), std::max(b.i, b.j)};
            if (!seen.insert(canon).second)
                throw std::invalid_argument("duplicate explicit bond");
            out.bonds.push_back(canon);
        }
        std::sort(out.bonds.begin(), out.bonds.end());
        return out;
    }
    if (spec.kind == ClusterKind::chain) {
        if (spec.n_sites < 2)
            throw std::invalid_argument("chain needs n_sites >= 2");
        BondList out;
        out.n_sites = spec.n_sites;
        // Ring: N links. For N=2 both links join the same pair, and both are
        // kept so that the ring Hamiltonian carries the doubled coupling.
        for (int i = 0; i < spec.n_sites; ++i) {
            int j = (i + 1) % spec.n_sites;
            out.bonds.push_back({std::min(i, j), std::max(i, j)});
        }
        std::sort(out.bonds.begin(), out.bonds.end());
        return out;
    }
    return build_tilted_cluster(spec);
}

CoupledModel build_coupled_model(const BondList& bonds, double j_a, double j_b,
                                 double lambda) {
    if (j_a <= 0 || j_b <= 0)
        throw std::invalid_argument("couplings must be positive");
    if (lambda < 0) throw std::invalid_argument("lambda must be >= 0");
    CoupledModel m;
    m.n_a = bonds.n_sites;
    m.n_b = bonds.n_sites;
    m.j_a = j_a;
    m.j_b = j_b;
    m.lambda = lambda;
    m.bonds_a = bonds;
    m.bonds_b.n_sites = bonds.n_sites;
    for (const auto& b : bonds.bonds)
        m.bonds_b.bonds.push_back({b.i + m.n_a, b.j + m.n_a});
    for (int i = 0; i < m.n_a; ++i) m.rung_bonds.push_back({i, i + m.n_a});
    return m;
}

ClusterSpec cluster_spec_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ClusterSpec spec;
    spec.kind = cluster_kind_from_string(j.at("kind").get<std::string>());
    spec.n_sites = j.at("n_sites").get<int>();
    if (j.contains("vectors")) {
        auto v = j["vectors"];
        if (v.size() != 2 || v[0].size() != 2 || v[1].size() != 2)
            throw std::invalid_argument("vectors must be two integer pairs");
        spec.vectors[0] = {v[0][0].get<int>(), v[0][1].get<int>()};
        spec.vectors[1] = {v[1][0].get<int>(), v[1][1].get<int>()};
        spec.has_vectors = true;
    }
    if (j.contains("bonds"))
        for (const auto& b : j["bonds"])
            spec.explicit_bonds.push_back({b[0].get<int>(), b[1].get<int>()});
    return spec;
}

ClusterSpec load_cluster_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cluster file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return cluster_spec_from_json(ss.str());
}

} // namespace entherm
