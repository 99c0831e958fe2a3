#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hyperramsey/embedding.hpp"
#include "hyperramsey/hypergraph.hpp"

namespace hyperramsey {

/// Order, uniformity and edge count of a loose path or tree: m = r + (k - 1)(r - 1).
struct LoosePathSpec {
    int m = 0;
    int r = 0;
    int k = 0;

    /// Throws std::invalid_argument unless m >= r and m = r (mod r - 1).
    static LoosePathSpec from_order(int m, int r);
};

/// P_m^(r): edge i covers vertices i(r-1) .. i(r-1) + r - 1.
Hypergraph loose_path(int m, int r);

/// C_4^(3): edges {0,1,2} and {1,2,3}.
Hypergraph loose_cycle_c4();

/// The r-uniform tree of order r + k(r - 1) whose k edges share vertex 0.
Hypergraph star_tree(int k, int r);

/// Replaying build_order adds each edge in turn; step i > 0 meets the union of
/// the earlier edges in exactly attach_vertex[i].
struct TreeCertificate {
    std::vector<std::size_t> build_order;
    std::vector<std::optional<int>> attach_vertex;
};

/// The four equivalent characterisations of an r-uniform tree. All of them
/// require at least one edge.
enum class TreeMethod {
    build,        ///< grown edge by edge, each new edge meeting the rest in one vertex
    acyclic,      ///< connected with no Berge cycle
    components,   ///< connected, and deleting any edge leaves exactly r components
    unique_path,  ///< exactly one loose path between every pair of distinct vertices
};

std::string_view to_string(TreeMethod m);
/// Throws std::invalid_argument on an unknown name.
TreeMethod parse_tree_method(std::string_view name);

struct TreeVerdict {
    bool is_tree = false;
    std::optional<TreeCertificate> certificate;  // set for TreeMethod::build when is_tree
};

TreeVerdict is_tree(const Hypergraph& h, TreeMethod method);
inline bool is_tree(const Hypergraph& h) { return is_tree(h, TreeMethod::build).is_tree; }

/// True iff `cert` replays as a valid build of h covering every edge and vertex.
bool replays(const Hypergraph& h, const TreeCertificate& cert);

/// True iff the incidence graph of h contains a cycle.
bool has_berge_cycle(const Hypergraph& h);

/// All loose paths whose first edge contains v and last edge contains w, with
/// v and w not on a connecting vertex. Each path is listed once, as a sequence
/// of edge positions running from v to w. Throws std::length_error above
/// order 12.
std::vector<std::vector<std::size_t>> loose_paths_between(const Hypergraph& h, int v, int w);

/// Pairwise non-isomorphic r-uniform trees of order m, grown from a single
/// edge by attaching free edges. Throws std::invalid_argument on bad residue.
std::vector<Hypergraph> enumerate_trees(int m, int r);

/// Edges with at least r - 1 vertices of degree 1 (a lone edge counts). Throws
/// std::invalid_argument if t is not a tree.
std::vector<Hyperedge> free_hyperedges(const Hypergraph& t);

/// Minimum-degree threshold C(p-1, r-1) - C(p-m, r-1) that forces a tree of order m.
std::int64_t tree_degree_threshold(int p, int m, int r);

struct DegreeEmbeddingReport {
    std::int64_t min_degree = 0;
    std::int64_t threshold = 0;
    /// The degree condition holds (and p >= m), so an embedding must exist.
    bool guaranteed = false;
    std::optional<Embedding> embedding;
};

/// Embeds tree t into h. Tries the greedy edge-by-edge construction along a
/// build order first, then falls back to exhaustive search. Throws
/// std::invalid_argument on uniformity mismatch or when t is not a tree, and
/// std::logic_error if a guaranteed embedding is not found.
DegreeEmbeddingReport check_degree_embedding(const Hypergraph& h, const Hypergraph& t);

/// The greedy construction alone.
std::optional<Embedding> greedy_tree_embedding(const Hypergraph& h, const Hypergraph& t);

}  // namespace hyperramsey
