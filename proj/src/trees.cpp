#include "hyperramsey/trees.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "hyperramsey/isomorphism.hpp"

namespace hyperramsey {

LoosePathSpec LoosePathSpec::from_order(int m, int r) {
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    if (m < r || (m - r) % (r - 1) != 0)
        throw std::invalid_argument("order " + std::to_string(m) + " is not r + k(r - 1) for r = " + std::to_string(r));
    return {m, r, (m - r) / (r - 1) + 1};
}

Hypergraph loose_path(int m, int r) {
    const auto spec = LoosePathSpec::from_order(m, r);
    std::vector<Hyperedge> edges;
    for (int i = 0; i < spec.k; ++i) {
        const int first = i * (r - 1);
        edges.push_back(Hyperedge::from_mask((bit(r) - 1) << first));
    }
    return {m, r, std::move(edges)};
}

Hypergraph loose_cycle_c4() { return {4, 3, std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 3}}}; }

Hypergraph star_tree(int k, int r) {
    if (k < 1) throw std::invalid_argument("star needs at least one edge");
    const int order = r + (k - 1) * (r - 1);
    std::vector<Hyperedge> edges;
    for (int i = 0; i < k; ++i) edges.push_back(Hyperedge::from_mask(bit(0) | ((bit(r - 1) - 1) << (1 + i * (r - 1)))));
    return {order, r, std::move(edges)};
}

std::string_view to_string(TreeMethod m) {
    switch (m) {
        case TreeMethod::build: return "build";
        case TreeMethod::acyclic: return "acyclic";
        case TreeMethod::components: return "components";
        case TreeMethod::unique_path: return "unique-path";
    }
    return "?";
}

TreeMethod parse_tree_method(std::string_view name) {
    for (auto m : {TreeMethod::build, TreeMethod::acyclic, TreeMethod::components, TreeMethod::unique_path})
        if (to_string(m) == name) return m;
    throw std::invalid_argument("unknown tree method '" + std::string(name) + "'");
}

namespace {

std::optional<TreeCertificate> try_build(const Hypergraph& h) {
    if (h.empty()) return std::nullopt;
    const auto edges = h.edges();
    std::vector<bool> added(edges.size(), false);
    TreeCertificate cert;
    VertexMask covered = edges[0].mask();
    added[0] = true;
    cert.build_order.push_back(0);
    cert.attach_vertex.push_back(std::nullopt);
    while (cert.build_order.size() < edges.size()) {
        bool progressed = false;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (added[i]) continue;
            const VertexMask shared = edges[i].mask() & covered;
            if (popcount(shared) != 1) continue;
            added[i] = true;
            covered |= edges[i].mask();
            cert.build_order.push_back(i);
            cert.attach_vertex.push_back(std::countr_zero(shared));
            progressed = true;
            break;
        }
        // Overlap with the built part only grows, so a stuck edge stays stuck.
        if (!progressed) return std::nullopt;
    }
    if (covered != h.vertex_mask()) return std::nullopt;
    return cert;
}

bool components_test(const Hypergraph& h) {
    if (h.empty() || !is_connected(h)) return false;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        if (components(without_edge(h, i)).count() != static_cast<std::size_t>(h.uniformity())) return false;
    return true;
}

bool unique_path_test(const Hypergraph& h) {
    if (h.empty()) return false;
    for (int v = 0; v < h.order(); ++v)
        for (int w = v + 1; w < h.order(); ++w)
            if (loose_paths_between(h, v, w).size() != 1) return false;
    return true;
}

}  // namespace

bool has_berge_cycle(const Hypergraph& h) {
    // Union-find on the bipartite incidence graph: vertex nodes [0, p), edge
    // nodes [p, p + |E|). A repeated union inside one tree closes a cycle.
    const std::size_t p = static_cast<std::size_t>(h.order());
    std::vector<std::size_t> parent(p + h.edge_count());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        for (int v : h.edges()[i].vertices()) {
            const auto a = find(p + i);
            const auto b = find(static_cast<std::size_t>(v));
            if (a == b) return true;
            parent[a] = b;
        }
    }
    return false;
}

TreeVerdict is_tree(const Hypergraph& h, TreeMethod method) {
    switch (method) {
        case TreeMethod::build: {
            auto cert = try_build(h);
            const bool ok = cert.has_value();
            return {ok, std::move(cert)};
        }
        case TreeMethod::acyclic: return {!h.empty() && is_connected(h) && !has_berge_cycle(h), std::nullopt};
        case TreeMethod::components: return {components_test(h), std::nullopt};
        case TreeMethod::unique_path: return {unique_path_test(h), std::nullopt};
    }
    return {};
}

bool replays(const Hypergraph& h, const TreeCertificate& cert) {
    if (h.empty() || cert.build_order.size() != h.edge_count() || cert.attach_vertex.size() != h.edge_count()) return false;
    std::vector<bool> seen(h.edge_count(), false);
    VertexMask covered = 0;
    for (std::size_t step = 0; step < cert.build_order.size(); ++step) {
        const std::size_t idx = cert.build_order[step];
        if (idx >= h.edge_count() || seen[idx]) return false;
        seen[idx] = true;
        const VertexMask e = h.edges()[idx].mask();
        if (step == 0) {
            if (cert.attach_vertex[0].has_value()) return false;
        } else {
            const auto& a = cert.attach_vertex[step];
            if (!a || (e & covered) != bit(*a)) return false;
        }
        covered |= e;
    }
    return covered == h.vertex_mask();
}

std::vector<std::vector<std::size_t>> loose_paths_between(const Hypergraph& h, int v, int w) {
    if (h.order() > 12) throw std::length_error("loose path enumeration is limited to order 12");
    if (v < 0 || w < 0 || v >= h.order() || w >= h.order()) throw std::out_of_range("vertex out of range");
    std::vector<std::vector<std::size_t>> out;
    if (v == w) return out;
    const auto edges = h.edges();
    std::vector<std::size_t> path;
    std::vector<bool> used(edges.size(), false);

    // `connector` is the vertex the last edge shares with its predecessor.
    auto dfs = [&](auto&& self, VertexMask covered, int connector) -> void {
        const VertexMask last = edges[path.back()].mask();
        if (((last >> w) & 1U) && w != connector) out.push_back(path);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (used[i]) continue;
            const VertexMask shared = edges[i].mask() & covered;
            if (popcount(shared) != 1 || (shared & last) == 0) continue;
            const int x = std::countr_zero(shared);
            if (x == connector || x == v || x == w) continue;
            used[i] = true;
            path.push_back(i);
            self(self, covered | edges[i].mask(), x);
            path.pop_back();
            used[i] = false;
        }
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!edges[i].contains(v)) continue;
        used[i] = true;
        path.push_back(i);
        dfs(dfs, edges[i].mask(), -1);
        path.pop_back();
        used[i] = false;
    }
    return out;
}

std::vector<Hypergraph> enumerate_trees(int m, int r) {
    const auto spec = LoosePathSpec::from_order(m, r);
    std::set<CanonicalForm> level{canonical_form(loose_path(r, r))};
    for (int k = 2; k <= spec.k; ++k) {
        std::set<CanonicalForm> next;
        for (const auto& form : level) {
            const Hypergraph t = from_canonical(form);
            const int o = t.order();
            for (int x = 0; x < o; ++x) {
                std::vector<Hyperedge> edges(t.edges().begin(), t.edges().end());
                edges.push_back(Hyperedge::from_mask(bit(x) | ((bit(r - 1) - 1) << o)));
                next.insert(canonical_form(Hypergraph(o + r - 1, r, std::move(edges))));
            }
        }
        level = std::move(next);
    }
    std::vector<Hypergraph> out;
    for (const auto& form : level) out.push_back(from_canonical(form));
    return out;
}

std::vector<Hyperedge> free_hyperedges(const Hypergraph& t) {
    if (!is_tree(t)) throw std::invalid_argument("free_hyperedges expects a tree");
    const auto deg = degrees(t);
    std::vector<Hyperedge> out;
    for (const auto& e : t.edges()) {
        int ones = 0;
        for (int v : e.vertices()) ones += deg[static_cast<std::size_t>(v)] == 1;
        if (ones >= t.uniformity() - 1) out.push_back(e);
    }
    return out;
}

std::int64_t tree_degree_threshold(int p, int m, int r) { return binomial(p - 1, r - 1) - binomial(p - m, r - 1); }

std::optional<Embedding> greedy_tree_embedding(const Hypergraph& h, const Hypergraph& t) {
    const auto cert = is_tree(t, TreeMethod::build).certificate;
    if (!cert) throw std::invalid_argument("greedy_tree_embedding expects a tree");
    if (t.order() > h.order() || h.empty()) return std::nullopt;
    Embedding image(static_cast<std::size_t>(t.order()), -1);
    VertexMask used = 0;

    // Assign the unplaced tree vertices of `tree_edge` to the free host
    // vertices of `host_edge`, both in ascending order.
    auto place = [&](VertexMask tree_edge, VertexMask host_edge) {
        auto hv = mask_vertices(host_edge & ~used);
        std::size_t k = 0;
        for (int tv : mask_vertices(tree_edge))
            if (image[static_cast<std::size_t>(tv)] < 0) image[static_cast<std::size_t>(tv)] = hv[k++];
        used |= host_edge;
    };

    place(t.edges()[cert->build_order[0]].mask(), h.edges()[0].mask());
    for (std::size_t step = 1; step < cert->build_order.size(); ++step) {
        const int x = *cert->attach_vertex[step];
        const int hx = image[static_cast<std::size_t>(x)];
        bool placed = false;
        for (const auto& he : h.edges()) {
            if (!he.contains(hx) || (he.mask() & used) != bit(hx)) continue;
            place(t.edges()[cert->build_order[step]].mask(), he.mask());
            placed = true;
            break;
        }
        if (!placed) return std::nullopt;
    }
    return image;
}

DegreeEmbeddingReport check_degree_embedding(const Hypergraph& h, const Hypergraph& t) {
    if (h.uniformity() != t.uniformity()) throw std::invalid_argument("uniformity mismatch");
    if (!is_tree(t)) throw std::invalid_argument("check_degree_embedding expects a tree pattern");
    DegreeEmbeddingReport report;
    report.min_degree = min_degree(h);
    report.threshold = tree_degree_threshold(h.order(), t.order(), t.uniformity());
    report.guaranteed = h.order() >= t.order() && report.min_degree >= report.threshold;
    report.embedding = greedy_tree_embedding(h, t);
    if (!report.embedding) report.embedding = contains_sub(h, t);
    if (report.guaranteed && !report.embedding)
        throw std::logic_error("degree condition holds but no tree embedding was found");
    return report;
}

}  // namespace hyperramsey
