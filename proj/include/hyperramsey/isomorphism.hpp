#pragma once

#include <vector>

#include "hyperramsey/hypergraph.hpp"

namespace hyperramsey {

/// Isomorphism-invariant form of a hypergraph: the colex-least sorted edge
/// list over all relabellings consistent with an equitable refinement of the
/// degree partition. Two hypergraphs are isomorphic iff their forms are equal.
struct CanonicalForm {
    int order = 0;
    int uniformity = 0;
    std::vector<VertexMask> edges;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Practical up to order ~12; cost grows with the factorials of the refined cell sizes.
CanonicalForm canonical_form(const Hypergraph& h);

Hypergraph from_canonical(const CanonicalForm& form);

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b);

}  // namespace hyperramsey
