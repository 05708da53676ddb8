#pragma once

#include "rwstab/graph.hpp"
#include "rwstab/perm_group.hpp"
#include "rwstab/permutation.hpp"

namespace rwstab {

/// Canonical double cover: vertex (v, j) gets id j*|V| + v, and every edge
/// {u, v} of g becomes {(u,0),(v,1)} and {(v,0),(u,1)}.
Graph cdc_of_graph(const Graph& g);

/// (v, j) -> (v, 1-j) on the cover of a graph with `base_count` vertices.
Permutation layer_swap(std::size_t base_count);

/// (v, j) -> (alpha(v), j).
Permutation lift_to_cover(const Permutation& alpha);

/// Group generated by the layer swap and the lifts of `base_aut`'s
/// generators. Its order is 2|base_aut|; a mismatch throws std::logic_error.
PermGroup expected_group(const PermGroup& base_aut);

/// Whether sigma maps every fiber {(v,0),(v,1)} onto a fiber.
bool preserves_fibers(const Permutation& sigma, std::size_t base_count);

}  // namespace rwstab
