#pragma once

#include <cstdint>
#include <vector>

#include "bilist/list_assignment.hpp"

namespace bilist {

/// Lexicographically least assignment in the orbit under colour
/// relabelling and part-internal vertex permutations. Vertex order is
/// handled by sorting each part's list sequence; colour relabelling is
/// minimized with the B-side sequence as the primary key and the A-side
/// as tie-break. Idempotent and constant on orbits.
ListAssignment canonicalize_assignment(const ListAssignment& assignment);

namespace detail {

/// blocks: strictly ascending (sequence-lex) distinct k-subsets of [l],
/// as masks. True iff some relabelling of [l] produces a strictly
/// smaller ascending sequence, i.e. the family is not the orbit minimum.
bool mask_family_has_smaller_relabelling(const std::vector<std::uint64_t>& blocks, int l);

/// Candidate next blocks for orderly generation: k-subsets of [l] that
/// are strictly greater than `last` (sequence-lex), introduce fresh
/// colours only as the contiguous run starting at `used_colours`, and are
/// returned in ascending sequence-lex order. Pass last = 0 and
/// used_colours = 0 for the root.
std::vector<std::uint64_t> next_canonical_blocks(int l, int k, std::uint64_t last,
                                                 int used_colours);

} // namespace detail

} // namespace bilist
