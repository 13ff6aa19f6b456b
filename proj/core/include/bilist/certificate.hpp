#pragma once

#include <string>

#include "bilist/bipartite_graph.hpp"
#include "bilist/list_assignment.hpp"

namespace bilist {

enum class Claim { NOT_LIST_COLOURABLE };

enum class Provenance { CLASSIC, STEINER, BOUNDARY, GADGET, WITNESS, SEARCH };

const char* to_string(Claim claim);
const char* to_string(Provenance provenance);

/// A graph plus a concrete list assignment claimed to admit no proper
/// colouring; checkable by exhaustive search.
struct NonChoosabilityCertificate {
  BipartiteGraph graph;
  ListAssignment assignment;
  Claim claim = Claim::NOT_LIST_COLOURABLE;
  Provenance provenance = Provenance::SEARCH;
  std::string notes;

  bool operator==(const NonChoosabilityCertificate& o) const {
    return graph == o.graph && assignment == o.assignment && claim == o.claim &&
           provenance == o.provenance && notes == o.notes;
  }
};

/// Serialization in the bilist-cert/1 text format. Writing then reading
/// is the identity; malformed input raises MALFORMED with the byte
/// position, invariant-violating input raises INCONSISTENT.
std::string write_certificate(const NonChoosabilityCertificate& cert);
NonChoosabilityCertificate read_certificate(const std::string& text);

NonChoosabilityCertificate load_certificate_file(const std::string& path);
void save_certificate_file(const NonChoosabilityCertificate& cert, const std::string& path);

} // namespace bilist
