#include "bilist/certificate.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bilist/error.hpp"

namespace bilist {

using ordered_json = nlohmann::ordered_json;

const char* to_string(Claim claim) {
  switch (claim) {
    case Claim::NOT_LIST_COLOURABLE: return "NOT_LIST_COLOURABLE";
  }
  return "?";
}

const char* to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::CLASSIC: return "CLASSIC";
    case Provenance::STEINER: return "STEINER";
    case Provenance::BOUNDARY: return "BOUNDARY";
    case Provenance::GADGET: return "GADGET";
    case Provenance::WITNESS: return "WITNESS";
    case Provenance::SEARCH: return "SEARCH";
  }
  return "?";
}

namespace {

Provenance provenance_from(const std::string& s) {
  if (s == "CLASSIC") return Provenance::CLASSIC;
  if (s == "STEINER") return Provenance::STEINER;
  if (s == "BOUNDARY") return Provenance::BOUNDARY;
  if (s == "GADGET") return Provenance::GADGET;
  if (s == "WITNESS") return Provenance::WITNESS;
  if (s == "SEARCH") return Provenance::SEARCH;
  throw Error(ErrorCode::INCONSISTENT, "unknown provenance '" + s + "'");
}

ordered_json lists_to_json(const std::vector<ColourSet>& lists) {
  ordered_json arr = ordered_json::array();
  for (const auto& l : lists) arr.push_back(l.to_vector());
  return arr;
}

std::vector<std::vector<int>> lists_from_json(const ordered_json& arr, const char* field) {
  if (!arr.is_array())
    throw Error(ErrorCode::INCONSISTENT, std::string(field) + " must be an array");
  std::vector<std::vector<int>> out;
  for (const auto& item : arr) {
    if (!item.is_array())
      throw Error(ErrorCode::INCONSISTENT, std::string(field) + " entries must be arrays");
    std::vector<int> list;
    for (const auto& c : item) {
      if (!c.is_number_integer())
        throw Error(ErrorCode::INCONSISTENT, std::string(field) + " colours must be integers");
      list.push_back(c.get<int>());
    }
    if (!std::is_sorted(list.begin(), list.end()))
      throw Error(ErrorCode::INCONSISTENT, std::string(field) + " lists must be sorted");
    out.push_back(std::move(list));
  }
  return out;
}

template <typename T>
T require(const ordered_json& j, const char* key) {
  if (!j.contains(key))
    throw Error(ErrorCode::INCONSISTENT, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::INCONSISTENT, std::string("field '") + key + "' has wrong type");
  }
}

} // namespace

std::string write_certificate(const NonChoosabilityCertificate& cert) {
  ordered_json j;
  j["schema"] = "bilist-cert/1";
  j["claim"] = to_string(cert.claim);
  j["provenance"] = to_string(cert.provenance);
  ordered_json graph;
  graph["complete"] = cert.graph.complete_graph();
  graph["a"] = cert.graph.a_size();
  graph["b"] = cert.graph.b_size();
  if (!cert.graph.complete_graph()) {
    ordered_json edges = ordered_json::array();
    for (auto [a, b] : cert.graph.edges()) edges.push_back({a, b});
    graph["edges"] = edges;
  }
  j["graph"] = graph;
  j["k_a"] = cert.assignment.k_a();
  j["k_b"] = cert.assignment.k_b();
  j["palette"] = cert.assignment.palette();
  j["lists_a"] = lists_to_json(cert.assignment.lists_a());
  j["lists_b"] = lists_to_json(cert.assignment.lists_b());
  j["notes"] = cert.notes;
  return j.dump(2) + "\n";
}

NonChoosabilityCertificate read_certificate(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MALFORMED,
                "certificate parse failure at byte " + std::to_string(e.byte) + ": " + e.what());
  }

  if (require<std::string>(j, "schema") != "bilist-cert/1")
    throw Error(ErrorCode::INCONSISTENT, "unsupported schema");
  if (require<std::string>(j, "claim") != "NOT_LIST_COLOURABLE")
    throw Error(ErrorCode::INCONSISTENT, "unknown claim");

  NonChoosabilityCertificate cert;
  cert.claim = Claim::NOT_LIST_COLOURABLE;
  cert.provenance = provenance_from(require<std::string>(j, "provenance"));

  if (!j.contains("graph") || !j.at("graph").is_object())
    throw Error(ErrorCode::INCONSISTENT, "missing graph object");
  const auto& graph = j.at("graph");
  bool complete = require<bool>(graph, "complete");
  int a = require<int>(graph, "a");
  int b = require<int>(graph, "b");
  if (complete) {
    if (graph.contains("edges"))
      throw Error(ErrorCode::INCONSISTENT, "complete graph must not list edges");
    cert.graph = BipartiteGraph::complete(a, b);
  } else {
    if (!graph.contains("edges"))
      throw Error(ErrorCode::INCONSISTENT, "non-complete graph must list edges");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : graph.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw Error(ErrorCode::INCONSISTENT, "edges must be [a,b] pairs");
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    cert.graph = BipartiteGraph::from_edges(a, b, edges);
  }

  int k_a = require<int>(j, "k_a");
  int k_b = require<int>(j, "k_b");
  int palette = require<int>(j, "palette");
  auto lists_a = lists_from_json(j.at("lists_a"), "lists_a");
  auto lists_b = lists_from_json(j.at("lists_b"), "lists_b");
  cert.assignment = ListAssignment::create(palette, lists_a, lists_b);
  if (cert.assignment.k_a() != k_a || cert.assignment.k_b() != k_b)
    throw Error(ErrorCode::INCONSISTENT, "declared list sizes do not match the lists");
  if (!cert.assignment.shape_matches(cert.graph))
    throw Error(ErrorCode::INCONSISTENT, "lists do not match the graph shape");

  cert.notes = require<std::string>(j, "notes");
  return cert;
}

NonChoosabilityCertificate load_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MALFORMED, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return read_certificate(buf.str());
}

void save_certificate_file(const NonChoosabilityCertificate& cert, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::MALFORMED, "cannot write '" + path + "'");
  out << write_certificate(cert);
}

} // namespace bilist
