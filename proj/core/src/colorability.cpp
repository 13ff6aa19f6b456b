#include "bilist/colorability.hpp"

#include <algorithm>
#include <numeric>

#include "bilist/error.hpp"

namespace bilist {

SeparatorQuery SeparatorQuery::from(const ListAssignment& assignment) {
  SeparatorQuery q;
  q.palette = assignment.palette();
  q.a_clauses = assignment.lists_a();
  q.b_clauses = assignment.lists_b();
  return q;
}

namespace {

enum class Mark : unsigned char { UNKNOWN, IN, OUT };

struct SeparatorSearch {
  const SeparatorQuery& q;
  std::vector<Mark> mark;

  explicit SeparatorSearch(const SeparatorQuery& query)
      : q(query), mark(std::size_t(query.palette), Mark::UNKNOWN) {}

  // Clause status helpers: a positive clause wants some colour IN, a
  // negative clause wants some colour OUT.
  struct ClauseState {
    bool satisfied;
    int unknowns;
    int last_unknown;
  };

  ClauseState inspect(const ColourSet& clause, Mark satisfying) const {
    ClauseState st{false, 0, -1};
    clause.for_each([&](int c) {
      Mark m = mark[std::size_t(c)];
      if (m == satisfying) st.satisfied = true;
      if (m == Mark::UNKNOWN) {
        ++st.unknowns;
        st.last_unknown = c;
      }
    });
    return st;
  }

  // Unit propagation to fixpoint. Returns false on conflict; appends
  // forced colours to trail.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : q.a_clauses) {
        ClauseState st = inspect(clause, Mark::IN);
        if (st.satisfied) continue;
        if (st.unknowns == 0) return false;
        if (st.unknowns == 1) {
          mark[std::size_t(st.last_unknown)] = Mark::IN;
          trail.push_back(st.last_unknown);
          changed = true;
        }
      }
      for (const auto& clause : q.b_clauses) {
        ClauseState st = inspect(clause, Mark::OUT);
        if (st.satisfied) continue;
        if (st.unknowns == 0) return false;
        if (st.unknowns == 1) {
          mark[std::size_t(st.last_unknown)] = Mark::OUT;
          trail.push_back(st.last_unknown);
          changed = true;
        }
      }
    }
    return true;
  }

  bool solve(int next_colour) {
    std::vector<int> trail;
    if (!propagate(trail)) {
      for (int c : trail) mark[std::size_t(c)] = Mark::UNKNOWN;
      return false;
    }
    int branch = -1;
    for (int c = next_colour; c < q.palette; ++c)
      if (mark[std::size_t(c)] == Mark::UNKNOWN) {
        branch = c;
        break;
      }
    if (branch < 0) {
      bool ok = all_satisfied();
      if (!ok)
        for (int c : trail) mark[std::size_t(c)] = Mark::UNKNOWN;
      return ok;
    }
    for (Mark m : {Mark::IN, Mark::OUT}) {
      mark[std::size_t(branch)] = m;
      if (solve(branch + 1)) return true;
      mark[std::size_t(branch)] = Mark::UNKNOWN;
    }
    for (int c : trail) mark[std::size_t(c)] = Mark::UNKNOWN;
    return false;
  }

  bool all_satisfied() const {
    for (const auto& clause : q.a_clauses)
      if (!inspect(clause, Mark::IN).satisfied) return false;
    for (const auto& clause : q.b_clauses)
      if (!inspect(clause, Mark::OUT).satisfied) return false;
    return true;
  }
};

std::optional<ProperColouring> colouring_from_separator(const BipartiteGraph& graph,
                                                        const ListAssignment& assignment,
                                                        const ColourSet& separator) {
  ProperColouring col;
  col.colours_a.reserve(std::size_t(graph.a_size()));
  col.colours_b.reserve(std::size_t(graph.b_size()));
  for (int v = 0; v < graph.a_size(); ++v) {
    ColourSet usable = assignment.list_a(v) & separator;
    if (usable.empty()) return std::nullopt;
    col.colours_a.push_back(usable.lowest());
  }
  for (int w = 0; w < graph.b_size(); ++w) {
    ColourSet usable = assignment.list_b(w).minus(separator);
    if (usable.empty()) return std::nullopt;
    col.colours_b.push_back(usable.lowest());
  }
  return col;
}

// Backtracking over B colours, B explored in decreasing-degree order
// (ties by index). Each A-vertex tracks which of its list colours its
// coloured neighbours occupy; a fully occupied list prunes the branch.
struct GeneralSearch {
  const BipartiteGraph& graph;
  const ListAssignment& assignment;
  std::vector<int> order;              // B vertices in search order
  std::vector<std::vector<int>> a_of_b; // A-neighbours per B vertex
  std::vector<ColourSet> used;          // per A-vertex, occupied list colours
  std::vector<int> free_count;          // per A-vertex, remaining list colours
  std::vector<int> chosen;              // per B-vertex colour

  GeneralSearch(const BipartiteGraph& g, const ListAssignment& l) : graph(g), assignment(l) {
    order.resize(std::size_t(g.b_size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return g.degree_b(x) > g.degree_b(y);
    });
    a_of_b.resize(std::size_t(g.b_size()));
    for (int w = 0; w < g.b_size(); ++w) a_of_b[std::size_t(w)] = g.neighbours_of_b(w);
    used.assign(std::size_t(g.a_size()), ColourSet(l.palette()));
    free_count.resize(std::size_t(g.a_size()));
    for (int v = 0; v < g.a_size(); ++v) free_count[std::size_t(v)] = l.k_a();
    chosen.assign(std::size_t(g.b_size()), -1);
  }

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    int w = order[depth];
    std::vector<int> colours = assignment.list_b(w).to_vector();
    for (int c : colours) {
      std::vector<int> touched;
      bool dead = false;
      for (int v : a_of_b[std::size_t(w)]) {
        if (assignment.list_a(v).test(c) && !used[std::size_t(v)].test(c)) {
          used[std::size_t(v)].set(c);
          touched.push_back(v);
          if (--free_count[std::size_t(v)] == 0) dead = true;
        }
      }
      if (!dead) {
        chosen[std::size_t(w)] = c;
        if (run(depth + 1)) return true; // keep state for extract()
        chosen[std::size_t(w)] = -1;
      }
      for (int v : touched) {
        used[std::size_t(v)].reset(c);
        ++free_count[std::size_t(v)];
      }
    }
    return false;
  }

  ProperColouring extract() const {
    ProperColouring col;
    col.colours_b.assign(chosen.begin(), chosen.end());
    col.colours_a.resize(std::size_t(graph.a_size()));
    for (int v = 0; v < graph.a_size(); ++v) {
      ColourSet free = assignment.list_a(v).minus(used[std::size_t(v)]);
      col.colours_a[std::size_t(v)] = free.lowest();
    }
    return col;
  }
};

} // namespace

namespace {

// Feasibility with assumptions: some colours pre-decided.
bool separator_feasible(const SeparatorQuery& q, const std::vector<Mark>& assumptions) {
  SeparatorSearch search(q);
  search.mark = assumptions;
  return search.solve(0);
}

} // namespace

std::optional<ColourSet> separator_exists(const SeparatorQuery& query) {
  std::vector<Mark> fixed(std::size_t(query.palette), Mark::UNKNOWN);
  if (!separator_feasible(query, fixed)) return std::nullopt;

  // Minimize in sequence-lexicographic order: at each step, first try
  // closing the set (everything still undecided stays out); otherwise
  // commit the smallest colour whose inclusion stays feasible.
  int from = 0;
  while (true) {
    std::vector<Mark> closed = fixed;
    for (int c = from; c < query.palette; ++c) closed[std::size_t(c)] = Mark::OUT;
    SeparatorSearch done(query);
    done.mark = closed;
    if (done.all_satisfied()) {
      fixed = closed;
      break;
    }
    bool committed = false;
    for (int c = from; c < query.palette && !committed; ++c) {
      std::vector<Mark> attempt = fixed;
      for (int below = from; below < c; ++below) attempt[std::size_t(below)] = Mark::OUT;
      attempt[std::size_t(c)] = Mark::IN;
      if (separator_feasible(query, attempt)) {
        for (int below = from; below < c; ++below) fixed[std::size_t(below)] = Mark::OUT;
        fixed[std::size_t(c)] = Mark::IN;
        from = c + 1;
        committed = true;
      }
    }
    if (!committed) return std::nullopt; // cannot happen: instance feasible
  }

  ColourSet s(query.palette);
  for (int c = 0; c < query.palette; ++c)
    if (fixed[std::size_t(c)] == Mark::IN) s.set(c);
  return s;
}

std::optional<ProperColouring> find_proper_colouring(const BipartiteGraph& graph,
                                                     const ListAssignment& assignment) {
  if (!assignment.shape_matches(graph))
    throw Error(ErrorCode::SHAPE_MISMATCH, "assignment does not fit the graph");

  std::optional<ProperColouring> result;
  if (graph.complete_graph()) {
    auto separator = separator_exists(SeparatorQuery::from(assignment));
    if (!separator) return std::nullopt;
    result = colouring_from_separator(graph, assignment, *separator);
  } else {
    GeneralSearch search(graph, assignment);
    if (!search.run(0)) return std::nullopt;
    result = search.extract();
  }
  if (!result || !result->valid_for(graph, assignment))
    throw Error(ErrorCode::INCONSISTENT, "search produced an invalid colouring");
  return result;
}

VerificationResult verify_certificate(const NonChoosabilityCertificate& cert) {
  VerificationResult r;
  auto colouring = find_proper_colouring(cert.graph, cert.assignment);
  if (colouring) {
    r.verified = false;
    r.refutation = std::move(colouring);
  } else {
    r.verified = true;
  }
  return r;
}

} // namespace bilist
