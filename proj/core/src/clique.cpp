#include "rtd/clique.hpp"

#include <algorithm>
#include <string>

#include "rtd/errors.hpp"

namespace rtd {

namespace {

// Branch and bound with greedy colouring bounds. `target` > 0 stops at the
// first clique of that size; `target` == 0 maximizes.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, int target) : g_(g), target_(target) {
    best_size_ = target > 0 ? target - 1 : 0;
  }

  void run(const VertexSet& candidates) {
    if (candidates.empty()) return;
    if (target_ == 1) {
      best_ = {candidates.first()};
      best_size_ = 1;
      done_ = true;
      return;
    }
    expand(candidates);
  }

  bool found() const { return target_ > 0 ? done_ : !best_.empty(); }
  const std::vector<int>& best() const { return best_; }

 private:
  void expand(VertexSet candidates) {
    const int k = candidates.size();
    std::vector<int> order(k);
    std::vector<int> colour(k);
    {
      VertexSet uncoloured = candidates;
      int c = 0;
      int idx = 0;
      while (!uncoloured.empty()) {
        ++c;
        VertexSet q = uncoloured;
        for (int v = q.first(); v >= 0; v = q.next(v)) {
          uncoloured.erase(v);
          q -= g_.neighbors(v);
          order[idx] = v;
          colour[idx] = c;
          ++idx;
        }
      }
    }

    const int depth = static_cast<int>(current_.size());
    for (int i = k - 1; i >= 0; --i) {
      if (depth + colour[i] <= best_size_) return;
      const int v = order[i];
      current_.push_back(v);
      if (target_ > 0 && depth + 1 == target_) {
        record();
        done_ = true;
        return;
      }
      VertexSet next = candidates & g_.neighbors(v);
      if (depth + 1 > best_size_ && target_ == 0) record();
      if (!next.empty()) {
        expand(std::move(next));
        if (done_) return;
      }
      current_.pop_back();
      candidates.erase(v);
    }
  }

  void record() {
    best_ = current_;
    best_size_ = static_cast<int>(current_.size());
    std::sort(best_.begin(), best_.end());
  }

  const Graph& g_;
  int target_;
  int best_size_ = 0;
  bool done_ = false;
  std::vector<int> current_;
  std::vector<int> best_;
};

void require_within(const Graph& g, const VertexSet& within) {
  if (within.universe() != g.n())
    throw ArgumentError("vertex subset universe does not match the graph");
}

}  // namespace

std::optional<std::vector<int>> find_clique_within(const Graph& g,
                                                   const VertexSet& within,
                                                   int p) {
  require_within(g, within);
  if (p < 1) throw ArgumentError("clique size must be >= 1");
  if (p > within.size()) return std::nullopt;
  CliqueSearch search(g, p);
  search.run(within);
  if (!search.found()) return std::nullopt;
  return search.best();
}

std::optional<std::vector<int>> find_clique(const Graph& g, int p) {
  if (p < 1 || p > g.n()) {
    throw ArgumentError("clique size " + std::to_string(p) +
                        " outside [1, n=" + std::to_string(g.n()) + "]");
  }
  return find_clique_within(g, VertexSet::full(g.n()), p);
}

CliqueResult max_clique_within(const Graph& g, const VertexSet& within) {
  require_within(g, within);
  CliqueSearch search(g, 0);
  search.run(within);
  CliqueResult r;
  r.vertices = search.best();
  r.size = static_cast<int>(r.vertices.size());
  return r;
}

CliqueResult max_clique(const Graph& g) {
  if (g.n() == 0) throw ArgumentError("max_clique of the empty graph");
  return max_clique_within(g, VertexSet::full(g.n()));
}

CliqueResult independence_number_within(const Graph& g,
                                        const VertexSet& within) {
  return max_clique_within(g.complement(), within);
}

CliqueResult independence_number(const Graph& g) {
  if (g.n() == 0) throw ArgumentError("independence_number of the empty graph");
  return max_clique(g.complement());
}

bool is_clique(const Graph& g, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || !g.has_edge(vertices[i], vertices[j]))
        return false;
  return true;
}

bool is_independent(const Graph& g, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || g.has_edge(vertices[i], vertices[j]))
        return false;
  return true;
}

}  // namespace rtd
