#include "polyad/subgroup_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace polyad {

namespace {

// Mutable multigraph used during folding. Vertices live in a union-find;
// adjacency lists may temporarily hold several targets per label.
struct FoldBuilder {
  int rank;
  std::vector<int> parent;
  // adj[v][g] and radj[v][g]: out- and in-neighbours of v with label g
  std::vector<std::vector<std::vector<int>>> adj, radj;

  explicit FoldBuilder(int r) : rank(r) {}

  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  int add_vertex() {
    parent.push_back(static_cast<int>(parent.size()));
    adj.emplace_back(rank);
    radj.emplace_back(rank);
    return static_cast<int>(parent.size()) - 1;
  }

  void add_edge(int from, int to, int gen) {
    adj[from][gen].push_back(to);
    radj[to][gen].push_back(from);
  }

  // Identifies a and b; the survivor absorbs the loser's adjacency.
  int merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return a;
    }
    if (adj[a].size() < adj[b].size()) {
      std::swap(a, b);
    }
    parent[b] = a;
    for (int g = 0; g < rank; ++g) {
      auto& ag = adj[a][g];
      ag.insert(ag.end(), adj[b][g].begin(), adj[b][g].end());
      adj[b][g].clear();
      auto& rg = radj[a][g];
      rg.insert(rg.end(), radj[b][g].begin(), radj[b][g].end());
      radj[b][g].clear();
    }
    return a;
  }

  // Collapses duplicate targets in lists, merging vertices that two
  // same-label edges point at. Returns once no vertex needs folding.
  void fold() {
    std::deque<int> dirty;
    for (int v = 0; v < static_cast<int>(parent.size()); ++v) {
      dirty.push_back(v);
    }
    while (!dirty.empty()) {
      int v = find(dirty.front());
      dirty.pop_front();
      bool again = true;
      while (again) {
        again = false;
        for (auto* lists : {&adj, &radj}) {
          for (int g = 0; g < rank && !again; ++g) {
            auto& targets = (*lists)[v][g];
            if (targets.size() < 2) {
              continue;
            }
            for (int& t : targets) {
              t = find(t);
            }
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()),
                          targets.end());
            if (targets.size() < 2) {
              continue;
            }
            // Merging may touch v itself, so restart the scan afterwards
            // rather than keep using the list reference.
            int merged = merge(targets[0], targets[1]);
            dirty.push_back(merged);
            v = find(v);
            again = true;
          }
          if (again) {
            break;
          }
        }
      }
    }
  }
};

}  // namespace

SubgroupGraph SubgroupGraph::fold(const AlphabetRef& alphabet,
                                  std::span<const Word> generators) {
  const int rank = alphabet->size();
  FoldBuilder b(rank);
  int base = b.add_vertex();
  for (const Word& w : generators) {
    if (!same_alphabet(w.alphabet(), alphabet)) {
      throw Error("generator is not over the subgroup's alphabet");
    }
    // Trace the loop base -> base, one edge per letter.
    int cur = base;
    Int remaining = w.length();
    for (const Run& r : w.runs()) {
      Int steps = abs(r.exp);
      int sign = r.exp > 0 ? 1 : -1;
      for (Int i = 0; i < steps; ++i) {
        --remaining;
        int next = (remaining == 0) ? base : b.add_vertex();
        if (sign > 0) {
          b.add_edge(cur, next, r.gen);
        } else {
          b.add_edge(next, cur, r.gen);
        }
        cur = next;
      }
    }
  }
  b.fold();

  // Canonical renumbering: BFS from the base, out-edges then in-edges in
  // generator order.
  std::map<int, int> number;
  std::vector<int> order;
  int root = b.find(base);
  number[root] = 0;
  order.push_back(root);
  std::deque<int> queue{root};
  auto visit = [&](int raw) {
    int v = b.find(raw);
    if (!number.contains(v)) {
      number[v] = static_cast<int>(order.size());
      order.push_back(v);
      queue.push_back(v);
    }
  };
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int g = 0; g < rank; ++g) {
      for (int t : b.adj[v][g]) {
        visit(t);
      }
    }
    for (int g = 0; g < rank; ++g) {
      for (int t : b.radj[v][g]) {
        visit(t);
      }
    }
  }

  const int n = static_cast<int>(order.size());
  std::vector<std::vector<int>> out(n, std::vector<int>(rank, -1));
  std::vector<std::vector<int>> in(n, std::vector<int>(rank, -1));
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    for (int g = 0; g < rank; ++g) {
      for (int t : b.adj[v][g]) {
        out[i][g] = number.at(b.find(t));
      }
      for (int t : b.radj[v][g]) {
        in[i][g] = number.at(b.find(t));
      }
    }
  }
  return SubgroupGraph(alphabet, std::move(out), std::move(in));
}

long SubgroupGraph::edge_count() const {
  long count = 0;
  for (const auto& row : out_) {
    for (int t : row) {
      if (t >= 0) {
        ++count;
      }
    }
  }
  return count;
}

bool SubgroupGraph::complete() const {
  for (int v = 0; v < vertex_count(); ++v) {
    for (int g = 0; g < alphabet_->size(); ++g) {
      if (out_[v][g] < 0 || in_[v][g] < 0) {
        return false;
      }
    }
  }
  return true;
}

std::optional<long> SubgroupGraph::index() const {
  if (!complete()) {
    return std::nullopt;
  }
  return vertex_count();
}

long SubgroupGraph::rank() const { return edge_count() - vertex_count() + 1; }

bool SubgroupGraph::member(const Word& w) const {
  if (!same_alphabet(w.alphabet(), alphabet_)) {
    throw Error("word is not over the subgroup's alphabet");
  }
  int v = base();
  for (const Run& r : w.runs()) {
    Int steps = abs(r.exp);
    int sign = r.exp > 0 ? 1 : -1;
    for (Int i = 0; i < steps; ++i) {
      v = sign > 0 ? out_[v][r.gen] : in_[v][r.gen];
      if (v < 0) {
        return false;
      }
    }
  }
  return v == base();
}

std::string SubgroupGraph::to_dot() const {
  std::string dot = "digraph subgroup {\n  rankdir=LR;\n  0 [shape=doublecircle];\n";
  for (int v = 0; v < vertex_count(); ++v) {
    for (int g = 0; g < alphabet_->size(); ++g) {
      if (out_[v][g] >= 0) {
        dot += "  " + std::to_string(v) + " -> " + std::to_string(out_[v][g]) +
               " [label=\"" + alphabet_->name(g) + "\"];\n";
      }
    }
  }
  dot += "}\n";
  return dot;
}

bool same_subgroup(const AlphabetRef& alphabet, std::span<const Word> a,
                   std::span<const Word> b) {
  return SubgroupGraph::fold(alphabet, a) == SubgroupGraph::fold(alphabet, b);
}

}  // namespace polyad
