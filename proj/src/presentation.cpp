#include "bsg/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace bsg {

namespace {

/// Breadth-first spanning tree; returns per-edge "is tree edge" flags.
std::vector<bool> spanning_tree(int vertex_count, const std::vector<std::pair<int, int>>& edges, int base) {
  std::vector<std::vector<std::pair<int, int>>> adj(vertex_count);  // (neighbor, edge id)
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].first].emplace_back(edges[e].second, static_cast<int>(e));
    adj[edges[e].second].emplace_back(edges[e].first, static_cast<int>(e));
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<bool> tree(edges.size(), false), seen(vertex_count, false);
  std::deque<int> queue{base};
  seen[base] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (auto [w, e] : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        tree[e] = true;
        queue.push_back(w);
      }
  }
  return tree;
}

}  // namespace

GroupPresentation pi1_presentation(const FaceIndex& faces, Vertex base) {
  const int nv = faces.count(0);
  int base_id = faces.id(Simplex{base});
  if (base_id < 0) throw Error(ErrorCode::InvalidInput, "base vertex not in complex");
  // Local vertex numbering by face id.
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < faces.count(1); ++e) {
    const auto& s = faces.faces(1)[e];
    edges.emplace_back(faces.id(Simplex{s[0]}), faces.id(Simplex{s[1]}));
  }
  const auto tree = spanning_tree(nv, edges, base_id);
  {
    // Connectivity: a spanning tree has nv - 1 edges.
    const auto tree_edges = std::count(tree.begin(), tree.end(), true);
    if (tree_edges != nv - 1) throw Error(ErrorCode::Disconnected, "complex is not connected");
  }
  std::vector<int> generator(edges.size(), -1);
  GroupPresentation P;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (!tree[e]) generator[e] = P.generator_count++;
  auto letter = [&](const Simplex& edge, int sign, Word& w) {
    const int g = generator[faces.id(edge)];
    if (g >= 0) w.push_back(sign * (g + 1));
  };
  for (int t = 0; t < faces.count(2); ++t) {
    const auto& s = faces.faces(2)[t];
    Word w;
    letter({s[0], s[1]}, 1, w);
    letter({s[1], s[2]}, 1, w);
    letter({s[0], s[2]}, -1, w);
    P.relators.push_back(free_reduce(w));
  }
  return P;
}

GroupPresentation pi1_presentation(const SimplicialComplex& K, Vertex base) {
  return pi1_presentation(K.faces(), base);
}

GroupPresentation pi1_presentation(int vertex_count, const std::vector<std::pair<int, int>>& edges, int base) {
  if (vertex_count == 0) throw Error(ErrorCode::InvalidInput, "empty graph");
  const auto tree = spanning_tree(vertex_count, edges, base);
  if (std::count(tree.begin(), tree.end(), true) != vertex_count - 1)
    throw Error(ErrorCode::Disconnected, "graph is not connected");
  GroupPresentation P;
  P.generator_count = static_cast<int>(std::count(tree.begin(), tree.end(), false));
  return P;
}

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

namespace {

Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  std::size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a] == -w[b - 1]) {
    ++a;
    --b;
  }
  return Word(w.begin() + a, w.begin() + b);
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word substitute(const Word& w, int gen, const Word& value) {
  const Word inv = inverse(value);
  Word out;
  for (int x : w) {
    if (x == gen + 1) out.insert(out.end(), value.begin(), value.end());
    else if (x == -(gen + 1)) out.insert(out.end(), inv.begin(), inv.end());
    else out.push_back(x);
  }
  return free_reduce(out);
}

void normalize(GroupPresentation& P) {
  std::vector<Word> rels;
  std::set<Word> seen;
  for (auto& r : P.relators) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    if (seen.insert(c).second) rels.push_back(std::move(c));
  }
  P.relators = std::move(rels);
}

}  // namespace

GroupPresentation tietze_simplify(GroupPresentation P, int budget) {
  normalize(P);
  while (budget-- > 0) {
    // Shortest relator containing some generator exactly once.
    int best_r = -1, best_g = -1;
    std::size_t best_len = 0;
    for (std::size_t r = 0; r < P.relators.size(); ++r) {
      const Word& w = P.relators[r];
      if (best_r >= 0 && w.size() >= best_len) continue;
      std::map<int, int> occurrences;
      for (int x : w) ++occurrences[std::abs(x) - 1];
      for (auto [g, n] : occurrences)
        if (n == 1) {
          best_r = static_cast<int>(r);
          best_g = g;
          best_len = w.size();
          break;
        }
    }
    if (best_r < 0) break;
    // Rotate so the generator leads: g^e s = 1, hence g = s^-1 (e = 1) or s (e = -1).
    Word w = P.relators[best_r];
    const auto pos = std::find_if(w.begin(), w.end(), [&](int x) { return std::abs(x) - 1 == best_g; });
    std::rotate(w.begin(), pos, w.end());
    const int e = w.front() > 0 ? 1 : -1;
    const Word rest(w.begin() + 1, w.end());
    const Word value = e == 1 ? inverse(rest) : rest;
    P.relators.erase(P.relators.begin() + best_r);
    for (auto& r : P.relators) r = substitute(r, best_g, value);
    // Drop the generator and renumber the ones above it.
    for (auto& r : P.relators)
      for (int& x : r) {
        const int g = std::abs(x) - 1;
        if (g > best_g) x = x > 0 ? x - 1 : x + 1;
      }
    --P.generator_count;
    normalize(P);
  }
  return P;
}

AbelianGroup abelianization(const GroupPresentation& P) {
  // Relators as columns: the transpose has the same invariant factors.
  SparseIntegerMatrix M;
  M.rows = P.generator_count;
  M.cols = static_cast<int>(P.relators.size());
  for (const auto& w : P.relators) {
    std::map<int, long long> entries;
    for (int x : w) entries[std::abs(x) - 1] += x > 0 ? 1 : -1;
    auto& col = M.columns.emplace_back();
    for (const auto& [g, c] : entries)
      if (c != 0) col.emplace_back(g, c);
  }
  const auto red = reduce_integer(M);
  return AbelianGroup{P.generator_count - red.rank, red.torsion};
}

}  // namespace bsg
