#include "hyperlab/graph.hpp"

#include <algorithm>
#include <limits>

namespace hyperlab {

SccResult strongly_connected_components(const Adjacency& adj) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  const std::size_t n = adj.size();
  SccResult out;
  out.component.assign(n, kUnset);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t next_edge;
  };
  std::vector<Frame> call;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& frame = call.back();
      const auto v = frame.v;
      if (frame.next_edge < adj[v].size()) {
        const auto w = adj[v][frame.next_edge++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.component[w] = out.count;
        } while (w != v);
        ++out.count;
      }
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> terminal_components(const Adjacency& adj) {
  const auto scc = strongly_connected_components(adj);
  std::vector<bool> leaves(scc.count, false);
  for (std::size_t v = 0; v < adj.size(); ++v)
    for (auto w : adj[v])
      if (scc.component[w] != scc.component[v]) leaves[scc.component[v]] = true;
  std::vector<std::vector<std::size_t>> groups(scc.count);
  for (std::size_t v = 0; v < adj.size(); ++v) groups[scc.component[v]].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t c = 0; c < scc.count; ++c)
    if (!leaves[c]) out.push_back(std::move(groups[c]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperlab
