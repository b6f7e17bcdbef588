#include "nsfland/markov.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace nsfland {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::vector<std::uint32_t>> move_graph(const FitnessLandscape& l, TransitionPolicy policy) {
  std::vector<std::vector<std::uint32_t>> succ(l.size());
  for (std::uint32_t s = 0; s < l.size(); ++s) {
    auto& out = succ[s];
    for (int bit = l.num_vars() - 1; bit >= 0; --bit) {
      const std::uint32_t t = s ^ (1u << bit);
      if (l[t] > l[s]) out.push_back(t);
    }
    if (out.empty() && policy == TransitionPolicy::GreedyPlateau) {
      for (int bit = l.num_vars() - 1; bit >= 0; --bit) {
        const std::uint32_t t = s ^ (1u << bit);
        if (l[t] == l[s]) out.push_back(t);
      }
    }
  }
  return succ;
}

// Iterative Tarjan. Returns the component id of every node.
std::vector<std::int64_t> strongly_connected_components(const std::vector<std::vector<std::uint32_t>>& succ,
                                                        std::int64_t& count) {
  const std::size_t n = succ.size();
  constexpr std::int64_t kUnvisited = -1;
  std::vector<std::int64_t> index(n, kUnvisited), low(n, 0), component(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> frames;  // node, next edge
  std::int64_t next_index = 0;
  count = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, edge] = frames.back();
      if (edge < succ[v].size()) {
        const std::uint32_t w = succ[v][edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::uint32_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const std::uint32_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = count;
        } while (w != done);
        ++count;
      }
    }
  }
  return component;
}

}  // namespace

std::string_view to_string(TransitionPolicy policy) {
  return policy == TransitionPolicy::GreedyPlateau ? "greedy-plateau" : "strict";
}

std::string_view to_string(Combine combine) { return combine == Combine::Average ? "average" : "sum"; }

TransitionPolicy parse_policy(std::string_view text) {
  const auto t = lower(text);
  if (t == "greedy-plateau" || t == "greedy_plateau") return TransitionPolicy::GreedyPlateau;
  if (t == "strict" || t == "strict-improving" || t == "strict_improving") return TransitionPolicy::StrictImproving;
  throw ValidationError("unknown transition policy '" + std::string(text) + "'");
}

Combine parse_combine(std::string_view text) {
  const auto t = lower(text);
  if (t == "average") return Combine::Average;
  if (t == "sum") return Combine::Sum;
  throw ValidationError("unknown combine mode '" + std::string(text) + "'");
}

ChainSkeleton chain_skeleton(const FitnessLandscape& l, TransitionPolicy policy) {
  if (l.num_vars() > kMaxVars) throw CapacityError("landscape too large for a dense chain");
  const auto succ = move_graph(l, policy);
  std::int64_t num_components = 0;
  const auto component = strongly_connected_components(succ, num_components);

  std::vector<bool> closed(static_cast<std::size_t>(num_components), true);
  for (std::uint32_t s = 0; s < l.size(); ++s) {
    for (std::uint32_t t : succ[s]) {
      if (component[t] != component[s]) closed[static_cast<std::size_t>(component[s])] = false;
    }
  }

  ChainSkeleton skel;
  skel.transient_index.assign(l.size(), -1);
  skel.absorbing_index.assign(l.size(), -1);

  std::vector<std::int64_t> class_slot(static_cast<std::size_t>(num_components), -1);
  std::vector<std::uint32_t> transient_ids;
  for (std::uint32_t s = 0; s < l.size(); ++s) {
    const auto c = static_cast<std::size_t>(component[s]);
    if (!closed[c]) {
      transient_ids.push_back(s);
      continue;
    }
    if (class_slot[c] < 0) {
      class_slot[c] = static_cast<std::int64_t>(skel.absorbing.size());
      skel.absorbing.push_back(MacroState{{}, l[s]});
    }
    skel.absorbing[static_cast<std::size_t>(class_slot[c])].members.push_back(s);
    skel.absorbing_index[s] = class_slot[c];
  }

  std::ranges::stable_sort(transient_ids, [&](std::uint32_t a, std::uint32_t b) { return l[a] < l[b]; });
  skel.transient.reserve(transient_ids.size());
  skel.successors.reserve(transient_ids.size());
  for (std::uint32_t s : transient_ids) {
    skel.transient_index[s] = static_cast<std::int64_t>(skel.transient.size());
    skel.transient.push_back(MacroState{{s}, l[s]});
    skel.successors.push_back(succ[s]);
  }
  return skel;
}

namespace detail {

void check_absorption_reachable(const std::vector<std::vector<Index>>& forward, const std::vector<bool>& exits) {
  const std::size_t n = forward.size();
  std::vector<std::vector<Index>> backward(n);
  for (std::size_t i = 0; i < n; ++i)
    for (Index j : forward[i]) backward[static_cast<std::size_t>(j)].push_back(static_cast<Index>(i));

  std::vector<bool> reaches(n, false);
  std::vector<Index> queue;
  for (std::size_t i = 0; i < n; ++i) {
    if (exits[i]) {
      reaches[i] = true;
      queue.push_back(static_cast<Index>(i));
    }
  }
  while (!queue.empty()) {
    const Index v = queue.back();
    queue.pop_back();
    for (Index u : backward[static_cast<std::size_t>(v)]) {
      if (!reaches[static_cast<std::size_t>(u)]) {
        reaches[static_cast<std::size_t>(u)] = true;
        queue.push_back(u);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!reaches[i]) {
      throw ValidationError("transient state " + std::to_string(i) + " cannot reach any absorbing state");
    }
  }
}

}  // namespace detail

}  // namespace nsfland
