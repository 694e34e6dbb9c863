#pragma once

#include <vector>

#include "mcvc/graph.hpp"

namespace mcvc::detail {

// Kuhn-style augmenting search assigning elements to transversal sets, where
// each set holds up to `capacity` elements. add() mutates state only when it
// succeeds, so the matcher doubles as an incremental independence oracle for
// the capacity-scaled transversal matroid.
class CapacitatedMatcher {
 public:
  CapacitatedMatcher(const std::vector<VertexSet>& sets, int n, int capacity)
      : capacity_(capacity), admissible_(static_cast<std::size_t>(n)),
        assigned_(sets.size()) {
    for (std::size_t a = 0; a < sets.size(); ++a) {
      for (int v : sets[a]) {
        admissible_[static_cast<std::size_t>(v)].push_back(static_cast<int>(a));
      }
    }
  }

  bool add(int v) {
    std::vector<char> visited(assigned_.size(), 0);
    return augment(v, visited);
  }

  // assignment()[a] lists the elements currently matched to set a.
  const std::vector<std::vector<int>>& assignment() const { return assigned_; }

 private:
  bool augment(int v, std::vector<char>& visited) {
    for (int a : admissible_[static_cast<std::size_t>(v)]) {
      if (visited[static_cast<std::size_t>(a)]) continue;
      visited[static_cast<std::size_t>(a)] = 1;
      auto& slot = assigned_[static_cast<std::size_t>(a)];
      if (static_cast<int>(slot.size()) < capacity_) {
        slot.push_back(v);
        return true;
      }
      for (std::size_t i = 0; i < slot.size(); ++i) {
        if (augment(slot[i], visited)) {
          slot[i] = v;
          return true;
        }
      }
    }
    return false;
  }

  int capacity_;
  std::vector<std::vector<int>> admissible_;
  std::vector<std::vector<int>> assigned_;
};

}  // namespace mcvc::detail
