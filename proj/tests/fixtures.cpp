#include "fixtures.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace fixtures {

knotscope::PDCode braid_closure(int strands, const std::vector<int>& word) {
  std::vector<int> label(static_cast<std::size_t>(strands));
  for (int p = 0; p < strands; ++p) label[static_cast<std::size_t>(p)] = p + 1;
  int next = strands + 1;
  knotscope::PDCode code;
  for (int g : word) {
    const auto i = static_cast<std::size_t>(std::abs(g) - 1);
    const int a = label[i];
    const int b = label[i + 1];
    const int a_out = next++;
    const int b_out = next++;
    if (g > 0)
      code.crossings.push_back({b, a_out, b_out, a});
    else
      code.crossings.push_back({a, b, a_out, b_out});
    label[i] = b_out;
    label[i + 1] = a_out;
  }
  std::map<int, int> rename;
  for (int p = 0; p < strands; ++p) {
    if (label[static_cast<std::size_t>(p)] == p + 1) throw std::invalid_argument("strand never crosses");
    rename[label[static_cast<std::size_t>(p)]] = p + 1;
  }
  for (auto& x : code.crossings)
    for (int& l : x)
      if (auto it = rename.find(l); it != rename.end()) l = it->second;
  return knotscope::canonical_pd(knotscope::build_diagram(code));
}

}  // namespace fixtures
