#include "naphopf/operad.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace naphopf {

std::vector<CommOperad::Structure> CommOperad::structures(const std::vector<Label>& labels) {
  if (labels.empty()) return {};
  Structure s = labels;
  std::sort(s.begin(), s.end());
  return {s};
}

CommOperad::Structure CommOperad::compose(const Structure& outer, const std::map<Label, Structure>& subs) {
  std::set<Label> out;
  for (const auto& i : outer) {
    auto it = subs.find(i);
    if (it == subs.end()) throw std::invalid_argument("missing substitution for '" + i + "'");
    for (const auto& j : it->second) {
      if (!out.insert(j).second) throw std::invalid_argument("label collision on '" + j + "'");
    }
  }
  if (subs.size() != outer.size()) throw std::invalid_argument("substitution for a label outside the outer set");
  return {out.begin(), out.end()};
}

std::string CommOperad::render(const Structure& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out.push_back(',');
    out += s[i];
  }
  out.push_back('}');
  return out;
}

}  // namespace naphopf
