#pragma once

// Set-operads given by labeled structures: NAP (rooted trees) and Comm
// (one structure per finite set). An operad instance supplies the labeled
// structures on a label set, the composition map P(I) x prod P(J_i) -> P(u J_i),
// and the projection to coinvariant classes.

#include "naphopf/labeled.hpp"

#include <concepts>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace naphopf {

template <class P>
concept SetOperad = requires(const typename P::Structure& s, const std::vector<Label>& labels,
                             const std::map<Label, typename P::Structure>& subs, std::size_t n) {
  { P::name } -> std::convertible_to<std::string_view>;
  { P::basis(n) } -> std::convertible_to<std::vector<typename P::Class>>;
  { P::structures(labels) } -> std::same_as<std::vector<typename P::Structure>>;
  { P::compose(s, subs) } -> std::same_as<typename P::Structure>;
  { P::class_of(s) } -> std::same_as<typename P::Class>;
  { P::labels(s) } -> std::same_as<std::vector<Label>>;
  { P::render(s) } -> std::same_as<std::string>;
};

struct NapOperad {
  using Structure = LabeledTree;
  using Class = RootedTree;
  static constexpr std::string_view name = "NAP";

  static std::vector<Class> basis(std::size_t n) { return enumerate_trees(n); }
  static std::vector<Structure> structures(const std::vector<Label>& labels) { return all_labeled_trees(labels); }
  static Structure compose(const Structure& outer, const std::map<Label, Structure>& subs) {
    return nap_compose(outer, subs);
  }
  static Class class_of(const Structure& s) { return s.shape(); }
  static std::vector<Label> labels(const Structure& s) { return s.labels(); }
  static std::string render(const Structure& s) { return s.str(); }
};

/// A Comm structure on I is the set I itself (kept sorted).
struct CommOperad {
  using Structure = std::vector<Label>;
  using Class = std::size_t;
  static constexpr std::string_view name = "Comm";

  static std::vector<Class> basis(std::size_t n) { return {n}; }
  static std::vector<Structure> structures(const std::vector<Label>& labels);
  static Structure compose(const Structure& outer, const std::map<Label, Structure>& subs);
  static Class class_of(const Structure& s) { return s.size(); }
  static std::vector<Label> labels(const Structure& s) { return s; }
  static std::string render(const Structure& s);
};

static_assert(SetOperad<NapOperad>);
static_assert(SetOperad<CommOperad>);

inline NapOperad nap_instance() { return {}; }
inline CommOperad comm_instance() { return {}; }

}  // namespace naphopf
