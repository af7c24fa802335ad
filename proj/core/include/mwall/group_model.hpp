#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwall/free_word.hpp"
#include "mwall/lattice.hpp"

namespace mwall {

struct Syllable {
  int gen = 0;
  std::int64_t exp = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// Normal-form word. Which normal form depends on the owning GroupModel.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Syllable> word) : word_(std::move(word)) {}

  const std::vector<Syllable>& word() const { return word_; }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  // Structural order, usable as a map key. The canonical lex order of a
  // model is GroupModel::compare.
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<Syllable> word_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const;
};

enum class GroupKind { FreeAbelian, Free, Amalgam };

class GraphOfGroupsGroup;

class GroupModel {
 public:
  static GroupModel free_abelian(int rank);
  static GroupModel free_group(int rank);
  static GroupModel amalgam(std::shared_ptr<const GraphOfGroupsGroup> graph);

  GroupKind kind() const { return kind_; }
  // Rank for FreeAbelian/Free; number of declared generators otherwise.
  int rank() const { return rank_; }
  std::size_t generator_count() const { return labels_.size(); }
  const std::vector<std::string>& generator_labels() const { return labels_; }
  const GroupElement& generator(std::size_t i) const { return generators_.at(i); }
  const GraphOfGroupsGroup& graph() const { return *graph_; }

  GroupElement identity() const { return {}; }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement invert(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, std::int64_t k) const;

  // Throws MalformedWord when g is not in this model's normal form.
  void check(const GroupElement& g) const;
  bool is_normal(const GroupElement& g) const;

  // Canonical lexicographic order on normal forms.
  int compare(const GroupElement& a, const GroupElement& b) const;
  // Word length in the declared generators, where it has a closed form.
  std::optional<std::int64_t> word_length(const GroupElement& g) const;

  std::string format(const GroupElement& g) const;
  GroupElement parse(std::string_view text) const;

  GroupElement from_vector(const IntVec& v) const;
  IntVec to_vector(const GroupElement& g) const;
  GroupElement from_word(const Word& w) const;
  Word to_word(const GroupElement& g) const;

 private:
  GroupKind kind_ = GroupKind::FreeAbelian;
  int rank_ = 0;
  std::vector<std::string> labels_;
  std::vector<GroupElement> generators_;
  std::shared_ptr<const GraphOfGroupsGroup> graph_;
};

GroupElement multiply(const GroupModel& m, const GroupElement& a, const GroupElement& b);
GroupElement invert(const GroupModel& m, const GroupElement& a);

inline constexpr std::size_t kDefaultBallCap = 1'000'000;

struct BallEntry {
  GroupElement element;
  int length = 0;
  // Shortest word found, letters +-(i+1) over declared generators.
  std::vector<int> word;
};

// Elements of word length <= radius, sorted by (length, canonical order).
std::vector<BallEntry> enumerate_ball(const GroupModel& m, int radius, std::size_t cap = kDefaultBallCap);
std::vector<GroupElement> ball(const GroupModel& m, int radius, std::size_t cap = kDefaultBallCap);
std::string format_generator_word(const GroupModel& m, const std::vector<int>& word);

// Subgroup given by generators, optionally intersected with further
// subgroups.
class SubgroupSpec {
 public:
  SubgroupSpec() = default;
  explicit SubgroupSpec(std::vector<GroupElement> generators) : parts_{std::move(generators)} {}
  static SubgroupSpec whole(const GroupModel& m);

  SubgroupSpec intersect(const SubgroupSpec& other) const;
  const std::vector<std::vector<GroupElement>>& parts() const { return parts_; }
  const std::vector<GroupElement>& generators() const { return parts_.front(); }
  bool is_intersection() const { return parts_.size() > 1; }

 private:
  std::vector<std::vector<GroupElement>> parts_{{}};
};

// Compiled membership test.
class Membership {
 public:
  Membership(const GroupModel& m, const SubgroupSpec& h, std::size_t budget = 20000);
  // May throw UndecidableAtRadius for amalgam subgroups.
  bool contains(const GroupElement& g) const;
  // Canonical key of the coset gH when available (single free abelian lattice).
  std::optional<IntVec> coset_key(const GroupElement& g) const;

 private:
  struct Part;
  const GroupModel* model_;
  std::vector<std::shared_ptr<const Part>> parts_;
};

bool in_subgroup(const GroupModel& m, const SubgroupSpec& h, const GroupElement& g);

struct CosetOptions {
  // Restrict to cosets inside this subgroup (elements of the ball outside it are skipped).
  std::optional<SubgroupSpec> ambient;
  std::size_t cap = kDefaultBallCap;
  std::size_t membership_budget = 20000;
};

// One canonical representative (shortest, then least in canonical order) per
// left coset gH meeting ball(radius).
std::vector<GroupElement> coset_representatives(const GroupModel& m, const SubgroupSpec& h, int radius,
                                                const CosetOptions& options = {});

// g = transversal * z^power, transversal canonical for the coset g<z>.
struct CyclicSplit {
  GroupElement transversal;
  std::int64_t power = 0;
};
CyclicSplit split_by_cyclic(const GroupModel& m, const GroupElement& g, const GroupElement& z);

}  // namespace mwall
