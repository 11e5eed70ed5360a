#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace mono {

// Finite group given by a Cayley table. Elements are 0..order-1 and 0 is the
// identity. Cheap to copy: copies share one immutable table.
class FiniteGroup {
 public:
  enum class Kind { Table, Cyclic, Dihedral, Quaternion, Permutation };

  // Validates closure, identity at 0, inverses and associativity.
  static FiniteGroup from_cayley_table(std::string name, const std::vector<std::vector<int>>& table);
  // Elements are the generated permutations in lexicographic order of their
  // image lists; throws TooLarge past max_order.
  static FiniteGroup from_permutations(std::string name, const std::vector<std::vector<int>>& generators,
                                       int max_order = 10000);

  int order() const { return data_->order; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return data_->table[static_cast<size_t>(a) * data_->order + b]; }
  int inv(int a) const { return data_->inverse[a]; }
  int pow(int a, long long exponent) const;
  // g h g^-1
  int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }
  int element_order(int a) const { return data_->element_order[a]; }
  int exponent() const { return data_->exponent; }
  const std::string& name() const { return data_->name; }
  Kind kind() const { return data_->kind; }
  // Rotation count for dihedral groups, cyclic order for cyclic groups.
  int family_parameter() const { return data_->family_parameter; }
  // Point images per element; empty unless built from permutations.
  const std::vector<std::vector<int>>& permutations() const { return data_->permutations; }
  // A small generating set, chosen greedily in element order.
  const std::vector<int>& generators() const { return data_->generators; }
  bool is_abelian() const;

  bool operator==(const FiniteGroup& other) const { return data_ == other.data_; }

 private:
  struct Data {
    std::string name;
    int order = 0;
    std::vector<int> table;
    std::vector<int> inverse;
    std::vector<int> element_order;
    std::vector<int> generators;
    int exponent = 1;
    Kind kind = Kind::Table;
    int family_parameter = 0;
    std::vector<std::vector<int>> permutations;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static FiniteGroup finish(Data data);

  std::shared_ptr<const Data> data_;

  friend FiniteGroup builtin_group(const std::string& name);
};

// c2..c12, s3, s4, a4, d4..d16 (dihedral of the given order), q8. Dihedral
// elements are x^i (i < n) followed by x^i y; q8 uses the same layout with
// y^2 = x^2.
FiniteGroup builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

// {"name","order","table"} or {"name","degree","generators"}.
FiniteGroup group_from_json(const nlohmann::json& doc);
// Builtin name or path to a JSON file.
FiniteGroup resolve_group(const std::string& name_or_path);

// Subset of a group closed under the group law. Elements are kept sorted.
class Subgroup {
 public:
  // Throws NotASubgroup if the set is not a subgroup.
  Subgroup(FiniteGroup group, std::vector<int> elements);
  static Subgroup generated_by(const FiniteGroup& group, const std::vector<int>& generators);
  static Subgroup whole(const FiniteGroup& group);
  static Subgroup trivial(const FiniteGroup& group);

  const FiniteGroup& group() const { return group_; }
  const std::vector<int>& elements() const { return data_->elements; }
  int order() const { return static_cast<int>(data_->elements.size()); }
  bool contains(int g) const { return data_->mask[g] != 0; }
  bool contains(const Subgroup& other) const;
  // Position of g in elements(), or -1.
  int index_of(int g) const { return data_->position[g]; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements() == b.elements(); }
  // Orders by size, then lexicographically by elements.
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  struct Data {
    std::vector<int> elements;
    std::vector<char> mask;
    std::vector<int> position;
  };
  Subgroup(FiniteGroup group, std::vector<int> elements, bool trusted);
  friend std::vector<Subgroup> all_subgroups(const FiniteGroup& group);

  FiniteGroup group_;
  std::shared_ptr<const Data> data_;
};

Subgroup center(const FiniteGroup& group);
// g H g^-1
Subgroup conjugate_subgroup(int g, const Subgroup& h);
Subgroup commutator_subgroup(const Subgroup& h);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup normalizer(const Subgroup& h);
// All subgroups, sorted; guarded by TooLarge for big groups.
std::vector<Subgroup> all_subgroups(const FiniteGroup& group);
std::vector<Subgroup> subgroups_containing(const FiniteGroup& group, const Subgroup& z);

struct DoubleCoset {
  int representative;         // minimal element
  std::vector<int> elements;  // sorted
};
// H \ G / K, sorted by representative.
std::vector<DoubleCoset> double_cosets(const Subgroup& h, const Subgroup& k);
// Minimal representatives of the left cosets gH, sorted.
std::vector<int> left_coset_representatives(const Subgroup& h);
// Minimal representatives of the right cosets Hg, sorted.
std::vector<int> right_coset_representatives(const Subgroup& h);
// Minimal element of gH.
int left_coset_min(int g, const Subgroup& h);

}  // namespace mono
