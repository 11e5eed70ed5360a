#pragma once

#include <vector>

#include "mono/character.hpp"

namespace mono {

// Function G -> Q(zeta_N), an element of the group algebra.
class GroupFunction {
 public:
  explicit GroupFunction(FiniteGroup group);
  static GroupFunction delta(const FiniteGroup& group, int x);
  static GroupFunction indicator(const FiniteGroup& group, const std::vector<int>& support);

  const FiniteGroup& group() const { return group_; }
  const CycloScalar& operator()(int x) const { return values_[x]; }
  CycloScalar& at(int x) { return values_[x]; }
  const std::vector<CycloScalar>& values() const { return values_; }

  // (g.f)(x) = f(x g)
  GroupFunction translated(int g) const;

  GroupFunction& operator+=(const GroupFunction& other);
  GroupFunction& operator-=(const GroupFunction& other);
  friend GroupFunction operator+(GroupFunction a, const GroupFunction& b) { return a += b; }
  friend GroupFunction operator-(GroupFunction a, const GroupFunction& b) { return a -= b; }
  friend GroupFunction operator*(const CycloScalar& c, GroupFunction f);
  friend bool operator==(const GroupFunction& a, const GroupFunction& b) { return a.values_ == b.values_; }

 private:
  FiniteGroup group_;
  std::vector<CycloScalar> values_;
};

// phi on H, zero elsewhere.
GroupFunction pair_function(const Character& phi);

}  // namespace mono
