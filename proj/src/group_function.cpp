#include "mono/group_function.hpp"

namespace mono {

GroupFunction::GroupFunction(FiniteGroup group)
    : group_(std::move(group)), values_(group_.order(), CycloScalar::zero(group_.exponent())) {}

GroupFunction GroupFunction::delta(const FiniteGroup& group, int x) {
  GroupFunction f(group);
  f.values_[x] = CycloScalar(1, group.exponent());
  return f;
}

GroupFunction GroupFunction::indicator(const FiniteGroup& group, const std::vector<int>& support) {
  GroupFunction f(group);
  for (int x : support) f.values_[x] = CycloScalar(1, group.exponent());
  return f;
}

GroupFunction GroupFunction::translated(int g) const {
  GroupFunction f(group_);
  for (int x = 0; x < group_.order(); ++x) f.values_[x] = values_[group_.mul(x, g)];
  return f;
}

GroupFunction& GroupFunction::operator+=(const GroupFunction& other) {
  for (size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

GroupFunction& GroupFunction::operator-=(const GroupFunction& other) {
  for (size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

GroupFunction operator*(const CycloScalar& c, GroupFunction f) {
  for (auto& v : f.values_) v = c * v;
  return f;
}

GroupFunction pair_function(const Character& phi) {
  GroupFunction f(phi.group());
  for (int h : phi.domain().elements()) f.at(h) = phi.value(h);
  return f;
}

}  // namespace mono
