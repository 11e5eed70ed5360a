#include "mono/convolution.hpp"

#include <algorithm>
#include <set>

#include "mono/error.hpp"

namespace mono {

namespace {

void require_same_group(const GroupFunction& a, const GroupFunction& b) {
  require(a.group() == b.group(), ErrorCode::Precondition, "functions live on different groups");
}

// Least element of each coset of n inside h; coset_of picks a member.
std::vector<std::vector<int>> cosets_of(const Subgroup& h, const Subgroup& n) {
  const auto& group = h.group();
  std::vector<std::vector<int>> cosets;
  std::set<int> seen;
  for (int x : h.elements()) {
    if (seen.count(x)) continue;
    std::vector<int> coset;
    for (int m : n.elements()) coset.push_back(group.mul(x, m));
    std::sort(coset.begin(), coset.end());
    seen.insert(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

Subgroup u_quotient_kernel(const Triple& t) {
  const auto& group = t.target.group();
  std::vector<int> generators = conjugate_subgroup(t.g, t.source.domain()).elements();
  const auto kernel = t.target.kernel().elements();
  generators.insert(generators.end(), kernel.begin(), kernel.end());
  return Subgroup::generated_by(group, generators);
}

template <class Pick>
CosetChoice coset_choice(const Triple& t, Pick pick) {
  require(triple_valid(t), ErrorCode::InvalidTriple, "triple is not valid");
  CosetChoice choice;
  for (const auto& coset : cosets_of(t.source.domain(), t.source.kernel())) choice.v.push_back(pick(coset));
  for (const auto& coset : cosets_of(t.target.domain(), u_quotient_kernel(t))) choice.u.push_back(pick(coset));
  return choice;
}

}  // namespace

GroupFunction convolve(const GroupFunction& a, const GroupFunction& b) {
  require_same_group(a, b);
  const auto& group = a.group();
  GroupFunction result(group);
  for (int h = 0; h < group.order(); ++h) {
    if (a(h).is_zero()) continue;
    const int h_inv = group.inv(h);
    for (int g = 0; g < group.order(); ++g) {
      const auto& right = b(group.mul(h_inv, g));
      if (!right.is_zero()) result.at(g) += a(h) * right;
    }
  }
  return result;
}

GroupFunction convolve_right_form(const GroupFunction& a, const GroupFunction& b) {
  require_same_group(a, b);
  const auto& group = a.group();
  GroupFunction result(group);
  for (int g = 0; g < group.order(); ++g) {
    for (int h = 0; h < group.order(); ++h) {
      const auto& right = b(group.inv(h));
      if (!right.is_zero()) result.at(g) += a(group.mul(g, h)) * right;
    }
  }
  return result;
}

GroupFunction involution(const GroupFunction& f) {
  GroupFunction result(f.group());
  for (int x = 0; x < f.group().order(); ++x) result.at(x) = f(f.group().inv(x));
  return result;
}

GroupFunction subgroup_idempotent(const Subgroup& k) {
  const auto& group = k.group();
  return CycloScalar(Rational(1, k.order()), group.exponent()) * GroupFunction::indicator(group, k.elements());
}

CosetChoice minimal_coset_choice(const Triple& t) {
  return coset_choice(t, [](const std::vector<int>& coset) { return coset.front(); });
}

CosetChoice random_coset_choice(const Triple& t, std::mt19937_64& rng) {
  return coset_choice(t, [&rng](const std::vector<int>& coset) {
    return coset[std::uniform_int_distribution<size_t>(0, coset.size() - 1)(rng)];
  });
}

GroupFunction phi_element(const Triple& t, const CosetChoice& choice, PhiWeights weights) {
  require(triple_valid(t), ErrorCode::InvalidTriple, "triple is not valid");
  const auto& group = t.target.group();
  const int g_inv = group.inv(t.g);
  GroupFunction phi(group);
  const Subgroup kernel = t.target.kernel();
  for (int u : choice.u) {
    CycloScalar weight = t.target.value(u);
    if (weights == PhiWeights::Conjugated) weight = weight.inverse();
    for (int n : kernel.elements()) phi.at(group.mul(g_inv, group.mul(n, u))) += weight;
  }
  return phi;
}

GroupFunction translated_pair_function_expansion(const CharPair& pair, const std::vector<int>& v, int g1) {
  const auto& group = pair.group();
  const int g1_inv = group.inv(g1);
  GroupFunction result(group);
  const Subgroup kernel = pair.kernel();
  for (int vj : v) {
    for (int n : kernel.elements()) result.at(group.mul(group.mul(n, vj), g1_inv)) += pair.value(vj);
  }
  return result;
}

TranslationCheck translation_formula_check(const Triple& t, int g1, const CosetChoice& choice, PhiWeights weights) {
  require(triple_valid(t), ErrorCode::InvalidTriple, "triple is not valid");
  const auto& group = t.target.group();
  const GroupFunction translated = pair_function(t.source).translated(g1);
  const GroupFunction expansion = translated_pair_function_expansion(t.source, choice.v, g1);
  const CycloScalar scale(Rational(1, t.source.kernel().order()), group.exponent());
  TranslationCheck check{
      pair_function(t.target).translated(group.mul(g1, group.inv(t.g))),
      scale * involution(convolve(involution(expansion), phi_element(t, choice, weights))),
      expansion == translated,
      false,
  };
  check.holds = check.expansion_matches && check.expected == check.computed;
  return check;
}

Matrix pi_of_phi(const MatrixRep& rho, const GroupFunction& f) {
  require(rho.group() == f.group(), ErrorCode::Precondition, "function and representation live on different groups");
  Matrix result(rho.dim(), rho.dim(), rho.group().exponent());
  for (int g = 0; g < rho.group().order(); ++g) {
    if (!f(g).is_zero()) result = result + f(g) * rho(g);
  }
  return result;
}

CycloScalar trace_distribution(const MatrixRep& rho, const GroupFunction& f) {
  const Matrix m = pi_of_phi(rho, f);
  CycloScalar trace = CycloScalar::zero(rho.group().exponent());
  for (size_t i = 0; i < m.rows(); ++i) trace += m(i, i);
  return trace;
}

}  // namespace mono
