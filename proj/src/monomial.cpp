#include "mono/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "mono/error.hpp"

namespace mono {

MonomialModule::MonomialModule(Subgroup acting, std::vector<LineLabel> labels,
                               std::vector<std::vector<LineAction>> action)
    : acting_(std::move(acting)), labels_(std::move(labels)), action_(std::move(action)) {
  const auto& group = acting_.group();
  const int n = group.exponent();
  const int lines = size();
  require(static_cast<int>(action_.size()) == acting_.order(), ErrorCode::Precondition,
          "monomial action needs one row per acting element");
  for (const auto& row : action_) {
    require(static_cast<int>(row.size()) == lines, ErrorCode::Precondition, "monomial action row has wrong size");
  }
  for (int l = 0; l < lines; ++l) {
    require(action_[0][l].line == l && action_[0][l].scalar.is_one(), ErrorCode::Precondition,
            "identity must act trivially");
  }
  for (int g : acting_.elements()) {
    for (int h : acting_.elements()) {
      const auto& gh_row = action_[acting_.index_of(group.mul(g, h))];
      const auto& g_row = action_[acting_.index_of(g)];
      const auto& h_row = action_[acting_.index_of(h)];
      for (int l = 0; l < lines; ++l) {
        const LineAction& first = h_row[l];
        const LineAction& second = g_row[first.line];
        require(gh_row[l].line == second.line && gh_row[l].scalar == second.scalar * first.scalar,
                ErrorCode::Precondition, "monomial action does not compose");
      }
    }
  }
  for (int l = 0; l < lines; ++l) {
    std::vector<int> stabilizer;
    std::vector<int> powers(group.order(), -1);
    for (int g : acting_.elements()) {
      const LineAction& a = act(g, l);
      if (a.line != l) continue;
      require(n % a.scalar.conductor() == 0, ErrorCode::Precondition, "line scalar outside Q(zeta_N)");
      auto power = a.scalar.lifted(n).root_of_unity_power();
      require(power.has_value(), ErrorCode::Precondition, "stabilizer acts by a non-root of unity");
      stabilizer.push_back(g);
      powers[g] = *power;
    }
    stabilizing_.emplace_back(Subgroup(group, std::move(stabilizer)), std::move(powers));
  }
}

const LineAction& MonomialModule::act(int g, int line) const {
  const int index = acting_.index_of(g);
  require(index >= 0, ErrorCode::Precondition, "element does not act on this module");
  return action_[index][line];
}

SparseMatrix MonomialModule::action_matrix(int g) const {
  SparseMatrix m(size(), size());
  for (int l = 0; l < size(); ++l) {
    const LineAction& a = act(g, l);
    m.add(a.line, l, a.scalar);
  }
  return m;
}

MonomialModule induced_module(const Subgroup& acting, const Character& phi) {
  const Subgroup& l = phi.domain();
  require(acting.contains(l), ErrorCode::NotASubgroup, "inducing subgroup is not inside the acting subgroup");
  const auto& group = acting.group();
  std::vector<int> reps;
  for (int c : acting.elements()) {
    if (left_coset_min(c, l) == c) reps.push_back(c);
  }
  std::vector<int> line_of(group.order(), -1);
  for (size_t i = 0; i < reps.size(); ++i) line_of[reps[i]] = static_cast<int>(i);
  std::vector<LineLabel> labels;
  for (int c : reps) labels.push_back(LineLabel{0, c});
  std::vector<std::vector<LineAction>> action;
  for (int j : acting.elements()) {
    std::vector<LineAction> row;
    for (int c : reps) {
      const int jc = group.mul(j, c);
      const int target = left_coset_min(jc, l);
      const int rest = group.mul(group.inv(target), jc);
      row.push_back(LineAction{line_of[target], phi.value(rest)});
    }
    action.push_back(std::move(row));
  }
  return MonomialModule(acting, std::move(labels), std::move(action));
}

MonomialModule induced_module(const CharPair& pair) { return induced_module(Subgroup::whole(pair.group()), pair); }

MonomialModule direct_sum(const std::vector<MonomialModule>& summands) {
  require(!summands.empty(), ErrorCode::Precondition, "direct sum of nothing");
  const Subgroup& acting = summands.front().acting();
  std::vector<LineLabel> labels;
  std::vector<std::vector<LineAction>> action(acting.order());
  int offset = 0;
  for (size_t s = 0; s < summands.size(); ++s) {
    const auto& m = summands[s];
    require(m.acting() == acting, ErrorCode::Precondition, "summands have different acting groups");
    for (int l = 0; l < m.size(); ++l) labels.push_back(LineLabel{static_cast<int>(s), m.label(l).representative});
    for (int i = 0; i < acting.order(); ++i) {
      for (int l = 0; l < m.size(); ++l) {
        const LineAction& a = m.act(acting.elements()[i], l);
        action[i].push_back(LineAction{a.line + offset, a.scalar});
      }
    }
    offset += m.size();
  }
  return MonomialModule(acting, std::move(labels), std::move(action));
}

MonomialModule restriction(const MonomialModule& module, const Subgroup& j) {
  require(module.acting().contains(j), ErrorCode::NotASubgroup, "restriction to a non-subgroup");
  std::vector<LineLabel> labels;
  for (int l = 0; l < module.size(); ++l) labels.push_back(module.label(l));
  std::vector<std::vector<LineAction>> action;
  for (int g : j.elements()) {
    std::vector<LineAction> row;
    for (int l = 0; l < module.size(); ++l) row.push_back(module.act(g, l));
    action.push_back(std::move(row));
  }
  return MonomialModule(j, std::move(labels), std::move(action));
}

std::vector<int> lineable_fixed_points(const MonomialModule& module, const Character& pair) {
  std::vector<int> lines;
  for (int l = 0; l < module.size(); ++l) {
    if (pair_leq(pair, module.stabilizing_pair(l))) lines.push_back(l);
  }
  return lines;
}

SparseMatrix triple_morphism(const Triple& t) {
  require(triple_valid(t), ErrorCode::InvalidTriple, "triple violates the containment or character condition");
  const auto& group = t.source.group();
  const Subgroup& k = t.source.domain();
  const Subgroup& h = t.target.domain();
  const auto source_reps = left_coset_representatives(k);
  const auto target_reps = left_coset_representatives(h);
  SparseMatrix map(target_reps.size(), source_reps.size());
  const int g_inv = group.inv(t.g);
  for (size_t i = 0; i < source_reps.size(); ++i) {
    const int image = group.mul(source_reps[i], g_inv);
    const int rep = left_coset_min(image, h);
    const size_t line = std::lower_bound(target_reps.begin(), target_reps.end(), rep) - target_reps.begin();
    map.add(line, i, t.target.value(group.mul(group.inv(rep), image)));
  }
  return map;
}

bool is_equivariant(const MonomialModule& source, const MonomialModule& target, const SparseMatrix& map) {
  if (map.rows() != static_cast<size_t>(target.size()) || map.cols() != static_cast<size_t>(source.size())) {
    return false;
  }
  for (int g : source.acting().elements()) {
    if (!(map.multiply(source.action_matrix(g)) == target.action_matrix(g).multiply(map))) return false;
  }
  return true;
}

bool preserves_lineable_fixed_points(const MonomialModule& source, const MonomialModule& target,
                                     const SparseMatrix& map) {
  for (int l = 0; l < source.size(); ++l) {
    for (const auto& entry : map.column(l)) {
      if (entry.value.is_zero()) continue;
      if (!pair_leq(source.stabilizing_pair(l), target.stabilizing_pair(static_cast<int>(entry.row)))) return false;
    }
  }
  return true;
}

std::vector<SparseMatrix> hom_via_fixed_points(const CharPair& pair, const MonomialModule& target) {
  const auto reps = left_coset_representatives(pair.domain());
  std::vector<SparseMatrix> result;
  for (int n : lineable_fixed_points(target, pair)) {
    SparseMatrix map(target.size(), reps.size());
    for (size_t i = 0; i < reps.size(); ++i) {
      const LineAction& a = target.act(reps[i], n);
      map.add(a.line, i, a.scalar);
    }
    result.push_back(std::move(map));
  }
  return result;
}

std::vector<CycloScalar> value_at_generator(const SparseMatrix& map, int conductor) {
  std::vector<CycloScalar> column(map.rows(), CycloScalar::zero(conductor));
  for (const auto& entry : map.column(0)) column[entry.row] += entry.value;
  return column;
}

std::vector<Character> orbit_decomposition(const MonomialModule& module) {
  std::vector<int> orbit(module.size(), -1);
  std::vector<Character> tags;
  for (int l = 0; l < module.size(); ++l) {
    if (orbit[l] >= 0) continue;
    for (int g : module.acting().elements()) orbit[module.act(g, l).line] = l;
    Character best = module.stabilizing_pair(l);
    for (int g : module.acting().elements()) {
      Character moved = act(g, module.stabilizing_pair(l));
      if (moved < best) best = moved;
    }
    tags.push_back(best);
  }
  std::sort(tags.begin(), tags.end());
  return tags;
}

FunctionModel::FunctionModel(const CharPair& pair) : pair_(pair), reps_(right_coset_representatives(pair.domain())) {
  const auto& group = pair.group();
  for (int d : reps_) {
    GroupFunction f(group);
    for (int h : pair.domain().elements()) f.at(group.mul(h, d)) = pair.value(h);
    basis_.push_back(std::move(f));
  }
}

bool FunctionModel::contains(const GroupFunction& f) const {
  const auto& group = pair_.group();
  for (int d : reps_) {
    for (int h : pair_.domain().elements()) {
      if (!(f(group.mul(h, d)) == pair_.value(h) * f(d))) return false;
    }
  }
  return true;
}

std::vector<CycloScalar> FunctionModel::coordinates(const GroupFunction& f) const {
  require(contains(f), ErrorCode::Precondition, "function is outside the model");
  std::vector<CycloScalar> coords;
  for (int d : reps_) coords.push_back(f(d));
  return coords;
}

Matrix FunctionModel::action_matrix(int g) const {
  const int n = pair_.conductor();
  Matrix m(reps_.size(), reps_.size(), n);
  for (size_t k = 0; k < basis_.size(); ++k) {
    const auto coords = coordinates(basis_[k].translated(g));
    for (size_t r = 0; r < coords.size(); ++r) m(r, k) = coords[r];
  }
  return m;
}

Matrix FunctionModel::bridge() const {
  const auto line_reps = left_coset_representatives(pair_.domain());
  const GroupFunction base = pair_function(pair_);
  Matrix m(reps_.size(), line_reps.size(), pair_.conductor());
  for (size_t k = 0; k < line_reps.size(); ++k) {
    const auto coords = coordinates(base.translated(line_reps[k]));
    for (size_t r = 0; r < coords.size(); ++r) m(r, k) = coords[r];
  }
  return m;
}

Matrix function_model_morphism(const Triple& t) {
  require(triple_valid(t), ErrorCode::InvalidTriple, "triple violates the containment or character condition");
  const auto& group = t.source.group();
  const FunctionModel source(t.source), target(t.target);
  const GroupFunction target_base = pair_function(t.target);
  Matrix m(target.dim(), source.dim(), group.exponent());
  for (int k = 0; k < source.dim(); ++k) {
    // f_d = d^-1 . f_(K,psi) maps to (d^-1 g^-1) . f_(H,phi)
    const int shift = group.mul(group.inv(source.representatives()[k]), group.inv(t.g));
    const auto coords = target.coordinates(target_base.translated(shift));
    for (size_t r = 0; r < coords.size(); ++r) m(r, k) = coords[r];
  }
  return m;
}

DoubleCosetDecomposition double_coset_formula(const Subgroup& j, const Character& phi) {
  const auto& group = phi.group();
  const Subgroup& h = phi.domain();
  const Subgroup whole = Subgroup::whole(group);
  std::vector<int> reps;
  for (const auto& coset : double_cosets(j, h)) reps.push_back(coset.representative);

  std::vector<Character> characters;
  std::vector<MonomialModule> summands;
  for (int z : reps) {
    const Subgroup meet = intersect(j, conjugate_subgroup(z, h));
    characters.push_back(restrict(conj_character(group.inv(z), phi), meet));
    summands.push_back(induced_module(j, characters.back()));
  }
  MonomialModule restricted = restriction(induced_module(whole, phi), j);
  MonomialModule decomposed = direct_sum(summands);
  std::vector<int> offsets;
  int offset = 0;
  for (const auto& s : summands) {
    offsets.push_back(offset);
    offset += s.size();
  }
  auto line_in_summand = [&](size_t s, int rep) {
    const auto& m = summands[s];
    for (int l = 0; l < m.size(); ++l) {
      if (m.label(l).representative == rep) return offsets[s] + l;
    }
    fail(ErrorCode::Precondition, "coset representative not found");
  };

  SparseMatrix forward(decomposed.size(), restricted.size());
  for (int line = 0; line < restricted.size(); ++line) {
    const int c = restricted.label(line).representative;
    size_t s = 0;
    int jj = -1, hh = -1;
    for (; s < reps.size() && jj < 0; ++s) {
      for (int x : j.elements()) {
        const int rest = group.mul(group.inv(group.mul(x, reps[s])), c);
        if (h.contains(rest)) {
          jj = x;
          hh = rest;
          break;
        }
      }
    }
    --s;
    const Subgroup& meet = characters[s].domain();
    const int jrep = left_coset_min(jj, meet);
    const int l = group.mul(group.inv(jrep), jj);
    forward.add(line_in_summand(s, jrep), line, characters[s].value(l) * phi.value(hh));
  }

  const auto restricted_reps = left_coset_representatives(h);
  SparseMatrix backward(restricted.size(), decomposed.size());
  for (int line = 0; line < decomposed.size(); ++line) {
    const int s = decomposed.label(line).summand;
    const int image = group.mul(decomposed.label(line).representative, reps[s]);
    const int rep = left_coset_min(image, h);
    const size_t target =
        std::lower_bound(restricted_reps.begin(), restricted_reps.end(), rep) - restricted_reps.begin();
    backward.add(target, line, phi.value(group.mul(group.inv(rep), image)));
  }
  return DoubleCosetDecomposition{std::move(reps), std::move(characters), std::move(restricted),
                                  std::move(decomposed), std::move(forward), std::move(backward)};
}

bool verify_double_coset_formula(const DoubleCosetDecomposition& d) {
  if (d.restricted.size() != d.decomposed.size()) return false;
  if (!is_equivariant(d.restricted, d.decomposed, d.forward)) return false;
  const int n = static_cast<int>(d.restricted.size());
  SparseMatrix identity(n, n);
  for (int i = 0; i < n; ++i) identity.add(i, i, CycloScalar(1));
  return d.backward.multiply(d.forward) == identity && d.forward.multiply(d.backward) == identity;
}

}  // namespace mono
