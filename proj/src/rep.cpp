#include "mono/rep.hpp"

#include <fstream>
#include <map>

#include "mono/error.hpp"

namespace mono {

MatrixRep::MatrixRep(FiniteGroup group, std::vector<Matrix> images, std::string name)
    : group_(std::move(group)), images_(std::move(images)), name_(std::move(name)) {
  require(static_cast<int>(images_.size()) == group_.order(), ErrorCode::Precondition,
          "representation needs one matrix per element");
  const size_t d = images_.front().rows();
  for (const auto& m : images_) {
    require(m.rows() == d && m.cols() == d, ErrorCode::Precondition, "representation matrices differ in size");
  }
  require(images_[0] == Matrix::identity(d, images_[0].conductor()), ErrorCode::Precondition,
          "identity must act as the identity matrix");
  for (int a = 0; a < group_.order(); ++a) {
    for (int b = 0; b < group_.order(); ++b) {
      require(images_[a] * images_[b] == images_[group_.mul(a, b)], ErrorCode::Precondition,
              "matrices do not define a homomorphism");
    }
  }
}

MatrixRep MatrixRep::from_generators(const FiniteGroup& group, const std::vector<int>& generators,
                                     const std::vector<Matrix>& images, std::string name) {
  require(generators.size() == images.size() && !images.empty(), ErrorCode::Precondition,
          "one image per generator is required");
  const size_t d = images.front().rows();
  const int conductor = group.exponent();
  std::vector<std::optional<Matrix>> all(group.order());
  all[0] = Matrix::identity(d, conductor);
  std::vector<int> queue{0};
  for (size_t i = 0; i < queue.size(); ++i) {
    for (size_t s = 0; s < generators.size(); ++s) {
      const int next = group.mul(queue[i], generators[s]);
      Matrix product = *all[queue[i]] * images[s];
      if (!all[next]) {
        all[next] = std::move(product);
        queue.push_back(next);
      } else {
        require(*all[next] == product, ErrorCode::Precondition, "generator images violate a relation");
      }
    }
  }
  require(static_cast<int>(queue.size()) == group.order(), ErrorCode::Precondition,
          "listed elements do not generate the group");
  std::vector<Matrix> matrices;
  for (auto& m : all) matrices.push_back(std::move(*m));
  return MatrixRep(group, std::move(matrices), std::move(name));
}

std::optional<Character> MatrixRep::central_character() const {
  const Subgroup z = center(group_);
  const int n = group_.exponent();
  std::vector<int> powers(group_.order(), -1);
  for (int x : z.elements()) {
    const Matrix& m = images_[x];
    const CycloScalar scalar = m(0, 0);
    if (!(m == scalar * Matrix::identity(dim(), n))) return std::nullopt;
    auto power = scalar.lifted(lcm_int(n, scalar.conductor())).root_of_unity_power();
    if (!power || scalar.conductor() > n) return std::nullopt;
    powers[x] = *scalar.lifted(n).root_of_unity_power();
  }
  return Character(z, std::move(powers));
}

Subspace fixed_points(const MatrixRep& v, const Character& pair) {
  const size_t d = v.dim();
  const int n = v.group().exponent();
  Matrix constraints(0, d, n);
  for (int h : pair.domain().elements()) {
    constraints = vstack(constraints, v(h) - pair.value(h) * Matrix::identity(d, n));
  }
  return null_space(constraints);
}

MatrixRep trivial_rep(const FiniteGroup& group) {
  return MatrixRep(group, std::vector<Matrix>(group.order(), Matrix::identity(1, group.exponent())), "trivial");
}

MatrixRep character_rep(const Character& chi) {
  const auto& group = chi.group();
  require(chi.domain().order() == group.order(), ErrorCode::Precondition, "character must live on the whole group");
  std::vector<Matrix> images;
  for (int g = 0; g < group.order(); ++g) {
    Matrix m(1, 1, group.exponent());
    m(0, 0) = chi.value(g);
    images.push_back(std::move(m));
  }
  return MatrixRep(group, std::move(images), "character");
}

MatrixRep regular_rep(const FiniteGroup& group) {
  return monomial_to_matrix(induced_module(Character::trivial(Subgroup::trivial(group))));
}

MatrixRep isotypic_regular_rep(const FiniteGroup& group, const Character& central) {
  require(central.domain() == center(group), ErrorCode::Precondition, "central character must live on Z(G)");
  return monomial_to_matrix(induced_module(central));
}

MatrixRep contragredient(const MatrixRep& rho) {
  std::vector<Matrix> images;
  for (int g = 0; g < rho.group().order(); ++g) images.push_back(rho(rho.group().inv(g)).transpose());
  return MatrixRep(rho.group(), std::move(images), rho.name() + "*");
}

MatrixRep monomial_to_matrix(const MonomialModule& module) {
  const auto& group = module.acting().group();
  require(module.acting().order() == group.order(), ErrorCode::Precondition, "module must carry a G action");
  std::vector<Matrix> images;
  for (int g = 0; g < group.order(); ++g) images.push_back(module.action_matrix(g).to_dense(group.exponent()));
  return MatrixRep(group, std::move(images), "monomial");
}

namespace {

// Permutation action on points restricted to the sum-zero subspace, in the
// basis e_i - e_last.
Matrix sum_zero_matrix(const std::vector<int>& perm, int conductor) {
  const size_t m = perm.size();
  Matrix a(m - 1, m - 1, conductor);
  const int last_image = perm[m - 1];
  for (size_t i = 0; i + 1 < m; ++i) {
    if (perm[i] != static_cast<int>(m - 1)) a(perm[i], i) += CycloScalar(1, conductor);
    if (last_image != static_cast<int>(m - 1)) a(last_image, i) -= CycloScalar(1, conductor);
  }
  return a;
}

MatrixRep sum_zero_rep(const FiniteGroup& group, const std::vector<std::vector<int>>& perms, std::string name) {
  std::vector<Matrix> images;
  for (const auto& p : perms) images.push_back(sum_zero_matrix(p, group.exponent()));
  return MatrixRep(group, std::move(images), std::move(name));
}

MatrixRep tensor_with_character(const MatrixRep& rho, const Character& chi, std::string name) {
  std::vector<Matrix> images;
  for (int g = 0; g < rho.group().order(); ++g) images.push_back(chi.value(g) * rho(g));
  return MatrixRep(rho.group(), std::move(images), std::move(name));
}

int sign_of(const std::vector<int>& perm) {
  int sign = 1;
  for (size_t i = 0; i < perm.size(); ++i) {
    for (size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace

std::vector<MatrixRep> irreducible_catalog(const FiniteGroup& group) {
  std::vector<MatrixRep> catalog;
  const auto linear = characters(Subgroup::whole(group));
  for (size_t i = 0; i < linear.size(); ++i) {
    MatrixRep r = character_rep(linear[i]);
    catalog.push_back(MatrixRep(group, [&] {
      std::vector<Matrix> m;
      for (int g = 0; g < group.order(); ++g) m.push_back(r(g));
      return m;
    }(), "char:" + std::to_string(i)));
  }
  const int n = group.exponent();
  if (group.kind() == FiniteGroup::Kind::Dihedral || group.kind() == FiniteGroup::Kind::Quaternion) {
    const int rotations = group.family_parameter();
    const bool quaternion = group.kind() == FiniteGroup::Kind::Quaternion;
    for (int j = 1; 2 * j < rotations; ++j) {
      if (quaternion && j % 2 == 0) continue;
      Matrix x(2, 2, n), y(2, 2, n);
      x(0, 0) = CycloScalar::root_of_unity(n, static_cast<long long>(j) * (n / rotations));
      x(1, 1) = CycloScalar::root_of_unity(n, -static_cast<long long>(j) * (n / rotations));
      y(0, 1) = CycloScalar(quaternion ? -1 : 1, n);
      y(1, 0) = CycloScalar(1, n);
      catalog.push_back(MatrixRep::from_generators(group, {1, rotations}, {x, y}, "rot:" + std::to_string(j)));
    }
  }
  if (group.kind() == FiniteGroup::Kind::Permutation) {
    const auto& perms = group.permutations();
    const int degree = group.family_parameter();
    const bool symmetric = group.order() == (degree == 3 ? 6 : degree == 4 ? 24 : -1);
    const bool alternating = degree == 4 && group.order() == 12;
    if (symmetric && degree == 3) catalog.push_back(sum_zero_rep(group, perms, "standard"));
    if (symmetric && degree == 4) {
      // S4 acts on the three ways to split four points into pairs.
      // Split s pairs 0 with point s + 1; track where 0's partner goes.
      std::vector<std::vector<int>> on_splits;
      for (const auto& p : perms) {
        std::vector<int> image(3);
        for (int s = 0; s < 3; ++s) {
          const int a = p[0], b = p[s + 1];
          const int partner = a == 0 ? b : b == 0 ? a : 6 - a - b;
          image[s] = partner - 1;
        }
        on_splits.push_back(image);
      }
      catalog.push_back(sum_zero_rep(group, on_splits, "splits"));
      MatrixRep standard = sum_zero_rep(group, perms, "standard");
      std::vector<int> sign_powers(group.order());
      for (int g = 0; g < group.order(); ++g) sign_powers[g] = sign_of(perms[g]) == 1 ? 0 : n / 2;
      const Character sign(Subgroup::whole(group), sign_powers);
      catalog.push_back(standard);
      catalog.push_back(tensor_with_character(standard, sign, "standard*sign"));
    }
    if (alternating) catalog.push_back(sum_zero_rep(group, perms, "standard"));
  }
  return catalog;
}

namespace {

CycloScalar scalar_from_json(const nlohmann::json& value, int conductor) {
  if (value.is_number_integer()) return CycloScalar(Rational(value.get<long>()), conductor);
  if (value.is_string()) return CycloScalar(Rational(value.get<std::string>()), conductor);
  if (value.is_object()) {
    const int n = value.at("conductor").get<int>();
    require(conductor % n == 0, ErrorCode::Parse, "scalar conductor must divide the group exponent");
    if (value.contains("power")) return CycloScalar::root_of_unity(n, value.at("power").get<long long>()).lifted(conductor);
    std::vector<Rational> coeffs;
    for (const auto& c : value.at("coeffs")) coeffs.push_back(scalar_from_json(c, 1).coefficients()[0]);
    return CycloScalar::from_polynomial(n, coeffs).lifted(conductor);
  }
  fail(ErrorCode::Parse, "unrecognised scalar in representation file");
}

}  // namespace

MatrixRep rep_from_json(const FiniteGroup& group, const nlohmann::json& doc) {
  try {
    const int n = group.exponent();
    const auto generators = doc.at("generators").get<std::vector<int>>();
    std::vector<Matrix> images;
    for (const auto& image : doc.at("images")) {
      const size_t d = image.size();
      Matrix m(d, d, n);
      for (size_t r = 0; r < d; ++r) {
        require(image[r].size() == d, ErrorCode::Parse, "representation matrix is not square");
        for (size_t c = 0; c < d; ++c) m(r, c) = scalar_from_json(image[r][c], n);
      }
      images.push_back(std::move(m));
    }
    return MatrixRep::from_generators(group, generators, images, doc.value("name", std::string("file")));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed representation JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    fail(ErrorCode::Parse, std::string("malformed scalar: ") + e.what());
  }
}

MatrixRep resolve_rep(const FiniteGroup& group, const Character& central, const std::string& tag) {
  if (tag == "trivial") return trivial_rep(group);
  if (tag == "regular") return isotypic_regular_rep(group, central);
  auto indexed = [&](const std::string& prefix) -> std::optional<size_t> {
    if (tag.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      size_t used = 0;
      const std::string rest = tag.substr(prefix.size());
      const size_t value = std::stoul(rest, &used);
      require(used == rest.size(), ErrorCode::Parse, "bad representation tag '" + tag + "'");
      return value;
    } catch (const std::logic_error&) {
      fail(ErrorCode::Parse, "bad representation tag '" + tag + "'");
    }
  };
  if (auto k = indexed("irrep:")) {
    auto catalog = irreducible_catalog(group);
    require(*k < catalog.size(), ErrorCode::Precondition, "irreducible index out of range");
    return catalog[*k];
  }
  if (auto k = indexed("char:")) {
    auto linear = characters(Subgroup::whole(group));
    require(*k < linear.size(), ErrorCode::Precondition, "character index out of range");
    return character_rep(linear[*k]);
  }
  std::ifstream in(tag);
  if (!in) fail(ErrorCode::Parse, "unknown representation '" + tag + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("cannot parse ") + tag + ": " + e.what());
  }
  return rep_from_json(group, doc);
}

size_t intertwiner_dimension(const MatrixRep& a, const MatrixRep& b) {
  // Unknown X (dim b x dim a) with X a(g) = b(g) X for the generators.
  const size_t da = a.dim(), db = b.dim();
  const int n = a.group().exponent();
  const size_t unknowns = da * db;
  Matrix system(0, unknowns, n);
  for (int g : a.group().generators()) {
    Matrix block(db * da, unknowns, n);
    for (size_t i = 0; i < db; ++i) {
      for (size_t j = 0; j < da; ++j) {
        const size_t row = i * da + j;
        // (X a)(i, j) = sum_k X(i, k) a(k, j)
        for (size_t k = 0; k < da; ++k) block(row, i * da + k) += a(g)(k, j);
        // (b X)(i, j) = sum_k b(i, k) X(k, j)
        for (size_t k = 0; k < db; ++k) block(row, k * da + j) -= b(g)(i, k);
      }
    }
    system = vstack(system, block);
  }
  return unknowns - rank(system);
}

bool reps_equal(const MatrixRep& a, const MatrixRep& b) {
  if (!(a.group() == b.group()) || a.dim() != b.dim()) return false;
  for (int g = 0; g < a.group().order(); ++g) {
    if (!(a(g) == b(g))) return false;
  }
  return true;
}

FrobeniusReport frobenius_reciprocity_check(const CharPair& pair, const MatrixRep& v) {
  const auto central = v.central_character();
  const Subgroup z = center(pair.group());
  require(central && pair_leq(*central, pair), ErrorCode::CentralCharacterMismatch,
          "Z(G) acts on V through a different character than on the pair");
  FrobeniusReport report;
  report.hom_dimension = intertwiner_dimension(monomial_to_matrix(induced_module(pair)), v);
  report.fixed_dimension = fixed_points(v, pair).dim();
  report.holds = report.hom_dimension == report.fixed_dimension;
  return report;
}

}  // namespace mono
