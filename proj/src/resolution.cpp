#include "mono/resolution.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "mono/error.hpp"

namespace mono {

size_t default_max_dim() {
  if (const char* env = std::getenv("MONO_MAX_DIM")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<size_t>(value);
    } catch (const std::logic_error&) {
    }
    fail(ErrorCode::Parse, std::string("MONO_MAX_DIM must be a positive integer, got '") + env + "'");
  }
  return 4000;
}

SMode default_s_mode(const FiniteGroup& group) { return group.order() > 4 ? SMode::Orbit : SMode::Full; }

std::vector<int> s_pairs(const PairPoset& poset, SMode mode) {
  if (mode == SMode::Orbit) return poset.orbit_representatives();
  std::vector<int> all(poset.size());
  for (int p = 0; p < poset.size(); ++p) all[p] = p;
  return all;
}

MonomialModule build_S(const PairPoset& poset, const std::vector<int>& pairs) {
  std::vector<MonomialModule> summands;
  for (int p : pairs) summands.push_back(induced_module(poset.pair(p)));
  return direct_sum(summands);
}

std::vector<size_t> BarResolution::fixed_columns(int degree, int pair) const {
  std::vector<size_t> columns;
  const size_t dim = complex.dims.at(degree);
  for (size_t idx = 0; idx < dim; ++idx) {
    if (poset->leq(pair, line_pair[idx % s])) columns.push_back(idx);
  }
  return columns;
}

namespace {

struct Entry {
  size_t index;
  CycloScalar value;
};

// Mixed-radix view of a basis index of term i.
struct BarIndex {
  size_t b = 0;
  std::vector<size_t> alphas;
  size_t line = 0;
};

BarIndex decode(size_t idx, int degree, size_t a, size_t s) {
  BarIndex x;
  x.line = idx % s;
  idx /= s;
  x.alphas.resize(degree);
  for (int j = degree - 1; j >= 0; --j) {
    x.alphas[j] = idx % a;
    idx /= a;
  }
  x.b = idx;
  return x;
}

size_t encode(size_t b, const std::vector<size_t>& alphas, size_t line, size_t a, size_t s) {
  size_t idx = b;
  for (size_t alpha : alphas) idx = idx * a + alpha;
  return idx * s + line;
}

Matrix column_vector(const Matrix& m, size_t c) { return m.column(c); }

}  // namespace

BarResolution build_resolution(const ResolutionRequest& request) {
  require(request.v.group() == request.group, ErrorCode::Precondition, "representation lives on a different group");
  require(request.max_degree >= 0, ErrorCode::Precondition, "max_degree must be non-negative");
  const auto central = request.v.central_character();
  require(central && *central == request.central, ErrorCode::CentralCharacterMismatch,
          "Z(G) does not act on V through the chosen central character");

  const FiniteGroup& group = request.group;
  const int n = group.exponent();
  BarResolution r{.poset = std::make_shared<const PairPoset>(group, request.central),
                  .algebra = nullptr,
                  .v = request.v,
                  .mode = request.mode,
                  .summand_pairs = {},
                  .s_module = induced_module(Character::trivial(Subgroup::whole(group))),
                  .line_summand = {},
                  .line_pair = {},
                  .as_basis = {},
                  .fixed_bases = {},
                  .generator_summand = {},
                  .generator_column = {},
                  .complex = {}};
  r.algebra = std::make_shared<const HyperHeckeAlgebra>(r.poset);
  const PairPoset& poset = *r.poset;

  r.summand_pairs = s_pairs(poset, request.mode);
  std::vector<int> sorted_pairs = r.summand_pairs;
  r.as_basis = r.algebra->basis(sorted_pairs);
  if (request.reverse_order) {
    std::reverse(r.summand_pairs.begin(), r.summand_pairs.end());
    std::reverse(r.as_basis.begin(), r.as_basis.end());
  }
  r.s_module = build_S(poset, r.summand_pairs);
  std::vector<int> summand_of_pair(poset.size(), -1);
  for (size_t k = 0; k < r.summand_pairs.size(); ++k) summand_of_pair[r.summand_pairs[k]] = static_cast<int>(k);

  std::vector<size_t> line_offset;
  for (int l = 0; l < r.s_module.size(); ++l) {
    const int summand = r.s_module.label(l).summand;
    if (static_cast<int>(line_offset.size()) == summand) line_offset.push_back(l);
    r.line_summand.push_back(summand);
    r.line_pair.push_back(poset.id_of(r.s_module.stabilizing_pair(l)));
  }
  for (size_t k = 0; k < r.summand_pairs.size(); ++k) {
    r.fixed_bases.push_back(fixed_points(request.v, poset.pair(r.summand_pairs[k])));
    for (size_t c = 0; c < r.fixed_bases.back().dim(); ++c) {
      r.generator_summand.push_back(static_cast<int>(k));
      r.generator_column.push_back(c);
    }
  }
  r.h = r.generator_summand.size();
  r.a = r.as_basis.size();
  r.s = static_cast<size_t>(r.s_module.size());
  r.complex.conductor = n;

  for (int i = 0; i <= request.max_degree; ++i) {
    long double dim = static_cast<long double>(r.h) * r.s;
    for (int j = 0; j < i; ++j) dim *= r.a;
    require(dim <= static_cast<long double>(request.max_dim), ErrorCode::TooLarge,
            "term " + std::to_string(i) + " has dimension " + std::to_string(static_cast<unsigned long long>(dim)) +
                ", above the guard " + std::to_string(request.max_dim));
    r.complex.dims.push_back(static_cast<size_t>(dim));
  }

  std::map<TripleKey, size_t> basis_index;
  for (size_t k = 0; k < r.a; ++k) basis_index[r.as_basis[k]] = k;

  // f_b o alpha in the basis of V^(source of alpha), nonempty only when the
  // target of alpha is the summand of f_b.
  std::vector<std::vector<std::vector<Entry>>> first_face(r.h, std::vector<std::vector<Entry>>(r.a));
  for (size_t b = 0; b < r.h; ++b) {
    const int summand = r.generator_summand[b];
    const Matrix w = column_vector(r.fixed_bases[summand].basis, r.generator_column[b]);
    for (size_t k = 0; k < r.a; ++k) {
      const TripleKey& alpha = r.as_basis[k];
      if (alpha.target != r.summand_pairs[summand]) continue;
      const Matrix image = request.v(group.inv(alpha.g)) * w;
      const int source_summand = summand_of_pair[alpha.source];
      const Subspace& fixed = r.fixed_bases[source_summand];
      Matrix coords(fixed.dim(), 1, n);
      for (size_t c = 0; c < fixed.dim(); ++c) coords(c, 0) = image(fixed.coordinate_rows[c], 0);
      require(fixed.basis * coords == image, ErrorCode::Inconsistent, "precomposition left the fixed points");
      size_t first_generator = 0;
      while (r.generator_summand[first_generator] != source_summand) ++first_generator;
      for (size_t c = 0; c < fixed.dim(); ++c) {
        if (!coords(c, 0).is_zero()) first_face[b][k].push_back(Entry{first_generator + c, coords(c, 0)});
      }
    }
  }

  std::vector<std::vector<std::optional<Entry>>> products(r.a, std::vector<std::optional<Entry>>(r.a));
  for (size_t x = 0; x < r.a; ++x) {
    for (size_t y = 0; y < r.a; ++y) {
      if (auto product = r.algebra->multiply_basis(r.as_basis[x], r.as_basis[y])) {
        products[x][y] = Entry{basis_index.at(product->first), CycloScalar::root_of_unity(n, product->second)};
      }
    }
  }

  std::vector<std::vector<std::optional<Entry>>> last_face(r.a, std::vector<std::optional<Entry>>(r.s));
  for (size_t k = 0; k < r.a; ++k) {
    const TripleKey& alpha = r.as_basis[k];
    const SparseMatrix map = triple_morphism(r.algebra->triple(alpha));
    const size_t source_offset = line_offset[summand_of_pair[alpha.source]];
    const size_t target_offset = line_offset[summand_of_pair[alpha.target]];
    for (size_t c = 0; c < map.cols(); ++c) {
      require(map.column(c).size() == 1, ErrorCode::Inconsistent, "triple morphism must send lines to lines");
      const auto& e = map.column(c).front();
      last_face[k][source_offset + c] = Entry{target_offset + e.row, e.value};
    }
  }

  for (int i = 1; i <= request.max_degree; ++i) {
    SparseMatrix d(r.complex.dims[i - 1], r.complex.dims[i]);
    const CycloScalar last_sign(i % 2 == 0 ? 1 : -1, n);
    for (size_t idx = 0; idx < r.complex.dims[i]; ++idx) {
      const BarIndex x = decode(idx, i, r.a, r.s);
      const std::vector<size_t> tail(x.alphas.begin() + 1, x.alphas.end());
      for (const auto& e : first_face[x.b][x.alphas[0]]) d.add(encode(e.index, tail, x.line, r.a, r.s), idx, e.value);
      for (int j = 1; j < i; ++j) {
        const auto& product = products[x.alphas[j - 1]][x.alphas[j]];
        if (!product) continue;
        std::vector<size_t> merged;
        merged.insert(merged.end(), x.alphas.begin(), x.alphas.begin() + (j - 1));
        merged.push_back(product->index);
        merged.insert(merged.end(), x.alphas.begin() + (j + 1), x.alphas.end());
        const CycloScalar value = j % 2 == 0 ? product->value : -product->value;
        d.add(encode(x.b, merged, x.line, r.a, r.s), idx, value);
      }
      if (const auto& moved = last_face[x.alphas.back()][x.line]) {
        const std::vector<size_t> head(x.alphas.begin(), x.alphas.end() - 1);
        d.add(encode(x.b, head, moved->index, r.a, r.s), idx, last_sign * moved->value);
      }
    }
    d.normalize();
    r.complex.differentials.push_back(std::move(d));
  }

  SparseMatrix eps(request.v.dim(), r.complex.dims[0]);
  for (size_t b = 0; b < r.h; ++b) {
    const int summand = r.generator_summand[b];
    const Matrix w = column_vector(r.fixed_bases[summand].basis, r.generator_column[b]);
    for (size_t l = 0; l < r.s; ++l) {
      if (r.line_summand[l] != summand) continue;
      const Matrix image = request.v(r.s_module.label(static_cast<int>(l)).representative) * w;
      for (size_t row = 0; row < image.rows(); ++row) {
        if (!image(row, 0).is_zero()) eps.add(row, b * r.s + l, image(row, 0));
      }
    }
  }
  eps.normalize();
  r.complex.augmentation = std::move(eps);
  return r;
}

namespace {

// g acting on term basis vectors through their line.
std::vector<Entry> act_on_column(const BarResolution& r, int g, const std::vector<SparseEntry>& column) {
  std::vector<Entry> result;
  for (const auto& e : column) {
    const size_t line = e.row % r.s;
    const LineAction& moved = r.s_module.act(g, static_cast<int>(line));
    result.push_back(Entry{e.row - line + moved.line, moved.scalar * e.value});
  }
  std::sort(result.begin(), result.end(), [](const Entry& x, const Entry& y) { return x.index < y.index; });
  return result;
}

bool same_entries(std::vector<Entry> x, std::vector<Entry> y) {
  auto by_index = [](const Entry& p, const Entry& q) { return p.index < q.index; };
  std::sort(x.begin(), x.end(), by_index);
  std::sort(y.begin(), y.end(), by_index);
  if (x.size() != y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].index != y[i].index || !(x[i].value == y[i].value)) return false;
  }
  return true;
}

bool differential_is_morphism(const BarResolution& r, const SparseMatrix& d) {
  for (size_t c = 0; c < d.cols(); ++c) {
    const int source_pair = r.line_pair[c % r.s];
    for (const auto& e : d.column(c)) {
      if (!r.poset->leq(source_pair, r.line_pair[e.row % r.s])) return false;
    }
  }
  for (int g : r.poset->group().generators()) {
    for (size_t c = 0; c < d.cols(); ++c) {
      const size_t line = c % r.s;
      const LineAction& moved = r.s_module.act(g, static_cast<int>(line));
      std::vector<Entry> lhs;
      for (const auto& e : d.column(c - line + moved.line)) lhs.push_back(Entry{e.row, moved.scalar * e.value});
      if (!same_entries(lhs, act_on_column(r, g, d.column(c)))) return false;
    }
  }
  return true;
}

bool augmentation_is_equivariant(const BarResolution& r) {
  const SparseMatrix& eps = *r.complex.augmentation;
  const int n = r.complex.conductor;
  for (int g : r.poset->group().generators()) {
    const Matrix lhs = r.v(g) * eps.to_dense(n);
    Matrix rhs(eps.rows(), eps.cols(), n);
    for (size_t c = 0; c < eps.cols(); ++c) {
      const size_t line = c % r.s;
      const LineAction& moved = r.s_module.act(g, static_cast<int>(line));
      for (const auto& e : eps.column(c - line + moved.line)) rhs(e.row, c) += moved.scalar * e.value;
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace

ResolutionCheck check_monomial_resolution(const BarResolution& r, int through_degree, const ExactnessOptions& options) {
  require(through_degree >= 1 && through_degree <= r.max_degree(), ErrorCode::Precondition,
          "exactness through degree d needs terms 0..d with d >= 1");
  const int n = r.complex.conductor;
  const SparseMatrix& eps = *r.complex.augmentation;
  ResolutionCheck check;
  check.through_degree = through_degree;

  check.is_complex = eps.multiply(r.complex.differentials[0]).is_zero();
  for (int i = 0; i + 1 < through_degree && check.is_complex; ++i) {
    check.is_complex = r.complex.differentials[i].multiply(r.complex.differentials[i + 1]).is_zero();
  }
  check.morphisms = augmentation_is_equivariant(r);
  for (int i = 0; i < through_degree && check.morphisms; ++i) {
    check.morphisms = differential_is_morphism(r, r.complex.differentials[i]);
  }

  const int pair_count = r.poset->size();
  check.pairs.resize(pair_count);
  std::vector<char> eps_fixed(pair_count, 0);
  ExactnessOptions per_pair = options;
  per_pair.verify_compositions = false;

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (int p = next++; p < pair_count; p = next++) {
      try {
        const Subspace fixed = fixed_points(r.v, r.poset->pair(p));
        std::vector<std::vector<size_t>> columns;
        for (int i = 0; i <= through_degree; ++i) columns.push_back(r.fixed_columns(i, p));

        std::vector<size_t> all_rows(eps.rows());
        for (size_t row = 0; row < all_rows.size(); ++row) all_rows[row] = row;
        const Matrix image = eps.submatrix(all_rows, columns[0]).to_dense(n);
        Matrix coords(fixed.dim(), image.cols(), n);
        for (size_t c = 0; c < fixed.dim(); ++c) {
          for (size_t col = 0; col < image.cols(); ++col) coords(c, col) = image(fixed.coordinate_rows[c], col);
        }
        eps_fixed[p] = fixed.basis * coords == image;

        ChainComplex sub;
        sub.conductor = n;
        for (int i = 0; i <= through_degree; ++i) sub.dims.push_back(columns[i].size());
        for (int i = 0; i < through_degree; ++i) {
          sub.differentials.push_back(r.complex.differentials[i].submatrix(columns[i], columns[i + 1]));
        }
        sub.augmentation = SparseMatrix::from_dense(coords);
        PairExactness result;
        result.pair = p;
        result.fixed_target_dim = fixed.dim();
        result.report = exactness_report(sub, through_degree - 1, per_pair);
        check.pairs[p] = std::move(result);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min(std::thread::hardware_concurrency(), static_cast<unsigned>(pair_count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  check.augmentation_fixed = std::all_of(eps_fixed.begin(), eps_fixed.end(), [](char ok) { return ok != 0; });
  check.exact = check.is_complex && check.morphisms && check.augmentation_fixed &&
                std::all_of(check.pairs.begin(), check.pairs.end(), [](const PairExactness& p) { return p.report.exact; });
  return check;
}

HomologyInvariants homology_invariants(const ResolutionCheck& check) {
  HomologyInvariants invariants;
  for (const auto& pair : check.pairs) {
    std::vector<size_t> ranks, homology;
    for (const auto& d : pair.report.degrees) {
      ranks.push_back(d.rank_out);
      homology.push_back(d.kernel_dim - std::min(d.kernel_dim, d.rank_in));
    }
    invariants.ranks.push_back(std::move(ranks));
    invariants.homology.push_back(std::move(homology));
  }
  return invariants;
}

ChainMapReport monocentre_chain_map(const BarResolution& r, const MonoFamily& family, int through_degree) {
  require(family_in_monocentre(*r.poset, family), ErrorCode::FamilyNotInMonocentre,
          "family violates the monocentre condition");
  require(through_degree >= 0 && through_degree <= r.max_degree(), ErrorCode::Precondition,
          "chain map degree exceeds the built resolution");
  const int n = r.complex.conductor;

  // z_S on the lines of S, summand by summand.
  std::vector<Entry> on_lines(r.s, Entry{0, CycloScalar::zero(n)});
  size_t offset = 0;
  for (size_t k = 0; k < r.summand_pairs.size(); ++k) {
    const int p = r.summand_pairs[k];
    const CharPair& pair = r.poset->pair(p);
    const SparseMatrix map = triple_morphism(Triple{pair, family.representatives[p], pair});
    for (size_t c = 0; c < map.cols(); ++c) {
      const auto& e = map.column(c).front();
      on_lines[offset + c] = Entry{offset + e.row, e.value};
    }
    offset += map.cols();
  }

  ChainMapReport report;
  for (int i = 0; i <= through_degree; ++i) {
    SparseMatrix z(r.complex.dims[i], r.complex.dims[i]);
    for (size_t idx = 0; idx < r.complex.dims[i]; ++idx) {
      const size_t line = idx % r.s;
      z.add(idx - line + on_lines[line].index, idx, on_lines[line].value);
    }
    z.normalize();
    report.components.push_back(std::move(z));
  }
  for (int i = 0; i < through_degree; ++i) {
    const SparseMatrix& d = r.complex.differentials[i];
    report.commutes.push_back(report.components[i].multiply(d) == d.multiply(report.components[i + 1]));
  }

  const Matrix eps = r.complex.augmentation->to_dense(n);
  const Matrix eps_z = r.complex.augmentation->multiply(report.components[0]).to_dense(n);
  try {
    report.on_v = solve(eps.transpose(), eps_z.transpose()).transpose();
    report.augmentation_commutes = report.on_v * eps == eps_z;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Inconsistent) throw;
    report.augmentation_commutes = false;
  }
  if (report.augmentation_commutes) {
    report.equivariant_on_v = true;
    for (int g : r.poset->group().generators()) {
      report.equivariant_on_v = report.equivariant_on_v && report.on_v * r.v(g) == r.v(g) * report.on_v;
    }
    const CycloScalar c = report.on_v(0, 0);
    if (report.on_v == c * Matrix::identity(r.v.dim(), n)) report.scalar = c;
  }
  report.all_commute = report.augmentation_commutes &&
                       std::all_of(report.commutes.begin(), report.commutes.end(), [](bool ok) { return ok; });
  return report;
}

}  // namespace mono
