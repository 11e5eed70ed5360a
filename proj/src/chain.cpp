#include "mono/chain.hpp"

#include "mono/error.hpp"

namespace mono {

namespace {

bool composes_to_zero(const SparseMatrix& left, const SparseMatrix& right) {
  return left.multiply(right).is_zero();
}

size_t exact_rank(const SparseMatrix& m, int conductor) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Row reduction runs over the shorter side.
  if (m.cols() < m.rows()) return rank(m.to_dense(conductor).transpose());
  return rank(m.to_dense(conductor));
}

}  // namespace

ExactnessReport exactness_report(const ChainComplex& complex, int through_degree, const ExactnessOptions& options) {
  const int top = static_cast<int>(complex.dims.size()) - 1;
  require(through_degree >= 0 && through_degree <= top, ErrorCode::Precondition, "degree outside the complex");
  require(complex.differentials.size() == complex.dims.size() - 1, ErrorCode::Precondition,
          "complex needs one differential per consecutive pair of terms");
  const bool needs_top = !(complex.bounded && through_degree == top);
  require(!needs_top || through_degree < top, ErrorCode::Precondition,
          "exactness at the top degree of a truncated complex is undetermined");

  ExactnessReport report;
  report.target_dim = complex.augmentation ? complex.augmentation->rows() : 0;

  // Maps in play: index 0 is the augmentation (or nothing), index i+1 is d_i.
  std::vector<const SparseMatrix*> maps;
  maps.push_back(complex.augmentation ? &*complex.augmentation : nullptr);
  const int last_map = needs_top ? through_degree : through_degree - 1;
  for (int i = 0; i <= last_map; ++i) maps.push_back(&complex.differentials[i]);

  report.is_complex = true;
  if (options.verify_compositions) {
    report.compositions_checked = true;
    if (maps[0] && maps.size() > 1) report.is_complex = composes_to_zero(*maps[0], *maps[1]);
    for (size_t i = 1; i + 1 < maps.size() && report.is_complex; ++i) {
      report.is_complex = composes_to_zero(*maps[i], *maps[i + 1]);
    }
  }

  bool all_small = true;
  bool fallback_possible = true;
  for (const auto* m : maps) {
    if (!m) continue;
    all_small = all_small && m->rows() * m->cols() <= options.exact_entry_limit;
    fallback_possible = fallback_possible && std::min(m->rows(), m->cols()) <= options.max_dim;
  }

  std::vector<size_t> ranks(maps.size(), 0);
  auto fill_degrees = [&]() {
    report.degrees.clear();
    report.augmentation_surjective = !complex.augmentation || ranks[0] == report.target_dim;
    bool all_exact = report.is_complex && report.augmentation_surjective;
    for (int i = 0; i <= through_degree; ++i) {
      DegreeExactness d;
      d.degree = i;
      d.dim = complex.dims[i];
      d.rank_out = ranks[i];
      d.rank_in = i + 1 < static_cast<int>(ranks.size()) ? ranks[i + 1] : 0;
      d.kernel_dim = d.dim - d.rank_out;
      d.exact = report.is_complex && d.rank_in == d.kernel_dim;
      all_exact = all_exact && d.exact;
      report.degrees.push_back(d);
    }
    report.exact = all_exact;
  };
  auto certified = [&]() {
    if (complex.augmentation && ranks[0] != report.target_dim) return false;
    for (int i = 0; i <= through_degree; ++i) {
      const size_t in = i + 1 < static_cast<int>(ranks.size()) ? ranks[i + 1] : 0;
      if (ranks[i] + in != complex.dims[i]) return false;
    }
    return true;
  };
  auto run_exact = [&]() {
    for (size_t i = 0; i < maps.size(); ++i) ranks[i] = maps[i] ? exact_rank(*maps[i], complex.conductor) : 0;
    report.method = "exact-elimination";
    fill_degrees();
  };

  if (all_small || !report.is_complex) {
    if (!all_small && !fallback_possible) {
      report.method = "not-a-complex";
      fill_degrees();
      return report;
    }
    run_exact();
    return report;
  }
  for (int attempt = 0; attempt < 3; ++attempt) {
    const PrimeField field(complex.conductor, attempt);
    bool defined = true;
    for (size_t i = 0; i < maps.size() && defined; ++i) {
      if (!maps[i]) continue;
      auto bound = rank_lower_bound(*maps[i], field, 0x9e3779b97f4a7c15ULL * (attempt + 1) + i);
      if (!bound) defined = false;
      else ranks[i] = *bound;
    }
    if (defined && certified()) {
      report.method = "modular-certified";
      fill_degrees();
      return report;
    }
  }
  require(fallback_possible, ErrorCode::TooLarge,
          "exactness could not be certified modularly and exact elimination exceeds the size guard");
  run_exact();
  return report;
}

}  // namespace mono
