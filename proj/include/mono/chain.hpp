#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mono/linalg.hpp"

namespace mono {

// C_top -> ... -> C_1 -> C_0 (-> target via the augmentation).
struct ChainComplex {
  std::vector<size_t> dims;                  // dim C_i
  std::vector<SparseMatrix> differentials;   // differentials[i] : C_{i+1} -> C_i
  std::optional<SparseMatrix> augmentation;  // C_0 -> target
  // When set, C_{top+1} = 0 and the top degree can be checked too.
  bool bounded = false;
  int conductor = 1;
};

struct DegreeExactness {
  int degree = 0;
  size_t dim = 0;
  size_t rank_out = 0;    // rank of the map leaving C_i (augmentation at 0)
  size_t rank_in = 0;     // rank of the map into C_i
  size_t kernel_dim = 0;  // dim C_i - rank_out
  bool exact = false;
};

struct ExactnessReport {
  bool is_complex = false;            // consecutive maps compose to zero
  bool compositions_checked = false;
  bool augmentation_surjective = true;
  size_t target_dim = 0;
  std::vector<DegreeExactness> degrees;
  bool exact = false;
  // "exact-elimination" or "modular-certified" (lower bounds mod p matched
  // the upper bounds forced by d o d = 0).
  std::string method;
};

struct ExactnessOptions {
  bool verify_compositions = true;
  // Largest rows*cols handled by exact elimination before trying certified
  // modular ranks.
  size_t exact_entry_limit = 200000;
  // Largest column count allowed for exact elimination as a fallback.
  size_t max_dim = 4000;
};

// Checks exactness at C_0 .. C_through (and surjectivity of the
// augmentation). Needs differentials[through] unless the complex is bounded
// at that degree.
ExactnessReport exactness_report(const ChainComplex& complex, int through_degree, const ExactnessOptions& options = {});

}  // namespace mono
