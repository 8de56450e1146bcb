#pragma once

// Same-type refinement: shrink finite multisets F_1..F_k so that every
// polynomial has one sign on the whole product F_1' x ... x F_k'.

#include "spacecross/polynomial.hpp"
#include "spacecross/yaoyao.hpp"

#include <optional>
#include <vector>

namespace spacecross {

struct SameTypeResult {
  std::vector<std::vector<int>> retained;  // ascending indices into each multiset
  std::vector<int> signs;                  // one per polynomial
  Integer epsilon_exponent;                // the size guarantee is eps = 3^-epsilon_exponent
  int partitions_built = 0;
  bool perturbed = false;                  // some partition needed the perturbation
};

/// Sum over polynomials of 3^(t_2 + ... + t_k), t_i = block_term_count.
Integer same_type_epsilon_exponent(const std::vector<SparsePolynomial>& polys);

/// size >= 3^-exponent * total, exactly.
bool meets_epsilon(std::size_t size, std::size_t total, const Integer& exponent);

/// Requires k >= 1, matching block dimensions, non-empty multisets and a
/// linearised last-block dimension <= 2 at every level (PreconditionViolated).
/// Sign constancy and the size bound are verified before returning.
SameTypeResult same_type_refine(const std::vector<PointMultiset>& sets, const std::vector<SparsePolynomial>& polys);

/// Every polynomial has constant sign over the product of the chosen subsets;
/// the signs are written to `signs` when given. Enumerates the full product.
bool sign_constant(const std::vector<PointMultiset>& sets, const std::vector<SparsePolynomial>& polys,
                   const std::vector<std::vector<int>>& chosen, std::vector<int>* signs = nullptr);

/// Exhaustive search for index subsets of the given sizes on whose product
/// every polynomial is sign-constant. Subsets of the first k - 1 multisets are
/// enumerated; the last one is grouped by sign pattern. PreconditionViolated
/// when the enumerated binomial product exceeds `limit`.
std::optional<std::vector<std::vector<int>>> brute_force_same_type(const std::vector<PointMultiset>& sets,
                                                                   const std::vector<SparsePolynomial>& polys,
                                                                   const std::vector<int>& sizes,
                                                                   double limit = 1e7);

/// The enumerated search space of brute_force_same_type.
double brute_force_search_space(const std::vector<PointMultiset>& sets, const std::vector<int>& sizes);

}  // namespace spacecross
