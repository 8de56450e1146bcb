#pragma once

// Sparse multivariate polynomials over Q whose variables come in blocks, one
// block per point of a product space.

#include "spacecross/rational.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace spacecross {

using BlockPoint = std::vector<Rational>;

class SparsePolynomial {
 public:
  using Exponents = std::vector<int>;  // one entry per variable, blocks concatenated

  SparsePolynomial() = default;
  /// Block dimensions, each >= 1.
  explicit SparsePolynomial(std::vector<int> blocks);

  const std::vector<int>& blocks() const { return blocks_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  int num_vars() const { return offsets_.empty() ? 0 : offsets_.back(); }
  int offset(int block) const { return offsets_[block]; }

  /// Adds c * x^e, merging with an existing term; zero results are dropped.
  void add_term(const Exponents& e, const Rational& c);
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// One point per block.
  Rational evaluate(const std::vector<const BlockPoint*>& point) const;
  int sign_at(const std::vector<const BlockPoint*>& point) const { return sgn(evaluate(point)); }

  SparsePolynomial scaled(const Rational& s) const;
  /// Substitutes a point for the last block; the result has one block fewer.
  SparsePolynomial substitute_last(const BlockPoint& p) const;

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.blocks_ == b.blocks_ && a.terms_ == b.terms_;
  }

 private:
  std::vector<int> blocks_;
  std::vector<int> offsets_;  // offsets_[i] = first variable of block i; back() = total
  std::map<Exponents, Rational> terms_;
};

/// Distinct monomials in block i's variables, the constant one included.
int block_term_count(const SparsePolynomial& f, int block);

/// f = f' o pi, where pi maps the last block to its non-constant monomials and
/// f' is affine in the new last block.
struct Linearization {
  std::vector<SparsePolynomial::Exponents> monomials;  // exponents within the last block
  SparsePolynomial linear;                             // blocks (d_1, ..., d_{k-1}, t)

  int dimension() const { return static_cast<int>(monomials.size()); }
  BlockPoint lift(const BlockPoint& x) const;
};

/// Verifies the identity symbolically before returning.
Linearization linearize_last_block(const SparsePolynomial& f);

/// {"blocks":[...], "monomials":[{"coeff":"p/q","exponents":{"x1.1":2,...}}]}
nlohmann::json polynomial_to_json(const SparsePolynomial& f);
SparsePolynomial polynomial_from_json(const nlohmann::json& j);

std::string to_string(const SparsePolynomial& f);

}  // namespace spacecross
