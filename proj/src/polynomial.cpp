#include "spacecross/polynomial.hpp"

#include "spacecross/errors.hpp"
#include "spacecross/graph.hpp"

#include <set>

namespace spacecross {

SparsePolynomial::SparsePolynomial(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  offsets_.push_back(0);
  for (int d : blocks_) {
    if (d < 1) throw ValidationError("block dimensions must be positive");
    offsets_.push_back(offsets_.back() + d);
  }
}

void SparsePolynomial::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != num_vars())
    throw ValidationError("monomial has " + std::to_string(e.size()) + " exponents, expected " +
                          std::to_string(num_vars()));
  for (int x : e)
    if (x < 0) throw ValidationError("negative exponent");
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

namespace {

Rational power(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

Rational SparsePolynomial::evaluate(const std::vector<const BlockPoint*>& point) const {
  if (static_cast<int>(point.size()) != num_blocks()) throw ValidationError("one point per block expected");
  std::vector<const Rational*> vars;
  vars.reserve(num_vars());
  for (int b = 0; b < num_blocks(); ++b) {
    if (static_cast<int>(point[b]->size()) != blocks_[b]) throw ValidationError("point dimension mismatch");
    for (const auto& x : *point[b]) vars.push_back(&x);
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) t *= power(*vars[v], e[v]);
    sum += t;
  }
  return sum;
}

SparsePolynomial SparsePolynomial::scaled(const Rational& s) const {
  SparsePolynomial out(blocks_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * s);
  return out;
}

SparsePolynomial SparsePolynomial::substitute_last(const BlockPoint& p) const {
  if (num_blocks() < 2) throw ValidationError("substitution needs at least two blocks");
  const int last = num_blocks() - 1;
  if (static_cast<int>(p.size()) != blocks_[last]) throw ValidationError("point dimension mismatch");
  SparsePolynomial out(std::vector<int>(blocks_.begin(), blocks_.end() - 1));
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < blocks_[last]; ++v) t *= power(p[v], e[offsets_[last] + v]);
    out.add_term(Exponents(e.begin(), e.begin() + offsets_[last]), t);
  }
  return out;
}

int block_term_count(const SparsePolynomial& f, int block) {
  if (block < 0 || block >= f.num_blocks()) throw ValidationError("block index out of range");
  std::set<SparsePolynomial::Exponents> seen;
  const int lo = f.offset(block), hi = f.offset(block + 1);
  for (const auto& [e, c] : f.terms()) seen.emplace(e.begin() + lo, e.begin() + hi);
  return static_cast<int>(seen.size());
}

BlockPoint Linearization::lift(const BlockPoint& x) const {
  BlockPoint out;
  out.reserve(monomials.size());
  for (const auto& m : monomials) {
    if (m.size() != x.size()) throw ValidationError("point dimension mismatch");
    Rational t = 1;
    for (std::size_t v = 0; v < m.size(); ++v) t *= power(x[v], m[v]);
    out.push_back(std::move(t));
  }
  return out;
}

Linearization linearize_last_block(const SparsePolynomial& f) {
  if (f.num_blocks() < 1) throw ValidationError("polynomial has no blocks");
  const int last = f.num_blocks() - 1;
  const int lo = f.offset(last);
  std::map<SparsePolynomial::Exponents, int> index;  // non-constant tail monomial -> 1-based slot
  for (const auto& [e, c] : f.terms()) {
    SparsePolynomial::Exponents tail(e.begin() + lo, e.end());
    bool constant = true;
    for (int x : tail) constant = constant && x == 0;
    if (!constant) index.emplace(std::move(tail), 0);
  }
  Linearization lin;
  for (auto& [tail, slot] : index) {
    lin.monomials.push_back(tail);
    slot = static_cast<int>(lin.monomials.size());
  }
  const int t = lin.dimension();
  std::vector<int> blocks(f.blocks().begin(), f.blocks().end() - 1);
  if (t > 0) blocks.push_back(t);
  if (blocks.empty()) blocks.push_back(1);  // a constant in one variable-free block
  lin.linear = SparsePolynomial(blocks);
  for (const auto& [e, c] : f.terms()) {
    SparsePolynomial::Exponents head(e.begin(), e.begin() + lo);
    SparsePolynomial::Exponents tail(e.begin() + lo, e.end());
    head.resize(lin.linear.num_vars(), 0);
    auto it = index.find(tail);
    if (it != index.end()) head[lo + it->second - 1] = 1;
    lin.linear.add_term(head, c);
  }

  // f = f' o pi, checked by composing symbolically
  SparsePolynomial back(f.blocks());
  for (const auto& [e, c] : lin.linear.terms()) {
    SparsePolynomial::Exponents full(e.begin(), e.begin() + lo);
    full.resize(f.num_vars(), 0);
    for (int r = 0; r < t; ++r)
      if (e[lo + r] == 1)
        for (std::size_t v = 0; v < lin.monomials[r].size(); ++v) full[lo + v] += lin.monomials[r][v];
    back.add_term(full, c);
  }
  if (!(back == f) && !(f.num_blocks() == 1 && t == 0))
    throw InvariantFailure("linearisation does not reproduce the polynomial");
  return lin;
}

namespace {

std::string var_name(int block, int coord) { return "x" + std::to_string(block + 1) + "." + std::to_string(coord + 1); }

}  // namespace

nlohmann::json polynomial_to_json(const SparsePolynomial& f) {
  nlohmann::json mons = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) {
    nlohmann::json ex = nlohmann::json::object();
    for (int b = 0; b < f.num_blocks(); ++b)
      for (int v = 0; v < f.blocks()[b]; ++v)
        if (e[f.offset(b) + v] != 0) ex[var_name(b, v)] = e[f.offset(b) + v];
    mons.push_back({{"coeff", rational_to_json(c)}, {"exponents", ex}});
  }
  return {{"blocks", f.blocks()}, {"monomials", mons}};
}

SparsePolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("blocks") || !j.contains("monomials"))
    throw ValidationError("polynomial needs \"blocks\" and \"monomials\"");
  std::vector<int> blocks;
  for (const auto& b : j.at("blocks")) {
    if (!b.is_number_integer()) throw ValidationError("blocks must be integers");
    blocks.push_back(b.get<int>());
  }
  SparsePolynomial f(blocks);
  std::map<std::string, int> slot;
  for (int b = 0; b < f.num_blocks(); ++b)
    for (int v = 0; v < blocks[b]; ++v) slot[var_name(b, v)] = f.offset(b) + v;
  int k = 0;
  for (const auto& m : j.at("monomials")) {
    const std::string where = "monomials[" + std::to_string(k++) + "]";
    if (!m.is_object() || !m.contains("coeff")) throw ValidationError(where + " needs \"coeff\"");
    SparsePolynomial::Exponents e(f.num_vars(), 0);
    if (m.contains("exponents")) {
      for (const auto& [name, val] : m.at("exponents").items()) {
        auto it = slot.find(name);
        if (it == slot.end()) throw ValidationError(where + ": unknown variable " + name);
        if (!val.is_number_integer() || val.get<int>() < 0)
          throw ValidationError(where + ": exponent of " + name + " must be a non-negative integer");
        e[it->second] = val.get<int>();
      }
    }
    f.add_term(e, rational_from_json(m.at("coeff"), where + ".coeff"));
  }
  return f;
}

std::string to_string(const SparsePolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    for (int b = 0; b < f.num_blocks(); ++b)
      for (int v = 0; v < f.blocks()[b]; ++v) {
        const int x = e[f.offset(b) + v];
        if (x == 0) continue;
        out += "*" + var_name(b, v);
        if (x > 1) out += "^" + std::to_string(x);
      }
  }
  return out;
}

}  // namespace spacecross
