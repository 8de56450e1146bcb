#include "spacecross/sametype.hpp"

#include "spacecross/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>

namespace spacecross {

Integer same_type_epsilon_exponent(const std::vector<SparsePolynomial>& polys) {
  Integer total = 0;
  for (const auto& f : polys) {
    unsigned long t = 0;
    for (int i = 1; i < f.num_blocks(); ++i) t += block_term_count(f, i);
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, t);
    total += p;
  }
  return total;
}

bool meets_epsilon(std::size_t size, std::size_t total, const Integer& exponent) {
  if (size >= total) return true;
  // 3^41 > 2^64 > total, so beyond that any non-empty subset qualifies
  if (exponent > 40) return size >= 1;
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, exponent.get_ui());
  return Integer(static_cast<unsigned long>(size)) * p >= Integer(static_cast<unsigned long>(total));
}

namespace {

void check_shapes(const std::vector<PointMultiset>& sets, const std::vector<SparsePolynomial>& polys) {
  if (sets.empty()) throw PreconditionViolated("at least one multiset is required");
  for (const auto& s : sets) s.validate();
  for (std::size_t j = 0; j < polys.size(); ++j) {
    if (polys[j].num_blocks() != static_cast<int>(sets.size()))
      throw ValidationError("polynomial " + std::to_string(j) + " has " + std::to_string(polys[j].num_blocks()) +
                            " blocks for " + std::to_string(sets.size()) + " multisets");
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (polys[j].blocks()[i] != sets[i].dim)
        throw ValidationError("polynomial " + std::to_string(j) + " block " + std::to_string(i) +
                              " does not match the multiset dimension");
  }
}

struct Refiner {
  const std::vector<PointMultiset>& sets;
  std::vector<std::vector<int>>& keep;
  int partitions = 0;
  bool perturbed = false;

  // Shrinks keep[0..k) so that f (over the first k blocks) is sign-constant.
  int refine(int k, const SparsePolynomial& f) {
    if (k == 1) return majority(f);
    const Linearization lin = linearize_last_block(f);
    const int t = lin.dimension();
    const auto& last = sets[k - 1];
    auto& kept = keep[k - 1];
    if (t == 0) return refine(k - 1, f.substitute_last(BlockPoint(last.dim, Rational(0))));
    if (t > 2)
      throw PreconditionViolated("block " + std::to_string(k) + " linearises to dimension " + std::to_string(t) +
                                 "; only 1 and 2 are supported");
    if (static_cast<int>(kept.size()) < (1 << t)) {
      // too few points to partition; a single point meets any epsilon bound
      kept.resize(1);
      return refine(k - 1, f.substitute_last(last.points[kept[0]]));
    }

    PointMultiset lifted{t, {}};
    for (int i : kept) lifted.points.push_back(lin.lift(last.points[i]));
    const YaoYaoPartition part = yao_yao_partition(lifted);
    ++partitions;
    perturbed = perturbed || part.perturbed;

    std::vector<int> eps;
    for (const auto& v : part.vertices) eps.push_back(refine(k - 1, lin.linear.substitute_last(v)));

    // f' is affine in the lifted block, so on a simplex whose vertex signs
    // agree it is a convex combination of the vertex polynomials
    std::vector<int> best;
    int best_sign = 0;
    bool any = false;
    for (int c = 0; c < static_cast<int>(part.cells.size()); ++c) {
      const auto& sv = part.cells[c].simplex;
      bool pos = true, neg = true;
      for (int v : sv) {
        pos = pos && eps[v] >= 0;
        neg = neg && eps[v] <= 0;
      }
      if (!pos && !neg) continue;
      const int s = pos ? 1 : -1;
      std::vector<int> face, rest;
      for (int i : part.cells[c].members) {
        const auto w = part.barycentric(c, lifted.points[i]);
        bool inside = true, on_face = true;
        for (std::size_t v = 0; v < w.size(); ++v) {
          inside = inside && sgn(w[v]) >= 0;
          if (eps[sv[v]] != 0) on_face = on_face && sgn(w[v]) == 0;
        }
        if (!inside) continue;  // only possible for a perturbed partition
        (on_face ? face : rest).push_back(i);
      }
      const bool take_face = face.size() >= rest.size();
      auto& chosen = take_face ? face : rest;
      if (!any || chosen.size() > best.size()) {
        best = std::move(chosen);
        best_sign = take_face ? 0 : s;
        any = true;
      }
    }
    if (!any) throw InvariantFailure("no simplex of the partition lies in a closed sign halfspace");
    if (best.empty()) throw InvariantFailure("the selected simplex holds no points");
    std::vector<int> next;
    for (int i : best) next.push_back(kept[i]);
    kept = std::move(next);
    return best_sign;
  }

  int majority(const SparsePolynomial& f) {
    std::vector<int> groups[3];  // -1, 0, +1
    for (int i : keep[0]) groups[f.sign_at({&sets[0].points[i]}) + 1].push_back(i);
    auto& neg = groups[0];
    auto& zero = groups[1];
    auto& pos = groups[2];
    // nonzero before zero; a +/- tie goes to the group with the smaller first
    // index, which is unchanged when every polynomial is negated
    int s = 1;
    if (neg.size() > pos.size() || (neg.size() == pos.size() && !neg.empty() && neg.front() < pos.front())) s = -1;
    auto* pick = s > 0 ? &pos : &neg;
    if (zero.size() > pick->size()) {
      pick = &zero;
      s = 0;
    }
    keep[0] = std::move(*pick);
    return s;
  }
};

}  // namespace

SameTypeResult same_type_refine(const std::vector<PointMultiset>& sets, const std::vector<SparsePolynomial>& polys) {
  check_shapes(sets, polys);
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i].size() == 0) throw PreconditionViolated("multiset " + std::to_string(i) + " is empty");

  SameTypeResult out;
  out.retained.resize(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (int p = 0; p < sets[i].size(); ++p) out.retained[i].push_back(p);
  Refiner r{sets, out.retained};
  for (const auto& f : polys) {
    // a polynomial that is already constant on the current product costs nothing
    std::vector<int> sign;
    if (sign_constant(sets, {f}, out.retained, &sign))
      out.signs.push_back(sign[0]);
    else
      out.signs.push_back(r.refine(static_cast<int>(sets.size()), f));
  }
  for (auto& v : out.retained) std::sort(v.begin(), v.end());
  out.partitions_built = r.partitions;
  out.perturbed = r.perturbed;

  std::vector<int> observed;
  if (!sign_constant(sets, polys, out.retained, &observed) || observed != out.signs)
    throw InvariantFailure("refined subsets are not sign-constant");
  out.epsilon_exponent = same_type_epsilon_exponent(polys);
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (!meets_epsilon(out.retained[i].size(), sets[i].size(), out.epsilon_exponent))
      throw InvariantFailure("refined multiset " + std::to_string(i) + " is smaller than the epsilon bound");
  return out;
}

bool sign_constant(const std::vector<PointMultiset>& sets, const std::vector<SparsePolynomial>& polys,
                   const std::vector<std::vector<int>>& chosen, std::vector<int>* signs) {
  check_shapes(sets, polys);
  const int k = static_cast<int>(sets.size());
  long total = 1;
  for (const auto& c : chosen) total *= static_cast<long>(c.size());
  if (signs) signs->assign(polys.size(), 0);
  if (total == 0) return true;

  auto tuple = [&](long flat) {
    std::vector<const BlockPoint*> pt(k);
    for (int b = k - 1; b >= 0; --b) {
      const long n = static_cast<long>(chosen[b].size());
      pt[b] = &sets[b].points[chosen[b][flat % n]];
      flat /= n;
    }
    return pt;
  };
  for (std::size_t j = 0; j < polys.size(); ++j) {
    const int ref = polys[j].sign_at(tuple(0));
    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(static)
    for (long t = 1; t < total; ++t) {
      if (!ok.load(std::memory_order_relaxed)) continue;
      if (polys[j].sign_at(tuple(t)) != ref) ok.store(false, std::memory_order_relaxed);
    }
    if (!ok) return false;
    if (signs) (*signs)[j] = ref;
  }
  return true;
}

double brute_force_search_space(const std::vector<PointMultiset>& sets, const std::vector<int>& sizes) {
  double space = 1;
  for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
    const int n = sets[i].size(), s = sizes[i];
    if (s < 0 || s > n) return 0;
    double c = 1;
    for (int r = 0; r < s; ++r) c = c * (n - r) / (r + 1);
    space *= c;
  }
  return space;
}

namespace {

class Oracle {
 public:
  Oracle(const std::vector<PointMultiset>& sets, const std::vector<SparsePolynomial>& polys,
         const std::vector<int>& sizes)
      : sets_(sets), polys_(polys), sizes_(sizes), k_(static_cast<int>(sets.size())), chosen_(k_) {
    double cells = 1;
    for (const auto& s : sets) cells *= s.size();
    if (cells * polys.size() <= 2e7) build_table();
  }

  std::optional<std::vector<std::vector<int>>> run() {
    if (choose_block(0)) return chosen_;
    return std::nullopt;
  }

 private:
  using Pattern = std::vector<int>;

  void build_table() {
    long cells = 1;
    for (const auto& s : sets_) cells *= s.size();
    table_.assign(polys_.size(), std::vector<signed char>(cells));
    for (std::size_t j = 0; j < polys_.size(); ++j) {
#pragma omp parallel for schedule(dynamic, 64)
      for (long flat = 0; flat < cells; ++flat) {
        std::vector<const BlockPoint*> pt(k_);
        long rest = flat;
        for (int b = k_ - 1; b >= 0; --b) {
          pt[b] = &sets_[b].points[rest % sets_[b].size()];
          rest /= sets_[b].size();
        }
        table_[j][flat] = static_cast<signed char>(polys_[j].sign_at(pt));
      }
    }
  }

  int sign(std::size_t j, const std::vector<int>& idx) const {
    if (!table_.empty()) {
      long flat = 0;
      for (int b = 0; b < k_; ++b) flat = flat * sets_[b].size() + idx[b];
      return table_[j][flat];
    }
    std::vector<const BlockPoint*> pt(k_);
    for (int b = 0; b < k_; ++b) pt[b] = &sets_[b].points[idx[b]];
    return polys_[j].sign_at(pt);
  }

  // Blocks before the last head block are enumerated without pruning.
  bool choose_block(int b) {
    if (b >= k_ - 1 || k_ == 1) return group_last();
    const int n = sets_[b].size(), s = sizes_[b];
    if (b == k_ - 2) {
      chosen_[b].clear();
      const int m = sets_[k_ - 1].size();
      return grow(0, std::vector<Pattern>(m), std::vector<char>(m, 1));
    }
    std::vector<int> comb(s);
    for (int i = 0; i < s; ++i) comb[i] = i;
    while (true) {
      chosen_[b] = comb;
      if (choose_block(b + 1)) return true;
      int i = s - 1;
      while (i >= 0 && comb[i] == n - s + i) --i;
      if (i < 0) return false;
      ++comb[i];
      for (int r = i + 1; r < s; ++r) comb[r] = comb[r - 1] + 1;
    }
  }

  // Head tuples over chosen_[0..k-2) extended by x in block k-2.
  template <class F>
  void for_each_head(int x, F&& visit) const {
    std::vector<int> idx(k_, 0);
    idx[k_ - 2] = x;
    long total = 1;
    for (int b = 0; b < k_ - 2; ++b) total *= static_cast<long>(chosen_[b].size());
    for (long t = 0; t < total; ++t) {
      long rest = t;
      for (int b = k_ - 3; b >= 0; --b) {
        idx[b] = chosen_[b][rest % chosen_[b].size()];
        rest /= chosen_[b].size();
      }
      visit(idx);
    }
  }

  bool best_group(const std::vector<Pattern>& pattern, const std::vector<char>& alive, std::vector<int>* out) const {
    std::map<Pattern, std::vector<int>> groups;
    for (std::size_t y = 0; y < alive.size(); ++y)
      if (alive[y]) groups[pattern[y]].push_back(static_cast<int>(y));
    for (auto& [p, ys] : groups)
      if (static_cast<int>(ys.size()) >= sizes_[k_ - 1]) {
        if (out) *out = std::vector<int>(ys.begin(), ys.begin() + sizes_[k_ - 1]);
        return true;
      }
    return false;
  }

  // Chooses block k-2 incrementally, pruning when no sign pattern of the
  // last block can still reach its target size.
  bool grow(int start, std::vector<Pattern> pattern, std::vector<char> alive) {
    const int b = k_ - 2;
    const int n = sets_[b].size(), s = sizes_[b];
    if (static_cast<int>(chosen_[b].size()) == s) {
      std::vector<int> last;
      if (!best_group(pattern, alive, &last)) return false;
      chosen_[k_ - 1] = std::move(last);
      return true;
    }
    for (int x = start; x + (s - static_cast<int>(chosen_[b].size())) <= n; ++x) {
      auto p2 = pattern;
      auto a2 = alive;
      for (std::size_t y = 0; y < a2.size(); ++y) {
        if (!a2[y]) continue;
        for_each_head(x, [&](std::vector<int> idx) {
          if (!a2[y]) return;
          idx[k_ - 1] = static_cast<int>(y);
          Pattern cur(polys_.size());
          for (std::size_t j = 0; j < polys_.size(); ++j) cur[j] = sign(j, idx);
          if (p2[y].empty())
            p2[y] = std::move(cur);
          else if (p2[y] != cur)
            a2[y] = 0;
        });
      }
      if (!best_group(p2, a2, nullptr)) continue;
      chosen_[b].push_back(x);
      if (grow(x + 1, std::move(p2), std::move(a2))) return true;
      chosen_[b].pop_back();
    }
    return false;
  }

  // k = 1: group the only multiset by sign pattern.
  bool group_last() {
    const int m = sets_[0].size();
    std::vector<Pattern> pattern(m, Pattern(polys_.size()));
    for (int y = 0; y < m; ++y)
      for (std::size_t j = 0; j < polys_.size(); ++j) pattern[y][j] = sign(j, {y});
    std::vector<int> last;
    if (!best_group(pattern, std::vector<char>(m, 1), &last)) return false;
    chosen_[0] = std::move(last);
    return true;
  }

  const std::vector<PointMultiset>& sets_;
  const std::vector<SparsePolynomial>& polys_;
  const std::vector<int>& sizes_;
  int k_;
  std::vector<std::vector<int>> chosen_;
  std::vector<std::vector<signed char>> table_;
};

}  // namespace

std::optional<std::vector<std::vector<int>>> brute_force_same_type(const std::vector<PointMultiset>& sets,
                                                                   const std::vector<SparsePolynomial>& polys,
                                                                   const std::vector<int>& sizes, double limit) {
  check_shapes(sets, polys);
  if (sizes.size() != sets.size()) throw ValidationError("one target size per multiset expected");
  for (int s : sizes)
    if (s < 0) throw ValidationError("target sizes must be non-negative");
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sizes[i] > sets[i].size()) return std::nullopt;
  if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s == 0; }))
    return std::vector<std::vector<int>>(sets.size());  // an empty product is vacuously constant
  if (brute_force_search_space(sets, sizes) > limit)
    throw PreconditionViolated("brute-force search space exceeds " + std::to_string(static_cast<long>(limit)));
  return Oracle(sets, polys, sizes).run();
}

}  // namespace spacecross
