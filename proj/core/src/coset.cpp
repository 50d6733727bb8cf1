#include "betti/coset.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "betti/errors.hpp"

namespace betti {

CosetTable::CosetTable(std::size_t generator_count, std::int32_t index,
                       std::vector<std::int32_t> images)
    : generator_count_(generator_count), index_(index), images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(index) * 2 * generator_count)
    throw std::logic_error("coset table image array has wrong size");
}

namespace {

constexpr std::int32_t kUndefined = -1;

// HLT enumeration with union-find coincidence processing. Representatives are
// always the smallest coset in a merged class, so coset 0 never dies.
class Enumerator {
public:
  Enumerator(const Presentation& pres, std::span<const Word> subgens,
             const EnumerationLimits& limits)
      : pres_(pres), subgens_(subgens), limits_(limits),
        cols_(2 * pres.generator_count()) {
    if (limits_.max_cosets < 1)
      throw std::invalid_argument("max_cosets must be positive");
    alloc_coset();
  }

  CosetTable run() {
    for (const Word& w : subgens_)
      if (alive(0)) scan_and_fill(0, w);

    std::int32_t row = 0;
    while (true) {
      for (; row < total(); ++row) {
        if (!alive(row)) continue;
        for (const Word& r : pres_.relators()) {
          scan_and_fill(row, r);
          if (!alive(row)) break;
        }
        if (!alive(row)) continue;
        for (Letter l = 0; l < cols_; ++l)
          if (entry(row, l) == kUndefined) define(row, l);
      }
      // Coincidence processing can remove entries from rows already swept;
      // re-run from the first incomplete live row until stable.
      std::int32_t first_incomplete = kUndefined;
      for (std::int32_t c = 0; c < total() && first_incomplete == kUndefined; ++c) {
        if (!alive(c)) continue;
        for (Letter l = 0; l < cols_; ++l)
          if (entry(c, l) == kUndefined) {
            first_incomplete = c;
            break;
          }
      }
      if (first_incomplete == kUndefined) break;
      row = first_incomplete;
    }
    return compact();
  }

private:
  std::int32_t total() const { return static_cast<std::int32_t>(parent_.size()); }
  bool alive(std::int32_t c) { return rep(c) == c; }

  std::int32_t rep(std::int32_t c) {
    std::int32_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      std::int32_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  std::int32_t& entry(std::int32_t c, Letter l) {
    return table_[static_cast<std::size_t>(c) * cols_ + l];
  }

  std::int32_t alloc_coset() {
    if (total() >= limits_.max_cosets)
      throw LimitExceeded("coset enumeration exceeded max_cosets = " +
                          std::to_string(limits_.max_cosets));
    parent_.push_back(total());
    table_.resize(table_.size() + cols_, kUndefined);
    return total() - 1;
  }

  void count_deduction() {
    if (++deductions_ > limits_.max_deductions)
      throw LimitExceeded("coset enumeration exceeded max_deductions = " +
                          std::to_string(limits_.max_deductions));
  }

  std::int32_t define(std::int32_t c, Letter l) {
    std::int32_t n = alloc_coset();
    entry(c, l) = n;
    entry(n, inverse_letter(l)) = c;
    count_deduction();
    return n;
  }

  void deduce(std::int32_t a, Letter l, std::int32_t b) {
    entry(a, l) = b;
    entry(b, inverse_letter(l)) = a;
    count_deduction();
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue_.push_back(b);
  }

  // Holt-style coincidence processing: drain the queue of dead cosets, moving
  // their table entries onto representatives and recording induced merges.
  void coincidence(std::int32_t a, std::int32_t b) {
    merge(a, b);
    while (!queue_.empty()) {
      std::int32_t dead = queue_.front();
      queue_.pop_front();
      for (Letter l = 0; l < cols_; ++l) {
        std::int32_t target = entry(dead, l);
        if (target == kUndefined) continue;
        entry(target, inverse_letter(l)) = kUndefined;
        std::int32_t mu = rep(dead);
        std::int32_t nu = rep(target);
        if (entry(mu, l) != kUndefined)
          merge(nu, entry(mu, l));
        else if (entry(nu, inverse_letter(l)) != kUndefined)
          merge(mu, entry(nu, inverse_letter(l)));
        else
          deduce(mu, l, nu);
      }
    }
  }

  // Scans w from coset start, which must trace back to start; fills gaps with
  // new cosets except the final gap of one, which becomes a deduction.
  void scan_and_fill(std::int32_t start, const Word& w) {
    if (w.empty()) return;
    std::int32_t f = rep(start);
    std::int32_t b = f;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    auto at = [&](std::ptrdiff_t k) { return w[static_cast<std::size_t>(k)]; };
    while (true) {
      while (i <= j && entry(f, at(i)) != kUndefined) {
        f = entry(f, at(i));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, inverse_letter(at(j))) != kUndefined) {
        b = entry(b, inverse_letter(at(j)));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        deduce(f, at(i), b);
        return;
      }
      f = define(f, at(i));
      ++i;
    }
  }

  CosetTable compact() {
    std::vector<std::int32_t> new_id(parent_.size(), kUndefined);
    std::int32_t n = 0;
    for (std::int32_t c = 0; c < total(); ++c)
      if (alive(c)) new_id[c] = n++;
    std::vector<std::int32_t> images(static_cast<std::size_t>(n) * cols_, kUndefined);
    for (std::int32_t c = 0; c < total(); ++c) {
      if (!alive(c)) continue;
      for (Letter l = 0; l < cols_; ++l) {
        std::int32_t t = entry(c, l);
        if (t == kUndefined)
          throw std::logic_error("incomplete coset table after enumeration");
        images[static_cast<std::size_t>(new_id[c]) * cols_ + l] = new_id[rep(t)];
      }
    }
    return CosetTable(pres_.generator_count(), n, std::move(images));
  }

  const Presentation& pres_;
  std::span<const Word> subgens_;
  EnumerationLimits limits_;
  Letter cols_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> table_;
  std::deque<std::int32_t> queue_;
  std::int64_t deductions_ = 0;
};

} // namespace

CosetTable todd_coxeter(const Presentation& pres, std::span<const Word> subgroup_generators,
                        const EnumerationLimits& limits) {
  for (const Word& w : subgroup_generators)
    if (w.generator_span() > pres.generator_count())
      throw std::invalid_argument("subgroup generator uses a generator outside the presentation");
  Enumerator e(pres, subgroup_generators, limits);
  CosetTable t = e.run();
  check_table(pres, t, subgroup_generators);
  return t;
}

CosetTable normal_closure_table(const Presentation& pres,
                                std::span<const Word> closure_words,
                                const EnumerationLimits& limits) {
  std::vector<Word> extra;
  for (const Word& w : closure_words) {
    if (w.generator_span() > pres.generator_count())
      throw std::invalid_argument("closure word uses a generator outside the presentation");
    if (!cyclic_reduce(w).empty()) extra.push_back(w);
  }
  Presentation quotient = pres.with_relators(extra);
  Enumerator e(quotient, {}, limits);
  CosetTable t = e.run();
  check_table(quotient, t, {});
  return t;
}

CosetTable full_group_table(const Presentation& pres) {
  std::vector<std::int32_t> images(2 * pres.generator_count(), 0);
  return CosetTable(pres.generator_count(), 1, std::move(images));
}

bool is_normal(const Presentation& pres, const CosetTable& table,
               std::span<const Word> subgroup_generators) {
  (void)pres;
  for (const Word& h : subgroup_generators)
    for (std::int32_t c = 0; c < table.index(); ++c)
      if (table.trace(c, h) != c) return false;
  return true;
}

void check_table(const Presentation& pres, const CosetTable& table,
                 std::span<const Word> subgroup_generators) {
  const std::int32_t n = static_cast<std::int32_t>(table.index());
  const Letter cols = static_cast<Letter>(2 * pres.generator_count());
  if (n < 1) throw std::logic_error("empty coset table");
  for (Letter l = 0; l < cols; ++l) {
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (std::int32_t c = 0; c < n; ++c) {
      std::int32_t t = table.act(c, l);
      if (t < 0 || t >= n) throw std::logic_error("coset table entry out of range");
      if (table.act(t, inverse_letter(l)) != c)
        throw std::logic_error("coset table inverse arrays inconsistent");
      if (hit[static_cast<std::size_t>(t)])
        throw std::logic_error("generator action is not a bijection");
      hit[static_cast<std::size_t>(t)] = true;
    }
  }
  for (const Word& r : pres.relators())
    for (std::int32_t c = 0; c < n; ++c)
      if (table.trace(c, r) != c)
        throw std::logic_error("relator does not act trivially on the coset table");
  for (const Word& h : subgroup_generators)
    if (table.trace(0, h) != 0)
      throw std::logic_error("subgroup generator does not fix coset 0");
  // transitivity from coset 0
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::int32_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::int32_t c = stack.back();
    stack.pop_back();
    for (Letter l = 0; l < cols; ++l) {
      std::int32_t t = table.act(c, l);
      if (!seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = true;
        ++reached;
        stack.push_back(t);
      }
    }
  }
  if (reached != static_cast<std::size_t>(n))
    throw std::logic_error("coset table action is not transitive");
}

} // namespace betti
