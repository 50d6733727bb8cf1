#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "betti/words.hpp"

namespace betti {

struct EnumerationLimits {
  std::int64_t max_cosets = 1'000'000;     // cap on allocated table rows (live + dead)
  std::int64_t max_deductions = 100'000'000; // cap on table definitions + deductions
};

/// Permutation action of the generators on the cosets of a subgroup.
/// Coset 0 is the subgroup itself. Complete and collapsed.
class CosetTable {
public:
  CosetTable(std::size_t generator_count, std::int32_t index,
             std::vector<std::int32_t> images);

  std::int64_t index() const { return index_; }
  std::size_t generator_count() const { return generator_count_; }

  std::int32_t act(std::int32_t coset, Letter l) const {
    return images_[static_cast<std::size_t>(coset) * 2 * generator_count_ + l];
  }
  std::int32_t trace(std::int32_t start, const Word& w) const {
    std::int32_t c = start;
    for (Letter l : w) c = act(c, l);
    return c;
  }

  bool operator==(const CosetTable&) const = default;

private:
  std::size_t generator_count_;
  std::int32_t index_;
  std::vector<std::int32_t> images_; // row-major, 2*generator_count per coset
};

inline std::int32_t trace(const CosetTable& t, std::int32_t start, const Word& w) {
  return t.trace(start, w);
}

/// HLT-style coset enumeration for the subgroup generated by subgroup_generators
/// in the group presented by pres. Coset numbering is discovery order; the
/// result is deterministic for fixed inputs and limits.
/// Throws LimitExceeded if the enumeration does not complete within limits.
CosetTable todd_coxeter(const Presentation& pres,
                        std::span<const Word> subgroup_generators,
                        const EnumerationLimits& limits = {});

/// Coset table of the normal closure N of closure_words in G: enumerates the
/// trivial subgroup of the quotient presentation, so the result is the regular
/// representation of G/N and index == |G/N|.
CosetTable normal_closure_table(const Presentation& pres,
                                std::span<const Word> closure_words,
                                const EnumerationLimits& limits = {});

/// The index-1 table (the subgroup is the whole group).
CosetTable full_group_table(const Presentation& pres);

/// True iff every subgroup generator fixes every coset.
bool is_normal(const Presentation& pres, const CosetTable& table,
               std::span<const Word> subgroup_generators);

/// Post-enumeration validity check: completeness, per-letter bijectivity,
/// transitivity from coset 0, trivial relator action, subgroup generators fix
/// coset 0. Throws std::logic_error on violation.
void check_table(const Presentation& pres, const CosetTable& table,
                 std::span<const Word> subgroup_generators);

} // namespace betti
