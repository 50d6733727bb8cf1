#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "betti/coset.hpp"
#include "betti/schreier.hpp"
#include "betti/words.hpp"

namespace betti {

/// One stage of the derived p-series P_0 = G, P_{i+1} = P_i^p [P_i, P_i].
/// The table is the regular representation of G/P_i, so index == [G:P_i].
struct ChainStage {
  int depth = 0;
  std::vector<Word> closure_words; // generate P_i as a normal closure in G; empty at depth 0
  CosetTable table;
  std::int64_t index = 1;
  SubgroupPresentation sub;
  long b1 = 0;
  long b1_mod_p = 0;
};

struct Chain {
  Presentation base;
  unsigned long prime = 2;
  std::vector<ChainStage> stages;
  bool truncated = false;
  std::optional<mpz_class> truncated_projected_index; // next index that exceeded limits
};

/// Closure words for the next stage: {y^p} for every Schreier generator y of
/// the stage subgroup plus {[y_k, y_l] : k < l}, expanded to parent words.
/// Their normal closure in G is the kernel of P_i -> H1(P_i; F_p).
std::vector<Word> derived_p_step(const Presentation& parent, const SubgroupPresentation& sub,
                                 unsigned long p);

/// Stages 0..depth of the derived p-series; stage 0 is G itself. Verifies
/// nesting, normality and the index law [G:P_{i+1}] = [G:P_i] * p^{b1_mod_p(P_i)}
/// at every stage. When the projected next index exceeds limits the chain is
/// returned truncated rather than failing.
Chain build_chain(const Presentation& pres, unsigned long p, int depth,
                  const EnumerationLimits& limits = {});

} // namespace betti
