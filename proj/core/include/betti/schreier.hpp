#pragma once

#include <cstdint>
#include <vector>

#include "betti/coset.hpp"
#include "betti/words.hpp"

namespace betti {

/// A nontrivial Schreier generator: the pair (coset t, generator x) with
/// defining parent word t x (t.x)^-1.
struct SchreierGenerator {
  std::int32_t coset = 0;
  std::uint32_t generator = 0;
  Word parent_word;
};

/// Presentation of a finite-index subgroup obtained by Reidemeister-Schreier
/// rewriting. For a parent with d generators and r relators and index j:
/// schreier_gens.size() == (d-1)j+1 and relators.size() == r*j.
struct SubgroupPresentation {
  Presentation parent;
  CosetTable table;
  std::vector<Word> transversal;               // prefix-closed, transversal[0] = identity
  std::vector<SchreierGenerator> schreier_gens;
  std::vector<Word> relators;                  // rewritten R_i at coset c, order (i, c); freely reduced
  Presentation presentation;                   // induced presentation over y0, y1, ...
};

/// Prefix-closed transversal via breadth-first search from coset 0 over the
/// positive generator letters in declaration order. transversal[c] maps coset
/// 0 to coset c. Requires a complete table.
std::vector<Word> schreier_transversal(const CosetTable& table);

SubgroupPresentation rewrite_subgroup(const Presentation& parent, const CosetTable& table);

/// Substitutes each subgroup generator by its parent word and freely reduces.
Word expand_to_parent(const SubgroupPresentation& sub, const Word& subgroup_word);

/// Supermultiplicativity ledger: (parent_def_bound - 1) * index + 1, a
/// certified deficiency lower bound for an index-j subgroup.
long deficiency_ledger(long parent_def_bound, std::int64_t index);

} // namespace betti
