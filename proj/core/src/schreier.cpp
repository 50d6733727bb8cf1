#include "betti/schreier.hpp"

#include <stdexcept>
#include <string>

namespace betti {

std::vector<Word> schreier_transversal(const CosetTable& table) {
  const std::size_t n = static_cast<std::size_t>(table.index());
  const std::size_t d = table.generator_count();
  std::vector<Word> transversal(n);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::vector<std::int32_t> frontier{0};
  std::size_t found = 1;
  while (!frontier.empty() && found < n) {
    std::vector<std::int32_t> next;
    for (std::int32_t c : frontier) {
      for (std::uint32_t g = 0; g < d; ++g) {
        std::int32_t t = table.act(c, make_letter(g));
        if (!seen[static_cast<std::size_t>(t)]) {
          seen[static_cast<std::size_t>(t)] = true;
          transversal[static_cast<std::size_t>(t)] =
              transversal[static_cast<std::size_t>(c)] * Word::single(make_letter(g));
          next.push_back(t);
          ++found;
        }
      }
    }
    frontier = std::move(next);
  }
  if (found != n)
    throw std::logic_error("positive-letter orbit of coset 0 is not the whole table");
  return transversal;
}

SubgroupPresentation rewrite_subgroup(const Presentation& parent, const CosetTable& table) {
  const std::size_t j = static_cast<std::size_t>(table.index());
  const std::size_t d = parent.generator_count();
  const std::size_t r = parent.relator_count();
  std::vector<Word> transversal = schreier_transversal(table);

  // Pair (c, g) is a tree edge iff transversal[c.g] is literally transversal[c]
  // followed by g; those pairs have trivial Schreier generators and are skipped.
  std::vector<std::int32_t> gen_index(j * d, -1);
  std::vector<SchreierGenerator> gens;
  for (std::int32_t c = 0; c < table.index(); ++c) {
    for (std::uint32_t g = 0; g < d; ++g) {
      std::int32_t t = table.act(c, make_letter(g));
      const Word step = transversal[static_cast<std::size_t>(c)] * Word::single(make_letter(g));
      if (transversal[static_cast<std::size_t>(t)] == step) continue;
      gen_index[static_cast<std::size_t>(c) * d + g] = static_cast<std::int32_t>(gens.size());
      Word w = step * transversal[static_cast<std::size_t>(t)].inverted();
      gens.push_back(SchreierGenerator{c, g, std::move(w)});
    }
  }
  if (d >= 1 && gens.size() != (d - 1) * j + 1)
    throw std::logic_error("Schreier generator count is not (d-1)j+1: got " +
                           std::to_string(gens.size()));

  // Rewriting map: scanning a word from coset c emits, letter by letter, the
  // Schreier generator of the traversed pair (or nothing on tree edges).
  auto rewrite_at = [&](std::int32_t start, const Word& w) {
    std::vector<Letter> out;
    std::int32_t cur = start;
    for (Letter l : w) {
      if (!is_inverse(l)) {
        std::int32_t k = gen_index[static_cast<std::size_t>(cur) * d + generator_of(l)];
        if (k >= 0) out.push_back(make_letter(static_cast<std::uint32_t>(k)));
        cur = table.act(cur, l);
      } else {
        std::int32_t prev = table.act(cur, l);
        std::int32_t k = gen_index[static_cast<std::size_t>(prev) * d + generator_of(l)];
        if (k >= 0) out.push_back(make_letter(static_cast<std::uint32_t>(k), true));
        cur = prev;
      }
    }
    return Word::reduce(out);
  };

  std::vector<Word> relators;
  relators.reserve(r * j);
  for (std::size_t i = 0; i < r; ++i)
    for (std::int32_t c = 0; c < table.index(); ++c)
      relators.push_back(rewrite_at(c, parent.relators()[i]));
  if (relators.size() != r * j)
    throw std::logic_error("rewritten relator count is not r*j");

  std::vector<std::string> names;
  names.reserve(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) names.push_back("y" + std::to_string(k));
  std::vector<Word> induced = relators; // Presentation cyclically reduces on ingestion
  Presentation sub_pres(std::move(names), std::move(induced));

  return SubgroupPresentation{parent, table, std::move(transversal), std::move(gens),
                              std::move(relators), std::move(sub_pres)};
}

Word expand_to_parent(const SubgroupPresentation& sub, const Word& subgroup_word) {
  std::vector<Letter> raw;
  for (Letter l : subgroup_word) {
    const Word& base = sub.schreier_gens[generator_of(l)].parent_word;
    if (is_inverse(l)) {
      Word inv = base.inverted();
      raw.insert(raw.end(), inv.begin(), inv.end());
    } else {
      raw.insert(raw.end(), base.begin(), base.end());
    }
  }
  return Word::reduce(raw);
}

long deficiency_ledger(long parent_def_bound, std::int64_t index) {
  if (index < 1) throw std::invalid_argument("index must be at least 1");
  return (parent_def_bound - 1) * static_cast<long>(index) + 1;
}

} // namespace betti
