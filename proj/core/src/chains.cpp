#include "betti/chains.hpp"

#include <stdexcept>
#include <string>

#include "betti/errors.hpp"
#include "betti/homology.hpp"

namespace betti {

std::vector<Word> derived_p_step(const Presentation& parent, const SubgroupPresentation& sub,
                                 unsigned long p) {
  (void)parent;
  std::vector<Word> out;
  const auto& gens = sub.schreier_gens;
  out.reserve(gens.size() + gens.size() * (gens.size() - 1) / 2);
  for (const auto& g : gens) out.push_back(g.parent_word.pow(static_cast<long>(p)));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t l = k + 1; l < gens.size(); ++l)
      out.push_back(commutator(gens[k].parent_word, gens[l].parent_word));
  return out;
}

namespace {

ChainStage make_stage(const Presentation& pres, unsigned long p, int depth,
                      std::vector<Word> closure_words, CosetTable table) {
  SubgroupPresentation sub = rewrite_subgroup(pres, table);
  ChainStage st{depth,
                std::move(closure_words),
                std::move(table),
                0,
                std::move(sub),
                0,
                0};
  st.index = st.table.index();
  st.b1 = b1(st.sub.presentation);
  st.b1_mod_p = b1_mod_p(st.sub.presentation, p);
  return st;
}

} // namespace

Chain build_chain(const Presentation& pres, unsigned long p, int depth,
                  const EnumerationLimits& limits) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");

  Chain chain{pres, p, {}, false, std::nullopt};
  chain.stages.push_back(make_stage(pres, p, 0, {}, full_group_table(pres)));

  for (int i = 1; i <= depth; ++i) {
    const ChainStage& prev = chain.stages.back();
    mpz_class projected = prev.index;
    mpz_class step;
    mpz_ui_pow_ui(step.get_mpz_t(), p, static_cast<unsigned long>(prev.b1_mod_p));
    projected *= step;
    if (projected > limits.max_cosets) {
      chain.truncated = true;
      chain.truncated_projected_index = projected;
      break;
    }

    std::vector<Word> closure = derived_p_step(pres, prev.sub, p);
    CosetTable table = [&] {
      try {
        return normal_closure_table(pres, closure, limits);
      } catch (const LimitExceeded&) {
        return CosetTable(0, 0, {});
      }
    }();
    if (table.index() == 0) {
      chain.truncated = true;
      chain.truncated_projected_index = projected;
      break;
    }

    if (mpz_class(table.index()) != projected)
      throw std::logic_error("index law violated at stage " + std::to_string(i) + ": got " +
                             std::to_string(table.index()) + ", projected " +
                             projected.get_str());
    for (const Word& w : closure)
      if (prev.table.trace(0, w) != 0)
        throw std::logic_error("nesting violated: stage " + std::to_string(i) +
                               " closure word leaves the previous stage subgroup");
    if (!is_normal(pres, table, closure))
      throw std::logic_error("stage table is not normal");

    chain.stages.push_back(make_stage(pres, p, i, std::move(closure), std::move(table)));
  }
  return chain;
}

} // namespace betti
