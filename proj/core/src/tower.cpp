#include "betti/tower.hpp"

#include <algorithm>
#include <stdexcept>

#include "betti/errors.hpp"

namespace betti {

std::string to_string(OrderStatus s) {
  switch (s) {
    case OrderStatus::FiniteCertified: return "finite_certified";
    case OrderStatus::FiniteStabilized: return "finite";
    case OrderStatus::Unresolved: return "unresolved";
  }
  return "?";
}

std::string to_string(TowerStatus s) {
  switch (s) {
    case TowerStatus::Completed: return "completed";
    case TowerStatus::ThresholdUnreachable: return "threshold_unreachable";
    case TowerStatus::LimitsExceeded: return "limits_exceeded";
  }
  return "?";
}

namespace {

std::int64_t image_order(const CosetTable& table, const Word& f) {
  std::int32_t c = table.trace(0, f);
  std::int64_t order = 1;
  while (c != 0) {
    c = table.trace(c, f);
    ++order;
    if (order > table.index())
      throw std::logic_error("element order exceeds the quotient order");
  }
  return order;
}

unsigned p_exponent(std::int64_t order, unsigned long p) {
  unsigned m = 0;
  while (order % static_cast<std::int64_t>(p) == 0) {
    order /= static_cast<std::int64_t>(p);
    ++m;
  }
  if (order != 1) throw std::logic_error("element order in a p-quotient is not a p-power");
  return m;
}

mpq_class stage_ratio(const ChainStage& st) {
  long def = static_cast<long>(st.sub.schreier_gens.size()) -
             static_cast<long>(st.sub.relators.size());
  mpq_class r(def - 1, st.index);
  r.canonicalize();
  return r;
}

mpq_class power_fraction(unsigned long p, unsigned n) {
  mpz_class pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
  mpq_class f(mpz_class(1), pn);
  f.canonicalize();
  return f;
}

// Condition (c) echo: no nontrivial word of length < limit lies in the stage
// subgroup (traces to coset 0 in its regular-representation table).
bool separation_check(const Presentation& pres, const CosetTable& table, unsigned limit) {
  if (limit <= 1) return true;
  for (const Word& w : enumerate_words(pres.generator_count(), limit - 1))
    if (!w.empty() && table.trace(0, w) == 0) return false;
  return true;
}

} // namespace

OrderProbe order_in_tower(const TowerState& state, const Word& f, int probe_depth) {
  OrderProbe probe;
  const auto& stages = state.witness.stages;
  std::size_t deepest = std::min<std::size_t>(stages.size() - 1,
                                              static_cast<std::size_t>(std::max(probe_depth, 0)));
  for (std::size_t i = 0; i <= deepest; ++i)
    probe.stage_orders.push_back(image_order(stages[i].table, f));
  probe.order = probe.stage_orders.back();
  probe.exponent_m = p_exponent(probe.order, state.witness.prime);

  if (stages[deepest].b1_mod_p == 0) {
    // Chain stabilized: the deepest quotient is the image of the group in its
    // pro-p completion, so the order there is the true order.
    probe.status = OrderStatus::FiniteCertified;
  } else if (deepest >= 1 && probe.stage_orders[deepest] == probe.stage_orders[deepest - 1]) {
    probe.status = OrderStatus::FiniteStabilized;
  } else {
    probe.status = OrderStatus::Unresolved;
  }
  return probe;
}

namespace {

int witness_depth(const TowerOptions& o) { return std::max(o.chain_depth, o.probe_depth); }

long p_power(unsigned long p, unsigned n) {
  mpz_class pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
  if (!pn.fits_slong_p()) throw std::invalid_argument("p^n too large");
  return pn.get_si();
}

const ChainStage& probed_stage(const TowerState& state, int probe_depth) {
  const auto& stages = state.witness.stages;
  std::size_t deepest = std::min<std::size_t>(stages.size() - 1,
                                              static_cast<std::size_t>(std::max(probe_depth, 0)));
  return stages[deepest];
}

void finish_record(StepRecord& rec, const TowerState& next, const Word& f,
                   const mpq_class& threshold, const TowerOptions& options) {
  const ChainStage& deepest = next.witness.stages.back();
  rec.witness_index = deepest.index;
  // (a) echo: the image of f in the deepest witness quotient has p-power order.
  bool p_power_order = true;
  try {
    p_exponent(image_order(deepest.table, f), next.witness.prime);
  } catch (const std::logic_error&) {
    p_power_order = false;
  }
  rec.cond_a = p_power_order;
  rec.vd_after = next.vd_bound;
  rec.cond_b = next.vd_bound > threshold;
  rec.cond_c_checked_length = std::min(next.k, options.word_check_cap);
  rec.cond_c = separation_check(next.pres, deepest.table, rec.cond_c_checked_length);
  rec.presentation_vd = vd_certificate_from_chain(next.witness).value;
}

} // namespace

StepResult tower_step(const TowerState& state, const Word& f, const mpq_class& threshold,
                      const TowerOptions& options) {
  const unsigned long p = options.prime;
  const mpq_class delta = options.delta.value_or(options.epsilon / 2);

  StepRecord rec;
  rec.k = state.k + 1;
  rec.word = print_word(f, state.pres);
  rec.probe = order_in_tower(state, f, options.probe_depth);
  rec.vd_before = state.vd_bound;

  if (rec.probe.status != OrderStatus::Unresolved) {
    // Case 1: the quotient map is the identity; only the ledger grows.
    TowerState next = state;
    next.k = state.k + 1;
    next.witness = build_chain(next.pres, p, witness_depth(options), options.limits);
    rec.case_taken = "case1";
    rec.bound_status = state.bound_status;
    rec.cond_d = true; // Ker = 1
    rec.drop_within_delta = true;
    finish_record(rec, next, f, threshold, options);
    next.ledger.push_back(rec);
    return StepResult{std::move(next), true, ""};
  }

  // Case 2: quotient by f^{p^n}, smallest n >= m that keeps the propagated
  // bound above threshold.
  const unsigned m = rec.probe.exponent_m;
  std::optional<unsigned> chosen;
  mpq_class candidate;
  for (unsigned n = m; n <= options.n_cap; ++n) {
    candidate = state.vd_bound - power_fraction(p, n);
    candidate.canonicalize();
    if (candidate > threshold) {
      chosen = n;
      break;
    }
  }
  if (!chosen) {
    TowerState next = state;
    rec.case_taken = "case2_failed";
    rec.vd_after = state.vd_bound;
    rec.bound_status = state.bound_status;
    rec.presentation_vd = vd_certificate_from_chain(state.witness).value;
    rec.witness_index = state.witness.stages.back().index;
    next.ledger.push_back(rec);
    return StepResult{std::move(next), false,
                      "ThresholdUnreachable: no n <= " + std::to_string(options.n_cap) +
                          " keeps the vd bound above " + threshold.get_str()};
  }

  const unsigned n = *chosen;
  TowerState next = state;
  next.k = state.k + 1;
  next.pres = quotient_by_power(state.pres, f, p, n);
  next.witness = build_chain(next.pres, p, witness_depth(options), options.limits);
  next.vd_bound = candidate;

  ProvenanceStep drop;
  drop.rule = "quot_drop";
  drop.inputs = {{"prev", state.vd_bound.get_str()},
                 {"p", std::to_string(p)},
                 {"n", std::to_string(n)}};
  drop.value = candidate;
  next.provenance.push_back(drop);

  // The drop is a literal Lemma-2.3 instance exactly when n is the measured
  // order exponent and the prior bound is the certified ratio of the witness
  // stage the order was measured in; otherwise the step leans on the
  // existence reasoning for large n and is only heuristic at finite depth.
  bool grounded = (n == m) && state.bound_status != CertStatus::Heuristic &&
                  state.vd_bound == stage_ratio(probed_stage(state, options.probe_depth));
  next.bound_status = grounded ? CertStatus::CertifiedBound : CertStatus::Heuristic;

  const Word relator = f.pow(p_power(p, n));
  rec.case_taken = "case2";
  rec.chosen_n = n;
  rec.relator = print_word(relator, next.pres);
  rec.bound_status = next.bound_status;
  // (d) echo: Ker(alpha_k) <= N_{k-1}, i.e. f^{p^n} lies in the previous
  // witness stage subgroup.
  rec.cond_d = probed_stage(state, options.probe_depth).table.trace(0, relator) == 0;
  rec.drop_within_delta = power_fraction(p, n) <= delta;
  finish_record(rec, next, f, threshold, options);
  next.ledger.push_back(rec);
  return StepResult{std::move(next), true, ""};
}

TowerState initial_tower_state(unsigned gen_count, const TowerOptions& options) {
  std::vector<std::string> names;
  for (unsigned i = 1; i <= gen_count; ++i) names.push_back("x" + std::to_string(i));
  Presentation free(std::move(names), {});
  Chain witness = build_chain(free, options.prime, witness_depth(options), options.limits);
  BoundCertificate initial = vd_certificate_from_chain(witness);
  TowerState state{0, std::move(free), std::move(witness), initial.value,
                   CertStatus::CertifiedBound, std::move(initial.provenance), {}};
  return state;
}

TowerResult run_tower(unsigned gen_count, const TowerOptions& options) {
  if (gen_count < 2) throw std::invalid_argument("run_tower: gen_count must be at least 2");
  if (options.epsilon <= 0 || options.epsilon >= mpq_class(static_cast<long>(gen_count) - 1))
    throw std::invalid_argument("run_tower: epsilon must satisfy 0 < epsilon < gen_count - 1");
  if (options.probe_depth < 1 || options.chain_depth < 1)
    throw std::invalid_argument("run_tower: probe_depth and chain_depth must be at least 1");

  mpq_class threshold = mpq_class(static_cast<long>(gen_count) - 1) - options.epsilon;
  threshold.canonicalize();

  TowerResult result{initial_tower_state(gen_count, options), TowerStatus::Completed, ""};

  std::size_t length = 1;
  std::vector<Word> words = enumerate_words(gen_count, length);
  while (words.size() <= options.steps)
    words = enumerate_words(gen_count, ++length);

  for (unsigned k = 1; k <= options.steps; ++k) {
    try {
      StepResult step = tower_step(result.state, words[k], threshold, options);
      result.state = std::move(step.state);
      if (!step.ok) {
        result.status = TowerStatus::ThresholdUnreachable;
        result.message = step.error;
        return result;
      }
    } catch (const LimitExceeded& e) {
      result.status = TowerStatus::LimitsExceeded;
      result.message = e.what();
      return result;
    }
  }
  return result;
}

Presentation replay_ledger(unsigned gen_count, const TowerOptions& options,
                           const std::vector<StepRecord>& ledger) {
  std::vector<std::string> names;
  for (unsigned i = 1; i <= gen_count; ++i) names.push_back("x" + std::to_string(i));
  Presentation pres(std::move(names), {});
  mpq_class bound(static_cast<long>(gen_count) - 1);
  for (const StepRecord& rec : ledger) {
    if (rec.case_taken == "case1") {
      if (rec.vd_after != bound)
        throw std::logic_error("ledger replay: case-1 step changed the bound");
      continue;
    }
    if (rec.case_taken != "case2")
      throw std::logic_error("ledger replay: unexpected case '" + rec.case_taken + "'");
    if (!rec.chosen_n) throw std::logic_error("ledger replay: case-2 step without n");
    Word f = parse_word(rec.word, pres);
    pres = quotient_by_power(pres, f, options.prime, *rec.chosen_n);
    mpq_class expect = bound - power_fraction(options.prime, *rec.chosen_n);
    expect.canonicalize();
    if (expect != rec.vd_after)
      throw std::logic_error("ledger replay: recorded bound does not reproduce at step " +
                             std::to_string(rec.k));
    bound = expect;
  }
  return pres;
}

} // namespace betti
