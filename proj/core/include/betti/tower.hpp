#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "betti/approx.hpp"
#include "betti/bounds.hpp"
#include "betti/chains.hpp"
#include "betti/words.hpp"

namespace betti {

enum class OrderStatus {
  FiniteCertified,  // witness chain stabilized: the deepest quotient is the
                    // full image of G in its pro-p completion, order exact
  FiniteStabilized, // order equal across the last two stages; evidence only
  Unresolved,       // order still growing at the deepest probed stage
};

std::string to_string(OrderStatus s);

struct OrderProbe {
  OrderStatus status = OrderStatus::Unresolved;
  std::int64_t order = 1;                 // of the image in the deepest probed quotient
  unsigned exponent_m = 0;                // order == p^m
  std::vector<std::int64_t> stage_orders; // per probed stage
};

struct StepRecord {
  unsigned k = 0;
  std::string word;
  std::string case_taken; // "case1", "case2", "case2_failed"
  OrderProbe probe;
  std::optional<unsigned> chosen_n;
  std::optional<std::string> relator;
  mpq_class vd_before, vd_after;
  CertStatus bound_status = CertStatus::CertifiedBound;
  mpq_class presentation_vd; // from-scratch stage-count bound, for reference
  bool cond_a = false, cond_b = false, cond_c = false, cond_d = false;
  unsigned cond_c_checked_length = 0;
  bool drop_within_delta = true;
  std::int64_t witness_index = 1;
};

struct TowerOptions {
  unsigned long prime = 2;
  mpq_class epsilon = mpq_class(1, 2);
  unsigned steps = 3;
  int probe_depth = 2;
  unsigned n_cap = 8;
  int chain_depth = 2;
  unsigned word_check_cap = 3;
  std::optional<mpq_class> delta; // defaults to epsilon / 2
  EnumerationLimits limits;
};

struct TowerState {
  unsigned k = 0;
  Presentation pres;
  Chain witness;
  mpq_class vd_bound;
  CertStatus bound_status = CertStatus::CertifiedBound;
  std::vector<ProvenanceStep> provenance;
  std::vector<StepRecord> ledger;
};

enum class TowerStatus { Completed, ThresholdUnreachable, LimitsExceeded };

std::string to_string(TowerStatus s);

struct TowerResult {
  TowerState state;
  TowerStatus status = TowerStatus::Completed;
  std::string message;
};

struct StepResult {
  TowerState state;
  bool ok = true;
  std::string error;
};

/// Traces f through the stage tables of the witness chain and reports the
/// order of its image in the deepest probed quotient. Never a proof of
/// infinite order; see OrderStatus.
OrderProbe order_in_tower(const TowerState& state, const Word& f, int probe_depth);

/// One step of the construction. Case 1 (finite order evidence): the
/// presentation is unchanged. Case 2: quotient by f^{p^n} for the smallest
/// n >= m keeping the propagated vd bound above threshold; fails with the
/// state unchanged (plus a failure ledger record) when no n <= n_cap works.
StepResult tower_step(const TowerState& state, const Word& f, const mpq_class& threshold,
                      const TowerOptions& options);

/// Initial state: the free group on gen_count generators x1..x{gen_count}.
TowerState initial_tower_state(unsigned gen_count, const TowerOptions& options);

/// Processes f_1 .. f_steps in enumeration order. Requires gen_count >= 2 and
/// 0 < epsilon < gen_count - 1.
TowerResult run_tower(unsigned gen_count, const TowerOptions& options);

/// Rebuilds the final presentation from a ledger and verifies the recorded
/// bound arithmetic step by step. Throws std::logic_error on mismatch.
Presentation replay_ledger(unsigned gen_count, const TowerOptions& options,
                           const std::vector<StepRecord>& ledger);

} // namespace betti
