#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "betti/chains.hpp"

namespace betti {

/// Report taxonomy: EXACT reference values, certified inequalities, and
/// finite-depth evidence that proves nothing by itself.
enum class CertStatus { Exact, CertifiedBound, Heuristic };

std::string to_string(CertStatus s);

struct ApproxStage {
  int depth = 0;
  std::int64_t index = 1;
  long b1 = 0;
  mpq_class ratio; // b1 / index, exact
};

struct Theorem1Certificate {
  mpq_class value;                        // never exceeds any computed tail ratio
  CertStatus status = CertStatus::Heuristic;
  std::optional<mpq_class> reference_value; // known first L2-betti number, if flagged
};

struct ApproxReport {
  std::vector<ApproxStage> stages;
  mpq_class limsup_estimate; // max ratio over stages >= 1 (stage 0 when depth 0)
  Theorem1Certificate certificate;
  bool truncated = false;
};

struct ApproxOptions {
  /// Known exact first L2-betti number for groups where it is a reference
  /// value (free: d-1, Z^2: 0, genus-g surface: 2g-2). Reported, not derived.
  std::optional<mpq_class> known_b1_squared;
};

ApproxReport approx_sequence(const Chain& chain, const ApproxOptions& options = {});

/// Same computation over bare stage data (depth, index, b1), e.g. read back
/// from a serialized chain.
ApproxReport approx_sequence(std::vector<ApproxStage> stages, bool truncated,
                             const ApproxOptions& options = {});

struct TorsionObservation {
  bool flagged = false;
  mpq_class epsilon;
  std::string note;
};

/// Flags chains whose computed tail ratios all sit at or below epsilon.
/// Annotation only; torsion groups have limit 0 along any such chain.
TorsionObservation torsion_observation(const Chain& chain,
                                       const mpq_class& epsilon = mpq_class(1, 100));
TorsionObservation torsion_observation(const std::vector<ApproxStage>& stages,
                                       const mpq_class& epsilon = mpq_class(1, 100));

} // namespace betti
