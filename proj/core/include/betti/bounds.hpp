#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "betti/chains.hpp"
#include "betti/words.hpp"

namespace betti {

enum class CertificateKind {
  DefLower,
  Supermult,
  L23Drop,
  VdLower,
  B1PropCompletion,
  B12PropCompletion,
};

std::string to_string(CertificateKind k);

/// One replayable rule application; inputs are (name, exact value) pairs.
struct ProvenanceStep {
  std::string rule;
  std::vector<std::pair<std::string, std::string>> inputs;
  mpq_class value;
};

/// Every certificate states a ">=" bound and carries the rule chain that
/// produced it; replay() recomputes the chain and must reproduce the value
/// bit for bit.
struct BoundCertificate {
  CertificateKind kind = CertificateKind::DefLower;
  mpq_class value;
  bool propagated = false;  // statement about the unrepresented pro-p completion
  bool informative = true;  // false when the bound is <= 0 and says nothing
  bool truncated = false;   // built from a truncated chain
  std::vector<ProvenanceStep> provenance;
};

/// d - r for the given presentation; a lower bound on the deficiency.
long def_lower_bound(const Presentation& pres);

/// def_N - index/m, the deficiency drop when quotienting by g^m where m is the
/// order of gN in G/N. Exact rational; m = 0 rejected, requires index >= m >= 1.
mpq_class l23_drop(const mpq_class& def_n, const mpq_class& index, const mpq_class& m);

/// Max over the depth-D derived p-chain stages of (def_bound(H) - 1)/[G:H],
/// def bounds taken from the rewritten presentation counts. A lower bound on
/// the p-virtual deficiency (sup over a computed subfamily).
BoundCertificate vd_lower_bound(const Presentation& pres, unsigned long p, int depth,
                                const EnumerationLimits& limits = {});

/// Same certificate computed from an already-built chain.
BoundCertificate vd_certificate_from_chain(const Chain& chain);

/// pres with the additional relator g^{p^n}; def_lower_bound drops by exactly 1.
Presentation quotient_by_power(const Presentation& pres, const Word& g, unsigned long p,
                               unsigned n);

/// Propagated statements about the pro-p completion:
/// b1(G^_p) >= def_bound and b1^(2)(G^_p) >= vd_bound.
std::pair<BoundCertificate, BoundCertificate> completion_certificates(long def_bound,
                                                                      const mpq_class& vd_bound);

/// Recomputes the provenance chain; throws std::logic_error if any recorded
/// value (or the final certificate value) fails to reproduce.
mpq_class replay(const BoundCertificate& cert);

} // namespace betti
