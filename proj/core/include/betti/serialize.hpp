#pragma once

#include <string>
#include <vector>

#include "betti/approx.hpp"
#include "betti/bounds.hpp"
#include "betti/chains.hpp"
#include "betti/coset.hpp"
#include "betti/homology.hpp"
#include "betti/schreier.hpp"
#include "betti/tower.hpp"

namespace betti {

// Deterministic serializers: fixed key order, no timestamps; exact values as
// "p/q" strings with decimals only in presentation-layer fields. All outputs
// end with a newline.

std::string coset_table_json(const Presentation& pres, const CosetTable& table);
std::string presentation_json(const Presentation& pres);
std::string subgroup_ledger_json(const SubgroupPresentation& sub);
std::string abelian_invariants_json(const AbelianInvariants& inv,
                                    const std::vector<unsigned long>& primes);
std::string chain_json(const Chain& chain);
std::string chain_csv(const Chain& chain);
std::string approx_json(const ApproxReport& report, const TorsionObservation& torsion);
std::string approx_csv(const ApproxReport& report);
std::string certificate_json(const BoundCertificate& cert);
std::string certificates_json(const std::vector<BoundCertificate>& certs);
std::string tower_jsonl(const TowerResult& result, const Presentation& base);

} // namespace betti
