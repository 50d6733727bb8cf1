#include "betti/approx.hpp"

#include <stdexcept>

namespace betti {

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Exact: return "EXACT";
    case CertStatus::CertifiedBound: return "CERTIFIED-BOUND";
    case CertStatus::Heuristic: return "HEURISTIC";
  }
  return "?";
}

namespace {

std::vector<ApproxStage> stages_of(const Chain& chain) {
  std::vector<ApproxStage> stages;
  stages.reserve(chain.stages.size());
  for (const ChainStage& st : chain.stages) {
    mpq_class ratio(st.b1, st.index);
    ratio.canonicalize();
    stages.push_back(ApproxStage{st.depth, st.index, st.b1, ratio});
  }
  return stages;
}

} // namespace

ApproxReport approx_sequence(std::vector<ApproxStage> stages, bool truncated,
                             const ApproxOptions& options) {
  if (stages.empty()) throw std::invalid_argument("chain is empty");
  for (ApproxStage& st : stages) {
    st.ratio = mpq_class(st.b1, st.index);
    st.ratio.canonicalize();
  }
  ApproxReport report;
  report.truncated = truncated;
  report.stages = std::move(stages);

  // A finite chain cannot certify the limsup; the estimate is the max over the
  // computed tail, the certified value never exceeds any tail ratio.
  bool have_tail = report.stages.size() > 1;
  mpq_class tail_max = have_tail ? report.stages[1].ratio : report.stages[0].ratio;
  mpq_class tail_min = tail_max;
  for (std::size_t i = 2; i < report.stages.size(); ++i) {
    tail_max = std::max(tail_max, report.stages[i].ratio);
    tail_min = std::min(tail_min, report.stages[i].ratio);
  }
  report.limsup_estimate = tail_max;
  report.certificate.value = tail_min;
  report.certificate.status = CertStatus::Heuristic;
  if (options.known_b1_squared) {
    report.certificate.status = CertStatus::Exact;
    report.certificate.reference_value = options.known_b1_squared;
  }
  return report;
}

ApproxReport approx_sequence(const Chain& chain, const ApproxOptions& options) {
  return approx_sequence(stages_of(chain), chain.truncated, options);
}

TorsionObservation torsion_observation(const std::vector<ApproxStage>& stages,
                                       const mpq_class& epsilon) {
  TorsionObservation obs;
  obs.epsilon = epsilon;
  bool any_tail = false;
  bool all_small = true;
  for (const ApproxStage& st : stages) {
    if (st.depth == 0) continue;
    any_tail = true;
    if (st.ratio > epsilon) all_small = false;
  }
  obs.flagged = any_tail && all_small;
  obs.note = obs.flagged
                 ? "all computed ratios at depth >= 1 are <= epsilon; torsion groups have "
                   "limit 0 along any such chain (computed values only, no claim beyond them)"
                 : "";
  return obs;
}

TorsionObservation torsion_observation(const Chain& chain, const mpq_class& epsilon) {
  return torsion_observation(stages_of(chain), epsilon);
}

} // namespace betti
