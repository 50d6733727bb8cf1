#include "betti/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <set>

#include "betti/approx.hpp"
#include "betti/bounds.hpp"
#include "betti/chains.hpp"
#include "betti/errors.hpp"
#include "betti/homology.hpp"
#include "betti/ratio.hpp"
#include "betti/schreier.hpp"
#include "betti/serialize.hpp"
#include "betti/tower.hpp"

namespace betti {

EnumerationLimits default_limits() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("GRP_MAX_COSETS")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v >= 1) limits.max_cosets = v;
  }
  return limits;
}

namespace {

CosetTable build_table(const RunConfig& config, const Presentation& pres,
                       const std::vector<Word>& words) {
  if (config.closure_mode) return normal_closure_table(pres, words, config.limits);
  return todd_coxeter(pres, words, config.limits);
}

int run_parse(const RunConfig& config, std::ostream& out) {
  Presentation pres = parse_presentation(config.presentation);
  if (config.format == "json")
    out << presentation_json(pres);
  else
    out << print_presentation(pres) << "\n";
  return 0;
}

int run_tc(const RunConfig& config, std::ostream& out) {
  Presentation pres = parse_presentation(config.presentation);
  std::vector<Word> words = parse_word_list(config.subgroup_words, pres);
  CosetTable table = build_table(config, pres, words);
  if (config.format == "json")
    out << coset_table_json(pres, table);
  else
    out << "index " << table.index() << "\n";
  return 0;
}

int run_rs(const RunConfig& config, std::ostream& out) {
  Presentation pres = parse_presentation(config.presentation);
  std::vector<Word> words = parse_word_list(config.subgroup_words, pres);
  CosetTable table = build_table(config, pres, words);
  SubgroupPresentation sub = rewrite_subgroup(pres, table);
  if (config.format == "json") {
    nlohmann::ordered_json o;
    o["presentation"] = print_presentation(sub.presentation);
    o["ledger"] = nlohmann::ordered_json::parse(subgroup_ledger_json(sub));
    out << o.dump(2) << "\n";
  } else {
    out << print_presentation(sub.presentation) << "\n" << subgroup_ledger_json(sub);
  }
  return 0;
}

int run_b1(const RunConfig& config, std::ostream& out) {
  Presentation pres = parse_presentation(config.presentation);
  AbelianInvariants inv = smith_normal_form(exponent_matrix(pres));
  std::set<unsigned long> primes(config.p_rank_primes.begin(), config.p_rank_primes.end());
  for (const auto& d : inv.nontrivial_divisors()) {
    // report p-ranks at primes dividing some divisor
    mpz_class rest = d;
    for (unsigned long q = 2; q <= 1000; q = (q == 2 ? 3 : q + 2)) {
      if (rest % q == 0) {
        primes.insert(q);
        while (rest % q == 0) rest /= q;
      }
    }
    if (rest > 1 && rest.fits_ulong_p() && is_prime(rest.get_ui()))
      primes.insert(rest.get_ui());
  }
  for (unsigned long q : primes)
    if (!is_prime(q)) throw std::invalid_argument("p = " + std::to_string(q) + " is not prime");
  std::vector<unsigned long> sorted(primes.begin(), primes.end());
  if (config.format == "text")
    out << "rank " << inv.rank << "\n";
  else
    out << abelian_invariants_json(inv, sorted);
  return 0;
}

int run_chain(const RunConfig& config, std::ostream& out) {
  Presentation pres = parse_presentation(config.presentation);
  Chain chain = build_chain(pres, config.p, config.depth, config.limits);
  if (config.format == "csv")
    out << chain_csv(chain);
  else
    out << chain_json(chain);
  return 0;
}

int run_approx(const RunConfig& config, std::ostream& out) {
  ApproxOptions options;
  options.known_b1_squared = config.known_b12;
  ApproxReport report;
  TorsionObservation torsion;
  if (!config.chain_input.empty()) {
    nlohmann::json parsed = nlohmann::json::parse(config.chain_input);
    std::vector<ApproxStage> stages;
    for (const auto& st : parsed.at("stages")) {
      ApproxStage s;
      s.depth = st.at("depth").get<int>();
      s.index = st.at("index").get<std::int64_t>();
      s.b1 = st.at("b1").get<long>();
      stages.push_back(s);
    }
    bool truncated = parsed.value("truncated", false);
    report = approx_sequence(std::move(stages), truncated, options);
    torsion = torsion_observation(report.stages, config.torsion_epsilon);
  } else {
    Presentation pres = parse_presentation(config.presentation);
    Chain chain = build_chain(pres, config.p, config.depth, config.limits);
    report = approx_sequence(chain, options);
    torsion = torsion_observation(chain, config.torsion_epsilon);
  }
  if (config.format == "csv")
    out << approx_csv(report);
  else
    out << approx_json(report, torsion);
  return 0;
}

int run_vd(const RunConfig& config, std::ostream& out) {
  Presentation pres = parse_presentation(config.presentation);
  out << certificate_json(vd_lower_bound(pres, config.p, config.depth, config.limits));
  return 0;
}

int run_cert(const RunConfig& config, std::ostream& out) {
  Presentation pres = parse_presentation(config.presentation);
  long def = def_lower_bound(pres);
  BoundCertificate def_cert;
  def_cert.kind = CertificateKind::DefLower;
  def_cert.value = def;
  def_cert.informative = def > 0;
  ProvenanceStep step;
  step.rule = "def_count";
  step.inputs = {{"gens", std::to_string(pres.generator_count())},
                 {"relators", std::to_string(pres.relator_count())}};
  step.value = def_cert.value;
  def_cert.provenance.push_back(step);

  BoundCertificate vd_cert = vd_lower_bound(pres, config.p, config.depth, config.limits);
  auto [b1_cert, b12_cert] = completion_certificates(def, vd_cert.value);
  out << certificates_json({def_cert, vd_cert, b1_cert, b12_cert});
  return 0;
}

int run_tower(const RunConfig& config, std::ostream& out) {
  TowerOptions options;
  options.prime = config.p;
  options.epsilon = config.eps;
  options.steps = config.steps;
  options.probe_depth = config.probe_depth;
  options.n_cap = config.n_cap;
  options.chain_depth = config.chain_depth;
  options.word_check_cap = config.word_check_cap;
  options.delta = config.delta;
  options.limits = config.limits;
  TowerResult result = run_tower(config.gens, options);
  out << tower_jsonl(result, result.state.pres);
  switch (result.status) {
    case TowerStatus::Completed: return 0;
    case TowerStatus::ThresholdUnreachable: return 1;
    case TowerStatus::LimitsExceeded: return 2;
  }
  return 0;
}

} // namespace

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "parse") return run_parse(config, out);
    if (config.command == "tc") return run_tc(config, out);
    if (config.command == "rs") return run_rs(config, out);
    if (config.command == "b1") return run_b1(config, out);
    if (config.command == "chain") return run_chain(config, out);
    if (config.command == "approx") return run_approx(config, out);
    if (config.command == "vd") return run_vd(config, out);
    if (config.command == "cert") return run_cert(config, out);
    if (config.command == "tower") return run_tower(config, out);
    err << "error: unknown command '" << config.command << "'\n";
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed chain JSON: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace betti
