#include "betti/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "betti/homology.hpp"

namespace betti {

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::DefLower: return "DEF_LOWER";
    case CertificateKind::Supermult: return "SUPERMULT";
    case CertificateKind::L23Drop: return "L23_DROP";
    case CertificateKind::VdLower: return "VD_LOWER";
    case CertificateKind::B1PropCompletion: return "B1_PROP_COMPLETION";
    case CertificateKind::B12PropCompletion: return "B12_PROP_COMPLETION";
  }
  return "?";
}

long def_lower_bound(const Presentation& pres) {
  return static_cast<long>(pres.generator_count()) - static_cast<long>(pres.relator_count());
}

mpq_class l23_drop(const mpq_class& def_n, const mpq_class& index, const mpq_class& m) {
  if (m <= 0) throw std::invalid_argument("l23_drop: m must be at least 1");
  if (index < m) throw std::invalid_argument("l23_drop: index must be at least m");
  mpq_class out = def_n - index / m;
  out.canonicalize();
  return out;
}

namespace {

std::string q_str(const mpq_class& q) { return q.get_str(); }

} // namespace

BoundCertificate vd_lower_bound(const Presentation& pres, unsigned long p, int depth,
                                const EnumerationLimits& limits) {
  return vd_certificate_from_chain(build_chain(pres, p, depth, limits));
}

BoundCertificate vd_certificate_from_chain(const Chain& chain) {
  BoundCertificate cert;
  cert.kind = CertificateKind::VdLower;
  cert.truncated = chain.truncated;

  std::vector<mpq_class> ratios;
  for (const ChainStage& st : chain.stages) {
    long gens = static_cast<long>(st.sub.schreier_gens.size());
    long rels = static_cast<long>(st.sub.relators.size());
    mpq_class def(gens - rels);
    ProvenanceStep count_step;
    count_step.rule = "def_count";
    count_step.inputs = {{"gens", std::to_string(gens)}, {"relators", std::to_string(rels)}};
    count_step.value = def;
    cert.provenance.push_back(count_step);

    mpq_class ratio = (def - 1) / mpq_class(st.index);
    ratio.canonicalize();
    ProvenanceStep ratio_step;
    ratio_step.rule = "ratio";
    ratio_step.inputs = {{"def_bound", q_str(def)}, {"index", std::to_string(st.index)}};
    ratio_step.value = ratio;
    cert.provenance.push_back(ratio_step);
    ratios.push_back(ratio);
  }

  ProvenanceStep max_step;
  max_step.rule = "max";
  mpq_class best = ratios.front();
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    max_step.inputs.emplace_back("v" + std::to_string(i), q_str(ratios[i]));
    best = std::max(best, ratios[i]);
  }
  max_step.value = best;
  cert.provenance.push_back(max_step);
  cert.value = best;
  cert.informative = best > 0;
  return cert;
}

Presentation quotient_by_power(const Presentation& pres, const Word& g, unsigned long p,
                               unsigned n) {
  if (g.empty()) throw std::invalid_argument("quotient_by_power: g must be nonempty");
  if (!is_prime(p)) throw std::invalid_argument("quotient_by_power: p must be prime");
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, n);
  if (e > (1 << 20))
    throw std::invalid_argument("quotient_by_power: p^n too large to materialize");
  return pres.with_relator(g.pow(e.get_si()));
}

std::pair<BoundCertificate, BoundCertificate> completion_certificates(long def_bound,
                                                                      const mpq_class& vd_bound) {
  BoundCertificate b1c;
  b1c.kind = CertificateKind::B1PropCompletion;
  b1c.value = def_bound;
  b1c.propagated = true;
  b1c.informative = def_bound > 0;
  ProvenanceStep s1;
  s1.rule = "b1_completion";
  s1.inputs = {{"def_bound", std::to_string(def_bound)}};
  s1.value = b1c.value;
  b1c.provenance.push_back(s1);

  BoundCertificate b12c;
  b12c.kind = CertificateKind::B12PropCompletion;
  b12c.value = vd_bound;
  b12c.propagated = true;
  b12c.informative = vd_bound > 0;
  ProvenanceStep s2;
  s2.rule = "b12_completion";
  s2.inputs = {{"vd_bound", q_str(vd_bound)}};
  s2.value = b12c.value;
  b12c.provenance.push_back(s2);

  return {b1c, b12c};
}

namespace {

mpq_class parse_q(const std::string& s) {
  mpq_class q(s);
  q.canonicalize();
  return q;
}

mpq_class input_of(const ProvenanceStep& step, const std::string& name) {
  for (const auto& [k, v] : step.inputs)
    if (k == name) return parse_q(v);
  throw std::logic_error("provenance step '" + step.rule + "' missing input '" + name + "'");
}

mpq_class recompute(const ProvenanceStep& step) {
  const std::string& r = step.rule;
  if (r == "def_count") return input_of(step, "gens") - input_of(step, "relators");
  if (r == "ratio") {
    mpq_class v = (input_of(step, "def_bound") - 1) / input_of(step, "index");
    v.canonicalize();
    return v;
  }
  if (r == "max") {
    if (step.inputs.empty()) throw std::logic_error("max step with no inputs");
    mpq_class best = parse_q(step.inputs.front().second);
    for (const auto& [k, v] : step.inputs) best = std::max(best, parse_q(v));
    return best;
  }
  if (r == "supermult") {
    mpq_class v = (input_of(step, "def_bound") - 1) * input_of(step, "index") + 1;
    v.canonicalize();
    return v;
  }
  if (r == "l23_drop")
    return l23_drop(input_of(step, "def_bound"), input_of(step, "index"), input_of(step, "m"));
  if (r == "quot_drop") {
    mpq_class prev = input_of(step, "prev");
    mpq_class p = input_of(step, "p");
    mpq_class n = input_of(step, "n");
    mpz_class pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), p.get_num().get_ui(), n.get_num().get_ui());
    mpq_class v = prev - mpq_class(1) / mpq_class(pn);
    v.canonicalize();
    return v;
  }
  if (r == "b1_completion") return input_of(step, "def_bound");
  if (r == "b12_completion") return input_of(step, "vd_bound");
  throw std::logic_error("unknown provenance rule '" + r + "'");
}

} // namespace

mpq_class replay(const BoundCertificate& cert) {
  if (cert.provenance.empty()) throw std::logic_error("certificate has no provenance");
  for (const ProvenanceStep& step : cert.provenance) {
    mpq_class v = recompute(step);
    if (v != step.value)
      throw std::logic_error("provenance step '" + step.rule + "' does not replay: recorded " +
                             step.value.get_str() + ", recomputed " + v.get_str());
  }
  if (cert.provenance.back().value != cert.value)
    throw std::logic_error("certificate value does not match final provenance step");
  return cert.value;
}

} // namespace betti
