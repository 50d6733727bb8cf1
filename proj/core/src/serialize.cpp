#include "betti/serialize.hpp"

#include <json.hpp>

#include "betti/ratio.hpp"

namespace betti {

using json = nlohmann::ordered_json;

namespace {

json word_list(const std::vector<Word>& words, const Presentation& pres) {
  json arr = json::array();
  for (const Word& w : words) arr.push_back(print_word(w, pres));
  return arr;
}

json stage_json(const ChainStage& st, const Presentation& base) {
  json o;
  o["depth"] = st.depth;
  o["index"] = st.index;
  o["closure_words"] = word_list(st.closure_words, base);
  o["schreier_gen_count"] = st.sub.schreier_gens.size();
  o["relator_count"] = st.sub.relators.size();
  o["b1"] = st.b1;
  o["b1_mod_p"] = st.b1_mod_p;
  mpq_class ratio(st.b1, st.index);
  ratio.canonicalize();
  o["ratio"] = ratio_string(ratio);
  o["ratio_decimal"] = decimal_string(ratio);
  return o;
}

json certificate_obj(const BoundCertificate& cert) {
  json o;
  o["kind"] = to_string(cert.kind);
  o["value"] = ratio_string(cert.value);
  o["value_decimal"] = decimal_string(cert.value);
  o["propagated"] = cert.propagated;
  o["informative"] = cert.informative;
  o["truncated"] = cert.truncated;
  json prov = json::array();
  for (const ProvenanceStep& s : cert.provenance) {
    json step;
    step["rule"] = s.rule;
    json inputs;
    for (const auto& [k, v] : s.inputs) inputs[k] = v;
    step["inputs"] = inputs;
    step["value"] = ratio_string(s.value);
    prov.push_back(step);
  }
  o["provenance"] = prov;
  return o;
}

std::string dump(const json& o) { return o.dump(2) + "\n"; }

} // namespace

std::string coset_table_json(const Presentation& pres, const CosetTable& table) {
  json o;
  o["index"] = table.index();
  json action;
  for (std::size_t g = 0; g < pres.generator_count(); ++g) {
    json images = json::array();
    for (std::int32_t c = 0; c < table.index(); ++c)
      images.push_back(table.act(c, make_letter(static_cast<std::uint32_t>(g))));
    action[pres.name(g)] = images;
  }
  o["action"] = action;
  return dump(o);
}

std::string presentation_json(const Presentation& pres) {
  json o;
  json gens = json::array();
  for (const auto& g : pres.generators()) gens.push_back(g.name);
  o["generators"] = gens;
  o["relators"] = word_list(pres.relators(), pres);
  o["text"] = print_presentation(pres);
  return dump(o);
}

std::string subgroup_ledger_json(const SubgroupPresentation& sub) {
  json o;
  o["j"] = sub.table.index();
  o["d"] = sub.parent.generator_count();
  o["r"] = sub.parent.relator_count();
  o["schreier_gen_count"] = sub.schreier_gens.size();
  o["relator_count"] = sub.relators.size();
  o["def_bound"] = static_cast<long>(sub.schreier_gens.size()) -
                   static_cast<long>(sub.relators.size());
  return dump(o);
}

std::string abelian_invariants_json(const AbelianInvariants& inv,
                                    const std::vector<unsigned long>& primes) {
  json o;
  o["rank"] = inv.rank;
  json divisors = json::array();
  for (const auto& d : inv.nontrivial_divisors()) divisors.push_back(d.get_str());
  o["divisors"] = divisors;
  json p_rank;
  for (unsigned long p : primes)
    p_rank[std::to_string(p)] = inv.p_rank(mpz_class(static_cast<unsigned long>(p)));
  o["p_rank"] = p_rank;
  return dump(o);
}

std::string chain_json(const Chain& chain) {
  json o;
  o["presentation"] = print_presentation(chain.base);
  o["p"] = chain.prime;
  json stages = json::array();
  for (const ChainStage& st : chain.stages) stages.push_back(stage_json(st, chain.base));
  o["stages"] = stages;
  o["truncated"] = chain.truncated;
  if (chain.truncated_projected_index)
    o["truncated_projected_index"] = chain.truncated_projected_index->get_str();
  return dump(o);
}

std::string chain_csv(const Chain& chain) {
  std::string out = "# betti chain p=" + std::to_string(chain.prime) + "\n";
  out += "depth,index,b1,ratio\n";
  for (const ChainStage& st : chain.stages) {
    mpq_class ratio(st.b1, st.index);
    ratio.canonicalize();
    out += std::to_string(st.depth) + "," + std::to_string(st.index) + "," +
           std::to_string(st.b1) + "," + decimal_string(ratio) + "\n";
  }
  return out;
}

std::string approx_json(const ApproxReport& report, const TorsionObservation& torsion) {
  json o;
  json stages = json::array();
  for (const ApproxStage& st : report.stages) {
    json s;
    s["depth"] = st.depth;
    s["index"] = st.index;
    s["b1"] = st.b1;
    s["ratio"] = ratio_string(st.ratio);
    s["ratio_decimal"] = decimal_string(st.ratio);
    stages.push_back(s);
  }
  o["stages"] = stages;
  o["limsup_estimate"] = ratio_string(report.limsup_estimate);
  json cert;
  cert["kind"] = "THEOREM1_LOWER_BOUND";
  cert["value"] = ratio_string(report.certificate.value);
  cert["value_decimal"] = decimal_string(report.certificate.value);
  cert["status"] = to_string(report.certificate.status);
  if (report.certificate.reference_value)
    cert["reference_value"] = ratio_string(*report.certificate.reference_value);
  o["certificate"] = cert;
  o["truncated"] = report.truncated;
  json t;
  t["flagged"] = torsion.flagged;
  t["epsilon"] = ratio_string(torsion.epsilon);
  if (torsion.flagged) t["note"] = torsion.note;
  o["torsion_observation"] = t;
  return dump(o);
}

std::string approx_csv(const ApproxReport& report) {
  std::string out = "# betti approx\n";
  out += "depth,index,b1,ratio_decimal\n";
  for (const ApproxStage& st : report.stages)
    out += std::to_string(st.depth) + "," + std::to_string(st.index) + "," +
           std::to_string(st.b1) + "," + decimal_string(st.ratio) + "\n";
  return out;
}

std::string certificate_json(const BoundCertificate& cert) {
  return dump(certificate_obj(cert));
}

std::string certificates_json(const std::vector<BoundCertificate>& certs) {
  json arr = json::array();
  for (const auto& c : certs) arr.push_back(certificate_obj(c));
  return dump(arr);
}

std::string tower_jsonl(const TowerResult& result, const Presentation& base) {
  (void)base;
  std::string out;
  for (const StepRecord& rec : result.state.ledger) {
    json o;
    o["k"] = rec.k;
    o["word"] = rec.word;
    o["case"] = rec.case_taken;
    o["order_status"] = to_string(rec.probe.status);
    json orders = json::array();
    for (auto v : rec.probe.stage_orders) orders.push_back(v);
    o["stage_orders"] = orders;
    o["order"] = rec.probe.order;
    o["m"] = rec.probe.exponent_m;
    if (rec.chosen_n) o["n"] = *rec.chosen_n;
    if (rec.relator) o["relator"] = *rec.relator;
    o["vd_before"] = ratio_string(rec.vd_before);
    o["vd_after"] = ratio_string(rec.vd_after);
    o["bound_status"] = to_string(rec.bound_status);
    o["presentation_vd"] = ratio_string(rec.presentation_vd);
    o["cond_a"] = rec.cond_a;
    o["cond_b"] = rec.cond_b;
    o["cond_c"] = rec.cond_c;
    o["cond_c_checked_length"] = rec.cond_c_checked_length;
    o["cond_d"] = rec.cond_d;
    o["drop_within_delta"] = rec.drop_within_delta;
    o["witness_index"] = rec.witness_index;
    out += o.dump() + "\n";
  }
  json fin;
  fin["status"] = to_string(result.status);
  if (!result.message.empty()) fin["message"] = result.message;
  fin["k"] = result.state.k;
  fin["final_presentation"] = print_presentation(result.state.pres);
  fin["vd_bound"] = ratio_string(result.state.vd_bound);
  fin["bound_status"] = to_string(result.state.bound_status);
  out += fin.dump() + "\n";
  return out;
}

} // namespace betti
