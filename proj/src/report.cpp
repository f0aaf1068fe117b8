#include "gbskit/report.hpp"

#include <sstream>

namespace gbskit {

namespace {

std::string str(const Int& v) { return v.str(); }

Json json_path_word(const GbsGraph& g, const PathWord& w) {
  return serialize_path_word(g, w);
}

}  // namespace

Json json_rational(const Rational& r) {
  Json j;
  j["num"] = str(numerator(r));
  j["den"] = str(denominator(r));
  return j;
}

Json json_graph(const GbsGraph& g) {
  Json j;
  j["vertices"] = Json::array();
  for (const std::string& v : g.vertices) j["vertices"].push_back(v);
  j["edges"] = Json::array();
  for (const GbsEdge& e : g.edges) {
    Json je;
    je["name"] = e.name;
    je["from"] = g.vertices[static_cast<std::size_t>(e.origin)];
    je["to"] = g.vertices[static_cast<std::size_t>(e.terminus)];
    je["labels"] = Json::array({str(e.label_origin), str(e.label_terminus)});
    j["edges"].push_back(std::move(je));
  }
  j["base"] = g.vertices[static_cast<std::size_t>(g.base)];
  return j;
}

Json json_certificate(const Certificate& c) {
  Json j;
  j["kind"] = c.kind == Certificate::non_unimodular_r_infinity ? "NonUnimodularRInfinity"
                                                               : "ModulusLowerBound";
  j["element"] = c.element;
  j["modulus"] = json_rational(c.modulus);
  j["family"] = Json::array();
  for (const auto& [power, value] : c.family) {
    Json entry;
    entry["power"] = power;
    entry["modulus"] = json_rational(value);
    j["family"].push_back(std::move(entry));
  }
  j["automorphism"] = c.automorphism_id;
  return j;
}

Json classification_report(const GbsGraph& g) {
  QiClass qc = qi_class(g);
  Json j;
  j["input"] = json_graph(g);
  j["reduced"] = json_graph(qc.reduced);
  j["delta_image"] = Json::array();
  for (const Rational& r : qc.delta.generators) j["delta_image"].push_back(json_rational(r));
  j["class"] = qi_kind_name(qc.kind);
  if (qc.kind == QiKind::solvable_bs1n) j["solvable_n"] = str(qc.solvable_n);
  if (qc.kind == QiKind::virtually_fn_x_z)
    j["rank_hint_betti"] = validate_graph(qc.reduced).betti;
  if (qc.theorem_case == 0) {
    j["theorem_case"] = "elementary";
  } else {
    j["theorem_case"] = qc.theorem_case;
  }
  if (!qc.delta.unimodular) {
    Automorphism id = identity_automorphism(qc.reduced);
    std::string reason;
    auto cert = rinfty_certificate(qc.reduced, id, &reason);
    j["certificate"] = cert ? json_certificate(*cert) : Json(nullptr);
  } else {
    j["certificate"] = nullptr;
  }
  j["note"] = qc.note;
  return j;
}

Json nf_report(const GbsGraph& g, const PathWord& w, const Limits& lim) {
  CanonicalWord c = canonical_form(g, w, lim);
  Json j;
  j["input"] = json_path_word(g, w);
  j["canonical"] = c.key;
  return j;
}

Json tl_report(const GbsGraph& g, const PathWord& w, const Limits& lim) {
  ElementClassification c = classify_element(g, w, lim);
  Json j;
  j["length"] = c.translation_length;
  j["kind"] = c.kind == ElementKind::elliptic ? "elliptic" : "hyperbolic";
  return j;
}

Json modulus_report(const GbsGraph& g, const PathWord& w) {
  return json_rational(modulus(g, w));
}

Json commens_report(const GbsGraph& g, const PathWord& w, const Limits& lim) {
  Commensuration c = find_commensuration(g, w, lim);
  Json j;
  j["p"] = str(c.p);
  j["q"] = str(c.q);
  j["vertex"] = g.vertices[static_cast<std::size_t>(c.vertex)];
  return j;
}

Json twisted_report(const GbsGraph& g, const Automorphism& phi,
                    const std::vector<PathWord>& elements, unsigned radius, const Limits& lim) {
  OrbitPartition part = merge_classes_in_ball(g, phi, elements, radius, lim);
  Json j;
  j["automorphism"] = phi.id;
  j["respects_delta"] = respects_delta(g, phi, lim);

  Json jp;
  jp["elements"] = Json::array();
  for (const CanonicalWord& c : part.elements) jp["elements"].push_back(c.key);
  jp["classes"] = Json::array();
  for (const auto& cls : part.classes) jp["classes"].push_back(cls);
  jp["witnesses"] = Json::array();
  for (const MergeWitness& w : part.witnesses) {
    Json jw;
    jw["from"] = w.from;
    jw["to"] = w.to;
    jw["h"] = w.conjugator_key;
    jp["witnesses"].push_back(std::move(jw));
  }
  jp["radius"] = part.radius;
  jp["ball_size"] = part.ball_size;
  j["partition"] = std::move(jp);
  j["note"] = "unmerged classes are distinct at radius " + std::to_string(radius) +
              " only; the bounded search certifies merges, never separations";

  if (j["respects_delta"].get<bool>()) {
    ModulusCount mc = modulus_class_count(g, phi, elements, lim);
    Json jm;
    jm["count"] = mc.count;
    jm["values"] = Json::array();
    for (const Rational& r : mc.values) jm["values"].push_back(json_rational(r));
    j["modulus_lower_bound"] = std::move(jm);
  } else {
    j["modulus_lower_bound"] = nullptr;
  }

  std::string reason;
  auto cert = rinfty_certificate(g, phi, &reason, lim);
  if (cert) {
    j["certificate"] = json_certificate(*cert);
  } else {
    j["certificate"] = nullptr;
    j["certificate_unavailable"] = reason;
  }
  return j;
}

Json certify_report(const GbsGraph& g, const Automorphism& phi, const Limits& lim) {
  Json j;
  j["automorphism"] = phi.id;
  std::string reason;
  auto cert = rinfty_certificate(g, phi, &reason, lim);
  if (cert) {
    j["certificate"] = json_certificate(*cert);
    j["conclusion"] = "infinitely many twisted conjugacy classes";
  } else {
    j["certificate"] = nullptr;
    j["reason"] = reason;
  }
  return j;
}

Json ses_report(const GbsGraph& g, const Automorphism& phi, int samples, std::uint64_t seed,
                int radius, const Limits& lim) {
  FreeQuotient q = free_quotient(g);
  ProjectionReport pr = projection_soundness(g, q, phi, samples, seed, radius, lim);
  Json j;
  j["automorphism"] = phi.id;
  j["free_generators"] = Json::array();
  for (const std::string& name : q.names) j["free_generators"].push_back(name);
  j["samples"] = pr.samples;
  j["passes"] = pr.passes;
  j["failures"] = Json::array();
  for (const std::string& f : pr.failures) j["failures"].push_back(f);
  j["negative_control_ran"] = pr.negative_control_ran;
  j["negative_control_distinct"] = pr.negative_control_distinct;
  return j;
}

Json growth_report(const GbsGraph& g, const PathWord& w, unsigned radius, const Limits& lim) {
  GrowthReport gr = conjugates_in_ball(g, w, radius, lim);
  Json j;
  j["element"] = canonical_form(g, w, lim).key;
  j["radius"] = radius;
  j["sizes"] = Json::array();
  for (std::uint64_t s : gr.sizes) j["sizes"].push_back(s);
  j["stabilized"] = gr.stabilized;
  j["max_word_length"] = str(gr.max_word_length);
  return j;
}

namespace {

void render_into(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        out << prefix << key << ":\n";
        render_into(value, prefix + "  ", out);
      } else {
        out << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object() || value.is_array()) {
        out << prefix << "-\n";
        render_into(value, prefix + "  ", out);
      } else {
        out << prefix << "- "
            << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else {
    out << prefix << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render_into(j, "", out);
  return out.str();
}

}  // namespace gbskit
