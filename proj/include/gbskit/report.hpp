#pragma once

#include <json.hpp>

#include "gbskit/classifier.hpp"
#include "gbskit/tree_geometry.hpp"
#include "gbskit/twisted.hpp"

// Single include point for JSON emission. Everything uses ordered_json so key
// order, and therefore the serialized bytes, are stable across runs and
// thread counts. All unbounded integers are emitted as decimal strings;
// rationals as {"num": "...", "den": "..."} with positive reduced
// denominator. No floats anywhere.

namespace gbskit {

using Json = nlohmann::ordered_json;

Json json_rational(const Rational& r);
Json json_graph(const GbsGraph& g);
Json json_certificate(const Certificate& c);

Json classification_report(const GbsGraph& g);
Json nf_report(const GbsGraph& g, const PathWord& w, const Limits& lim = {});
Json tl_report(const GbsGraph& g, const PathWord& w, const Limits& lim = {});
Json modulus_report(const GbsGraph& g, const PathWord& w);
Json commens_report(const GbsGraph& g, const PathWord& w, const Limits& lim = {});
Json twisted_report(const GbsGraph& g, const Automorphism& phi,
                    const std::vector<PathWord>& elements, unsigned radius,
                    const Limits& lim = {});
Json certify_report(const GbsGraph& g, const Automorphism& phi, const Limits& lim = {});
Json ses_report(const GbsGraph& g, const Automorphism& phi, int samples, std::uint64_t seed,
                int radius, const Limits& lim = {});
Json growth_report(const GbsGraph& g, const PathWord& w, unsigned radius,
                   const Limits& lim = {});

std::string render_text(const Json& j);  // lossy human-readable rendering

}  // namespace gbskit
