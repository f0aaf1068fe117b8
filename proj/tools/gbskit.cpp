#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gbskit/report.hpp"

namespace {

using namespace gbskit;

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::syntax_error:
    case Errc::label_zero:
    case Errc::unknown_vertex:
    case Errc::duplicate_name:
    case Errc::disconnected:
    case Errc::unknown_generator:
    case Errc::tree_edge_letter:
    case Errc::invalid_word:
      return 2;
    case Errc::missing_image:
    case Errc::relator_not_preserved:
    case Errc::inverse_check_failed:
      return 3;
    case Errc::kernel_not_preserved:
    case Errc::not_unimodular_product:
    case Errc::delta_not_respected:
    case Errc::precondition:
      return 4;
    case Errc::radius_too_large:
    case Errc::exponent_overflow:
      return 5;
  }
  return 1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::syntax_error, "cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GbsGraph load_graph(const std::string& path) { return parse_graph(slurp(path)); }

PathWord load_word(const GbsGraph& g, const std::string& text, const Limits& lim) {
  return lift_user_word(g, spanning_tree(g), parse_user_word(g, text), lim);
}

std::vector<PathWord> load_words(const GbsGraph& g, const std::string& path, const Limits& lim) {
  std::istringstream in(slurp(path));
  std::vector<PathWord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(load_word(g, line, lim));
  }
  return out;
}

Automorphism load_automorphism(const GbsGraph& g, const std::string& path, const Limits& lim) {
  Automorphism phi = parse_automorphism(g, slurp(path));
  validate_automorphism(g, phi, lim);
  return phi;
}

void emit(const Json& report, const std::string& format) {
  if (format == "text") {
    std::cout << render_text(report);
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gbskit: normal forms, tree geometry, moduli, twisted conjugacy, and "
               "quasi-isometry classification for generalized Baumslag-Solitar groups"};
  app.require_subcommand(1);

  unsigned radius = 3;
  int samples = 200;
  std::uint64_t seed = 1;
  Limits lim;
  std::string format = "json";
  std::uint64_t max_digits = lim.max_exponent_digits;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--radius", radius, "search / enumeration radius");
    cmd->add_option("--samples", samples, "sample count for randomized checks");
    cmd->add_option("--seed", seed, "seed for randomized checks");
    cmd->add_option("--threads", lim.threads, "worker threads (deterministic output)");
    cmd->add_option("--format", format, "output format: json | text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--max-ball", lim.max_ball, "cap on enumerated conjugator words");
    cmd->add_option("--max-digits", max_digits, "cap on decimal digits per exponent")
        ->envname("GBSKIT_MAX_DIGITS");
  };

  std::string graph_path, word_text, auto_path, words_path;

  CLI::App* classify = app.add_subcommand("classify", "quasi-isometry class of the graph");
  classify->add_option("graph", graph_path, "graph file")->required();
  add_common(classify);

  CLI::App* nf = app.add_subcommand("nf", "canonical normal form of a word");
  nf->add_option("graph", graph_path, "graph file")->required();
  nf->add_option("word", word_text, "word in the presentation generators")->required();
  add_common(nf);

  CLI::App* tl = app.add_subcommand("tl", "translation length and elliptic/hyperbolic kind");
  tl->add_option("graph", graph_path, "graph file")->required();
  tl->add_option("word", word_text, "word in the presentation generators")->required();
  add_common(tl);

  CLI::App* commens = app.add_subcommand("commens", "p, q with w a^p w^-1 = a^q");
  commens->add_option("graph", graph_path, "graph file")->required();
  commens->add_option("word", word_text, "closed word")->required();
  add_common(commens);

  CLI::App* mod = app.add_subcommand("modulus", "modular homomorphism value of a word");
  mod->add_option("graph", graph_path, "graph file")->required();
  mod->add_option("word", word_text, "closed word")->required();
  add_common(mod);

  CLI::App* twisted = app.add_subcommand("twisted", "twisted-conjugacy orbit merging");
  twisted->add_option("graph", graph_path, "graph file")->required();
  twisted->add_option("automorphism", auto_path, "automorphism file")->required();
  twisted->add_option("words", words_path, "file with one word per line")->required();
  add_common(twisted);

  CLI::App* certify = app.add_subcommand("certify", "R-infinity certificate when available");
  certify->add_option("graph", graph_path, "graph file")->required();
  certify->add_option("automorphism", auto_path, "automorphism file (default: identity)");
  add_common(certify);

  CLI::App* ses = app.add_subcommand("ses-check", "free-quotient projection soundness");
  ses->add_option("graph", graph_path, "graph file")->required();
  ses->add_option("automorphism", auto_path, "automorphism file")->required();
  add_common(ses);

  CLI::App* growth = app.add_subcommand("conj-growth", "distinct conjugates per ball radius");
  growth->add_option("graph", graph_path, "graph file")->required();
  growth->add_option("word", word_text, "closed word to conjugate")->required();
  add_common(growth);

  CLI11_PARSE(app, argc, argv);
  lim.max_exponent_digits = max_digits;

  try {
    if (classify->parsed()) {
      emit(classification_report(load_graph(graph_path)), format);
    } else if (nf->parsed()) {
      GbsGraph g = load_graph(graph_path);
      emit(nf_report(g, load_word(g, word_text, lim), lim), format);
    } else if (tl->parsed()) {
      GbsGraph g = load_graph(graph_path);
      emit(tl_report(g, load_word(g, word_text, lim), lim), format);
    } else if (commens->parsed()) {
      GbsGraph g = load_graph(graph_path);
      emit(commens_report(g, load_word(g, word_text, lim), lim), format);
    } else if (mod->parsed()) {
      GbsGraph g = load_graph(graph_path);
      emit(modulus_report(g, load_word(g, word_text, lim)), format);
    } else if (twisted->parsed()) {
      GbsGraph g = load_graph(graph_path);
      Automorphism phi = load_automorphism(g, auto_path, lim);
      emit(twisted_report(g, phi, load_words(g, words_path, lim), radius, lim), format);
    } else if (certify->parsed()) {
      GbsGraph g = load_graph(graph_path);
      Automorphism phi =
          auto_path.empty() ? identity_automorphism(g) : load_automorphism(g, auto_path, lim);
      emit(certify_report(g, phi, lim), format);
    } else if (ses->parsed()) {
      GbsGraph g = load_graph(graph_path);
      Automorphism phi = load_automorphism(g, auto_path, lim);
      emit(ses_report(g, phi, samples, seed, static_cast<int>(radius), lim), format);
    } else if (growth->parsed()) {
      GbsGraph g = load_graph(graph_path);
      emit(growth_report(g, load_word(g, word_text, lim), radius, lim), format);
    }
  } catch (const GbsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
