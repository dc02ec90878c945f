// Command-line front end: summarize, evaluate, inspect.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "mds/commands.hpp"
#include "mds/run_config.hpp"

int main(int argc, char** argv) {
  mds::RunConfig cfg;
  std::string corpus, data_dir, stopwords, lexicon, suffixes, lemmas, abbreviations, output_dir = "out";
  std::string budget = "compression";
  double redundancy = -1.0;
  std::string inspect_cluster;

  CLI::App app{"Multi-document extractive summarization over sentence networks"};
  app.set_config("--config", "", "TOML/INI file with option values; flags given on the command line win");
  app.require_subcommand(1);

  app.add_option("--corpus", corpus, "Corpus root (<cluster>/docs/*.txt, <cluster>/refs/*.txt)");
  app.add_option("--language", cfg.language, "Shipped resource language")->capture_default_str();
  app.add_option("--data-dir", data_dir, "Directory with the shipped resources");
  app.add_option("--stopwords", stopwords, "Stopword list (overrides the language default)");
  app.add_option("--lexicon", lexicon, "Tagger lexicon, word<TAB>POS");
  app.add_option("--suffixes", suffixes, "Tagger suffix rules, suffix<TAB>POS");
  app.add_option("--lemmas", lemmas, "Lemma dictionary, word<TAB>lemma");
  app.add_option("--abbreviations", abbreviations, "Abbreviation list for sentence segmentation");
  app.add_option("--network-model", cfg.network_model, "noun, tfidf or both")
      ->check(CLI::IsMember({"noun", "tfidf", "both"}))
      ->capture_default_str();
  app.add_option("--measures", cfg.measures, "Measure names (default: all)")->delimiter(',');
  app.add_option("--h-levels", cfg.h_levels, "Hierarchical levels for concentric measures")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--ard", cfg.ard, "Anti-redundancy detection: off, on or both")
      ->check(CLI::IsMember({"off", "on", "both"}))
      ->capture_default_str();
  app.add_option("--budget", budget, "Summary size for summarize: compression or reference")
      ->check(CLI::IsMember({"compression", "reference"}))
      ->capture_default_str();
  app.add_option("--compression-rate", cfg.compression_rate, "Fraction of words removed")->capture_default_str();
  app.add_option("--redundancy-limit", redundancy, "Fixed cosine limit for ARD (default: per cluster)");
  app.add_option("--seed", cfg.seed, "Random Baseline seed")->capture_default_str();
  app.add_option("--random-runs", cfg.random_runs, "Random Baseline seeds averaged")->capture_default_str();
  app.add_option("--output-dir", output_dir, "Output root")->capture_default_str();
  app.add_option("--cluster", cfg.cluster, "Restrict to one cluster");
  app.add_option("--damping", cfg.pagerank.damping, "PageRank damping")->capture_default_str();
  app.add_option("--pagerank-tol", cfg.pagerank.tol, "PageRank L1 tolerance")->capture_default_str();
  app.add_option("--pagerank-max-iter", cfg.pagerank.max_iter, "PageRank iteration cap")->capture_default_str();
  app.add_option("--tfidf-threshold", cfg.tfidf_threshold, "Minimum cosine for a Tf-Idf edge")->capture_default_str();
  app.add_option("--idf-unit", cfg.idf_unit, "Document-frequency unit")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, mds::IdfUnit>{{"sentence", mds::IdfUnit::Sentence}, {"document", mds::IdfUnit::Document}}));
  app.add_option("--idf-smoothing", cfg.idf_smoothing, "none or smooth")
      ->transform(CLI::CheckedTransformer(std::map<std::string, mds::IdfSmoothing>{
          {"none", mds::IdfSmoothing::None}, {"smooth", mds::IdfSmoothing::Smooth}}));
  app.add_flag("--keep-numbers", cfg.keep_numbers, "Keep letterless tokens in preprocessing");
  app.add_option("--workers", cfg.workers, "Worker threads (0: all cores)")->capture_default_str();

  auto* summarize = app.add_subcommand("summarize", "Write extracts for the selected systems")->fallthrough();
  auto* evaluate = app.add_subcommand("evaluate", "ROUGE-1 recall for every selected system")->fallthrough();
  auto* inspect = app.add_subcommand("inspect", "Dump networks, scores and walks of one cluster")->fallthrough();
  inspect->add_option("cluster_id", inspect_cluster, "Cluster to inspect")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return mds::kExitConfig;
  }

  cfg.corpus_root = corpus;
  cfg.data_dir = data_dir;
  cfg.stopwords = stopwords;
  cfg.lexicon = lexicon;
  cfg.suffixes = suffixes;
  cfg.lemmas = lemmas;
  cfg.abbreviations = abbreviations;
  cfg.output_dir = output_dir;
  cfg.budget = budget == "reference" ? mds::BudgetMode::Reference : mds::BudgetMode::Compression;
  if (redundancy >= 0.0) cfg.redundancy_limit = redundancy;

  try {
    if (*summarize) return mds::cmd_summarize(cfg, std::cerr);
    if (*evaluate) return mds::cmd_evaluate(cfg, std::cerr);
    if (*inspect) return mds::cmd_inspect(cfg, inspect_cluster, std::cerr);
  } catch (const mds::Error& e) {
    std::cerr << mds::error_line(e) << '\n';
    return mds::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << mds::error_line(e) << '\n';
    return mds::kExitData;
  }
  return mds::kExitConfig;
}
