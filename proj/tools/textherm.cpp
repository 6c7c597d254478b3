/* Copyright 2026 The Textherm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// textherm: corpus building, thermodynamic curves, keyword reports and
// temperature extractions from the command line.
//
//   textherm corpus build DIR [--alpha A] [-o corpus.json]
//   textherm corpus merge A.json B.json ... [-o merged.json]
//   textherm curves   --corpus C --doc D [grid flags] [-o curves.csv]
//   textherm keywords --corpus C --doc D [--top K] [--t-lo --t-hi]
//   textherm extract  --corpus C --doc D -T 0.167 [-T ...] [--mode --seed]
//
// Every option can also be given in a TOML-style file via --config; flags on
// the command line take precedence.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "textherm/analysis.hpp"
#include "textherm/error.hpp"
#include "textherm/extraction.hpp"
#include "textherm/run_config.hpp"
#include "textherm/textcorpus.hpp"
#include "textherm/thermo.hpp"

namespace fs = std::filesystem;
using namespace textherm;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("cannot read " + path.string());
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("cannot write " + path);
}

CorpusStats load_corpus(const RunConfig& config) {
  if (config.corpus_path.empty()) throw Error("--corpus is required");
  CorpusStats stats = corpus_from_json(read_file(config.corpus_path));
  return config.alpha_set ? stats.with_alpha(config.alpha) : stats;
}

DocProfile load_document(const RunConfig& config) {
  if (config.document_path.empty()) throw Error("--doc is required");
  return doc_profile(tokenize(read_file(config.document_path)));
}

void print_summary(std::ostream& out, const CorpusStats& stats) {
  out << "total_tokens " << stats.total_tokens() << "\n"
      << "vocab_size " << stats.vocab_size() << "\n";
}

void cmd_corpus_build(const RunConfig& config, const std::string& input_dir) {
  std::error_code ec;
  if (!fs::is_directory(input_dir, ec)) {
    throw Error("not a directory: " + input_dir);
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(input_dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  if (files.empty()) throw Error("no input files in " + input_dir);
  std::sort(files.begin(), files.end());

  // Each file is counted on its own; the partial tables are merged in path
  // order, which merge_stats makes order-independent anyway.
  const std::size_t workers =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  CorpusStats stats(config.alpha);
  for (std::size_t begin = 0; begin < files.size(); begin += workers) {
    std::vector<std::future<CorpusStats>> parts;
    for (std::size_t i = begin; i < std::min(files.size(), begin + workers);
         ++i) {
      parts.push_back(std::async(std::launch::async, [&, i] {
        CorpusStats part(config.alpha);
        part.add(tokenize(read_file(files[i])));
        return part;
      }));
    }
    for (auto& part : parts) stats = merge_stats(stats, part.get());
  }
  if (stats.empty()) throw Error("empty corpus: no words in " + input_dir);

  write_output(config.output_path, corpus_to_json(stats));
  print_summary(config.output_path.empty() ? std::cerr : std::cout, stats);
}

void cmd_corpus_merge(const RunConfig& config,
                      const std::vector<std::string>& inputs) {
  std::vector<CorpusStats> tables;
  for (const std::string& path : inputs) {
    tables.push_back(corpus_from_json(read_file(path)));
  }
  CorpusStats merged(tables.front().alpha());
  for (const CorpusStats& t : tables) merged = merge_stats(merged, t);
  write_output(config.output_path, corpus_to_json(merged));
  print_summary(config.output_path.empty() ? std::cerr : std::cout, merged);
}

std::string curve_path(const std::string& base, std::string_view label) {
  const fs::path p(base);
  fs::path out = p.parent_path() / p.stem();
  out += "." + std::string(label) + p.extension().string();
  return out.string();
}

void cmd_curves(const RunConfig& config) {
  const CorpusStats stats = load_corpus(config);
  const DocProfile profile = load_document(config);
  if (profile.length == 0) throw Error("document has no words");
  const EnergyModel model = build_energy_model(profile, stats);
  const std::vector<double> grid = config.grid();
  const std::vector<WordThermo> words = classify_words(model, config.bands);

  std::vector<ThermoCurve> curves;
  curves.push_back(ensemble_curves(model, grid));
  for (WordClass c :
       {WordClass::kKeyword, WordClass::kCommon, WordClass::kFunction}) {
    if (auto curve = class_curve(model, words, c, grid)) {
      curves.push_back(std::move(*curve));
    } else {
      std::cerr << "textherm: warning: no " << to_string(c)
                << " words, skipping that curve\n";
    }
  }

  if (config.output_path.empty()) {
    for (const ThermoCurve& curve : curves) {
      std::cout << "# " << curve.label << "\n";
      write_curve_csv(std::cout, curve);
    }
    return;
  }
  for (const ThermoCurve& curve : curves) {
    const std::string path = curve.label == "total"
                                 ? config.output_path
                                 : curve_path(config.output_path, curve.label);
    std::ostringstream csv;
    write_curve_csv(csv, curve);
    write_output(path, csv.str());
  }
}

void cmd_keywords(const RunConfig& config) {
  const CorpusStats stats = load_corpus(config);
  const DocProfile profile = load_document(config);
  const std::vector<WordThermo> words =
      classify_words(profile, stats, config.bands);
  const std::vector<WordThermo> top = rank_keywords(words, config.top);
  write_output(config.output_path,
               keyword_report_json(config.document_path, config.bands, top));
}

void cmd_extract(const RunConfig& config) {
  if (config.temperatures.empty()) throw Error("-T is required");
  const CorpusStats stats = load_corpus(config);
  const DocProfile profile = load_document(config);
  ExtractionOptions options;
  options.mode = config.mode;
  options.seed = config.seed;
  options.threads = std::max(1u, std::thread::hardware_concurrency());

  std::string text;
  for (double t : config.temperatures) {
    const ExtractionResult result =
        extract_at_temperature(profile, stats, t, options);
    if (config.temperatures.size() > 1) {
      char header[96];
      std::snprintf(header, sizeof header, "# T=%.17g retained=%.6f\n", t,
                    result.retained_word_fraction());
      text += header;
    }
    text += render(result, config.format);
    text += "\n";
  }
  write_output(config.output_path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Text thermodynamics: keyword temperatures and extractions"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML-style file with default option values");

  RunConfig config;
  std::string mode = "threshold";
  std::string format = "plain";

  app.add_option("--corpus", config.corpus_path, "Corpus stats JSON file");
  app.add_option("--doc", config.document_path, "Document text file");
  auto* alpha_opt = app.add_option("--alpha", config.alpha,
                                   "Additive smoothing constant")
                        ->capture_default_str();
  app.add_option("--t-min", config.t_min, "Lowest grid temperature")
      ->capture_default_str();
  app.add_option("--t-max", config.t_max, "Highest grid temperature")
      ->capture_default_str();
  app.add_option("--t-steps", config.t_steps, "Number of grid points")
      ->capture_default_str();
  app.add_flag("--log-grid,!--linear-grid", config.log_grid,
               "Log-spaced temperature grid (default)");
  app.add_option("--t-lo", config.bands.t_lo, "Function/common band edge")
      ->capture_default_str();
  app.add_option("--t-hi", config.bands.t_hi, "Common/keyword band edge")
      ->capture_default_str();
  app.add_option("--top", config.top, "Number of keywords to report")
      ->capture_default_str();
  app.add_option("-T,--temperature", config.temperatures,
                 "Extraction temperature (repeatable)");
  app.add_option("--mode", mode, "Extraction mode: threshold or sample")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for sample mode")
      ->capture_default_str();
  app.add_option("--format", format, "Render format: plain, tty, html, latex")
      ->capture_default_str();
  app.add_option("-o,--output", config.output_path,
                 "Output path (stdout when absent)");

  auto* corpus = app.add_subcommand("corpus", "Build or merge corpus stats");
  corpus->require_subcommand(1);
  std::string input_dir;
  auto* build = corpus->add_subcommand("build", "Count words of a directory");
  build->add_option("dir", input_dir, "Directory of text files")->required();
  std::vector<std::string> merge_inputs;
  auto* merge = corpus->add_subcommand("merge", "Merge corpus stats files");
  merge->add_option("files", merge_inputs, "Corpus stats files")
      ->required()
      ->expected(1, -1);
  auto* curves = app.add_subcommand("curves", "U, S, Cv curves as CSV");
  auto* keywords = app.add_subcommand("keywords", "Keyword report as JSON");
  auto* extract = app.add_subcommand("extract", "Render document at T");
  for (CLI::App* sub : {corpus, build, merge, curves, keywords, extract}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    config.alpha_set = alpha_opt->count() > 0;
    config.mode = parse_extraction_mode(mode);
    config.format = parse_render_format(format);
    config.validate();
    if (*build) {
      cmd_corpus_build(config, input_dir);
    } else if (*merge) {
      cmd_corpus_merge(config, merge_inputs);
    } else if (*curves) {
      cmd_curves(config);
    } else if (*keywords) {
      cmd_keywords(config);
    } else if (*extract) {
      cmd_extract(config);
    }
  } catch (const std::exception& e) {
    std::cerr << "textherm: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
