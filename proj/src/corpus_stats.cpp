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

#include <cmath>
#include <string>
#include <utility>

#include "json.hpp"
#include "textherm/error.hpp"
#include "textherm/textcorpus.hpp"

namespace textherm {
namespace {

constexpr int kCorpusFormatVersion = 1;

void check_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0) {
    throw Error("smoothing constant alpha must be finite and >= 0, got " +
                std::to_string(alpha));
  }
}

}  // namespace

CorpusStats::CorpusStats(double alpha) : alpha_(alpha) { check_alpha(alpha); }

CorpusStats::CorpusStats(double alpha, WordCounts counts)
    : alpha_(alpha), counts_(std::move(counts)) {
  check_alpha(alpha);
  for (const auto& [word, n] : counts_) {
    if (n == 0) throw Error("corpus count for \"" + word + "\" is zero");
    total_ += n;
  }
}

std::uint64_t CorpusStats::count(std::string_view word) const {
  auto it = counts_.find(word);
  return it == counts_.end() ? 0 : it->second;
}

void CorpusStats::add(std::span<const Token> tokens) {
  for (const Token& token : tokens) {
    if (token.is_word()) add(token.normalized);
  }
}

void CorpusStats::add(std::string_view word, std::uint64_t n) {
  if (n == 0) return;
  auto it = counts_.find(word);
  if (it == counts_.end()) {
    counts_.emplace(std::string(word), n);
  } else {
    it->second += n;
  }
  total_ += n;
}

CorpusStats CorpusStats::with_alpha(double alpha) const {
  check_alpha(alpha);
  CorpusStats out = *this;
  out.alpha_ = alpha;
  return out;
}

CorpusStats build_corpus_stats(std::span<const std::vector<Token>> documents,
                               double alpha) {
  CorpusStats stats(alpha);
  for (const auto& doc : documents) stats.add(doc);
  if (stats.empty()) throw Error("empty corpus");
  return stats;
}

CorpusStats merge_stats(const CorpusStats& a, const CorpusStats& b) {
  if (a.alpha() != b.alpha()) {
    throw Error("cannot merge corpus stats with different alpha (" +
                std::to_string(a.alpha()) + " vs " +
                std::to_string(b.alpha()) + ")");
  }
  const CorpusStats& big = a.vocab_size() >= b.vocab_size() ? a : b;
  const CorpusStats& small = &big == &a ? b : a;
  CorpusStats out = big;
  for (const auto& [word, n] : small.counts()) out.add(word, n);
  return out;
}

double corpus_probability(const CorpusStats& stats, std::string_view word) {
  if (stats.empty()) throw Error("empty corpus");
  const std::uint64_t n = stats.count(word);
  if (n == 0 && stats.alpha() == 0) {
    throw Error("zero-probability word \"" + std::string(word) + "\"");
  }
  const double alpha = stats.alpha();
  return (static_cast<double>(n) + alpha) /
         (static_cast<double>(stats.total_tokens()) +
          alpha * static_cast<double>(stats.vocab_size() + 1));
}

std::string corpus_to_json(const CorpusStats& stats) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [word, n] : stats.counts()) counts[word] = n;
  // nlohmann::json objects are std::map backed, so keys come out sorted.
  nlohmann::json doc = {{"version", kCorpusFormatVersion},
                        {"alpha", stats.alpha()},
                        {"total_tokens", stats.total_tokens()},
                        {"counts", std::move(counts)}};
  return doc.dump(2) + "\n";
}

CorpusStats corpus_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("corpus file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("corpus file must hold a JSON object");
  for (const char* key : {"version", "alpha", "total_tokens", "counts"}) {
    if (!doc.contains(key)) {
      throw Error(std::string("corpus file lacks \"") + key + "\"");
    }
  }
  if (!doc["version"].is_number_integer() ||
      doc["version"].get<int>() != kCorpusFormatVersion) {
    throw Error("unsupported corpus file version " + doc["version"].dump());
  }
  if (!doc["alpha"].is_number()) throw Error("corpus alpha must be a number");
  if (!doc["total_tokens"].is_number_unsigned() &&
      !(doc["total_tokens"].is_number_integer() &&
        doc["total_tokens"].get<std::int64_t>() >= 0)) {
    throw Error("corpus total_tokens must be a non-negative integer");
  }
  if (!doc["counts"].is_object()) throw Error("corpus counts must be an object");

  WordCounts counts;
  for (const auto& [word, value] : doc["counts"].items()) {
    if (!value.is_number_integer() || value.get<std::int64_t>() < 1) {
      throw Error("corpus count for \"" + word + "\" must be an integer >= 1");
    }
    counts.emplace(word, value.get<std::uint64_t>());
  }
  CorpusStats stats(doc["alpha"].get<double>(), std::move(counts));
  if (stats.total_tokens() != doc["total_tokens"].get<std::uint64_t>()) {
    throw Error("corpus total_tokens " + doc["total_tokens"].dump() +
                " does not match the sum of counts " +
                std::to_string(stats.total_tokens()));
  }
  return stats;
}

DocProfile doc_profile(std::vector<Token> tokens) {
  DocProfile profile;
  profile.tokens = std::move(tokens);
  for (const Token& token : profile.tokens) {
    if (!token.is_word()) continue;
    auto it = profile.word_counts.find(token.normalized);
    if (it == profile.word_counts.end()) {
      profile.word_counts.emplace(token.normalized, 1);
    } else {
      ++it->second;
    }
    ++profile.length;
  }
  return profile;
}

}  // namespace textherm
