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

// Tokenization, reference-corpus frequency tables and document profiles.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace textherm {

enum class TokenKind { kWord, kPunctuation, kNumber };

std::string_view to_string(TokenKind kind);

// Half-open byte range [begin, end) into the tokenized source.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  std::string surface;
  std::string normalized;
  TokenKind kind = TokenKind::kWord;
  Span span;

  bool is_word() const { return kind == TokenKind::kWord; }
  friend bool operator==(const Token&, const Token&) = default;
};

struct TokenizerConfig {
  bool lowercase = true;
};

// Splits UTF-8 text into words, numbers and punctuation. Whitespace is
// skipped; every other byte belongs to exactly one token, so the spans tile
// the non-whitespace bytes of the input in order. A maximal run of letters
// and digits is one token: a number when it is all digits, a word otherwise.
// Every other visible character, hyphens included, is a standalone
// punctuation token. Bytes that are not valid UTF-8 become single-byte
// punctuation tokens.
std::vector<Token> tokenize(std::string_view text,
                            const TokenizerConfig& config = {});

using WordCounts = std::map<std::string, std::uint64_t, std::less<>>;

inline constexpr double kDefaultAlpha = 0.5;

// Word frequencies of a reference corpus with additive smoothing. Every
// stored count is at least one and the counts sum to total_tokens().
class CorpusStats {
 public:
  explicit CorpusStats(double alpha = kDefaultAlpha);
  // Throws when alpha is negative or non-finite, or when a count is zero.
  CorpusStats(double alpha, WordCounts counts);

  double alpha() const { return alpha_; }
  std::uint64_t total_tokens() const { return total_; }
  std::size_t vocab_size() const { return counts_.size(); }
  const WordCounts& counts() const { return counts_; }
  bool empty() const { return total_ == 0; }

  std::uint64_t count(std::string_view word) const;

  // Adds every word token of the sequence.
  void add(std::span<const Token> tokens);
  void add(std::string_view word, std::uint64_t n = 1);

  // Same counts, different smoothing constant.
  CorpusStats with_alpha(double alpha) const;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;

 private:
  double alpha_;
  std::uint64_t total_ = 0;
  WordCounts counts_;
};

// Counts the word tokens of every document. Throws "empty corpus" when the
// documents hold no word tokens at all.
CorpusStats build_corpus_stats(std::span<const std::vector<Token>> documents,
                               double alpha = kDefaultAlpha);

// Per-word sum of two tables. Commutative and associative, with an empty
// table of the same alpha as identity. Throws when the alphas differ.
CorpusStats merge_stats(const CorpusStats& a, const CorpusStats& b);

// (count + alpha) / (total + alpha * (vocab + 1)). Unseen words share one
// pooled out-of-vocabulary slot, so the vocabulary plus that slot sums to 1.
double corpus_probability(const CorpusStats& stats, std::string_view word);

// Versioned JSON form: {"alpha", "counts", "total_tokens", "version"} with
// keys in lexicographic order, pretty-printed with a trailing newline.
std::string corpus_to_json(const CorpusStats& stats);
CorpusStats corpus_from_json(std::string_view text);

struct DocProfile {
  std::vector<Token> tokens;
  WordCounts word_counts;
  std::uint64_t length = 0;  // number of word tokens
};

DocProfile doc_profile(std::vector<Token> tokens);

}  // namespace textherm
