#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "smult/runner.hpp"

namespace smult::cli {

struct CorpusEntry {
  std::string file;
  dsl::Entry entry;
};

/// Corpus directory baked in at configure time.
std::filesystem::path default_corpus_dir();

/// Loads every `.sm` file of a directory (sorted by name), or a single file.
/// Statements outside an entry are rejected, as are duplicate ids. Throws
/// Error(Configuration) for a missing path and Error(ParseError) for bad input.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);

/// Glob match on the entry id, or on its first `/`-separated component.
bool filter_matches(const std::string& pattern, const std::string& id);

struct EntryResult {
  std::string id;
  std::string source;
  std::string cite;
  RunReport report;
  std::string expected;
  std::string got;
};

struct BatchReport {
  std::vector<EntryResult> entries;
  int exit_code = exit_ok;
};

BatchReport run_corpus(const std::vector<CorpusEntry>& corpus, const std::string& filter,
                       const RunOptions& options);

/// Command records tagged with their entry id.
std::string render_batch_json(const BatchReport& batch);
/// Summary table: id, expected, got, citation, status.
std::string render_batch_text(const BatchReport& batch);

/// Two monomial ideals of k[x1..x4], as generator text.
struct MonomialPair {
  std::vector<std::string> m;
  std::vector<std::string> n;
  int dim_m = 0;
  int dim_n = 0;
};

/// Rejection-samples pairs with dim S/I + dim S/J < 4 and I + J primary to
/// the maximal ideal. Deterministic in the seed.
std::vector<MonomialPair> random_vanishing_pairs(std::uint64_t seed, std::size_t count);

/// A corpus-style program with one entry per pair checking verify and chi = 0.
std::string vanishing_program(const std::vector<MonomialPair>& pairs, std::uint64_t seed);

}  // namespace smult::cli
