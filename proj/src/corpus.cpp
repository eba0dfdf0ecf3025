#include "smult/corpus.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "smult/fpmodule.hpp"

#ifndef SMULT_DEFAULT_CORPUS
#define SMULT_DEFAULT_CORPUS "corpus"
#endif

namespace smult::cli {

namespace fs = std::filesystem;

fs::path default_corpus_dir() { return fs::path(SMULT_DEFAULT_CORPUS); }

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorKind::Configuration, "cannot read corpus file " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string joined(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "; " : "") + xs[i];
  return out;
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const fs::path& path) {
  std::error_code ec;
  if (!fs::exists(path, ec)) throw Error(ErrorKind::Configuration, "corpus not found: " + path.string());
  std::vector<fs::path> files;
  if (fs::is_directory(path, ec)) {
    for (const auto& e : fs::directory_iterator(path))
      if (e.is_regular_file() && e.path().extension() == ".sm") files.push_back(e.path());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  std::vector<CorpusEntry> out;
  std::set<std::string> ids;
  for (const auto& f : files) {
    dsl::Program prog;
    try {
      prog = dsl::parse_program(read_file(f));
    } catch (const Error& e) {
      throw Error(e.kind(), f.filename().string() + ":" + e.what());
    }
    if (!prog.main.statements.empty()) {
      throw Error(ErrorKind::Configuration,
                  f.filename().string() + ": statements outside an entry carry no provenance tag");
    }
    for (auto& e : prog.entries) {
      if (!ids.insert(e.id).second) {
        throw Error(ErrorKind::Configuration, "duplicate corpus id " + e.id);
      }
      out.push_back({f.filename().string(), std::move(e)});
    }
  }
  return out;
}

bool filter_matches(const std::string& pattern, const std::string& id) {
  if (pattern.empty()) return true;
  if (fnmatch(pattern.c_str(), id.c_str(), 0) == 0) return true;
  const auto slash = id.find('/');
  return slash != std::string::npos && fnmatch(pattern.c_str(), id.substr(0, slash).c_str(), 0) == 0;
}

BatchReport run_corpus(const std::vector<CorpusEntry>& corpus, const std::string& filter,
                       const RunOptions& options) {
  BatchReport batch;
  for (const auto& c : corpus) {
    if (!filter_matches(filter, c.entry.id)) continue;
    EntryResult r;
    r.id = c.entry.id;
    r.source = c.entry.source;
    r.cite = c.entry.cite;
    r.report = run_session(c.entry.session, options);
    std::vector<std::string> expected, got;
    for (const auto& rec : r.report.records) {
      if (rec.contains("error")) {
        got.push_back(rec["error"]["kind"].get<std::string>());
        if (rec.contains("expected")) expected.push_back(compact(rec["expected"], 24));
      } else if (rec.contains("expected")) {
        expected.push_back(compact(rec["expected"], 24));
        got.push_back(compact(rec["got"], 24));
      }
    }
    r.expected = joined(expected);
    r.got = joined(got);
    batch.exit_code = worse_exit(batch.exit_code, r.report.exit_code);
    batch.entries.push_back(std::move(r));
  }
  return batch;
}

std::string render_batch_json(const BatchReport& batch) {
  std::string out;
  for (const auto& e : batch.entries) {
    for (const auto& rec : e.report.records) {
      Json tagged = Json::object();
      tagged["entry"] = e.id;
      for (const auto& [k, v] : rec.items()) tagged[k] = v;
      out += tagged.dump() + "\n";
    }
  }
  return out;
}

std::string render_batch_text(const BatchReport& batch) {
  std::vector<std::array<std::string, 5>> rows{{"id", "expected", "got", "citation", "status"}};
  std::size_t passed = 0;
  for (const auto& e : batch.entries) {
    const bool ok = e.report.passed();
    passed += ok;
    rows.push_back({e.id, compact(e.expected, 40), compact(e.got, 40), compact(e.cite, 44),
                    ok ? "pass" : "fail"});
  }
  std::array<std::size_t, 5> w{};
  for (const auto& row : rows)
    for (std::size_t i = 0; i < 5; ++i) w[i] = std::max(w[i], row[i].size());
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < 5; ++i) {
      line += row[i];
      if (i + 1 < 5) line += std::string(w[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  out += std::to_string(passed) + "/" + std::to_string(batch.entries.size()) + " entries pass\n";
  return out;
}

namespace {

const char* const kVars[] = {"x1", "x2", "x3", "x4"};

std::string power(std::size_t var, int e) {
  return e == 1 ? kVars[var] : std::string(kVars[var]) + "^" + std::to_string(e);
}

// Pure powers on the chosen variables plus a few mixed monomials.
std::vector<std::string> random_ideal(std::mt19937_64& rng, unsigned mask) {
  std::uniform_int_distribution<int> exp(1, 3), mixed(0, 2), extra(0, 2);
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < 4; ++i)
    if (mask & (1u << i)) gens.push_back(power(i, exp(rng)));
  const int count = extra(rng);
  for (int k = 0; k < count; ++k) {
    std::string t;
    int vars = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      const int e = mixed(rng);
      if (e == 0) continue;
      t += (t.empty() ? "" : "*") + power(i, e);
      ++vars;
    }
    if (vars >= 2) gens.push_back(t);
  }
  return gens;
}

}  // namespace

std::vector<MonomialPair> random_vanishing_pairs(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  auto ring = QuotientRing::make(RingSpec::make(FieldSpec::rationals(), {"x1", "x2", "x3", "x4"}));
  std::uniform_int_distribution<unsigned> masks(1, 15);
  std::vector<MonomialPair> out;
  for (std::size_t attempts = 0; out.size() < count; ++attempts) {
    if (attempts > 1000 * (count + 1)) {
      throw Error(ErrorKind::ResourceLimitExceeded, "random pair generator made no progress");
    }
    const unsigned a = masks(rng), b = masks(rng);
    // I + J contains a pure power of every variable exactly when the masks cover
    if ((a | b) != 15u) continue;
    MonomialPair p{random_ideal(rng, a), random_ideal(rng, b)};
    std::vector<Polynomial> gm, gn;
    for (const auto& t : p.m) gm.push_back(parse_polynomial(t, ring->base()));
    for (const auto& t : p.n) gn.push_back(parse_polynomial(t, ring->base()));
    p.dim_m = krull_dim(FPModule::cyclic(ring, gm));
    p.dim_n = krull_dim(FPModule::cyclic(ring, gn));
    if (p.dim_m + p.dim_n >= 4) continue;
    out.push_back(std::move(p));
  }
  return out;
}

std::string vanishing_program(const std::vector<MonomialPair>& pairs, std::uint64_t seed) {
  auto list = [](const std::vector<std::string>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
    return out + ")";
  };
  std::string out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& p = pairs[k];
    out += "entry \"random/" + std::to_string(seed) + "-" + std::to_string(k + 1) +
           "\" source identity cite \"vanishing theorem for dim M + dim N < dim A\" {\n";
    out += "  ring S = QQ[x1, x2, x3, x4] grevlex;\n";
    out += "  verify(S/" + list(p.m) + ", S/" + list(p.n) + ") expect pass;\n";
    out += "  chi(S/" + list(p.m) + ", S/" + list(p.n) + ") expect 0;\n";
    out += "}\n";
  }
  return out;
}

}  // namespace smult::cli
