#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "smult/corpus.hpp"
#include "smult/dsl.hpp"
#include "smult/runner.hpp"

namespace {

using namespace smult;
using namespace smult::cli;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Configuration, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Flags {
  bool text = false;
  std::string field;
  std::string order;
  std::uint64_t max_steps = Limits{}.max_steps;
  std::size_t max_len = 0;
  bool metadata = false;

  RunOptions options() const {
    RunOptions o;
    if (!field.empty()) o.field = field;
    if (!order.empty()) o.order = order;
    o.limits.max_steps = max_steps;
    o.limits.max_len = max_len;
    o.metadata = metadata;
    return o;
  }
};

int emit_batch(const BatchReport& batch, const Flags& f) {
  std::cout << (f.text ? render_batch_text(batch) : render_batch_json(batch));
  return batch.exit_code;
}

int run_file(const std::string& path, const Flags& f) {
  const dsl::Program prog = dsl::parse_program(read_input(path));
  const RunOptions opts = f.options();
  validate_options(opts);
  int code = exit_ok;
  if (!prog.main.statements.empty()) {
    RunReport r = run_session(prog.main, opts);
    std::cout << (f.text ? render_text(r) : render_json(r));
    code = r.exit_code;
  }
  if (!prog.entries.empty()) {
    std::vector<CorpusEntry> entries;
    for (const auto& e : prog.entries) entries.push_back({path, e});
    code = worse_exit(code, emit_batch(run_corpus(entries, "", opts), f));
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"smult: intersection multiplicities of graded modules"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_flag("--text", f.text, "Aligned text instead of JSON lines");
  app.add_flag("--json", [&](std::int64_t) { f.text = false; }, "JSON lines (default)");
  app.add_option("--field", f.field, "Override every ring's field: qq or fp:P");
  app.add_option("--order", f.order, "Override every ring's monomial order: grevlex or lex");
  app.add_option("--max-steps", f.max_steps, "Reduction step cap")->check(CLI::PositiveNumber);
  app.add_option("--max-len", f.max_len, "Resolution length cap (0 = per-ring default)");
  app.add_flag("--metadata", f.metadata, "Append a wall-clock record");

  std::string file;
  auto* run = app.add_subcommand("run", "Evaluate a .sm program");
  run->add_option("file", file, "Program path, or - for stdin")->required();

  std::string corpus_path = default_corpus_dir().string(), filter;
  auto* corpus = app.add_subcommand("corpus", "Run bundled corpus entries");
  corpus->add_option("--corpus", corpus_path, "Corpus directory or file");
  corpus->add_option("--filter", filter, "Glob on entry ids");
  bool list_only = false;
  corpus->add_flag("--list", list_only, "Only list matching ids");

  std::uint64_t seed = 1;
  std::size_t count = 25;
  bool emit_only = false;
  auto* random = app.add_subcommand("random", "Seeded random vanishing pairs");
  random->add_option("--seed", seed, "Generator seed");
  random->add_option("--count", count, "Number of pairs");
  random->add_flag("--emit", emit_only, "Print the generated program instead of running it");

  auto* print = app.add_subcommand("print", "Parse and pretty-print a program");
  print->add_option("file", file, "Program path, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }

  try {
    if (*run) return run_file(file, f);
    if (*print) {
      std::cout << dsl::print_program(dsl::parse_program(read_input(file)));
      return exit_ok;
    }
    if (*corpus) {
      const auto entries = load_corpus(corpus_path);
      if (list_only) {
        for (const auto& e : entries)
          if (filter_matches(filter, e.entry.id)) std::cout << e.entry.id << "\t" << e.entry.source << "\t" << e.entry.cite << "\n";
        return exit_ok;
      }
      const RunOptions opts = f.options();
      validate_options(opts);
      return emit_batch(run_corpus(entries, filter, opts), f);
    }
    if (*random) {
      const std::string text = vanishing_program(random_vanishing_pairs(seed, count), seed);
      if (emit_only) {
        std::cout << text;
        return exit_ok;
      }
      const dsl::Program prog = dsl::parse_program(text);
      std::vector<CorpusEntry> entries;
      for (const auto& e : prog.entries) entries.push_back({"random", e});
      const RunOptions opts = f.options();
      validate_options(opts);
      return emit_batch(run_corpus(entries, "", opts), f);
    }
  } catch (const Error& e) {
    std::cerr << "smult: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return exit_usage;
}
