#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sys/wait.h>

#include "smult/corpus.hpp"
#include "smult/dsl.hpp"
#include "smult/runner.hpp"

using namespace smult;
using namespace smult::cli;

namespace {

std::vector<CorpusEntry> bundled() { return load_corpus(default_corpus_dir()); }

const dsl::Entry& find_entry(const std::vector<CorpusEntry>& corpus, const std::string& id) {
  for (const auto& c : corpus)
    if (c.entry.id == id) return c.entry;
  throw std::runtime_error("no entry " + id);
}

std::string parse_error(const std::string& text) {
  try {
    dsl::parse_program(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    return e.what();
  }
  ADD_FAILURE() << "parsed: " << text;
  return {};
}

RunReport run_text(const std::string& text, RunOptions opts = {}) {
  return run_session(dsl::parse_program(text).main, opts);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(SMULT_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Parse, RingAndCommand) {
  auto p = dsl::parse_program("ring S = QQ[x,y,z,w] grevlex; verify(coker[[x],[y]], coker[[z],[w]]);");
  ASSERT_EQ(p.main.statements.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<dsl::RingDecl>(p.main.statements[0]));
  EXPECT_EQ(p.main.count_commands(), 1u);
  const auto& c = std::get<dsl::Command>(p.main.statements[1]);
  EXPECT_EQ(c.name, "verify");
  EXPECT_EQ(c.args[0].module.rows, (dsl::Rows{{"x"}, {"y"}}));
}

TEST(Parse, TrailingCommaLocation) {
  const std::string msg = parse_error("ring S = QQ[x,]");
  EXPECT_EQ(msg.rfind("1:14:", 0), 0u) << msg;
  EXPECT_NE(msg.find("trailing comma"), std::string::npos);
  EXPECT_EQ(parse_error("ring S = QQ[x, y];\nring T = QQ[a,\n];").rfind("2:14:", 0), 0u);
}

TEST(Parse, LevineFileHasFourMaps) {
  auto corpus = bundled();
  const auto& e = find_entry(corpus, "levine/complex");
  std::size_t maps = 0;
  for (const auto& st : e.session.statements) maps += std::holds_alternative<dsl::MatrixDecl>(st);
  EXPECT_EQ(maps, 4u);
}

TEST(Parse, Errors) {
  parse_error("chi(S/(x), S/(y));");
  parse_error("ring S = QQ[x]; chi(S/(x), T/(x));");
  parse_error("ring S = QQ[x]; ideal I = (x); ideal I = (x^2);");
  parse_error("ring S = QQ[x]; frobnicate(S);");
  parse_error("ring S = QQ[x]; chi(S/(x));");
  parse_error("ring S = QQ[x]; chi(S/(x), S/(x), 3);");
  parse_error("ring S = QQ[x]; dim(S/(y));");
  parse_error("ring S = QQ[x, x];");
  parse_error("ring S = GF(12)[x];");
  parse_error("ring S = QQ[x]; matrix m = [[x, 1], [x]];");
  parse_error("ring S = QQ[x]; dim(S/(x))");
  parse_error("ring S = QQ[x]; note \"open");
}

TEST(Parse, EntriesNeedProvenance) {
  parse_error("entry \"a\" cite \"c\" { ring S = QQ[x]; }");
  parse_error("entry \"a\" source folklore cite \"c\" { ring S = QQ[x]; }");
  parse_error("entry \"a\" source oracle { ring S = QQ[x]; }");
  parse_error("entry \"a\" source oracle cite \"\" { ring S = QQ[x]; }");
  parse_error("entry \"a\" source oracle cite \"c\" { ring S = QQ[x]; } entry \"a\" source oracle cite \"c\" { }");
  auto p = dsl::parse_program("entry \"a\" source oracle cite \"c\" { ring S = QQ[x]; dim(S); }");
  EXPECT_EQ(p.entries.at(0).session.count_commands(), 1u);
}

TEST(Parse, EntriesHaveSeparateScopes) {
  parse_error(
      "entry \"a\" source oracle cite \"c\" { ring S = QQ[x]; }\n"
      "entry \"b\" source oracle cite \"c\" { dim(S); }");
}

TEST(Parse, PolynomialsAreCanonical) {
  auto p = dsl::parse_program("ring S = QQ[x,y]; ideal I = (y + x, 2*x*x - 1/2, (x+y)^2);");
  const auto& i = std::get<dsl::IdealDecl>(p.main.statements[1]);
  EXPECT_EQ(i.generators, (std::vector<std::string>{"x + y", "2*x^2 - 1/2", "x^2 + 2*x*y + y^2"}));
}

TEST(Properties, PrintParseRoundTripOnCorpus) {
  for (const auto& c : bundled()) {
    dsl::Program p;
    p.entries.push_back(c.entry);
    const std::string text = dsl::print_program(p);
    EXPECT_EQ(dsl::parse_program(text), p) << text;
    EXPECT_EQ(dsl::print_program(dsl::parse_program(text)), text);
  }
}

TEST(Properties, PrintParseRoundTripRandom) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-3, 3), ex(0, 3);
  const char* vars[] = {"a", "b", "c"};
  auto poly = [&] {
    std::string s;
    for (int t = 0; t < 3; ++t) {
      s += (t ? " + " : "") + std::string("(") + std::to_string(coeff(rng)) + ")";
      for (const char* v : vars) s += std::string("*") + v + "^" + std::to_string(ex(rng));
    }
    return s;
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::string text = "ring R = QQ[a, b, c] lex / (" + poly() + ");\n";
    text += "ideal I = (" + poly() + ", " + poly() + ");\n";
    text += "matrix m = [[" + poly() + ", " + poly() + "], [" + poly() + ", 0]];\n";
    text += "module M = coker m {0, " + std::to_string(ex(rng)) + "};\n";
    text += "module N = R/I;\n";
    text += "complex C = (m, m);\n";
    text += "tor(M, N, " + std::to_string(ex(rng)) + ") expect [1, -2, 3];\n";
    text += "e(N, I) expect " + std::to_string(coeff(rng)) + ";\n";
    text += "periodic(C); periodic(M, 4) expect pass; rank(m, N);\nnote \"free text\";\n";
    auto p = dsl::parse_program(text);
    EXPECT_EQ(dsl::parse_program(dsl::print_program(p)), p) << dsl::print_program(p);
  }
}

TEST(Run, TwoPlanesRecord) {
  auto r = run_text(
      "ring S = QQ[x,y,z,w];\n"
      "verify(S/(x*z, x*w, y*z, y*w), S/(x - z, y - w)) expect pass;\n");
  ASSERT_EQ(r.records.size(), 1u);
  const Json& v = r.records[0]["value"];
  EXPECT_EQ(v["tor_lengths"], Json::parse("[3,1,0,0,0]"));
  EXPECT_EQ(v["chi"], 2);
  EXPECT_EQ(v["case"], "proper");
  EXPECT_EQ(r.records[0]["status"], "pass");
  EXPECT_EQ(r.exit_code, exit_ok);
}

TEST(Run, WrongExpectationFails) {
  auto r = run_text("ring S = QQ[x,y];\nchi(S/(x), S/(y)) expect 2;\nlength(S/(x, y^2)) expect 2;\n");
  EXPECT_EQ(r.exit_code, exit_fail);
  EXPECT_EQ(r.records[0]["status"], "fail");
  EXPECT_EQ(r.records[0]["expected"], 2);
  EXPECT_EQ(r.records[0]["got"], 1);
  EXPECT_EQ(r.records[1]["status"], "pass");
}

TEST(Run, EngineErrorsAreRecords) {
  auto r = run_text("ring S = QQ[x,y];\nchi(S/(x), S/(x));\ndim(S/(x));\n");
  EXPECT_EQ(r.records[0]["status"], "error");
  EXPECT_EQ(r.records[0]["error"]["kind"], "SerreConditionViolated");
  EXPECT_EQ(r.records[1]["value"], 1);
  EXPECT_EQ(r.exit_code, exit_fail);
}

TEST(Run, ShiftInference) {
  auto r = run_text(
      "ring S = QQ[x,y];\n"
      "hilbert(coker [[x, y^2]], 1);\n"
      "hilbert(coker [[x, 0], [0, y]], 1);\n"
      "hilbert(coker [[x, 0], [0, y]] {0, 1}, 1);\n"
      "hilbert(coker [[x + y^2]], 1);\n"
      "hilbert(coker [[x], [y^2]], 2);\n");
  EXPECT_EQ(r.records[0]["value"], 1);
  EXPECT_EQ(r.records[1]["error"]["kind"], "InvalidArgument");
  EXPECT_EQ(r.records[2]["value"], 2);
  EXPECT_EQ(r.records[3]["error"]["kind"], "NotGraded");
  // rows shifted 1 and 0: generator degrees {1, 0}, relation (x, y^2) in degree 2
  EXPECT_EQ(r.records[4]["value"], 4);
}

TEST(Run, FieldAndOrderOverrides) {
  const std::string text = "ring S = QQ[x,y,z,w];\ntor(S/(x*z, x*w, y*z, y*w), S/(x - z, y - w));\n";
  RunOptions o;
  o.field = "fp:32003";
  o.order = "lex";
  auto r = run_text(text, o);
  EXPECT_EQ(r.records[0]["value"]["tor_lengths"], Json::parse("[3,1,0,0,0]"));
  o.field = "fp:12";
  EXPECT_THROW(
      {
        try {
          run_text(text, o);
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::Configuration);
          throw;
        }
      },
      Error);
  RunOptions bad;
  bad.order = "revlex";
  EXPECT_THROW(validate_options(bad), Error);
  RunOptions half;
  half.field = "fp:2";
  auto r2 = run_text("ring S = QQ[x];\ndim(S/(1/2*x));\n", half);
  EXPECT_EQ(r2.records.at(0)["status"], "error");
  EXPECT_EQ(r2.exit_code, exit_usage);
}

TEST(Run, ResourceLimit) {
  RunOptions o;
  o.limits.max_steps = 3;
  auto r = run_text("ring S = QQ[x,y,z,w];\ntor(S/(x*z, x*w, y*z, y*w), S/(x - z, y - w));\n", o);
  EXPECT_EQ(r.records[0]["error"]["kind"], "ResourceLimitExceeded");
  EXPECT_EQ(r.exit_code, exit_resource);
}

TEST(Run, RankOfTensoredMap) {
  auto r = run_text(
      "ring S = QQ[x,y];\nmatrix m = [[x, y]];\n"
      "rank(m, S/(x, y)) expect 0;\nrank(m, S/(x^2, y^2)) expect 3;\n");
  EXPECT_EQ(r.exit_code, exit_ok) << render_json(r);
}

TEST(Properties, Determinism) {
  auto corpus = bundled();
  RunOptions o;
  const std::string a = render_batch_json(run_corpus(corpus, "", o));
  const std::string b = render_batch_json(run_corpus(corpus, "", o));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("elapsed"), std::string::npos);
  o.metadata = true;
  auto r = run_text("ring S = QQ[x];\ndim(S);\n", o);
  ASSERT_TRUE(r.metadata);
  EXPECT_FALSE(r.records[0].contains("metadata"));
  EXPECT_EQ(render_json(r).find("elapsed"), render_json(r).rfind("elapsed"));
}

TEST(Corpus, EveryEntryTaggedAndPassing) {
  auto corpus = bundled();
  auto batch = run_corpus(corpus, "", {});
  for (const auto& e : batch.entries) {
    EXPECT_FALSE(e.cite.empty()) << e.id;
    EXPECT_TRUE(e.report.passed()) << e.id << "\n" << render_json(e.report);
  }
  EXPECT_EQ(batch.exit_code, exit_ok);
}

TEST(Corpus, Filters) {
  auto corpus = bundled();
  auto vanishing = run_corpus(corpus, "vanishing/*", {});
  EXPECT_GE(vanishing.entries.size(), 10u);
  EXPECT_EQ(vanishing.exit_code, exit_ok);
  auto levine = run_corpus(corpus, "levine", {});
  EXPECT_EQ(levine.entries.size(), 3u);
  EXPECT_EQ(levine.exit_code, exit_ok);
  auto none = run_corpus(corpus, "no-such-entry", {});
  EXPECT_TRUE(none.entries.empty());
  EXPECT_EQ(none.exit_code, exit_ok);
  EXPECT_TRUE(filter_matches("two-planes/*", "two-planes/tor"));
  EXPECT_FALSE(filter_matches("two", "two-planes/tor"));
}

TEST(Corpus, LoaderRejections) {
  EXPECT_THROW(load_corpus("/nonexistent/corpus"), Error);
  const auto dir = std::filesystem::temp_directory_path() / "smult_corpus_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "bad.sm") << "ring S = QQ[x];\ndim(S);\n";
  }
  try {
    load_corpus(dir);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Configuration);
  }
  std::filesystem::remove_all(dir);
}

// phi1..phi4 typed independently of corpus/levine.sm.
TEST(Corpus, LevineTranscription) {
  const auto corpus = bundled();
  const auto& e = find_entry(corpus, "levine/complex");
  std::map<std::string, dsl::Rows> got;
  std::string text;
  for (const auto& st : e.session.statements) {
    if (const auto* m = std::get_if<dsl::MatrixDecl>(&st)) {
      got[m->name] = m->rows;
      text += dsl::print_statement(st) + "\n";
    }
  }
  EXPECT_EQ(got["phi1"], (dsl::Rows{{"u", "v", "w"}}));
  EXPECT_EQ(got["phi2"], (dsl::Rows{{"x", "0", "-w", "v"}, {"y", "w", "0", "-u"}, {"z", "-v", "u", "0"}}));
  EXPECT_EQ(got["phi3"],
            (dsl::Rows{{"0", "u", "v", "w"}, {"u", "0", "z", "-y"}, {"v", "-z", "0", "x"}, {"w", "y", "-x", "0"}}));
  EXPECT_EQ(got["phi4"],
            (dsl::Rows{{"0", "x", "y", "z"}, {"x", "0", "-w", "v"}, {"y", "w", "0", "-u"}, {"z", "-v", "u", "0"}}));
  EXPECT_EQ(fnv1a(text), 0x8d5affa45d0f6d25ull) << std::hex << fnv1a(text) << "\n" << text;
}

TEST(Random, GeneratorIsSeededAndValid) {
  auto a = random_vanishing_pairs(5, 10);
  auto b = random_vanishing_pairs(5, 10);
  ASSERT_EQ(a.size(), 10u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].m, b[i].m);
    EXPECT_EQ(a[i].n, b[i].n);
    EXPECT_LT(a[i].dim_m + a[i].dim_n, 4);
  }
  auto p = dsl::parse_program(vanishing_program(a, 5));
  EXPECT_EQ(p.entries.size(), 10u);
}

TEST(Binary, ExitCodes) {
  const std::string dir = std::filesystem::temp_directory_path() / "smult_bin_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir + "/ok.sm") << "ring S = QQ[x,y];\nchi(S/(x), S/(y)) expect 1;\n";
  std::ofstream(dir + "/wrong.sm") << "ring S = QQ[x,y];\nchi(S/(x), S/(y)) expect 5;\n";
  std::ofstream(dir + "/bad.sm") << "ring S = QQ[x,]\n";
  EXPECT_EQ(run_binary("run " + dir + "/ok.sm"), 0);
  EXPECT_EQ(run_binary("run " + dir + "/wrong.sm"), 1);
  EXPECT_EQ(run_binary("run " + dir + "/bad.sm"), 2);
  EXPECT_EQ(run_binary("--bogus run " + dir + "/ok.sm"), 2);
  EXPECT_EQ(run_binary("--max-steps 3 run " + dir + "/ok.sm"), 0);
  EXPECT_EQ(run_binary("corpus --filter 'vanishing/*'"), 0);
  EXPECT_EQ(run_binary("corpus --filter nothing"), 0);
  EXPECT_EQ(run_binary("corpus --corpus " + dir + "/missing"), 2);
  std::filesystem::remove_all(dir);
}
