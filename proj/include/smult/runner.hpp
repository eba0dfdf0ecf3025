#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "smult/dsl.hpp"
#include "smult/error.hpp"
#include "smult/fpmodule.hpp"

namespace smult::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { exit_ok = 0, exit_fail = 1, exit_usage = 2, exit_resource = 3 };

struct RunOptions {
  /// Replaces the field of every ring declaration ("qq", "fp:P", "QQ", "GF(P)").
  std::optional<std::string> field;
  /// Replaces the monomial order of every ring declaration.
  std::optional<std::string> order;
  Limits limits;
  /// Emit a trailing wall-clock record; off by default so output is reproducible.
  bool metadata = false;
};

struct RunReport {
  /// One object per command, plus declaration failures.
  std::vector<Json> records;
  std::vector<std::string> notes;
  std::optional<Json> metadata;
  int exit_code = exit_ok;

  bool passed() const { return exit_code == exit_ok; }
};

/// Throws Error(Configuration) when an override is malformed.
void validate_options(const RunOptions& options);

RunReport run_session(const dsl::Session& session, const RunOptions& options);

struct ModulePair {
  std::string command;
  FPModule m;
  FPModule n;
};

/// Module arguments of every two-module command of a session, in order.
/// Declarations that fail are skipped.
std::vector<ModulePair> module_pairs(const dsl::Session& session, const RunOptions& options = {});

int worse_exit(int a, int b);
int exit_code_for(ErrorKind kind);

/// Newline-delimited JSON, metadata last.
std::string render_json(const RunReport& report);
/// Aligned columns: command, value, expected, status.
std::string render_text(const RunReport& report);

/// Compact rendering of a JSON value for tables.
std::string compact(const Json& value, std::size_t width = 48);

}  // namespace smult::cli
