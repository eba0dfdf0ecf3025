#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "smult/polyring.hpp"

namespace smult::dsl {

// Polynomials are kept as canonical text of the declaring ring, so a session
// can be re-evaluated under a different field or order.
using Rows = std::vector<std::vector<std::string>>;

struct RingDecl {
  std::string name;
  std::string field;  // "QQ" or "GF(p)"
  std::vector<std::string> variables;
  std::string order = "grevlex";
  std::vector<int> weights;
  std::vector<std::string> relations;
  friend bool operator==(const RingDecl&, const RingDecl&) = default;
};

struct IdealDecl {
  std::string name;
  std::string ring;
  std::vector<std::string> generators;
  friend bool operator==(const IdealDecl&, const IdealDecl&) = default;
};

struct MatrixDecl {
  std::string name;
  std::string ring;
  Rows rows;
  friend bool operator==(const MatrixDecl&, const MatrixDecl&) = default;
};

struct ModuleExpr {
  enum class Kind { name, coker, quotient, ring };
  Kind kind = Kind::name;
  /// Module name, matrix name for a named cokernel, ring name otherwise.
  std::string ref;
  /// Ideal name for R/I.
  std::string ideal;
  Rows rows;
  std::vector<std::string> generators;
  std::optional<std::vector<int>> shifts;
  friend bool operator==(const ModuleExpr&, const ModuleExpr&) = default;
};

struct ModuleDecl {
  std::string name;
  std::string ring;
  ModuleExpr expr;
  friend bool operator==(const ModuleDecl&, const ModuleDecl&) = default;
};

/// d_1, d_2, ... given by matrix names; shifts of F_0 optional.
struct ComplexDecl {
  std::string name;
  std::string ring;
  std::vector<std::string> maps;
  std::optional<std::vector<int>> shifts;
  friend bool operator==(const ComplexDecl&, const ComplexDecl&) = default;
};

struct Arg {
  enum class Kind { module, ideal, complex, matrix, integer };
  Kind kind = Kind::integer;
  ModuleExpr module;
  /// Ideal, complex or matrix name; empty for an inline ideal.
  std::string name;
  std::vector<std::string> generators;
  long long value = 0;
  friend bool operator==(const Arg&, const Arg&) = default;
};

struct Expect {
  enum class Kind { integer, list, pass };
  Kind kind = Kind::pass;
  long long value = 0;
  std::vector<long long> list;
  friend bool operator==(const Expect&, const Expect&) = default;
};

struct Command {
  std::string name;
  std::string ring;
  std::vector<Arg> args;
  std::optional<Expect> expect;
  friend bool operator==(const Command&, const Command&) = default;
};

/// Free-text remark carried into the report unevaluated.
struct Note {
  std::string text;
  friend bool operator==(const Note&, const Note&) = default;
};

using Statement = std::variant<RingDecl, IdealDecl, MatrixDecl, ModuleDecl, ComplexDecl, Command, Note>;

struct Session {
  std::vector<Statement> statements;
  friend bool operator==(const Session&, const Session&) = default;
  std::size_t count_commands() const;
};

struct Entry {
  std::string id;
  std::string source;  // literature | oracle | identity
  std::string cite;
  Session session;
  friend bool operator==(const Entry&, const Entry&) = default;
};

struct Program {
  Session main;
  std::vector<Entry> entries;
  friend bool operator==(const Program&, const Program&) = default;
};

const std::vector<std::string>& command_names();
const std::vector<std::string>& provenance_tags();

/// Throws Error(ParseError) with "line:col: message".
Program parse_program(std::string_view text);
std::string print_program(const Program& p);
std::string print_session(const Session& s, const std::string& indent = "");
std::string print_statement(const Statement& s);
std::string print_arg(const Arg& a);
std::string print_module(const ModuleExpr& m);

RingPtr make_base_ring(const RingDecl& decl);
FieldSpec parse_field(const std::string& text);

}  // namespace smult::dsl
