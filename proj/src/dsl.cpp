#include "smult/dsl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "lexer.hpp"
#include "poly_parse.hpp"

namespace smult::dsl {

using detail::Token;
using detail::TokenStream;
using detail::TokKind;

namespace {

enum class ArgSlot { module, ideal, complex_or_module, complex, matrix, integer };

struct Signature {
  std::vector<ArgSlot> required;
  std::vector<ArgSlot> optional;
};

const std::map<std::string, Signature>& signatures() {
  static const std::map<std::string, Signature> table = [] {
    using A = ArgSlot;
    std::map<std::string, Signature> t;
    for (const char* c : {"chi", "xi", "theta", "verify", "diagonal_check"}) {
      t[c] = {{A::module, A::module}, {}};
    }
    t["chi_i"] = {{A::module, A::module, A::integer}, {}};
    t["tor"] = {{A::module, A::module}, {A::integer}};
    t["ext"] = {{A::module, A::module}, {A::integer}};
    t["resolve"] = {{A::module}, {A::integer}};
    t["betti"] = {{A::module}, {A::integer}};
    t["dim"] = {{A::module}, {}};
    t["length"] = {{A::module}, {}};
    t["hilbert"] = {{A::module}, {A::integer}};
    t["e"] = {{A::module, A::ideal}, {A::integer}};
    t["koszul_e"] = {{A::ideal, A::module}, {}};
    t["check_complex"] = {{A::complex}, {}};
    t["periodic"] = {{A::complex_or_module}, {A::integer}};
    t["rank"] = {{A::matrix, A::module}, {}};
    return t;
  }();
  return table;
}

struct Scope {
  std::map<std::string, RingPtr> rings;
  std::set<std::string> ideals, matrices, modules, complexes;
  std::string current_ring;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : in_(detail::tokenize(text)) {}

  Program program() {
    Program p;
    Scope main_scope;
    while (!in_.at_end()) {
      if (in_.is_ident("entry")) {
        p.entries.push_back(entry());
      } else {
        p.main.statements.push_back(statement(main_scope));
      }
    }
    std::set<std::string> ids;
    for (const auto& e : p.entries) {
      if (!ids.insert(e.id).second) {
        throw Error(ErrorKind::ParseError, "duplicate entry id \"" + e.id + "\"");
      }
    }
    return p;
  }

 private:
  Entry entry() {
    in_.next();
    Entry e;
    e.id = string_literal("entry id");
    if (!in_.accept_ident("source")) in_.fail("expected 'source' provenance tag");
    const Token tag = in_.peek();
    e.source = in_.expect_ident();
    const auto& tags = provenance_tags();
    if (std::find(tags.begin(), tags.end(), e.source) == tags.end()) {
      TokenStream::fail_at(tag, "unknown provenance tag");
    }
    if (!in_.accept_ident("cite")) in_.fail("expected 'cite' string");
    e.cite = string_literal("citation");
    if (e.cite.empty()) TokenStream::fail_at(tag, "empty citation");
    in_.expect_punct('{');
    Scope scope;
    while (!in_.is_punct('}')) {
      if (in_.at_end()) in_.fail("unterminated entry");
      e.session.statements.push_back(statement(scope));
    }
    in_.next();
    return e;
  }

  std::string string_literal(const char* what) {
    if (in_.peek().kind != TokKind::string) in_.fail(std::string("expected ") + what);
    return in_.next().text;
  }

  Statement statement(Scope& scope) {
    const Token head = in_.peek();
    if (head.kind != TokKind::ident) in_.fail("expected statement");
    Statement out;
    if (head.text == "ring") {
      out = ring_decl(scope);
    } else if (head.text == "ideal") {
      out = ideal_decl(scope);
    } else if (head.text == "matrix") {
      out = matrix_decl(scope);
    } else if (head.text == "module") {
      out = module_decl(scope);
    } else if (head.text == "complex") {
      out = complex_decl(scope);
    } else if (head.text == "note") {
      in_.next();
      out = Note{string_literal("note text")};
    } else {
      out = command(scope);
    }
    in_.expect_punct(';');
    return out;
  }

  std::string new_name(std::set<std::string>& taken, const char* kind) {
    const Token tok = in_.peek();
    std::string name = in_.expect_ident();
    if (!taken.insert(name).second) {
      TokenStream::fail_at(tok, std::string("duplicate ") + kind + " name");
    }
    return name;
  }

  const RingPtr& current(const Scope& scope) {
    if (scope.current_ring.empty()) in_.fail("no ring declared");
    return scope.rings.at(scope.current_ring);
  }

  std::string canonical(const RingPtr& ring) {
    return detail::parse_poly_expr(in_, ring).to_string();
  }

  std::vector<std::string> poly_list(const RingPtr& ring) {
    std::vector<std::string> out;
    in_.expect_punct('(');
    if (in_.accept_punct(')')) return out;
    do {
      out.push_back(canonical(ring));
    } while (in_.accept_punct(','));
    in_.expect_punct(')');
    return out;
  }

  long long integer() {
    bool neg = in_.accept_punct('-');
    if (in_.peek().kind != TokKind::integer) in_.fail("expected integer");
    const Token t = in_.next();
    long long v = 0;
    try {
      v = std::stoll(t.text);
    } catch (const std::exception&) {
      TokenStream::fail_at(t, "integer out of range");
    }
    return neg ? -v : v;
  }

  std::vector<int> int_list(char open, char close) {
    std::vector<int> out;
    in_.expect_punct(open);
    if (in_.accept_punct(close)) return out;
    do {
      out.push_back(static_cast<int>(integer()));
    } while (in_.accept_punct(','));
    in_.expect_punct(close);
    return out;
  }

  RingDecl ring_decl(Scope& scope) {
    in_.next();
    RingDecl d;
    const Token name_tok = in_.peek();
    d.name = in_.expect_ident();
    if (scope.rings.count(d.name)) TokenStream::fail_at(name_tok, "duplicate ring name");
    in_.expect_punct('=');
    const Token field_tok = in_.peek();
    std::string field = in_.expect_ident();
    if (field == "GF") {
      in_.expect_punct('(');
      if (in_.peek().kind != TokKind::integer) in_.fail("expected characteristic");
      field += "(" + in_.next().text + ")";
      in_.expect_punct(')');
    }
    try {
      d.field = parse_field(field).to_string();
    } catch (const Error& e) {
      TokenStream::fail_at(field_tok, e.what());
    }
    in_.expect_punct('[');
    std::set<std::string> seen;
    while (true) {
      const Token v = in_.peek();
      if (v.kind != TokKind::ident) {
        if (!d.variables.empty()) {
          TokenStream::fail_at(last_comma_, "trailing comma in variable list");
        }
        in_.fail("expected variable name");
      }
      in_.next();
      if (!seen.insert(v.text).second) TokenStream::fail_at(v, "duplicate variable");
      d.variables.push_back(v.text);
      if (in_.is_punct(',')) {
        last_comma_ = in_.next();
        continue;
      }
      break;
    }
    in_.expect_punct(']');
    if (in_.peek().kind == TokKind::ident &&
        (in_.is_ident("grevlex") || in_.is_ident("lex") || in_.is_ident("wgrevlex"))) {
      d.order = in_.next().text;
    }
    if (in_.accept_ident("weights")) {
      const Token at = in_.peek();
      d.weights = int_list('(', ')');
      if (d.weights.size() != d.variables.size()) {
        TokenStream::fail_at(at, "weight count does not match variable count");
      }
    }
    RingPtr ring;
    try {
      ring = make_base_ring(d);
    } catch (const Error& e) {
      TokenStream::fail_at(name_tok, e.what());
    }
    if (in_.accept_punct('/')) d.relations = poly_list(ring);
    scope.rings[d.name] = ring;
    scope.current_ring = d.name;
    return d;
  }

  IdealDecl ideal_decl(Scope& scope) {
    in_.next();
    IdealDecl d;
    d.name = new_name(scope.ideals, "ideal");
    in_.expect_punct('=');
    d.ring = scope.current_ring;
    d.generators = poly_list(current(scope));
    return d;
  }

  Rows rows(const RingPtr& ring) {
    Rows out;
    in_.expect_punct('[');
    do {
      std::vector<std::string> row;
      in_.expect_punct('[');
      do {
        row.push_back(canonical(ring));
      } while (in_.accept_punct(','));
      in_.expect_punct(']');
      if (!out.empty() && row.size() != out.front().size()) {
        in_.fail("ragged matrix rows");
      }
      out.push_back(std::move(row));
    } while (in_.accept_punct(','));
    in_.expect_punct(']');
    return out;
  }

  MatrixDecl matrix_decl(Scope& scope) {
    in_.next();
    MatrixDecl d;
    d.name = new_name(scope.matrices, "matrix");
    in_.expect_punct('=');
    d.ring = scope.current_ring;
    d.rows = rows(current(scope));
    return d;
  }

  void require(const std::set<std::string>& names, const Token& tok, const char* kind) {
    if (!names.count(tok.text)) TokenStream::fail_at(tok, std::string("undeclared ") + kind);
  }

  ModuleExpr module_expr(Scope& scope) {
    ModuleExpr m;
    const Token tok = in_.peek();
    if (tok.kind != TokKind::ident) in_.fail("expected module expression");
    if (tok.text == "coker" && (in_.is_punct('[', 1) || in_.peek(1).kind == TokKind::ident)) {
      in_.next();
      m.kind = ModuleExpr::Kind::coker;
      if (in_.is_punct('[')) {
        m.rows = rows(current(scope));
      } else {
        const Token ref = in_.next();
        require(scope.matrices, ref, "matrix");
        m.ref = ref.text;
      }
      if (in_.is_punct('{')) m.shifts = int_list('{', '}');
      return m;
    }
    in_.next();
    if (in_.is_punct('/')) {
      if (!scope.rings.count(tok.text)) TokenStream::fail_at(tok, "undeclared ring");
      in_.next();
      m.kind = ModuleExpr::Kind::quotient;
      m.ref = tok.text;
      if (in_.is_punct('(')) {
        m.generators = poly_list(scope.rings.at(tok.text));
      } else {
        const Token id = in_.peek();
        in_.expect_ident();
        require(scope.ideals, id, "ideal");
        m.ideal = id.text;
      }
      return m;
    }
    if (scope.modules.count(tok.text)) {
      m.kind = ModuleExpr::Kind::name;
    } else if (scope.rings.count(tok.text)) {
      m.kind = ModuleExpr::Kind::ring;
    } else {
      TokenStream::fail_at(tok, "undeclared module");
    }
    m.ref = tok.text;
    return m;
  }

  ModuleDecl module_decl(Scope& scope) {
    in_.next();
    const Token name_tok = in_.peek();
    ModuleDecl d;
    d.name = in_.expect_ident();
    if (scope.modules.count(d.name)) TokenStream::fail_at(name_tok, "duplicate module name");
    in_.expect_punct('=');
    d.ring = scope.current_ring;
    d.expr = module_expr(scope);
    scope.modules.insert(d.name);
    return d;
  }

  ComplexDecl complex_decl(Scope& scope) {
    in_.next();
    ComplexDecl d;
    d.name = new_name(scope.complexes, "complex");
    in_.expect_punct('=');
    d.ring = scope.current_ring;
    current(scope);
    in_.expect_punct('(');
    do {
      const Token t = in_.peek();
      in_.expect_ident();
      require(scope.matrices, t, "matrix");
      d.maps.push_back(t.text);
    } while (in_.accept_punct(','));
    in_.expect_punct(')');
    if (in_.is_punct('{')) d.shifts = int_list('{', '}');
    return d;
  }

  Arg arg(ArgSlot slot, Scope& scope) {
    Arg a;
    switch (slot) {
      case ArgSlot::integer:
        a.kind = Arg::Kind::integer;
        a.value = integer();
        return a;
      case ArgSlot::ideal:
        a.kind = Arg::Kind::ideal;
        if (in_.is_punct('(')) {
          a.generators = poly_list(current(scope));
        } else {
          const Token t = in_.peek();
          in_.expect_ident();
          require(scope.ideals, t, "ideal");
          a.name = t.text;
        }
        return a;
      case ArgSlot::complex: {
        a.kind = Arg::Kind::complex;
        const Token t = in_.peek();
        in_.expect_ident();
        require(scope.complexes, t, "complex");
        a.name = t.text;
        return a;
      }
      case ArgSlot::matrix: {
        a.kind = Arg::Kind::matrix;
        const Token t = in_.peek();
        in_.expect_ident();
        require(scope.matrices, t, "matrix");
        a.name = t.text;
        return a;
      }
      case ArgSlot::complex_or_module:
        if (in_.peek().kind == TokKind::ident && scope.complexes.count(in_.peek().text) &&
            !in_.is_punct('/', 1)) {
          return arg(ArgSlot::complex, scope);
        }
        [[fallthrough]];
      case ArgSlot::module:
        a.kind = Arg::Kind::module;
        a.module = module_expr(scope);
        return a;
    }
    return a;
  }

  Command command(Scope& scope) {
    const Token head = in_.next();
    const auto it = signatures().find(head.text);
    if (it == signatures().end()) TokenStream::fail_at(head, "unknown command");
    const Signature& sig = it->second;
    Command c;
    c.name = head.text;
    c.ring = scope.current_ring;
    current(scope);
    in_.expect_punct('(');
    for (std::size_t i = 0; i < sig.required.size(); ++i) {
      if (i > 0) in_.expect_punct(',');
      c.args.push_back(arg(sig.required[i], scope));
    }
    for (ArgSlot slot : sig.optional) {
      if (!in_.accept_punct(',')) break;
      c.args.push_back(arg(slot, scope));
    }
    if (!in_.is_punct(')')) in_.fail("wrong number of arguments for " + c.name);
    in_.next();
    if (in_.accept_ident("expect")) {
      Expect e;
      if (in_.accept_ident("pass")) {
        e.kind = Expect::Kind::pass;
      } else if (in_.accept_punct('[')) {
        e.kind = Expect::Kind::list;
        if (!in_.accept_punct(']')) {
          do {
            e.list.push_back(integer());
          } while (in_.accept_punct(','));
          in_.expect_punct(']');
        }
      } else {
        e.kind = Expect::Kind::integer;
        e.value = integer();
      }
      c.expect = e;
    }
    return c;
  }

  TokenStream in_;
  Token last_comma_;
};

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out;
}

template <class T>
std::string join_ints(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
  return out;
}

std::string print_rows(const Rows& rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) out += (i ? ", [" : "[") + join(rows[i]) + "]";
  return out + "]";
}

}  // namespace

std::string print_module(const ModuleExpr& m) {
  switch (m.kind) {
    case ModuleExpr::Kind::name:
    case ModuleExpr::Kind::ring:
      return m.ref;
    case ModuleExpr::Kind::quotient:
      return m.ref + "/" + (m.ideal.empty() ? "(" + join(m.generators) + ")" : m.ideal);
    case ModuleExpr::Kind::coker: {
      std::string out = "coker " + (m.ref.empty() ? print_rows(m.rows) : m.ref);
      if (m.shifts) out += " {" + join_ints(*m.shifts) + "}";
      return out;
    }
  }
  return {};
}

std::string print_arg(const Arg& a) {
  switch (a.kind) {
    case Arg::Kind::module:
      return print_module(a.module);
    case Arg::Kind::ideal:
      return a.name.empty() ? "(" + join(a.generators) + ")" : a.name;
    case Arg::Kind::complex:
    case Arg::Kind::matrix:
      return a.name;
    case Arg::Kind::integer:
      return std::to_string(a.value);
  }
  return {};
}

namespace {

std::string quote(const std::string& s) { return "\"" + s + "\""; }

struct StatementPrinter {
  std::string operator()(const RingDecl& d) const {
    std::string out = "ring " + d.name + " = " + d.field + "[" + join(d.variables) + "] " + d.order;
    if (!d.weights.empty()) out += " weights(" + join_ints(d.weights) + ")";
    if (!d.relations.empty()) out += " / (" + join(d.relations) + ")";
    return out;
  }
  std::string operator()(const IdealDecl& d) const {
    return "ideal " + d.name + " = (" + join(d.generators) + ")";
  }
  std::string operator()(const MatrixDecl& d) const {
    return "matrix " + d.name + " = " + print_rows(d.rows);
  }
  std::string operator()(const ModuleDecl& d) const {
    return "module " + d.name + " = " + print_module(d.expr);
  }
  std::string operator()(const ComplexDecl& d) const {
    std::string out = "complex " + d.name + " = (" + join(d.maps) + ")";
    if (d.shifts) out += " {" + join_ints(*d.shifts) + "}";
    return out;
  }
  std::string operator()(const Note& n) const { return "note " + quote(n.text); }
  std::string operator()(const Command& c) const {
    std::vector<std::string> args;
    for (const auto& a : c.args) args.push_back(print_arg(a));
    std::string out = c.name + "(" + join(args) + ")";
    if (c.expect) {
      switch (c.expect->kind) {
        case Expect::Kind::pass: out += " expect pass"; break;
        case Expect::Kind::integer: out += " expect " + std::to_string(c.expect->value); break;
        case Expect::Kind::list: out += " expect [" + join_ints(c.expect->list) + "]"; break;
      }
    }
    return out;
  }
};

}  // namespace

std::size_t Session::count_commands() const {
  return static_cast<std::size_t>(std::count_if(statements.begin(), statements.end(), [](const auto& s) {
    return std::holds_alternative<Command>(s);
  }));
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, sig] : signatures()) out.push_back(name);
    return out;
  }();
  return names;
}

const std::vector<std::string>& provenance_tags() {
  static const std::vector<std::string> tags = {"literature", "oracle", "identity"};
  return tags;
}

Program parse_program(std::string_view text) { return Parser(text).program(); }

std::string print_statement(const Statement& s) { return std::visit(StatementPrinter{}, s); }

std::string print_session(const Session& s, const std::string& indent) {
  std::string out;
  for (const auto& st : s.statements) out += indent + std::visit(StatementPrinter{}, st) + ";\n";
  return out;
}

std::string print_program(const Program& p) {
  std::string out = print_session(p.main);
  for (const auto& e : p.entries) {
    if (!out.empty()) out += "\n";
    out += "entry " + quote(e.id) + " source " + e.source + " cite " + quote(e.cite) + " {\n";
    out += print_session(e.session, "  ");
    out += "}\n";
  }
  return out;
}

FieldSpec parse_field(const std::string& text) {
  if (text == "QQ" || text == "qq") return FieldSpec::rationals();
  std::string digits;
  if (text.rfind("GF(", 0) == 0 && text.size() > 4 && text.back() == ')') {
    digits = text.substr(3, text.size() - 4);
  } else if (text.rfind("fp:", 0) == 0) {
    digits = text.substr(3);
  } else {
    throw Error(ErrorKind::InvalidField, "unknown field " + text);
  }
  if (digits.empty() || digits.size() > 12 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorKind::InvalidField, "bad characteristic in " + text);
  }
  return FieldSpec::prime(std::stoull(digits));
}

RingPtr make_base_ring(const RingDecl& decl) {
  MonomialOrder order;
  if (decl.order == "grevlex") {
    order.kind = OrderKind::grevlex;
  } else if (decl.order == "lex") {
    order.kind = OrderKind::lex;
  } else if (decl.order == "wgrevlex") {
    order.kind = OrderKind::weighted_grevlex;
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown monomial order " + decl.order);
  }
  return RingSpec::make(parse_field(decl.field), decl.variables, order, decl.weights);
}

}  // namespace smult::dsl
