#include "smult/runner.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <deque>
#include <map>

#include "smult/multiplicity.hpp"

namespace smult::cli {

namespace {

using dsl::Arg;
using dsl::Command;
using dsl::Expect;
using dsl::ModuleExpr;

struct Env {
  std::map<std::string, QuotientPtr> rings;
  std::map<std::string, dsl::IdealDecl> ideals;
  std::map<std::string, dsl::MatrixDecl> matrices;
  std::map<std::string, FPModule> modules;
  std::map<std::string, FreeComplex> complexes;
};

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* kind) {
  auto it = m.find(name);
  if (it == m.end()) {
    throw Error(ErrorKind::InvalidArgument, std::string(kind) + " " + name + " is unavailable");
  }
  return it->second;
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

Matrix build_matrix(const dsl::Rows& rows, const RingPtr& ring) {
  Matrix m(ring, rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = parse_polynomial(rows[r][c], ring);
  return m;
}

/// Row shifts t with deg a_ij = s_j - t_i on nonzero entries, the smallest
/// being 0. Rows must be linked through nonzero entries.
std::vector<int> infer_row_shifts(const Matrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c)
      if (!m.at(r, c).is_zero() && !m.at(r, c).is_homogeneous())
        throw Error(ErrorKind::NotGraded, "matrix entry " + m.at(r, c).to_string() + " is not homogeneous");
  std::vector<std::optional<int>> t(nr), s(nc);
  if (nr == 0) return {};
  t[0] = 0;
  std::deque<std::pair<bool, std::size_t>> queue{{true, 0}};
  while (!queue.empty()) {
    auto [is_row, k] = queue.front();
    queue.pop_front();
    const std::size_t other = is_row ? nc : nr;
    for (std::size_t j = 0; j < other; ++j) {
      const std::size_t r = is_row ? k : j, c = is_row ? j : k;
      const Polynomial& f = m.at(r, c);
      if (f.is_zero()) continue;
      if (is_row) {
        const int want = f.degree() + *t[r];
        if (!s[c]) {
          s[c] = want;
          queue.emplace_back(false, c);
        } else if (*s[c] != want) {
          throw Error(ErrorKind::NotGraded, "matrix admits no consistent grading");
        }
      } else {
        const int want = *s[c] - f.degree();
        if (!t[r]) {
          t[r] = want;
          queue.emplace_back(true, r);
        } else if (*t[r] != want) {
          throw Error(ErrorKind::NotGraded, "matrix admits no consistent grading");
        }
      }
    }
  }
  std::vector<int> out;
  for (const auto& v : t) {
    if (!v) throw Error(ErrorKind::InvalidArgument, "row shifts are ambiguous; give them as {..}");
    out.push_back(*v);
  }
  const int lo = *std::min_element(out.begin(), out.end());
  for (int& v : out) v -= lo;
  return out;
}

std::vector<int> column_shifts(const Matrix& m, const std::vector<int>& rows) {
  std::vector<int> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::optional<int> d;
    for (std::size_t r = 0; r < m.rows() && !d; ++r)
      if (!m.at(r, c).is_zero()) d = m.at(r, c).degree() + rows[r];
    if (!d) throw Error(ErrorKind::InvalidArgument, "cannot infer the degree of a zero column");
    out.push_back(*d);
  }
  return out;
}

FPModule coker(const Matrix& m, const QuotientPtr& ring, const std::optional<std::vector<int>>& shifts) {
  std::vector<int> t;
  if (shifts) {
    if (shifts->size() != m.rows())
      throw Error(ErrorKind::InvalidArgument, "shift count does not match matrix rows");
    t = *shifts;
  } else {
    t = infer_row_shifts(m);
  }
  std::vector<ModuleVector> rels;
  for (auto& col : m.columns())
    if (!col.is_zero()) rels.push_back(std::move(col));
  return FPModule::from_relations(FreeModule(ring, t), rels);
}

class Evaluator {
 public:
  Evaluator(const RunOptions& options) : options_(options) {}

  Env env;

  void declare_ring(const dsl::RingDecl& decl) {
    dsl::RingDecl eff = decl;
    if (options_.field) eff.field = dsl::parse_field(*options_.field).to_string();
    if (options_.order) eff.order = *options_.order;
    if (eff.order != "wgrevlex") eff.weights.clear();
    RingPtr base = dsl::make_base_ring(eff);
    env.rings[decl.name] = QuotientRing::make(base, parse_all(decl.relations, base));
  }

  void declare_module(const dsl::ModuleDecl& decl) {
    env.modules.insert_or_assign(decl.name, module(decl.expr, decl.ring));
  }

  void declare_complex(const dsl::ComplexDecl& decl) {
    const QuotientPtr& q = lookup(env.rings, decl.ring, "ring");
    FreeComplex c;
    std::vector<Matrix> ms;
    for (const auto& name : decl.maps) ms.push_back(build_matrix(lookup(env.matrices, name, "matrix").rows, q->base()));
    std::vector<int> shifts = decl.shifts ? *decl.shifts : infer_row_shifts(ms.front());
    c.modules.emplace_back(q, shifts);
    for (const auto& m : ms) {
      if (m.rows() != c.modules.back().rank())
        throw Error(ErrorKind::InvalidArgument, "map sizes in complex do not compose");
      FreeModule src(q, column_shifts(m, c.modules.back().shifts));
      c.maps.emplace_back(src, c.modules.back(), m);
      c.modules.push_back(src);
    }
    env.complexes.insert_or_assign(decl.name, std::move(c));
  }

  FPModule module(const ModuleExpr& e, const std::string& ring_name) {
    switch (e.kind) {
      case ModuleExpr::Kind::name:
        return lookup(env.modules, e.ref, "module");
      case ModuleExpr::Kind::ring:
        return FPModule::free(FreeModule::of_rank(lookup(env.rings, e.ref, "ring"), 1));
      case ModuleExpr::Kind::quotient: {
        const QuotientPtr& q = lookup(env.rings, e.ref, "ring");
        const auto& gens = e.ideal.empty() ? e.generators : lookup(env.ideals, e.ideal, "ideal").generators;
        return FPModule::cyclic(q, parse_all(gens, q->base()));
      }
      case ModuleExpr::Kind::coker: {
        if (e.ref.empty()) {
          const QuotientPtr& q = lookup(env.rings, ring_name, "ring");
          return coker(build_matrix(e.rows, q->base()), q, e.shifts);
        }
        const auto& decl = lookup(env.matrices, e.ref, "matrix");
        const QuotientPtr& q = lookup(env.rings, decl.ring, "ring");
        return coker(build_matrix(decl.rows, q->base()), q, e.shifts);
      }
    }
    throw Error(ErrorKind::InvalidArgument, "bad module expression");
  }

  struct Outcome {
    Json value;
    Json got;
    std::optional<bool> verdict;
  };

  Outcome evaluate(const Command& c) {
    const std::string& n = c.name;
    auto mod = [&](std::size_t i) { return module(c.args.at(i).module, c.ring); };
    auto opt_int = [&](std::size_t i) -> std::optional<long long> {
      if (c.args.size() <= i) return std::nullopt;
      return c.args[i].value;
    };
    auto nonneg = [&](std::size_t i) -> std::optional<std::size_t> {
      auto v = opt_int(i);
      if (!v) return std::nullopt;
      if (*v < 0) throw Error(ErrorKind::InvalidArgument, "index must be nonnegative");
      return static_cast<std::size_t>(*v);
    };
    Outcome out;
    auto scalar = [&](long long v) {
      out.value = v;
      out.got = v;
    };
    if (n == "chi") {
      scalar(chi(mod(0), mod(1)));
    } else if (n == "xi") {
      scalar(xi(mod(0), mod(1)));
    } else if (n == "theta") {
      scalar(theta(mod(0), mod(1)));
    } else if (n == "chi_i") {
      scalar(chi_higher(mod(0), mod(1), *nonneg(2)));
    } else if (n == "tor" || n == "ext") {
      TorProfile p = n == "tor" ? tor(mod(0), mod(1), nonneg(2)) : ext(mod(0), mod(1), nonneg(2));
      out.value = profile_json(p, n + "_lengths");
      out.got = p.lengths;
    } else if (n == "resolve") {
      resolve(mod(0), nonneg(1), out);
    } else if (n == "betti") {
      FPModule m = mod(0);
      auto shown = nonneg(1);
      Resolution r = free_resolution(m, shown ? std::optional(std::max<std::size_t>(*shown, 1) - 1) : std::nullopt);
      BettiTable b = r.betti();
      if (shown) b.shifts.resize(*shown);
      out.value = Json::object();
      out.value["ranks"] = b.ranks();
      out.value["betti"] = b.shifts;
      out.value["complete"] = r.complete();
      out.got = b.ranks();
    } else if (n == "dim") {
      scalar(krull_dim(mod(0)));
    } else if (n == "length") {
      scalar(length(mod(0)));
    } else if (n == "hilbert") {
      FPModule m = mod(0);
      if (auto d = opt_int(1)) {
        scalar(hilbert_function(m, static_cast<int>(*d)));
      } else {
        HilbertData h = hilbert_data(m);
        Json values = Json::array(), got = Json::array();
        for (const auto& [deg, v] : h.values) {
          values.push_back({deg, v});
          got.push_back(v);
        }
        out.value = Json::object();
        out.value["values"] = values;
        out.value["polynomial"] = rationals(h.polynomial);
        out.value["stabilization"] = h.stabilization;
        out.got = got;
      }
    } else if (n == "e") {
      FPModule m = mod(0);
      auto k = nonneg(2);
      SamuelData s = hilbert_samuel(m, ideal(c.args.at(1), m), k);
      out.value = Json::object();
      out.value["e"] = s.e;
      out.value["k"] = s.k;
      out.value["polynomial"] = rationals(s.polynomial);
      out.value["stabilization"] = s.stabilization;
      out.got = s.e;
    } else if (n == "koszul_e") {
      FPModule m = mod(1);
      auto seq = ideal(c.args.at(0), m);
      long long k = koszul_euler(seq, m);
      long long e = hilbert_samuel(m, seq, seq.size()).e;
      out.value = Json::object();
      out.value["koszul_euler"] = k;
      out.value["e_k"] = e;
      out.value["agree"] = k == e;
      out.got = k;
      out.verdict = k == e;
    } else if (n == "verify") {
      MultiplicityReport r = verify_serre_pair(mod(0), mod(1));
      out.value = report_json(r);
      out.got = r.chi;
      out.verdict = r.all_pass();
    } else if (n == "diagonal_check") {
      DiagonalReport r = diagonal_reduction_check(mod(0), mod(1));
      out.value = Json::object();
      out.value["a_side"] = r.a_side.lengths;
      out.value["b_side"] = r.b_side.lengths;
      out.value["agree"] = r.agree;
      out.got = r.a_side.lengths;
      out.verdict = r.agree;
    } else if (n == "check_complex") {
      check_complex(lookup(env.complexes, c.args.at(0).name, "complex"), out);
    } else if (n == "periodic") {
      std::optional<PeriodicityCertificate> cert;
      if (c.args.at(0).kind == Arg::Kind::complex) {
        cert = detect_periodicity(lookup(env.complexes, c.args[0].name, "complex"));
      } else {
        cert = free_resolution(mod(0), nonneg(1)).certificate;
      }
      out.value = certificate_json(cert);
      out.got = cert ? Json(cert->onset) : Json();
    } else if (n == "rank") {
      scalar(image_length(lookup(env.matrices, c.args.at(0).name, "matrix"), mod(1)));
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown command " + n);
    }
    return out;
  }

 private:
  std::vector<Polynomial> ideal(const Arg& a, const FPModule& m) {
    const auto& texts = a.name.empty() ? a.generators : lookup(env.ideals, a.name, "ideal").generators;
    return parse_all(texts, m.ring()->base());
  }

  static Json rationals(const std::vector<mpq_class>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(x.get_str());
    return out;
  }

  static Json certificate_json(const std::optional<PeriodicityCertificate>& cert) {
    Json out = Json::object();
    out["periodic"] = cert.has_value();
    if (cert) {
      out["onset"] = cert->onset;
      out["period"] = cert->period;
      out["shift"] = cert->shift;
    }
    return out;
  }

  static Json profile_json(const TorProfile& p, const std::string& key) {
    Json out = Json::object();
    out[key] = p.lengths;
    out["complete"] = p.complete();
    out["completeness"] = to_string(p.completeness);
    if (p.certificate) out["certificate"] = certificate_json(p.certificate);
    return out;
  }

  static Json report_json(const MultiplicityReport& r) {
    Json out = Json::object();
    out["dims"] = {{"M", r.dim_m}, {"N", r.dim_n}, {"A", r.dim_a}};
    out["tensor_length"] = r.tensor_length;
    out["tor_lengths"] = r.tor.lengths;
    out["chi"] = r.chi;
    out["xi"] = r.xi ? Json(*r.xi) : Json();
    out["chi_higher"] = r.chi_higher;
    out["case"] = to_string(r.kind);
    Json vs = Json::array();
    for (const auto& v : r.verdicts) vs.push_back({{"name", v.name}, {"status", to_string(v.status)}});
    out["verdicts"] = vs;
    return out;
  }

  static Json verdict(const std::string& name, bool ok) {
    return {{"name", name}, {"status", ok ? "pass" : "fail"}};
  }

  void resolve(const FPModule& m, std::optional<std::size_t> shown, Outcome& out) {
    std::optional<std::size_t> len;
    if (shown) len = std::max(*shown == 0 ? 0 : *shown - 1, default_max_len(*m.ring()));
    Resolution r = free_resolution(m, len);
    std::vector<std::size_t> ranks = r.betti().ranks();
    if (shown) ranks.resize(*shown, 0);
    // exactness at i needs d_i and d_{i+1}, both inside the shown positions
    std::size_t hi = r.complex.length() == 0 ? 0 : r.complex.length() - 1;
    if (shown) hi = std::min(hi, *shown >= 2 ? *shown - 2 : 0);
    bool squares = true, exact = true;
    for (std::size_t i = 1; i <= hi; ++i) {
      squares = squares && r.complex.d(i).compose(r.complex.d(i + 1)).is_zero();
      exact = exact && is_exact_at(r.complex, i);
    }
    out.value = Json::object();
    out.value["betti"] = ranks;
    out.value["complete"] = r.complete();
    out.value["periodicity"] = certificate_json(r.certificate);
    out.value["verdicts"] = {verdict("d_squared_zero", squares), verdict("exact", exact)};
    out.got = ranks;
    out.verdict = squares && exact;
  }

  void check_complex(const FreeComplex& c, Outcome& out) {
    bool squares = is_complex(c);
    Json exact_at = Json::array();
    bool exact = true;
    for (std::size_t i = 1; i < c.length(); ++i) {
      bool ok = is_exact_at(c, i);
      exact = exact && ok;
      if (ok) exact_at.push_back(i);
    }
    std::vector<std::size_t> ranks;
    for (const auto& f : c.modules) ranks.push_back(f.rank());
    out.value = Json::object();
    out.value["ranks"] = ranks;
    out.value["exact_at"] = exact_at;
    out.value["verdicts"] = {verdict("d_squared_zero", squares), verdict("exact", exact)};
    out.got = ranks;
    out.verdict = squares && exact;
  }

  // Length of the image of phi (x) N inside N^rows.
  long long image_length(const dsl::MatrixDecl& decl, const FPModule& n) {
    const QuotientPtr& q = n.ring();
    Matrix phi = build_matrix(decl.rows, q->base());
    std::vector<int> t = infer_row_shifts(phi);
    const auto& g = n.generators().shifts;
    const std::size_t gr = g.size(), rank = phi.rows() * gr;
    std::vector<int> shifts;
    for (std::size_t i = 0; i < phi.rows(); ++i)
      for (int s : g) shifts.push_back(t[i] + s);
    std::vector<ModuleVector> gens, rels;
    for (std::size_t j = 0; j < phi.cols(); ++j)
      for (std::size_t k = 0; k < gr; ++k) {
        ModuleVector v = ModuleVector::zero(q->base(), rank);
        for (std::size_t i = 0; i < phi.rows(); ++i) v.components[i * gr + k] = q->reduce(phi.at(i, j));
        if (!v.is_zero()) gens.push_back(std::move(v));
      }
    for (std::size_t i = 0; i < phi.rows(); ++i)
      for (const auto& r : n.relations()) {
        ModuleVector v = ModuleVector::zero(q->base(), rank);
        for (std::size_t k = 0; k < gr; ++k) v.components[i * gr + k] = r.components[k];
        rels.push_back(std::move(v));
      }
    auto len = subquotient_series(FreeModule(q, shifts), gens, rels).length();
    if (!len) throw Error(ErrorKind::InfiniteLength, "image has infinite length");
    return *len;
  }

  const RunOptions& options_;
};

Json expect_json(const Expect& e) {
  switch (e.kind) {
    case Expect::Kind::pass: return "pass";
    case Expect::Kind::integer: return e.value;
    case Expect::Kind::list: return e.list;
  }
  return {};
}

bool matches(const Expect& e, const Json& got, std::optional<bool> verdict) {
  switch (e.kind) {
    case Expect::Kind::pass: return verdict.value_or(true);
    case Expect::Kind::integer: return got.is_number_integer() && got.get<long long>() == e.value;
    case Expect::Kind::list: {
      if (!got.is_array() || got.size() != e.list.size()) return false;
      for (std::size_t i = 0; i < e.list.size(); ++i)
        if (!got[i].is_number_integer() || got[i].get<long long>() != e.list[i]) return false;
      return true;
    }
  }
  return false;
}

Json error_json(ErrorKind kind, const std::string& message) {
  return {{"kind", std::string(to_string(kind))}, {"message", message}};
}

}  // namespace

std::vector<ModulePair> module_pairs(const dsl::Session& session, const RunOptions& options) {
  Evaluator ev(options);
  std::vector<ModulePair> out;
  for (const auto& st : session.statements) {
    try {
      if (const auto* d = std::get_if<dsl::RingDecl>(&st)) ev.declare_ring(*d);
      if (const auto* d = std::get_if<dsl::IdealDecl>(&st)) ev.env.ideals.insert_or_assign(d->name, *d);
      if (const auto* d = std::get_if<dsl::MatrixDecl>(&st)) ev.env.matrices.insert_or_assign(d->name, *d);
      if (const auto* d = std::get_if<dsl::ModuleDecl>(&st)) ev.declare_module(*d);
      if (const auto* c = std::get_if<Command>(&st)) {
        if (c->args.size() >= 2 && c->args[0].kind == Arg::Kind::module &&
            c->args[1].kind == Arg::Kind::module) {
          out.push_back({c->name, ev.module(c->args[0].module, c->ring), ev.module(c->args[1].module, c->ring)});
        }
      }
    } catch (const Error&) {
    }
  }
  return out;
}

int worse_exit(int a, int b) { return std::max(a, b); }

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ResourceLimitExceeded: return exit_resource;
    case ErrorKind::ParseError:
    case ErrorKind::Configuration:
    case ErrorKind::InvalidField: return exit_usage;
    default: return exit_fail;
  }
}

void validate_options(const RunOptions& options) {
  try {
    if (options.field) dsl::parse_field(*options.field);
  } catch (const Error& e) {
    throw Error(ErrorKind::Configuration, std::string("--field: ") + e.what());
  }
  if (options.order && *options.order != "grevlex" && *options.order != "lex" && *options.order != "wgrevlex") {
    throw Error(ErrorKind::Configuration, "--order must be grevlex or lex");
  }
}

RunReport run_session(const dsl::Session& session, const RunOptions& options) {
  validate_options(options);
  ScopedLimits guard(options.limits);
  const auto start = std::chrono::steady_clock::now();
  Evaluator ev(options);
  RunReport report;
  std::size_t commands = 0;
  for (const auto& st : session.statements) {
    if (const auto* note = std::get_if<dsl::Note>(&st)) {
      report.notes.push_back(note->text);
      continue;
    }
    if (const auto* c = std::get_if<Command>(&st)) {
      ++commands;
      Json rec = Json::object();
      rec["command"] = c->name;
      Json args = Json::array();
      for (const auto& a : c->args) args.push_back(dsl::print_arg(a));
      rec["args"] = args;
      try {
        auto out = ev.evaluate(*c);
        rec["value"] = out.value;
        bool ok = out.verdict.value_or(true);
        if (c->expect) {
          rec["expected"] = expect_json(*c->expect);
          rec["got"] = c->expect->kind == Expect::Kind::pass
                           ? Json(out.verdict.value_or(true) ? "pass" : "fail")
                           : out.got;
          ok = ok && matches(*c->expect, out.got, out.verdict);
        }
        const bool bearing = c->expect || out.verdict;
        rec["status"] = !bearing ? "ok" : ok ? "pass" : "fail";
        if (bearing && !ok) report.exit_code = worse_exit(report.exit_code, exit_fail);
      } catch (const Error& e) {
        if (c->expect) rec["expected"] = expect_json(*c->expect);
        rec["status"] = "error";
        rec["error"] = error_json(e.kind(), e.what());
        report.exit_code = worse_exit(report.exit_code, exit_code_for(e.kind()));
      }
      report.records.push_back(std::move(rec));
      continue;
    }
    try {
      std::visit(
          [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, dsl::RingDecl>) {
              ev.declare_ring(d);
            } else if constexpr (std::is_same_v<T, dsl::IdealDecl>) {
              ev.env.ideals.insert_or_assign(d.name, d);
            } else if constexpr (std::is_same_v<T, dsl::MatrixDecl>) {
              ev.env.matrices.insert_or_assign(d.name, d);
            } else if constexpr (std::is_same_v<T, dsl::ModuleDecl>) {
              ev.declare_module(d);
            } else if constexpr (std::is_same_v<T, dsl::ComplexDecl>) {
              ev.declare_complex(d);
            }
          },
          st);
    } catch (const Error& e) {
      Json rec = Json::object();
      rec["declaration"] = dsl::print_statement(st);
      rec["status"] = "error";
      rec["error"] = error_json(e.kind(), e.what());
      report.exit_code = worse_exit(report.exit_code, exit_code_for(e.kind()));
      report.records.push_back(std::move(rec));
    }
  }
  if (options.metadata) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    report.metadata = Json{{"metadata", {{"commands", commands}, {"elapsed_ms", ms}}}};
  }
  return report;
}

std::string render_json(const RunReport& report) {
  std::string out;
  for (const auto& r : report.records) out += r.dump() + "\n";
  if (report.metadata) out += report.metadata->dump() + "\n";
  return out;
}

std::string compact(const Json& value, std::size_t width) {
  std::string s = value.is_string() ? value.get<std::string>() : value.dump();
  if (s.size() > width) s = s.substr(0, width - 3) + "...";
  return s;
}

std::string render_text(const RunReport& report) {
  std::vector<std::array<std::string, 4>> rows{{"command", "value", "expected", "status"}};
  for (const auto& r : report.records) {
    std::string head;
    if (r.contains("command")) {
      head = r["command"].get<std::string>() + "(";
      for (std::size_t i = 0; i < r["args"].size(); ++i) head += (i ? ", " : "") + r["args"][i].get<std::string>();
      head += ")";
    } else {
      head = r["declaration"].get<std::string>();
    }
    std::string value;
    if (r.contains("error")) {
      value = r["error"]["kind"].get<std::string>() + ": " + r["error"]["message"].get<std::string>();
    } else if (r.contains("value")) {
      const Json& v = r["value"];
      if (v.is_object() && v.contains("verdicts")) {
        value = v.contains("chi") ? "chi=" + v["chi"].dump() + " " : "";
        for (const auto& x : v["verdicts"]) value += x["name"].get<std::string>() + ":" + x["status"].get<std::string>() + " ";
        if (!value.empty()) value.pop_back();
      } else {
        value = v.dump();
      }
    }
    rows.push_back({compact(head, 44), compact(value, 60),
                    r.contains("expected") ? compact(r["expected"], 24) : "", r["status"].get<std::string>()});
  }
  std::array<std::size_t, 4> w{};
  for (const auto& row : rows)
    for (std::size_t i = 0; i < 4; ++i) w[i] = std::max(w[i], row[i].size());
  std::string out;
  for (const auto& n : report.notes) out += "# " + n + "\n";
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < 4; ++i) {
      line += row[i];
      if (i + 1 < 4) line += std::string(w[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  if (report.metadata) out += "# elapsed " + (*report.metadata)["metadata"]["elapsed_ms"].dump() + " ms\n";
  return out;
}

}  // namespace smult::cli
