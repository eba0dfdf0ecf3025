#include "smult/hilbert.hpp"

#include <algorithm>

namespace smult {

namespace {

using Exps = std::vector<std::int32_t>;

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

void minimalize(std::vector<Exps>& gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exps> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i != j && divides(gens[j], gens[i])) redundant = true;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  gens = std::move(out);
}

int wdeg(const Exps& e, std::span<const int> w) {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * w[i];
  return d;
}

void add_into(std::vector<long long>& acc, const std::vector<long long>& p, int shift) {
  if (acc.size() < p.size() + static_cast<std::size_t>(shift)) acc.resize(p.size() + shift, 0);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] += p[k];
}

std::vector<long long> numerator(std::vector<Exps> gens, std::span<const int> w) {
  minimalize(gens);
  if (gens.empty()) return {1};
  const std::size_t n = gens.front().size();
  bool coprime = true;
  std::vector<int> count(n, 0);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] > 0 && ++count[i] > 1) coprime = false;
    }
  }
  if (coprime) {
    std::vector<long long> acc = {1};
    for (const auto& g : gens) {
      const int d = wdeg(g, w);
      std::vector<long long> next(acc.size() + d, 0);
      for (std::size_t k = 0; k < acc.size(); ++k) {
        next[k] += acc[k];
        next[k + d] -= acc[k];
      }
      acc = std::move(next);
    }
    return acc;
  }
  const std::size_t v = static_cast<std::size_t>(
      std::max_element(count.begin(), count.end()) - count.begin());
  std::int32_t e = 0;
  for (const auto& g : gens) {
    if (g[v] > 0 && (e == 0 || g[v] < e)) e = g[v];
  }
  // HS(S/L) = HS(S/(L + p)) + t^deg(p) HS(S/(L : p)), p = x_v^e.
  Exps p(n, 0);
  p[v] = e;
  std::vector<Exps> sum;
  std::vector<Exps> colon;
  for (const auto& g : gens) {
    if (g[v] == 0) sum.push_back(g);
    Exps c = g;
    c[v] = std::max(0, c[v] - e);
    colon.push_back(std::move(c));
  }
  sum.push_back(p);
  std::vector<long long> acc = numerator(std::move(sum), w);
  add_into(acc, numerator(std::move(colon), w), e * w[v]);
  return acc;
}

}  // namespace

std::vector<long long> monomial_quotient_numerator(std::vector<Monomial> generators,
                                                   std::span<const int> weights) {
  std::vector<Exps> gens;
  for (const auto& m : generators) gens.emplace_back(m.exponents().begin(), m.exponents().end());
  if (gens.empty()) return {1};
  std::vector<int> w(weights.begin(), weights.end());
  if (w.empty()) w.assign(gens.front().size(), 1);
  auto out = numerator(std::move(gens), w);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

HilbertSeries::HilbertSeries(std::vector<int> weights, int offset, std::vector<long long> numerator)
    : weights_(std::move(weights)), offset_(offset), numerator_(std::move(numerator)) {
  trim();
}

void HilbertSeries::trim() {
  while (!numerator_.empty() && numerator_.back() == 0) numerator_.pop_back();
  std::size_t lead = 0;
  while (lead < numerator_.size() && numerator_[lead] == 0) ++lead;
  if (lead == numerator_.size()) {
    numerator_.clear();
    offset_ = 0;
    return;
  }
  numerator_.erase(numerator_.begin(), numerator_.begin() + static_cast<std::ptrdiff_t>(lead));
  offset_ += static_cast<int>(lead);
}

HilbertSeries HilbertSeries::of_lead_terms(const std::vector<LeadTerm>& leads,
                                           std::span<const int> shifts,
                                           std::span<const int> weights) {
  std::vector<int> w(weights.begin(), weights.end());
  if (shifts.empty()) return HilbertSeries(w, 0, {});
  const int lo = *std::min_element(shifts.begin(), shifts.end());
  std::vector<long long> acc;
  for (std::size_t c = 0; c < shifts.size(); ++c) {
    std::vector<Monomial> gens;
    for (const auto& l : leads) {
      if (l.component == c) gens.push_back(l.mono);
    }
    std::vector<long long> num;
    bool unit = false;
    for (const auto& g : gens) {
      if (g.total_degree() == 0) unit = true;
    }
    if (unit) continue;
    num = monomial_quotient_numerator(std::move(gens), w);
    add_into(acc, num, shifts[c] - lo);
  }
  return HilbertSeries(std::move(w), lo, std::move(acc));
}

int HilbertSeries::dimension() const {
  if (numerator_.empty()) return -1;
  std::vector<long long> q = numerator_;
  int order = 0;
  for (;;) {
    long long s = 0;
    for (long long c : q) s += c;
    if (s != 0 || q.empty()) break;
    // q = (1 - t) * r with r_k = sum_{j <= k} q_j.
    std::vector<long long> r(q.size() - 1);
    long long run = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      run += q[k];
      r[k] = run;
    }
    q = std::move(r);
    ++order;
  }
  return static_cast<int>(weights_.size()) - order;
}

std::optional<long long> HilbertSeries::length() const {
  if (numerator_.empty()) return 0;
  if (dimension() > 0) return std::nullopt;
  std::vector<long long> q = numerator_;
  for (int w : weights_) {
    // Exact division by (1 - t^w): q = (1 - t^w) r, r_k = q_k + r_{k-w}.
    if (q.size() < static_cast<std::size_t>(w)) return std::nullopt;
    std::vector<long long> r(q.size() - w, 0);
    for (std::size_t k = 0; k < r.size(); ++k) {
      r[k] = q[k] + (k >= static_cast<std::size_t>(w) ? r[k - w] : 0);
    }
    for (std::size_t k = r.size(); k < q.size(); ++k) {
      long long expect = k >= static_cast<std::size_t>(w) ? -r[k - w] : 0;
      if (q[k] != expect) return std::nullopt;
    }
    q = std::move(r);
  }
  long long total = 0;
  for (long long c : q) total += c;
  return total;
}

std::vector<long long> HilbertSeries::values(int from, int to) const {
  if (to < from) return {};
  const int lo = std::min(from, offset_);
  std::vector<long long> a(static_cast<std::size_t>(to - lo + 1), 0);
  for (std::size_t k = 0; k < numerator_.size(); ++k) {
    const long d = offset_ + static_cast<long>(k) - lo;
    if (d < static_cast<long>(a.size())) a[d] += numerator_[k];
  }
  for (int w : weights_) {
    for (std::size_t k = w; k < a.size(); ++k) a[k] += a[k - w];
  }
  return std::vector<long long>(a.begin() + (from - lo), a.end());
}

long long HilbertSeries::value(int degree) const { return values(degree, degree).front(); }

std::pair<std::vector<mpq_class>, int> HilbertSeries::hilbert_polynomial() const {
  for (int w : weights_) {
    if (w != 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "Hilbert polynomial requires the standard grading (quasi-polynomial otherwise)");
    }
  }
  const int dim = dimension();
  if (dim <= 0) {
    const int stab = numerator_.empty() ? 0 : offset_ + static_cast<int>(numerator_.size());
    return {{}, stab};
  }
  // Q = N / (1 - t)^(n - dim) has degree deg N - (n - dim); HP agrees with HF
  // from offset + deg Q - dim + 1 on.
  const int n = static_cast<int>(weights_.size());
  const int deg_q = static_cast<int>(numerator_.size()) - 1 - (n - dim);
  const int stab = offset_ + deg_q - dim + 1;
  std::vector<std::pair<long, mpq_class>> pts;
  auto vals = values(stab, stab + dim - 1);
  for (int k = 0; k < dim; ++k) pts.emplace_back(stab + k, mpq_class(mpz_class(std::to_string(vals[k]))));
  return {interpolate(pts), stab};
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (weights_ != other.weights_) throw Error(ErrorKind::RingMismatch, "series over different rings");
  const int lo = std::min(offset_, other.offset_);
  std::vector<long long> acc;
  add_into(acc, numerator_, offset_ - lo);
  add_into(acc, other.numerator_, other.offset_ - lo);
  return HilbertSeries(weights_, lo, std::move(acc));
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& other) const {
  std::vector<long long> neg = other.numerator_;
  for (auto& c : neg) c = -c;
  std::vector<int> w = other.weights_.empty() ? weights_ : other.weights_;
  return *this + HilbertSeries(std::move(w), other.offset_, std::move(neg));
}

std::vector<mpq_class> interpolate(const std::vector<std::pair<long, mpq_class>>& points) {
  const std::size_t n = points.size();
  // Newton divided differences, then expansion into the monomial basis.
  std::vector<mpq_class> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / mpq_class(points[i].first - points[i - j].first);
      if (i == j) break;
    }
  }
  std::vector<mpq_class> coeffs(n, 0);
  std::vector<mpq_class> basis = {1};  // running product (x - x_0)...(x - x_{k-1})
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < basis.size(); ++m) coeffs[m] += dd[k] * basis[m];
    std::vector<mpq_class> next(basis.size() + 1, 0);
    for (std::size_t m = 0; m < basis.size(); ++m) {
      next[m + 1] += basis[m];
      next[m] -= basis[m] * points[k].first;
    }
    basis = std::move(next);
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

mpq_class evaluate(const std::vector<mpq_class>& coefficients, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t k = coefficients.size(); k-- > 0;) acc = acc * x + coefficients[k];
  return acc;
}

}  // namespace smult
