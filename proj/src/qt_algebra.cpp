#include "macd/qt_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <cctype>

#include "macd/errors.hpp"

namespace macd {

namespace {

// Dense product is used while the exponent box stays below this many cells.
constexpr std::int64_t kDenseProductLimit = std::int64_t{1} << 22;

std::string monomial_text(int a, int b) {
  std::string out;
  auto piece = [&out](char var, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e != 1) out += '^' + std::to_string(e);
  };
  piece('q', a);
  piece('t', b);
  return out;
}

Rational power(const Rational& base, int e) {
  if (e < 0) {
    if (base == 0) throw PoleError("negative power of zero");
    return Rational(1) / power(base, -e);
  }
  Rational result = 1;
  Rational acc = base;
  auto k = static_cast<unsigned>(e);
  while (k != 0) {
    if (k & 1U) result *= acc;
    acc *= acc;
    k >>= 1U;
  }
  return result;
}

// Univariate integer polynomial, index = degree.
using UPoly = std::vector<long long>;

UPoly upoly_divide_exact(UPoly num, const UPoly& den) {
  UPoly quot(num.size() - den.size() + 1, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const long long c = num[i + den.size() - 1] / den.back();
    quot[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return quot;
}

// Cyclotomic Phi_d, with Phi_1 = x - 1.
const UPoly& cyclotomic(int d) {
  static std::mutex mutex;
  static std::map<int, UPoly> cache;
  std::lock_guard lock(mutex);
  // Ascending divisor order guarantees every Phi_e with e | (current) is cached.
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0 || cache.count(e) != 0) continue;
    UPoly num(static_cast<std::size_t>(e) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(e)] = 1;
    for (int f = 1; f < e; ++f)
      if (e % f == 0) num = upoly_divide_exact(num, cache.at(f));
    cache.emplace(e, std::move(num));
  }
  return cache.at(d);
}

// Psi_1(x) = 1 - x, Psi_d = Phi_d for d > 1, so that 1 - x^g = prod_{d | g} Psi_d(x).
LaurentQT psi_at(int d, int alpha, int beta) {
  UPoly p = cyclotomic(d);
  if (d == 1) p = {1, -1};
  std::vector<LaurentQT::Term> terms;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != 0)
      terms.push_back({{static_cast<int>(k) * alpha, static_cast<int>(k) * beta}, Integer(p[k])});
  return LaurentQT::from_terms(std::move(terms));
}

struct Irreducible {
  int alpha;
  int beta;
  int d;
  friend auto operator<=>(const Irreducible&, const Irreducible&) = default;
};

std::pair<LaurentQT, std::vector<DenomFactor>> canonicalize(LaurentQT num,
                                                             const std::vector<DenomFactor>& den) {
  if (num.is_zero()) return {LaurentQT{}, {}};
  std::map<Irreducible, int> irreducibles;
  for (const auto& f : den) {
    const int g = std::gcd(f.a, f.b);
    for (int d = 1; d <= g; ++d)
      if (g % d == 0) ++irreducibles[{f.a / g, f.b / g, d}];
  }
  for (auto& [key, count] : irreducibles) {
    const LaurentQT divisor = psi_at(key.d, key.alpha, key.beta);
    while (count > 0) {
      auto quotient = num.exact_divide(divisor);
      if (!quotient) break;
      num = std::move(*quotient);
      --count;
    }
  }
  // Regroup survivors per primitive direction: take the largest d left, emit
  // 1 - x^d, consume one Psi_e for each e | d and pay for missing ones in the
  // numerator.
  std::map<std::pair<int, int>, std::map<int, int>> by_direction;
  for (const auto& [key, count] : irreducibles)
    if (count > 0) by_direction[{key.alpha, key.beta}][key.d] = count;
  std::vector<DenomFactor> out;
  for (auto& [dir, counts] : by_direction) {
    while (!counts.empty()) {
      const int d = counts.rbegin()->first;
      out.emplace_back(d * dir.first, d * dir.second);
      for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        auto it = counts.find(e);
        if (it != counts.end()) {
          if (--it->second == 0) counts.erase(it);
        } else {
          num *= psi_at(e, dir.first, dir.second);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return {std::move(num), std::move(out)};
}

}  // namespace

// ---------------------------------------------------------------- LaurentQT

LaurentQT::LaurentQT(const Integer& constant) {
  if (constant != 0) terms_.push_back({{0, 0}, constant});
}

LaurentQT LaurentQT::monomial(const Integer& coef, int a, int b) {
  LaurentQT out;
  if (coef != 0) out.terms_.push_back({{a, b}, coef});
  return out;
}

LaurentQT LaurentQT::one_minus(int a, int b) {
  return from_terms({{{0, 0}, Integer(1)}, {{a, b}, Integer(-1)}});
}

LaurentQT LaurentQT::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.exp < y.exp; });
  LaurentQT out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
      out.terms_.back().coef += t.coef;
      if (out.terms_.back().coef == 0) out.terms_.pop_back();
    } else if (t.coef != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

int LaurentQT::min_a() const { return terms_.front().exp.a; }
int LaurentQT::max_a() const { return terms_.back().exp.a; }

int LaurentQT::min_b() const {
  int m = terms_.front().exp.b;
  for (const auto& t : terms_) m = std::min(m, t.exp.b);
  return m;
}

int LaurentQT::max_b() const {
  int m = terms_.front().exp.b;
  for (const auto& t : terms_) m = std::max(m, t.exp.b);
  return m;
}

LaurentQT LaurentQT::shifted(int da, int db) const {
  LaurentQT out = *this;
  for (auto& t : out.terms_) {
    t.exp.a += da;
    t.exp.b += db;
  }
  return out;
}

LaurentQT LaurentQT::pow(unsigned e) const {
  LaurentQT result(1);
  LaurentQT acc = *this;
  while (e != 0) {
    if (e & 1U) result *= acc;
    e >>= 1U;
    if (e != 0) acc *= acc;
  }
  return result;
}

LaurentQT LaurentQT::operator-() const {
  LaurentQT out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

LaurentQT operator+(const LaurentQT& f, const LaurentQT& g) {
  LaurentQT out;
  out.terms_.reserve(f.terms_.size() + g.terms_.size());
  auto i = f.terms_.begin();
  auto j = g.terms_.begin();
  while (i != f.terms_.end() || j != g.terms_.end()) {
    if (j == g.terms_.end() || (i != f.terms_.end() && i->exp < j->exp)) {
      out.terms_.push_back(*i++);
    } else if (i == f.terms_.end() || j->exp < i->exp) {
      out.terms_.push_back(*j++);
    } else {
      Integer c = i->coef + j->coef;
      if (c != 0) out.terms_.push_back({i->exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

LaurentQT operator-(const LaurentQT& f, const LaurentQT& g) { return f + (-g); }

LaurentQT operator*(const LaurentQT& f, const LaurentQT& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const int a0 = f.min_a() + g.min_a();
  const int b0 = f.min_b() + g.min_b();
  const std::int64_t width = static_cast<std::int64_t>(f.max_b()) + g.max_b() - b0 + 1;
  const std::int64_t height = static_cast<std::int64_t>(f.max_a()) + g.max_a() - a0 + 1;
  if (width * height <= kDenseProductLimit) {
    std::vector<Integer> box(static_cast<std::size_t>(width * height));
    for (const auto& x : f.terms_)
      for (const auto& y : g.terms_) {
        const std::int64_t row = x.exp.a + y.exp.a - a0;
        const std::int64_t col = x.exp.b + y.exp.b - b0;
        box[static_cast<std::size_t>(row * width + col)] += x.coef * y.coef;
      }
    LaurentQT out;
    for (std::int64_t row = 0; row < height; ++row)
      for (std::int64_t col = 0; col < width; ++col) {
        auto& c = box[static_cast<std::size_t>(row * width + col)];
        if (c != 0)
          out.terms_.push_back(
              {{static_cast<int>(row + a0), static_cast<int>(col + b0)}, std::move(c)});
      }
    return out;
  }
  std::map<Exponent, Integer> acc;
  for (const auto& x : f.terms_)
    for (const auto& y : g.terms_) acc[{x.exp.a + y.exp.a, x.exp.b + y.exp.b}] += x.coef * y.coef;
  LaurentQT out;
  for (auto& [e, c] : acc)
    if (c != 0) out.terms_.push_back({e, std::move(c)});
  return out;
}

LaurentQT laurent_mul(const LaurentQT& f, const LaurentQT& g) { return f * g; }

std::optional<LaurentQT> LaurentQT::exact_divide(const LaurentQT& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentQT{};
  // Degrees in each variable are additive, so every quotient monomial lies in this box.
  const int lo_a = min_a() - divisor.min_a();
  const int hi_a = max_a() - divisor.max_a();
  const int lo_b = min_b() - divisor.min_b();
  const int hi_b = max_b() - divisor.max_b();
  if (lo_a > hi_a || lo_b > hi_b) return std::nullopt;

  std::map<Exponent, Integer> rem;
  for (const auto& t : terms_) rem.emplace(t.exp, t.coef);
  const Term& lead = divisor.terms_.back();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const Exponent m{top->first.a - lead.exp.a, top->first.b - lead.exp.b};
    if (m.a < lo_a || m.a > hi_a || m.b < lo_b || m.b > hi_b) return std::nullopt;
    Integer c;
    Integer r;
    boost::multiprecision::divide_qr(top->second, lead.coef, c, r);
    if (r != 0) return std::nullopt;
    for (const auto& d : divisor.terms_) {
      const Exponent e{d.exp.a + m.a, d.exp.b + m.b};
      auto [it, inserted] = rem.try_emplace(e, 0);
      it->second -= c * d.coef;
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back({m, std::move(c)});
  }
  return from_terms(std::move(quotient));
}

Rational LaurentQT::eval(const Rational& q0, const Rational& t0) const {
  Rational sum = 0;
  std::map<int, Rational> qpow;
  std::map<int, Rational> tpow;
  for (const auto& term : terms_) {
    auto qi = qpow.find(term.exp.a);
    if (qi == qpow.end()) qi = qpow.emplace(term.exp.a, power(q0, term.exp.a)).first;
    auto ti = tpow.find(term.exp.b);
    if (ti == tpow.end()) ti = tpow.emplace(term.exp.b, power(t0, term.exp.b)).first;
    sum += Rational(term.coef) * qi->second * ti->second;
  }
  return sum;
}

std::string LaurentQT::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coef < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Integer mag = negative ? Integer(-t.coef) : t.coef;
    const std::string mono = monomial_text(t.exp.a, t.exp.b);
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + '*';
      out += mono;
    }
  }
  return out;
}

// -------------------------------------------------------------- DenomFactor

DenomFactor::DenomFactor(int a_, int b_) : a(a_), b(b_) {
  if (a < 0 || b < 0 || (a == 0 && b == 0))
    throw InvalidInput("denominator factor needs nonnegative (a,b) != (0,0)");
}

LaurentQT expand_denominator(std::span<const DenomFactor> factors) {
  LaurentQT out(1);
  for (const auto& f : factors) out *= LaurentQT::one_minus(f.a, f.b);
  return out;
}

// --------------------------------------------------------------- RationalQT

RationalQT::RationalQT(LaurentQT num) : num_(std::move(num)) {}

RationalQT::RationalQT(LaurentQT num, std::vector<DenomFactor> den) {
  std::tie(num_, den_) = canonicalize(std::move(num), den);
}

RationalQT RationalQT::unreduced(LaurentQT num, std::vector<DenomFactor> den) {
  RationalQT out;
  out.num_ = std::move(num);
  std::sort(den.begin(), den.end());
  out.den_ = std::move(den);
  return out;
}

RationalQT RationalQT::operator-() const {
  RationalQT out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalQT operator+(const RationalQT& f, const RationalQT& g) {
  RationalAccumulator acc;
  acc.add(f);
  acc.add(g);
  return acc.finish();
}

RationalQT operator-(const RationalQT& f, const RationalQT& g) { return f + (-g); }

RationalQT operator*(const RationalQT& f, const RationalQT& g) {
  std::vector<DenomFactor> den = f.den_;
  den.insert(den.end(), g.den_.begin(), g.den_.end());
  return {f.num_ * g.num_, std::move(den)};
}

bool RationalQT::equivalent(const RationalQT& other) const {
  // num1 * (den2 \ den1) == num2 * (den1 \ den2) on sorted multisets.
  std::vector<DenomFactor> only_other;
  std::vector<DenomFactor> only_this;
  std::set_difference(other.den_.begin(), other.den_.end(), den_.begin(), den_.end(),
                      std::back_inserter(only_other));
  std::set_difference(den_.begin(), den_.end(), other.den_.begin(), other.den_.end(),
                      std::back_inserter(only_this));
  return num_ * expand_denominator(only_other) == other.num_ * expand_denominator(only_this);
}

Rational RationalQT::eval_at(const Rational& q0, const Rational& t0) const {
  Rational den = 1;
  for (const auto& f : den_) {
    const Rational v = 1 - power(q0, f.a) * power(t0, f.b);
    if (v == 0) {
      throw PoleError("factor (1 - q^" + std::to_string(f.a) + " t^" + std::to_string(f.b) +
                      ") vanishes at q=" + rational_to_string(q0) +
                      ", t=" + rational_to_string(t0));
    }
    den *= v;
  }
  return num_.eval(q0, t0) / den;
}

std::string RationalQT::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string out = "(" + num_.to_string() + ")/(";
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (i != 0) out += '*';
    out += "(1 - " + monomial_text(den_[i].a, den_[i].b) + ")";
  }
  return out + ")";
}

RationalQT rational_add(const RationalQT& f, const RationalQT& g) { return f + g; }

RationalQT rational_reduce(const RationalQT& f) { return {f.num(), f.den()}; }

Rational rational_eval_at(const RationalQT& f, const Rational& q0, const Rational& t0) {
  return f.eval_at(q0, t0);
}

// ------------------------------------------------------- RationalAccumulator

void RationalAccumulator::add(const LaurentQT& num, std::span<const DenomFactor> den_sorted) {
  if (num.is_zero()) return;
  parts_.push_back({num, {den_sorted.begin(), den_sorted.end()}});
  std::sort(parts_.back().den.begin(), parts_.back().den.end());
}

RationalQT RationalAccumulator::finish() const {
  std::map<DenomFactor, int> lcm;
  for (const auto& p : parts_) {
    std::map<DenomFactor, int> mult;
    for (const auto& f : p.den) ++mult[f];
    for (const auto& [f, k] : mult) lcm[f] = std::max(lcm[f], k);
  }
  std::vector<DenomFactor> common;
  for (const auto& [f, k] : lcm) common.insert(common.end(), static_cast<std::size_t>(k), f);

  std::map<std::vector<DenomFactor>, LaurentQT> cofactor_cache;
  LaurentQT total;
  for (const auto& p : parts_) {
    std::vector<DenomFactor> missing;
    std::set_difference(common.begin(), common.end(), p.den.begin(), p.den.end(),
                        std::back_inserter(missing));
    auto it = cofactor_cache.find(missing);
    if (it == cofactor_cache.end())
      it = cofactor_cache.emplace(missing, expand_denominator(missing)).first;
    total += p.num * it->second;
  }
  return {std::move(total), std::move(common)};
}

// ----------------------------------------------------------------- SymFunQT

void SymFunQT::check(const Content& c) const {
  if (static_cast<int>(c.size()) != n_)
    throw InvalidInput("content vector has " + std::to_string(c.size()) + " entries, expected " +
                       std::to_string(n_));
  int sum = 0;
  for (int x : c) {
    if (x < 0) throw InvalidInput("negative content entry");
    sum += x;
  }
  if (sum != degree_)
    throw InvalidInput("content degree " + std::to_string(sum) + " differs from " +
                       std::to_string(degree_));
}

void SymFunQT::add_term(const Content& c, const RationalQT& coef) {
  check(c);
  if (coef.is_zero()) return;
  auto it = coeffs_.find(c);
  if (it == coeffs_.end()) {
    coeffs_.emplace(c, coef);
    return;
  }
  it->second += coef;
  if (it->second.is_zero()) coeffs_.erase(it);
}

void SymFunQT::merge(const SymFunQT& other) {
  if (other.n_ != n_ || other.degree_ != degree_)
    throw InvalidInput("merging symmetric functions of different shape");
  for (const auto& [c, coef] : other.coeffs_) add_term(c, coef);
}

RationalQT SymFunQT::coefficient(const Content& c) const {
  auto it = coeffs_.find(c);
  return it == coeffs_.end() ? RationalQT{} : it->second;
}

SymFunQT symfun_add_term(SymFunQT p, const Content& c, const RationalQT& coef) {
  p.add_term(c, coef);
  return p;
}

// ---------------------------------------------------------------- rationals

Rational parse_rational(const std::string& text) {
  auto parse_int = [&text](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size() ||
        !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](unsigned char ch) { return std::isdigit(ch) != 0; }))
      throw InvalidInput("not a rational number: '" + text + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const Integer num = parse_int(text.substr(0, slash));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string rational_to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace macd
