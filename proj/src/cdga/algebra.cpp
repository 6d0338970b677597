#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "syscat/cdga.hpp"

namespace syscat::cdga {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

void accumulate(const Field& f, Polynomial& into, const Monomial& m, const Scalar& c) {
  if (Field::is_zero(c)) return;
  auto [it, fresh] = into.emplace(m, c);
  if (!fresh) {
    it->second = f.add(it->second, c);
    if (Field::is_zero(it->second)) into.erase(it);
  }
}

}  // namespace

Field Field::prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "Z" + std::to_string(p_); }

Scalar Field::reduce(const Scalar& x) const {
  if (p_ == 0) return x;
  mpz_class mod(p_);
  mpz_class num = x.get_num() % mod;
  mpz_class den = x.get_den() % mod;
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  mpz_class r = (num * inv) % mod;
  if (r < 0) r += mod;
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  if (p_ == 0) return Scalar(1) / a;
  return reduce(Scalar(1) / a);
}

std::string format(const Scalar& s) { return s.get_str(); }

struct FreeCDGA::Data {
  Field field;
  std::vector<Generator> generators;
  std::vector<Polynomial> differential;
  int cap = 0;
};

FreeCDGA FreeCDGA::create(Field field, std::vector<Generator> generators, std::vector<Polynomial> differential,
                          int degree_cap) {
  if (degree_cap < 1) throw std::invalid_argument("degree cap must be positive");
  if (differential.size() != generators.size()) {
    throw std::invalid_argument("one differential per generator is required");
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (!valid_name(g.name)) throw std::invalid_argument("invalid generator name '" + g.name + "'");
    if (g.degree < 1) {
      throw std::invalid_argument("generator " + g.name + " has degree " + std::to_string(g.degree) +
                                  "; degrees must be at least 1");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (generators[j].name == g.name) throw std::invalid_argument("duplicate generator " + g.name);
    }
  }
  auto data = std::make_shared<Data>();
  data->field = field;
  data->generators = std::move(generators);
  data->cap = degree_cap;
  const std::size_t n = data->generators.size();
  for (auto& poly : differential) {
    Polynomial clean;
    for (const auto& [m, c] : poly) {
      if (m.size() != n) throw std::invalid_argument("monomial length does not match the generator count");
      for (std::size_t i = 0; i < n; ++i) {
        if (m[i] < 0) throw std::invalid_argument("negative exponent");
      }
      accumulate(field, clean, m, field.reduce(c));
    }
    data->differential.push_back(std::move(clean));
  }

  FreeCDGA a;
  a.data_ = data;
  // Odd generators squared vanish; drop such monomials.
  for (auto& poly : data->differential) {
    for (auto it = poly.begin(); it != poly.end();) {
      bool dead = false;
      for (std::size_t i = 0; i < n; ++i) dead = dead || (data->generators[i].degree % 2 == 1 && it->first[i] > 1);
      it = dead ? poly.erase(it) : std::next(it);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = data->generators[i];
    for (const auto& [m, c] : data->differential[i]) {
      const int deg = a.degree(m);
      if (deg != g.degree + 1) {
        throw DegreeMismatch("d " + g.name + " has a term " + a.format(m) + " of degree " + std::to_string(deg) +
                             ", expected " + std::to_string(g.degree + 1));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial dd = a.d(data->differential[i]);
    if (!dd.empty()) {
      throw NotSquareZero("d(d " + data->generators[i].name + ") = " + a.format(dd) + " is not zero");
    }
  }
  return a;
}

const Field& FreeCDGA::field() const { return data_->field; }
const std::vector<Generator>& FreeCDGA::generators() const { return data_->generators; }
int FreeCDGA::degree_cap() const { return data_->cap; }
const Polynomial& FreeCDGA::differential(int generator) const { return data_->differential.at(generator); }

int FreeCDGA::find(std::string_view name) const {
  const auto& g = data_->generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

int FreeCDGA::degree(const Monomial& m) const {
  int total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) total += m[i] * data_->generators[i].degree;
  return total;
}

int FreeCDGA::word_length(const Monomial& m) {
  int total = 0;
  for (int e : m) total += e;
  return total;
}

int FreeCDGA::degree(const Polynomial& p) const {
  if (p.empty()) throw DegreeMismatch("the zero polynomial has no degree");
  const int deg = degree(p.begin()->first);
  for (const auto& [m, c] : p) {
    if (degree(m) != deg) throw DegreeMismatch("inhomogeneous polynomial " + format(p));
  }
  return deg;
}

Polynomial FreeCDGA::one() const { return scalar(1); }

Polynomial FreeCDGA::scalar(const Scalar& c) const {
  Polynomial p;
  accumulate(field(), p, unit_monomial(), field().reduce(c));
  return p;
}

Polynomial FreeCDGA::generator(int index) const {
  if (index < 0 || index >= generator_count()) throw std::out_of_range("no generator " + std::to_string(index));
  Monomial m = unit_monomial();
  m[index] = 1;
  return {{m, Scalar(1)}};
}

Polynomial FreeCDGA::generator(std::string_view name) const {
  const int i = find(name);
  if (i < 0) throw UnknownName("no generator named '" + std::string(name) + "'");
  return generator(i);
}

Polynomial FreeCDGA::add(const Polynomial& a, const Polynomial& b) const {
  Polynomial out = a;
  for (const auto& [m, c] : b) accumulate(field(), out, m, c);
  return out;
}

Polynomial FreeCDGA::scale(const Scalar& c, const Polynomial& a) const {
  Polynomial out;
  const Scalar k = field().reduce(c);
  if (Field::is_zero(k)) return out;
  for (const auto& [m, x] : a) accumulate(field(), out, m, field().mul(k, x));
  return out;
}

Polynomial FreeCDGA::multiply(const Monomial& a, const Monomial& b) const {
  const auto& g = data_->generators;
  Monomial m(a.size());
  int swaps = 0;
  int odd_in_a_after = 0;  // odd factors of a with index greater than the current one
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (g[i].degree % 2 == 1) odd_in_a_after += a[i];
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    m[i] = a[i] + b[i];
    if (g[i].degree % 2 == 1) {
      if (m[i] > 1) return {};
      odd_in_a_after -= a[i];
      if (b[i] == 1) swaps += odd_in_a_after;
    }
  }
  return {{m, field().reduce(Scalar(swaps % 2 == 0 ? 1 : -1))}};
}

Polynomial FreeCDGA::multiply(const Polynomial& a, const Polynomial& b) const {
  Polynomial out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      for (const auto& [m, s] : multiply(ma, mb)) accumulate(field(), out, m, field().mul(field().mul(ca, cb), s));
    }
  }
  return out;
}

Polynomial FreeCDGA::d(const Monomial& m) const {
  std::size_t first = 0;
  while (first < m.size() && m[first] == 0) ++first;
  if (first == m.size()) return {};
  // m = x * rest with x the first generator present, so d m = dx rest +- x d(rest).
  Monomial rest = m;
  --rest[first];
  const Polynomial rest_poly{{rest, Scalar(1)}};
  Polynomial out = multiply(data_->differential[first], rest_poly);
  const Polynomial drest = d(rest);
  if (!drest.empty()) {
    const Scalar sign = data_->generators[first].degree % 2 == 0 ? 1 : -1;
    out = add(out, scale(sign, multiply(generator(static_cast<int>(first)), drest)));
  }
  return out;
}

Polynomial FreeCDGA::d(const Polynomial& p) const {
  Polynomial out;
  for (const auto& [m, c] : p) {
    for (const auto& [dm, dc] : d(m)) accumulate(field(), out, dm, field().mul(c, dc));
  }
  return out;
}

std::vector<Monomial> FreeCDGA::basis(int n) const {
  std::vector<Monomial> out;
  if (n < 0) return out;
  const auto& g = data_->generators;
  Monomial cur(g.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == g.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    const int top = g[i].degree % 2 == 1 ? std::min(1, left / g[i].degree) : left / g[i].degree;
    for (int e = top; e >= 0; --e) {
      cur[i] = e;
      rec(i + 1, left - e * g[i].degree);
    }
    cur[i] = 0;
  };
  rec(0, n);
  return out;
}

std::string FreeCDGA::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += data_->generators[i].name;
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string FreeCDGA::format(const Polynomial& p) const {
  if (p.empty()) return "0";
  std::string out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    Scalar c = it->second;
    bool negative = false;
    if (field().is_rational() && sgn(c) < 0) {
      negative = true;
      c = -c;
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = FreeCDGA::word_length(it->first) == 0;
    if (c == 1 && !unit) {
      out += format(it->first);
    } else if (unit) {
      out += c.get_str();
    } else {
      out += c.get_str() + "*" + format(it->first);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const FreeCDGA& a, std::string_view text) : a_(a), s_(text) {}

  Polynomial parse() {
    Polynomial p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("in polynomial '" + std::string(s_) + "': " + msg);
  }

  Polynomial sum() {
    Polynomial out;
    bool negative = false;
    if (eat('-')) {
      negative = true;
    } else {
      eat('+');
    }
    for (;;) {
      Polynomial t = product();
      out = a_.add(out, negative ? a_.scale(-1, t) : t);
      if (eat('+')) {
        negative = false;
      } else if (eat('-')) {
        negative = true;
      } else {
        return out;
      }
    }
  }

  Polynomial product() {
    Polynomial out = factor();
    while (eat('*')) out = a_.multiply(out, factor());
    return out;
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 12) fail("integer too large");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    Polynomial base;
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      base = sum();
      if (!eat(')')) fail("missing ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Scalar value(mpz_class(std::string(s_.substr(start, pos_ - start))));
      if (eat('/')) {
        skip();
        const std::size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected a denominator");
        mpz_class den(std::string(s_.substr(dstart, pos_ - dstart)));
        if (den == 0) fail("zero denominator");
        value /= Scalar(den);
        value.canonicalize();
      }
      try {
        base = a_.scalar(value);
      } catch (const std::domain_error&) {
        fail("denominator divisible by the characteristic");
      }
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                  s_[pos_] == '\'')) {
        ++pos_;
      }
      const std::string name(s_.substr(start, pos_ - start));
      const int i = a_.find(name);
      if (i < 0) fail("unknown generator '" + name + "'");
      base = a_.generator(i);
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (eat('^')) {
      const long e = integer();
      Polynomial out = a_.one();
      for (long k = 0; k < e && !out.empty(); ++k) out = a_.multiply(out, base);
      return out;
    }
    return base;
  }

  const FreeCDGA& a_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial FreeCDGA::parse_polynomial(std::string_view text) const { return PolyParser(*this, text).parse(); }

std::string FreeCDGA::to_text() const {
  std::ostringstream out;
  out << "cdga v1\n";
  out << "field " << (field().is_rational() ? "Q" : "Z<" + std::to_string(field().characteristic()) + ">") << "\n";
  out << "cap " << degree_cap() << "\n";
  for (const auto& g : generators()) out << "gen " << g.name << " : " << g.degree << "\n";
  for (int i = 0; i < generator_count(); ++i) {
    if (!differential(i).empty()) out << "d " << generators()[i].name << " = " << format(differential(i)) << "\n";
  }
  return out.str();
}

bool CohClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Scalar& c) { return Field::is_zero(c); });
}

}  // namespace syscat::cdga
