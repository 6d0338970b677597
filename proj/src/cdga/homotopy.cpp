#include <functional>

#include "syscat/cdga.hpp"

namespace syscat::cdga {

Polynomial MultilinearMap::apply(const std::vector<Monomial>& tensor) const {
  const auto it = values.find(tensor);
  return it == values.end() ? Polynomial{} : it->second;
}

MultilinearMap algebra_map(const FreeCDGA& source, const FreeCDGA& target, const std::vector<Polynomial>& images) {
  if (!(source.field() == target.field())) throw std::invalid_argument("algebra_map: fields differ");
  if (static_cast<int>(images.size()) != source.generator_count()) {
    throw std::invalid_argument("algebra_map: one image per source generator is required");
  }
  for (int i = 0; i < source.generator_count(); ++i) {
    if (!images[i].empty() && target.degree(images[i]) != source.generators()[i].degree) {
      throw DegreeMismatch("image of " + source.generators()[i].name + " has degree " +
                           std::to_string(target.degree(images[i])) + ", expected " +
                           std::to_string(source.generators()[i].degree));
    }
  }
  MultilinearMap f;
  for (int n = 0; n <= source.degree_cap(); ++n) {
    for (const Monomial& m : source.basis(n)) {
      Polynomial value = target.one();
      for (int i = 0; i < source.generator_count(); ++i) {
        for (int e = 0; e < m[i]; ++e) value = target.multiply(value, images[i]);
      }
      if (!value.empty()) f.values.emplace(std::vector<Monomial>{m}, std::move(value));
    }
  }
  return f;
}

Polynomial apply_linear(const FreeCDGA& target, const MultilinearMap& f, const Polynomial& p) {
  if (f.arity != 1) throw std::invalid_argument("apply_linear needs a map of arity 1");
  Polynomial out;
  for (const auto& [m, c] : p) out = target.add(out, target.scale(c, f.apply({m})));
  return out;
}

namespace {

Scalar size_of(const Field& f, const Scalar& c) {
  if (f.is_rational()) return abs(c);
  return c;
}

class Checker {
 public:
  explicit Checker(const HomotopyFamily& h) : h_(h), A_(h.source), B_(h.target) {}

  void validate() const {
    for (std::size_t i = 0; i < h_.maps.size(); ++i) {
      const MultilinearMap& f = h_.maps[i];
      const int arity = static_cast<int>(i) + 1;
      if (f.arity != arity) {
        throw DegreeMismatch("map " + std::to_string(i) + " has arity " + std::to_string(f.arity) + ", expected " +
                             std::to_string(arity));
      }
      for (const auto& [tensor, value] : f.values) {
        if (static_cast<int>(tensor.size()) != arity) throw DegreeMismatch("tensor of the wrong length");
        int deg = 0;
        for (const Monomial& m : tensor) {
          if (static_cast<int>(m.size()) != A_.generator_count()) throw DegreeMismatch("monomial of the wrong length");
          deg += A_.degree(m);
        }
        if (!value.empty() && B_.degree(value) != deg - static_cast<int>(i)) {
          throw DegreeMismatch("map " + std::to_string(i) + " sends a tensor of degree " + std::to_string(deg) +
                               " to degree " + std::to_string(B_.degree(value)) + ", expected " +
                               std::to_string(deg - static_cast<int>(i)));
        }
      }
    }
  }

  // f with the given number of inputs.
  Polynomial f(const std::vector<Monomial>& t) const {
    const std::size_t i = t.size() - 1;
    return i < h_.maps.size() ? h_.maps[i].apply(t) : Polynomial{};
  }

  Polynomial lhs(const std::vector<Monomial>& t) const {
    const int n = static_cast<int>(t.size());
    Polynomial out = B_.d(f(t));
    Polynomial fd;
    int before = 0;
    for (int j = 0; j < n; ++j) {
      const Scalar sign = before % 2 == 0 ? 1 : -1;
      for (const auto& [m, c] : A_.d(t[j])) {
        std::vector<Monomial> s = t;
        s[j] = m;
        fd = B_.add(fd, B_.scale(sign * c, f(s)));
      }
      before += A_.degree(t[j]);
    }
    return B_.add(out, B_.scale(n % 2 == 0 ? 1 : -1, fd));
  }

  Polynomial rhs(const std::vector<Monomial>& t) const {
    const int n = static_cast<int>(t.size());
    Polynomial out;
    int prefix = 0;
    for (int j = 1; j < n; ++j) {
      prefix += A_.degree(t[j - 1]);
      Polynomial term;
      const std::vector<Monomial> head(t.begin(), t.begin() + j);
      const std::vector<Monomial> tail(t.begin() + j, t.end());
      const Scalar koszul = ((n - j - 1) * prefix) % 2 == 0 ? 1 : -1;
      term = B_.scale(koszul, B_.multiply(f(head), f(tail)));
      for (const auto& [m, c] : A_.multiply(t[j - 1], t[j])) {
        std::vector<Monomial> s(t.begin(), t.begin() + (j - 1));
        s.push_back(m);
        s.insert(s.end(), t.begin() + j + 1, t.end());
        term = B_.add(term, B_.scale(-c, f(s)));
      }
      out = B_.add(out, B_.scale(j % 2 == 0 ? 1 : -1, term));
    }
    return out;
  }

  IdentityReport check(int index) const {
    IdentityReport report;
    report.index = index;
    const int n = index + 1;
    const int top = A_.degree_cap() - 1;
    std::vector<std::vector<Monomial>> by_degree(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) by_degree[d] = A_.basis(d);
    std::vector<Monomial> t;
    std::function<void(int)> rec = [&](int budget) {
      if (static_cast<int>(t.size()) == n) {
        ++report.tensors_checked;
        const Polynomial diff = B_.add(lhs(t), B_.scale(-1, rhs(t)));
        if (diff.empty()) return;
        for (const auto& [m, c] : diff) {
          const Scalar s = size_of(B_.field(), c);
          if (s > report.max_discrepancy) report.max_discrepancy = s;
        }
        if (report.holds) {
          report.holds = false;
          report.offending = t;
          report.discrepancy = diff;
        }
        return;
      }
      for (int d = 0; d <= budget; ++d) {
        for (const Monomial& m : by_degree[d]) {
          t.push_back(m);
          rec(budget - d);
          t.pop_back();
        }
      }
    };
    rec(top);
    return report;
  }

 private:
  const HomotopyFamily& h_;
  const FreeCDGA& A_;
  const FreeCDGA& B_;
};

}  // namespace

std::vector<IdentityReport> verify_higher_homotopies(const HomotopyFamily& h, int up_to) {
  if (!(h.source.field() == h.target.field())) throw std::invalid_argument("source and target fields differ");
  if (up_to < 0) throw std::invalid_argument("up_to must be non-negative");
  Checker checker(h);
  checker.validate();
  std::vector<IdentityReport> out;
  for (int i = 0; i <= up_to; ++i) out.push_back(checker.check(i));
  return out;
}

}  // namespace syscat::cdga
