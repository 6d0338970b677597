#include <algorithm>
#include <optional>

#include "syscat/cdga.hpp"

namespace syscat::cdga {

namespace {

using Vec = std::vector<Scalar>;

// Row space in reduced row echelon form.
class Echelon {
 public:
  Echelon(const Field& f, std::size_t dim) : f_(f), dim_(dim) {}

  void reduce(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar c = v[pivots_[r]];
      if (Field::is_zero(c)) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (!Field::is_zero(rows_[r][j])) v[j] = f_.sub(v[j], f_.mul(c, rows_[r][j]));
      }
    }
  }

  bool add(Vec v) {
    reduce(v);
    std::size_t p = 0;
    while (p < dim_ && Field::is_zero(v[p])) ++p;
    if (p == dim_) return false;
    const Scalar k = f_.inv(v[p]);
    for (auto& x : v) x = f_.mul(x, k);
    for (auto& row : rows_) {
      const Scalar c = row[p];
      if (Field::is_zero(c)) continue;
      for (std::size_t j = 0; j < dim_; ++j) row[j] = f_.sub(row[j], f_.mul(c, v[j]));
    }
    const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), static_cast<int>(p)) - pivots_.begin();
    pivots_.insert(pivots_.begin() + at, static_cast<int>(p));
    rows_.insert(rows_.begin() + at, std::move(v));
    return true;
  }

  bool contains(Vec v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return Field::is_zero(x); });
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  Field f_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

// Gauss-Jordan elimination of a dense matrix given by rows; returns pivot columns.
std::vector<int> rref(const Field& f, std::vector<Vec>& m, std::size_t cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t k = r;
    while (k < m.size() && Field::is_zero(m[k][c])) ++k;
    if (k == m.size()) continue;
    std::swap(m[r], m[k]);
    const Scalar inv = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || Field::is_zero(m[i][c])) continue;
      const Scalar factor = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        if (!Field::is_zero(m[r][j])) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
      }
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

class Coords {
 public:
  Coords(const FreeCDGA& a, int n) : monomials_(a.basis(n)) {
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], static_cast<int>(i));
  }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  Vec vec(const Polynomial& p) const {
    Vec v(monomials_.size(), Scalar(0));
    for (const auto& [m, c] : p) {
      const auto it = index_.find(m);
      if (it == index_.end()) throw DegreeMismatch("polynomial term outside the expected degree");
      v[it->second] = c;
    }
    return v;
  }

  Polynomial poly(const Vec& v) const {
    Polynomial p;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!Field::is_zero(v[i])) p.emplace(monomials_[i], v[i]);
    }
    return p;
  }

 private:
  std::vector<Monomial> monomials_;
  std::map<Monomial, int> index_;
};

// Matrix of d: degree n -> degree n+1, as rows over the target basis.
std::vector<Vec> d_matrix(const FreeCDGA& a, const std::vector<Monomial>& source, const Coords& target) {
  std::vector<Vec> m(target.size(), Vec(source.size(), Scalar(0)));
  for (std::size_t j = 0; j < source.size(); ++j) {
    const Vec col = target.vec(a.d(source[j]));
    for (std::size_t i = 0; i < col.size(); ++i) m[i][j] = col[i];
  }
  return m;
}

std::vector<Vec> kernel(const Field& f, std::vector<Vec> m, std::size_t cols) {
  const auto pivots = rref(f, m, cols);
  std::vector<Vec> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (next < pivots.size() && pivots[next] == static_cast<int>(c)) {
      ++next;
      continue;
    }
    Vec v(cols, Scalar(0));
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m[r][c]);
    out.push_back(std::move(v));
  }
  return out;
}

// Basic solution of m x = b (free variables zero).
std::optional<Vec> solve(const Field& f, std::vector<Vec> m, std::size_t cols, const Vec& b) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  const auto pivots = rref(f, m, cols + 1);
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
  Vec x(cols, Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

void check_cap(const FreeCDGA& a, int n, const char* what) {
  if (n > a.degree_cap() - 1) {
    throw CapExceeded(std::string(what) + " needs degree " + std::to_string(n) + " but the cap " +
                      std::to_string(a.degree_cap()) + " only determines degrees up to " +
                      std::to_string(a.degree_cap() - 1));
  }
}

CohomologyBasis compute(const FreeCDGA& a, int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  check_cap(a, n, "cohomology");
  const Field& f = a.field();
  const Coords here(a, n);
  CohomologyBasis h;
  h.degree = n;
  h.monomials = here.monomials();

  Echelon image(f, here.size());
  for (const Monomial& m : a.basis(n - 1)) image.add(here.vec(a.d(m)));
  h.image = image.rows();
  h.image_pivots = image.pivots();

  const Coords next(a, n + 1);
  Echelon reps(f, here.size());
  for (Vec z : kernel(f, d_matrix(a, here.monomials(), next), here.size())) {
    image.reduce(z);
    reps.add(std::move(z));
  }
  h.reps = reps.rows();
  h.rep_pivots = reps.pivots();
  return h;
}

Vec to_vec(const CohomologyBasis& h, const Polynomial& p) {
  Vec v(h.monomials.size(), Scalar(0));
  for (const auto& [m, c] : p) {
    const auto it = std::lower_bound(h.monomials.begin(), h.monomials.end(), m, std::greater<>());
    if (it == h.monomials.end() || *it != m) throw DegreeMismatch("polynomial term outside degree " + std::to_string(h.degree));
    v[it - h.monomials.begin()] = c;
  }
  return v;
}

Polynomial to_poly(const CohomologyBasis& h, const Vec& v) {
  Polynomial p;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!Field::is_zero(v[i])) p.emplace(h.monomials[i], v[i]);
  }
  return p;
}

void check_shape(Cohomology& h, const CohClass& c) {
  if (c.degree < 0) throw std::invalid_argument("negative class degree");
  if (static_cast<int>(c.coords.size()) != h.dimension(c.degree)) {
    throw std::invalid_argument("class of degree " + std::to_string(c.degree) + " has " +
                                std::to_string(c.coords.size()) + " coordinates, expected " +
                                std::to_string(h.dimension(c.degree)));
  }
}

}  // namespace

Polynomial CohomologyBasis::representative(const FreeCDGA& a, int index) const {
  (void)a;
  return to_poly(*this, reps.at(index));
}

Cohomology::Cohomology(FreeCDGA algebra) : algebra_(std::move(algebra)) {}

const CohomologyBasis& Cohomology::at(int n) {
  auto it = cache_.find(n);
  if (it == cache_.end()) it = cache_.emplace(n, compute(algebra_, n)).first;
  return it->second;
}

CohClass Cohomology::class_of(const Polynomial& cocycle, int degree) {
  const CohomologyBasis& h = at(degree);
  if (!algebra_.d(cocycle).empty()) {
    throw std::invalid_argument("not a cocycle: d(" + algebra_.format(cocycle) + ") != 0");
  }
  const Field& f = algebra_.field();
  Vec v = to_vec(h, cocycle);
  for (std::size_t r = 0; r < h.image.size(); ++r) {
    const Scalar c = v[h.image_pivots[r]];
    if (Field::is_zero(c)) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(c, h.image[r][j]));
  }
  CohClass out{degree, {}};
  for (std::size_t r = 0; r < h.reps.size(); ++r) {
    const Scalar c = v[h.rep_pivots[r]];
    out.coords.push_back(c);
    if (Field::is_zero(c)) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(c, h.reps[r][j]));
  }
  if (!std::all_of(v.begin(), v.end(), [](const Scalar& x) { return Field::is_zero(x); })) {
    throw std::logic_error("cocycle outside the computed kernel");
  }
  return out;
}

Polynomial Cohomology::representative(const CohClass& c) {
  check_shape(*this, c);
  const CohomologyBasis& h = at(c.degree);
  Polynomial p;
  for (std::size_t r = 0; r < h.reps.size(); ++r) {
    p = algebra_.add(p, algebra_.scale(c.coords[r], to_poly(h, h.reps[r])));
  }
  return p;
}

CohClass Cohomology::basis_class(int degree, int index) {
  CohClass c = zero_class(degree);
  c.coords.at(index) = 1;
  return c;
}

CohClass Cohomology::zero_class(int degree) {
  return {degree, std::vector<Scalar>(static_cast<std::size_t>(dimension(degree)), Scalar(0))};
}

CohClass Cohomology::cup(const CohClass& u, const CohClass& v) {
  const int n = u.degree + v.degree;
  at(n);
  return class_of(algebra_.multiply(representative(u), representative(v)), n);
}

bool Cohomology::in_span(const CohClass& c, const std::vector<CohClass>& span) {
  check_shape(*this, c);
  Echelon e(algebra_.field(), c.coords.size());
  for (const auto& s : span) {
    if (s.degree != c.degree) throw std::invalid_argument("span classes must share the degree");
    check_shape(*this, s);
    e.add(s.coords);
  }
  return e.contains(c.coords);
}

CohomologyBasis cohomology(const FreeCDGA& a, int n) { return compute(a, n); }

CohClass cup_product(const FreeCDGA& a, const CohClass& u, const CohClass& v) {
  Cohomology h(a);
  return h.cup(u, v);
}

int cup_length(const FreeCDGA& a) {
  Cohomology h(a);
  const int top = a.degree_cap() - 1;
  std::vector<int> positive;
  for (int n = 1; n <= top; ++n) {
    if (h.dimension(n) > 0) positive.push_back(n);
  }
  if (positive.empty()) return 0;
  std::map<int, Echelon> power;
  for (int n : positive) {
    Echelon e(a.field(), h.dimension(n));
    for (int i = 0; i < h.dimension(n); ++i) e.add(h.basis_class(n, i).coords);
    power.emplace(n, std::move(e));
  }
  for (int length = 1;; ++length) {
    std::map<int, Echelon> next;
    for (const auto& [deg, space] : power) {
      if (space.rank() == 0) continue;
      for (int b : positive) {
        const int n = deg + b;
        if (n > top) {
          throw CapExceeded("a product of length " + std::to_string(length + 1) + " reaches degree " +
                            std::to_string(n) + ", beyond the determined range 0.." + std::to_string(top));
        }
        auto it = next.try_emplace(n, a.field(), static_cast<std::size_t>(h.dimension(n))).first;
        for (const Vec& row : space.rows()) {
          for (int j = 0; j < h.dimension(b); ++j) {
            it->second.add(h.cup({deg, row}, h.basis_class(b, j)).coords);
          }
        }
      }
    }
    const bool any = std::any_of(next.begin(), next.end(), [](const auto& kv) { return kv.second.rank() > 0; });
    if (!any) return length;
    power = std::move(next);
  }
}

std::vector<Polynomial> cocycles(const FreeCDGA& a, int n) {
  if (n < 0) return {};
  check_cap(a, n, "cocycles");
  const Coords here(a, n);
  const Coords next(a, n + 1);
  std::vector<Polynomial> out;
  for (const Vec& z : kernel(a.field(), d_matrix(a, here.monomials(), next), here.size())) out.push_back(here.poly(z));
  return out;
}

namespace {

Polynomial primitive(const FreeCDGA& a, const Polynomial& target, int degree) {
  if (target.empty()) return {};
  if (degree < 0) throw std::logic_error("nonzero exact product in degree 0");
  const Coords src(a, degree);
  const Coords dst(a, degree + 1);
  auto x = solve(a.field(), d_matrix(a, src.monomials(), dst), src.size(), dst.vec(target));
  if (!x) throw std::logic_error("product is zero in cohomology but has no primitive");
  return src.poly(*x);
}

MasseyCoset massey_impl(Cohomology& h, const CohClass& u, const CohClass& v, const CohClass& w,
                        const Polynomial* xs, const Polynomial* ys) {
  const FreeCDGA& A = h.algebra();
  check_shape(h, u);
  check_shape(h, v);
  check_shape(h, w);
  MasseyCoset out;
  out.degree = u.degree + v.degree + w.degree - 1;
  check_cap(A, out.degree, "the Massey product");
  check_cap(A, u.degree + v.degree, "the Massey product");
  check_cap(A, v.degree + w.degree, "the Massey product");
  if (!h.cup(u, v).is_zero()) throw ProductsNotZero("the product of the first two classes is not zero");
  if (!h.cup(v, w).is_zero()) throw ProductsNotZero("the product of the last two classes is not zero");

  const Polynomial a = h.representative(u);
  const Polynomial b = h.representative(v);
  const Polynomial c = h.representative(w);
  const Polynomial ab = A.multiply(a, b);
  const Polynomial bc = A.multiply(b, c);
  if (xs) {
    if (A.d(*xs) != ab) throw std::invalid_argument("supplied x does not satisfy dx = ab");
    out.x = *xs;
  } else {
    out.x = primitive(A, ab, u.degree + v.degree - 1);
  }
  if (ys) {
    if (A.d(*ys) != bc) throw std::invalid_argument("supplied y does not satisfy dy = bc");
    out.y = *ys;
  } else {
    out.y = primitive(A, bc, v.degree + w.degree - 1);
  }
  const Scalar sign = u.degree % 2 == 0 ? 1 : -1;
  out.cochain = A.add(A.multiply(out.x, c), A.scale(-sign, A.multiply(a, out.y)));
  out.representative = h.class_of(out.cochain, out.degree);

  const int left = v.degree + w.degree - 1;
  if (left >= 0) {
    for (int j = 0; j < h.dimension(left); ++j) out.indeterminacy.push_back(h.cup(u, h.basis_class(left, j)));
  }
  const int right = u.degree + v.degree - 1;
  if (right >= 0) {
    for (int j = 0; j < h.dimension(right); ++j) out.indeterminacy.push_back(h.cup(h.basis_class(right, j), w));
  }
  out.nontrivial = !h.in_span(out.representative, out.indeterminacy);
  return out;
}

}  // namespace

MasseyCoset massey_triple(Cohomology& h, const CohClass& u, const CohClass& v, const CohClass& w) {
  return massey_impl(h, u, v, w, nullptr, nullptr);
}

MasseyCoset massey_triple(Cohomology& h, const CohClass& u, const CohClass& v, const CohClass& w,
                          const Polynomial& x, const Polynomial& y) {
  return massey_impl(h, u, v, w, &x, &y);
}

MasseyCoset massey_triple(const FreeCDGA& a, const CohClass& u, const CohClass& v, const CohClass& w) {
  Cohomology h(a);
  return massey_impl(h, u, v, w, nullptr, nullptr);
}

MasseyCoset massey_triple(const FreeCDGA& a, const CohClass& u, const CohClass& v, const CohClass& w,
                          const Polynomial& x, const Polynomial& y) {
  Cohomology h(a);
  return massey_impl(h, u, v, w, &x, &y);
}

ToomerResult toomer_e0(const FreeCDGA& a, int top_degree) {
  if (top_degree < 0) throw std::invalid_argument("negative top degree");
  Cohomology h(a);
  const int dim = h.dimension(top_degree);
  if (dim != 1) {
    throw NoFundamentalClass("H^" + std::to_string(top_degree) + " has dimension " + std::to_string(dim) +
                             ", not 1");
  }
  const Field& f = a.field();
  const CohomologyBasis& hb = h.at(top_degree);
  const Coords here(a, top_degree);
  const Coords next(a, top_degree + 1);
  const std::vector<Vec> full = d_matrix(a, here.monomials(), next);

  ToomerResult out;
  for (int p = 1;; ++p) {
    std::vector<int> cols;
    for (std::size_t j = 0; j < here.size(); ++j) {
      if (FreeCDGA::word_length(here.monomials()[j]) >= p) cols.push_back(static_cast<int>(j));
    }
    if (cols.empty()) break;
    std::vector<Vec> m(full.size(), Vec(cols.size()));
    for (std::size_t i = 0; i < full.size(); ++i) {
      for (std::size_t k = 0; k < cols.size(); ++k) m[i][k] = full[i][cols[k]];
    }
    std::optional<Vec> witness;
    for (const Vec& z : kernel(f, std::move(m), cols.size())) {
      Vec v(here.size(), Scalar(0));
      for (std::size_t k = 0; k < cols.size(); ++k) v[cols[k]] = z[k];
      if (!h.class_of(to_poly(hb, v), top_degree).is_zero()) {
        witness = std::move(v);
        break;
      }
    }
    if (!witness) break;
    std::size_t lead = 0;
    while (Field::is_zero((*witness)[lead])) ++lead;
    const Scalar k = f.inv((*witness)[lead]);
    for (auto& x : *witness) x = f.mul(x, k);
    out.e0 = p;
    out.witness = here.poly(*witness);
  }
  return out;
}

}  // namespace syscat::cdga
