#pragma once

#include <gmpxx.h>

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "syscat/error.hpp"

namespace syscat::cdga {

using Scalar = mpq_class;

/// Coefficient field: the rationals or Z/p for a prime p.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(long p);

  long characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const;

  /// Canonical representative: for Z/p an integer in [0, p).
  Scalar reduce(const Scalar& x) const;
  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  explicit Field(long p) : p_(p) {}
  long p_ = 0;
};

/// Exponent of each generator, in generator order. Odd generators have exponent 0 or 1.
using Monomial = std::vector<int>;
/// Sparse polynomial; every stored coefficient is nonzero and reduced.
using Polynomial = std::map<Monomial, Scalar>;

struct Generator {
  std::string name;
  int degree = 1;
};

/// Free graded-commutative differential algebra, truncated at a degree cap.
/// Values are immutable and cheap to copy.
class FreeCDGA {
 public:
  /// Validates degrees, the degree of every d(x) and d(d(x)) = 0.
  /// Throws DegreeMismatch or NotSquareZero.
  static FreeCDGA create(Field field, std::vector<Generator> generators, std::vector<Polynomial> differential,
                         int degree_cap);

  const Field& field() const;
  const std::vector<Generator>& generators() const;
  int generator_count() const { return static_cast<int>(generators().size()); }
  int degree_cap() const;
  /// Index of a generator by name, or -1.
  int find(std::string_view name) const;
  const Polynomial& differential(int generator) const;

  int degree(const Monomial& m) const;
  static int word_length(const Monomial& m);
  /// Degree of a homogeneous nonzero polynomial; throws DegreeMismatch if inhomogeneous.
  int degree(const Polynomial& p) const;

  Monomial unit_monomial() const { return Monomial(generators().size(), 0); }
  Polynomial one() const;
  Polynomial generator(int index) const;
  Polynomial generator(std::string_view name) const;
  Polynomial scalar(const Scalar& c) const;

  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial scale(const Scalar& c, const Polynomial& a) const;
  Polynomial multiply(const Polynomial& a, const Polynomial& b) const;
  Polynomial multiply(const Monomial& a, const Monomial& b) const;
  /// Differential, extended by the Leibniz rule.
  Polynomial d(const Polynomial& p) const;
  Polynomial d(const Monomial& m) const;

  /// Monomial basis of the degree-n part, in a fixed order.
  std::vector<Monomial> basis(int n) const;

  std::string format(const Monomial& m) const;
  std::string format(const Polynomial& p) const;
  /// Parses "2*x4*y7 - x6^2" style text over this algebra's generators.
  Polynomial parse_polynomial(std::string_view text) const;
  /// Text in the algebra file grammar; parse_cdga(to_text()) reproduces the algebra.
  std::string to_text() const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Parses the algebra file grammar: statements separated by newlines or ';',
/// `cdga v1`, `field Q|Z<p>`, `cap N`, `gen name : deg`, `d name = poly`, '#' comments.
FreeCDGA parse_cdga(std::string_view text);
FreeCDGA load_cdga_file(const std::filesystem::path& path);

FreeCDGA su6_model();
/// Lambda(x2, y_{2n+1}) with dy = x^{n+1}, cap 4n+1.
FreeCDGA cp_model(int n);
/// Lambda(x1, ..., xn) in degree 1 with d = 0, cap 2n+1.
FreeCDGA torus_model(int n);
/// "su6", "cp <n>", "torus <n>" (also "cp3", "torus-3").
FreeCDGA builtin_model(std::string_view name);
std::vector<std::string> builtin_model_names();

/// A cohomology class, in coordinates of the basis chosen by cohomology().
struct CohClass {
  int degree = 0;
  std::vector<Scalar> coords;
  bool is_zero() const;
  bool operator==(const CohClass&) const = default;
};

/// H^n with its exact linear-algebra data.
struct CohomologyBasis {
  int degree = 0;
  std::vector<Monomial> monomials;          // basis of the degree-n cochains
  std::vector<std::vector<Scalar>> image;   // d(A^{n-1}) in reduced row echelon form
  std::vector<int> image_pivots;
  std::vector<std::vector<Scalar>> reps;    // cocycle representatives, echelon modulo the image
  std::vector<int> rep_pivots;

  int dimension() const { return static_cast<int>(reps.size()); }
  Polynomial representative(const FreeCDGA& a, int index) const;
};

/// Lazily computed cohomology of one algebra. Not thread safe; make one per thread.
class Cohomology {
 public:
  explicit Cohomology(FreeCDGA algebra);
  const FreeCDGA& algebra() const { return algebra_; }
  /// Throws CapExceeded unless 0 <= n <= cap - 1.
  const CohomologyBasis& at(int n);
  int dimension(int n) { return at(n).dimension(); }
  /// Coordinates of a homogeneous cocycle; throws std::invalid_argument for a non-cocycle.
  CohClass class_of(const Polynomial& cocycle, int degree);
  Polynomial representative(const CohClass& c);
  CohClass basis_class(int degree, int index);
  CohClass zero_class(int degree);
  CohClass cup(const CohClass& u, const CohClass& v);
  /// Whether c lies in the span of the given classes (all of the same degree).
  bool in_span(const CohClass& c, const std::vector<CohClass>& span);

 private:
  FreeCDGA algebra_;
  std::map<int, CohomologyBasis> cache_;
};

CohomologyBasis cohomology(const FreeCDGA& a, int n);
CohClass cup_product(const FreeCDGA& a, const CohClass& u, const CohClass& v);

/// Longest nonzero product of positive-degree classes. Throws CapExceeded when a
/// product that might be nonzero lands at or above the cap.
int cup_length(const FreeCDGA& a);

struct MasseyCoset {
  int degree = 0;
  CohClass representative;
  std::vector<CohClass> indeterminacy;
  bool nontrivial = false;
  Polynomial cochain;   // x c - (-1)^{|u|} a y
  Polynomial x, y;      // primitives: dx = ab, dy = bc
};

/// Triple product with primitives chosen as basic solutions of the linear systems.
/// Throws ProductsNotZero or CapExceeded.
MasseyCoset massey_triple(const FreeCDGA& a, const CohClass& u, const CohClass& v, const CohClass& w);
/// Same, with caller-supplied primitives; throws std::invalid_argument if dx != ab or dy != bc.
MasseyCoset massey_triple(const FreeCDGA& a, const CohClass& u, const CohClass& v, const CohClass& w,
                          const Polynomial& x, const Polynomial& y);
MasseyCoset massey_triple(Cohomology& h, const CohClass& u, const CohClass& v, const CohClass& w);
MasseyCoset massey_triple(Cohomology& h, const CohClass& u, const CohClass& v, const CohClass& w,
                          const Polynomial& x, const Polynomial& y);

/// Basis of the degree-n cocycles.
std::vector<Polynomial> cocycles(const FreeCDGA& a, int n);

struct ToomerResult {
  int e0 = 0;
  Polynomial witness;  // cocycle of word length >= e0 representing a nonzero top class
};

/// Throws NoFundamentalClass if dim H^top != 1, CapExceeded if top >= cap.
ToomerResult toomer_e0(const FreeCDGA& a, int top_degree);

/// A multilinear map on monomial tensors. Unlisted tensors map to zero.
struct MultilinearMap {
  int arity = 1;
  std::map<std::vector<Monomial>, Polynomial> values;

  Polynomial apply(const std::vector<Monomial>& tensor) const;
};

/// Maps f_0..f_k; f_i takes i+1 inputs and lowers degree by i. Missing maps are zero.
struct HomotopyFamily {
  FreeCDGA source;
  FreeCDGA target;
  std::vector<MultilinearMap> maps;
};

/// The algebra map sending generator i to images[i], tabulated on all monomials up to the source cap.
MultilinearMap algebra_map(const FreeCDGA& source, const FreeCDGA& target, const std::vector<Polynomial>& images);
Polynomial apply_linear(const FreeCDGA& target, const MultilinearMap& f, const Polynomial& p);

struct IdentityReport {
  int index = 0;
  bool holds = true;
  std::size_t tensors_checked = 0;
  Scalar max_discrepancy = 0;            // largest coefficient size of lhs - rhs
  std::vector<Monomial> offending;       // first tensor where the identity fails
  Polynomial discrepancy;                // lhs - rhs on that tensor
};

/// Checks the identity relating f_i to f_1..f_{i-1} on every tensor of total
/// degree at most cap - 1, for i = 0..up_to. Throws DegreeMismatch for
/// inhomogeneous or misplaced map values.
std::vector<IdentityReport> verify_higher_homotopies(const HomotopyFamily& h, int up_to);

std::string format(const Scalar& s);

}  // namespace syscat::cdga
