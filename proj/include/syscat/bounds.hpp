#pragma once

#include <gmpxx.h>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syscat/error.hpp"

namespace syscat::bounds {

enum class Tri { unknown, yes, no };

struct FundamentalGroup {
  enum class Kind { unknown, trivial, free, other };
  Kind kind = Kind::unknown;
  int rank = 0;  // for free groups
};

/// What is known about a closed manifold. Unknown fields never trigger a rule.
struct ManifoldDescriptor {
  std::string name;
  int dim = 0;
  Tri orientable = Tri::unknown;
  FundamentalGroup pi1;
  Tri essential = Tri::unknown;
  std::optional<std::vector<int>> betti;  // rational Betti numbers b_0..b_dim
  std::optional<int> connectivity_k;      // the manifold is (k-1)-connected
  std::optional<int> cuplength_R;
  std::optional<int> cuplength_any;
  std::optional<int> toomer_e0;
  Tri massey_nontrivial = Tri::unknown;
  Tri jacobi_fiber_nonzero = Tri::unknown;
  Tri is_homotopy_sphere = Tri::unknown;
};

/// Parses `key: value` lines. Descriptors in one text are separated by lines of `---`.
std::vector<ManifoldDescriptor> parse_descriptors(std::string_view text);
ManifoldDescriptor parse_descriptor(std::string_view text);
std::vector<ManifoldDescriptor> load_descriptor_file(const std::filesystem::path& path);
std::string to_text(const ManifoldDescriptor& d);

/// Checks the descriptor invariants; throws InconsistentDescriptor.
void validate(const ManifoldDescriptor& d);

struct TraceEntry {
  std::string rule;      // e.g. "R-cat-5"
  std::string citation;  // the result the rule rests on
  std::string bound;     // "lo", "hi" or "exact"
  int value = 0;
};

struct BoundInterval {
  int lo = 1;
  int hi = 1;
  std::vector<TraceEntry> trace;
  std::optional<int> conjectural_lo;
  std::vector<TraceEntry> conjectural_trace;

  bool contains(int v) const { return lo <= v && v <= hi; }
};

struct JointBounds {
  BoundInterval cat;
  BoundInterval syscat;
};

/// Applies the cat and syscat rules together until neither interval moves.
/// Throws InconsistentDescriptor if an interval becomes empty.
JointBounds joint_bounds(const ManifoldDescriptor& d, bool conjecture_mode = false);
BoundInterval cat_bounds(const ManifoldDescriptor& d);
BoundInterval syscat_bounds(const ManifoldDescriptor& d, bool conjecture_mode = false);

/// Massey-product systolic inequality stsys_{p1}^2 stsys_{p2} stsys_{p3} <= (A1 + A2) IQ vol_n.
struct InequalitySpec {
  int n = 0, p1 = 0, p2 = 0, p3 = 0;
  mpq_class a1, a2;
  mpz_class n_factorial;
  std::string statement;

  mpq_class constant() const { return a1 + a2; }
};

/// Throws InvalidPartition unless n, p1, p2 >= 1 and p3 = n - (2 p1 + p2 - 1) >= 1.
InequalitySpec massey_inequality_spec(int n, int p1, int p2);

struct IqBound {
  int value = 0;
  int p1 = 0, p2 = 0, p3 = 0;
  std::string citation;
};

/// Lower bound for the IQ-modified systolic category: 4 systole factors minus 1 IQ factor.
/// Needs massey_nontrivial = yes and b_{p1} = b_{p2} = b_{p3} = 1 for some admissible (p1, p2).
std::optional<IqBound> iq_modified_syscat_lower(const ManifoldDescriptor& d);

struct Interval {
  int lo = 0;
  int hi = 0;
};

struct KnownVariant {
  std::string label;
  std::string descriptor;  // descriptor text of this manifold
  std::optional<Interval> cat;
  std::optional<Interval> syscat;
};

struct KnownCase {
  std::string name;
  std::string title;
  std::vector<KnownVariant> variants;
  std::optional<int> stable_syscat;
  std::optional<int> rational_cat;
  std::optional<int> iq_syscat_lower;
  std::vector<std::string> citations;
};

/// rp3, surfaces, cpn, singhof-m16, m19, smale-mk. Throws UnknownName.
KnownCase lookup_known(std::string_view name);
std::vector<std::string> known_names();

std::string to_string(Tri t);

}  // namespace syscat::bounds
