#include <algorithm>

#include "syscat/bounds.hpp"

namespace syscat::bounds {

namespace {

using K = FundamentalGroup::Kind;

// Citation strings, one per rule.
constexpr const char* kRange = "normalized Lusternik-Schnirelmann category of a closed manifold lies in [1, dim]";
constexpr const char* kSysRange = "systolic category: largest length of a partition of dim into systolically bounded degrees";
constexpr const char* kEssentialCat = "essential manifolds have cat = dim, and cat = dim forces essentiality";
constexpr const char* kThreeCat = "closed 3-manifolds: cat = 1 for trivial pi1, 2 for free pi1, 3 otherwise";
constexpr const char* kConnCat = "a (k-1)-connected CW complex X satisfies cat X <= dim X / k";
constexpr const char* kSimplyConnCat = "simply connected closed 4- and 5-manifolds other than homotopy spheres have cat = 2";
constexpr const char* kCupCat = "cup-length lower bound cat >= cuplength";
constexpr const char* kSurfaceCat = "closed surfaces: cat S^2 = 1 and cat = 2 for every other surface";
constexpr const char* kToomerCat = "Toomer invariant lower bound cat >= e0 for simply connected spaces";
constexpr const char* kEquivalence = "syscat = dim if and only if cat = dim";
constexpr const char* kEssentialSys = "Gromov's systolic inequality for essential manifolds gives syscat = dim";
constexpr const char* kBettiSys = "b_k >= 1 with 0 < k < dim on an orientable manifold gives a stable (k, dim-k) inequality, so syscat >= 2";
constexpr const char* kCupSys = "stable systolic inequalities from real cup products: syscat >= cuplength over R";
constexpr const char* kJacobiSys = "nonzero lifted Abel-Jacobi fiber class gives syscat >= b_1 + 1";
constexpr const char* kThreeSys = "closed 3-manifolds: syscat = cat, except 1 <= syscat <= 2 for free pi1 on non-orientable ones";
constexpr const char* kSurfaceSys = "closed surfaces: syscat = cat";
constexpr const char* kConjCup = "conjecture: syscat >= cup-length over arbitrary coefficients";
constexpr const char* kConjSmale = "conjecture: a (2,3)-systolic inequality sys_2 sys_3 <= C vol_5 on Smale's rational homology spheres";
constexpr const char* kConjRp2 = "conjecture: sys_1 sys_1 sys_n <= C vol_{n+2} on RP^2 x S^n";

struct Facts {
  bool simply_connected = false;
  int k_eff = 1;  // the manifold is (k_eff - 1)-connected
  bool have_connectivity = false;
  Tri essential = Tri::unknown;
  bool essential_derived = false;
  Tri sphere = Tri::unknown;  // surfaces only
};

Facts derive(const ManifoldDescriptor& d) {
  Facts f;
  f.simply_connected = d.pi1.kind == K::trivial || (d.connectivity_k && *d.connectivity_k >= 2);
  if (d.connectivity_k) {
    f.k_eff = *d.connectivity_k;
    f.have_connectivity = true;
  }
  if (f.simply_connected) {
    f.k_eff = std::max(f.k_eff, 2);
    f.have_connectivity = true;
  }
  f.essential = d.essential;
  if (f.essential == Tri::unknown && d.dim == 3) {
    if (d.pi1.kind == K::other) f.essential = Tri::yes;
    if (d.pi1.kind == K::trivial || d.pi1.kind == K::free) f.essential = Tri::no;
    f.essential_derived = f.essential != Tri::unknown;
  }
  if (d.dim == 2) {
    const bool b1_zero = d.betti && (*d.betti)[1] == 0;
    const bool b1_pos = d.betti && (*d.betti)[1] > 0;
    if (f.simply_connected || (d.orientable == Tri::yes && b1_zero)) {
      f.sphere = Tri::yes;
    } else if (d.pi1.kind == K::free || d.pi1.kind == K::other || d.orientable == Tri::no || b1_pos) {
      f.sphere = Tri::no;
    }
  }
  return f;
}

class Engine {
 public:
  Engine(const ManifoldDescriptor& d, bool conjectures) : d_(d), f_(derive(d)), conjectures_(conjectures) {
    const int n = d.dim;
    cat_.lo = sys_.lo = 1;
    cat_.hi = sys_.hi = n;
  }

  JointBounds run() {
    cat_rules();
    sys_rules();
    fixpoint();
    check(cat_, "cat");
    check(sys_, "syscat");
    if (conjectures_) conjecture_rules();
    return {cat_, sys_};
  }

 private:
  static void lower(BoundInterval& b, const char* rule, const std::string& cite, int v) {
    b.lo = std::max(b.lo, v);
    b.trace.push_back({rule, cite, "lo", v});
  }
  static void upper(BoundInterval& b, const char* rule, const std::string& cite, int v) {
    b.hi = std::min(b.hi, v);
    b.trace.push_back({rule, cite, "hi", v});
  }
  static void exact(BoundInterval& b, const char* rule, const std::string& cite, int v) {
    b.lo = std::max(b.lo, v);
    b.hi = std::min(b.hi, v);
    b.trace.push_back({rule, cite, "exact", v});
  }

  std::string essential_cite(const char* base) const {
    std::string s = base;
    if (f_.essential_derived) s += " (essentiality read off pi1 in dimension 3)";
    return s;
  }

  void cat_rules() {
    const int n = d_.dim;
    cat_.trace.push_back({"R-cat-1", kRange, "lo", 1});
    cat_.trace.push_back({"R-cat-1", kRange, "hi", n});
    if (f_.essential == Tri::yes) exact(cat_, "R-cat-2", essential_cite(kEssentialCat), n);
    if (f_.essential == Tri::no) upper(cat_, "R-cat-3", essential_cite(kEssentialCat), n - 1);
    if (n == 3) {
      if (d_.pi1.kind == K::trivial) exact(cat_, "R-cat-4", kThreeCat, 1);
      if (d_.pi1.kind == K::free) exact(cat_, "R-cat-4", kThreeCat, 2);
      if (d_.pi1.kind == K::other) exact(cat_, "R-cat-4", kThreeCat, 3);
    }
    if (f_.have_connectivity) {
      std::string cite = kConnCat;
      cite += " (k = " + std::to_string(f_.k_eff) + ")";
      upper(cat_, "R-cat-5", cite, n / f_.k_eff);
    }
    if ((n == 4 || n == 5) && f_.simply_connected && d_.is_homotopy_sphere == Tri::no) {
      exact(cat_, "R-cat-6", kSimplyConnCat, 2);
    }
    std::optional<int> cup;
    if (d_.cuplength_any) cup = *d_.cuplength_any;
    if (d_.cuplength_R) cup = std::max(cup.value_or(0), *d_.cuplength_R);
    if (cup && *cup >= 1) lower(cat_, "R-cat-7", kCupCat, *cup);
    if (n == 2 && f_.sphere != Tri::unknown) exact(cat_, "R-cat-8", kSurfaceCat, f_.sphere == Tri::yes ? 1 : 2);
    if (d_.toomer_e0 && f_.simply_connected && *d_.toomer_e0 >= 1) lower(cat_, "R-cat-10", kToomerCat, *d_.toomer_e0);
  }

  void sys_rules() {
    const int n = d_.dim;
    sys_.trace.push_back({"R-sys-1", kSysRange, "lo", 1});
    sys_.trace.push_back({"R-sys-1", kSysRange, "hi", n});
    if (f_.essential == Tri::yes) exact(sys_, "R-sys-2", essential_cite(kEssentialSys), n);
    if (d_.orientable == Tri::yes && d_.betti) {
      for (int k = 1; k <= n - 1; ++k) {
        if ((*d_.betti)[k] >= 1) {
          lower(sys_, "R-sys-4", kBettiSys + std::string(" (k = ") + std::to_string(k) + ")", 2);
          break;
        }
      }
    }
    if (d_.cuplength_R && *d_.cuplength_R >= 1) lower(sys_, "R-sys-5", kCupSys, *d_.cuplength_R);
    if (d_.jacobi_fiber_nonzero == Tri::yes && d_.betti && n >= 2) {
      // The fiber has dimension n - b_1; for a point fiber the bound saturates at n.
      const int b1 = (*d_.betti)[1];
      if (b1 < n) lower(sys_, "R-sys-6", kJacobiSys, b1 + 1);
      if (b1 == n) lower(sys_, "R-sys-6", kJacobiSys + std::string(" (point fiber: b_1 = dim)"), n);
    }
    if (n == 3) {
      if (d_.pi1.kind == K::trivial) exact(sys_, "R-sys-7", kThreeSys, 1);
      if (d_.pi1.kind == K::other) exact(sys_, "R-sys-7", kThreeSys, 3);
      if (d_.pi1.kind == K::free && d_.orientable == Tri::yes) exact(sys_, "R-sys-7", kThreeSys, 2);
      if (d_.pi1.kind == K::free && d_.orientable == Tri::no) upper(sys_, "R-sys-7", kThreeSys, 2);
    }
    if (n == 2 && f_.sphere != Tri::unknown) exact(sys_, "R-sys-8", kSurfaceSys, f_.sphere == Tri::yes ? 1 : 2);
  }

  // cat and syscat reach dim together; propagate until stable.
  void fixpoint() {
    const int n = d_.dim;
    for (bool moved = true; moved;) {
      moved = false;
      if (cat_.hi < n && sys_.hi > n - 1) {
        upper(sys_, "R-sys-3", kEquivalence + std::string(" (cat <= ") + std::to_string(cat_.hi) + ")", n - 1);
        moved = true;
      }
      if (sys_.hi < n && cat_.hi > n - 1) {
        upper(cat_, "R-cat-9", kEquivalence + std::string(" (syscat <= ") + std::to_string(sys_.hi) + ")", n - 1);
        moved = true;
      }
      if (cat_.lo == n && sys_.lo < n) {
        lower(sys_, "R-sys-3", kEquivalence + std::string(" (cat = dim)"), n);
        moved = true;
      }
      if (sys_.lo == n && cat_.lo < n) {
        lower(cat_, "R-cat-9", kEquivalence + std::string(" (syscat = dim)"), n);
        moved = true;
      }
    }
  }

  void check(const BoundInterval& b, const char* what) const {
    if (b.lo <= b.hi) return;
    std::string msg = (d_.name.empty() ? std::string() : d_.name + ": ") + what + " interval is empty (lo " +
                      std::to_string(b.lo) + " > hi " + std::to_string(b.hi) + ")";
    msg += "; rules:";
    for (const auto& t : b.trace) msg += " " + t.rule + "[" + t.bound + " " + std::to_string(t.value) + "]";
    throw InconsistentDescriptor(msg);
  }

  void conjecture_rules() {
    const int n = d_.dim;
    auto& tr = sys_.conjectural_trace;
    if (d_.cuplength_any && *d_.cuplength_any >= 1) tr.push_back({"C-1", kConjCup, "lo", *d_.cuplength_any});
    if (n == 5 && f_.simply_connected && d_.betti) {
      bool rational_sphere = true;
      for (int k = 1; k <= 4; ++k) rational_sphere = rational_sphere && (*d_.betti)[k] == 0;
      const bool not_sphere =
          d_.is_homotopy_sphere == Tri::no || (d_.cuplength_any && *d_.cuplength_any >= 2);
      if (rational_sphere && not_sphere) tr.push_back({"C-2", kConjSmale, "lo", 2});
    }
    if (n >= 3 && d_.orientable == Tri::no && d_.pi1.kind == K::other && d_.betti && d_.cuplength_any &&
        *d_.cuplength_any >= 3) {
      bool shape = true;
      for (int k = 1; k <= n - 1; ++k) shape = shape && (*d_.betti)[k] == (k == n - 2 ? 1 : 0);
      if (shape) tr.push_back({"C-3", kConjRp2, "lo", 3});
    }
    if (tr.empty()) return;
    int lo = sys_.lo;
    for (const auto& t : tr) lo = std::max(lo, t.value);
    sys_.conjectural_lo = lo;
  }

  const ManifoldDescriptor& d_;
  Facts f_;
  bool conjectures_;
  BoundInterval cat_;
  BoundInterval sys_;
};

}  // namespace

JointBounds joint_bounds(const ManifoldDescriptor& d, bool conjecture_mode) {
  validate(d);
  return Engine(d, conjecture_mode).run();
}

BoundInterval cat_bounds(const ManifoldDescriptor& d) { return joint_bounds(d, false).cat; }

BoundInterval syscat_bounds(const ManifoldDescriptor& d, bool conjecture_mode) {
  return joint_bounds(d, conjecture_mode).syscat;
}

}  // namespace syscat::bounds
