#include <cctype>
#include <fstream>
#include <sstream>

#include "syscat/bounds.hpp"

namespace syscat::bounds {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("descriptor line " + std::to_string(line) + ": " + msg);
}

int to_int(int line, const std::string& s) {
  if (s.empty() || s.size() > 9) fail(line, "expected an integer, got '" + s + "'");
  std::size_t i = 0;
  if (s[0] == '-') i = 1;
  if (i == s.size()) fail(line, "expected an integer, got '" + s + "'");
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail(line, "expected an integer, got '" + s + "'");
  }
  return std::stoi(s);
}

Tri to_tri(int line, const std::string& s) {
  const std::string v = lower(s);
  if (v == "yes" || v == "true") return Tri::yes;
  if (v == "no" || v == "false") return Tri::no;
  if (v == "unknown" || v == "?") return Tri::unknown;
  fail(line, "expected yes/no/unknown, got '" + s + "'");
}

FundamentalGroup to_pi1(int line, const std::string& s) {
  std::string v = lower(s);
  FundamentalGroup g;
  if (v == "trivial" || v == "1") {
    g.kind = FundamentalGroup::Kind::trivial;
  } else if (v == "other") {
    g.kind = FundamentalGroup::Kind::other;
  } else if (v == "unknown" || v == "?") {
    g.kind = FundamentalGroup::Kind::unknown;
  } else if (v.rfind("free", 0) == 0) {
    std::string r = trim(v.substr(4));
    if (!r.empty() && r.front() == '(' && r.back() == ')') r = trim(r.substr(1, r.size() - 2));
    g.kind = FundamentalGroup::Kind::free;
    g.rank = r.empty() ? 1 : to_int(line, r);
    if (g.rank < 1) fail(line, "free rank must be at least 1");
  } else {
    fail(line, "expected trivial, free(r), other or unknown, got '" + s + "'");
  }
  return g;
}

std::optional<int> opt_int(int line, const std::string& s) {
  const std::string v = lower(s);
  if (v == "unknown" || v == "?") return std::nullopt;
  return to_int(line, s);
}

ManifoldDescriptor parse_block(const std::vector<std::pair<int, std::string>>& lines) {
  ManifoldDescriptor d;
  bool have_dim = false;
  std::vector<std::string> seen;
  for (const auto& [line, text] : lines) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) fail(line, "expected 'key: value'");
    const std::string key = trim(text.substr(0, colon));
    const std::string value = trim(text.substr(colon + 1));
    for (const auto& k : seen) {
      if (k == key) fail(line, "duplicate key '" + key + "'");
    }
    seen.push_back(key);
    if (key == "name") {
      d.name = value;
    } else if (key == "dim") {
      d.dim = to_int(line, value);
      have_dim = true;
    } else if (key == "orientable") {
      d.orientable = to_tri(line, value);
    } else if (key == "pi1") {
      d.pi1 = to_pi1(line, value);
    } else if (key == "essential") {
      d.essential = to_tri(line, value);
    } else if (key == "betti_Q" || key == "betti") {
      std::istringstream in(value);
      std::vector<int> b;
      std::string tok;
      while (in >> tok) {
        if (tok.back() == ',') tok.pop_back();
        if (!tok.empty()) b.push_back(to_int(line, tok));
      }
      if (!b.empty()) d.betti = std::move(b);
    } else if (key == "connectivity_k" || key == "connectivity") {
      d.connectivity_k = opt_int(line, value);
    } else if (key == "cuplength_R") {
      d.cuplength_R = opt_int(line, value);
    } else if (key == "cuplength_any") {
      d.cuplength_any = opt_int(line, value);
    } else if (key == "toomer_e0") {
      d.toomer_e0 = opt_int(line, value);
    } else if (key == "massey_nontrivial") {
      d.massey_nontrivial = to_tri(line, value);
    } else if (key == "jacobi_fiber_nonzero") {
      d.jacobi_fiber_nonzero = to_tri(line, value);
    } else if (key == "is_homotopy_sphere") {
      d.is_homotopy_sphere = to_tri(line, value);
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }
  if (!have_dim) throw ParseError("descriptor without 'dim'");
  return d;
}

}  // namespace

std::vector<ManifoldDescriptor> parse_descriptors(std::string_view text) {
  std::vector<ManifoldDescriptor> out;
  std::vector<std::pair<int, std::string>> block;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  const auto flush = [&] {
    if (!block.empty()) out.push_back(parse_block(block));
    block.clear();
  };
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string t = trim(raw);
    if (t.empty()) continue;
    if (t == "---") {
      flush();
      continue;
    }
    // ';' separates entries on one line
    std::size_t start = 0;
    for (;;) {
      const auto semi = t.find(';', start);
      const std::string piece = trim(t.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
      if (!piece.empty()) block.emplace_back(line, piece);
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
  }
  flush();
  if (out.empty()) throw ParseError("no descriptor found");
  return out;
}

ManifoldDescriptor parse_descriptor(std::string_view text) {
  auto all = parse_descriptors(text);
  if (all.size() != 1) throw ParseError("expected exactly one descriptor, found " + std::to_string(all.size()));
  return all.front();
}

std::vector<ManifoldDescriptor> load_descriptor_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_descriptors(text.str());
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes:
      return "yes";
    case Tri::no:
      return "no";
    default:
      return "unknown";
  }
}

std::string to_text(const ManifoldDescriptor& d) {
  std::ostringstream out;
  if (!d.name.empty()) out << "name: " << d.name << "\n";
  out << "dim: " << d.dim << "\n";
  if (d.orientable != Tri::unknown) out << "orientable: " << to_string(d.orientable) << "\n";
  switch (d.pi1.kind) {
    case FundamentalGroup::Kind::trivial:
      out << "pi1: trivial\n";
      break;
    case FundamentalGroup::Kind::free:
      out << "pi1: free(" << d.pi1.rank << ")\n";
      break;
    case FundamentalGroup::Kind::other:
      out << "pi1: other\n";
      break;
    default:
      break;
  }
  if (d.essential != Tri::unknown) out << "essential: " << to_string(d.essential) << "\n";
  if (d.betti) {
    out << "betti_Q:";
    for (int b : *d.betti) out << " " << b;
    out << "\n";
  }
  if (d.connectivity_k) out << "connectivity_k: " << *d.connectivity_k << "\n";
  if (d.cuplength_R) out << "cuplength_R: " << *d.cuplength_R << "\n";
  if (d.cuplength_any) out << "cuplength_any: " << *d.cuplength_any << "\n";
  if (d.toomer_e0) out << "toomer_e0: " << *d.toomer_e0 << "\n";
  if (d.massey_nontrivial != Tri::unknown) out << "massey_nontrivial: " << to_string(d.massey_nontrivial) << "\n";
  if (d.jacobi_fiber_nonzero != Tri::unknown) {
    out << "jacobi_fiber_nonzero: " << to_string(d.jacobi_fiber_nonzero) << "\n";
  }
  if (d.is_homotopy_sphere != Tri::unknown) out << "is_homotopy_sphere: " << to_string(d.is_homotopy_sphere) << "\n";
  return out.str();
}

void validate(const ManifoldDescriptor& d) {
  const auto bad = [&](const std::string& msg) {
    throw InconsistentDescriptor((d.name.empty() ? std::string() : d.name + ": ") + msg);
  };
  using K = FundamentalGroup::Kind;
  if (d.dim < 1) bad("dim must be positive");
  if (d.pi1.kind == K::free && d.pi1.rank < 1) bad("free fundamental group needs rank >= 1");
  if (d.connectivity_k) {
    if (*d.connectivity_k < 1) bad("connectivity_k must be at least 1");
    if (*d.connectivity_k >= 2 && d.pi1.kind != K::trivial && d.pi1.kind != K::unknown) {
      bad("connectivity_k >= 2 requires a trivial fundamental group");
    }
  }
  for (const auto* v : {&d.cuplength_R, &d.cuplength_any, &d.toomer_e0}) {
    if (*v && (**v < 0 || **v > d.dim)) bad("cup-length style invariants must lie in 0..dim");
  }
  if (d.cuplength_R && d.cuplength_any && *d.cuplength_any < *d.cuplength_R) {
    bad("cuplength_any is at least cuplength_R");
  }
  const bool simply_connected =
      d.pi1.kind == K::trivial || (d.connectivity_k && *d.connectivity_k >= 2);
  if (d.dim == 1 && (d.pi1.kind == K::trivial || d.pi1.kind == K::other || (d.pi1.kind == K::free && d.pi1.rank != 1))) {
    bad("the only closed 1-manifold is the circle");
  }
  if (d.dim == 2 && d.pi1.kind == K::free) bad("no closed surface has a free fundamental group");
  if (simply_connected && d.essential == Tri::yes) bad("simply connected manifolds are not essential");
  if (simply_connected && d.orientable == Tri::no) bad("simply connected manifolds are orientable");
  if (d.betti) {
    const auto& b = *d.betti;
    if (static_cast<int>(b.size()) != d.dim + 1) bad("betti_Q needs dim + 1 entries");
    for (int x : b) {
      if (x < 0) bad("negative Betti number");
    }
    if (b[0] != 1) bad("b_0 must be 1 (connected)");
    if (d.dim >= 1 && d.pi1.kind == K::trivial && d.dim > 1 && b[1] != 0) bad("b_1 must be 0 for trivial pi1");
    if (d.pi1.kind == K::free && d.dim > 1 && b[1] != d.pi1.rank) bad("b_1 must equal the free rank");
    if (d.orientable == Tri::yes && b[d.dim] != 1) bad("orientable closed manifolds have b_dim = 1");
    if (d.orientable == Tri::no && b[d.dim] != 0) bad("non-orientable closed manifolds have b_dim = 0");
    if (d.orientable == Tri::yes) {
      for (int k = 0; k <= d.dim; ++k) {
        if (b[k] != b[d.dim - k]) bad("Poincare duality fails for the Betti numbers");
      }
    }
    if (d.dim == 2) {
      const bool sphere = simply_connected || (d.orientable == Tri::yes && b[1] == 0);
      const bool other = d.pi1.kind == K::free || d.pi1.kind == K::other || d.orientable == Tri::no || b[1] > 0;
      if (sphere && other) bad("surface data mixes S^2 with a non-sphere");
      if (d.orientable == Tri::yes && b[1] % 2 != 0) bad("orientable surfaces have even b_1");
    }
    if (d.connectivity_k) {
      for (int k = 1; k < *d.connectivity_k && k <= d.dim; ++k) {
        if (b[k] != 0) bad("b_" + std::to_string(k) + " must vanish below the connectivity");
      }
    }
  }
}

}  // namespace syscat::bounds
