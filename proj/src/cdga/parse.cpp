#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "syscat/cdga.hpp"

namespace syscat::cdga {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

struct Statement {
  int line;
  std::string text;
};

std::vector<Statement> statements(std::string_view text) {
  std::vector<Statement> out;
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view row = text.substr(pos, end - pos);
    if (auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);
    std::size_t start = 0;
    for (;;) {
      const std::size_t semi = row.find(';', start);
      std::string piece = trim(row.substr(start, semi == std::string_view::npos ? row.size() - start : semi - start));
      if (!piece.empty()) out.push_back({line, std::move(piece)});
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const Statement& s, const std::string& msg) {
  throw ParseError("line " + std::to_string(s.line) + ": " + msg + " in '" + s.text + "'");
}

std::optional<long> to_int(const std::string& s) {
  if (s.empty() || s.size() > 12) return std::nullopt;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  return std::stol(s);
}

Field parse_field(const Statement& st, const std::string& spec) {
  if (spec == "Q") return Field::rationals();
  std::string digits;
  if (spec.size() > 3 && spec.rfind("Z<", 0) == 0 && spec.back() == '>') {
    digits = spec.substr(2, spec.size() - 3);
  } else if (spec.size() > 2 && (spec.rfind("Z_", 0) == 0 || spec.rfind("Z/", 0) == 0)) {
    digits = spec.substr(2);
  } else if (spec.size() > 1 && spec[0] == 'Z') {
    digits = spec.substr(1);
  } else {
    fail(st, "unknown field '" + spec + "'");
  }
  const auto p = to_int(trim(digits));
  if (!p) fail(st, "bad characteristic '" + digits + "'");
  try {
    return Field::prime(*p);
  } catch (const std::invalid_argument& e) {
    fail(st, e.what());
  }
}

}  // namespace

FreeCDGA parse_cdga(std::string_view text) {
  std::optional<Field> field;
  std::optional<int> cap;
  std::vector<Generator> gens;
  std::vector<Statement> diffs;
  bool first = true;
  for (const Statement& st : statements(text)) {
    std::istringstream in(st.text);
    std::string key;
    in >> key;
    std::string rest;
    std::getline(in, rest);
    rest = trim(rest);
    if (key == "cdga") {
      if (!first) fail(st, "the version header must come first");
      if (rest != "v1") fail(st, "unsupported version");
    } else if (key == "field") {
      if (field) fail(st, "field given twice");
      field = parse_field(st, rest);
    } else if (key == "cap") {
      if (cap) fail(st, "cap given twice");
      const auto n = to_int(rest);
      if (!n || *n < 1 || *n > 1000) fail(st, "cap must be an integer in 1..1000");
      cap = static_cast<int>(*n);
    } else if (key == "gen") {
      std::string spec = rest;
      std::string name, degree;
      if (auto colon = spec.find(':'); colon != std::string::npos) {
        name = trim(spec.substr(0, colon));
        degree = trim(spec.substr(colon + 1));
      } else {
        std::istringstream words(spec);
        words >> name >> degree;
        std::string extra;
        if (words >> extra) fail(st, "trailing text");
      }
      const auto deg = to_int(degree);
      if (name.empty() || !deg) fail(st, "expected 'gen <name> : <degree>'");
      if (*deg < 1 || *deg > 1000) fail(st, "generator degree must be in 1..1000");
      for (const auto& g : gens) {
        if (g.name == name) fail(st, "duplicate generator '" + name + "'");
      }
      gens.push_back({name, static_cast<int>(*deg)});
    } else if (key == "d") {
      diffs.push_back(st);
    } else {
      fail(st, "unknown statement '" + key + "'");
    }
    first = false;
  }
  if (!cap) throw ParseError("missing 'cap N'");
  if (!field) field = Field::rationals();

  std::vector<Polynomial> d(gens.size());
  FreeCDGA plain;
  try {
    plain = FreeCDGA::create(*field, gens, d, *cap);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  std::vector<char> seen(gens.size(), 0);
  for (const Statement& st : diffs) {
    const std::string body = trim(std::string_view(st.text).substr(1));
    const auto eq = body.find('=');
    if (eq == std::string::npos) fail(st, "expected 'd <name> = <polynomial>'");
    const std::string name = trim(body.substr(0, eq));
    const int i = plain.find(name);
    if (i < 0) fail(st, "unknown generator '" + name + "'");
    if (seen[i]) fail(st, "second differential for '" + name + "'");
    seen[i] = 1;
    try {
      d[i] = plain.parse_polynomial(body.substr(eq + 1));
    } catch (const ParseError& e) {
      fail(st, std::string(e.what()).substr(std::string("ParseError: ").size()));
    }
  }
  try {
    return FreeCDGA::create(*field, std::move(gens), std::move(d), *cap);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

FreeCDGA load_cdga_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_cdga(text.str());
}

FreeCDGA su6_model() {
  return parse_cdga(
      "cdga v1\n"
      "field Q\n"
      "cap 20\n"
      "gen x4 : 4\ngen x6 : 6\ngen y7 : 7\ngen y9 : 9\ngen y11 : 11\n"
      "d y7 = x4*x4\nd y9 = x4*x6\nd y11 = x6*x6\n");
}

FreeCDGA cp_model(int n) {
  if (n < 1 || n > 32) throw std::invalid_argument("cp model needs 1 <= n <= 32");
  const std::string y = "y" + std::to_string(2 * n + 1);
  return parse_cdga("cap " + std::to_string(4 * n + 1) + "; gen x2 : 2; gen " + y + " : " + std::to_string(2 * n + 1) +
                    "; d " + y + " = x2^" + std::to_string(n + 1));
}

FreeCDGA torus_model(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("torus model needs 1 <= n <= 16");
  std::string text = "cap " + std::to_string(2 * n + 1);
  for (int i = 1; i <= n; ++i) text += "; gen x" + std::to_string(i) + " : 1";
  return parse_cdga(text);
}

FreeCDGA builtin_model(std::string_view name) {
  std::string s = trim(name);
  if (s == "su6") return su6_model();
  for (const char* family : {"cp", "torus"}) {
    const std::string f = family;
    if (s.rfind(f, 0) != 0) continue;
    std::string rest = trim(s.substr(f.size()));
    if (!rest.empty() && (rest[0] == '-' || rest[0] == '_')) rest = rest.substr(1);
    const auto n = to_int(rest);
    if (!n) break;
    return f == "cp" ? cp_model(static_cast<int>(*n)) : torus_model(static_cast<int>(*n));
  }
  throw UnknownName("no built-in model '" + s + "' (try su6, cp <n>, torus <n>)");
}

std::vector<std::string> builtin_model_names() { return {"su6", "cp <n>", "torus <n>"}; }

}  // namespace syscat::cdga
