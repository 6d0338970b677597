#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "syscat/lab.hpp"

namespace syscat::lab {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_file(const std::filesystem::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << data;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

bool RunReport::passed() const {
  for (const auto& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  throw ConfigError("unknown format '" + name + "' (text or csv)");
}

int thread_cap(int requested) {
  int n = std::max(1, requested);
  if (const char* env = std::getenv("SYSCAT_LAB_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min<long>(n, cap);
  }
  return n;
}

std::string render_text(const RunReport& r) {
  std::ostringstream out;
  out << "experiment: " << r.experiment << "\n";
  for (const auto& [k, v] : r.inputs) out << "  " << k << " = " << v << "\n";
  out << "results:\n";
  for (const auto& v : r.verdicts) {
    out << "  [" << (v.pass ? "PASS" : "FAIL") << "] " << v.name << ": " << v.measured << "  (target " << v.target
        << "; " << v.provenance << ")\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  if (!r.citations.empty()) {
    out << "citations:\n";
    for (const auto& c : r.citations) out << "  - " << c << "\n";
  }
  out << "verdict: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_csv(const Table& t) {
  std::ostringstream out;
  out << "# " << t.comment << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_field(t.columns[i]);
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << "\n";
  }
  return out.str();
}

std::vector<std::filesystem::path> emit_report(const RunReport& report, Format format,
                                               const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  if (format == Format::text) {
    const auto path = dir / (report.experiment + "_report.txt");
    write_file(path, render_text(report));
    written.push_back(path);
    return written;
  }
  for (const auto& t : report.tables) {
    const auto path = dir / t.file;
    write_file(path, render_csv(t));
    written.push_back(path);
  }
  Table verdicts;
  verdicts.file = report.experiment + "_verdicts.csv";
  verdicts.comment = "columns: name, measured value, target, source of the target, pass (1/0)";
  verdicts.columns = {"name", "measured", "target", "provenance", "pass"};
  for (const auto& v : report.verdicts) verdicts.rows.push_back({v.name, v.measured, v.target, v.provenance, v.pass ? "1" : "0"});
  const auto path = dir / verdicts.file;
  write_file(path, render_csv(verdicts));
  written.push_back(path);
  return written;
}

}  // namespace syscat::lab
