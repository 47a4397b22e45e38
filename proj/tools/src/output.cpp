#include "output.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "app.hpp"
#include "benfordxy/error.hpp"

namespace bxy::cli {

namespace fs = std::filesystem;

fs::path resolve_output_dir(const std::string& flag) {
  fs::path dir;
  if (!flag.empty()) {
    dir = flag;
  } else if (const char* env = std::getenv(kOutDirEnv); env && *env) {
    dir = env;
  } else {
    dir = ".";
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
  }
  return dir;
}

std::string format_real(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

void OutputSet::write_text(const std::string& name, const std::string& text) {
  const fs::path path = dir_ / name;
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  os << text;
  os.close();
  if (!os) throw IoError("cannot write '" + path.string() + "'");
  files_.push_back(path.string());
}

void OutputSet::write_csv(const std::string& name, const std::string& header,
                          const std::vector<std::string>& rows) {
  std::string text = header + "\n";
  for (const auto& r : rows) {
    text += r;
    text += '\n';
  }
  write_text(name, text);
}

void OutputSet::write_json(const std::string& name, const nlohmann::ordered_json& doc) {
  write_text(name, doc.dump(2) + "\n");
}

std::string iso8601_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifest(OutputSet& outputs, const std::string& command, const std::vector<std::string>& args,
                    const nlohmann::ordered_json& config) {
  nlohmann::ordered_json m;
  m["command"] = command;
  m["argv"] = args;
  m["config"] = config;
  m["tool_version"] = tool_version();
  m["timestamp"] = iso8601_now();
  m["outputs"] = outputs.files();
  // Written last and not listed in itself.
  const fs::path path = outputs.dir() / "manifest.json";
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  os << m.dump(2) << "\n";
  os.close();
  if (!os) throw IoError("cannot write '" + path.string() + "'");
}

namespace {

bool parse_cell(std::string_view cell, double& v) {
  while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
  while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r')) cell.remove_suffix(1);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  return !cell.empty() && ec == std::errc() && ptr == cell.data() + cell.size();
}

} // namespace

std::vector<double> read_csv_column(const fs::path& path, int column) {
  if (column < 0) throw ConfigError("column index must be >= 0");
  std::ifstream is(path);
  if (!is) throw IoError("cannot open '" + path.string() + "'");
  std::vector<double> values;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    std::string_view rest = line;
    std::string_view cell;
    bool found = false;
    for (int c = 0; c <= column; ++c) {
      const std::size_t comma = rest.find(',');
      cell = rest.substr(0, comma);
      if (c == column) {
        found = true;
        break;
      }
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    double v = 0.0;
    if (!found || !parse_cell(cell, v)) {
      if (lineno == 1 && values.empty()) continue; // header
      throw IoError(path.string() + ":" + std::to_string(lineno) + ": no numeric value in column " +
                    std::to_string(column));
    }
    values.push_back(v);
  }
  if (values.empty()) throw IoError(path.string() + ": column " + std::to_string(column) + " is empty");
  return values;
}

} // namespace bxy::cli
