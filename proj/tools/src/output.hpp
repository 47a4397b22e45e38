#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace bxy::cli {

/// File-system or input-format failure; maps to exit code 1.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kOutDirEnv = "BENFORDXY_OUT_DIR";

/// --out if given, else $BENFORDXY_OUT_DIR, else the working directory.
/// The directory is created if missing.
std::filesystem::path resolve_output_dir(const std::string& flag);

/// Shortest decimal text that reads back to the same double.
std::string format_real(double x);

/// Collects written files for the run manifest.
class OutputSet {
public:
  explicit OutputSet(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  const std::vector<std::string>& files() const { return files_; }

  /// rows are written verbatim, one per line, after the header.
  void write_csv(const std::string& name, const std::string& header, const std::vector<std::string>& rows);
  void write_json(const std::string& name, const nlohmann::ordered_json& doc);

private:
  void write_text(const std::string& name, const std::string& text);

  std::filesystem::path dir_;
  std::vector<std::string> files_;
};

/// Writes manifest.json: command, argv, config, tool_version, timestamp and
/// the list of data files.
void write_manifest(OutputSet& outputs, const std::string& command, const std::vector<std::string>& args,
                    const nlohmann::ordered_json& config);

/// UTC time, e.g. 2024-05-01T12:00:00Z.
std::string iso8601_now();

/// One numeric column of a CSV file (0-based). A non-numeric first line is
/// taken as a header. Throws IoError naming the line of any bad cell.
std::vector<double> read_csv_column(const std::filesystem::path& path, int column);

} // namespace bxy::cli
