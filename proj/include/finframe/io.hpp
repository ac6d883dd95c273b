#pragma once

#include "finframe/dilation.hpp"
#include "finframe/frames.hpp"
#include "finframe/verify.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace finframe {

/// Dilation metadata carried by a system file.
struct DilationRecord {
  DilationMode mode = DilationMode::Bessel;
  Index original_dim = 0;
  double scale = 0.0;
  Bounds constants;
};

/// In-memory form of the JSON interchange format (version "1").
struct SystemFile {
  VectorSystem system;
  std::optional<DilationRecord> dilation;
};

/// Parses interchange JSON. Throws ParseError with a diagnostic naming the
/// offending field.
SystemFile parse_system_json(const std::string& text);

SystemFile read_system_file(const std::filesystem::path& path);

/// Canonical serialization: fixed key order, 17-significant-digit decimal
/// formatting, `field` set to "real" exactly when every imaginary part is
/// zero. write -> read -> write is byte-identical.
std::string format_system_file(const SystemFile& file);

void write_system_file(const std::filesystem::path& path, const SystemFile& file);

/// Rebuilds a Dilation from a file carrying a dilation block. Throws
/// ParseError when the block is missing, DimensionError on shape violations.
Dilation to_dilation(const SystemFile& file);

SystemFile from_dilation(const Dilation& dil);

/// Report serializers for the CLI (stable key order, two-space indent).
std::string analysis_to_json(const SystemAnalysis& analysis);
std::string report_to_json(const VerificationReport& report);

}  // namespace finframe
