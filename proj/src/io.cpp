#include "finframe/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

namespace finframe {

namespace {

using nlohmann::json;

constexpr Index kMaxSideLength = 100000;
constexpr Index kMaxEntries = 4000000;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError(field + ": " + what);
}

const json& require_field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + key, "missing field");
  return *it;
}

double require_finite_number(const json& value, const std::string& field) {
  if (!value.is_number()) fail(field, "expected a number");
  const double d = value.get<double>();
  if (!std::isfinite(d)) fail(field, "not finite");
  return d;
}

Index require_positive_index(const json& value, const std::string& field) {
  if (!value.is_number_integer()) fail(field, "expected a positive integer");
  const auto v = value.get<std::int64_t>();
  if (v < 1 || v > kMaxSideLength) {
    fail(field, "must lie in [1, " + std::to_string(kMaxSideLength) + "]");
  }
  return static_cast<Index>(v);
}

Complex parse_entry(const json& value, bool complex_field, const std::string& field) {
  if (complex_field) {
    if (!value.is_array() || value.size() != 2) {
      fail(field, "expected a two-element [re, im] pair");
    }
    return Complex(require_finite_number(value[0], field + "[0]"),
                   require_finite_number(value[1], field + "[1]"));
  }
  return Complex(require_finite_number(value, field), 0.0);
}

DilationRecord parse_dilation_block(const json& block, Index dim) {
  if (!block.is_object()) fail("dilation", "expected an object");
  DilationRecord rec;

  const json& mode = require_field(block, "mode", "dilation.");
  if (!mode.is_string()) fail("dilation.mode", "expected a string");
  const auto parsed = mode_from_string(mode.get<std::string>());
  if (!parsed) {
    fail("dilation.mode", "unknown mode \"" + mode.get<std::string>() +
                              "\" (expected tight|frame|complete-bessel|bessel)");
  }
  rec.mode = *parsed;

  rec.original_dim =
      require_positive_index(require_field(block, "original_dim", "dilation."),
                             "dilation.original_dim");
  if (rec.original_dim > dim) {
    fail("dilation.original_dim", "exceeds the file's dim");
  }

  rec.scale = require_finite_number(require_field(block, "scale", "dilation."),
                                    "dilation.scale");
  if (rec.scale < 0.0) fail("dilation.scale", "must be nonnegative");

  const json& constants = require_field(block, "constants", "dilation.");
  if (!constants.is_array() || constants.size() != 2) {
    fail("dilation.constants", "expected a two-element [A, B] array");
  }
  rec.constants.lower = require_finite_number(constants[0], "dilation.constants[0]");
  rec.constants.upper = require_finite_number(constants[1], "dilation.constants[1]");
  if (rec.constants.lower < 0.0 || rec.constants.upper < 0.0) {
    fail("dilation.constants", "must be nonnegative");
  }
  return rec;
}

std::string fmt_number(double v) {
  if (v == 0.0) return "0";  // canonicalize negative zero
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool all_real(const CMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (m(i, j).imag() != 0.0) return false;
    }
  }
  return true;
}

}  // namespace

SystemFile parse_system_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("document", "expected a JSON object");

  const json& version = require_field(root, "version", "");
  if (!version.is_string() || version.get<std::string>() != "1") {
    fail("version", "expected \"1\"");
  }

  const json& field = require_field(root, "field", "");
  if (!field.is_string() ||
      (field.get<std::string>() != "real" && field.get<std::string>() != "complex")) {
    fail("field", "expected \"real\" or \"complex\"");
  }
  const bool complex_field = field.get<std::string>() == "complex";

  const Index dim = require_positive_index(require_field(root, "dim", ""), "dim");
  const Index count = require_positive_index(require_field(root, "count", ""), "count");
  if (dim * count > kMaxEntries) fail("dim", "dim * count too large");

  const json& vectors = require_field(root, "vectors", "");
  if (!vectors.is_array()) fail("vectors", "expected an array");
  if (static_cast<Index>(vectors.size()) != count) {
    fail("vectors", "expected count=" + std::to_string(count) + " vectors, got " +
                        std::to_string(vectors.size()));
  }

  CMatrix mat(dim, count);
  for (Index j = 0; j < count; ++j) {
    const json& column = vectors[static_cast<std::size_t>(j)];
    const std::string where = "vectors[" + std::to_string(j) + "]";
    if (!column.is_array()) fail(where, "expected an array");
    if (static_cast<Index>(column.size()) != dim) {
      fail(where, "expected dim=" + std::to_string(dim) + " entries, got " +
                      std::to_string(column.size()));
    }
    for (Index i = 0; i < dim; ++i) {
      mat(i, j) = parse_entry(column[static_cast<std::size_t>(i)], complex_field,
                              where + "[" + std::to_string(i) + "]");
    }
  }

  std::optional<DilationRecord> dilation;
  if (auto it = root.find("dilation"); it != root.end()) {
    dilation = parse_dilation_block(*it, dim);
  }
  return SystemFile{VectorSystem(std::move(mat)), dilation};
}

SystemFile read_system_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) throw ParseError("cannot read file: " + path.string());
  return parse_system_json(buffer.str());
}

std::string format_system_file(const SystemFile& file) {
  const CMatrix& m = file.system.mat();
  const bool real = all_real(m);

  std::string out;
  out += "{\n";
  out += "  \"version\": \"1\",\n";
  out += std::string("  \"field\": \"") + (real ? "real" : "complex") + "\",\n";
  out += "  \"dim\": " + std::to_string(m.rows()) + ",\n";
  out += "  \"count\": " + std::to_string(m.cols()) + ",\n";
  out += "  \"vectors\": [\n";
  for (Index j = 0; j < m.cols(); ++j) {
    out += "    [";
    for (Index i = 0; i < m.rows(); ++i) {
      if (i > 0) out += ", ";
      if (real) {
        out += fmt_number(m(i, j).real());
      } else {
        out += "[" + fmt_number(m(i, j).real()) + ", " + fmt_number(m(i, j).imag()) + "]";
      }
    }
    out += (j + 1 < m.cols()) ? "],\n" : "]\n";
  }
  out += "  ]";
  if (file.dilation) {
    const DilationRecord& rec = *file.dilation;
    out += ",\n  \"dilation\": {\n";
    out += std::string("    \"mode\": \"") + to_string(rec.mode) + "\",\n";
    out += "    \"original_dim\": " + std::to_string(rec.original_dim) + ",\n";
    out += "    \"scale\": " + fmt_number(rec.scale) + ",\n";
    out += "    \"constants\": [" + fmt_number(rec.constants.lower) + ", " +
           fmt_number(rec.constants.upper) + "]\n";
    out += "  }";
  }
  out += "\n}\n";
  return out;
}

void write_system_file(const std::filesystem::path& path, const SystemFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing: " + path.string());
  out << format_system_file(file);
  if (!out.good()) throw ParseError("cannot write file: " + path.string());
}

Dilation to_dilation(const SystemFile& file) {
  if (!file.dilation) {
    throw ParseError("dilation: block missing (not a dilation file)");
  }
  const DilationRecord& rec = *file.dilation;
  Dilation dil{rec.mode,
               rec.original_dim,
               file.system.dim(),
               file.system,
               file.system.dim() - rec.original_dim,
               rec.scale,
               rec.constants};
  validate(dil);
  return dil;
}

SystemFile from_dilation(const Dilation& dil) {
  validate(dil);
  return SystemFile{dil.system,
                    DilationRecord{dil.mode, dil.original_dim, dil.scale, dil.constants}};
}

std::string analysis_to_json(const SystemAnalysis& analysis) {
  nlohmann::ordered_json j;
  j["frame_lower"] = analysis.frame_lower;
  j["frame_upper"] = analysis.frame_upper;
  j["riesz_lower"] = analysis.riesz_lower;
  j["riesz_upper"] = analysis.riesz_upper;
  j["rank"] = analysis.rank;
  j["is_complete"] = analysis.is_complete;
  j["is_frame"] = analysis.is_frame;
  j["is_tight"] = analysis.is_tight;
  j["is_riesz_basis"] = analysis.is_riesz_basis;
  j["is_omega_independent"] = analysis.is_omega_independent;
  return j.dump(2) + "\n";
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(report.mode);
  j["overall"] = report.overall;
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& check : report.checks) {
    nlohmann::ordered_json c;
    c["name"] = check.name;
    c["passed"] = check.passed;
    c["residual"] = check.residual;
    c["threshold"] = check.threshold;
    j["checks"].push_back(std::move(c));
  }
  return j.dump(2) + "\n";
}

}  // namespace finframe
