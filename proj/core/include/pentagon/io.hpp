#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pentagon/bialgebra.hpp"
#include "pentagon/operator.hpp"
#include "pentagon/reconstruction.hpp"
#include "pentagon/report.hpp"

namespace pentagon {

/// An operator file. `legs_per_site` is present for R-matrices stored on pair-legs.
struct OperatorFile {
  Operator op;
  std::optional<std::size_t> legs_per_site;
};

// All parsers throw SchemaError with a message starting "$.path: ".

OperatorFile parse_operator_file(const std::string& text);
std::string format_operator_file(const OperatorFile& file);
inline std::string format_operator(const Operator& op) { return format_operator_file({op, std::nullopt}); }

StructureConstants parse_structure_constants(const std::string& text);
std::string format_structure_constants(const StructureConstants& sc);

/// Structure constants plus "unit"/"counit" when found and the "G", "F" matrix lists.
std::string format_reconstruction(const ReconstructionResult& result);

std::string format_report_json(const VerificationReport& report);
/// A JSON array of reports.
std::string format_reports_json(const std::vector<VerificationReport>& reports);

/// Throws SchemaError if the file cannot be read or written.
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace pentagon
