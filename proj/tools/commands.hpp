#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dcayley/field_construction.hpp"

namespace dcayley::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kValidationFailure = 2,
  kDiameterMismatch = 3,
  kInfeasible = 4,
  kNotConnected = 5,
};

// One line of the bounds table.
struct TableRow {
  std::uint64_t d = 0;
  std::uint64_t p = 0;  // 0 when no prime qualifies
  std::uint64_t actual_degree = 0;
  std::uint64_t constructed_order = 0;
  std::uint64_t dihedral_upper = 0;
  std::uint64_t moore = 0;
  double ratio = 0.0;
  double asymptotic_lower = 0.0;
  bool asymptotic_holds = false;
  // "construction" for p >= 5; "search" when p < 5 and the order is
  // certified by exhaustive search on the dihedral group instead.
  std::string certified_by;
  std::vector<LabelledGenerator> generators;  // only with include_set
};

TableRow make_row(std::uint64_t d, bool include_set = false);

enum class TableFormat { Csv, Json };

void write_table(std::ostream& out, const std::vector<TableRow>& rows, TableFormat format);

struct ConstructOptions {
  std::uint64_t p = 0;
  std::optional<std::uint64_t> pad_to;
  std::optional<std::string> out_path;
};

struct VerifyOptions {
  std::optional<std::string> spec;
  std::string set_path;
  std::uint64_t expect = 2;
};

struct BoundsOptions {
  std::optional<std::uint64_t> d;
  std::optional<std::string> range;  // "a..b"
  TableFormat format = TableFormat::Csv;
  bool include_set = false;
};

struct SearchCommandOptions {
  std::optional<std::uint64_t> max_order;
  std::optional<std::uint64_t> exact_dc;
  bool generalised = false;
  bool from_one = false;
};

// Each command writes its report to out and diagnostics to err, and returns
// an ExitCode. Library exceptions are translated by run().
int cmd_construct(const ConstructOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_bounds(const BoundsOptions& options, std::ostream& out, std::ostream& err);
int cmd_search(const SearchCommandOptions& options, std::ostream& out, std::ostream& err);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dcayley::cli
