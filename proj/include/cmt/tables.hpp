#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cmt/factored_nat.hpp"

namespace cmt {

enum class TableId { PHI, H, G };

const char* to_string(TableId id);
/// Accepts "phi", "h", "g" in any case.
TableId parse_table_id(std::string_view name);

struct TableRow {
  std::uint64_t n;
  FactoredNat value;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Rows sorted by n and contiguous from 1: PHI has 120 rows, H 25, G 7.
struct TableFixture {
  TableId id;
  std::vector<TableRow> rows;
  friend bool operator==(const TableFixture&, const TableFixture&) = default;
};

std::size_t expected_row_count(TableId id);

/// Parses `p1^e1 * p2^e2 * ...` (also accepts `·` as the separator and a bare
/// `p` for exponent 1). "1" parses to the empty product.
FactoredNat parse_factored(std::string_view text);

/// Fixture text: one `n: p1^e1 * p2^e2 * ...` row per line, `#` starts a
/// comment, blank lines are ignored. Throws InvalidInput on malformed text or
/// rows that are not contiguous from 1 with the expected count.
TableFixture parse_fixture(TableId id, std::string_view text);
std::string serialize_fixture(const TableFixture& fixture);
TableFixture load_fixture(TableId id, const std::filesystem::path& path);

/// The fixture compiled into the library.
const TableFixture& fixture(TableId id);

struct RowMismatch {
  std::uint64_t n;
  FactoredNat expected;
  FactoredNat computed;
};

struct VerificationReport {
  TableId id;
  std::size_t rows = 0;
  std::vector<RowMismatch> mismatches;
  double seconds = 0;

  std::size_t matched() const { return rows - mismatches.size(); }
  bool ok() const { return mismatches.empty(); }
};

/// Recomputes every row (Φ, H, or G with p != 3) and compares.
VerificationReport verify(const TableFixture& fixture);
VerificationReport verify(TableId id);

}  // namespace cmt
