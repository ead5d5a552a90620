#include "cmt/tables.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "cmt/bounds.hpp"
#include "cmt/error.hpp"

namespace cmt {
namespace detail {
extern const std::string_view kPhiTable;
extern const std::string_view kHTable;
extern const std::string_view kGTable;
}  // namespace detail

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool all_digits(std::string_view s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

[[noreturn]] void malformed(std::string_view what, std::string_view text) {
  throw Error(ErrorKind::InvalidInput, std::string(what) + ": '" + std::string(text) + "'");
}

FactoredNat compute_row(TableId id, std::uint64_t n) {
  switch (id) {
    case TableId::PHI: return phi_cap(n);
    case TableId::H: return h_exact(n);
    case TableId::G: return g_order_bound(static_cast<unsigned>(n), false);
  }
  throw Error(ErrorKind::InvalidInput, "unknown table");
}

}  // namespace

const char* to_string(TableId id) {
  switch (id) {
    case TableId::PHI: return "PHI";
    case TableId::H: return "H";
    case TableId::G: return "G";
  }
  return "?";
}

TableId parse_table_id(std::string_view name) {
  std::string lower(name);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "phi") return TableId::PHI;
  if (lower == "h") return TableId::H;
  if (lower == "g") return TableId::G;
  malformed("unknown table", name);
}

std::size_t expected_row_count(TableId id) {
  switch (id) {
    case TableId::PHI: return 120;
    case TableId::H: return 25;
    case TableId::G: return 7;
  }
  return 0;
}

FactoredNat parse_factored(std::string_view text) {
  text = trim(text);
  if (text == "1") return {};
  std::string normalized(text);
  // "·" is two bytes in UTF-8; fold it into '*'.
  for (std::size_t pos; (pos = normalized.find("·")) != std::string::npos;) {
    normalized.replace(pos, std::string("·").size(), "*");
  }
  std::vector<FactoredNat::Factor> factors;
  std::string_view rest = normalized;
  while (true) {
    const auto star = rest.find('*');
    const std::string_view term = trim(rest.substr(0, star));
    const auto caret = term.find('^');
    const std::string_view base = trim(term.substr(0, caret));
    const std::string_view exp = caret == std::string_view::npos ? "1" : trim(term.substr(caret + 1));
    if (!all_digits(base) || !all_digits(exp)) malformed("bad factor", term);
    const mpz_class p{std::string(base)}, e{std::string(exp)};
    if (p < 2 || e < 1) malformed("bad factor", term);
    factors.push_back({p, e});
    if (star == std::string_view::npos) break;
    rest = rest.substr(star + 1);
  }
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (!(factors[i - 1].prime < factors[i].prime)) malformed("primes must increase", text);
  }
  return FactoredNat::from_factors(std::move(factors));
}

TableFixture parse_fixture(TableId id, std::string_view text) {
  TableFixture out{id, {}};
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) malformed("line " + std::to_string(line_no) + ": missing ':'", line);
    const std::string_view n_text = trim(line.substr(0, colon));
    if (!all_digits(n_text)) malformed("line " + std::to_string(line_no) + ": bad n", line);
    const std::uint64_t n = std::stoull(std::string(n_text));
    if (n != out.rows.size() + 1) {
      malformed("line " + std::to_string(line_no) + ": rows must be contiguous from 1", line);
    }
    out.rows.push_back({n, parse_factored(line.substr(colon + 1))});
  }
  if (out.rows.size() != expected_row_count(id)) {
    throw Error(ErrorKind::InvalidInput, std::string(to_string(id)) + " fixture has " +
                                             std::to_string(out.rows.size()) + " rows, expected " +
                                             std::to_string(expected_row_count(id)));
  }
  return out;
}

std::string serialize_fixture(const TableFixture& fixture) {
  std::ostringstream os;
  os << "# " << to_string(fixture.id) << " table\n";
  for (const auto& row : fixture.rows) {
    os << row.n << ":";
    const auto& fs = row.value.factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      os << (i ? " * " : " ") << fs[i].prime.get_str() << '^' << fs[i].exponent.get_str();
    }
    if (fs.empty()) os << " 1";
    os << '\n';
  }
  return os.str();
}

TableFixture load_fixture(TableId id, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read fixture " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixture(id, buf.str());
}

const TableFixture& fixture(TableId id) {
  static const TableFixture phi = parse_fixture(TableId::PHI, detail::kPhiTable);
  static const TableFixture h = parse_fixture(TableId::H, detail::kHTable);
  static const TableFixture g = parse_fixture(TableId::G, detail::kGTable);
  switch (id) {
    case TableId::PHI: return phi;
    case TableId::H: return h;
    case TableId::G: return g;
  }
  throw Error(ErrorKind::InvalidInput, "unknown table");
}

VerificationReport verify(const TableFixture& fixture) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report{fixture.id, fixture.rows.size(), {}, 0};
  for (const auto& row : fixture.rows) {
    FactoredNat computed = compute_row(fixture.id, row.n);
    if (!(computed == row.value)) report.mismatches.push_back({row.n, row.value, std::move(computed)});
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify(TableId id) { return verify(fixture(id)); }

}  // namespace cmt
