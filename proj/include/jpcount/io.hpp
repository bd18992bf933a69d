#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jpcount/jordan_polya.hpp"

namespace jp {

struct ParseError : std::runtime_error {
  ParseError(std::string what, std::size_t line_arg)
      : std::runtime_error(std::move(what)), line(line_arg) {}
  std::size_t line;  // 1-based line of the offending input
};

enum class ListFormat { Txt, Csv, Json };

std::optional<ListFormat> list_format_from_tag(std::string_view tag);  // txt|csv|json

/// txt: one decimal value per line. csv: "index,value" header then 1-based
/// rows. json: {"family", "bound", "count", "values"} with decimal strings so
/// arbitrary-precision values survive any consumer.
void write_list(std::ostream& out, const Enumeration& enumeration, ListFormat format);

/// Parses any of the three formats back to the value list (round-trip tool).
std::vector<BigInt> parse_list(std::istream& in, ListFormat format);

// ---- enumeration cache ----------------------------------------------------
//
// Line 1: "jplist <version> <family-tag> <bound>"; body: the sorted values,
// one per line. A cache hit requires the exact (family, bound) pair.

void write_cache_file(const std::filesystem::path& path, const Enumeration& enumeration);
Enumeration read_cache_file(const std::filesystem::path& path);

std::filesystem::path cache_file_name(const std::filesystem::path& dir, Family family,
                                      const BigInt& bound);

/// Cache-aware enumeration: reuse a matching cache file below dir, otherwise
/// enumerate and write one.
Enumeration enumerate_with_cache(const std::filesystem::path& dir, const BigInt& bound,
                                 Family family, const EnumerationOptions& options = {});

// ---- OEIS b-files ----------------------------------------------------------

/// "index value" per line; '#' starts a comment; indices run consecutively
/// from the first index and values must strictly increase.
struct BFile {
  long long first_index = 0;
  std::vector<BigInt> values;
};

BFile parse_bfile(std::istream& in);
BFile parse_bfile(const std::filesystem::path& path);

struct OeisReport {
  bool agree = true;
  std::size_t compared = 0;
  std::string message;
};

/// Elementwise comparison of an enumeration against a b-file prefix; a b-file
/// value <= bound that the enumeration lacks is a mismatch too.
OeisReport oeis_check(const BFile& bfile, const Enumeration& enumeration);

}  // namespace jp
