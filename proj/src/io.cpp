#include "jpcount/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace jp {

namespace {

bool is_decimal(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt parse_value(const std::string& token, std::size_t line) {
  if (!is_decimal(token)) throw ParseError("expected decimal value, got '" + token + "'", line);
  return BigInt(token);
}

}  // namespace

std::optional<ListFormat> list_format_from_tag(std::string_view tag) {
  if (tag == "txt") return ListFormat::Txt;
  if (tag == "csv") return ListFormat::Csv;
  if (tag == "json") return ListFormat::Json;
  return std::nullopt;
}

void write_list(std::ostream& out, const Enumeration& enumeration, ListFormat format) {
  switch (format) {
    case ListFormat::Txt:
      for (const BigInt& v : enumeration.values) out << v.get_str() << '\n';
      break;
    case ListFormat::Csv: {
      out << "index,value\n";
      std::size_t index = 1;
      for (const BigInt& v : enumeration.values) out << index++ << ',' << v.get_str() << '\n';
      break;
    }
    case ListFormat::Json: {
      nlohmann::json doc;
      doc["family"] = std::string(family_tag(enumeration.family));
      doc["bound"] = enumeration.bound.get_str();
      doc["count"] = enumeration.values.size();
      nlohmann::json values = nlohmann::json::array();
      for (const BigInt& v : enumeration.values) values.push_back(v.get_str());
      doc["values"] = std::move(values);
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

std::vector<BigInt> parse_list(std::istream& in, ListFormat format) {
  std::vector<BigInt> values;
  switch (format) {
    case ListFormat::Txt: {
      std::string token;
      std::size_t line = 0;
      while (std::getline(in, token)) {
        ++line;
        if (token.empty()) continue;
        values.push_back(parse_value(token, line));
      }
      break;
    }
    case ListFormat::Csv: {
      std::string row;
      std::size_t line = 0;
      while (std::getline(in, row)) {
        ++line;
        if (row.empty() || (line == 1 && row == "index,value")) continue;
        auto comma = row.find(',');
        if (comma == std::string::npos) throw ParseError("missing comma", line);
        values.push_back(parse_value(row.substr(comma + 1), line));
      }
      break;
    }
    case ListFormat::Json: {
      nlohmann::json doc = nlohmann::json::parse(in);
      for (const auto& v : doc.at("values")) values.push_back(BigInt(v.get<std::string>()));
      break;
    }
  }
  return values;
}

void write_cache_file(const std::filesystem::path& path, const Enumeration& enumeration) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file " + path.string());
  out << "jplist 1 " << family_tag(enumeration.family) << ' ' << enumeration.bound.get_str()
      << '\n';
  for (const BigInt& v : enumeration.values) out << v.get_str() << '\n';
}

Enumeration read_cache_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read cache file " + path.string());

  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty cache file", 1);
  std::istringstream hs(header);
  std::string magic, version, family_str, bound_str;
  if (!(hs >> magic >> version >> family_str >> bound_str) || magic != "jplist") {
    throw ParseError("bad cache header", 1);
  }
  if (version != "1") throw ParseError("unrecognized cache version " + version, 1);
  std::optional<Family> family = family_from_tag(family_str);
  if (!family) throw ParseError("unrecognized family tag " + family_str, 1);

  Enumeration result;
  result.family = *family;
  result.bound = parse_value(bound_str, 1);

  std::string token;
  std::size_t line = 1;
  while (std::getline(in, token)) {
    ++line;
    if (token.empty()) continue;
    BigInt v = parse_value(token, line);
    if (!result.values.empty() && v <= result.values.back()) {
      throw ParseError("cache body not strictly increasing", line);
    }
    if (v > result.bound) throw ParseError("cache value beyond header bound", line);
    result.values.push_back(std::move(v));
  }
  return result;
}

std::filesystem::path cache_file_name(const std::filesystem::path& dir, Family family,
                                      const BigInt& bound) {
  return dir / (std::string(family_tag(family)) + "-" + bound.get_str() + ".jplist");
}

Enumeration enumerate_with_cache(const std::filesystem::path& dir, const BigInt& bound,
                                 Family family, const EnumerationOptions& options) {
  std::filesystem::path path = cache_file_name(dir, family, bound);
  if (std::filesystem::exists(path)) {
    Enumeration cached = read_cache_file(path);
    if (cached.family == family && cached.bound == bound) return cached;
  }
  Enumeration fresh = enumerate_jordan_polya(bound, family, options);
  std::filesystem::create_directories(dir);
  write_cache_file(path, fresh);
  return fresh;
}

BFile parse_bfile(std::istream& in) {
  BFile out;
  std::string row;
  std::size_t line = 0;
  bool have_first = false;
  long long expected_index = 0;
  while (std::getline(in, row)) {
    ++line;
    std::size_t start = row.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (row[start] == '#') continue;

    std::istringstream rs(row);
    long long index;
    std::string value_str, extra;
    if (!(rs >> index >> value_str)) throw ParseError("expected 'index value'", line);
    if (rs >> extra) throw ParseError("trailing content '" + extra + "'", line);
    BigInt value = parse_value(value_str, line);

    if (!have_first) {
      out.first_index = index;
      expected_index = index;
      have_first = true;
    }
    if (index != expected_index) {
      throw ParseError("non-consecutive index " + std::to_string(index), line);
    }
    ++expected_index;
    if (!out.values.empty() && value <= out.values.back()) {
      throw ParseError("values not strictly increasing", line);
    }
    out.values.push_back(std::move(value));
  }
  return out;
}

BFile parse_bfile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read b-file " + path.string());
  return parse_bfile(in);
}

OeisReport oeis_check(const BFile& bfile, const Enumeration& enumeration) {
  OeisReport report;
  if (bfile.values.empty()) {
    report.message = "no terms to compare";
    return report;
  }
  const auto& values = enumeration.values;
  std::size_t n = std::min(bfile.values.size(), values.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (bfile.values[i] != values[i]) {
      report.agree = false;
      report.compared = i + 1;
      report.message = "mismatch at term " + std::to_string(bfile.first_index + (long long)i) +
                       ": b-file " + bfile.values[i].get_str() + " vs enumeration " +
                       values[i].get_str();
      return report;
    }
  }
  report.compared = n;
  if (bfile.values.size() > n && bfile.values[n] <= enumeration.bound) {
    report.agree = false;
    report.message = "b-file lists " + bfile.values[n].get_str() +
                     " <= bound but the enumeration omits it";
    return report;
  }
  report.message = "agree on all " + std::to_string(n) + " compared terms";
  return report;
}

}  // namespace jp
