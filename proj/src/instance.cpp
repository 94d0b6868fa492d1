#include "vca/instance.hpp"

#include <charconv>
#include <istream>
#include <sstream>

namespace vca {

namespace {

std::string strip(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_weight(const std::string& text, std::size_t line_no) {
  std::istringstream ts(text);
  std::string token, extra;
  if (!(ts >> token)) throw SyntaxError(line_no, "missing weight after ':'");
  if (ts >> extra) throw SyntaxError(line_no, "unexpected token '" + extra + "' after weight");
  std::uint64_t w = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), w);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw SyntaxError(line_no, "weight must be a positive integer, got '" + token + "'");
  if (w == 0) throw WeightError("line " + std::to_string(line_no) + ": weight must be >= 1");
  return w;
}

}  // namespace

WeightedMulticomplex parse_instance(std::istream& in) {
  std::vector<WeightedMulticomplex::Row> rows;
  std::string raw;
  std::size_t line_no = 0;
  std::size_t dimension = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = strip(raw);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string::npos) throw SyntaxError(line_no, "expected '<entries> : <weight>'");
    if (line.find(':', colon + 1) != std::string::npos)
      throw SyntaxError(line_no, "more than one ':'");

    std::istringstream es(line.substr(0, colon));
    std::vector<ExtendedNatural> entries;
    std::string token;
    while (es >> token) {
      try {
        entries.push_back(parse_extended(token));
      } catch (const std::invalid_argument&) {
        throw SyntaxError(line_no, "unknown token '" + token + "'");
      }
    }
    if (entries.empty()) throw SyntaxError(line_no, "facet has no entries");
    if (dimension == 0) dimension = entries.size();
    if (entries.size() != dimension)
      throw DimensionError("line " + std::to_string(line_no) + ": expected " +
                           std::to_string(dimension) + " entries, found " +
                           std::to_string(entries.size()));

    rows.push_back({Facet(std::move(entries)), parse_weight(line.substr(colon + 1), line_no)});
  }
  if (rows.empty()) throw EmptyComplexError("instance has no facet rows");
  return WeightedMulticomplex(std::move(rows));
}

WeightedMulticomplex parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::string format_instance(const WeightedMulticomplex& w) {
  std::ostringstream os;
  for (const auto& [facet, weight] : w.rows()) {
    for (const auto& e : facet) os << e << ' ';
    os << ": " << weight << '\n';
  }
  return os.str();
}

}  // namespace vca
