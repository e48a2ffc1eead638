#include "penney/word_correlation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "penney/errors.hpp"

namespace penney {

namespace {

bool looks_like_indices(std::string_view text) {
  if (text.find(',') != std::string_view::npos) return true;
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c));
  });
}

Word parse_indices(std::string_view text, std::size_t q) {
  Word out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto sep = text.find(',', start);
    auto piece = text.substr(start, sep == std::string_view::npos ? text.npos : sep - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw InvalidArgument("bad letter index '" + std::string(piece) + "'");
    }
    if (value >= q) throw InvalidArgument("letter index " + std::to_string(value) + " >= q");
    out.push_back(static_cast<Letter>(value));
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  return out;
}

bool fits(std::string_view text, std::size_t q, std::string_view symbols) {
  for (char c : text) {
    auto pos = symbols.find(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (pos == std::string_view::npos || pos >= q) return false;
  }
  return true;
}

}  // namespace

std::string detect_symbols(std::string_view text, std::size_t q) {
  if (!fits(text, q, kDefaultSymbols) && q == 2 && fits(text, q, kCoinSymbols)) {
    return std::string(kCoinSymbols);
  }
  return std::string(kDefaultSymbols);
}

Word parse_word(std::string_view text, std::size_t q, std::string_view symbols) {
  if (text.empty()) throw InvalidArgument("empty word");
  if (looks_like_indices(text)) {
    // Without commas, each digit is one letter when q <= 10.
    if (text.find(',') == std::string_view::npos && q <= 10) {
      std::string spaced;
      for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (!spaced.empty()) spaced += ',';
        spaced += c;
      }
      return parse_indices(spaced, q);
    }
    return parse_indices(text, q);
  }
  std::string chosen = symbols.empty() ? detect_symbols(text, q) : std::string(symbols);
  for (auto& c : chosen) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  Word out;
  out.reserve(text.size());
  for (char c : text) {
    auto pos = chosen.find(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (pos == std::string::npos || pos >= q) {
      throw InvalidArgument("letter '" + std::string(1, c) + "' is outside an alphabet of " +
                            std::to_string(q) + " letters");
    }
    out.push_back(static_cast<Letter>(pos));
  }
  return out;
}

std::string format_word(const Word& w, std::string_view symbols) {
  std::string out;
  for (Letter x : w) out += static_cast<char>(std::toupper(static_cast<unsigned char>(symbols.at(x))));
  return out;
}

std::string format_pattern(const Word& w, std::string_view symbols) {
  std::string out;
  for (Letter x : w) out += static_cast<char>(std::tolower(static_cast<unsigned char>(symbols.at(x))));
  return out;
}

Correlation correlate(const Word& v, const Word& w) {
  const std::size_t len = v.size();
  Correlation c(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t overlap = std::min(len - i, w.size());
    const auto start = v.begin() + static_cast<std::ptrdiff_t>(i);
    c[i] = std::equal(start, start + static_cast<std::ptrdiff_t>(overlap), w.begin()) ? 1 : 0;
  }
  return c;
}

Polynomial correlation_polynomial(const Correlation& c) {
  std::vector<long long> coeffs(c.begin(), c.end());
  return Polynomial::from_integers(coeffs);
}

Rational conway_number(const Correlation& c, std::size_t q) {
  BigInt acc = 0;
  for (auto entry : c) acc = acc * static_cast<unsigned long>(q) + static_cast<long>(entry);
  return Rational(acc);
}

Rational cln_word(const Word& v, const Word& w, std::size_t q) {
  return conway_number(correlate(v, w), q);
}

std::vector<std::size_t> word_periods(const Word& w) {
  Correlation c = correlate(w, w);
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i]) out.push_back(i);
  }
  return out;
}

bool is_non_self_overlapping(const Word& w) { return word_periods(w).empty(); }

}  // namespace penney
