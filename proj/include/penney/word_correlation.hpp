#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "penney/group.hpp"
#include "penney/rational_series.hpp"

namespace penney {

/// Display symbols for letter indices. Words print uppercase, patterns lowercase.
inline constexpr std::string_view kDefaultSymbols = "ABCDEFGHIJKLMNOPQRSTUVWXYZ012345";
inline constexpr std::string_view kCoinSymbols = "HT";

/// Parses a word over q letters. Accepts comma-separated indices ("0,1,0"),
/// or letters in either case using `symbols` (default A=0, B=1, ...). With the
/// default symbols and q = 2, strings over {H, T} read as the coin alphabet.
Word parse_word(std::string_view text, std::size_t q, std::string_view symbols = {});
/// Symbols that parse_word would use for `text`; lets output echo the input alphabet.
std::string detect_symbols(std::string_view text, std::size_t q);
std::string format_word(const Word& w, std::string_view symbols = kDefaultSymbols);
std::string format_pattern(const Word& w, std::string_view symbols = kDefaultSymbols);

/// Correlation vector (C_0, ..., C_{l-1}) with l the length of the first word.
using Correlation = std::vector<std::int64_t>;

/// C_i = 1 iff the suffix of v of length l-i equals the prefix of w of the
/// same length. When that suffix is longer than w, only its first |w| letters
/// are compared, so C(HTHT, HTH) = (1,0,1,0).
Correlation correlate(const Word& v, const Word& w);
Polynomial correlation_polynomial(const Correlation& c);
/// Correlation read as a base-q numeral: sum C_i q^(l-1-i).
Rational conway_number(const Correlation& c, std::size_t q);
Rational cln_word(const Word& v, const Word& w, std::size_t q);

/// {i in [1, l-1] : w(k) = w(k+i) for all valid k}.
std::vector<std::size_t> word_periods(const Word& w);
bool is_non_self_overlapping(const Word& w);

}  // namespace penney
