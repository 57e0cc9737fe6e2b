// nsw.h -- non-standard-word normalization: rewrites numbers, dates, times,
// currency, units, decades, ordinals and fractions into spoken-form words.

#ifndef ASRSCORE_NSW_H_
#define ASRSCORE_NSW_H_

#include <cstdint>
#include <string>
#include <vector>

namespace asrscore {

// Rewrites every recognized non-standard word in `text`, leaving everything
// else untouched. Categories are applied in a fixed order (dates, times,
// currency, decimals with units, plain decimals, decades, ordinals,
// fractions, comma-grouped cardinals, plain cardinals), longest match first
// within each category. Unparseable numeric tokens (e.g. a date with month
// 13) are left verbatim and reported through `warnings`; the function never
// fails.
std::string ExpandNsw(const std::string &text, std::vector<std::string> *warnings = nullptr);

// Spoken-form building blocks, exposed for tests.
std::string CardinalWords(int64_t n);            // 13000 -> "thirteen thousand"
std::string OrdinalWords(int64_t n);             // 21 -> "twenty first"
std::string YearWords(int64_t year);             // 1998 -> "nineteen ninety eight"
std::string DecadeWords(int64_t decade_start);   // 1980 -> "nineteen eighties"
std::string DigitWords(const std::string &digits);  // "14" -> "one four"

}  // namespace asrscore

#endif  // ASRSCORE_NSW_H_
