#include "nsw.h"

#include <array>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <optional>
#include <regex>

namespace asrscore {

namespace {

const char *kUnits[] = {"zero", "one", "two", "three", "four", "five", "six", "seven",
                        "eight", "nine", "ten", "eleven", "twelve", "thirteen", "fourteen",
                        "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};
const char *kTens[] = {"", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy",
                       "eighty", "ninety"};
const char *kScales[] = {"", "thousand", "million", "billion", "trillion"};
const char *kMonths[] = {"january", "february", "march", "april", "may", "june", "july",
                         "august", "september", "october", "november", "december"};

std::string TwoDigitWords(int n) {
  if (n < 20) return kUnits[n];
  std::string out = kTens[n / 10];
  if (n % 10) {
    out += ' ';
    out += kUnits[n % 10];
  }
  return out;
}

std::string ThreeDigitWords(int n) {
  std::string out;
  if (n >= 100) {
    out = kUnits[n / 100];
    out += " hundred";
    n %= 100;
    if (n) out += ' ';
  }
  if (n || out.empty()) out += TwoDigitWords(n);
  return out;
}

// Pluralizes the trailing word of a spoken form: "eighty" -> "eighties",
// "hundred" -> "hundreds".
std::string PluralizeLastWord(std::string words) {
  if (!words.empty() && words.back() == 'y') {
    words.pop_back();
    words += "ies";
  } else {
    words += 's';
  }
  return words;
}

}  // namespace

std::string CardinalWords(int64_t n) {
  if (n == 0) return "zero";
  std::string out;
  std::array<int, 5> groups{};
  int ngroups = 0;
  while (n > 0) {
    groups[ngroups++] = static_cast<int>(n % 1000);
    n /= 1000;
  }
  for (int i = ngroups - 1; i >= 0; --i) {
    if (groups[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += ThreeDigitWords(groups[i]);
    if (i > 0) {
      out += ' ';
      out += kScales[i];
    }
  }
  return out;
}

std::string OrdinalWords(int64_t n) {
  std::string words = CardinalWords(n);
  size_t pos = words.find_last_of(' ');
  std::string last = (pos == std::string::npos) ? words : words.substr(pos + 1);
  std::string stem = (pos == std::string::npos) ? "" : words.substr(0, pos + 1);
  if (last == "zero") last = "zeroth";
  else if (last == "one") last = "first";
  else if (last == "two") last = "second";
  else if (last == "three") last = "third";
  else if (last == "five") last = "fifth";
  else if (last == "eight") last = "eighth";
  else if (last == "nine") last = "ninth";
  else if (last == "twelve") last = "twelfth";
  else if (last.back() == 'y') last = last.substr(0, last.size() - 1) + "ieth";
  else last += "th";
  return stem + last;
}

std::string YearWords(int64_t year) {
  if (year < 1000 || year > 9999) return CardinalWords(year);
  int hi = static_cast<int>(year / 100);
  int lo = static_cast<int>(year % 100);
  if (hi % 10 == 0) return CardinalWords(year);  // 2007 -> two thousand seven
  std::string out = TwoDigitWords(hi);
  if (lo == 0) {
    out += " hundred";  // 1900 -> nineteen hundred
  } else if (lo < 10) {
    out += " oh ";
    out += kUnits[lo];  // 1907 -> nineteen oh seven
  } else {
    out += ' ';
    out += TwoDigitWords(lo);  // 1998 -> nineteen ninety eight
  }
  return out;
}

std::string DecadeWords(int64_t decade_start) {
  return PluralizeLastWord(YearWords(decade_start));
}

std::string DigitWords(const std::string &digits) {
  std::string out;
  for (char c : digits) {
    if (!out.empty()) out += ' ';
    out += kUnits[c - '0'];
  }
  return out;
}

namespace {

bool IsAlnumChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// Expander: returns the spoken form, or nullopt to leave the match verbatim.
using Expander =
    std::function<std::optional<std::string>(const std::smatch &, std::vector<std::string> *)>;

struct NswRule {
  std::regex re;
  Expander expand;
};

void Warn(std::vector<std::string> *warnings, const std::string &msg) {
  if (warnings) warnings->push_back(msg);
}

std::string FractionWords(int64_t num, int64_t den) {
  std::string part;
  switch (den) {
    case 2: part = (num == 1) ? "half" : "halves"; break;
    case 4: part = "quarter"; break;
    default: part = OrdinalWords(den); break;
  }
  if (num != 1 && den != 2) part += 's';
  return CardinalWords(num) + ' ' + part;
}

std::string MinuteWords(int minutes) {
  if (minutes == 0) return "";
  if (minutes < 10) return std::string("oh ") + kUnits[minutes];
  return TwoDigitWords(minutes);
}

struct UnitNames {
  const char *symbol;
  const char *singular;
  const char *plural;
};

const UnitNames kUnitTable[] = {
    {"kg", "kilogram", "kilograms"},   {"km", "kilometer", "kilometers"},
    {"cm", "centimeter", "centimeters"}, {"mm", "millimeter", "millimeters"},
    {"lbs", "pound", "pounds"},        {"lb", "pound", "pounds"},
    {"oz", "ounce", "ounces"},         {"ft", "foot", "feet"},
    {"mph", "mile per hour", "miles per hour"},
};

const UnitNames *LookupUnit(const std::string &symbol) {
  for (const UnitNames &u : kUnitTable)
    if (symbol == u.symbol) return &u;
  return nullptr;
}

std::string StripCommas(const std::string &s) {
  std::string out;
  for (char c : s)
    if (c != ',') out += c;
  return out;
}

std::vector<NswRule> BuildRules() {
  std::vector<NswRule> rules;

  // Dates in Y/M/D order; calendar validity is not checked beyond month and
  // day ranges (the 30th of february is rendered as written).
  rules.push_back({std::regex(R"((\d{4})/(\d{1,2})/(\d{1,2}))"),
                   [](const std::smatch &m, std::vector<std::string> *warnings)
                       -> std::optional<std::string> {
                     int64_t year = std::stoll(m[1].str());
                     int64_t month = std::stoll(m[2].str());
                     int64_t day = std::stoll(m[3].str());
                     if (month < 1 || month > 12 || day < 1 || day > 31) {
                       Warn(warnings, "unparseable date '" + m[0].str() + "' left verbatim");
                       return std::nullopt;
                     }
                     return std::string(kMonths[month - 1]) + ' ' + OrdinalWords(day) + ' ' +
                            YearWords(year);
                   }});

  // Times with meridiem, minutes optional: "8.30 a.m." -> "eight thirty AM".
  rules.push_back(
      {std::regex(R"((\d{1,2})(?:[.:](\d{2}))? ?(a\.m\.|p\.m\.|a\.m|p\.m|am|pm))",
                  std::regex::icase),
       [](const std::smatch &m, std::vector<std::string> *) -> std::optional<std::string> {
         int hour = std::stoi(m[1].str());
         std::string out = CardinalWords(hour);
         if (m[2].matched) {
           std::string minutes = MinuteWords(std::stoi(m[2].str()));
           if (!minutes.empty()) out += ' ' + minutes;
         }
         char first = static_cast<char>(std::tolower(static_cast<unsigned char>(m[3].str()[0])));
         out += (first == 'a') ? " AM" : " PM";
         return out;
       }});

  // Dollar amounts; other currency symbols pass through (warned elsewhere).
  rules.push_back(
      {std::regex(R"(\$(\d{1,3}(?:,\d{3})+|\d+)(?:\.(\d+))?)"),
       [](const std::smatch &m, std::vector<std::string> *) -> std::optional<std::string> {
         int64_t dollars = std::stoll(StripCommas(m[1].str()));
         std::string frac = m[2].matched ? m[2].str() : "";
         if (!frac.empty() && frac.size() != 2) {
           // "$1.5" reads as a decimal quantity of dollars.
           return CardinalWords(dollars) + " point " + DigitWords(frac) + " dollars";
         }
         int64_t cents = frac.empty() ? 0 : std::stoll(frac);
         std::string out;
         if (dollars > 0 || cents == 0) {
           out = CardinalWords(dollars) + (dollars == 1 ? " dollar" : " dollars");
         }
         if (cents > 0) {
           if (!out.empty()) out += ' ';
           out += CardinalWords(cents) + (cents == 1 ? " cent" : " cents");
         }
         return out;
       }});

  // Quantities with a unit suffix: "12.7kg" -> "twelve point seven kilograms".
  rules.push_back(
      {std::regex(R"((\d+(?:,\d{3})*)(?:\.(\d+))? ?(kg|km|cm|mm|lbs|lb|oz|ft|mph))"),
       [](const std::smatch &m, std::vector<std::string> *) -> std::optional<std::string> {
         const UnitNames *unit = LookupUnit(m[3].str());
         if (!unit) return std::nullopt;
         int64_t whole = std::stoll(StripCommas(m[1].str()));
         std::string out = CardinalWords(whole);
         bool fractional = m[2].matched;
         if (fractional) out += " point " + DigitWords(m[2].str());
         bool singular = !fractional && whole == 1;
         out += ' ';
         out += singular ? unit->singular : unit->plural;
         return out;
       }});

  // Plain decimals: digits after the point read one by one.
  rules.push_back(
      {std::regex(R"((\d+(?:,\d{3})*)\.(\d+))"),
       [](const std::smatch &m, std::vector<std::string> *) -> std::optional<std::string> {
         return CardinalWords(std::stoll(StripCommas(m[1].str()))) + " point " +
                DigitWords(m[2].str());
       }});

  // Decades: "1980s" -> "nineteen eighties", "80s" -> "eighties".
  rules.push_back(
      {std::regex(R"((\d{3}0)s)"),
       [](const std::smatch &m, std::vector<std::string> *) -> std::optional<std::string> {
         return DecadeWords(std::stoll(m[1].str()));
       }});
  rules.push_back(
      {std::regex(R"(([2-9]0)s)"),
       [](const std::smatch &m, std::vector<std::string> *) -> std::optional<std::string> {
         return PluralizeLastWord(TwoDigitWords(std::stoi(m[1].str())));
       }});

  // Ordinals: the suffix is not cross-checked against the number.
  rules.push_back(
      {std::regex(R"((\d+)(st|nd|rd|th))", std::regex::icase),
       [](const std::smatch &m, std::vector<std::string> *) -> std::optional<std::string> {
         return OrdinalWords(std::stoll(m[1].str()));
       }});

  // Fractions with small denominators: "1/3" -> "one third".
  rules.push_back(
      {std::regex(R"((\d+)/(\d+))"),
       [](const std::smatch &m, std::vector<std::string> *) -> std::optional<std::string> {
         int64_t den = std::stoll(m[2].str());
         if (den < 2 || den > 10) return std::nullopt;
         return FractionWords(std::stoll(m[1].str()), den);
       }});

  // Comma-grouped cardinals: "13,000" -> "thirteen thousand".
  rules.push_back(
      {std::regex(R"((\d{1,3})((?:,\d{3})+))"),
       [](const std::smatch &m, std::vector<std::string> *) -> std::optional<std::string> {
         return CardinalWords(std::stoll(StripCommas(m[0].str())));
       }});

  // Remaining digit runs as plain cardinals.
  rules.push_back(
      {std::regex(R"((\d+))"),
       [](const std::smatch &m, std::vector<std::string> *warnings)
           -> std::optional<std::string> {
         const std::string digits = m[1].str();
         if (digits.size() > 15) {
           Warn(warnings, "number '" + digits + "' too large, left verbatim");
           return std::nullopt;
         }
         return CardinalWords(std::stoll(digits));
       }});

  return rules;
}

// A match is only rewritten at word-ish boundaries: nothing alphanumeric
// directly adjacent, and no '.'/',' immediately before (so the fractional
// tail of a larger number is never rewritten on its own).
bool LeadingBoundaryOk(const std::string &text, size_t pos) {
  if (pos == 0) return true;
  char prev = text[pos - 1];
  return !IsAlnumChar(prev) && prev != '.' && prev != ',';
}

bool TrailingBoundaryOk(const std::string &text, size_t end) {
  return end == text.size() || !IsAlnumChar(text[end]);
}

std::string ApplyRule(const std::string &text, const NswRule &rule,
                      std::vector<std::string> *warnings) {
  std::string out;
  size_t copied = 0;
  size_t offset = 0;
  std::smatch m;
  while (offset < text.size() &&
         std::regex_search(text.cbegin() + offset, text.cend(), m, rule.re)) {
    size_t abs = offset + static_cast<size_t>(m.position(0));
    size_t len = static_cast<size_t>(m.length(0));
    size_t end = abs + len;
    if (LeadingBoundaryOk(text, abs) && TrailingBoundaryOk(text, end)) {
      if (std::optional<std::string> words = rule.expand(m, warnings)) {
        out.append(text, copied, abs - copied);
        out += *words;
        copied = end;
      }
    }
    offset = end > offset ? end : offset + 1;
  }
  out.append(text, copied, text.size() - copied);
  return out;
}

void WarnForeignCurrency(const std::string &text, std::vector<std::string> *warnings) {
  static const char *kSymbols[] = {"\xc2\xa3", "\xe2\x82\xac", "\xc2\xa5"};  // pound euro yen
  for (const char *sym : kSymbols) {
    if (text.find(sym) != std::string::npos) {
      Warn(warnings, "unsupported currency symbol left verbatim");
      return;
    }
  }
}

}  // namespace

std::string ExpandNsw(const std::string &text, std::vector<std::string> *warnings) {
  // Cheap screen: most utterances have no digits at all.
  if (text.find_first_of("0123456789") == std::string::npos) return text;
  static const std::vector<NswRule> &rules = *new std::vector<NswRule>(BuildRules());
  WarnForeignCurrency(text, warnings);
  std::string cur = text;
  for (const NswRule &rule : rules) cur = ApplyRule(cur, rule, warnings);
  return cur;
}

}  // namespace asrscore
