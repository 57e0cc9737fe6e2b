// dataset_io.h -- the platform file formats: reference metadata TSV,
// hypothesis TSV and alternative-set files. All parsers report positioned
// errors and never crash on malformed input.

#ifndef ASRSCORE_DATASET_IO_H_
#define ASRSCORE_DATASET_IO_H_

#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alternatives.h"

namespace asrscore {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, int line, const std::string &message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        source_(std::move(source)),
        line_(line) {}

  const std::string &source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

struct UtteranceRecord {
  std::string id;
  std::string audio_path;  // opaque, never opened
  double duration_s = 0.0;
  std::string text;
};

struct HypothesisRecord {
  std::string id;
  std::string text;
};

// 4-column TSV with header ID/AUDIO/DURATION/TEXT; TEXT runs to end of line
// (embedded tabs are preserved verbatim). Duplicate IDs and unparseable
// durations are errors citing the offending line; durations above 60 s only
// warn.
std::vector<UtteranceRecord> ParseMetadataTsv(std::istream &in, const std::string &source,
                                              std::vector<std::string> *warnings = nullptr);

// 2-column TSV with header ID/TEXT. A line without the TEXT column becomes
// an empty hypothesis with a warning (models may emit nothing).
std::vector<HypothesisRecord> ParseHypotheses(std::istream &in, const std::string &source,
                                              std::vector<std::string> *warnings = nullptr);

// One set per line, members separated by '=' and tokens by spaces; '#'
// starts a comment line. Members are stored case-folded and hyphen-split so
// they match normalized hypotheses; a member collapsing onto another after
// folding is dropped with a warning.
std::vector<AlternativeSet> ParseAlternatives(std::istream &in, const std::string &source,
                                              std::vector<std::string> *warnings = nullptr);

// Inner join on utterance id, keeping reference order. References without a
// hypothesis pair with an empty one (scored as deletions) plus a warning;
// hypothesis ids absent from the references are an error.
std::vector<std::pair<UtteranceRecord, HypothesisRecord>> JoinCorpus(
    const std::vector<UtteranceRecord> &refs, const std::vector<HypothesisRecord> &hyps,
    std::vector<std::string> *warnings = nullptr);

// Inverse of ParseMetadataTsv, LF line endings.
std::string SerializeMetadataTsv(const std::vector<UtteranceRecord> &records);

// File-path conveniences (throw ParseError / std::runtime_error).
std::vector<UtteranceRecord> LoadMetadataTsv(const std::string &path,
                                             std::vector<std::string> *warnings = nullptr);
std::vector<HypothesisRecord> LoadHypotheses(const std::string &path,
                                             std::vector<std::string> *warnings = nullptr);
std::vector<AlternativeSet> LoadAlternatives(const std::string &path,
                                             std::vector<std::string> *warnings = nullptr);

}  // namespace asrscore

#endif  // ASRSCORE_DATASET_IO_H_
