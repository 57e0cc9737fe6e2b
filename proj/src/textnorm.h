// textnorm.h -- the preprocessing pipeline applied to references and
// hypotheses before scoring. Five independently toggleable stages:
// NSW expansion, case folding, punctuation stripping, interjection
// removal and UK->US spelling unification, applied in that order.

#ifndef ASRSCORE_TEXTNORM_H_
#define ASRSCORE_TEXTNORM_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tokens.h"

namespace asrscore {

struct NormConfig {
  bool case_on = true;
  bool punc_on = true;
  bool itj_on = true;
  bool ukus_on = true;
  bool nsw_on = true;
  std::set<std::string> interjections;          // lowercase, whitespace-free
  std::map<std::string, std::string> ukus_map;  // UK spelling -> US spelling

  // All stages enabled with the shipped default word lists.
  static NormConfig Defaults();
  // All stages disabled (normalize() reduces to tokenize()).
  static NormConfig AllOff();
};

// Built-in copies of the shipped resource lists.
const std::set<std::string> &DefaultInterjections();
const std::map<std::string, std::string> &DefaultUkUsMap();

// Resource-file readers (formats: one token per line with '#' comments;
// UK<TAB>US per line). Throw std::runtime_error with a positioned message
// on malformed content.
std::set<std::string> LoadInterjections(const std::string &path);
std::map<std::string, std::string> LoadUkUsMap(const std::string &path);

// Individual stages.
std::string NormalizeCase(const std::string &text);   // ASCII lowercase
std::string StripPunctuation(const std::string &text);
TokenSeq RemoveInterjections(const TokenSeq &seq, const std::set<std::string> &list);
TokenSeq UnifySpelling(const TokenSeq &seq, const std::map<std::string, std::string> &map);

// Full pipeline: NSW -> CASE -> PUNC -> tokenize -> ITJ -> UK-US, with
// disabled stages as identity. Deterministic; NSW warnings are appended to
// `warnings` when given.
TokenSeq Normalize(const std::string &text, const NormConfig &cfg,
                   std::vector<std::string> *warnings = nullptr);

// Stage-by-stage intermediate strings for the --trace CLI surface.
struct NormTrace {
  std::string after_nsw;
  std::string after_case;
  std::string after_punc;
  TokenSeq after_tokenize;
  TokenSeq after_itj;
  TokenSeq after_ukus;
};
TokenSeq NormalizeTraced(const std::string &text, const NormConfig &cfg, NormTrace *trace,
                         std::vector<std::string> *warnings = nullptr);

}  // namespace asrscore

#endif  // ASRSCORE_TEXTNORM_H_
