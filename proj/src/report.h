// report.h -- scoring orchestration (normalize -> align -> score with a
// bounded worker pool), per-utterance renderers and the ablation sweep.
// Every output is deterministic for fixed inputs and configuration.

#ifndef ASRSCORE_REPORT_H_
#define ASRSCORE_REPORT_H_

#include <string>
#include <vector>

#include "dataset_io.h"
#include "metrics.h"
#include "textnorm.h"
#include "tokens.h"

namespace asrscore {

struct ScoreOptions {
  NormConfig norm = NormConfig::Defaults();
  bool dae_on = true;  // effective only when alternative sets are supplied
  int threads = 1;
};

struct ScoredCorpus {
  std::vector<UtteranceScore> utterances;  // input order
  CorpusScore corpus;
  std::vector<std::string> warnings;
};

// Scores every (reference, hypothesis) pair. All tokens (including
// alternative members) are registered up front so one frozen Levenshtein
// transducer serves the whole run; utterances are then aligned concurrently
// and merged back in input order.
ScoredCorpus ScoreCorpus(const std::vector<std::pair<UtteranceRecord, HypothesisRecord>> &pairs,
                         const std::vector<AlternativeSet> &alts, const ScoreOptions &opts);

// Three-row alignment display: REF / HYP / EDIT columns padded to the wider
// token, '*' on the absent side of insertions and deletions, and a header
// line carrying uid plus percentages at two decimals.
std::string RenderAlignment(const UtteranceScore &score);

// One JSON object per line; keys uid/TER/mTER/cor/sub/ins/del plus the
// documented extensions ref_len/hyp_len/cost. TER is null for an empty
// reference.
std::string JsonlRecord(const UtteranceScore &score);

// Whole-run summary as pretty-printed JSON (LF endings, stable key order).
// `inputs` entries are echoed verbatim.
std::string SummaryJson(const ScoredCorpus &scored, const ScoreOptions &opts,
                        const std::vector<std::pair<std::string, std::string>> &inputs);

// Per-utterance CSV (uid,ter_pct,mter_pct,cor,sub,ins,del,ref_len,hyp_len,cost).
std::string PerUtteranceCsv(const std::vector<UtteranceScore> &scores);

// --- ablation -----------------------------------------------------------

struct AblationConfig {
  std::string name;
  NormConfig norm;
  bool dae_on = true;
};

// A0 = everything on, A1..A5 = one component off each (PUNC, ITJ, UK-US,
// NSW, DAE), CASE always on.
std::vector<AblationConfig> DefaultAblationSpec();

// Cumulative pipeline from naive (CASE+PUNC only) to the full stack, for the
// progression view.
std::vector<AblationConfig> ProgressionSpec();

// Throws std::invalid_argument unless names are unique and A0 is present.
void ValidateAblationSpec(const std::vector<AblationConfig> &spec);

struct AblationResult {
  std::vector<std::string> config_names;
  std::vector<std::string> model_names;
  // wer[m][c], rank[m][c]: model-major, per-config competition ranks.
  std::vector<std::vector<double>> wer;
  std::vector<std::vector<int>> rank;
};

using ModelCorpus =
    std::pair<std::string, std::vector<std::pair<UtteranceRecord, HypothesisRecord>>>;

AblationResult RunAblation(const std::vector<ModelCorpus> &models,
                           const std::vector<AlternativeSet> &alts,
                           const std::vector<AblationConfig> &spec, int threads);

// "model | 9.02 (1) | ..." text matrix and the CSV twin.
std::string FormatAblationTable(const AblationResult &result);
std::string AblationCsv(const AblationResult &result);

}  // namespace asrscore

#endif  // ASRSCORE_REPORT_H_
