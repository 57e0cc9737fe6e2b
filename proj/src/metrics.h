// metrics.h -- token error rate, its max-normalized modification, corpus
// aggregation and competition ranking.

#ifndef ASRSCORE_METRICS_H_
#define ASRSCORE_METRICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tokens.h"

namespace asrscore {

// cost / |ref|. Unbounded above (insertions can push it past 1). Empty
// reference leaves it undefined.
std::optional<double> Ter(const Alignment &alignment, int64_t ref_len);

// cost / max(|ref|, |hyp|), always in [0, 1]. Both sides empty is the
// identity case and scores 0. With alternative expansion the hypothesis
// length is the selected variant's length.
double Mter(const Alignment &alignment, int64_t ref_len, int64_t hyp_len);

struct CorpusScore {
  int64_t n_utts = 0;
  int64_t total_cost = 0;
  int64_t total_ref_len = 0;
  int64_t total_denom_mter = 0;  // sum of per-utterance max(|ref|, |hyp|)
  int64_t cor = 0, sub = 0, ins = 0, del = 0;
  // Headline micro-averages (summed cost over summed denominators).
  double ter = 0.0;
  double mter = 0.0;
  // Supplementary macro-averages over defined per-utterance rates.
  double macro_ter = 0.0;
  double macro_mter = 0.0;
  int64_t n_undefined_ter = 0;
};

// Micro-average fold over per-utterance scores; throws std::invalid_argument
// on an empty list. Utterances with an empty reference still contribute
// their cost to the totals.
CorpusScore CorpusAggregate(const std::vector<UtteranceScore> &scores);

// Percentage with two decimals, round half away from zero: 10/13 -> "76.92".
std::string RenderPercent(double ratio);
// The integer hundredths behind RenderPercent, used for rank grouping.
int64_t PercentHundredths(double ratio);

// Competition ranking, ascending by the 2-decimal rendered value: tied
// rendered values share the smallest applicable rank, the next distinct
// value ranks below every strictly better entry.
std::map<std::string, int> RankModels(const std::map<std::string, double> &wer_by_model);

}  // namespace asrscore

#endif  // ASRSCORE_METRICS_H_
