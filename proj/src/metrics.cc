#include "metrics.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace asrscore {

std::optional<double> Ter(const Alignment &alignment, int64_t ref_len) {
  if (ref_len <= 0) return std::nullopt;
  return static_cast<double>(alignment.cost) / static_cast<double>(ref_len);
}

double Mter(const Alignment &alignment, int64_t ref_len, int64_t hyp_len) {
  int64_t denom = std::max(ref_len, hyp_len);
  if (denom <= 0) return 0.0;  // empty vs empty: identity
  return static_cast<double>(alignment.cost) / static_cast<double>(denom);
}

CorpusScore CorpusAggregate(const std::vector<UtteranceScore> &scores) {
  if (scores.empty()) throw std::invalid_argument("cannot aggregate an empty corpus");
  CorpusScore c;
  double macro_ter_sum = 0.0;
  double macro_mter_sum = 0.0;
  for (const UtteranceScore &s : scores) {
    ++c.n_utts;
    c.total_cost += s.alignment.cost;
    c.total_ref_len += s.ref_len;
    c.total_denom_mter += std::max(s.ref_len, s.hyp_len);
    c.cor += s.alignment.cor;
    c.sub += s.alignment.sub;
    c.ins += s.alignment.ins;
    c.del += s.alignment.del;
    if (s.ter)
      macro_ter_sum += *s.ter;
    else
      ++c.n_undefined_ter;
    macro_mter_sum += s.mter;
  }
  c.ter = c.total_ref_len > 0
              ? static_cast<double>(c.total_cost) / static_cast<double>(c.total_ref_len)
              : 0.0;
  c.mter = c.total_denom_mter > 0
               ? static_cast<double>(c.total_cost) / static_cast<double>(c.total_denom_mter)
               : 0.0;
  int64_t defined = c.n_utts - c.n_undefined_ter;
  c.macro_ter = defined > 0 ? macro_ter_sum / static_cast<double>(defined) : 0.0;
  c.macro_mter = macro_mter_sum / static_cast<double>(c.n_utts);
  return c;
}

int64_t PercentHundredths(double ratio) { return std::llround(ratio * 10000.0); }

std::string RenderPercent(double ratio) {
  int64_t h = PercentHundredths(ratio);
  std::string sign;
  if (h < 0) {
    sign = "-";
    h = -h;
  }
  std::string frac = std::to_string(h % 100);
  if (frac.size() < 2) frac.insert(frac.begin(), '0');
  return sign + std::to_string(h / 100) + "." + frac;
}

std::map<std::string, int> RankModels(const std::map<std::string, double> &wer_by_model) {
  if (wer_by_model.empty()) throw std::invalid_argument("no models to rank");
  std::vector<std::pair<int64_t, std::string>> entries;
  entries.reserve(wer_by_model.size());
  for (const auto &[model, wer] : wer_by_model)
    entries.emplace_back(PercentHundredths(wer), model);
  std::sort(entries.begin(), entries.end());
  std::map<std::string, int> ranks;
  int rank = 1;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].first != entries[i - 1].first) rank = static_cast<int>(i) + 1;
    ranks[entries[i].second] = rank;
  }
  return ranks;
}

}  // namespace asrscore
