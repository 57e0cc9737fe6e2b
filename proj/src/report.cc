#include "report.h"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "align.h"
#include "version.h"

namespace asrscore {

namespace {

struct NormalizedPair {
  TokenSeq ref;
  TokenSeq hyp;
  std::vector<std::string> warnings;
};

// Runs fn(i) for i in [0, count) on up to `threads` workers, each worker
// owning a contiguous block so no synchronization is needed.
void ParallelFor(size_t count, int threads, const std::function<void(size_t, int)> &fn) {
  int nthreads = std::max(1, threads);
  if (nthreads == 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i, 0);
    return;
  }
  nthreads = static_cast<int>(std::min<size_t>(nthreads, count));
  size_t block = (count + nthreads - 1) / nthreads;
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t) {
    size_t begin = t * block;
    size_t end = std::min(count, begin + block);
    pool.emplace_back([&fn, begin, end, t] {
      for (size_t i = begin; i < end; ++i) fn(i, t);
    });
  }
  for (std::thread &th : pool) th.join();
}

}  // namespace

ScoredCorpus ScoreCorpus(const std::vector<std::pair<UtteranceRecord, HypothesisRecord>> &pairs,
                         const std::vector<AlternativeSet> &alts, const ScoreOptions &opts) {
  if (pairs.empty()) throw std::invalid_argument("no utterances to score");
  const bool use_dae = opts.dae_on && !alts.empty();

  // Phase 1: normalization (pure, parallel).
  std::vector<NormalizedPair> norm(pairs.size());
  ParallelFor(pairs.size(), opts.threads, [&](size_t i, int) {
    norm[i].ref = Normalize(pairs[i].first.text, opts.norm, &norm[i].warnings);
    norm[i].hyp = Normalize(pairs[i].second.text, opts.norm, &norm[i].warnings);
  });

  // Phase 2: freeze the vocabulary and build one Levenshtein transducer.
  SymbolTable base_table;
  for (const NormalizedPair &np : norm) {
    for (const Token &t : np.ref) base_table.AddToken(t);
    for (const Token &t : np.hyp) base_table.AddToken(t);
  }
  if (use_dae)
    for (const AlternativeSet &set : alts)
      for (const TokenSeq &member : set.members)
        for (const Token &t : member) base_table.AddToken(t);
  const LevTransducer lev = BuildLev(base_table);

  // Phase 3: alignment, each worker on a private copy of the table (sausage
  // construction registers tag symbols).
  int nthreads = std::max(1, opts.threads);
  std::vector<SymbolTable> tables(static_cast<size_t>(nthreads), base_table);
  std::vector<UtteranceScore> scores(pairs.size());
  std::vector<std::string> align_warnings(pairs.size());
  ParallelFor(pairs.size(), opts.threads, [&](size_t i, int worker) {
    SymbolTable &table = tables[static_cast<size_t>(worker)];
    const TokenSeq &ref = norm[i].ref;
    const TokenSeq &hyp = norm[i].hyp;
    UtteranceScore &s = scores[i];
    s.uid = pairs[i].first.id;
    s.ref_len = static_cast<int64_t>(ref.size());
    if (use_dae) {
      DaeResult dae = AlignDae(ref, hyp, alts, lev, &table);
      s.alignment = std::move(dae.alignment);
      s.hyp_len = dae.SelectedHypLen();
    } else {
      s.alignment = AlignFst(ref, hyp, lev, &table);
      s.hyp_len = static_cast<int64_t>(hyp.size());
    }
    s.ter = Ter(s.alignment, s.ref_len);
    s.mter = Mter(s.alignment, s.ref_len, s.hyp_len);
    if (!s.ter)
      align_warnings[i] = "utterance '" + s.uid + "': empty reference, TER undefined";
  });

  ScoredCorpus out;
  out.utterances = std::move(scores);
  for (size_t i = 0; i < pairs.size(); ++i) {
    for (std::string &w : norm[i].warnings)
      out.warnings.push_back("utterance '" + pairs[i].first.id + "': " + w);
    if (!align_warnings[i].empty()) out.warnings.push_back(align_warnings[i]);
  }
  out.corpus = CorpusAggregate(out.utterances);
  return out;
}

namespace {

std::string PadTo(const std::string &s, size_t width) {
  std::string out = s;
  out.append(width - out.size(), ' ');
  return out;
}

std::string RStrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string EscapeJson(const std::string &s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string HeaderLine(const UtteranceScore &s) {
  std::ostringstream h;
  h << "{\"uid\":" << s.uid << ", \"TER\":" << (s.ter ? RenderPercent(*s.ter) : "null")
    << ", \"mTER\":" << RenderPercent(s.mter) << ", \"cor\":" << s.alignment.cor
    << ",\"sub\":" << s.alignment.sub << ", \"ins\":" << s.alignment.ins
    << ", \"del\":" << s.alignment.del << "}";
  return h.str();
}

}  // namespace

std::string RenderAlignment(const UtteranceScore &score) {
  std::string ref_row, hyp_row, edit_row;
  for (size_t k = 0; k < score.alignment.ops.size(); ++k) {
    const EditOp &op = score.alignment.ops[k];
    std::string ref_cell = op.ref ? *op.ref : "*";
    std::string hyp_cell = op.hyp ? *op.hyp : "*";
    std::string edit_cell;
    switch (op.kind) {
      case EditKind::kCor: edit_cell = ""; break;
      case EditKind::kSub: edit_cell = "S"; break;
      case EditKind::kDel: edit_cell = "D"; break;
      case EditKind::kIns: edit_cell = "I"; break;
    }
    size_t width = std::max(ref_cell.size(), hyp_cell.size());
    if (k > 0) {
      ref_row += ' ';
      hyp_row += ' ';
      edit_row += ' ';
    }
    ref_row += PadTo(ref_cell, width);
    hyp_row += PadTo(hyp_cell, width);
    edit_row += PadTo(edit_cell, width);
  }
  std::ostringstream out;
  out << HeaderLine(score) << '\n';
  out << RStrip("  REF  : " + ref_row) << '\n';
  out << RStrip("  HYP  : " + hyp_row) << '\n';
  out << RStrip("  EDIT : " + edit_row) << '\n';
  return out.str();
}

std::string JsonlRecord(const UtteranceScore &score) {
  std::ostringstream out;
  out << "{\"uid\":\"" << EscapeJson(score.uid) << "\""
      << ",\"TER\":" << (score.ter ? RenderPercent(*score.ter) : "null")
      << ",\"mTER\":" << RenderPercent(score.mter) << ",\"cor\":" << score.alignment.cor
      << ",\"sub\":" << score.alignment.sub << ",\"ins\":" << score.alignment.ins
      << ",\"del\":" << score.alignment.del << ",\"ref_len\":" << score.ref_len
      << ",\"hyp_len\":" << score.hyp_len << ",\"cost\":" << score.alignment.cost << "}";
  return out.str();
}

std::string SummaryJson(const ScoredCorpus &scored, const ScoreOptions &opts,
                        const std::vector<std::pair<std::string, std::string>> &inputs) {
  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  nlohmann::ordered_json in = nlohmann::ordered_json::object();
  for (const auto &[key, value] : inputs) in[key] = value;
  j["inputs"] = in;
  j["config"] = {{"case", opts.norm.case_on}, {"punc", opts.norm.punc_on},
                 {"itj", opts.norm.itj_on},   {"ukus", opts.norm.ukus_on},
                 {"nsw", opts.norm.nsw_on},   {"dae", opts.dae_on}};
  const CorpusScore &c = scored.corpus;
  j["n_utterances"] = c.n_utts;
  j["totals"] = {{"cor", c.cor},           {"sub", c.sub},
                 {"ins", c.ins},           {"del", c.del},
                 {"cost", c.total_cost},   {"ref_len", c.total_ref_len},
                 {"mter_denom", c.total_denom_mter}};
  j["micro"] = {{"ter_pct", std::stod(RenderPercent(c.ter))},
                {"mter_pct", std::stod(RenderPercent(c.mter))}};
  j["macro"] = {{"ter_pct", std::stod(RenderPercent(c.macro_ter))},
                {"mter_pct", std::stod(RenderPercent(c.macro_mter))},
                {"n_undefined_ter", c.n_undefined_ter}};
  j["warnings"] = scored.warnings;
  return j.dump(2) + "\n";
}

std::string PerUtteranceCsv(const std::vector<UtteranceScore> &scores) {
  std::ostringstream out;
  out << "uid,ter_pct,mter_pct,cor,sub,ins,del,ref_len,hyp_len,cost\n";
  for (const UtteranceScore &s : scores) {
    out << s.uid << ',' << (s.ter ? RenderPercent(*s.ter) : "") << ','
        << RenderPercent(s.mter) << ',' << s.alignment.cor << ',' << s.alignment.sub << ','
        << s.alignment.ins << ',' << s.alignment.del << ',' << s.ref_len << ',' << s.hyp_len
        << ',' << s.alignment.cost << '\n';
  }
  return out.str();
}

std::vector<AblationConfig> DefaultAblationSpec() {
  std::vector<AblationConfig> spec;
  auto base = NormConfig::Defaults();
  spec.push_back({"A0", base, true});
  AblationConfig a1{"A1", base, true};
  a1.norm.punc_on = false;
  spec.push_back(a1);
  AblationConfig a2{"A2", base, true};
  a2.norm.itj_on = false;
  spec.push_back(a2);
  AblationConfig a3{"A3", base, true};
  a3.norm.ukus_on = false;
  spec.push_back(a3);
  AblationConfig a4{"A4", base, true};
  a4.norm.nsw_on = false;
  spec.push_back(a4);
  spec.push_back({"A5", base, false});
  return spec;
}

std::vector<AblationConfig> ProgressionSpec() {
  auto stage = [](const char *name, bool itj, bool ukus, bool nsw, bool dae) {
    AblationConfig c{name, NormConfig::Defaults(), dae};
    c.norm.itj_on = itj;
    c.norm.ukus_on = ukus;
    c.norm.nsw_on = nsw;
    return c;
  };
  return {
      stage("naive(CASE+PUNC)", false, false, false, false),
      stage("+ITJ", true, false, false, false),
      stage("+UKUS", true, true, false, false),
      stage("+NSW", true, true, true, false),
      stage("+DAE", true, true, true, true),
  };
}

void ValidateAblationSpec(const std::vector<AblationConfig> &spec) {
  bool has_baseline = false;
  for (size_t i = 0; i < spec.size(); ++i) {
    if (spec[i].name == "A0") has_baseline = true;
    for (size_t j = i + 1; j < spec.size(); ++j)
      if (spec[i].name == spec[j].name)
        throw std::invalid_argument("duplicate ablation configuration '" + spec[i].name + "'");
  }
  if (!has_baseline) throw std::invalid_argument("ablation spec must include baseline A0");
}

AblationResult RunAblation(const std::vector<ModelCorpus> &models,
                           const std::vector<AlternativeSet> &alts,
                           const std::vector<AblationConfig> &spec, int threads) {
  if (models.empty()) throw std::invalid_argument("ablation needs at least one model");
  AblationResult result;
  for (const AblationConfig &c : spec) result.config_names.push_back(c.name);
  for (const ModelCorpus &m : models) result.model_names.push_back(m.first);
  result.wer.assign(models.size(), std::vector<double>(spec.size(), 0.0));
  result.rank.assign(models.size(), std::vector<int>(spec.size(), 0));

  for (size_t ci = 0; ci < spec.size(); ++ci) {
    ScoreOptions opts;
    opts.norm = spec[ci].norm;
    opts.dae_on = spec[ci].dae_on;
    opts.threads = threads;
    std::map<std::string, double> column;
    for (size_t mi = 0; mi < models.size(); ++mi) {
      ScoredCorpus scored = ScoreCorpus(models[mi].second, alts, opts);
      result.wer[mi][ci] = scored.corpus.ter;
      column[models[mi].first] = scored.corpus.ter;
    }
    std::map<std::string, int> ranks = RankModels(column);
    for (size_t mi = 0; mi < models.size(); ++mi)
      result.rank[mi][ci] = ranks.at(models[mi].first);
  }
  return result;
}

std::string FormatAblationTable(const AblationResult &result) {
  size_t name_width = 5;
  for (const std::string &m : result.model_names) name_width = std::max(name_width, m.size());
  std::ostringstream out;
  out << PadTo("model", name_width);
  for (const std::string &c : result.config_names) out << "  " << PadTo(c, 12);
  out << '\n';
  for (size_t mi = 0; mi < result.model_names.size(); ++mi) {
    out << PadTo(result.model_names[mi], name_width);
    for (size_t ci = 0; ci < result.config_names.size(); ++ci) {
      std::string cell = RenderPercent(result.wer[mi][ci]) + " (" +
                         std::to_string(result.rank[mi][ci]) + ")";
      out << "  " << PadTo(cell, 12);
    }
    out << '\n';
  }
  return out.str();
}

std::string AblationCsv(const AblationResult &result) {
  std::ostringstream out;
  out << "model";
  for (const std::string &c : result.config_names) out << ',' << c << ',' << c << "_rank";
  out << '\n';
  for (size_t mi = 0; mi < result.model_names.size(); ++mi) {
    out << result.model_names[mi];
    for (size_t ci = 0; ci < result.config_names.size(); ++ci)
      out << ',' << RenderPercent(result.wer[mi][ci]) << ',' << result.rank[mi][ci];
    out << '\n';
  }
  return out.str();
}

}  // namespace asrscore
