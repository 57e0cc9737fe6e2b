// asrscore -- command-line front end: score | ablate | normalize | render.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dataset_io.h"
#include "report.h"
#include "textnorm.h"
#include "version.h"

namespace fs = std::filesystem;
using namespace asrscore;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct CommonArgs {
  std::string ref_path;
  std::vector<std::string> hyp_paths;
  std::string alts_path;
  std::vector<std::string> toggles;
  std::string out_dir;
  std::string format = "jsonl";
  int threads = 1;
  bool trace = false;
};

struct Toggles {
  NormConfig norm = NormConfig::Defaults();
  bool dae_on = true;
};

Toggles ApplyToggles(const std::vector<std::string> &toggles) {
  Toggles t;
  // Resource overrides come from the environment so scripted runs stay
  // reproducible from the command line alone.
  if (const char *dir = std::getenv("ASRSCORE_RESOURCES")) {
    fs::path base(dir);
    fs::path itj = base / "interjections_en.txt";
    fs::path ukus = base / "ukus_en.tsv";
    if (fs::exists(itj)) t.norm.interjections = LoadInterjections(itj.string());
    if (fs::exists(ukus)) t.norm.ukus_map = LoadUkUsMap(ukus.string());
  }
  for (const std::string &spec : toggles) {
    size_t eq = spec.find('=');
    std::string stage = spec.substr(0, eq == std::string::npos ? spec.size() : eq);
    std::string value = eq == std::string::npos ? "" : spec.substr(eq + 1);
    bool on;
    if (value == "on")
      on = true;
    else if (value == "off")
      on = false;
    else
      throw CLI::ValidationError("--toggle", "expected <stage>=<on|off>, got '" + spec + "'");
    if (stage == "case") t.norm.case_on = on;
    else if (stage == "punc") t.norm.punc_on = on;
    else if (stage == "itj") t.norm.itj_on = on;
    else if (stage == "ukus") t.norm.ukus_on = on;
    else if (stage == "nsw") t.norm.nsw_on = on;
    else if (stage == "dae") t.dae_on = on;
    else
      throw CLI::ValidationError(
          "--toggle", "unknown stage '" + stage + "' (case,punc,itj,ukus,nsw,dae)");
  }
  return t;
}

void WriteFile(const fs::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

std::vector<AlternativeSet> MaybeLoadAlts(const std::string &path,
                                          std::vector<std::string> *warnings) {
  if (path.empty()) return {};
  return LoadAlternatives(path, warnings);
}

// "name=path" or bare path (model named by file stem).
std::pair<std::string, std::string> SplitModelArg(const std::string &arg) {
  size_t eq = arg.find('=');
  if (eq != std::string::npos) return {arg.substr(0, eq), arg.substr(eq + 1)};
  return {fs::path(arg).stem().string(), arg};
}

int RunScore(const CommonArgs &args) {
  Toggles t = ApplyToggles(args.toggles);
  std::vector<std::string> warnings;
  auto refs = LoadMetadataTsv(args.ref_path, &warnings);
  auto hyps = LoadHypotheses(args.hyp_paths.at(0), &warnings);
  auto alts = MaybeLoadAlts(args.alts_path, &warnings);
  auto pairs = JoinCorpus(refs, hyps, &warnings);
  if (pairs.empty()) throw std::runtime_error("no utterances in " + args.ref_path);

  ScoreOptions opts;
  opts.norm = t.norm;
  opts.dae_on = t.dae_on;
  opts.threads = args.threads;
  ScoredCorpus scored = ScoreCorpus(pairs, alts, opts);
  scored.warnings.insert(scored.warnings.begin(), warnings.begin(), warnings.end());

  fs::create_directories(args.out_dir);
  std::string jsonl;
  for (const UtteranceScore &s : scored.utterances) jsonl += JsonlRecord(s) + "\n";
  WriteFile(fs::path(args.out_dir) / "per_utt.jsonl", jsonl);

  std::vector<std::pair<std::string, std::string>> inputs = {{"ref", args.ref_path},
                                                             {"hyp", args.hyp_paths.at(0)}};
  if (!args.alts_path.empty()) inputs.emplace_back("alts", args.alts_path);
  WriteFile(fs::path(args.out_dir) / "summary.json", SummaryJson(scored, opts, inputs));

  if (args.format == "text") {
    std::string pretty;
    for (const UtteranceScore &s : scored.utterances) pretty += RenderAlignment(s) + "\n";
    WriteFile(fs::path(args.out_dir) / "alignments.txt", pretty);
  } else if (args.format == "csv") {
    WriteFile(fs::path(args.out_dir) / "per_utt.csv", PerUtteranceCsv(scored.utterances));
  }

  for (const std::string &w : scored.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << "utts=" << scored.corpus.n_utts << " TER=" << RenderPercent(scored.corpus.ter)
            << " mTER=" << RenderPercent(scored.corpus.mter)
            << " (cor=" << scored.corpus.cor << " sub=" << scored.corpus.sub
            << " ins=" << scored.corpus.ins << " del=" << scored.corpus.del << ")\n";
  return kExitOk;
}

int RunAblate(const CommonArgs &args) {
  Toggles t = ApplyToggles(args.toggles);
  (void)t;  // ablation sweeps its own per-config toggles
  std::vector<std::string> warnings;
  auto refs = LoadMetadataTsv(args.ref_path, &warnings);
  auto alts = MaybeLoadAlts(args.alts_path, &warnings);

  std::vector<ModelCorpus> models;
  for (const std::string &arg : args.hyp_paths) {
    auto [name, path] = SplitModelArg(arg);
    auto hyps = LoadHypotheses(path, &warnings);
    models.emplace_back(name, JoinCorpus(refs, hyps, &warnings));
  }

  std::vector<AblationConfig> spec = DefaultAblationSpec();
  ValidateAblationSpec(spec);
  AblationResult result = RunAblation(models, alts, spec, args.threads);
  AblationResult progression = RunAblation(models, alts, ProgressionSpec(), args.threads);

  for (const std::string &w : warnings) std::cerr << "warning: " << w << "\n";
  std::cout << FormatAblationTable(result);
  if (!args.out_dir.empty()) {
    fs::create_directories(args.out_dir);
    WriteFile(fs::path(args.out_dir) / "ablation.csv", AblationCsv(result));
    WriteFile(fs::path(args.out_dir) / "progression.csv", AblationCsv(progression));
  } else if (args.format == "csv") {
    std::cout << AblationCsv(result);
  }
  return kExitOk;
}

int RunNormalize(const std::string &in_path, const std::string &out_path,
                 const std::vector<std::string> &toggles, bool trace) {
  Toggles t = ApplyToggles(toggles);
  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot open file: " + in_path);
  std::ostringstream out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> warnings;
    if (trace) {
      NormTrace nt;
      TokenSeq seq = NormalizeTraced(line, t.norm, &nt, &warnings);
      std::cerr << "# line " << lineno << ": " << line << "\n"
                << "  nsw : " << nt.after_nsw << "\n"
                << "  case: " << nt.after_case << "\n"
                << "  punc: " << nt.after_punc << "\n"
                << "  tok : " << JoinTokens(nt.after_tokenize) << "\n"
                << "  itj : " << JoinTokens(nt.after_itj) << "\n"
                << "  ukus: " << JoinTokens(nt.after_ukus) << "\n";
      out << JoinTokens(seq) << "\n";
    } else {
      out << JoinTokens(Normalize(line, t.norm, &warnings)) << "\n";
    }
    for (const std::string &w : warnings) std::cerr << "warning: line " << lineno << ": " << w << "\n";
  }
  if (out_path.empty())
    std::cout << out.str();
  else
    WriteFile(out_path, out.str());
  return kExitOk;
}

int RunRender(const CommonArgs &args, const std::string &out_path) {
  Toggles t = ApplyToggles(args.toggles);
  std::vector<std::string> warnings;
  auto refs = LoadMetadataTsv(args.ref_path, &warnings);
  auto hyps = LoadHypotheses(args.hyp_paths.at(0), &warnings);
  auto alts = MaybeLoadAlts(args.alts_path, &warnings);
  auto pairs = JoinCorpus(refs, hyps, &warnings);
  if (pairs.empty()) throw std::runtime_error("no utterances in " + args.ref_path);

  ScoreOptions opts;
  opts.norm = t.norm;
  opts.dae_on = t.dae_on;
  opts.threads = args.threads;
  ScoredCorpus scored = ScoreCorpus(pairs, alts, opts);

  std::ostringstream out;
  for (const UtteranceScore &s : scored.utterances) out << RenderAlignment(s) << "\n";
  for (const std::string &w : warnings) std::cerr << "warning: " << w << "\n";
  if (out_path.empty())
    std::cout << out.str();
  else
    WriteFile(out_path, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{std::string(kToolName) + " " + kToolVersion +
               " -- transcription scoring with TER and mTER"};
  app.require_subcommand(1);
  bool json_errors = false;
  app.add_flag("--json-errors", json_errors, "report fatal errors as JSON on stderr");

  CommonArgs score_args, ablate_args, render_args;
  std::string norm_in, norm_out, render_out;
  std::vector<std::string> norm_toggles;
  bool norm_trace = false;

  CLI::App *score = app.add_subcommand("score", "score one hypothesis file against references");
  score->add_option("--ref", score_args.ref_path, "reference metadata TSV")->required();
  score->add_option("--hyp", score_args.hyp_paths, "hypothesis TSV")->required()->expected(1);
  score->add_option("--alts", score_args.alts_path, "alternative-set file (enables DAE)");
  score->add_option("--toggle", score_args.toggles, "<stage>=<on|off> (case,punc,itj,ukus,nsw,dae)");
  score->add_option("--out-dir", score_args.out_dir, "output directory")->required();
  score->add_option("--format", score_args.format, "jsonl|json|text|csv (default jsonl)")
      ->check(CLI::IsMember({"jsonl", "json", "text", "csv"}));
  score->add_option("--threads", score_args.threads, "worker threads (default 1)");

  CLI::App *ablate = app.add_subcommand("ablate", "component-ablation WER matrix over models");
  ablate->add_option("--ref", ablate_args.ref_path, "reference metadata TSV")->required();
  ablate->add_option("--hyp", ablate_args.hyp_paths, "model hypothesis file(s), NAME=PATH")
      ->required();
  ablate->add_option("--alts", ablate_args.alts_path, "alternative-set file");
  ablate->add_option("--out-dir", ablate_args.out_dir, "directory for ablation/progression CSVs");
  ablate->add_option("--format", ablate_args.format, "text|csv (default text)")
      ->check(CLI::IsMember({"text", "csv", "jsonl", "json"}));
  ablate->add_option("--toggle", ablate_args.toggles, "ignored stages note: ablation sweeps its own");
  ablate->add_option("--threads", ablate_args.threads, "worker threads (default 1)");

  CLI::App *normalize = app.add_subcommand("normalize", "run the text-normalization pipeline");
  normalize->add_option("--in", norm_in, "input text file, one utterance per line")->required();
  normalize->add_option("--out", norm_out, "output file (default stdout)");
  normalize->add_option("--toggle", norm_toggles, "<stage>=<on|off>");
  normalize->add_flag("--trace", norm_trace, "stage-by-stage trace on stderr");

  CLI::App *render = app.add_subcommand("render", "pretty per-utterance alignment blocks");
  render->add_option("--ref", render_args.ref_path, "reference metadata TSV")->required();
  render->add_option("--hyp", render_args.hyp_paths, "hypothesis TSV")->required()->expected(1);
  render->add_option("--alts", render_args.alts_path, "alternative-set file");
  render->add_option("--toggle", render_args.toggles, "<stage>=<on|off>");
  render->add_option("--out", render_out, "output file (default stdout)");
  render->add_option("--threads", render_args.threads, "worker threads (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (score->parsed()) return RunScore(score_args);
    if (ablate->parsed()) return RunAblate(ablate_args);
    if (normalize->parsed()) return RunNormalize(norm_in, norm_out, norm_toggles, norm_trace);
    if (render->parsed()) return RunRender(render_args, render_out);
  } catch (const std::exception &e) {
    if (json_errors)
      std::cerr << "{\"error\":{\"exit\":" << kExitData << ",\"message\":\""
                << e.what() << "\"}}\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
