#include "textnorm.h"

#include <cctype>
#include <fstream>
#include <stdexcept>

#include "nsw.h"

namespace asrscore {

namespace {

bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

std::string AsciiLower(std::string s) {
  for (char &c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string TrimAscii(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

const char *kDefaultInterjections[] = {"uh", "um", "eh", "er", "ah", "hmm", "mhm", "huh"};

// UK -> US spellings: the common -our/-or, -ise/-ize, -yse/-yze and -re/-er
// families plus a few frequent one-offs. Users extend this via the shipped
// resource file.
const char *kDefaultUkUs[][2] = {
    {"theatre", "theater"},       {"humour", "humor"},         {"apologise", "apologize"},
    {"colour", "color"},          {"favour", "favor"},         {"flavour", "flavor"},
    {"honour", "honor"},          {"labour", "labor"},         {"neighbour", "neighbor"},
    {"rumour", "rumor"},          {"behaviour", "behavior"},   {"harbour", "harbor"},
    {"armour", "armor"},          {"odour", "odor"},           {"vigour", "vigor"},
    {"valour", "valor"},          {"candour", "candor"},       {"clamour", "clamor"},
    {"endeavour", "endeavor"},    {"splendour", "splendor"},   {"tumour", "tumor"},
    {"parlour", "parlor"},        {"saviour", "savior"},
    {"organise", "organize"},     {"recognise", "recognize"},  {"realise", "realize"},
    {"criticise", "criticize"},   {"emphasise", "emphasize"},  {"minimise", "minimize"},
    {"maximise", "maximize"},     {"summarise", "summarize"},  {"authorise", "authorize"},
    {"capitalise", "capitalize"}, {"civilise", "civilize"},    {"colonise", "colonize"},
    {"customise", "customize"},   {"finalise", "finalize"},    {"generalise", "generalize"},
    {"memorise", "memorize"},     {"mobilise", "mobilize"},    {"modernise", "modernize"},
    {"normalise", "normalize"},   {"optimise", "optimize"},    {"penalise", "penalize"},
    {"prioritise", "prioritize"}, {"privatise", "privatize"},  {"publicise", "publicize"},
    {"randomise", "randomize"},   {"specialise", "specialize"},{"stabilise", "stabilize"},
    {"standardise", "standardize"},{"sympathise", "sympathize"},{"synchronise", "synchronize"},
    {"utilise", "utilize"},       {"visualise", "visualize"},
    {"analyse", "analyze"},       {"paralyse", "paralyze"},    {"catalyse", "catalyze"},
    {"centre", "center"},         {"metre", "meter"},          {"litre", "liter"},
    {"fibre", "fiber"},           {"calibre", "caliber"},      {"spectre", "specter"},
    {"lustre", "luster"},
    {"grey", "gray"},             {"defence", "defense"},      {"offence", "offense"},
    {"licence", "license"},       {"practise", "practice"},    {"manoeuvre", "maneuver"},
};

}  // namespace

const std::set<std::string> &DefaultInterjections() {
  static const std::set<std::string> &list = *new std::set<std::string>(
      std::begin(kDefaultInterjections), std::end(kDefaultInterjections));
  return list;
}

const std::map<std::string, std::string> &DefaultUkUsMap() {
  static const std::map<std::string, std::string> &map = *[] {
    auto *m = new std::map<std::string, std::string>();
    for (const auto &pair : kDefaultUkUs) (*m)[pair[0]] = pair[1];
    return m;
  }();
  return map;
}

NormConfig NormConfig::Defaults() {
  NormConfig cfg;
  cfg.interjections = DefaultInterjections();
  cfg.ukus_map = DefaultUkUsMap();
  return cfg;
}

NormConfig NormConfig::AllOff() {
  NormConfig cfg;
  cfg.case_on = cfg.punc_on = cfg.itj_on = cfg.ukus_on = cfg.nsw_on = false;
  return cfg;
}

std::set<std::string> LoadInterjections(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open interjection list: " + path);
  std::set<std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string tok = TrimAscii(line);
    if (tok.empty() || tok[0] == '#') continue;
    if (tok.find_first_of(" \t") != std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": interjection entries must be single tokens");
    out.insert(AsciiLower(tok));
  }
  return out;
}

std::map<std::string, std::string> LoadUkUsMap(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open UK-US map: " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = TrimAscii(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    size_t tab = trimmed.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected UK<TAB>US");
    std::string uk = AsciiLower(TrimAscii(trimmed.substr(0, tab)));
    std::string us = AsciiLower(TrimAscii(trimmed.substr(tab + 1)));
    if (uk.empty() || us.empty() || uk.find_first_of(" \t") != std::string::npos ||
        us.find_first_of(" \t") != std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": entries must be single words");
    out[uk] = us;
  }
  return out;
}

std::string NormalizeCase(const std::string &text) { return AsciiLower(text); }

std::string StripPunctuation(const std::string &text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    switch (c) {
      case ',': case '.': case '?': case '!': case '"':
        break;  // dropped
      case '-':
        out += ' ';  // compounds split so alternative sets can still match
        break;
      case '\'': {
        // Apostrophes inside a word survive ("doesn't"); quote marks do not.
        bool inner = i > 0 && i + 1 < text.size() && IsAsciiAlpha(text[i - 1]) &&
                     IsAsciiAlpha(text[i + 1]);
        if (inner) out += c;
        break;
      }
      default:
        out += c;
    }
  }
  return out;
}

TokenSeq RemoveInterjections(const TokenSeq &seq, const std::set<std::string> &list) {
  TokenSeq out;
  out.reserve(seq.size());
  for (const Token &t : seq)
    if (list.count(t) == 0) out.push_back(t);
  return out;
}

TokenSeq UnifySpelling(const TokenSeq &seq, const std::map<std::string, std::string> &map) {
  TokenSeq out;
  out.reserve(seq.size());
  for (const Token &t : seq) {
    auto it = map.find(t);
    out.push_back(it == map.end() ? t : it->second);
  }
  return out;
}

TokenSeq NormalizeTraced(const std::string &text, const NormConfig &cfg, NormTrace *trace,
                         std::vector<std::string> *warnings) {
  std::string cur = text;
  if (cfg.nsw_on) cur = ExpandNsw(cur, warnings);
  if (trace) trace->after_nsw = cur;
  if (cfg.case_on) cur = NormalizeCase(cur);
  if (trace) trace->after_case = cur;
  if (cfg.punc_on) cur = StripPunctuation(cur);
  if (trace) trace->after_punc = cur;
  TokenSeq seq = Tokenize(cur);
  if (trace) trace->after_tokenize = seq;
  if (cfg.itj_on) seq = RemoveInterjections(seq, cfg.interjections);
  if (trace) trace->after_itj = seq;
  if (cfg.ukus_on) seq = UnifySpelling(seq, cfg.ukus_map);
  if (trace) trace->after_ukus = seq;
  return seq;
}

TokenSeq Normalize(const std::string &text, const NormConfig &cfg,
                   std::vector<std::string> *warnings) {
  return NormalizeTraced(text, cfg, nullptr, warnings);
}

}  // namespace asrscore
