#include "dataset_io.h"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "textnorm.h"

namespace asrscore {

namespace {

void Warn(std::vector<std::string> *warnings, const std::string &msg) {
  if (warnings) warnings->push_back(msg);
}

// getline with CRLF tolerance; LF is the canonical line ending.
bool GetLine(std::istream &in, std::string *line) {
  if (!std::getline(in, *line)) return false;
  if (!line->empty() && line->back() == '\r') line->pop_back();
  return true;
}

double ParseDuration(const std::string &field, const std::string &source, int lineno) {
  size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(field, &consumed);
  } catch (const std::exception &) {
    throw ParseError(source, lineno, "unparseable duration '" + field + "'");
  }
  if (consumed != field.size() || !(value >= 0.0))
    throw ParseError(source, lineno, "unparseable duration '" + field + "'");
  return value;
}

std::string TrimSpaces(const std::string &s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<UtteranceRecord> ParseMetadataTsv(std::istream &in, const std::string &source,
                                              std::vector<std::string> *warnings) {
  std::string line;
  if (!GetLine(in, &line) || line != "ID\tAUDIO\tDURATION\tTEXT")
    throw ParseError(source, 1, "expected header ID<TAB>AUDIO<TAB>DURATION<TAB>TEXT");

  std::vector<UtteranceRecord> out;
  std::unordered_set<std::string> seen;
  int lineno = 1;
  while (GetLine(in, &line)) {
    ++lineno;
    if (line.empty()) continue;
    size_t t1 = line.find('\t');
    size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    size_t t3 = t2 == std::string::npos ? std::string::npos : line.find('\t', t2 + 1);
    if (t3 == std::string::npos)
      throw ParseError(source, lineno, "expected 4 tab-separated columns");
    UtteranceRecord rec;
    rec.id = line.substr(0, t1);
    rec.audio_path = line.substr(t1 + 1, t2 - t1 - 1);
    std::string duration = line.substr(t2 + 1, t3 - t2 - 1);
    rec.text = line.substr(t3 + 1);  // runs to end of line, tabs preserved
    if (rec.id.empty()) throw ParseError(source, lineno, "empty utterance ID");
    if (!seen.insert(rec.id).second)
      throw ParseError(source, lineno, "duplicate utterance ID '" + rec.id + "'");
    rec.duration_s = ParseDuration(duration, source, lineno);
    if (rec.duration_s > 60.0)
      Warn(warnings, source + ":" + std::to_string(lineno) + ": duration " + duration +
                         " exceeds 60s");
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<HypothesisRecord> ParseHypotheses(std::istream &in, const std::string &source,
                                              std::vector<std::string> *warnings) {
  std::string line;
  if (!GetLine(in, &line) || line != "ID\tTEXT")
    throw ParseError(source, 1, "expected header ID<TAB>TEXT");

  std::vector<HypothesisRecord> out;
  std::unordered_set<std::string> seen;
  int lineno = 1;
  while (GetLine(in, &line)) {
    ++lineno;
    if (line.empty()) continue;
    HypothesisRecord rec;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      rec.id = line;
      Warn(warnings, source + ":" + std::to_string(lineno) +
                         ": missing TEXT column, treating hypothesis as empty");
    } else {
      rec.id = line.substr(0, tab);
      rec.text = line.substr(tab + 1);
    }
    if (rec.id.empty()) throw ParseError(source, lineno, "empty utterance ID");
    if (!seen.insert(rec.id).second)
      throw ParseError(source, lineno, "duplicate utterance ID '" + rec.id + "'");
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<AlternativeSet> ParseAlternatives(std::istream &in, const std::string &source,
                                              std::vector<std::string> *warnings) {
  std::vector<AlternativeSet> out;
  std::string line;
  int lineno = 0;
  while (GetLine(in, &line)) {
    ++lineno;
    std::string trimmed = TrimSpaces(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;

    AlternativeSet set;
    size_t start = 0;
    int raw_members = 0;
    while (start <= trimmed.size()) {
      size_t sep = trimmed.find('=', start);
      std::string member_text =
          TrimSpaces(sep == std::string::npos ? trimmed.substr(start)
                                              : trimmed.substr(start, sep - start));
      ++raw_members;
      // Members are stored in the shape matching sees: case-folded with
      // punctuation stripped, so "story-teller" becomes "story teller".
      TokenSeq member = Tokenize(StripPunctuation(NormalizeCase(member_text)));
      if (member.empty())
        throw ParseError(source, lineno, "empty member in alternative set");
      bool duplicate = false;
      for (const TokenSeq &existing : set.members)
        if (existing == member) duplicate = true;
      if (duplicate)
        Warn(warnings, source + ":" + std::to_string(lineno) +
                           ": duplicate member '" + member_text + "' dropped");
      else
        set.members.push_back(std::move(member));
      if (sep == std::string::npos) break;
      start = sep + 1;
    }
    if (raw_members < 2)
      throw ParseError(source, lineno, "alternative set needs at least 2 members");
    if (set.members.size() < 2)
      throw ParseError(source, lineno,
                       "alternative set collapsed to a single member after folding");
    out.push_back(std::move(set));
  }
  return out;
}

std::vector<std::pair<UtteranceRecord, HypothesisRecord>> JoinCorpus(
    const std::vector<UtteranceRecord> &refs, const std::vector<HypothesisRecord> &hyps,
    std::vector<std::string> *warnings) {
  std::unordered_map<std::string, const HypothesisRecord *> by_id;
  for (const HypothesisRecord &h : hyps) by_id.emplace(h.id, &h);

  std::unordered_set<std::string> ref_ids;
  for (const UtteranceRecord &r : refs) ref_ids.insert(r.id);
  for (const HypothesisRecord &h : hyps)
    if (ref_ids.count(h.id) == 0)
      throw std::runtime_error("hypothesis ID '" + h.id + "' not present in references");

  std::vector<std::pair<UtteranceRecord, HypothesisRecord>> out;
  out.reserve(refs.size());
  for (const UtteranceRecord &r : refs) {
    auto it = by_id.find(r.id);
    if (it == by_id.end()) {
      Warn(warnings, "no hypothesis for utterance '" + r.id + "', scoring as empty");
      out.emplace_back(r, HypothesisRecord{r.id, ""});
    } else {
      out.emplace_back(r, *it->second);
    }
  }
  return out;
}

std::string SerializeMetadataTsv(const std::vector<UtteranceRecord> &records) {
  std::ostringstream out;
  out << "ID\tAUDIO\tDURATION\tTEXT\n";
  for (const UtteranceRecord &r : records)
    out << r.id << '\t' << r.audio_path << '\t' << r.duration_s << '\t' << r.text << '\n';
  return out.str();
}

namespace {

std::ifstream OpenOrThrow(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return in;
}

}  // namespace

std::vector<UtteranceRecord> LoadMetadataTsv(const std::string &path,
                                             std::vector<std::string> *warnings) {
  std::ifstream in = OpenOrThrow(path);
  return ParseMetadataTsv(in, path, warnings);
}

std::vector<HypothesisRecord> LoadHypotheses(const std::string &path,
                                             std::vector<std::string> *warnings) {
  std::ifstream in = OpenOrThrow(path);
  return ParseHypotheses(in, path, warnings);
}

std::vector<AlternativeSet> LoadAlternatives(const std::string &path,
                                             std::vector<std::string> *warnings) {
  std::ifstream in = OpenOrThrow(path);
  return ParseAlternatives(in, path, warnings);
}

}  // namespace asrscore
