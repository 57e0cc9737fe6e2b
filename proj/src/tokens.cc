#include "tokens.h"

#include <cctype>
#include <stdexcept>

namespace asrscore {

TokenSeq Tokenize(const std::string &text) {
  TokenSeq out;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string JoinTokens(const TokenSeq &seq) {
  std::string out;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += seq[i];
  }
  return out;
}

const char *EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kCor: return "COR";
    case EditKind::kSub: return "SUB";
    case EditKind::kDel: return "DEL";
    case EditKind::kIns: return "INS";
  }
  return "?";
}

Alignment Alignment::FromOps(std::vector<EditOp> ops) {
  Alignment a;
  a.ops = std::move(ops);
  for (const EditOp &op : a.ops) {
    switch (op.kind) {
      case EditKind::kCor:
        if (!op.ref || !op.hyp || *op.ref != *op.hyp)
          throw std::logic_error("COR op must carry identical ref and hyp tokens");
        ++a.cor;
        break;
      case EditKind::kSub:
        if (!op.ref || !op.hyp)
          throw std::logic_error("SUB op must carry both tokens");
        ++a.sub;
        break;
      case EditKind::kDel:
        if (!op.ref || op.hyp)
          throw std::logic_error("DEL op must carry ref token only");
        ++a.del;
        break;
      case EditKind::kIns:
        if (op.ref || !op.hyp)
          throw std::logic_error("INS op must carry hyp token only");
        ++a.ins;
        break;
    }
  }
  a.cost = a.sub + a.ins + a.del;
  return a;
}

}  // namespace asrscore
