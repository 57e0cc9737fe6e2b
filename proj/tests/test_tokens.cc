#include <doctest.h>

#include <stdexcept>

#include "tokens.h"

using namespace asrscore;

TEST_CASE("tokenize splits on whitespace runs") {
  CHECK(Tokenize("yeah that's good") == TokenSeq{"yeah", "that's", "good"});
  CHECK(Tokenize("") == TokenSeq{});
  CHECK(Tokenize("  a  b ") == TokenSeq{"a", "b"});
  CHECK(Tokenize("\tx\n y\t") == TokenSeq{"x", "y"});
}

TEST_CASE("tokenize is idempotent under join") {
  const char *samples[] = {"a b  c", " leading", "trailing ", "one", ""};
  for (const char *s : samples) {
    TokenSeq once = Tokenize(s);
    CHECK(Tokenize(JoinTokens(once)) == once);
  }
}

TEST_CASE("alignment tallies ops and enforces invariants") {
  std::vector<EditOp> ops = {EditOp::Cor("a"), EditOp::Sub("b", "c"), EditOp::Del("d"),
                             EditOp::Ins("e")};
  Alignment a = Alignment::FromOps(ops);
  CHECK(a.cor == 1);
  CHECK(a.sub == 1);
  CHECK(a.del == 1);
  CHECK(a.ins == 1);
  CHECK(a.cost == 3);
  CHECK(a.RefLen() == 3);
  CHECK(a.HypLen() == 3);
}

TEST_CASE("malformed ops are rejected") {
  CHECK_THROWS_AS(Alignment::FromOps({{EditKind::kCor, Token("a"), Token("b")}}),
                  std::logic_error);
  CHECK_THROWS_AS(Alignment::FromOps({{EditKind::kDel, std::nullopt, Token("b")}}),
                  std::logic_error);
  CHECK_THROWS_AS(Alignment::FromOps({{EditKind::kIns, Token("a"), std::nullopt}}),
                  std::logic_error);
}
