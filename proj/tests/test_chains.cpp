#include <gtest/gtest.h>

#include "foldline/chains.hpp"

using namespace foldline;

namespace {

void replace_all(std::string& s, const std::string& from, const std::string& to) {
  for (std::size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size())) s.replace(p, from.size(), to);
}

std::vector<std::size_t> failing_steps(const ChainReport& r) {
  std::vector<std::size_t> out;
  for (const auto& s : r.steps)
    if (!s.ok) out.push_back(s.line);
  return out;
}

}  // namespace

TEST(Chains, EmbeddedIds) {
  EXPECT_EQ(embedded_chain_ids(), (std::vector<std::string>{"b2-from-a3", "b2-from-a4"}));
  EXPECT_EQ(embedded_chain("B2_FROM_A3").id, "b2-from-a3");
  EXPECT_THROW(embedded_chain("b2-from-a5"), Error);
}

TEST(Chains, A3ChainVerifies) {
  auto data = embedded_chain("b2-from-a3");
  ASSERT_EQ(data.lines.size(), 6u);
  auto r = verify_chain(data);
  EXPECT_EQ(r.steps.size(), 5u);
  EXPECT_EQ(r.verified_steps(), 5u);
  EXPECT_TRUE(r.final_ok) << r.final_message;
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.first_failure(), 0u);
}

TEST(Chains, A4ChainVerifies) {
  auto data = embedded_chain("b2-from-a4");
  ASSERT_EQ(data.lines.size(), 24u);
  auto r = verify_chain(data, Execution::parallel);
  EXPECT_EQ(r.steps.size(), 23u);
  EXPECT_EQ(r.verified_steps(), 23u);
  EXPECT_TRUE(r.final_ok) << r.final_message;
  for (const auto& s : r.steps) EXPECT_TRUE(s.move_r == 2 || s.move_r == 3);
}

TEST(Chains, CorruptedExponentFailsAtThatStep) {
  auto data = embedded_chain("b2-from-a3");
  std::string& line = data.lines[1];
  replace_all(line, "1^{b*c/(b+d)}", "1^{TMP}");
  replace_all(line, "1^{c*d/(b+d)}", "1^{b*c/(b+d)}");
  replace_all(line, "1^{TMP}", "1^{c*d/(b+d)}");
  auto r = verify_chain(data);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.first_failure(), 1u);
}

TEST(Chains, A4VerbatimTranscriptionFailsAtTwoSteps) {
  // As printed, lines 13-22 carry bcd*alpha/eps for the letter 1.
  auto data = embedded_chain("b2-from-a4");
  for (std::size_t k = 12; k < 22; ++k) replace_all(data.lines[k], "b*c*d*alpha/((b+d)*eps)", "b*c*d*alpha/eps");
  auto r = verify_chain(data);
  EXPECT_EQ(failing_steps(r), (std::vector<std::size_t>{12, 22}));
}

TEST(Chains, SerialAndParallelAgree) {
  for (const auto& id : embedded_chain_ids()) {
    auto a = verify_chain(embedded_chain(id), Execution::serial);
    auto b = verify_chain(embedded_chain(id), Execution::parallel);
    ASSERT_EQ(a.steps.size(), b.steps.size());
    for (std::size_t k = 0; k < a.steps.size(); ++k) {
      EXPECT_EQ(a.steps[k].ok, b.steps[k].ok);
      EXPECT_EQ(a.steps[k].positions, b.steps[k].positions);
      EXPECT_EQ(a.steps[k].message, b.steps[k].message);
    }
  }
}

TEST(Chains, ParseAndSerializeRoundTrip) {
  auto data = embedded_chain("b2-from-a4");
  auto again = parse_chain(chain_to_json(data));
  EXPECT_EQ(again.lines, data.lines);
  EXPECT_EQ(again.abbreviations, data.abbreviations);
  EXPECT_EQ(again.notes, data.notes);
  EXPECT_THROW(parse_chain("{\"format\": \"other\"}"), Error);
  EXPECT_THROW(parse_chain("not json"), Error);
}

TEST(Chains, ContextParsesLines) {
  auto data = embedded_chain("b2-from-a3");
  ChainContext ctx(data);
  auto dw = ctx.parse_line(data.lines[0]);
  EXPECT_EQ(word_to_string(ctx.datum(), dw.word, " "), "2 2' 1 2' 2 1");
  EXPECT_TRUE(sym_equal(dw.coords[0], ctx.value("d")));
  EXPECT_TRUE(sym_equal(ctx.value("alpha"), ctx.value("a*b+a*d+c*d")));
  EXPECT_THROW(ctx.parse_line("2^{d} 5^{c}"), Error);
  EXPECT_THROW(ctx.value("q"), Error);
}
