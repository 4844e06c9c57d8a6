#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "dismal/expression.hpp"
#include "dismal/sequences.hpp"
#include "dismal/tables.hpp"

using namespace dismal;

namespace {

std::vector<std::string> values(SequenceId id, std::uint64_t start, std::uint64_t end, Base base = kDecimal) {
  std::vector<std::string> v;
  for (const auto& t : sequence_terms(id, base, start, end)) v.push_back(t.value);
  return v;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST(Expression, Evaluates) {
  EXPECT_EQ(evaluate("169+248"), parse("269"));
  EXPECT_EQ(evaluate("169*248"), parse("12468"));
  EXPECT_EQ(evaluate("2*5"), parse("2"));
  EXPECT_EQ(evaluate("(1101@2)*(101@2)"), parse("111101@2"));
  EXPECT_EQ(evaluate("1101@2*101"), parse("111101@2"));
  EXPECT_EQ(evaluate(" 1 + 2 * 3 "), parse("2"));
  EXPECT_EQ(evaluate("(1+2)*3"), parse("2"));
  EXPECT_EQ(evaluate("101", kBinary), parse("101@2"));
}

TEST(Expression, Errors) {
  EXPECT_THROW(evaluate("1@2+1@3"), BaseMismatch);
  EXPECT_THROW(evaluate("1+*2"), ParseError);
  EXPECT_THROW(evaluate("(1+2"), ParseError);
  EXPECT_THROW(evaluate(""), ParseError);
  EXPECT_THROW(evaluate("12 34"), ParseError);
  EXPECT_THROW(evaluate("2@2"), ParseError);
}

TEST(Expression, ShuffledOperandsAgree) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::string> xs;
    for (int j = 0; j < 5; ++j) xs.push_back(std::to_string(rng() % 100000));
    for (const char* op : {"+", "*"}) {
      auto join = [&](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t j = 0; j < v.size(); ++j) s += (j ? op : "") + v[j];
        return s;
      };
      const Number a = evaluate(join(xs));
      auto ys = xs;
      std::shuffle(ys.begin(), ys.end(), rng);
      ASSERT_EQ(evaluate(join(ys)), a);
    }
  }
}

TEST(Sequences, Examples) {
  EXPECT_EQ(values(SequenceId::Even2xN, 0, 4), (Strings{"0", "1", "2", "2", "2"}));
  EXPECT_EQ(values(SequenceId::EvenSmallestPrime, 0, 3), (Strings{"0", "11", "12", "13"}));
  EXPECT_EQ(values(SequenceId::Triangular, 10, 12), (Strings{"19", "19", "19"}));
  EXPECT_EQ(values(SequenceId::Factorials, 11, 11), (Strings{"110"}));
  EXPECT_EQ(values(SequenceId::Squares, 12, 12), (Strings{"112"}));
  EXPECT_EQ(values(SequenceId::Primes, 1, 3), (Strings{"19", "29", "39"}));
  EXPECT_EQ(values(SequenceId::DCount, 1, 3, kBinary), (Strings{"1", "2", "2"}));
  EXPECT_EQ(values(SequenceId::Sigma, 10, 10), (Strings{"99"}));
  EXPECT_EQ(values(SequenceId::Phi, 17, 17, kBinary), (Strings{"30"}));
  EXPECT_EQ(values(SequenceId::SquareCounts, 1, 4, kBinary), (Strings{"2", "2", "4", "8"}));
  EXPECT_EQ(values(SequenceId::SqrtCounts, 0, 5), (Strings{"1", "1", "1", "1", "2", "3"}));
  EXPECT_EQ(values(SequenceId::DOnesSeries, 14, 16), (Strings{"1628", "3045", "5719"}));
  EXPECT_EQ(values(SequenceId::DMinus3Series, 1, 4), (Strings{"1", "0", "2", "2"}));
  EXPECT_TRUE(sequence_terms(SequenceId::DCount, kDecimal, 5, 4).empty());
  EXPECT_THROW(sequence_terms(SequenceId::Factorials, kDecimal, 0, 3), DomainError);
  EXPECT_THROW(sequence_terms(SequenceId::Even2xN, kBinary, 0, 3), DomainError);
}

TEST(Sequences, Names) {
  for (auto id : all_sequences()) EXPECT_EQ(parse_sequence_id(sequence_name(id)), id);
  EXPECT_EQ(all_sequences().size(), 14u);
  EXPECT_THROW(parse_sequence_id("primes"), ParseError);
}

TEST(BFile, RoundTrip) {
  const auto terms = sequence_terms(SequenceId::Sigma, kBinary, 1, 40);
  std::stringstream s;
  write_bfile(s, terms, "sigma in base 2");
  EXPECT_EQ(s.str().substr(0, 2), "# ");
  const auto back = read_bfile(s);
  EXPECT_EQ(back, terms);
  EXPECT_FALSE(compare_terms(terms, back).has_value());
}

TEST(BFile, Errors) {
  std::istringstream gap("1 1\n3 2\n");
  EXPECT_THROW(read_bfile(gap), ParseError);
  std::istringstream bad("1 1\nx 2\n");
  EXPECT_THROW(read_bfile(bad), ParseError);
  std::istringstream extra("1 1 1\n");
  EXPECT_THROW(read_bfile(extra), ParseError);
  std::istringstream ok("# c\n\n5 7\n6 8\n");
  const auto t = read_bfile(ok);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0], (Term{5, "7"}));
}

TEST(BFile, CompareReportsFirstMismatch) {
  const std::vector<Term> computed{{1, "1"}, {2, "2"}, {3, "2"}};
  const std::vector<Term> reference{{1, "1"}, {2, "3"}, {3, "9"}};
  const auto m = compare_terms(computed, reference);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->index, 2u);
  EXPECT_EQ(m->expected, "3");
  EXPECT_EQ(m->actual, "2");
  const std::vector<Term> longer{{1, "1"}, {2, "2"}, {3, "2"}, {4, "3"}};
  const auto missing = compare_terms(computed, longer);
  ASSERT_TRUE(missing.has_value());
  EXPECT_EQ(missing->index, 4u);
  EXPECT_TRUE(missing->actual.empty());
  EXPECT_FALSE(compare_terms(computed, {}).has_value());
}

TEST(Tables, RenderFormats) {
  const Table t = make_table("T", TableOptions{kDecimal, 3, 0, 0});
  EXPECT_EQ(render(t, Format::Csv), "k,t1,t2,t3\n1,1,,\n2,1,1,\n3,1,1,1\n");
  EXPECT_EQ(render(t, Format::Plain).substr(0, 2), "# ");
  EXPECT_THROW(render(t, Format::BFile), DomainError);
  EXPECT_THROW(make_table("nosuch", TableOptions{kDecimal, 0, 0, 0}), ParseError);
  EXPECT_EQ(parse_format("csv"), Format::Csv);
  EXPECT_THROW(parse_format("xml"), ParseError);
}
