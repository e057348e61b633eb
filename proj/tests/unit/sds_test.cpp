#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "sds/error.hpp"
#include "sds/sds.hpp"
#include "sds/sds_io.hpp"

using sds::BaseGraph;
using sds::BitVector;
using sds::SdsDefinition;
using sds::UpdateOrder;
using sds::VertexFunction;

namespace {

const char* const kExample1Tables[] = {"0101101001101001", "1110", "01101001", "01010110"};

oracle::System example1_oracle() {
  oracle::System s;
  s.n = 4;
  s.neighbours = {{1, 2, 3}, {0}, {0, 3}, {0, 2}};
  s.tables.assign(std::begin(kExample1Tables), std::end(kExample1Tables));
  s.order = {1, 3, 0, 2};
  return s;
}

}  // namespace

TEST(BaseGraph, RejectsBadEdges) {
  BaseGraph g(3);
  g.add_edge(1, 2);
  EXPECT_THROW(g.add_edge(2, 1), sds::InvalidInput);
  EXPECT_THROW(g.add_edge(2, 2), sds::InvalidInput);
  EXPECT_THROW(g.add_edge(0, 1), sds::InvalidInput);
  EXPECT_THROW(g.add_edge(1, 4), sds::InvalidInput);
}

TEST(BaseGraph, CompleteGraph) {
  const auto k4 = BaseGraph::complete(4);
  EXPECT_TRUE(k4.is_complete());
  EXPECT_EQ(k4.edges().size(), 6U);
  EXPECT_EQ(k4.degree(2), 3U);
}

TEST(VertexFunction, TableForms) {
  const auto f = VertexFunction::from_table("0110");
  EXPECT_EQ(f.arity(), 2U);
  EXPECT_FALSE(f(0));
  EXPECT_TRUE(f(1));
  EXPECT_TRUE(f.eval(BitVector::parse("10")));
  EXPECT_EQ(VertexFunction::from_integer(2, 0b0110), f);
  EXPECT_EQ(f.to_string(), "0110");
  EXPECT_THROW(VertexFunction::from_table("011"), sds::InvalidInput);
  EXPECT_THROW(VertexFunction::from_table("01x0"), sds::InvalidInput);
}

TEST(VertexFunction, ProjectionAndConstant) {
  const auto p = VertexFunction::projection(3, 2);
  for (std::uint64_t k = 0; k < 8; ++k) EXPECT_EQ(p(k), BitVector(3, k).at(2));
  const auto one = VertexFunction::constant(3, true);
  for (std::uint64_t k = 0; k < 8; ++k) EXPECT_TRUE(one(k));
}

TEST(UpdateOrder, ParseAndValidate) {
  EXPECT_EQ(UpdateOrder::parse("2413").sequence(), (std::vector<std::size_t>{2, 4, 1, 3}));
  EXPECT_EQ(UpdateOrder::parse("2,4,1,3"), UpdateOrder::parse("2413"));
  EXPECT_TRUE(UpdateOrder::identity(5).is_identity());
  EXPECT_THROW(UpdateOrder({1, 1, 3}), sds::InvalidInput);
  EXPECT_THROW(UpdateOrder({0, 1}), sds::InvalidInput);
  EXPECT_THROW(UpdateOrder::parse("12a"), sds::InvalidInput);
}

TEST(SdsDefinition, ArityMustMatchClosedNeighbourhood) {
  std::vector<VertexFunction> fs(3, VertexFunction::from_table("0110"));
  EXPECT_THROW(SdsDefinition(BaseGraph::complete(3), fs, UpdateOrder::identity(3)), sds::InvalidInput);
  EXPECT_THROW(SdsDefinition::complete(3, VertexFunction::from_table("01101001"), UpdateOrder::identity(4)),
               sds::InvalidInput);
}

TEST(Example1, TruthTables) {
  const auto s = sds::example1();
  for (std::size_t v = 1; v <= 4; ++v) EXPECT_EQ(s.function(v).to_string(), kExample1Tables[v - 1]);
}

TEST(Example1, NeighbourProfiles) {
  const auto s = sds::example1();
  const auto x = BitVector::parse("0001");
  EXPECT_EQ(sds::neighbor_profile(s, x, 1).to_string(), "0001");
  EXPECT_EQ(sds::neighbor_profile(s, x, 2).to_string(), "00");
  EXPECT_EQ(sds::neighbor_profile(s, x, 3).to_string(), "001");
  EXPECT_EQ(sds::neighbor_profile(s, x, 4).to_string(), "001");
  EXPECT_EQ(sds::neighbor_profile(s, BitVector::parse("1011"), 4).to_string(), "111");
}

TEST(Example1, GoldenTrace) {
  const auto s = sds::example1();
  const auto trace = sds::update_trace(s, BitVector::parse("0001"));
  ASSERT_EQ(trace.size(), 5U);
  const char* const expected[] = {"0001", "0101", "0101", "0101", "0111"};
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(trace[k].to_string(), expected[k]) << "k=" << k;
  EXPECT_EQ(sds::sds_map(s, BitVector::parse("0001")).to_string(), "0111");
}

TEST(Example1, MatchesOracleOnEveryState) {
  const auto s = sds::example1();
  const auto ref = example1_oracle();
  for (std::uint64_t c = 0; c < 16; ++c) {
    const BitVector x(4, c);
    EXPECT_EQ(sds::sds_map(s, x).to_string(), oracle::to_string(oracle::step(ref, oracle::decode(c, 4))));
    EXPECT_EQ(s.apply(c), sds::sds_map(s, x).code());
  }
}

TEST(Example1, SuccessorTable) {
  const auto s = sds::example1();
  const char* const image[] = {"1110", "0111", "1100", "0101", "1110", "0111", "1100", "0101",
                               "1110", "0111", "1111", "0110", "0000", "1001", "0001", "1000"};
  for (std::uint64_t c = 0; c < 16; ++c) EXPECT_EQ(sds::sds_map(s, BitVector(4, c)).to_string(), image[c]);
}

TEST(LocalUpdate, ChangesOnlyItsCoordinate) {
  const auto s = sds::example1();
  for (std::uint64_t c = 0; c < 16; ++c) {
    const BitVector x(4, c);
    for (std::size_t i = 1; i <= 4; ++i) {
      const auto y = sds::local_update(s, x, i);
      for (std::size_t j = 1; j <= 4; ++j)
        if (j != i) EXPECT_EQ(y.at(j), x.at(j));
      EXPECT_EQ(y.at(i), s.function(i).eval(sds::neighbor_profile(s, x, i)));
    }
  }
}

TEST(LocalUpdate, ProjectionOntoSelfIsIdentity) {
  // On K_3 the closed neighbourhood of v_i puts x_i at position i.
  for (std::size_t i = 1; i <= 3; ++i) {
    const auto s = SdsDefinition::complete(3, VertexFunction::projection(3, i));
    for (std::uint64_t c = 0; c < 8; ++c) {
      const BitVector x(3, c);
      EXPECT_EQ(sds::local_update(s, x, i), x);
    }
  }
}

TEST(IntermediateMap, BoundaryCases) {
  const auto s = sds::example1();
  const auto x = BitVector::parse("1011");
  EXPECT_EQ(sds::intermediate_map(s, x, 0), x);
  EXPECT_EQ(sds::intermediate_map(s, x, 4), sds::sds_map(s, x));
  EXPECT_THROW(sds::intermediate_map(s, x, 5), sds::InvalidInput);
}

TEST(IntermediateMap, ConsecutiveStepsDifferOnlyAtUpdatedVertex) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    VertexFunction g(n);
    for (std::uint64_t k = 0; k < g.table_size(); ++k) g.set(k, rng() & 1U);
    std::vector<std::size_t> seq(n);
    for (std::size_t i = 0; i < n; ++i) seq[i] = i + 1;
    std::shuffle(seq.begin(), seq.end(), rng);
    const UpdateOrder pi(seq);
    const auto s = SdsDefinition::complete(n, g, pi);
    const BitVector x(n, rng() & ((std::uint64_t{1} << n) - 1));
    for (std::size_t k = 1; k <= n; ++k) {
      const auto a = sds::intermediate_map(s, x, k - 1);
      const auto b = sds::intermediate_map(s, x, k);
      for (std::size_t j = 1; j <= n; ++j)
        if (j != pi(k)) EXPECT_EQ(a.at(j), b.at(j));
    }
  }
}

TEST(SdsMap, RandomCompleteSystemsMatchOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    std::string table;
    for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) table.push_back((rng() & 1U) ? '1' : '0');
    std::vector<std::size_t> seq(n);
    for (std::size_t i = 0; i < n; ++i) seq[i] = i;
    std::shuffle(seq.begin(), seq.end(), rng);
    const auto ref = oracle::complete_system(n, table, seq);
    for (auto& v : seq) ++v;
    const auto s = SdsDefinition::complete(n, VertexFunction::from_table(table), UpdateOrder(seq));
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c)
      EXPECT_EQ(s.apply(c), oracle::encode(oracle::step(ref, oracle::decode(c, n))));
  }
}

TEST(SdsMap, SparseGraphMatchesOracle) {
  // Path 1-2-3-4-5 with a random function at every vertex.
  std::mt19937_64 rng(5);
  const std::pair<std::size_t, std::size_t> edges[] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}};
  oracle::System ref;
  ref.n = 5;
  ref.neighbours = {{1}, {0, 2}, {1, 3}, {2, 4}, {3}};
  ref.order = {4, 0, 2, 1, 3};
  std::vector<VertexFunction> fs;
  for (std::size_t v = 0; v < 5; ++v) {
    const std::size_t arity = ref.neighbours[v].size() + 1;
    std::string t;
    for (std::size_t k = 0; k < (std::size_t{1} << arity); ++k) t.push_back((rng() & 1U) ? '1' : '0');
    ref.tables.push_back(t);
    fs.push_back(VertexFunction::from_table(t));
  }
  const SdsDefinition s(BaseGraph(5, edges), fs, UpdateOrder({5, 1, 3, 2, 4}));
  for (std::uint64_t c = 0; c < 32; ++c)
    EXPECT_EQ(s.apply(c), oracle::encode(oracle::step(ref, oracle::decode(c, 5))));
}
