#include <gtest/gtest.h>

#include "sds/error.hpp"
#include "sds/sds_io.hpp"

using sds::parse_sds_json;

TEST(SdsIo, BundledFixtureEqualsExample1) {
  const auto loaded = sds::load_sds_file(SDS_DATA_DIR "/example1.json");
  const auto built = sds::example1();
  EXPECT_EQ(loaded.graph().edges(), built.graph().edges());
  EXPECT_EQ(loaded.order(), built.order());
  EXPECT_EQ(loaded.functions(), built.functions());
}

TEST(SdsIo, RoundTrip) {
  const auto a = sds::example1();
  const auto b = parse_sds_json(sds::to_json(a));
  EXPECT_EQ(b.graph().edges(), a.graph().edges());
  EXPECT_EQ(b.order(), a.order());
  EXPECT_EQ(b.functions(), a.functions());
  EXPECT_EQ(sds::to_json(b), sds::to_json(a));
}

TEST(SdsIo, RejectsMalformedInput) {
  EXPECT_THROW(parse_sds_json("{"), sds::InvalidInput);
  EXPECT_THROW(parse_sds_json(R"({"n": 2, "edges": [], "order": [1, 2]})"), sds::InvalidInput);
  // Missing function for vertex 2.
  EXPECT_THROW(parse_sds_json(R"({"n": 2, "edges": [], "order": [1, 2],
                                  "functions": [{"vertex": 1, "table": "01"}]})"),
               sds::InvalidInput);
  // Table arity does not match the closed neighbourhood.
  EXPECT_THROW(parse_sds_json(R"({"n": 2, "edges": [[1, 2]], "order": [1, 2],
                                  "functions": [{"vertex": 1, "table": "01"}, {"vertex": 2, "table": "0110"}]})"),
               sds::InvalidInput);
  // Order is not a permutation.
  EXPECT_THROW(parse_sds_json(R"({"n": 2, "edges": [], "order": [1, 1],
                                  "functions": [{"vertex": 1, "table": "01"}, {"vertex": 2, "table": "01"}]})"),
               sds::InvalidInput);
  EXPECT_THROW(sds::load_sds_file("/nonexistent/sds.json"), sds::InvalidInput);
}
