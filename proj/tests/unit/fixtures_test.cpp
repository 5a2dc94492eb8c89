#include <doxa/corpus.hpp>
#include <doxa/dsl.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace doxa;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

// The shipped .bps files are the serialized corpus, byte for byte.
TEST(Fixtures, MatchSerializedCorpus) {
  for (auto id : corpus::all_ids()) {
    const auto path = std::string(DOXA_FIXTURE_DIR) + "/" + std::string(corpus::to_string(id)) + ".bps";
    const auto text = slurp(path);
    ASSERT_FALSE(text.empty()) << path;
    EXPECT_EQ(text, dsl::serialize(corpus::make(id))) << path;
    EXPECT_EQ(dsl::parse(text), corpus::make(id)) << path;
    EXPECT_EQ(dsl::serialize(dsl::parse(text)), text) << path;
  }
}
