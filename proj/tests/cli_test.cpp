// Copyright 2026 The sft Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sft/cli.hpp"
#include "sft/conjugacy.hpp"
#include "sft/corpus.hpp"
#include "sft/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace sft {
namespace {

std::string data(const std::string& name) {
  return std::string(SFT_TEST_DATA_DIR) + "/" + name;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(ParseMatrix, Examples) {
  EXPECT_EQ(parse_matrix("1 1\n2\n"), (IntMatrix{{2}}));
  EXPECT_EQ(parse_matrix("2 2\n1 1\n1 1\n"), (IntMatrix{{1, 1}, {1, 1}}));
  try {
    parse_matrix("2 2\n1\n");
    FAIL() << "expected a FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("wrong entry count"), std::string::npos);
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseMatrix, CommentsAndBigEntries) {
  const IntMatrix m = parse_matrix("# a comment\n\n1 2\n-3 123456789012345678901234567890\n");
  EXPECT_EQ(m(0, 0), -3);
  EXPECT_EQ(m(0, 1).str(), "123456789012345678901234567890");
  EXPECT_EQ(parse_matrix(format_matrix(m)), m);
}

TEST(ParseMatrix, ErrorsCarryPosition) {
  try {
    parse_matrix("1 2\n3 x\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse_matrix("3\n"), FormatError);
  EXPECT_THROW(parse_matrix("1 1\n1\n2\n"), FormatError);
  EXPECT_THROW(parse_matrix(""), FormatError);
}

TEST(Json, CertificateRoundTrip) {
  const SeCertificate c = ak_bk_certificate(3, 3);
  const SeCertificate back = certificate_from_json(parse_json(to_json(c).dump()));
  EXPECT_EQ(back.a, c.a);
  EXPECT_EQ(back.r, c.r);
  EXPECT_EQ(back.s, c.s);
  EXPECT_EQ(back.lag, c.lag);
}

TEST(Json, HugeIntegersBecomeStrings) {
  const Integer big = mat_pow(IntMatrix{{2}}, 100)(0, 0);
  const Json j = to_json(big);
  ASSERT_TRUE(j.is_string());
  EXPECT_EQ(integer_from_json(j), big);
}

TEST(Cli, AmalgRourkeSquare) {
  const CliRun r = run({"amalg", data("rourke_B2.mat"), "--json"});
  ASSERT_EQ(r.code, kExitYes) << r.err;
  const Json j = parse_json(r.out);
  const IntMatrix total = matrix_from_json(j["total"]);
  EXPECT_TRUE(permutation_equivalent(total, read_matrix_file(data("rourke_A2.mat"))));
  EXPECT_TRUE(j["sequence"]["steps"].is_array());
}

TEST(Cli, HigherPowersBrixCarlsen) {
  const CliRun r = run({"higher-powers", data("brix_carlsen_A.mat"), data("brix_carlsen_B.mat")});
  EXPECT_EQ(r.code, kExitNo);
  EXPECT_FALSE(parse_json(r.out)["agree"].get<bool>());
}

TEST(Cli, UnitalAshley) {
  const CliRun r = run({"unital-se", data("ashley.json"), "--json"});
  EXPECT_EQ(r.code, kExitYes);
  EXPECT_EQ(r.out, "{\"outcome\":\"yes\",\"m\":0,\"k\":7}\n");
}

TEST(Cli, UnitalNo) {
  EXPECT_EQ(run({"unital-se", data("z_half_A_to_C.json")}).code, kExitNo);
}

TEST(Cli, VerifySe) {
  EXPECT_EQ(run({"verify-se", data("ak_bk_3.json")}).code, kExitYes);
  EXPECT_EQ(run({"verify-se", data("ak_bk_3_wrong_lag.json")}).code, kExitNo);
  EXPECT_EQ(run({"verify-se", data("ak_bk_3_wrong_lag.json"), "--lag", "7"}).code, kExitYes);
}

TEST(Cli, Balanced) {
  const CliRun r = run({"balanced", data("rourke_Bp.mat"), data("rourke_Bpp.mat"),
                     data("rourke_S1p.mat"), data("rourke_R1p.mat"), data("rourke_R1pp.mat")});
  EXPECT_EQ(r.code, kExitYes);
  EXPECT_TRUE(parse_json(r.out)["witness_0_1"].get<bool>());
}

TEST(Cli, InvariantComparisons) {
  EXPECT_EQ(run({"bf", data("two.mat")}).code, kExitYes);
  EXPECT_EQ(run({"charpoly", data("bff_A1.mat")}).code, kExitYes);
  EXPECT_EQ(run({"conjugate", data("full_2x2.mat"), data("two.mat")}).code, kExitYes);
  EXPECT_EQ(run({"conjugate", data("bff_A1.mat"), data("four.mat")}).code, kExitNo);
}

TEST(Cli, SearchPath) {
  EXPECT_EQ(run({"search-path", data("full_2x2.mat"), data("two.mat")}).code, kExitYes);
  const CliRun r = run({"search-path", data("two.mat"), data("four.mat"), "--max-size", "1"});
  EXPECT_EQ(r.code, kExitInconclusive);
  EXPECT_EQ(parse_json(r.out)["outcome"], "inconclusive");
}

TEST(Cli, CanonicalForm) {
  EXPECT_EQ(run({"canonical-form", data("two.mat")}).code, kExitNo);
}

TEST(Cli, CorpusListing) {
  const CliRun r = run({"corpus", "ashley", "--json"});
  ASSERT_EQ(r.code, kExitYes);
  EXPECT_EQ(parse_json(r.out)["entries"].size(), 1u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"no-such-command"}).code, kExitUsage);
  EXPECT_EQ(run({"bf"}).code, kExitUsage);
  EXPECT_EQ(run({"unital-se", data("ashley.json"), "--k-max", "many"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitYes);
}

TEST(Cli, DataErrors) {
  const CliRun r = run({"bf", data("bad_count.mat")});
  EXPECT_EQ(r.code, kExitDataFormat);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"bf", data("missing.mat")}).code, kExitDataFormat);
  EXPECT_EQ(run({"verify-se", data("two.mat")}).code, kExitDataFormat);
  EXPECT_EQ(run({"conjugate", data("two.mat"), data("ashley.json")}).code, kExitDataFormat);
}

}  // namespace
}  // namespace sft
