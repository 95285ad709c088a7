/*
 * Copyright (C) 2026 The agenthellm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
*/


#include "support/fixtures.hpp"

#include <agenthellm/asset_catalog.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

using namespace agenthellm;
using namespace agenthellm::testing;

TEST(BuiltinCatalog, FirstRow)
{
  const auto& c = builtin_catalog();
  ASSERT_EQ(c.size(), 7u);
  EXPECT_EQ(c[0].name, "Life and Bodily Health");
  EXPECT_EQ(c[0].udhr_articles, (std::vector<int>{3, 5, 25}));
  EXPECT_EQ(c[2].udhr_articles, (std::vector<int>{12}));
}

TEST(BuiltinCatalog, SeverityRanksArePermutation)
{
  const auto& c = builtin_catalog();
  for (std::size_t i = 0; i < c.size(); ++i)
    EXPECT_EQ(c[i].severity_rank, static_cast<int>(i) + 1);
}

TEST(BuiltinCatalog, StableAcrossCalls)
{
  EXPECT_EQ(builtin_catalog(), builtin_catalog());
  EXPECT_EQ(&builtin_catalog(), &builtin_catalog());
}

TEST(BuiltinCatalog, SlugsAreLowercaseHyphenated)
{
  for (const auto& c : builtin_catalog())
  {
    for (const char ch : c.id)
      EXPECT_TRUE((ch >= 'a' && ch <= 'z') || ch == '-') << c.id;
  }
  EXPECT_EQ(builtin_catalog()[3].id, "knowledge-thought-and-belief");
}

TEST(Lookup, FindsRows)
{
  const auto& catalog = AssetCatalog::builtin();
  const auto* privacy = catalog.lookup("privacy-and-personal-data");
  ASSERT_NE(privacy, nullptr);
  EXPECT_EQ(privacy->name, "Privacy and Personal Data");
  EXPECT_EQ(catalog.lookup(""), nullptr);
  EXPECT_EQ(catalog.lookup("life-and-bodily-health")->severity_rank, 1);
}

TEST(ParseCatalog, RoundTripsBuiltin)
{
  const auto text = serialize_catalog(AssetCatalog::builtin());
  EXPECT_EQ(parse_catalog(text), AssetCatalog::builtin());
}

TEST(ParseCatalog, RejectsBadData)
{
  const auto row = [](const std::string& id, int rank, const std::string& articles = "[1]")
  {
    return R"({"id": ")" + id + R"(", "name": "N", "udhr_articles": )" + articles
        + R"(, "severity_rank": )" + std::to_string(rank)
        + R"(, "example_scenario": "s", "example_attack": "a"})";
  };
  EXPECT_NO_THROW(parse_catalog("[" + row("x", 1) + "]"));
  EXPECT_THROW(parse_catalog("[" + row("x", 1) + "," + row("x", 2) + "]"), CatalogError);
  EXPECT_THROW(parse_catalog("[" + row("x", 2) + "]"), CatalogError);
  EXPECT_THROW(parse_catalog("[" + row("x", 1, "[0]") + "]"), CatalogError);
  EXPECT_THROW(parse_catalog("not json"), CatalogError);
  EXPECT_THROW(parse_catalog(R"([{"id": "x"}])"), CatalogError);
}

TEST(CatalogFromEnvironment, OverrideFile)
{
  const auto path = std::filesystem::temp_directory_path() / "agenthellm_catalog_test.json";
  {
    std::ofstream out(path);
    out << R"([{"id": "uptime", "name": "Service Uptime", "udhr_articles": [23],
               "severity_rank": 1, "example_scenario": "Outage", "example_attack": "Loop"}])";
  }
  ::setenv(kCatalogEnvVar, path.c_str(), 1);
  const auto catalog = catalog_from_environment();
  ::unsetenv(kCatalogEnvVar);
  std::filesystem::remove(path);

  ASSERT_EQ(catalog.size(), 1u);
  EXPECT_EQ(catalog.categories()[0].name, "Service Uptime");
  EXPECT_EQ(catalog_from_environment(), AssetCatalog::builtin());
}
