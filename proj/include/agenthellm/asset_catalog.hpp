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


#ifndef AGENTHELLM__ASSET_CATALOG_HPP
#define AGENTHELLM__ASSET_CATALOG_HPP

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace agenthellm {

/// A human-centric asset class that victim actors can be tagged with.
struct AssetCategory
{
  std::string id;
  std::string name;
  std::vector<int> udhr_articles;
  int severity_rank = 0; // 1 = most severe
  std::string example_scenario;
  std::string example_attack;

  bool operator==(const AssetCategory&) const = default;
};

class CatalogError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// An ordered set of asset categories, most severe first.
class AssetCatalog
{
public:
  /// Throws CatalogError unless ids are unique and non-empty, article lists
  /// are positive, and severity ranks form a permutation of 1..N.
  explicit AssetCatalog(std::vector<AssetCategory> categories);

  /// The seven compiled-in categories.
  static const AssetCatalog& builtin();

  std::span<const AssetCategory> categories() const noexcept { return _categories; }
  std::size_t size() const noexcept { return _categories.size(); }

  /// nullptr when not found.
  const AssetCategory* lookup(std::string_view id) const noexcept;

  bool operator==(const AssetCatalog&) const = default;

private:
  std::vector<AssetCategory> _categories;
};

/// Exactly the builtin rows in severity order.
const std::vector<AssetCategory>& builtin_catalog();

/// Environment variable naming an optional catalog override file.
inline constexpr const char* kCatalogEnvVar = "AGENTHELLM_CATALOG";

/// Parses a JSON array of category records. Throws CatalogError.
AssetCatalog parse_catalog(std::string_view text);
AssetCatalog load_catalog_file(const std::filesystem::path& path);

/// Builtin catalog unless AGENTHELLM_CATALOG names a file, which is loaded.
AssetCatalog catalog_from_environment();

/// Deterministic JSON array text (2-space indent, trailing newline).
std::string serialize_catalog(const AssetCatalog& catalog);

} // namespace agenthellm

#endif // AGENTHELLM__ASSET_CATALOG_HPP
