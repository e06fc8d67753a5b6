#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "rp3/canon.hpp"
#include "rp3/families.hpp"
#include "rp3/linkage.hpp"
#include "rp3/patterns.hpp"

namespace rp3 {

/// Keys keep insertion order so reports are byte-stable.
using Json = nlohmann::ordered_json;

struct ReportOptions {
  /// Wall time and worker count; leave off when comparing runs.
  bool timing = true;
  /// When set, every assignment's evidence is spelled out.
  const Engine* evidence_from = nullptr;
};

std::string dump(const Json& j);

Json graph_json(const Graph& g);
Json certificate_json(const Certificate& cert, const ReportOptions& options = {});
Json minimality_json(const MinimalityReport& report);
Json census_json(const Census& census);
Json orbits_json(const Graph& g, const OrbitTable& table);
Json family_json(const PetersenFamily& family);
Json catalog_json(const Catalog& catalog);
Json therefore_json(const ThereforeFamily& tf);
Json reconciliation_json(const Reconciliation& r);

struct CatalogBundle {
  Catalog k0;
  Catalog k1;
  Catalog k2;
  ThereforeFamily therefore;
  Reconciliation totals;
};

CatalogBundle build_all_catalogs(const PetersenFamily& family, int jobs = 1);

/// Manifest over the selected parts of a bundle; `parts` holds any of
/// "0", "1", "2", "deltawye".
Json manifest_json(const CatalogBundle& bundle, const std::vector<std::string>& parts);

/// One edge-list file per entry, named by canonical code, plus manifest.json.
void write_catalog_directory(const std::filesystem::path& dir, const CatalogBundle& bundle,
                             const std::vector<std::string>& parts);

}  // namespace rp3
