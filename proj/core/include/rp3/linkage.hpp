#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rp3/canon.hpp"
#include "rp3/families.hpp"
#include "rp3/homology.hpp"
#include "rp3/minor.hpp"

namespace rp3 {

struct RuleSet {
  bool a = true;
  bool b = true;
  bool c = true;

  /// Letters from "ABC" in any order and case; "" and "none" give the empty set.
  static RuleSet parse(const std::string& text);
  std::string text() const;  // "ABC", "AB", ... or "none"
  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

/// Two vertex-disjoint 1-homologous simple cycles.
struct RuleAEvidence {
  std::vector<int> first;
  std::vector<int> second;
};

/// A Petersen family minor whose pullback vanishes on P minus `apex`.
struct RuleBEvidence {
  std::string member;
  MinorModel model;
  int apex = 0;
};

/// A K6 minor whose K4 on the pattern vertices `subset` pulls back to zero.
struct RuleCEvidence {
  MinorModel model;
  std::array<int, 4> subset{};
};

using ForcingEvidence = std::variant<RuleAEvidence, RuleBEvidence, RuleCEvidence>;

char rule_letter(const ForcingEvidence& e);
std::string describe(const ForcingEvidence& e);

/// Re-checks evidence against phi without the engine's tables: cycles are
/// evaluated through edge weights, lifts are rebuilt by walking branch-tree
/// paths, and rule B/C conditions are checked on every simple cycle rather
/// than a basis. Returns the first violated condition, or nullopt.
std::optional<std::string> check_evidence(const HomologyAssignment& phi, const ForcingEvidence& evidence,
                                          const PetersenFamily& family);

struct EngineOptions {
  RuleSet rules;
  int jobs = 1;
  Limits limits;
};

/// Assignment-independent search tables for one host graph: disjoint chordless
/// cycle pairs for rule A, and for rules B and C the distinct subspaces that a
/// minor model and apex (or K4) force to carry a 1-homologous cycle.
class Engine {
 public:
  Engine(const Graph& g, const PetersenFamily& family, const EngineOptions& options = {});

  const Graph& graph() const { return space_->graph(); }
  std::shared_ptr<const CycleSpace> space() const { return space_; }
  const EngineOptions& options() const { return options_; }

  /// Compact evidence: rule letter plus an index into that rule's table.
  struct Ref {
    char rule = 0;  // 0 = unforced
    std::uint32_t index = 0;
    friend bool operator==(const Ref&, const Ref&) = default;
  };

  Ref rule_a(std::uint64_t phi) const;
  Ref rule_b(std::uint64_t phi) const;
  Ref rule_c(std::uint64_t phi) const;
  /// Enabled rules in the order A, C, B.
  Ref force(std::uint64_t phi) const;
  ForcingEvidence materialize(Ref ref) const;

  struct Stats {
    std::size_t cycles = 0;
    std::size_t disjoint_pairs = 0;
    std::map<std::string, std::size_t> models;  // per family member
    std::size_t b_subspaces = 0;
    std::size_t c_subspaces = 0;
  };
  const Stats& stats() const { return stats_; }

 private:
  struct Subspace {
    std::vector<std::uint64_t> rows;  // reduced echelon form
    std::uint32_t model = 0;          // into models_
    int member = -1;
    int apex = -1;
    std::array<int, 4> subset{};
  };

  void build_rule_a();
  void build_rules_bc();
  std::vector<std::uint64_t> lifted_edge_coordinates(const MinorModel& model) const;
  static bool killed(const Subspace& s, std::uint64_t phi);

  std::shared_ptr<const CycleSpace> space_;
  const PetersenFamily& family_;
  EngineOptions options_;
  std::vector<std::vector<int>> cycles_;
  std::vector<std::uint64_t> cycle_coords_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
  std::vector<MinorModel> models_;
  std::vector<Subspace> b_table_;
  std::vector<Subspace> c_table_;
  Stats stats_;
};

enum class Verdict { Certified, Undecided };
std::string to_string(Verdict v);

struct Certificate {
  CanonicalCode code;
  Graph graph;
  RuleSet rules;
  Verdict verdict = Verdict::Undecided;
  int dim = 0;
  std::uint64_t assignments = 0;
  std::map<char, std::uint64_t> counts;  // 'A', 'B', 'C', and 'U' for unforced
  std::vector<Engine::Ref> evidence;     // by assignment index
  std::vector<std::uint64_t> unforced;   // assignment indices
  std::vector<std::string> unforced_serialized;
  Engine::Stats stats;
  double seconds = 0.0;
  int jobs = 1;
};

/// Runs every assignment through the engine in parallel index ranges and
/// merges by index, so the result does not depend on `jobs`. Throws
/// DimensionExceeded.
Certificate certify(const Engine& engine);
Certificate certify(const Graph& g, const PetersenFamily& family, const EngineOptions& options = {});

/// Checks every piece of evidence in a certificate with check_evidence.
/// Returns the number of failures; `first_failure` receives a description.
std::size_t validate_certificate(const Certificate& cert, const Engine& engine, const PetersenFamily& family,
                                 std::string* first_failure = nullptr);

/// Single-assignment forms of the rules.
std::optional<ForcingEvidence> rule_a(const HomologyAssignment& phi);
std::optional<ForcingEvidence> rule_b(const HomologyAssignment& phi, const PetersenFamily& family);
std::optional<ForcingEvidence> rule_c(const HomologyAssignment& phi);

struct MinimalityItem {
  Edge edge;
  int orbit_size = 0;
  std::string operation;  // "delete" or "contract"
  Verdict verdict = Verdict::Undecided;
  std::uint64_t unforced = 0;
  std::uint64_t assignments = 0;
};

struct MinimalityReport {
  CanonicalCode code;
  int edge_orbits = 0;
  std::vector<MinimalityItem> items;
  bool engine_minimal = true;
};

/// Certifies the deletion and the contraction of one edge per edge orbit.
MinimalityReport minimality_scan(const Graph& g, const PetersenFamily& family, const EngineOptions& options = {});

}  // namespace rp3
