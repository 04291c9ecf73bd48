#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partdist/measures.hpp"
#include "partdist/partition.hpp"

namespace partdist {

enum class PropertyId {
  ANTISYMMETRY,
  F_MAXIMALITY,
  F_MONOTONE,
  F_CONVEX,
  MOD_MAX,
  BOTTOP_MAX,
  CO_MAX,
  SUPERMODULAR,
  SUBMODULAR,
  MODULAR,
};

inline constexpr std::array<PropertyId, 10> kAllProperties = {
    PropertyId::ANTISYMMETRY, PropertyId::F_MAXIMALITY, PropertyId::F_MONOTONE, PropertyId::F_CONVEX,
    PropertyId::MOD_MAX,      PropertyId::BOTTOP_MAX,   PropertyId::CO_MAX,     PropertyId::SUPERMODULAR,
    PropertyId::SUBMODULAR,   PropertyId::MODULAR};

std::string_view property_name(PropertyId id) noexcept;
/// Case-insensitive; throws ValidationError.
PropertyId parse_property(std::string_view name);

struct PartitionPair {
  Partition first;
  Partition second;

  bool operator==(const PartitionPair&) const = default;
};

/// Outcome of one exhaustive property check.
///
/// A failing verdict always carries a counterexample. Holding verdicts carry a
/// maximizing pair for the maximality properties and the first strict pair for
/// super/sub-modularity, when one exists.
struct Verdict {
  MeasureId measure = MeasureId::PD;
  PropertyId property = PropertyId::ANTISYMMETRY;
  int n = 0;
  bool holds = true;
  std::optional<PartitionPair> witness;
  std::optional<long long> observed_max;
  /// Maxima at n, n+1, ... used by F_MONOTONE and F_CONVEX.
  std::vector<long long> profile;
};

/// Closed-form maximum where one is known (PD and RB: n-1; SB and IH: C(n,2)).
std::optional<long long> reference_max(MeasureId id, int n);

enum class Expectation { HOLDS, FAILS, UNSPECIFIED };

/// Built-in table of what the literature asserts for each measure and property.
/// Failures are asserted from n = 5 on, where the known counterexample
/// constructions are realizable; holding properties are asserted for all n.
Expectation paper_expectation(MeasureId id, PropertyId property, int n) noexcept;

/// Largest n accepted for exhaustive pair scans by default; Bell(8)^2 / 2 is
/// about 8.6 million pairs.
inline constexpr int kDefaultPairScanLimit = 8;

struct ClassifierOptions {
  int limit = kDefaultPairScanLimit;
  /// Worker threads for pair scans; results do not depend on this.
  unsigned jobs = 1;
};

/// Exhaustive checker with per-n memoization of pair scans.
class Classifier {
 public:
  explicit Classifier(ClassifierOptions options = {});
  ~Classifier();
  Classifier(const Classifier&) = delete;
  Classifier& operator=(const Classifier&) = delete;

  /// Exact maxima for n = first..last.
  std::vector<long long> max_profile(MeasureId id, int first, int last);
  Verdict check(MeasureId id, PropertyId property, int n);
  std::vector<Verdict> classify(int n, std::span<const MeasureId> measures);

 private:
  struct Profile;
  struct Scan;
  const Profile& profile(int n);
  const Scan& scan(int n);

  ClassifierOptions options_;
  std::map<int, std::unique_ptr<Profile>> profiles_;
  std::map<int, std::unique_ptr<Scan>> scans_;
};

std::vector<long long> max_profile(MeasureId id, int first, int last);
Verdict check(MeasureId id, PropertyId property, int n);

struct ClassificationReport {
  int n = 0;
  std::vector<MeasureId> measures;
  /// Row-major: measures x kAllProperties.
  std::vector<Verdict> verdicts;

  const Verdict& at(MeasureId id, PropertyId property) const;
};

ClassificationReport classify_all(int n, std::span<const MeasureId> measures = kAllMeasures,
                                  ClassifierOptions options = {});

/// Verdicts whose outcome disagrees with paper_expectation.
std::vector<Verdict> contradictions(const ClassificationReport& report);

std::string render_text(const ClassificationReport& report);
std::string render_json(const ClassificationReport& report);

/// Re-evaluates a failing verdict's witness against the property definition.
/// Returns true when the witness really violates the property.
bool witness_confirms_failure(const Verdict& verdict);

}  // namespace partdist
