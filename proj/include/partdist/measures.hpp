#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "partdist/partition.hpp"

namespace partdist {

enum class MeasureId { PD, SD, RB, RBP, SB, IH };

inline constexpr std::array<MeasureId, 6> kAllMeasures = {
    MeasureId::PD, MeasureId::SD, MeasureId::RB, MeasureId::RBP, MeasureId::SB, MeasureId::IH};

/// Lower-case name as accepted on the command line ("pd", "rbp", ...).
std::string_view measure_name(MeasureId id) noexcept;
/// Upper-case tag used in reports.
std::string_view measure_tag(MeasureId id) noexcept;
/// Case-insensitive. Throws ValidationError on an unknown name.
MeasureId parse_measure(std::string_view name);

/// Non-negative fraction in lowest terms.
struct Rational {
  long long num = 0;
  long long den = 1;

  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

struct DistanceValue {
  long long raw = 0;
  /// raw / (raw + 1), which is 1 - 1/(1 + raw).
  Rational normalized;

  /// "3/4 (0.750000)"; a zero distance renders as "0 (0.000000)".
  std::string normalized_string() const;
};

DistanceValue normalize(long long raw);

/// n minus the heaviest block-to-block matching, weights |B ∩ C|.
long long pd_distance(const Partition& p, const Partition& q);
/// Blocks present in exactly one of the two partitions.
long long delta_sd(const Partition& p, const Partition& q);
/// r(P ∨ Q) - r(P ∧ Q).
long long delta_rb(const Partition& p, const Partition& q);
/// r(P) + r(Q) - 2 r(P ∧ Q).
long long delta_rb_plus(const Partition& p, const Partition& q);
/// s(P ∨ Q) - s(P ∧ Q).
long long delta_sb(const Partition& p, const Partition& q);
/// Pairs of elements grouped together by exactly one of the two partitions.
long long delta_ih(const Partition& p, const Partition& q);

long long raw_distance(MeasureId id, const Partition& p, const Partition& q);
DistanceValue distance(MeasureId id, const Partition& p, const Partition& q);

/// All six raw values, indexed by MeasureId, sharing one contingency table.
std::array<long long, 6> evaluate_all(const Partition& p, const Partition& q);

/// Maximum total weight of a matching in a rows x cols weight table (row-major).
/// Exposed for testing; weights must be non-negative.
long long max_weight_matching(std::size_t rows, std::size_t cols, const std::vector<long long>& weights);

}  // namespace partdist
