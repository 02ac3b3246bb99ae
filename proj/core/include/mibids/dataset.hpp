#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mibids/errors.hpp"

namespace mibids {

// ---------------------------------------------------------------------------
// Traffic classes
// ---------------------------------------------------------------------------

/// The eight traffic classes, in canonical declaration order. This order is
/// load-bearing: prediction ties break by it and reports list classes in it.
enum class TrafficClass : int {
  Normal = 0,
  TcpSyn,
  UdpFlood,
  IcmpEcho,
  HttpFlood,
  Slowloris,
  Slowpost,
  BruteForce,
};

inline constexpr int kNumClasses = 8;
inline constexpr int kNumFeatures = 34;

std::string_view class_name(TrafficClass c);

/// Case-insensitive match after trimming; nullopt for anything outside the
/// closed set of eight labels.
std::optional<TrafficClass> parse_class(std::string_view label);

/// All eight classes in declaration order.
std::span<const TrafficClass> all_classes();

// ---------------------------------------------------------------------------
// Feature schema
// ---------------------------------------------------------------------------

/// Canonical name of a feature id in 1..34. Throws UnknownFeature otherwise.
std::string_view feature_name(int id);

/// Inverse of feature_name (exact match); nullopt for unknown names.
std::optional<int> feature_index(std::string_view name);

enum class MibGroup { IF, TCP, UDP, IP, ICMP };

std::string_view group_name(MibGroup g);
std::optional<MibGroup> parse_group(std::string_view name);

// ---------------------------------------------------------------------------
// Feature subsets
// ---------------------------------------------------------------------------

/// A set of feature ids plus a provenance label ("infogain-top10",
/// "gs-bayes", ...). Ids are kept sorted ascending and unique.
struct FeatureSubset {
  std::vector<int> ids;
  std::string provenance;

  FeatureSubset() = default;
  FeatureSubset(std::vector<int> ids_, std::string provenance_);

  std::size_t size() const { return ids.size(); }
  bool contains(int id) const;

  /// 64-bit membership mask (ids are <= 34); used as a cache key.
  std::uint64_t bitmask() const;

  bool operator==(const FeatureSubset& other) const { return ids == other.ids; }
};

/// Member set of a canonical MIB group: IF={1..8}, TCP={9..16}, UDP={17..20},
/// IP={21..28}, ICMP={29..34}. The groups partition 1..34.
FeatureSubset group_features(MibGroup g);

/// Same, from a group name; throws UnknownGroup.
FeatureSubset group_features(std::string_view name);

/// Parse a subset literal like "{3,6,7,8}". Whitespace is tolerated; ids must
/// be in 1..34, non-empty, without duplicates.
FeatureSubset parse_subset_literal(std::string_view text, std::string provenance = "literal");

/// Format as "{3,6,7,8}" (ascending).
std::string format_subset_literal(const FeatureSubset& subset);

/// The identity subset {1..34}.
FeatureSubset full_subset();

// ---------------------------------------------------------------------------
// Records and datasets
// ---------------------------------------------------------------------------

/// One sampled observation: counter values (non-negative, finite) + label.
struct MibRecord {
  std::vector<double> features;
  TrafficClass label = TrafficClass::Normal;
};

/// Immutable ordered collection of records sharing one schema.
///
/// The schema is a list of canonical feature ids; a freshly loaded or
/// synthesized dataset carries all 34, a projected one a subset. Values are
/// stored row-major. Safe for concurrent reads.
class Dataset {
public:
  /// Validating constructor; values is row-major with one row per label.
  /// Throws on shape mismatch, non-finite or negative values.
  static Dataset from_rows(std::vector<int> feature_ids, std::vector<double> values,
                           std::vector<TrafficClass> labels, std::string source);

  std::size_t rows() const { return labels_.size(); }
  std::size_t cols() const { return feature_ids_.size(); }

  double at(std::size_t row, std::size_t col) const { return values_[row * cols() + col]; }
  std::span<const double> row(std::size_t r) const {
    return {values_.data() + r * cols(), cols()};
  }
  TrafficClass label(std::size_t r) const { return labels_[r]; }

  const std::vector<int>& feature_ids() const { return feature_ids_; }
  const std::vector<TrafficClass>& labels() const { return labels_; }
  const std::vector<double>& values() const { return values_; }

  /// Position of a canonical feature id in this schema, or nullopt.
  std::optional<std::size_t> column_of(int feature_id) const;

  /// Per-class record counts, indexed by TrafficClass declaration order.
  const std::array<std::size_t, kNumClasses>& census() const { return census_; }

  /// Number of distinct classes present.
  int classes_present() const;

  /// Provenance tag (file path or synth seed+config).
  const std::string& source() const { return source_; }

  /// Content equality: schema, values and labels (source excluded).
  bool operator==(const Dataset& other) const {
    return feature_ids_ == other.feature_ids_ && values_ == other.values_ &&
           labels_ == other.labels_;
  }

private:
  Dataset() = default;

  std::vector<int> feature_ids_;
  std::vector<double> values_;  // row-major, rows() x cols()
  std::vector<TrafficClass> labels_;
  std::array<std::size_t, kNumClasses> census_{};
  std::string source_;
};

/// Load a dataset from the canonical CSV (34 feature columns + class).
/// Throws MissingColumn, UnknownClass, NonNumeric, NegativeCounter,
/// EmptyDataset, IoError.
Dataset load_csv(const std::string& path);

/// Write the canonical CSV. Numeric text is shortest-round-trip, so
/// load_csv(save_csv(ds)) reproduces ds bit-exactly.
void save_csv(const Dataset& ds, const std::string& path);

/// Keep only the subset's columns (ascending by id); record count, order and
/// labels unchanged. Throws EmptySubset, UnknownFeature.
Dataset project(const Dataset& ds, const FeatureSubset& subset);

}  // namespace mibids
