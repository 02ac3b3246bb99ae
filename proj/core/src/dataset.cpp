#include "mibids/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace mibids {

namespace {

constexpr std::array<std::string_view, kNumClasses> kClassNames = {
    "Normal",    "TCP-SYN",  "UDPflood", "ICMP-ECHO",
    "HTTPflood", "Slowloris", "Slowpost", "BruteForce",
};

constexpr std::array<TrafficClass, kNumClasses> kAllClasses = {
    TrafficClass::Normal,    TrafficClass::TcpSyn,    TrafficClass::UdpFlood,
    TrafficClass::IcmpEcho,  TrafficClass::HttpFlood, TrafficClass::Slowloris,
    TrafficClass::Slowpost,  TrafficClass::BruteForce,
};

// Canonical 34-variable MIB schema, 1-based ids.
constexpr std::array<std::string_view, kNumFeatures> kFeatureNames = {
    "ifInOctets",          // 1
    "ifOutOctets",         // 2
    "ifOutDiscards",       // 3
    "ifInUcastPkts",       // 4
    "ifInNUcastPkts",      // 5
    "ifInDiscards",        // 6
    "ifOutUcastPkts",      // 7
    "ifOutNUcastPkts",     // 8
    "tcpOutRsts",          // 9
    "tcpInSegs",           // 10
    "tcpOutSegs",          // 11
    "tcpPassiveOpens",     // 12
    "tcpRetransSegs",      // 13
    "tcpCurrEstab",        // 14
    "tcpEstabResets",      // 15
    "tcpActiveOpens",      // 16
    "udpInDatagrams",      // 17
    "udpOutDatagrams",     // 18
    "udpInErrors",         // 19
    "udpNoPorts",          // 20
    "ipInReceives",        // 21
    "ipInDelivers",        // 22
    "ipOutRequests",       // 23
    "ipOutDiscards",       // 24
    "ipInDiscards",        // 25
    "ipForwDatagrams",     // 26
    "ipOutNoRoutes",       // 27
    "ipInAddrErrors",      // 28
    "icmpInMsgs",          // 29
    "icmpInDestUnreachs",  // 30
    "icmpOutMsgs",         // 31
    "icmpOutDestUnreachs", // 32
    "icmpInEchos",         // 33
    "icmpOutEchoReps",     // 34
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

/// Shortest text that parses back to exactly the same double.
void append_double(std::string& out, double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, p);
}

}  // namespace

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::MissingColumn: return "MissingColumn";
    case Errc::UnknownClass: return "UnknownClass";
    case Errc::NonNumeric: return "NonNumeric";
    case Errc::NegativeCounter: return "NegativeCounter";
    case Errc::EmptyDataset: return "EmptyDataset";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::UnknownFeature: return "UnknownFeature";
    case Errc::UnknownGroup: return "UnknownGroup";
    case Errc::BinCountTooSmall: return "BinCountTooSmall";
    case Errc::InvalidCount: return "InvalidCount";
    case Errc::SingleClass: return "SingleClass";
    case Errc::NOutOfRange: return "NOutOfRange";
    case Errc::InvalidGaConfig: return "InvalidGaConfig";
    case Errc::ThresholdOutOfRange: return "ThresholdOutOfRange";
    case Errc::UnknownPreset: return "UnknownPreset";
    case Errc::InvalidSmoothing: return "InvalidSmoothing";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::EmptyMatrix: return "EmptyMatrix";
    case Errc::KOutOfRange: return "KOutOfRange";
    case Errc::UnknownMethod: return "UnknownMethod";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::IoError: return "IoError";
    case Errc::BadModelFile: return "BadModelFile";
  }
  return "UnknownError";
}

std::string_view class_name(TrafficClass c) {
  return kClassNames[static_cast<int>(c)];
}

std::optional<TrafficClass> parse_class(std::string_view label) {
  const std::string_view t = trim(label);
  for (int i = 0; i < kNumClasses; ++i) {
    if (iequals(t, kClassNames[i])) return kAllClasses[i];
  }
  return std::nullopt;
}

std::span<const TrafficClass> all_classes() { return kAllClasses; }

std::string_view feature_name(int id) {
  if (id < 1 || id > kNumFeatures)
    fail(Errc::UnknownFeature, "feature id " + std::to_string(id) + " outside 1..34");
  return kFeatureNames[id - 1];
}

std::optional<int> feature_index(std::string_view name) {
  for (int i = 0; i < kNumFeatures; ++i) {
    if (name == kFeatureNames[i]) return i + 1;
  }
  return std::nullopt;
}

std::string_view group_name(MibGroup g) {
  switch (g) {
    case MibGroup::IF: return "IF";
    case MibGroup::TCP: return "TCP";
    case MibGroup::UDP: return "UDP";
    case MibGroup::IP: return "IP";
    case MibGroup::ICMP: return "ICMP";
  }
  return "?";
}

std::optional<MibGroup> parse_group(std::string_view name) {
  const std::string_view t = trim(name);
  if (iequals(t, "IF")) return MibGroup::IF;
  if (iequals(t, "TCP")) return MibGroup::TCP;
  if (iequals(t, "UDP")) return MibGroup::UDP;
  if (iequals(t, "IP")) return MibGroup::IP;
  if (iequals(t, "ICMP")) return MibGroup::ICMP;
  return std::nullopt;
}

FeatureSubset::FeatureSubset(std::vector<int> ids_, std::string provenance_)
    : ids(std::move(ids_)), provenance(std::move(provenance_)) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int id : ids) {
    if (id < 1 || id > kNumFeatures)
      fail(Errc::UnknownFeature, "feature id " + std::to_string(id) + " outside 1..34");
  }
}

bool FeatureSubset::contains(int id) const {
  return std::binary_search(ids.begin(), ids.end(), id);
}

std::uint64_t FeatureSubset::bitmask() const {
  std::uint64_t mask = 0;
  for (int id : ids) mask |= (1ULL << (id - 1));
  return mask;
}

FeatureSubset group_features(MibGroup g) {
  auto range = [](int lo, int hi) {
    std::vector<int> ids;
    for (int i = lo; i <= hi; ++i) ids.push_back(i);
    return ids;
  };
  switch (g) {
    case MibGroup::IF: return {range(1, 8), "group-IF"};
    case MibGroup::TCP: return {range(9, 16), "group-TCP"};
    case MibGroup::UDP: return {range(17, 20), "group-UDP"};
    case MibGroup::IP: return {range(21, 28), "group-IP"};
    case MibGroup::ICMP: return {range(29, 34), "group-ICMP"};
  }
  fail(Errc::UnknownGroup, "invalid group");
}

FeatureSubset group_features(std::string_view name) {
  const auto g = parse_group(name);
  if (!g) fail(Errc::UnknownGroup, "unknown MIB group '" + std::string(name) + "'");
  return group_features(*g);
}

FeatureSubset parse_subset_literal(std::string_view text, std::string provenance) {
  std::string_view t = trim(text);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    fail(Errc::InvalidConfig, "subset literal must look like {3,6,7}: got '" + std::string(text) + "'");
  t = t.substr(1, t.size() - 2);
  std::vector<int> ids;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= t.size(); ++i) {
    if (i == t.size() || t[i] == ',') {
      const std::string_view tok = trim(t.substr(start, i - start));
      start = i + 1;
      if (tok.empty()) {
        if (i == t.size() && ids.empty()) break;  // "{}"
        fail(Errc::InvalidConfig, "empty element in subset literal");
      }
      int v = 0;
      const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size())
        fail(Errc::InvalidConfig, "bad feature id '" + std::string(tok) + "' in subset literal");
      ids.push_back(v);
    }
  }
  if (ids.empty()) fail(Errc::EmptySubset, "subset literal is empty");
  const std::size_t before = ids.size();
  FeatureSubset s(std::move(ids), std::move(provenance));
  if (s.ids.size() != before) fail(Errc::InvalidConfig, "duplicate feature id in subset literal");
  return s;
}

std::string format_subset_literal(const FeatureSubset& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(subset.ids[i]);
  }
  out += '}';
  return out;
}

FeatureSubset full_subset() {
  std::vector<int> ids(kNumFeatures);
  for (int i = 0; i < kNumFeatures; ++i) ids[i] = i + 1;
  return {std::move(ids), "all-34"};
}

Dataset Dataset::from_rows(std::vector<int> feature_ids, std::vector<double> values,
                           std::vector<TrafficClass> labels, std::string source) {
  Dataset ds;
  for (int id : feature_ids) {
    if (id < 1 || id > kNumFeatures)
      fail(Errc::UnknownFeature, "feature id " + std::to_string(id) + " outside 1..34");
  }
  if (labels.empty()) fail(Errc::EmptyDataset, "dataset has no records (" + source + ")");
  if (feature_ids.empty()) fail(Errc::EmptySubset, "dataset schema has no features");
  if (values.size() != labels.size() * feature_ids.size())
    fail(Errc::LengthMismatch, "value matrix does not match rows x cols");
  for (double v : values) {
    if (!std::isfinite(v)) fail(Errc::NonNumeric, "non-finite counter value");
    if (v < 0.0) fail(Errc::NegativeCounter, "negative counter value");
  }
  ds.feature_ids_ = std::move(feature_ids);
  ds.values_ = std::move(values);
  ds.labels_ = std::move(labels);
  ds.source_ = std::move(source);
  for (TrafficClass c : ds.labels_) ++ds.census_[static_cast<int>(c)];
  return ds;
}

std::optional<std::size_t> Dataset::column_of(int feature_id) const {
  const auto it = std::find(feature_ids_.begin(), feature_ids_.end(), feature_id);
  if (it == feature_ids_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - feature_ids_.begin());
}

int Dataset::classes_present() const {
  int n = 0;
  for (std::size_t c : census_)
    if (c > 0) ++n;
  return n;
}

Dataset load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open '" + path + "'");

  std::string line;
  if (!std::getline(in, line)) fail(Errc::EmptyDataset, "'" + path + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const auto header = split_csv_line(line);

  // Resolve each column against the canonical schema; all 34 features and the
  // class column must be present exactly once (order is not significant).
  std::vector<int> col_feature(header.size(), 0);  // 1..34, or -1 for class
  std::array<bool, kNumFeatures> seen{};
  bool seen_class = false;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string_view name = trim(header[i]);
    if (iequals(name, "class")) {
      if (seen_class) fail(Errc::MissingColumn, "duplicate 'class' column");
      seen_class = true;
      col_feature[i] = -1;
      continue;
    }
    const auto id = feature_index(name);
    if (!id) fail(Errc::MissingColumn, "unrecognized column '" + std::string(name) + "'");
    if (seen[*id - 1]) fail(Errc::MissingColumn, "duplicate column '" + std::string(name) + "'");
    seen[*id - 1] = true;
    col_feature[i] = *id;
  }
  for (int f = 0; f < kNumFeatures; ++f) {
    if (!seen[f])
      fail(Errc::MissingColumn, "missing column '" + std::string(kFeatureNames[f]) + "'");
  }
  if (!seen_class) fail(Errc::MissingColumn, "missing column 'class'");

  std::vector<double> values;
  std::vector<TrafficClass> labels;
  std::size_t row_no = 1;  // header is row 1
  while (std::getline(in, line)) {
    ++row_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size())
      fail(Errc::LengthMismatch, "row " + std::to_string(row_no) + " has " +
                                     std::to_string(fields.size()) + " fields, expected " +
                                     std::to_string(header.size()));
    std::array<double, kNumFeatures> rowvals{};
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const std::string_view cell = trim(fields[i]);
      if (col_feature[i] == -1) {
        const auto cls = parse_class(cell);
        if (!cls)
          fail(Errc::UnknownClass,
               "row " + std::to_string(row_no) + ": unknown class '" + std::string(cell) + "'");
        labels.push_back(*cls);
        continue;
      }
      double v = 0.0;
      const auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || p != cell.data() + cell.size() || !std::isfinite(v))
        fail(Errc::NonNumeric, "row " + std::to_string(row_no) + ", column '" +
                                   std::string(trim(header[i])) + "': '" + std::string(cell) + "'");
      if (v < 0.0)
        fail(Errc::NegativeCounter, "row " + std::to_string(row_no) + ", column '" +
                                        std::string(trim(header[i])) + "': " + std::string(cell));
      rowvals[col_feature[i] - 1] = v;
    }
    values.insert(values.end(), rowvals.begin(), rowvals.end());
  }
  if (labels.empty()) fail(Errc::EmptyDataset, "'" + path + "' contains a header but no rows");

  std::vector<int> ids(kNumFeatures);
  for (int i = 0; i < kNumFeatures; ++i) ids[i] = i + 1;
  return Dataset::from_rows(std::move(ids), std::move(values), std::move(labels), path);
}

void save_csv(const Dataset& ds, const std::string& path) {
  std::string out;
  out.reserve(ds.rows() * ds.cols() * 8);
  for (std::size_t c = 0; c < ds.cols(); ++c) {
    if (c) out += ',';
    out += feature_name(ds.feature_ids()[c]);
  }
  out += ",class\n";
  for (std::size_t r = 0; r < ds.rows(); ++r) {
    for (std::size_t c = 0; c < ds.cols(); ++c) {
      if (c) out += ',';
      append_double(out, ds.at(r, c));
    }
    out += ',';
    out += class_name(ds.label(r));
    out += '\n';
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) fail(Errc::IoError, "cannot write '" + path + "'");
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) fail(Errc::IoError, "short write to '" + path + "'");
}

Dataset project(const Dataset& ds, const FeatureSubset& subset) {
  if (subset.ids.empty()) fail(Errc::EmptySubset, "cannot project onto an empty subset");
  std::vector<std::size_t> cols;
  cols.reserve(subset.ids.size());
  for (int id : subset.ids) {  // ids are sorted ascending already
    const auto col = ds.column_of(id);
    if (!col)
      fail(Errc::UnknownFeature,
           "feature " + std::to_string(id) + " not present in dataset schema");
    cols.push_back(*col);
  }
  std::vector<double> values;
  values.reserve(ds.rows() * cols.size());
  for (std::size_t r = 0; r < ds.rows(); ++r) {
    const auto row = ds.row(r);
    for (std::size_t c : cols) values.push_back(row[c]);
  }
  return Dataset::from_rows(subset.ids, std::move(values), ds.labels(), ds.source());
}

}  // namespace mibids
