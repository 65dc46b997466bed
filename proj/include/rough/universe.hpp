#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rough/subset.hpp"

namespace rough {

/// Ordered finite carrier. Element i carries label `labels()[i]`; all set
/// iteration and tie-breaking in the library follow this index order.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> labels);

  /// Universe {"0", "1", ..., "n-1"}.
  static Universe numbered(std::size_t n);
  /// Universe {"a", "b", ...}; n <= 26.
  static Universe lettered(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  bool contains(std::string_view label) const;
  /// Index of `label`; throws Error(UnknownElement).
  std::size_t index(std::string_view label) const;

  Subset full() const { return Subset::full(size()); }
  Subset complement(Subset s) const { return s.complement(size()); }

  /// Builds a subset from labels; throws Error(UnknownElement).
  Subset subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Subset s) const;

  /// Compact rendering: concatenated labels when every label is a single
  /// character ("abc"), otherwise "{x,y}". The empty set renders as "∅".
  std::string format(Subset s) const;

  /// Sub-universe on the members of `s`, keeping their relative order.
  Universe sub(Subset s) const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  bool single_char_ = true;
};

}  // namespace rough
