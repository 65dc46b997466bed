#include "rough/universe.hpp"

#include "rough/error.hpp"

namespace rough {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnknownElement: return "unknown-element";
    case ErrorKind::NotATolerance: return "not-a-tolerance";
    case ErrorKind::NotACovering: return "not-a-covering";
    case ErrorKind::NotInFamily: return "not-in-family";
    case ErrorKind::NotInCarrier: return "not-in-carrier";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::PreconditionFailed: return "precondition-failed";
    case ErrorKind::ConstructionFailed: return "construction-failed";
    case ErrorKind::Mismatch: return "mismatch";
    case ErrorKind::ModeError: return "mode-error";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxUniverse) {
    throw Error(ErrorKind::CapExceeded,
                "universe has " + std::to_string(labels_.size()) + " elements; at most " +
                    std::to_string(kMaxUniverse) + " are supported");
  }
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate element label '" + labels_[i] + "'");
    }
    if (labels_[i].size() != 1) single_char_ = false;
  }
}

Universe Universe::numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Universe(std::move(labels));
}

Universe Universe::lettered(std::size_t n) {
  if (n > 26) throw Error(ErrorKind::InvalidArgument, "lettered universe limited to 26 elements");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return Universe(std::move(labels));
}

bool Universe::contains(std::string_view label) const {
  return index_.count(std::string(label)) != 0;
}

std::size_t Universe::index(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) {
    throw Error(ErrorKind::UnknownElement, "element '" + std::string(label) + "' is not in the universe");
  }
  return it->second;
}

Subset Universe::subset(const std::vector<std::string>& labels) const {
  Subset s;
  for (const auto& l : labels) s.insert(index(l));
  return s;
}

std::vector<std::string> Universe::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (auto i : s) out.push_back(labels_.at(i));
  return out;
}

std::string Universe::format(Subset s) const {
  if (s.empty()) return "∅";
  std::string out;
  if (single_char_) {
    for (auto i : s) out += labels_.at(i);
    return out;
  }
  out = "{";
  bool first = true;
  for (auto i : s) {
    if (!first) out += ",";
    out += labels_.at(i);
    first = false;
  }
  return out + "}";
}

Universe Universe::sub(Subset s) const {
  std::vector<std::string> labels;
  for (auto i : s) labels.push_back(labels_.at(i));
  return Universe(std::move(labels));
}

}  // namespace rough
