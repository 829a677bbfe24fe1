#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace kge {

using EntityId = std::int32_t;
using RelationId = std::int32_t;

// One (head, relation, tail) fact, as ids into the dataset dictionaries.
struct Triple {
  EntityId head;
  RelationId relation;
  EntityId tail;

  bool operator==(const Triple&) const = default;
};

// Bidirectional name <-> dense id map. Ids are assigned in insertion order,
// so max id == size() - 1. Names are opaque byte strings; no normalization.
class Dictionary {
 public:
  // Returns the id of `name`, inserting it first if unseen.
  std::int32_t intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    const auto id = static_cast<std::int32_t>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    return id;
  }

  std::optional<std::int32_t> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& name(std::int32_t id) const { return names_[id]; }
  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::int32_t> index_;
};

}  // namespace kge
