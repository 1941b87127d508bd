#include "semideg/partition.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "semideg/error.hpp"

namespace semideg {

FourPartition FourPartition::from_classes(std::size_t n,
                                          std::array<std::vector<Vertex>, 4> classes, double mu) {
  std::vector<int> assignment(n, -1);
  for (int i = 0; i < 4; ++i) {
    for (Vertex v : classes[static_cast<std::size_t>(i)]) {
      if (v >= n)
        throw Error(ErrorCode::kOutOfRange,
                    "partition vertex " + std::to_string(v) + " with n=" + std::to_string(n));
      if (assignment[v] != -1)
        throw Error(ErrorCode::kBadPartition, "vertex " + std::to_string(v) + " in two classes");
      assignment[v] = i;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (assignment[v] == -1)
      throw Error(ErrorCode::kBadPartition, "vertex " + std::to_string(v) + " in no class");
  return from_assignment(assignment, mu);
}

FourPartition FourPartition::from_assignment(std::span<const int> class_of, double mu) {
  FourPartition p;
  p.class_of_.assign(class_of.begin(), class_of.end());
  for (std::size_t v = 0; v < p.class_of_.size(); ++v)
    if (p.class_of_[v] < 0 || p.class_of_[v] > 3)
      throw Error(ErrorCode::kBadPartition, "vertex " + std::to_string(v) + " has no valid class");
  p.mu_ = mu;
  p.rebuild_members();
  return p;
}

void FourPartition::rebuild_members() {
  const std::size_t n = class_of_.size();
  for (int i = 0; i < 4; ++i) {
    members_[static_cast<std::size_t>(i)].clear();
    sets_[static_cast<std::size_t>(i)] = VertexSet(n);
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto c = static_cast<std::size_t>(class_of_[v]);
    members_[c].push_back(v);
    sets_[c].insert(v);
  }
}

FourPartition FourPartition::with_move(Vertex v, int to) const {
  if (v >= order()) throw Error(ErrorCode::kVertexNotInPartition, std::to_string(v));
  FourPartition p = *this;
  p.class_of_[v] = to;
  p.rebuild_members();
  return p;
}

FourPartition FourPartition::rotated(int shift) const {
  FourPartition p = *this;
  for (int& c : p.class_of_) c = ((c - shift) % 4 + 4) % 4;
  p.rebuild_members();
  return p;
}

std::string serialize_partition(const FourPartition& p) {
  nlohmann::json doc;
  doc["classes"] = nlohmann::json::array();
  for (int i = 0; i < 4; ++i) doc["classes"].push_back(p.members(i));
  doc["mu"] = p.mu();
  return doc.dump();
}

FourPartition parse_partition(std::string_view text, std::size_t n) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("partition: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("classes") || !doc["classes"].is_array() ||
      doc["classes"].size() != 4)
    throw Error(ErrorCode::kParseError, "partition: expected \"classes\" with four arrays");
  std::array<std::vector<Vertex>, 4> classes;
  for (std::size_t i = 0; i < 4; ++i) {
    try {
      classes[i] = doc["classes"][i].get<std::vector<Vertex>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParseError, std::string("partition class: ") + e.what());
    }
  }
  const double mu = doc.contains("mu") && doc["mu"].is_number() ? doc["mu"].get<double>() : 0.0;
  return FourPartition::from_classes(n, std::move(classes), mu);
}

}  // namespace semideg
