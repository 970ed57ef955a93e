#include "isofam/io.hpp"

#include <stdexcept>

namespace isofam::io {

json to_json(const gf2::Subspace& s) {
  json basis = json::array();
  for (const auto& b : s.basis()) basis.push_back(b.to_string());
  return json{{"D", s.ambient_dim()}, {"basis", std::move(basis)}};
}

gf2::Subspace subspace_from_json(const json& j, int default_D) {
  if (!j.is_object() || !j.contains("basis") || !j.at("basis").is_array()) {
    throw std::invalid_argument("subspace JSON needs a \"basis\" array");
  }
  int D = default_D;
  if (j.contains("D")) {
    D = j.at("D").get<int>();
  } else if (!j.at("basis").empty()) {
    D = static_cast<int>(j.at("basis").front().get<std::string>().size());
  }
  if (D < 0) throw std::invalid_argument("subspace JSON: cannot infer \"D\" from an empty basis");
  gf2::Subspace s(D);
  for (const auto& row : j.at("basis")) {
    const auto v = gf2::BitVector::parse(row.get<std::string>());
    if (v.dim() != D) {
      throw gf2::DimensionError("bitstring \"" + v.to_string() + "\" has length " +
                                std::to_string(v.dim()) + ", expected " + std::to_string(D));
    }
    s.insert(v.bits());
  }
  return s;
}

json to_json(const noncrossing::ArcSequence& seq) {
  json out = json::array();
  for (const auto& arc : seq.arcs()) out.push_back(json::array({arc.a, arc.b}));
  return out;
}

noncrossing::ArcSequence arcs_from_json(const json& j, int D) {
  if (!j.is_array()) throw std::invalid_argument("arc sequence JSON must be a list of [a, b]");
  std::vector<noncrossing::Arc> arcs;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("arc must be a pair [a, b], got " + pair.dump());
    }
    arcs.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  return noncrossing::ArcSequence(D, std::move(arcs));
}

json to_json(const families::FamilyTable& t) {
  json f0 = json::array();
  json f1 = json::array();
  for (const auto& e : t.f0) f0.push_back(to_json(e));
  for (const auto& e : t.f1) f1.push_back(to_json(e));
  return json{{"D", t.D}, {"f0", std::move(f0)}, {"f1", std::move(f1)}};
}

json to_json(const noncrossing::CollectionC& c) {
  json members = json::array();
  for (const auto& e : c.members) members.push_back(to_json(e));
  return json{{"D", c.D}, {"members", std::move(members)}};
}

json to_json(const std::vector<noncrossing::ArcSequence>& z, int D) {
  json members = json::array();
  for (const auto& seq : z) members.push_back(to_json(seq));
  return json{{"D", D}, {"members", std::move(members)}};
}

std::string subspace_csv_field(const gf2::Subspace& s) {
  std::string out;
  for (const auto& b : s.basis()) {
    if (!out.empty()) out += ';';
    out += b.to_string();
  }
  return out;
}

}  // namespace isofam::io
