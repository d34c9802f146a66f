#include "affcells/repmodel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "affcells/data.hpp"

namespace affcells {

BlockParameters block_parameters(const RootDatum& datum, int p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  BlockParameters out;
  out.p = p;
  if (p <= datum.coxeter_number())
    out.warning = "p = " + std::to_string(p) + " does not exceed the Coxeter number " +
                  std::to_string(datum.coxeter_number());
  const int r = datum.rank();
  std::int64_t total = 1;
  for (int i = 0; i < r; ++i) total *= p;
  auto encode = [&](const IVec& v) {
    std::int64_t code = 0;
    for (int i = r - 1; i >= 0; --i) code = code * p + ((v(i) % p) + p) % p;
    return code;
  };
  auto decode = [&](std::int64_t code) {
    IVec v(r);
    for (int i = 0; i < r; ++i) {
      v(i) = code % p;
      code /= p;
    }
    return v;
  };
  const auto weyl = enumerate_weyl(datum);
  std::vector<char> seen(static_cast<std::size_t>(total), 0);
  for (std::int64_t c = 0; c < total; ++c) {
    if (seen[static_cast<std::size_t>(c)]) continue;
    const IVec lambda = decode(c);
    std::vector<std::int64_t> orbit;
    for (WeylElt w : weyl) {
      const std::int64_t img = encode(dot_action(datum, w, lambda));
      if (!seen[static_cast<std::size_t>(img)]) {
        seen[static_cast<std::size_t>(img)] = 1;
        orbit.push_back(img);
      }
    }
    std::vector<IVec> members;
    for (auto m : orbit) members.push_back(decode(m));
    const auto least = std::min_element(members.begin(), members.end(), [](const IVec& a, const IVec& b) {
      return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
    });
    out.representatives.push_back(*least);
    out.orbit_sizes.push_back(static_cast<int>(orbit.size()));
  }
  return out;
}

const char* to_string(Fixedness f) {
  switch (f) {
    case Fixedness::kFixed: return "true";
    case Fixedness::kMoved: return "false";
    case Fixedness::kUnknown: break;
  }
  return "unknown";
}

BlockModel simple_labels(const AffineWeylGroup& group, const std::vector<int>& levi, const SpecialPoint& v) {
  const auto& d = group.datum();
  for (int i : levi)
    if (i < 1 || i > d.rank()) throw std::invalid_argument("Levi index out of range: " + std::to_string(i));
  const auto sub = d.parabolic_subgroup(levi);
  const auto around = group.alcoves_around(v);
  std::map<int, int> position;  // Weyl index -> position in `around`
  for (std::size_t i = 0; i < around.size(); ++i) position[around[i].label.index] = static_cast<int>(i);

  BlockModel model;
  model.type = d.type();
  model.levi = levi;
  model.special_point = v;
  std::vector<char> taken(around.size(), 0);
  for (std::size_t i = 0; i < around.size(); ++i) {
    if (taken[i]) continue;
    LabelClass cls;
    std::vector<int> idx;
    for (WeylElt x : sub) idx.push_back(position.at(d.multiply(x, around[i].label).index));
    std::sort(idx.begin(), idx.end());
    for (int j : idx) {
      taken[static_cast<std::size_t>(j)] = 1;
      cls.members.push_back(around[static_cast<std::size_t>(j)].label);
      cls.alcoves.push_back(around[static_cast<std::size_t>(j)].alcove);
    }
    cls.name = "L" + std::to_string(model.labels.size());
    model.labels.push_back(std::move(cls));
  }
  return model;
}

void annotate_component_group(BlockModel& model, const OrbitRecord& record) {
  const bool trivial = record.trivial_component_group();
  for (std::size_t i = 0; i < model.labels.size(); ++i) {
    model.labels[i].fixed_by_A = trivial ? Fixedness::kFixed : Fixedness::kUnknown;
    model.labels[i].component_orbit = trivial ? static_cast<int>(i) : -1;
  }
}

bool block_size_check(const BlockModel& model, const OrbitRecord& record) {
  if (!record.standard_levi || !model.levi || *record.standard_levi != *model.levi)
    throw std::invalid_argument("orbit " + record.label + " does not have the Levi of this block model");
  return static_cast<std::int64_t>(model.labels.size()) == record.euler;
}

BlockModel g2_subregular_block() {
  const auto doc = nlohmann::json::parse(load_data_file("config/g2_subregular.json"));
  BlockModel model;
  model.type = CartanType::parse(doc.at("type").get<std::string>());
  for (const auto& l : doc.at("labels")) {
    LabelClass cls;
    cls.name = l.at("name").get<std::string>();
    cls.fixed_by_A = l.at("fixed").get<bool>() ? Fixedness::kFixed : Fixedness::kMoved;
    cls.component_orbit = l.at("orbit").get<int>();
    model.labels.push_back(std::move(cls));
  }
  return model;
}

}  // namespace affcells
