#include "mds/measure_registry.hpp"

namespace mds {

namespace {

std::vector<MeasureSystem> build_registry() {
  using P = const MeasureParams&;
  using N = const SentenceNetwork&;
  std::vector<MeasureSystem> r;
  const auto high = Direction::HighestFirst;
  const auto low = Direction::LowestFirst;

  r.push_back({"Dg", high, 0, [](N net, P) { return degree(net); }});
  r.push_back({"Stg", high, 0, [](N net, P) { return strength(net); }});
  r.push_back({"SP", low, 0, [](N net, P p) { return shortest_path_score(net, DistanceRule::Unit, p.exec); }});
  r.push_back({"SP-w1", low, 0, [](N net, P p) { return shortest_path_score(net, DistanceRule::W1, p.exec); }});
  r.push_back({"SP-w2", low, 0, [](N net, P p) { return shortest_path_score(net, DistanceRule::W2, p.exec); }});
  r.push_back({"Btw", high, 0, [](N net, P p) { return betweenness(net, false, p.exec); }});
  r.push_back({"Btw-w", high, 0, [](N net, P p) { return betweenness(net, true, p.exec); }});
  r.push_back({"PR", high, 0, [](N net, P p) { return pagerank(net, false, p.pagerank); }});
  r.push_back({"PR-w", high, 0, [](N net, P p) { return pagerank(net, true, p.pagerank); }});
  r.push_back({"CC", high, 0, [](N net, P) { return clustering(net, false); }});
  r.push_back({"CC-w", high, 0, [](N net, P) { return clustering(net, true); }});

  for (int k = 1; k <= 8; ++k) {
    for (int h : {2, 3}) {
      const auto which = static_cast<ConcentricIndex>(k);
      r.push_back({"Conc-" + std::to_string(k) + "-h" + std::to_string(h), high, h,
                   [which, h](N net, P p) { return concentric_scores(net, h, which, p.exec); }});
    }
  }
  for (int h : {2, 3}) {
    r.push_back({"Access-h" + std::to_string(h), high, h,
                 [h](N net, P p) { return accessibility_scores(net, h, p.exec); }});
  }
  r.push_back({"GAccess", high, 0, [](N net, P) { return generalized_accessibility(net); }});

  struct SymmetryKind {
    const char* prefix;
    SymmetryVariant variant;
    Direction direction;
  };
  for (const SymmetryKind& kind : {SymmetryKind{"HSymBb", SymmetryVariant::Backbone, high},
                                   SymmetryKind{"HSymMg", SymmetryVariant::Merged, high},
                                   SymmetryKind{"LSymBb", SymmetryVariant::Backbone, low},
                                   SymmetryKind{"LSymMg", SymmetryVariant::Merged, low}}) {
    for (int h : {2, 3}) {
      r.push_back({std::string(kind.prefix) + "-h" + std::to_string(h), kind.direction, h,
                   [kind, h](N net, P p) { return symmetry_scores(net, h, kind.variant, kind.direction, p.exec); }});
    }
  }
  r.push_back({"AbsT", low, 0, [](N net, P p) { return absorption_time(net, p.exec); }});
  return r;
}

}  // namespace

const std::vector<MeasureSystem>& all_measures() {
  static const std::vector<MeasureSystem> registry = build_registry();
  return registry;
}

const MeasureSystem* find_measure(std::string_view name) {
  for (const auto& m : all_measures()) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

}  // namespace mds
