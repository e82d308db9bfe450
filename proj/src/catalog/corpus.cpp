#include "jordan/catalog/catalog.hpp"

namespace jordan {

namespace {

using Tag = SubgroupTypeTag;

// Fiber factor of fiber x base sits on the first points, so its generators
// are the product's first generators.
ConicBundleInstance split(const SpecPtr& fiber_spec, const SpecPtr& base_spec, Tag fiber, Tag base) {
  SpecPtr product = direct_product(fiber_spec, base_spec);
  GroupPtr g = build(product);
  const std::size_t fiber_gens = build(fiber_spec)->generators().size();
  std::vector<ElemIndex> gens(g->generator_indices().begin(),
                              g->generator_indices().begin() + static_cast<long>(fiber_gens));
  return {to_string(*product), g, fiber, base, Subgroup::generated_by(g, gens)};
}

}  // namespace

std::vector<ConicBundleInstance> conic_bundle_instances() {
  std::vector<ConicBundleInstance> out;
  out.push_back(split(cyclic(3), cyclic(4), Tag::Cyclic, Tag::Cyclic));
  out.push_back(split(cyclic(5), dihedral(8), Tag::Cyclic, Tag::Dihedral));
  out.push_back(split(dihedral(6), cyclic(4), Tag::Dihedral, Tag::Cyclic));
  out.push_back(split(dihedral(8), dihedral(8), Tag::Dihedral, Tag::Dihedral));
  out.push_back(split(dihedral(6), dihedral(10), Tag::Dihedral, Tag::Dihedral));
  out.push_back(split(cyclic(3), alternating(4), Tag::Cyclic, Tag::A4));
  out.push_back(split(dihedral(8), symmetric(4), Tag::Dihedral, Tag::S4));
  out.push_back(split(alternating(4), cyclic(6), Tag::A4, Tag::Cyclic));
  out.push_back(split(alternating(4), cyclic(5), Tag::A4, Tag::Cyclic));
  out.push_back(split(alternating(4), dihedral(8), Tag::A4, Tag::Dihedral));
  out.push_back(split(alternating(4), alternating(4), Tag::A4, Tag::A4));
  out.push_back(split(alternating(4), symmetric(4), Tag::A4, Tag::S4));
  out.push_back(split(symmetric(4), cyclic(5), Tag::S4, Tag::Cyclic));
  out.push_back(split(symmetric(4), dihedral(6), Tag::S4, Tag::Dihedral));
  out.push_back(split(symmetric(4), alternating(4), Tag::S4, Tag::A4));
  out.push_back(split(symmetric(4), symmetric(4), Tag::S4, Tag::S4));

  // Non-split sample: S4 as an extension of Z/2 by A4.
  GroupPtr s4 = build(symmetric(4));
  Subgroup a4 = derived_subgroup(s4);
  out.push_back({"S4", s4, Tag::A4, Tag::Cyclic, a4});
  return out;
}

std::vector<std::string> small_catalog_specs() {
  return {"C1",    "C2",    "C5",      "C7",      "C12",     "Klein",   "D6",     "D8",    "D10",
          "D12",   "D20",   "A4",      "S4",      "A5",      "Q8",      "SL23",   "C2xA4", "S3xC3",
          "D8xC2", "Q8xC3", "C2xC2xC3", "C4xC4",  "S4xC2",   "A4xC3",   "D6xD6",  "A4xC4", "S4xC3",
          "D8xD8", "S3wr2", "PSL2F7",  "A5xC3",   "C3xS3xC2"};
}

}  // namespace jordan
