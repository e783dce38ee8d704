// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "torsion6/gl2.hpp"
#include "torsion6/gl2_enumerate.hpp"

namespace torsion6 {

// Registry of the named mod-N Galois image classes the toolkit works with.
// Only levels 2 and 3 are hard-coded; level-5 classes are always handled by
// quantifying over all det-surjective subgroups of the relevant shape, which
// is a strict superset of any label list.

enum class StructuralClass {
  kTrivial,
  kBorel,
  kSplitCartan,
  kNonsplitCartan,
  kNormalizerSplit,
  kFull,
};

inline const char* to_string(StructuralClass c) {
  switch (c) {
    case StructuralClass::kTrivial: return "trivial";
    case StructuralClass::kBorel: return "borel";
    case StructuralClass::kSplitCartan: return "split-cartan";
    case StructuralClass::kNonsplitCartan: return "nonsplit-cartan";
    case StructuralClass::kNormalizerSplit: return "normalizer-split";
    case StructuralClass::kFull: return "full";
  }
  return "?";
}

struct GroupLabel {
  std::string name;
  std::uint32_t modulus = 0;
  std::vector<Mat2> generators;
  StructuralClass structural_class = StructuralClass::kTrivial;

  Gl2Subgroup group() const {
    return gl2::group_closure(modulus, generators);
  }
};

inline const std::map<std::string, GroupLabel>& label_registry() {
  static const std::map<std::string, GroupLabel> registry = [] {
    std::map<std::string, GroupLabel> r;
    auto put = [&](const char* name, std::uint32_t n,
                   std::vector<Mat2> gens, StructuralClass c) {
      r[name] = GroupLabel{name, n, std::move(gens), c};
    };
    using gl2::make;
    put("2Cs", 2, {}, StructuralClass::kTrivial);
    put("2B", 2, {make(2, 1, 1, 0, 1)}, StructuralClass::kBorel);
    put("2Cn", 2, {make(2, 0, 1, 1, 1)}, StructuralClass::kNonsplitCartan);
    put("GL2(F2)", 2, {make(2, 1, 1, 0, 1), make(2, 0, 1, 1, 1)},
        StructuralClass::kFull);
    put("3Cs.1.1", 3, {make(3, 1, 0, 0, 2)}, StructuralClass::kSplitCartan);
    put("3B.1.1", 3, {make(3, 1, 1, 0, 1), make(3, 1, 0, 0, 2)},
        StructuralClass::kBorel);
    put("3B.1.2", 3, {make(3, 1, 1, 0, 1), make(3, 2, 0, 0, 1)},
        StructuralClass::kBorel);
    put("3Ns", 3,
        {make(3, 2, 0, 0, 1), make(3, 1, 0, 0, 2), make(3, 0, 1, 1, 0)},
        StructuralClass::kNormalizerSplit);
    return r;
  }();
  return registry;
}

// Consistency audit of the registry: every entry must be det-surjective and
// match its declared structural class.  Throws on any violation.
inline void verify_label_registry() {
  for (const auto& [name, label] : label_registry()) {
    Gl2Subgroup g = gl2::group_closure(
        label.modulus, label.generators);
    if (!gl2::det_surjective(g))
      throw std::logic_error("label " + name + ": det not surjective");
    switch (label.structural_class) {
      case StructuralClass::kTrivial:
        if (g.order() != 1) throw std::logic_error("label " + name);
        break;
      case StructuralClass::kBorel:
        if (!gl2::conjugate_into(g, gl2::StandardShape::kBorel))
          throw std::logic_error("label " + name + ": not Borel");
        break;
      case StructuralClass::kSplitCartan:
        if (!gl2::conjugate_into(g, gl2::StandardShape::kSplitCartan))
          throw std::logic_error("label " + name + ": not split Cartan");
        break;
      case StructuralClass::kNonsplitCartan:
        if (!gl2::conjugate_into(g, gl2::StandardShape::kNonsplitCartan))
          throw std::logic_error("label " + name + ": not nonsplit Cartan");
        break;
      case StructuralClass::kNormalizerSplit: {
        // contains a split Cartan of index 2 and a swap element
        bool has_swap = false;
        for (std::uint32_t c : g.element_codes) {
          Mat2 m = gl2::from_code(g.modulus, c);
          if (m.a == 0 && m.d == 0) has_swap = true;
        }
        if (!has_swap || g.order() != 2 * (gl2::unit_count(g.modulus) *
                                            gl2::unit_count(g.modulus)))
          throw std::logic_error("label " + name + ": not Ns");
        break;
      }
      case StructuralClass::kFull:
        if (g.order() != gl2::full_group_order(label.modulus))
          throw std::logic_error("label " + name + ": not full");
        break;
    }
  }
}

}  // namespace torsion6
