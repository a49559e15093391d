#pragma once

// Two on-disk set formats, both line-oriented with '#' comments allowed:
//
//   labelled field set          element list
//   ------------------          ------------
//   p=5                         0,1;-1
//   V 0 1 -1                    1,3;+1
//   A(2) 0 2 +1                 ...
//   B(3) 3 3 -1
//   C(1) 1 1 +1
//   I(24) 0 2 -1                (padding involution; parameter = canonical index)

#include <cstdint>
#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

#include "dcayley/field_construction.hpp"
#include "dcayley/group.hpp"

namespace dcayley {

struct FieldSetFile {
  std::uint64_t p = 0;
  std::vector<LabelledGenerator> generators;
};

struct ElementSetFile {
  std::vector<Element> elements;
};

using SetFile = std::variant<FieldSetFile, ElementSetFile>;

void write_field_set(std::ostream& out, std::uint64_t p, std::span<const LabelledGenerator> generators);
void write_element_set(std::ostream& out, std::span<const Element> elements);

// Detects the format from the first non-comment line. Throws InvalidElement
// on malformed lines or labels that disagree with their triple.
SetFile read_set_file(std::istream& in);

}  // namespace dcayley
