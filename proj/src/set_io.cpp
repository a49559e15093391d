#include "dcayley/set_io.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "dcayley/errors.hpp"
#include "parse_util.hpp"

namespace dcayley {

namespace {

std::string sign_text(Sign s) { return s == Sign::Minus ? "-1" : "+1"; }

Sign parse_sign(std::string_view text, std::size_t line_no) {
  const auto v = detail::parse_int(text);
  if (v == 1) return Sign::Plus;
  if (v == -1) return Sign::Minus;
  throw InvalidElement("line " + std::to_string(line_no) + ": bad sign '" + std::string(text) + "'");
}

std::vector<std::string_view> words(std::string_view line) {
  std::vector<std::string_view> out;
  for (auto w : detail::split(line, ' ')) {
    w = detail::trim(w);
    if (!w.empty()) out.push_back(w);
  }
  return out;
}

LabelledGenerator parse_labelled(std::string_view line, std::uint64_t p, std::size_t line_no) {
  const auto fail = [&](const std::string& why) -> InvalidElement {
    return InvalidElement("line " + std::to_string(line_no) + ": " + why);
  };
  const auto w = words(line);
  if (w.size() != 4) {
    throw fail("expected '<label> a b c'");
  }
  LabelledGenerator g;
  const auto label = w[0];
  if (label == "V") {
    g.family = Family::V;
  } else {
    if (label.size() < 4 || label[1] != '(' || label.back() != ')') {
      throw fail("bad label '" + std::string(label) + "'");
    }
    switch (label[0]) {
      case 'A': g.family = Family::A; break;
      case 'B': g.family = Family::B; break;
      case 'C': g.family = Family::C; break;
      case 'I': g.family = Family::Pad; break;
      default: throw fail("unknown family '" + std::string(label) + "'");
    }
    const auto param = detail::parse_uint(label.substr(2, label.size() - 3));
    if (!param) {
      throw fail("bad label parameter '" + std::string(label) + "'");
    }
    g.parameter = *param;
  }
  const auto a = detail::parse_uint(w[1]);
  const auto b = detail::parse_uint(w[2]);
  if (!a || !b) {
    throw fail("bad triple");
  }
  g.element = FieldTriple{*a, *b, parse_sign(w[3], line_no)};
  if (!triple_valid(p, g.element)) {
    throw fail("triple out of range for p = " + std::to_string(p));
  }
  const auto& t = g.element;
  bool consistent = true;
  switch (g.family) {
    case Family::V: consistent = t == FieldTriple{0, 1, Sign::Minus}; break;
    case Family::A: consistent = t == FieldTriple{0, g.parameter, Sign::Plus} && g.parameter != 1; break;
    case Family::B: consistent = t == FieldTriple{g.parameter, g.parameter, Sign::Minus}; break;
    case Family::C: consistent = t == FieldTriple{g.parameter, 1, Sign::Plus}; break;
    case Family::Pad: break;
  }
  if (!consistent) {
    throw fail("label " + std::string(label) + " does not match its triple");
  }
  return g;
}

}  // namespace

void write_field_set(std::ostream& out, std::uint64_t p, std::span<const LabelledGenerator> generators) {
  out << "p=" << p << '\n';
  for (const auto& g : generators) {
    out << g.label() << ' ' << g.element.a << ' ' << g.element.b << ' ' << sign_text(g.element.c) << '\n';
  }
}

void write_element_set(std::ostream& out, std::span<const Element> elements) {
  for (const auto& x : elements) {
    out << format_element(x) << '\n';
  }
}

SetFile read_set_file(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::uint64_t> p;
  bool labelled = false;
  bool started = false;
  FieldSetFile field;
  ElementSetFile plain;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = detail::trim(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = detail::trim(line.substr(0, hash));
    }
    if (line.empty()) {
      continue;
    }
    if (!started) {
      started = true;
      if (line.starts_with("p=")) {
        p = detail::parse_uint(line.substr(2));
        if (!p || *p < 2) {
          throw InvalidElement("line " + std::to_string(line_no) + ": bad header '" + std::string(line) + "'");
        }
        labelled = true;
        field.p = *p;
        continue;
      }
    }
    if (labelled) {
      field.generators.push_back(parse_labelled(line, *p, line_no));
    } else {
      plain.elements.push_back(parse_element(line));
    }
  }
  if (labelled) {
    return field;
  }
  return plain;
}

}  // namespace dcayley
