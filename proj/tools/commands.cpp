#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "dcayley/bounds.hpp"
#include "dcayley/diameter.hpp"
#include "dcayley/errors.hpp"
#include "dcayley/group.hpp"
#include "dcayley/search.hpp"
#include "dcayley/set_io.hpp"

namespace dcayley::cli {

namespace {

std::string join_elements(const std::vector<Element>& elements) {
  std::string out;
  for (const auto& x : elements) {
    if (!out.empty()) out += ' ';
    out += format_element(x);
  }
  return out;
}

std::string format_ratio(double r) { return fmt::format("{:.6f}", r); }

class RowBuilder {
 public:
  TableRow build(std::uint64_t d, bool include_set) {
    const auto report = build_report(d);
    TableRow row;
    row.d = d;
    row.p = report.p.value_or(0);
    row.constructed_order = report.constructed_order;
    row.dihedral_upper = report.dihedral_upper;
    row.moore = report.moore;
    row.ratio = report.ratio;
    row.asymptotic_lower = report.asymptotic_lower;
    row.asymptotic_holds = report.asymptotic_holds;
    if (!report.p) {
      row.certified_by = "none";
    } else if (report.degenerate) {
      // The field construction needs p >= 5; certify D_{2p(p-1)} by search.
      const auto n = row.p * (row.p - 1);
      auto [it, inserted] = search_degree_.try_emplace(row.p, 0);
      if (inserted) {
        it->second = min_degree_diameter2(GroupSpec({n})).d_min;
      }
      row.actual_degree = it->second;
      row.certified_by = "search";
    } else {
      auto it = sets_.find(row.p);
      if (it == sets_.end()) {
        it = sets_.emplace(row.p, build_generating_set(row.p)).first;
      }
      row.actual_degree = it->second.actual_degree;
      row.certified_by = "construction";
      if (include_set) {
        row.generators = it->second.generators;
      }
    }
    return row;
  }

 private:
  std::map<std::uint64_t, std::uint64_t> search_degree_;
  std::map<std::uint64_t, FieldGenSet> sets_;
};

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw DomainError("range must look like a..b, got '" + text + "'");
  }
  try {
    std::size_t used = 0;
    const auto a = std::stoull(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("a");
    const auto tail = text.substr(dots + 2);
    const auto b = std::stoull(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("b");
    if (a > b) {
      throw DomainError("empty range '" + text + "'");
    }
    return {a, b};
  } catch (const std::logic_error&) {
    throw DomainError("range must look like a..b, got '" + text + "'");
  }
}

// Re-expresses padded group elements as labelled triples.
std::vector<LabelledGenerator> label_padding(const DiscreteLog& dlog, const GroupSpec& spec,
                                             const std::vector<Element>& padded, std::size_t first_new) {
  std::vector<LabelledGenerator> out;
  for (std::size_t i = first_new; i < padded.size(); ++i) {
    out.push_back({Family::Pad, element_index(spec, padded[i]), from_gd_element(dlog, padded[i])});
  }
  return out;
}

}  // namespace

TableRow make_row(std::uint64_t d, bool include_set) { return RowBuilder{}.build(d, include_set); }

void write_table(std::ostream& out, const std::vector<TableRow>& rows, TableFormat format) {
  if (format == TableFormat::Csv) {
    out << "d,p,actual_degree,constructed_order,dihedral_upper,moore,ratio\n";
    for (const auto& r : rows) {
      fmt::print(out, "{},{},{},{},{},{},{}\n", r.d, r.p, r.actual_degree, r.constructed_order, r.dihedral_upper,
                 r.moore, format_ratio(r.ratio));
    }
    return;
  }
  auto array = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row = {
        {"d", r.d},
        {"p", r.p},
        {"actual_degree", r.actual_degree},
        {"constructed_order", r.constructed_order},
        {"dihedral_upper", r.dihedral_upper},
        {"moore", r.moore},
        {"ratio", std::round(r.ratio * 1e6) / 1e6},
        {"asymptotic_lower", std::round(r.asymptotic_lower * 1e6) / 1e6},
        {"asymptotic_holds", r.asymptotic_holds},
        {"certified_by", r.certified_by},
    };
    if (!r.generators.empty()) {
      auto set = nlohmann::json::array();
      for (const auto& g : r.generators) {
        set.push_back({{"label", g.label()}, {"a", g.element.a}, {"b", g.element.b}, {"c", to_int(g.element.c)}});
      }
      row["generating_set"] = std::move(set);
    }
    array.push_back(std::move(row));
  }
  out << array.dump(2) << '\n';
}

int cmd_construct(const ConstructOptions& options, std::ostream& out, std::ostream& err) {
  const auto set = build_generating_set(options.p);
  const DiscreteLog dlog(options.p, find_primitive_root(options.p));
  const auto spec = field_group_spec(options.p);
  auto elements = transport(dlog, set.generators);
  auto generators = set.generators;
  if (options.pad_to) {
    const auto first_new = elements.size();
    elements = pad_with_involutions(spec, elements, *options.pad_to);
    for (auto& g : label_padding(dlog, spec, elements, first_new)) {
      generators.push_back(g);
    }
  }

  const auto check = check_cayley(spec, elements);
  if (!check.diameter || *check.diameter > 2) {
    err << "construction failed verification for p=" << options.p << " (diameter "
        << (check.diameter ? std::to_string(*check.diameter) : std::string("infinite")) << ")\n";
    return kDiameterMismatch;
  }
  const auto summary = fmt::format("p={} order={} nominal_degree={} actual_degree={} degree={} diameter={}",
                                   options.p, spec.order(), set.nominal_degree, set.actual_degree, check.degree,
                                   *check.diameter);
  if (options.out_path) {
    std::ofstream file(*options.out_path);
    if (!file) {
      err << "cannot write " << *options.out_path << '\n';
      return kFailure;
    }
    write_field_set(file, options.p, generators);
    out << summary << '\n';
  } else {
    write_field_set(out, options.p, generators);
    out << "# " << summary << '\n';
  }
  return kOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  std::ifstream file(options.set_path);
  if (!file) {
    err << "cannot read " << options.set_path << '\n';
    return kFailure;
  }
  const auto parsed = read_set_file(file);
  GroupSpec spec;
  std::vector<Element> elements;
  if (const auto* field = std::get_if<FieldSetFile>(&parsed)) {
    spec = field_group_spec(field->p);
    if (options.spec && GroupSpec::parse(*options.spec) != spec) {
      err << "set file is for H = " << spec.to_string() << ", not " << *options.spec << '\n';
      return kValidationFailure;
    }
    const DiscreteLog dlog(field->p, find_primitive_root(field->p));
    elements = transport(dlog, field->generators);
  } else {
    if (!options.spec) {
      err << "--spec is required for element-list set files\n";
      return kValidationFailure;
    }
    spec = GroupSpec::parse(*options.spec);
    elements = std::get<ElementSetFile>(parsed).elements;
  }

  const auto validation = validate_generating_set(spec, elements);
  if (!validation.ok()) {
    out << "invalid generating set for H = " << spec.to_string() << '\n';
    if (validation.identity_present) out << "  contains the identity\n";
    for (const auto& x : validation.invalid) out << "  not a group element: " << format_element(x) << '\n';
    for (const auto& x : validation.duplicates) out << "  duplicate: " << format_element(x) << '\n';
    for (const auto& x : validation.missing_inverses) {
      out << "  inverse missing for " << format_element(x) << '\n';
    }
    return kValidationFailure;
  }

  const auto split = split_counts(spec, elements);
  const auto d = diameter(spec, elements);
  out << fmt::format("H={} order={} degree={} m1={} m2={} diameter={}\n", spec.to_string(), spec.order(),
                     elements.size(), split.rotations, split.reflections,
                     d ? std::to_string(*d) : std::string("not-connected"));
  if (!d) {
    return kNotConnected;
  }
  return *d <= options.expect ? kOk : kDiameterMismatch;
}

int cmd_bounds(const BoundsOptions& options, std::ostream& out, std::ostream& err) {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  if (options.d && !options.range) {
    first = last = *options.d;
  } else if (options.range && !options.d) {
    std::tie(first, last) = parse_range(*options.range);
  } else {
    err << "give exactly one of --d or --range\n";
    return kValidationFailure;
  }
  RowBuilder builder;
  std::vector<TableRow> rows;
  for (auto d = first; d <= last; ++d) {
    rows.push_back(builder.build(d, options.include_set));
  }
  // Buffer so a failing row never leaves a partial table behind.
  std::ostringstream buffer;
  write_table(buffer, rows, options.format);
  out << buffer.str();
  return kOk;
}

int cmd_search(const SearchCommandOptions& options, std::ostream& out, std::ostream& err) {
  if (options.exact_dc.has_value() == options.max_order.has_value()) {
    err << "give exactly one of --max-order or --exact-dc\n";
    return kValidationFailure;
  }
  const auto group_class = options.generalised ? GroupClass::Generalised : GroupClass::Dihedral;
  if (options.exact_dc) {
    const auto result = exact_dc(*options.exact_dc, group_class);
    const auto coverage = is_diameter_two(result.spec, result.witness);
    out << fmt::format("d={} order={} H={} dihedral_upper={} examined={} witness={}\n", result.d, result.order,
                       result.spec.to_string(), dihedral_upper_bound(result.d), result.sets_examined,
                       join_elements(result.witness));
    return coverage.covered ? kOk : kDiameterMismatch;
  }
  if (*options.max_order > kSearchOrderCap) {
    err << "--max-order is capped at " << kSearchOrderCap << '\n';
    return kInfeasible;
  }
  SearchOptions search_options;
  search_options.start_at_lower_bound = !options.from_one;
  for (std::uint64_t n = 1; 2 * n <= *options.max_order; ++n) {
    std::vector<GroupSpec> specs;
    if (group_class == GroupClass::Dihedral) {
      specs.push_back(n == 1 ? GroupSpec{} : GroupSpec({n}));
    } else {
      specs = abelian_specs(n);
    }
    for (const auto& spec : specs) {
      const auto result = min_degree_diameter2(spec, search_options);
      const auto split = split_counts(spec, result.witness);
      out << fmt::format("order={} H={} d_min={} bound={} m1={} m2={} examined={} witness={}\n", spec.order(),
                         spec.to_string(), result.d_min, min_degree_bound(n), split.rotations, split.reflections,
                         result.sets_examined, join_elements(result.witness));
    }
  }
  return kOk;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diameter-2 Cayley graphs of dihedral groups: constructions, verification and bounds"};
  app.require_subcommand(1);

  ConstructOptions construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build and verify the GF(p) generating set");
  construct_cmd->add_option("--p", construct.p, "Prime p >= 5")->required();
  construct_cmd->add_option("--pad-to", construct.pad_to, "Pad with involutions up to this degree");
  construct_cmd->add_option("--out", construct.out_path, "Write the labelled set here");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Validate a set file and compute its diameter");
  verify_cmd->add_option("--spec", verify.spec, "Cyclic factor orders of H, e.g. 5,4");
  verify_cmd->add_option("--set", verify.set_path, "Set file")->required();
  verify_cmd->add_option("--expect", verify.expect, "Largest acceptable diameter")->capture_default_str();

  BoundsOptions bounds;
  std::string format = "csv";
  auto* bounds_cmd = app.add_subcommand("bounds", "Lower and upper bounds on DC(d,2)");
  bounds_cmd->add_option("--d", bounds.d, "Degree (>= 6)");
  bounds_cmd->add_option("--range", bounds.range, "Degree range a..b");
  bounds_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  bounds_cmd->add_flag("--with-set", bounds.include_set, "Inline generating sets (json only)");

  SearchCommandOptions search;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive certification for small orders");
  search_cmd->add_option("--max-order", search.max_order, "Minimum diameter-2 degree for every order up to this");
  search_cmd->add_option("--exact-dc", search.exact_dc, "Exact largest order for degree d");
  search_cmd->add_flag("--generalised", search.generalised, "All abelian H, not just cyclic");
  search_cmd->add_flag("--from-one", search.from_one, "Search sizes from 1 instead of the lower bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  bounds.format = format == "json" ? TableFormat::Json : TableFormat::Csv;

  try {
    if (*construct_cmd) return cmd_construct(construct, out, err);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*bounds_cmd) return cmd_bounds(bounds, out, err);
    if (*search_cmd) return cmd_search(search, out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const Infeasible& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace dcayley::cli
