#include "multireg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "multireg/cohomology.hpp"
#include "multireg/groebner.hpp"
#include "multireg/io.hpp"
#include "multireg/regularity.hpp"
#include "multireg/render.hpp"
#include "multireg/truncation.hpp"

namespace multireg {

namespace {

using json = nlohmann::ordered_json;

/// Bad input: unreadable file, syntax error, malformed degree. Exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::optional<std::uint32_t> prime;
  int threads = 0;
  std::string output;

  std::string file;
  std::string truncate_at;
  std::string box;
  std::string mode = "Q";
  std::string degrees;
  std::optional<int> t_start;
  std::string regular_at;
  std::string region_kind;
  int region_index = 0;
  std::string region_degree;
};

struct Output {
  std::string text;
  json js;
  std::optional<std::string> svg;
};

ModuleInput load_input(const Options& o) {
  std::string text;
  if (o.file == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(o.file, std::ios::binary);
    if (!f) throw UsageError("cannot read " + o.file);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return parse_input(text, o.prime);
  } catch (const ParseError& e) {
    throw UsageError(o.file + ":" + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(o.file + ": " + e.what());
  }
}

MultiDegree degree_arg(const std::string& text, std::size_t r, const std::string& what) {
  MultiDegree d;
  try {
    d = parse_degree(text);
  } catch (const std::exception& e) {
    throw UsageError(what + ": " + e.what());
  }
  if (r && d.rank() != r)
    throw UsageError(what + " " + d.to_string() + " has " + std::to_string(d.rank()) + " coordinates, the ring has r = " +
                     std::to_string(r));
  return d;
}

DegreeBox box_arg(const std::string& text, std::size_t r) {
  DegreeBox box;
  try {
    box = parse_box(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--box: ") + e.what());
  }
  if (box.lo.rank() != r || box.hi.rank() != r) throw UsageError("--box does not match r = " + std::to_string(r));
  if (!box.lo.leq(box.hi)) throw UsageError("--box is empty");
  return box;
}

json ring_json(const RingSpec& R) { return {{"p", R.characteristic()}, {"n", R.n()}}; }

json gens_json(const Region& R) {
  json a = json::array();
  for (const auto& g : R.generators()) a.push_back(g.coords());
  return a;
}

json box_json(const DegreeBox& b) { return {{"lo", b.lo.coords()}, {"hi", b.hi.coords()}}; }

json betti_json(const BettiTable& B) {
  json rows = json::array();
  if (!B.empty())
    for (int i = 0; i <= B.max_index(); ++i) {
      json tw = json::array();
      for (const auto& [key, n] : B.entries())
        if (key.first == i && n) tw.push_back({{"degree", key.second.coords()}, {"multiplicity", n}});
      rows.push_back({{"index", i}, {"rank", B.total(i)}, {"twists", tw}});
    }
  return rows;
}

Presentation module_of(const ModuleInput& in) {
  return in.kind == ModuleInput::Kind::Ideal ? Presentation::quotient(in.ring, in.ideal) : in.module;
}

std::string truncation_label(const std::optional<MultiDegree>& d) {
  return d ? "M_{>=" + d->to_string() + "}" : std::string("M");
}

// Default search box: from 0 to one past the componentwise maximum Betti degree.
DegreeBox default_box(const Presentation& M) {
  const std::size_t r = M.ring.r();
  MultiDegree hi(r);
  const BettiTable B = betti_numbers(M);
  for (const auto& [key, n] : B.entries()) hi = max(hi, key.second);
  return {MultiDegree(r), hi + MultiDegree::ones(r)};
}

Output cmd_betti(const Options& o) {
  ModuleInput in = load_input(o);
  std::optional<MultiDegree> d;
  if (!o.truncate_at.empty()) d = degree_arg(o.truncate_at, in.ring.r(), "--truncate-at");
  Presentation M = module_of(in);
  if (d) M = truncate_module(M, *d);
  const BettiTable B = betti_numbers(M);
  Output out;
  out.text = "Betti numbers of " + truncation_label(d) + "\n" + render_betti(B);
  out.js = {{"schema", "multireg.betti/1"},
            {"ring", ring_json(in.ring)},
            {"truncated_at", d ? json(d->coords()) : json(nullptr)},
            {"rows", betti_json(B)}};
  return out;
}

Output cmd_truncate(const Options& o) {
  ModuleInput in = load_input(o);
  const MultiDegree d = degree_arg(o.truncate_at, in.ring.r(), "--truncate-at");
  Presentation T = truncate_module(module_of(in), d, true);
  const ModuleInput result{ModuleInput::Kind::Matrix, in.ring, {}, T};
  Output out;
  out.text = print_input(result);
  out.js = {{"schema", "multireg.module/1"}, {"truncated_at", d.coords()}, {"input", out.text}};
  return out;
}

Output cmd_classify(const Options& o) {
  ModuleInput in = load_input(o);
  std::optional<MultiDegree> d;
  if (!o.truncate_at.empty()) d = degree_arg(o.truncate_at, in.ring.r(), "--truncate-at");
  Presentation M = module_of(in);
  if (d) M = truncate_module(M, *d);
  const LinearityVerdict v = classify_resolution(betti_numbers(M));
  Output out;
  out.text = "resolution of " + truncation_label(d) + "\n" + render_verdict(v);
  json w = json::array();
  for (const auto& x : v.witnesses)
    w.push_back({{"index", x.index}, {"degree", x.twist.coords()}, {"violated", x.violated}});
  out.js = {{"schema", "multireg.verdict/1"},
            {"truncated_at", d ? json(d->coords()) : json(nullptr)},
            {"kind", to_string(v.kind)},
            {"generator_degree", v.generator_degree ? json(v.generator_degree->coords()) : json(nullptr)},
            {"witnesses", w}};
  return out;
}

Output region_output(const std::string& kind, const std::string& title, const Region& R,
                     const std::optional<DegreeBox>& box, json extra) {
  Output out;
  out.text = title + "\n" + render_generators(R);
  if (box && R.rank() == 2) {
    out.text += render_staircase(R, *box);
    out.svg = render_region_svg(R, *box, title);
  }
  json js = {{"schema", "multireg.region/1"}, {"kind", kind}};
  for (auto& [k, v] : extra.items()) js[k] = v;
  if (box) js["box"] = box_json(*box);
  js["generators"] = gens_json(R);
  out.js = std::move(js);
  return out;
}

Output cmd_region_search(const Options& o, RegionMode mode) {
  ModuleInput in = load_input(o);
  const Presentation M = module_of(in);
  const DegreeBox box = o.box.empty() ? default_box(M) : box_arg(o.box, in.ring.r());
  if (mode == RegionMode::Q && !module_is_saturated_at_zero(M)) throw NotSaturated();
  RegionSearchOptions opts;
  opts.threads = o.threads;
  const RegionSearchResult res = truncation_region(M, mode, box, opts);
  const bool Q = mode == RegionMode::Q;
  const std::string title = std::string(Q ? "regularity (quasilinear truncations)" : "linear truncations") + " in " +
                            box.lo.to_string() + ".." + box.hi.to_string();
  Output out = region_output(Q ? "regularity" : "linear_truncations", title, res.region, box,
                             {{"mode", Q ? "Q" : "L"}});
  for (const auto& w : res.warnings) out.text += "warning: " + w + "\n";
  out.js["boundary_warning"] = res.boundary_warning;
  out.js["warnings"] = res.warnings;
  return out;
}

Output cmd_betti_bounds(const Options& o) {
  ModuleInput in = load_input(o);
  const BettiTable B = betti_numbers(module_of(in));
  if (B.empty()) throw std::runtime_error("the module is zero; no Betti bound");
  const Region L = betti_bound_L(B), Q = betti_bound_Q(B);
  Output out;
  out.text = "Betti bound for linear truncations\n" + render_generators(L) + "Betti bound for regularity\n" +
             render_generators(Q);
  out.js = {{"schema", "multireg.betti_bounds/1"}, {"L", gens_json(L)}, {"Q", gens_json(Q)}};
  return out;
}

Output cmd_ci_regularity(const Options& o) {
  std::vector<MultiDegree> degs;
  std::optional<bool> verified;
  if (!o.degrees.empty()) {
    std::stringstream ss(o.degrees);
    std::string item;
    while (std::getline(ss, item, ';'))
      if (!item.empty()) degs.push_back(degree_arg(item, degs.empty() ? 0 : degs.front().rank(), "--degrees"));
    if (degs.empty()) throw UsageError("--degrees is empty");
  } else {
    if (o.file.empty()) throw UsageError("ci-regularity needs an input file or --degrees");
    ModuleInput in = load_input(o);
    if (in.kind != ModuleInput::Kind::Ideal) throw UsageError("ci-regularity needs an ideal");
    for (const auto& f : in.ideal) degs.push_back(f.degree(in.ring));
    verified = verify_ci_hypotheses(in.ring, in.ideal);
    if (!*verified)
      throw std::runtime_error("the generators do not form a complete intersection with B-saturated quotient");
  }
  for (const auto& d : degs)
    if (!d.is_strictly_positive()) throw UsageError("degree " + d.to_string() + " is not strictly positive");
  const Region R = ci_regularity(degs);
  json dj = json::array();
  std::string listed;
  for (const auto& d : degs) {
    dj.push_back(d.coords());
    listed += (listed.empty() ? "" : " ") + d.to_string();
  }
  Output out = region_output("ci_regularity", "regularity of a complete intersection of degrees " + listed, R,
                             std::nullopt, {{"degrees", dj}, {"hypotheses_verified", verified ? json(*verified) : json(nullptr)}});
  return out;
}

Output cmd_region(const Options& o) {
  if (o.region_kind != "L" && o.region_kind != "Q") throw UsageError("region kind must be L or Q");
  if (o.region_index < 0) throw UsageError("region index must be nonnegative");
  const MultiDegree d = degree_arg(o.region_degree, 0, "degree");
  const Region R = o.region_kind == "L" ? region_L(o.region_index, d) : region_Q(o.region_index, d);
  const std::string name = region_name(o.region_kind[0], o.region_index, d);
  MultiDegree lo = d;
  for (const auto& g : R.generators()) lo = min(lo, g);
  const DegreeBox box{lo - MultiDegree::ones(d.rank()), d + MultiDegree(d.rank(), 2)};
  return region_output(o.region_kind, name, R, box, {{"index", o.region_index}, {"degree", d.coords()}});
}

Output cmd_cohomology(const Options& o) {
  ModuleInput in = load_input(o);
  const std::size_t r = in.ring.r();
  const DegreeBox box = o.box.empty() ? regularity_box(in.ring, MultiDegree(r), 1) : box_arg(o.box, r);
  std::optional<MultiDegree> d;
  if (!o.regular_at.empty()) d = degree_arg(o.regular_at, r, "--regular-at");
  CohomologyOptions opts;
  opts.t_start = o.t_start;
  opts.threads = o.threads;
  const CohomologyTable T = local_cohomology_box(module_of(in), box, opts);
  Output out;
  out.text = "local cohomology H^i_B(M), " + render_cohomology(T);
  json entries = json::array();
  for (const auto& [key, v] : T.dims)
    if (v) entries.push_back({{"index", key.first}, {"degree", key.second.coords()}, {"dim", v}});
  out.js = {{"schema", "multireg.cohomology/1"}, {"box", box_json(box)},  {"max_index", T.max_index},
            {"t", T.t},                          {"stabilized", T.stabilized}, {"nonzero", entries}};
  if (d) {
    const bool reg = regular_by_table(T, in.ring, *d);
    out.text += "M is " + std::string(reg ? "" : "not ") + d->to_string() + "-regular\n";
    out.js["regular_at"] = {{"degree", d->coords()}, {"regular", reg}};
  }
  return out;
}

Output cmd_saturate(const Options& o) {
  ModuleInput in = load_input(o);
  const auto B = irrelevant_ideal(in.ring);
  ModuleInput result = in;
  if (in.kind == ModuleInput::Kind::Ideal) {
    result.ideal = ideal_generators(saturate(ideal_matrix(in.ideal, in.ring), B, in.ring));
    result.module = Presentation::quotient(in.ring, result.ideal);
  } else {
    result.module = Presentation(in.ring, saturate(in.module.relations, B, in.ring));
  }
  Output out;
  out.text = print_input(result);
  out.js = {{"schema", "multireg.module/1"}, {"input", out.text}};
  return out;
}

void emit(const Options& o, const std::string& body, std::ostream& out) {
  if (o.output.empty()) {
    out << body;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.output);
  f << body;
}

int report_error(const Options& o, int code, const std::string& kind, const std::string& msg, std::ostream& out,
                 std::ostream& err) {
  if (o.format == "json") {
    json e = {{"schema", "multireg.error/1"}, {"kind", kind}, {"exit_code", code}, {"message", msg}};
    out << e.dump(2) << "\n";
  } else {
    err << "multireg: " << msg << "\n";
  }
  return code;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Multigraded regularity and truncations over products of projective spaces", "multireg"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "svg"}));
  app.add_option("--prime", o.prime, "Characteristic, overriding the input file");
  app.add_option("--threads", o.threads, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--output", o.output, "Write the result to this path");

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Input .mr file ('-' for stdin)")->required();
    return sub;
  };
  auto* betti = with_file(app.add_subcommand("betti", "Minimal graded Betti numbers"));
  betti->add_option("--truncate-at", o.truncate_at, "Truncate at degree d first");
  auto* trunc = with_file(app.add_subcommand("truncate", "Presentation of the truncation M_{>=d}"));
  trunc->add_option("--truncate-at", o.truncate_at, "Degree d")->required();
  auto* classify = with_file(app.add_subcommand("classify", "Linear / quasilinear classification of the resolution"));
  classify->add_option("--truncate-at", o.truncate_at, "Truncate at degree d first");
  auto* regularity = with_file(app.add_subcommand("regularity", "Minimal degrees d with M_{>=d} quasilinear"));
  regularity->add_option("--box", o.box, "Search box lo:hi");
  regularity->add_option("--mode", o.mode, "Q (regularity) or L (linear truncations)")
      ->check(CLI::IsMember({"L", "Q"}));
  auto* linear = with_file(app.add_subcommand("linear-truncations", "Minimal degrees d with M_{>=d} linear"));
  linear->add_option("--box", o.box, "Search box lo:hi");
  auto* bounds = with_file(app.add_subcommand("betti-bounds", "Regions bounded by the Betti numbers of M"));
  auto* ci = app.add_subcommand("ci-regularity", "Regularity of a complete intersection");
  ci->add_option("file", o.file, "Input .mr file with an ideal");
  ci->add_option("--degrees", o.degrees, "Generator degrees, e.g. '1,1;1,2'");
  auto* region = app.add_subcommand("region", "Generators of L_i(d) or Q_i(d)");
  region->add_option("kind", o.region_kind, "L or Q")->required();
  region->add_option("i", o.region_index, "Index")->required();
  region->add_option("d", o.region_degree, "Degree")->required();
  auto* coh = with_file(app.add_subcommand("cohomology", "Local cohomology H^i_B(M) on a box"));
  coh->add_option("--box", o.box, "Box lo:hi");
  coh->add_option("--t-start", o.t_start, "First power of B");
  coh->add_option("--regular-at", o.regular_at, "Also decide d-regularity from the table");
  auto* sat = with_file(app.add_subcommand("saturate", "B-saturation of the relations"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return report_error(o, 2, "usage", e.what(), out, err);
  }

  try {
    Output res;
    if (betti->parsed()) res = cmd_betti(o);
    else if (trunc->parsed()) res = cmd_truncate(o);
    else if (classify->parsed()) res = cmd_classify(o);
    else if (regularity->parsed()) res = cmd_region_search(o, o.mode == "L" ? RegionMode::L : RegionMode::Q);
    else if (linear->parsed()) res = cmd_region_search(o, RegionMode::L);
    else if (bounds->parsed()) res = cmd_betti_bounds(o);
    else if (ci->parsed()) res = cmd_ci_regularity(o);
    else if (region->parsed()) res = cmd_region(o);
    else if (coh->parsed()) res = cmd_cohomology(o);
    else if (sat->parsed()) res = cmd_saturate(o);

    if (o.format == "json") {
      emit(o, res.js.dump(2) + "\n", out);
    } else if (o.format == "svg") {
      if (!res.svg) {
        if (!res.js.contains("generators")) throw UsageError("--format svg applies to region output only");
        err << "multireg: SVG output needs r = 2; printing the generator list\n";
        emit(o, res.text, out);
      } else {
        emit(o, *res.svg, out);
      }
    } else {
      emit(o, res.text, out);
    }
    return 0;
  } catch (const UsageError& e) {
    return report_error(o, 2, "usage", e.what(), out, err);
  } catch (const NotSaturated& e) {
    return report_error(o, 1, "not_saturated", e.what(), out, err);
  } catch (const StabilizationNotReached& e) {
    return report_error(o, 1, "not_stabilized", e.what(), out, err);
  } catch (const BoxTooSmall& e) {
    return report_error(o, 1, "box_too_small", e.what(), out, err);
  } catch (const std::exception& e) {
    return report_error(o, 1, "computation", e.what(), out, err);
  }
}

} // namespace multireg
