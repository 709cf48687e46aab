#include "symsig/cli.hpp"

#include <CLI11.hpp>
#include <gmp.h>
#include <json.hpp>

#include <charconv>
#include <map>
#include <ostream>
#include <sstream>

#include "symsig/cyclic_singularity.hpp"
#include "symsig/errors.hpp"
#include "symsig/lattice_counting.hpp"
#include "symsig/signature.hpp"
#include "symsig/syzygy_rep.hpp"
#include "symsig/verify.hpp"

namespace symsig::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kDefaultSeriesBound = 1000;
constexpr std::int64_t kDefaultVerifyOrder = 12;

std::int64_t parse_int(std::string_view token) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
    throw ValidationError("expected an integer, got '" + std::string(token) + "'");
  return value;
}

std::int64_t single_chi(const JobSpec& spec) {
  if (spec.chi.size() > 1) throw ValidationError("--chi takes a single residue for cyclic singularities");
  return spec.chi.empty() ? 0 : spec.chi.front();
}

std::uint64_t series_bound(const JobSpec& spec, std::uint64_t fallback) {
  if (spec.n_max) return *spec.n_max;
  if (!spec.grid.empty()) return *std::max_element(spec.grid.begin(), spec.grid.end());
  return fallback;
}

Json series_json(const RatioSeries& series) {
  Json entries = Json::array();
  for (const auto& e : series.entries)
    entries.push_back(Json{{"N", e.degree_bound},
                           {"numerator", to_string(e.numerator)},
                           {"denominator", to_string(e.denominator)},
                           {"ratio", to_string(e.ratio)}});
  const ConvergenceReport report = convergence_report(series);
  Json scaled = Json::array();
  for (const auto& g : report.scaled_gaps) scaled.push_back(Json{{"N", g.degree_bound}, {"value", to_string(g.value)}});
  return Json{{"target", to_string(series.target)},
              {"entries", std::move(entries)},
              {"final_gap", to_string(report.final_gap)},
              {"scaled_gaps", std::move(scaled)},
              {"monotone_tail", report.monotone_tail}};
}

void write_series_csv(const RatioSeries& series, std::ostream& out) {
  out << "N,numerator,denominator,ratio_decimal\n";
  for (const auto& e : series.entries)
    out << e.degree_bound << ',' << e.numerator.get_str() << ',' << e.denominator.get_str() << ','
        << decimal_display(e.ratio) << '\n';
}

void emit(const Json& doc, std::ostream& out) { out << doc.dump() << '\n'; }

int run_staircase(const JobSpec& spec, std::ostream& out) {
  const CyclicType t = validate(spec.n, spec.a);
  const Staircase stairs = minimal_generators(t);
  if (spec.format == OutputFormat::csv) {
    out << "i,j\n";
    for (const auto& p : stairs.generators) out << p.i << ',' << p.j << '\n';
    return kExitOk;
  }
  Json list = Json::array();
  for (const auto& p : stairs.generators) list.push_back(Json::array({p.i, p.j}));
  emit(list, out);
  return kExitOk;
}

int run_weights(const JobSpec& spec, std::ostream& out) {
  const CyclicType t = validate(spec.n, spec.a);
  const SyzygyRepresentation rep = syzygy_weights(t);
  if (spec.format == OutputFormat::csv) {
    out << "k,weight\n";
    for (std::size_t k = 0; k < rep.weights.size(); ++k) out << k + 1 << ',' << rep.weights[k] << '\n';
    return kExitOk;
  }
  emit(Json{{"n", t.n()},
            {"a", t.a()},
            {"nu", rep.dimension()},
            {"weights", rep.weights},
            {"faithful", is_faithful(rep)}},
       out);
  return kExitOk;
}

int run_multiplicity(const JobSpec& spec, std::ostream& out) {
  const CyclicType t = validate(spec.n, spec.a);
  if (!spec.q) throw ValidationError("multiplicity requires --q");
  const std::int64_t chi = single_chi(spec);
  if (chi < 0 || chi >= t.n()) throw ValidationError("chi must lie in [0, " + std::to_string(t.n()) + ")");
  const DiagonalRepresentation rep = to_diagonal(syzygy_weights(t));
  const BigInt mult = multiplicity(rep, Character{{chi}}, *spec.q);
  const BigInt dim = sym_dim(rep.dimension(), *spec.q);
  if (spec.format == OutputFormat::csv) {
    out << "q,multiplicity,dimension\n" << *spec.q << ',' << mult.get_str() << ',' << dim.get_str() << '\n';
    return kExitOk;
  }
  emit(Json{{"n", t.n()},
            {"a", t.a()},
            {"chi", chi},
            {"q", *spec.q},
            {"multiplicity", to_string(mult)},
            {"dimension", to_string(dim)}},
       out);
  return kExitOk;
}

int run_series(const JobSpec& spec, std::ostream& out) {
  const CyclicType t = validate(spec.n, spec.a);
  const std::int64_t chi = single_chi(spec);
  const std::uint64_t bound = series_bound(spec, kDefaultSeriesBound);
  const RatioSeries series = ratio_series(t, chi, bound, spec.grid);
  if (spec.format == OutputFormat::csv) {
    write_series_csv(series, out);
    return kExitOk;
  }
  Json doc{{"n", t.n()}, {"a", t.a()}, {"chi", chi}, {"n_max", bound}};
  doc.update(series_json(series));
  emit(doc, out);
  return kExitOk;
}

int run_signature(const JobSpec& spec, std::ostream& out) {
  const CyclicType t = validate(spec.n, spec.a);
  const std::int64_t chi = single_chi(spec);
  const Rational value = exact_signature(t, chi);
  const SyzygyRepresentation syz = syzygy_weights(t);
  const WeightLattice lat = kernel_lattice(to_diagonal(syz));
  if (spec.format == OutputFormat::csv) {
    out << "n,a,chi,signature\n" << t.n() << ',' << t.a() << ',' << chi << ',' << to_string(value) << '\n';
    return kExitOk;
  }
  emit(Json{{"n", t.n()},
            {"a", t.a()},
            {"signature", to_string(value)},
            {"chi", chi},
            {"nu", syz.dimension()},
            {"weights", syz.weights},
            {"index", to_string(lat.index)}},
       out);
  return kExitOk;
}

int run_general(const JobSpec& spec, std::ostream& out) {
  if (spec.moduli.empty()) throw ValidationError("general requires --moduli");
  if (spec.weights.empty()) throw ValidationError("general requires --weights");
  AbelianGroup group(spec.moduli);
  std::vector<Character> weights;
  for (const auto& w : spec.weights) weights.push_back(Character{w});
  const DiagonalRepresentation rep(group, std::move(weights));
  const Character chi = spec.chi.empty() ? group.zero() : group.normalize(Character{spec.chi});
  for (std::size_t j = 0; j < spec.chi.size(); ++j)
    if (spec.chi[j] < 0 || spec.chi[j] >= spec.moduli[j])
      throw ValidationError("chi component " + std::to_string(j) + " out of range");

  const std::uint64_t bound = series_bound(spec, kDefaultSeriesBound);
  const GeneralSignature result = general_signature(rep, chi, bound, spec.grid);
  if (spec.format == OutputFormat::csv) {
    write_series_csv(result.series, out);
    return kExitOk;
  }
  Json ws = Json::array();
  for (const auto& w : rep.weights()) ws.push_back(w.components);
  Json doc{{"moduli", spec.moduli},
           {"weights", std::move(ws)},
           {"chi", chi.components},
           {"signature", to_string(result.value)},
           {"n_max", bound}};
  doc.update(series_json(result.series));
  emit(doc, out);
  return kExitOk;
}

int run_verify(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  const auto order = static_cast<std::int64_t>(spec.n_max.value_or(kDefaultVerifyOrder));
  if (order < 2) throw ValidationError("verify needs --n-max >= 2");
  const VerifyReport report = verify_grid(order);
  if (spec.format == OutputFormat::csv) {
    out << "check,cases,failures\n";
    for (const auto& c : report.checks) out << c.name << ',' << c.cases << ',' << c.failures << '\n';
  } else {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      Json entry{{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"passed", c.passed()}};
      if (!c.passed()) entry["first_failure"] = c.first_failure;
      checks.push_back(std::move(entry));
    }
    emit(Json{{"n_max", order}, {"checks", std::move(checks)}, {"passed", report.passed()}}, out);
  }
  for (const auto& c : report.checks)
    if (!c.passed()) err << "verify: " << c.name << " failed on " << c.first_failure << '\n';
  return report.passed() ? kExitOk : kExitInternal;
}

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string_view rest(text);
  if (rest.empty()) return out;
  for (;;) {
    const auto comma = rest.find(',');
    out.push_back(parse_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> parse_vector_list(const std::string& text) {
  std::vector<std::vector<std::int64_t>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_int_list(item));
  return out;
}

std::string decimal_display(const Rational& r) {
  mpf_class value(r, 256);
  char buf[64];
  gmp_snprintf(buf, sizeof buf, "%.12Fg", value.get_mpf_t());
  return buf;
}

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    switch (spec.command) {
      case Command::staircase: return run_staircase(spec, out);
      case Command::weights: return run_weights(spec, out);
      case Command::multiplicity: return run_multiplicity(spec, out);
      case Command::series: return run_series(spec, out);
      case Command::signature: return run_signature(spec, out);
      case Command::general: return run_general(spec, out);
      case Command::verify: return run_verify(spec, out, err);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized symmetric signature of cyclic quotient singularities", "symsig"};
  app.require_subcommand(1);

  JobSpec spec;
  std::string chi, grid, moduli, weights, format = "json";
  std::optional<std::uint64_t> n_max;

  const std::map<std::string, Command> commands{
      {"staircase", Command::staircase}, {"weights", Command::weights}, {"multiplicity", Command::multiplicity},
      {"series", Command::series},       {"signature", Command::signature}, {"general", Command::general},
      {"verify", Command::verify}};
  const std::map<std::string, std::string> help{
      {"staircase", "minimal monomial generators of the invariant ring"},
      {"weights", "character weights of the syzygy representation"},
      {"multiplicity", "multiplicity of a character in one symmetric power"},
      {"series", "exact partial ratios converging to the signature"},
      {"signature", "exact generalized symmetric signature"},
      {"general", "signature for a diagonal representation of a finite abelian group"},
      {"verify", "cross-check every stage against its independent oracle"}};

  for (const auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->callback([&spec, command = command] { spec.command = command; });
    const bool cyclic = command != Command::general && command != Command::verify;
    if (cyclic) {
      sub->add_option("--n", spec.n, "group order")->required();
      sub->add_option("--a", spec.a, "action exponent, coprime to n")->required();
    }
    if (command != Command::staircase && command != Command::weights && command != Command::verify)
      sub->add_option("--chi", chi, "character: a residue, or a comma list for `general`");
    if (command == Command::multiplicity) sub->add_option("--q", spec.q, "symmetric power degree")->required();
    if (command == Command::series || command == Command::general || command == Command::verify)
      sub->add_option("--n-max", n_max, command == Command::verify ? "largest group order" : "largest degree bound N");
    if (command == Command::series || command == Command::general)
      sub->add_option("--grid", grid, "comma list of degree bounds N");
    if (command == Command::general) {
      sub->add_option("--moduli", moduli, "comma list n_1,...,n_k")->required();
      sub->add_option("--weights", weights, "semicolon-separated weight vectors")->required();
    }
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  }

  try {
    app.parse(argc, argv);
    spec.n_max = n_max;
    spec.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
    spec.chi = parse_int_list(chi);
    for (std::int64_t g : parse_int_list(grid)) {
      if (g < 0) throw ValidationError("grid points must be nonnegative");
      spec.grid.push_back(static_cast<std::uint64_t>(g));
    }
    spec.moduli = parse_int_list(moduli);
    spec.weights = parse_vector_list(weights);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return run(spec, out, err);
}

}  // namespace symsig::cli
