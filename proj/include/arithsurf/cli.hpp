#ifndef ARITHSURF_CLI_HPP
#define ARITHSURF_CLI_HPP

// Command-line front end. Every number leaves as a decimal string ("p/q" for
// rationals), one JSON object per output line.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "arithsurf/chatelet.hpp"
#include "arithsurf/enriques.hpp"
#include "arithsurf/fermat.hpp"
#include "arithsurf/kummer.hpp"
#include "arithsurf/markoff.hpp"

namespace arithsurf::cli {

using Json = nlohmann::ordered_json;

enum class Status { kOk, kExpectedEmptyViolated, kPreconditionFailed, kInternalError };

inline int exit_code(Status s) {
  switch (s) {
    case Status::kOk: return 0;
    case Status::kExpectedEmptyViolated: return 2;
    case Status::kPreconditionFailed: return 1;
    case Status::kInternalError: return 3;
  }
  return 3;
}

struct CommandResult {
  Status status = Status::kOk;
  std::vector<Json> lines;
  std::string diagnostics;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

inline std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& p : split(s, ',')) out.push_back(parse_rational(p));
  return out;
}

inline ProjectivePoint parse_point(const std::string& s) {
  auto v = parse_rationals(s);
  return ProjectivePoint::from_rationals(std::span<const Rational>(v));
}

inline Json point_json(const ProjectivePoint& p) {
  Json arr = Json::array();
  for (const auto& c : p.coords()) arr.push_back(to_string(c));
  return arr;
}

inline ProjectivePoint point_from_json(const Json& j) {
  const Json& arr = j.is_object() ? j.at("point") : j;
  std::vector<Rational> coords;
  for (const auto& c : arr) coords.push_back(parse_rational(c.is_string() ? c.get<std::string>() : c.dump()));
  return ProjectivePoint::from_rationals(std::span<const Rational>(coords));
}

inline std::string string_field(const Json& j, const char* key) {
  const Json& v = j.at(key);
  return v.is_string() ? v.get<std::string>() : v.dump();
}

inline Json found_json(const std::vector<ProjectivePoint>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(point_json(p));
  return Json{{"found", arr}};
}

}  // namespace detail

/// Parses targets.json: [{"ell": "101", "xi": "...", "mu": "...", "lambda": "..."}, ...].
inline std::vector<chatelet::ResidueTarget> parse_targets(const Json& j) {
  std::vector<chatelet::ResidueTarget> out;
  for (const auto& t : j) {
    const Integer ell_int = parse_integer(detail::string_field(t, "ell"));
    if (ell_int <= 0 || !ell_int.fits_ulong_p()) throw Error(ErrorKind::kPrecondition, "ell out of range");
    const std::uint64_t ell = ell_int.get_ui();
    out.push_back({ell, Residue(parse_integer(detail::string_field(t, "xi")), ell),
                   Residue(parse_integer(detail::string_field(t, "mu")), ell),
                   Residue(parse_integer(detail::string_field(t, "lambda")), ell)});
  }
  return out;
}

/// Routes args (without the program name) to a module operation.
inline CommandResult dispatch(const std::vector<std::string>& args, std::istream& input = std::cin) {
  CommandResult result;
  CLI::App app{"Exact computations on rational points of surfaces", "arithsurf"};
  app.require_subcommand(1);
  std::size_t max_digits = 10000;
  unsigned workers = workers_from_env();
  app.add_option("--max-digits", max_digits, "Cap on coordinate digits in multiplication chains");
  app.add_option("--workers", workers, "Threads for exhaustive searches (env ARITHSURF_WORKERS)");
  auto limits = [&] {
    GroupLimits l;
    l.max_digits = max_digits;
    return l;
  };
  auto emit = [&](Json j) { result.lines.push_back(std::move(j)); };

  // fermat
  auto* fermat_cmd = app.add_subcommand("fermat", "Fermat quartic x^4+y^4=z^4+w^4");
  fermat_cmd->require_subcommand(1);
  auto* f_lines = fermat_cmd->add_subcommand("lines", "The eight rational lines");
  f_lines->callback([&] {
    for (const auto& line : fermat::rational_lines()) {
      Json pair = Json::array();
      for (const auto* lf : {&line.first, &line.second}) {
        Json arr = Json::array();
        for (long c : *lf) arr.push_back(std::to_string(c));
        pair.push_back(arr);
      }
      emit(Json{{"line", pair}});
    }
  });
  std::string lambda_text;
  long count = 1;
  auto* f_gen = fermat_cmd->add_subcommand("gen", "Multiples of the section on a lambda-fiber");
  f_gen->add_option("--lambda", lambda_text, "Fiber parameter (p/q)")->required();
  f_gen->add_option("--count", count, "Number of multiples")->required();
  f_gen->callback([&] {
    for (const auto& p : fermat::generate_lambda_points(parse_rational(lambda_text), count, limits())) {
      emit(Json{{"point", detail::point_json(p)}});
    }
  });
  std::string seed_text, pattern_text;
  auto* f_compose = fermat_cmd->add_subcommand("compose", "Alternate multiplications in the two fibrations");
  f_compose->add_option("--seed", seed_text, "Point on F, comma separated")->required();
  f_compose->add_option("--pattern", pattern_text, "Steps like lambda:2,mu:-1");
  f_compose->callback([&] {
    std::vector<fermat::ComposeStep> steps;
    for (const auto& item : detail::split(pattern_text, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) throw Error(ErrorKind::kPrecondition, "pattern step needs tag:n");
      std::string tag = item.substr(0, colon);
      fermat::Fibration fib;
      if (tag == "lambda" || tag == "l") {
        fib = fermat::Fibration::kLambda;
      } else if (tag == "mu" || tag == "m") {
        fib = fermat::Fibration::kMu;
      } else {
        throw Error(ErrorKind::kPrecondition, "unknown fibration tag '" + tag + "'");
      }
      steps.push_back({fib, parse_integer(item.substr(colon + 1)).get_si()});
    }
    emit(Json{{"point", detail::point_json(fermat::compose_generate(detail::parse_point(seed_text), steps, limits()))}});
  });
  unsigned degree = 1;
  std::string input_path;
  auto* f_density = fermat_cmd->add_subcommand("density", "Kernel dimension of degree-d forms through points (JSON lines)");
  f_density->add_option("--degree", degree, "Form degree")->required();
  f_density->add_option("--input", input_path, "JSON-lines file (default: standard input)");
  f_density->callback([&] {
    std::ifstream file;
    std::istream* in = &input;
    if (!input_path.empty()) {
      file.open(input_path);
      if (!file) throw Error(ErrorKind::kPrecondition, "cannot open " + input_path);
      in = &file;
    }
    std::vector<ProjectivePoint> pts;
    std::string line;
    while (std::getline(*in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      pts.push_back(detail::point_from_json(Json::parse(line)));
    }
    emit(Json{{"degree", std::to_string(degree)},
              {"points", std::to_string(pts.size())},
              {"kernel_dimension", std::to_string(fermat::density_certificate(pts, degree))}});
  });

  // enriques
  auto* enriques_cmd = app.add_subcommand("enriques", "Quintic x0x2^4+x1x3^4=x0^2x1^3+x0^3x1^2");
  enriques_cmd->require_subcommand(1);
  std::string point_text;
  auto* e_check = enriques_cmd->add_subcommand("check", "Membership and square-root lift");
  e_check->add_option("--point", point_text, "Comma separated coordinates")->required();
  e_check->callback([&] {
    auto p = detail::parse_point(point_text);
    Json out{{"point", detail::point_json(p)}, {"on_surface", enriques::on_E(p)}};
    if (enriques::on_E(p)) {
      auto lift = enriques::lift_check(p);
      out["cover"] = std::string(enriques::to_string(lift.cover));
      if (lift.witness) out["witness"] = to_string(*lift.witness);
      if (lift.cover != enriques::Cover::kDegenerate) out["valuations_even"] = enriques::valuation_parity_check(p);
    }
    emit(out);
  });
  auto* e_push = enriques_cmd->add_subcommand("push", "Image of a Fermat point");
  e_push->add_option("--point", point_text, "Point on F")->required();
  e_push->callback([&] { emit(Json{{"point", detail::point_json(enriques::push_from_F(detail::parse_point(point_text)))}}); });
  long height = 1;
  auto* e_scan = enriques_cmd->add_subcommand("scan", "All points up to a height; lifting check on each");
  e_scan->add_option("--height", height, "Coordinate bound")->required();
  e_scan->callback([&] {
    auto report = enriques::scan(height, workers);
    Json viol = Json::array();
    for (const auto& p : report.violations) viol.push_back(detail::point_json(p));
    emit(Json{{"height", std::to_string(height)},
              {"points", std::to_string(report.points.size())},
              {"plus", std::to_string(report.plus)},
              {"minus", std::to_string(report.minus)},
              {"degenerate", std::to_string(report.degenerate)},
              {"violations", viol}});
    if (!report.violations.empty()) result.status = Status::kExpectedEmptyViolated;
  });

  // chatelet
  auto* chatelet_cmd = app.add_subcommand("chatelet", "Cubic surfaces t(x^2+y^2)=(cz-7t)(z^2-2t^2)");
  chatelet_cmd->require_subcommand(1);
  auto* c_seed = chatelet_cmd->add_subcommand("seed", "Multiples of (1,1,2) on the mu=1 fiber of X_A");
  c_seed->add_option("--count", count, "Number of multiples")->required();
  c_seed->callback([&] {
    for (const auto& p : chatelet::generate_seed_points(count, limits())) {
      emit(Json{{"xi", to_string(p.xi)}, {"mu", to_string(p.mu)}, {"lambda", to_string(p.lambda)}});
    }
  });
  std::string targets_path;
  std::uint64_t l0 = chatelet::kDefaultL0;
  auto* c_wwap = chatelet_cmd->add_subcommand("wwap", "Rational point of X_A with prescribed reductions");
  c_wwap->add_option("--targets", targets_path, "JSON array of {ell, xi, mu, lambda}")->required();
  c_wwap->add_option("--l0", l0, "Smallest excluded prime bound");
  c_wwap->callback([&] {
    std::ifstream file(targets_path);
    if (!file) throw Error(ErrorKind::kPrecondition, "cannot open " + targets_path);
    auto targets = parse_targets(Json::parse(file));
    chatelet::WwapOptions opts;
    opts.l0 = l0;
    emit(Json{{"point", detail::point_json(chatelet::wwap_solve(targets, opts))}});
  });
  bool no_filter = false;
  auto* c_wap = chatelet_cmd->add_subcommand("wapscan", "Search the real component |z/t| <= sqrt 2 of X_A");
  c_wap->add_option("--height", height, "Bound on |t|, |z|")->required();
  c_wap->add_flag("--no-component-filter", no_filter, "Control run over both components");
  c_wap->callback([&] {
    auto found = chatelet::wap_failure_search(height, !no_filter, workers);
    emit(detail::found_json(found));
    if (!no_filter && !found.empty()) result.status = Status::kExpectedEmptyViolated;
  });
  auto* c_2adic = chatelet_cmd->add_subcommand("2adic", "Search the 2-adic neighbourhood in the second component of X_B");
  c_2adic->add_option("--height", height, "Coordinate bound")->required();
  c_2adic->add_flag("--no-filters", no_filter, "Control run without component and congruence filters");
  c_2adic->callback([&] {
    chatelet::TwoAdicFilters filters;
    filters.component = filters.congruences = !no_filter;
    auto found = chatelet::two_adic_search(height, filters, workers);
    emit(detail::found_json(found));
    if (!no_filter && !found.empty()) result.status = Status::kExpectedEmptyViolated;
  });

  // kummer
  auto* kummer_cmd = app.add_subcommand("kummer", "Kummer surface f2(x2) = w^2 f1(x1)");
  kummer_cmd->require_subcommand(1);
  std::string f1_text, f2_text, p1_text, p2_text;
  auto* k_witness = kummer_cmd->add_subcommand("witness", "Points whose f1(u1) is not a square");
  k_witness->add_option("--f1", f1_text, "Cubic coefficients, high to low")->required();
  k_witness->add_option("--p1", p1_text, "Point a,b on y^2 = f1(x)")->required();
  k_witness->add_option("--f2", f2_text, "Cubic coefficients, high to low")->required();
  k_witness->add_option("--p2", p2_text, "Point a,b on y^2 = f2(x)")->required();
  k_witness->add_option("--count", count, "Number of multiples")->required();
  k_witness->callback([&] {
    auto data = [](const std::string& f, const std::string& p) {
      auto c = detail::parse_rationals(f);
      auto ab = detail::parse_rationals(p);
      if (c.size() != 4 || ab.size() != 2) throw Error(ErrorKind::kPrecondition, "need 4 coefficients and a point a,b");
      return kummer::make_cubic_data({c[0], c[1], c[2], c[3]}, ab[0], ab[1]);
    };
    auto z = kummer::z_curve(data(f1_text, p1_text), data(f2_text, p2_text), limits());
    auto report = kummer::generate_witnesses(z, count);
    for (const auto& w : report.retained) {
      emit(Json{{"u1", to_string(w.u1)}, {"u2", to_string(w.u2)}, {"w", to_string(w.w)}});
    }
    emit(Json{{"retained", std::to_string(report.retained.size())},
              {"examined", std::to_string(report.examined)},
              {"filtered", std::to_string(report.filtered)}});
  });

  // markoff
  auto* markoff_cmd = app.add_subcommand("markoff", "Markoff surface x^2+y^2+z^2=3xyz");
  markoff_cmd->require_subcommand(1);
  std::int64_t bound = 1;
  bool as_json = true;
  auto* m_orbit = markoff_cmd->add_subcommand("orbit", "Orbit of (1,1,1) up to a bound");
  m_orbit->add_option("--bound", bound, "Largest coordinate")->required();
  m_orbit->add_flag("--json", as_json, "JSON lines output (the only format)");
  m_orbit->callback([&] {
    for (const auto& t : markoff::orbit(bound)) {
      emit(Json{{"triple", Json::array({std::to_string(t.x), std::to_string(t.y), std::to_string(t.z)})}});
    }
  });
  auto* m_verify = markoff_cmd->add_subcommand("verify", "Orbit equals exhaustive solution set up to a bound");
  m_verify->add_option("--bound", bound, "Largest coordinate")->required();
  m_verify->callback([&] { emit(Json{{"equal", markoff::verify_single_orbit(bound, workers)}}); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.diagnostics = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = Status::kPreconditionFailed;
    result.lines.clear();
    result.diagnostics = std::string(e.what()) + "\n" + app.help();
    return result;
  } catch (const Error& e) {
    result.lines.clear();
    result.diagnostics = e.what();
    switch (e.kind()) {
      case ErrorKind::kInternal: result.status = Status::kInternalError; break;
      case ErrorKind::kTheoremViolation: result.status = Status::kExpectedEmptyViolated; break;
      default: result.status = Status::kPreconditionFailed; break;
    }
    return result;
  } catch (const nlohmann::json::exception& e) {
    result.status = Status::kPreconditionFailed;
    result.lines.clear();
    result.diagnostics = std::string("malformed JSON input: ") + e.what();
    return result;
  } catch (const std::exception& e) {
    result.status = Status::kInternalError;
    result.lines.clear();
    result.diagnostics = e.what();
    return result;
  }
  return result;
}

}  // namespace arithsurf::cli

#endif  // ARITHSURF_CLI_HPP
