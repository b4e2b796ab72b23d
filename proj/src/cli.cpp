#include "mds/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mds/errors.hpp"
#include "mds/render.hpp"

namespace mds {

namespace {

struct OutputOpts {
  bool json = false;
  std::string format;

  void attach(CLI::App* app) {
    app->add_flag("--json", json, "Shorthand for --format=json");
    app->add_option("--format", format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  }

  Format resolve(Format fallback) const {
    if (json) return Format::Json;
    if (!format.empty()) return parse_format(format);
    return fallback;
  }
};

Json read_json_input(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

RatVec coords(const std::string& text, std::size_t len, const char* what) {
  RatVec v = parse_rational_list(text);
  if (v.size() != len) {
    throw ParseError(std::string(what) + " needs " + std::to_string(len) + " coordinates, got '" + text + "'");
  }
  return v;
}

int verdict_exit(const CheckReport& r) { return r.verdict == Verdict::NotMDS ? kExitOk : kExitInconclusive; }

CheckOptions check_options(const std::string& m_factor) {
  CheckOptions o;
  o.m_factor = parse_integer(m_factor);
  if (o.m_factor < 1) throw ParseError("--m-factor must be positive, got '" + m_factor + "'");
  return o;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("MDS_ORACLE_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sufficient criteria for blowups of toric varieties that are not Mori Dream Spaces"};
  app.name("mds-oracle");
  app.require_subcommand(1);

  std::string left, right, input, tuple, weights, m_factor = "1";
  OutputOpts o2, o3, ot, ow, orays, osearch;
  bool single_point = false;

  auto* c2 = app.add_subcommand("check-2d", "Plane 4-gon criterion");
  c2->add_option("--left", left, "x,y of the left vertex");
  c2->add_option("--right", right, "x,y of the right vertex");
  c2->add_option("--input", input, "polygon JSON file, - for stdin");
  c2->add_option("--m-factor", m_factor, "multiply the least integral scale");
  o2.attach(c2);

  auto* c3 = app.add_subcommand("check-3d", "Three-dimensional criterion");
  c3->add_option("--left", left, "x,y,z of the left vertex");
  c3->add_option("--right", right, "x,y,z of the right vertex");
  c3->add_option("--input", input, "polytope JSON file, - for stdin");
  c3->add_option("--m-factor", m_factor, "multiply the least integral scale");
  c3->add_flag("--n1", single_point, "use the single-point specialization");
  o3.attach(c3);

  auto* ct = app.add_subcommand("check-tetra", "Tetrahedron criterion in tuple form");
  ct->add_option("--tuple", tuple, "x_L,x_R,y_0,z_0");
  ct->add_option("--input", input, "tetra JSON file, - for stdin");
  ot.attach(ct);

  auto* cw = app.add_subcommand("check-wps", "Weighted projective space criterion");
  cw->add_option("--weights", weights, "a,b,c_1,...")->required();
  ow.attach(cw);

  auto* cr = app.add_subcommand("rays", "Normal fan, weights and lattice index of a tetrahedron");
  cr->add_option("--tuple", tuple, "x_L,x_R,y_0,z_0")->required();
  orays.attach(cr);

  int dim = 3;
  std::int64_t bound = 50;
  unsigned jobs = default_jobs();
  auto* cs = app.add_subcommand("search", "Exhaustive weighted projective space search");
  cs->add_option("--dim", dim, "3 or 4")->check(CLI::IsMember({3, 4}));
  cs->add_option("--bound", bound, "weights are < bound")->check(CLI::PositiveNumber);
  cs->add_option("--jobs", jobs, "worker threads (default MDS_ORACLE_JOBS or 1)")->check(CLI::PositiveNumber);
  osearch.attach(cs);

  long samples_2d = 200, samples_3d = 200;
  std::uint64_t seed = 20240101;
  auto* cv = app.add_subcommand("verify-derivative", "Closed forms against the kernel oracle");
  cv->add_option("--samples-2d", samples_2d)->check(CLI::NonNegativeNumber);
  cv->add_option("--samples-3d", samples_3d)->check(CLI::NonNegativeNumber);
  cv->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (c2->parsed()) {
      std::optional<Polygon4> p;
      if (!input.empty()) {
        p = polygon_from_json(read_json_input(input));
      } else {
        if (left.empty() || right.empty()) throw ParseError("check-2d needs --left and --right, or --input");
        const RatVec l = coords(left, 2, "--left"), r = coords(right, 2, "--right");
        p = Polygon4({l[0], l[1]}, {r[0], r[1]});
      }
      const CheckReport rep = check_2d(*p, check_options(m_factor));
      out << render(rep, o2.resolve(Format::Md));
      return verdict_exit(rep);
    }
    if (c3->parsed()) {
      std::optional<Polytope3> p;
      if (!input.empty()) {
        p = polytope_from_json(read_json_input(input));
      } else {
        if (left.empty() || right.empty()) throw ParseError("check-3d needs --left and --right, or --input");
        const RatVec l = coords(left, 3, "--left"), r = coords(right, 3, "--right");
        p = Polytope3({l[0], l[1], l[2]}, {r[0], r[1], r[2]});
      }
      const auto opts = check_options(m_factor);
      const CheckReport rep = single_point ? check_3d_n1(*p, opts) : check_3d(*p, opts);
      out << render(rep, o3.resolve(Format::Md));
      return verdict_exit(rep);
    }
    if (ct->parsed()) {
      TetraTuple t;
      if (!input.empty()) {
        t = tetra_from_json(read_json_input(input));
      } else {
        if (tuple.empty()) throw ParseError("check-tetra needs --tuple or --input");
        const RatVec v = coords(tuple, 4, "--tuple");
        t = {v[0], v[1], v[2], v[3]};
      }
      const CheckReport rep = check_tetra(t);
      out << render(rep, ot.resolve(Format::Md));
      return verdict_exit(rep);
    }
    if (cw->parsed()) {
      WpsWeights w;
      try {
        w = WpsWeights(parse_int_list(weights));
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + " in '" + weights + "'");
      }
      const CheckReport rep = check_wps(w);
      out << render(rep, ow.resolve(Format::Json));
      return verdict_exit(rep);
    }
    if (cr->parsed()) {
      const RatVec v = coords(tuple, 4, "--tuple");
      const TetraTuple t{v[0], v[1], v[2], v[3]};
      const FanData fan = tetra_fan(t);
      const Format f = orays.resolve(Format::Json);
      if (f == Format::Json) {
        out << to_json(fan).dump(2) << "\n";
      } else {
        const char* sep = f == Format::Csv ? "," : " | ";
        if (f == Format::Md) out << "| ray | weight |\n|---|---|\n";
        if (f == Format::Csv) out << "ray,weight\n";
        for (std::size_t i = 0; i < 4; ++i) {
          std::string ray = "(";
          for (std::size_t k = 0; k < fan.rays[i].size(); ++k) ray += (k ? "," : "") + to_string(fan.rays[i][k]);
          ray += ")";
          if (f == Format::Md) {
            out << "| " << ray << sep << fan.weights.all()[i] << " |\n";
          } else {
            out << '"' << ray << '"' << sep << fan.weights.all()[i] << "\n";
          }
        }
        out << (f == Format::Md ? "\nindex " : "index,") << to_string(fan.index) << "\n";
      }
      return kExitOk;
    }
    if (cs->parsed()) {
      const auto rows = search(dim, bound, jobs);
      out << render(rows, osearch.resolve(Format::Md));
      return kExitOk;
    }
    if (cv->parsed()) {
      const CampaignResult res = run_campaign(samples_2d, samples_3d, seed);
      err << "2d: " << res.passed_2d << " passed, " << res.failed_2d << " failed; 3d: " << res.passed_3d
          << " passed, " << res.failed_3d << " failed\n";
      out << to_json(res).dump(2) << "\n";
      return res.ok() ? kExitOk : kExitInconclusive;
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::overflow_error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace mds
