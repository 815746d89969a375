#include "eqk/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "eqk/ahss.hpp"
#include "eqk/amalgam.hpp"
#include "eqk/closed_form.hpp"
#include "eqk/coxeter.hpp"
#include "eqk/error.hpp"
#include "eqk/json_io.hpp"
#include "eqk/panel_complex.hpp"

namespace eqk::cli {

namespace {

using json_io::Json;

struct Config {
  std::string command;
  std::vector<std::uint64_t> r, m;
  std::string file;
  std::string from_complex;
  std::string theory = "k";
  std::string model = "davis";
  std::string emit = "result";
  bool emit_complex = false;
  bool emit_cochain = false;
  bool check = false;
  std::string format = "json";
  std::string out;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path, path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, "malformed JSON in " + path + ": " + e.what(), path);
  }
}

struct Model {
  std::string name;
  OrbitComplex complex;
};

struct Evaluated {
  std::string name;
  E2Page page;
  std::vector<AbutmentReport> reports;
};

Json degrees_json(const std::vector<AbutmentReport>& reports) {
  Json d = Json::object();
  for (const auto& r : reports) d[std::to_string(r.degree)] = json_io::to_json(r);
  return d;
}

std::string describe(const AbutmentReport& r) {
  if (r.resolved) return to_string(*r.resolved);
  std::string s = "extension of";
  for (const auto& p : r.pieces) s += " [" + to_string(p.group) + " at p=" + std::to_string(p.p) + "]";
  return s;
}

bool same_abutment(const std::vector<AbutmentReport>& a, const std::vector<AbutmentReport>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].resolved != b[i].resolved) return false;
    if (a[i].pieces.size() != b[i].pieces.size()) return false;
    for (std::size_t k = 0; k < a[i].pieces.size(); ++k) {
      if (a[i].pieces[k].p != b[i].pieces[k].p || a[i].pieces[k].group != b[i].pieces[k].group) return false;
    }
  }
  return true;
}

int execute(const Config& cfg, std::ostream& out) {
  const Theory theory = cfg.theory == "ko" ? Theory::KO : Theory::K;
  Json input;
  std::optional<AmalgamSpec> amalgam;
  std::optional<CoxeterMatrix> coxeter;
  std::vector<Model> models;

  if (cfg.command == "amalgam") {
    if (!cfg.file.empty()) {
      amalgam = json_io::amalgam_from_json(read_json(cfg.file));
    } else if (!cfg.m.empty()) {
      amalgam = AmalgamSpec{cfg.r, cfg.m};
      amalgam->validate();
    }
    if (amalgam) {
      if (theory == Theory::KO && !amalgam->all_r_odd()) {
        throw Error(ErrorKind::InvalidInput, "ko needs every r_i odd", "r");
      }
      input = json_io::to_json(*amalgam);
    }
  } else if (!cfg.file.empty()) {
    coxeter = json_io::coxeter_from_json(read_json(cfg.file));
    input = json_io::to_json(*coxeter);
  }

  if (!cfg.from_complex.empty()) {
    models.push_back({"from_complex", json_io::orbit_complex_from_json(read_json(cfg.from_complex))});
  } else if (amalgam) {
    models.push_back({"amalgam", build_amalgam_orbit_complex(*amalgam)});
  } else if (coxeter) {
    const SphericalPoset poset = enumerate_spherical_subsets(*coxeter);
    if (cfg.model != "bestvina") models.push_back({"davis", build_davis_orbit_complex(poset)});
    if (cfg.model != "davis") {
      models.push_back({"bestvina", orbit_complex_from_panel(build_bestvina_complex(poset), poset)});
    }
  } else {
    throw Error(ErrorKind::InvalidInput,
                cfg.command == "amalgam" ? "give --m (and --r) or --file" : "give --file", "input");
  }

  std::optional<ClosedForm> closed;
  if (cfg.check) {
    if (amalgam) {
      closed = closed_form_amalgam(*amalgam, theory);
    } else if (coxeter) {
      closed = closed_form_coxeter(*coxeter, theory);
    }
    if (!closed) throw Error(ErrorKind::InvalidInput, "no closed form applies to this input", "check");
  }

  const std::string emit = cfg.emit_complex ? "complex" : cfg.emit_cochain ? "cochain" : cfg.emit;
  auto per_model = [&](auto&& f) {
    if (models.size() == 1) return f(models.front());
    Json j = Json::object();
    for (const auto& mdl : models) j[mdl.name] = f(mdl);
    return j;
  };
  if (emit == "complex") {
    out << per_model([](const Model& mdl) { return json_io::to_json(mdl.complex); }).dump(2) << "\n";
    return 0;
  }
  if (emit == "cochain") {
    out << per_model([&](const Model& mdl) {
             Json all = Json::array();
             for (unsigned n = 0; n < period(theory); ++n) all.push_back(json_io::cochain_to_json(mdl.complex, {theory, n}));
             return all;
           }).dump(2)
        << "\n";
    return 0;
  }

  std::vector<Evaluated> results;
  for (const auto& mdl : models) {
    E2Page page = build_e2(mdl.complex, theory);
    if (emit == "e2page") {
      results.push_back({mdl.name, std::move(page), {}});
      continue;
    }
    auto reports = assemble_abutment(page);
    results.push_back({mdl.name, std::move(page), std::move(reports)});
  }
  if (emit == "e2page") {
    std::size_t i = 0;
    out << per_model([&](const Model&) { return json_io::to_json(results[i++].page); }).dump(2) << "\n";
    return 0;
  }

  const Evaluated& primary = results.front();
  bool agree = true;
  for (const auto& r : results) agree = agree && same_abutment(r.reports, primary.reports);
  std::vector<Verdict> verdicts;
  if (closed) verdicts = compare(primary.reports, *closed);
  bool mismatch = !agree;
  for (const auto& v : verdicts) mismatch = mismatch || v.kind == VerdictKind::Mismatch;

  if (cfg.format == "text") {
    out << "theory: " << to_string(theory) << " (period " << period(theory) << ")\n";
    if (coxeter) {
      std::size_t n = 0;
      const CoxeterFamily fam = detect_family(*coxeter, &n);
      out << "family: " << to_string(fam) << "\n";
    }
    for (const auto& r : results) {
      out << "model " << r.name << ":\n";
      for (const auto& rep : r.reports) out << "  degree " << rep.degree << ": " << describe(rep) << "\n";
    }
    if (results.size() > 1) out << "models agree: " << (agree ? "yes" : "no") << "\n";
    for (const auto& v : verdicts) {
      out << "check degree " << v.degree << ": " << to_string(v.kind);
      if (!v.diff.empty()) out << " (" << v.diff << ")";
      out << "\n";
    }
  } else {
    Json report{{"command", cfg.command}};
    if (!input.is_null()) report["input"] = input;
    report["theory"] = to_string(theory);
    report["period"] = period(theory);
    report["model"] = primary.name;
    report["degrees"] = degrees_json(primary.reports);
    if (results.size() > 1) {
      Json ms = Json::object();
      for (const auto& r : results) ms[r.name] = degrees_json(r.reports);
      report["models"] = ms;
      report["models_agree"] = agree;
    }
    if (closed) report["closed_form"] = json_io::to_json(*closed);
    Json vs = Json::array();
    for (const auto& v : verdicts) vs.push_back(json_io::to_json(v));
    report["verdicts"] = vs;
    out << report.dump(2) << "\n";
  }
  return mismatch ? 2 : 0;
}

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--file", cfg.file, "JSON input file");
  sub->add_option("--theory", cfg.theory, "k or ko")->check(CLI::IsMember({"k", "ko"}));
  sub->add_option("--emit", cfg.emit, "result, complex, cochain or e2page")
      ->check(CLI::IsMember({"result", "complex", "cochain", "e2page"}));
  sub->add_flag("--emit-complex", cfg.emit_complex, "dump the orbit complex");
  sub->add_flag("--emit-cochain", cfg.emit_cochain, "dump the Bredon cochain complexes");
  sub->add_flag("--check", cfg.check, "compare with the closed form");
  sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", cfg.out, "write the report to a file");
  sub->add_option("--from-complex", cfg.from_complex)->group("");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Equivariant K- and KO-theory of classifying spaces for proper actions", "eqk"};
  app.require_subcommand(1);
  auto* am = app.add_subcommand("amalgam", "amalgam of cyclic groups along a path");
  am->add_option("--r", cfg.r, "edge orders r_1..r_k")->delimiter(',');
  am->add_option("--m", cfg.m, "indices m_0..m_k")->delimiter(',');
  add_common(am, cfg);
  auto* cx = app.add_subcommand("coxeter", "Coxeter group from a matrix file");
  cx->add_option("--model", cfg.model, "davis, bestvina or both")->check(CLI::IsMember({"davis", "bestvina", "both"}));
  add_common(cx, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << json_io::to_json(Error(ErrorKind::InvalidInput, e.what(), "arguments")).dump(2) << "\n";
    return 1;
  }
  cfg.command = am->parsed() ? "amalgam" : "coxeter";

  try {
    if (cfg.out.empty()) return execute(cfg, out);
    std::ostringstream buffer;
    const int status = execute(cfg, buffer);
    std::ofstream file(cfg.out);
    if (!file) throw Error(ErrorKind::InvalidInput, "cannot write " + cfg.out, "out");
    file << buffer.str();
    return status;
  } catch (const Error& e) {
    out << json_io::to_json(e).dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "eqk: " << e.what() << "\n";
    out << json_io::to_json(Error(ErrorKind::InvalidInput, e.what())).dump(2) << "\n";
    return 1;
  }
}

}  // namespace eqk::cli
