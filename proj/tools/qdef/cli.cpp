#include "qdef/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qdef/algebra.hpp"
#include "qdef/coupling.hpp"
#include "qdef/hopf.hpp"
#include "qdef/json.hpp"
#include "qdef/reps.hpp"

namespace qdef::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_colour(const std::string& s, const char* flag) {
  if (s == "+1" || s == "1" || s == "+")
    return 1;
  if (s == "-1" || s == "-")
    return -1;
  throw UsageError(std::string(flag) + " expects +1 or -1, got '" + s + "'");
}

std::string num17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

QContext make_context(const RunConfig& cfg, double q) {
  double tol_abs = QContext::kDefaultTolAbs;
  double tol_rel = QContext::kDefaultTolRel;
  if (const char* env = std::getenv("QDEF_TOL")) {
    try {
      tol_abs = tol_rel = std::stod(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("QDEF_TOL is not a number: '") + env + "'");
    }
  }
  if (cfg.tol)
    tol_abs = tol_rel = *cfg.tol;
  return QContext(q, cfg.p, tol_abs, tol_rel);
}

std::vector<double> q_grid(const RunConfig& cfg) {
  if (cfg.q)
    return {*cfg.q};
  return {0.3, 0.5, 0.9};
}

double single_q(const RunConfig& cfg) { return cfg.q.value_or(0.5); }

int require(const std::optional<int>& v, const char* flag) {
  if (!v)
    throw UsageError(std::string("missing required flag ") + flag);
  if (*v < 0)
    throw UsageError(std::string(flag) + " must be >= 0");
  return *v;
}

// ---------------------------------------------------------------------------

int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
  // Descriptors do not depend on q; any admissible context will do.
  const QContext ctx(single_q(cfg), cfg.p.value_or(0.7));
  if (cfg.format == Format::Json) {
    json list = json::array();
    for (CatalogName name : catalog_names()) {
      const AlgebraSpec spec = make_catalog_algebra(name, ctx);
      json params = json::array({"q"});
      if (name == CatalogName::A3pq1)
        params.push_back("p");
      list.push_back(json{{"name", spec.name()},
                          {"kind", std::string(to_string(spec.kind()))},
                          {"F", spec.descriptor().F},
                          {"G", spec.descriptor().G},
                          {"H", spec.descriptor().H},
                          {"parameters", params},
                          {"note", spec.descriptor().note}});
    }
    out << list.dump(2) << "\n";
    return kOk;
  }
  for (CatalogName name : catalog_names()) {
    const AlgebraSpec spec = make_catalog_algebra(name, ctx);
    out << spec.name() << " (" << to_string(spec.kind()) << ")\n"
        << "  F(z) = " << spec.descriptor().F << "\n"
        << "  G(z) = " << spec.descriptor().G << "\n"
        << "  H(z) = " << spec.descriptor().H << "\n"
        << "  parameters: q" << (name == CatalogName::A3pq1 ? ", p" : "")
        << "\n"
        << "  " << spec.descriptor().note << "\n";
  }
  return kOk;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const QContext ctx = make_context(cfg, single_q(cfg));
  const AlgebraSpec spec = make_catalog_algebra(cfg.algebra, ctx);

  if (cfg.m0) {
    const LadderResult res =
        ladder_spectrum(spec, *cfg.m0, cfg.steps, cfg.casimir);
    const double boundary = ctx.fixed_point();
    if (cfg.format == Format::Json) {
      json j{{"algebra", spec.name()},
             {"q", ctx.q()},
             {"m0", *cfg.m0},
             {"boundary", boundary},
             {"raise", res.raise_chain},
             {"lower", res.lower_chain},
             {"side", std::string(to_string(res.side))},
             {"classification", std::string(to_string(res.classification))},
             {"unitarity_violated", res.unitarity_violated}};
      if (cfg.casimir)
        j["casimir"] = *cfg.casimir;
      out << j.dump() << "\n";
      return kOk;
    }
    out << "algebra " << spec.name() << ", q = " << ctx.q() << ", m0 = "
        << *cfg.m0 << "\n";
    out << "boundary (q-1)^-1 = " << boundary << "\n";
    out << "side: " << to_string(res.side) << "\n";
    out << "J+ chain:";
    for (double m : res.raise_chain)
      out << " " << m;
    out << "\nJ- chain:";
    for (double m : res.lower_chain)
      out << " " << m;
    out << "\nclassification: " << to_string(res.classification) << "\n";
    if (res.unitarity_violated)
      out << "warning: negative squared norm, seed not unitary for this "
             "Casimir value\n";
    return kOk;
  }

  const int N = require(cfg.N, "--N");
  Unirrep rep = [&] {
    switch (spec.catalog().value()) {
    case CatalogName::Aq1:
      return build_aq1_unirrep(N, ColourLabel(cfg.delta), ctx);
    case CatalogName::SuQ2:
      return build_suq2_unirrep(N, ctx);
    default:
      throw UsageError("finite unirreps are built for aq1 and suq2 only; use "
                       "--m0 for the ladder engine");
    }
  }();

  const double boundary = ctx.fixed_point();
  if (cfg.format == Format::Json) {
    json j{{"algebra", spec.name()},
           {"N", N},
           {"delta", rep.delta.value()},
           {"q", ctx.q()},
           {"boundary", boundary},
           {"labels", vector_to_json(rep.labels)},
           {"j0", vector_to_json(rep.j0)},
           {"casimir", rep.casimir}};
    out << j.dump() << "\n";
    return kOk;
  }
  if (cfg.format == Format::Csv) {
    out << "n,label,j0\n";
    for (int n = 0; n <= N; ++n)
      out << n << "," << num17(rep.labels(n)) << "," << num17(rep.j0(n))
          << "\n";
    return kOk;
  }
  out << "algebra " << spec.name() << ", N = " << N;
  if (spec.catalog() == CatalogName::Aq1)
    out << ", delta = " << rep.delta.str();
  out << ", q = " << ctx.q() << "\n";
  if (spec.catalog() == CatalogName::Aq1)
    out << "boundary (q-1)^-1 = " << boundary << "\n";
  out << std::setw(4) << "n" << std::setw(12) << "N/2-n" << std::setw(24)
      << "J0 eigenvalue" << "\n";
  out << std::setprecision(12);
  for (int n = 0; n <= N; ++n)
    out << std::setw(4) << n << std::setw(12) << rep.labels(n)
        << std::setw(24) << rep.j0(n) << "\n";
  out << "Casimir = " << rep.casimir << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------

VerificationReport suite_commutation(const RunConfig& cfg, const QContext& ctx) {
  VerificationReport report;
  auto push = [&](std::string name, std::vector<int> colours, int N,
                  double residual, double scale) {
    report.records.push_back(IdentityRecord{std::move(name), std::move(colours),
                                            {N}, ctx.q(), residual, scale,
                                            ctx.within(residual, scale)});
  };
  for (int N = 0; N <= cfg.max_N; ++N) {
    for (ColourLabel d : kColours) {
      const Unirrep rep = build_aq1_unirrep(N, d, ctx);
      const CommutationResiduals r = commutation_residuals(rep);
      push("commutation", {d.value()}, N, r.max(), r.scale);

      const Unirrep mapped = apply_map_p_delta(build_suq2_unirrep(N, ctx), d);
      const double diff = std::max({max_abs(mapped.J0() - rep.J0()),
                                    max_abs(mapped.Jp - rep.Jp),
                                    max_abs(mapped.Jm - rep.Jm)});
      push("pmap", {d.value()}, N, diff, max_abs(rep.J0()));

      const TransmuteReport t =
          transmute_check(rep, build_aq1_unirrep(N, -d, ctx));
      push("transmutation", {d.value()}, N, t.max(), max_abs(rep.J0()));
    }
    const CommutationResiduals r = commutation_residuals(build_suq2_unirrep(N, ctx));
    push("commutation.suq2", {}, N, r.max(), r.scale);
  }
  return report;
}

VerificationReport suite_casimir(const RunConfig& cfg, const QContext& ctx) {
  VerificationReport report;
  for (int N = 0; N <= cfg.max_N; ++N)
    for (ColourLabel d : kColours) {
      const Unirrep rep = build_aq1_unirrep(N, d, ctx);
      const CasimirReport c = check_casimir(rep);
      const double oracle = q_number(N / 2.0, ctx) * q_number(N / 2.0 + 1, ctx);
      const double residual =
          std::max({c.off_scalar, c.expected_residual, c.alt_form_residual,
                    std::abs(c.value - oracle)});
      report.records.push_back(IdentityRecord{"casimir", {d.value()}, {N},
                                              ctx.q(), residual, c.scale,
                                              ctx.within(residual, c.scale)});
    }
  return report;
}

std::vector<std::array<int, 3>> triples(const RunConfig& cfg) {
  if (cfg.N1 || cfg.N2 || cfg.N3)
    return {{require(cfg.N1, "--N1"), require(cfg.N2, "--N2"),
             require(cfg.N3, "--N3")}};
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a <= cfg.max_N; ++a)
    for (int b = 0; b <= cfg.max_N; ++b)
      for (int c = 0; c <= cfg.max_N; ++c)
        out.push_back({a, b, c});
  return out;
}

std::vector<std::pair<int, int>> pairs(const RunConfig& cfg) {
  if (cfg.N1 || cfg.N2)
    return {{require(cfg.N1, "--N1"), require(cfg.N2, "--N2")}};
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a <= cfg.max_N; ++a)
    for (int b = 0; b <= cfg.max_N; ++b)
      out.emplace_back(a, b);
  return out;
}

VerificationReport suite_consistency(const QContext& ctx) {
  VerificationReport report;
  std::vector<double> samples;
  for (int i = 0; i < 100; ++i)
    samples.push_back(-5.0 + 10.0 * i / 99.0);
  const QContext with_p(ctx.q(), ctx.p().value_or(0.7), ctx.tol_abs(),
                        ctx.tol_rel());
  for (CatalogName name : catalog_names()) {
    const ConsistencyReport c =
        check_consistency(make_catalog_algebra(name, with_p), samples);
    report.records.push_back(IdentityRecord{
        "consistency." + std::string(to_string(name)), {}, {}, ctx.q(),
        c.nan_at ? std::nan("") : c.max_residual, c.scale, c.pass});
  }
  return report;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> suites{
      "commutation", "casimir", "hopf", "rmatrix", "ybe", "coupling", "all"};
  if (std::find(suites.begin(), suites.end(), cfg.suite) == suites.end())
    throw UsageError("unknown suite '" + cfg.suite + "'");
  if (cfg.max_N < 0)
    throw UsageError("--max-N must be >= 0");
  const bool all = cfg.suite == "all";

  if (cfg.format == Format::Csv)
    out << "identity,colours,dims,q,residual,pass\n";
  std::size_t total = 0, failed = 0;
  auto emit = [&](const VerificationReport& r) {
    for (const auto& rec : r.records) {
      ++total;
      failed += !rec.pass;
      if (cfg.format == Format::Csv)
        out << rec.identity << "," << join_ints(rec.colours, ' ') << ","
            << join_ints(rec.dims, ' ') << "," << num17(rec.q) << ","
            << num17(rec.residual) << "," << (rec.pass ? "true" : "false")
            << "\n";
      else
        out << to_json(rec).dump() << "\n";
    }
    out.flush();
  };

  for (double q : q_grid(cfg)) {
    const QContext ctx = make_context(cfg, q);
    if (all)
      emit(suite_consistency(ctx));
    if (all || cfg.suite == "commutation")
      emit(suite_commutation(cfg, ctx));
    if (all || cfg.suite == "casimir")
      emit(suite_casimir(cfg, ctx));
    if (all || cfg.suite == "hopf") {
      for (auto [a, b] : pairs(cfg)) {
        emit(check_coproduct_homomorphism(a, b, ctx));
        emit(check_sigma_laws(a, b, ctx));
      }
      for (auto t : triples(cfg))
        emit(check_hopf_axioms(t, ctx));
    }
    if (all || cfg.suite == "rmatrix") {
      for (auto [a, b] : pairs(cfg))
        emit(check_r_matrix(a, b, ctx));
      for (auto t : triples(cfg))
        emit(check_quasitriangularity(t, ctx));
    }
    if (all || cfg.suite == "ybe")
      for (auto t : triples(cfg))
        emit(check_coloured_ybe(t, ctx));
    if (all || cfg.suite == "coupling")
      for (auto [a, b] : pairs(cfg))
        emit(check_coupling(a, b, ctx));
  }
  err << "verify: " << total << " identities checked, " << failed
      << " failed\n";
  return failed == 0 ? kOk : kIdentityFailure;
}

// ---------------------------------------------------------------------------

int cmd_export(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == Format::Csv)
    throw UsageError("export writes JSON only");
  const QContext ctx = make_context(cfg, single_q(cfg));
  json j;
  if (cfg.object == "rep") {
    const int N = require(cfg.N, "--N");
    if (cfg.algebra == "aq1")
      j = unirrep_to_json(build_aq1_unirrep(N, ColourLabel(cfg.delta), ctx));
    else if (cfg.algebra == "suq2")
      j = unirrep_to_json(build_suq2_unirrep(N, ctx));
    else
      throw UsageError("export rep supports --algebra aq1 or suq2");
  } else if (cfg.object == "rmatrix") {
    const Unirrep r1 =
        build_aq1_unirrep(require(cfg.N1, "--N1"), ColourLabel(cfg.zeta), ctx);
    const Unirrep r2 =
        build_aq1_unirrep(require(cfg.N2, "--N2"), ColourLabel(cfg.eta), ctx);
    j = rmatrix_to_json(r1, r2, r_matrix(r1, r2));
  } else if (cfg.object == "wigner") {
    const Unirrep r1 =
        build_aq1_unirrep(require(cfg.N1, "--N1"), ColourLabel(cfg.zeta), ctx);
    const Unirrep r2 =
        build_aq1_unirrep(require(cfg.N2, "--N2"), ColourLabel(cfg.eta), ctx);
    j = wigner_to_json(couple(r1, r2, ColourLabel(cfg.delta)).table);
  } else {
    throw UsageError("export object must be rep, rmatrix or wigner");
  }
  out << j.dump(2) << "\n";
  return kOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
  case Command::Catalog:
    return cmd_catalog(cfg, out);
  case Command::Spectrum:
    return cmd_spectrum(cfg, out);
  case Command::Verify:
    return cmd_verify(cfg, out, err);
  case Command::Export:
    return cmd_export(cfg, out);
  }
  return kUsage;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"qdef: nonlinear deformed su(2) algebras, their unirreps and "
               "the two-colour Hopf structure of A+_q(1)"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string delta = "+1", zeta = "+1", eta = "+1", mu = "+1";
  bool as_json = false;
  std::string format;

  app.add_option("--algebra", cfg.algebra,
                 "suq2, witten21, a3pq1 or aq1 (default aq1)");
  app.add_option("--q", cfg.q, "deformation parameter in (0, 1)");
  app.add_option("--p", cfg.p, "second parameter of a3pq1 (> 0)");
  app.add_option("--N", cfg.N, "unirrep label (dimension N+1)");
  app.add_option("--N1", cfg.N1);
  app.add_option("--N2", cfg.N2);
  app.add_option("--N3", cfg.N3);
  app.add_option("--delta", delta, "colour +1 or -1");
  app.add_option("--zeta", zeta, "colour of the first factor");
  app.add_option("--eta", eta, "colour of the second factor");
  app.add_option("--mu", mu, "colour of the third factor");
  app.add_option("--m0", cfg.m0, "seed J0 eigenvalue for the ladder engine");
  app.add_option("--casimir", cfg.casimir,
                 "candidate Casimir value for ladder termination");
  app.add_option("--steps", cfg.steps, "ladder steps in each direction");
  app.add_option("--max-N", cfg.max_N, "largest N in verification sweeps");
  app.add_option("--suite", cfg.suite,
                 "commutation, casimir, hopf, rmatrix, ybe, coupling or all");
  app.add_option("--tol", cfg.tol,
                 "absolute and relative tolerance (overrides QDEF_TOL)");
  app.add_option("--out", cfg.out, "write primary output to this file");
  app.add_flag("--json", as_json, "JSON output");
  app.add_option("--format", format, "json or csv");

  auto* catalog = app.add_subcommand("catalog", "list the catalog algebras");
  auto* spectrum =
      app.add_subcommand("spectrum", "J0 spectrum of a unirrep or ladder");
  auto* verify = app.add_subcommand("verify", "run identity checks");
  auto* exporter = app.add_subcommand("export", "write rep/rmatrix/wigner JSON");
  exporter->add_option("object", cfg.object, "rep, rmatrix or wigner")
      ->required();
  for (auto* sub : {catalog, spectrum, verify, exporter})
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (catalog->parsed())
      cfg.command = Command::Catalog;
    else if (spectrum->parsed())
      cfg.command = Command::Spectrum;
    else if (verify->parsed())
      cfg.command = Command::Verify;
    else
      cfg.command = Command::Export;

    cfg.delta = parse_colour(delta, "--delta");
    cfg.zeta = parse_colour(zeta, "--zeta");
    cfg.eta = parse_colour(eta, "--eta");
    cfg.mu = parse_colour(mu, "--mu");
    if (cfg.command == Command::Verify || cfg.command == Command::Export)
      cfg.format = Format::Json;
    if (as_json)
      cfg.format = Format::Json;
    if (format == "json")
      cfg.format = Format::Json;
    else if (format == "csv")
      cfg.format = Format::Csv;
    else if (!format.empty())
      throw UsageError("--format must be json or csv");
    if (cfg.q && !(*cfg.q > 0.0 && *cfg.q < 1.0))
      throw UsageError("--q must lie in (0, 1)");
    if (cfg.steps < 1)
      throw UsageError("--steps must be >= 1");

    if (cfg.out.empty())
      return dispatch(cfg, out, err);

    std::ostringstream buffer;
    const int code = dispatch(cfg, buffer, err);
    std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
    if (!file)
      throw IoError("cannot open '" + cfg.out + "' for writing");
    file << buffer.str();
    file.close();
    if (!file)
      throw IoError("failed writing '" + cfg.out + "'");
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIdentityFailure;
  }
}

} // namespace qdef::cli
