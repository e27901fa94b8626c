#include "dunklcas/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dunklcas/dsl.hpp"
#include "dunklcas/states.hpp"

namespace dunklcas {

namespace {

constexpr std::size_t kResidualPrintLimit = 20;

const char *mode_name(MuMode m) { return m == MuMode::parametric ? "parametric" : "numeric"; }

std::string join(const std::vector<std::string> &parts, const std::string &sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k)
    out += (k ? sep : "") + parts[k];
  return out;
}

std::vector<std::string> rational_strings(const std::vector<Rational> &values) {
  std::vector<std::string> out;
  for (const Rational &v : values)
    out.push_back(to_string(v));
  return out;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width)
    s.append(width - s.size(), ' ');
  return s;
}

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

} // namespace

nlohmann::json Report::json() const {
  nlohmann::json j;
  j["command"] = command;
  j["dims"] = dims ? nlohmann::json(*dims) : nlohmann::json(nullptr);
  j["mu_mode"] = mu_mode;
  j["results"] = results;
  j["status"] = status;
  return j;
}

std::vector<Rational> parse_mu_list(const std::string &text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_rational(item));
  if (out.empty() || text.back() == ',')
    throw std::invalid_argument("expected a comma-separated list of rationals, got '" + text +
                                "'");
  return out;
}

Report command_nf(const std::string &text, std::optional<std::size_t> dims,
                  const std::vector<Rational> &mu) {
  Expr expr = parse(text, dims.value_or(kMaxVariables));
  std::size_t d = dims.value_or(expr.required_dims());
  if (mu.size() > d)
    throw ArityMismatch(d, mu.size());
  OperatorElement value = evaluate(expr, d);
  if (!mu.empty())
    value = specialize_params(value, mu);

  Report r;
  r.dims = d;
  r.mu_mode = mu.empty() ? "parametric" : "numeric";
  std::string nf = value.str();
  r.results.push_back({{"expr", text},
                       {"mu", rational_strings(mu)},
                       {"normal_form", nf},
                       {"terms", value.term_count()}});
  r.text = nf + "\n";
  return r;
}

Report command_verify(const std::string &family, const CheckOptions &options, bool timing) {
  std::vector<RelationReport> reports;
  if (family == "all")
    reports = check_all(options);
  else
    reports.push_back(check(family, options));

  Report r;
  r.mu_mode = mode_name(options.mode);
  std::ostringstream text;
  if (options.mode == MuMode::numeric)
    text << "mu = " << join(rational_strings(options.mu), ", ") << "\n";
  std::size_t failed_families = 0, identity_count = 0;
  for (const RelationReport &rep : reports) {
    std::size_t ok = 0;
    nlohmann::json identities = nlohmann::json::array();
    for (const IdentityResult &id : rep.identities) {
      ok += id.passed;
      identities.push_back({{"label", id.label},
                            {"passed", id.passed},
                            {"residual", id.residual.str()},
                            {"residual_terms", id.residual_terms}});
    }
    identity_count += rep.identities.size();
    bool pass = rep.passed();
    failed_families += !pass;
    nlohmann::json entry = {{"family", rep.family},
                            {"identities", std::move(identities)},
                            {"mu", rational_strings(options.mu)},
                            {"passed", pass}};
    if (timing)
      entry["seconds"] = rep.seconds;
    r.results.push_back(std::move(entry));

    text << pad(rep.family, 20) << (pass ? "PASS" : "FAIL") << "  " << ok << "/"
         << rep.identities.size();
    if (timing)
      text << "  " << seconds_text(rep.seconds);
    text << "\n";
    for (const IdentityResult &id : rep.identities) {
      if (id.passed)
        continue;
      text << "  FAIL " << id.label << ": residual has " << id.residual_terms << " terms\n";
      if (id.residual_terms <= kResidualPrintLimit)
        text << "       " << id.residual.str() << "\n";
    }
  }
  if (failed_families == 0) {
    text << "PASS: " << reports.size() << " families, " << identity_count
         << " identities, all residuals exactly zero\n";
  } else {
    text << "FAIL: " << failed_families << " of " << reports.size() << " families failed\n";
    r.status = "fail";
    r.exit = exit_code::verification_failed;
  }
  r.text = text.str();
  return r;
}

Report command_spectrum(std::size_t dims, const std::vector<Rational> &mu, unsigned levels) {
  std::vector<SpectrumRow> rows = spectrum_table(dims, mu, levels);
  Report r;
  r.dims = dims;
  r.mu_mode = "numeric";

  // Ladder norms needed to reach the top level (at least c_1).
  const unsigned reach = std::max(levels, 1u);
  std::vector<std::string> warnings;
  for (std::size_t v = 0; v < mu.size(); ++v) {
    std::vector<Rational> c = ladder_norm_coefficients(reach, mu[v]);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (sgn(c[k]) <= 0) {
        warnings.push_back("mu" + std::to_string(v + 1) + " = " + to_string(mu[v]) +
                           " is inadmissible: c_" + std::to_string(k + 1) + " = " +
                           to_string(c[k]) + " <= 0");
        break;
      }
    }
  }

  std::ostringstream text;
  text << "dims " << dims << ", mu = " << join(rational_strings(mu), ", ") << "\n";
  for (const std::string &w : warnings)
    text << "warning: " << w << "\n";
  text << pad("N", 6) << pad("energy", 14) << "degeneracy\n";
  nlohmann::json table = nlohmann::json::array();
  for (const SpectrumRow &row : rows) {
    table.push_back({{"degeneracy", row.degeneracy},
                     {"energy", to_string(row.energy)},
                     {"level", row.level}});
    text << pad(std::to_string(row.level), 6) << pad(to_string(row.energy), 14)
         << row.degeneracy << "\n";
  }
  r.results.push_back({{"admissible", warnings.empty()},
                       {"mu", rational_strings(mu)},
                       {"rows", std::move(table)},
                       {"warning", warnings.empty() ? nlohmann::json(nullptr)
                                                    : nlohmann::json(join(warnings, "; "))}});
  r.text = text.str();
  return r;
}

Report command_list_relations() {
  Report r;
  r.mu_mode = "parametric";
  std::ostringstream text;
  for (const FamilyInfo &f : families()) {
    r.results.push_back(
        {{"family", f.id}, {"perturbable", f.has_perturbation}, {"summary", f.summary}});
    text << pad(f.id, 20) << f.summary << (f.has_perturbation ? " [--perturb]" : "") << "\n";
  }
  r.text = text.str();
  return r;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact normal forms and relation checks for Dunkl oscillator operators",
               "dunklcas"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&format](CLI::App *sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  std::string mu_text;

  CLI::App *nf = app.add_subcommand("nf", "Print the normal form of an operator expression");
  std::string expr;
  std::size_t nf_dims = 0;
  nf->add_option("expr", expr, "Operator expression")->required();
  nf->add_option("--dims", nf_dims, "Number of variables")
      ->check(CLI::Range(std::size_t{1}, kMaxVariables));
  nf->add_option("--mu", mu_text, "Comma-separated rational values for mu1, mu2, ...");
  add_format(nf);

  CLI::App *verify = app.add_subcommand("verify", "Verify a relation family, or all");
  std::string family;
  bool parametric = false, perturb = false, timing = false;
  verify->add_option("family", family, "Family id or 'all'")->required();
  auto *param_flag = verify->add_flag("--parametric", parametric, "Prove for all mu (default)");
  auto *mu_opt = verify->add_option("--mu", mu_text, "Check at rational mu1,mu2[,mu3]");
  param_flag->excludes(mu_opt);
  verify->add_flag("--perturb", perturb, "Check the deliberately broken variants");
  verify->add_flag("--timing", timing, "Report wall time per family");
  add_format(verify);

  CLI::App *spectrum = app.add_subcommand("spectrum", "Energy levels and degeneracies");
  std::size_t sp_dims = 0;
  unsigned levels = 0;
  spectrum->add_option("--dims", sp_dims, "1 or 2")->required()->check(CLI::Range(1, 2));
  spectrum->add_option("--mu", mu_text, "One rational per dimension")->required();
  spectrum->add_option("--levels", levels, "Highest level N")
      ->required()
      ->check(CLI::Range(0u, 64u));
  add_format(spectrum);

  CLI::App *list = app.add_subcommand("list-relations", "List the relation families");
  add_format(list);

  Report report;
  report.command = join(args, " ");
  auto fail = [&](const std::string &message) {
    err << "error: " << message << "\n";
    if (format == "json") {
      Report e;
      e.command = report.command;
      e.mu_mode = mu_text.empty() ? "parametric" : "numeric";
      e.status = "error";
      out << e.json().dump(2) << "\n";
    }
    return exit_code::usage;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError &e) {
    return fail(e.what());
  }

  try {
    std::vector<Rational> mu = mu_text.empty() ? std::vector<Rational>{} : parse_mu_list(mu_text);
    Report r;
    if (*nf) {
      r = command_nf(expr, nf_dims ? std::optional<std::size_t>(nf_dims) : std::nullopt, mu);
    } else if (*verify) {
      CheckOptions options;
      options.mode = mu.empty() ? MuMode::parametric : MuMode::numeric;
      options.mu = mu;
      options.perturb = perturb;
      r = command_verify(family, options, timing);
    } else if (*spectrum) {
      r = command_spectrum(sp_dims, mu, levels);
    } else {
      r = command_list_relations();
    }
    r.command = report.command;
    if (format == "json")
      out << r.json().dump(2) << "\n";
    else
      out << r.text;
    return r.exit;
  } catch (const std::exception &e) {
    return fail(e.what());
  }
}

} // namespace dunklcas
