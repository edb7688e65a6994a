#include "compoly/cli.hpp"

#include "compoly/composition.hpp"
#include "compoly/ehrhart_zeta.hpp"
#include "compoly/lattice_enum.hpp"
#include "compoly/polynomial.hpp"
#include "compoly/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace compoly {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join64(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join_strings(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i];
  }
  return out;
}

void emit(const std::string& format, const ordered_json& record,
          const std::vector<std::string>& header,
          const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
  if (format == "json") {
    out << record.dump() << "\n";
    return;
  }
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "\t" : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
    out << "\n";
  }
}

std::int64_t to_int64(const Rational& q, const char* what) {
  if (q.get_den() != 1 || !q.get_num().fits_slong_p())
    throw std::logic_error(std::string(what) + " is not a small integer: " + to_string(q));
  return q.get_num().get_si();
}

std::vector<std::int64_t> padded_int_coeffs(const ExactPolynomial& p, std::size_t len,
                                            const char* what) {
  std::vector<std::int64_t> out(len, 0);
  for (int i = 0; i <= p.degree(); ++i)
    out[static_cast<std::size_t>(i)] = to_int64(p.coeff(i), what);
  return out;
}

ordered_json base_record(const char* kind, const Composition& sigma) {
  return ordered_json{{"kind", kind}, {"composition", sigma.parts()}, {"n", sigma.n()}};
}

int do_hvec(const Composition& sigma, const std::string& format, std::ostream& out) {
  const HVector h = h_vector(sigma);
  const ExactPolynomial p = ExactPolynomial::from_counts(h.values);
  ordered_json rec = base_record("hvec", sigma);
  rec["h"] = h.values;
  rec["pretty"] = p.pretty();
  emit(format, rec, {"composition", "n", "h"},
       {{sigma.to_string(), std::to_string(sigma.n()), join64(h.values)}}, out);
  return 0;
}

int do_gamma(const Composition& sigma, const std::string& method, const std::string& format,
             std::ostream& out, std::ostream& err) {
  const std::size_t len = static_cast<std::size_t>(sigma.n()) / 2 + 1;
  std::vector<std::int64_t> values;
  if (method == "direct" || method == "both") values = gamma_direct(sigma).values;
  if (method == "expand" || method == "both") {
    const auto g = gamma_expand(h_polynomial(sigma), sigma.n());
    if (!g) {
      err << "error: h-polynomial of " << sigma.to_string() << " is not palindromic\n";
      return 1;
    }
    const auto expanded = padded_int_coeffs(*g, len, "gamma coefficient");
    if (method == "both" && expanded != values) {
      err << "error: gamma routes disagree for " << sigma.to_string() << ": direct ["
          << join64(values) << "] vs expansion [" << join64(expanded) << "]\n";
      return 1;
    }
    if (method == "expand") values = expanded;
  }
  ordered_json rec = base_record("gamma", sigma);
  rec["method"] = method;
  rec["gamma"] = values;
  emit(format, rec, {"composition", "n", "method", "gamma"},
       {{sigma.to_string(), std::to_string(sigma.n()), method, join64(values)}}, out);
  return 0;
}

int emit_polynomial(const char* kind, const Composition& sigma, const std::string& method,
                    const ExactPolynomial& p, const std::string& format, std::ostream& out) {
  ordered_json rec = base_record(kind, sigma);
  if (!method.empty()) rec["method"] = method;
  rec["coeffs"] = p.coeff_strings();
  rec["pretty"] = p.pretty();
  std::vector<std::string> header{"composition", "n", "coeffs"};
  std::vector<std::string> row{sigma.to_string(), std::to_string(sigma.n()),
                               join_strings(p.coeff_strings())};
  if (!method.empty()) {
    header.insert(header.begin() + 2, "method");
    row.insert(row.begin() + 2, method);
  }
  emit(format, rec, header, {row}, out);
  return 0;
}

int emit_value(const char* kind, const Composition& sigma, const std::string& method, int m,
               const BigInt& value, const std::string& format, std::ostream& out) {
  ordered_json rec = base_record(kind, sigma);
  if (!method.empty()) rec["method"] = method;
  rec["m"] = m;
  rec["value"] = to_string(value);
  std::vector<std::string> header{"composition", "n", "m", "value"};
  std::vector<std::string> row{sigma.to_string(), std::to_string(sigma.n()),
                               std::to_string(m), to_string(value)};
  if (!method.empty()) {
    header.insert(header.begin() + 2, "method");
    row.insert(row.begin() + 2, method);
  }
  emit(format, rec, header, {row}, out);
  return 0;
}

int do_ehrhart(const Composition& sigma, const std::string& method, bool has_eval, int m,
               const std::string& format, std::ostream& out, std::ostream& err) {
  if (!has_eval) {
    if (method != "poly") {
      err << "error: --method " << method << " needs --eval M\n";
      return 2;
    }
    return emit_polynomial("ehrhart", sigma, method, ehrhart_polynomial(sigma), format, out);
  }
  BigInt value;
  if (method == "oracle") {
    value = ehrhart_count_oracle(sigma, m);
  } else if (method == "sp") {
    value = ehrhart_ksum(sigma, m);
  } else {
    const Rational v = ehrhart_polynomial(sigma)(Rational(m));
    if (v.get_den() != 1) throw std::logic_error("dilate count is not an integer");
    value = v.get_num();
  }
  return emit_value("ehrhart", sigma, method, m, value, format, out);
}

int do_zeta(const Composition& sigma, bool has_eval, int m, const std::string& format,
            std::ostream& out) {
  if (has_eval) return emit_value("zeta", sigma, "", m, zeta_value(sigma, m), format, out);
  return emit_polynomial("zeta", sigma, "", zeta_polynomial(sigma), format, out);
}

int do_hstar(const Composition& sigma, const std::string& method, const std::string& format,
             std::ostream& out) {
  ExactPolynomial p;
  if (method == "series")
    p = hstar_from_series(sigma);
  else if (method == "words")
    p = hstar_words(sigma);
  else
    p = el_chain_h(sigma.reversed());
  return emit_polynomial("hstar", sigma, method, p, format, out);
}

int do_roots(const Composition& sigma, const std::string& format, std::ostream& out) {
  const ExactPolynomial p = ehrhart_polynomial(sigma);
  const RealRootReport rep = sturm_report(p, Rational(-1), Rational(0));
  ordered_json rec = base_record("roots", sigma);
  rec["degree"] = rep.degree;
  rec["interval"] = {to_string(rep.lo), to_string(rep.hi)};
  rec["all_real"] = rep.all_real;
  rec["distinct_roots"] = rep.distinct_root_count;
  rec["roots_in_interval"] = rep.roots_in_interval;
  ordered_json intervals = ordered_json::array();
  std::string interval_text;
  for (const auto& iv : rep.isolating_intervals) {
    intervals.push_back({to_string(iv.lo), to_string(iv.hi)});
    if (!interval_text.empty()) interval_text += ";";
    interval_text += to_string(iv.lo) + ".." + to_string(iv.hi);
  }
  rec["isolating"] = intervals;
  emit(format, rec,
       {"composition", "n", "degree", "all_real", "distinct_roots", "roots_in_interval",
        "isolating"},
       {{sigma.to_string(), std::to_string(sigma.n()), std::to_string(rep.degree),
         rep.all_real ? "true" : "false", std::to_string(rep.distinct_root_count),
         std::to_string(rep.roots_in_interval), interval_text}},
       out);
  return 0;
}

int do_verify(int n, const std::vector<std::string>& checks, const std::string& format,
              std::ostream& out) {
  const auto outcomes = run_checks(n, checks);
  std::size_t failures = 0;
  ordered_json arr = ordered_json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& oc : outcomes) {
    ordered_json row{{"check", oc.check}};
    std::string status = "pass";
    std::string detail;
    if (oc.skipped) {
      status = "skip";
      detail = oc.skip_reason;
      row["status"] = status;
      row["reason"] = oc.skip_reason;
    } else {
      if (!oc.failures.empty()) {
        status = "fail";
        detail = oc.failures.front();
        failures += oc.failures.size();
      }
      row["status"] = status;
      row["checked"] = oc.checked;
      if (!oc.failures.empty()) row["failures"] = oc.failures;
    }
    arr.push_back(std::move(row));
    rows.push_back({oc.check, status, std::to_string(oc.skipped ? 0 : oc.checked), detail});
  }
  ordered_json rec{{"kind", "verify"}, {"n", n}, {"checks", std::move(arr)},
                   {"failures", failures}};
  emit(format, rec, {"check", "status", "checked", "detail"}, rows, out);
  return failures == 0 ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration statistics of composition polytopes"};
  app.name("compoly");
  app.require_subcommand(1);

  int max_n = 0;
  CLI::Option* max_opt =
      app.add_option("--max-n", max_n, "raise the size guards to this value (long runs)");
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));

  const char* comp_help = "comma-separated parts, e.g. 2,1";

  CLI::App* hvec = app.add_subcommand("hvec", "point counts by support size");
  std::string hvec_comp;
  hvec->add_option("composition", hvec_comp, comp_help)->required();

  CLI::App* gamma = app.add_subcommand("gamma", "gamma coefficients of the h-polynomial");
  std::string gamma_comp;
  std::string gamma_method = "both";
  gamma->add_option("composition", gamma_comp, comp_help)->required();
  gamma->add_option("--method", gamma_method, "direct, expand, or both")
      ->check(CLI::IsMember({"direct", "expand", "both"}));

  CLI::App* ehrhart = app.add_subcommand("ehrhart", "dilate point counts");
  std::string ehrhart_comp;
  std::string ehrhart_method = "poly";
  int ehrhart_m = 0;
  ehrhart->add_option("composition", ehrhart_comp, comp_help)->required();
  ehrhart->add_option("--method", ehrhart_method, "poly, sp, or oracle")
      ->check(CLI::IsMember({"poly", "sp", "oracle"}));
  CLI::Option* ehrhart_eval =
      ehrhart->add_option("--eval", ehrhart_m, "evaluate at this dilation factor")
          ->check(CLI::NonNegativeNumber);

  CLI::App* zeta = app.add_subcommand("zeta", "multichain counts of the point poset");
  std::string zeta_comp;
  int zeta_m = 0;
  zeta->add_option("composition", zeta_comp, comp_help)->required();
  CLI::Option* zeta_eval =
      zeta->add_option("--eval", zeta_m, "count multichains of this length")
          ->check(CLI::NonNegativeNumber);

  CLI::App* hstar = app.add_subcommand("hstar", "numerator of the counting series");
  std::string hstar_comp;
  std::string hstar_method = "series";
  hstar->add_option("composition", hstar_comp, comp_help)->required();
  hstar->add_option("--method", hstar_method, "series, words, or elchains")
      ->check(CLI::IsMember({"series", "words", "elchains"}));

  CLI::App* roots = app.add_subcommand("roots", "real roots of the counting polynomial");
  std::string roots_comp;
  roots->add_option("composition", roots_comp, comp_help)->required();

  CLI::App* verify = app.add_subcommand("verify", "identity checks over all compositions");
  int verify_n = 0;
  std::vector<std::string> verify_checks;
  verify->add_option("--n", verify_n, "composition total to sweep")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--checks", verify_checks, "subset of checks to run")
      ->delimiter(',');

  for (CLI::App* sub : {hvec, gamma, ehrhart, zeta, hstar, roots, verify})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (const char* env = std::getenv("COMPOLY_MAX_N")) {
    const std::string_view sv(env);
    int value = 0;
    const auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (ec != std::errc() || p != sv.data() + sv.size() || value < 1) {
      err << "error: COMPOLY_MAX_N must be a positive integer, got '" << env << "'\n";
      return 2;
    }
    raise_guards_to(value);
    err << "warning: size guards raised to at least " << value
        << " by COMPOLY_MAX_N; large inputs can run for a very long time\n";
  }
  if (max_opt->count() > 0) {
    if (max_n < 1) {
      err << "error: --max-n must be >= 1\n";
      return 2;
    }
    raise_guards_to(max_n);
    err << "warning: size guards raised to at least " << max_n
        << " by --max-n; large inputs can run for a very long time\n";
  }

  try {
    if (hvec->parsed()) return do_hvec(Composition::parse(hvec_comp), format, out);
    if (gamma->parsed())
      return do_gamma(Composition::parse(gamma_comp), gamma_method, format, out, err);
    if (ehrhart->parsed())
      return do_ehrhart(Composition::parse(ehrhart_comp), ehrhart_method,
                        ehrhart_eval->count() > 0, ehrhart_m, format, out, err);
    if (zeta->parsed())
      return do_zeta(Composition::parse(zeta_comp), zeta_eval->count() > 0, zeta_m, format,
                     out);
    if (hstar->parsed())
      return do_hstar(Composition::parse(hstar_comp), hstar_method, format, out);
    if (roots->parsed()) return do_roots(Composition::parse(roots_comp), format, out);
    if (verify->parsed()) return do_verify(verify_n, verify_checks, format, out);
  } catch (const guard_error& e) {
    err << "error: " << e.what() << "; raise the limit with --max-n or COMPOLY_MAX_N\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand given\n";
  return 2;
}

} // namespace compoly
