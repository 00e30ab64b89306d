#include "superspace/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>

#include "superspace/operators.hpp"
#include "superspace/planewave.hpp"
#include "superspace/radon.hpp"
#include "superspace/superdist.hpp"

namespace superspace::cli {

namespace {

// ---------------------------------------------------------------------
// polynomial literal parser

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  Dims d;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error("parse error at position " +
                             std::to_string(pos) + ": " + what);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long integer() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected an integer");
    return std::stol(s.substr(start, pos - start));
  }

  SuperPolynomial factor_var(bool& is_ferm, int& index, int& power) {
    // caller saw 'x'
    ++pos;
    is_ferm = pos < s.size() && s[pos] == 'f';
    if (is_ferm) ++pos;
    index = static_cast<int>(integer()) - 1;
    power = 1;
    if (eat('^')) power = static_cast<int>(integer());
    if (is_ferm) {
      if (index < 0 || index >= d.nf()) fail("fermionic index out of range");
      if (power > 1) fail("fermionic generators square to zero");
      return SuperPolynomial::fermion(d.m, d.nf(), index);
    }
    if (index < 0 || index >= d.m) fail("bosonic index out of range");
    return SuperPolynomial::variable(d.m, d.nf(), index, power);
  }

  SuperPolynomial term() {
    SuperPolynomial acc = SuperPolynomial::constant(d.m, d.nf(), Scalar(1));
    int last_ferm = -1;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      const char c = s[pos];
      if (c == 'x') {
        bool isf = false;
        int idx = 0, pw = 1;
        auto f = factor_var(isf, idx, pw);
        if (isf) {
          if (idx <= last_ferm)
            fail("fermionic factors must be in ascending index order");
          last_ferm = idx;
        }
        acc *= f;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        const long num = integer();
        long den = 1;
        if (eat('/')) den = integer();
        if (den == 0) fail("zero denominator");
        acc = acc.scaled(Scalar(Rational(num, den)));
      } else {
        break;
      }
      first = false;
      if (!eat('*')) break;
    }
    if (first) fail("empty term");
    return acc;
  }

  SuperPolynomial expression() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    SuperPolynomial acc = term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        fail("expected '+' or '-'");
    }
    return acc;
  }
};

// ---------------------------------------------------------------------
// suites

using Records = std::vector<ReportRecord>;

std::string dims_tag(Dims d) {
  return std::to_string(d.m) + "," + std::to_string(d.n);
}

Records suite_sl2(const RunConfig& cfg) {
  Records out;
  for (Dims d : cfg.dims) {
    const Scalar Mhalf(Rational(d.M(), 2));
    const auto x2 = -norm_squared(d);
    bool r1 = true, r2 = true, r3 = true, anti = true;
    for (const auto& f : enumerate_monomials(d.m, d.nf(), 6)) {
      auto lap = [&](const SuperPolynomial& g) { return laplacian(g, d); };
      auto emh = [&](const SuperPolynomial& g) {
        return euler(g, d) + g.scaled(Mhalf);
      };
      auto half = [](const SuperPolynomial& g) {
        return g.scaled(Scalar(Rational(1, 2)));
      };
      auto xs = [&](const SuperPolynomial& g) { return x2 * g; };
      r1 = r1 && ((lap(xs(f)) - xs(lap(f))).scaled(Scalar(Rational(-1, 4))) ==
                  emh(f));
      r2 = r2 && (half(lap(emh(f))) - half(emh(lap(f))) == lap(f));
      r3 = r3 && (-half(xs(emh(f))) + half(emh(xs(f))) == xs(f));
      if (f.degree() <= 4)
        anti = anti && (dirac_anticommutator_check(d, f) ==
                        euler(f, d).scaled(Scalar(2)) +
                            f.scaled(Scalar(d.M())));
    }
    const std::string tag = dims_tag(d);
    out.push_back(make_exact_record("sl2", "commutator1@" + tag, r1));
    out.push_back(make_exact_record("sl2", "commutator2@" + tag, r2));
    out.push_back(make_exact_record("sl2", "commutator3@" + tag, r3));
    out.push_back(make_exact_record("sl2", "dirac_anticommutator@" + tag,
                                    anti));
  }
  return out;
}

Records suite_algebra(const RunConfig& cfg) {
  Records out;
  std::mt19937_64 rng(cfg.seed + 1);
  for (Dims d : cfg.dims) {
    bool assoc = true;
    for (int t = 0; t < 50; ++t) {
      auto a = random_superpolynomial(rng, d.m, d.nf(), 3, 4);
      auto b = random_superpolynomial(rng, d.m, d.nf(), 3, 4);
      auto c = random_superpolynomial(rng, d.m, d.nf(), 3, 4);
      assoc = assoc && ((a * b) * c == a * (b * c));
    }
    out.push_back(
        make_exact_record("algebra", "associativity@" + dims_tag(d), assoc));
    bool lp = true;
    for (int ell = 0; ell <= 4; ++ell) {
      SuperPolynomial cur = supervector_even_power(d, 2 * ell);
      for (int j = 0; j <= ell; ++j) {
        auto [factor, pw] = laplacian_power_norm(d, j, ell);
        lp = lp && (cur == supervector_even_power(d, pw).scaled(factor));
        cur = laplacian(cur, d);
      }
      lp = lp && cur.is_zero();
    }
    out.push_back(
        make_exact_record("algebra", "laplacian_power@" + dims_tag(d), lp));
    bool dir2 = true;
    for (const auto& f : enumerate_monomials(d.m, d.nf(), 4)) {
      auto d2 = dirac_left(dirac_left(f, d));
      dir2 = dir2 && d2.is_scalar() && (d2.scalar_part() == -laplacian(f, d));
    }
    out.push_back(
        make_exact_record("algebra", "dirac_squared@" + dims_tag(d), dir2));
  }
  return out;
}

Records suite_distributions(const RunConfig& cfg) {
  Records out;
  const auto gauss = TestFunction1D::gauss_poly({1.0}, 2.0, 0.0);
  out.push_back(make_numeric_record(
      "distributions", "tplus0_gauss",
      pair_kernel_1d({KernelFamily::t_plus, Rational(0)}, gauss, cfg.tol_1d),
      std::sqrt(M_PI) / 2, 1e-9));
  out.push_back(make_numeric_record(
      "distributions", "tminus2_gauss",
      pair_kernel_1d({KernelFamily::abs_pow, Rational(-2)}, gauss, cfg.tol_1d),
      -2.0 * std::sqrt(M_PI), 1e-8));
  std::mt19937_64 rng(cfg.seed + 2);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  bool tech = true;
  for (int ell = 1; ell <= 12; ++ell)
    for (int t = 0; t < 20; ++t)
      tech = tech &&
             (chu_vandermonde_sum(ell, Rational(num(rng), den(rng))) == 0);
  out.push_back(make_exact_record("distributions", "chu_vandermonde", tech));
  bool gl = true;
  for (int ell = 0; ell <= 10; ++ell) {
    Rational H = 0;
    for (int i = 1; i <= ell; ++i) H += Rational(1, i);
    gl = gl && (log_primitive_coeff(ell) == H / factorial(ell));
  }
  out.push_back(make_exact_record("distributions", "log_primitive", gl));
  for (Dims d : cfg.dims) {
    if (d.m == 0) continue;
    bool fs = true;
    for (Rational s : {Rational(1, 2), Rational(3, 2)})
      fs = fs && fundsol_coefficient_system_check(d, s) &&
           fundsol_reassembly_check(d, s);
    out.push_back(make_exact_record("distributions",
                                    "fundamental_solution@" + dims_tag(d),
                                    fs));
  }
  return out;
}

Records suite_sphere(const RunConfig& cfg) {
  Records out;
  std::mt19937_64 rng(cfg.seed + 3);
  for (Dims d : cfg.dims) {
    if (d.m < 2 || d.m > 4) continue;
    auto rule = SphereRule::build(d.m, cfg.sphere_degree);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      auto p = random_superpolynomial(rng, d.m, d.nf(), 6, 6);
      const double exact = pizzetti(p, d).to_double();
      const double quad = supersphere_integral_delta_route(p, d, rule);
      const double scale = std::max({1.0, std::abs(exact)});
      worst = std::max(worst, std::abs(quad - exact) / scale);
    }
    ReportRecord r;
    r.suite = "sphere";
    r.case_id = "pizzetti_vs_delta@" + dims_tag(d);
    r.abs_err = r.rel_err = worst;
    r.tolerance = 1e-8;
    r.status = worst <= 1e-8 ? "pass" : "fail";
    out.push_back(r);
    bool fh = true;
    for (const auto& H : builtin_harmonics(d, 3))
      for (int j = 0; j <= 6; ++j) {
        try {
          funk_hecke(d, j, H, false);
        } catch (const std::exception&) {
          fh = false;
        }
      }
    out.push_back(
        make_exact_record("sphere", "funk_hecke@" + dims_tag(d), fh));
  }
  return out;
}

Records suite_radon(const RunConfig& cfg) {
  Records out;
  for (Dims d : cfg.dims) {
    if (d.m < 2 || d.m > 4) continue;
    auto phi = make_test_function(d.n > 0 ? "gauss_mix" : "gauss_shifted", d);
    std::vector<double> w(d.m, 0.0);
    w[0] = 3.0 / 5.0;
    w[d.m - 1] = (d.m == 1 ? 0.0 : -4.0 / 5.0);
    double worst = 0.0;
    for (double r : {0.0, 0.8, 1.7}) {
      auto [lhs, rhs] = central_slice_check(phi, w, r);
      auto diff = lhs - rhs;
      for (const auto& [mask, c] : diff.terms())
        worst = std::max(worst, std::abs(c));
    }
    ReportRecord rec;
    rec.suite = "radon";
    rec.case_id = "central_slice@" + dims_tag(d);
    rec.abs_err = rec.rel_err = worst;
    rec.tolerance = 1e-8;
    rec.status = worst <= 1e-8 ? "pass" : "fail";
    out.push_back(rec);
  }
  return out;
}

nlohmann::json grassmann_json(const GrassmannNum& g) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [mask, c] : g.terms()) j[std::to_string(mask)] = c;
  return j;
}

Records suite_invert(const RunConfig& cfg, nlohmann::json* inversions) {
  Records out;
  for (Dims d : cfg.dims) {
    const int M = d.M();
    const std::string tag = dims_tag(d);
    if (d.m == 0 || (M < 0 && M % 2 != 0)) {
      ReportRecord r;
      r.suite = "invert";
      r.case_id = "inversion@" + tag;
      r.status = "unsupported";
      out.push_back(r);
      continue;
    }
    const double tol = cfg.tol_override.value_or(
        (M >= 1 && M % 2 == 1) ? 1e-3 : 1e-2);
    auto rule = SphereRule::build(d.m, cfg.sphere_degree);
    auto phi = make_test_function(d.n > 0 ? "gauss_mix" : "gauss_shifted", d);
    auto data = radon_transform(phi);
    std::vector<std::vector<double>> pts{std::vector<double>(d.m, 0.0),
                                         std::vector<double>(d.m, 0.0)};
    pts[1][0] = 0.5;
    int idx = 0;
    for (const auto& y : pts) {
      auto rep = invert(data, phi, y, rule);
      ReportRecord r;
      r.suite = "invert";
      r.case_id = "inversion@" + tag + "#y" + std::to_string(idx++);
      r.abs_err = rep.abs_err;
      r.rel_err = rep.rel_err;
      r.tolerance = tol;
      r.status = rep.rel_err <= tol ? "pass" : "fail";
      out.push_back(r);
      if (inversions) {
        inversions->push_back(
            {{"case", r.case_id},
             {"dims", {d.m, d.n}},
             {"y", y},
             {"recovered", grassmann_json(rep.recovered)},
             {"reference", grassmann_json(rep.reference)},
             {"abs_err", rep.abs_err},
             {"rel_err", rep.rel_err},
             {"quadrature_budget", cfg.sphere_degree}});
      }
    }
  }
  return out;
}

Records suite_planewave(const RunConfig& cfg) {
  Records out;
  for (Dims d : cfg.dims) {
    if (d.n != 0 || d.m < 2 || d.m > 3) continue;
    auto rule = SphereRule::build(d.m, cfg.sphere_degree);
    auto phi = make_test_function("gauss", d);
    if (d.m % 2 == 0) {
      auto r = verify_pw_identity({d.m, PlaneWaveIdentity::PWDelRm_even, 0},
                                  phi, rule, cfg.tol_1d);
      out.push_back(make_numeric_record(
          "planewave", "delta_even@" + dims_tag(d), r.lhs, r.rhs, 1e-3));
      for (Rational lam : {Rational(1), Rational(1, 2), Rational(-1, 2)}) {
        auto v = verify_pw_identity({d.m, PlaneWaveIdentity::PWRLan, lam},
                                    phi, rule, cfg.tol_1d);
        out.push_back(make_numeric_record(
            "planewave",
            "pwrlan@" + dims_tag(d) + "#" + lam.str(), v.lhs, v.rhs, 1e-6));
      }
    } else {
      auto r = verify_pw_identity({d.m, PlaneWaveIdentity::PWDelRm_odd, 0},
                                  phi, rule, cfg.tol_1d);
      out.push_back(make_numeric_record(
          "planewave", "delta_odd@" + dims_tag(d), r.lhs, r.rhs, 1e-3));
    }
  }
  return out;
}

Dims parse_dims(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--dims", "expected m,n");
  Dims d;
  d.m = std::stoi(text.substr(0, comma));
  d.n = std::stoi(text.substr(comma + 1));
  if (d.m < 0 || d.n < 0) throw CLI::ValidationError("--dims", "negative");
  return d;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stol(text));
  return Rational(std::stol(text.substr(0, slash)),
                  std::stol(text.substr(slash + 1)));
}

}  // namespace

SuperPolynomial parse_polynomial(const std::string& text, Dims d) {
  Parser p{text, 0, d};
  auto r = p.expression();
  return r;
}

std::vector<ReportRecord> run_suite(const std::string& suite,
                                    const RunConfig& cfg) {
  return run_suite(suite, cfg, nullptr);
}

std::vector<ReportRecord> run_suite(const std::string& suite,
                                    const RunConfig& cfg, void* inversions) {
  auto* inv = static_cast<nlohmann::json*>(inversions);
  if (suite == "sl2") return suite_sl2(cfg);
  if (suite == "algebra") return suite_algebra(cfg);
  if (suite == "distributions") return suite_distributions(cfg);
  if (suite == "sphere") return suite_sphere(cfg);
  if (suite == "radon") return suite_radon(cfg);
  if (suite == "invert") return suite_invert(cfg, inv);
  if (suite == "planewave") return suite_planewave(cfg);
  if (suite == "all") {
    std::vector<ReportRecord> out;
    for (const char* s : {"sl2", "algebra", "distributions", "sphere",
                          "radon", "invert", "planewave"}) {
      auto r = run_suite(s, cfg, inversions);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  throw CLI::ValidationError("--suite", "unknown suite " + suite);
}

int run(int argc, char** argv) {
  CLI::App app{"superspace harmonic analysis and Radon inversion"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value config; flags win");
  app.allow_config_extras(CLI::config_extras_mode::ignore_all);

  std::vector<std::string> dims_raw;
  std::vector<std::string> suites;
  RunConfig cfg;
  std::string out_path, phi_name = "gauss", literal, gamma_raw = "2";

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suites, "suite id (repeatable)");
  verify->add_option("--dims", dims_raw, "m,n (repeatable)");
  verify->add_option("--tol", cfg.tol_override, "tolerance override");
  verify->add_option("--sphere-degree", cfg.sphere_degree,
                     "sphere quadrature exactness degree");
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--out", out_path, "JSON report path");
  verify->add_flag("--timings", cfg.timings,
                   "include wall times (breaks byte-identical reports)");
  std::string inversion_out;
  verify->add_option("--inversion-out", inversion_out,
                     "detailed inversion records (JSON)");

  auto* radon = app.add_subcommand("radon", "export a sinogram as CSV");
  radon->add_option("--dims", dims_raw, "m,n");
  radon->add_option("--phi", phi_name, "built-in test function");
  radon->add_option("--out", out_path, "CSV path")->required();
  radon->add_option("--sphere-degree", cfg.sphere_degree, "node budget");

  auto* pizz = app.add_subcommand("pizzetti", "exact supersphere integral");
  pizz->add_option("--dims", dims_raw, "m,n");
  pizz->add_option("literal", literal, "polynomial literal")->required();

  auto* kern = app.add_subcommand("kernel", "Riesz kernel data");
  kern->add_option("--dims", dims_raw, "m,n");
  kern->add_option("--gamma", gamma_raw, "kernel order (rational)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (const auto& t : dims_raw) cfg.dims.push_back(parse_dims(t));
    if (cfg.dims.empty())
      cfg.dims = {{1, 1}, {2, 1}, {3, 1}, {0, 2}, {2, 2}};

    if (verify->parsed()) {
      if (suites.empty()) suites = {"all"};
      std::vector<ReportRecord> records;
      nlohmann::json inversions = nlohmann::json::array();
      for (const auto& s : suites) {
        auto r = run_suite(s, cfg, &inversions);
        records.insert(records.end(), r.begin(), r.end());
      }
      if (!inversion_out.empty()) {
        std::ofstream os(inversion_out);
        os << inversions.dump(2) << "\n";
      }
      int npass = 0, nfail = 0, nunsup = 0;
      for (const auto& r : records) {
        if (r.status == "pass") ++npass;
        else if (r.status == "fail") ++nfail;
        else ++nunsup;
        std::cout << r.status << "  " << r.suite << "/" << r.case_id;
        if (!r.exact && r.status != "unsupported")
          std::cout << "  rel_err=" << r.rel_err << " tol=" << r.tolerance;
        std::cout << "\n";
      }
      std::cout << npass << " passed, " << nfail << " failed, " << nunsup
                << " unsupported\n";
      if (!out_path.empty())
        write_report_json(records, out_path, cfg.timings);
      return nfail == 0 ? 0 : 1;
    }

    if (radon->parsed()) {
      const Dims d = cfg.dims.front();
      auto phi = make_test_function(phi_name, d);
      auto data = radon_transform(phi);
      auto rule = SphereRule::build(d.m, cfg.sphere_degree);
      std::vector<double> ps;
      for (int i = 0; i <= 32; ++i) ps.push_back(-4.0 + 0.25 * i);
      std::ofstream os(out_path);
      export_radon_csv(data, rule, ps, os);
      return 0;
    }

    if (pizz->parsed()) {
      const Dims d = cfg.dims.front();
      const auto poly = parse_polynomial(literal, d);
      std::cout << pizzetti(poly, d).str() << "\n";
      return 0;
    }

    if (kern->parsed()) {
      const Dims d = cfg.dims.front();
      const auto k = riesz_kernel(d, parse_rational(gamma_raw));
      std::cout << "H_M(gamma) = " << k.normalization.str() << "\n";
      for (const auto& [key, c] : k.expansion.terms())
        std::cout << "term j=" << key.first << " |ux|^(" << key.second.str()
                  << ") coeff " << c.str() << "\n";
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace superspace::cli
