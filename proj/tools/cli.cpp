#include "cli.hpp"

#include "horo/batteries.hpp"
#include "horo/datum_io.hpp"
#include "horo/errors.hpp"
#include "horo/quadrature.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace horo::cli {

using json = nlohmann::ordered_json;

namespace {

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && std::isfinite(out);
}

// "1", "-2.5", "3i", "-i", "1+2i", "2e-3-1e-2i"
bool parse_complex(std::string s, cplx& out) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) return false;
  if (s.back() != 'i') {
    double re;
    if (!parse_double(s, re)) return false;
    out = re;
    return true;
  }
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  std::string re_s = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_s = split == std::string::npos ? s : s.substr(split);
  if (im_s.empty() || im_s == "+") im_s = "1";
  if (im_s == "-") im_s = "-1";
  double re = 0, im = 0;
  if (!re_s.empty() && !parse_double(re_s, re)) return false;
  if (!parse_double(im_s, im)) return false;
  out = cplx(re, im);
  return true;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) out.push_back(tok);
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

json cvec(const CVec3& v) {
  json a = json::array();
  for (int i = 0; i < 3; ++i) a.push_back({v(i).real(), v(i).imag()});
  return a;
}

json quad_json(const QuadratureSpec& q) {
  return {{"t_max", q.t_max}, {"n_t", q.n_t}, {"n_theta", q.n_theta},
          {"fiber_t_max", q.fiber_t_max}, {"fiber_n", q.fiber_n}};
}

json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

// JSON lines, or CSV with a fresh header whenever the record shape changes.
class Emitter {
 public:
  Emitter(std::ostream& os, bool csv) : os_(os), csv_(csv) {}

  void emit(json rec) {
    if (!csv_) {
      os_ << rec.dump() << '\n';
      return;
    }
    std::vector<std::pair<std::string, json>> cells;
    flatten("", rec, cells);
    std::vector<std::string> header;
    for (const auto& c : cells) header.push_back(c.first);
    if (header != header_) {
      if (!header_.empty()) os_ << '\n';
      for (std::size_t i = 0; i < header.size(); ++i) os_ << (i ? "," : "") << header[i];
      os_ << '\n';
      header_ = header;
    }
    for (std::size_t i = 0; i < cells.size(); ++i) os_ << (i ? "," : "") << cell(cells[i].second);
    os_ << '\n';
  }

 private:
  static void flatten(const std::string& prefix, const json& j,
                      std::vector<std::pair<std::string, json>>& out) {
    if (j.is_object()) {
      for (auto it = j.begin(); it != j.end(); ++it)
        flatten(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value(), out);
    } else if (j.is_array()) {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(prefix + "." + std::to_string(i), j[i], out);
    } else {
      out.emplace_back(prefix, j);
    }
  }

  static std::string cell(const json& v) {
    if (v.is_null()) return "";
    if (!v.is_string()) return v.dump();
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }

  std::ostream& os_;
  bool csv_;
  std::vector<std::string> header_;
};

TestFunction make_f(const std::string& kind, const std::string& w, int lambda) {
  if (kind == "zero") return TestFunction::zero();
  return TestFunction::matrix_coefficient(parse_point(w), lambda);
}

json lattice_record(const RootDatum& d, const WeightVector& lam, const Rational& c) {
  const LatticeClass lc = classify(d, lam);
  json lj = json::array(), kj = json::array();
  for (Eigen::Index i = 0; i < lam.size(); ++i) lj.push_back(to_string(lam.coords(i)));
  const QVector k = omega_coordinates(d, lam);
  for (Eigen::Index i = 0; i < k.size(); ++i) kj.push_back(to_string(k(i)));
  json rec = {{"schema", 1},
              {"operation", "lattice"},
              {"datum", d.name},
              {"inputs", {{"lambda", lj}, {"omega_coords", kj}}},
              {"integral", lc.integral},
              {"lambda0", lc.lambda0},
              {"nonneg", lc.nonneg},
              {"positive", lc.positive},
              {"lambda1", lc.l1},
              {"lambda2", lc.l2},
              {"lambda_c", lc.lc},
              {"lambda_sd", lc.sd == Availability::Unavailable ? json(nullptr) : json(lc.sd == Availability::Yes)}};
  rec["formal_dimension"] = d.sigma_plus ? json(to_string(formal_dimension(d, lam, c))) : json(nullptr);
  return rec;
}

}  // namespace

CVec3 parse_point(const std::string& raw) {
  std::string text = raw;
  text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
  if (text.rfind("tube:", 0) == 0) {
    double s;
    if (!parse_double(text.substr(5), s)) throw ParseError("", 0, "bad tube parameter in '" + raw + "'");
    return tube_point(s);
  }
  if (text.find(',') != std::string::npos) {
    const auto parts = split_commas(text);
    if (parts.size() != 3) throw ParseError("", 0, "explicit point needs three components: '" + raw + "'");
    CVec3 v;
    for (int i = 0; i < 3; ++i)
      if (!parse_complex(parts[static_cast<std::size_t>(i)], v(i)))
        throw ParseError("", 0, "bad complex number '" + parts[static_cast<std::size_t>(i)] + "'");
    return v;
  }
  for (const auto& [name, value] : std::vector<std::pair<std::string, CVec3>>{
           {"z0bar", zeta0_bar()}, {"zeta0bar", zeta0_bar()}, {"z0", zeta0()}, {"zeta0", zeta0()},
           {"x0", CVec3(x0().cast<cplx>())}}) {
    if (text.size() < name.size() || text.compare(text.size() - name.size(), name.size(), name) != 0) continue;
    const std::string prefix = text.substr(0, text.size() - name.size());
    double s = 1.0;
    if (prefix == "-") s = -1.0;
    else if (!prefix.empty() && prefix != "+" && !parse_double(prefix, s))
      throw ParseError("", 0, "bad scalar prefix in '" + raw + "'");
    return CVec3(s * value);
  }
  throw ParseError("", 0, "unrecognized point '" + raw + "' (x0, z0, z0bar, tube:s, or a,b,c)");
}

void parse_quad(const std::string& text, QuadratureSpec& q) {
  const auto p = split_commas(text);
  double t = 0, a = 0, b = 0;
  if (p.size() != 3 || !parse_double(p[0], t) || !parse_double(p[1], a) || !parse_double(p[2], b) ||
      a != std::floor(a) || b != std::floor(b))
    throw ParseError("", 0, "--quad expects t_max,n_t,n_theta, got '" + text + "'");
  q.t_max = t;
  q.n_t = static_cast<int>(a);
  q.n_theta = static_cast<int>(b);
}

void parse_fiber(const std::string& text, QuadratureSpec& q) {
  const auto p = split_commas(text);
  double t = 0, n = 0;
  if (p.size() != 2 || !parse_double(p[0], t) || !parse_double(p[1], n) || n != std::floor(n))
    throw ParseError("", 0, "--fiber expects t_max,n, got '" + text + "'");
  q.fiber_t_max = t;
  q.fiber_n = static_cast<int>(n);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Horospherical Cauchy transform on the one-sheeted hyperboloid, and root-lattice classification",
               "horo"};
  app.require_subcommand(1);
  std::string format = "jsonl", out_path, quad, fiber;
  std::uint64_t seed = 1;
  app.add_option("--format", format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
  app.add_option("--out", out_path, "write records here instead of stdout");
  app.add_option("--seed", seed, "seed for sampled batteries");
  app.add_option("--quad", quad, "t_max,n_t,n_theta for the integral over X");
  app.add_option("--fiber", fiber, "t_max,n for the fiber integral");

  auto* lat = app.add_subcommand("lattice", "classify weights of a root datum");
  std::string datum_path, basis = "root", c_text = "1";
  std::vector<std::string> lambdas;
  int enumerate = -1;
  lat->add_option("datum", datum_path, "root-datum file")->required();
  lat->add_option("--lambda", lambdas, "weight as comma-separated rationals (repeatable)");
  lat->add_option("--basis", basis, "coordinates of --lambda: root or omega")
      ->check(CLI::IsMember({"root", "omega"}));
  lat->add_option("--enumerate", enumerate, "all sum k_i omega_i with |k_i| <= N");
  lat->add_option("--c", c_text, "constant in the formal dimension");

  auto* tr = app.add_subcommand("transform", "Cauchy transform or one spectral component at zeta");
  std::string f_kind = "matrix", w_text = "2z0", zeta_text;
  int lambda = 2, component = 0;
  tr->add_option("--f", f_kind, "matrix (<x,w>^-lambda) or zero")->check(CLI::IsMember({"matrix", "zero"}));
  tr->add_option("--w", w_text, "w of the matrix coefficient");
  tr->add_option("--lambda", lambda, "lambda of the matrix coefficient");
  tr->add_option("--zeta", zeta_text, "interior horopoint")->required();
  tr->add_option("--component", component, "spectral component mu instead of the full transform");

  auto* inv = app.add_subcommand("invert", "(L f^)^v (z) / f(z) over a list of z");
  std::string inv_f = "matrix", inv_w = "2z0";
  std::vector<int> inv_lambdas{2};
  std::vector<std::string> z_texts{"tube:0.3", "tube:0.6", "tube:0.9", "tube:1.2", "tube:1.5"};
  double h = 1e-3;
  bool profile = false;
  inv->add_option("--f", inv_f, "matrix or zero")->check(CLI::IsMember({"matrix", "zero"}));
  inv->add_option("--w", inv_w, "w of the matrix coefficient (sheet of z0)");
  inv->add_option("--lambda", inv_lambdas, "lambda values (repeatable)");
  inv->add_option("--z", z_texts, "points of D+ (repeatable)");
  inv->add_option("--step", h, "relative step h of the L stencil");
  inv->add_flag("--profile", profile, "also emit |L f^| along each fiber");

  auto* ver = app.add_subcommand("verify", "run a verification battery");
  std::string battery = "all";
  ver->add_option("battery", battery, "battery name or all");

  for (auto* sub : {lat, tr, inv, ver}) sub->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << out_path << "' for writing\n";
      return kParse;
    }
    os = &file;
  }
  Emitter em(*os, format == "csv");

  try {
    QuadratureSpec q;
    if (!quad.empty()) parse_quad(quad, q);
    if (!fiber.empty()) parse_fiber(fiber, q);

    if (*lat) {
      const RootDatum d = load_datum(datum_path);
      const auto c = parse_rational(c_text);
      if (!c) throw ParseError("", 0, "--c must be a rational, got '" + c_text + "'");
      if (lambdas.empty() && enumerate < 0) throw ParseError("", 0, "lattice needs --lambda or --enumerate");
      const auto om = fundamental_weights(d);
      for (const auto& text : lambdas) {
        const auto parts = split_commas(text);
        if (parts.size() != static_cast<std::size_t>(d.rank))
          throw DomainError("--lambda '" + text + "' needs " + std::to_string(d.rank) + " coordinates");
        QVector v = QVector::Zero(d.rank);
        for (std::size_t i = 0; i < parts.size(); ++i) {
          const auto r = parse_rational(parts[i]);
          if (!r) throw ParseError("", 0, "bad rational '" + parts[i] + "' in --lambda");
          if (basis == "root") v(static_cast<Eigen::Index>(i)) = *r;
          else v += om[i].coords * *r;
        }
        em.emit(lattice_record(d, WeightVector(v), *c));
      }
      if (enumerate >= 0)
        for (const auto& lam : enumerate_weights(d, enumerate)) em.emit(lattice_record(d, lam, *c));
      return kOk;
    }

    if (*tr) {
      q.validate();
      const TestFunction f = make_f(f_kind, w_text, lambda);
      const HoroPoint zeta = classify_horopoint(parse_point(zeta_text));
      if (!zeta.interior())
        throw DomainError("--zeta must be interior (Delta(Re zeta) > 1); it is " + to_string(zeta.cls));
      const cplx v = component > 0 ? fourier_component(f, zeta, component, q) : cauchy_transform(f, zeta, q);
      json inputs = {{"f", f_kind == "zero" ? "zero" : "matrix_coefficient"},
                     {"w", f_kind == "zero" ? json(nullptr) : cvec(f.w())},
                     {"lambda", f_kind == "zero" ? json(nullptr) : json(lambda)},
                     {"zeta", cvec(zeta.v)},
                     {"component", component > 0 ? json(component) : json(nullptr)}};
      em.emit({{"schema", 1},
               {"operation", component > 0 ? "fourier_component" : "cauchy_transform"},
               {"inputs", inputs},
               {"value_re", v.real()},
               {"value_im", v.imag()},
               {"quadrature", quad_json(q)},
               {"tail_bound", nullptr}});
      return kOk;
    }

    if (*inv) {
      q.validate();
      std::vector<CVec3> zs;
      for (const auto& t : z_texts) zs.push_back(parse_point(t));
      for (int lam : inv_lambdas) {
        const TestFunction f = make_f(inv_f, inv_w, lam);
        const InversionReport rep = inversion_pipeline(f, zs, q, h);
        for (const auto& p : rep.points)
          em.emit({{"schema", 1},
                   {"operation", "invert"},
                   {"inputs", {{"f", inv_f == "zero" ? "zero" : "matrix_coefficient"},
                               {"w", inv_f == "zero" ? json(nullptr) : cvec(f.w())},
                               {"lambda", lam},
                               {"z", cvec(p.z)}}},
                   {"value_re", p.R.real()},
                   {"value_im", p.R.imag()},
                   {"f_re", p.f.real()},
                   {"f_im", p.f.imag()},
                   {"ratio_re", num(p.ratio.real())},
                   {"ratio_im", num(p.ratio.imag())},
                   {"quadrature", quad_json(q)},
                   {"tail_bound", p.tail_bound}});
        em.emit({{"schema", 1},
                 {"operation", "invert_summary"},
                 {"inputs", {{"lambda", lam}, {"points", rep.points.size()}}},
                 {"c_norm_re", num(rep.mean.real())},
                 {"c_norm_im", num(rep.mean.imag())},
                 {"cv", num(rep.cv)}});
        if (profile && inv_f != "zero") {
          const PreparedFunction pf = prepare(f, q);
          const HoloFn fhat = [&](const CVec3& v) { return cauchy_transform(pf, classify_horopoint(v)); };
          const Rule r = composite_gauss_legendre(-q.fiber_t_max, q.fiber_t_max, q.fiber_n);
          for (const auto& z : zs)
            for (Eigen::Index k = 0; k < r.x.size(); ++k) {
              const cplx v = apply_L(fhat, classify_horopoint(fiber_curve(z, r.x(k))), h);
              em.emit({{"schema", 1},
                       {"operation", "fiber_profile"},
                       {"inputs", {{"lambda", lam}, {"z", cvec(z)}}},
                       {"t", r.x(k)},
                       {"abs_integrand", std::abs(v)}});
            }
        }
      }
      return kOk;
    }

    if (*ver) {
      std::vector<std::string> names;
      if (battery == "all") names = battery_names();
      else names.push_back(battery);
      bool all_ok = true;
      for (const auto& name : names) {
        const BatteryResult r = run_battery(name, seed, q);
        for (const auto& c : r.checks)
          em.emit({{"schema", 1},
                   {"operation", "verify"},
                   {"battery", name},
                   {"check", c.name},
                   {"passed", c.passed},
                   {"detail", c.detail}});
        em.emit({{"schema", 1},
                 {"operation", "verify_summary"},
                 {"battery", name},
                 {"seed", seed},
                 {"checks", r.checks.size()},
                 {"passed", r.passed()}});
        all_ok = all_ok && r.passed();
      }
      return all_ok ? kOk : kVerifyFailed;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const DivergenceError& e) {
    err << "divergence: " << e.what() << '\n';
    return kDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}

}  // namespace horo::cli
