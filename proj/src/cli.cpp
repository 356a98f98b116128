#include "xline/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace xline {

namespace {

using ordered_json = nlohmann::ordered_json;

// ---- shared option plumbing ----

struct CaseOptions {
  std::string family_str;
  int d = 2;
  long q = 0;
  std::vector<int> modulus;
  std::string gens_path;
  int max_n = 512;
  bool max_n_from_flag = false;
};

struct BuiltCase {
  std::vector<SignedPerm> gens;
  int n = 0;
  std::string label;
  std::shared_ptr<const FieldCtx> ctx;
  int d = 0;
  std::optional<Family> family;
};

std::pair<long, int> factor_prime_power(long q) {
  if (q < 2) fail(Errc::non_prime, "q must be a prime power >= 3");
  long p = 0;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;
  int k = 0;
  long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) fail(Errc::non_prime, std::to_string(q) + " is not a prime power");
  return {p, k};
}

std::shared_ptr<const FieldCtx> make_field(const CaseOptions& opt) {
  auto [p, k] = factor_prime_power(opt.q);
  std::optional<std::vector<int>> modulus;
  if (!opt.modulus.empty()) {
    modulus = opt.modulus;
    if (static_cast<int>(modulus->size()) == k) modulus->push_back(1);  // monic implied
  }
  return FieldCtx::make(p, k, modulus);
}

int resolve_max_n(const CaseOptions& opt) {
  if (opt.max_n_from_flag) return opt.max_n;
  if (const char* env = std::getenv("XLINE_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) fail(Errc::parse_error, "XLINE_MAX_N is not a positive integer");
    return static_cast<int>(v);
  }
  return opt.max_n;
}

BuiltCase build_case(const CaseOptions& opt) {
  BuiltCase built;
  if (!opt.gens_path.empty()) {
    std::ifstream in(opt.gens_path);
    if (!in) fail(Errc::parse_error, "cannot open " + opt.gens_path);
    built.gens = read_generators(in);
    if (built.gens.empty()) fail(Errc::parse_error, "generator file holds no generators");
    built.n = built.gens.front().n();
    built.label = opt.gens_path;
    return built;
  }
  auto family = family_from_string(opt.family_str);
  if (!family) fail(Errc::parse_error, "family must be sl, glplus, or gl");
  built.ctx = make_field(opt);
  built.d = opt.d;
  built.family = family;
  GroupSpec spec = group_generators(*family, built.ctx, opt.d);
  ProjBasis basis(built.ctx, opt.d);
  built.n = basis.n();
  built.label = spec.label;
  for (const auto& M : spec.generators) built.gens.push_back(lift(basis, M));
  return built;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) fail(Errc::parse_error, "cannot open " + path + " for writing");
  return file;
}

SeidelMatrix read_seidel_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  return read_seidel(in);
}

mpq_class parse_rational(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) fail(Errc::parse_error, "'" + s + "' is not a rational like 3 or -2/7");
  v.canonicalize();
  return v;
}

// ---- JSON rendering ----

ordered_json quad_json(const QuadVal& v) {
  return ordered_json{{"a_num", v.a().get_num().get_si()}, {"a_den", v.a().get_den().get_si()},
                      {"b_num", v.b().get_num().get_si()}, {"b_den", v.b().get_den().get_si()},
                      {"D", v.D()}};
}

}  // namespace

std::string report_json(const ClassificationReport& r) {
  ordered_json j;
  j["schema"] = 1;
  j["group"] = r.group_label;
  j["n"] = r.n;
  j["two_transitive"] = r.two_transitive;
  j["orbits_yxy"] = r.orbit_report.orbit_count_YxY;
  j["orbits_nabla"] = r.orbit_report.orbit_count_nabla;
  j["transitive_on_y"] = r.orbit_report.transitive_on_Y;
  j["seidel_exists"] = r.seidel_exists;
  if (r.certificate)
    j["certificate"] = ordered_json{{"i", r.certificate->i},
                                    {"j", r.certificate->j},
                                    {"existing", r.certificate->existing},
                                    {"proposed", r.certificate->proposed}};
  else
    j["certificate"] = nullptr;
  if (r.spectrum) {
    j["beta"] = r.spectrum->beta;
    j["alpha"] = r.spectrum->alpha;
    j["lambda"] = ordered_json::array({quad_json(r.spectrum->lambda1), quad_json(r.spectrum->lambda2)});
    j["multiplicities"] = ordered_json::array({r.spectrum->m1, r.spectrum->m2});
  } else {
    j["beta"] = nullptr;
    j["alpha"] = nullptr;
    j["lambda"] = nullptr;
    j["multiplicities"] = nullptr;
  }
  if (r.equiangular) {
    j["equiangular"] =
        ordered_json{{"lines", r.n}, {"dim", r.equiangular->first}, {"cosine", quad_json(r.equiangular->second)}};
    j["cosine"] = quad_json(r.equiangular->second);
  } else {
    j["equiangular"] = nullptr;
    j["cosine"] = nullptr;
  }
  j["verdict"] = verdict_str(r.verdict);
  if (r.predictions) {
    const Predictions& p = *r.predictions;
    j["predictions"] = ordered_json{{"verdict", verdict_str(p.verdict)},
                                    {"orbits_yxy", p.orbit_count},
                                    {"seidel_exists", p.seidel_exists},
                                    {"q_mod4", p.q_mod4},
                                    {"in_glplus", p.in_glplus}};
  } else {
    j["predictions"] = nullptr;
  }
  if (r.projector_swap)
    j["projector_swap"] = *r.projector_swap;
  else
    j["projector_swap"] = nullptr;
  j["consistent"] = r.consistent;
  return j.dump(2) + "\n";
}

namespace {

const char* rule_line(Verdict v) {
  switch (v) {
    case Verdict::IRREDUCIBLE:
      return "rule: 3 orbits on signed pairs leave no room for a proper invariant subspace";
    case Verdict::SPLITS_REAL:
      return "rule: the invariant sign matrix has exactly two eigenvalues and its eigenspaces split the module over R";
    case Verdict::SPLITS_COMPLEX_ONLY:
      return "rule: 4 orbits but no invariant sign matrix, so the two summands exist only over C";
    case Verdict::INCONSISTENT:
      return "rule: the computed evidence matches no case of the dichotomy";
  }
  return "";
}

std::string verdict_display(const ClassificationReport& r) {
  if (r.verdict == Verdict::SPLITS_REAL && r.spectrum)
    return "SPLITS_REAL(" + std::to_string(r.spectrum->m1) + "," + std::to_string(r.spectrum->m2) + ")";
  return verdict_str(r.verdict);
}

void print_summary(std::ostream& out, const ClassificationReport& r) {
  out << "group " << r.group_label << "  n=" << r.n << "\n";
  out << "two-transitive: " << (r.two_transitive ? "yes" : "no") << "\n";
  out << "orbits on signed pairs: " << r.orbit_report.orbit_count_YxY
      << " (distinct-line classes: " << r.orbit_report.orbit_count_nabla << ")\n";
  out << "sign matrix: " << (r.seidel_exists ? "exists" : "absent") << "\n";
  if (r.certificate)
    out << "contradiction at (" << r.certificate->i << "," << r.certificate->j << "): entry "
        << r.certificate->existing << " forced to " << r.certificate->proposed << "\n";
  if (r.spectrum) {
    const Spectrum& s = *r.spectrum;
    out << "minimal polynomial: x^2 = " << s.beta << "x + " << s.alpha << "\n";
    out << "eigenvalues: " << s.lambda1.str() << " (x" << s.m1 << "), " << s.lambda2.str() << " (x" << s.m2
        << ")\n";
  }
  if (r.equiangular)
    out << "equiangular family: " << r.n << " lines in R^" << r.equiangular->first << ", cosine "
        << r.equiangular->second.str() << "\n";
  if (r.projector_swap)
    out << "projector exchange under a non-square scaling: " << (*r.projector_swap ? "yes" : "no") << "\n";
  out << "verdict: " << verdict_display(r) << "\n";
  out << rule_line(r.verdict) << "\n";
  if (r.predictions)
    out << "consistent with family prediction: " << (r.consistent ? "yes" : "no") << "\n";
}

// ---- commands ----

int cmd_classify(const CaseOptions& opt, const std::string& json_path) {
  BuiltCase built = build_case(opt);
  ClassificationReport report =
      built.family ? [&] {
        GroupSpec spec = group_generators(*built.family, built.ctx, built.d);
        return classify(spec, resolve_max_n(opt));
      }()
                   : classify_generic(built.gens, built.n, built.label, resolve_max_n(opt));
  print_summary(std::cout, report);
  if (!json_path.empty()) {
    std::ofstream file;
    std::ostream& out = open_out(file, json_path);
    out << report_json(report);
  }
  return report.consistent ? 0 : 2;
}

int cmd_seidel(const CaseOptions& opt, int seed_sign, const std::string& out_path) {
  BuiltCase built = build_case(opt);
  if (built.n > resolve_max_n(opt)) fail(Errc::bound_exceeded, "n exceeds the size bound");
  SynthesisResult result = synthesize(built.gens, built.n, seed_sign);
  if (!result.matrix) {
    const Contradiction& c = *result.certificate;
    std::cerr << "no invariant sign matrix for " << built.label << ": entry (" << c.i << "," << c.j
              << ") already " << c.existing << " but forced to " << c.proposed << "\n";
    return 4;
  }
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  write_seidel(out, *result.matrix);
  return 0;
}

int cmd_spectrum(const std::string& in_path) {
  SeidelMatrix E = read_seidel_file(in_path);
  auto minpoly = quadratic_minpoly(E);
  if (!minpoly) {
    std::cerr << "matrix has more than two eigenvalues\n";
    return 4;
  }
  Spectrum s = eigen_data(minpoly->first, minpoly->second, E.n);
  auto [dim, cosine] = equiangular_params(s);
  std::cout << "n=" << E.n << " beta=" << s.beta << " alpha=" << s.alpha << "\n";
  std::cout << "eigenvalues: " << s.lambda1.str() << " (x" << s.m1 << "), " << s.lambda2.str() << " (x"
            << s.m2 << ")\n";
  std::cout << "equiangular: " << E.n << " lines in R^" << dim << ", cosine " << cosine.str() << "\n";
  return 0;
}

int cmd_orbits(const CaseOptions& opt) {
  BuiltCase built = build_case(opt);
  if (built.n > resolve_max_n(opt)) fail(Errc::bound_exceeded, "n exceeds the size bound");
  bool two_t = is_two_transitive(built.gens, built.n);
  SignedOrbitReport report = orbits_on_signed_pairs(built.gens, built.n);
  std::cout << "group " << built.label << "  n=" << built.n << "\n";
  std::cout << "two-transitive: " << (two_t ? "yes" : "no") << "\n";
  std::cout << "orbits on ordered line pairs: " << report.orbit_count_X2 << "\n";
  std::cout << "orbits on signed pairs: " << report.orbit_count_YxY << "\n";
  std::cout << "distinct-line orbit classes: " << report.orbit_count_nabla << "\n";
  std::cout << "transitive on signed symbols: " << (report.transitive_on_Y ? "yes" : "no") << "\n";
  return 0;
}

int cmd_oracle(const CaseOptions& opt, long max_group_order) {
  BuiltCase built = build_case(opt);
  if (built.n > resolve_max_n(opt)) fail(Errc::bound_exceeded, "n exceeds the size bound");
  if (built.family && built.ctx) {
    auto image = lifted_image_order(*built.family, *built.ctx, built.d);
    if (!image || *image > static_cast<unsigned long long>(max_group_order))
      fail(Errc::group_too_large, "lifted group image has order " +
                                      (image ? std::to_string(*image) : std::string("> 2^64")) +
                                      ", above the bound " + std::to_string(max_group_order));
  }
  long burnside = burnside_orbit_count(built.gens, built.n, max_group_order);
  SignedOrbitReport report = orbits_on_signed_pairs(built.gens, built.n);
  bool agree = burnside == report.orbit_count_YxY;
  std::cout << "burnside=" << burnside << " unionfind=" << report.orbit_count_YxY << " "
            << (agree ? "AGREE" : "DISAGREE") << "\n";
  return agree ? 0 : 2;
}

int cmd_paley(const CaseOptions& opt, const std::string& out_path, const std::string& match_path) {
  auto ctx = make_field(opt);
  SeidelMatrix C = paley_conference(*ctx);
  if (!match_path.empty()) {
    SeidelMatrix E = read_seidel_file(match_path);
    std::cout << "match: " << (paley_match(E, C) ? "true" : "false") << "\n";
    return 0;
  }
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  write_seidel(out, C);
  return 0;
}

int cmd_gram(const std::string& in_path, const std::string& omega_str, const std::string& c_str,
             const std::string& out_path) {
  SeidelMatrix E = read_seidel_file(in_path);
  mpq_class omega = parse_rational(omega_str), c = parse_rational(c_str);
  RatMatrix A = gram(omega, c, E);
  if (!out_path.empty()) {
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    for (const auto& row : A) {
      for (size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
      out << "\n";
    }
  }
  auto minpoly = quadratic_minpoly_rational(A);
  if (!minpoly) {
    std::cerr << "shifted matrix has more than two eigenvalues\n";
    return 4;
  }
  std::cout << "minimal polynomial: x^2 = (" << minpoly->first << ")x + (" << minpoly->second << ")\n";
  auto base = quadratic_minpoly(E);
  if (base) {
    Spectrum s = eigen_data(base->first, base->second, E.n);
    QuadVal shifted1 = QuadVal(omega) + QuadVal(c) * s.lambda1;
    QuadVal shifted2 = QuadVal(omega) + QuadVal(c) * s.lambda2;
    std::cout << "eigenvalues: " << shifted1.str() << " (x" << s.m1 << "), " << shifted2.str() << " (x"
              << s.m2 << ")\n";
  }
  return 0;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::group_too_large:
    case Errc::bound_exceeded:
    case Errc::too_large:
      return 3;
    case Errc::inconsistent_spectrum:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"signed representations of 2-transitive line groups"};
  app.require_subcommand(1);

  CaseOptions opt;
  auto add_case_options = [&](CLI::App* cmd, bool with_group) {
    if (with_group) {
      cmd->add_option("--family", opt.family_str, "sl, glplus, or gl");
      cmd->add_option("--d", opt.d, "dimension of the underlying space")->check(CLI::Range(2, 16));
      cmd->add_option("--q", opt.q, "field order p^k, odd");
      cmd->add_option("--modulus", opt.modulus, "field modulus c0,c1,... (monic, top coefficient implied)")
          ->delimiter(',');
      cmd->add_option("--gens", opt.gens_path, "signed generator file instead of a built-in family");
    }
    auto* mn = cmd->add_option("--max-n", opt.max_n, "largest allowed number of lines");
    mn->each([&](const std::string&) { opt.max_n_from_flag = true; });
  };

  std::string json_path, out_path, in_path, match_path, omega_str = "0", c_str = "1";
  int seed_sign = 1;
  long max_group_order = 1000000;

  CLI::App* classify_cmd = app.add_subcommand("classify", "run the full decision pipeline");
  add_case_options(classify_cmd, true);
  classify_cmd->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");

  CLI::App* seidel_cmd = app.add_subcommand("seidel", "synthesize the invariant sign matrix");
  add_case_options(seidel_cmd, true);
  seidel_cmd->add_option("--seed-sign", seed_sign, "value forced at entry (0,1)")
      ->check(CLI::IsMember({1, -1}));
  seidel_cmd->add_option("--out", out_path, "matrix file path ('-' for stdout)");

  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "exact spectrum of a matrix file");
  spectrum_cmd->add_option("--in", in_path, "matrix file")->required();

  CLI::App* orbits_cmd = app.add_subcommand("orbits", "orbit counts of the signed action");
  add_case_options(orbits_cmd, true);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "compare Burnside and union-find orbit counts");
  add_case_options(oracle_cmd, true);
  oracle_cmd->add_option("--max-group-order", max_group_order, "closure enumeration bound");

  CLI::App* paley_cmd = app.add_subcommand("paley", "conference matrix from quadratic residues");
  paley_cmd->add_option("--q", opt.q, "field order p^k with q = 1 mod 4")->required();
  paley_cmd->add_option("--modulus", opt.modulus, "field modulus c0,c1,...")->delimiter(',');
  paley_cmd->add_option("--out", out_path, "matrix file path ('-' for stdout)");
  paley_cmd->add_option("--match", match_path, "compare this matrix file against the conference matrix");

  CLI::App* gram_cmd = app.add_subcommand("gram", "shifted matrix omega*I + c*E and its spectrum");
  gram_cmd->add_option("--in", in_path, "matrix file")->required();
  gram_cmd->add_option("--omega", omega_str, "diagonal value (rational)");
  gram_cmd->add_option("--c", c_str, "off-diagonal scale (rational)");
  gram_cmd->add_option("--out", out_path, "write the shifted matrix here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(opt, json_path);
    if (seidel_cmd->parsed()) return cmd_seidel(opt, seed_sign, out_path);
    if (spectrum_cmd->parsed()) return cmd_spectrum(in_path);
    if (orbits_cmd->parsed()) return cmd_orbits(opt);
    if (oracle_cmd->parsed()) return cmd_oracle(opt, max_group_order);
    if (paley_cmd->parsed()) return cmd_paley(opt, out_path, match_path);
    if (gram_cmd->parsed()) return cmd_gram(in_path, omega_str, c_str, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace xline
