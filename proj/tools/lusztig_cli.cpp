// Command-line front end: every subcommand prints a machine-readable report.
// Exit codes: 0 success, 2 validation or cap errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lusztig.hpp"
#include "lusztig/io.hpp"

namespace {

using lusztig::Error;
using lusztig::ErrorKind;
using lusztig::FieldSpec;
using lusztig::io::Json;

constexpr int kExitValidation = 2;

struct RunConfig {
  int n = 0;
  std::uint32_t p = 0;
  int n_max = lusztig::kDefaultCensusMax;
  double tolerance = lusztig::kDefaultTolerance;
  std::string format = "json";
  std::string output;
};

void add_common(CLI::App* cmd, RunConfig& cfg, std::vector<std::string> formats) {
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(std::move(formats)));
  cmd->add_option("--output", cfg.output, "Write to this file instead of standard output");
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) lusztig::fail(ErrorKind::InvalidArgument, "cannot open output file " + cfg.output);
  out << text;
}

void emit_json(const RunConfig& cfg, const Json& j) { emit(cfg, j.dump(2) + "\n"); }

void warn_good_prime(const FieldSpec& field, int n) {
  if (!field.is_good_prime(n))
    std::cerr << "warning: p = " << field.p() << " <= 6n-3 = " << FieldSpec::good_prime_bound(n)
              << "; the orbit parametrization assumes p > 6n-3\n";
}

std::string form_text(const lusztig::FiniteFormClass& q) {
  if (q.is_empty()) return "0";
  return "(" + std::to_string(q.dim) + "," + (q.disc_sign > 0 ? "+" : "-") + ")";
}

std::string label_text(const lusztig::OrbitLabel& label) {
  std::string s = label.partition.to_string() + " [";
  for (std::size_t k = 0; k < label.forms.size(); ++k) {
    if (k > 0) s += " ";
    s += "Q" + std::to_string(2 * (k + 1)) + "=" + form_text(label.forms[k]);
  }
  return s + "]";
}

std::string complex_text(lusztig::Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", lusztig::io::stable_real(z.real()), lusztig::io::stable_real(z.imag()));
  return buf;
}

// --- subcommands ------------------------------------------------------------

void run_orbits(const RunConfig& cfg) {
  const FieldSpec field(cfg.p);
  warn_good_prime(field, cfg.n);
  const auto atlas = lusztig::build_atlas(cfg.n, field);
  if (cfg.format == "json") return emit_json(cfg, lusztig::io::to_json(atlas));
  std::ostringstream out;
  if (cfg.format == "csv") {
    out << "partition,forms,size\n";
    for (const auto& e : atlas.entries) {
      std::string forms;
      for (std::size_t k = 0; k < e.label.forms.size(); ++k) forms += (k ? " " : "") + form_text(e.label.forms[k]);
      out << '"' << e.label.partition.to_string() << "\"," << forms << ',' << e.size << '\n';
    }
  } else {
    out << "sp_" << 2 * cfg.n << "(F_" << cfg.p << "): " << atlas.entries.size() << " rational orbits, "
        << atlas.oracle_orbit_count << " oracle orbits, nilpotent cone of " << atlas.cone_size << " points\n";
    for (const auto& e : atlas.entries) out << "  " << label_text(e.label) << "  size " << e.size << '\n';
  }
  emit(cfg, out.str());
}

lusztig::Matrix read_matrix_file(const std::string& path, std::uint32_t p) {
  std::ifstream in(path);
  if (!in) lusztig::fail(ErrorKind::InvalidArgument, "cannot read matrix file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception&) {
    lusztig::fail(ErrorKind::InvalidArgument, "cannot parse matrix file: expected a JSON array of integer rows");
  }
  if (!j.is_array()) lusztig::fail(ErrorKind::InvalidArgument, "cannot parse matrix file: top level is not an array");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) lusztig::fail(ErrorKind::InvalidArgument, "cannot parse matrix file: row is not an array");
    std::vector<std::int64_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) lusztig::fail(ErrorKind::InvalidArgument, "cannot parse matrix file: non-integer entry");
      r.push_back(v.get<std::int64_t>());
    }
    rows.push_back(std::move(r));
  }
  auto m = lusztig::Matrix::from_rows(rows, p);
  if (!m.square() || m.rows() == 0 || m.rows() % 2 != 0)
    lusztig::fail(ErrorKind::DimensionMismatch, "matrix must be square of even size");
  return m;
}

void run_classify(const RunConfig& cfg, const std::string& matrix_path) {
  const FieldSpec field(cfg.p);
  const auto x = read_matrix_file(matrix_path, cfg.p);
  warn_good_prime(field, static_cast<int>(x.rows() / 2));
  const auto label = lusztig::classify_nilpotent(x, field);
  if (cfg.format == "text") return emit(cfg, label_text(label) + "\n");
  emit_json(cfg, lusztig::io::to_json(label));
}

void run_lusztig(const RunConfig& cfg, bool materialize) {
  const FieldSpec field(cfg.p);
  warn_good_prime(field, cfg.n);
  const auto coefficients = lusztig::lusztig_coefficients(cfg.n, field);
  Json j = lusztig::io::to_json(coefficients);
  j["p"] = cfg.p;
  if (materialize) j["function"] = lusztig::io::to_json(lusztig::lusztig_function(cfg.n, field));
  if (cfg.format == "text") {
    std::ostringstream out;
    out << "Lusztig function on sp_" << 2 * cfg.n << "(F_" << cfg.p << "), partition "
        << coefficients.partition.to_string() << '\n';
    for (const auto& [label, sign] : coefficients.terms) out << "  " << (sign > 0 ? "+" : "-") << " e" << label_text(label) << '\n';
    return emit(cfg, out.str());
  }
  emit_json(cfg, j);
}

std::pair<int, int> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) lusztig::fail(ErrorKind::InvalidArgument, "--product expects 'a,b'");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    lusztig::fail(ErrorKind::InvalidArgument, "--product expects two integers 'a,b'");
  }
}

void run_ft_check(const RunConfig& cfg, const std::string& product) {
  const FieldSpec field(cfg.p);
  lusztig::ClassFunction f = [&] {
    if (!product.empty()) {
      const auto [a, b] = parse_pair(product);
      warn_good_prime(field, a + b);
      return lusztig::product_lusztig_function(a, b, field);
    }
    if (cfg.n < 1) lusztig::fail(ErrorKind::InvalidArgument, "--n or --product is required");
    warn_good_prime(field, cfg.n);
    if (!lusztig::is_triangular(cfg.n))
      lusztig::fail(ErrorKind::NotTriangular, std::to_string(cfg.n) + " is not triangular");
    return lusztig::lusztig_function(cfg.n, field);
  }();
  const auto report = lusztig::eigen_check(f, field, cfg.tolerance);
  if (cfg.format == "text") {
    std::ostringstream out;
    out << f.algebra.name() << '\n'
        << "  eigenfunction:      " << (report.is_eigenfunction ? "yes" : "no") << '\n'
        << "  eigenvalue:         " << (report.eigenvalue ? complex_text(*report.eigenvalue) : "-") << '\n'
        << "  predicted:          " << complex_text(report.predicted) << '\n'
        << "  matches prediction: " << (report.matches_prediction ? "yes" : "no") << '\n';
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", report.max_residual);
    out << "  max residual:       " << buf << '\n';
    return emit(cfg, out.str());
  }
  Json j{{"algebra", lusztig::io::algebra_json(f.algebra)}};
  j.update(lusztig::io::to_json(report));
  emit_json(cfg, j);
}

void run_census(const RunConfig& cfg) {
  const auto rows = lusztig::census(cfg.n_max);
  if (cfg.format == "csv") return emit(cfg, lusztig::io::census_csv(rows));
  if (cfg.format == "json") return emit_json(cfg, lusztig::io::to_json(rows));
  std::ostringstream out;
  out << "    n  enum  pairs  d1  d3  odd^2  formula  stable  mismatch\n";
  for (const auto& r : rows) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%5d %5d %6d %3d %3d %6d %8d %7d  %s\n", r.n, r.enum_count, r.grosswald_count, r.d1,
                  r.d3, r.odd_square_count, r.theorem_formula_value, r.stable_dim, r.mismatch() ? "yes" : "no");
    out << buf;
  }
  emit(cfg, out.str());
}

void run_padic_catalog(const RunConfig& cfg) {
  const FieldSpec field(cfg.p);
  const int p_mod_4 = static_cast<int>(cfg.p % 4);
  Json dists = Json::array();
  for (const auto& d : lusztig::lusztig_distributions(cfg.n, p_mod_4)) dists.push_back(lusztig::io::to_json(d));
  Json j{{"n", cfg.n},
         {"p", cfg.p},
         {"p_mod_4", p_mod_4},
         {"eigenvalue", lusztig::eigenvalue_symbolic(cfg.n, p_mod_4).name()},
         {"dimension", dists.size()},
         {"stable_dim", lusztig::stable_subspace_dim(cfg.n)},
         {"distributions", std::move(dists)}};
  if (cfg.format == "text") {
    std::ostringstream out;
    out << "sp_" << 2 * cfg.n << " over a p-adic field with p = " << p_mod_4 << " mod 4: " << j["dimension"].get<int>()
        << " Lusztig distributions, eigenvalue " << j["eigenvalue"].get<std::string>() << ", stable subspace dim "
        << j["stable_dim"].get<int>() << '\n';
    for (const auto& d : j["distributions"])
      out << "  vertex " << d["vertex"].get<int>() << "  quotient sp_" << d["quotient"][0].get<int>() << " x sp_"
          << d["quotient"][1].get<int>() << "  deltas (" << d["deltas"][0].get<int>() << ","
          << d["deltas"][1].get<int>() << ")" << (d["stable"].get<bool>() ? "  stable" : "") << '\n';
    return emit(cfg, out.str());
  }
  emit_json(cfg, j);
}

void run_hilbert(const RunConfig& cfg, const std::string& a, const std::string& b) {
  const FieldSpec field(cfg.p);
  const auto ca = lusztig::parse_square_class(a, field);
  const auto cb = lusztig::parse_square_class(b, field);
  const int symbol = lusztig::hilbert_symbol(ca, cb, field);
  if (cfg.format == "text") return emit(cfg, "(" + ca.name() + ", " + cb.name() + ") = " + std::to_string(symbol) + "\n");
  emit_json(cfg, Json{{"p", cfg.p}, {"a", ca.name()}, {"b", cb.name()}, {"symbol", symbol}});
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void run_normalize_form(const RunConfig& cfg, const std::string& entries_text, bool finite) {
  const FieldSpec field(cfg.p);
  const auto items = split_list(entries_text);
  Json j{{"p", cfg.p}, {"field", finite ? "finite" : "padic"}};
  if (finite) {
    std::vector<lusztig::FFElem> entries;
    for (const auto& s : items) {
      try {
        entries.push_back(field.elem(std::stoll(s)));
      } catch (const std::logic_error&) {
        lusztig::fail(ErrorKind::InvalidArgument, "finite entries must be integers");
      }
    }
    const auto cls = lusztig::classify_diagonal_finite(entries, field);
    const auto witt = lusztig::witt_decompose(entries, field);
    j["class"] = lusztig::io::to_json(cls);
    j["hyperbolic_planes"] = witt.hyperbolic_planes;
    j["anisotropic"] = lusztig::io::to_json(witt.anisotropic);
    Json rep = Json::array();
    for (auto e : lusztig::finite_representative(cls, field)) rep.push_back(e.value);
    j["representative"] = rep;
  } else {
    std::vector<lusztig::PadicDiagEntry> entries;
    for (const auto& s : items) entries.push_back(lusztig::parse_square_class(s, field));
    const auto cls = lusztig::classify_diagonal_padic(entries, field);
    j["class"] = lusztig::io::to_json(cls);
    Json rep = Json::array();
    for (auto e : lusztig::padic_representative(cls, field)) rep.push_back(e.name());
    j["representative"] = rep;
    bool tabulated = true;
    try {
      (void)lusztig::figure1_representative(cls, field);
    } catch (const Error&) {
      tabulated = false;
    }
    j["tabulated"] = tabulated;
  }
  if (cfg.format == "text") return emit(cfg, j.dump() + "\n");
  emit_json(cfg, j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lusztig functions on symplectic Lie algebras: orbits, Fourier eigenfunctions, p-adic census"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* orbits = app.add_subcommand("orbits", "Atlas of rational nilpotent orbits of sp_2n(F_p) with oracle sizes");
  orbits->add_option("--n", cfg.n, "Rank n")->required()->check(CLI::PositiveNumber);
  orbits->add_option("--p", cfg.p, "Odd prime p")->required();
  add_common(orbits, cfg, {"json", "csv", "text"});

  std::string matrix_path;
  auto* classify = app.add_subcommand("classify", "Classify a nilpotent matrix given as a JSON array of rows");
  classify->add_option("matrix", matrix_path, "Matrix file")->required();
  classify->add_option("--p", cfg.p, "Odd prime p")->required();
  add_common(classify, cfg, {"json", "text"});

  bool materialize = false;
  auto* lusztig_cmd = app.add_subcommand("lusztig", "Lusztig function coefficients on its orbit labels");
  lusztig_cmd->add_option("--n", cfg.n, "Triangular rank n")->required();
  lusztig_cmd->add_option("--p", cfg.p, "Odd prime p")->required();
  lusztig_cmd->add_flag("--materialize", materialize, "Also emit the function pointwise (enumerable algebras only)");
  add_common(lusztig_cmd, cfg, {"json", "text"});

  std::string product;
  auto* ft = app.add_subcommand("ft-check", "Verify the Fourier eigenfunction property and eigenvalue");
  auto* ft_n = ft->add_option("--n", cfg.n, "Triangular rank n (single mode)");
  ft->add_option("--product", product, "Ranks 'a,b' of a product of two Lusztig functions")->excludes(ft_n);
  ft->add_option("--p", cfg.p, "Odd prime p")->required();
  ft->add_option("--tolerance", cfg.tolerance, "Comparison tolerance")->check(CLI::PositiveNumber);
  add_common(ft, cfg, {"json", "text"});

  auto* census = app.add_subcommand("census", "Counting identities for the p-adic eigenspace dimension");
  census->add_option("--n-max", cfg.n_max, "Largest n (default 500)");
  add_common(census, cfg, {"json", "csv", "text"});

  auto* catalog = app.add_subcommand("padic-catalog", "p-adic Lusztig functions and Lusztig distributions on sp_2n");
  catalog->add_option("--n", cfg.n, "Rank n")->required();
  catalog->add_option("--p", cfg.p, "Odd residue characteristic p")->required();
  add_common(catalog, cfg, {"json", "text"});

  std::string sym_a, sym_b;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbol of two square classes (1, eps, pi, eps*pi, optional '-')");
  hilbert->add_option("--a", sym_a, "First square class")->required();
  hilbert->add_option("--b", sym_b, "Second square class")->required();
  hilbert->add_option("--p", cfg.p, "Odd residue characteristic p")->required();
  add_common(hilbert, cfg, {"json", "text"});

  std::string entries;
  bool finite = false;
  auto* normalize = app.add_subcommand("normalize-form", "Classify a diagonal quadratic form and give a normal form");
  normalize->add_option("--entries", entries, "Comma-separated diagonal entries")->required();
  normalize->add_option("--p", cfg.p, "Odd prime p")->required();
  normalize->add_flag("--finite", finite, "Entries are integers mod p instead of p-adic square classes");
  add_common(normalize, cfg, {"json", "text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (cfg.tolerance <= 0) lusztig::fail(ErrorKind::InvalidArgument, "tolerance must be positive");
    if (*orbits) run_orbits(cfg);
    if (*classify) run_classify(cfg, matrix_path);
    if (*lusztig_cmd) run_lusztig(cfg, materialize);
    if (*ft) run_ft_check(cfg, product);
    if (*census) run_census(cfg);
    if (*catalog) run_padic_catalog(cfg);
    if (*hilbert) run_hilbert(cfg, sym_a, sym_b);
    if (*normalize) run_normalize_form(cfg, entries, finite);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}
