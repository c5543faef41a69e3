#include "frl/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "frl/arrangements.hpp"
#include "frl/betti_table.hpp"
#include "frl/coefficients.hpp"
#include "frl/complex_io.hpp"
#include "frl/face_ring.hpp"
#include "frl/fvectors.hpp"
#include "frl/generators.hpp"
#include "frl/homology.hpp"
#include "frl/koszul.hpp"
#include "frl/moment_angle.hpp"
#include "frl/quotients.hpp"

namespace frl::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string source;
  std::string coeff = "q";
  std::string format = "text";
  std::string route = "hochster";
  std::string matrix;
  std::string output;
  bool format_given = false;
};

struct Context {
  const SimplicialComplex& complex;
  Coefficients field;
  const Options& options;
  std::ostream& out;

  bool json() const { return options.format == "json"; }
};

Json number(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json sequence(const IntegerSequence& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(number(v));
  return out;
}

template <typename T>
std::string tuple_text(const std::vector<T>& values) {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out << ", ";
    out << values[k];
  }
  out << ')';
  return out.str();
}

std::string faces_text(const std::vector<Face>& faces) {
  std::string out;
  for (Face f : faces) {
    if (!out.empty()) out += ' ';
    out += f.to_string();
  }
  return out;
}

Json faces_json(const std::vector<Face>& faces) {
  Json out = Json::array();
  for (Face f : faces) out.push_back(f.vertices());
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void emit(const Context& ctx, const Json& doc) { ctx.out << doc.dump(2) << '\n'; }

IntegerSequence h_vector(const SimplicialComplex& complex) {
  return h_from_f(f_vector(complex), complex.rank());
}

int parse_count(const std::string& token, const std::string& source) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("complex source '" + source + "': '" + token + "' is not an integer");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (parts.empty()) parts.emplace_back();
  return parts;
}

// ---- subcommands ----

int cmd_info(const Context& ctx) {
  const auto& k = ctx.complex;
  const auto f = f_vector(k);
  const auto h = h_vector(k);
  const auto missing = missing_faces(k);
  const auto chi = euler_characteristic(k);
  if (ctx.json()) {
    Json doc;
    doc["m"] = k.num_vertices();
    doc["dim"] = k.dimension();
    doc["n"] = k.rank();
    doc["pure"] = k.is_pure();
    doc["facets"] = faces_json(k.facets());
    doc["f"] = sequence(f);
    doc["h"] = sequence(h);
    doc["missing_faces"] = faces_json(missing);
    doc["neighbourliness"] = neighbourliness(k);
    doc["flag"] = is_flag(k);
    doc["euler_characteristic"] = number(chi);
    emit(ctx, doc);
    return kOk;
  }
  ctx.out << "m " << k.num_vertices() << "  dim " << k.dimension() << "  n " << k.rank()
          << "  pure " << yes_no(k.is_pure()) << '\n';
  ctx.out << "facets " << k.facets().size() << ": " << faces_text(k.facets()) << '\n';
  ctx.out << "f " << tuple_text(f) << '\n';
  ctx.out << "h " << tuple_text(h) << '\n';
  ctx.out << "missing faces " << missing.size() << ": " << faces_text(missing) << '\n';
  ctx.out << "neighbourliness " << neighbourliness(k) << '\n';
  ctx.out << "flag " << yes_no(is_flag(k)) << '\n';
  ctx.out << "euler characteristic " << chi << '\n';
  return kOk;
}

int cmd_fvector(const Context& ctx) {
  const auto f = f_vector(ctx.complex);
  const auto h = h_from_f(f, ctx.complex.rank());
  const auto g = g_from_h(h);
  if (ctx.json()) {
    Json doc;
    doc["n"] = ctx.complex.rank();
    doc["f"] = sequence(f);
    doc["h"] = sequence(h);
    doc["g"] = sequence(g);
    emit(ctx, doc);
    return kOk;
  }
  ctx.out << "f " << tuple_text(f) << '\n';
  ctx.out << "h " << tuple_text(h) << '\n';
  ctx.out << "g " << tuple_text(g) << '\n';
  return kOk;
}

Json bound_json(const BoundCheck& b) {
  return Json{{"holds", b.holds}, {"equality", b.equality}, {"slack", sequence(b.slack)}};
}

int cmd_gcheck(const Context& ctx) {
  const auto& k = ctx.complex;
  const int n = k.rank();
  const auto f = f_vector(k);
  const auto h = h_from_f(f, n);
  const auto verdict = g_theorem_check(f, n);
  std::optional<BoundCheck> ubt;
  std::optional<BoundCheck> lbt;
  if (n >= 1 && !f.empty()) ubt = ubt_check(f, n, static_cast<int>(f[0].get_si()));
  if (n >= 3) lbt = lbt_check(f, n);
  if (ctx.json()) {
    Json doc;
    doc["h"] = sequence(h);
    doc["g"] = sequence(g_from_h(h));
    doc["dehn_sommerville"] = verdict.ds_holds;
    doc["g_nonnegative"] = verdict.g_nonnegative;
    doc["g_m_vector"] = verdict.g_is_m_vector;
    doc["passes"] = verdict.passes();
    doc["ds_f_form"] = ds_f_form_check(f, n);
    doc["upper_bound"] = ubt ? bound_json(*ubt) : Json(nullptr);
    doc["lower_bound"] = lbt ? bound_json(*lbt) : Json(nullptr);
    emit(ctx, doc);
    return kOk;
  }
  ctx.out << "h " << tuple_text(h) << "  g " << tuple_text(g_from_h(h)) << '\n';
  ctx.out << "(a) h_i = h_{n-i}      " << yes_no(verdict.ds_holds) << '\n';
  ctx.out << "(b) g_i >= 0           " << yes_no(verdict.g_nonnegative) << '\n';
  ctx.out << "(c) g is an M-vector   " << yes_no(verdict.g_is_m_vector) << '\n';
  ctx.out << "necessary conditions   " << (verdict.passes() ? "pass" : "fail") << '\n';
  if (ubt) {
    ctx.out << "upper bound  " << (ubt->holds ? "holds" : "violated")
            << (ubt->equality ? ", equality" : "") << "  slack " << tuple_text(ubt->slack) << '\n';
  }
  if (lbt) {
    ctx.out << "lower bound  " << (lbt->holds ? "holds" : "violated")
            << (lbt->equality ? ", equality" : "") << "  slack " << tuple_text(lbt->slack) << '\n';
  }
  return kOk;
}

int cmd_homology(const Context& ctx) {
  const auto profile = reduced_homology(ctx.complex, ctx.field);
  if (ctx.json()) {
    Json dims = Json::object();
    for (int d = -1; d <= profile.top_degree(); ++d) dims[std::to_string(d)] = profile(d);
    emit(ctx, Json{{"field", ctx.field.name()}, {"reduced_homology", dims}});
    return kOk;
  }
  ctx.out << "reduced homology over " << ctx.field.name() << '\n';
  for (int d = -1; d <= profile.top_degree(); ++d) {
    ctx.out << "  H~_" << d << "  " << profile(d) << '\n';
  }
  return kOk;
}

int cmd_cm(const Context& ctx) {
  const bool cm = is_cohen_macaulay(ctx.complex, ctx.field);
  const auto h = h_vector(ctx.complex);
  std::optional<bool> stanley;
  if (cm) stanley = stanley_m_vector_check(ctx.complex, ctx.field);
  if (ctx.json()) {
    Json doc{{"field", ctx.field.name()}, {"cohen_macaulay", cm}, {"h", sequence(h)}};
    doc["h_m_vector"] = stanley ? Json(*stanley) : Json(nullptr);
    emit(ctx, doc);
    return kOk;
  }
  ctx.out << "Cohen-Macaulay over " << ctx.field.name() << "  " << yes_no(cm) << '\n';
  ctx.out << "h " << tuple_text(h);
  if (stanley) ctx.out << "  M-vector " << yes_no(*stanley);
  ctx.out << '\n';
  return kOk;
}

int cmd_gorenstein(const Context& ctx) {
  const auto algebraic = is_gorenstein(ctx.complex, ctx.field);
  const bool links = is_gorenstein_star(ctx.complex, ctx.field);
  if (algebraic.gorenstein_star != links) {
    throw CrossCheckError("Gorenstein* from the Betti table (" +
                          std::string(yes_no(algebraic.gorenstein_star)) +
                          ") disagrees with the link criterion (" + yes_no(links) + ")");
  }
  const auto poincare = poincare_algebra_check(ctx.complex, ctx.field);
  if (ctx.json()) {
    emit(ctx, Json{{"field", ctx.field.name()},
                   {"gorenstein", algebraic.gorenstein},
                   {"gorenstein_star", algebraic.gorenstein_star},
                   {"poincare_table_symmetric", poincare.table_symmetric},
                   {"poincare_pairing_nondegenerate", poincare.pairing_nondegenerate}});
    return kOk;
  }
  ctx.out << "Gorenstein        " << yes_no(algebraic.gorenstein) << '\n';
  ctx.out << "Gorenstein*       " << yes_no(algebraic.gorenstein_star) << '\n';
  ctx.out << "Poincare algebra  " << yes_no(poincare.holds()) << "  (table symmetric "
          << yes_no(poincare.table_symmetric) << ", pairing nondegenerate "
          << yes_no(poincare.pairing_nondegenerate) << ")\n";
  return kOk;
}

int cmd_betti(const Context& ctx) {
  const auto& route = ctx.options.route;
  std::vector<std::pair<std::string, BigradedBettiTable>> tables;
  if (route == "hochster" || route == "all") {
    tables.emplace_back("hochster", hochster_betti(ctx.complex, ctx.field));
  }
  if (route == "koszul" || route == "all") {
    tables.emplace_back("koszul", koszul_betti(ctx.complex, ctx.field));
  }
  if (route == "cells" || route == "all") {
    tables.emplace_back("cells", zk_bigraded_betti(ctx.complex, ctx.field));
  }
  for (std::size_t r = 1; r < tables.size(); ++r) {
    if (!(tables[r].second == tables[0].second)) {
      throw CrossCheckError("routes " + tables[0].first + " and " + tables[r].first +
                            " disagree: " + describe_difference(tables[0].second, tables[r].second));
    }
  }
  const auto& table = tables.front().second;
  std::vector<std::string> names;
  for (const auto& [name, t] : tables) names.push_back(name);
  if (ctx.json()) {
    Json doc{{"field", ctx.field.name()}, {"routes", names}};
    doc["table"] = Json::parse(to_json(table));
    doc["betti_vector"] = table.total_degree_vector();
    emit(ctx, doc);
    return kOk;
  }
  ctx.out << "bigraded Betti numbers over " << ctx.field.name() << " (routes:";
  for (const auto& name : names) ctx.out << ' ' << name;
  ctx.out << (names.size() > 1 ? ", agree)\n" : ")\n");
  ctx.out << to_text(table);
  ctx.out << "betti vector " << tuple_text(table.total_degree_vector()) << '\n';
  return kOk;
}

int cmd_hilbert(const Context& ctx) {
  constexpr int kTerms = 7;
  const auto series = hilbert_series(ctx.complex);
  const auto identity = euler_resolution_identity(ctx.complex, ctx.field);
  IntegerSequence from_series;
  IntegerSequence counted;
  for (int d = 0; d < kTerms; ++d) {
    from_series.push_back(series.series_coefficient(2 * d));
    counted.push_back(graded_dimension(ctx.complex, d));
  }
  if (from_series != counted) {
    throw CrossCheckError("Hilbert series coefficients " + tuple_text(from_series) +
                          " differ from monomial counts " + tuple_text(counted));
  }
  if (ctx.json()) {
    emit(ctx, Json{{"numerator", sequence(series.numerator.coefficients())},
                   {"denominator_exponent", series.denominator_exponent},
                   {"graded_dimensions", sequence(counted)},
                   {"resolution_identity", identity.holds()}});
    return kOk;
  }
  ctx.out << "F(t) = (" << series.numerator.to_string() << ") / (1-t^2)^"
          << series.denominator_exponent << '\n';
  ctx.out << "dim k[K]_{2d}, d = 0.." << kTerms - 1 << ": " << tuple_text(counted) << '\n';
  ctx.out << "(1-t^2)^m F(t) = " << identity.series_side.to_string() << '\n';
  ctx.out << "sum (-1)^i b^{-i,2j} t^{2j} = " << identity.betti_side.to_string() << '\n';
  ctx.out << "resolution identity " << (identity.holds() ? "holds" : "FAILS") << '\n';
  return identity.holds() ? kOk : kCrossCheck;
}

int cmd_chi(const Context& ctx) {
  const auto chi = chi_polynomial(ctx.complex);
  const auto pair = chi_pair_polynomials(ctx.complex);
  std::optional<bool> pd;
  std::string refusal;
  try {
    pd = relative_pd_check(ctx.complex, ctx.field);
  } catch (const PreconditionError& e) {
    refusal = e.what();
  }
  if (ctx.json()) {
    Json doc{{"chi", sequence(chi.coefficients())},
             {"chi_at_1", number(chi.evaluate(1))},
             {"relative", sequence(pair.relative.coefficients())},
             {"complement", sequence(pair.complement.coefficients())}};
    doc["relative_duality"] = pd ? Json(*pd) : Json(nullptr);
    if (!pd) doc["relative_duality_refused"] = refusal;
    emit(ctx, doc);
    return kOk;
  }
  ctx.out << "chi(Z_K; t)       = " << chi.to_string() << "  (cells = closed form)\n";
  ctx.out << "chi(Z_K; 1)       = " << chi.evaluate(1) << '\n';
  ctx.out << "chi(Z_K, T; t)    = " << pair.relative.to_string() << '\n';
  ctx.out << "chi(Z_K \\ T; t)   = " << pair.complement.to_string() << '\n';
  if (pd) {
    ctx.out << "relative duality  " << (*pd ? "holds" : "fails") << '\n';
  } else {
    ctx.out << "relative duality  not applicable: " << refusal << '\n';
  }
  return kOk;
}

int cmd_ds(const Context& ctx) {
  const auto& k = ctx.complex;
  const int n = k.rank();
  const auto f = f_vector(k);
  const auto h = h_from_f(f, n);
  const auto chi = euler_characteristic(k);
  const Integer sphere_chi = n % 2 == 1 ? 2 : 0;  // 1 + (-1)^{n-1}
  const bool holds = generalized_ds_check(f, n, chi);
  const bool manifold = k.is_pure() && is_homology_manifold(k, ctx.field);
  Json relations = Json::array();
  std::ostringstream text;
  for (int i = 0; 2 * i < n; ++i) {
    const Integer lhs = h[n - i] - h[i];
    const Integer rhs = (i % 2 == 0 ? 1 : -1) * (chi - sphere_chi) * binomial(n, i);
    relations.push_back(Json{{"i", i}, {"difference", number(lhs)}, {"expected", number(rhs)},
                             {"holds", lhs == rhs}});
    text << "  h" << n - i << " - h" << i << " = " << lhs << "  expected " << rhs << "  "
         << (lhs == rhs ? "ok" : "FAIL") << '\n';
  }
  if (ctx.json()) {
    emit(ctx, Json{{"h", sequence(h)},
                   {"euler_characteristic", number(chi)},
                   {"homology_manifold", manifold},
                   {"relations", relations},
                   {"holds", holds}});
    return kOk;
  }
  ctx.out << "h " << tuple_text(h) << "  chi " << chi << "  homology manifold " << yes_no(manifold)
          << '\n';
  ctx.out << text.str();
  ctx.out << "generalized Dehn-Sommerville " << (holds ? "satisfied" : "not satisfied") << '\n';
  return kOk;
}

void emit_dims(const Context& ctx, const char* label, const std::vector<std::int64_t>& dims) {
  if (ctx.json()) {
    emit(ctx, Json{{"field", ctx.field.name()}, {"dims", dims}});
    return;
  }
  ctx.out << label << " over " << ctx.field.name() << ": " << tuple_text(dims) << '\n';
  for (std::size_t p = 0; p < dims.size(); ++p) {
    if (dims[p] != 0) ctx.out << "  H^" << p << "  " << dims[p] << '\n';
  }
}

int cmd_complement(const Context& ctx) {
  emit_dims(ctx, "H^*(U(K)) via Tor", complement_cohomology(ctx.complex, ctx.field));
  return kOk;
}

int cmd_gm(const Context& ctx) {
  emit_dims(ctx, "H^*(U(K)) via dual-complex links", goresky_macpherson(ctx.complex, ctx.field));
  return kOk;
}

int cmd_alexander(const Context& ctx) {
  const bool holds = alexander_duality_check(ctx.complex, ctx.field);
  if (ctx.json()) {
    emit(ctx, Json{{"field", ctx.field.name()}, {"holds", holds}});
  } else {
    ctx.out << "Alexander duality over " << ctx.field.name() << "  "
            << (holds ? "holds" : "FAILS") << '\n';
  }
  return holds ? kOk : kCrossCheck;
}

CharMatrix load_matrix(const std::string& source) {
  if (source.empty()) throw ParseError("quotient needs --matrix");
  if (source.front() == '{') return CharMatrix::parse_json(source);
  if (std::filesystem::exists(source)) {
    std::ifstream in(source);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return CharMatrix::parse_json(text);
    return CharMatrix::parse_inline(text);
  }
  return CharMatrix::parse_inline(source);
}

int cmd_quotient(const Context& ctx) {
  const auto lambda = load_matrix(ctx.options.matrix);
  std::optional<CharMatrixVerdict> integral;
  if (ctx.complex.is_pure()) integral = char_matrix_check(ctx.complex, lambda);
  const auto report = odd_vanishing_report(ctx.complex, lambda, ctx.field);
  const auto h = h_vector(ctx.complex);
  bool equals_h = h.size() == report.even_dims.size();
  for (std::size_t i = 0; equals_h && i < h.size(); ++i) equals_h = h[i] == report.even_dims[i];
  if (ctx.json()) {
    Json doc{{"field", ctx.field.name()}};
    if (integral) {
      doc["unimodular"] = integral->unimodular;
      doc["minors"] = sequence(integral->minors);
      doc["failing_facets"] = faces_json(integral->failing_facets);
    }
    doc["even_dims"] = report.even_dims;
    doc["odd_vanishes"] = report.odd_vanishes;
    doc["h"] = sequence(h);
    doc["equals_h"] = equals_h;
    emit(ctx, doc);
    return kOk;
  }
  if (integral) {
    ctx.out << "facet minors " << tuple_text(integral->minors) << "  unimodular "
            << yes_no(integral->unimodular) << '\n';
    if (!integral->failing_facets.empty()) {
      ctx.out << "failing facets " << faces_text(integral->failing_facets) << '\n';
    }
  }
  ctx.out << "dim (k[K]/Theta)_{2i} over " << ctx.field.name() << ": "
          << tuple_text(report.even_dims) << "  odd degrees vanish\n";
  ctx.out << "h " << tuple_text(h) << "  equal " << yes_no(equals_h) << '\n';
  return kOk;
}

int cmd_generate(const Context& ctx) {
  // a complex file is JSON unless text was asked for
  const bool text_wanted = ctx.options.format_given && !ctx.json();
  const auto text = text_wanted ? to_text(ctx.complex) : to_json(ctx.complex) + "\n";
  if (ctx.options.output.empty() || ctx.options.output == "-") {
    ctx.out << text;
    return kOk;
  }
  std::ofstream file(ctx.options.output);
  if (!file) throw ParseError("cannot write " + ctx.options.output);
  file << text;
  return kOk;
}

using Handler = std::function<int(const Context&)>;

struct Command {
  const char* name;
  const char* help;
  Handler handler;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"info", "summary: f/h-vectors, missing faces, neighbourliness", cmd_info},
      {"fvector", "f-, h- and g-vectors", cmd_fvector},
      {"gcheck", "g-theorem conditions and upper/lower bound checks", cmd_gcheck},
      {"homology", "reduced simplicial homology", cmd_homology},
      {"cm", "Cohen-Macaulay test (Reisner)", cmd_cm},
      {"gorenstein", "Gorenstein, Gorenstein* and Poincare algebra tests", cmd_gorenstein},
      {"betti", "bigraded Betti numbers of the face ring", cmd_betti},
      {"hilbert", "Hilbert series and the resolution identity", cmd_hilbert},
      {"chi", "bigraded Euler characteristics of the moment-angle complex", cmd_chi},
      {"ds", "generalized Dehn-Sommerville relations", cmd_ds},
      {"complement", "cohomology of the arrangement complement via Tor", cmd_complement},
      {"gm", "cohomology of the arrangement complement via dual-complex links", cmd_gm},
      {"alexander", "Alexander duality check against the dual complex", cmd_alexander},
      {"quotient", "characteristic matrix check and quotient ring dimensions", cmd_quotient},
      {"generate", "write the complex as JSON or text", cmd_generate},
  };
  return table;
}

}  // namespace

SimplicialComplex resolve_source(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) return read_complex_file(source);
  const auto parts = split(source, ':');
  const auto& name = parts[0];
  auto expect = [&](std::size_t args) {
    if (parts.size() != args + 1) {
      throw ParseError("complex source '" + source + "' expects " + std::to_string(args) +
                       " argument(s)");
    }
  };
  auto arg = [&](std::size_t k) { return parse_count(parts[k], source); };

  static const std::map<std::string, std::function<SimplicialComplex()>> fixed = {
      {"torus7", torus7},
      {"torus9", torus9},
      {"rp2", rp2_6},
      {"figure1", two_triangles_two_edges},
      {"square", [] { return polygon(4); }},
      {"pentagon", [] { return polygon(5); }},
      {"hexagon", [] { return polygon(6); }},
  };
  if (const auto it = fixed.find(name); it != fixed.end()) {
    expect(0);
    return it->second();
  }
  if (name == "simplex") {
    expect(1);
    return full_simplex(arg(1) + 1);
  }
  if (name == "boundary") {
    expect(1);
    return simplex_boundary(arg(1) + 1);
  }
  if (name == "polygon") {
    expect(1);
    return polygon(arg(1));
  }
  if (name == "points") {
    expect(1);
    return disjoint_points(arg(1));
  }
  if (name == "cyclic") {
    expect(2);
    return cyclic_boundary(arg(1), arg(2));
  }
  if (name == "stacked") {
    expect(3);
    return stacked_sphere(arg(1), arg(2), static_cast<std::uint64_t>(arg(3)));
  }
  throw ParseError("'" + source + "' is neither a readable file nor a builtin complex");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Face rings, moment-angle complexes and coordinate subspace arrangements"};
  app.name(args.empty() ? "frl" : args.front());
  app.require_subcommand(1);
  app.fallthrough();

  Options options;
  app.add_option("--coeff", options.coeff, "coefficient field: q, f2, f3, ...")
      ->capture_default_str();
  auto* format = app.add_option("--format", options.format, "output format (generate defaults to json)")
                     ->check(CLI::IsMember({"text", "json"}))
                     ->capture_default_str();

  std::map<const CLI::App*, const Command*> handlers;
  for (const auto& command : commands()) {
    auto* sub = app.add_subcommand(command.name, command.help);
    sub->add_option("complex", options.source,
                    "file (JSON or text) or builtin: simplex:n boundary:n polygon:m points:m "
                    "cyclic:n:m stacked:n:k:seed torus7 torus9 rp2 figure1 square pentagon "
                    "hexagon")
        ->required();
    if (std::string(command.name) == "betti") {
      sub->add_option("--route", options.route, "hochster, koszul, cells or all")
          ->check(CLI::IsMember({"hochster", "koszul", "cells", "all"}))
          ->capture_default_str();
    }
    if (std::string(command.name) == "quotient") {
      sub->add_option("--matrix", options.matrix,
                      "characteristic matrix: \"1,0,-1;0,1,-1\", JSON {\"rows\":...} or a file")
          ->required();
    }
    if (std::string(command.name) == "generate") {
      sub->add_option("-o,--output", options.output, "output path (default stdout)");
    }
    handlers.emplace(sub, &command);
  }

  std::vector<std::string> storage(args.begin(), args.end());
  if (storage.empty()) storage.emplace_back("frl");
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  const auto* sub = app.get_subcommands().front();
  options.format_given = format->count() > 0;
  try {
    const auto field = Coefficients::parse(options.coeff);
    const auto complex = resolve_source(options.source);
    const Context ctx{complex, field, options, out};
    return handlers.at(sub)->handler(ctx);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kParseError;
  } catch (const std::out_of_range& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const CrossCheckError& e) {
    err << "cross-check failed: " << e.what() << '\n';
    return kCrossCheck;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace frl::cli
