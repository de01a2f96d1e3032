#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quiverforge/cluster_rank2.hpp"
#include "quiverforge/cy_lattice.hpp"
#include "quiverforge/documents.hpp"
#include "quiverforge/error.hpp"
#include "quiverforge/ginzburg.hpp"
#include "quiverforge/hochschild.hpp"
#include "quiverforge/hyperpotential.hpp"
#include "quiverforge/jacobian.hpp"
#include "quiverforge/mesh_category.hpp"

namespace qf = quiverforge;
using nlohmann::json;

namespace {

using Output = std::variant<json, std::string>;

struct Options {
  std::string file, file2, field = "Q", as = "hyperpotential", emit = "json";
  std::string diagram, g, object, ratio, member;
  std::vector<std::string> marks;
  std::size_t trunc = 0, m = 0, e = 0, max_degree = 0;
  long d1 = 0, e1 = 0, d2 = 0, e2 = 0;
};

struct Session {
  std::vector<std::string> argv;
  Options o;
  std::string inputs;  // concatenated input file contents, for the digest
  int jobs = 1;
  bool report = false;
  std::function<Output()> run;
};

std::string read_file(Session& s, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qf::Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  s.inputs += buf.str();
  s.inputs.push_back('\0');
  return buf.str();
}

json read_json(Session& s, const std::string& path) { return qf::parse_document(read_file(s, path), path); }

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::string hex;
  char b[3];
  for (unsigned int k = 0; k < len; ++k) {
    std::snprintf(b, sizeof b, "%02x", md[k]);
    hex += b;
  }
  return hex;
}

qf::Vertex parse_vertex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw qf::Error("vertex '" + text + "' must be written p,i");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw qf::Error("vertex '" + text + "' must be written p,i");
  }
}

std::vector<qf::Vertex> parse_object(const std::string& text) {
  std::vector<qf::Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';'))
    if (!item.empty()) out.push_back(parse_vertex(item));
  return out;
}

json vertices_json(const std::vector<qf::Vertex>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(qf::vertex_to_json(v));
  return a;
}

json graph_json(const qf::Graph& g) {
  json edges = json::array();
  for (const auto& [i, j] : g.edges) edges.push_back({i, j});
  return {{"vertices", g.vertices}, {"edges", edges}, {"is_cycle", qf::is_cycle_graph(g)}};
}

// Dimension of the Jacobian algebra, or a domain error when it has not
// stabilized below the truncation.
json family_result(const qf::QuotientBasis& b, const std::string& via) {
  if (!b.stabilized)
    throw qf::Error("Jacobian algebra not finite-dimensional below degree " + std::to_string(b.trunc));
  return {{"jacobian_dim", *b.dimension}, {"via", via}};
}

bool all_zero(const qf::Hyperpotential& h) {
  for (const auto& r : h.rhos())
    if (!r.is_zero()) return false;
  return true;
}

void add_hyperpot(CLI::App& app, Session& s) {
  auto* hp = app.add_subcommand("hyperpot", "hyperpotential documents")->require_subcommand(1);

  auto* check = hp->add_subcommand("check", "verify sum [alpha, rho_alpha] = 0");
  check->add_option("file", s.o.file, "hyperpotential JSON")->required();
  check->callback([&s] {
    s.run = [&s]() -> Output {
      return qf::report_to_json(qf::check_hyperpotential(qf::hyperpotential_from_json(read_json(s, s.o.file))));
    };
  });

  auto* fp = hp->add_subcommand("from-potential", "cyclic derivatives of a potential");
  fp->add_option("file", s.o.file, "potential JSON")->required();
  fp->callback([&s] {
    s.run = [&s]() -> Output {
      return qf::hyperpotential_to_json(qf::from_potential(qf::potential_from_json(read_json(s, s.o.file))));
    };
  });

  auto* tr = hp->add_subcommand("transport", "push a hyperpotential along a substitution");
  tr->add_option("substitution", s.o.file, "substitution JSON")->required();
  tr->add_option("hyperpotential", s.o.file2, "hyperpotential JSON")->required();
  tr->callback([&s] {
    s.run = [&s]() -> Output {
      const json phi_doc = read_json(s, s.o.file);
      const qf::Hyperpotential h = qf::hyperpotential_from_json(read_json(s, s.o.file2));
      const qf::Substitution phi = qf::substitution_from_json(phi_doc, h.quiver_ptr());
      return qf::hyperpotential_to_json(qf::transport(phi, h));
    };
  });
}

void add_ginzburg(CLI::App& app, Session& s) {
  auto* g = app.add_subcommand("ginzburg", "Ginzburg dg presentation")->require_subcommand(1);
  auto* d2 = g->add_subcommand("d2", "check d^2 = 0 on every generator");
  d2->add_option("file", s.o.file, "hyperpotential JSON")->required();
  d2->add_option("--emit", s.o.emit, "json or dot (graded quiver)")->check(CLI::IsMember({"json", "dot"}));
  d2->callback([&s] {
    s.run = [&s]() -> Output {
      const qf::DgPresentation p = qf::build_ginzburg(qf::hyperpotential_from_json(read_json(s, s.o.file)));
      if (s.o.emit == "dot") return qf::emit_graded_dot(p.quiver);
      const qf::DSquaredReport r = qf::check_d_squared(p);
      json failures = json::array();
      for (const auto& [a, x] : r.failures)
        failures.push_back({{"generator", p.quiver.graded->arrow(a).id}, {"d2", qf::terms_to_json(x)}});
      return json{{"ok", r.ok}, {"failures", failures}, {"presentation", qf::presentation_to_json(p)}};
    };
  });
}

void add_jacobian(CLI::App& app, Session& s) {
  auto* j = app.add_subcommand("jacobian", "Jacobian algebra")->require_subcommand(1);
  auto* dims = j->add_subcommand("dims", "dimensions of A / (I + m^d)");
  dims->add_option("file", s.o.file, "hyperpotential JSON")->required();
  dims->add_option("--trunc", s.o.trunc, "largest degree N")->required();
  dims->add_option("--field", s.o.field, "Q, GF:p or GF(p); overrides the document");
  dims->callback([&s, dims] {
    const bool override_field = dims->count("--field") > 0;
    s.run = [&s, override_field]() -> Output {
      json doc = read_json(s, s.o.file);
      if (override_field) doc["field"] = s.o.field;
      return qf::quotient_to_json(qf::jacobian_dimensions(qf::hyperpotential_from_json(doc), s.o.trunc));
    };
  });
}

void add_family(CLI::App& app, Session& s) {
  auto* fam = app.add_subcommand("family", "named families")->require_subcommand(1);

  auto* lambda = fam->add_subcommand("lambda", "Lambda_{m,e}");
  lambda->add_option("--m", s.o.m)->required();
  lambda->add_option("--e", s.o.e)->required();
  lambda->add_option("--field", s.o.field, "Q, GF:p or GF(p)");
  lambda->add_option("--as", s.o.as)->check(CLI::IsMember({"potential", "hyperpotential"}));
  lambda->callback([&s] {
    s.run = [&s]() -> Output {
      const qf::Field f = qf::Field::parse(s.o.field);
      const std::size_t n = s.o.m * s.o.e + 3;
      if (s.o.as == "potential") {
        const qf::Hyperpotential h = qf::from_potential(qf::lambda_potential(s.o.m, s.o.e, f, n + 1));
        if (all_zero(h)) throw qf::Error("potential vanishes in char " + std::to_string(f.characteristic()));
        return family_result(qf::jacobian_dimensions(h, n), "potential");
      }
      return family_result(qf::jacobian_dimensions(qf::lambda_hyperpotential(s.o.m, s.o.e, f, n), n), "hyperpotential");
    };
  });

  auto* g2 = fam->add_subcommand("g2", "one arrow and a loop with rho = b^3");
  g2->add_option("--field", s.o.field, "Q, GF:p or GF(p)");
  g2->add_option("--as", s.o.as)->check(CLI::IsMember({"potential", "hyperpotential"}));
  g2->callback([&s] {
    s.run = [&s]() -> Output {
      const qf::Field f = qf::Field::parse(s.o.field);
      const std::size_t n = 8;
      if (s.o.as == "potential") {
        const qf::QuiverPtr q = qf::g2_quiver();
        const std::size_t b = q->arrow_index("b");
        qf::AlgebraElement w(q, f, n + 1);
        w.add_term(qf::make_path(*q, q->source(b), {b, b, b, b}), qf::Scalar::one(f));
        const qf::Hyperpotential h = qf::from_potential(qf::Potential(w));
        if (all_zero(h)) throw qf::Error("potential vanishes in char " + std::to_string(f.characteristic()));
        return family_result(qf::jacobian_dimensions(h, n), "potential");
      }
      return family_result(qf::jacobian_dimensions(qf::g2_hyperpotential(f, n), n), "hyperpotential");
    };
  });
}

void add_hochschild(CLI::App& app, Session& s) {
  auto* h = app.add_subcommand("hochschild", "degreewise HH_0, HH_1 and Connes' map")->require_subcommand(1);
  auto* table = h->add_subcommand("table", "one row per degree");
  table->add_option("file", s.o.file, "quiver JSON")->required();
  table->add_option("--max-degree", s.o.max_degree)->required();
  table->add_option("--field", s.o.field, "Q, GF:p or GF(p)");
  table->callback([&s] {
    s.run = [&s]() -> Output {
      const qf::Quiver q = qf::quiver_from_json(read_json(s, s.o.file));
      const qf::Field f = qf::Field::parse(s.o.field);
      json rows = json::array();
      for (std::size_t d = 0; d <= s.o.max_degree; ++d) {
        const qf::DegreeRow r = qf::hochschild_degree(q, f, d);
        rows.push_back({{"degree", r.degree}, {"hh0", r.hh0}, {"hh1", r.hh1}, {"B_rank", r.b_rank}});
      }
      return rows;
    };
  });
}

void add_cy_lattice(CLI::App& app, Session& s) {
  auto* cy = app.add_subcommand("cy-lattice", "lattice of fractional Calabi-Yau dimensions");
  cy->add_option("--d1", s.o.d1)->required();
  cy->add_option("--e1", s.o.e1)->required();
  cy->add_option("--d2", s.o.d2)->required();
  cy->add_option("--e2", s.o.e2)->required();
  auto* ratio = cy->add_option("--ratio", s.o.ratio, "target d/e, e.g. 2 or 3/2");
  cy->add_option("--member", s.o.member, "pair d,e to test")->excludes(ratio);
  cy->callback([&s] {
    s.run = [&s]() -> Output {
      const qf::CYPair g1{s.o.d1, s.o.e1}, g2{s.o.d2, s.o.e2};
      const qf::CYLattice lat = qf::cy_dimensions(g1, g2);
      if (!s.o.member.empty()) {
        const qf::Vertex v = parse_vertex(s.o.member);
        const qf::Membership m = qf::member_certified({v.p, v.i}, lat);
        return json{{"member", m.member}, {"coeffs", m.coeffs}};
      }
      json out{{"D", qf::hom_finite(g1, g2).determinant},
               {"hom_finite", true},
               {"certified", qf::certificate_name(lat.certificate())}};
      if (!s.o.ratio.empty()) {
        mpq_class r;
        if (r.set_str(s.o.ratio, 10) != 0 || r.get_den() == 0) throw qf::Error("invalid ratio '" + s.o.ratio + "'");
        r.canonicalize();
        const qf::CYPair ans = qf::solve_ratio(r, lat);
        out["answer"] = {ans.d, ans.e};
      } else {
        out["hnf"] = lat.hnf();
      }
      return out;
    };
  });
}

void add_orbit(CLI::App& app, Session& s) {
  auto* orbit = app.add_subcommand("orbit", "orbit categories of Z Delta")->require_subcommand(1);

  auto* build = orbit->add_subcommand("build", "rigid objects, cluster-tilting sets, exchange graph");
  build->add_option("--diagram", s.o.diagram, "A3, D8, E8, ...")->required();
  build->add_option("--g", s.o.g, "generator, e.g. \"tau^4\", \"phi*tau^4\", \"(phi*tau)^4\"")->required();
  build->add_option("--emit", s.o.emit, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  build->add_option("--mark", s.o.marks, "vertex p,i or p,i:tag to mark in DOT output");
  build->callback([&s] {
    s.run = [&s]() -> Output {
      const qf::OrbitSpec spec = qf::parse_orbit_spec(s.o.diagram, s.o.g);
      if (s.o.emit == "dot") {
        std::map<qf::Vertex, std::string> marks;
        for (const auto& m : s.o.marks) {
          const auto colon = m.find(':');
          marks[spec.canonical(parse_vertex(m.substr(0, colon)))] =
              colon == std::string::npos ? "*" : m.substr(colon + 1);
        }
        return qf::emit_ar_quiver_dot(spec, marks);
      }
      const qf::OrbitCategory c(spec, s.jobs);
      const auto rigid = qf::rigid_indecomposables(c);
      const auto ct = qf::cluster_tilting_objects(c);
      json sets = json::array();
      for (const auto& t : ct) sets.push_back(vertices_json(t));
      return json{{"diagram", spec.dyn.name()},
                  {"tau_power", spec.a},
                  {"phi_power", spec.b},
                  {"vertices", spec.vertex_count()},
                  {"window", c.window()},
                  {"rigid", vertices_json(rigid)},
                  {"cluster_tilting", sets},
                  {"exchange_graph", graph_json(qf::exchange_graph(ct))}};
    };
  });

  auto* end = orbit->add_subcommand("end", "endomorphism algebra of a basic object");
  end->add_option("--diagram", s.o.diagram)->required();
  end->add_option("--g", s.o.g)->required();
  end->add_option("--object", s.o.object, "summands \"p,i;p,i;...\"")->required();
  end->add_option("--field", s.o.field, "Q, GF:p or GF(p)");
  end->callback([&s] {
    s.run = [&s]() -> Output {
      const qf::OrbitSpec spec = qf::parse_orbit_spec(s.o.diagram, s.o.g);
      const qf::OrbitCategory c(spec, s.jobs);
      std::vector<qf::Vertex> t;
      for (const auto& v : parse_object(s.o.object)) t.push_back(spec.canonical(v));
      const qf::EndAlgebra e = qf::endomorphism_algebra(c, t, qf::Field::parse(s.o.field));
      json arrows = json::array();
      for (const auto& g : e.gabriel) arrows.push_back({{"from", g.from}, {"to", g.to}, {"count", g.count}});
      return json{{"summands", vertices_json(e.summands)},
                  {"cluster_tilting", qf::is_cluster_tilting(c, t)},
                  {"dimension", e.dimension()},
                  {"rad_dims", e.rad_dims},
                  {"gabriel", arrows}};
    };
  });
}

void add_g2(CLI::App& app, Session& s) {
  auto* g2 = app.add_subcommand("g2", "type G2 cluster algebra")->require_subcommand(1);
  auto* vars = g2->add_subcommand("cluster-vars", "cluster variables in mutation order");
  vars->callback([&s] {
    s.run = []() -> Output {
      const std::vector<std::string> names{"x", "y"};
      json out = json::array();
      for (const auto& v : qf::mutation_order_variables(qf::initial_seed(qf::g2_exchange_matrix(), names)))
        out.push_back(v.display(names));
      return out;
    };
  });
}

void emit(const Session& s, const Output& out, int status) {
  if (s.report) {
    json cmd = s.argv;
    json result = std::holds_alternative<json>(out) ? std::get<json>(out) : json(std::get<std::string>(out));
    std::string digest;
    for (const auto& a : s.argv) digest += a + '\0';
    digest += s.inputs;
    std::cout << json{{"command", cmd}, {"input_digest", "sha256:" + sha256_hex(digest)}, {"result", result},
                      {"exit_status", status}}
                     .dump()
              << "\n";
    return;
  }
  if (std::holds_alternative<json>(out))
    std::cout << std::get<json>(out).dump() << "\n";
  else
    std::cout << std::get<std::string>(out);
}

}  // namespace

int main(int argc, char** argv) {
  Session s;
  for (int k = 1; k < argc; ++k) s.argv.emplace_back(argv[k]);

  CLI::App app{"Exact computations with quivers, hyperpotentials and orbit categories"};
  app.require_subcommand(1);
  app.add_option("--jobs", s.jobs, "worker threads for orbit categories")->check(CLI::PositiveNumber);
  app.add_flag("--report", s.report, "wrap the result with command echo, input digest and exit status");
  add_hyperpot(app, s);
  add_ginzburg(app, s);
  add_jacobian(app, s);
  add_family(app, s);
  add_hochschild(app, s);
  add_cy_lattice(app, s);
  add_orbit(app, s);
  add_g2(app, s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (!s.run) {
    std::cerr << app.help();
    return 2;
  }
  try {
    emit(s, s.run(), 0);
    return 0;
  } catch (const qf::Error& e) {
    emit(s, json{{"error", e.what()}}, 1);
    return 1;
  } catch (const std::exception& e) {
    emit(s, json{{"error", std::string("internal: ") + e.what()}}, 1);
    return 1;
  }
}
