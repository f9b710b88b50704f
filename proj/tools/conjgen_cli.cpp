// conjgen: conjugate generating sets of symmetric groups and their Cayley graphs.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "conjgen/autmorph.hpp"
#include "conjgen/cayley.hpp"
#include "conjgen/ctree.hpp"
#include "conjgen/error.hpp"
#include "conjgen/group.hpp"
#include "conjgen/numth.hpp"
#include "conjgen/quasiham.hpp"
#include "conjgen/spectral.hpp"

using namespace conjgen;

namespace {

constexpr int kVerifyFailed = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write " + out_path);
  out << text;
}

std::string order_text(const BigInt& order, std::size_t n) {
  if (order == factorial(static_cast<unsigned>(n))) return std::to_string(n) + "! (" + order.str() + ")";
  if (n >= 2 && order * 2 == factorial(static_cast<unsigned>(n)))
    return std::to_string(n) + "!/2 (" + order.str() + ")";
  return order.str();
}

const char* yes(bool b) { return b ? "yes" : "no"; }

struct Common {
  std::uint64_t seed = 1;
  std::string header() const { return "# seed=" + std::to_string(seed) + "\n"; }
};

// Chooses the construction family for A and reports the smallest n it covers.
int cmd_construct(const Common& common, const std::string& type_text, std::size_t n, const std::string& out) {
  const CycleType type = CycleType::parse(type_text);
  const int c = type.c_value();
  if (c % 2 == 0)
    throw ParityError("c(" + type.to_string() + ") = " + std::to_string(c) +
                      " is even: elements are even permutations and cannot generate S_n");
  std::string report;
  std::optional<GeneratorSet> base;
  std::size_t threshold = 0;
  const auto& parts = type.parts();
  const bool basic = std::all_of(parts.begin(), parts.end(), [](int a) { return a == 2; });
  if (parts.size() == 1) {
    const int k = parts.front();
    threshold = static_cast<std::size_t>(2 * k - 1);
    if (n < threshold) throw RangeError("n must be at least " + std::to_string(threshold) + " for type " + type.to_string());
    base = construct_cycle_tree(k, n);
    report = "# construction: cycle tree, X0 <= " + std::to_string(threshold) + "\n";
  } else if (basic) {
    const int k = static_cast<int>(parts.size());
    threshold = static_cast<std::size_t>(k * (2 * k + 1) + 1);
    if (n < threshold) throw RangeError("n must be at least " + std::to_string(threshold) + " for type " + type.to_string());
    base = construct_basic_tree(k);
    report = "# construction: basic tree from K_" + std::to_string(2 * k + 1) + ", X0 <= " +
             std::to_string(threshold) + "\n";
  } else {
    const GeneralConstruction gc = construct_general(type);
    threshold = gc.degree;
    if (n < threshold) throw RangeError("n must be at least " + std::to_string(threshold) + " for type " + type.to_string());
    base = gc.set;
    report = "# construction: balanced Eulerian from K_" + std::to_string(gc.prime) + " with " +
             std::to_string(gc.copies) + " cop" + (gc.copies == 1 ? "y" : "ies") + ", n0 = " +
             std::to_string(gc.degree) + ", headline bound c(A)*Phi_" + std::to_string(2 * parts.size()) +
             "(" + std::to_string(2 * parts.size()) + ")+1 = " + gc.headline_bound.str() + "\n";
  }
  const GeneratorSet t = base->degree() == n ? *base : extend_tree(*base, type, n);
  const auto bound = f_lower_bound(type, n);
  report += "# |T| = " + std::to_string(t.size()) + ", lower bound = " + std::to_string(*bound) + "\n";
  emit(out, common.header() + report + t.to_text());
  return 0;
}

int cmd_verify(const Common& common, const std::string& file) {
  const GeneratorSet t = GeneratorSet::parse(slurp(file));
  const auto p = predicates(t);
  const BigInt order = group_order(build_chain(t.elements(), t.degree()));
  const GroupKind kind = generates(t.elements(), t.degree());
  std::cout << common.header() << "degree = " << t.degree() << "\n"
            << "type = " << t.type().to_string() << "\n"
            << "elements = " << t.size() << "\n"
            << "semi-connected = " << yes(p.semi_connected) << "\n"
            << "split = " << yes(p.split) << "\n"
            << "balanced = " << yes(p.balanced.has_value()) << "\n"
            << "order = " << order_text(order, t.degree()) << "\n"
            << "generates = " << to_string(kind) << "\n";
  return kind == GroupKind::symmetric ? 0 : kVerifyFailed;
}

int cmd_cayley(const Common& common, const std::string& file, const std::string& format, std::size_t cap,
               const std::string& out) {
  const GeneratorSet t = GeneratorSet::parse(slurp(file));
  const CayleyGraph g = build_cayley(t, cap);
  const LabeledGraph lg = g.labeled();
  if (format == "dot")
    emit(out, write_dot(lg, "Cayley"));
  else
    emit(out, common.header() + write_edge_list(lg));
  return 0;
}

int cmd_aut(const Common& common, const std::string& set_file, const std::string& graph_file, std::size_t budget) {
  if (!graph_file.empty()) {
    const LabeledGraph lg = read_edge_list(slurp(graph_file));
    const AutGroup a = graph_aut_order(lg.graph, budget);
    std::cout << common.header() << "vertices = " << lg.graph.vertex_count() << "\n|Aut| = " << a.order
              << "\ngenerators = " << a.generators.size() << "\n";
    return 0;
  }
  const GeneratorSet t = GeneratorSet::parse(slurp(set_file));
  const AutReport r = verify_theorem5(t, budget);
  std::cout << common.header() << "normal = " << yes(r.normal.normal);
  for (const auto& why : r.normal.reasons) std::cout << "; " << why;
  std::cout << "\n|Aut(Cay)| = " << r.graph_aut_order << "\n|Aut(S_n,T)| = " << r.aut_snt_order
            << "\n|Aut(Cyc(T))| = " << r.cyc_aut_order << "\n";
  if (r.outer_caveat) std::cout << "warning: n = 6, outer automorphisms of S_6 not searched\n";
  std::cout << r.graph_aut_order << (r.theorem_holds ? " = " : " != ") << r.n_factorial << " x "
            << r.aut_snt_order << ", theorem " << (r.theorem_holds ? "holds" : "fails") << "\n";
  return r.theorem_holds ? 0 : kVerifyFailed;
}

int cmd_qh(const Common& common, const std::string& graph_file, int k, bool check_ham) {
  const LabeledGraph lg = read_edge_list(slurp(graph_file));
  const SimpleGraph& g = lg.graph;
  std::cout << common.header();
  if (k > 0) {
    QuasiHamiltonian qh(g);
    std::cout << "k,size,connected\n";
    for (int j = 1; j <= k; ++j) {
      const auto set = qh.qh_set({}, j);
      std::cout << j << ',' << set.size() << ',' << yes(spans_connected(g.vertex_count(), set)) << "\n";
    }
  }
  if (check_ham) {
    const bool via = hamiltonian_via_qh(g);
    const bool oracle = brute_hamiltonian(g);
    std::cout << (via ? "hamiltonian" : "non-hamiltonian") << (via == oracle ? " (matches oracle)" : " (oracle disagrees)")
              << "\n";
    return via == oracle ? 0 : kVerifyFailed;
  }
  return 0;
}

int cmd_spectrum(const Common& common, const std::string& set_file, const std::string& graph_file,
                 const std::string& kind_text, std::size_t k, double tol, std::size_t cap) {
  SimpleGraph g;
  if (!graph_file.empty()) {
    g = read_edge_list(slurp(graph_file)).graph;
  } else {
    g = build_cayley(GeneratorSet::parse(slurp(set_file)), cap).graph();
  }
  const MatrixKind kind = kind_text == "laplacian" ? MatrixKind::laplacian : MatrixKind::adjacency;
  const SpectrumReport r = spectrum_topk(g, kind, k, tol);
  std::cout << common.header() << "# vertices=" << g.vertex_count() << " method=" << to_string(r.method) << "\n"
            << r.to_csv();
  return 0;
}

int cmd_prime(const Common& common, unsigned m) {
  if (m < 2) throw RangeError("m must be >= 2");
  const BigInt phi = cyclotomic_eval(m, BigInt(m));
  const BigInt p = prime_one_mod(m);
  std::cout << common.header() << "p=" << p << ", Phi=" << phi << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conjgen: conjugate generating sets of S_n, their Cayley graphs and invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--seed", common.seed, "Seed printed in report headers")->capture_default_str();

  std::string type_text, out, file, graph_file, format = "edgelist", kind = "adjacency";
  std::size_t n = 0, cap = 100000, budget = default_aut_budget, topk = 4;
  int qh_k = 0;
  bool check_ham = false;
  double tol = 1e-8;
  unsigned m = 0;

  auto* construct = app.add_subcommand(
      "construct", "Build a minimal generating set of S_n inside C(A).\n"
                   "Output: line 'n=<degree> type=<a1,...>' then one permutation per line, e.g. (1 2)(5 6).");
  construct->add_option("--type", type_text, "Cycle type a1,a2,... (each >= 2)")->required();
  construct->add_option("--n", n, "Degree")->required();
  construct->add_option("-o,--out", out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check predicates and group order of a generator-set file");
  verify->add_option("file", file, "Generator-set file")->required();

  auto* cayley = app.add_subcommand(
      "cayley", "Export Cay(<T>,T). Edge list: 'vertices=<count>', then 'u v g<i>[,g<j>^-1]' per edge (0-based).");
  cayley->add_option("file", file, "Generator-set file")->required();
  cayley->add_option("--format", format, "edgelist or dot")->check(CLI::IsMember({"edgelist", "dot"}));
  cayley->add_option("--cap", cap, "Vertex limit")->capture_default_str();
  cayley->add_option("-o,--out", out, "Output file (default stdout)");

  auto* aut = app.add_subcommand("aut", "Automorphism group of a Cayley graph against n! x |Aut(S_n,T)|");
  aut->add_option("file", file, "Generator-set file");
  aut->add_option("--graph", graph_file, "Edge-list file: report |Aut| of this graph only");
  aut->add_option("--budget", budget, "Vertex budget")->capture_default_str();

  auto* qh = app.add_subcommand("qh", "Quasi-hamiltonicity levels of an edge-list graph (CSV k,size,connected)");
  qh->add_option("--graph", graph_file, "Edge-list file")->required();
  qh->add_option("--k", qh_k, "Report QH_1..QH_k");
  qh->add_flag("--check-hamiltonian", check_ham, "Compare (n-2)-quasi-hamiltonicity with exhaustive search");

  auto* spectrum = app.add_subcommand(
      "spectrum", "Top eigenvalues (CSV kind,k,eigenvalue,multiplicity,residual) of a graph or Cayley graph");
  spectrum->add_option("file", file, "Generator-set file");
  spectrum->add_option("--graph", graph_file, "Edge-list file");
  spectrum->add_option("--kind", kind, "adjacency or laplacian")->check(CLI::IsMember({"adjacency", "laplacian"}));
  spectrum->add_option("--k", topk, "Number of eigenvalues")->capture_default_str();
  spectrum->add_option("--tol", tol, "Residual tolerance")->capture_default_str();
  spectrum->add_option("--cap", cap, "Vertex limit for Cayley graphs")->capture_default_str();

  auto* prime = app.add_subcommand("prime", "Smallest prime p = 1 (mod m) dividing Phi_m(m)");
  prime->add_option("--m", m, "Modulus m >= 2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version keep CLI11's status 0; every usage error maps to 1
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*construct) return cmd_construct(common, type_text, n, out);
    if (*verify) return cmd_verify(common, file);
    if (*cayley) return cmd_cayley(common, file, format, cap, out);
    if (*aut) {
      if (file.empty() == graph_file.empty()) throw RangeError("give exactly one of a generator-set file or --graph");
      return cmd_aut(common, file, graph_file, budget);
    }
    if (*qh) return cmd_qh(common, graph_file, qh_k, check_ham);
    if (*spectrum) {
      if (file.empty() == graph_file.empty()) throw RangeError("give exactly one of a generator-set file or --graph");
      return cmd_spectrum(common, file, graph_file, kind, topk, tol, cap);
    }
    if (*prime) return cmd_prime(common, m);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
