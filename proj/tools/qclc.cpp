// qclc: command-line front end over the C API.
// Exit codes: 0 success, 1 domain error (or a failed check), 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qclc.h"

namespace {

struct Failure {
  int code;
  std::string message;
};

void check(qclc_status s) {
  if (s != QCLC_OK) throw Failure{s == QCLC_ERR_ARGUMENT ? 2 : 1, qclc_last_error()};
}

struct Deleter {
  void operator()(qclc_matrix* m) const { qclc_matrix_free(m); }
  void operator()(qclc_circuit* c) const { qclc_circuit_free(c); }
  void operator()(qclc_graph* g) const { qclc_graph_free(g); }
};
using Matrix = std::unique_ptr<qclc_matrix, Deleter>;
using CircuitH = std::unique_ptr<qclc_circuit, Deleter>;
using Graph = std::unique_ptr<qclc_graph, Deleter>;

// Takes ownership of a library string.
std::string take(char* s) {
  if (!s) return {};
  std::string out(s);
  qclc_string_free(s);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{1, "cannot open " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Failure{1, "cannot write " + path};
  out << text;
}

Matrix load_matrix(const std::string& path) {
  qclc_matrix* m = nullptr;
  check(qclc_matrix_load(path.c_str(), &m));
  return Matrix(m);
}

CircuitH load_circuit(const std::string& path) {
  qclc_circuit* c = nullptr;
  check(qclc_circuit_load(path.c_str(), &c));
  return CircuitH(c);
}

Graph load_graph(const std::string& prefix) {
  qclc_graph* g = nullptr;
  check(qclc_graph_load(prefix.c_str(), &g));
  return Graph(g);
}

// --graph <prefix> or --circuit <file> (plain graph, or symmetric on request)
Graph graph_from(const std::string& graph, const std::string& circuit, bool symmetric) {
  if (!graph.empty()) return load_graph(graph);
  const auto c = load_circuit(circuit);
  qclc_graph* g = nullptr;
  check(symmetric ? qclc_graph_symmetrize(c.get(), &g, nullptr) : qclc_graph_build_plain(c.get(), &g));
  return Graph(g);
}

void print_graph_summary(const qclc_graph* g) {
  std::cout << "bits " << qclc_graph_bits(g) << ", checks " << qclc_graph_checks(g) << ", max degree "
            << qclc_graph_max_degree(g) << '\n';
}

std::string distance_text(const qclc_distance_info& d) {
  char* s = nullptr;
  check(qclc_distance_text(&d, &s));
  return take(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qclc: stabiliser circuits as classical LDPC codes"};
  app.require_subcommand(1);

  std::string circuit, graph, out_prefix, out, plan, partition, b_path, l_path, gx_path, gz_path, layer = "rep:1";
  std::string s_in, s_out, plan_out, partition_out;
  std::uint64_t seed = 0;
  std::size_t max_weight = 6, check_weight = 0;
  unsigned jobs = 1;
  int states = 8, errors = 0, max_error_weight = 4;
  bool reduced = false, show_witness = false, symmetric = false, trivial = false, show_schedule = false;

  auto* build = app.add_subcommand("build-tanner", "plain Tanner graph of a circuit");
  build->add_option("--circuit", circuit, "circuit file")->required();
  build->add_option("--out-prefix", out_prefix, "writes <prefix>.A and <prefix>.labels")->required();

  auto* sym = app.add_subcommand("symmetrize", "symmetric Tanner graph of a circuit");
  sym->add_option("--circuit", circuit, "circuit file")->required();
  sym->add_option("--out-prefix", out_prefix, "writes <prefix>.A, .labels and .D")->required();

  auto* cls = app.add_subcommand("classify", "classify a basis of the codewords");
  auto* cls_src = cls->add_option_group("source");
  cls_src->add_option("--circuit", circuit, "circuit file");
  cls_src->add_option("--graph", graph, "graph prefix");
  cls_src->require_option(1);

  auto* ec = app.add_subcommand("ec-matrices", "error-correction matrices B and L from S_in / S_out");
  auto* ec_src = ec->add_option_group("source");
  ec_src->add_option("--circuit", circuit, "circuit file");
  ec_src->add_option("--graph", graph, "graph prefix");
  ec_src->require_option(1);
  ec->add_option("--s-in", s_in, "comma-separated generators of S_in, e.g. ZZI,XXI");
  ec->add_option("--s-out", s_out, "comma-separated generators of S_out");
  ec->add_option("--out-prefix", out_prefix, "writes <prefix>.B and <prefix>.L")->required();

  auto* dist = app.add_subcommand("distance", "circuit code distance d(A, B, L), or the CSS distance");
  auto* d_bl = dist->add_option_group("circuit");
  d_bl->add_option("--B", b_path, "B matrix file");
  d_bl->add_option("--L", l_path, "L matrix file");
  auto* d_css = dist->add_option_group("css");
  d_css->add_option("--gx", gx_path, "G_X matrix file");
  d_css->add_option("--gz", gz_path, "G_Z matrix file");
  dist->add_option("--max-weight", max_weight, "enumeration cap")->capture_default_str();
  dist->add_option("--jobs", jobs, "threads for the enumeration")->check(CLI::PositiveNumber);
  dist->add_flag("--reduced", reduced, "merge identical columns of (B; L) first");
  dist->add_flag("--witness", show_witness, "print a minimum-weight logical error");

  auto* ver = app.add_subcommand("verify", "check every codeword equation against the tableau simulator");
  ver->add_option("--circuit", circuit, "circuit file")->required();
  ver->add_option("--seed", seed, "random seed")->required();
  ver->add_option("--states", states, "random initial stabiliser states per codeword")->capture_default_str();
  ver->add_option("--errors", errors, "random spacetime errors per codeword")->capture_default_str();
  ver->add_option("--max-error-weight", max_error_weight, "weight cap of the random errors")->capture_default_str();

  auto* split = app.add_subcommand("split", "symmetric splitting of a symmetric graph");
  split->add_option("--graph", graph, "graph prefix (with .D)")->required();
  split->add_option("--plan", plan, "plan file; default: the degree-reducing plan");
  split->add_option("--out-prefix", out_prefix, "output graph prefix")->required();
  split->add_option("--plan-out", plan_out, "write the plan that was applied");
  split->add_option("--check-distance", check_weight, "check the distance bound with this enumeration cap");
  split->add_option("--jobs", jobs, "threads for the distance check")->check(CLI::PositiveNumber);

  auto* syn = app.add_subcommand("synthesize", "stabiliser circuit from a symmetric graph");
  syn->add_option("--graph", graph, "graph prefix (with .D)")->required();
  auto* syn_p = syn->add_option_group("partition");
  syn_p->add_option("--partition", partition, "partition file; default: greedy partition");
  syn_p->add_flag("--trivial", trivial, "one path per vertex");
  syn_p->require_option(0, 1);
  syn->add_option("--out", out, "circuit file (default stdout)");
  syn->add_option("--partition-out", partition_out, "write the partition that was used");
  syn->add_flag("--schedule", show_schedule, "print the gate schedule to stderr");
  syn->add_option("--check", check_weight, "round-trip check with this distance cap");
  syn->add_option("--jobs", jobs, "threads for the distance check")->check(CLI::PositiveNumber);

  auto* css = app.add_subcommand("css-gen", "closed-form physical matrices of a CSS transversal circuit");
  css->add_option("--gx", gx_path, "G_X matrix file")->required();
  css->add_option("--gz", gz_path, "G_Z matrix file")->required();
  css->add_option("--layer", layer, "rep:<m> or cnot")->capture_default_str();
  css->add_option("--out-prefix", out_prefix, "writes <prefix>.A, .labels, .D, .B, .L")->required();

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a Tanner graph");
  auto* dot_src = dot->add_option_group("source");
  dot_src->add_option("--circuit", circuit, "circuit file");
  dot_src->add_option("--graph", graph, "graph prefix");
  dot_src->require_option(1);
  dot->add_flag("--symmetric", symmetric, "symmetric rather than plain graph of the circuit");
  dot->add_option("--out", out, "DOT file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*build || *sym) {
      const auto c = load_circuit(circuit);
      qclc_graph* g = nullptr;
      int splits = 0;
      check(*build ? qclc_graph_build_plain(c.get(), &g) : qclc_graph_symmetrize(c.get(), &g, &splits));
      const Graph h(g);
      check(qclc_graph_save(h.get(), out_prefix.c_str()));
      print_graph_summary(h.get());
      if (*sym) std::cout << "splits " << splits << '\n';
    } else if (*cls) {
      const auto g = graph_from(graph, circuit, false);
      char* report = nullptr;
      check(qclc_classify(g.get(), &report));
      std::cout << take(report);
    } else if (*ec) {
      const auto g = graph_from(graph, circuit, false);
      qclc_matrix *b = nullptr, *l = nullptr;
      check(qclc_ec_matrices(g.get(), s_in.c_str(), s_out.c_str(), &b, &l));
      const Matrix B(b), L(l);
      check(qclc_matrix_save(B.get(), (out_prefix + ".B").c_str()));
      check(qclc_matrix_save(L.get(), (out_prefix + ".L").c_str()));
      std::cout << "B: " << qclc_matrix_rows(B.get()) << " rows, L: " << qclc_matrix_rows(L.get()) << " rows\n";
    } else if (*dist) {
      const bool use_css = !gx_path.empty() || !gz_path.empty();
      const bool use_bl = !b_path.empty() || !l_path.empty();
      if (use_css == use_bl || (use_css && (gx_path.empty() || gz_path.empty())) ||
          (use_bl && (b_path.empty() || l_path.empty()))) {
        std::cerr << "error: give either --B and --L or --gx and --gz\n\n" << dist->help();
        return 2;
      }
      if (use_bl) {
        const auto B = load_matrix(b_path), L = load_matrix(l_path);
        qclc_distance_info d{};
        char* w = nullptr;
        check(qclc_circuit_distance(B.get(), L.get(), max_weight, jobs, reduced, &d, show_witness ? &w : nullptr));
        std::cout << distance_text(d) << '\n';
        if (show_witness && d.found) std::cout << "witness " << take(w) << '\n';
      } else {
        const auto gx = load_matrix(gx_path), gz = load_matrix(gz_path);
        qclc_distance_info dx{}, dz{};
        check(qclc_css_distance(gx.get(), gz.get(), max_weight, jobs, &dx, &dz));
        auto rank = [](const qclc_distance_info& d) { return d.found ? d.value : d.lower_bound ? d.value : SIZE_MAX; };
        std::cout << distance_text(rank(dx) <= rank(dz) ? dx : dz) << '\n';
        std::cout << "d_X " << distance_text(dx) << ", d_Z " << distance_text(dz) << '\n';
      }
    } else if (*ver) {
      const auto c = load_circuit(circuit);
      qclc_verify_summary s{};
      char* report = nullptr;
      check(qclc_verify(c.get(), seed, states, errors, max_error_weight, &s, &report));
      const std::string r = take(report);
      std::cout << "codewords " << s.codewords << ", runs " << s.runs << ", failures " << s.failures << '\n';
      if (s.failures) {
        std::cerr << r;
        return 1;
      }
    } else if (*split) {
      const auto g = load_graph(graph);
      const std::string text = plan.empty() ? std::string() : slurp(plan);
      qclc_graph* h = nullptr;
      char *used = nullptr, *report = nullptr;
      int ok = 1;
      check(qclc_split(g.get(), plan.empty() ? nullptr : text.c_str(), check_weight, jobs, &h, &used, &report, &ok));
      const Graph res(h);
      const std::string used_text = take(used), report_text = take(report);
      check(qclc_graph_save(res.get(), out_prefix.c_str()));
      if (!plan_out.empty()) write_file(plan_out, used_text);
      print_graph_summary(res.get());
      if (check_weight) std::cout << report_text << '\n';
      if (!ok) return 1;
    } else if (*syn) {
      const auto g = load_graph(graph);
      const std::string text = partition.empty() ? std::string() : slurp(partition);
      const char* ptext = partition.empty() ? nullptr : text.c_str();
      qclc_circuit* c = nullptr;
      char *used = nullptr, *schedule = nullptr;
      check(qclc_synthesize(g.get(), ptext, trivial, &c, &used, &schedule));
      const CircuitH res(c);
      const std::string used_text = take(used), schedule_text = take(schedule);
      char* ctext = nullptr;
      check(qclc_circuit_text(res.get(), &ctext));
      write_file(out, take(ctext));
      if (!partition_out.empty()) write_file(partition_out, used_text);
      if (show_schedule) std::cerr << schedule_text;
      if (check_weight) {
        int ok = 0;
        char* report = nullptr;
        check(qclc_roundtrip(g.get(), ptext, trivial, check_weight, jobs, &ok, &report));
        (out.empty() ? std::cerr : std::cout) << take(report) << '\n';
        if (!ok) return 1;
      }
    } else if (*css) {
      const auto gx = load_matrix(gx_path), gz = load_matrix(gz_path);
      qclc_graph* g = nullptr;
      qclc_matrix *b = nullptr, *l = nullptr;
      check(qclc_css_gen(gx.get(), gz.get(), layer.c_str(), &g, &b, &l));
      const Graph G(g);
      const Matrix B(b), L(l);
      check(qclc_graph_save(G.get(), out_prefix.c_str()));
      check(qclc_matrix_save(B.get(), (out_prefix + ".B").c_str()));
      check(qclc_matrix_save(L.get(), (out_prefix + ".L").c_str()));
      print_graph_summary(G.get());
      std::cout << "B: " << qclc_matrix_rows(B.get()) << " rows, L: " << qclc_matrix_rows(L.get()) << " rows\n";
    } else if (*dot) {
      const auto g = graph_from(graph, circuit, symmetric);
      char* text = nullptr;
      check(qclc_graph_dot(g.get(), &text));
      write_file(out, take(text));
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  return 0;
}
