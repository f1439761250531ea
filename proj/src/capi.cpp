#include "qclc.h"

#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "qclc/codewords.hpp"
#include "qclc/css.hpp"
#include "qclc/distance.hpp"
#include "qclc/sim.hpp"
#include "qclc/splitting.hpp"
#include "qclc/synthesis.hpp"
#include "qclc/tanner.hpp"

struct qclc_matrix {
  qclc::BitMatrix m;
};
struct qclc_circuit {
  qclc::Circuit c;
};
struct qclc_graph {
  qclc::TannerGraph g;
  std::optional<qclc::SymmetryWitness> w;
};

namespace {

thread_local std::string last_error;

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
qclc_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return QCLC_OK;
  } catch (const ArgumentError& e) {
    last_error = e.what();
    return QCLC_ERR_ARGUMENT;
  } catch (const qclc::DomainError& e) {
    last_error = e.what();
    return QCLC_ERR_DOMAIN;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QCLC_ERR_INTERNAL;
  }
}

template <class T>
const T& need(const T* p, const char* what) {
  if (!p) throw ArgumentError(std::string("null ") + what);
  return *p;
}

std::string cstr(const char* p, const char* what) {
  if (!p) throw ArgumentError(std::string("null ") + what);
  return p;
}

template <class T>
void need_out(T** p) {
  if (!p) throw ArgumentError("null output pointer");
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void give(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

const qclc::SymmetryWitness& witness(const qclc_graph& g) {
  if (!g.w) throw qclc::DomainError("the graph has no symmetry witness (missing .D file?)");
  return *g.w;
}

std::vector<qclc::PauliOperator> parse_group(const char* text, int n) {
  std::vector<qclc::PauliOperator> out;
  std::stringstream in(text ? text : "");
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    auto p = qclc::PauliOperator::from_string(item.substr(a, b - a + 1));
    if (static_cast<int>(p.size()) != n)
      throw qclc::DomainError("Pauli '" + item + "' does not act on " + std::to_string(n) + " qubits");
    out.push_back(p);
  }
  return out;
}

void fill(qclc_distance_info* info, const qclc::DistanceResult& d) {
  if (!info) return;
  info->found = d.found;
  info->lower_bound = d.lower_bound;
  info->value = d.value;
  info->max_weight = d.max_weight;
  info->enumerated = d.enumerated;
}

qclc::PathPartition partition_of(const qclc_graph& g, const char* text, int trivial) {
  const auto& w = witness(g);
  if (text) {
    std::istringstream in(text);
    return qclc::read_partition(in, g.g, w);
  }
  return trivial ? qclc::trivial_partition(g.g, w) : qclc::greedy_partition(g.g, w);
}

}  // namespace

extern "C" {

const char* qclc_last_error(void) { return last_error.c_str(); }
void qclc_string_free(char* s) { delete[] s; }

qclc_status qclc_matrix_new(size_t rows, size_t cols, qclc_matrix** out) {
  return guard([&] {
    need_out(out);
    *out = new qclc_matrix{qclc::BitMatrix(rows, cols)};
  });
}

qclc_status qclc_matrix_parse(const char* text, qclc_matrix** out) {
  return guard([&] {
    need_out(out);
    *out = new qclc_matrix{qclc::matrix_from_string(cstr(text, "text"))};
  });
}

qclc_status qclc_matrix_load(const char* path, qclc_matrix** out) {
  return guard([&] {
    need_out(out);
    *out = new qclc_matrix{qclc::load_matrix(cstr(path, "path"))};
  });
}

qclc_status qclc_matrix_save(const qclc_matrix* m, const char* path) {
  return guard([&] { qclc::save_matrix(cstr(path, "path"), need(m, "matrix").m); });
}

qclc_status qclc_matrix_text(const qclc_matrix* m, char** out) {
  return guard([&] {
    need_out(out);
    *out = dup(qclc::matrix_to_string(need(m, "matrix").m));
  });
}

size_t qclc_matrix_rows(const qclc_matrix* m) { return m ? m->m.rows() : 0; }
size_t qclc_matrix_cols(const qclc_matrix* m) { return m ? m->m.cols() : 0; }

int qclc_matrix_get(const qclc_matrix* m, size_t r, size_t c) {
  if (!m || r >= m->m.rows() || c >= m->m.cols()) return -1;
  return m->m.get(r, c);
}

qclc_status qclc_matrix_set(qclc_matrix* m, size_t r, size_t c, int v) {
  return guard([&] {
    if (!m) throw ArgumentError("null matrix");
    if (r >= m->m.rows() || c >= m->m.cols()) throw ArgumentError("entry out of range");
    m->m.set(r, c, v != 0);
  });
}

void qclc_matrix_free(qclc_matrix* m) { delete m; }

qclc_status qclc_circuit_parse(const char* text, qclc_circuit** out) {
  return guard([&] {
    need_out(out);
    auto c = qclc::parse_circuit(cstr(text, "text"));
    qclc::require_valid(c);
    *out = new qclc_circuit{std::move(c)};
  });
}

qclc_status qclc_circuit_load(const char* path, qclc_circuit** out) {
  return guard([&] {
    need_out(out);
    auto c = qclc::load_circuit(cstr(path, "path"));
    qclc::require_valid(c);
    *out = new qclc_circuit{std::move(c)};
  });
}

qclc_status qclc_circuit_text(const qclc_circuit* c, char** out) {
  return guard([&] {
    need_out(out);
    *out = dup(qclc::serialize(need(c, "circuit").c));
  });
}

int qclc_circuit_qubits(const qclc_circuit* c) { return c ? c->c.n : 0; }
int qclc_circuit_depth(const qclc_circuit* c) { return c ? c->c.depth() : 0; }
void qclc_circuit_free(qclc_circuit* c) { delete c; }

qclc_status qclc_graph_build_plain(const qclc_circuit* c, qclc_graph** out) {
  return guard([&] {
    need_out(out);
    *out = new qclc_graph{qclc::build_plain(need(c, "circuit").c), std::nullopt};
  });
}

qclc_status qclc_graph_symmetrize(const qclc_circuit* c, qclc_graph** out, int* splits) {
  return guard([&] {
    need_out(out);
    auto r = qclc::symmetrize(need(c, "circuit").c);
    if (splits) *splits = r.splits;
    *out = new qclc_graph{std::move(r.graph), std::move(r.witness)};
  });
}

qclc_status qclc_graph_from_matrix(const qclc_matrix* a, const qclc_matrix* dual, qclc_graph** out) {
  return guard([&] {
    need_out(out);
    auto g = qclc::TannerGraph::from_matrix(need(a, "matrix").m);
    std::optional<qclc::SymmetryWitness> w;
    if (dual) w = qclc::witness_from_D(g, dual->m);
    *out = new qclc_graph{std::move(g), std::move(w)};
  });
}

qclc_status qclc_graph_load(const char* prefix, qclc_graph** out) {
  return guard([&] {
    need_out(out);
    auto g = qclc::load_graph(cstr(prefix, "prefix"));
    auto w = qclc::load_witness(prefix, g);
    *out = new qclc_graph{std::move(g), std::move(w)};
  });
}

qclc_status qclc_graph_save(const qclc_graph* g, const char* prefix) {
  return guard([&] {
    const auto& gg = need(g, "graph");
    qclc::save_graph(cstr(prefix, "prefix"), gg.g, gg.w ? &*gg.w : nullptr);
  });
}

size_t qclc_graph_bits(const qclc_graph* g) { return g ? g->g.num_bits() : 0; }
size_t qclc_graph_checks(const qclc_graph* g) { return g ? g->g.num_checks() : 0; }
size_t qclc_graph_max_degree(const qclc_graph* g) { return g ? g->g.max_degree() : 0; }
int qclc_graph_has_witness(const qclc_graph* g) { return g && g->w ? 1 : 0; }

qclc_status qclc_graph_matrix(const qclc_graph* g, qclc_matrix** out) {
  return guard([&] {
    need_out(out);
    *out = new qclc_matrix{need(g, "graph").g.matrix()};
  });
}

qclc_status qclc_graph_dot(const qclc_graph* g, char** out) {
  return guard([&] {
    need_out(out);
    *out = dup(qclc::export_dot(need(g, "graph").g));
  });
}

void qclc_graph_free(qclc_graph* g) { delete g; }

qclc_status qclc_classify(const qclc_graph* gh, char** report) {
  return guard([&] {
    need_out(report);
    const auto& g = need(gh, "graph").g;
    const auto s = qclc::code_spaces(g);
    std::ostringstream o;
    for (std::size_t i = 0; i < s.kernel.rows(); ++i) {
      const auto& c = s.kernel.row(i);
      o << "codeword " << i + 1 << ": " << qclc::class_name(qclc::classify(g, s, c))
        << "  in=" << qclc::sigma_in(g, c).str() << "  out=" << qclc::sigma_out(g, c).str() << "  meas={";
      const auto rel = qclc::relevant_measurements(g, c);
      for (std::size_t k = 0; k < rel.size(); ++k) o << (k ? "," : "") << g.bit_name(rel[k]);
      o << "}  support=" << c.str() << '\n';
    }
    o << "dim C = " << s.kernel.rows() << ", checkers " << s.c.rows() << ", C_d " << s.cd.rows() << ", C_e "
      << s.ce.rows() << ", C_de " << s.cde.rows() << '\n';
    *report = dup(o.str());
  });
}

qclc_status qclc_ec_matrices(const qclc_graph* gh, const char* s_in, const char* s_out, qclc_matrix** b,
                             qclc_matrix** l) {
  return guard([&] {
    need_out(b);
    need_out(l);
    const auto& g = need(gh, "graph").g;
    const auto ec = qclc::build_ec_structure(g, parse_group(s_in, g.n), parse_group(s_out, g.n));
    *b = new qclc_matrix{ec.B};
    *l = new qclc_matrix{ec.L};
  });
}

qclc_status qclc_circuit_distance(const qclc_matrix* b, const qclc_matrix* l, size_t max_weight, unsigned jobs,
                                  int reduced, qclc_distance_info* info, char** witness) {
  return guard([&] {
    const auto& B = need(b, "B").m;
    const auto& L = need(l, "L").m;
    const auto d = reduced ? qclc::reduced_circuit_distance(B, L, max_weight, jobs)
                           : qclc::circuit_distance(B, L, max_weight, jobs);
    fill(info, d);
    if (witness) *witness = d.found ? dup(d.witness.str()) : nullptr;
  });
}

qclc_status qclc_css_distance(const qclc_matrix* gx, const qclc_matrix* gz, size_t max_weight, unsigned jobs,
                              qclc_distance_info* d_x, qclc_distance_info* d_z) {
  return guard([&] {
    const auto r = qclc::css_distance(need(gx, "G_X").m, need(gz, "G_Z").m, max_weight, jobs);
    fill(d_x, r.d_x);
    fill(d_z, r.d_z);
  });
}

qclc_status qclc_distance_text(const qclc_distance_info* info, char** out) {
  return guard([&] {
    need_out(out);
    const auto& i = need(info, "distance info");
    qclc::DistanceResult d;
    d.found = i.found;
    d.lower_bound = i.lower_bound;
    d.value = i.value;
    d.max_weight = i.max_weight;
    *out = dup(d.value_str());
  });
}

qclc_status qclc_verify(const qclc_circuit* c, uint64_t seed, int states, int random_errors, int max_error_weight,
                        qclc_verify_summary* summary, char** report) {
  return guard([&] {
    if (states < 1) throw ArgumentError("at least one initial state is needed");
    const auto s = qclc::verify_circuit(need(c, "circuit").c, seed, states, random_errors, max_error_weight);
    if (summary) *summary = {s.codewords, s.runs, s.failures.size()};
    if (report) {
      std::ostringstream o;
      for (const auto& f : s.failures) o << f.report() << '\n';
      *report = dup(o.str());
    }
  });
}

qclc_status qclc_split(const qclc_graph* gh, const char* plan, size_t max_weight, unsigned jobs, qclc_graph** out,
                       char** plan_used, char** report, int* bound_ok) {
  return guard([&] {
    need_out(out);
    const auto& g = need(gh, "graph").g;
    const auto& w = witness(*gh);
    qclc::SplitPlan p;
    if (plan) {
      std::istringstream in(plan);
      p = qclc::read_plan(in, g, w);
    } else {
      p = qclc::degree_reducing_plan(g, w);
    }
    auto r = qclc::symmetric_split(g, w, p);
    std::string text;
    int ok = 1;
    if (max_weight) {
      const auto [B, L] = qclc::io_code_matrices(g, w);
      const auto bound = qclc::check_distance_bound(g, r.graph, B, L, r.maps, max_weight, jobs);
      text = bound.str();
      ok = bound.ok();
    }
    if (plan_used) {
      std::ostringstream o;
      qclc::write_plan(o, g, w, p);
      *plan_used = dup(o.str());
    }
    give(report, text);
    if (bound_ok) *bound_ok = ok;
    *out = new qclc_graph{std::move(r.graph), std::move(r.witness)};
  });
}

qclc_status qclc_synthesize(const qclc_graph* gh, const char* partition, int trivial, qclc_circuit** out,
                            char** partition_used, char** schedule) {
  return guard([&] {
    need_out(out);
    const auto& g = need(gh, "graph");
    const auto p = partition_of(g, partition, trivial);
    const auto r = qclc::synthesize(g.g, *g.w, p);
    if (partition_used) {
      std::ostringstream o;
      qclc::write_partition(o, g.g, p);
      *partition_used = dup(o.str());
    }
    if (schedule) {
      std::ostringstream o;
      const auto& s = r.schedule;
      for (std::size_t t = 0; t < s.dt.size(); ++t) {
        o << "window " << t + 1 << ": layers " << s.first_layer[t] << ".." << s.first_layer[t] + s.dt[t] - 1;
        for (const auto& gt : s.gates)
          if (gt.tau == static_cast<int>(t + 1)) {
            o << "  " << qclc::gate_name(gt.kind) << '(' << gt.a;
            if (gt.b != gt.a) o << ',' << gt.b;
            o << ')';
          }
        o << '\n';
      }
      auto list = [&](const char* name, const std::vector<int>& qs) {
        o << name << ':';
        for (int q : qs) o << ' ' << q;
        o << '\n';
      };
      list("open inputs", s.open_inputs);
      list("open outputs", s.open_outputs);
      *schedule = dup(o.str());
    }
    *out = new qclc_circuit{r.circuit};
  });
}

qclc_status qclc_roundtrip(const qclc_graph* gh, const char* partition, int trivial, size_t max_weight, unsigned jobs,
                           int* ok, char** report) {
  return guard([&] {
    const auto& g = need(gh, "graph");
    const auto r = qclc::roundtrip_check(g.g, *g.w, partition_of(g, partition, trivial), max_weight, {}, {}, jobs);
    if (ok) *ok = r.ok;
    give(report, r.str());
  });
}

qclc_status qclc_css_gen(const qclc_matrix* gx, const qclc_matrix* gz, const char* layer, qclc_graph** graph,
                         qclc_matrix** b, qclc_matrix** l) {
  return guard([&] {
    need_out(graph);
    const auto code = qclc::derive_logicals(need(gx, "G_X").m, need(gz, "G_Z").m);
    auto p = qclc::assemble_physical(code, qclc::parse_layer(cstr(layer, "layer")));
    if (b) *b = new qclc_matrix{p.ec.B};
    if (l) *l = new qclc_matrix{p.ec.L};
    *graph = new qclc_graph{std::move(p.graph), std::move(p.witness)};
  });
}

}  // extern "C"
