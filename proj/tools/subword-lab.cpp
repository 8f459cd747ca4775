// subword-lab: command-line front end for the swl library.
// Exit codes: 0 success or verdict yes, 1 verdict no, 2 usage or resource error.

#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "swl/complexes.hpp"
#include "swl/coxeter.hpp"
#include "swl/io.hpp"
#include "swl/redgraph.hpp"
#include "swl/tensors.hpp"
#include "swl/words.hpp"

namespace {

using namespace swl;
using ojson = nlohmann::ordered_json;

struct Common {
  std::string type;
  std::string word;
  std::string format = "table";
  std::string out;
  std::uint64_t budget_words = Budget{}.max_words;
  double budget_seconds = Budget{}.max_seconds;
  std::uint64_t seed = 1;
  std::string normalization = "greedy";
  bool flip = false;

  Budget budget() const { return Budget{budget_words, budget_seconds}; }
  CoxeterSystem system() const { return CoxeterSystem::parse(type); }
  TSignOptions t_options() const {
    TSignOptions o;
    if (normalization == "greedy")
      o.normalization = TNormalization::GreedyOccurrence;
    else if (normalization == "lex")
      o.normalization = TNormalization::LexLeast;
    else
      throw UsageError("--normalization must be greedy or lex");
    o.flip = flip;
    return o;
  }
};

void add_type(CLI::App* cmd, Common& c, bool required = true) {
  auto* opt = cmd->add_option("--type,-t", c.type, "Coxeter type: A3, B4, D5, H3, I2:7");
  if (required) opt->required();
}
void add_budget(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget-words", c.budget_words, "word budget per enumeration");
  cmd->add_option("--budget-seconds", c.budget_seconds, "time budget per enumeration");
}
void add_out(CLI::App* cmd, Common& c) { cmd->add_option("--out,-o", c.out, "write output to a file"); }
void add_format(CLI::App* cmd, Common& c, std::vector<std::string> allowed) {
  // the first entry is this command's default; set once the subcommand is seen
  cmd->preparse_callback([&c, first = allowed.front()](std::size_t) { c.format = first; });
  cmd->add_option("--format,-f", c.format, "output format")->check(CLI::IsMember(allowed));
}
void add_tau(CLI::App* cmd, Common& c) {
  cmd->add_option("--normalization", c.normalization, "T-sign anchor: greedy or lex")
      ->check(CLI::IsMember({"greedy", "lex"}));
  cmd->add_flag("--flip", c.flip, "flip the T-sign normalisation");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty())
    std::cout << text;
  else
    write_text_file(c.out, text);
}

Element target_element(const CoxeterSystem& sys, const Common& c) {
  if (c.word.empty()) return sys.longest_element();
  Word w = Word::parse(c.word);
  check_letters(sys, w);
  return sys.element_of(w);
}

std::string sign_char(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

// --------------------------------------------------------------- commands

int cmd_enumerate(const Common& c, bool count_only) {
  auto sys = c.system();
  Element w = target_element(sys, c);
  std::ostringstream out;
  ojson words = ojson::array();
  std::uint64_t count = for_each_reduced_word(
      sys, w,
      [&](const Word& v) {
        if (count_only) return true;
        if (c.format == "json")
          words.push_back(v.to_string());
        else
          out << v.to_string() << "\n";
        return true;
      },
      c.budget());
  if (c.format == "json") {
    ojson j;
    j["type"] = sys.name();
    j["element"] = sys.lex_first_reduced_word(w).to_string();
    j["count"] = count;
    if (!count_only) j["words"] = words;
    emit(c, j.dump(2) + "\n");
  } else if (count_only) {
    emit(c, std::to_string(count) + "\n");
  } else {
    emit(c, out.str());
  }
  return 0;
}

int cmd_abelian(const Common& c, const std::string& mode_name) {
  auto sys = c.system();
  SpectrumMode mode = mode_name == "streaming" ? SpectrumMode::Streaming : SpectrumMode::Aggregate;
  AbelianSpectrum sp = abelian_spectrum(sys, target_element(sys, c), mode, c.budget());
  std::ostringstream out;
  if (c.format == "json") {
    ojson j;
    j["type"] = sys.name();
    j["count"] = sp.vectors.size();
    ojson v = ojson::array();
    for (const auto& a : sp.vectors) v.push_back(a.counts());
    j["vectors"] = v;
    j["nu"] = sp.nu;
    j["min"] = sp.mu.counts();
    j["max"] = sp.coordinatewise_max.counts();
    j["reduced_words"] = sp.word_count.get_str();
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    for (const auto& a : sp.vectors) {
      for (std::size_t i = 0; i < a.size(); ++i) out << (i ? "," : "") << a[i];
      out << "\n";
    }
  } else {
    out << sp.vectors.size() << " abelian vectors\n";
    for (const auto& a : sp.vectors) out << a.to_string() << "\n";
    out << "nu " << sp.nu << "\n";
    out << "min " << sp.mu.to_string() << "\n";
    out << "max " << sp.coordinatewise_max.to_string() << "\n";
    out << "reduced words " << sp.word_count.get_str() << "\n";
  }
  emit(c, out.str());
  return 0;
}

int cmd_graph(const Common& c, const std::string& minor_name, const std::string& kind, bool check_bipartite) {
  auto sys = c.system();
  MinorKind mk = parse_minor_kind(minor_name);
  RedGraph g = build_graph(sys, target_element(sys, c), c.budget());
  std::optional<SignAssignment> signs;
  if (!kind.empty()) {
    if (!c.word.empty() && sys.element_of(Word::parse(c.word)) != sys.longest_element())
      throw UsageError("sign labels are defined on the graph of w_0 only");
    signs = sign_function(sys, parse_sign_kind(kind), c.t_options());
  }
  RedGraph h = minor(sys, g, mk);
  if (check_bipartite) {
    Bipartition bp = bipartition(h);
    ojson j;
    j["type"] = sys.name();
    j["minor"] = minor_kind_name(mk);
    j["vertices"] = h.vertex_count();
    j["edges"] = h.edge_count();
    j["bipartite"] = bp.bipartite;
    if (!bp.bipartite) {
      ojson cyc = ojson::array();
      for (int v : bp.odd_cycle) cyc.push_back(h.vertices()[v].to_string());
      j["odd_cycle"] = cyc;
    }
    emit(c, j.dump(2) + "\n");
    return bp.bipartite ? 0 : 1;
  }
  const SignAssignment* sp = signs ? &*signs : nullptr;
  if (c.format == "json")
    emit(c, to_json(h, sp));
  else
    emit(c, to_dot(h, sp, sys.name() + "_" + minor_kind_name(mk)));
  return 0;
}

int cmd_signs(const Common& c, const std::string& kind) {
  auto sys = c.system();
  SignAssignment s = sign_function(sys, parse_sign_kind(kind), c.t_options());
  std::ostringstream out;
  if (c.format == "json") {
    ojson j;
    j["type"] = sys.name();
    j["kind"] = sign_kind_name(s.kind);
    j["anchor"] = t_sign_anchor(sys, c.t_options().normalization).to_string();
    ojson vals = ojson::object();
    for (const auto& [w, v] : s.values) vals[w.to_string()] = v;
    j["signs"] = vals;
    out << j.dump(2) << "\n";
  } else {
    const char* sep = c.format == "csv" ? "," : " ";
    for (const auto& [w, v] : s.values) out << w.to_string() << sep << sign_char(v) << "\n";
  }
  emit(c, out.str());
  return 0;
}

// "bcl:A3:213", "bcl:A2:m=3", "random:d=3", "model4", or a JSON file
ParameterTensor load_tensor(const std::string& spec, const CoxeterSystem& sys, const Common& c) {
  if (spec == "model4") return example_model4_tensor();
  if (spec.rfind("bcl:", 0) == 0) {
    std::string rest = spec.substr(4);
    std::optional<Rational> m;
    if (auto at = rest.find(":m="); at != std::string::npos) {
      m = parse_rational(rest.substr(at + 3));
      rest = rest.substr(0, at);
    }
    return bcl_parameter_tensor(parse_bcl_tensor(rest), m);
  }
  if (spec.rfind("random", 0) == 0) {
    int d = sys.longest_length();
    if (auto at = spec.find(":d="); at != std::string::npos) d = std::stoi(spec.substr(at + 3));
    std::mt19937_64 rng(c.seed);
    return ParameterTensor::random(sys.longest_length(), sys.rank(), d, rng);
  }
  return tensor_from_json(read_text_file(spec));
}

int cmd_det(const Common& c, const std::string& tensor_spec) {
  auto sys = c.system();
  if (c.word.empty()) throw UsageError("det needs --word");
  Word v = Word::parse(c.word);
  check_letters(sys, v);
  if (!is_reduced(sys, v) || sys.element_of(v) != sys.longest_element())
    throw UsageError("det needs a reduced word of w_0");
  ParameterTensor p = load_tensor(tensor_spec, sys, c);
  TheoremBCertificate cert = det_via_theorem_B(v, p);
  if (c.format == "json") {
    emit(c, cert.to_json());
    return 0;
  }
  std::ostringstream out;
  out << "word " << v.to_string() << "\n";
  out << "sigma " << sign_char(cert.sigma) << "\n";
  out << "divisor";
  if (cert.divisor_factors.empty()) out << " 1";
  for (auto [k, j] : cert.divisor_factors) out << " (x" << k << " - x" << j << ")";
  out << "\n";
  out << "minors " << cert.terms.size() << " nonzero of " << cert.support_size << "\n";
  for (const auto& t : cert.terms) {
    out << "  [";
    for (std::size_t i = 0; i < t.z.size(); ++i) out << (i ? "," : "") << t.z[i];
    out << "] " << t.minor.to_string() << " ";
    for (const auto& l : t.lambda) out << l.to_string();
    out << "\n";
  }
  out << "schur_sum " << cert.schur_sum.to_string() << "\n";
  out << "factored " << (cert.sigma < 0 ? "-" : "");
  for (auto [k, j] : cert.divisor_factors) out << "(x" << k << " - x" << j << ")*";
  out << "(" << cert.schur_sum.to_string() << ")\n";
  out << "determinant " << cert.determinant.to_string() << "\n";
  emit(c, out.str());
  return 0;
}

int cmd_facets(const Common& c) {
  auto sys = c.system();
  if (c.word.empty()) throw UsageError("facets needs --word");
  SubwordComplex cx = build_complex(sys, Word::parse(c.word), c.budget());
  if (c.format == "json") {
    emit(c, cx.to_json());
    return 0;
  }
  std::ostringstream out;
  out << cx.facets.size() << " facets\n";
  for (const auto& f : cx.facets) {
    out << "{";
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
    out << "} type " << cx.combinatorial_type(f).to_string() << " "
        << cx.facet_abelian_vector(f, sys.rank()).to_string() << "\n";
  }
  out << "non-vertices";
  for (int i : cx.non_vertices) out << " " << i;
  out << "\n";
  emit(c, out.str());
  return 0;
}

std::vector<Rational> x_values(const std::string& text, std::size_t m) {
  if (text.empty()) {
    std::vector<Rational> x;
    for (std::size_t i = 1; i <= m; ++i) x.push_back(Rational(static_cast<long>(i)));
    return x;
  }
  auto x = parse_rational_list(text);
  if (x.size() != m) throw UsageError("--x needs " + std::to_string(m) + " values");
  return x;
}

GaleMatrixData gale_input(const CoxeterSystem& sys, const Common& c, const std::string& matrix_path,
                          const std::string& tensor_spec, const std::string& x_text) {
  if (c.word.empty()) throw UsageError("--word p is required");
  GaleMatrixData data;
  data.p = Word::parse(c.word);
  check_letters(sys, data.p);
  data.x = x_values(x_text, data.p.size());
  if (!matrix_path.empty() == !tensor_spec.empty()) throw UsageError("give exactly one of --matrix and --tensor");
  if (!matrix_path.empty()) {
    data.B = read_matrix_file(matrix_path);
  } else {
    ParameterTensor p = load_tensor(tensor_spec, sys, c);
    if (!p.is_rational()) throw UsageError("tensor has symbolic entries; use bcl:...:m=<value>");
    data = curve_gale_data(p, data.p, data.x);
  }
  return data;
}

int cmd_check(const Common& c, const std::string& which, const std::string& matrix_path,
              const std::string& tensor_spec, const std::string& x_text) {
  auto sys = c.system();
  Verdict verdict;
  if (which == "signature") {
    verdict = check_signature_matrix(gale_input(sys, c, matrix_path, tensor_spec, x_text), sys, c.t_options());
  } else {
    ParameterTensor p;
    Word w = Word::parse(c.word);
    std::vector<Rational> x = x_values(x_text, w.size());
    if (!matrix_path.empty())
      p = extract_parameter_tensor(gale_input(sys, c, matrix_path, "", x_text), sys.rank());
    else if (!tensor_spec.empty())
      p = load_tensor(tensor_spec, sys, c);
    else
      throw UsageError("give --matrix or --tensor");
    verdict = check_theorem_C(p, w, x, sys, c.t_options());
  }
  if (c.format == "json") {
    emit(c, verdict.to_json());
  } else {
    std::ostringstream out;
    out << "check " << verdict.check << "\n"
        << "verdict " << (verdict.yes ? "yes" : "no") << " (" << verdict.condition << ")\n"
        << "occurrences " << verdict.occurrences_checked << ", failures " << verdict.failures << "\n";
    for (const auto& cl : verdict.classes)
      out << "  " << cl.alpha.to_string() << " " << cl.occurrences << " occurrences, " << cl.failures << " failures\n";
    if (verdict.witness) {
      const auto& w = *verdict.witness;
      out << "witness " << w.v.to_string() << " at";
      for (int q : w.positions) out << " " << q;
      out << ": value " << to_string(w.value) << ", sign " << w.observed << ", expected " << w.expected << "\n";
    }
    emit(c, out.str());
  }
  return verdict.yes ? 0 : 1;
}

int cmd_extract(const Common& c, const std::string& matrix_path, const std::string& tensor_spec,
                const std::string& x_text) {
  auto sys = c.system();
  GaleMatrixData data = gale_input(sys, c, matrix_path, tensor_spec, x_text);
  emit(c, tensor_to_json(extract_parameter_tensor(data, sys.rank())));
  return 0;
}

int cmd_dual_cauchy(const Common& c, int a, int b) {
  Word v = dual_cauchy_word(a, b);
  ParameterTensor p = dual_cauchy_tensor(a, b);
  TheoremBCertificate cert = det_via_theorem_B(v, p);
  MPoly quotient = to_dual_cauchy_variables(MPoly(cert.sigma) * cert.schur_sum, a, b);
  MPoly product = dual_cauchy_product(a, b);
  MPoly schur_side = dual_cauchy_schur_sum(a, b);
  std::size_t units = 0;
  for (const auto& t : cert.terms)
    if (t.minor == MPoly(1) || t.minor == MPoly(-1)) ++units;
  bool ok = quotient == product && product == schur_side;
  ojson j;
  j["a"] = a;
  j["b"] = b;
  j["word"] = v.to_string();
  j["nonzero_minors"] = cert.terms.size();
  j["unit_minors"] = units;
  j["det_over_vandermonde"] = quotient.to_string();
  j["product"] = product.to_string();
  j["schur_sum"] = schur_side.to_string();
  j["identity_holds"] = ok;
  if (c.format == "json") {
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "word " << v.to_string() << "\n"
        << "unit minors " << units << " of " << cert.terms.size() << " nonzero\n"
        << "terms " << product.terms().size() << " in the expanded product\n"
        << "identity " << (ok ? "holds" : "FAILS") << "\n";
    emit(c, out.str());
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subword-lab: reduced words, sign functions, model determinants and signature matrices"};
  app.require_subcommand(1);
  Common c;

  auto* enumerate = app.add_subcommand("enumerate", "reduced words of w_0 (or of --word)");
  bool count_only = false;
  add_type(enumerate, c);
  enumerate->add_option("--word,-w", c.word, "element given by a word");
  enumerate->add_flag("--count-only", count_only, "print only the number of words");
  add_format(enumerate, c, {"table", "json"});
  add_budget(enumerate, c);
  add_out(enumerate, c);

  auto* abelian = app.add_subcommand("abelian", "abelian vectors of reduced words");
  std::string mode = "aggregate";
  add_type(abelian, c);
  abelian->add_option("--word,-w", c.word, "element given by a word");
  abelian->add_option("--mode", mode, "aggregate or streaming")->check(CLI::IsMember({"aggregate", "streaming"}));
  add_format(abelian, c, {"table", "json", "csv"});
  add_budget(abelian, c);
  add_out(abelian, c);

  auto* graph = app.add_subcommand("graph", "graph of reduced words and its minors");
  std::string minor_name = "full", graph_kind;
  bool check_bipartite = false;
  add_type(graph, c);
  graph->add_option("--word,-w", c.word, "element given by a word");
  graph->add_option("--minor", minor_name, "full, comm, braid, odd, even or two");
  graph->add_option("--kind", graph_kind, "label vertices with the S, T or punctual sign");
  graph->add_flag("--bipartite", check_bipartite, "report a 2-colouring or an odd cycle");
  add_format(graph, c, {"dot", "json"});
  add_tau(graph, c);
  add_budget(graph, c);
  add_out(graph, c);

  auto* signs = app.add_subcommand("signs", "sign functions on R(w_0)");
  std::string kind = "S";
  add_type(signs, c);
  signs->add_option("--kind", kind, "S, T or punctual");
  add_format(signs, c, {"table", "json", "csv"});
  add_tau(signs, c);
  add_out(signs, c);

  auto* det = app.add_subcommand("det", "model determinant factored through partial Schur functions");
  std::string tensor_spec;
  add_type(det, c);
  det->add_option("--word,-w", c.word, "reduced word of w_0")->required();
  det->add_option("--tensor", tensor_spec, "JSON file, model4, bcl:A3:213[:m=3] or random[:d=k]")->required();
  det->add_option("--seed", c.seed, "seed for random tensors");
  add_format(det, c, {"table", "json"});
  add_out(det, c);

  auto* facets = app.add_subcommand("facets", "facets of the subword complex of --word");
  add_type(facets, c);
  facets->add_option("--word,-w", c.word, "the word p")->required();
  add_format(facets, c, {"table", "json"});
  add_budget(facets, c);
  add_out(facets, c);

  auto* check = app.add_subcommand("check", "verify a signature matrix or the Schur-sum sign conditions");
  std::string which, matrix_path, x_text;
  check->add_option("condition", which, "signature or theorem-c")
      ->required()
      ->check(CLI::IsMember({"signature", "theorem-c"}));
  add_type(check, c);
  check->add_option("--word,-w", c.word, "the word p")->required();
  check->add_option("--matrix", matrix_path, "Gale matrix B as CSV or JSON");
  check->add_option("--tensor", tensor_spec, "parameter tensor: JSON file, model4, bcl:...");
  check->add_option("--x", x_text, "comma separated x-values, default 1..m");
  check->add_option("--seed", c.seed, "seed for random tensors");
  add_tau(check, c);
  add_format(check, c, {"json", "table"});
  add_out(check, c);

  auto* extract = app.add_subcommand("extract", "interpolate a parameter tensor from a Gale matrix");
  add_type(extract, c);
  extract->add_option("--word,-w", c.word, "the word p")->required();
  extract->add_option("--matrix", matrix_path, "Gale matrix B as CSV or JSON");
  extract->add_option("--tensor", tensor_spec, "build B from a tensor instead");
  extract->add_option("--x", x_text, "comma separated x-values, default 1..m");
  add_out(extract, c);

  auto* dual = app.add_subcommand("dual-cauchy", "the dual Cauchy identity through the model determinant");
  int a = 2, b = 3;
  dual->add_option("--a", a, "letters s_1")->check(CLI::Range(1, 6));
  dual->add_option("--b", b, "letters s_2")->check(CLI::Range(1, 6));
  add_format(dual, c, {"table", "json"});
  add_out(dual, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*enumerate) return cmd_enumerate(c, count_only);
    if (*abelian) return cmd_abelian(c, mode);
    if (*graph) return cmd_graph(c, minor_name, graph_kind, check_bipartite);
    if (*signs) return cmd_signs(c, kind);
    if (*det) return cmd_det(c, tensor_spec);
    if (*facets) return cmd_facets(c);
    if (*check) return cmd_check(c, which, matrix_path, tensor_spec, x_text);
    if (*extract) return cmd_extract(c, matrix_path, tensor_spec, x_text);
    if (*dual) return cmd_dual_cauchy(c, a, b);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
