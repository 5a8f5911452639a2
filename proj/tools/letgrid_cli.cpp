#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <random>
#include <sstream>

#include "letgrid/chain_circuit.hpp"
#include "letgrid/gridding.hpp"
#include "letgrid/letters.hpp"
#include "letgrid/loh.hpp"
#include "letgrid/partition.hpp"
#include "letgrid/permutation.hpp"
#include "svg.hpp"

using json = nlohmann::json;
using namespace letgrid;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kBudget = 3 };

struct Result {
  std::string text;
  json data = json::object();
  int status = kOk;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

json edge_list(const Graph& g) {
  json out = json::array();
  for (auto [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

json graph_json(const Graph& g) { return {{"n", g.order()}, {"edges", edge_list(g)}, {"text", format_graph(g)}}; }

json representation_json(const Decoder& d, const Word& w, const std::vector<int>& vertices) {
  return {{"decoder", format_decoder(d)}, {"word", format_word(w)}, {"vertices", vertices}};
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string cuts_text(const std::vector<int>& cuts) {
  std::string s;
  for (int c : cuts) s += (s.empty() ? "" : " ") + format_cut(c);
  return s;
}

std::string signs_text(const SignVector& s) {
  std::ostringstream out;
  out << "columns";
  for (int c : s.columns) out << " " << (c > 0 ? "+" : "-");
  out << "\nrows";
  for (int r : s.rows) out << " " << (r > 0 ? "+" : "-");
  out << "\n";
  return out.str();
}

PartitionLevel parse_level(const std::string& s) {
  if (s == "chain") return PartitionLevel::chain;
  if (s == "semi") return PartitionLevel::semi;
  if (s == "proper") return PartitionLevel::proper;
  throw InputError("level must be chain, semi or proper");
}

class Cli {
 public:
  Cli() : app_("Letter graphs, grid classes and chain circuits") {
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_flag("--json", json_, "Print JSON instead of text");
    app_.add_option("--budget", budget_steps_, "Step budget for exhaustive searches");
    app_.add_option("--seed", seed_, "Seed for randomized generators");
    register_letters();
    register_perm();
    register_grid();
    register_cc();
    register_partition();
    register_loh();
    register_plot();
  }

  int run(int argc, char** argv) {
    try {
      app_.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app_.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
      return app_.exit(e);
    } catch (const CLI::ParseError& e) {
      app_.exit(e);
      return kInputError;
    }
    try {
      Result r = handler_();
      if (json_) {
        r.data["status"] = r.status;
        std::cout << r.data.dump(2) << "\n";
      } else {
        std::cout << r.text;
      }
      return r.status;
    } catch (const BudgetExhausted& e) {
      report_error("budget exhausted", e.what());
      return kBudget;
    } catch (const InputError& e) {
      report_error("input error", e.what());
      return kInputError;
    }
  }

 private:
  void report_error(const std::string& kind, const std::string& what) {
    if (json_) std::cout << json{{"error", kind}, {"message", what}}.dump(2) << "\n";
    std::cerr << "letgrid: " << kind << ": " << what << "\n";
  }

  Budget budget() const { return budget_steps_ ? Budget::steps(*budget_steps_) : Budget{}; }

  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help, std::function<Result()> fn) {
    auto* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([this, fn] { handler_ = fn; });
    return sub;
  }

  CLI::App* group(const std::string& name, const std::string& help) {
    auto* g = app_.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  }

  Graph load_graph() const { return parse_graph(read_input(graph_path_)); }
  Decoder load_decoder() const { return parse_decoder(read_input(decoder_path_)); }
  GridMatrix load_matrix() const { return parse_matrix(read_input(matrix_path_)); }
  ChainCircuit load_circuit() const { return parse_circuit(read_input(circuit_path_)); }
  Loh load_loh() const { return parse_loh(read_input(loh_path_)); }
  Word load_word() const {
    if (!word_file_.empty()) return parse_word(read_input(word_file_));
    return parse_word(word_);
  }

  // ---- letters -------------------------------------------------------------

  void register_letters() {
    auto* d = leaf(&app_, "decode", "Decode a word with a decoder", [this] {
      Graph g = decode(load_decoder(), load_word());
      return Result{format_graph(g), graph_json(g)};
    });
    d->add_option("--decoder", decoder_path_, "Decoder file")->required();
    d->add_option("--word", word_, "Word as whitespace-separated tokens");
    d->add_option("--word-file", word_file_, "File holding the word");

    auto* l = leaf(&app_, "lettericity", "Exact lettericity with a witness", [this] {
      Graph g = load_graph();
      auto r = lettericity(g, budget());
      Result out;
      out.data = {{"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact}};
      if (!r.exact) {
        out.text = "lettericity in [" + std::to_string(r.lower) + ", " + std::to_string(r.upper) + "] (budget exhausted)\n";
        out.status = kBudget;
        return out;
      }
      out.data["lettericity"] = r.lower;
      out.data["witness"] = representation_json(r.witness->decoder, r.witness->word, r.witness->vertices);
      out.text = "lettericity " + std::to_string(r.lower) + "\n" + format_decoder(r.witness->decoder) + "word " +
                 format_word(r.witness->word) + "\nvertices " + join(r.witness->vertices) + "\n";
      return out;
    });
    l->add_option("--graph", graph_path_, "Graph file")->required();

    auto* rec = leaf(&app_, "recognize", "Find a word for a graph under a fixed decoder", [this] {
      auto r = recognize_with_vertices(load_decoder(), load_graph(), budget());
      if (!r) return Result{"not representable with this decoder\n", {{"representable", false}}, kNegative};
      json j = representation_json(r->decoder, r->word, r->vertices);
      j["representable"] = true;
      return Result{"word " + format_word(r->word) + "\nvertices " + join(r->vertices) + "\n", j};
    });
    rec->add_option("--decoder", decoder_path_, "Decoder file")->required();
    rec->add_option("--graph", graph_path_, "Graph file")->required();

    auto* ob = leaf(&app_, "obstructions", "Minimal forbidden induced subgraphs for k letters", [this] {
      auto graphs = minimal_obstructions(k_, n_);
      Result out;
      out.data["graphs"] = json::array();
      for (const auto& g : graphs) {
        out.text += format_graph(g) + "\n";
        out.data["graphs"].push_back(graph_json(g));
      }
      out.data["count"] = graphs.size();
      return out;
    });
    ob->add_option("--k", k_, "Letter count")->required();
    ob->add_option("--n-max", n_, "Largest order to enumerate")->required();
  }

  // ---- permutations --------------------------------------------------------

  void register_perm() {
    auto* p = group("perm", "Permutation operations");
    auto* c = leaf(p, "contains", "Pattern containment", [this] {
      auto r = contains_pattern(parse_permutation(perm_), parse_permutation(other_));
      if (!r) return Result{"pattern absent\n", {{"contains", false}}, kNegative};
      return Result{join(*r) + "\n", {{"contains", true}, {"indices", *r}}};
    });
    c->add_option("--perm", perm_, "Permutation in one-line notation")->required();
    c->add_option("--pattern", other_, "Pattern")->required();

    auto* ig = leaf(p, "invgraph", "Inversion graph", [this] {
      Graph g = inversion_graph(parse_permutation(perm_));
      return Result{format_graph(g), graph_json(g)};
    });
    ig->add_option("--perm", perm_, "Permutation")->required();

    auto* s = leaf(p, "sum", "Direct or skew sum", [this] {
      if (mode_ != "direct" && mode_ != "skew") throw InputError("mode must be direct or skew");
      auto r = sum(parse_permutation(perm_), parse_permutation(other_), mode_ == "direct" ? SumMode::direct : SumMode::skew);
      return Result{format_permutation(r) + "\n", {{"perm", format_permutation(r)}}};
    });
    s->add_option("--perm", perm_, "Left summand")->required();
    s->add_option("--other", other_, "Right summand")->required();
    s->add_option("--mode", mode_, "direct or skew");

    auto* pin = leaf(p, "pin", "The descending-runs permutation on n^2 elements", [this] {
      auto r = pi_n(n_);
      return Result{format_permutation(r) + "\n", {{"perm", format_permutation(r)}}};
    });
    pin->add_option("--n", n_, "Run count")->required();
  }

  // ---- gridding ------------------------------------------------------------

  void register_grid() {
    auto* g = group("grid", "Grid matrices and griddings");
    auto matrix_opt = [this](CLI::App* a) { a->add_option("--matrix", matrix_path_, "Matrix file")->required(); };

    auto* cg = leaf(g, "cellgraph", "Cell graph of a matrix", [this] {
      GridMatrix m = load_matrix();
      Graph cg = cell_graph(m);
      json j = graph_json(cg);
      json cells = json::array();
      for (const auto& c : nonzero_cells(m)) cells.push_back(cell_token(m, c));
      j["cells"] = cells;
      return Result{format_graph(cg), j};
    });
    matrix_opt(cg);

    auto* pmm = leaf(g, "pmm", "Column and row signs of a partial multiplication matrix", [this] {
      auto s = find_pmm_signs(load_matrix());
      if (!s) return Result{"not a partial multiplication matrix\n", {{"pmm", false}}, kNegative};
      return Result{signs_text(*s), {{"pmm", true}, {"columns", s->columns}, {"rows", s->rows}}};
    });
    matrix_opt(pmm);

    auto* ref = leaf(g, "refine", "k-fold refinement", [this] {
      GridMatrix r = refine(load_matrix(), k_);
      return Result{format_matrix(r), {{"matrix", format_matrix(r)}}};
    });
    matrix_opt(ref);
    ref->add_option("--k", k_, "Refinement factor")->required();

    auto* mono = leaf(g, "monotone", "Monotone gridding of a permutation", [this] {
      GridMatrix m = load_matrix();
      auto r = monotone_gridding(parse_permutation(perm_), m);
      if (!r) return Result{"not griddable\n", {{"griddable", false}}, kNegative};
      json cells = json::array();
      for (const auto& c : r->assignment) cells.push_back(cell_token(m, c));
      std::string text = "vertical " + cuts_text(r->vertical) + "\nhorizontal " + cuts_text(r->horizontal) + "\ncells " +
                         format_word(to_word(m, r->assignment)) + "\n";
      return Result{text, {{"griddable", true}, {"vertical", r->vertical}, {"horizontal", r->horizontal}, {"cells", cells}}};
    });
    matrix_opt(mono);
    mono->add_option("--perm", perm_, "Permutation")->required();

    auto* geo = leaf(g, "geometric", "Geometric gridding (least cell word)", [this] {
      auto r = geometric_gridding(parse_permutation(perm_), load_matrix());
      if (!r) return Result{"not geometrically griddable\n", {{"griddable", false}}, kNegative};
      std::string w = format_cell_word(r->matrix, r->word);
      return Result{"word " + w + "\n" + format_matrix(r->matrix),
                    {{"griddable", true}, {"word", w}, {"matrix", format_matrix(r->matrix)}, {"columns", r->signs.columns},
                     {"rows", r->signs.rows}}};
    });
    matrix_opt(geo);
    geo->add_option("--perm", perm_, "Permutation")->required();

    auto* ph = leaf(g, "phi", "Permutation of a cell word", [this] {
      GridMatrix m = load_matrix();
      auto s = find_pmm_signs(m);
      if (!s) throw InputError("phi needs a partial multiplication matrix");
      Word w = load_word();
      std::string text;
      for (const auto& t : w) text += t + " ";
      auto p = phi(m, *s, parse_cell_word(m, text));
      return Result{format_permutation(p) + "\n", {{"perm", format_permutation(p)}}};
    });
    matrix_opt(ph);
    ph->add_option("--word", word_, "Cell word");
    ph->add_option("--word-file", word_file_, "File holding the cell word");

    auto* dec = leaf(g, "decoder", "Decoder on the cell alphabet", [this] {
      GridMatrix m = load_matrix();
      auto s = find_pmm_signs(m);
      if (!s) throw InputError("decoder construction needs a partial multiplication matrix");
      Decoder d = decoder_from_pmm(m, *s);
      return Result{format_decoder(d), {{"decoder", format_decoder(d)}}};
    });
    matrix_opt(dec);

    auto* en = leaf(g, "enumerate", "All permutations of length n in the class", [this] {
      if (mode_ != "grid" && mode_ != "geom") throw InputError("mode must be grid or geom");
      auto list = enumerate_class(load_matrix(), n_, mode_ == "grid" ? GridMode::grid : GridMode::geom);
      Result out;
      out.data["perms"] = json::array();
      for (const auto& p : list) {
        out.text += format_permutation(p) + "\n";
        out.data["perms"].push_back(format_permutation(p));
      }
      out.data["count"] = list.size();
      return out;
    });
    matrix_opt(en);
    en->add_option("--n", n_, "Length")->required();
    en->add_option("--mode", mode_, "grid or geom")->required();
  }

  // ---- chain circuits ------------------------------------------------------

  Result circuit_result(const ChainCircuit& cc) { return {format_circuit(cc), {{"circuit", format_circuit(cc)}, {"k", cc.k()}}}; }

  Result encoding_result(const Encoding& e) {
    return {format_encoding(e),
            {{"decoder", format_decoder(e.decoder)},
             {"word", format_word(e.word)},
             {"vertices", e.vertices},
             {"letters_used", e.letters_used},
             {"letter_budget", e.letter_budget},
             {"fallbacks", e.fallbacks}}};
  }

  void register_cc() {
    auto* g = group("cc", "Chain circuits");
    auto* gen = leaf(g, "generate", "The circuit C_{k,l}", [this] { return circuit_result(generate_ckl(k_, l_)); });
    gen->add_option("--k", k_, "Bag count")->required();
    gen->add_option("--l", l_, "Layer count")->required();

    auto* comp = leaf(g, "complement", "Complement between consecutive bags", [this] {
      return circuit_result(cc_complement(load_circuit()));
    });
    comp->add_option("--circuit", circuit_path_, "Circuit file")->required();

    auto* conf = leaf(g, "conflict", "Conflict digraph", [this] {
      Digraph d = conflict(load_circuit());
      Result out;
      out.data["arcs"] = json::array();
      for (auto [u, v] : d.arcs()) {
        out.text += "arc " + std::to_string(u) + " " + std::to_string(v) + "\n";
        out.data["arcs"].push_back({u, v});
      }
      auto cyc = find_cycle(d);
      out.data["acyclic"] = !cyc.has_value();
      return out;
    });
    conf->add_option("--circuit", circuit_path_, "Circuit file")->required();

    auto* cw = leaf(g, "cyclicword", "Word over one letter per bag, if the conflict digraph is acyclic", [this] {
      auto r = cyclic_word(load_circuit());
      if (!r.encoding) return Result{"conflict cycle " + join(r.cycle) + "\n", {{"acyclic", false}, {"cycle", r.cycle}}, kNegative};
      Result out = encoding_result(*r.encoding);
      out.data["acyclic"] = true;
      return out;
    });
    cw->add_option("--circuit", circuit_path_, "Circuit file")->required();

    auto* enc = leaf(g, "encode", "Letter graph representation of a circuit", [this] {
      return encoding_result(encode(load_circuit(), budget()));
    });
    enc->add_option("--circuit", circuit_path_, "Circuit file")->required();

    auto* tw = leaf(g, "twisted", "Circuit with one reversed chain pair, with declared signs", [this] {
      auto t = generate_twisted(k_, l_);
      std::ostringstream text;
      text << format_graph(t.graph);
      for (std::size_t i = 0; i < t.bags.size(); ++i) {
        text << "bag " << i + 1 << " :";
        for (int v : t.bags[i]) text << " " << v;
        text << "\n";
      }
      json signs = json::array();
      for (auto [a, b, s] : t.signs) {
        text << "sign " << a + 1 << " " << b + 1 << " " << (s > 0 ? "+" : "-") << "\n";
        signs.push_back({a, b, s});
      }
      return Result{text.str(), {{"graph", format_graph(t.graph)}, {"bags", t.bags}, {"signs", signs}, {"text", text.str()}}};
    });
    tw->add_option("--k", k_, "Bag count")->required();
    tw->add_option("--l", l_, "Layer count")->required();

    auto* rnd = leaf(g, "random", "Random chain circuit", [this] {
      std::mt19937_64 rng(seed_);
      return circuit_result(random_circuit(k_, n_, rng));
    });
    rnd->add_option("--k", k_, "Bag count")->required();
    rnd->add_option("--n", n_, "Vertex count")->required();
  }

  // ---- partitions ----------------------------------------------------------

  void register_partition() {
    auto* g = group("partition", "Chain partition parameters");
    for (auto [name, level] : {std::pair{"gamma", PartitionLevel::chain}, std::pair{"sigma", PartitionLevel::semi},
                               std::pair{"lambda", PartitionLevel::proper}}) {
      auto* p = leaf(g, name, std::string("Exact ") + name + " with an optimal certificate", [this, name, level] {
        auto r = chain_parameter(load_graph(), level, budget());
        std::string cert = format_certificate(r.witness);
        return Result{std::string(name) + " " + std::to_string(r.value) + "\n" + cert,
                      {{name, r.value}, {"certificate", cert}}};
      });
      p->add_option("--graph", graph_path_, "Graph file")->required();
    }

    auto* chk = leaf(g, "check", "Check a partition certificate", [this] {
      auto r = check_partition(load_graph(), parse_certificate(read_input(cert_path_)), parse_level(level_));
      if (!r) return Result{"fails: " + r.reason + "\n", {{"valid", false}, {"reason", r.reason}, {"bags", {r.bag_a, r.bag_b}}}, kNegative};
      return Result{"valid\n", {{"valid", true}}};
    });
    chk->add_option("--graph", graph_path_, "Graph file")->required();
    chk->add_option("--cert", cert_path_, "Certificate file")->required();
    chk->add_option("--level", level_, "chain, semi or proper")->required();

    auto* lc = leaf(g, "linked", "Linked chain graph of a permutation", [this] {
      auto lcg = linked_chain(parse_permutation(perm_));
      bool semi = check_canonical_semi(lcg);
      std::string text = format_graph(lcg.graph) + "bag A : " + join(lcg.a) + "\nbag B : " + join(lcg.b) + "\nbag C : " +
                         join(lcg.c) + "\n";
      json j = graph_json(lcg.graph);
      j["a"] = lcg.a;
      j["b"] = lcg.b;
      j["c"] = lcg.c;
      j["canonical_semi"] = semi;
      return Result{text, j};
    });
    lc->add_option("--perm", perm_, "Linking permutation")->required();

    auto* ap = leaf(g, "apgrid", "Monochromatic product of arithmetic progressions", [this] {
      Colouring c = parse_colouring(read_input(colouring_path_));
      int k = k_ > 0 ? k_ : c.k;
      auto w = ap_grid_search(c, k);
      if (!w) return Result{"no monochromatic progression grid\n", {{"found", false}}, kNegative};
      return Result{"X " + join(w->x) + "\nY " + join(w->y) + "\ncolour " + w->colour + "\n",
                    {{"found", true}, {"x", w->x}, {"y", w->y}, {"colour", w->colour}}};
    });
    ap->add_option("--colouring", colouring_path_, "Colouring file")->required();
    ap->add_option("--k", k_, "Progression length (defaults to the file header)");
  }

  // ---- LOH -----------------------------------------------------------------

  Result loh_result(const Loh& h) { return {format_loh(h), {{"loh", format_loh(h)}}}; }

  void register_loh() {
    auto* g = group("loh", "Locally ordered hypergraphs");
    auto loh_opt = [this](CLI::App* a) { a->add_option("--loh", loh_path_, "LOH file")->required(); };

    auto* v = leaf(g, "validate", "Check local consistency", [this] {
      Loh h = load_loh();
      Result r = loh_result(h);
      r.text = "valid\n";
      r.data["valid"] = true;
      return r;
    });
    loh_opt(v);

    auto* c = leaf(g, "cells", "Cells of the hypergraph", [this] {
      Loh h = load_loh();
      Result out;
      out.data["cells"] = json::array();
      for (const auto& cell : cells(h)) {
        std::vector<std::string> names;
        for (int x : cell) names.push_back(h.element(x));
        std::string line;
        for (const auto& n : names) line += (line.empty() ? "" : " ") + n;
        out.text += "cell " + line + "\n";
        out.data["cells"].push_back(names);
      }
      return out;
    });
    loh_opt(c);

    auto* con = leaf(g, "consistent", "Global consistency", [this] {
      Loh h = load_loh();
      auto r = is_globally_consistent(h);
      auto names = [&](const std::vector<int>& xs) {
        std::vector<std::string> out;
        for (int x : xs) out.push_back(h.element(x));
        return out;
      };
      auto line = [](const std::vector<std::string>& xs) {
        std::string s;
        for (const auto& x : xs) s += (s.empty() ? "" : " ") + x;
        return s;
      };
      if (!r.order)
        return Result{"inconsistent, cycle " + line(names(r.cycle)) + "\n", {{"consistent", false}, {"cycle", names(r.cycle)}}, kNegative};
      return Result{"order " + line(names(*r.order)) + "\n", {{"consistent", true}, {"order", names(*r.order)}}};
    });
    loh_opt(con);

    auto* sp = leaf(g, "split", "Split at an element", [this] {
      Loh h = load_loh();
      int x = h.find(element_);
      if (!x) throw InputError("unknown element " + element_);
      return loh_result(split(h, x));
    });
    loh_opt(sp);
    sp->add_option("--element", element_, "Element name")->required();

    auto* inc = leaf(g, "inconsistency", "Least number of splits to reach consistency", [this] {
      auto r = global_inconsistency(load_loh(), max_depth_, budget());
      if (!r.exact)
        return Result{"inconsistency >= " + std::to_string(r.value) + " (search limit reached)\n",
                      {{"lower", r.value}, {"exact", false}}, kBudget};
      return Result{"inconsistency " + std::to_string(r.value) + "\n", {{"inconsistency", r.value}, {"exact", true}}};
    });
    loh_opt(inc);
    inc->add_option("--max-depth", max_depth_, "Deepest split count to explore");

    auto* fc = leaf(g, "fromcc", "LOH of a chain circuit", [this] { return loh_result(from_chain_circuit(load_circuit())); });
    fc->add_option("--circuit", circuit_path_, "Circuit file")->required();
  }

  // ---- plots ---------------------------------------------------------------

  Result svg_result(const std::string& svg) {
    if (!out_path_.empty()) {
      std::ofstream out(out_path_);
      if (!out) throw InputError("cannot write " + out_path_);
      out << svg;
      return {"wrote " + out_path_ + "\n", {{"path", out_path_}}};
    }
    return {svg, {{"svg", svg}}};
  }

  void register_plot() {
    auto* g = group("plot", "SVG figures");
    auto* p = leaf(g, "perm", "Plot of a permutation", [this] { return svg_result(permutation_svg(parse_permutation(perm_))); });
    p->add_option("--perm", perm_, "Permutation")->required();
    p->add_option("--out", out_path_, "Output file");

    auto* gr = leaf(g, "gridding", "Plot of a monotone gridding", [this] {
      auto pi = parse_permutation(perm_);
      GridMatrix m = load_matrix();
      auto r = monotone_gridding(pi, m);
      if (!r) return Result{"not griddable\n", {{"griddable", false}}, kNegative};
      return svg_result(gridding_svg(pi, m, *r));
    });
    gr->add_option("--perm", perm_, "Permutation")->required();
    gr->add_option("--matrix", matrix_path_, "Matrix file")->required();
    gr->add_option("--out", out_path_, "Output file");
  }

  CLI::App app_;
  std::function<Result()> handler_;
  bool json_ = false;
  std::optional<std::uint64_t> budget_steps_;
  std::uint64_t seed_ = 1;
  std::string graph_path_, decoder_path_, matrix_path_, circuit_path_, loh_path_, cert_path_, colouring_path_, out_path_;
  std::string word_, word_file_, perm_, other_, mode_ = "direct", level_, element_;
  int k_ = 0, l_ = 0, n_ = 0, max_depth_ = -1;
};

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  return cli.run(argc, argv);
}
