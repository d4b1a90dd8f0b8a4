#include "knotforge/census.hpp"
#include "knotforge/finitetype.hpp"
#include "knotforge/invariants.hpp"
#include "knotforge/moves.hpp"
#include "knotforge/notation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace knotforge;

namespace {

enum ExitCode {
  kOk = 0,
  kParseError = 1,
  kUnknownInvariant = 2,
  kCertificate = 3,
  kBudget = 4,
  kNotPlanar = 5,
};

struct InputOpts {
  std::string pd, gauss, braid, json_text, file;
};

struct NotPlanarInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every subcommand takes diagrams through here; parse is not special.
Diagram checked(Diagram d) {
  auto problems = validate(d, false);
  if (!problems.empty()) {
    std::string msg = "invalid diagram:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw DiagramError(msg);
  }
  if (!planarity_check(d)) throw NotPlanarInput("diagram is not planar");
  return d;
}

void add_input_opts(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("--pd", in.pd, "diagram in bracket notation");
  cmd->add_option("--gauss", in.gauss, "diagram as signed Gauss code");
  cmd->add_option("--braid", in.braid, "closure of 's=K w=[..]'");
  cmd->add_option("--diagram-json", in.json_text, "diagram as JSON");
  cmd->add_option("--file", in.file, "read the diagram text from a file");
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

Diagram load_diagram(const InputOpts& in) {
  std::string pd = in.pd, gauss = in.gauss, braid = in.braid,
              json_text = in.json_text;
  if (!in.file.empty()) {
    std::string text = slurp(in.file);
    // Files hold one diagram in any notation; sniff the leading token.
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw std::runtime_error("empty file");
    if (text[i] == '{') json_text = text;
    else if (text[i] == 's') braid = text;
    else if (text[i] == 'O' || text[i] == 'U') gauss = text;
    else pd = text;
  }
  int given = !pd.empty() + !gauss.empty() + !braid.empty() + !json_text.empty();
  if (given != 1)
    throw std::runtime_error(
        "give exactly one of --pd/--gauss/--braid/--diagram-json");
  if (!pd.empty()) return checked(parse_pd(pd));
  if (!gauss.empty()) return checked(parse_gauss(gauss));
  if (!json_text.empty()) return checked(parse_diagram_json(json_text));
  BraidWord w = parse_braid(braid);
  return checked(braid_closure(w.strands, w.letters));
}

long env_budget() {
  if (const char* v = std::getenv("KNOTFORGE_BUDGET")) {
    char* end = nullptr;
    long b = std::strtol(v, &end, 10);
    if (end && *end == '\0' && b > 0) return b;
  }
  return 200000;
}

std::vector<Diagram> load_corpus(bool use_census, const std::string& corpus_file,
                                 const InputOpts& in) {
  std::vector<Diagram> v;
  if (use_census) v = census_diagrams();
  if (!corpus_file.empty()) {
    std::ifstream f(corpus_file);
    if (!f) throw std::runtime_error("cannot read " + corpus_file);
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
      ++lineno;
      size_t i = line.find_first_not_of(" \t");
      if (i == std::string::npos || line[i] == '#') continue;
      std::string where = corpus_file + ":" + std::to_string(lineno) + ": ";
      try {
        v.push_back(checked(parse_pd(line)));
      } catch (const NotPlanarInput& e) {
        throw NotPlanarInput(where + e.what());
      } catch (const std::exception& e) {
        throw DiagramError(where + e.what());
      }
    }
  }
  if (!in.pd.empty() || !in.gauss.empty() || !in.braid.empty() ||
      !in.json_text.empty() || !in.file.empty())
    v.push_back(load_diagram(in));
  if (v.empty()) throw std::runtime_error("empty corpus");
  return v;
}

TwistRegion parse_strand_list(const std::string& text) {
  // "3:+,7:-,3:-"
  TwistRegion r;
  size_t i = 0;
  while (i < text.size()) {
    size_t colon = text.find(':', i);
    if (colon == std::string::npos)
      throw std::runtime_error("strand list entry needs arc:dir");
    int arc = std::stoi(text.substr(i, colon - i));
    if (colon + 1 >= text.size())
      throw std::runtime_error("missing direction");
    char c = text[colon + 1];
    if (c != '+' && c != '-') throw std::runtime_error("direction must be + or -");
    r.strands.push_back({arc, c == '+' ? +1 : -1});
    i = colon + 2;
    if (i < text.size()) {
      if (text[i] != ',') throw std::runtime_error("expected ','");
      ++i;
    }
  }
  if (r.strands.empty()) throw std::runtime_error("empty strand list");
  return r;
}

void write_out(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(out_path);
    f << text << "\n";
  }
}

int probe_exit(const ProbeReport& rep) {
  if (rep.status == "certificate") return kCertificate;
  if (rep.status == "budget_exhausted") return kBudget;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knot diagram toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("knotforge ") + kVersion);

  // parse
  auto* cmd_parse = app.add_subcommand("parse", "parse, validate and reprint");
  InputOpts parse_in;
  add_input_opts(cmd_parse, parse_in);
  std::string parse_emit = "pd";
  cmd_parse->add_option("--emit", parse_emit, "pd | gauss | json")
      ->check(CLI::IsMember({"pd", "gauss", "json"}));

  // invariant
  auto* cmd_inv = app.add_subcommand("invariant", "evaluate an invariant");
  InputOpts inv_in;
  add_input_opts(cmd_inv, inv_in);
  std::string inv_name;
  bool inv_json = false;
  cmd_inv->add_option("--name", inv_name, "invariant name")->required();
  cmd_inv->add_flag("--json", inv_json, "emit JSON");

  // probe ft / probe nq
  auto* cmd_probe = app.add_subcommand("probe", "vanishing probes");
  cmd_probe->require_subcommand(1);
  auto* cmd_ft = cmd_probe->add_subcommand("ft", "switch-sum probe");
  auto* cmd_nq = cmd_probe->add_subcommand("nq", "twist-sum probe");
  struct ProbeCli {
    InputOpts in;
    std::string invariant, out, corpus_file;
    bool use_census = false;
    ProbeOptions opt;
  } ft, nq;
  ft.opt.budget = nq.opt.budget = env_budget();
  for (auto [cmd, p] : {std::pair{cmd_ft, &ft}, std::pair{cmd_nq, &nq}}) {
    add_input_opts(cmd, p->in);
    cmd->add_option("--invariant", p->invariant)->required();
    cmd->add_option("--order", p->opt.order)->check(CLI::Range(0, 8));
    cmd->add_flag("--census", p->use_census, "probe the census corpus");
    cmd->add_option("--corpus", p->corpus_file, "file with one PD per line");
    cmd->add_option("--budget", p->opt.budget, "max invariant evaluations");
    cmd->add_option("--out", p->out, "write the JSON report here");
  }
  cmd_nq->add_option("--n", nq.opt.n, "full twists per region");
  cmd_nq->add_option("--q", nq.opt.q, "required linking magnitude");
  cmd_nq->add_flag("--strict-q", nq.opt.strict, "require q_j == q exactly");
  cmd_nq->add_option("--max-strands", nq.opt.max_strands)->check(CLI::Range(2, 6));
  cmd_nq->add_option("--max-collections", nq.opt.max_collections);

  // twist
  auto* cmd_twist = app.add_subcommand("twist", "insert full twists");
  InputOpts twist_in;
  add_input_opts(cmd_twist, twist_in);
  std::string twist_strands;
  int twist_n = 1;
  bool twist_json = false;
  cmd_twist->add_option("--strands", twist_strands, "arc:dir list, e.g. 2:+,5:-")
      ->required();
  cmd_twist->add_option("--n", twist_n, "number of full twists")->required();
  cmd_twist->add_flag("--json", twist_json, "emit JSON");

  // csum
  auto* cmd_csum = app.add_subcommand("csum", "connected sum");
  std::string csum_a, csum_b;
  int csum_arc_a = 1, csum_arc_b = 1;
  bool csum_json = false;
  cmd_csum->add_option("--a", csum_a, "first diagram (PD)")->required();
  cmd_csum->add_option("--b", csum_b, "second diagram (PD)")->required();
  cmd_csum->add_option("--arc-a", csum_arc_a, "splice arc in the first");
  cmd_csum->add_option("--arc-b", csum_arc_b, "splice arc in the second");
  cmd_csum->add_flag("--json", csum_json, "emit JSON");

  // census
  auto* cmd_census = app.add_subcommand("census", "list the knot table");
  bool census_verify = false, census_json = false;
  cmd_census->add_flag("--verify", census_verify,
                       "recompute cached invariants and compare");
  cmd_census->add_flag("--json", census_json, "emit JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_parse) {
      Diagram r = renumber(load_diagram(parse_in));
      if (parse_emit == "pd") std::cout << emit_pd(r) << "\n";
      else if (parse_emit == "gauss") std::cout << emit_gauss(r) << "\n";
      else std::cout << emit_diagram_json(r) << "\n";
      return kOk;
    }

    if (*cmd_inv) {
      Invariant f;
      try {
        f = lookup_invariant(inv_name);
      } catch (const UnknownInvariant& e) {
        std::cerr << e.what() << "\n";
        return kUnknownInvariant;
      }
      Diagram d = load_diagram(inv_in);
      InvariantValue v = f.eval(d);
      if (inv_json) {
        nlohmann::json j;
        j["invariant"] = inv_name;
        j["kind"] = v.kind();
        j["value"] = v.to_text();
        j["diagram"] = emit_pd(renumber(d));
        std::cout << j.dump() << "\n";
      } else {
        std::cout << v.to_text() << "\n";
      }
      return kOk;
    }

    if (*cmd_ft) {
      auto corpus = load_corpus(ft.use_census, ft.corpus_file, ft.in);
      ProbeReport rep = probe_finite_type(ft.invariant, corpus, ft.opt);
      write_out(ft.out, rep.to_json());
      return probe_exit(rep);
    }
    if (*cmd_nq) {
      auto corpus = load_corpus(nq.use_census, nq.corpus_file, nq.in);
      ProbeReport rep = probe_nq_finite(nq.invariant, corpus, nq.opt);
      write_out(nq.out, rep.to_json());
      return probe_exit(rep);
    }

    if (*cmd_twist) {
      Diagram d = load_diagram(twist_in);
      TwistRegion r = parse_strand_list(twist_strands);
      Diagram out;
      try {
        out = insert_full_twists(d, r, twist_n);
      } catch (const DiagramError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kNotPlanar;
      }
      if (twist_json) {
        nlohmann::json j;
        j["diagram"] = emit_pd(out);
        j["q"] = r.q();
        j["crossings_added"] =
            int(out.crossings.size() - d.crossings.size());
        std::cout << j.dump() << "\n";
      } else {
        std::cout << emit_pd(out) << "\n";
      }
      return kOk;
    }

    if (*cmd_csum) {
      Diagram a = checked(parse_pd(csum_a)), b = checked(parse_pd(csum_b));
      Diagram out = connected_sum(a, csum_arc_a, b, csum_arc_b);
      if (csum_json) {
        nlohmann::json j;
        j["diagram"] = emit_pd(out);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << emit_pd(out) << "\n";
      }
      return kOk;
    }

    if (*cmd_census) {
      bool all_ok = true;
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& e : census()) {
        nlohmann::json row;
        row["name"] = e.name;
        if (!e.word.empty()) {
          row["strands"] = e.strands;
          row["word"] = e.word;
        } else {
          row["sum_of"] = {e.summand_a, e.summand_b};
        }
        row["pd"] = emit_pd(e.diagram);
        nlohmann::json vals;
        for (const auto& [inv, want] : e.expected) {
          vals[inv] = want;
          if (census_verify) {
            std::string got = lookup_invariant(inv).eval(e.diagram).to_text();
            if (got != want) {
              all_ok = false;
              row["mismatch"][inv] = got;
            }
          }
        }
        row["invariants"] = vals;
        rows.push_back(row);
      }
      if (census_json) {
        nlohmann::json j;
        j["census"] = rows;
        if (census_verify) j["verified"] = all_ok;
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& row : rows) {
          std::cout << row["name"].get<std::string>() << "  "
                    << row["pd"].get<std::string>();
          if (row.contains("mismatch")) std::cout << "  MISMATCH";
          std::cout << "\n";
        }
        if (census_verify)
          std::cout << (all_ok ? "verify: ok" : "verify: FAILED") << "\n";
      }
      return all_ok ? kOk : kParseError;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const NotPlanarInput& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kNotPlanar;
  } catch (const UnknownInvariant& e) {
    std::cerr << e.what() << "\n";
    return kUnknownInvariant;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}
