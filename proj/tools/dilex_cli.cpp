#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "dilex/exp_dilator.hpp"
#include "dilex/extension.hpp"
#include "dilex/normal_f.hpp"
#include "dilex/order.hpp"
#include "dilex/ordinal.hpp"
#include "dilex/ordinal_expr.hpp"
#include "dilex/praedilator.hpp"
#include "dilex/wf.hpp"

namespace {

using dilex::Ordinal;
using dilex::Order;
using dilex::PraeDilator;
using dilex::Term;
using json = nlohmann::json;

PraeDilator dilator_by_name(const std::string& name) {
  if (name == "F") return dilex::F_build();
  if (name == "E") return dilex::E_build();
  if (name == "FoE") return dilex::compose_dilators(dilex::F_build(), dilex::E_build());
  return dilex::zoo(name);
}

// Order specs: fin(k), ordinal(expr), lift(S), pow2(S), lexsq(S),
// ext(NAME,S), revnat.
Order parse_order_spec(const std::string& spec) {
  if (spec == "revnat") return dilex::make_reverse_naturals();
  auto open = spec.find('(');
  if (open == std::string::npos || spec.back() != ')') {
    throw std::invalid_argument("malformed order spec: " + spec);
  }
  std::string head = spec.substr(0, open);
  std::string body = spec.substr(open + 1, spec.size() - open - 2);
  if (head == "fin") return dilex::make_fin(std::stoul(body));
  if (head == "ordinal") return dilex::make_ordinal_order(dilex::parse_ordinal(body));
  if (head == "lift") return dilex::make_lift(parse_order_spec(body));
  if (head == "pow2") return dilex::make_pow2(parse_order_spec(body));
  if (head == "lexsq") return dilex::make_lex_square(parse_order_spec(body));
  if (head == "ext") {
    auto comma = body.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("ext spec needs a dilator and an order");
    return dilex::ext_order(dilator_by_name(body.substr(0, comma)),
                            parse_order_spec(body.substr(comma + 1)));
  }
  throw std::invalid_argument("unknown order spec: " + spec);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0, depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

// Turns an ordinal expression into an element term of X (finite orders
// take naturals, ordinal orders take CNF terms).
Term element_from_expr(const Order& X, const std::string& expr) {
  Ordinal a = dilex::parse_ordinal(expr);
  Term as_nat = a.is_finite() ? Term::nat(a.finite_value()) : Term();
  if (a.is_finite() && X.contains(as_nat)) return as_nat;
  Term as_ord = dilex::ord_to_term(a);
  if (X.contains(as_ord)) return as_ord;
  throw std::invalid_argument("element " + expr + " is not in " + X.name());
}

struct Output {
  bool as_json = false;
  json doc;
  std::string text;

  void emit() const {
    if (as_json) {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << text << "\n";
    }
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Ordinal arithmetic, normal dilators, and derivative embeddings"};
  app.require_subcommand(1);
  bool as_json = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", as_json, "emit a single JSON document");
  app.add_option("--seed", seed, "seed for randomized searches");

  std::string expr_a, expr_b;
  auto* c_eval = app.add_subcommand("eval", "normalize an ordinal expression");
  c_eval->add_option("expr", expr_a)->required();
  auto* c_cmp = app.add_subcommand("cmp", "compare two ordinal expressions");
  c_cmp->add_option("lhs", expr_a)->required();
  c_cmp->add_option("rhs", expr_b)->required();
  auto* c_f = app.add_subcommand("f", "evaluate the normal function f");
  c_f->add_option("expr", expr_a)->required();
  auto* c_g = app.add_subcommand("g", "evaluate the normal function g");
  c_g->add_option("expr", expr_a)->required();
  auto* c_fp = app.add_subcommand("fprime", "evaluate the derivative of f");
  c_fp->add_option("expr", expr_a)->required();
  auto* c_gp = app.add_subcommand("gprime", "evaluate the derivative of g");
  c_gp->add_option("expr", expr_a)->required();

  std::string fix_fn = "f", fix_below;
  std::size_t fix_count = 5;
  auto* c_fix = app.add_subcommand("fix", "enumerate fixed points below a bound");
  c_fix->add_option("--fn", fix_fn)->check(CLI::IsMember({"f", "g"}));
  c_fix->add_option("--below", fix_below)->required();
  c_fix->add_option("--count", fix_count);

  std::string dil_name;
  std::size_t dil_size = 4, dil_elems = 50;
  auto* c_check = app.add_subcommand("dil-check", "run the prae-dilator validators");
  c_check->add_option("name", dil_name)->required();
  c_check->add_option("--size", dil_size, "largest finite order checked");
  c_check->add_option("--elems", dil_elems, "element bound per order");

  std::string order_spec;
  std::size_t ext_count = 20;
  auto* c_extend = app.add_subcommand("dil-extend", "enumerate D^T(X)");
  c_extend->add_option("name", dil_name)->required();
  c_extend->add_option("--order", order_spec)->required();
  c_extend->add_option("--count", ext_count);

  std::string seq_text;
  auto* c_j = app.add_subcommand("embed-j", "apply the 2^X embedding J");
  c_j->add_option("--order", order_spec)->required();
  c_j->add_option("--seq", seq_text, "comma-separated, strictly descending; empty for <>");

  std::size_t wf_budget = 20;
  std::string wf_strategy = "greedy";
  auto* c_wf = app.add_subcommand("wf-search", "bounded descending-chain search");
  c_wf->add_option("--order", order_spec)->required();
  c_wf->add_option("--budget", wf_budget);
  c_wf->add_option("--strategy", wf_strategy)->check(CLI::IsMember({"greedy", "random"}));

  std::size_t t0_size = 3, t0_count = 10;
  auto* c_t0 = app.add_subcommand("export-T0", "serialize T(n) prefixes as (n, code) records");
  c_t0->add_option("name", dil_name)->required();
  c_t0->add_option("--size", t0_size);
  c_t0->add_option("--count", t0_count);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out;
  out.as_json = as_json;
  out.doc["witnesses"] = json::array();

  try {
    if (c_eval->parsed()) {
      Ordinal a = dilex::parse_ordinal(expr_a);
      out.doc["command"] = "eval";
      out.doc["inputs"] = {{"expr", expr_a}};
      out.text = dilex::to_string(a);
      out.doc["result"] = out.text;
    } else if (c_cmp->parsed()) {
      Ordinal a = dilex::parse_ordinal(expr_a);
      Ordinal b = dilex::parse_ordinal(expr_b);
      auto c = dilex::cmp(a, b);
      out.doc["command"] = "cmp";
      out.doc["inputs"] = {{"lhs", expr_a}, {"rhs", expr_b}};
      out.text = c == std::strong_ordering::less      ? "<"
                 : c == std::strong_ordering::greater ? ">"
                                                      : "=";
      out.doc["result"] = out.text;
    } else if (c_f->parsed() || c_g->parsed() || c_fp->parsed() || c_gp->parsed()) {
      Ordinal a = dilex::parse_ordinal(expr_a);
      Ordinal r;
      std::string cmd;
      if (c_f->parsed()) {
        r = dilex::f_eval(a);
        cmd = "f";
      } else if (c_g->parsed()) {
        r = dilex::g_eval(a);
        cmd = "g";
      } else if (c_fp->parsed()) {
        r = dilex::f_derivative(a);
        cmd = "fprime";
      } else {
        r = dilex::g_derivative(a);
        cmd = "gprime";
      }
      out.doc["command"] = cmd;
      out.doc["inputs"] = {{"expr", expr_a}};
      out.text = dilex::to_string(r);
      out.doc["result"] = out.text;
    } else if (c_fix->parsed()) {
      Ordinal bound = dilex::parse_ordinal(fix_below);
      auto deriv = fix_fn == "f" ? dilex::f_derivative : dilex::g_derivative;
      std::vector<std::string> found;
      // The k smallest fixed points are the derivative at 0, 1, 2, ...
      for (std::uint64_t n = 0; found.size() < fix_count; ++n) {
        Ordinal fp = deriv(Ordinal(n));
        if (!(dilex::cmp(fp, bound) == std::strong_ordering::less)) break;
        found.push_back(dilex::to_string(fp));
      }
      out.doc["command"] = "fix";
      out.doc["inputs"] = {{"fn", fix_fn}, {"below", fix_below}, {"count", fix_count}};
      out.doc["result"] = found;
      for (std::size_t i = 0; i < found.size(); ++i) {
        out.text += (i ? "\n" : "") + found[i];
      }
      if (found.empty()) out.text = "(none)";
    } else if (c_check->parsed()) {
      PraeDilator T = dilator_by_name(dil_name);
      auto report = dilex::validate_praedilator(T, dil_size, dil_elems);
      out.doc["command"] = "dil-check";
      out.doc["inputs"] = {{"name", dil_name}, {"size", dil_size}, {"elems", dil_elems}};
      out.text = "prae-dilator: " + report.summary();
      bool ok = report.ok();
      for (const auto& fail : report.failures) {
        out.doc["witnesses"].push_back({{"law", fail.law}, {"witness", fail.witness}});
      }
      if (T.normal) {
        auto normal = dilex::validate_normal(T, dil_size, dil_elems);
        out.text += "\nnormality: " + normal.summary();
        ok = ok && normal.ok();
        for (const auto& fail : normal.failures) {
          out.doc["witnesses"].push_back({{"law", fail.law}, {"witness", fail.witness}});
        }
      } else {
        out.text += "\nnormality: no data";
      }
      out.doc["result"] = ok ? "pass" : "fail";
      out.emit();
      return ok ? 0 : 1;
    } else if (c_extend->parsed()) {
      PraeDilator T = dilator_by_name(dil_name);
      Order X = parse_order_spec(order_spec);
      Order ext = dilex::ext_order(T, X);
      out.doc["command"] = "dil-extend";
      out.doc["inputs"] = {{"name", dil_name}, {"order", order_spec}, {"count", ext_count}};
      json items = json::array();
      for (const Term& e : ext.first(ext_count)) {
        json item = {{"element", ext.print(e)}};
        if (auto d = ext.denote(e)) item["denotes"] = dilex::to_string(*d);
        items.push_back(item);
        out.text += (out.text.empty() ? "" : "\n") + ext.print(e);
        if (auto d = ext.denote(e)) out.text += "  = " + dilex::to_string(*d);
      }
      if (auto n = ext.size()) out.doc["size"] = *n;
      out.doc["result"] = items;
    } else if (c_j->parsed()) {
      Order X = parse_order_spec(order_spec);
      std::vector<Term> seq;
      if (!seq_text.empty()) {
        for (const std::string& piece : split_commas(seq_text)) {
          seq.push_back(element_from_expr(X, piece));
        }
      }
      auto G = dilex::xi_build();
      Term j = dilex::J_embed(X, G, seq);
      Order target = dilex::ext_order(G.S, X);
      out.doc["command"] = "embed-j";
      out.doc["inputs"] = {{"order", order_spec}, {"seq", seq_text}};
      out.text = target.print(j);
      out.doc["result"] = out.text;
      if (auto d = target.denote(j)) {
        out.doc["denotes"] = dilex::to_string(*d);
        out.text += "  = " + dilex::to_string(*d);
      }
    } else if (c_wf->parsed()) {
      Order X = parse_order_spec(order_spec);
      auto strategy = wf_strategy == "greedy" ? dilex::SearchStrategy::greedy_min_above
                                              : dilex::SearchStrategy::random;
      auto chain = dilex::descending_search(X, wf_budget, strategy, seed);
      out.doc["command"] = "wf-search";
      out.doc["inputs"] = {{"order", order_spec},
                           {"budget", wf_budget},
                           {"strategy", wf_strategy},
                           {"seed", seed}};
      if (chain) {
        out.doc["result"] = "chain";
        out.text = "descending chain of length " + std::to_string(chain->elements.size()) + ":";
        for (const Term& e : chain->elements) {
          out.doc["witnesses"].push_back(X.print(e));
          out.text += "\n  " + X.print(e);
        }
      } else {
        out.doc["result"] = "none";
        out.text = "no descending chain found within budget " + std::to_string(wf_budget);
      }
    } else if (c_t0->parsed()) {
      PraeDilator T = dilator_by_name(dil_name);
      out.doc["command"] = "export-T0";
      out.doc["inputs"] = {{"name", dil_name}, {"size", t0_size}, {"count", t0_count}};
      json records = json::array();
      for (std::size_t n = 0; n <= t0_size; ++n) {
        for (const Term& sigma : T.at(n).first(t0_count)) {
          std::string rec = "(" + std::to_string(n) + ", " + sigma.repr() + ")";
          records.push_back(rec);
          out.text += (out.text.empty() ? "" : "\n") + rec;
        }
      }
      out.doc["result"] = records;
    }
  } catch (const std::exception& e) {
    if (as_json) {
      json err = {{"error", e.what()}};
      std::cout << err.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }

  out.emit();
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
