#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>

#include "glpwb/dproduct.hpp"
#include "glpwb/glp.hpp"
#include "glpwb/jlogic.hpp"
#include "glpwb/reduction.hpp"
#include "glpwb/worm.hpp"
#include "json_io.hpp"

namespace glpwb {

namespace {

using io::json;

const char* cmp_name(OrdCompare c) {
  switch (c) {
    case OrdCompare::LT:
      return "LT";
    case OrdCompare::EQ:
      return "EQ";
    default:
      return "GT";
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(), e.byte);
  }
}

class Cli {
 public:
  Cli(std::ostream& out) : out_(out) {}

  int run(const std::vector<std::string>& args, std::ostream& err) {
    CLI::App app{"Symbolic workbench for transfinite provability logic", "glpwb"};
    app.add_flag("--json", json_, "Emit JSON instead of plain text");
    app.require_subcommand(1);
    define(app);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e, out_, err);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e, out_, err);
    } catch (const CLI::ParseError& e) {
      app.exit(e, out_, err);
      return 2;
    }
    try {
      action_();
      return 0;
    } catch (const ParseError& e) {
      err << "parse error: " << e.what() << "\n";
      return 2;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
  }

 private:
  CLI::App* sub(CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  }

  void on(CLI::App* s, std::function<void()> fn) {
    s->callback([this, fn = std::move(fn)] { action_ = fn; });
  }

  void emit(const std::string& command, const json& result, const std::string& text) {
    if (json_)
      out_ << json{{"command", command}, {"result", result}}.dump(2) << "\n";
    else
      out_ << text << "\n";
  }

  void emit_ordinal(const std::string& command, const Ordinal& o) {
    emit(command, io::to_json(o), render(o));
  }

  void define(CLI::App& app) {
    define_ord(app);
    define_simple(app);
    define_topo(app);
    define_worm(app);
    define_reductions(app);
    define_dprod(app);
    define_eval(app);
    define_j(app);
  }

  void define_ord(CLI::App& app) {
    CLI::App* ord = sub(&app, "ord", "Ordinal notation arithmetic");
    ord->require_subcommand(1);

    CLI::App* s = sub(ord, "eval", "Print the canonical form");
    s->add_option("x", a_)->required();
    on(s, [this] { emit_ordinal("ord eval", parse_ordinal(a_)); });

    s = sub(ord, "cmp", "Compare two ordinals");
    s->add_option("a", a_)->required();
    s->add_option("b", b_)->required();
    on(s, [this] {
      const char* c = cmp_name(compare(parse_ordinal(a_), parse_ordinal(b_)));
      emit("ord cmp", c, c);
    });

    s = sub(ord, "add", "a+b");
    s->add_option("a", a_)->required();
    s->add_option("b", b_)->required();
    on(s, [this] { emit_ordinal("ord add", add(parse_ordinal(a_), parse_ordinal(b_))); });

    s = sub(ord, "sub", "The eta with a+eta=b");
    s->add_option("a", a_)->required();
    s->add_option("b", b_)->required();
    on(s, [this] {
      emit_ordinal("ord sub", left_subtract(parse_ordinal(a_), parse_ordinal(b_)));
    });

    s = sub(ord, "mul", "a*b");
    s->add_option("a", a_)->required();
    s->add_option("b", b_)->required();
    on(s, [this] { emit_ordinal("ord mul", mul(parse_ordinal(a_), parse_ordinal(b_))); });

    s = sub(ord, "log", "Hyperlogarithm l^xi(x)");
    s->add_option("--xi", xi_, "Iteration index")->default_val("1");
    s->add_option("x", a_)->required();
    on(s, [this] { emit_ordinal("ord log", hyper_log(parse_ordinal(xi_), parse_ordinal(a_))); });

    s = sub(ord, "exp", "Hyperexponential e^xi(x)");
    s->add_option("--xi", xi_, "Iteration index")->default_val("1");
    s->add_option("x", a_)->required();
    on(s, [this] { emit_ordinal("ord exp", hyper_exp(parse_ordinal(xi_), parse_ordinal(a_))); });

    s = sub(ord, "fseq", "n-th element of the fundamental sequence");
    s->add_option("x", a_)->required();
    s->add_option("n", n_)->required();
    on(s, [this] { emit_ordinal("ord fseq", fund_seq(parse_ordinal(a_), n_)); });

    s = sub(ord, "stab", "Stabilization point of l^t(xi) below a limit");
    s->add_option("Lambda", a_)->required();
    s->add_option("xi", b_)->required();
    on(s, [this] {
      const Stabilization st = stabilization(parse_ordinal(a_), parse_ordinal(b_));
      emit("ord stab", json{{"lambda", render(st.lambda)}, {"value", render(st.value)}},
           "lambda: " + render(st.lambda) + "\nvalue: " + render(st.value));
    });
  }

  void define_simple(CLI::App& app) {
    CLI::App* simple = sub(&app, "simple", "Simple functions");
    simple->require_subcommand(1);

    CLI::App* s = sub(simple, "ceil", "Least ordinal bounding r");
    s->add_option("r", a_)->required();
    on(s, [this] { emit_ordinal("simple ceil", ceil(parse_simple_function(a_))); });

    s = sub(simple, "ceil-strict", "Least ordinal strictly bounding r");
    s->add_option("r", a_)->required();
    on(s, [this] { emit_ordinal("simple ceil-strict", ceil_strict(parse_simple_function(a_))); });

    s = sub(simple, "join", "Pointwise maximum");
    s->add_option("r", a_)->required();
    s->add_option("s", b_)->required();
    on(s, [this] {
      const SimpleFunction j = join(parse_simple_function(a_), parse_simple_function(b_));
      emit("simple join", io::to_json(j), render(j));
    });

    s = sub(simple, "bounded", "Whether r is bounded by alpha");
    s->add_option("r", a_)->required();
    s->add_option("alpha", b_)->required();
    s->add_flag("--strict", strict_, "Strict bound at the maximal index");
    on(s, [this] {
      const bool r = bounded_by(parse_simple_function(a_), parse_ordinal(b_), strict_);
      emit("simple bounded", r, r ? "true" : "false");
    });
  }

  void define_topo(CLI::App& app) {
    CLI::App* topo = sub(&app, "topo", "Icard topologies and simple sets");
    topo->require_subcommand(1);

    CLI::App* s = sub(topo, "dset", "Derived set at subscript lambda");
    s->add_option("--theta", theta_, "Ambient bound")->required();
    s->add_option("--lambda", lambda_, "Subscript")->required();
    s->add_option("set", a_)->required();
    on(s, [this] {
      const Ordinal theta = parse_ordinal(theta_);
      const SimpleSet d = derived_set(parse_simple_set(a_, theta), parse_ordinal(lambda_));
      emit("topo dset", io::to_json(d), render(d));
    });

    s = sub(topo, "member", "Membership of a point");
    s->add_option("--theta", theta_, "Ambient bound")->required();
    s->add_option("set", a_)->required();
    s->add_option("point", b_)->required();
    on(s, [this] {
      const Ordinal theta = parse_ordinal(theta_);
      const bool r = member(parse_ordinal(b_), parse_simple_set(a_, theta));
      emit("topo member", r, r ? "true" : "false");
    });

    s = sub(topo, "witness", "Least point of a simple set");
    s->add_option("--theta", theta_, "Ambient bound")->required();
    s->add_option("set", a_)->required();
    on(s, [this] {
      const std::optional<Ordinal> w = witness(parse_simple_set(a_, parse_ordinal(theta_)));
      emit("topo witness", w ? json(render(*w)) : json(nullptr), w ? render(*w) : "empty");
    });

    s = sub(topo, "rank", "Rank in the xi-th Icard topology");
    s->add_option("--xi", xi_, "Topology index")->required();
    s->add_option("point", a_)->required();
    on(s, [this] { emit_ordinal("topo rank", rank(parse_ordinal(a_), parse_ordinal(xi_))); });
  }

  void define_worm(CLI::App& app) {
    CLI::App* worm = sub(&app, "worm", "Worms and their order types");
    worm->require_subcommand(1);

    CLI::App* s = sub(worm, "otype", "Order type");
    s->add_option("w", a_)->required();
    on(s, [this] { emit_ordinal("worm otype", order_type(parse_worm(a_))); });

    s = sub(worm, "cmp", "Compare by order type");
    s->add_option("v", a_)->required();
    s->add_option("w", b_)->required();
    on(s, [this] {
      const char* c = cmp_name(worm_compare(parse_worm(a_), parse_worm(b_)));
      emit("worm cmp", c, c);
    });
  }

  void define_reductions(CLI::App& app) {
    CLI::App* s = sub(&app, "rmap", "Reductive map r^theta_lambda");
    s->add_option("--theta", theta_, "Theta")->required();
    s->add_option("--lambda", lambda_, "Lambda")->required();
    s->add_option("x", a_)->required();
    on(s, [this] {
      const Ordinal theta = parse_ordinal(theta_);
      const Ordinal lambda = parse_ordinal(lambda_);
      const Ordinal x = parse_ordinal(a_);
      if (is_infinite_indecomposable(lambda)) {
        const ReductionResult r = reductive_map_traced(ReductionContext(theta, lambda), x);
        emit("rmap", io::to_json(r), render(r.value));
      } else {
        const Ordinal v = reductive_map_general(theta, lambda, x);
        emit("rmap", json{{"value", render(v)}, {"trace", json::array()}}, render(v));
      }
    });

    s = sub(&app, "nindex", "Diagonal index N^theta_lambda");
    s->add_option("--theta", theta_, "Theta")->required();
    s->add_option("--lambda", lambda_, "Lambda")->required();
    s->add_option("x", a_)->required();
    on(s, [this] {
      const std::uint64_t n =
          n_index(ReductionContext(parse_ordinal(theta_), parse_ordinal(lambda_)), parse_ordinal(a_));
      emit("nindex", n, std::to_string(n));
    });
  }

  void define_dprod(CLI::App& app) {
    CLI::App* d = sub(&app, "dprod", "d-product bookkeeping");
    d->add_option("--xi", xi_, "Xi")->required();
    d->add_option("--theta", theta_, "Theta")->required();
    d->require_subcommand(1);
    auto ctx = [this] { return DProductContext(parse_ordinal(xi_), parse_ordinal(theta_)); };

    CLI::App* s = sub(d, "bound", "-1+(1+xi)(1+theta)");
    on(s, [this, ctx] { emit_ordinal("dprod bound", ctx().bound); });

    s = sub(d, "component", "G0 or G1");
    s->add_option("x", a_)->required();
    on(s, [this, ctx] {
      const char* c = component(ctx(), parse_ordinal(a_)) == Component::G1 ? "G1" : "G0";
      emit("dprod component", c, c);
    });

    s = sub(d, "pi0", "First projection");
    s->add_option("x", a_)->required();
    on(s, [this, ctx] { emit_ordinal("dprod pi0", pi0(ctx(), parse_ordinal(a_))); });

    s = sub(d, "pi1", "Second projection");
    s->add_option("x", a_)->required();
    on(s, [this, ctx] { emit_ordinal("dprod pi1", pi1(ctx(), parse_ordinal(a_))); });
  }

  void define_eval(CLI::App& app) {
    CLI::App* s = sub(&app, "eval", "Evaluate a closed formula on an Icard space");
    s->add_option("--theta", theta_, "Ambient bound")->required();
    s->add_flag("--shifted", shifted_, "Read <l> at subscript 1+l");
    s->add_option("formula", a_)->required();
    on(s, [this] {
      const Ordinal theta = parse_ordinal(theta_);
      const FormulaPtr f = parse_formula(a_);
      const SimpleSet v = eval_closed(f, theta, shifted_);
      const std::optional<Ordinal> w = witness(v);
      const bool valid = is_empty(complement(v));
      json j{{"set", io::to_json(v)},
             {"witness", w ? json(render(*w)) : json(nullptr)},
             {"valid", valid}};
      std::string text = render(v) + "\nwitness: " + (w ? render(*w) : "none") +
                         "\nvalid: " + (valid ? "true" : "false");
      emit("eval", j, text);
    });
  }

  void define_j(CLI::App& app) {
    CLI::App* jc = sub(&app, "j", "Kripke frames for J");
    jc->require_subcommand(1);

    CLI::App* s = sub(jc, "validate", "List J-frame condition violations");
    s->add_option("file", a_, "Frame or model JSON")->required();
    on(s, [this] {
      const JModel m = io::model_from_json(read_json_file(a_));
      const std::vector<std::string> v = validate_j_frame(m.frame);
      std::string text = v.empty() ? "valid" : "";
      for (const std::string& line : v) text += (text.empty() ? "" : "\n") + line;
      emit("j validate", json{{"valid", v.empty()}, {"violations", v}}, text);
    });

    s = sub(jc, "treelike", "Whether a J-frame is tree-like");
    s->add_option("file", a_, "Frame or model JSON")->required();
    on(s, [this] {
      const bool r = is_treelike(io::model_from_json(read_json_file(a_)).frame);
      emit("j treelike", r, r ? "true" : "false");
    });

    s = sub(jc, "check", "Model-check a formula at a world");
    s->add_option("--model", model_, "Model JSON")->required();
    s->add_option("--world", world_, "World name")->required();
    s->add_option("formula", a_)->required();
    on(s, [this] {
      const JModel m = io::model_from_json(read_json_file(model_));
      const bool r = model_check(m, io::world_index(m.frame, world_), parse_formula(a_));
      emit("j check", r, r ? "true" : "false");
    });

    s = sub(jc, "sat", "Bounded search for a tree-like J-model");
    s->add_option("--max-worlds", max_worlds_, "World bound")->default_val(6);
    s->add_flag("--mplus", mplus_, "Search for M+(phi) & phi instead of phi");
    s->add_option("formula", a_)->required();
    on(s, [this] {
      FormulaPtr f = parse_formula(a_);
      const Condensed c = condense(f);
      bool natural = true;
      for (const Ordinal& o : c.index_map) natural = natural && o.is_finite();
      json index_map = json::array();
      if (!natural) {
        f = c.formula;
        for (const Ordinal& o : c.index_map) index_map.push_back(render(o));
      }
      if (mplus_) f = conj(m_plus(f), f);
      const std::optional<SatResult> r = bounded_sat(f, max_worlds_);
      if (!r) {
        emit("j sat", json{{"status", "unknown"}, {"index_map", index_map}},
             "unknown: no model with at most " + std::to_string(max_worlds_) + " worlds");
        return;
      }
      json j{{"status", "sat"},
             {"world", r->model.frame.worlds[r->world]},
             {"model", io::to_json(r->model)},
             {"index_map", index_map}};
      emit("j sat", j, "sat at " + r->model.frame.worlds[r->world] + "\n" +
                           io::to_json(r->model).dump());
    });
  }

  std::ostream& out_;
  std::function<void()> action_ = [] {};
  bool json_ = false;
  bool strict_ = false;
  bool shifted_ = false;
  bool mplus_ = false;
  std::string a_, b_, xi_, theta_, lambda_, model_, world_;
  std::uint64_t n_ = 0;
  std::size_t max_worlds_ = 6;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Cli(out).run(args, err);
}

}  // namespace glpwb
