#include "artin/cli.hpp"
#include "artin/complexes.hpp"
#include "artin/error.hpp"
#include "artin/shelling.hpp"
#include "artin/tits.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <map>
#include <sstream>

namespace artin::cli {

using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string preset;
  std::string file;
  std::string format = "json";
  std::size_t cap = kDefaultCap;
  double tol = kDefaultTolerance;
  std::string ball;
  std::string word, left, right, subset, divisor, complex, input, order;
  std::string side = "left";
  std::optional<std::size_t> length;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Context {
public:
  Context(Options &o, std::ostream &out) : opts(o), out_(out) {}

  Options &opts;

  bool has_diagram() const { return !opts.preset.empty() || !opts.file.empty(); }

  const CoxeterDiagram &diagram() {
    if (!diagram_) {
      if (opts.preset.empty() == opts.file.empty())
        throw UsageError("exactly one of --preset or --file is required");
      diagram_ = opts.preset.empty() ? parse_diagram_json(read_file(opts.file))
                                     : preset(opts.preset);
    }
    return *diagram_;
  }

  Limits limits() const {
    Limits l;
    l.closure_cap = opts.cap;
    l.ball_cap = opts.cap;
    return l;
  }

  std::optional<std::size_t> ball() const {
    if (opts.ball.empty() || opts.ball == "all")
      return std::nullopt;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(opts.ball, &pos);
    } catch (const std::exception &) {
      pos = 0;
    }
    if (pos != opts.ball.size())
      throw UsageError("--ball takes a non-negative integer or 'all'");
    return v;
  }

  VertexSet subset_or_all() {
    return opts.subset.empty() ? diagram().all() : diagram().parse_subset(opts.subset);
  }

  std::string names(const Word &w) { return diagram().format_word(w); }

  std::vector<std::string> set_names(VertexSet t) { return diagram().subset_names(t); }

  void emit(const ordered_json &j, const std::string &text) {
    if (opts.format == "json")
      out_ << j.dump(2) << '\n';
    else if (opts.format == "text")
      out_ << text << (text.empty() || text.back() != '\n' ? "\n" : "");
    else
      throw UsageError("--format dot is only available for posets");
  }

  void emit_dot(const ordered_json &j, const std::string &text, const std::string &dot) {
    if (opts.format == "dot")
      out_ << dot;
    else
      emit(j, text);
  }

private:
  std::ostream &out_;
  std::optional<CoxeterDiagram> diagram_;
};

std::string brace(const std::vector<std::string> &names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i)
    out += (i ? "," : "") + names[i];
  return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

ordered_json components_json(Context &c, const std::vector<ComponentReport> &comps) {
  ordered_json arr = ordered_json::array();
  for (const auto &comp : comps) {
    ordered_json j;
    j["vertices"] = c.set_names(comp.vertices);
    if (comp.type) {
      j["type"] = comp.type->name();
      std::vector<std::string> witness;
      for (Gen g : comp.type->positions)
        witness.push_back(c.diagram().name(g));
      j["witness"] = witness;
    } else {
      j["type"] = nullptr;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string components_text(Context &c, const std::vector<ComponentReport> &comps) {
  std::string out;
  for (const auto &comp : comps)
    out += "  " + brace(c.set_names(comp.vertices)) + ": " +
           (comp.type ? comp.type->name() : std::string("not spherical")) + "\n";
  return out;
}

std::string matrix_text(const Matrix &m) {
  std::ostringstream ss;
  ss << std::setprecision(12);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      ss << (j ? " " : "") << m(i, j);
    ss << '\n';
  }
  return ss.str();
}

ordered_json matrix_json(const Matrix &m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Side parse_side(const std::string &s) {
  if (s == "left")
    return Side::left;
  if (s == "right")
    return Side::right;
  throw UsageError("--side must be 'left' or 'right'");
}

std::string require(const std::string &value, const std::string &flag) {
  if (value.empty())
    throw UsageError(flag + " is required");
  return value;
}

std::string status_name(AxiomCheck::Status s) {
  switch (s) {
  case AxiomCheck::Status::pass:
    return "pass";
  case AxiomCheck::Status::fail:
    return "fail";
  default:
    return "not applicable";
  }
}

ordered_json group_json(Context &c, const ArtinGroup &g, const GroupElement &e) {
  return {{"k", e.k}, {"a", c.names(e.a.word)}, {"text", g.format(e)}};
}

SimplicialComplex complex_for(Context &c, Execution exec = Execution::parallel) {
  if (!c.opts.input.empty()) {
    auto j = nlohmann::json::parse(read_file(c.opts.input), nullptr, false);
    if (j.is_discarded() || !j.contains("facets"))
      throw UsageError("--input must be JSON with a \"facets\" array");
    auto facets = j.at("facets").get<std::vector<Simplex>>();
    std::size_t n = 0;
    for (const auto &f : facets)
      for (auto v : f)
        n = std::max(n, v + 1);
    if (j.contains("vertices"))
      n = std::max(n, j.at("vertices").get<std::size_t>());
    return SimplicialComplex(n, std::move(facets));
  }
  const std::string kind = require(c.opts.complex, "--complex (or --input)");
  if (kind == "deligne-fd")
    return order_complex(deligne_fundamental_domain(c.diagram()));
  CoxeterGroup g(c.diagram(), c.limits());
  if (kind == "salvetti")
    return order_complex(salvetti_poset(g, c.ball(), exec));
  if (kind == "davis")
    return order_complex(davis_poset(g, c.ball(), exec));
  throw UsageError("--complex must be salvetti, davis or deligne-fd");
}

void emit_poset(Context &c, const Poset &p) {
  ordered_json j = p.to_json();
  j["partial_order"] = p.is_partial_order();
  SimplicialComplex oc = order_complex(p);
  j["order_complex"] = oc.to_json();
  std::string text = p.kind + " poset, " + std::to_string(p.size()) + " elements" +
                     (p.ball ? ", ball " + std::to_string(*p.ball) : std::string()) + "\n";
  for (const auto &l : p.labels())
    text += "  " + l + "\n";
  c.emit_dot(j, text, p.to_dot());
}

struct Chambers {
  ChamberComplex cc;
  std::optional<IndexFunction> index;
  std::optional<std::vector<std::size_t>> order;
};

Chambers chambers_for(Context &c) {
  Chambers out;
  if (!c.opts.input.empty()) {
    auto j = nlohmann::json::parse(read_file(c.opts.input), nullptr, false);
    if (j.is_discarded())
      throw UsageError("--input is not valid JSON");
    out.cc = parse_chamber_complex(j);
    if (j.contains("index"))
      out.index = IndexFunction{j.at("index").get<std::vector<std::size_t>>()};
    if (j.contains("order"))
      out.order = j.at("order").get<std::vector<std::size_t>>();
    return out;
  }
  CoxeterGroup g(c.diagram(), c.limits());
  auto cox = coxeter_chamber_complex(g, c.ball());
  out.cc = std::move(cox.complex);
  out.index = std::move(cox.index);
  return out;
}

using Handler = std::function<void(Context &)>;

struct Command {
  std::string name;
  std::string help;
  std::vector<std::string> flags; ///< beyond --format
  Handler handler;
};

std::vector<Command> commands() {
  std::vector<Command> cmds;
  auto add = [&](std::string name, std::string help, std::vector<std::string> flags,
                 Handler h) {
    cmds.push_back({std::move(name), std::move(help), std::move(flags), std::move(h)});
  };
  const std::vector<std::string> src = {"source"};

  add("classify", "finite-type classification with witnesses", src, [](Context &c) {
    auto r = is_finite_type(c.diagram());
    ordered_json j;
    j["finite_type"] = r.finite;
    j["components"] = components_json(c, r.components);
    c.emit(j, "finite type: " + yes_no(r.finite) + "\n" + components_text(c, r.components));
  });

  add("taxonomy", "type predicates", src, [](Context &c) {
    auto r = classify_taxonomy(c.diagram());
    ordered_json j;
    j["finite_type"] = r.finite_type;
    j["fc_type"] = r.fc_type;
    j["two_dimensional"] = r.two_dimensional;
    j["large_type"] = r.large_type;
    j["locally_reducible"] = r.locally_reducible;
    j["free_of_infinity"] = r.free_of_infinity;
    j["almost_spherical"] = r.almost_spherical;
    j["components"] = components_json(c, r.components);
    std::string text;
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it->is_boolean())
        text += it.key() + ": " + yes_no(it->get<bool>()) + "\n";
    c.emit(j, text);
  });

  add("sf", "subsets generating finite parabolic subgroups", src, [](Context &c) {
    auto sf = finite_type_subsets(c.diagram());
    ordered_json list = ordered_json::array();
    std::string text;
    for (VertexSet t : sf) {
      list.push_back(c.set_names(t));
      text += brace(c.set_names(t)) + "\n";
    }
    c.emit({{"count", sf.size()}, {"subsets", list}}, text);
  });

  add("form", "Tits bilinear form", src, [](Context &c) {
    Matrix b = bilinear_form(c.diagram());
    c.emit({{"vertices", c.diagram().vertices()}, {"matrix", matrix_json(b)}}, matrix_text(b));
  });

  add("signature", "signature of the bilinear form", {"source", "tol"}, [](Context &c) {
    auto s = signature(bilinear_form(c.diagram()), c.opts.tol);
    ordered_json j;
    j["positive"] = s.positive;
    j["zero"] = s.zero;
    j["negative"] = s.negative;
    j["tolerance"] = s.tolerance;
    j["positive_definite"] = s.zero == 0 && s.negative == 0;
    j["eigenvalues"] = s.eigenvalues;
    c.emit(j, "(" + std::to_string(s.positive) + ", " + std::to_string(s.zero) + ", " +
                  std::to_string(s.negative) + ")");
  });

  add("rep-check", "verify the reflection representation", {"source", "tol"}, [](Context &c) {
    const double tol = c.opts.tol == kDefaultTolerance ? 1e-9 : c.opts.tol;
    auto r = check_representation(c.diagram(), tol);
    ordered_json gens = ordered_json::array(), pairs = ordered_json::array();
    std::string text;
    for (const auto &g : r.generators) {
      gens.push_back({{"generator", c.diagram().name(g.gen)},
                      {"involution", g.involution},
                      {"negates_root", g.negates_root},
                      {"preserves_form", g.preserves_form}});
    }
    for (const auto &p : r.pairs) {
      ordered_json label = p.label == kInfinity ? ordered_json("inf") : ordered_json(p.label);
      ordered_json order = p.order ? ordered_json(*p.order) : ordered_json(nullptr);
      pairs.push_back({{"s", c.diagram().name(p.s)},
                       {"t", c.diagram().name(p.t)},
                       {"label", label},
                       {"order", order},
                       {"matches", p.matches}});
      text += c.diagram().name(p.s) + " " + c.diagram().name(p.t) + ": label " + label.dump() +
              ", order " + order.dump() + "\n";
    }
    c.emit({{"ok", r.ok}, {"generators", gens}, {"pairs", pairs}},
           text + "ok: " + yes_no(r.ok));
  });

  add("cox-nf", "Coxeter normal form of a word", {"source", "cap", "word"}, [](Context &c) {
    CoxeterGroup g(c.diagram(), c.limits());
    auto e = g.element(c.opts.word);
    c.emit({{"normal_form", c.names(e.word)}, {"length", e.length()}}, c.names(e.word));
  });

  add("enumerate", "elements by length", {"source", "cap", "ball", "subset"}, [](Context &c) {
    CoxeterGroup g(c.diagram(), c.limits());
    auto e = g.enumerate(c.subset_or_all(), c.ball());
    ordered_json elems = ordered_json::array();
    std::string text;
    for (const auto &w : e.flatten()) {
      elems.push_back(c.names(w.word));
      text += c.names(w.word) + "\n";
    }
    c.emit({{"complete", e.complete},
            {"size", e.size()},
            {"profile", e.profile()},
            {"elements", elems}},
           text);
  });

  add("longest", "longest element of a finite parabolic", {"source", "cap", "subset"},
      [](Context &c) {
        CoxeterGroup g(c.diagram(), c.limits());
        auto w = g.longest_element(c.subset_or_all());
        c.emit({{"longest", c.names(w.word)}, {"length", w.length()}}, c.names(w.word));
      });

  add("reflections", "conjugates of generators", {"source", "cap", "ball"}, [](Context &c) {
    CoxeterGroup g(c.diagram(), c.limits());
    auto refl = g.reflections(c.ball());
    ordered_json list = ordered_json::array();
    std::string text;
    for (const auto &r : refl) {
      list.push_back(c.names(r.word));
      text += c.names(r.word) + "\n";
    }
    c.emit({{"count", refl.size()}, {"reflections", list}}, text);
  });

  add("tmin", "minimal coset representative", {"source", "cap", "word", "subset"},
      [](Context &c) {
        CoxeterGroup g(c.diagram(), c.limits());
        auto w = g.t_minimal_representative(g.element(c.opts.word),
                                            c.diagram().parse_subset(c.opts.subset));
        c.emit({{"representative", c.names(w.word)}, {"length", w.length()}}, c.names(w.word));
      });

  add("coxeter-elements", "products of all generators in every order", {"source", "cap"},
      [](Context &c) {
        CoxeterGroup g(c.diagram(), c.limits());
        auto els = g.coxeter_elements();
        ordered_json list = ordered_json::array();
        std::string text;
        for (const auto &e : els) {
          list.push_back(c.names(e.word));
          text += c.names(e.word) + "\n";
        }
        c.emit({{"count", els.size()}, {"elements", list}}, text);
      });

  add("mon-nf", "canonical positive word", {"source", "cap", "word"}, [](Context &c) {
    ArtinMonoid m(c.diagram(), c.limits());
    Word w = c.diagram().parse_word(c.opts.word);
    auto closure = m.relation_closure(w);
    c.emit({{"canonical", c.names(closure.front())},
            {"length", w.size()},
            {"closure_size", closure.size()}},
           c.names(closure.front()));
  });

  add("mon-equal", "equality in the positive monoid", {"source", "cap", "left", "right"},
      [](Context &c) {
        ArtinMonoid m(c.diagram(), c.limits());
        bool eq = m.equal(c.diagram().parse_word(c.opts.left),
                          c.diagram().parse_word(c.opts.right));
        c.emit({{"equal", eq}}, eq ? "true" : "false");
      });

  add("divides", "divisibility test", {"source", "cap", "side", "divisor", "word"},
      [](Context &c) {
        ArtinMonoid m(c.diagram(), c.limits());
        auto r = m.divides(parse_side(c.opts.side), m.element(c.opts.divisor),
                           m.element(c.opts.word));
        ordered_json cof = r ? ordered_json(c.names(r->word)) : ordered_json(nullptr);
        c.emit({{"divides", r.has_value()}, {"cofactor", cof}},
               r ? "true, cofactor " + c.names(r->word) : "false");
      });

  add("gcd", "greatest common divisor", {"source", "cap", "side", "left", "right"},
      [](Context &c) {
        ArtinMonoid m(c.diagram(), c.limits());
        auto g = m.gcd(m.element(c.opts.left), m.element(c.opts.right), parse_side(c.opts.side));
        c.emit({{"gcd", c.names(g.word)}}, c.names(g.word));
      });

  add("lcm", "least common multiple", {"source", "cap", "side", "left", "right", "length"},
      [](Context &c) {
        ArtinMonoid m(c.diagram(), c.limits(), c.opts.length.value_or(16));
        auto r = m.lcm(m.element(c.opts.left), m.element(c.opts.right), parse_side(c.opts.side));
        ordered_json l = r.lcm ? ordered_json(c.names(r.lcm->word)) : ordered_json(nullptr);
        c.emit({{"lcm", l}, {"length_bound", r.length_bound}},
               r.lcm ? c.names(r.lcm->word)
                     : "none within length " + std::to_string(r.length_bound));
      });

  add("delta", "Garside element", {"source", "cap", "subset"}, [](Context &c) {
    ArtinMonoid m(c.diagram(), c.limits());
    auto d = m.garside_element(c.subset_or_all());
    c.emit({{"delta", c.names(d.word)}, {"length", d.length()}}, c.names(d.word));
  });

  add("sigma", "conjugation by the Garside element", {"source", "cap"}, [](Context &c) {
    ArtinMonoid m(c.diagram(), c.limits());
    auto sigma = m.garside_permutation();
    ordered_json map = ordered_json::object();
    std::string text;
    for (Gen s = 0; s < sigma.size(); ++s) {
      map[c.diagram().name(s)] = c.diagram().name(sigma[s]);
      text += c.diagram().name(s) + " -> " + c.diagram().name(sigma[s]) + "\n";
    }
    c.emit({{"sigma", map}}, text);
  });

  add("garside-nf", "Garside normal form", {"source", "cap", "word"}, [](Context &c) {
    ArtinMonoid m(c.diagram(), c.limits());
    auto nf = m.garside_normal_form(m.element(c.opts.word));
    ordered_json blocks = ordered_json::array();
    std::string text;
    for (VertexSet t : nf.blocks) {
      blocks.push_back(c.set_names(t));
      text += (text.empty() ? "" : " ") + std::string("Delta") + brace(c.set_names(t));
    }
    c.emit({{"blocks", blocks}, {"text", text}}, text.empty() ? "e" : text);
  });

  add("axioms", "check the Garside monoid axioms up to a length", {"source", "cap", "length"},
      [](Context &c) {
        ArtinMonoid m(c.diagram(), c.limits());
        auto r = m.verify_garside_axioms(c.opts.length.value_or(4));
        ordered_json checks = ordered_json::array();
        std::string text;
        for (const auto &ch : r.checks) {
          checks.push_back(
              {{"axiom", ch.axiom}, {"status", status_name(ch.status)}, {"detail", ch.detail}});
          text += ch.axiom + ": " + status_name(ch.status) +
                  (ch.detail.empty() ? "" : " (" + ch.detail + ")") + "\n";
        }
        ordered_json j;
        j["length_cap"] = r.length_cap;
        j["elements_checked"] = r.elements_checked;
        j["delta_divisors"] =
            r.delta_divisors ? ordered_json(*r.delta_divisors) : ordered_json(nullptr);
        j["checks"] = checks;
        j["all_applicable_pass"] = r.all_applicable_pass();
        c.emit(j, text);
      });

  add("grp-nf", "group normal form Delta^k a", {"source", "cap", "word"}, [](Context &c) {
    ArtinGroup g(c.diagram(), c.limits());
    auto e = g.from_text(c.opts.word);
    c.emit(group_json(c, g, e), g.format(e));
  });

  add("grp-equal", "equality in the Artin group", {"source", "cap", "left", "right"},
      [](Context &c) {
        ArtinGroup g(c.diagram(), c.limits());
        bool eq = g.equal(g.from_text(c.opts.left), g.from_text(c.opts.right));
        c.emit({{"equal", eq}}, eq ? "true" : "false");
      });

  add("fraction", "reduced left fraction a^-1 b", {"source", "cap", "word"}, [](Context &c) {
    ArtinGroup g(c.diagram(), c.limits());
    auto f = g.fraction_decomposition(g.from_text(c.opts.word));
    c.emit({{"a", c.names(f.a.word)}, {"b", c.names(f.b.word)}},
           "(" + c.names(f.a.word) + ")^-1 (" + c.names(f.b.word) + ")");
  });

  add("section", "canonical lift of a Coxeter element", {"source", "cap", "word"},
      [](Context &c) {
        ArtinGroup g(c.diagram(), c.limits());
        auto e = g.canonical_section(g.coxeter().element(c.opts.word));
        c.emit(group_json(c, g, e), g.format(e));
      });

  add("project", "image in the Coxeter group", {"source", "cap", "word"}, [](Context &c) {
    ArtinGroup g(c.diagram(), c.limits());
    auto e = g.from_text(c.opts.word);
    auto w = g.project(e);
    c.emit({{"image", c.names(w.word)}, {"pure", w.is_identity()}}, c.names(w.word));
  });

  add("salvetti", "Salvetti poset", {"source", "cap", "ball"}, [](Context &c) {
    CoxeterGroup g(c.diagram(), c.limits());
    emit_poset(c, salvetti_poset(g, c.ball()));
  });

  add("davis", "Davis poset of cosets", {"source", "cap", "ball"}, [](Context &c) {
    CoxeterGroup g(c.diagram(), c.limits());
    emit_poset(c, davis_poset(g, c.ball()));
  });

  add("deligne-fd", "fundamental domain of the Deligne complex", src,
      [](Context &c) { emit_poset(c, deligne_fundamental_domain(c.diagram())); });

  add("homology", "integer homology of an order complex or a facet list",
      {"optsource", "cap", "ball", "complex", "input"}, [](Context &c) {
        auto h = homology(complex_for(c));
        c.emit(h.to_json(), h.to_string());
      });

  add("quotient-cells", "cell counts of the Salvetti quotient", src, [](Context &c) {
    auto q = salvetti_quotient_cells(c.diagram());
    c.emit({{"f_vector", q.f_vector}, {"euler_characteristic", q.euler_characteristic}},
           "f = " + ordered_json(q.f_vector).dump() +
               ", chi = " + std::to_string(q.euler_characteristic));
  });

  add("abelianization", "H_1 of the Artin group", src, [](Context &c) {
    auto a = abelianization(c.diagram());
    ordered_json torsion = ordered_json::array();
    for (const auto &t : a.torsion)
      torsion.push_back(t.str());
    c.emit({{"rank", a.betti}, {"torsion", torsion}, {"text", a.to_string()}}, a.to_string());
  });

  add("shelling-check", "filtration claims for a union of chambers",
      {"optsource", "cap", "ball", "input"}, [](Context &c) {
        auto ch = chambers_for(c);
        if (!ch.index)
          throw UsageError("chamber input needs an \"index\" array");
        auto r = verify_claims(ch.cc, *ch.index);
        std::string text = "claim A: " + std::string(r.claim_a ? "pass" : "fail") +
                           "\nclaim B: " + (r.claim_b ? "pass" : "fail") +
                           "\nconclusion: " + r.conclusion.value_or("none");
        c.emit(r.to_json(), text);
      });

  add("is-shelling", "test a total order of chambers", {"optsource", "cap", "ball", "input", "order"},
      [](Context &c) {
        auto ch = chambers_for(c);
        std::vector<std::size_t> order;
        if (!c.opts.order.empty()) {
          std::istringstream in(c.opts.order);
          std::string tok;
          while (in >> tok)
            order.push_back(std::stoul(tok));
        } else if (ch.order) {
          order = *ch.order;
        } else if (ch.index) {
          // Sort by index, ties by chamber number: a linear extension.
          order.resize(ch.cc.chambers.size());
          std::iota(order.begin(), order.end(), std::size_t{0});
          std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return ch.index->values[a] < ch.index->values[b];
          });
        } else {
          order.resize(ch.cc.chambers.size());
          std::iota(order.begin(), order.end(), std::size_t{0});
        }
        auto r = is_shelling(ch.cc, order);
        c.emit(r.to_json(), r.ok ? "true" : "false at position " + std::to_string(*r.position) +
                                                ": " + r.violation->reason);
      });

  return cmds;
}

void add_flags(CLI::App *sub, const std::vector<std::string> &flags, Options &o) {
  for (const auto &f : flags) {
    if (f == "source" || f == "optsource") {
      auto *p = sub->add_option("--preset", o.preset, "named diagram, e.g. A3, B2, I2(5), Atilde2");
      auto *fl = sub->add_option("--file", o.file, "diagram JSON file");
      p->excludes(fl);
    } else if (f == "cap") {
      sub->add_option("--cap", o.cap, "closure and enumeration guard")->capture_default_str();
    } else if (f == "tol") {
      sub->add_option("--tol", o.tol, "numerical tolerance")->capture_default_str();
    } else if (f == "ball") {
      sub->add_option("--ball", o.ball, "length bound for infinite groups, or 'all'");
    } else if (f == "word") {
      sub->add_option("--word", o.word, "space-separated generators")->required();
    } else if (f == "left") {
      sub->add_option("--left", o.left, "first word")->required();
    } else if (f == "right") {
      sub->add_option("--right", o.right, "second word")->required();
    } else if (f == "subset") {
      sub->add_option("--subset", o.subset, "generator subset, e.g. \"s,t\"");
    } else if (f == "side") {
      sub->add_option("--side", o.side, "left or right")->capture_default_str();
    } else if (f == "divisor") {
      sub->add_option("--divisor", o.divisor, "candidate divisor")->required();
    } else if (f == "length") {
      sub->add_option("--length", o.length, "length cap");
    } else if (f == "complex") {
      sub->add_option("--complex", o.complex, "salvetti, davis or deligne-fd");
    } else if (f == "input") {
      sub->add_option("--input", o.input, "JSON input file");
    } else if (f == "order") {
      sub->add_option("--order", o.order, "space-separated chamber order");
    }
  }
}

} // namespace

std::vector<std::string> subcommands() {
  std::vector<std::string> out;
  for (const auto &c : commands())
    out.push_back(c.name);
  return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options opts;
  if (const char *env = std::getenv("ARTIN_CAP")) {
    try {
      opts.cap = std::stoull(env);
    } catch (const std::exception &) {
      err << "error: ARTIN_CAP must be a positive integer\n";
      return 2;
    }
  }

  CLI::App app{"Coxeter and Artin group combinatorics", "artin"};
  bool version = false;
  app.add_flag("--version", version, "print library and output format version");
  app.require_subcommand(0, 1);

  auto cmds = commands();
  std::map<CLI::App *, const Command *> by_app;
  for (const auto &cmd : cmds) {
    auto *sub = app.add_subcommand(cmd.name, cmd.help);
    add_flags(sub, cmd.flags, opts);
    sub->add_option("--format", opts.format, "json, text or dot")
        ->check(CLI::IsMember({"json", "text", "dot"}))
        ->capture_default_str();
    by_app[sub] = &cmd;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (version) {
    out << "artin " << kVersion << " (output format " << kFormatVersion << ")\n";
    return 0;
  }
  const auto chosen = app.get_subcommands();
  if (chosen.empty()) {
    err << app.help();
    return 2;
  }
  const Command &cmd = *by_app.at(chosen.front());
  Context ctx(opts, out);
  try {
    cmd.handler(ctx);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n' << chosen.front()->help();
    return 2;
  } catch (const Error &e) {
    err << "error [" << e.module() << "]: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception &e) {
    err << "error [cli]: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument &e) {
    err << "usage error: malformed number (" << e.what() << ")\n";
    return 2;
  }
  return 0;
}

} // namespace artin::cli
