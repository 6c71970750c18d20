// Command-line front end: parses algebra presentations and runs the
// analyses. Exit codes: 0 success, 1 parse/usage error, 2 identity
// counterexample (validate), 3 not simple, 4 inconclusive (simple).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "leibniz/chains.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/parse.hpp"
#include "leibniz/report.hpp"

namespace {

using namespace leibniz;

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
};

struct ExitWithCode {
  int code;
};

int emit_error(const Options& opt, const std::string& kind,
               const std::string& message, int code = 1) {
  if (opt.json) {
    Json err{{"error", Json{{"kind", kind}, {"message", message}}},
             {"tool", Json{{"name", kToolName}, {"version", kToolVersion}}}};
    std::cout << err.dump(2) << "\n";
  } else {
    std::cerr << "error (" << kind << "): " << message << "\n";
  }
  return code;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

LeibnizAlgebra load_algebra(const std::string& path, const Options& opt) {
  const std::string text = read_input(path);
  ParseOutcome outcome = parse_algebra(text);
  if (!outcome.ok())
    throw ExitWithCode{emit_error(opt, "parse", outcome.error->to_string())};
  return *outcome.algebra;
}

std::string dims_to_text(const std::vector<Index>& dims) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < dims.size(); ++i) out << (i ? "," : "") << dims[i];
  out << "]";
  return out.str();
}

std::string subspace_to_text(const Subspace& s) {
  std::ostringstream out;
  out << "dim " << s.dim();
  if (s.dim() > 0) {
    out << ", basis rows:";
    for (Index r = 0; r < s.dim(); ++r) {
      out << " (";
      for (Index c = 0; c < s.ambient_dim(); ++c)
        out << (c ? "," : "") << to_fraction_string(s.basis()(r, c));
      out << ")";
    }
  }
  return out.str();
}

int cmd_validate(const std::string& file, bool lemma17, const Options& opt) {
  LeibnizAlgebra g = load_algebra(file, opt);
  const VerifyReport report = verify_leibniz(
      g, lemma17 ? VerifyMode::SquareShortcut : VerifyMode::Full);
  if (opt.json) {
    Json out = make_report(g);
    out["results"]["validate"] = to_json(report);
    std::cout << out.dump(2) << "\n";
  } else {
    if (report.ok) {
      std::cout << "ok: the table satisfies the bracket identity\n";
      if (report.fell_back_to_full)
        std::cout << "note: square-shortcut precondition failed; ran the full scan\n";
    } else {
      const auto& t = *report.counterexample;
      std::cout << "counterexample at basis triple (e" << t[0] + 1 << ",e"
                << t[1] + 1 << ",e" << t[2] + 1 << ")\n";
    }
  }
  return report.ok ? 0 : 2;
}

int cmd_analyze(const std::string& file, const Options& opt) {
  LeibnizAlgebra g = load_algebra(file, opt);
  const Classification cls = classify(g);
  const SeriesReport ds = derived_series(g);
  const SeriesReport lc = lower_central_series(g);
  const AnchoredSubspace zl = center(g, CenterSide::Left);
  const AnchoredSubspace zr = center(g, CenterSide::Right);
  const AnchoredSubspace zb = center(g, CenterSide::Both);
  const AnchoredSubspace leib = leibniz_kernel(g);
  const LeibnizAlgebra lie = liezation(g);

  if (opt.json) {
    Json out = make_report(g);
    auto& res = out["results"];
    res["classification"] = to_json(cls);
    res["derived_series"] = to_json(ds);
    res["lower_central_series"] = to_json(lc);
    res["left_center"] = to_json(zl.space);
    res["right_center"] = to_json(zr.space);
    res["center"] = to_json(zb.space);
    res["square_kernel"] = to_json(leib.space);
    res["liezation_dim"] = lie.dim();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "algebra " << g.name() << " (dim " << g.dim() << ")\n";
    std::cout << "derived series dims: " << dims_to_text(ds.dims) << "\n";
    std::cout << "lower central dims:  " << dims_to_text(lc.dims) << "\n";
    std::cout << "abelian: " << (cls.abelian ? "yes" : "no") << "\n";
    std::cout << "nilpotent: " << (cls.nilpotent ? "yes" : "no");
    if (cls.nilpotency_class) std::cout << " (class " << *cls.nilpotency_class << ")";
    std::cout << "\n";
    std::cout << "solvable: " << (cls.solvable ? "yes" : "no");
    if (cls.derived_length) std::cout << " (derived length " << *cls.derived_length << ")";
    std::cout << "\n";
    std::cout << "left center:  " << subspace_to_text(zl.space) << "\n";
    std::cout << "right center: " << subspace_to_text(zr.space) << "\n";
    std::cout << "center:       " << subspace_to_text(zb.space) << "\n";
    std::cout << "square kernel: " << subspace_to_text(leib.space) << "\n";
    std::cout << "liezation dim: " << lie.dim() << "\n";
  }
  return 0;
}

int cmd_ideal(const std::string& file, const std::string& span_spec,
              const Options& opt) {
  LeibnizAlgebra g = load_algebra(file, opt);
  const auto vectors = parse_vector_list(span_spec, g.dim());
  const AnchoredSubspace s = anchored(g, Subspace::span(vectors, g.dim()));
  const bool left = is_ideal(g, s, Side::Left);
  const bool right = is_ideal(g, s, Side::Right);
  const bool two_sided = left && right;
  const AnchoredSubspace closure = ideal_closure(g, s, Side::TwoSided);
  const bool characteristic = two_sided && is_characteristic(g, s);
  const bool central_characteristic = two_sided && is_central_characteristic(g, s);

  if (opt.json) {
    Json out = make_report(g);
    auto& res = out["results"];
    res["span"] = to_json(s.space);
    res["is_left_ideal"] = left;
    res["is_right_ideal"] = right;
    res["is_two_sided_ideal"] = two_sided;
    res["closure"] = to_json(closure.space);
    if (two_sided) {
      res["is_characteristic"] = characteristic;
      res["is_central_characteristic"] = central_characteristic;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "span: " << subspace_to_text(s.space) << "\n";
    std::cout << "left ideal: " << (left ? "yes" : "no")
              << ", right ideal: " << (right ? "yes" : "no")
              << ", two-sided: " << (two_sided ? "yes" : "no") << "\n";
    std::cout << "two-sided closure: " << subspace_to_text(closure.space) << "\n";
    if (two_sided) {
      std::cout << "characteristic: " << (characteristic ? "yes" : "no") << "\n";
      std::cout << "central characteristic: "
                << (central_characteristic ? "yes" : "no") << "\n";
    }
  }
  return 0;
}

int cmd_derivations(const std::string& file, bool central, const Options& opt) {
  LeibnizAlgebra g = load_algebra(file, opt);
  const DerivationSpace space =
      central ? central_derivation_space(g) : derivation_space(g);
  if (opt.json) {
    Json out = make_report(g);
    auto& res = out["results"];
    res["flavor"] = central ? "central" : "all";
    res["dim"] = space.dim();
    Json basis = Json::array();
    for (const Mat& m : space.basis_matrices()) basis.push_back(to_json(m));
    res["basis"] = basis;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (central ? "central derivations" : "derivations") << ": dim "
              << space.dim() << "\n";
    int index = 0;
    for (const Mat& m : space.basis_matrices()) {
      std::cout << "D" << index++ << ":\n";
      for (Index r = 0; r < m.rows(); ++r) {
        std::cout << "  ";
        for (Index c = 0; c < m.cols(); ++c)
          std::cout << (c ? " " : "") << to_fraction_string(m(r, c));
        std::cout << "\n";
      }
    }
  }
  return 0;
}

int cmd_simple(const std::string& file, const Options& opt) {
  LeibnizAlgebra g = load_algebra(file, opt);
  const SimplicityVerdict verdict = is_simple(g, opt.seed);
  if (opt.json) {
    Json out = make_report(g);
    out["results"]["simple"] = to_json(verdict);
    std::cout << out.dump(2) << "\n";
  } else {
    switch (verdict.kind) {
      case SimplicityVerdict::Kind::Simple:
        std::cout << "simple (" << verdict.note << ")\n";
        break;
      case SimplicityVerdict::Kind::NotSimple:
        std::cout << "not simple (" << verdict.note << ")\n";
        if (verdict.witness)
          std::cout << "witness ideal: " << subspace_to_text(verdict.witness->space)
                    << "\n";
        break;
      default:
        std::cout << "inconclusive (" << verdict.note << ")\n";
    }
  }
  switch (verdict.kind) {
    case SimplicityVerdict::Kind::Simple:
      return 0;
    case SimplicityVerdict::Kind::NotSimple:
      return 3;
    default:
      return 4;
  }
}

int cmd_chain(const std::string& file, const std::string& terms_spec,
              const Options& opt) {
  LeibnizAlgebra g = load_algebra(file, opt);
  std::vector<Subspace> terms;
  {
    std::string current;
    std::vector<std::string> chunks;
    for (char c : terms_spec) {
      if (c == '|') {
        chunks.push_back(current);
        current.clear();
      } else {
        current.push_back(c);
      }
    }
    chunks.push_back(current);
    for (const auto& chunk : chunks)
      terms.push_back(Subspace::span(parse_vector_list(chunk, g.dim()), g.dim()));
  }
  const IdealChain chain = validate_chain(g, terms);
  const auto stab = stabilization_index(chain);
  const ChainWitness witness = quasi_noetherian_witness(chain);
  if (opt.json) {
    Json out = make_report(g);
    auto& res = out["results"];
    res["terms"] = Json::array();
    for (const auto& t : chain.terms) res["terms"].push_back(to_json(t.space));
    res["join"] = to_json(chain.join.space);
    if (stab) res["stabilization_index"] = *stab;
    res["witness"] = to_json(witness);
    res["all_abelian"] = chain_all_abelian(chain);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "chain of " << chain.length() << " ideals, join "
              << subspace_to_text(chain.join.space) << "\n";
    if (stab) std::cout << "stabilization index: " << *stab << "\n";
    std::cout << "witness m_left: "
              << (witness.m_left ? std::to_string(*witness.m_left) : "none")
              << ", m_right: "
              << (witness.m_right ? std::to_string(*witness.m_right) : "none")
              << "\n";
    std::cout << "all terms abelian: " << (chain_all_abelian(chain) ? "yes" : "no")
              << "\n";
  }
  return 0;
}

int cmd_split(const std::string& file, const std::string& i_spec,
              const std::string& j_spec, const Options& opt) {
  LeibnizAlgebra g = load_algebra(file, opt);
  const AnchoredSubspace i =
      anchored(g, Subspace::span(parse_vector_list(i_spec, g.dim()), g.dim()));
  const AnchoredSubspace j =
      anchored(g, Subspace::span(parse_vector_list(j_spec, g.dim()), g.dim()));
  const bool split = is_split_extension(g, i, j);
  Json res_actions = Json::array();
  std::vector<SplitAction> actions;
  if (split) actions = split_extension_action(g, i, j);

  if (opt.json) {
    Json out = make_report(g);
    auto& res = out["results"];
    res["is_split_extension"] = split;
    if (split) {
      for (const auto& a : actions)
        res_actions.push_back(
            Json{{"generator", to_json(a.generator)}, {"action", to_json(a.action)}});
      res["actions"] = res_actions;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "split extension: " << (split ? "yes" : "no") << "\n";
    if (split) {
      for (const auto& a : actions) {
        std::cout << "generator (";
        for (Index c = 0; c < a.generator.size(); ++c)
          std::cout << (c ? "," : "") << to_fraction_string(a.generator[c]);
        std::cout << ") acts on the ideal by:\n";
        for (Index r = 0; r < a.action.rows(); ++r) {
          std::cout << "  ";
          for (Index c = 0; c < a.action.cols(); ++c)
            std::cout << (c ? " " : "") << to_fraction_string(a.action(r, c));
          std::cout << "\n";
        }
      }
    }
  }
  return 0;
}

int cmd_extend(const std::string& file, const std::string& matrix_spec,
               const Options& opt) {
  LeibnizAlgebra g = load_algebra(file, opt);
  const Mat d = parse_matrix_spec(matrix_spec, g.dim());
  const LeibnizAlgebra extended = extend_by_central_derivation(g, d);
  if (opt.json) {
    Json out = make_report(g);
    out["results"]["extended"] = Json{{"dim", extended.dim()},
                                      {"document", emit_algebra(extended)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << emit_algebra(extended);
  }
  return 0;
}

int cmd_family(const std::string& id, Index dim, const Options& opt) {
  LeibnizAlgebra g;
  if (id == "4.9") {
    g = family_4_9();
  } else if (id == "4.10") {
    if (dim < 6)
      return emit_error(opt, "usage", "family 4.10 requires --dim D with D >= 6");
    g = family_4_10_truncated(dim);
  } else {
    return emit_error(opt, "usage", "unknown family id: " + id +
                                        " (available: 4.9, 4.10)");
  }
  std::cout << emit_algebra(g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computational kernel for finite-dimensional Leibniz algebras over Q"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "emit a machine-readable JSON report");
  app.add_option("--seed", opt.seed,
                 "seed for the bounded randomized irreducibility test");
  app.fallthrough();

  std::string file, span_spec, terms_spec, i_spec, j_spec, matrix_spec, family_id;
  bool lemma17 = false, central = false;
  Index family_dim = 0;

  auto* validate = app.add_subcommand("validate", "check the bracket identity");
  validate->add_option("file", file, "algebra document ('-' for stdin)")->required();
  validate->add_flag("--lemma17", lemma17,
                     "square-shortcut mode: precheck square annihilation, then "
                     "scan ordered pairs only");

  auto* analyze = app.add_subcommand("analyze", "series, centers, classification");
  analyze->add_option("file", file)->required();

  auto* ideal = app.add_subcommand("ideal", "ideal tests for a spanned subspace");
  ideal->add_option("file", file)->required();
  ideal->add_option("--span", span_spec, "semicolon-separated vectors")->required();

  auto* derivations = app.add_subcommand("derivations", "derivation space basis");
  derivations->add_option("file", file)->required();
  derivations->add_flag("--central", central, "central derivations only");

  auto* simple = app.add_subcommand("simple", "simplicity classifier");
  simple->add_option("file", file)->required();

  auto* chain = app.add_subcommand("chain", "ascending ideal chain analysis");
  chain->add_option("file", file)->required();
  chain->add_option("--terms", terms_spec,
                    "chain terms separated by '|', each a vector list")
      ->required();

  auto* split = app.add_subcommand("split", "split extension recognition");
  split->add_option("file", file)->required();
  split->add_option("--i", i_spec, "ideal span")->required();
  split->add_option("--j", j_spec, "subalgebra span")->required();

  auto* extend = app.add_subcommand("extend", "extend along a central derivation");
  extend->add_option("file", file)->required();
  extend->add_option("--derivation", matrix_spec, "matrix rows, ';'-separated")
      ->required();

  auto* family = app.add_subcommand("family", "emit a bundled example document");
  family->add_option("id", family_id, "4.9 or 4.10")->required();
  family->add_option("--dim", family_dim, "dimension for family 4.10");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(file, lemma17, opt);
    if (analyze->parsed()) return cmd_analyze(file, opt);
    if (ideal->parsed()) return cmd_ideal(file, span_spec, opt);
    if (derivations->parsed()) return cmd_derivations(file, central, opt);
    if (simple->parsed()) return cmd_simple(file, opt);
    if (chain->parsed()) return cmd_chain(file, terms_spec, opt);
    if (split->parsed()) return cmd_split(file, i_spec, j_spec, opt);
    if (extend->parsed()) return cmd_extend(file, matrix_spec, opt);
    if (family->parsed()) return cmd_family(family_id, family_dim, opt);
  } catch (const ExitWithCode& e) {
    return e.code;
  } catch (const ParseError& e) {
    return emit_error(opt, "parse", e.to_string());
  } catch (const NotAscending& e) {
    return emit_error(opt, "chain", e.what());
  } catch (const NotAnIdeal& e) {
    return emit_error(opt, "ideal", e.what());
  } catch (const NotCentralDerivation& e) {
    return emit_error(opt, "derivation", e.what());
  } catch (const LeibnizViolation& e) {
    return emit_error(opt, "identity", e.what());
  } catch (const NotSplitExtension& e) {
    return emit_error(opt, "split", e.what());
  } catch (const Error& e) {
    return emit_error(opt, "algebra", e.what());
  } catch (const std::exception& e) {
    return emit_error(opt, "usage", e.what());
  }
  return 1;
}
