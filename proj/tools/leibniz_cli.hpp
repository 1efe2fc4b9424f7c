#ifndef LEIBNIZ_TOOLS_LEIBNIZ_CLI_HPP
#define LEIBNIZ_TOOLS_LEIBNIZ_CLI_HPP

// Command-line front end. Exit codes: 0 success/PASS, 1 mathematical FAIL,
// 2 usage, parse or admissibility error.

#include <leibniz/leibniz.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace leibniz::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2 };

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AlgebraTable load_algebra(const std::string& path) {
  try {
    return parse_algebra(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

inline void require_constant_table(const AlgebraTable& t, const std::string& path) {
  if (!t.is_constant())
    throw UsageError(path + ": table '" + t.name() +
                     "' has parameters; run `constraints` to get the conditions for the Leibniz identity");
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

inline Rational rational_option(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("--") + what + " expects a rational like 3 or -7/2, got '" + text + "'");
  }
}

struct Options {
  bool porcelain = false;
};

inline int report_verdict(const Verdict& v, const AlgebraTable& t, const Options& opt, std::ostream& out) {
  if (opt.porcelain) {
    out << "status\t" << to_string(v.status()) << "\n";
    if (const auto& w = v.witness()) {
      if (w->triple) {
        const auto& [i, j, k] = *w->triple;
        out << "triple\t" << t.basis()[i] << "," << t.basis()[j] << "," << t.basis()[k] << "\n";
      }
      if (w->residual) out << "residual\t" << w->residual->to_string(t.basis()) << "\n";
      out << "witness\t" << w->description << "\n";
    }
  } else {
    out << to_string(v.status());
    if (const auto& w = v.witness()) {
      out << ": " << w->description << "\n";
      if (w->residual) out << "residual: " << w->residual->to_string(t.basis()) << "\n";
    } else {
      out << "\n";
    }
  }
  return v.passed() ? kOk : kFail;
}

inline int cmd_check(const std::string& file, const std::string& mode, const Options& opt, std::ostream& out) {
  const AlgebraTable t = load_algebra(file);
  require_constant_table(t, file);
  if (mode == "leibniz") return report_verdict(check_leibniz(t), t, opt, out);
  if (mode == "lie") return report_verdict(check_lie(t), t, opt, out);
  throw UsageError("--mode must be 'leibniz' or 'lie'");
}

struct ConstructArgs {
  std::string id;
  std::vector<std::string> operands;
  unsigned m = 0;
  std::string a = "0", l = "0", mu = "0";
  std::size_t dim = 1;
  bool sl2_r = false;
  bool defects = false;
};

inline AlgebraTable build_named(const ConstructArgs& c) {
  const std::string& id = c.id;
  if (id == "sl2") return make_sl2();
  if (id == "r2") return make_r2();
  if (id == "zero") {
    if (c.dim == 0) throw UsageError("--dim must be positive");
    return make_zero_algebra(c.dim);
  }
  if (id == "theorem2") return make_theorem2_algebra(c.m, rational_option(c.a, "a"));
  if (id == "prefamily") return make_L3_prefamily();
  if (id == "Lfamily")
    return make_L_family(rational_option(c.l, "l"), rational_option(c.mu, "mu"), rational_option(c.a, "a"));
  if (id == "generic") return make_generic_family({c.m, c.defects, c.sl2_r, "a"});
  if (id == "dzhumadildaev")
    return make_dzhumadildaev(make_sl2(), make_V_module(c.m).as_right_module(), "Q_sl2_V" + std::to_string(c.m));
  if (id == "direct-sum") {
    if (c.operands.size() != 2) throw UsageError("direct-sum takes two operands (constructor ids or .alg files)");
    std::vector<AlgebraTable> parts;
    for (const auto& op : c.operands) {
      if (op.size() > 4 && op.substr(op.size() - 4) == ".alg") {
        parts.push_back(load_algebra(op));
      } else {
        ConstructArgs inner = c;
        inner.id = op;
        inner.operands.clear();
        if (op == "direct-sum") throw UsageError("nested direct-sum operands are not supported");
        parts.push_back(build_named(inner));
      }
    }
    return make_direct_sum(parts[0], parts[1]);
  }
  throw UsageError("unknown constructor '" + id +
                   "' (expected sl2, r2, zero, direct-sum, theorem2, prefamily, Lfamily, generic, dzhumadildaev)");
}

inline int cmd_construct(const ConstructArgs& c, std::ostream& out) {
  if (c.id != "direct-sum" && !c.operands.empty()) throw UsageError("'" + c.id + "' takes no positional operands");
  AlgebraTable t;
  try {
    t = build_named(c);
  } catch (const AdmissibilityError& e) {
    throw UsageError(e.what());
  }
  out << serialize_algebra(t);
  return kOk;
}

inline int cmd_ideal(const std::string& file, const Options& opt, std::ostream& out) {
  const AlgebraTable t = load_algebra(file);
  require_constant_table(t, file);
  const Subspace ideal = squares_ideal(t);
  if (opt.porcelain) {
    out << "dim\t" << ideal.rank() << "\n";
    for (const auto& r : ideal.basis_elements()) out << "row\t" << r.to_string(t.basis()) << "\n";
  } else {
    out << "squares ideal of " << t.name() << ": dim " << ideal.rank() << "\n";
    for (const auto& r : ideal.basis_elements()) out << "  " << r.to_string(t.basis()) << "\n";
  }
  return kOk;
}

inline int cmd_quotient(const std::string& file, std::ostream& out) {
  const AlgebraTable t = load_algebra(file);
  require_constant_table(t, file);
  out << serialize_algebra(quotient_algebra(t, squares_ideal(t)).table);
  return kOk;
}

inline int cmd_constraints(const std::string& file, std::ostream& out) {
  const AlgebraTable t = load_algebra(file);
  for (const auto& p : extract_constraints(t)) out << p.to_string(t.params()) << "\n";
  return kOk;
}

inline BasisChange load_change(const std::string& spec, const AlgebraTable& t) {
  if (spec == "identity") return BasisChange::identity(t.dim());
  ChangeDocument doc;
  try {
    doc = parse_change(read_file(spec));
  } catch (const ParseError& e) {
    throw UsageError(spec + ": " + e.what());
  }
  if (doc.basis != t.basis())
    throw UsageError(spec + ": change is written over basis {" + join(doc.basis, ",") + "} but the algebra has {" +
                     join(t.basis(), ",") + "}");
  try {
    return BasisChange(doc.rows);
  } catch (const std::invalid_argument& e) {
    throw UsageError(spec + ": " + e.what());
  }
}

inline int cmd_change_basis(const std::string& file, const std::string& change, std::ostream& out) {
  const AlgebraTable t = load_algebra(file);
  out << serialize_algebra(apply_basis_change(t, load_change(change, t)));
  return kOk;
}

inline int cmd_verify_iso(const std::string& f1, const std::string& f2, const std::string& change, const Options& opt,
                          std::ostream& out) {
  const AlgebraTable t1 = load_algebra(f1), t2 = load_algebra(f2);
  require_constant_table(t1, f1);
  require_constant_table(t2, f2);
  if (t1.dim() != t2.dim())
    throw UsageError("dimension mismatch: " + std::to_string(t1.dim()) + " vs " + std::to_string(t2.dim()));
  return report_verdict(verify_isomorphism(t1, t2, load_change(change, t1)), t2, opt, out);
}

inline int cmd_profile(const std::vector<std::string>& files, const Options& opt, std::ostream& out) {
  std::vector<AlgebraTable> tables;
  for (const auto& f : files) {
    tables.push_back(load_algebra(f));
    require_constant_table(tables.back(), f);
  }
  std::vector<InvariantProfile> profiles;
  for (const auto& t : tables) profiles.push_back(derived_and_centers(t));

  if (opt.porcelain) {
    for (std::size_t i = 0; i < tables.size(); ++i)
      for (const auto& [k, v] : profiles[i].entries()) out << "profile\t" << tables[i].name() << "\t" << k << "\t" << v << "\n";
  } else {
    const auto keys = profiles.front().entries();
    std::size_t width = 0;
    for (const auto& [k, v] : keys) width = std::max(width, k.size());
    out << std::string(width, ' ');
    for (const auto& t : tables) out << "  " << t.name();
    out << "\n";
    for (std::size_t r = 0; r < keys.size(); ++r) {
      out << keys[r].first << std::string(width - keys[r].first.size(), ' ');
      for (std::size_t i = 0; i < tables.size(); ++i) {
        const std::string v = profiles[i].entries()[r].second;
        out << "  " << v << std::string(tables[i].name().size() > v.size() ? tables[i].name().size() - v.size() : 0, ' ');
      }
      out << "\n";
    }
  }
  for (std::size_t i = 0; i < tables.size(); ++i)
    for (std::size_t j = i + 1; j < tables.size(); ++j) {
      const ProfileReport r = compare_profiles(tables[i], tables[j]);
      const std::string why = r.separating.empty() ? "all computed invariants agree" : join(r.separating, ",");
      if (opt.porcelain)
        out << "compare\t" << tables[i].name() << "\t" << tables[j].name() << "\t" << to_string(r.outcome) << "\t" << why
            << "\n";
      else
        out << tables[i].name() << " vs " << tables[j].name() << ": " << to_string(r.outcome) << " (" << why << ")\n";
    }
  return kOk;
}

/// Runs one command line; never exits the process.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact structure-constant toolkit for Leibniz algebras", "leibniz-cli"};
  app.require_subcommand(1);
  app.fallthrough();  // --porcelain may follow the subcommand
  Options opt;
  app.add_flag("--porcelain", opt.porcelain, "line-oriented key<TAB>value output");

  std::string file, file2, change, mode = "leibniz";
  std::vector<std::string> files;
  ConstructArgs cargs;

  auto* check = app.add_subcommand("check", "check the Leibniz or Lie identities on a constant table");
  check->add_option("file", file, "algebra file (.alg)")->required();
  check->add_option("--mode", mode, "leibniz or lie")->check(CLI::IsMember({"leibniz", "lie"}));

  auto* construct = app.add_subcommand("construct", "print a named construction as .alg text");
  construct->add_option("id", cargs.id, "constructor id")->required();
  construct->add_option("operands", cargs.operands, "operands of direct-sum");
  construct->add_option("--m", cargs.m, "module weight m (dim I = m+1)");
  construct->add_option("--a", cargs.a, "parameter a");
  construct->add_option("--l", cargs.l, "parameter lambda");
  construct->add_option("--mu", cargs.mu, "parameter mu");
  construct->add_option("--dim", cargs.dim, "dimension of the zero algebra");
  construct->add_flag("--sl2-r", cargs.sl2_r, "generic family: include [sl2,R] products");
  construct->add_flag("--defects", cargs.defects, "generic family: include x-terms on sl2 products");

  auto* ideal = app.add_subcommand("ideal", "print the squares ideal");
  ideal->add_option("file", file)->required();
  auto* quotient = app.add_subcommand("quotient", "print the quotient by the squares ideal");
  quotient->add_option("file", file)->required();
  auto* constraints = app.add_subcommand("constraints", "print the polynomial conditions for the Leibniz identity");
  constraints->add_option("file", file)->required();
  auto* change_basis = app.add_subcommand("change-basis", "rewrite a table in a new basis");
  change_basis->add_option("file", file)->required();
  change_basis->add_option("change", change, "change file or 'identity'")->required();
  auto* verify = app.add_subcommand("verify-iso", "check that a change of basis carries one table onto another");
  verify->add_option("file1", file)->required();
  verify->add_option("file2", file2)->required();
  verify->add_option("change", change, "change file or 'identity'")->required();
  auto* profile = app.add_subcommand("profile", "print invariant profiles and compare them pairwise");
  profile->add_option("files", files)->required();

  std::vector<const char*> argv{"leibniz-cli"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(file, mode, opt, out);
    if (construct->parsed()) return cmd_construct(cargs, out);
    if (ideal->parsed()) return cmd_ideal(file, opt, out);
    if (quotient->parsed()) return cmd_quotient(file, out);
    if (constraints->parsed()) return cmd_constraints(file, out);
    if (change_basis->parsed()) return cmd_change_basis(file, change, out);
    if (verify->parsed()) return cmd_verify_iso(file, file2, change, opt, out);
    if (profile->parsed()) return cmd_profile(files, opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace leibniz::cli

#endif  // LEIBNIZ_TOOLS_LEIBNIZ_CLI_HPP
