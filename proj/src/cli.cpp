#include "qk/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qk/abelian.hpp"
#include "qk/free_objects.hpp"
#include "qk/properties.hpp"
#include "qk/qnd_format.hpp"
#include "qk/search.hpp"
#include "qk/structure.hpp"

namespace qk::cli {
namespace {

CayleyTable load(const std::string& path, std::istream& in) {
  if (path == "-") return read_table(in);
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::kInvalidArgument, "cannot open '" + path + "'");
  return read_table(file);
}

Variety parse_variety(const std::string& v) {
  if (v == "mlq") return Variety::kMLQnd;
  if (v == "mcq") return Variety::kMCQnd;
  throw Error(ErrorKind::kInvalidArgument, "variety must be mlq or mcq, got '" + v + "'");
}

std::string render_map(const Map& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(i) + "->" + std::to_string(f[i]);
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite rack and quandle toolkit", "qk"};
  app.require_subcommand(1);
  std::size_t max_order = 0;
  app.add_option("--max-order", max_order,
                 "Override every order bound (also QK_MAX_ORDER)");

  // check
  auto* check = app.add_subcommand("check", "Decide every property of a table");
  std::string check_file;
  std::vector<std::string> required;
  check->add_option("FILE", check_file)->required();
  check->add_option("--require", required,
                    "Exit 1 unless the named properties hold");

  auto* dual_cmd = app.add_subcommand("dual", "Print the dual rack");
  std::string dual_file;
  dual_cmd->add_option("FILE", dual_file)->required();

  auto* sum = app.add_subcommand("sum", "Print the direct sum of tables");
  std::vector<std::string> sum_files;
  sum->add_option("FILES", sum_files)->required();

  auto* gen = app.add_subcommand("gen", "Construct a quandle table");
  gen->require_subcommand(1);
  auto* gen_alex = gen->add_subcommand("alexander", "Alex(G, phi)");
  std::string alex_group, alex_matrix;
  gen_alex->add_option("GROUP", alex_group, "e.g. Z3xZ15")->required();
  gen_alex->add_option("MATRIX", alex_matrix, "e.g. [2] or [[0,1],[1,1]]")->required();
  auto* gen_mid = gen->add_subcommand("midpoint", "Midpoint quandle of G");
  std::string mid_group;
  gen_mid->add_option("GROUP", mid_group)->required();
  auto* gen_cyc = gen->add_subcommand("cyclic", "Cyclic midpoint quandle C_{2m+1}");
  std::uint64_t cyc_m = 0;
  gen_cyc->add_option("M", cyc_m)->required();

  auto* bmt = app.add_subcommand("bmt", "Recover the affine structure of a medial Latin quandle");
  std::string bmt_file;
  Element basepoint = 0;
  bmt->add_option("FILE", bmt_file)->required();
  bmt->add_option("--basepoint", basepoint, "Basepoint element (default 0)");

  auto* decompose = app.add_subcommand("decompose",
                                       "Cyclic midpoint decomposition of a medial commutative quandle");
  std::string decompose_file;
  bool decompose_verify = false;
  decompose->add_option("FILE", decompose_file)->required();
  decompose->add_flag("--verify", decompose_verify,
                      "Confirm the decomposition by an explicit isomorphism");

  auto* iso = app.add_subcommand("iso", "Find an isomorphism between two tables");
  std::string iso_a, iso_b;
  iso->add_option("FILE1", iso_a)->required();
  iso->add_option("FILE2", iso_b)->required();

  auto* census = app.add_subcommand("census", "Medial Latin quandles of order N up to isomorphism");
  std::uint64_t census_n = 0;
  census->add_option("N", census_n)->required()->check(CLI::PositiveNumber);

  std::string variety = "mlq", gens_spec, base_name;
  auto add_free_options = [&](CLI::App* cmd) {
    cmd->add_option("--variety", variety, "mlq or mcq")->capture_default_str();
    cmd->add_option("--gens", gens_spec, "Comma-separated generator names")->required();
    cmd->add_option("--basepoint", base_name, "Generator mapped to the origin")->required();
  };
  auto* free_eval = app.add_subcommand("free-eval", "Coordinates of a word in the free object");
  std::string term_text;
  add_free_options(free_eval);
  free_eval->add_option("TERM", term_text)->required();

  auto* words_eq = app.add_subcommand("words-equal", "Decide the word problem");
  std::string lhs_text, rhs_text;
  add_free_options(words_eq);
  words_eq->add_option("TERM1", lhs_text)->required();
  words_eq->add_option("TERM2", rhs_text)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  Limits limits = max_order > 0 ? Limits::uniform(max_order) : Limits::from_env();

  try {
    if (*check) {
      CayleyTable t = load(check_file, in);
      PropertyReport report = check_properties(t, limits);
      bool all_required = true;
      for (const auto& [name, flag] : report.flags()) {
        out << name << ": " << (flag->holds ? "yes" : "no");
        if (!flag->holds && !flag->witness.empty()) {
          out << " [witness " << flag->witness.to_string() << "]";
        }
        out << "\n";
        if (!flag->holds && std::find(required.begin(), required.end(), name) != required.end()) {
          all_required = false;
        }
      }
      for (const auto& r : required) {
        auto flags = report.flags();
        bool known = std::any_of(flags.begin(), flags.end(),
                                 [&](const auto& f) { return f.first == r; });
        if (!known) throw Error(ErrorKind::kInvalidArgument, "unknown property '" + r + "'");
      }
      return all_required ? kOk : kFalse;
    }
    if (*dual_cmd) {
      out << serialize_table(dual(load(dual_file, in)));
      return kOk;
    }
    if (*sum) {
      std::vector<CayleyTable> tables;
      for (const auto& f : sum_files) tables.push_back(load(f, in));
      out << serialize_table(direct_sum(tables, limits));
      return kOk;
    }
    if (*gen) {
      if (*gen_alex) {
        FinAbGroup g = parse_group_spec(alex_group);
        GroupAuto phi = make_auto(g, parse_matrix(alex_matrix), limits);
        out << serialize_table(alexander(g, phi, limits));
      } else if (*gen_mid) {
        out << serialize_table(midpoint(parse_group_spec(mid_group), limits));
      } else {
        out << serialize_table(cyclic_midpoint(cyc_m, limits));
      }
      return kOk;
    }
    if (*bmt) {
      BmtCertificate cert = bmt_certify(load(bmt_file, in), basepoint);
      out << "basepoint: " << cert.basepoint << "\n";
      if (!cert.add.is_empty()) out << "add:\n" << serialize_table(cert.add);
      out << "phi:";
      for (Element v : cert.phi) out << ' ' << v;
      out << "\n";
      if (cert.verified) {
        out << "verified: yes\n";
        return kOk;
      }
      out << "verified: no [" << cert.failure << " fails at " << cert.failure_witness.to_string()
          << "]\n";
      return kFalse;
    }
    if (*decompose) {
      CayleyTable t = load(decompose_file, in);
      Decomposition d = decompose_mcq(t, limits);
      out << d.to_string() << "\n";
      if (decompose_verify) {
        std::vector<CayleyTable> parts;
        for (auto order : d.orders) parts.push_back(cyclic_midpoint((order - 1) / 2, limits));
        if (parts.empty()) parts.push_back(cyclic_midpoint(0, limits));
        if (!is_isomorphic(t, direct_sum(parts, limits))) {
          err << "error: decomposition does not reassemble to the input\n";
          return kInternalFailure;
        }
      }
      return kOk;
    }
    if (*iso) {
      CayleyTable a = load(iso_a, in);
      CayleyTable b = load(iso_b, in);
      if (auto f = is_isomorphic(a, b)) {
        out << render_map(*f) << "\n";
        return kOk;
      }
      out << "not isomorphic\n";
      return kFalse;
    }
    if (*census) {
      for (const auto& entry : enumerate_medial_latin(census_n, limits)) {
        out << census_line(entry) << "\n";
      }
      return kOk;
    }
    if (*free_eval || *words_eq) {
      Variety v = parse_variety(variety);
      FreeFrame frame(GeneratorList::parse(gens_spec), base_name);
      if (*free_eval) {
        Term t = parse_term(term_text, frame.generators());
        if (v == Variety::kMLQnd) {
          out << to_string(eval_fml(t, frame)) << "\n";
        } else {
          out << to_string(eval_fmc(t, frame)) << "\n";
        }
        return kOk;
      }
      Term lhs = parse_term(lhs_text, frame.generators());
      Term rhs = parse_term(rhs_text, frame.generators());
      bool equal = words_equal(lhs, rhs, v, frame);
      out << (equal ? "true" : "false") << "\n";
      return equal ? kOk : kFalse;
    }
  } catch (const Error& e) {
    err << "error: " << error_kind_name(e.kind()) << ": " << e.what();
    if (!e.witness().empty()) err << " [witness " << e.witness().to_string() << "]";
    err << "\n";
    return e.kind() == ErrorKind::kVerificationFailed ? kInternalFailure : kInputError;
  }
  return kInputError;
}

}  // namespace qk::cli
