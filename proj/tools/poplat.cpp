// poplat: command-line front end for the Pop-stack lattice library.
//
// Exit codes: 0 all verdicts match, 1 some mismatch, 2 usage or guard error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "poplat/dyck.hpp"
#include "poplat/formulas.hpp"
#include "poplat/io.hpp"
#include "poplat/series.hpp"
#include "poplat/tamari.hpp"
#include "poplat/verify.hpp"
#include "poplat/weak.hpp"

namespace {

using namespace poplat;

using AnyLattice = std::variant<CarrierLattice<Permutation>, CarrierLattice<SignedPermutation>, IdealLattice>;

constexpr const char* lattice_help =
    "weak-a (S_n, --n), weak-b (B_n, --n), tam-a (312-avoiding S_{n+1}, --n), "
    "tam-b (312*-avoiding B_n, --n), j-a (Dyck paths, --semilength), "
    "j-b (symmetric Dyck paths of semi-length 2n, --n)";

struct Settings {
  bool no_validate = false;
  bool json = false;
  std::size_t max_elements = 50000;
};

std::size_t max_elements_from_env() {
  if (const char* env = std::getenv("POPLAT_MAX_ELEMENTS")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw InvalidInput(std::string("POPLAT_MAX_ELEMENTS is not a number: ") + env);
    }
  }
  return 50000;
}

bool is_path_lattice(const std::string& name) { return name == "j-a" || name == "j-b"; }

int size_parameter(const std::string& lattice, int n, int semilength) {
  if (lattice == "j-a") {
    if (semilength < 0) throw InvalidInput("j-a needs --semilength");
    return semilength;
  }
  if (n < 0) throw InvalidInput(lattice + " needs --n");
  return n;
}

AnyLattice build(const std::string& name, int size, const Settings& s, bool allow_large = false) {
  const LatticeOptions options{!s.no_validate, s.max_elements};
  if (name == "weak-a") return weak_a_lattice(size, options);
  if (name == "weak-b") return weak_b_lattice(size, options, allow_large);
  if (name == "tam-a") return tam_a_lattice(size, options);
  if (name == "tam-b") return tam_b_lattice(size, options);
  if (name == "j-a") return build_j_a(size, options);
  if (name == "j-b") return build_j_b(size, options);
  throw InvalidInput("unknown lattice \"" + name + "\"; expected one of: " + lattice_help);
}

const FiniteLattice& kernel(const AnyLattice& l) {
  return std::visit([](const auto& c) -> const FiniteLattice& { return c.lattice(); }, l);
}

/// The image relevant to each family: Pop-down for permutations, Pop-up for paths.
std::vector<std::size_t> relevant_image(const std::string& name, const FiniteLattice& l) {
  return is_path_lattice(name) ? l.pop_up_image() : l.pop_down_image();
}

std::optional<bool> predicate(const std::string& name, const std::string& key) {
  if (name == "tam-a") return hong_image_predicate(parse_word(key));
  if (name == "tam-b") return tam_b_image_predicate(parse_signed(key));
  if (name == "j-a") return image_predicate_a(parse_path(key));
  if (name == "j-b") return image_predicate_b(parse_symmetric_path(key));
  if (name == "weak-b") return image_necessary_condition(parse_word(key));
  return std::nullopt;
}

std::string pop_of(const std::string& name, const std::string& text, bool up, const Settings& s) {
  if (!up) {
    if (name == "weak-a") return to_text(pop_direct(parse_permutation(text)));
    if (name == "weak-b") return to_text(pop_direct(parse_signed(text)));
    if (name == "tam-a") return to_text(pop_tam(parse_permutation(text)));
    if (name == "tam-b") return to_text(pop_tam(parse_signed(text)));
  } else if (is_path_lattice(name)) {
    const auto p = name == "j-a" ? parse_path(text) : parse_symmetric_path(text);
    return to_text(pop_up_path(p));
  }
  // Everything else goes through the generic engine on the smallest lattice holding x.
  int size = 0;
  if (name == "j-a") {
    size = parse_path(text).semilength();
  } else if (name == "j-b") {
    size = parse_symmetric_path(text).semilength() / 2;
  } else {
    const auto w = parse_word(text);
    size = name == "weak-a" ? static_cast<int>(w.size()) : name == "tam-a" ? static_cast<int>(w.size()) - 1
                                                                           : static_cast<int>(w.size()) / 2;
  }
  const auto lattice = build(name, size, s);
  const auto& l = kernel(lattice);
  std::string key = is_path_lattice(name) ? parse_path(text).steps() : format_word(parse_word(text));
  const std::size_t i = l.index_of(key);
  return l.key(up ? l.pop_up(i) : l.pop_down(i));
}

void print_polynomial_rows(std::ostream& out, const BiSeries& s) {
  for (int n = 0; n <= s.order(); ++n) out << "  x^" << n << ": " << s.row_polynomial(n).to_string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pop-stack sorting on weak, Tamari and root-poset ideal lattices"};
  app.require_subcommand(1);
  Settings s;
  app.add_flag("--no-validate", s.no_validate, "Skip lattice validation when building");
  app.footer(std::string("Lattices: ") + lattice_help +
             ".\nNote: j-a is indexed by semi-length; the jay-a formula at index n describes semi-length n+2.\n"
             "POPLAT_MAX_ELEMENTS overrides the element-count guard (default 50000).");

  std::string lattice, x;
  int n = -1, semilength = -1, max_n = 4, order = 12;
  bool up = false, list = false, check = false, by_first = false, as_printed = false, timing = false,
       allow_large = false;
  std::string name, theorem, series;

  auto add_lattice = [&](CLI::App* cmd) {
    cmd->add_option("--lattice", lattice, lattice_help)->required();
    cmd->add_option("--n", n, "Rank parameter");
    cmd->add_option("--semilength", semilength, "Semi-length (j-a)");
    cmd->add_flag("--json", s.json, "JSON output");
    cmd->add_flag("--allow-large", allow_large, "weak-b: permit n = 5");
  };

  auto* enumerate = app.add_subcommand("enumerate", "List the elements and covers of a lattice");
  add_lattice(enumerate);
  auto* pop = app.add_subcommand("pop", "Apply Pop-down (or Pop-up with --up) to one element");
  pop->add_option("--lattice", lattice, lattice_help)->required();
  pop->add_option("--x", x, "Element, e.g. \"5,1,7,6,3,2,8,4\" or \"rrfrff\"")->required();
  pop->add_flag("--up", up, "Use the dual operator");
  auto* pop_poly = app.add_subcommand("pop-poly", "Pop(M; q) in both directions");
  add_lattice(pop_poly);
  auto* image = app.add_subcommand("image", "Pop image (Pop-up for path lattices)");
  add_lattice(image);
  image->add_flag("--list", list, "Print the image elements");
  image->add_flag("--check-predicate", check, "Compare the image with its characterization");
  auto* preimage = app.add_subcommand("preimage", "Canonical Pop preimage in tam-a or tam-b");
  preimage->add_option("--lattice", lattice, "tam-a or tam-b")->required();
  preimage->add_option("--x", x, "Image element")->required();
  auto* census = app.add_subcommand("census", "Weak(B_n) image elements with n-1 upper covers by first entry");
  add_lattice(census);
  census->add_flag("--by-first-entry", by_first, "Split by x_1 (the only split available)");
  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form polynomial");
  formula->add_option("--name", name, "weak-b, tam-a, tam-b, jay-a, jay-b, jay-b-printed")->required();
  formula->add_option("--n", n, "Index")->required();
  formula->add_flag("--json", s.json, "JSON output");
  auto* verify = app.add_subcommand("verify", "Brute force against a closed form for every n up to --max-n");
  verify->add_option("--theorem", theorem, "weak, tam-a, tam-b, jay-a (index n = semi-length - 2), jay-b")->required();
  verify->add_option("--max-n", max_n, "Largest n");
  verify->add_flag("--json", s.json, "JSON report");
  verify->add_flag("--as-printed", as_printed, "jay-b: use the sum starting at j = 1");
  verify->add_flag("--timing", timing, "Include wall-clock times");
  verify->add_flag("--allow-large", allow_large, "weak: permit n = 5");
  auto* series_cmd = app.add_subcommand("series", "Truncated series tables and their checks");
  series_cmd->add_option("--check", series, "G, F, H, I, J, M, N or K")->required();
  series_cmd->add_option("--order", order, "Truncation order in x");
  series_cmd->add_flag("--json", s.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    s.max_elements = max_elements_from_env();
    std::ostringstream out;
    int status = 0;

    if (*enumerate) {
      const auto l = build(lattice, size_parameter(lattice, n, semilength), s, allow_large);
      if (s.json) {
        out << to_json(kernel(l)).dump(2) << "\n";
      } else {
        for (const auto& k : kernel(l).keys()) out << k << "\n";
      }
    } else if (*pop) {
      out << pop_of(lattice, x, up, s) << "\n";
    } else if (*pop_poly) {
      const auto l = build(lattice, size_parameter(lattice, n, semilength), s, allow_large);
      const auto down = kernel(l).pop_polynomial(PopDirection::down_with_upper_covers);
      const auto dual = kernel(l).pop_polynomial(PopDirection::up_with_lower_covers);
      if (down != dual) status = 1;
      if (s.json) {
        Json j;
        j["lattice"] = lattice;
        j["n"] = size_parameter(lattice, n, semilength);
        j["elements"] = kernel(l).size();
        j["polynomial"] = to_json(down);
        j["dual"] = to_json(dual);
        j["dual_match"] = down == dual;
        out << j.dump(2) << "\n";
      } else {
        out << down.to_string() << "\n";
        if (down != dual) out << "dual direction differs: " << dual.to_string() << "\n";
      }
    } else if (*image) {
      const auto l = build(lattice, size_parameter(lattice, n, semilength), s, allow_large);
      const auto& k = kernel(l);
      const auto img = relevant_image(lattice, k);
      std::vector<bool> in_image(k.size(), false);
      for (auto i : img) in_image[i] = true;
      std::vector<std::string> disagreements;
      if (check) {
        if (!predicate(lattice, k.key(0))) throw InvalidInput("no image characterization for " + lattice);
        for (std::size_t i = 0; i < k.size(); ++i) {
          const bool p = *predicate(lattice, k.key(i));
          // For weak-b the condition is only claimed to be necessary.
          const bool bad = lattice == "weak-b" ? (in_image[i] && !p) : (p != in_image[i]);
          if (bad) disagreements.push_back(k.key(i));
        }
        if (!disagreements.empty()) status = 1;
      }
      if (s.json) {
        Json j;
        j["lattice"] = lattice;
        j["n"] = size_parameter(lattice, n, semilength);
        j["size"] = img.size();
        if (list) {
          Json elems = Json::array();
          for (auto i : img) elems.push_back(k.key(i));
          j["image"] = std::move(elems);
        }
        if (check) {
          j["predicate_agrees"] = disagreements.empty();
          j["disagreements"] = disagreements;
        }
        out << j.dump(2) << "\n";
      } else {
        if (list) {
          for (auto i : img) out << k.key(i) << "\n";
        }
        out << "image size " << img.size() << "\n";
        if (check) {
          out << (disagreements.empty() ? "predicate agrees with brute force\n" : "predicate disagrees on:\n");
          for (const auto& d : disagreements) out << "  " << d << "\n";
        }
      }
    } else if (*preimage) {
      if (lattice == "tam-a") {
        out << to_text(preimage_end1(parse_permutation(x))) << "\n";
      } else if (lattice == "tam-b") {
        out << to_text(preimage_tam_b(parse_signed(x))) << "\n";
      } else {
        throw InvalidInput("preimage supports tam-a and tam-b");
      }
    } else if (*census) {
      if (lattice != "weak-b") throw InvalidInput("census supports weak-b only");
      if (n < 1) throw InvalidInput("census needs --n");
      const auto computed = census_by_first_entry(n);
      const auto predicted = census_prediction(n);
      BigInt total = 0;
      for (const auto& [i, c] : computed) total += c;
      if (computed != predicted || total != weak_b_coefficient(n)) status = 1;
      if (s.json) {
        Json j;
        j["n"] = n;
        Json rows = Json::object();
        for (const auto& [i, c] : computed) {
          rows[std::to_string(i)] = {{"computed", c.str()}, {"predicted", predicted.at(i).str()}};
        }
        j["by_first_entry"] = std::move(rows);
        j["total"] = total.str();
        j["predicted_total"] = weak_b_coefficient(n).str();
        j["verdict"] = status == 0 ? "match" : "mismatch";
        out << j.dump(2) << "\n";
      } else {
        for (const auto& [i, c] : computed) {
          out << "x1=" << i << " computed " << c << " predicted " << predicted.at(i) << "\n";
        }
        out << "total " << total << " (3^n - 2n - 1 = " << weak_b_coefficient(n) << ")\n";
      }
    } else if (*formula) {
      const auto p = FormulaCatalog::evaluate(name, n);
      if (s.json) {
        out << Json{{"name", name}, {"n", n}, {"polynomial", to_json(p)}}.dump(2) << "\n";
      } else {
        out << p.to_string() << "\n";
      }
    } else if (*verify) {
      VerifyOptions options;
      options.validate = !s.no_validate;
      options.allow_large = allow_large;
      options.max_elements = s.max_elements;
      const auto report = verify_theorem(theorem, max_n, as_printed, options);
      if (!report.all_match()) status = 1;
      if (s.json) {
        out << to_json(report, timing).dump(2) << "\n";
      } else {
        for (const auto& c : report.cases) {
          out << c.lattice << " n=" << c.n << " " << (c.match() ? "match" : "MISMATCH") << "  computed "
              << c.computed.to_string() << "  formula " << c.formula.to_string();
          if (!c.match()) out << "  delta " << c.delta().to_string();
          if (timing) out << "  " << c.millis << " ms";
          out << "\n";
        }
        out << report.matches() << "/" << report.cases.size() << " match\n";
      }
    } else if (*series_cmd) {
      const auto report = series_report(series, order);
      if (!report.all_pass()) status = 1;
      if (s.json) {
        out << to_json(report).dump(2) << "\n";
      } else {
        for (const auto& [table, values] : report.tables) {
          out << table << ":\n";
          print_polynomial_rows(out, values);
        }
        for (const auto& c : report.checks) {
          out << (c.pass ? "pass " : "FAIL ") << c.series << ": " << c.name << " (" << c.detail << ")\n";
        }
      }
    }
    std::cout << out.str();
    return status;
  } catch (const poplat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
