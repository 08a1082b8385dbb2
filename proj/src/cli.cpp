#include "polyspace/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/format.hpp"
#include "polyspace/intersection.hpp"
#include "polyspace/json_io.hpp"
#include "polyspace/poincare.hpp"
#include "polyspace/positivity.hpp"
#include "polyspace/ring.hpp"
#include "polyspace/weights.hpp"

namespace polyspace::cli {

namespace {

using nlohmann::json;

int exit_code_for(const Error& e, bool weight_context) {
  switch (e.code()) {
    case errc::non_positive_entry:
    case errc::too_few_sides:
    case errc::too_many_sides:
    case errc::polygon_inequality_violated:
      return 2;
    case errc::not_smooth:
      return 3;
    case errc::parse_error:
      return weight_context ? 2 : 4;
    case errc::degree_out_of_range:
    case errc::wrong_degree:
    case errc::too_few_parts:
    case errc::equal_indices:
    case errc::bad_center:
    case errc::not_homogeneous_top:
    case errc::bad_argument:
      return 4;
    default:  // non_exact_division, wall_hit: internal hard faults
      return 1;
  }
}

void describe(std::ostream& err, const Error& e) {
  err << "error: " << e.what();
  if (e.has_subset()) err << " " << format_subset(Subset(e.subset_bits()));
  err << "\n";
}

struct Options {
  std::string m_text;
  std::string file;
  bool as_json = false;
  int threads = 1;
  // intersect
  std::string J_text;
  int p = 0;
  std::string oracle = "signs";
  // evaluate
  std::string expr;
  // ample
  std::string coeffs;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--m", o.m_text, "weight vector, e.g. 1,1,1,3/2");
  sub->add_option("--file", o.file, "file with one weight vector per line");
  sub->add_flag("--json", o.as_json, "emit JSON (one object per line)");
  sub->add_option("--threads", o.threads, "worker threads for subset scans")
      ->check(CLI::PositiveNumber);
}

std::vector<std::string> weight_texts(const Options& o) {
  if (o.m_text.empty() == o.file.empty())
    throw Error(errc::bad_argument, "need exactly one of --m or --file");
  if (!o.m_text.empty()) return {o.m_text};
  std::ifstream in(o.file);
  if (!in) throw Error(errc::bad_argument, "cannot open file " + o.file);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[line.find_first_not_of(" \t")] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty())
    throw Error(errc::bad_argument, "no weight vectors in " + o.file);
  return lines;
}

// One command's work for one weight vector; returns lines to print.
struct Handler {
  const Options& o;
  std::ostream& out;

  void emit_json(json j, const WeightVector& m) {
    j["m"] = weights_json(m);
    out << j.dump() << "\n";
  }

  void validate(const WeightVector& m) {
    if (o.as_json) {
      emit_json(json{{"ok", true},
                     {"n", m.n()},
                     {"total", format_rat(m.total())}},
                m);
    } else {
      out << "ok n=" << m.n() << " total=" << format_rat(m.total()) << "\n";
    }
  }

  void poincare(const WeightVector& m) {
    IntPolynomial P = poincare_polynomial(m, o.threads);
    if (o.as_json)
      emit_json(json{{"poincare", polynomial_json(P)}}, m);
    else
      out << format_polynomial(P) << "\n";
  }

  void betti(const WeightVector& m) {
    std::vector<Int> b = betti_numbers(m, o.threads);
    if (o.as_json) {
      json arr = json::array();
      for (const Int& x : b) arr.push_back(x.str());
      emit_json(json{{"betti", arr}}, m);
    } else {
      out << "b:";
      for (const Int& x : b) out << " " << x.str();
      out << "\n";
    }
  }

  void relations(const WeightVector& m) {
    RingPresentation pres = presentation(m, o.threads);
    if (o.as_json) {
      json arr = json::array();
      for (std::size_t r = 0; r < pres.relations.size(); ++r)
        arr.push_back(json{{"I", subset_json(pres.long_sets[r])},
                           {"element", ring_element_json(pres.relations[r])}});
      emit_json(json{{"relations", arr}}, m);
    } else {
      for (std::size_t r = 0; r < pres.relations.size(); ++r)
        out << format_subset(pres.long_sets[r]) << ": "
            << format_ring_element(pres.relations[r]) << "\n";
    }
  }

  void intersect(const WeightVector& m) {
    Subset J = parse_index_set(o.J_text, m.n());
    Int value;
    if (o.oracle == "signs") {
      value = top_intersection(m, J, o.p, {}, o.threads);
    } else if (o.oracle == "cycles") {
      value = evaluate_monomial_by_cycles(m, Monomial{J, o.p});
    } else if (o.oracle == "both") {
      value = top_intersection(m, J, o.p, {}, o.threads);
      Int check = evaluate_monomial_by_cycles(m, Monomial{J, o.p});
      if (value != check)
        throw Error(errc::wall_hit, "intersection routes disagree: " +
                                        value.str() + " vs " + check.str());
    } else {
      throw Error(errc::bad_argument, "oracle must be signs, cycles or both");
    }
    if (o.as_json)
      emit_json(json{{"J", subset_json(J)},
                     {"p", o.p},
                     {"oracle", o.oracle},
                     {"value", value.str()}},
                m);
    else
      out << value.str() << "\n";
  }

  void evaluate_cmd(const WeightVector& m) {
    RingElement e = parse_ring_element(o.expr, m.n());
    Rat v = evaluate(m, e, o.threads);
    if (o.as_json)
      emit_json(json{{"element", ring_element_json(e)},
                     {"value", format_rat(v)}},
                m);
    else
      out << format_rat(v) << "\n";
  }

  void ample(const WeightVector& m) {
    std::vector<Rat> a = parse_rat_list(o.coeffs);
    AmpleResult r = is_ample(m, DivisorCoefficients{a}, o.threads);
    if (o.as_json) {
      json j{{"ample", r.ample}};
      j["violation"] =
          r.violation ? quadrangle_json(*r.violation) : json(nullptr);
      emit_json(std::move(j), m);
    } else if (r.ample) {
      out << "ample\n";
    } else {
      out << "not ample: " << format_quadrangle(*r.violation) << "\n";
    }
  }

  void fano(const WeightVector& m) {
    FanoReport r = fano_report(m, o.threads);
    if (o.as_json) {
      emit_json(fano_json(r), m);
    } else if (r.fano) {
      out << "fano\n";
    } else {
      out << "not fano";
      if (r.star_witness) out << ": " << format_quadrangle(*r.star_witness);
      if (r.maximal_witness)
        out << "; maximal " << format_subset(r.maximal_witness->I)
            << " dim=" << r.maximal_witness->dimension;
      out << "\n";
    }
  }

  void maximal(const WeightVector& m) {
    std::vector<MaximalDegeneration> ds = maximal_degenerations(m, o.threads);
    if (o.as_json) {
      json arr = json::array();
      for (const auto& d : ds) arr.push_back(maximal_degeneration_json(d));
      emit_json(json{{"maximal", arr}}, m);
    } else {
      for (const auto& d : ds)
        out << format_subset(d.I) << " dim=" << d.dimension << "\n";
    }
  }

  void quadrangles_cmd(const WeightVector& m) {
    std::vector<Quadrangle> qs = quadrangles(m, o.threads);
    if (o.as_json) {
      json arr = json::array();
      for (const Quadrangle& q : qs) arr.push_back(quadrangle_json(q));
      emit_json(json{{"quadrangles", arr}}, m);
    } else {
      for (const Quadrangle& q : qs) out << format_quadrangle(q) << "\n";
    }
  }

  void chamber(const WeightVector& m) {
    ChamberSignature sig = chamber_signature(m, o.threads);
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << sig.digest();
    if (o.as_json) {
      json j{{"n", sig.n},
             {"short_count", sig.short_masks.size()},
             {"digest", hex.str()}};
      if (sig.n <= 16) {
        json arr = json::array();
        for (std::uint64_t mask : sig.short_masks)
          arr.push_back(subset_json(Subset(mask)));
        j["short_sets"] = arr;
      }
      emit_json(std::move(j), m);
    } else {
      out << "n=" << sig.n << " short=" << sig.short_masks.size()
          << " digest=" << hex.str() << "\n";
    }
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact invariants of polygon spaces"};
  app.require_subcommand(1);
  Options o;

  struct Sub {
    const char* name;
    const char* help;
    void (Handler::*fn)(const WeightVector&);
  };
  const std::vector<Sub> subs = {
      {"validate", "check a weight vector", &Handler::validate},
      {"poincare", "Poincare polynomial", &Handler::poincare},
      {"betti", "Betti numbers", &Handler::betti},
      {"relations", "Chow ring presentation", &Handler::relations},
      {"intersect", "top intersection number of l_J * p^k",
       &Handler::intersect},
      {"evaluate", "evaluate a top-degree element", &Handler::evaluate_cmd},
      {"ample", "ampleness of sum a_i l_i", &Handler::ample},
      {"fano", "Fano decision by both criteria", &Handler::fano},
      {"maximal", "maximal degenerations", &Handler::maximal},
      {"quadrangles", "quadrangle degenerations with types",
       &Handler::quadrangles_cmd},
      {"chamber", "chamber signature", &Handler::chamber},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, o);
    if (std::string(s.name) == "intersect") {
      sub->add_option("--J", o.J_text, "l-indices, e.g. 1,2");
      sub->add_option("--p", o.p, "power of p");
      sub->add_option("--oracle", o.oracle, "signs | cycles | both");
    } else if (std::string(s.name) == "evaluate") {
      sub->add_option("expr", o.expr, "element, e.g. 'l1*l2 + p'")
          ->required();
    } else if (std::string(s.name) == "ample") {
      sub->add_option("--coeffs", o.coeffs, "a_1,...,a_n")->required();
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 4;
  }

  void (Handler::*fn)(const WeightVector&) = nullptr;
  for (const Sub& s : subs)
    if (app.got_subcommand(s.name)) fn = s.fn;
  if (!fn) {
    err << "error: no subcommand\n";
    return 4;
  }

  std::vector<std::string> texts;
  try {
    texts = weight_texts(o);
  } catch (const Error& e) {
    describe(err, e);
    return exit_code_for(e, false);
  }

  const bool many = texts.size() > 1;
  Handler handler{o, out};
  for (std::size_t line = 0; line < texts.size(); ++line) {
    bool parsing_weights = true;
    try {
      WeightVector m = WeightVector::create(parse_weights(texts[line]));
      parsing_weights = false;
      if (many && !o.as_json) out << texts[line] << ":\n";
      (handler.*fn)(m);
    } catch (const Error& e) {
      if (many) err << "line " << line + 1 << ": ";
      describe(err, e);
      return exit_code_for(e, parsing_weights);
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << "\n";
      return 1;
    }
  }
  return 0;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace polyspace::cli
