#include "ff/cli.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ff/error.hpp"
#include "ff/factorization.hpp"
#include "ff/isomorphism.hpp"
#include "ff/structure.hpp"
#include "ff/table_oracle.hpp"
#include "ff/verify.hpp"

namespace ff::cli {

namespace {

using nlohmann::json;

constexpr const char* kPolyGrammar =
    "term ('+'|'-') term ..., term = [coeff][var['^' exponent]], e.g. \"z^3+z+1\"";

/// A flag value that failed validation; reported as a usage error.
struct UsageError {
  std::string message;
};

struct Options {
  unsigned p = 0;
  unsigned r = 0;
  unsigned d = 0;
  unsigned q = 0;
  std::string modulus;
  std::string source;
  std::string target;
  std::string poly;
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
};

char variable_of(const std::string& text, char fallback) {
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) return c;
  }
  return fallback;
}

Polynomial parse_flag(const std::string& flag, const std::string& text, PrimeModulus p) {
  try {
    return poly_parse(text, p);
  } catch (const ParseError& e) {
    throw UsageError{flag + " \"" + text + "\": " + e.what() + "; expected " + kPolyGrammar};
  }
}

FieldSpec field_from(const Options& o, const std::string& flag, const std::string& text, char var) {
  const PrimeModulus p = check_prime(o.p);
  if (text.empty()) return construct_field(p, o.r, std::nullopt, var);
  return construct_field(p, o.r, parse_flag(flag, text, p), variable_of(text, var));
}

std::string modulus_text(const FieldSpec& f) { return poly_format(f.modulus(), f.variable()); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> labels(const std::vector<FieldElement>& elems) {
  std::vector<std::string> out;
  for (const auto& e : elems) out.push_back(format_element(e));
  return out;
}

// ---------------------------------------------------------------------------

void cmd_construct(const Options& o, std::ostream& out, bool as_json) {
  const FieldSpec f = field_from(o, "--modulus", o.modulus, 'z');
  const auto name = "Z_" + std::to_string(o.p) + "[" + std::string(1, f.variable()) + "]/<" +
                    modulus_text(f) + ">";
  std::optional<std::vector<std::string>> elems;
  if (f.order() <= 256) elems = labels(enumerate_elements(f));
  if (as_json) {
    json j{{"p", o.p}, {"r", o.r}, {"q", f.order()}, {"modulus", modulus_text(f)}, {"quotient", name}};
    if (elems) j["elements"] = *elems;
    out << j.dump(2) << '\n';
    return;
  }
  out << "GF(" << f.order() << ") = " << name << '\n';
  out << "p = " << o.p << ", r = " << o.r << ", q = " << f.order() << '\n';
  if (elems) out << "elements: " << join(*elems, ", ") << '\n';
}

void cmd_tables(const Options& o, std::ostream& out, bool as_json) {
  const FieldSpec f = field_from(o, "--modulus", o.modulus, 'z');
  const auto t = operation_tables(f);
  if (as_json) {
    json j{{"modulus", modulus_text(f)}, {"tables", {table_to_json(t, '+'), table_to_json(t, '*')}}};
    out << j.dump(2) << '\n';
    return;
  }
  out << "GF(" << f.order() << ") = Z_" << o.p << "[" << f.variable() << "]/<" << modulus_text(f) << ">\n\n";
  out << render_table_text(t, '+') << '\n' << render_table_text(t, '*');
}

void cmd_irreducibles(const Options& o, std::ostream& out, bool as_json) {
  const auto list = enumerate_irreducibles(check_prime(o.p), o.d);
  std::vector<std::string> text;
  for (const auto& f : list) text.push_back(poly_format(f.poly()));
  if (as_json) {
    out << json{{"p", o.p}, {"d", o.d}, {"count", text.size()}, {"irreducibles", text}}.dump(2) << '\n';
    return;
  }
  for (const auto& s : text) out << s << '\n';
}

void cmd_factor_base(const Options& o, std::ostream& out, bool as_json) {
  const auto fac = factor_xq_minus_x_base(check_prime(o.p), o.r);
  if (as_json) {
    std::vector<std::string> factors;
    for (const auto& f : fac.factors) factors.push_back(poly_format(f.poly()));
    json hist = json::object();
    for (const auto& [deg, n] : fac.degree_histogram()) hist[std::to_string(deg)] = n;
    json j{{"p", o.p},
           {"r", o.r},
           {"q", fac.q},
           {"polynomial", poly_format(Polynomial::x_pow_minus_x(fac.p, fac.q))},
           {"factors", factors},
           {"degree_histogram", hist}};
    out << j.dump(2) << '\n';
    return;
  }
  out << format_factorization(fac) << '\n';
}

std::string linear_factor(const FieldElement& a) {
  if (a.is_zero()) return "x";
  const auto s = format_element(a);
  return "(x - " + (s.find('+') == std::string::npos ? s : "(" + s + ")") + ")";
}

void cmd_factor_ext(const Options& o, std::ostream& out, bool as_json) {
  const FieldSpec f = field_from(o, "--modulus", o.modulus, 'z');
  const auto fac = factor_xq_minus_x_extension(f);
  const auto roots = labels(fac.roots);
  if (as_json) {
    out << json{{"field_modulus", modulus_text(f)},
                {"polynomial", poly_format(fac.source)},
                {"roots", roots}}
               .dump(2)
        << '\n';
    return;
  }
  std::vector<std::string> factors;
  for (const auto& a : fac.roots) factors.push_back(linear_factor(a));
  out << poly_format(fac.source) << " = " << join(factors, " * ") << '\n';
}

void cmd_roots(const Options& o, std::ostream& out, bool as_json) {
  const FieldSpec f = field_from(o, "--modulus", o.modulus, 'z');
  if (o.poly.empty()) throw UsageError{"roots requires --poly <polynomial>"};
  const Polynomial g = parse_flag("--poly", o.poly, f.characteristic());
  const auto roots = labels(roots_in_field(g, f));
  if (as_json) {
    out << json{{"polynomial", poly_format(g)}, {"field_modulus", modulus_text(f)}, {"roots", roots}}.dump(2)
        << '\n';
    return;
  }
  out << "roots of " << poly_format(g) << " in GF(" << f.order() << ") = Z_" << o.p << "["
      << f.variable() << "]/<" << modulus_text(f) << ">: " << (roots.empty() ? "none" : join(roots, ", "))
      << '\n';
}

void cmd_generator(const Options& o, std::ostream& out, bool as_json) {
  const FieldSpec f = field_from(o, "--modulus", o.modulus, 'z');
  const auto g = find_generator(f);
  const auto count = count_generators(f);
  if (as_json) {
    out << json{{"field_modulus", modulus_text(f)},
                {"generator", format_element(g)},
                {"order", f.order() - 1},
                {"generator_count", count}}
               .dump(2)
        << '\n';
    return;
  }
  out << "generator: " << format_element(g) << '\n'
      << "order: " << f.order() - 1 << '\n'
      << "generator count: " << count << '\n';
}

void cmd_orders(const Options& o, std::ostream& out, bool as_json) {
  const FieldSpec f = field_from(o, "--modulus", o.modulus, 'z');
  const auto rep = generator_report(f);
  if (as_json) {
    json table = json::array();
    for (std::uint64_t i = 1; i < f.order(); ++i) {
      table.push_back({format_element(FieldElement::from_index(f, i)), rep.order_table[i]});
    }
    out << json{{"field_modulus", modulus_text(f)},
                {"generator", format_element(rep.generator)},
                {"generator_count", rep.generator_count},
                {"orders", table}}
               .dump(2)
        << '\n';
    return;
  }
  std::size_t width = 0;
  std::vector<std::string> names;
  for (std::uint64_t i = 1; i < f.order(); ++i) {
    names.push_back(format_element(FieldElement::from_index(f, i)));
    width = std::max(width, names.back().size());
  }
  for (std::uint64_t i = 1; i < f.order(); ++i) {
    const auto& n = names[i - 1];
    out << n << std::string(width - n.size(), ' ') << " : " << rep.order_table[i] << '\n';
  }
  out << "generator: " << format_element(rep.generator) << '\n'
      << "generator count: " << rep.generator_count << '\n';
}

std::pair<FieldSpec, FieldSpec> iso_fields(const Options& o) {
  FieldSpec s = field_from(o, "--source", o.source, 'z');
  FieldSpec t = field_from(o, "--target", o.target, 'w');
  return {s, t};
}

void cmd_iso(const Options& o, std::ostream& out, bool as_json) {
  const auto [s, t] = iso_fields(o);
  const auto iso = build_isomorphism(s, t);
  const auto v = verify_isomorphism(iso, o.seed);
  if (as_json) {
    json j = isomorphism_to_json(iso);
    j["verified"] = v.passed();
    out << j.dump(2) << '\n';
    return;
  }
  out << isomorphism_to_text(iso) << "verified: " << (v.passed() ? "yes" : "NO") << '\n';
}

void cmd_iso_all(const Options& o, std::ostream& out, bool as_json) {
  const auto [s, t] = iso_fields(o);
  const auto all = enumerate_isomorphisms(s, t);
  if (as_json) {
    json list = json::array();
    for (const auto& iso : all) {
      json j = isomorphism_to_json(iso);
      j["verified"] = verify_isomorphism(iso, o.seed).passed();
      list.push_back(std::move(j));
    }
    out << json{{"count", all.size()}, {"isomorphisms", list}}.dump(2) << '\n';
    return;
  }
  out << all.size() << " isomorphism(s)\n";
  for (const auto& iso : all) {
    out << '\n' << isomorphism_to_text(iso)
        << "verified: " << (verify_isomorphism(iso, o.seed).passed() ? "yes" : "NO") << '\n';
  }
}

std::optional<FieldSpec> field_of_order(unsigned q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    unsigned r = 0, m = q;
    while (m % p == 0) {
      m /= p;
      ++r;
    }
    if (r > 0) {
      if (m == 1) return construct_field(check_prime(p), r);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

void cmd_oracle(const Options& o, std::ostream& out, bool as_json) {
  const auto solutions = complete_tables(o.q);
  const auto field = field_of_order(o.q);
  if (as_json) {
    json list = json::array();
    for (const auto& s : solutions) {
      json j{{"tables", {table_to_json(s, '+'), table_to_json(s, '*')}}};
      if (field) j["matches_field"] = match_against_field(s, *field);
      list.push_back(std::move(j));
    }
    out << json{{"q", o.q}, {"solution_classes", solutions.size()}, {"solutions", list}}.dump(2) << '\n';
    return;
  }
  out << solutions.size() << " solution class(es) for q = " << o.q << '\n';
  for (const auto& s : solutions) {
    out << '\n' << render_table_text(s, '+') << '\n' << render_table_text(s, '*');
    if (field) {
      out << "matches GF(" << o.q << ") = Z_" << field->characteristic().value() << "[z]/<"
          << modulus_text(*field) << ">: " << (match_against_field(s, *field) ? "yes" : "no") << '\n';
    }
  }
}

void cmd_verify(const Options& o, std::ostream& out, bool as_json) {
  const auto rep = verify_ftff(o.p, o.r, o.seed);
  if (as_json) {
    out << ftff_report_to_json(rep).dump(2) << '\n';
  } else {
    out << ftff_report_to_text(rep);
  }
  if (!rep.passed()) throw InternalError("FTFF verification failed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite field construction and verification toolkit", "ffield"};
  app.require_subcommand(1);
  Options o;
  std::function<void(const Options&, std::ostream&, bool)> action;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", o.seed, "Seed for randomized checks");
  };
  const auto add_p = [&](CLI::App* sub) { sub->add_option("-p", o.p, "Prime characteristic")->required(); };
  const auto add_pr = [&](CLI::App* sub) {
    add_p(sub);
    sub->add_option("-r", o.r, "Extension degree")->required()->check(CLI::PositiveNumber);
  };
  const auto add_field = [&](CLI::App* sub) {
    add_pr(sub);
    sub->add_option("--modulus", o.modulus, "Monic irreducible modulus of degree r");
  };
  const auto subcommand = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    add_format(sub);
    return sub;
  };

  add_field(subcommand("construct", "Construct GF(p^r) as a quotient ring", cmd_construct));
  add_field(subcommand("tables", "Addition and multiplication tables (q <= 256)", cmd_tables));
  {
    auto* sub = subcommand("irreducibles", "Monic irreducibles of degree d over Z_p", cmd_irreducibles);
    add_p(sub);
    sub->add_option("-d", o.d, "Degree")->required()->check(CLI::PositiveNumber);
  }
  add_pr(subcommand("factor-base", "Factor x^q-x over Z_p", cmd_factor_base));
  add_field(subcommand("factor-ext", "Factor x^q-x into linear factors over GF(q)", cmd_factor_ext));
  {
    auto* sub = subcommand("roots", "Roots of a Z_p polynomial in GF(p^r)", cmd_roots);
    add_field(sub);
    sub->add_option("--poly", o.poly, "Polynomial over Z_p")->required();
  }
  add_field(subcommand("generator", "First multiplicative generator and generator count", cmd_generator));
  add_field(subcommand("orders", "Multiplicative order of every nonzero element", cmd_orders));
  for (auto [name, help, fn] :
       {std::tuple{"iso", "Explicit isomorphism between two representations", &cmd_iso},
        std::tuple{"iso-all", "Every isomorphism between two representations", &cmd_iso_all}}) {
    auto* sub = subcommand(name, help, fn);
    add_pr(sub);
    sub->add_option("--source", o.source, "Source modulus");
    sub->add_option("--target", o.target, "Target modulus");
  }
  {
    auto* sub = subcommand("oracle", "Complete +/* tables from the field axioms alone", cmd_oracle);
    sub->add_option("q", o.q, "Number of symbols (2..7)")->required();
  }
  add_pr(subcommand("verify-ftff", "Check every clause of the fundamental theorem", cmd_verify));

  std::vector<const char*> argv{"ffield"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return 2;
  }

  std::ostringstream buffer;
  try {
    action(o, buffer, o.format == "json");
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << '\n';
    return 2;
  } catch (const Error& e) {
    out << buffer.str();
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return 1;
  }
  out << buffer.str();
  return 0;
}

}  // namespace ff::cli
