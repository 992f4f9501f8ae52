#include "lnash/cli/run.hpp"

#include "lnash/equivalence.hpp"
#include "lnash/functors.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lnash::cli {

namespace {

const char* yes(bool b) { return b ? "true" : "false"; }

ValidationReport validate_any(const ObjectValue& v, const SearchParams& p) {
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Fprs>) return validate_fprs(x, p);
        else if constexpr (std::is_same_v<T, Fpl>) return validate_fpl(x, p);
        else if constexpr (std::is_same_v<T, Mpl>) return validate_mpl(x, p);
        else return validate_triple(x, p);
      },
      v);
}

TripleD as_triple(const ObjectValue& v, const SearchParams& p) {
  if (auto* t = std::get_if<TripleD>(&v)) return *t;
  Fprs x = std::get<Fprs>(convert(v, "fprs", p));
  return {x, KMatrix(x.n, 0)};
}

std::string header(const Object& o) { return "[" + o.name + " : " + kind_name(o.value) + "]"; }

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

double parse_real(const std::string& s) {
  std::string t = s;
  t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
  if (t.find('.') != std::string::npos || t.find('e') != std::string::npos) {
    size_t used = 0;
    double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument(s);
    return v;
  }
  return parse_scalar(t, nullptr).to_double();
}

weierstrass::cplx parse_cplx(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.size() > 1 && s.front() == '(' && s.back() == ')') {
    std::string inner = s.substr(1, s.size() - 2);
    size_t c = inner.find(',');
    if (c == std::string::npos) throw std::invalid_argument(s);
    return {parse_real(inner.substr(0, c)), parse_real(inner.substr(c + 1))};
  }
  return parse_real(s);
}

}  // namespace

ObjectValue convert(const ObjectValue& v, const std::string& to, const SearchParams& p) {
  auto space = [](const ObjectValue& x) -> const Fprs* {
    if (auto* f = std::get_if<Fprs>(&x)) return f;
    if (auto* t = std::get_if<TripleD>(&x)) return &t->space;
    return nullptr;
  };
  if (to == "fprs") {
    if (const Fprs* f = space(v)) return *f;
    if (auto* f = std::get_if<Fpl>(&v)) return fpl_to_fprs(*f, p);
    return fpl_to_fprs(mpl_to_fpl(std::get<Mpl>(v), p), p);
  }
  if (to == "fpl") {
    if (const Fprs* f = space(v)) return integral_model(*f, p);
    if (auto* f = std::get_if<Fpl>(&v)) return *f;
    return mpl_to_fpl(std::get<Mpl>(v), p);
  }
  if (to == "mpl") {
    if (const Fprs* f = space(v)) return fpl_to_mpl(integral_model(*f, p), p);
    if (auto* f = std::get_if<Fpl>(&v)) return fpl_to_mpl(*f, p);
    return v;
  }
  throw Error(Errc::InvalidInput, "unknown target kind '" + to + "'");
}

int validate(const Document& doc, const Options& o, std::ostream& out) {
  int code = Ok;
  for (const Object& obj : doc.objects) {
    ValidationReport r = validate_any(obj.value, o.search);
    out << header(obj) << "\n";
    out << "valid: " << yes(r.valid()) << "\n";
    for (const AxiomCheck& c : r.checks) {
      out << (c.ok ? "  ok    " : "  FAIL  ") << c.name;
      if (!c.ok && !c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
    if (r.witness) {
      out << "witness: " << r.witness->S.rows() << " x " << r.witness->S.cols() << "\n";
      for (Index i = 0; i < r.witness->S.rows(); ++i) {
        out << " ";
        for (Index j = 0; j < r.witness->S.cols(); ++j) out << " " << format_scalar(r.witness->S(i, j));
        out << "\n";
      }
    }
    if (!r.valid()) code = CheckFailed;
  }
  return code;
}

int classify(const Document& doc, const Options& o, std::ostream& out) {
  int code = Ok;
  for (const Object& obj : doc.objects) {
    out << header(obj) << "\n";
    ValidationReport r = validate_any(obj.value, o.search);
    if (!r.valid()) {
      out << "valid: false (" << r.first_failure() << ")\n";
      code = CheckFailed;
      continue;
    }
    TripleD t = as_triple(obj.value, o.search);
    ClassReport c = lnash::classify(t, o.search);
    out << "nash: " << yes(c.is_nash) << "\n";
    out << "affine: " << yes(c.is_affine) << "\n";
    out << "toroidal_affine: " << yes(c.is_toroidal_affine) << "\n";
    out << "split: d_v=" << c.split.d_v << " d_t+=" << c.split.d_t_plus << " d_t-=" << c.split.d_t_minus << "\n";
    out << "u: u_v=" << c.u.u_v << " u_t+=" << c.u.u_t_plus << " u_t-=" << c.u.u_t_minus << "\n";
    out << "u_t_convention: " << c.u_t_convention << "\n";
    if (t.space.n == 1) {
      CaseLabel1D l = classify_1d(t, o.search);
      out << "case: " << to_string(l.tag) << "\n";
      out << "gamma_class: " << (l.gamma_class ? format_scalar(*l.gamma_class) : std::string("zero")) << "\n";
    } else if (t.space.n == 2) {
      CaseLabel2D l = classify_2d(t, o.search);
      out << "case: " << to_string(l.tag) << "\n";
      if (l.subtype) out << "subtype: " << to_string(*l.subtype) << "\n";
      if (l.param) out << "extension_class: " << to_string(*l.param) << "\n";
    }
  }
  return code;
}

int convert(const Document& doc, const std::string& to, const Options& o, std::ostream& out) {
  Document res;
  res.field = doc.field;
  for (const Object& obj : doc.objects) {
    ObjectValue v = convert(obj.value, to, o.search);
    // every converted object carries a verified witness
    std::visit(
        [&](auto& x) {
          if constexpr (!std::is_same_v<std::decay_t<decltype(x)>, TripleD>)
            if (!x.witness) x.witness = find_polarization(x, o.search);
        },
        v);
    res.objects.push_back({obj.name, std::move(v), obj.line});
  }
  out << emit(normalize(res));
  return Ok;
}

int check_morphisms(const Document& doc, const Options& o, std::ostream& out) {
  int code = Ok;
  for (const MorphismDecl& m : doc.morphisms) {
    TripleD src = as_triple(doc.find(m.src)->value, o.search), dst = as_triple(doc.find(m.dst)->value, o.search);
    MorphismCheck c = check_morphism(m.matrix, src, dst);
    out << "[" << m.name << " : " << m.src << " -> " << m.dst << "]\n";
    out << "morphism: " << yes(c.ok) << "\n";
    for (const std::string& v : c.violations) out << "  violated: " << v << "\n";
    if (!c.ok) code = CheckFailed;
  }
  return code;
}

int wp_check(double a, weierstrass::cplx xi, const Options& o, std::ostream& out) {
  weierstrass::IdentityReport r = weierstrass::identity_suite({a}, xi, o.trunc);
  char buf[160];
  std::snprintf(buf, sizeof buf, "lattice: Z + %.17g i Z\nxi: (%.17g, %.17g)\n", a, xi.real(), xi.imag());
  out << buf;
  for (const auto& c : r.checks) {
    std::snprintf(buf, sizeof buf, "%-32s %.3e < %.0e  %s\n", c.name.c_str(), c.defect, c.tol, c.pass() ? "ok" : "FAIL");
    out << buf;
  }
  out << "result: " << (r.pass() ? "pass" : "fail") << "\n";
  return r.pass() ? Ok : CheckFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of connected commutative locally Nash groups"};
  app.name("lnash");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--tol", o.trunc.target_tol, "base tolerance of the wp-check identities")->check(CLI::PositiveNumber);
  app.add_option("--shells", o.trunc.lattice_shells, "lattice-sum cutoff for wp-check")->check(CLI::Range(2, 100000));
  app.add_option("--terms", o.trunc.series_terms, "q-series terms")->check(CLI::Range(4, 1000));
  app.add_option("--denominator-bound", o.search.denominator_bound, "polarization search denominators")
      ->check(CLI::Range(1, 1000));

  std::string file, to, a_text, xi_text = "0.3";
  auto* v = app.add_subcommand("validate", "check the axioms of every object");
  auto* c = app.add_subcommand("classify", "criteria and case labels of every object");
  auto* cv = app.add_subcommand("convert", "convert every object to another kind");
  auto* cm = app.add_subcommand("check-morphism", "check every morphism block");
  auto* w = app.add_subcommand("wp-check", "run the Weierstrass identity suite");
  for (auto* s : {v, c, cv, cm}) s->add_option("file", file, "input document, - for stdin")->required();
  cv->add_option("--to", to, "target kind")->required()->check(CLI::IsMember({"fprs", "fpl", "mpl"}));
  w->add_option("--a", a_text, "imaginary period, e.g. 3/2")->required();
  w->add_option("--xi", xi_text, "multiplicative parameter, e.g. (3/10, 1/10)");

  std::vector<std::string> argv_store{"lnash"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : BadInput;
  }

  if (w->parsed()) {
    double a;
    weierstrass::cplx xi;
    try {
      a = parse_real(a_text);
      xi = parse_cplx(xi_text);
      if (!(a > 0)) throw std::invalid_argument(a_text);
    } catch (const std::exception&) {
      err << "lnash: cannot read --a " << a_text << " / --xi " << xi_text << "\n";
      return BadInput;
    }
    try {
      return wp_check(a, xi, o, out);
    } catch (const Error& e) {
      err << "lnash: " << e.what() << "\n";
      return CheckFailed;
    }
  }

  Document doc;
  try {
    doc = parse(read_file(file));
  } catch (const std::exception& e) {
    err << "lnash: " << e.what() << "\n";
    return BadInput;
  }
  try {
    if (v->parsed()) return validate(doc, o, out);
    if (c->parsed()) return classify(doc, o, out);
    if (cv->parsed()) return convert(doc, to, o, out);
    return check_morphisms(doc, o, out);
  } catch (const std::exception& e) {
    err << "lnash: " << e.what() << "\n";
    return CheckFailed;
  }
}

}  // namespace lnash::cli
