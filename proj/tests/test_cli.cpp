#include "doctest.h"

#include "lnash/cli/run.hpp"
#include "lnash/equivalence.hpp"
#include "lnash/functors.hpp"
#include "random_mpl.hpp"

#include <fstream>
#include <sstream>

using namespace lnash;
using namespace lnash::cli;
using namespace fx;

namespace {

std::string fixture(const std::string& name) { return std::string(LNASH_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_tmp(const std::string& name, const std::string& text) {
  std::string path = std::string(LNASH_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InvalidInput;
}

const char* kFixtures[] = {"additive.lnd",          "multiplicative.lnd", "twisted.lnd", "elliptic.lnd",
                           "elliptic_additive.lnd", "elliptic_torus.lnd", "split_sum.lnd"};

}  // namespace

TEST_CASE("scalars") {
  KScalar x = parse_scalar("1/2 + 3*t", sqrt2());
  CHECK(x.coeff(0) == Rational(1, 2));
  CHECK(x.coeff(1) == 3);
  CHECK(parse_scalar("t^3 - (1 + t)/2", sqrt2()) == KScalar(Rational(-1, 2)) + KScalar(Rational(3, 2)) * s2());
  CHECK(parse_scalar("1/t", sqrt2()) == KScalar(Rational(1, 2)) * s2());
  CHECK(parse_scalar("-2/4", nullptr) == KScalar(Rational(-1, 2)));
  CHECK(parse_scalar("123456789012345678901234567890", nullptr).coeff(0) ==
        Rational(Integer("123456789012345678901234567890")));
  CHECK(parse_complex("(1/2, -t)", sqrt2()) == CKScalar(KScalar(Rational(1, 2)), -s2()));
  CHECK(parse_complex("(1+t)/2", sqrt2()).is_real());

  for (const char* bad : {"(1,", "1 +", "0.5", "t", "1/0", "2^", "1 2", "(1, 2) 3", "x"}) {
    CAPTURE(bad);
    CHECK(code_of([&] { parse_complex(bad, nullptr); }) == Errc::SyntaxError);
  }
  try {
    parse_complex("(1,", nullptr);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("column 4") != std::string::npos);
  }
  try {
    parse_scalar("1 + * 2", nullptr);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("column 5") != std::string::npos);
  }

  for (const KScalar& k : {KScalar(0), KScalar(Rational(-3, 7)), s2(), -s2(), KScalar(Rational(1, 2)) - KScalar(5) * s2()})
    CHECK(parse_scalar(format_scalar(k), sqrt2()) == k);
  CHECK(format_scalar(KScalar(Rational(1, 2)) + KScalar(3) * s2()) == "1/2+3*t");
  CHECK(format_scalar(CKScalar(KScalar(0), -s2())) == "(0,-t)");
}

TEST_CASE("documents") {
  Document d = parse(slurp(fixture("elliptic.lnd")));
  REQUIRE(d.objects.size() == 1);
  CHECK(d.field->same_as(*sqrt2()));
  const TripleD& t = std::get<TripleD>(d.objects[0].value);
  CHECK(t.space.lambda_r == elliptic().lambda_r);
  CHECK(t.gamma == unit_gamma());
  REQUIRE(d.morphisms.size() == 2);
  CHECK(d.morphisms[0].src == "E");
  CHECK(d.morphisms[1].matrix(0, 0) == KScalar(Rational(1, 2)));

  // rows: whitespace splits entries, binary operators join them
  Document r = parse("[object X : fprs]\nn: 1\nfil_v: 1 x 0\nfil_a: 1 x 0\nlambda_r: 1 x 4\n  1 -2 (5/2, 1 + 0)  1 - 1/2\n");
  const Fprs& x = std::get<Fprs>(r.objects[0].value);
  CHECK(x.lambda_r(0, 0) == CKScalar(1));
  CHECK(x.lambda_r(0, 1) == CKScalar(-2));
  CHECK(x.lambda_r(0, 2) == CKScalar(KScalar(Rational(5, 2)), KScalar(1)));
  CHECK(x.lambda_r(0, 3) == CKScalar(Rational(1, 2)));

  // comments, blank lines, CRLF
  Document c = parse("# c\r\n[object X : fprs]\r\n\r\nn: 1 # one\r\nfil_v: 1 x 0\r\nfil_a: 1 x 1\r\n\r\n  1\r\nlambda_r: 1 x 0\r\n");
  CHECK(std::get<Fprs>(c.objects[0].value).fil_a == KMatrix::Identity(1, 1));
}

TEST_CASE("document errors") {
  const std::string E = "[field]\nt^2 - 2 in (1, 2)\n[object E : triple]\nn: 1\nfil_v: 1 x 0\nfil_a: 1 x 0\nlambda_r: 1 x 2\n  1 (0,t)\ngamma: 1 x 1\n  1\n";
  CHECK(code_of([&] { parse(E + "[morphism f : E -> F]\nmatrix: 1 x 1\n  1\n"); }) == Errc::UnknownReference);
  CHECK(code_of([&] { parse(E + "[field]\nt^2 - 3 in (1, 2)\n"); }) == Errc::MixedFields);
  CHECK(code_of([&] { parse(E + "[object F : fprs]\nn: 1\n"); }) == Errc::SyntaxError);
  CHECK(code_of([&] { parse(E + "[object E : fprs]\n"); }) == Errc::SyntaxError);
  CHECK(code_of([&] { parse(E + "[object F : banana]\n"); }) == Errc::SyntaxError);
  CHECK(code_of([&] { parse("[field]\nt^2 - 2 in (3, 4)\n"); }) == Errc::SyntaxError);
  CHECK(code_of([&] { parse("[field]\nt^2 - 1/2 in (0, 1)\n"); }) == Errc::SyntaxError);
  CHECK(code_of([&] { parse("[object X : fprs]\nn: 2\nfil_v: 1 x 0\nfil_a: 2 x 0\nlambda_r: 2 x 0\n"); }) ==
        Errc::DimensionMismatch);
  CHECK(code_of([&] { parse("[object X : fprs]\nn: 1\nfil_v: 1 x 0\nfil_a: 1 x 1\nlambda_r: 1 x 0\n"); }) ==
        Errc::SyntaxError);
  CHECK(code_of([&] { parse("[object X : fprs]\nn: 1\nfil_v: 1 x 0\ncolour: red\n"); }) == Errc::SyntaxError);
  try {
    parse("[object X : fprs]\nn: 1\nfil_v: 1 x 0\nfil_a: 1 x 1\n  1/\nlambda_r: 1 x 0\n");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SyntaxError);
    CHECK(std::string(e.what()).find("line 5, column 5") != std::string::npos);
  }
}

TEST_CASE("parse after emit is the identity") {
  for (const char* name : kFixtures) {
    CAPTURE(name);
    Document d = parse(slurp(fixture(name)));
    std::string once = emit(d);
    CHECK(emit(parse(once)) == once);
    std::string n = emit(normalize(d));
    CHECK(emit(parse(n)) == n);
    CHECK(emit(normalize(parse(n))) == n);
  }
  std::mt19937 g(7);
  for (int k = 0; k < 30; ++k) {
    Mpl m = random_mpl(g);
    Document d{sqrt2(), {{"M", m, 0}, {"F", mpl_to_fpl(m), 0}}, {}};
    std::string s = emit(d);
    Document back = parse(s);
    CHECK(emit(back) == s);
    const Mpl& b = std::get<Mpl>(back.objects[0].value);
    CHECK(b.lambda_a == m.lambda_a);
    CHECK(b.phi_t_lift == m.phi_t_lift);
    CHECK(b.tau_t == m.tau_t);
  }
}

TEST_CASE("normalization keeps the objects") {
  Document d = parse(slurp(fixture("elliptic.lnd")));
  TripleD& t = std::get<TripleD>(d.objects[0].value);
  TripleD orig = t;
  t.space.lambda_r = t.space.lambda_r * to_ck(to_q(zmat(2, 2, {2, 1, 1, 1})));
  t.gamma = kmat(1, 1, {KScalar(-1)});
  Document n = normalize(d);
  const TripleD& u = std::get<TripleD>(n.objects[0].value);
  CHECK(u.gamma == unit_gamma());
  CHECK(in_rational_span(u.space.lambda_r, orig.space.lambda_r, sqrt2()));
  CHECK(in_rational_span(orig.space.lambda_r, u.space.lambda_r, sqrt2()));
  CHECK(emit(n) == emit(normalize(parse(slurp(fixture("elliptic.lnd"))))));
}

TEST_CASE("classify command") {
  Result r = call({"classify", fixture("elliptic.lnd")});
  CHECK(r.code == 0);
  CHECK(r.out.find("nash: true") != std::string::npos);
  CHECK(r.out.find("affine: true") != std::string::npos);
  CHECK(r.out.find("case: elliptic") != std::string::npos);
  CHECK(r.out.find("gamma_class: 1\n") != std::string::npos);

  const std::string golden =
      "[X : mpl]\n"
      "nash: false\n"
      "affine: false\n"
      "toroidal_affine: false\n"
      "split: d_v=0 d_t+=0 d_t-=0\n"
      "u: u_v=1 u_t+=0 u_t-=0\n"
      "u_t_convention: " + std::string(kUtConvention) + "\n"
      "case: nonsplit-extension\n"
      "subtype: additive\n"
      "extension_class: unique\n";
  CHECK(call({"classify", fixture("elliptic_additive.lnd")}).out == golden);

  std::map<std::string, std::string> cases = {{"additive.lnd", "additive"}, {"multiplicative.lnd", "multiplicative"},
                                              {"twisted.lnd", "twisted"}, {"split_sum.lnd", "split-sum"}};
  for (const auto& [file, tag] : cases) CHECK(call({"classify", fixture(file)}).out.find("case: " + tag + "\n") != std::string::npos);

  // the three lifts share one descriptor
  std::string torus = call({"classify", fixture("elliptic_torus.lnd")}).out;
  size_t first = torus.find("extension_class: ");
  REQUIRE(first != std::string::npos);
  std::string line = torus.substr(first, torus.find('\n', first) - first);
  int count = 0;
  for (size_t p = torus.find(line); p != std::string::npos; p = torus.find(line, p + 1)) ++count;
  CHECK(count == 3);
}

TEST_CASE("validate and check-morphism commands") {
  Result v = call({"validate", fixture("elliptic.lnd")});
  CHECK(v.code == 0);
  CHECK(v.out.find("valid: true") != std::string::npos);
  CHECK(v.out.find("witness: 1 x 1") != std::string::npos);

  std::string bad = write_tmp("invalid.lnd",
                              "[object T : triple]\nn: 1\nfil_v: 1 x 0\nfil_a: 1 x 1\n  1\nlambda_r: 1 x 1\n  (1,1)\ngamma: 1 x 0\n");
  Result b = call({"validate", bad});
  CHECK(b.code == 1);
  CHECK(b.out.find("FAIL  sigma-stable") != std::string::npos);
  CHECK(call({"classify", bad}).code == 1);

  Result m = call({"check-morphism", fixture("elliptic.lnd")});
  CHECK(m.code == 1);
  CHECK(m.out.find("[double : E -> E]\nmorphism: true") != std::string::npos);
  CHECK(m.out.find("[half : E -> E]\nmorphism: false\n  violated: phi(Gamma)") != std::string::npos);
}

TEST_CASE("convert round trips") {
  for (const char* name : {"elliptic_torus.lnd", "elliptic_additive.lnd"}) {
    CAPTURE(name);
    Result m0 = call({"convert", fixture(name), "--to", "mpl"});
    Result f = call({"convert", fixture(name), "--to", "fpl"});
    REQUIRE(m0.code == 0);
    REQUIRE(f.code == 0);
    Result m1 = call({"convert", write_tmp("f.lnd", f.out), "--to", "mpl"});
    CHECK(m1.out == m0.out);
    Result f1 = call({"convert", write_tmp("m.lnd", m1.out), "--to", "fpl"});
    CHECK(f1.out == f.out);
  }
  // a triple goes through its integral model; classification survives
  Result e = call({"convert", fixture("elliptic.lnd"), "--to", "mpl"});
  CHECK(e.code == 0);
  Result c = call({"classify", write_tmp("e.lnd", e.out)});
  CHECK(c.out.find("case: elliptic") != std::string::npos);
  Result p = call({"convert", fixture("split_sum.lnd"), "--to", "fprs"});
  CHECK(p.out.find("[object P : fprs]") != std::string::npos);
}

TEST_CASE("wp-check command") {
  Result r = call({"wp-check", "--a", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("legendre") != std::string::npos);
  CHECK(r.out.find("result: pass") != std::string::npos);
  CHECK(call({"wp-check", "--a", "3/2", "--xi", "(3/10, 1/10)", "--shells", "300"}).code == 0);
  CHECK(call({"wp-check", "--a", "0.5", "--terms", "30"}).code == 0);
  // an impossible tolerance fails the checks, not the input
  CHECK(call({"wp-check", "--a", "2", "--tol", "1e-30"}).code == 1);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"validate"}).code == 2);
  CHECK(call({"validate", "/nonexistent/file.lnd"}).code == 2);
  CHECK(call({"convert", fixture("elliptic.lnd"), "--to", "banana"}).code == 2);
  CHECK(call({"wp-check", "--a", "-1"}).code == 2);
  CHECK(call({"wp-check", "--a", "abc"}).code == 2);
  CHECK(call({"--help"}).code == 0);
  Result s = call({"validate", write_tmp("syntax.lnd", "[object X : fprs]\nn: 1\nfil_v: 1 x 1\n  (1,\n")});
  CHECK(s.code == 2);
  CHECK(s.err.find("line 4") != std::string::npos);
  CHECK(call({"check-morphism", write_tmp("ref.lnd", slurp(fixture("additive.lnd")) + "[morphism f : A -> B]\nmatrix: 1 x 1\n  1\n")})
            .code == 2);
  CHECK(call({"validate", fixture("elliptic.lnd"), "--denominator-bound", "2"}).code == 0);
}
