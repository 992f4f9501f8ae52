#include "lnash/cli/document.hpp"

#include "lnash/functors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace lnash::cli {

namespace {

[[noreturn]] void syntax(int line, int col, const std::string& what) {
  std::string where = line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(col) + ": "
                               : "column " + std::to_string(col) + ": ";
  throw Error(Errc::SyntaxError, where + what);
}

// Expressions in t over Q. Values are kept as polynomials and reduced at the end.
class ExprParser {
 public:
  ExprParser(std::string_view s, const FieldPtr& field, bool allow_t, int line, int col0)
      : s_(s), field_(field), allow_t_(allow_t), line_(line), col0_(col0) {}

  QPoly expr() {
    QPoly v = term();
    for (;;) {
      skip();
      if (peek() == '+') {
        ++i_;
        v = poly::add(v, term());
      } else if (peek() == '-') {
        ++i_;
        v = poly::sub(v, term());
      } else {
        return v;
      }
    }
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(at_end() ? "unexpected end of input, expected '" + std::string(1, c) + "'"
                                   : "expected '" + std::string(1, c) + "'");
    ++i_;
  }

  void finish() {
    skip();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
  }

  bool at_end() const { return i_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[i_]; }

 private:
  [[noreturn]] void fail(const std::string& what) const { syntax(line_, col0_ + static_cast<int>(i_), what); }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  QPoly term() {
    QPoly v = unary();
    for (;;) {
      skip();
      if (peek() == '*') {
        ++i_;
        v = poly::mul(v, unary());
      } else if (peek() == '/') {
        ++i_;
        size_t at = i_;
        QPoly d = unary();
        v = divide(v, d, at);
      } else {
        return v;
      }
    }
  }

  QPoly divide(const QPoly& a, const QPoly& d, size_t at) {
    if (poly::degree(d) < 0) {
      i_ = at;
      fail("division by zero");
    }
    if (poly::degree(d) == 0) return poly::scale(a, Rational(1) / d[0]);
    if (!field_) {
      i_ = at;
      fail("division by a polynomial in t");
    }
    KScalar k(field_, d);
    if (k.is_zero()) {
      i_ = at;
      fail("division by zero");
    }
    return poly::mul(a, k.inverse().coeffs());
  }

  QPoly unary() {
    skip();
    if (peek() == '-') {
      ++i_;
      return poly::scale(unary(), Rational(-1));
    }
    if (peek() == '+') {
      ++i_;
      return unary();
    }
    return power();
  }

  QPoly power() {
    QPoly base = atom();
    skip();
    if (peek() != '^') return base;
    ++i_;
    skip();
    size_t start = i_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    if (start == i_) fail("expected a nonnegative integer exponent");
    if (i_ - start > 4) {
      i_ = start;
      fail("exponent too large");
    }
    int e = std::stoi(std::string(s_.substr(start, i_ - start)));
    QPoly r{Rational(1)};
    for (int k = 0; k < e; ++k) {
      r = poly::mul(r, base);
      if (field_) r = field_->reduce(r);
    }
    return r;
  }

  QPoly atom() {
    skip();
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
      if (peek() == '.') fail("decimal literals are not exact; write p/q");
      QPoly v{Rational(Integer(std::string(s_.substr(start, i_ - start))))};
      poly::trim(v);
      return v;
    }
    if (c == 't') {
      if (!allow_t_) fail("'t' used without a [field] block");
      ++i_;
      return {Rational(0), Rational(1)};
    }
    if (c == '(') {
      ++i_;
      QPoly v = expr();
      expect(')');
      return v;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  FieldPtr field_;
  bool allow_t_;
  int line_, col0_;
  size_t i_ = 0;
};

KScalar to_scalar(const QPoly& p, const FieldPtr& field) {
  QPoly q = p;
  poly::trim(q);
  if (q.size() <= 1) return q.empty() ? KScalar(0) : KScalar(q[0]);
  return KScalar(field, q);
}

bool has_t(const FieldPtr& field) { return field != nullptr; }

KScalar scalar_at(std::string_view s, const FieldPtr& f, int line, int col) {
  ExprParser p(s, f, has_t(f), line, col);
  QPoly v = p.expr();
  p.finish();
  return to_scalar(v, f);
}

CKScalar complex_at(std::string_view s, const FieldPtr& f, int line, int col) {
  if (s.find(',') == std::string_view::npos) return CKScalar(scalar_at(s, f, line, col));
  ExprParser p(s, f, has_t(f), line, col);
  p.expect('(');
  QPoly re = p.expr();
  p.expect(',');
  QPoly im = p.expr();
  p.expect(')');
  p.finish();
  return CKScalar(to_scalar(re, f), to_scalar(im, f));
}

struct Entry {
  std::string text;
  int col;
};

bool is_op(char c) { return c == '+' || c == '-' || c == '*' || c == '/' || c == '^'; }

// whitespace separates entries, except around binary operators
std::vector<Entry> split_row(const std::string& row, int line) {
  std::vector<Entry> chunks;
  int depth = 0;
  for (size_t i = 0; i < row.size();) {
    if (std::isspace(static_cast<unsigned char>(row[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < row.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(row[i])))) {
      if (row[i] == '(') ++depth;
      if (row[i] == ')') --depth;
      ++i;
    }
    chunks.push_back({row.substr(start, i - start), static_cast<int>(start) + 1});
  }
  if (depth != 0) syntax(line, static_cast<int>(row.size()) + 1, "unbalanced parentheses");
  std::vector<Entry> out;
  bool join_next = false;
  for (const Entry& c : chunks) {
    bool join = join_next || (!out.empty() && is_op(c.text[0]) && c.text[0] != '-') ||
                (!out.empty() && c.text == "-");
    if (join) {
      out.back().text += std::string(static_cast<size_t>(c.col - out.back().col) - out.back().text.size(), ' ') + c.text;
    } else {
      out.push_back(c);
    }
    join_next = is_op(c.text.back());
  }
  return out;
}

std::string trim(std::string s) {
  size_t b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

bool is_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

enum class KeyType { Int, K, CK, Z };

const std::map<std::string, KeyType>& key_types() {
  static const std::map<std::string, KeyType> m = {
      {"n", KeyType::Int},         {"a_dim", KeyType::Int},    {"v_dim", KeyType::Int},
      {"t_rank", KeyType::Int},    {"fil_v", KeyType::K},      {"fil_a", KeyType::K},
      {"gamma", KeyType::K},       {"phi_v", KeyType::K},      {"witness", KeyType::K},
      {"matrix", KeyType::K},      {"lambda_r", KeyType::CK},  {"lambda", KeyType::CK},
      {"lambda_a", KeyType::CK},   {"phi_t", KeyType::CK},     {"tau_t", KeyType::Z}};
  return m;
}

struct KindKeys {
  std::vector<std::string> required;
  bool witness;
};

const std::map<std::string, KindKeys>& kinds() {
  static const std::map<std::string, KindKeys> m = {
      {"fprs", {{"n", "fil_v", "fil_a", "lambda_r"}, true}},
      {"fpl", {{"n", "fil_v", "fil_a", "lambda"}, true}},
      {"mpl", {{"a_dim", "v_dim", "t_rank", "lambda_a", "tau_t", "phi_v", "phi_t"}, true}},
      {"triple", {{"n", "fil_v", "fil_a", "lambda_r", "gamma"}, true}},
      {"morphism", {{"matrix"}, false}}};
  return m;
}

using Value = std::variant<Integer, KMatrix, CKMatrix, ZMatrix>;

struct Block {
  std::string kind;  // "field", "morphism" or an object kind
  std::string name, src, dst;
  int line = 0;
  std::map<std::string, std::pair<Value, int>> values;
};

Index as_index(const Block& b, const std::string& key) {
  const Integer& v = std::get<Integer>(b.values.at(key).first);
  if (v < 0 || v > 1000) syntax(b.values.at(key).second, 1, key + " out of range");
  return static_cast<Index>(v.convert_to<long>());
}

template <class M>
const M& mat(const Block& b, const std::string& key) {
  return std::get<M>(b.values.at(key).first);
}

void shape(const Block& b, const std::string& key, Index rows, Index cols) {
  auto [r, c] = std::visit(
      [](const auto& v) -> std::pair<Index, Index> {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Integer>)
          return {0, 0};
        else
          return {v.rows(), v.cols()};
      },
      b.values.at(key).first);
  if (r != rows || (cols >= 0 && c != cols))
    throw Error(Errc::DimensionMismatch, "line " + std::to_string(b.values.at(key).second) + ": " + key + " must be " +
                                             std::to_string(rows) + " x " +
                                             (cols >= 0 ? std::to_string(cols) : std::string("*")));
}

std::optional<PolarizationWitness> witness_of(const Block& b, Index dim) {
  if (!b.values.count("witness")) return std::nullopt;
  shape(b, "witness", dim, dim);
  return PolarizationWitness{mat<KMatrix>(b, "witness")};
}

Index quotient_dim(const KMatrix& fil_a) { return fil_a.rows() - rank<KScalar>(fil_a); }

ObjectValue build(const Block& b, const FieldPtr& K) {
  if (b.kind == "mpl") {
    Mpl m;
    m.field = K;
    m.a_dim = as_index(b, "a_dim");
    m.v_dim = as_index(b, "v_dim");
    m.t_rank = as_index(b, "t_rank");
    shape(b, "lambda_a", m.a_dim, 2 * m.a_dim);
    shape(b, "tau_t", m.t_rank, m.t_rank);
    shape(b, "phi_v", m.a_dim, m.v_dim);
    shape(b, "phi_t", m.a_dim, m.t_rank);
    m.lambda_a = mat<CKMatrix>(b, "lambda_a");
    m.tau_t = mat<ZMatrix>(b, "tau_t");
    m.phi_v = mat<KMatrix>(b, "phi_v");
    m.phi_t_lift = mat<CKMatrix>(b, "phi_t");
    m.witness = witness_of(b, m.a_dim);
    return m;
  }
  Index n = as_index(b, "n");
  shape(b, "fil_v", n, -1);
  shape(b, "fil_a", n, -1);
  const KMatrix& fa = mat<KMatrix>(b, "fil_a");
  if (b.kind == "fpl") {
    shape(b, "lambda", n, -1);
    Fpl f{K, n, mat<KMatrix>(b, "fil_v"), fa, mat<CKMatrix>(b, "lambda"), witness_of(b, quotient_dim(fa))};
    return f;
  }
  shape(b, "lambda_r", n, -1);
  Fprs x{K, n, mat<KMatrix>(b, "fil_v"), fa, mat<CKMatrix>(b, "lambda_r"), witness_of(b, quotient_dim(fa))};
  if (b.kind == "fprs") return x;
  shape(b, "gamma", n, -1);
  return TripleD{x, mat<KMatrix>(b, "gamma")};
}

}  // namespace

KScalar parse_scalar(std::string_view text, const FieldPtr& field) { return scalar_at(text, field, 0, 1); }
CKScalar parse_complex(std::string_view text, const FieldPtr& field) { return complex_at(text, field, 0, 1); }

const Object* Document::find(const std::string& name) const {
  for (const Object& o : objects)
    if (o.name == name) return &o;
  return nullptr;
}

std::string kind_name(const ObjectValue& v) {
  static const char* names[] = {"fprs", "fpl", "mpl", "triple"};
  return names[v.index()];
}

Document parse(std::string_view text) {
  std::vector<std::string> lines;
  {
    size_t start = 0;
    for (;;) {
      size_t nl = text.find('\n', start);
      std::string l(text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start));
      if (size_t h = l.find('#'); h != std::string::npos) l.erase(h);
      while (!l.empty() && (l.back() == '\r' || l.back() == ' ' || l.back() == '\t')) l.pop_back();
      lines.push_back(l);
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
  }

  Document doc;
  bool field_seen = false, field_line_seen = false;
  FieldPtr K;  // null until declared
  std::vector<Block> blocks;
  std::set<std::string> names;

  for (size_t i = 0; i < lines.size(); ++i) {
    const int ln = static_cast<int>(i) + 1;
    std::string l = trim(lines[i]);
    if (l.empty()) continue;
    if (l[0] == '[') {
      if (l.back() != ']') syntax(ln, static_cast<int>(lines[i].size()) + 1, "expected ']'");
      std::string h = trim(l.substr(1, l.size() - 2));
      if (h == "field") {
        if (field_seen) throw Error(Errc::MixedFields, "line " + std::to_string(ln) + ": a second [field] block");
        if (!blocks.empty()) syntax(ln, 1, "[field] must come before objects");
        field_seen = true;
        blocks.push_back({"field", "", "", "", ln, {}});
        continue;
      }
      size_t sp = h.find(' ');
      std::string head = h.substr(0, sp);
      if (head != "object" && head != "morphism") syntax(ln, 2, "unknown block '" + head + "'");
      size_t colon = h.find(':');
      if (sp == std::string::npos || colon == std::string::npos) syntax(ln, 2, "expected '[" + head + " <name> : ...]'");
      Block b;
      b.line = ln;
      b.name = trim(h.substr(sp, colon - sp));
      std::string rest = trim(h.substr(colon + 1));
      if (!is_ident(b.name)) syntax(ln, static_cast<int>(sp) + 2, "bad name '" + b.name + "'");
      if (!names.insert(b.name).second) syntax(ln, static_cast<int>(sp) + 2, "duplicate name '" + b.name + "'");
      if (head == "object") {
        if (!kinds().count(rest) || rest == "morphism") syntax(ln, static_cast<int>(colon) + 3, "unknown kind '" + rest + "'");
        b.kind = rest;
      } else {
        size_t arrow = rest.find("->");
        if (arrow == std::string::npos) syntax(ln, static_cast<int>(colon) + 3, "expected '<src> -> <dst>'");
        b.kind = "morphism";
        b.src = trim(rest.substr(0, arrow));
        b.dst = trim(rest.substr(arrow + 2));
        if (!is_ident(b.src) || !is_ident(b.dst)) syntax(ln, static_cast<int>(colon) + 3, "bad reference");
      }
      blocks.push_back(std::move(b));
      continue;
    }
    if (blocks.empty()) syntax(ln, 1, "content outside a block");
    Block& b = blocks.back();
    if (b.kind == "field") {
      if (field_line_seen) syntax(ln, 1, "the [field] block holds one line");
      field_line_seen = true;
      size_t in = l.rfind(" in ");
      if (in == std::string::npos) syntax(ln, 1, "expected '<polynomial> in (<lo>, <hi>)'");
      const int off = static_cast<int>(lines[i].find_first_not_of(" \t")) + 1;
      ExprParser pp(std::string_view(l).substr(0, in), nullptr, true, ln, off);
      QPoly p = pp.expr();
      pp.finish();
      std::string_view iv = std::string_view(l).substr(in + 4);
      const int ivcol = off + static_cast<int>(in) + 4;
      ExprParser ip(iv, nullptr, false, ln, ivcol);
      ip.expect('(');
      QPoly lo = ip.expr();
      ip.expect(',');
      QPoly hi = ip.expr();
      ip.expect(')');
      ip.finish();
      std::vector<Integer> coeffs;
      for (const Rational& c : p) {
        if (!is_integral(c)) syntax(ln, off, "minimal polynomial needs integer coefficients");
        coeffs.push_back(num(c));
      }
      auto value = [](const QPoly& q) { return q.empty() ? Rational(0) : q[0]; };
      try {
        K = make_field(coeffs, value(lo), value(hi));
      } catch (const Error& e) {
        syntax(ln, off, e.what());
      }
      continue;
    }
    size_t colon = l.find(':');
    if (colon == std::string::npos) syntax(ln, 1, "expected 'key: value'");
    std::string key = trim(l.substr(0, colon)), val = trim(l.substr(colon + 1));
    const int key_col = static_cast<int>(lines[i].find_first_not_of(" \t")) + 1;
    const int val_col = static_cast<int>(lines[i].find(':')) + 2 + static_cast<int>(lines[i].substr(lines[i].find(':') + 1).find_first_not_of(" \t"));
    const auto& kk = kinds().at(b.kind);
    bool allowed = std::find(kk.required.begin(), kk.required.end(), key) != kk.required.end() ||
                   (kk.witness && key == "witness");
    if (!allowed) syntax(ln, key_col, "unknown key '" + key + "' for " + b.kind);
    if (b.values.count(key)) syntax(ln, key_col, "duplicate key '" + key + "'");
    KeyType type = key_types().at(key);
    if (type == KeyType::Int) {
      if (val.empty() || !std::all_of(val.begin(), val.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        syntax(ln, val_col, "expected a nonnegative integer");
      b.values[key] = {Integer(val), ln};
      continue;
    }
    size_t x = val.find('x');
    auto dim = [&](std::string s) -> Index {
      s = trim(s);
      if (s.empty() || s.size() > 4 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        syntax(ln, val_col, "expected '<rows> x <cols>'");
      return std::stol(s);
    };
    if (x == std::string::npos) syntax(ln, val_col, "expected '<rows> x <cols>'");
    Index R = dim(val.substr(0, x)), C = dim(val.substr(x + 1));
    KMatrix Km(R, C);
    CKMatrix Cm(R, C);
    for (Index r = 0; r < (C ? R : 0); ++r) {
      ++i;
      while (i < lines.size() && trim(lines[i]).empty()) ++i;
      if (i >= lines.size()) syntax(static_cast<int>(lines.size()), 1, "matrix '" + key + "' is missing rows");
      const int rl = static_cast<int>(i) + 1;
      if (trim(lines[i])[0] == '[') syntax(rl, 1, "matrix '" + key + "' is missing rows");
      std::vector<Entry> es = split_row(lines[i], rl);
      if (static_cast<Index>(es.size()) != C)
        syntax(rl, 1, "expected " + std::to_string(C) + " entries, found " + std::to_string(es.size()));
      for (Index c = 0; c < C; ++c) {
        if (type == KeyType::CK)
          Cm(r, c) = complex_at(es[c].text, K, rl, es[c].col);
        else
          Km(r, c) = scalar_at(es[c].text, K, rl, es[c].col);
      }
    }
    if (type == KeyType::CK) {
      b.values[key] = {Cm, ln};
    } else if (type == KeyType::Z) {
      if (!is_integral(Km)) syntax(ln, key_col, key + " must be an integer matrix");
      b.values[key] = {to_z(to_rational(Km)), ln};
    } else {
      b.values[key] = {Km, ln};
    }
  }

  if (field_seen && !field_line_seen) syntax(static_cast<int>(lines.size()), 1, "empty [field] block");
  doc.field = K ? K : rational_field();
  for (const Block& b : blocks) {
    if (b.kind == "field") continue;
    for (const std::string& k : kinds().at(b.kind).required)
      if (!b.values.count(k)) syntax(b.line, 1, b.kind + " '" + b.name + "' is missing '" + k + "'");
    if (b.kind == "morphism") {
      doc.morphisms.push_back({b.name, b.src, b.dst, mat<KMatrix>(b, "matrix"), b.line});
    } else {
      doc.objects.push_back({b.name, build(b, doc.field), b.line});
    }
  }
  for (const MorphismDecl& m : doc.morphisms)
    for (const std::string& ref : {m.src, m.dst})
      if (!doc.find(ref))
        throw Error(Errc::UnknownReference, "line " + std::to_string(m.line) + ": unknown object '" + ref + "'");
  return doc;
}

std::string format_scalar(const KScalar& x) {
  const QPoly& c = x.coeffs();
  std::string out;
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    std::string term;
    if (k == 0) {
      term = c[k].str();
    } else {
      std::string var = k == 1 ? "t" : "t^" + std::to_string(k);
      term = c[k] == 1 ? var : c[k] == -1 ? "-" + var : c[k].str() + "*" + var;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::string format_scalar(const CKScalar& x) {
  if (x.is_real()) return format_scalar(x.re());
  return "(" + format_scalar(x.re()) + "," + format_scalar(x.im()) + ")";
}

namespace {

template <class M>
void put_matrix(std::map<std::string, std::string>& keys, const std::string& key, const M& m) {
  std::string s = std::to_string(m.rows()) + " x " + std::to_string(m.cols()) + "\n";
  for (Index r = 0; r < (m.cols() ? m.rows() : 0); ++r) {
    s += " ";
    for (Index c = 0; c < m.cols(); ++c) {
      if constexpr (std::is_same_v<typename M::Scalar, Integer>)
        s += " " + m(r, c).str();
      else
        s += " " + format_scalar(m(r, c));
    }
    s += "\n";
  }
  s.pop_back();
  keys[key] = s;
}

void put_space(std::map<std::string, std::string>& keys, Index n, const KMatrix& fv, const KMatrix& fa,
               const std::optional<PolarizationWitness>& w) {
  keys["n"] = std::to_string(n);
  put_matrix(keys, "fil_v", fv);
  put_matrix(keys, "fil_a", fa);
  if (w) put_matrix(keys, "witness", w->S);
}

KMatrix echelon(const KMatrix& M) { return M.cols() ? column_echelon<KScalar>(M) : M; }

KMatrix hnf_basis(const KMatrix& G, const FieldPtr& K) {
  if (G.cols() == 0) return G;
  QMatrix R = restrict_scalars(G, K);
  Rational d(common_denominator(R));
  HermiteForm h = hnf(to_z(QMatrix(R * d)));
  return G * to_k(to_q(h.U)).leftCols(h.rank());
}

}  // namespace

Document normalize(const Document& doc) {
  Document out = doc;
  for (Object& o : out.objects) {
    auto space = [&](auto& x) {
      x.fil_v = echelon(x.fil_v);
      x.fil_a = echelon(x.fil_a);
    };
    std::visit(
        [&](auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Fprs>) {
            space(v);
            v.lambda_r = rational_span_basis(v.lambda_r, doc.field);
          } else if constexpr (std::is_same_v<T, Fpl>) {
            space(v);
          } else if constexpr (std::is_same_v<T, TripleD>) {
            space(v.space);
            v.space.lambda_r = rational_span_basis(v.space.lambda_r, doc.field);
            v.gamma = hnf_basis(v.gamma, doc.field);
          }
        },
        o.value);
  }
  return out;
}

std::string emit(const Document& doc) {
  std::string out = "[field]\n" + doc.field->to_string() + "\n";
  for (const Object& o : doc.objects) {
    std::map<std::string, std::string> keys;
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Fprs>) {
            put_space(keys, v.n, v.fil_v, v.fil_a, v.witness);
            put_matrix(keys, "lambda_r", v.lambda_r);
          } else if constexpr (std::is_same_v<T, Fpl>) {
            put_space(keys, v.n, v.fil_v, v.fil_a, v.witness);
            put_matrix(keys, "lambda", v.lambda);
          } else if constexpr (std::is_same_v<T, TripleD>) {
            put_space(keys, v.space.n, v.space.fil_v, v.space.fil_a, v.space.witness);
            put_matrix(keys, "lambda_r", v.space.lambda_r);
            put_matrix(keys, "gamma", v.gamma);
          } else {
            keys["a_dim"] = std::to_string(v.a_dim);
            keys["v_dim"] = std::to_string(v.v_dim);
            keys["t_rank"] = std::to_string(v.t_rank);
            put_matrix(keys, "lambda_a", v.lambda_a);
            put_matrix(keys, "tau_t", v.tau_t);
            put_matrix(keys, "phi_v", v.phi_v);
            put_matrix(keys, "phi_t", v.phi_t_lift);
            if (v.witness) put_matrix(keys, "witness", v.witness->S);
          }
        },
        o.value);
    out += "\n[object " + o.name + " : " + kind_name(o.value) + "]\n";
    for (const auto& [k, v] : keys) out += k + ": " + v + "\n";
  }
  for (const MorphismDecl& m : doc.morphisms) {
    std::map<std::string, std::string> keys;
    put_matrix(keys, "matrix", m.matrix);
    out += "\n[morphism " + m.name + " : " + m.src + " -> " + m.dst + "]\n";
    out += "matrix: " + keys["matrix"] + "\n";
  }
  return out;
}

}  // namespace lnash::cli
