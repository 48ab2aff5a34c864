#include "holder/checklist.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "holder/errors.hpp"
#include "holder/holder_core.hpp"
#include "holder/special_points.hpp"

namespace holder {

enum class Op { Literal, Pi, Neg, Add, Sub, Mul, Div, Pow, Call, Compare };
enum class Cmp { Lt, Gt, Le, Ge };

struct Expr {
  Op op = Op::Literal;
  Interval value;            // Literal
  std::string name;          // Call
  std::vector<Cmp> cmps;     // Compare: operands.size() == cmps.size() + 1
  std::vector<std::shared_ptr<const Expr>> operands;
};

namespace {

using ExprPtr = std::shared_ptr<const Expr>;

struct ParseError {
  std::string message;
};

ExprPtr make(Op op, std::vector<ExprPtr> operands = {}) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->operands = std::move(operands);
  return e;
}

bool is_unary_function(std::string_view name) {
  return name == "f" || name == "df" || name == "ddf" || name == "sqrt" || name == "sin" || name == "cos" ||
         name == "abs" || name == "atan" || name == "asin" || name == "theta" || name == "alpha";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse_chain() {
    std::vector<ExprPtr> operands{parse_sum()};
    std::vector<Cmp> cmps;
    while (true) {
      skip_space();
      Cmp c;
      if (consume("<=")) c = Cmp::Le;
      else if (consume(">=")) c = Cmp::Ge;
      else if (consume("<")) c = Cmp::Lt;
      else if (consume(">")) c = Cmp::Gt;
      else break;
      cmps.push_back(c);
      operands.push_back(parse_sum());
    }
    if (cmps.empty()) fail("expected a comparison (<, >, <=, >=)");
    expect_end();
    auto e = std::make_shared<Expr>();
    e->op = Op::Compare;
    e->cmps = std::move(cmps);
    e->operands = std::move(operands);
    return e;
  }

  ExprPtr parse_term_only() {
    ExprPtr e = parse_sum();
    expect_end();
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError{what + " at column " + std::to_string(pos_ + 1)};
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool consume(std::string_view tok) {
    skip_space();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(std::string_view(&c, 1))) fail(std::string("expected '") + c + "'");
  }

  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  ExprPtr parse_sum() {
    ExprPtr lhs = parse_product();
    while (true) {
      if (consume("+")) lhs = make(Op::Add, {lhs, parse_product()});
      else if (consume("-")) lhs = make(Op::Sub, {lhs, parse_product()});
      else return lhs;
    }
  }

  ExprPtr parse_product() {
    ExprPtr lhs = parse_unary();
    while (true) {
      if (consume("*")) lhs = make(Op::Mul, {lhs, parse_unary()});
      else if (consume("/")) lhs = make(Op::Div, {lhs, parse_unary()});
      else return lhs;
    }
  }

  ExprPtr parse_unary() {
    if (consume("-")) return make(Op::Neg, {parse_unary()});
    if (consume("+")) return parse_unary();
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_primary();
    if (consume("^")) return make(Op::Pow, {base, parse_unary()});
    return base;
  }

  ExprPtr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_sum();
      expect(')');
      return inner;
    }
    if ((c >= '0' && c <= '9') || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "pi") return make(Op::Pi);
      if (!is_unary_function(name)) {
        pos_ = start;
        fail("unknown name '" + name + "'");
      }
      expect('(');
      auto call = std::make_shared<Expr>();
      call->op = Op::Call;
      call->name = name;
      call->operands.push_back(parse_sum());
      expect(')');
      return call;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  ExprPtr parse_number() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || !std::isfinite(v)) fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - first);
    auto e = std::make_shared<Expr>();
    e->op = Op::Literal;
    e->value = enclose_decimal(v);
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int as_index(const Interval& v, const std::string& fn) {
  if (!v.is_point() || v.lo() != std::floor(v.lo()) || v.lo() < 1.0 || v.lo() > kMaxIndex + 1) {
    throw DomainError(fn + "() needs an integer index in [1, " + std::to_string(kMaxIndex + 1) + "]");
  }
  return static_cast<int>(v.lo());
}

Interval eval(const Expr& e) {
  switch (e.op) {
    case Op::Literal: return e.value;
    case Op::Pi: return pi_interval();
    case Op::Neg: return -eval(*e.operands[0]);
    case Op::Add: return eval(*e.operands[0]) + eval(*e.operands[1]);
    case Op::Sub: return eval(*e.operands[0]) - eval(*e.operands[1]);
    case Op::Mul: return eval(*e.operands[0]) * eval(*e.operands[1]);
    case Op::Div: return eval(*e.operands[0]) / eval(*e.operands[1]);
    case Op::Pow: {
      const Interval ex = eval(*e.operands[1]);
      if (!ex.is_point() || ex.lo() != std::floor(ex.lo()) || ex.lo() < 0.0 || ex.lo() > 64.0) {
        throw DomainError("exponent must be an integer literal in [0, 64]");
      }
      return pow(eval(*e.operands[0]), static_cast<unsigned>(ex.lo()));
    }
    case Op::Call: {
      const Interval a = eval(*e.operands[0]);
      if (e.name == "f") return f(a);
      if (e.name == "df") return df(a);
      if (e.name == "ddf") return ddf(a);
      if (e.name == "sqrt") return sqrt(a);
      if (e.name == "sin") return sin(a);
      if (e.name == "cos") return cos(a);
      if (e.name == "abs") return abs(a);
      if (e.name == "atan") return atan(a);
      if (e.name == "asin") return asin(a);
      if (e.name == "theta") return theta_iv(as_index(a, e.name));
      return alpha_iv(as_index(a, e.name));
    }
    case Op::Compare: break;
  }
  throw DomainError("comparison used as a term");
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::vector<ChecklistItem> parse_checklist(std::string_view text, std::string_view source) {
  std::vector<ChecklistItem> items;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string line = trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty() || line[0] == '#') continue;

    const auto where = [&](const std::string& msg) {
      return ConfigError(std::string(source) + ":" + std::to_string(line_no) + ": " + msg);
    };
    const auto bar1 = line.find('|');
    const auto bar2 = line.rfind('|');
    if (bar1 == std::string::npos || bar2 == bar1) throw where("expected 'id | anchor | expression'");
    ChecklistItem item;
    item.id = trim(std::string_view(line).substr(0, bar1));
    item.anchor = trim(std::string_view(line).substr(bar1 + 1, bar2 - bar1 - 1));
    item.expression = trim(std::string_view(line).substr(bar2 + 1));
    item.line = line_no;
    if (item.id.empty()) throw where("empty id");
    if (item.anchor.empty()) throw where("empty anchor");
    try {
      item.root = Parser(item.expression).parse_chain();
    } catch (const ParseError& e) {
      throw where(e.message + " in '" + item.expression + "'");
    }
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<ChecklistItem> load_checklist(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read checklist file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_checklist(buf.str(), path);
}

Interval evaluate_term(std::string_view text) {
  try {
    return eval(*Parser(text).parse_term_only());
  } catch (const ParseError& e) {
    throw ConfigError(e.message + " in '" + std::string(text) + "'");
  }
}

CheckResult evaluate_item(const ChecklistItem& item) {
  const Expr& chain = *item.root;
  CheckResult out;
  try {
    std::vector<Interval> values;
    values.reserve(chain.operands.size());
    for (const auto& operand : chain.operands) values.push_back(eval(*operand));
    for (std::size_t i = 0; i < chain.cmps.size(); ++i) {
      const Interval& l = values[i];
      const Interval& r = values[i + 1];
      const Cmp c = chain.cmps[i];
      const Interval diff = (c == Cmp::Lt || c == Cmp::Le) ? r - l : l - r;
      CheckResult link = (c == Cmp::Lt || c == Cmp::Gt) ? certify_strict(item.id, item.anchor, diff)
                                                        : certify_nonstrict(item.id, item.anchor, diff);
      if (i == 0 || worse(link.verdict, out.verdict) != out.verdict ||
          (link.verdict == out.verdict && link.margin.lo() < out.margin.lo())) {
        out = std::move(link);
      }
    }
    out.detail = item.expression;
  } catch (const std::exception& e) {
    out = CheckResult{};
    out.id = item.id;
    out.anchor = item.anchor;
    out.verdict = Verdict::Undecided;
    out.margin = Interval{0.0};
    out.detail = item.expression + " (evaluation error: " + e.what() + ")";
  }
  return out;
}

std::string_view default_checklist() {
  static constexpr std::string_view kCorpus = R"(# Scalar inequalities from the proofs of Propositions 2.2 and 2.4.
# id | anchor | expression
prop2.2.df_max_abs | Proposition 2.2: |f'(1/(2 pi))| = 2 pi | abs(abs(df(1/(2*pi))) - 2*pi) < 1e-12
prop2.2.df_4_9pi | Proposition 2.2: |f'(4/(9 pi))| > pi | abs(df(4/(9*pi))) > pi
prop2.2.df_4_9pi_value | Proposition 2.2: |f'(4/(9 pi))| = (sqrt 2/2)(9 pi/4 - 1) | abs(abs(df(4/(9*pi))) - sqrt(2)/2*(9*pi/4 - 1)) < 1e-12
prop2.2.alpha_gap | Proposition 2.2: 1/alpha_1 - 1/alpha_2 < pi/(alpha_1 alpha_2)(1 + 1/(alpha_1 alpha_2)) < 0.1 | 1/alpha(1) - 1/alpha(2) < pi/(alpha(1)*alpha(2))*(1 + 1/(alpha(1)*alpha(2))) < 0.1
prop2.2.harmonic_identity | Proposition 2.2: 1/(4/(9 pi) + 2/(3 pi)) = 9 pi/10 | abs(1/(4/(9*pi) + 2/(3*pi)) - 9*pi/10) < 1e-12
prop2.2.df_2_3pi | Proposition 2.2: |f'(2/(3 pi))| = 1 | abs(abs(df(2/(3*pi))) - 1) < 1e-12
prop2.2.df_shifted | Proposition 2.2: |f'(1/(3 pi/2 + 1/3))| < 9 pi/10 | abs(df(1/(3*pi/2 + 1/3))) < 9*pi/10
prop2.2.df_7pi_3_value | Proposition 2.2: |f'(1/(2 pi + pi/3))| = 7 pi/6 - sqrt 3/2 | abs(abs(df(1/(2*pi + pi/3))) - (7*pi/6 - sqrt(3)/2)) < 1e-12
prop2.2.df_7pi_3 | Proposition 2.2: 7 pi/6 - sqrt 3/2 < 9 pi/10 | abs(df(1/(2*pi + pi/3))) < 9*pi/10
prop2.2.offsets_lt_inv_pi | Proposition 2.2: 1/(3 pi/2 + 1/3) + (sqrt 3/2)/(2 pi + pi/3) < 1/pi | 1/(3*pi/2 + 1/3) + (sqrt(3)/2)/(2*pi + pi/3) < 1/pi
prop2.4.theta1_sq | Proposition 2.4: (1 + theta_1)^2 < 6/pi | (1 + theta(1))^2 < 6/pi
prop2.4.df_2pi | Proposition 2.4: f'(2/pi) = 1 | abs(df(2/pi) - 1) < 1e-12
prop2.4.f_2pi | Proposition 2.4: f(2/pi) = 2/pi | abs(f(2/pi) - 2/pi) < 1e-12
prop2.4.df_4_5pi | Proposition 2.4: f'(4/(5 pi)) > pi/2 | df(4/(5*pi)) > pi/2
prop2.4.df_13_8pi | Proposition 2.4: f'(13/(8 pi)) > pi/2 | df(13/(8*pi)) > pi/2
prop2.4.f_diff_13_8pi | Proposition 2.4: f(13/(8 pi)) - f(4/(5 pi)) < 2.1/pi | f(13/(8*pi)) - f(4/(5*pi)) < 2.1/pi
prop2.4.f_diff_13_8pi_slope | Proposition 2.4: f(13/(8 pi)) - f(4/(5 pi)) < 2.6 (13/(8 pi) - 4/(5 pi)) | f(13/(8*pi)) - f(4/(5*pi)) < 2.6*(13/(8*pi) - 4/(5*pi))
prop2.4.df_7_4pi | Proposition 2.4: f'(7/(4 pi)) > 1.3 | df(7/(4*pi)) > 1.3
prop2.4.f_diff_7_4pi | Proposition 2.4: f(7/(4 pi)) - f(4/(5 pi)) < 2.28/pi | f(7/(4*pi)) - f(4/(5*pi)) < 2.28/pi
prop2.4.df_3pi_value | Proposition 2.4: f'(3/pi) = sqrt 3/2 - pi/6 | abs(df(3/pi) - (sqrt(3)/2 - pi/6)) < 1e-12
prop2.4.df_3pi | Proposition 2.4: f'(3/pi) < sqrt(pi/8) | df(3/pi) < sqrt(pi/8)
prop2.4.df_2_5pi | Proposition 2.4: f'(2.5/pi) < (1/3)(2 pi/5)^3 < sqrt(pi/6) | df(2.5/pi) < (2*pi/5)^3/3 < sqrt(pi/6)
prop2.4.f_2_5pi_plus_theta | Proposition 2.4: (2.5/pi) sin(2 pi/5) + sin theta_1 < 1 | (2.5/pi)*sin(2*pi/5) + sin(theta(1)) < 1
prop2.4.df_07pi | Proposition 2.4: 0 < f'(0.7/pi) < 1 | 0 < df(0.7/pi) < 1
prop2.4.df_19pi | Proposition 2.4: f'(1.9/pi) < 1 + (0.1/pi)(pi/1.9)^3 < 1.16 | df(1.9/pi) < 1 + (0.1/pi)*(pi/1.9)^3 < 1.16
prop2.4.pi_over_27 | Proposition 2.4: pi/2.7 > 1.16 | pi/2.7 > 1.16
prop2.4.pi_over_26 | Proposition 2.4: pi/2.6 > 1.2 | pi/2.6 > 1.2
)";
  return kCorpus;
}

std::vector<CheckResult> check_prop_inequalities(const std::string& path) {
  const std::vector<ChecklistItem> items =
      path.empty() ? parse_checklist(default_checklist(), "<built-in checklist>") : load_checklist(path);
  std::vector<CheckResult> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(evaluate_item(item));
  return out;
}

}  // namespace holder
