#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "holder/check.hpp"
#include "holder/interval.hpp"

namespace holder {

// Declarative inequality checklist.
//
// One item per line, `id | anchor | expression`; blank lines and lines
// starting with '#' are skipped. The anchor may itself contain '|' (the
// expression never does; absolute values are written abs()). An expression is a chain of comparisons
// (<, >, <=, >=) between terms built from decimal literals, pi, + - * / ^
// (non-negative integer exponents), unary minus, parentheses and the
// functions f, df, ddf, sqrt, sin, cos, abs, atan, asin, theta(n), alpha(n).
// Every literal is enclosed as the decimal it was written as; theta and
// alpha use the certified root brackets.

struct Expr;

struct ChecklistItem {
  std::string id;
  std::string anchor;
  std::string expression;
  int line = 0;
  std::shared_ptr<const Expr> root;
};

// Throws ConfigError naming `source` and the line of the first syntax error.
std::vector<ChecklistItem> parse_checklist(std::string_view text, std::string_view source = "<checklist>");

// Reads a file and parses it. Throws ConfigError if it cannot be read.
std::vector<ChecklistItem> load_checklist(const std::string& path);

// Encloses a single term (no comparisons), mainly for tests.
Interval evaluate_term(std::string_view text);

// Certifies every link of the comparison chain; the item takes the worst
// verdict and the tightest margin. Evaluation errors (a domain violation
// inside the expression) yield Undecided with the message in the detail.
CheckResult evaluate_item(const ChecklistItem& item);

// The scalar inequalities used inside the proofs of Propositions 2.2 and 2.4.
std::string_view default_checklist();

// Evaluates every item of the built-in checklist, or of `path` if nonempty,
// in declaration order.
std::vector<CheckResult> check_prop_inequalities(const std::string& path = {});

}  // namespace holder
