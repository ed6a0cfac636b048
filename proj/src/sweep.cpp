#include "splitgraph/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <functional>
#include <thread>

namespace splitgraph {
namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const ParameterMap& bindings)
      : text_(text), bindings_(bindings) {}

  long long parse() {
    const long long value = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  long long sum() {
    long long value = product();
    for (;;) {
      skip_space();
      if (accept('+')) {
        value = checked(value, product(), '+');
      } else if (accept('-')) {
        value = checked(value, product(), '-');
      } else {
        return value;
      }
    }
  }

  long long product() {
    long long value = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        value = checked(value, unary(), '*');
      } else if (accept('/')) {
        const long long divisor = unary();
        if (divisor == 0) fail("division by zero");
        if (value % divisor != 0) fail("inexact division");
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  long long unary() {
    skip_space();
    if (accept('-')) return checked(0, unary(), '-');
    if (accept('+')) return unary();
    return primary();
  }

  long long primary() {
    skip_space();
    if (accept('(')) {
      const long long value = sum();
      skip_space();
      if (!accept(')')) fail("missing ')'");
      return value;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      long long value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = checked(checked(value, 10, '*'), text_[pos_++] - '0', '+');
      }
      return value;
    }
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                                text_[pos_] == '_')) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      auto it = bindings_.find(name);
      if (it == bindings_.end()) fail("unbound parameter '" + name + "'");
      return it->second;
    }
    fail("expected a number, a name or '('");
  }

  static long long checked(long long a, long long b, char op) {
    long long out = 0;
    bool overflow = false;
    switch (op) {
      case '+': overflow = __builtin_add_overflow(a, b, &out); break;
      case '-': overflow = __builtin_sub_overflow(a, b, &out); break;
      default: overflow = __builtin_mul_overflow(a, b, &out); break;
    }
    if (overflow) throw SweepError("integer overflow in parameter expression");
    return out;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw SweepError("expression '" + std::string(text_) + "': " + why);
  }

  std::string_view text_;
  const ParameterMap& bindings_;
  std::size_t pos_ = 0;
};

}  // namespace

long long evaluate_expression(std::string_view expr, const ParameterMap& bindings) {
  return ExpressionParser(expr, bindings).parse();
}

ParameterRange parse_range(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw SweepError("range '" + std::string(text) + "' must look like name=lo..hi");
  }
  ParameterRange range;
  range.name = std::string(text.substr(0, eq));
  for (char ch : range.name) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
      throw SweepError("bad parameter name '" + range.name + "'");
    }
  }
  const std::string_view rest = text.substr(eq + 1);
  const auto dots = rest.find("..");
  if (dots == std::string_view::npos) {
    range.low = range.high = std::string(rest);
  } else {
    range.low = std::string(rest.substr(0, dots));
    range.high = std::string(rest.substr(dots + 2));
  }
  if (range.low.empty() || range.high.empty()) {
    throw SweepError("range '" + std::string(text) + "' has an empty bound");
  }
  return range;
}

std::vector<ParameterMap> expand_grid(const std::vector<ParameterRange>& ranges) {
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (ranges[i].name == ranges[j].name) {
        throw SweepError("parameter '" + ranges[i].name + "' given twice");
      }
    }
  }
  std::vector<ParameterMap> grid;
  ParameterMap current;
  std::function<void(std::size_t)> walk = [&](std::size_t axis) {
    if (axis == ranges.size()) {
      grid.push_back(current);
      return;
    }
    const auto& r = ranges[axis];
    const long long lo = evaluate_expression(r.low, current);
    const long long hi = evaluate_expression(r.high, current);
    for (long long v = lo; v <= hi; ++v) {
      current[r.name] = v;
      walk(axis + 1);
    }
    current.erase(r.name);
  };
  walk(0);
  if (grid.empty()) throw SweepError("sweep grid is empty");
  return grid;
}

std::vector<VerificationReport> sweep(const FamilySpec& templ,
                                      const std::vector<ParameterRange>& ranges,
                                      const VerifyOptions& options, std::size_t jobs) {
  const auto grid = expand_grid(ranges);
  std::vector<VerificationReport> reports(grid.size());

  auto evaluate = [&](std::size_t i) {
    FamilySpec spec = templ;
    for (const auto& [name, value] : grid[i]) spec.parameters.insert_or_assign(name, value);
    try {
      reports[i] = verify_family(spec, options);
    } catch (const std::exception& e) {
      VerificationReport failed;
      failed.corollary = spec.corollary;
      failed.borderenergetic = is_borderenergetic(spec.corollary);
      failed.method = options.method;
      failed.parameters = spec.parameters;
      failed.pass = false;
      failed.error = e.what();
      reports[i] = std::move(failed);
    }
  };

  jobs = std::max<std::size_t>(1, std::min(jobs, grid.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) evaluate(i);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < grid.size(); i = next++) evaluate(i);
    });
  }
  workers.clear();
  return reports;
}

}  // namespace splitgraph
