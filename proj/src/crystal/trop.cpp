#include "crystal/trop.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace lsym::crystal {

TropExpr TropExpr::constant(long c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = c;
  return TropExpr(n);
}

TropExpr TropExpr::var(VarId v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = v;
  return TropExpr(n);
}

TropExpr TropExpr::min_of(std::vector<TropExpr> args) {
  require(!args.empty(), "min of nothing");
  if (args.size() == 1) return args.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Min;
  n->args = std::move(args);
  return TropExpr(n);
}

TropExpr TropExpr::sum_of(std::vector<TropExpr> args) {
  if (args.empty()) return constant(0);
  if (args.size() == 1) return args.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->args = std::move(args);
  return TropExpr(n);
}

TropExpr TropExpr::diff(TropExpr a, TropExpr b) {
  if (b.kind() == Kind::Const && b.node_->value == 0) return a;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Diff;
  n->args = {std::move(a), std::move(b)};
  return TropExpr(n);
}

long TropExpr::eval(const TropPoint& point) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Const:
      return n.value;
    case Kind::Var: {
      auto it = point.find(n.var);
      if (it == point.end())
        fail(ErrorCode::InvalidArgument, "point does not assign " + n.var.to_string());
      return it->second;
    }
    case Kind::Min: {
      long best = n.args.front().eval(point);
      for (std::size_t i = 1; i < n.args.size(); ++i) best = std::min(best, n.args[i].eval(point));
      return best;
    }
    case Kind::Sum: {
      long s = 0;
      for (const auto& a : n.args) s += a.eval(point);
      return s;
    }
    case Kind::Diff:
      return n.args[0].eval(point) - n.args[1].eval(point);
  }
  return 0;
}

std::string TropExpr::to_string() const {
  const Node& n = *node_;
  auto join = [&](const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < n.args.size(); ++i) {
      if (i) out += sep;
      out += n.args[i].to_string();
    }
    return out;
  };
  switch (n.kind) {
    case Kind::Const:
      return std::to_string(n.value);
    case Kind::Var:
      return n.var.to_string();
    case Kind::Min:
      return "min(" + join(", ") + ")";
    case Kind::Sum:
      return "(" + join(" + ") + ")";
    case Kind::Diff:
      return "(" + n.args[0].to_string() + " - " + n.args[1].to_string() + ")";
  }
  return {};
}

TropExpr tropicalize(const SparsePoly& p) {
  if (p.is_zero() || !p.all_coefficients_positive())
    fail(ErrorCode::NotSubtractionFree, "polynomial has a non-positive coefficient");
  std::vector<TropExpr> terms;
  for (const auto& t : p.terms()) {
    std::vector<TropExpr> parts;
    for (const auto& f : t.mono.factors())
      for (std::uint32_t e = 0; e < f.exp; ++e) parts.push_back(TropExpr::var(f.var));
    terms.push_back(TropExpr::sum_of(std::move(parts)));
  }
  return TropExpr::min_of(std::move(terms));
}

TropExpr tropicalize(const RationalExpr& f) {
  if (!f.subtraction_free())
    fail(ErrorCode::NotSubtractionFree, "expression is not subtraction-free");
  return TropExpr::diff(tropicalize(f.num()), tropicalize(f.den()));
}

long trop_eval(const TropExpr& e, const TropPoint& point) { return e.eval(point); }

}  // namespace lsym::crystal
