#include "simstat/notation/evaluator.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <type_traits>
#include <utility>

#include "simstat/format.hpp"
#include "simstat/notation/parser.hpp"
#include "simstat/rng.hpp"
#include "simstat/stats.hpp"

namespace simstat::notation {

std::string_view kind_of(const Value& v) {
  static constexpr std::string_view kNames[] = {"real",  "boolean",      "vector",  "set",
                                                "range", "distribution", "function"};
  return kNames[v.index()];
}

std::string format_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_real(x);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, NumVector> || std::is_same_v<T, RealSet>) {
          std::string out;
          for (double e : x) {
            if (!out.empty()) out += ',';
            out += format_real(e);
          }
          if constexpr (std::is_same_v<T, RealSet>) out = "{" + out + "}";
          return out;
        } else if constexpr (std::is_same_v<T, RangeSpec>) {
          return std::to_string(x.lo) + (x.inclusive ? " to " : " until ") + std::to_string(x.hi);
        } else if constexpr (std::is_same_v<T, Distribution>) {
          return x.describe();
        } else {
          return x.param + " ⇒ " + to_text(*x.body);
        }
      },
      v);
}

Environment Environment::bind(const std::string& name, Value value) const {
  auto next = bindings_ ? std::make_shared<std::map<std::string, Value>>(*bindings_)
                        : std::make_shared<std::map<std::string, Value>>();
  (*next)[name] = std::move(value);
  Environment out;
  out.bindings_ = std::move(next);
  return out;
}

const Value* Environment::find(const std::string& name) const {
  if (!bindings_) return nullptr;
  const auto it = bindings_->find(name);
  return it == bindings_->end() ? nullptr : &it->second;
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const Environment& env) : env_(env) {}

  Value eval(const Expr& e) {
    return std::visit([&](const auto& node) { return eval_node(node, e.offset); }, e.node);
  }

 private:
  // ---- coercions ------------------------------------------------------------

  [[noreturn]] static void mismatch(const std::string& context, std::string_view expected, const Value& got,
                                    std::size_t off) {
    throw TypeMismatchError(context + ": expected " + std::string(expected) + ", got " + std::string(kind_of(got)),
                            off);
  }

  static double real(const Value& v, const std::string& context, std::size_t off) {
    if (const auto* d = std::get_if<double>(&v)) return *d;
    mismatch(context, "real", v, off);
  }

  static bool boolean(const Value& v, const std::string& context, std::size_t off) {
    if (const auto* b = std::get_if<bool>(&v)) return *b;
    mismatch(context, "boolean", v, off);
  }

  static std::int64_t integer(const Value& v, const std::string& context, std::size_t off) {
    const double d = real(v, context, off);
    if (std::trunc(d) != d || std::abs(d) > 9.0e15) {
      throw DomainError(context + ": expected an integer, got " + format_real(d));
    }
    return static_cast<std::int64_t>(d);
  }

  static const NumVector& vector(const Value& v, const std::string& context, std::size_t off) {
    if (const auto* x = std::get_if<NumVector>(&v)) return *x;
    mismatch(context, "vector", v, off);
  }

  static const RealSet& set(const Value& v, const std::string& context, std::size_t off) {
    if (const auto* x = std::get_if<RealSet>(&v)) return *x;
    mismatch(context, "set", v, off);
  }

  static const Closure& closure(const Value& v, const std::string& context, std::size_t off) {
    if (const auto* x = std::get_if<Closure>(&v)) return *x;
    mismatch(context, "function", v, off);
  }

  static const Distribution& distribution(const Value& v, const std::string& context, std::size_t off) {
    if (const auto* x = std::get_if<Distribution>(&v)) return *x;
    mismatch(context, "distribution", v, off);
  }

  // Elements of a vector, set or range, in iteration order.
  static std::vector<double> elements(const Value& v, const std::string& context, std::size_t off) {
    if (const auto* x = std::get_if<NumVector>(&v)) return x->data();
    if (const auto* x = std::get_if<RealSet>(&v)) return {x->begin(), x->end()};
    if (const auto* x = std::get_if<RangeSpec>(&v)) return x->materialize().data();
    mismatch(context, "vector, set or range", v, off);
  }

  static double finite(double x, const std::string& context) {
    if (!std::isfinite(x)) throw NumericError(context + ": result is not finite");
    return x;
  }

  // ---- closures -------------------------------------------------------------

  static Value apply(const Closure& f, Value arg) {
    const auto env = f.env->bind(f.param, std::move(arg));
    return Evaluator(env).eval(*f.body);
  }

  static IndexFunction index_function(const Closure& f, const std::string& context, std::size_t off) {
    return [f, context, off](std::int64_t i) {
      return real(apply(f, static_cast<double>(i)), context, off);
    };
  }

  static RealFunction real_function(const Closure& f, const std::string& context, std::size_t off) {
    return [f, context, off](double x) { return real(apply(f, x), context, off); };
  }

  static Predicate predicate(const Closure& f, const std::string& context, std::size_t off) {
    return [f, context, off](double x) { return boolean(apply(f, x), context, off); };
  }

  // ---- nodes ----------------------------------------------------------------

  Value eval_node(const Literal& n, std::size_t) { return n.value; }

  Value eval_node(const Ident& n, std::size_t off) {
    if (const auto* v = env_.find(n.name)) return *v;
    if (n.name == "true") return true;
    if (n.name == "false") return false;
    if (n.name == "π" || n.name == "pi") return std::numbers::pi;
    throw UnboundIdentifierError("unbound identifier '" + n.name + "'", off);
  }

  Value eval_node(const Prefix& n, std::size_t off) {
    const Value v = eval(*n.operand);
    if (n.op == "¬") return !boolean(v, "¬", off);
    if (const auto* x = std::get_if<NumVector>(&v)) return scale(*x, -1.0);
    return -real(v, "unary −", off);
  }

  Value eval_node(const Postfix& n, std::size_t off) {
    return finite(factorial(real(eval(*n.operand), "!", off)), "!");
  }

  Value eval_node(const RangeExpr& n, std::size_t off) {
    const std::string ctx = n.op;
    const auto lo = integer(eval(*n.lo), ctx, off);
    const auto hi = integer(eval(*n.hi), ctx, off);
    return RangeSpec{lo, hi, n.inclusive()};
  }

  Value eval_node(const SetLiteral& n, std::size_t off) {
    std::vector<double> xs;
    for (const auto& e : n.elements) xs.push_back(real(eval(*e), "set literal", off));
    return RealSet(std::move(xs));
  }

  Value eval_node(const Lambda& n, std::size_t) {
    return Closure{n.param, n.body, std::make_shared<const Environment>(env_)};
  }

  Value eval_node(const Infix& n, std::size_t off) {
    const std::string& op = n.op;
    if (op == "∧" || op == "∨") {
      const bool lhs = boolean(eval(*n.lhs), op, n.lhs->offset);
      if (op == "∧" ? !lhs : lhs) return lhs;
      return boolean(eval(*n.rhs), op, n.rhs->offset);
    }
    const Value a = eval(*n.lhs);
    const Value b = eval(*n.rhs);
    if (op == "=") return equal(a, b, op, off);
    if (op == "≠") return !equal(a, b, op, off);
    if (op == "<" || op == ">" || op == "≤" || op == "≥") {
      const double x = real(a, op, off);
      const double y = real(b, op, off);
      if (op == "<") return x < y;
      if (op == ">") return x > y;
      if (op == "≤") return x <= y;
      return x >= y;
    }
    if (op == "∈" || op == "∉") {
      const double x = real(a, op, off);
      const bool in = std::holds_alternative<RealSet>(b) ? member_of(x, std::get<RealSet>(b))
                                                         : member_of(x, elements(b, op, off));
      return op == "∈" ? in : !in;
    }
    if (op == "⊆") return set(a, op, off).subset_of(set(b, op, off));
    if (op == "∪") return set(a, op, off).unite(set(b, op, off));
    if (op == "∩") return set(a, op, off).intersect(set(b, op, off));
    return arithmetic(op, a, b, off);
  }

  static bool equal(const Value& a, const Value& b, const std::string& op, std::size_t off) {
    if (a.index() != b.index()) {
      throw TypeMismatchError(op + ": cannot compare " + std::string(kind_of(a)) + " with " +
                                  std::string(kind_of(b)),
                              off);
    }
    return std::visit(
        [&](const auto& x) -> bool {
          using T = std::decay_t<decltype(x)>;
          const auto& y = std::get<T>(b);
          if constexpr (std::is_same_v<T, Closure>) {
            throw TypeMismatchError(op + ": functions cannot be compared", off);
          } else if constexpr (std::is_same_v<T, RangeSpec>) {
            return x.materialize() == y.materialize();
          } else {
            return x == y;
          }
        },
        a);
  }

  static Value arithmetic(const std::string& op, const Value& a, const Value& b, std::size_t off) {
    const auto* va = std::get_if<NumVector>(&a);
    const auto* vb = std::get_if<NumVector>(&b);
    if (op == "↑") {
      if (va) return pow_elem(*va, real(b, op, off));
      return pow(real(a, op, off), real(b, op, off));
    }
    if (op == "↓") {
      if (va) return root_elem(*va, real(b, op, off));
      return root(real(a, op, off), real(b, op, off));
    }
    if (op == "⇑") return finite(rising_factorial(real(a, op, off), non_negative(b, op, off)), op);
    if (op == "⇓") return finite(falling_factorial(real(a, op, off), non_negative(b, op, off)), op);
    if (op == "⋅") {
      if (va || vb) return dot(vector(a, op, off), vector(b, op, off));
      return finite(real(a, op, off) * real(b, op, off), op);
    }
    if (op == "*") {
      if (va && vb) return mul_elem(*va, *vb);
      if (va) return scale(*va, real(b, op, off));
      if (vb) return scale(*vb, real(a, op, off));
      return finite(real(a, op, off) * real(b, op, off), op);
    }
    if (op == "/") {
      const double d = real(b, op, off);
      if (d == 0.0) throw DomainError("division by zero");
      if (va) return scale(*va, 1.0 / d);
      return finite(real(a, op, off) / d, op);
    }
    if (op == "%") {
      const double d = real(b, op, off);
      if (d == 0.0) throw DomainError("modulo by zero");
      return std::fmod(real(a, op, off), d);
    }
    if (op == "+" || op == "−") {
      if (va || vb) {
        const auto& x = vector(a, op, off);
        const auto& y = vector(b, op, off);
        return op == "+" ? add(x, y) : sub(x, y);
      }
      const double x = real(a, op, off);
      const double y = real(b, op, off);
      return finite(op == "+" ? x + y : x - y, op);
    }
    throw EvalError("unknown operator '" + op + "'", off);
  }

  static std::int64_t non_negative(const Value& v, const std::string& op, std::size_t off) {
    const auto n = integer(v, op, off);
    if (n < 0) throw DomainError(op + ": count must be non-negative");
    return n;
  }

  // ---- calls ----------------------------------------------------------------

  Value eval_node(const Call& n, std::size_t off) {
    std::vector<Value> args;
    args.reserve(n.args.size());
    for (const auto& a : n.args) args.push_back(eval(*a));
    if (const auto* bound = env_.find(n.name)) return call_value(n.name, *bound, args, off);
    return builtin(n.name, args, off);
  }

  static void arity(const std::string& name, const std::vector<Value>& args, std::size_t lo, std::size_t hi,
                    std::size_t off) {
    if (args.size() < lo || args.size() > hi) {
      const std::string expected =
          lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
      throw TypeMismatchError(name + ": expected " + expected + " argument(s), got " + std::to_string(args.size()),
                              off);
    }
  }

  // `v(i)`, `v(range)`, `s(i)`, `f(x)` on a bound name.
  static Value call_value(const std::string& name, const Value& target, const std::vector<Value>& args,
                          std::size_t off) {
    arity(name, args, 1, 1, off);
    const Value& arg = args.front();
    if (const auto* f = std::get_if<Closure>(&target)) return apply(*f, arg);
    if (const auto* v = std::get_if<NumVector>(&target)) {
      if (const auto* r = std::get_if<RangeSpec>(&arg)) return slice(*v, *r);
      return element(v->values(), integer(arg, name, off), name);
    }
    if (const auto* s = std::get_if<RealSet>(&target)) return element(s->values(), integer(arg, name, off), name);
    if (const auto* r = std::get_if<RangeSpec>(&target)) {
      const auto i = integer(arg, name, off);
      if (i < 0 || static_cast<std::size_t>(i) >= r->size()) throw IndexError(name + ": index out of bounds");
      return static_cast<double>(r->lo + i);
    }
    throw TypeMismatchError(name + ": a " + std::string(kind_of(target)) + " cannot be called", off);
  }

  static double element(std::span<const double> xs, std::int64_t i, const std::string& name) {
    if (i < 0 || static_cast<std::size_t>(i) >= xs.size()) {
      throw IndexError(name + ": index " + std::to_string(i) + " out of bounds for size " +
                       std::to_string(xs.size()));
    }
    return xs[static_cast<std::size_t>(i)];
  }

  // Shared shape of Σ and ∏.
  static Value series(const std::string& name, const std::vector<Value>& args, std::size_t off, bool product) {
    arity(name, args, 1, 3, off);
    auto over = [&](std::span<const double> xs) { return product ? prod_series(xs) : sum_series(xs); };
    if (args.size() == 1) return over(elements(args[0], name, off));
    RangeSpec range;
    const Closure* f = nullptr;
    if (args.size() == 3) {
      range = RangeSpec::to(integer(args[0], name, off), integer(args[1], name, off));
      f = &closure(args[2], name, off);
    } else {
      f = &closure(args[1], name, off);
      if (const auto* r = std::get_if<RangeSpec>(&args[0])) {
        range = *r;
      } else {
        std::vector<double> mapped;
        const auto fn = real_function(*f, name, off);
        for (double x : elements(args[0], name, off)) mapped.push_back(fn(x));
        return over(mapped);
      }
    }
    const auto fn = index_function(*f, name, off);
    return product ? prod_series(range, fn) : sum_series(range, fn);
  }

  static Value builtin(const std::string& name, const std::vector<Value>& args, std::size_t off) {
    if (name == "Σ") return series(name, args, off, false);
    if (name == "∏") return series(name, args, off, true);
    if (name == "∫") {
      arity(name, args, 2, 3, off);
      if (args.size() == 2) {
        if (const auto* r = std::get_if<RangeSpec>(&args[0])) {
          return integrate(static_cast<double>(r->lo), static_cast<double>(r->hi),
                           real_function(closure(args[1], name, off), name, off));
        }
        mismatch(name, "range", args[0], off);
      }
      return integrate(real(args[0], name, off), real(args[1], name, off),
                       real_function(closure(args[2], name, off), name, off));
    }
    if (name == "∀" || name == "∃") {
      arity(name, args, 2, 2, off);
      const auto p = predicate(closure(args[1], name, off), name, off);
      const auto xs = elements(args[0], name, off);
      return name == "∀" ? for_all(xs, p) : exists(xs, p);
    }
    if (name == "μ") {
      arity(name, args, 1, 1, off);
      if (const auto* d = std::get_if<Distribution>(&args[0])) return theoretical_mean(*d);
      return mean(vector(args[0], name, off));
    }
    if (name == "σ2") {
      arity(name, args, 1, 1, off);
      if (const auto* d = std::get_if<Distribution>(&args[0])) return theoretical_variance(*d);
      return pop_variance(vector(args[0], name, off));
    }
    if (name == "σ") {
      arity(name, args, 1, 1, off);
      if (const auto* d = std::get_if<Distribution>(&args[0])) return std::sqrt(theoretical_variance(*d));
      return std_dev(vector(args[0], name, off));
    }
    if (name == "σ̂2") {
      arity(name, args, 1, 1, off);
      return sample_variance(vector(args[0], name, off));
    }
    if (name == "ms") {
      arity(name, args, 1, 1, off);
      return mean_square(vector(args[0], name, off));
    }
    if (name == "γ1") {
      arity(name, args, 1, 1, off);
      return skewness(vector(args[0], name, off));
    }
    if (name == "cov") {
      arity(name, args, 2, 2, off);
      return covariance(vector(args[0], name, off), vector(args[1], name, off));
    }
    if (name == "ρ") {
      arity(name, args, 1, 2, off);
      if (args.size() == 1) return autocorrelation(vector(args[0], name, off));
      return correlation(vector(args[0], name, off), vector(args[1], name, off));
    }
    if (name == "hw" || name == "interval") {
      arity(name, args, 1, 2, off);
      const double conf = args.size() == 2 ? real(args[1], name, off) : 0.95;
      return interval_half_width(vector(args[0], name, off), conf);
    }
    if (name == "dot") {
      arity(name, args, 2, 2, off);
      return dot(vector(args[0], name, off), vector(args[1], name, off));
    }
    if (name == "Vec") {
      if (args.size() == 1 && std::holds_alternative<RangeSpec>(args[0])) {
        return std::get<RangeSpec>(args[0]).materialize();
      }
      std::vector<double> xs;
      for (const auto& a : args) xs.push_back(real(a, name, off));
      return NumVector(std::move(xs));
    }
    if (name == "Set") {
      if (args.size() == 1 && !std::holds_alternative<double>(args[0])) return RealSet(elements(args[0], name, off));
      std::vector<double> xs;
      for (const auto& a : args) xs.push_back(real(a, name, off));
      return RealSet(std::move(xs));
    }
    if (name == "dim" || name == "len") {
      arity(name, args, 1, 1, off);
      return static_cast<double>(elements(args[0], name, off).size());
    }
    if (name == "exp" || name == "ln" || name == "sqrt" || name == "abs" || name == "Γ") {
      arity(name, args, 1, 1, off);
      const double x = real(args[0], name, off);
      if (name == "exp") return finite(std::exp(x), name);
      if (name == "ln") {
        if (!(x > 0.0)) throw DomainError("ln: argument must be positive");
        return std::log(x);
      }
      if (name == "sqrt") return root(x, 2.0);
      if (name == "abs") return std::abs(x);
      return finite(gamma_fn(x), name);
    }
    if (name == "println") {
      arity(name, args, 1, 1, off);
      return args[0];
    }
    if (name == "sample") {
      arity(name, args, 2, 3, off);
      const auto& d = distribution(args[0], name, off);
      const auto n = non_negative(args[1], name, off);
      const auto seed = args.size() == 3 ? non_negative(args[2], name, off) : 12345;
      RandomStream stream(static_cast<std::uint64_t>(seed));
      return random_vector(d, static_cast<std::size_t>(n), stream);
    }
    if (name == "cdf" || name == "pdf" || name == "quantile") {
      arity(name, args, 2, 2, off);
      const auto& d = distribution(args[0], name, off);
      const double x = real(args[1], name, off);
      if (name == "cdf") return cdf(d, x);
      if (name == "pdf") return pdf(d, x);
      return inverse_cdf(d, x);
    }
    if (!name.empty() && std::isupper(static_cast<unsigned char>(name.front()))) {
      if (const auto kind = kind_from_name(name)) {
        std::vector<double> params;
        for (const auto& a : args) params.push_back(real(a, name, off));
        return Distribution::from_params(*kind, params);
      }
    }
    throw UnboundIdentifierError("unknown function '" + name + "'", off);
  }

  const Environment& env_;
};

}  // namespace

Value evaluate(const Expr& e, const Environment& env) { return Evaluator(env).eval(e); }

Value evaluate(std::string_view text, const Environment& env) { return evaluate(*parse(text), env); }

ProgramResult eval_program(std::string_view lines, const Environment& env) {
  ProgramResult result{env, {}};
  std::size_t line_no = 0;
  for (std::size_t pos = 0; pos <= lines.size();) {
    const auto nl = std::min(lines.find('\n', pos), lines.size());
    const auto line = lines.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    const std::string where = "line " + std::to_string(line_no) + ": ";
    try {
      const auto tokens = tokenize(line);
      std::size_t start = 0;
      if (tokens.size() > 3 && tokens[0].lexeme == "val" && tokens[1].kind == TokenKind::Identifier) start = 1;
      if (tokens[start].kind == TokenKind::End) continue;

      const auto from = [&](std::size_t i) {
        return std::vector<Token>(tokens.begin() + static_cast<std::ptrdiff_t>(i), tokens.end());
      };
      const bool binding = tokens[start].kind == TokenKind::Identifier &&
                           tokens[start + 1].kind == TokenKind::Operator && tokens[start + 1].lexeme == "=";
      if (binding) {
        const auto expr = parse(from(start + 2));
        result.env = result.env.bind(tokens[start].text, evaluate(*expr, result.env));
      } else {
        result.outputs.push_back(format_value(evaluate(*parse(from(start)), result.env)));
      }
    } catch (const ParseError& e) {
      throw ProgramError(where + "offset " + std::to_string(e.offset()) + ": " + e.what(), line_no, true);
    } catch (const Error& e) {
      throw ProgramError(where + e.what(), line_no, false);
    }
  }
  return result;
}

}  // namespace simstat::notation
