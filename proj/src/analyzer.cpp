#include "pcgc/analyzer.hpp"

#include "pcgc/io.hpp"
#include "pcgc/transforms.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace pcgc {

std::string_view to_string(CmpOp op) {
  switch (op) {
    case CmpOp::lt: return "<";
    case CmpOp::le: return "<=";
    case CmpOp::eq: return "=";
    case CmpOp::ne: return "!=";
    case CmpOp::gt: return ">";
    case CmpOp::ge: return ">=";
  }
  return "?";
}

namespace {

// --- lexer -----------------------------------------------------------------

enum class Tok { ident, integer, keyword, symbol, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  SourcePos pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::end: return "end of input";
    case Tok::ident: return "identifier '" + t.text + "'";
    case Tok::integer: return "integer " + t.text;
    default: return "'" + t.text + "'";
  }
}

[[noreturn]] void syntax_error(SourcePos pos, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError, std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + msg);
}

bool is_keyword(std::string_view s) {
  return s == "while" || s == "do" || s == "if" || s == "then" || s == "else" || s == "skip";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++pos.col;  // count code points, not bytes
      }
    }
  };
  // A '-' directly before a digit is part of the literal unless it follows
  // an operand, where it must be subtraction.
  auto after_operand = [&] {
    return !out.empty() && (out.back().kind == Tok::ident || out.back().kind == Tok::integer ||
                            (out.back().kind == Tok::symbol && out.back().text == ")"));
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    Token t;
    t.pos = pos;
    const bool neg_lit = ch == '-' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])) &&
                         !after_operand();
    if (std::isdigit(static_cast<unsigned char>(ch)) || neg_lit) {
      std::size_t j = i + 1;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::integer;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i + 1;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.text = std::string(src.substr(i, j - i));
      t.kind = is_keyword(t.text) ? Tok::keyword : Tok::ident;
      advance(j - i);
    } else {
      static constexpr std::string_view two[] = {":=", "<=", ">=", "!="};
      static constexpr std::string_view one = "+-*<>=;{}()";
      t.kind = Tok::symbol;
      if (auto it = std::find_if(std::begin(two), std::end(two), [&](auto s) { return src.substr(i, 2) == s; });
          it != std::end(two)) {
        t.text = std::string(*it);
      } else if (one.find(ch) != std::string_view::npos) {
        t.text = std::string(1, ch);
      } else {
        // Report the whole code point, not a stray byte.
        std::size_t len = 1;
        while (i + len < src.size() && (static_cast<unsigned char>(src[i + len]) & 0xC0) == 0x80) ++len;
        syntax_error(pos, "unexpected character '" + std::string(src.substr(i, len)) + "'");
      }
      advance(t.text.size());
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = pos;
  out.push_back(end);
  return out;
}

// --- parser ----------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program program() {
    Program p;
    if (peek().kind == Tok::end) syntax_error(peek().pos, "expected a statement, got end of input");
    while (peek().kind != Tok::end) p.stmts.push_back(stmt());
    p.vars = std::move(vars_);
    return p;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  bool at(std::string_view text) const {
    return (peek().kind == Tok::symbol || peek().kind == Tok::keyword) && peek().text == text;
  }
  Token take() { return toks_[i_++]; }
  Token expect(std::string_view text) {
    if (!at(text)) syntax_error(peek().pos, "expected '" + std::string(text) + "', got " + describe(peek()));
    return take();
  }

  std::size_t var_index(const std::string& name) {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it != vars_.end()) return static_cast<std::size_t>(it - vars_.begin());
    vars_.push_back(name);
    return vars_.size() - 1;
  }

  std::vector<Stmt> block() {
    expect("{");
    std::vector<Stmt> out;
    while (!at("}")) {
      if (peek().kind == Tok::end) syntax_error(peek().pos, "expected a statement or '}', got end of input");
      out.push_back(stmt());
    }
    take();
    return out;
  }

  Stmt stmt() {
    Stmt s;
    s.pos = peek().pos;
    if (peek().kind == Tok::ident) {
      s.kind = Stmt::Kind::assign;
      s.target = take().text;
      s.var = var_index(s.target);
      expect(":=");
      s.expr = aexp();
      expect(";");
    } else if (at("while")) {
      take();
      s.kind = Stmt::Kind::while_loop;
      s.cond = bexp();
      expect("do");
      s.body = block();
    } else if (at("if")) {
      take();
      s.kind = Stmt::Kind::if_else;
      s.cond = bexp();
      expect("then");
      s.body = block();
      expect("else");
      s.orelse = block();
    } else if (at("skip")) {
      take();
      s.kind = Stmt::Kind::skip;
      expect(";");
    } else {
      syntax_error(peek().pos, "expected an identifier, 'while', 'if' or 'skip', got " + describe(peek()));
    }
    return s;
  }

  Cond bexp() {
    Cond c;
    c.lhs = aexp();
    static const std::pair<std::string_view, CmpOp> ops[] = {{"<", CmpOp::lt},  {"<=", CmpOp::le},
                                                              {"=", CmpOp::eq},  {"!=", CmpOp::ne},
                                                              {">", CmpOp::gt},  {">=", CmpOp::ge}};
    for (auto [text, op] : ops)
      if (at(text)) {
        take();
        c.op = op;
        c.rhs = aexp();
        return c;
      }
    syntax_error(peek().pos, "expected one of '<', '<=', '=', '!=', '>', '>=', got " + describe(peek()));
  }

  std::unique_ptr<Expr> binary(Expr::Op op, std::unique_ptr<Expr> l, std::unique_ptr<Expr> r, SourcePos pos) {
    auto e = std::make_unique<Expr>();
    e->op = op;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    e->pos = pos;
    return e;
  }

  std::unique_ptr<Expr> aexp() {
    auto e = term();
    while (at("+") || at("-")) {
      const auto t = take();
      e = binary(t.text == "+" ? Expr::Op::add : Expr::Op::sub, std::move(e), term(), t.pos);
    }
    return e;
  }

  std::unique_ptr<Expr> term() {
    auto e = factor();
    while (at("*")) {
      const auto t = take();
      e = binary(Expr::Op::mul, std::move(e), factor(), t.pos);
    }
    return e;
  }

  std::unique_ptr<Expr> factor() {
    auto e = std::make_unique<Expr>();
    e->pos = peek().pos;
    if (peek().kind == Tok::integer) {
      const auto t = take();
      const char* first = t.text.data();
      const char* last = first + t.text.size();
      auto [ptr, ec] = std::from_chars(first, last, e->value);
      if (ec != std::errc() || ptr != last) syntax_error(t.pos, "integer literal out of range: " + t.text);
      e->op = Expr::Op::lit;
    } else if (peek().kind == Tok::ident) {
      e->op = Expr::Op::var;
      e->name = take().text;
      e->var = var_index(e->name);
    } else if (at("(")) {
      take();
      e = aexp();
      expect(")");
    } else {
      syntax_error(peek().pos, "expected an integer, an identifier or '(', got " + describe(peek()));
    }
    return e;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::vector<std::string> vars_;
};

// --- definite assignment and labels -----------------------------------------

using Assigned = std::vector<bool>;

void check_expr(const Expr& e, const Assigned& a) {
  if (e.op == Expr::Op::var && !a[e.var])
    throw Error(ErrorKind::UseBeforeAssign, std::to_string(e.pos.line) + ":" + std::to_string(e.pos.col) +
                                                ": variable '" + e.name + "' may be used before it is assigned");
  if (e.lhs) check_expr(*e.lhs, a);
  if (e.rhs) check_expr(*e.rhs, a);
}

Assigned check_block(const std::vector<Stmt>& stmts, Assigned a) {
  for (const auto& s : stmts) {
    switch (s.kind) {
      case Stmt::Kind::assign:
        check_expr(*s.expr, a);
        a[s.var] = true;
        break;
      case Stmt::Kind::while_loop:
        check_expr(*s.cond.lhs, a);
        check_expr(*s.cond.rhs, a);
        check_block(s.body, a);  // the body may run zero times
        break;
      case Stmt::Kind::if_else: {
        check_expr(*s.cond.lhs, a);
        check_expr(*s.cond.rhs, a);
        const auto t = check_block(s.body, a);
        const auto e = check_block(s.orelse, a);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = t[i] && e[i];
        break;
      }
      case Stmt::Kind::skip: break;
    }
  }
  return a;
}

void assign_labels(std::vector<Stmt>& stmts, std::size_t& next) {
  for (auto& s : stmts) {
    s.label = next++;
    assign_labels(s.body, next);
    assign_labels(s.orelse, next);
  }
}

void collect_points(const std::vector<Stmt>& stmts, std::vector<PointInfo>& out) {
  static constexpr const char* names[] = {"assign", "while", "if", "skip"};
  for (const auto& s : stmts) {
    out[s.label] = {s.label, s.pos, names[static_cast<int>(s.kind)]};
    collect_points(s.body, out);
    collect_points(s.orelse, out);
  }
}

}  // namespace

Program parse_program(std::string_view text) {
  Program p = Parser(lex(text)).program();
  check_block(p.stmts, Assigned(p.vars.size(), false));
  std::size_t next = 0;
  assign_labels(p.stmts, next);
  p.exit_label = next;
  return p;
}

std::string to_string(const Expr& e) {
  switch (e.op) {
    case Expr::Op::lit: return std::to_string(e.value);
    case Expr::Op::var: return e.name;
    case Expr::Op::add: return "(" + to_string(*e.lhs) + " + " + to_string(*e.rhs) + ")";
    case Expr::Op::sub: return "(" + to_string(*e.lhs) + " - " + to_string(*e.rhs) + ")";
    case Expr::Op::mul: return "(" + to_string(*e.lhs) + " * " + to_string(*e.rhs) + ")";
  }
  return "?";
}

// --- abstract interpreter ----------------------------------------------------

Analyzer::Analyzer(ConstructiveConnection c) : c_(std::move(c)) {
  lattice_ = c_.abstract_lattice();
  if (!lattice_) throw Error(ErrorKind::DomainMismatch, "the abstract domain is not a complete lattice");
  if (!c_.carrier().is_integer()) throw Error(ErrorKind::DomainMismatch, "the carrier is not an integer range");
  if (!c_.carrier_order().is_discrete()) throw Error(ErrorKind::DomainMismatch, "the carrier must be unordered");
  if (auto r = check_pcgc(c_); !r.ok()) {
    const auto& w = r.witness1 ? r.witness1 : r.witness2;
    throw Error(ErrorKind::DomainMismatch, "not a PCGC" + (w ? ": " + w->detail : std::string()));
  }
  add_ = bca_pcgc(c_, int_binary(c_.carrier(), [](std::int64_t a, std::int64_t b) { return a + b; }));
  sub_ = bca_pcgc(c_, int_binary(c_.carrier(), [](std::int64_t a, std::int64_t b) { return a - b; }));
  mul_ = bca_pcgc(c_, int_binary(c_.carrier(), [](std::int64_t a, std::int64_t b) { return a * b; }));
}

Analyzer Analyzer::for_domain(const Domain& d) {
  if (const auto* c = std::get_if<ConstructiveConnection>(&d)) return Analyzer(*c);
  if (const auto* g = std::get_if<GaloisConnection>(&d)) {
    try {
      return Analyzer(t_pcgc(*g));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotInClass) throw;
      throw Error(ErrorKind::DomainMismatch, std::string("the GC is not partitioning: ") + e.what());
    }
  }
  throw Error(ErrorKind::DomainMismatch, "a closure operator has no abstract lattice to analyze with");
}

const AbstractFn& Analyzer::op_table(Expr::Op op) const {
  switch (op) {
    case Expr::Op::add: return add_;
    case Expr::Op::sub: return sub_;
    case Expr::Op::mul: return mul_;
    default: throw Error(ErrorKind::InvariantViolated, "no table for a leaf expression");
  }
}

std::size_t Analyzer::eval(const Expr& e, const std::map<std::string, std::size_t>& env) const {
  switch (e.op) {
    case Expr::Op::lit: return c_.eta(c_.carrier().normalize(e.value));
    case Expr::Op::var: {
      auto it = env.find(e.name);
      if (it == env.end()) throw Error(ErrorKind::UnknownVariable, "no abstract value for '" + e.name + "'");
      return it->second;
    }
    default: return op_table(e.op)(eval(*e.lhs, env), eval(*e.rhs, env));
  }
}

std::size_t Analyzer::eval(const Expr& e, const AbstractState& state) const {
  switch (e.op) {
    case Expr::Op::lit: return c_.eta(c_.carrier().normalize(e.value));
    case Expr::Op::var:
      if (e.var >= state.size()) throw Error(ErrorKind::UnknownVariable, "no abstract value for '" + e.name + "'");
      return state[e.var];
    default: return op_table(e.op)(eval(*e.lhs, state), eval(*e.rhs, state));
  }
}

AbstractState Analyzer::join(const AbstractState& a, const AbstractState& b) const {
  AbstractState out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = lattice_->join(a[i], b[i]);
  return out;
}

AbstractState Analyzer::exec(const std::vector<Stmt>& stmts, AbstractState s, AnalysisResult& out) const {
  for (const auto& st : stmts) {
    out.states[st.label] = s;
    switch (st.kind) {
      case Stmt::Kind::assign: s[st.var] = eval(*st.expr, s); break;
      case Stmt::Kind::skip: break;
      case Stmt::Kind::if_else: s = join(exec(st.body, s, out), exec(st.orelse, s, out)); break;
      case Stmt::Kind::while_loop: {
        AbstractState head = s;
        auto& chain = out.head_chains[st.label];
        chain.assign(1, head);
        while (true) {
          const AbstractState next = join(head, exec(st.body, head, out));
          if (next == head) break;
          head = next;
          chain.push_back(head);
          ++out.iterations;
        }
        // The last body pass ran from the final head, so inner points are
        // already the ones for the fixpoint; recheck the head itself.
        if (join(head, exec(st.body, head, out)) != head)
          throw Error(ErrorKind::InvariantViolated, "loop head L" + std::to_string(st.label) + " is not a fixpoint");
        out.states[st.label] = head;
        s = head;
        break;
      }
    }
  }
  return s;
}

AnalysisResult Analyzer::run(const Program& p) const {
  AnalysisResult out;
  out.vars = p.vars;
  out.points.resize(p.num_labels());
  collect_points(p.stmts, out.points);
  out.points[p.exit_label] = {p.exit_label, {}, "exit"};
  out.states.assign(p.num_labels(), AbstractState(p.vars.size(), lattice_->bottom()));
  out.states[p.exit_label] = exec(p.stmts, AbstractState(p.vars.size(), lattice_->bottom()), out);
  return out;
}

std::string Analyzer::format_state(const std::vector<std::string>& vars, const AbstractState& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ", ";
    out += vars[i] + " ↦ " + lattice_->name(s[i]);
  }
  return out + "}";
}

std::string format_text(const Analyzer& a, const AnalysisResult& r) {
  std::string out;
  for (std::size_t l = 0; l < r.states.size(); ++l)
    out += "L" + std::to_string(l) + ": " + a.format_state(r.vars, r.states[l]) + "\n";
  return out;
}

std::string format_json(const Analyzer& a, const AnalysisResult& r) {
  const auto& lat = a.lattice();
  auto state_json = [&](const AbstractState& s) {
    Json j = Json::object();
    for (std::size_t i = 0; i < r.vars.size(); ++i) j[r.vars[i]] = lat.name(s[i]);
    return j;
  };
  Json points = Json::array();
  for (std::size_t l = 0; l < r.states.size(); ++l) {
    Json p;
    p["label"] = "L" + std::to_string(l);
    p["kind"] = r.points[l].what;
    if (r.points[l].what != "exit") {
      p["line"] = r.points[l].pos.line;
      p["col"] = r.points[l].pos.col;
    }
    p["state"] = state_json(r.states[l]);
    points.push_back(std::move(p));
  }
  Json heads = Json::array();
  for (const auto& [label, chain] : r.head_chains) {
    Json c = Json::array();
    for (const auto& s : chain) c.push_back(state_json(s));
    heads.push_back({{"label", "L" + std::to_string(label)}, {"invariant", state_json(r.states[label])}, {"chain", c}});
  }
  Json j;
  j["variables"] = r.vars;
  j["points"] = std::move(points);
  j["loop_heads"] = std::move(heads);
  j["iterations"] = r.iterations;
  return dump_json(j);
}

// --- concrete interpreter ----------------------------------------------------

namespace {

struct Machine {
  const Carrier& carrier;
  std::size_t budget;
  ConcreteRun run;
  std::vector<std::optional<std::int64_t>> env;

  std::int64_t eval(const Expr& e) const {
    switch (e.op) {
      case Expr::Op::lit: return carrier.value(carrier.normalize(e.value));
      case Expr::Op::var: return *env[e.var];  // definite assignment guarantees a value
      case Expr::Op::add: return carrier.value(carrier.normalize(eval(*e.lhs) + eval(*e.rhs)));
      case Expr::Op::sub: return carrier.value(carrier.normalize(eval(*e.lhs) - eval(*e.rhs)));
      case Expr::Op::mul: return carrier.value(carrier.normalize(eval(*e.lhs) * eval(*e.rhs)));
    }
    return 0;
  }

  bool test(const Cond& c) const {
    const auto l = eval(*c.lhs);
    const auto r = eval(*c.rhs);
    switch (c.op) {
      case CmpOp::lt: return l < r;
      case CmpOp::le: return l <= r;
      case CmpOp::eq: return l == r;
      case CmpOp::ne: return l != r;
      case CmpOp::gt: return l > r;
      case CmpOp::ge: return l >= r;
    }
    return false;
  }

  bool step() { return ++run.steps <= budget; }
  void observe(std::size_t label) { run.observations.push_back({label, env}); }

  // False once the budget is exhausted.
  bool exec(const std::vector<Stmt>& stmts) {
    for (const auto& s : stmts) {
      observe(s.label);
      if (!step()) return false;
      switch (s.kind) {
        case Stmt::Kind::assign: env[s.var] = eval(*s.expr); break;
        case Stmt::Kind::skip: break;
        case Stmt::Kind::if_else:
          if (!exec(test(s.cond) ? s.body : s.orelse)) return false;
          break;
        case Stmt::Kind::while_loop:
          while (test(s.cond)) {
            if (!exec(s.body)) return false;
            observe(s.label);
            if (!step()) return false;
          }
          break;
      }
    }
    return true;
  }
};

}  // namespace

ConcreteRun run_concrete(const Program& p, const Carrier& carrier, std::size_t budget) {
  if (!carrier.is_integer()) throw Error(ErrorKind::DomainMismatch, "the carrier is not an integer range");
  Machine m{carrier, budget, {}, std::vector<std::optional<std::int64_t>>(p.vars.size())};
  m.run.finished = m.exec(p.stmts);
  if (m.run.finished) m.observe(p.exit_label);
  return std::move(m.run);
}

std::vector<SoundnessViolation> soundness_violations(const Analyzer& a, const AnalysisResult& r,
                                                     const ConcreteRun& run) {
  std::vector<SoundnessViolation> out;
  const auto& c = a.domain();
  for (const auto& obs : run.observations)
    for (std::size_t v = 0; v < obs.env.size(); ++v) {
      if (!obs.env[v]) continue;
      const auto have = r.states[obs.label][v];
      if (!a.lattice().leq(c.eta(c.carrier().of_value(*obs.env[v])), have))
        out.push_back({obs.label, r.vars[v], *obs.env[v], a.lattice().name(have)});
    }
  return out;
}

}  // namespace pcgc
