// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qperf/qasm.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qperf/error.hpp"

namespace qperf {

std::string_view qasm_error_kind_name(QasmErrorKind kind) {
  switch (kind) {
    case QasmErrorKind::syntax:
      return "syntax";
    case QasmErrorKind::unknown_gate:
      return "unknown_gate";
    case QasmErrorKind::bad_arity:
      return "bad_arity";
    case QasmErrorKind::index_out_of_range:
      return "index_out_of_range";
    case QasmErrorKind::redeclaration:
      return "redeclaration";
    case QasmErrorKind::unsupported_feature:
      return "unsupported_feature";
  }
  return "syntax";
}

QasmError::QasmError(QasmErrorKind kind, int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         std::string(qasm_error_kind_name(kind)) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

enum class Tok { ident, number, string, symbol, end };

struct Token {
  Tok type = Tok::end;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (is_ident_start(c)) {
        t.type = Tok::ident;
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) t.text += advance();
      } else if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
        t.type = Tok::number;
        lex_number(t.text);
      } else if (c == '"') {
        t.type = Tok::string;
        advance();
        while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') t.text += advance();
        if (pos_ >= src_.size() || src_[pos_] != '"') {
          throw QasmError(QasmErrorKind::syntax, t.line, t.column, "unterminated string");
        }
        advance();
      } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        t.type = Tok::symbol;
        t.text = "->";
        advance();
        advance();
      } else if (std::string_view("()[]{};,+-*/^=<>").find(c) != std::string_view::npos) {
        t.type = Tok::symbol;
        t.text = std::string(1, advance());
        if (c == '=' && pos_ < src_.size() && src_[pos_] == '=') t.text += advance();
      } else {
        throw QasmError(QasmErrorKind::syntax, t.line, t.column, std::string("unexpected character '") + c + "'");
      }
      out.push_back(std::move(t));
    }
  }

 private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
  static bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  void lex_number(std::string& text) {
    while (pos_ < src_.size() && is_digit(src_[pos_])) text += advance();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      text += advance();
      while (pos_ < src_.size() && is_digit(src_[pos_])) text += advance();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && is_digit(src_[look])) {
        while (pos_ < look) text += advance();
        while (pos_ < src_.size() && is_digit(src_[pos_])) text += advance();
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct Register {
  std::string name;
  int size;
  int offset;
  bool quantum;
};

/// A resolved operand: one index (`q[3]`) or a whole register (`q`).
struct Operand {
  const Register* reg;
  std::optional<int> index;
  Token at;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Circuit run() {
    if (peek_ident("OPENQASM")) parse_header();
    while (cur().type != Tok::end) statement();
    Circuit circuit(num_qubits_, num_clbits_);
    for (auto& [inst, at] : ops_) {
      try {
        circuit.append(std::move(inst));
      } catch (const DataError& e) {
        throw QasmError(QasmErrorKind::bad_arity, at.line, at.column, e.what());
      }
    }
    return circuit;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  Token take() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  bool peek_ident(std::string_view text) const { return cur().type == Tok::ident && cur().text == text; }
  bool peek_symbol(std::string_view text) const { return cur().type == Tok::symbol && cur().text == text; }

  [[noreturn]] static void fail(QasmErrorKind kind, const Token& at, const std::string& message) {
    throw QasmError(kind, at.line, at.column, message);
  }

  static std::string describe(const Token& t) {
    if (t.type == Tok::end) return "end of input";
    return "'" + t.text + "'";
  }

  Token expect_symbol(std::string_view text) {
    if (!peek_symbol(text)) fail(QasmErrorKind::syntax, cur(), "expected '" + std::string(text) + "', found " + describe(cur()));
    return take();
  }

  Token expect_ident() {
    if (cur().type != Tok::ident) fail(QasmErrorKind::syntax, cur(), "expected an identifier, found " + describe(cur()));
    return take();
  }

  int expect_integer() {
    const Token t = cur();
    int value = 0;
    if (t.type != Tok::number) fail(QasmErrorKind::syntax, t, "expected an integer, found " + describe(t));
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || p != t.text.data() + t.text.size()) {
      fail(QasmErrorKind::syntax, t, "expected an integer, found " + describe(t));
    }
    take();
    return value;
  }

  void parse_header() {
    const Token kw = take();
    const Token version = cur();
    if (version.type != Tok::number) fail(QasmErrorKind::syntax, version, "expected a version number");
    if (version.text != "2.0" && version.text != "2") {
      fail(QasmErrorKind::unsupported_feature, version, "only OpenQASM 2.0 is supported");
    }
    take();
    expect_symbol(";");
    (void)kw;
  }

  void statement() {
    const Token head = cur();
    if (head.type != Tok::ident) fail(QasmErrorKind::syntax, head, "expected a statement, found " + describe(head));
    const std::string& word = head.text;
    if (word == "OPENQASM") fail(QasmErrorKind::syntax, head, "OPENQASM header must come first");
    if (word == "include") return include();
    if (word == "qreg" || word == "creg") return declaration(word == "qreg");
    if (word == "gate" || word == "opaque" || word == "if" || word == "reset") {
      fail(QasmErrorKind::unsupported_feature, head, "'" + word + "' is not supported");
    }
    if (word == "barrier") return barrier();
    if (word == "measure") return measure();
    return gate_application();
  }

  void include() {
    take();
    const Token file = cur();
    if (file.type != Tok::string) fail(QasmErrorKind::syntax, file, "expected a file name string");
    if (file.text != "qelib1.inc") fail(QasmErrorKind::unsupported_feature, file, "cannot include \"" + file.text + "\"");
    take();
    expect_symbol(";");
  }

  void declaration(bool quantum) {
    take();
    const Token name = expect_ident();
    expect_symbol("[");
    const Token size_tok = cur();
    const int size = expect_integer();
    if (size < 1) fail(QasmErrorKind::syntax, size_tok, "register size must be positive");
    expect_symbol("]");
    expect_symbol(";");
    if (find_register(name.text) != nullptr) {
      fail(QasmErrorKind::redeclaration, name, "register '" + name.text + "' is already declared");
    }
    int& total = quantum ? num_qubits_ : num_clbits_;
    registers_.push_back({name.text, size, total, quantum});
    total += size;
  }

  const Register* find_register(const std::string& name) const {
    for (const auto& r : registers_) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }

  Operand operand(bool quantum) {
    const Token name = expect_ident();
    const Register* reg = find_register(name.text);
    if (reg == nullptr) fail(QasmErrorKind::syntax, name, "undeclared register '" + name.text + "'");
    if (reg->quantum != quantum) {
      fail(QasmErrorKind::syntax, name,
           "'" + name.text + "' is a " + (reg->quantum ? "quantum" : "classical") + " register");
    }
    Operand op{reg, std::nullopt, name};
    if (peek_symbol("[")) {
      take();
      const Token idx_tok = cur();
      const int idx = expect_integer();
      if (idx < 0 || idx >= reg->size) {
        fail(QasmErrorKind::index_out_of_range, idx_tok,
             "index " + std::to_string(idx) + " out of range for " + name.text + "[" + std::to_string(reg->size) + "]");
      }
      expect_symbol("]");
      op.index = idx;
    }
    return op;
  }

  std::vector<Operand> operand_list() {
    std::vector<Operand> ops{operand(true)};
    while (peek_symbol(",")) {
      take();
      ops.push_back(operand(true));
    }
    return ops;
  }

  /// Number of broadcast instances for a list of operands; 1 when all are indexed.
  static int broadcast_width(const std::vector<Operand>& ops) {
    int width = 1;
    const Operand* first_reg = nullptr;
    for (const auto& op : ops) {
      if (op.index) continue;
      if (first_reg != nullptr && op.reg->size != first_reg->reg->size) {
        fail(QasmErrorKind::bad_arity, op.at, "broadcast registers have different sizes");
      }
      if (first_reg == nullptr) first_reg = &op;
      width = op.reg->size;
    }
    return width;
  }

  static int resolve(const Operand& op, int instance) {
    return op.reg->offset + (op.index ? *op.index : instance);
  }

  void barrier() {
    const Token head = take();
    const auto ops = operand_list();
    expect_symbol(";");
    Instruction inst{GateKind::barrier, {}, {}, {}};
    for (const auto& op : ops) {
      if (op.index) {
        inst.qubits.push_back(resolve(op, 0));
      } else {
        for (int i = 0; i < op.reg->size; ++i) inst.qubits.push_back(resolve(op, i));
      }
    }
    ops_.push_back({std::move(inst), head});
  }

  void measure() {
    const Token head = take();
    const Operand q = operand(true);
    expect_symbol("->");
    const Operand c = operand(false);
    expect_symbol(";");
    if (q.index.has_value() != c.index.has_value() || (!q.index && q.reg->size != c.reg->size)) {
      fail(QasmErrorKind::bad_arity, head, "measure operands must both be indexed or registers of equal size");
    }
    const int width = q.index ? 1 : q.reg->size;
    for (int i = 0; i < width; ++i) {
      ops_.push_back({Instruction{GateKind::measure, {}, {resolve(q, i)}, {resolve(c, i)}}, head});
    }
  }

  void gate_application() {
    const Token head = take();
    std::optional<GateKind> kind = gate_from_name(head.text);
    if (!kind && head.text == "U") kind = GateKind::u;
    if (!kind && head.text == "CX") kind = GateKind::cx;
    if (!kind) fail(QasmErrorKind::unknown_gate, head, "unknown gate '" + head.text + "'");
    const auto& sig = signature(*kind);

    std::vector<double> params;
    if (peek_symbol("(")) {
      take();
      if (!peek_symbol(")")) {
        params.push_back(angle());
        while (peek_symbol(",")) {
          take();
          params.push_back(angle());
        }
      }
      expect_symbol(")");
    }
    if (static_cast<int>(params.size()) != sig.num_params) {
      fail(QasmErrorKind::bad_arity, head,
           head.text + " takes " + std::to_string(sig.num_params) + " parameter(s), got " + std::to_string(params.size()));
    }
    const auto ops = operand_list();
    expect_symbol(";");
    if (static_cast<int>(ops.size()) != sig.num_qubits) {
      fail(QasmErrorKind::bad_arity, head,
           head.text + " acts on " + std::to_string(sig.num_qubits) + " qubit(s), got " + std::to_string(ops.size()));
    }
    const int width = broadcast_width(ops);
    for (int i = 0; i < width; ++i) {
      Instruction inst{*kind, params, {}, {}};
      for (const auto& op : ops) inst.qubits.push_back(resolve(op, i));
      for (std::size_t a = 0; a < inst.qubits.size(); ++a) {
        for (std::size_t b = a + 1; b < inst.qubits.size(); ++b) {
          if (inst.qubits[a] == inst.qubits[b]) fail(QasmErrorKind::bad_arity, ops[b].at, "repeated qubit operand");
        }
      }
      ops_.push_back({std::move(inst), head});
    }
  }

  // angle := sum ; sum := product (('+'|'-') product)* ; product := unary (('*'|'/') unary)*
  // unary := ('-'|'+') unary | primary ; primary := number | pi | '(' sum ')'
  double angle() {
    const Token start = cur();
    const double v = sum();
    if (!std::isfinite(v)) fail(QasmErrorKind::syntax, start, "angle expression is not finite");
    return v;
  }

  double sum() {
    double v = product();
    while (peek_symbol("+") || peek_symbol("-")) {
      const bool plus = take().text == "+";
      const double rhs = product();
      v = plus ? v + rhs : v - rhs;
    }
    return v;
  }

  double product() {
    double v = unary();
    while (peek_symbol("*") || peek_symbol("/")) {
      const bool times = take().text == "*";
      const double rhs = unary();
      v = times ? v * rhs : v / rhs;
    }
    return v;
  }

  double unary() {
    if (peek_symbol("-")) {
      take();
      return -unary();
    }
    if (peek_symbol("+")) {
      take();
      return unary();
    }
    return primary();
  }

  double primary() {
    const Token t = cur();
    if (t.type == Tok::number) {
      take();
      double v = 0.0;
      auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
      if (ec != std::errc{} || p != t.text.data() + t.text.size()) fail(QasmErrorKind::syntax, t, "bad number " + describe(t));
      return v;
    }
    if (t.type == Tok::ident && t.text == "pi") {
      take();
      return std::numbers::pi;
    }
    if (peek_symbol("(")) {
      take();
      const double v = sum();
      expect_symbol(")");
      return v;
    }
    if (t.type == Tok::ident) fail(QasmErrorKind::unsupported_feature, t, "symbolic parameter " + describe(t) + " is not supported");
    fail(QasmErrorKind::syntax, t, "expected an angle expression, found " + describe(t));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<Register> registers_;
  int num_qubits_ = 0;
  int num_clbits_ = 0;
  std::vector<std::pair<Instruction, Token>> ops_;
};

std::string format_angle(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  Lexer lexer(text);
  Parser parser(lexer.run());
  return parser.run();
}

std::string emit_qasm(const Circuit& circuit) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  if (circuit.num_qubits() > 0) out += "qreg q[" + std::to_string(circuit.num_qubits()) + "];\n";
  if (circuit.num_clbits() > 0) out += "creg c[" + std::to_string(circuit.num_clbits()) + "];\n";
  for (const auto& op : circuit.ops()) {
    if (op.kind == GateKind::measure) {
      out += "measure q[" + std::to_string(op.qubits[0]) + "] -> c[" + std::to_string(op.clbits[0]) + "];\n";
      continue;
    }
    out += gate_name(op.kind);
    if (!op.params.empty()) {
      out += '(';
      for (std::size_t i = 0; i < op.params.size(); ++i) {
        if (i > 0) out += ',';
        out += format_angle(op.params[i]);
      }
      out += ')';
    }
    for (std::size_t i = 0; i < op.qubits.size(); ++i) {
      out += i == 0 ? " " : ",";
      out += "q[" + std::to_string(op.qubits[i]) + "]";
    }
    out += ";\n";
  }
  return out;
}

}  // namespace qperf
