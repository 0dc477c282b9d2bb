#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "qsym/errors.hpp"
#include "qsym/io.hpp"

namespace qsym {
namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Caret, LBracket, RBracket, Comma, Colon, Le, Ge, Eq, Slash, End };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

class LineLexer {
 public:
  LineLexer(std::string_view line, int line_no) : line_no_(line_no) {
    std::size_t i = 0;
    while (i < line.size()) {
      const char c = line[i];
      const int col = static_cast<int>(i) + 1;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        std::size_t j = i;
        while (j < line.size() && (std::isdigit(static_cast<unsigned char>(line[j])) || line[j] == '.')) ++j;
        tokens_.push_back({Tok::Number, std::string(line.substr(i, j - i)), col});
        i = j;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
        tokens_.push_back({Tok::Name, std::string(line.substr(i, j - i)), col});
        i = j;
      } else if ((c == '<' || c == '>') && i + 1 < line.size() && line[i + 1] == '=') {
        tokens_.push_back({c == '<' ? Tok::Le : Tok::Ge, std::string(line.substr(i, 2)), col});
        i += 2;
      } else {
        Tok kind;
        switch (c) {
          case '+': kind = Tok::Plus; break;
          case '-': kind = Tok::Minus; break;
          case '*': kind = Tok::Star; break;
          case '^': kind = Tok::Caret; break;
          case '[': kind = Tok::LBracket; break;
          case ']': kind = Tok::RBracket; break;
          case ',': kind = Tok::Comma; break;
          case ':': kind = Tok::Colon; break;
          case '=': kind = Tok::Eq; break;
          case '/': kind = Tok::Slash; break;
          default:
            throw ParseError(std::string("unexpected character '") + c + "'", line_no, col);
        }
        tokens_.push_back({kind, std::string(1, c), col});
        ++i;
      }
    }
    end_column_ = static_cast<int>(line.size()) + 1;
  }

  const Token& peek(std::size_t ahead = 0) const {
    static const Token end{Tok::End, "", 0};
    if (pos_ + ahead >= tokens_.size()) {
      end_.column = end_column_;
      return end_;
    }
    return tokens_[pos_ + ahead];
  }
  Token next() {
    Token t = peek();
    if (pos_ < tokens_.size()) ++pos_;
    return t;
  }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what, peek());
    return next();
  }
  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message + (at.kind == Tok::End ? " at end of line" : " near '" + at.text + "'"), line_no_,
                     at.column);
  }
  bool at_end() const { return pos_ >= tokens_.size(); }
  int line() const { return line_no_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_no_;
  int end_column_ = 1;
  mutable Token end_{Tok::End, "", 0};
};

class ProblemParser {
 public:
  Problem parse(std::string_view text) {
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t stop = text.find('\n', start);
      std::string_view line = text.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start);
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      parse_line(line, line_no);
      if (stop == std::string_view::npos) break;
      start = stop + 1;
    }
    for (std::size_t k = 0; k < problem_.constraints.size(); ++k) {
      if (problem_.constraints[k].label.empty()) {
        std::string label = "c" + std::to_string(k + 1);
        while (labels_.count(label)) label += "'";
        labels_.insert(label);
        problem_.constraints[k].label = label;
      }
    }
    validate(problem_);
    return std::move(problem_);
  }

 private:
  void parse_line(std::string_view line, int line_no) {
    LineLexer lex(line, line_no);
    if (lex.at_end()) return;
    const Token head = lex.expect(Tok::Name, "a keyword");
    if (head.text == "var") {
      parse_var(lex);
    } else if (head.text == "min" || head.text == "max") {
      if (seen_objective_) lex.fail("duplicate objective", head);
      seen_objective_ = true;
      problem_.sense = head.text == "min" ? Sense::Minimize : Sense::Maximize;
      problem_.objective = parse_expr(lex);
    } else if (head.text == "st") {
      parse_constraint(lex);
    } else {
      lex.fail("unknown keyword", head);
    }
    if (!lex.at_end()) lex.fail("unexpected trailing input", lex.peek());
  }

  Rational parse_number(LineLexer& lex) {
    const Token t = lex.expect(Tok::Number, "a number");
    std::string text = t.text;
    if (lex.peek().kind == Tok::Slash) {
      lex.next();
      text += "/" + lex.expect(Tok::Number, "a denominator").text;
    }
    try {
      return parse_rational(text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), lex.line(), t.column);
    }
  }

  std::optional<Rational> parse_bound(LineLexer& lex) {
    bool negative = false;
    if (lex.accept(Tok::Minus)) {
      negative = true;
    } else {
      lex.accept(Tok::Plus);
    }
    if (lex.peek().kind == Tok::Name && lex.peek().text == "inf") {
      lex.next();
      return std::nullopt;
    }
    const Rational value = parse_number(lex);
    return negative ? Rational(-value) : value;
  }

  void parse_var(LineLexer& lex) {
    const Token name = lex.expect(Tok::Name, "a variable name");
    if (problem_.find_variable(name.text) >= 0) lex.fail("duplicate variable", name);
    Variable var;
    var.name = name.text;
    const Token mode = lex.expect(Tok::Name, "'in', 'int' or 'bin'");
    if (mode.text == "bin") {
      var.kind = VarKind::Binary;
      var.lower = Rational(0);
      var.upper = Rational(1);
    } else {
      if (mode.text == "int") {
        var.kind = VarKind::Integer;
        const Token in = lex.expect(Tok::Name, "'in'");
        if (in.text != "in") lex.fail("expected 'in'", in);
      } else if (mode.text != "in") {
        lex.fail("expected 'in', 'int' or 'bin'", mode);
      }
      const Token open = lex.expect(Tok::LBracket, "'['");
      const bool lower_neg = lex.peek().kind == Tok::Minus;
      var.lower = parse_bound(lex);
      lex.expect(Tok::Comma, "','");
      const bool upper_neg = lex.peek().kind == Tok::Minus;
      var.upper = parse_bound(lex);
      lex.expect(Tok::RBracket, "']'");
      if ((!var.lower && !lower_neg) || (!var.upper && upper_neg)) {
        throw ParseError("malformed bound: infinite bound has the wrong sign", lex.line(), open.column);
      }
      if (var.lower && var.upper && *var.lower > *var.upper) {
        throw ParseError("malformed bound: lower bound exceeds upper bound", lex.line(), open.column);
      }
      if (var.kind == VarKind::Integer && ((var.lower && denominator(*var.lower) != 1) ||
                                           (var.upper && denominator(*var.upper) != 1))) {
        throw ParseError("malformed bound: integer variable needs integral bounds", lex.line(), open.column);
      }
    }
    if (lex.peek().kind == Tok::Name && lex.peek().text == "aux") {
      lex.next();
      const int a = lookup(lex, lex.expect(Tok::Name, "a variable name"));
      lex.expect(Tok::Star, "'*'");
      const int b = lookup(lex, lex.expect(Tok::Name, "a variable name"));
      var.aux_origin = std::pair{std::min(a, b), std::max(a, b)};
    }
    problem_.variables.push_back(std::move(var));
  }

  void parse_constraint(LineLexer& lex) {
    Constraint c;
    if (lex.peek().kind == Tok::Name && lex.peek(1).kind == Tok::Colon) {
      const Token label = lex.next();
      lex.next();
      if (labels_.count(label.text) || label.text == "c0") lex.fail("duplicate constraint label", label);
      labels_.insert(label.text);
      c.label = label.text;
    }
    QuadForm lhs = parse_expr(lex);
    const Token rel = lex.next();
    switch (rel.kind) {
      case Tok::Le: c.relation = Relation::LessEqual; break;
      case Tok::Ge: c.relation = Relation::GreaterEqual; break;
      case Tok::Eq: c.relation = Relation::Equal; break;
      default: lex.fail("expected '<=', '>=' or '='", rel);
    }
    QuadForm rhs = parse_expr(lex);
    c.rhs = rhs.constant;
    rhs.constant = 0;
    lhs.add(rhs, -1);
    c.body = std::move(lhs);
    problem_.constraints.push_back(std::move(c));
  }

  int lookup(const LineLexer& lex, const Token& name) {
    const int idx = problem_.find_variable(name.text);
    if (idx < 0) lex.fail("unknown variable", name);
    return idx;
  }

  QuadForm parse_expr(LineLexer& lex) {
    QuadForm form;
    bool first = true;
    while (true) {
      Rational sign = 1;
      if (lex.accept(Tok::Minus)) {
        sign = -1;
      } else if (!lex.accept(Tok::Plus) && !first) {
        break;
      }
      parse_term(lex, sign, form);
      first = false;
    }
    return form;
  }

  void parse_term(LineLexer& lex, const Rational& sign, QuadForm& form) {
    Rational coef = sign;
    bool has_number = false;
    if (lex.peek().kind == Tok::Number) {
      coef *= parse_number(lex);
      has_number = true;
      if (lex.peek().kind == Tok::Star) {
        lex.next();
        if (lex.peek().kind != Tok::Name) lex.fail("expected a variable name", lex.peek());
      }
    }
    if (lex.peek().kind != Tok::Name) {
      if (!has_number) lex.fail("expected a term", lex.peek());
      form.constant += coef;
      return;
    }
    const int a = lookup(lex, lex.next());
    if (lex.accept(Tok::Star)) {
      const int b = lookup(lex, lex.expect(Tok::Name, "a variable name"));
      form.add_quad(a, b, coef);
    } else if (lex.peek().kind == Tok::Caret) {
      lex.next();
      const Token power = lex.expect(Tok::Number, "the exponent 2");
      if (power.text != "2") lex.fail("only squares are supported", power);
      form.add_quad(a, a, coef);
    } else {
      form.add_lin(a, coef);
    }
  }

  Problem problem_;
  std::set<std::string> labels_;
  bool seen_objective_ = false;
};

std::string format_expr(const QuadForm& form, const std::vector<std::string>& names) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const Rational& coef, const std::string& monomial) {
    const bool negative = coef < 0;
    const Rational magnitude = negative ? Rational(-coef) : coef;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (monomial.empty()) {
      out << format_rational(magnitude);
    } else if (magnitude == 1) {
      out << monomial;
    } else {
      out << format_rational(magnitude) << ' ' << monomial;
    }
  };
  for (const auto& [key, coef] : form.quad) {
    emit(coef, names[static_cast<std::size_t>(key.first)] + "*" + names[static_cast<std::size_t>(key.second)]);
  }
  for (const auto& [i, coef] : form.lin) emit(coef, names[static_cast<std::size_t>(i)]);
  if (form.constant != 0 || first) {
    if (first && form.constant == 0) {
      out << '0';
    } else {
      emit(form.constant, "");
    }
  }
  return out.str();
}

}  // namespace

Problem parse_problem(std::string_view text) { return ProblemParser{}.parse(text); }

Problem read_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

std::string print_problem(const Problem& problem) {
  const auto names = problem.variable_names();
  std::ostringstream out;
  auto bound = [](const std::optional<Rational>& b, const char* inf) {
    return b ? format_rational(*b) : std::string(inf);
  };
  for (const auto& v : problem.variables) {
    out << "var " << v.name;
    if (v.kind == VarKind::Binary) {
      out << " bin";
    } else {
      out << (v.kind == VarKind::Integer ? " int in [" : " in [") << bound(v.lower, "-inf") << ","
          << bound(v.upper, "inf") << "]";
    }
    if (v.aux_origin) {
      out << " aux " << names[static_cast<std::size_t>(v.aux_origin->first)] << "*"
          << names[static_cast<std::size_t>(v.aux_origin->second)];
    }
    out << '\n';
  }
  out << (problem.sense == Sense::Minimize ? "min " : "max ") << format_expr(problem.objective, names) << '\n';
  for (const auto& c : problem.constraints) {
    const char* rel = c.relation == Relation::LessEqual ? "<=" : c.relation == Relation::GreaterEqual ? ">=" : "=";
    out << "st " << c.label << ": " << format_expr(c.body, names) << ' ' << rel << ' ' << format_rational(c.rhs)
        << '\n';
  }
  return out.str();
}

}  // namespace qsym
