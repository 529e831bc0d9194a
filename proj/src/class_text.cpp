#include "prym/class_text.hpp"

#include <cctype>
#include <optional>

#include "prym/errors.hpp"

namespace prym {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const SpaceId& space) : s_(text), space_(space) {}

  DivisorClass parse_class() {
    DivisorClass out(space_);
    skip();
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip();
      if (at_end()) return out;
      pos_ = save;
    }
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      parse_term(sign, out);
      first = false;
      skip();
      if (at_end()) break;
    }
    return out;
  }

  GeneratorId parse_single_generator() {
    skip();
    GeneratorId g = parse_gen_id();
    skip();
    if (!at_end()) fail("trailing input after generator");
    return canonicalize(g, space_);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  SpaceId space_;

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long parse_int() {
    skip();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) fail("integer index too large");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  Rational parse_rational() {
    skip();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return Rational::parse(s_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start);
    }
  }

  // Contents of "[...]" applied to the signed coefficient sign*c.
  CoeffBound parse_bound(int sign) {
    expect('[');
    skip();
    bool flagged = false;
    if (peek() == '?') {
      flagged = true;
      ++pos_;
      skip();
    }
    std::optional<Rational> lo, hi;  // bounds on sign*c
    if (peek() == ']') {
      if (!flagged) fail("empty bound");
    } else if (s_.substr(pos_, 2) == ">=") {
      pos_ += 2;
      lo = parse_rational();
    } else if (s_.substr(pos_, 2) == "<=") {
      pos_ += 2;
      hi = parse_rational();
    } else if (s_.substr(pos_, 2) == "..") {
      pos_ += 2;
    } else {
      lo = parse_rational();
      skip();
      if (s_.substr(pos_, 2) != "..") fail("expected '..' in interval bound");
      pos_ += 2;
      skip();
      if (peek() != ']') hi = parse_rational();
    }
    expect(']');
    CoeffBound b = CoeffBound::interval(lo, hi);
    if (flagged) b = b.flagged();
    return sign < 0 ? b * Rational(-1) : b;
  }

  void parse_term(int sign, DivisorClass& out) {
    skip();
    if (peek() == '[') {
      CoeffBound b = parse_bound(sign);
      expect('*');
      add_gen(b, out);
      return;
    }
    Rational c(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = parse_rational();
      expect('*');
    }
    if (sign < 0) c = -c;
    add_gen(CoeffBound::exact(c), out);
  }

  void add_gen(const CoeffBound& c, DivisorClass& out) {
    skip();
    std::size_t start = pos_;
    std::string id = ident();
    if (id == "kappa1") {
      if (!c.is_exact()) {
        pos_ = start;
        fail("kappa1 needs an exact coefficient");
      }
      out += kappa1(space_).scaled(c.value());
      return;
    }
    pos_ = start;
    GeneratorId g = parse_gen_id();
    out.add(g, c);
  }

  std::string ident() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  MarkingSet parse_set() {
    skip();
    if (s_.substr(pos_, 3) == "\xE2\x88\x85") {
      pos_ += 3;
      return 0;
    }
    expect('{');
    std::vector<int> marks;
    skip();
    if (peek() != '}') {
      while (true) {
        long m = parse_int();
        if (m < 1 || m > kMaxMarkings) fail("marking out of range");
        marks.push_back(static_cast<int>(m));
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect('}');
    return make_set(marks);
  }

  GeneratorId parse_gen_id() {
    skip();
    std::size_t start = pos_;
    std::string id = ident();
    if (id.empty()) fail("expected generator name");
    if (id == "lambda") return GeneratorId::lambda();
    if (id == "psi") {
      if (peek() == '[') {
        ++pos_;
        long j = parse_int();
        expect(']');
        return GeneratorId::psi(static_cast<int>(j));
      }
      return GeneratorId::psi();
    }
    if (id == "d0") return GeneratorId::delta0();
    if (id == "d0p") return GeneratorId::delta0p();
    if (id == "d0pp") return GeneratorId::delta0pp();
    if (id == "d0ram") return GeneratorId::delta0ram();
    if (id == "dO" || id == "dEta") {
      expect('{');
      long i = parse_int();
      expect('}');
      return id == "dO" ? GeneratorId::marked_o(static_cast<int>(i)) : GeneratorId::marked_eta(static_cast<int>(i));
    }
    if (id == "d") {
      expect('{');
      long i = parse_int();
      expect(',');
      MarkingSet set = parse_set();
      skip();
      if (peek() == ':') {
        ++pos_;
        long j = parse_int();
        expect('}');
        if (i + j != space_.g)
          throw ValidityError("split d{" + std::to_string(i) + ",..:" + std::to_string(j) + "} does not add up to g=" +
                              std::to_string(space_.g));
        if (space_.family == Family::BranchedPrym2) {
          if (set != 0) throw ValidityError("unordered splittings on " + to_string(space_) + " carry no markings");
          return GeneratorId::unordered(static_cast<int>(i));
        }
        return GeneratorId::split(static_cast<int>(i), set);
      }
      expect('}');
      return GeneratorId::delta(static_cast<int>(i), set);
    }
    pos_ = start;
    fail("unknown generator name '" + id + "'");
  }
};

struct SignedText {
  bool negative;
  std::string body;  // without sign
};

SignedText coefficient_text(const CoeffBound& c) {
  if (c.is_exact()) {
    const Rational& v = c.value();
    Rational a = v.abs();
    return {v.sign() < 0, a == Rational(1) ? std::string() : a.str() + "*"};
  }
  std::string flag = c.from_unknown() ? "?" : "";
  if (!c.lo() && !c.hi()) return {false, "[" + (flag.empty() ? std::string("..") : flag) + "]*"};
  if (!c.lo()) return {true, "[" + flag + ">=" + (-*c.hi()).str() + "]*"};
  if (!c.hi()) return {false, "[" + flag + ">=" + c.lo()->str() + "]*"};
  return {false, "[" + flag + c.lo()->str() + ".." + c.hi()->str() + "]*"};
}

}  // namespace

DivisorClass parse_class(std::string_view text, const SpaceId& space) { return Parser(text, space).parse_class(); }

GeneratorId parse_generator(std::string_view text, const SpaceId& space) {
  return Parser(text, space).parse_single_generator();
}

std::string format_class(const DivisorClass& cls) {
  if (cls.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : cls.terms()) {
    SignedText t = coefficient_text(c);
    if (first)
      out += t.negative ? "-" : "";
    else
      out += t.negative ? " - " : " + ";
    out += t.body + generator_name(g, cls.space());
    first = false;
  }
  return out;
}

}  // namespace prym
