#include "acdkit/group_expr.hpp"

#include <cctype>

#include "acdkit/error.hpp"
#include "acdkit/named_groups.hpp"

namespace acdkit {

namespace {

struct NameInfo {
  std::string_view name;
  GroupKind kind;
};

constexpr NameInfo kNames[] = {
    {"C", GroupKind::Cyclic},
    {"Cyclic", GroupKind::Cyclic},
    {"D", GroupKind::Dihedral},
    {"Dihedral", GroupKind::Dihedral},
    {"S", GroupKind::Symmetric},
    {"Sym", GroupKind::Symmetric},
    {"A", GroupKind::Alternating},
    {"Alt", GroupKind::Alternating},
    {"SL", GroupKind::SpecialLinear},
    {"PSL", GroupKind::ProjectiveSpecialLinear},
    {"Aff", GroupKind::Affine},
    {"DirectProduct", GroupKind::DirectProduct},
    {"CentralProd", GroupKind::CentralProduct},
    {"Quot", GroupKind::Quotient},
    {"Quotient", GroupKind::Quotient},
    {"File", GroupKind::File},
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string_view identifier() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      fail("expected a group name");
    }
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  bool at_product_operator() {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == 'x' &&
           (pos_ + 1 == text_.size() || !ident_char(text_[pos_ + 1]));
  }

  long long integer() {
    skip_ws();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000LL) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("malformed integer");
    return v;
  }

  GroupSpec expr() {
    GroupSpec left = atom();
    while (at_product_operator()) {
      ++pos_;
      GroupSpec product;
      product.kind = GroupKind::DirectProduct;
      product.operands.push_back(std::move(left));
      product.operands.push_back(atom());
      left = std::move(product);
    }
    return left;
  }

  GroupSpec atom() {
    if (peek('(')) {
      ++pos_;
      GroupSpec inner = expr();
      expect(')');
      return inner;
    }
    const std::size_t name_pos = pos_;
    const std::string_view name = identifier();
    const NameInfo* info = nullptr;
    for (const auto& n : kNames) {
      if (n.name == name) info = &n;
    }
    if (info == nullptr) {
      pos_ = name_pos;
      fail("unknown group constructor '" + std::string(name) + "'");
    }
    GroupSpec spec;
    spec.kind = info->kind;
    expect('(');
    switch (spec.kind) {
      case GroupKind::Cyclic:
      case GroupKind::Dihedral:
      case GroupKind::Symmetric:
      case GroupKind::Alternating:
        spec.args.push_back(integer());
        break;
      case GroupKind::SpecialLinear:
      case GroupKind::ProjectiveSpecialLinear:
      case GroupKind::Affine:
        spec.args.push_back(integer());
        expect(',');
        spec.args.push_back(integer());
        break;
      case GroupKind::DirectProduct:
      case GroupKind::CentralProduct:
        spec.operands.push_back(expr());
        expect(',');
        spec.operands.push_back(expr());
        break;
      case GroupKind::Quotient:
        spec.operands.push_back(expr());
        expect(';');
        quotient_generators(spec);
        break;
      case GroupKind::File:
        spec.path = string_literal();
        break;
    }
    if (!peek(')')) fail("wrong number of arguments for " + std::string(name));
    ++pos_;
    return spec;
  }

  // Comma-separated cycle-notation generators up to the closing ')' of Quot.
  void quotient_generators(GroupSpec& spec) {
    skip_ws();
    while (!peek(')')) {
      const std::size_t start = pos_;
      int depth = 0;
      while (pos_ < text_.size()) {
        const char c = text_[pos_];
        if (c == '(') ++depth;
        if (c == ')') {
          if (depth == 0) break;
          --depth;
        }
        if (c == ',' && depth == 0) break;
        ++pos_;
      }
      if (depth != 0 || pos_ >= text_.size()) fail("unterminated quotient generator");
      const std::string_view cycles = text_.substr(start, pos_ - start);
      try {
        const long long top = max_point_in_cycles(cycles);
        spec.quotient_generators.push_back(
            to_cycle_string(parse_cycles(cycles, static_cast<std::size_t>(top + 1))));
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad quotient generator: ") + e.what(), start + e.position());
      }
      if (peek(',')) {
        ++pos_;
        skip_ws();
        if (peek(')')) fail("expected a generator after ','");
      }
    }
  }

  std::string string_literal() {
    expect('"');
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      out += text_[pos_++];
    }
    if (pos_ >= text_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::size_t positive_arg(const GroupSpec& spec, std::size_t i, const char* what) {
  const long long v = spec.args.at(i);
  if (v < 1) throw Error(std::string(what) + " needs a positive argument, got " + std::to_string(v));
  return static_cast<std::size_t>(v);
}

}  // namespace

GroupSpec parse_group_expr(std::string_view text) { return Parser(text).parse(); }

std::string render(const GroupSpec& spec) {
  const auto arg = [&](std::size_t i) { return std::to_string(spec.args.at(i)); };
  switch (spec.kind) {
    case GroupKind::Cyclic:
      return "C(" + arg(0) + ")";
    case GroupKind::Dihedral:
      return "D(" + arg(0) + ")";
    case GroupKind::Symmetric:
      return "S(" + arg(0) + ")";
    case GroupKind::Alternating:
      return "A(" + arg(0) + ")";
    case GroupKind::SpecialLinear:
      return "SL(" + arg(0) + "," + arg(1) + ")";
    case GroupKind::ProjectiveSpecialLinear:
      return "PSL(" + arg(0) + "," + arg(1) + ")";
    case GroupKind::Affine:
      return "Aff(" + arg(0) + "," + arg(1) + ")";
    case GroupKind::DirectProduct: {
      const auto& rhs = spec.operands.at(1);
      std::string right = render(rhs);
      if (rhs.kind == GroupKind::DirectProduct) right = "(" + right + ")";
      return render(spec.operands.at(0)) + " x " + right;
    }
    case GroupKind::CentralProduct:
      return "CentralProd(" + render(spec.operands.at(0)) + ", " + render(spec.operands.at(1)) + ")";
    case GroupKind::Quotient: {
      std::string out = "Quot(" + render(spec.operands.at(0)) + ";";
      for (std::size_t i = 0; i < spec.quotient_generators.size(); ++i) {
        out += (i == 0 ? " " : ", ") + spec.quotient_generators[i];
      }
      return out + ")";
    }
    case GroupKind::File:
      return "File(" + quoted(spec.path) + ")";
  }
  throw InternalError("unhandled group kind");
}

PermGroup construct(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::Cyclic:
      return cyclic(positive_arg(spec, 0, "C"));
    case GroupKind::Dihedral:
      return dihedral(positive_arg(spec, 0, "D"));
    case GroupKind::Symmetric:
      return symmetric(positive_arg(spec, 0, "S"));
    case GroupKind::Alternating:
      return alternating(positive_arg(spec, 0, "A"));
    case GroupKind::SpecialLinear:
    case GroupKind::ProjectiveSpecialLinear: {
      if (spec.args.at(0) != 2) throw Error("only 2-dimensional linear groups are supported");
      const std::size_t q = positive_arg(spec, 1, "SL/PSL");
      return spec.kind == GroupKind::SpecialLinear ? special_linear(q) : projective_special_linear(q);
    }
    case GroupKind::Affine:
      return affine(positive_arg(spec, 0, "Aff"), positive_arg(spec, 1, "Aff"));
    case GroupKind::DirectProduct:
      return direct_product(construct(spec.operands.at(0)), construct(spec.operands.at(1)));
    case GroupKind::CentralProduct: {
      const auto& l = spec.operands.at(0);
      const auto& c = spec.operands.at(1);
      if (l.kind != GroupKind::SpecialLinear || c.kind != GroupKind::Cyclic || c.args.at(0) % 2 != 0) {
        throw Error("CentralProd supports only CentralProd(SL(2,q), C(2m))");
      }
      if (l.args.at(0) != 2) throw Error("only 2-dimensional linear groups are supported");
      return central_product_sl2(positive_arg(l, 1, "SL"), positive_arg(c, 0, "C") / 2);
    }
    case GroupKind::Quotient: {
      const PermGroup g = construct(spec.operands.at(0));
      std::vector<Permutation> gens;
      for (const auto& s : spec.quotient_generators) gens.push_back(parse_cycles(s, g.degree()));
      return quotient_by(g, PermGroup(g.degree(), std::move(gens)));
    }
    case GroupKind::File:
      return group_from_file(spec.path);
  }
  throw InternalError("unhandled group kind");
}

PermGroup construct(std::string_view text) { return construct(parse_group_expr(text)); }

}  // namespace acdkit
