#include "core/expr.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace hopfroots::maps {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "parse error at offset " << pos << ": " << msg;
    throw ParseError(os.str());
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (pos == start) fail("expected a name");
    return text.substr(start, pos - start);
  }

  double number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '+' || text[pos] == '-' || text[pos] == '.' ||
            text[pos] == 'e' || text[pos] == 'E')) {
      ++pos;
    }
    if (pos == start) fail("expected a number");
    const std::string tok = text.substr(start, pos - start);
    try {
      std::size_t used = 0;
      const double v = std::stod(tok, &used);
      if (used != tok.size()) fail("bad number '" + tok + "'");
      return v;
    } catch (const std::exception&) {
      fail("bad number '" + tok + "'");
    }
  }

  int integer() {
    const double v = number();
    const int k = static_cast<int>(std::lround(v));
    if (v != static_cast<double>(k)) fail("expected an integer");
    return k;
  }

  std::vector<double> arg_list() {
    std::vector<double> args;
    expect('(');
    args.push_back(number());
    while (peek(',')) {
      expect(',');
      args.push_back(number());
    }
    expect(')');
    return args;
  }

  MapDescriptor expr() {
    const std::string name = ident();
    if (name == "compose") {
      expect('(');
      std::vector<MapDescriptor> parts;
      parts.push_back(expr());
      while (peek(',')) {
        expect(',');
        parts.push_back(expr());
      }
      expect(')');
      if (parts.size() < 2) fail("compose needs at least two maps");
      // compose(f, g, h) = f o g o h: rightmost applies first
      MapDescriptor acc = parts.back();
      for (std::size_t i = parts.size() - 1; i-- > 0;) {
        acc = parts[i].after(acc);
      }
      return acc;
    }
    return atom(name);
  }

  MapDescriptor atom(const std::string& name) {
    if (name == "hopf") return MapDescriptor(Generator::hopf());
    if (name == "hprime") return MapDescriptor(Generator::hprime());
    if (name == "cover3") return MapDescriptor(Generator::cover3());
    if (name == "cover2") return MapDescriptor(Generator::cover2());
    if (name == "collapse3") return MapDescriptor(Generator::collapse3());
    if (name == "antipodal") return MapDescriptor(Generator::antipodal());
    if (name == "reflect") return MapDescriptor(Generator::reflect());
    if (name == "qsquare") return MapDescriptor(Generator::qsquare());
    if (name == "identity") return MapDescriptor(Generator::power(1));
    if (name == "identity_rp") return MapDescriptor(Generator::power_rp(1));
    if (name == "power") {
      expect('(');
      const int k = integer();
      expect(')');
      return MapDescriptor(Generator::power(k));
    }
    if (name == "power_rp") {
      expect('(');
      const int k = integer();
      expect(')');
      return MapDescriptor(Generator::power_rp(k));
    }
    if (name == "const" || name == "const_rp3") {
      const auto args = arg_list();
      if (args.size() != 3) fail("const takes three coordinates");
      return MapDescriptor(Generator::constant(
          SpacePoint::s2(geom::Vec3(args[0], args[1], args[2])),
          name == "const" ? Space::S3 : Space::RP3));
    }
    if (name == "rot_s3" || name == "rot_s2") {
      const auto args = arg_list();
      if (args.size() != 3) fail(name + " takes (i, j, angle)");
      const int i = static_cast<int>(std::lround(args[0]));
      const int j = static_cast<int>(std::lround(args[1]));
      return MapDescriptor(name == "rot_s3"
                               ? Generator::rot_s3(i, j, args[2])
                               : Generator::rot_s2(i, j, args[2]));
    }
    fail("unknown map '" + name + "'");
  }
};

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_generator(const Generator& g) {
  std::ostringstream os;
  switch (g.kind) {
    case Gen::Hopf: return "hopf";
    case Gen::HPrime: return "hprime";
    case Gen::Cover3: return "cover3";
    case Gen::Cover2: return "cover2";
    case Gen::Collapse3: return "collapse3";
    case Gen::Antipodal: return "antipodal";
    case Gen::Reflect: return "reflect";
    case Gen::QSquare: return "qsquare";
    case Gen::Power:
      os << "power(" << g.k << ")";
      return os.str();
    case Gen::PowerRp:
      os << "power_rp(" << g.k << ")";
      return os.str();
    case Gen::Const:
      os << (g.const_domain == Space::RP3 ? "const_rp3(" : "const(")
         << format_number(g.value[0]) << "," << format_number(g.value[1])
         << "," << format_number(g.value[2]) << ")";
      return os.str();
    case Gen::RotS3:
      os << "rot_s3(" << g.axis_i << "," << g.axis_j << ","
         << format_number(g.angle) << ")";
      return os.str();
    case Gen::RotS2:
      os << "rot_s2(" << g.axis_i << "," << g.axis_j << ","
         << format_number(g.angle) << ")";
      return os.str();
  }
  throw ParseError("unknown generator kind");
}

}  // namespace

MapDescriptor parse_map(const std::string& text) {
  Parser p(text);
  MapDescriptor d = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return d;
}

std::string format_map(const MapDescriptor& f) {
  const auto& gens = f.gens();
  if (gens.size() == 1) return format_generator(gens[0]);
  std::ostringstream os;
  os << "compose(";
  // outermost first
  for (std::size_t i = gens.size(); i-- > 0;) {
    os << format_generator(gens[i]);
    if (i != 0) os << ", ";
  }
  os << ")";
  return os.str();
}

}  // namespace hopfroots::maps
