#include "pfjet/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pfjet {

namespace {

int parse_int(const std::string& key, const std::string& value) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw FormatError("header field " + key + " must be an integer, got '" + value + "'");
  }
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string IdealHeader::to_string() const {
  std::string out = kind + " n=" + std::to_string(n) + " k=" + std::to_string(k);
  if (r) out += " r=" + std::to_string(*r);
  if (aux > 0) out += " aux=" + std::to_string(aux);
  for (const auto& [key, value] : extra) out += " " + key + "=" + value;
  return out;
}

IdealHeader parse_header(const std::string& line) {
  std::istringstream in(line);
  IdealHeader h;
  if (!(in >> h.kind)) throw FormatError("empty header line");
  if (h.kind != "pfaffian-jet" && h.kind != "groebner-basis" && h.kind != "monomial-ideal") {
    throw FormatError("unknown ideal file kind '" + h.kind + "'");
  }
  bool have_n = false, have_k = false;
  std::string field;
  while (in >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos || eq == 0) throw FormatError("malformed header field '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "n") {
      h.n = parse_int(key, value);
      have_n = true;
    } else if (key == "k") {
      h.k = parse_int(key, value);
      have_k = true;
    } else if (key == "r") {
      h.r = parse_int(key, value);
    } else if (key == "aux") {
      h.aux = parse_int(key, value);
      if (h.aux < 0) throw FormatError("aux must be non-negative");
    } else {
      h.extra[key] = value;
    }
  }
  if (!have_n || !have_k) throw FormatError("header needs n=<n> and k=<k>");
  if (h.kind == "pfaffian-jet" && !h.r) throw FormatError("pfaffian-jet header needs r=<r>");
  return h;
}

IdealText read_ideal_text(std::istream& in) {
  IdealText text;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      text.header = parse_header(line);
      have_header = true;
    } else {
      text.lines.push_back(line);
    }
  }
  if (!have_header) throw FormatError("ideal file has no header line");
  return text;
}

IdealText read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_ideal_text(in);
}

OrderChoice parse_order_choice(const std::string& name) {
  if (name == "paper") return OrderChoice::paper;
  if (name == "elim") return OrderChoice::elim;
  throw std::invalid_argument("unknown order '" + name + "' (expected paper or elim)");
}

std::string to_string(OrderChoice c) { return c == OrderChoice::paper ? "paper" : "elim"; }

RingPtr ring_for(const IdealHeader& header, std::optional<OrderChoice> order) {
  RingPtr ring = make_jet_ring(header.n, header.k);
  if (header.aux == 0) {
    if (order == OrderChoice::elim) throw std::invalid_argument("the elim order needs auxiliary variables (aux=<count>)");
    return ring;
  }
  ring = with_auxiliary(ring, header.aux);
  if (order == OrderChoice::paper) {
    return std::make_shared<const Ring>(ring->vars(), MonomialOrder::paper(ring->num_vars()), ring->n(), ring->k());
  }
  return ring;
}

FieldTag parse_field_tag(const std::string& text) {
  if (text == "q") return {FieldTag::Kind::rationals, 0};
  if (text.rfind("p:", 0) == 0) {
    const std::string digits = text.substr(2);
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw std::invalid_argument("bad prime modulus in '" + text + "'");
    }
    PrimeField check(p);
    return check.tag();
  }
  if (text == "p") return PrimeField{}.tag();
  throw std::invalid_argument("unknown field '" + text + "' (expected q or p:<modulus>)");
}

MonomialIdeal parse_monomial_ideal(const IdealText& text, const RingPtr& ring) {
  std::vector<Monomial> gens;
  for (const auto& line : text.lines) {
    const auto p = parse_polynomial<Rationals>(line, ring);
    if (p.size() != 1) throw FormatError("monomial ideal line is not a single monomial: '" + line + "'");
    gens.push_back(p.leading_monomial());
  }
  return MonomialIdeal(ring, std::move(gens));
}

void write_monomial_ideal(std::ostream& out, const IdealHeader& header, const MonomialIdeal& ideal) {
  out << header.to_string() << '\n';
  for (const auto& g : ideal.generators()) out << to_string(g) << '\n';
}

}  // namespace pfjet
