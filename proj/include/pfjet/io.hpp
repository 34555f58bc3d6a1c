#pragma once

// Ideal files: a header line "<kind> key=value ..." followed by one
// polynomial (or monomial) per line. Blank lines and '#' comments are skipped.
//
//   pfaffian-jet n=5 k=3 r=2
//   groebner-basis n=5 k=3 r=2 order=paper field=q
//   monomial-ideal n=6 k=2
//
// An optional aux=<count> prepends auxiliary variables w, w1, ...

#include "pfjet/groebner.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pfjet {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IdealHeader {
  std::string kind;
  int n = 0;
  int k = 0;
  std::optional<int> r;
  int aux = 0;
  std::map<std::string, std::string> extra;

  std::string to_string() const;
};

IdealHeader parse_header(const std::string& line);

struct IdealText {
  IdealHeader header;
  std::vector<std::string> lines;
};

IdealText read_ideal_text(std::istream& in);
IdealText read_ideal_file(const std::string& path);

enum class OrderChoice { paper, elim };

OrderChoice parse_order_choice(const std::string& name);
std::string to_string(OrderChoice c);

/// Ring described by the header. Without auxiliary variables only the paper
/// order exists and `elim` is rejected; with them the default is `elim`.
RingPtr ring_for(const IdealHeader& header, std::optional<OrderChoice> order = std::nullopt);

/// Parses a "q" / "p:<modulus>" field option.
FieldTag parse_field_tag(const std::string& text);

template <class F>
std::vector<Polynomial<F>> parse_polynomials(const IdealText& text, const RingPtr& ring, const F& field) {
  std::vector<Polynomial<F>> out;
  out.reserve(text.lines.size());
  for (const auto& line : text.lines) out.push_back(parse_polynomial<F>(line, ring, field));
  return out;
}

MonomialIdeal parse_monomial_ideal(const IdealText& text, const RingPtr& ring);

template <class F>
void write_ideal(std::ostream& out, const IdealHeader& header, std::span<const Polynomial<F>> polys) {
  out << header.to_string() << '\n';
  for (const auto& p : polys) out << to_string(p) << '\n';
}

void write_monomial_ideal(std::ostream& out, const IdealHeader& header, const MonomialIdeal& ideal);

}  // namespace pfjet
