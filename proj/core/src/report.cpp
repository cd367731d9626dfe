#include <algorithm>
#include <string>

#include "format.hpp"
#include "psiapprox/bounds.hpp"

namespace psiapprox {

using detail::g17;

namespace {

constexpr const char* kColumns[] = {"check", "n",     "beta",     "p",       "s",
                                    "a",     "b",     "lower",    "measured", "upper",
                                    "aux",   "verdict", "margin_low", "margin_high", "notes"};

std::string opt(const std::optional<double>& x) { return x ? g17(*x) : std::string(); }

std::vector<std::string> fields(const BoundReport& r) {
  std::string notes = r.notes;
  std::replace(notes.begin(), notes.end(), ',', ';');
  std::replace(notes.begin(), notes.end(), '\n', ' ');
  return {r.check,
          std::to_string(r.params.n),
          g17(r.params.beta),
          g17(r.params.p),
          g17(r.params.s),
          g17(r.params.a),
          g17(r.params.b),
          g17(r.lower),
          g17(r.measured),
          opt(r.upper),
          opt(r.aux),
          to_string(r.verdict),
          g17(r.margin_low),
          opt(r.margin_high),
          notes};
}

}  // namespace

std::string csv_header() {
  std::string out;
  for (const char* c : kColumns) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out;
}

std::string to_csv_row(const BoundReport& r) {
  std::string out;
  bool first = true;
  for (const auto& f : fields(r)) {
    if (!first) out += ',';
    out += f;
    first = false;
  }
  return out;
}

std::string to_text(const BoundReport& r) {
  std::string out;
  const auto fs = fields(r);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    out += kColumns[i];
    out += ": ";
    out += fs[i];
    out += '\n';
  }
  return out;
}

}  // namespace psiapprox
