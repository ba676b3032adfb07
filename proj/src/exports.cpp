#include "octaharm/exports.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace octaharm {

namespace {

void append_complex(std::string& out, complexd z) {
  out += '[';
  out += format_double(z.real(), 17);
  out += ',';
  out += format_double(z.imag(), 17);
  out += ']';
}

void append_spinor(std::string& out, const UnitSpinor& u) {
  out += '[';
  append_complex(out, u.a());
  out += ',';
  append_complex(out, u.b());
  out += ',';
  append_complex(out, u.c());
  out += ',';
  append_complex(out, u.d());
  out += ']';
}

}  // namespace

std::string format_double(double v, int significant) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
  return buf;
}

std::string deck_group_json(const DeckGroup& d) {
  std::string out = "{\n";
  out += "  \"manifold\": \"";
  out += to_string(d.manifold());
  out += "\",\n  \"order\": 24,\n  \"generator_words\": [";
  const auto words = generator_words(d.manifold());
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (k) out += ", ";
    out += '"';
    out += words[k].text();
    out += '"';
  }
  out += "],\n  \"elements\": [\n";
  for (std::size_t i = 0; i < d.elements().size(); ++i) {
    const DeckElement& el = d.elements()[i];
    out += "    {\"word\": \"";
    out += el.word;
    out += "\", \"left\": ";
    append_spinor(out, el.pair.left());
    out += ", \"right\": ";
    append_spinor(out, el.pair.right());
    out += '}';
    if (i + 1 < d.elements().size()) out += ',';
    out += '\n';
  }
  out += "  ]\n}\n";
  return out;
}

std::string basis_json(const InvariantBasis& basis,
                       std::optional<bool> span_verdict,
                       const std::string& note) {
  std::string out = "{\n";
  out += "  \"manifold\": \"";
  out += to_string(basis.manifold);
  out += "\",\n  \"two_j\": " + std::to_string(basis.two_j);
  out += ",\n  \"j\": " + format_double(0.5 * basis.two_j, 17);
  out += ",\n  \"frame\": \"" + basis.frame + "\"";
  out += ",\n  \"dimension\": " +
         std::to_string(static_cast<long long>(basis.vectors.rows()));
  out += ",\n  \"count\": " + std::to_string(basis.count());
  // Unit-coefficient vectors acquire unit L2(S^3) norm after scaling by
  // sqrt(2j+1).
  out += ",\n  \"l2_scale\": " +
         format_double(std::sqrt(static_cast<double>(basis.two_j + 1)), 17);

  out += ",\n  \"labels\": [";
  for (std::size_t k = 0; k < basis.labels.size(); ++k) {
    const BasisLabel& lab = basis.labels[k];
    if (k) out += ", ";
    out += "{\"rho\": " + std::to_string(lab.rho) +
           ", \"m2\": " + std::to_string(lab.m2) + ", \"kind\": \"" +
           lab.kind_name() + "\"}";
  }
  out += "]";

  if (span_verdict.has_value()) {
    out += ",\n  \"closed_form_span_matches\": ";
    out += *span_verdict ? "true" : "false";
  }
  if (!note.empty()) {
    out += ",\n  \"note\": \"" + note + "\"";
  }

  out += ",\n  \"vectors\": [";
  for (int c = 0; c < basis.vectors.cols(); ++c) {
    if (c) out += ',';
    out += "\n    [";
    for (int r = 0; r < basis.vectors.rows(); ++r) {
      if (r) out += ',';
      append_complex(out, basis.vectors(r, c));
    }
    out += ']';
  }
  if (basis.vectors.cols() > 0) out += "\n  ";
  out += "]\n}\n";
  return out;
}

std::string spectrum_csv(
    const std::vector<std::reference_wrapper<const DeckGroup>>& groups,
    int max_two_j) {
  std::string out = "manifold,two_j,multiplicity\n";
  for (const DeckGroup& d : groups) {
    for (int two_j = 0; two_j <= max_two_j; ++two_j) {
      out += to_string(d.manifold());
      out += ',';
      out += std::to_string(two_j);
      out += ',';
      out += std::to_string(multiplicity(Spin(two_j), d));
      out += '\n';
    }
  }
  return out;
}

std::string centers_csv(
    const std::vector<std::reference_wrapper<const DeckGroup>>& groups) {
  std::string out = "manifold,index,x0,x1,x2,x3\n";
  std::vector<std::vector<Point4>> all_centers;
  for (const DeckGroup& d : groups) {
    const auto centers = center_positions(d);
    for (std::size_t i = 0; i < centers.size(); ++i) {
      out += to_string(d.manifold());
      out += ',' + std::to_string(i);
      out += ',' + format_double(centers[i].x0, 12);
      out += ',' + format_double(centers[i].x1, 12);
      out += ',' + format_double(centers[i].x2, 12);
      out += ',' + format_double(centers[i].x3, 12);
      out += '\n';
    }
    all_centers.push_back(centers);
  }
  for (std::size_t a = 0; a < groups.size(); ++a) {
    for (std::size_t b = a + 1; b < groups.size(); ++b) {
      for (std::size_t i = 0; i < all_centers[a].size(); ++i) {
        int match = -1;
        for (std::size_t j = 0; j < all_centers[b].size(); ++j) {
          if (all_centers[a][i].distance(all_centers[b][j]) < kBasisTol) {
            match = static_cast<int>(j);
            break;
          }
        }
        out += "match,";
        out += to_string(groups[a].get().manifold());
        out += ',';
        out += to_string(groups[b].get().manifold());
        out += ',' + std::to_string(i) + ',' + std::to_string(match) + '\n';
      }
    }
  }
  return out;
}

}  // namespace octaharm
