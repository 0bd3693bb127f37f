#include "multireg/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace multireg {

std::string twist_name(const MultiDegree& b) {
  if (b == MultiDegree(b.rank())) return "S";
  return "S" + (-b).to_string();
}

namespace {

// Twists in the order S(-3,-1), S(-2,-2), S(-2,-3), ...: first coordinate of
// the degree descending, the rest ascending.
bool twist_before(const MultiDegree& a, const MultiDegree& b) {
  if (a[0] != b[0]) return a[0] > b[0];
  return a < b;
}

} // namespace

std::string render_betti(const BettiTable& B) {
  std::ostringstream out;
  if (B.empty()) {
    out << "zero module\n";
    return out.str();
  }
  for (int i = 0; i <= B.max_index(); ++i) {
    std::vector<std::pair<MultiDegree, std::size_t>> row;
    for (const auto& [key, n] : B.entries())
      if (key.first == i && n) row.push_back({key.second, n});
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return twist_before(x.first, y.first); });
    out << "F" << i << "  rank " << std::setw(3) << B.total(i) << " :";
    for (const auto& [b, n] : row) {
      out << " " << twist_name(b);
      if (n > 1) out << "^" << n;
    }
    out << "\n";
  }
  if (!B.complete) out << "(incomplete)\n";
  return out.str();
}

std::string render_generators(const Region& R) {
  std::ostringstream out;
  out << "minimal generators (" << R.generators().size() << "):";
  for (const auto& g : R.generators()) out << " " << g.to_string();
  if (R.empty()) out << " none";
  out << "\n";
  return out.str();
}

std::string render_staircase(const Region& R, const DegreeBox& box) {
  if (R.rank() != 2) return {};
  std::ostringstream out;
  int width = 2;
  for (int v : {box.lo[1], box.hi[1], box.lo[0], box.hi[0]}) width = std::max<int>(width, int(std::to_string(v).size()) + 1);
  for (int y = box.hi[1]; y >= box.lo[1]; --y) {
    out << std::setw(width) << y << " |";
    for (int x = box.lo[0]; x <= box.hi[0]; ++x) {
      const MultiDegree p{x, y};
      char c = '.';
      if (std::find(R.generators().begin(), R.generators().end(), p) != R.generators().end()) c = '*';
      else if (R.contains(p)) c = '#';
      out << std::setw(width) << c;
    }
    out << "\n";
  }
  out << std::string(std::size_t(width) + 1, ' ') << "+" << std::string(std::size_t(width * (box.hi[0] - box.lo[0] + 1)), '-') << "\n";
  out << std::string(std::size_t(width) + 2, ' ');
  for (int x = box.lo[0]; x <= box.hi[0]; ++x) out << std::setw(width) << x;
  out << "\n";
  return out.str();
}

std::string render_region_svg(const Region& R, const DegreeBox& box, const std::string& title) {
  if (R.rank() != 2) throw std::invalid_argument("SVG output needs r = 2");
  const int cell = 28, margin = 40;
  const int nx = box.hi[0] - box.lo[0] + 1, ny = box.hi[1] - box.lo[1] + 1;
  const int W = 2 * margin + nx * cell, H = 2 * margin + ny * cell;
  auto X = [&](int x) { return margin + (x - box.lo[0]) * cell; };
  auto Y = [&](int y) { return margin + (box.hi[1] - y) * cell; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
      << " " << H << "\">\n";
  out << "<title>" << title << "</title>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  for (int x = box.lo[0]; x <= box.hi[0]; ++x)
    for (int y = box.lo[1]; y <= box.hi[1]; ++y)
      if (R.contains({x, y}))
        out << "<rect x=\"" << X(x) << "\" y=\"" << Y(y) << "\" width=\"" << cell << "\" height=\"" << cell
            << "\" fill=\"#9fd39f\" stroke=\"#5c9c5c\" stroke-width=\"0.5\"/>\n";
  for (int x = box.lo[0]; x <= box.hi[0] + 1; ++x)
    out << "<line x1=\"" << X(x) << "\" y1=\"" << margin << "\" x2=\"" << X(x) << "\" y2=\"" << margin + ny * cell
        << "\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";
  for (int y = box.lo[1] - 1; y <= box.hi[1]; ++y)
    out << "<line x1=\"" << margin << "\" y1=\"" << Y(y) << "\" x2=\"" << margin + nx * cell << "\" y2=\"" << Y(y)
        << "\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";
  for (const auto& g : R.generators()) {
    if (!box.contains(g)) continue;
    out << "<circle cx=\"" << X(g[0]) + cell / 2 << "\" cy=\"" << Y(g[1]) + cell / 2 << "\" r=\"5\" fill=\"#1f5f1f\"/>\n";
    out << "<text x=\"" << X(g[0]) + 2 << "\" y=\"" << Y(g[1]) + cell - 3
        << "\" font-family=\"monospace\" font-size=\"8\">" << g.to_string() << "</text>\n";
  }
  for (int x = box.lo[0]; x <= box.hi[0]; ++x)
    out << "<text x=\"" << X(x) + cell / 2 - 3 << "\" y=\"" << margin + ny * cell + 14
        << "\" font-family=\"monospace\" font-size=\"10\">" << x << "</text>\n";
  for (int y = box.lo[1]; y <= box.hi[1]; ++y)
    out << "<text x=\"" << margin - 18 << "\" y=\"" << Y(y) + cell / 2 + 3
        << "\" font-family=\"monospace\" font-size=\"10\">" << y << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string render_verdict(const LinearityVerdict& v) {
  std::ostringstream out;
  out << "verdict: " << to_string(v.kind);
  if (v.kind == Linearity::Quasilinear) out << " (not linear)";
  out << "\n";
  if (v.generator_degree) out << "generated in degree " << v.generator_degree->to_string() << "\n";
  for (const auto& w : v.witnesses) {
    out << "witness: F" << w.index << " twist " << twist_name(w.twist);
    if (w.violated.size() > 2 && w.violated[1] == '_') out << ", " << (-w.twist).to_string() << " not in " << w.violated;
    else out << ", " << w.violated;
    out << "\n";
  }
  return out.str();
}

std::string render_cohomology(const CohomologyTable& T) {
  std::ostringstream out;
  out << "box " << T.box.lo.to_string() << ".." << T.box.hi.to_string() << ", t = " << T.t
      << (T.stabilized ? " (two consecutive powers of B agree)" : " (not stabilized)") << "\n";
  const std::size_t r = T.box.lo.rank();
  for (int i = 0; i <= T.max_index; ++i) {
    out << "H^" << i << ":\n";
    if (r == 2) {
      int width = 2;
      for (const auto& [key, v] : T.dims) width = std::max<int>(width, int(std::to_string(v).size()) + 1);
      for (int v : {T.box.lo[0], T.box.hi[0], T.box.lo[1], T.box.hi[1]}) width = std::max<int>(width, int(std::to_string(v).size()) + 1);
      for (int y = T.box.hi[1]; y >= T.box.lo[1]; --y) {
        out << std::setw(width) << y << " |";
        for (int x = T.box.lo[0]; x <= T.box.hi[0]; ++x) {
          const std::size_t v = T.at(i, {x, y});
          out << std::setw(width) << (v ? std::to_string(v) : ".");
        }
        out << "\n";
      }
      out << std::setw(width) << "" << "  ";
      for (int x = T.box.lo[0]; x <= T.box.hi[0]; ++x) out << std::setw(width) << x;
      out << "\n";
    } else {
      bool any = false;
      for (const auto& [key, v] : T.dims)
        if (key.first == i && v) {
          out << "  " << key.second.to_string() << ": " << v << "\n";
          any = true;
        }
      if (!any) out << "  zero on the box\n";
    }
  }
  return out.str();
}

} // namespace multireg
