#include "svg.hpp"

#include <sstream>

namespace letgrid {

namespace {

constexpr int kUnit = 40;

struct Canvas {
  int n;
  std::ostringstream body;

  // Plot coordinates run 0..n+1 on both axes, y pointing up.
  double px(double x) const { return x * kUnit; }
  double py(double y) const { return (n + 1 - y) * kUnit; }

  void point(int x, int y) {
    body << "  <circle class=\"point\" cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"5\" fill=\"black\"/>\n";
  }
  void line(double x1, double y1, double x2, double y2, const char* cls) {
    body << "  <line class=\"" << cls << "\" x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2) << "\" y2=\""
         << py(y2) << "\" stroke=\"gray\" stroke-width=\"1.5\"/>\n";
  }
  std::string finish() const {
    std::ostringstream out;
    int size = (n + 1) * kUnit;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
        << size << " " << size << "\">\n"
        << body.str() << "</svg>\n";
    return out.str();
  }
};

}  // namespace

std::string permutation_svg(const Permutation& pi) {
  Canvas c{pi.size(), {}};
  for (int i = 1; i <= pi.size(); ++i) c.point(i, pi(i));
  return c.finish();
}

std::string gridding_svg(const Permutation& pi, const GridMatrix&, const Gridding& g) {
  int n = pi.size();
  Canvas c{n, {}};
  double lo = 0.5, hi = n + 0.5;
  std::vector<double> xs{lo}, ys{lo};
  for (int v : g.vertical) xs.push_back(v + 0.5);
  for (int h : g.horizontal) ys.push_back(h + 0.5);
  xs.push_back(hi);
  ys.push_back(hi);
  // Lines sharing a gap are drawn slightly apart so each stays visible.
  double shift = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    shift = (i > 0 && xs[i] == xs[i - 1]) ? shift + 0.08 : 0.0;
    c.line(xs[i] + shift, lo, xs[i] + shift, hi, "vertical");
  }
  for (std::size_t j = 0; j < ys.size(); ++j) {
    shift = (j > 0 && ys[j] == ys[j - 1]) ? shift + 0.08 : 0.0;
    c.line(lo, ys[j] + shift, hi, ys[j] + shift, "horizontal");
  }
  for (int i = 1; i <= n; ++i) c.point(i, pi(i));
  return c.finish();
}

}  // namespace letgrid
