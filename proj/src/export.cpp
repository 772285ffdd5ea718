#include "polyfam/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "polyfam/error.hpp"
#include "polyfam/pipeline.hpp"

namespace polyfam {

namespace {

std::string num(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

std::string export_obj(const Family& family, int significant_digits) {
  if (significant_digits < 1 || significant_digits > 17)
    throw Error(ErrorCode::InvalidArgument, "precision must be between 1 and 17");
  std::ostringstream os;
  os << "# polyfam export, coordinates rounded to " << significant_digits << " significant digits\n";
  for (const auto& p : family.point_set().points())
    os << "v " << num(p.x.get_d(), significant_digits) << " " << num(p.y.get_d(), significant_digits) << " "
       << num(p.z.get_d(), significant_digits) << "\n";
  for (const auto& poly : family.polygons()) {
    os << "f";
    for (std::size_t i : poly.indices) os << " " << i + 1;
    os << "\n";
  }
  return os.str();
}

std::string export_svg(const Family& family, const SvgOptions& options) {
  Vec3 d;
  if (options.direction) {
    d = *options.direction;
    if (is_zero(d)) throw Error(ErrorCode::ZeroVector, "projection direction is zero");
    for (std::size_t i = 0; i < family.size(); ++i)
      if (sgn(dot(family.polygon(i).plane().normal, d)) == 0)
        throw Error(ErrorCode::InvalidArgument,
                    "direction " + to_string(d) + " is parallel to the plane of polygon " + std::to_string(i));
  } else {
    ProjectionOptions po;
    po.seed = options.seed;
    d = choose_projection(family, po).spec.direction;
  }

  // Orthonormal image basis in floating point; the drawing is the only
  // inexact output.
  const double dx = d.x.get_d(), dy = d.y.get_d(), dz = d.z.get_d();
  const double dl = std::sqrt(dx * dx + dy * dy + dz * dz);
  const double n[3] = {dx / dl, dy / dl, dz / dl};
  double a[3] = {0, 0, 0};
  const double ax = std::fabs(n[0]), ay = std::fabs(n[1]), az = std::fabs(n[2]);
  a[(ay < ax && ay <= az) ? 1 : (az < ax && az < ay) ? 2 : 0] = 1;
  double u[3] = {n[1] * a[2] - n[2] * a[1], n[2] * a[0] - n[0] * a[2], n[0] * a[1] - n[1] * a[0]};
  const double ul = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
  for (double& c : u) c /= ul;
  const double w[3] = {n[1] * u[2] - n[2] * u[1], n[2] * u[0] - n[0] * u[2], n[0] * u[1] - n[1] * u[0]};

  std::vector<std::pair<double, double>> img;
  for (const auto& p : family.point_set().points()) {
    const double px = p.x.get_d(), py = p.y.get_d(), pz = p.z.get_d();
    img.emplace_back(px * u[0] + py * u[1] + pz * u[2], px * w[0] + py * w[1] + pz * w[2]);
  }
  double minx = 0, maxx = 1, miny = 0, maxy = 1;
  if (!img.empty()) {
    minx = maxx = img[0].first;
    miny = maxy = img[0].second;
    for (const auto& [x, y] : img) {
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, y);
      maxy = std::max(maxy, y);
    }
  }
  const double margin = 20;
  const double span = std::max({maxx - minx, maxy - miny, 1e-9});
  const double scale = (options.width - 2 * margin) / span;
  const double height = (maxy - miny) * scale + 2 * margin;
  auto sx = [&](double x) { return margin + (x - minx) * scale; };
  auto sy = [&](double y) { return height - margin - (y - miny) * scale; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed(options.width)
     << "\" height=\"" << fixed(height) << "\" viewBox=\"0 0 " << fixed(options.width) << " " << fixed(height)
     << "\">\n";
  os << "<!-- projection direction " << to_string(d) << " -->\n";
  os << "<g id=\"polygons\" stroke=\"black\" stroke-width=\"1\" fill-opacity=\"0.25\">\n";
  for (std::size_t i = 0; i < family.size(); ++i) {
    os << "<polygon id=\"p" << i << "\" fill=\"" << kPalette[i % 10] << "\" points=\"";
    bool first = true;
    for (std::size_t v : family.polygon(i).indices) {
      os << (first ? "" : " ") << fixed(sx(img[v].first)) << "," << fixed(sy(img[v].second));
      first = false;
    }
    os << "\"/>\n";
  }
  os << "</g>\n<g id=\"vertices\" fill=\"black\">\n";
  for (std::size_t i = 0; i < img.size(); ++i)
    os << "<circle id=\"v" << i << "\" cx=\"" << fixed(sx(img[i].first)) << "\" cy=\"" << fixed(sy(img[i].second))
       << "\" r=\"3\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace polyfam
