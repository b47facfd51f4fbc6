#include "trisq/svg.hpp"

#include "trisq/error.hpp"

#include <algorithm>
#include <cstdio>

namespace trisq {

namespace {

constexpr double kSize = 480;
constexpr double kMargin = 48;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Canvas {
public:
  Canvas(const std::vector<std::pair<double, double>>& extent, std::string title) : title_(std::move(title)) {
    for (const auto& [x, y] : extent) {
      x1_ = std::max(x1_, x);
      y1_ = std::max(y1_, y);
      x0_ = std::min(x0_, x);
      y0_ = std::min(y0_, y);
    }
    if (x1_ <= x0_) x1_ = x0_ + 1;
    if (y1_ <= y0_) y1_ = y0_ + 1;
    const double px = 0.05 * (x1_ - x0_);
    const double py = 0.05 * (y1_ - y0_);
    x0_ -= px;
    x1_ += px;
    y0_ -= py;
    y1_ += py;
  }

  double sx(double x) const { return kMargin + (x - x0_) / (x1_ - x0_) * (kSize - 2 * kMargin); }
  double sy(double y) const { return kSize - kMargin - (y - y0_) / (y1_ - y0_) * (kSize - 2 * kMargin); }

  void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& stroke, const std::string& fill,
               double opacity) {
    body_ += "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) body_ += ' ';
      body_ += fmt(sx(pts[i].first)) + "," + fmt(sy(pts[i].second));
    }
    body_ += "\" stroke=\"" + stroke + "\" stroke-width=\"1.5\" fill=\"" + fill + "\" fill-opacity=\"" + fmt(opacity) +
             "\"/>\n";
  }

  void dot(double x, double y, double radius, const std::string& color) {
    body_ += "<circle cx=\"" + fmt(sx(x)) + "\" cy=\"" + fmt(sy(y)) + "\" r=\"" + fmt(radius) + "\" fill=\"" + color + "\"/>\n";
  }

  void label(double x, double y, const std::string& text) {
    body_ += "<text x=\"" + fmt(sx(x) + 4) + "\" y=\"" + fmt(sy(y) - 4) + "\" font-size=\"10\">" + escape(text) + "</text>\n";
  }

  void legend(std::size_t row, const std::string& color, const std::string& text) {
    const double y = kMargin + 14.0 * static_cast<double>(row);
    body_ += "<rect x=\"" + fmt(kSize - 150) + "\" y=\"" + fmt(y - 8) + "\" width=\"10\" height=\"10\" fill=\"" + color + "\"/>\n";
    body_ += "<text x=\"" + fmt(kSize - 134) + "\" y=\"" + fmt(y + 1) + "\" font-size=\"11\">" + escape(text) + "</text>\n";
  }

  std::string finish(const std::string& xlabel, const std::string& ylabel) const {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
    out += "<rect width=\"480\" height=\"480\" fill=\"white\"/>\n";
    out += "<text x=\"240\" y=\"24\" font-size=\"14\" text-anchor=\"middle\">" + escape(title_) + "</text>\n";
    // axes through the data origin when visible, else along the frame
    const double ax = std::clamp(sy(0), kMargin, kSize - kMargin);
    const double ay = std::clamp(sx(0), kMargin, kSize - kMargin);
    out += "<line x1=\"" + fmt(kMargin) + "\" y1=\"" + fmt(ax) + "\" x2=\"" + fmt(kSize - kMargin) + "\" y2=\"" + fmt(ax) +
           "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + fmt(ay) + "\" y1=\"" + fmt(kMargin) + "\" x2=\"" + fmt(ay) + "\" y2=\"" + fmt(kSize - kMargin) +
           "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt(kSize - kMargin) + "\" y=\"" + fmt(kSize - 16) + "\" font-size=\"12\" text-anchor=\"end\">" +
           escape(xlabel) + " (max " + fmt(x1_) + ")</text>\n";
    out += "<text x=\"12\" y=\"" + fmt(kMargin - 8) + "\" font-size=\"12\">" + escape(ylabel) + " (max " + fmt(y1_) + ")</text>\n";
    out += body_;
    out += "</svg>\n";
    return out;
  }

private:
  std::string title_;
  std::string body_;
  double x0_ = 0, x1_ = 0, y0_ = 0, y1_ = 0;
};

std::vector<std::pair<double, double>> to_doubles(const Polygon& p) {
  std::vector<std::pair<double, double>> out;
  for (const auto& v : p.vertices) out.emplace_back(to_double(v.x), to_double(v.y));
  return out;
}

}  // namespace

std::string polygon_svg(const Polygon& polygon, const std::string& title, const std::string& xlabel,
                        const std::string& ylabel) {
  const auto pts = to_doubles(polygon);
  Canvas c(pts, title);
  c.polygon(pts, kPalette[0], kPalette[0], 0.2);
  for (std::size_t i = 0; i < polygon.vertices.size(); ++i) {
    c.dot(pts[i].first, pts[i].second, 3, kPalette[1]);
    c.label(pts[i].first, pts[i].second, to_string(polygon.vertices[i]));
  }
  return c.finish(xlabel, ylabel);
}

std::string scaled_polygons_svg(const std::vector<unsigned>& rs, unsigned cutoff) {
  const Polygon limit = limit_region(cutoff);
  std::vector<std::pair<double, double>> extent = to_doubles(limit);
  std::vector<std::vector<std::pair<double, double>>> scaled;
  for (unsigned r : rs) {
    scaled.push_back(to_doubles(scaled_polygon(r)));
    extent.insert(extent.end(), scaled.back().begin(), scaled.back().end());
  }
  Canvas c(extent, "scaled Q^r and the limit region");
  c.polygon(to_doubles(limit), "black", "#cccccc", 0.5);
  c.legend(0, "#cccccc", "limit, k <= " + std::to_string(cutoff));
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    c.polygon(scaled[i], color, color, 0.1);
    c.legend(i + 1, color, "r = " + std::to_string(rs[i]));
  }
  return c.finish("6 d3 / r^2", "8 d4 / r^3");
}

std::string limit_region_svg(unsigned cutoff) {
  const auto pts = to_doubles(limit_region(cutoff));
  Canvas c(pts, "limit region, k <= " + std::to_string(cutoff));
  c.polygon(pts, "black", kPalette[0], 0.2);
  return c.finish("x", "y");
}

std::string sample_scatter_svg(const SampleBatch& batch) {
  const Polygon q = polygon_qr(batch.r);
  const auto hull = to_doubles(q);
  Canvas c(hull, "samples r=" + std::to_string(batch.r) + " n=" + std::to_string(batch.n) + " count=" +
                     std::to_string(batch.count) + " seed=" + std::to_string(batch.seed));
  c.polygon(hull, kPalette[0], kPalette[0], 0.15);
  for (const auto& p : batch.points) c.dot(to_double(p.x), to_double(p.y), 1.5, kPalette[1]);
  c.dot(to_double(batch.mean.x), to_double(batch.mean.y), 3.5, "black");
  return c.finish("d3", "d4");
}

}  // namespace trisq
