#include "mckay/svg.hpp"

#include <iomanip>
#include <sstream>

#include "mckay/error.hpp"

namespace mckay {

namespace {

struct Point {
    double x;
    double y;
};

constexpr double kWidth = 520;
constexpr double kTriangle = 400;
constexpr double kMargin = 40;

Point place(const IntVector& ray) {
    const Integer sum = ray[0] + ray[1] + ray[2];
    if (sgn(sum) <= 0) throw Error(ErrorCode::BadShape, "ray does not meet the plane x1+x2+x3=1");
    const Point top{kMargin + kTriangle / 2, kMargin};
    const Point right{kMargin + kTriangle, kMargin + kTriangle * 0.866};
    const Point left{kMargin, kMargin + kTriangle * 0.866};
    const double s = sum.get_d();
    const double a = ray[0].get_d() / s;
    const double b = ray[1].get_d() / s;
    const double c = ray[2].get_d() / s;
    return {a * top.x + b * right.x + c * left.x, a * top.y + b * right.y + c * left.y};
}

}  // namespace

std::string fan_cross_section_svg(const Fan& fan) {
    if (fan.dim != 3 || !fan.lineality.empty()) {
        throw Error(ErrorCode::BadShape, "cross-section plots need a pointed fan in dimension 3");
    }
    std::vector<Point> pts;
    for (const auto& r : fan.rays) pts.push_back(place(r));
    const double height = 2 * kMargin + kTriangle * 0.866 + 20 + 16.0 * static_cast<double>(fan.rays.size());

    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << kWidth << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const Point t = place({1, 0, 0}), r = place({0, 1, 0}), l = place({0, 0, 1});
    os << "<polygon points=\"" << t.x << "," << t.y << " " << r.x << "," << r.y << " " << l.x << "," << l.y
       << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";

    for (const auto& c : fan.cones) {
        if (c.cone_dimension() != 2 || c.ray_indices.size() != 2) continue;
        const Point& p = pts[c.ray_indices[0]];
        const Point& q = pts[c.ray_indices[1]];
        os << "<line x1=\"" << p.x << "\" y1=\"" << p.y << "\" x2=\"" << q.x << "\" y2=\"" << q.y
           << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        os << "<circle cx=\"" << pts[i].x << "\" cy=\"" << pts[i].y << "\" r=\"4\" fill=\"black\"/>\n";
        os << "<text x=\"" << pts[i].x + 6 << "\" y=\"" << pts[i].y - 6
           << "\" font-family=\"sans-serif\" font-size=\"13\">" << i + 1 << "</text>\n";
    }
    double y = 2 * kMargin + kTriangle * 0.866 + 10;
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        os << "<text x=\"" << kMargin << "\" y=\"" << y << "\" font-family=\"monospace\" font-size=\"12\">" << i + 1
           << ": (";
        for (std::size_t k = 0; k < 3; ++k) os << (k ? "," : "") << fan.rays[i][k].get_str();
        os << ")</text>\n";
        y += 16;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace mckay
