#include "tropbn/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "tropbn/errors.hpp"

namespace tropbn {

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

}  // namespace

std::string bn_region_svg(const BNRegion& region, long long g, long long k) {
    double xmax = 1, ymax = 1;
    for (const auto& p : region.grid) {
        xmax = std::max(xmax, static_cast<double>(p.x));
        ymax = std::max(ymax, static_cast<double>(p.y));
    }
    const double scale = 40.0, pad = 50.0;
    const double W = xmax * scale + 2 * pad, H = ymax * scale + 2 * pad;
    auto X = [&](double x) { return pad + x * scale; };
    auto Y = [&](double y) { return H - pad - y * scale; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(W) << "\" height=\""
       << fmt(H) << "\" viewBox=\"0 0 " << fmt(W) << " " << fmt(H) << "\">\n";
    os << "<!-- nonempty locus for g=" << g << ", k=" << k << " -->\n";
    os << "<line x1=\"" << fmt(X(0)) << "\" y1=\"" << fmt(Y(0)) << "\" x2=\"" << fmt(X(xmax + 0.5))
       << "\" y2=\"" << fmt(Y(0)) << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << fmt(X(0)) << "\" y1=\"" << fmt(Y(0)) << "\" x2=\"" << fmt(X(0))
       << "\" y2=\"" << fmt(Y(ymax + 0.5)) << "\" stroke=\"black\"/>\n";
    if (!region.boundary.empty()) {
        os << "<polyline fill=\"none\" stroke=\"blue\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : region.boundary) {
            if (y > ymax + 0.5) continue;
            os << fmt(X(x)) << "," << fmt(Y(std::min(y, ymax + 0.5))) << " ";
        }
        os << "\"/>\n";
    }
    for (const auto& p : region.grid) {
        os << "<circle cx=\"" << fmt(X(static_cast<double>(p.x))) << "\" cy=\""
           << fmt(Y(static_cast<double>(p.y))) << "\" r=\"4\" fill=\""
           << (p.nonempty ? "black" : "none") << "\" stroke=\"black\"/>\n";
    }
    os << "<text x=\"" << fmt(X(xmax - 1)) << "\" y=\"" << fmt(Y(-0.6)) << "\">r+1</text>\n";
    os << "<text x=\"" << fmt(X(-0.9)) << "\" y=\"" << fmt(Y(ymax - 0.5)) << "\">g-d+r</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::string skeleton_svg(const Skeleton& skel, int coord_x, int coord_y) {
    require_input(coord_x >= 0 && coord_x < skel.n, "projection coordinate out of range");
    require_input(skel.n == 1 || (coord_y >= 0 && coord_y < skel.n),
                  "projection coordinate out of range");
    auto proj = [&](const std::vector<Rat>& pos, int c) {
        if (skel.n == 1 && c != coord_x) return 0.0;
        return static_cast<double>(rat_num(pos[static_cast<size_t>(c)])) /
               static_cast<double>(rat_den(pos[static_cast<size_t>(c)]));
    };
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (const auto& v : skel.vertices) {
        double x = proj(v.pos, coord_x), y = skel.n == 1 ? 0.0 : proj(v.pos, coord_y);
        if (first) {
            xmin = xmax = x;
            ymin = ymax = y;
            first = false;
        }
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    double span = std::max({xmax - xmin, ymax - ymin, 1.0});
    double ray_len = span * 0.15;
    const double scale = 600.0 / span, pad = 60.0;
    auto X = [&](double x) { return pad + (x - xmin) * scale; };
    auto Y = [&](double y) { return pad + (ymax - y) * scale; };
    const double W = (xmax - xmin) * scale + 2 * pad + 2 * ray_len * scale;
    const double H = (ymax - ymin) * scale + 2 * pad + 2 * ray_len * scale;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(W) << "\" height=\""
       << fmt(H) << "\" viewBox=\"" << fmt(-ray_len * scale) << " " << fmt(-ray_len * scale) << " "
       << fmt(W) << " " << fmt(H) << "\">\n";
    for (const auto& e : skel.edges) {
        const auto& pu = skel.vertices[static_cast<size_t>(e.u)].pos;
        double x1 = proj(pu, coord_x), y1 = skel.n == 1 ? 0.0 : proj(pu, coord_y);
        double x2, y2;
        if (e.infinite) {
            double dx = static_cast<double>(e.dir[static_cast<size_t>(coord_x)]);
            double dy = skel.n == 1 ? 0.0 : static_cast<double>(e.dir[static_cast<size_t>(coord_y)]);
            double norm = std::max(std::sqrt(dx * dx + dy * dy), 1e-9);
            x2 = x1 + dx / norm * ray_len;
            y2 = y1 + dy / norm * ray_len;
        } else {
            const auto& pv = skel.vertices[static_cast<size_t>(e.v)].pos;
            x2 = proj(pv, coord_x);
            y2 = skel.n == 1 ? 0.0 : proj(pv, coord_y);
        }
        os << "<line x1=\"" << fmt(X(x1)) << "\" y1=\"" << fmt(Y(y1)) << "\" x2=\"" << fmt(X(x2))
           << "\" y2=\"" << fmt(Y(y2)) << "\" stroke=\"" << (e.infinite ? "gray" : "black")
           << "\" stroke-width=\"" << (e.infinite ? "1" : "1.5")
           << (e.infinite ? "\" stroke-dasharray=\"4 3" : "") << "\"/>\n";
    }
    for (const auto& v : skel.vertices) {
        if (v.cycle == 0) continue;
        double x = proj(v.pos, coord_x), y = skel.n == 1 ? 0.0 : proj(v.pos, coord_y);
        os << "<circle cx=\"" << fmt(X(x)) << "\" cy=\"" << fmt(Y(y))
           << "\" r=\"2.5\" fill=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace tropbn
