#include "ratdiag/emit.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace ratdiag {

void emit_fan_csv(const Fan& fan, std::ostream& out) {
    out << "kind,i,j,gen1_p,gen1_q,gen2_p,gen2_q,base_z,base_w\n";
    for (const Cone& c : fan.cones) {
        if (c.kind == Cone::Kind::saddle)
            out << "saddle," << c.line_i << ",";
        else
            out << "vertex," << c.line_i << "," << c.line_j;
        out << "," << c.gen[0].p << "," << c.gen[0].q << "," << c.gen[1].p
            << "," << c.gen[1].q << "," << to_string(c.base.z) << ","
            << to_string(c.base.w) << "\n";
    }
}

void emit_table_csv(const CoeffTable& table, std::ostream& out) {
    out << "x,y,numerator,denominator\n";
    for (int x = 0; x <= table.xmax(); ++x)
        for (int y = 0; y <= table.ymax(); ++y) {
            const Rational& v = table.at(x, y);
            out << x << "," << y << "," << v.get_num().get_str() << ","
                << v.get_den().get_str() << "\n";
        }
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

void emit_fan_svg(const Fan& fan, const Polygon& poly, std::ostream& out) {
    double zmax = 0, wmax = 0;
    for (const Point2Q& v : poly.vertices) {
        zmax = std::max(zmax, to_real(v.z).convert_to<double>());
        wmax = std::max(wmax, to_real(v.w).convert_to<double>());
    }
    const double range = std::max({zmax, wmax, 1.0}) * 1.15;
    const double size = 480, margin = 48, span = size - 2 * margin;
    auto sx = [&](double z) { return margin + z / range * span; };
    auto sy = [&](double w) { return size - margin - w / range * span; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
        << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size
        << "\">\n";
    out << "<rect width=\"" << size << "\" height=\"" << size
        << "\" fill=\"white\"/>\n";

    // region boundary
    out << "<polygon points=\"";
    for (const Point2Q& v : poly.vertices)
        out << fmt(sx(to_real(v.z).convert_to<double>())) << ","
            << fmt(sy(to_real(v.w).convert_to<double>())) << " ";
    out << "\" fill=\"#dbeafe\" stroke=\"#1d4ed8\" stroke-width=\"1.5\"/>\n";

    // axes
    out << "<line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(0)) << "\" x2=\""
        << fmt(sx(range)) << "\" y2=\"" << fmt(sy(0))
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(0)) << "\" x2=\""
        << fmt(sx(0)) << "\" y2=\"" << fmt(sy(range))
        << "\" stroke=\"black\"/>\n";

    // cone generator rays with labels at the angular midpoint
    for (const Cone& c : fan.cones) {
        double mx = 0, my = 0;
        for (const DirVector& g : c.gen) {
            double gp = to_real(g.p).convert_to<double>();
            double gq = to_real(g.q).convert_to<double>();
            double norm = std::hypot(gp, gq);
            double ex = gp / norm * range * 0.92;
            double ey = gq / norm * range * 0.92;
            mx += gp / norm;
            my += gq / norm;
            out << "<line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(0))
                << "\" x2=\"" << fmt(sx(ex)) << "\" y2=\"" << fmt(sy(ey))
                << "\" stroke=\"#dc2626\" stroke-dasharray=\"5,4\"/>\n";
        }
        double norm = std::hypot(mx, my);
        double lx = mx / norm * range * 0.55;
        double ly = my / norm * range * 0.55;
        std::ostringstream label;
        if (c.kind == Cone::Kind::saddle)
            label << "K" << c.line_i;
        else
            label << "O" << c.line_i << c.line_j;
        out << "<text x=\"" << fmt(sx(lx)) << "\" y=\"" << fmt(sy(ly))
            << "\" font-size=\"14\" fill=\"#7f1d1d\">" << label.str()
            << "</text>\n";
    }
    out << "</svg>\n";
}

void write_plot_data(const Fan& fan, const Polygon& poly,
                     const std::string& path, const std::string& format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::io_error, "cannot write '" + path + "'");
    if (format == "csv")
        emit_fan_csv(fan, out);
    else if (format == "svg")
        emit_fan_svg(fan, poly, out);
    else
        raise(Errc::syntax_error, "unknown plot format '" + format + "'");
    out.flush();
    if (!out) raise(Errc::io_error, "write failed for '" + path + "'");
}

} // namespace ratdiag
