// File emitters: deterministic SVG scatter of an empirical root measure and
// the CSV schemas. Every file is written atomically (temp + rename) so
// readers never observe a partial file.
#ifndef EIGENROOT_EMIT_HPP
#define EIGENROOT_EMIT_HPP

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eigenroot/lemmas.hpp"
#include "eigenroot/scaling.hpp"

namespace eigenroot {

inline void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed: " + tmp + " -> " + path);
}

namespace detail {

inline std::string fixed(double v, int digits = 3) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    // Avoid the "-0.000" vs "0.000" byte difference.
    std::string s(buf);
    if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
    return s;
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace detail

// Standalone SVG scatter plot: auto-fit box with 10% margin, uniform scale,
// unit-radius dots, axis cross at the origin, deterministic bytes.
inline std::string render_svg(const EmpiricalMeasure& m, const std::string& operator_text) {
    if (m.atoms.empty()) throw PreconditionViolation("render_svg: empty measure");
    const double canvas = 600.0;

    double min_x = 1e308, max_x = -1e308, min_y = 1e308, max_y = -1e308;
    for (const auto& atom : m.atoms) {
        const double x = atom.real().to_double();
        const double y = atom.imag().to_double();
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    double w = max_x - min_x, h = max_y - min_y;
    if (w <= 0) w = 1.0;
    if (h <= 0) h = 1.0;
    min_x -= 0.1 * w;
    max_x += 0.1 * w;
    min_y -= 0.1 * h;
    max_y += 0.1 * h;
    const double scale = canvas / std::max(max_x - min_x, max_y - min_y);
    // Centre the shorter extent.
    const double pad_x = (canvas - (max_x - min_x) * scale) / 2.0;
    const double pad_y = (canvas - (max_y - min_y) * scale) / 2.0;
    auto px = [&](double x) { return pad_x + (x - min_x) * scale; };
    auto py = [&](double y) { return canvas - pad_y - (y - min_y) * scale; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
           "viewBox=\"0 0 600 600\">\n";
    svg += "<title>" + detail::xml_escape(operator_text) + "  n=" + std::to_string(m.n) +
           "</title>\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";
    // Axes through the origin, drawn when the origin is inside the box.
    if (min_x <= 0.0 && 0.0 <= max_x)
        svg += "<line x1=\"" + detail::fixed(px(0)) + "\" y1=\"0\" x2=\"" + detail::fixed(px(0)) +
               "\" y2=\"600\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
    if (min_y <= 0.0 && 0.0 <= max_y)
        svg += "<line x1=\"0\" y1=\"" + detail::fixed(py(0)) + "\" x2=\"600\" y2=\"" +
               detail::fixed(py(0)) + "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
    for (const auto& atom : m.atoms) {
        svg += "<circle cx=\"" + detail::fixed(px(atom.real().to_double())) + "\" cy=\"" +
               detail::fixed(py(atom.imag().to_double())) + "\" r=\"1\" fill=\"#1f4e79\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

inline void emit_svg(const EmpiricalMeasure& m, const std::string& operator_text,
                     const std::string& path) {
    write_file_atomic(path, render_svg(m, operator_text));
}

// CSV schema: n,r,ratio,collision. Failed records leave r and ratio empty.
inline std::string render_scan_csv(const std::vector<ScalingRecord>& records) {
    std::string csv = "n,r,ratio,collision\n";
    for (const auto& rec : records) {
        csv += std::to_string(rec.n) + ",";
        if (rec.status == ScanStatus::ok)
            csv += to_string(rec.r, 17) + "," + to_string(rec.ratio, 17) + ",0\n";
        else if (rec.status == ScanStatus::collision)
            csv += ",,1\n";
        else
            csv += ",,0\n";
    }
    return csv;
}

// CSV schema: re,im,mass.
inline std::string render_measure_csv(const EmpiricalMeasure& m) {
    std::string csv = "re,im,mass\n";
    const std::string mass = "1/" + std::to_string(m.n);
    for (const auto& atom : m.atoms)
        csv += to_string(atom.real(), 17) + "," + to_string(atom.imag(), 17) + "," + mass + "\n";
    return csv;
}

// CSV schema: lemma,n,A,j,lhs,rhs,holds,seed.
inline std::string render_lemma_csv(const std::vector<LemmaReport>& reports) {
    std::string csv = "lemma,n,A,j,lhs,rhs,holds,seed\n";
    for (const auto& rep : reports) {
        csv += rep.lemma + "," + std::to_string(rep.n) + "," + to_string(rep.A, 6) + "," +
               std::to_string(rep.j) + "," + to_string(rep.lhs, 10) + "," +
               to_string(rep.rhs, 10) + "," + (rep.holds ? "1" : "0") + "," +
               std::to_string(rep.seed) + "\n";
    }
    return csv;
}

} // namespace eigenroot

#endif
