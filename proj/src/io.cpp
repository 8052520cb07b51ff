#include "bell/io.hpp"

#include <charconv>
#include <cstdio>

namespace bell {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_metadata(std::ostream& os, const Metadata& meta) {
    os << "# tool_version: " << kToolVersion << "\n";
    for (const auto& [k, v] : meta) os << "# " << k << ": " << v << "\n";
}

void write_point_set_csv(std::ostream& os, const MomentPointSet& set, const Metadata& meta) {
    write_metadata(os, meta);
    os << "w_num,w_den,re_z,im_z\n";
    for (const MomentPoint& p : set.points)
        os << p.w.numerator() << ',' << p.w.denominator() << ',' << p.re_z << ',' << p.im_z
           << '\n';
}

void write_envelope_csv(std::ostream& os, const EnvelopePolyline& env, const Metadata& meta) {
    write_metadata(os, meta);
    os << "w_num,w_den,f_num,f_den\n";
    for (const auto& [w, f] : env.vertices)
        os << w.numerator() << ',' << w.denominator() << ',' << f.numerator() << ','
           << f.denominator() << '\n';
}

void write_scatter_csv(std::ostream& os, const std::vector<ScatterPoint>& pts,
                       const Metadata& meta) {
    write_metadata(os, meta);
    os << "w_num,w_den,f_num,f_den,is_mixture\n";
    for (const ScatterPoint& p : pts)
        os << p.w.numerator() << ',' << p.w.denominator() << ',' << p.f.numerator() << ','
           << p.f.denominator() << ',' << (p.is_mixture ? 1 : 0) << '\n';
}

nlohmann::json rational_to_json(const Rational& r) {
    return {{"num", r.numerator()}, {"den", r.denominator()}};
}

nlohmann::json envelope_to_json(const EnvelopePolyline& env) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& [w, f] : env.vertices)
        verts.push_back({{"w", rational_to_json(w)}, {"f", rational_to_json(f)}});
    return {{"vertices", verts}};
}

nlohmann::json point_set_to_json(const MomentPointSet& set) {
    nlohmann::json pts = nlohmann::json::array();
    for (const MomentPoint& p : set.points)
        pts.push_back({{"w", rational_to_json(p.w)}, {"re_z", p.re_z}, {"im_z", p.im_z}});
    return {{"n", set.n}, {"points", pts}};
}

}  // namespace bell
