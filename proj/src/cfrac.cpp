#include "qtmoments/cfrac.hpp"

#include <sstream>

namespace qtmoments {

ContinuedFractionSpec cf_spec(const JacobiParams& j, int depth)
{
    if (depth < 1) throw Error("continued fraction depth must be at least 1");
    ContinuedFractionSpec spec;
    spec.depth = depth;
    for (int h = 0; h <= depth; ++h) {
        spec.b.push_back(j.alpha(h));
        if (h >= 1) spec.lam.push_back(j.omega(h));
    }
    return spec;
}

std::vector<Polynomial> cf_series(const ContinuedFractionSpec& spec, int order)
{
    if (order < 0) return {};
    if (spec.depth < minimal_depth(order)) {
        throw InsufficientDepth("depth " + std::to_string(spec.depth) + " cannot determine order " +
                                std::to_string(order) + "; need " + std::to_string(minimal_depth(order)));
    }
    return jfraction_coefficients(spec.b, spec.lam, order);
}

namespace {

std::string coefficient_text(const Polynomial& p)
{
    std::string s = p.to_string();
    return p.size() > 1 || s.front() == '-' ? "(" + s + ")" : s;
}

}  // namespace

std::string render_cf(const ContinuedFractionSpec& spec)
{
    // Each level is a denominator line whose last fraction bar opens the next level:
    //   1
    //   -----------------------
    //   1 - b_0 z - lam_1 z^2
    //               ---------------
    //               1 - b_1 z - ...
    std::ostringstream out;
    std::size_t indent = 0;
    out << "1\n";
    for (int h = 0; h <= spec.depth; ++h) {
        std::string line = "1 - " + coefficient_text(spec.b[h]) + " z";
        if (h < spec.depth) {
            line += " - " + coefficient_text(spec.lam[h]) + " z^2";
        }
        const std::size_t width = line.size();
        out << std::string(indent, ' ') << std::string(width, '-') << '\n';
        out << std::string(indent, ' ') << line << '\n';
        if (h < spec.depth) indent += width - (coefficient_text(spec.lam[h]).size() + 4);
    }
    return out.str();
}

}  // namespace qtmoments
