#include "ruin/quadrature.hpp"

namespace ruin {

std::vector<double> geometric_breakpoints(double upper, double first_width, double max_width) {
    std::vector<double> pts;
    pts.push_back(0.0);
    double edge = std::min(first_width, upper);
    while (true) {
        const double prev = pts.back();
        const double next = std::min(edge, upper);
        const double width = next - prev;
        if (width > max_width) {
            const auto pieces = static_cast<std::size_t>(std::ceil(width / max_width));
            for (std::size_t i = 1; i < pieces; ++i)
                pts.push_back(prev + width * static_cast<double>(i) / static_cast<double>(pieces));
        }
        pts.push_back(next);
        if (next >= upper) break;
        edge *= 2.0;
    }
    return pts;
}

}  // namespace ruin
