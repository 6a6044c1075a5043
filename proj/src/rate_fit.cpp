#include "congestion/rate_fit.hpp"

#include <cmath>
#include <sstream>

#include "congestion/errors.hpp"

namespace congestion {

RateFit fit_power_law(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3)
        throw FitDegenerate("rate fit needs at least 3 points, got " + std::to_string(points.size()));
    std::vector<double> xs, ys;
    for (const auto& [x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
            std::ostringstream os;
            os << "rate fit needs positive values, got (" << x << ", " << y << ")";
            throw FitDegenerate(os.str());
        }
        xs.push_back(std::log(x));
        ys.push_back(std::log(y));
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        mx += xs[k];
        my += ys[k];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        sxx += (xs[k] - mx) * (xs[k] - mx);
        sxy += (xs[k] - mx) * (ys[k] - my);
        syy += (ys[k] - my) * (ys[k] - my);
    }
    if (!(sxx > 0.0)) throw FitDegenerate("rate fit needs distinct axis values");

    RateFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    fit.points = static_cast<int>(xs.size());
    return fit;
}

RateFit fit_rate(const SweepTable& table, const std::string& metric) {
    return fit_power_law(sweep_column(table, metric));
}

}  // namespace congestion
