#include "aiot/channel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace aiot {

std::vector<Vec2> bs_positions(const LayoutConfig& layout) {
    std::vector<Vec2> out;
    out.reserve(static_cast<std::size_t>(layout.bs_rows) * layout.bs_cols);
    const double x0 = (layout.hall_x_m - (layout.bs_cols - 1) * layout.bs_spacing_m) / 2.0;
    const double y0 = (layout.hall_y_m - (layout.bs_rows - 1) * layout.bs_spacing_m) / 2.0;
    for (int r = 0; r < layout.bs_rows; ++r) {
        for (int c = 0; c < layout.bs_cols; ++c) {
            out.push_back({x0 + c * layout.bs_spacing_m, y0 + r * layout.bs_spacing_m});
        }
    }
    return out;
}

double path_loss_db(double distance_m, PathLossModel model, double carrier_ghz,
                    const std::vector<std::pair<double, double>>* table) {
    switch (model) {
    case PathLossModel::inf_dh_nlos:
        return 33.63 + 21.9 * std::log10(distance_m) + 20.0 * std::log10(carrier_ghz);
    case PathLossModel::free_space:
        return 20.0 * std::log10(distance_m) + 20.0 * std::log10(carrier_ghz * 1000.0) - 27.55;
    case PathLossModel::fixed_table: {
        if (table == nullptr || table->empty()) {
            throw std::runtime_error("fixed-table path loss requires a distance/loss table");
        }
        const auto& t = *table;
        if (distance_m <= t.front().first) return t.front().second;
        if (distance_m >= t.back().first) return t.back().second;
        for (std::size_t i = 1; i < t.size(); ++i) {
            if (distance_m <= t[i].first) {
                const double w = (distance_m - t[i - 1].first) / (t[i].first - t[i - 1].first);
                return t[i - 1].second + w * (t[i].second - t[i - 1].second);
            }
        }
        return t.back().second;
    }
    }
    throw std::runtime_error("unsupported path loss model");
}

double incident_power_dbm(const Vec2& pos, const LayoutConfig& layout) {
    const auto bs = bs_positions(layout);
    double best_d = std::numeric_limits<double>::infinity();
    if (layout.nearest_bs_mode) {
        for (const auto& b : bs) {
            best_d = std::min(best_d, std::hypot(pos.x - b.x, pos.y - b.y));
        }
    } else {
        const auto& b = bs.at(static_cast<std::size_t>(layout.active_bs_index));
        best_d = std::hypot(pos.x - b.x, pos.y - b.y);
    }
    best_d = std::max(best_d, 1e-3); // devices are never exactly at the antenna
    return layout.tx_power_dbm -
           path_loss_db(best_d, layout.pathloss, layout.carrier_ghz, &layout.pathloss_table);
}

Placement place_devices(int n, const LayoutConfig& layout, Rng& rng) {
    Placement out;
    out.positions.reserve(static_cast<std::size_t>(n));
    out.p_in_dbm.reserve(static_cast<std::size_t>(n));
    const long max_attempts = 100000L * std::max(n, 1);
    long attempts = 0;
    while (static_cast<int>(out.positions.size()) < n) {
        if (++attempts > max_attempts) {
            throw PlacementInfeasible("device placement infeasible: no positions clear the sensitivity threshold");
        }
        Vec2 pos{rng.uniform(0.0, layout.hall_x_m), rng.uniform(0.0, layout.hall_y_m)};
        const double p_in = incident_power_dbm(pos, layout);
        if (p_in < layout.sensitivity_dbm) continue;
        out.positions.push_back(pos);
        out.p_in_dbm.push_back(p_in);
    }
    return out;
}

Placement place_devices_from_samples(int n, const std::vector<double>& samples,
                                     const LayoutConfig& layout, Rng& rng) {
    if (samples.empty()) throw PlacementInfeasible("p_in sample list is empty");
    bool any_ok = false;
    for (double s : samples) any_ok = any_ok || s >= layout.sensitivity_dbm;
    if (!any_ok) throw PlacementInfeasible("no p_in sample clears the sensitivity threshold");
    Placement out;
    out.positions.reserve(static_cast<std::size_t>(n));
    out.p_in_dbm.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(out.p_in_dbm.size()) < n) {
        const double p_in = samples[rng.uniform_int(samples.size())];
        if (p_in < layout.sensitivity_dbm) continue;
        out.positions.push_back({rng.uniform(0.0, layout.hall_x_m), rng.uniform(0.0, layout.hall_y_m)});
        out.p_in_dbm.push_back(p_in);
    }
    return out;
}

std::vector<double> load_pin_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open p_in sample file: " + path);
    std::vector<double> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(std::stod(line));
        } catch (const std::exception&) {
            std::ostringstream os;
            os << path << ":" << lineno << ": not a number: '" << line << "'";
            throw std::runtime_error(os.str());
        }
    }
    return out;
}

} // namespace aiot
